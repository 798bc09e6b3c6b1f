import json
from fractions import Fraction

import pytest
from django.core.management.base import CommandError

from localization import service, toric
from localization.charalg import EquivParams
from localization.exceptions import EXIT_INVARIANT, EXIT_USAGE
from localization.serializers import RunConfigSerializer, exact
from localization.series import Series


def test_toric_p3_json(run_engine):
    report = json.loads(run_engine('toric', space='p3', nmax=3, format='json'))
    assert report['command'] == 'toric'
    assert report['seed'] == 0
    assert report['elapsed_ms'] is None
    assert report['values']['series'] == ['1', '20', '150', '400']
    assert report['values']['closed_formula'] == ['1', '20', '150', '400']
    assert report['values']['c3_t_omega'] == '-20'
    assert report['verdicts'] == {
        'parameter_independence': 'PASS',
        'integrality': 'PASS',
        'c3_agreement': 'PASS',
        'closed_formula': 'MATCH',
    }
    assert len(report['values']['parameter_points']) == 3


def test_toric_order_zero(run_engine):
    report = json.loads(run_engine('toric', space='p3', bundle=['O'], nmax=0, format='json'))
    assert report['values']['series'] == ['1']
    assert report['verdicts']['closed_formula'] == 'MATCH'


def test_toric_rank_two_bundle(run_engine):
    report = json.loads(run_engine('toric', space='p3', bundle=['O,O1'], nmax=2, format='json'))
    assert report['inputs']['bundle'] == ['O', 'O1']
    assert report['inputs']['rank'] == '2'
    assert report['values']['series'] == ['1', '-40', '700']


def test_json_is_deterministic(run_engine):
    first = run_engine('toric', space='p1cubed', nmax=2, seed=11, format='json')
    second = run_engine('toric', space='p1cubed', nmax=2, seed=11, format='json')
    assert first == second


def test_timing_fills_elapsed(run_engine):
    report = json.loads(run_engine('macmahon', nmax=2, format='json', timing=True))
    assert isinstance(report['elapsed_ms'], int)


def test_table_output(run_engine):
    out = run_engine('toric', space='p2xp1', nmax=1)
    assert 'series: 1, 18' in out
    assert 'closed_formula: MATCH' in out
    assert 'elapsed:' in out


def test_config_file(run_engine, tmp_path):
    path = tmp_path / 'p3.cfg'
    path.write_text("# projective space\nspace = p3\nnmax = 1\nformat = json\n", encoding='utf-8')
    report = json.loads(run_engine('toric', config=str(path)))
    assert report['values']['series'] == ['1', '20']
    report = json.loads(run_engine('toric', config=str(path), nmax=2))
    assert report['values']['series'] == ['1', '20', '150']


def test_vertex_standard_chart(run_engine):
    report = json.loads(run_engine('vertex', rank=1, nmax=2, format='json'))
    assert len(report['values']['fixed_points']) == 5
    assert report['values']['chart_contributions'][0] == '1'
    assert report['verdicts'] == {'virtual_dimension_zero': 'PASS', 'symmetry': 'PASS'}


def test_vertex_chart_of_a_space(run_engine):
    report = json.loads(run_engine('vertex', space='p3', chart_index=1, bundle=['O1'], nmax=1,
                                   format='json'))
    assert report['inputs']['colors'] == [['1', '0', '0', '1']]
    assert report['verdicts']['symmetry'] == 'PASS'


def test_vertex_chart_index_out_of_range(run_engine):
    with pytest.raises(CommandError) as exc:
        run_engine('vertex', space='p3', chart_index=4)
    assert exc.value.returncode == EXIT_USAGE


@pytest.mark.parametrize('space, c3', [('p2xp1', '-18'), ('quadric', '-20'), ('blowup-p3', '-18')])
def test_chern(run_engine, space, c3):
    report = json.loads(run_engine('chern', space=space, format='json'))
    assert report['values']['c3_t_omega'] == c3
    assert 'FAIL' not in report['verdicts'].values()


def test_chern_decomposition(run_engine):
    report = json.loads(run_engine('chern', space='p3', bundle=['O2'], format='json'))
    assert len(report['values']['decomposition']) == 7
    assert report['verdicts']['reconstruction'] == 'PASS'
    assert report['verdicts']['c3_agreement'] == 'PASS'


@pytest.mark.parametrize('space, c3', [('p3', '-20'), ('p2xp1', '-18'), ('p1cubed', '-16')])
def test_chern_cross_checks_localization_on_toric_spaces(run_engine, space, c3):
    report = json.loads(run_engine('chern', space=space, format='json'))
    assert report['values']['c3_t_omega'] == c3
    assert report['values']['c3_t_omega_localization'] == c3
    assert report['verdicts']['c3_agreement'] == 'PASS'


def test_cobordism_basis(run_engine):
    report = json.loads(run_engine('cobordism', rank=3, format='json'))
    assert report['values']['basis_size'] == '10'
    assert report['verdicts'] == {'basis_invertible': 'PASS', 'basis_round_trip': 'PASS'}


def test_cobordism_relation_passes(run_engine):
    report = json.loads(run_engine('cobordism', builtin='quadric-dpr', format='json'))
    assert report['verdicts']['chern_balance'] == 'PASS'
    assert report['verdicts']['series_balance'] == 'PASS'


def test_cobordism_negative_control_exits_with_invariant_failure(run_engine):
    with pytest.raises(CommandError) as exc:
        run_engine('cobordism', builtin='quadric-naive', format='json')
    assert exc.value.returncode == EXIT_INVARIANT


def test_macmahon(run_engine):
    report = json.loads(run_engine('macmahon', nmax=4, format='json'))
    assert report['values']['macmahon'] == ['1', '1', '3', '6', '13']
    assert report['verdicts']['plane_partition_counts'] == 'MATCH'


def test_macmahon_closed_formula(run_engine):
    report = json.loads(run_engine('macmahon', nmax=2, rank=2, c3=-20, format='json'))
    assert report['values']['closed_formula'] == ['1', '-40', '700']


@pytest.mark.parametrize('options', [
    {'nmax': 1},
    {'space': 'p3', 'trials': 1},
    {'space': 'p3', 'chart': ['1,0,0/0,1,0/0,0,1']},
    {'space': 'p3', 'bundle': ['O1'], 'rank': 3},
    {'space': 'p3', 'bundle': ['L1']},
    {'space': 'p3', 'bundle': ['OO']},
])
def test_usage_errors(run_engine, options):
    with pytest.raises(CommandError) as exc:
        run_engine('toric', **options)
    assert exc.value.returncode == EXIT_USAGE


def test_run_config_serializer_parses_descriptors(settings):
    serializer = RunConfigSerializer(data={
        'command': 'toric', 'chart': ['1,0,0/0,1,0/0,0,1'], 'summand': ['0,0,0'],
        'seed': settings.QUOTDT_SEED, 'trials': 2, 'threads': 1,
    })
    assert serializer.is_valid(), serializer.errors
    data = serializer.validated_data
    assert data['charts'] == [((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    assert data['summands'] == [((0, 0, 0),)]
    assert data['rank'] == 1
    assert data['nmax'] == 2


def test_exact_stringifies_numbers():
    assert exact({'a': [Fraction(1, 2), 3, None, True]}) == {'a': ['1/2', '3', None, True]}


def test_chart_convention_setting_does_not_change_the_series(run_engine, settings):
    settings.QUOTDT_CHART_CONVENTION = 'tangents'
    report = json.loads(run_engine('toric', space='p3', nmax=2, format='json'))
    assert report['values']['series'] == ['1', '20', '150']


def test_toric_verdicts_come_from_the_trials(monkeypatch, settings):
    params = EquivParams((1, 2, 3))
    clean, skewed = Series((1, 20)), Series((1, Fraction(41, 2)))
    monkeypatch.setattr(toric, 'localize', lambda *args, **kwargs: toric.LocalizationRun(
        skewed, ((params, clean), (params, skewed))))
    serializer = RunConfigSerializer(data={
        'command': 'toric', 'space': 'p3', 'nmax': 1,
        'seed': settings.QUOTDT_SEED, 'trials': 2, 'threads': 1,
    })
    assert serializer.is_valid(), serializer.errors

    report = service.ToricService.run(serializer.validated_data)
    assert report.verdicts['parameter_independence'] == 'FAIL'
    assert report.verdicts['integrality'] == 'FAIL'
    assert report.exit_code == EXIT_INVARIANT
