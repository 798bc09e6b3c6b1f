import pytest

from localization import conventions, toric
from localization.exceptions import InvalidDescriptor, ParameterDependence, RankMismatch, UnknownSpace
from localization.toric import SplitBundle, builtin_space, custom_space, localize, parse_twist


@pytest.fixture
def p3():
    return builtin_space('p3')


@pytest.mark.parametrize('name, charts', [('p3', 4), ('p2xp1', 6), ('p1cubed', 8), ('blowup-p3', 6)])
def test_builtin_spaces(name, charts):
    space = builtin_space(name)
    assert space.euler_characteristic == charts
    assert all(toric.ChartWeights(tangent).is_unimodular() for tangent in space.charts)


def test_unknown_space():
    with pytest.raises(UnknownSpace):
        builtin_space('p4')


def test_custom_space_must_be_unimodular():
    with pytest.raises(InvalidDescriptor):
        custom_space([((2, 0, 0), (0, 1, 0), (0, 0, 1))])


def test_hyperplane_characters_are_simplex_vertices(p3):
    assert p3.line_bundle((1,)) == ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert p3.line_bundle((0,)) == ((0, 0, 0),) * 4


def test_line_bundle_degrees_are_checked():
    with pytest.raises(InvalidDescriptor):
        builtin_space('p2xp1').line_bundle((1, 2, 3))
    with pytest.raises(InvalidDescriptor):
        custom_space([((1, 0, 0), (0, 1, 0), (0, 0, 1))]).line_bundle((1,))


def test_split_bundle_from_twists(p3):
    bundle = SplitBundle.from_twists(p3, [(0,), (1,)], ('O', 'O1'))
    assert bundle.rank == 2
    assert bundle.characters[1] == ((0, 0, 0), (1, 0, 0))
    assert not bundle.is_trivial()
    assert SplitBundle.trivial(p3, 2).is_trivial()
    with pytest.raises(RankMismatch):
        SplitBundle((((0, 0, 0),), ((0, 0, 0), (0, 0, 0))))


def test_p3_rank_one(p3):
    run = localize(p3, SplitBundle.trivial(p3, 1), 3, seed=0)
    assert run.series.as_integers() == [1, 20, 150, 400]
    assert len(run.trials) == 3


@pytest.mark.parametrize('name, expected', [
    ('p2xp1', [1, 18, 117]),
    ('p1cubed', [1, 16, 88]),
    ('blowup-p3', [1, 18, 117]),
])
def test_rank_one_series(name, expected):
    space = builtin_space(name)
    assert toric.dt_series(space, SplitBundle.trivial(space, 1), 2, seed=7).as_integers() == expected


@pytest.mark.parametrize('twists', [[(0,), (0,)], [(0,), (1,)], [(1,), (-1,)]])
def test_rank_two_is_independent_of_the_bundle(p3, twists):
    bundle = SplitBundle.from_twists(p3, twists)
    assert toric.dt_series(p3, bundle, 2, seed=1).as_integers() == [1, -40, 700]


def test_chart_convention_calibration(p3):
    assert toric.dt_invariant(p3, SplitBundle.trivial(p3, 1), 1, seed=3) == conventions.CALIBRATION_DT1_P3


def test_seeds_agree(p3):
    bundle = SplitBundle.trivial(p3, 1)
    assert localize(p3, bundle, 2, seed=0).series == localize(p3, bundle, 2, seed=99, trials=2).series


def test_process_pool_gives_the_same_series(p3):
    bundle = SplitBundle.trivial(p3, 1)
    assert localize(p3, bundle, 1, seed=0, threads=2).series == localize(p3, bundle, 1, seed=0).series


def test_single_chart_depends_on_parameters():
    space = custom_space([((1, 0, 0), (0, 1, 0), (0, 0, 1))])
    with pytest.raises(ParameterDependence):
        localize(space, SplitBundle.trivial(space, 1), 1, seed=0)


def test_localize_arguments_are_checked(p3):
    with pytest.raises(ValueError):
        localize(p3, SplitBundle.trivial(p3, 1), 1, seed=0, trials=1)
    with pytest.raises(InvalidDescriptor):
        localize(p3, SplitBundle.trivial(builtin_space('p2xp1'), 1), 1, seed=0)


@pytest.mark.parametrize('name, c3', [('p3', -20), ('p2xp1', -18), ('p1cubed', -16), ('blowup-p3', -18)])
def test_c3_via_localization(name, c3):
    assert toric.c3_via_localization(builtin_space(name), seed=5) == c3


@pytest.mark.parametrize('r', [1, 2])
def test_fixed_point_counts(p3, r):
    for n in range(5):
        assert toric.count_fixed_points(p3, r, n) == toric.count_fixed_points_direct(p3, r, n)
    assert toric.fixed_point_counts(p3, 1, 2) == [1, 4, 18]


@pytest.mark.parametrize('token, degrees', [
    ('O', (0,)), ('O1', (1,)), ('O(1)', (1,)), ('O(-2)', (-2,)), ('O(1,-1)', (1, -1)),
])
def test_parse_twist(token, degrees):
    assert parse_twist(token) == degrees


def test_parse_twist_rejects_garbage():
    with pytest.raises(InvalidDescriptor):
        parse_twist('L1')
    with pytest.raises(InvalidDescriptor):
        parse_twist('O(a)')
