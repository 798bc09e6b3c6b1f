import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from django.conf import settings

from localization import chern, toric
from localization.charalg import format_monomial, format_poly
from localization.exceptions import EXIT_INVARIANT, EXIT_MISMATCH, EXIT_OK, InvalidDescriptor, QuotDTError
from localization.partitions import enum_colored, enum_plane_partitions
from localization.series import dt_closed_formula, macmahon
from localization.vertex import (ChartWeights, chart_contribution, euler_inverse, monomial_table,
                                 symmetry_defect, vertex_character, with_resampling)

logger = logging.getLogger(__name__)

PASS, FAIL = 'PASS', 'FAIL'
MATCH, MISMATCH = 'MATCH', 'MISMATCH'

# enumerating plane partitions beyond this size only slows the MacMahon cross-check down
MACMAHON_ENUMERATION_LIMIT = 10


def verdict(ok, good=PASS, bad=FAIL):
    return good if ok else bad


@dataclass
class Report:
    command: str
    inputs: dict
    seed: Optional[int]
    values: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK
    elapsed_ms: Optional[int] = None

    def fail_on(self, bad_verdicts, code=EXIT_INVARIANT):
        if any(v in bad_verdicts for v in self.verdicts.values()) and not self.exit_code:
            self.exit_code = code


def _localization_options(config):
    return {
        'trials': config['trials'],
        'convention': settings.QUOTDT_CHART_CONVENTION,
        'threads': config['threads'],
        'bound': settings.QUOTDT_PARAM_BOUND,
        'max_resamples': settings.QUOTDT_MAX_RESAMPLES,
    }


def _space_and_bundle(config):
    if config['space']:
        space = toric.builtin_space(config['space'])
    else:
        space = toric.custom_space(config['charts'])
    if config['twists']:
        bundle = toric.SplitBundle.from_twists(space, config['twists'], config['bundle_labels'])
    elif config['summands']:
        labels = [f"L{j + 1}" for j in range(len(config['summands']))]
        bundle = toric.SplitBundle.from_summands(space, config['summands'], labels)
    else:
        bundle = toric.SplitBundle.trivial(space, config['rank'])
    return space, bundle


def _ring_for(space_name):
    if space_name in chern.BUILTIN_RINGS:
        return chern.builtin_ring(space_name, settings.QUOTDT_BUNDLE_CONVENTION)
    return None


def _describe_point(pt):
    return [[','.join(map(str, box)) for box in part.boxes] for part in pt.parts]


class ToricService:
    @staticmethod
    def run(config):
        space, bundle = _space_and_bundle(config)
        r, n_max, seed = bundle.rank, config['nmax'], config['seed']
        report = Report('toric', {
            'space': space.name,
            'charts': len(space.charts),
            'bundle': list(bundle.labels),
            'rank': r,
            'nmax': n_max,
            'trials': config['trials'],
        }, seed)

        run = toric.localize(space, bundle, n_max, seed, **_localization_options(config))
        c3 = toric.c3_via_localization(space, seed)
        closed = dt_closed_formula(r, c3, n_max)

        report.values['series'] = run.series.coefficients
        report.values['closed_formula'] = closed.coefficients
        report.values['c3_t_omega'] = c3
        report.values['fixed_points'] = toric.fixed_point_counts(space, r, n_max)
        report.values['parameter_points'] = [params.as_list() for params, _ in run.trials]
        report.verdicts['parameter_independence'] = verdict(
            all(series == run.series for _, series in run.trials))
        report.verdicts['integrality'] = verdict(run.series.is_integral())

        ring = _ring_for(space.name)
        if ring is not None:
            report.values['c3_t_omega_ring'] = chern.c3_t_omega(ring)
            report.verdicts['c3_agreement'] = verdict(report.values['c3_t_omega_ring'] == c3)
        report.fail_on((FAIL,))

        matches = [a == b for a, b in zip(run.series.coefficients, closed.coefficients)]
        report.values['coefficient_match'] = [verdict(m, MATCH, MISMATCH) for m in matches]
        report.verdicts['closed_formula'] = verdict(all(matches), MATCH, MISMATCH)
        report.fail_on((MISMATCH,), EXIT_MISMATCH)
        logger.info("toric %s rank %d: %s", space.name, r, run.series)
        return report


class VertexService:
    @staticmethod
    def run(config):
        convention = settings.QUOTDT_CHART_CONVENTION
        if config['space'] or config['charts']:
            space, bundle = _space_and_bundle(config)
            if config['chart_index'] >= len(space.charts):
                raise InvalidDescriptor(f"{space.name} has {len(space.charts)} charts")
            chart = bundle.chart_weights(space, config['chart_index'])
            name = space.name
        else:
            chart = ChartWeights.standard(config['rank'])
            name = 'standard'
        r, n_max = chart.rank, config['nmax']
        report = Report('vertex', {
            'chart': name,
            'chart_index': config['chart_index'],
            'tangent': [list(a) for a in chart.tangent],
            'colors': [list(w) for w in chart.colors],
            'rank': r,
            'nmax': n_max,
        }, config['seed'])

        rng = np.random.default_rng(config['seed'])
        params, contributions = with_resampling(
            lambda p: [chart_contribution(chart, r, n, p, convention) for n in range(n_max + 1)],
            rng, r, settings.QUOTDT_PARAM_BOUND, settings.QUOTDT_MAX_RESAMPLES)

        tables = []
        symmetric = True
        balanced = True
        for n in range(n_max + 1):
            for pt in enum_colored(n, r):
                ch = vertex_character(pt, chart, convention)
                defect = symmetry_defect(ch, chart, convention)
                symmetric = symmetric and not defect
                balanced = balanced and ch.value.value_at_one() == 0
                tables.append({
                    'size': n,
                    'point': _describe_point(pt),
                    'character': format_poly(ch.value),
                    'terms': [[format_monomial(e), c, w] for e, c, w in monomial_table(ch, params)],
                    'euler_inverse': euler_inverse(ch, params),
                })
        report.values['parameters'] = params.as_list()
        report.values['fixed_points'] = tables
        report.values['chart_contributions'] = contributions
        report.verdicts['virtual_dimension_zero'] = verdict(balanced)
        report.verdicts['symmetry'] = verdict(symmetric)
        report.fail_on((FAIL,))
        return report


class ChernService:
    @staticmethod
    def run(config):
        convention = settings.QUOTDT_BUNDLE_CONVENTION
        ring = chern.builtin_ring(config['space'], convention)
        if config['twists']:
            bundle = chern.bundle_from_degrees(ring, config['twists'], config['bundle_labels'])
        else:
            bundle = chern.BundleClass.trivial(config['rank'])
        report = Report('chern', {
            'space': ring.name,
            'bundle': list(bundle.labels),
            'rank': bundle.rank,
            'bundle_convention': convention,
        }, config['seed'])

        report.values['euler_characteristic'] = chern.euler_characteristic(ring)
        report.values['tangent_chern'] = [str(c) for c in ring.chern_classes()]
        if ring.dimension != chern.DIMENSION:
            return report

        c3 = chern.c3_t_omega(ring)
        vector = chern.mixed_chern_vector(ring, bundle)
        coefficients = chern.decompose(ring, bundle, bundle.rank)
        rebuilt = chern.reconstruct(coefficients, bundle.rank)
        report.values['c3_t_omega'] = c3
        report.values['mixed_chern_vector'] = vector.as_dict()
        report.values['decomposition'] = {pair.label(): c for pair, c in coefficients.items()}
        report.verdicts['reconstruction'] = verdict(rebuilt.values == vector.values)

        if config['space'] in toric.BUILTIN_FANS:
            localized = toric.c3_via_localization(toric.builtin_space(config['space']), config['seed'])
            report.values['c3_t_omega_localization'] = localized
            report.verdicts['c3_agreement'] = verdict(localized == c3)
        report.fail_on((FAIL,))
        return report


class CobordismService:
    @staticmethod
    def run(config):
        r = config['rank']
        report = Report('cobordism', {'builtin': config['builtin'], 'rank': r}, config['seed'])
        pairs, _ = chern.basis(r)
        determinant = chern.basis_determinant(r)
        report.values['partition_pairs'] = [pair.label() for pair in pairs]
        report.values['basis_size'] = len(pairs)
        report.values['basis_determinant'] = determinant
        report.verdicts['basis_invertible'] = verdict(determinant != 0)

        round_trip = True
        for pair in pairs:
            ring, bundle = chern.phi_class(pair, r)
            coefficients = chern.decompose(ring, bundle, r)
            round_trip = round_trip and all(
                c == (1 if other == pair else 0) for other, c in coefficients.items())
        report.verdicts['basis_round_trip'] = verdict(round_trip)

        if config['builtin']:
            relation = chern.builtin_relation(config['builtin'], r, settings.QUOTDT_BUNDLE_CONVENTION)
            check = chern.dpr_check(*relation.members, order=max(config['nmax'], 1))
            report.values['relation'] = relation.description
            report.values['expected_pass'] = relation.expected_pass
            report.values['members'] = {role: ring.name for role, (ring, _) in
                                        zip(('Y_xi', 'A', 'B', 'P_pi'), relation.members)}
            report.values['c3_t_omega'] = check.exponents
            report.values['mixed_chern_vectors'] = {role: v.as_dict() for role, v in check.vectors.items()}
            report.verdicts['chern_balance'] = verdict(check.chern_balance)
            report.verdicts['exponent_balance'] = verdict(check.exponent_balance)
            report.verdicts['series_balance'] = verdict(check.series_balance)
        report.fail_on((FAIL,))
        return report


class MacMahonService:
    @staticmethod
    def run(config):
        n_max = config['nmax']
        report = Report('macmahon', {'nmax': n_max, 'rank': config['rank'], 'c3': config['c3']},
                        config['seed'])
        series = macmahon(n_max)
        report.values['macmahon'] = series.coefficients
        limit = min(n_max, MACMAHON_ENUMERATION_LIMIT)
        counts = [len(enum_plane_partitions(n)) for n in range(limit + 1)]
        report.values['plane_partition_counts'] = counts
        report.verdicts['plane_partition_counts'] = verdict(
            counts == [int(c) for c in series.coefficients[:limit + 1]], MATCH, MISMATCH)
        if config['c3'] is not None:
            report.values['closed_formula'] = dt_closed_formula(config['rank'], config['c3'], n_max).coefficients
        report.fail_on((MISMATCH,), EXIT_MISMATCH)
        return report


SERVICES = {
    'toric': ToricService,
    'vertex': VertexService,
    'chern': ChernService,
    'cobordism': CobordismService,
    'macmahon': MacMahonService,
}


def run_command(config) -> Report:
    try:
        report = SERVICES[config['command']].run(config)
    except QuotDTError:
        logger.exception("%s failed", config['command'])
        raise
    logger.info("%s verdicts: %s", report.command, report.verdicts)
    return report
