"""Toric 3-folds, equivariant split bundles and global localization sums."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, List, Sequence, Tuple

import numpy as np
import sympy

from localization import conventions
from localization.charalg import EquivParams, weight_form
from localization.exceptions import (InvalidDescriptor, NonIntegral, ParameterDependence,
                                     RankMismatch, UnknownSpace, ZeroWeight)
from localization.partitions import compositions, enum_colored
from localization.series import Series, macmahon
from localization.vertex import ChartWeights, chart_series, with_resampling

logger = logging.getLogger(__name__)

Vector = Tuple[int, int, int]


def _dual_basis(rays: Sequence[Vector]) -> Tuple[Vector, Vector, Vector]:
    inverse = sympy.Matrix(rays).inv()
    return tuple(tuple(int(inverse[i, j]) for i in range(3)) for j in range(3))


@dataclass(frozen=True)
class ToricSpace:
    name: str
    charts: Tuple[Tuple[Vector, Vector, Vector], ...]
    rays: Tuple[Vector, ...] = ()
    cones: Tuple[Tuple[int, int, int], ...] = ()
    # per projective factor, the ray whose divisor is the pulled-back hyperplane class
    hyperplanes: Tuple[int, ...] = ()

    @classmethod
    def from_fan(cls, name, rays, cones, hyperplanes=()):
        rays = tuple(tuple(r) for r in rays)
        cones = tuple(tuple(c) for c in cones)
        charts = tuple(_dual_basis([rays[i] for i in cone]) for cone in cones)
        return cls(name, charts, rays, cones, tuple(hyperplanes))

    @property
    def euler_characteristic(self):
        return len(self.charts)

    def validate(self):
        for alpha, tangent in enumerate(self.charts):
            if not ChartWeights(tangent).is_unimodular():
                raise InvalidDescriptor(f"chart {alpha} of {self.name} is not a basis of Z^3")
        return self

    def line_bundle(self, degrees: Sequence[int]) -> Tuple[Vector, ...]:
        """Per-chart characters of O(d_1, ..., d_k) on a product of projective spaces."""
        if not self.rays:
            raise InvalidDescriptor(f"{self.name} has no fan; give per-chart characters instead")
        degrees = list(degrees)
        if len(degrees) == 1 and len(self.hyperplanes) > 1:
            degrees = degrees * len(self.hyperplanes)
        if len(degrees) != len(self.hyperplanes):
            raise InvalidDescriptor(
                f"{self.name} takes {len(self.hyperplanes)} degrees, got {len(degrees)}")
        divisor = [0] * len(self.rays)
        for ray, d in zip(self.hyperplanes, degrees):
            divisor[ray] += d
        return self.divisor_characters(divisor)

    def divisor_characters(self, divisor: Sequence[int]) -> Tuple[Vector, ...]:
        """m_sigma with <m_sigma, u_rho> = -d_rho for every ray of sigma."""
        characters = []
        for cone in self.cones:
            rays = sympy.Matrix([self.rays[i] for i in cone])
            rhs = sympy.Matrix([-divisor[i] for i in cone])
            m = rays.LUsolve(rhs)
            characters.append(tuple(int(x) for x in m))
        return tuple(characters)


@dataclass(frozen=True)
class SplitBundle:
    # characters[alpha][j] is m_alpha(L_j)
    characters: Tuple[Tuple[Vector, ...], ...]
    labels: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        ranks = {len(per_chart) for per_chart in self.characters}
        if len(ranks) > 1:
            raise RankMismatch(f"summand counts differ across charts: {sorted(ranks)}")

    @property
    def rank(self):
        return len(self.characters[0]) if self.characters else 0

    @classmethod
    def trivial(cls, space: ToricSpace, r: int):
        return cls(tuple(((0, 0, 0),) * r for _ in space.charts), ('O',) * r)

    @classmethod
    def from_summands(cls, space: ToricSpace, summands, labels=()):
        """Each summand is a tuple of per-chart characters."""
        for summand in summands:
            if len(summand) != len(space.charts):
                raise InvalidDescriptor(
                    f"summand has {len(summand)} characters, {space.name} has {len(space.charts)} charts")
        per_chart = tuple(
            tuple(tuple(summand[alpha]) for summand in summands)
            for alpha in range(len(space.charts))
        )
        return cls(per_chart, tuple(labels))

    @classmethod
    def from_twists(cls, space: ToricSpace, twists: Sequence[Sequence[int]], labels=()):
        return cls.from_summands(space, [space.line_bundle(d) for d in twists], labels)

    def is_trivial(self):
        return all(m == (0, 0, 0) for per_chart in self.characters for m in per_chart)

    def chart_weights(self, space: ToricSpace, alpha: int) -> ChartWeights:
        return ChartWeights.for_bundle(space.charts[alpha], self.characters[alpha])


P3_RAYS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
P3_CONES = ((0, 1, 2), (1, 2, 3), (0, 2, 3), (0, 1, 3))

P2XP1_RAYS = ((1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1))
P2XP1_CONES = tuple((a, b, c) for a, b in ((0, 1), (1, 2), (0, 2)) for c in (3, 4))

P1CUBED_RAYS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
P1CUBED_CONES = tuple((a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5))

# P^3 blown up at the fixed point of the cone spanned by e1, e2, e3.
BLOWUP_P3_RAYS = P3_RAYS + ((1, 1, 1),)
BLOWUP_P3_CONES = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (4, 0, 1), (4, 0, 2), (4, 1, 2))

BUILTIN_FANS = {
    'p3': (P3_RAYS, P3_CONES, (3,)),
    'p2xp1': (P2XP1_RAYS, P2XP1_CONES, (2, 4)),
    'p1cubed': (P1CUBED_RAYS, P1CUBED_CONES, (1, 3, 5)),
    'blowup-p3': (BLOWUP_P3_RAYS, BLOWUP_P3_CONES, (3,)),
}


def builtin_space(name: str) -> ToricSpace:
    try:
        rays, cones, hyperplanes = BUILTIN_FANS[name]
    except KeyError:
        raise UnknownSpace(f"unknown space {name!r}; choose from {', '.join(sorted(BUILTIN_FANS))}")
    return ToricSpace.from_fan(name, rays, cones, hyperplanes).validate()


def custom_space(charts, name='custom') -> ToricSpace:
    return ToricSpace(name, tuple(tuple(tuple(a) for a in chart) for chart in charts)).validate()


@dataclass(frozen=True)
class LocalizationRun:
    series: Series
    trials: Tuple[Tuple[EquivParams, Series], ...]


def _chart_series_task(args):
    chart, order, params, convention = args
    return chart_series(chart, order, params, convention)


def localized_series(space: ToricSpace, bundle: SplitBundle, order: int, params: EquivParams,
                     convention=conventions.DEFAULT_CHART_CONVENTION, threads: int = 1) -> Series:
    """Product over charts of the local series at a single parameter point."""
    tasks = [(bundle.chart_weights(space, alpha), order, params, convention)
             for alpha in range(len(space.charts))]
    started = time.perf_counter()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            local = list(pool.map(_chart_series_task, tasks))
    else:
        local = [_chart_series_task(task) for task in tasks]
    logger.debug("%d chart series in %.1f ms", len(tasks), (time.perf_counter() - started) * 1000)
    total = Series.one(order)
    for chart_total in local:
        total = total * chart_total
    return total


def localize(space: ToricSpace, bundle: SplitBundle, order: int, seed: int,
             trials: int = conventions.DEFAULT_TRIALS,
             convention=conventions.DEFAULT_CHART_CONVENTION, threads: int = 1,
             bound: int = conventions.PARAM_BOUND,
             max_resamples: int = conventions.MAX_RESAMPLES) -> LocalizationRun:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if len(bundle.characters) != len(space.charts):
        raise InvalidDescriptor(f"bundle has {len(bundle.characters)} charts, space has {len(space.charts)}")
    if trials < conventions.MIN_TRIALS:
        raise ValueError(f"at least {conventions.MIN_TRIALS} parameter points are required")
    rng = np.random.default_rng(seed)
    runs = []
    for trial in range(trials):
        params, series = with_resampling(
            lambda p: localized_series(space, bundle, order, p, convention, threads),
            rng, bundle.rank, bound, max_resamples)
        logger.debug("trial %d at %s: %s", trial, params, series)
        runs.append((params, series))
    first = runs[0][1]
    for params, series in runs[1:]:
        if series != first:
            raise ParameterDependence(
                f"{space.name}: {first} at {runs[0][0]} but {series} at {params}")
    if not first.is_integral():
        raise NonIntegral(f"{space.name}: {first}")
    return LocalizationRun(first, tuple(runs))


def dt_series(space: ToricSpace, bundle: SplitBundle, n_max: int, seed: int, **options) -> Series:
    return localize(space, bundle, n_max, seed, **options).series


def dt_invariant(space: ToricSpace, bundle: SplitBundle, n: int, seed: int, **options) -> int:
    return int(dt_series(space, bundle, n, seed, **options)[n])


def _c3_t_omega_sum(space: ToricSpace, params: EquivParams) -> Fraction:
    total = Fraction(0)
    for tangent in space.charts:
        weights = [weight_form(a, params) for a in tangent]
        if 0 in weights:
            raise ZeroWeight(f"tangent weight vanishes at {params}")
        sigma = sum(weights)
        total += prod(a - sigma for a in weights) / prod(weights)
    return total


def c3_via_localization(space: ToricSpace, seed: int, trials: int = conventions.MIN_TRIALS,
                        bound: int = conventions.PARAM_BOUND) -> int:
    """Bott residue sum for the integral of c3(T tensor omega)."""
    rng = np.random.default_rng(seed)
    values = [with_resampling(lambda p: _c3_t_omega_sum(space, p), rng, 0, bound)[1]
              for _ in range(trials)]
    if len(set(values)) != 1:
        raise ParameterDependence(f"{space.name}: c3 sums {values}")
    if values[0].denominator != 1:
        raise NonIntegral(f"{space.name}: c3 sum {values[0]}")
    return int(values[0])


def count_fixed_points(space: ToricSpace, r: int, n: int) -> int:
    return int((macmahon(n) ** (r * len(space.charts)))[n])


def count_fixed_points_direct(space: ToricSpace, r: int, n: int) -> int:
    per_size: Dict[int, int] = {k: sum(1 for _ in enum_colored(k, r)) for k in range(n + 1)}
    return sum(prod(per_size[k] for k in sizes)
               for sizes in compositions(n, len(space.charts)))


def fixed_point_counts(space: ToricSpace, r: int, n_max: int) -> List[int]:
    return [count_fixed_points(space, r, n) for n in range(n_max + 1)]


def parse_twist(token: str) -> Tuple[int, ...]:
    """'O' -> (0,), 'O1' or 'O(1)' -> (1,), 'O(1,-2)' -> (1, -2)."""
    text = token.strip().replace(' ', '')
    if not text.startswith('O'):
        raise InvalidDescriptor(f"bundle summand {token!r} must start with 'O'")
    body = text[1:]
    if body.startswith('(') and body.endswith(')'):
        body = body[1:-1]
    if not body:
        return (0,)
    try:
        return tuple(int(part) for part in body.split(','))
    except ValueError:
        raise InvalidDescriptor(f"cannot read twist {token!r}")
