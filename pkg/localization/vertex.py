"""Virtual tangent characters at torus-fixed quotients and their Euler classes.

On a chart isomorphic to affine 3-space, with F restricting to a sum of
characters w_j, a fixed quotient is a tuple of plane partitions pi_j and
carries the virtual character

    T = dual(f) q - dual(q) f / kappa + dual(q) q P / kappa

where f = sum w_j, q = sum w_j Q_j, Q_j the character of pi_j, kappa the
product of the coordinate characters and P = prod (1 - t_i).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from localization import conventions
from localization.charalg import TORUS_DIM, EquivParams, LaurentPoly, poly_sum, weight_form
from localization.exceptions import NonzeroFixedPart, RankMismatch, SymmetryViolation, ZeroWeight
from localization.partitions import ColoredPlanePartition, enum_colored, pp_character
from localization.series import Series

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class ChartWeights:
    tangent: Tuple[Vector, Vector, Vector]
    colors: Tuple[Vector, ...] = ()

    def __post_init__(self):
        tangent = tuple(tuple(int(x) for x in a) for a in self.tangent)
        colors = tuple(tuple(int(x) for x in w) for w in self.colors)
        if len(tangent) != 3 or any(len(a) != TORUS_DIM for a in tangent):
            raise ValueError("a chart has three tangent characters in Z^3")
        if any(len(w) != TORUS_DIM + len(colors) for w in colors):
            raise ValueError("color characters live in Z^(3+r)")
        object.__setattr__(self, 'tangent', tangent)
        object.__setattr__(self, 'colors', colors)

    @classmethod
    def standard(cls, r=1):
        return cls.for_bundle(((1, 0, 0), (0, 1, 0), (0, 0, 1)), [(0, 0, 0)] * r)

    @classmethod
    def for_bundle(cls, tangent, characters):
        """Color characters u_j * t^(m_j) from the per-summand vectors m_j."""
        r = len(characters)
        colors = []
        for j, m in enumerate(characters):
            color = [0] * r
            color[j] = 1
            colors.append(tuple(m) + tuple(color))
        return cls(tuple(tangent), tuple(colors))

    @property
    def rank(self):
        return len(self.colors)

    def is_unimodular(self):
        return abs(_det3(self.tangent)) == 1

    def oriented(self, convention=conventions.DEFAULT_CHART_CONVENTION):
        if convention == conventions.CHART_FUNCTIONS:
            return self
        if convention == conventions.CHART_TANGENTS:
            return ChartWeights(
                tuple(tuple(-x for x in a) for a in self.tangent),
                tuple(tuple(-x for x in w[:TORUS_DIM]) + w[TORUS_DIM:] for w in self.colors),
            )
        raise ValueError(f"unknown chart convention {convention!r}")

    def kappa(self):
        exponent = tuple(sum(a[i] for a in self.tangent) for i in range(TORUS_DIM))
        return LaurentPoly.monomial(exponent + (0,) * self.rank, rank=self.rank)


@dataclass(frozen=True)
class VirtualCharacter:
    value: LaurentPoly

    def __post_init__(self):
        fixed = self.value.constant_term()
        if fixed:
            raise NonzeroFixedPart(f"constant term {fixed} in {self.value!r}")

    def __len__(self):
        return len(self.value)


@lru_cache(maxsize=65536)
def _vertex_value(pt: ColoredPlanePartition, chart: ChartWeights) -> LaurentPoly:
    r = chart.rank
    weights = [LaurentPoly.monomial(w, rank=r) for w in chart.colors]
    f = poly_sum(weights, rank=r)
    q = poly_sum((w * pp_character(pp, r, chart.tangent) for w, pp in zip(weights, pt.parts)),
                 rank=r)
    if not q:
        return LaurentPoly.zero(r)
    kappa_inv = chart.kappa().dual()
    p = LaurentPoly.one(r)
    for a in chart.tangent:
        p = p * (LaurentPoly.one(r) - LaurentPoly.monomial(a + (0,) * r, rank=r))
    q_bar = q.dual()
    return f.dual() * q - q_bar * f * kappa_inv + q_bar * q * p * kappa_inv


def vertex_character(pt: ColoredPlanePartition, chart: ChartWeights,
                     convention=conventions.DEFAULT_CHART_CONVENTION) -> VirtualCharacter:
    if pt.rank != chart.rank:
        raise RankMismatch(f"fixed point of rank {pt.rank} on a chart of rank {chart.rank}")
    return VirtualCharacter(_vertex_value(pt, chart.oriented(convention)))


def symmetry_defect(ch: VirtualCharacter, chart: ChartWeights,
                    convention=conventions.DEFAULT_CHART_CONVENTION) -> LaurentPoly:
    """T + dual(T) / kappa; zero for every genuine vertex character."""
    kappa_inv = chart.oriented(convention).kappa().dual()
    return ch.value + kappa_inv * ch.value.dual()


def check_symmetry(ch: VirtualCharacter, chart: ChartWeights,
                   convention=conventions.DEFAULT_CHART_CONVENTION):
    defect = symmetry_defect(ch, chart, convention)
    if defect:
        raise SymmetryViolation(f"T + dual(T)/kappa = {defect!r}")


def euler_inverse(ch: VirtualCharacter, params: EquivParams) -> Fraction:
    """1 / e(T): obstruction weights over tangent weights."""
    if ch.value.constant_term():
        raise NonzeroFixedPart()
    numerator = Fraction(1)
    denominator = Fraction(1)
    for exponent, coeff in ch.value.items():
        weight = weight_form(exponent, params)
        if weight == 0:
            raise ZeroWeight(f"monomial {exponent} vanishes at {params}")
        if coeff < 0:
            numerator *= weight ** (-coeff)
        else:
            denominator *= weight ** coeff
    return numerator / denominator


def chart_contribution(chart: ChartWeights, r: int, n: int, params: EquivParams,
                       convention=conventions.DEFAULT_CHART_CONVENTION) -> Fraction:
    if r != chart.rank or r != params.rank:
        raise RankMismatch(f"rank {r} against chart rank {chart.rank} and {params.rank} parameters")
    total = Fraction(0)
    for pt in enum_colored(n, r):
        total += euler_inverse(vertex_character(pt, chart, convention), params)
    return total


def chart_series(chart: ChartWeights, order: int, params: EquivParams,
                 convention=conventions.DEFAULT_CHART_CONVENTION) -> Series:
    """Local generating series sum_n chart_contribution(n) q^n."""
    return Series(tuple(
        chart_contribution(chart, chart.rank, n, params, convention) for n in range(order + 1)
    ))


def draw_params(rng, r: int, bound: int = conventions.PARAM_BOUND) -> EquivParams:
    """Integers uniform in [-bound, bound] from a numpy Generator."""
    values = [int(x) for x in rng.integers(-bound, bound, size=3 + r, endpoint=True)]
    return EquivParams(tuple(values[:3]), tuple(values[3:]))


def with_resampling(compute, rng, r: int, bound: int = conventions.PARAM_BOUND,
                    max_resamples: int = conventions.MAX_RESAMPLES):
    """Run ``compute(params)`` at fresh parameters until no weight vanishes."""
    last = None
    for attempt in range(max_resamples + 1):
        params = draw_params(rng, r, bound)
        try:
            return params, compute(params)
        except ZeroWeight as exc:
            logger.info("zero weight at %s (attempt %d), resampling", params, attempt + 1)
            last = exc
    raise last


def monomial_table(ch: VirtualCharacter, params: Sequence = None):
    """Rows of (exponent, multiplicity, weight) sorted by exponent."""
    rows = []
    for exponent, coeff in ch.value.items():
        weight = weight_form(exponent, params) if params is not None else None
        rows.append((exponent, coeff, weight))
    return rows
