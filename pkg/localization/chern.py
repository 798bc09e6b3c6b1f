"""Chern rings of 3-folds, Chern numbers and the double point cobordism calculus.

Rings are presented as Q[g_1..g_k] modulo relations that already form a
Groebner basis for lex order with the generators in the stored order
(pure powers of the base generators and at most one quadratic relation
whose leading monomial is xi^2), so ``sympy.reduced`` yields normal forms.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod
from typing import Dict, Mapping, Sequence, Tuple

import sympy

from localization import conventions
from localization.exceptions import (DimensionMismatch, InvalidPartitionPair, RankMismatch,
                                     SingularBasisMatrix, UnknownSpace)
from localization.partitions import PartitionPair, enum_partition_pairs
from localization.series import Series, dt_closed_formula

logger = logging.getLogger(__name__)

DIMENSION = 3


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True, eq=False)
class ChernRing:
    name: str
    generators: Tuple[sympy.Symbol, ...]
    relations: Tuple[sympy.Expr, ...]
    integrals: Mapping[Tuple[int, ...], int]
    tangent_chern: sympy.Expr
    dimension: int = DIMENSION
    # degree-one classes whose O(1) twists are addressed by bundle descriptors
    hyperplanes: Tuple[sympy.Expr, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'tangent_chern', self.reduce(self.tangent_chern))

    def _poly(self, expr):
        return sympy.Poly(sympy.expand(expr), *self.generators)

    def reduce(self, expr) -> sympy.Expr:
        expr = sympy.expand(sympy.sympify(expr))
        if expr.is_number:
            return expr
        _, remainder = sympy.reduced(expr, list(self.relations), *self.generators, order='lex')
        poly = self._poly(remainder)
        return sympy.expand(sum(
            (coeff * prod(g ** e for g, e in zip(self.generators, monom))
             for monom, coeff in poly.terms() if sum(monom) <= self.dimension),
            sympy.Integer(0)))

    def mul(self, *factors) -> sympy.Expr:
        return self.reduce(prod(factors))

    def homogeneous(self, expr, degree) -> sympy.Expr:
        poly = self._poly(self.reduce(expr))
        return sympy.expand(sum(
            (coeff * prod(g ** e for g, e in zip(self.generators, monom))
             for monom, coeff in poly.terms() if sum(monom) == degree),
            sympy.Integer(0)))

    def integrate(self, expr) -> Fraction:
        poly = self._poly(self.reduce(expr))
        total = sympy.Integer(0)
        for monom, coeff in poly.terms():
            if sum(monom) == self.dimension:
                total += coeff * self.integrals.get(tuple(monom), 0)
        return _to_fraction(total)

    def tangent_class(self, k) -> sympy.Expr:
        return self.homogeneous(self.tangent_chern, k)

    def chern_classes(self):
        return [self.tangent_class(k) for k in range(1, self.dimension + 1)]


@dataclass(frozen=True, eq=False)
class BundleClass:
    rank: int
    total: sympy.Expr
    labels: Tuple[str, ...] = field(default=())

    @classmethod
    def split(cls, ring: ChernRing, line_classes: Sequence, rank=None, labels=()):
        rank = len(line_classes) if rank is None else rank
        if rank < len(line_classes):
            raise RankMismatch(f"{len(line_classes)} summands do not fit rank {rank}")
        total = ring.reduce(prod((1 + c for c in line_classes), start=sympy.Integer(1)))
        return cls(rank, total, tuple(labels))

    @classmethod
    def trivial(cls, r):
        return cls(r, sympy.Integer(1), ('O',) * r)

    def chern_class(self, ring: ChernRing, k) -> sympy.Expr:
        if k > self.rank:
            return sympy.Integer(0)
        return ring.homogeneous(self.total, k)


def product_ring(lam: Sequence[int]) -> ChernRing:
    """Q[h_1..h_l]/(h_i^(lam_i + 1)) for the product of P^(lam_i)."""
    lam = tuple(lam)
    gens = sympy.symbols(f"h1:{len(lam) + 1}")
    name = 'x'.join(f"P{m}" for m in lam)
    return ChernRing(
        name=name,
        generators=tuple(gens),
        relations=tuple(h ** (m + 1) for h, m in zip(gens, lam)),
        integrals={lam: 1},
        tangent_chern=prod(((1 + h) ** (m + 1) for h, m in zip(gens, lam)), start=sympy.Integer(1)),
        dimension=sum(lam),
        hyperplanes=tuple(gens),
    )


def ring_of_projective_product(lam: Sequence[int]) -> ChernRing:
    if sum(lam) != DIMENSION or any(m <= 0 for m in lam):
        raise DimensionMismatch(f"{tuple(lam)} is not a partition of {DIMENSION}")
    return product_ring(sorted(lam, reverse=True))


def projective_bundle_ring(base: ChernRing, line_class,
                           convention=conventions.DEFAULT_BUNDLE_CONVENTION, name=None) -> ChernRing:
    """P(O + L) over a surface."""
    if base.dimension != DIMENSION - 1:
        raise DimensionMismatch(f"base {base.name} has dimension {base.dimension}, expected 2")
    if convention == conventions.BUNDLE_LINES:
        sign = 1
    elif convention == conventions.BUNDLE_QUOTIENTS:
        sign = -1
    else:
        raise ValueError(f"unknown bundle convention {convention!r}")
    xi = sympy.Symbol('xi')
    line_class = sympy.expand(line_class)
    integrals = {(1,) + monom: value for monom, value in base.integrals.items()}
    return ChernRing(
        name=name or f"P(O+L)/{base.name}",
        generators=(xi,) + base.generators,
        relations=base.relations + (sympy.expand(xi ** 2 + sign * line_class * xi),),
        integrals=integrals,
        tangent_chern=base.tangent_chern * (1 + xi) * (1 + xi + sign * line_class),
        dimension=DIMENSION,
        hyperplanes=base.hyperplanes + (xi,),
    )


def quadric_ring() -> ChernRing:
    h = sympy.Symbol('H')
    inverse = sum(((-2 * h) ** k for k in range(DIMENSION + 1)), sympy.Integer(0))
    return ChernRing(
        name='quadric',
        generators=(h,),
        relations=(h ** 4,),
        integrals={(3,): 2},
        tangent_chern=(1 + h) ** 5 * inverse,
        hyperplanes=(h,),
    )


def blowup_p3_ring(convention=conventions.DEFAULT_BUNDLE_CONVENTION) -> ChernRing:
    """Bl_pt P^3 as P(O + O(-/+1)) over P^2 with xi the pulled-back hyperplane class."""
    base = product_ring((2,))
    (h,) = base.generators
    line = -h if convention == conventions.BUNDLE_LINES else h
    ring = projective_bundle_ring(base, line, convention, name='blowup-p3')
    return replace(ring, hyperplanes=(ring.generators[0],))


def _builtin_rings(convention):
    return {
        'p3': lambda: ring_of_projective_product((3,)),
        'p2xp1': lambda: ring_of_projective_product((2, 1)),
        'p1cubed': lambda: ring_of_projective_product((1, 1, 1)),
        'quadric': quadric_ring,
        'p2': lambda: product_ring((2,)),
        'p1xp1': lambda: product_ring((1, 1)),
        'blowup-p3': lambda: blowup_p3_ring(convention),
        'proj-p2-o1': lambda: projective_bundle_ring(
            product_ring((2,)), product_ring((2,)).generators[0], convention, name='proj-p2-o1'),
        'proj-p1xp1-o11': lambda: projective_bundle_ring(
            product_ring((1, 1)), sum(product_ring((1, 1)).generators), convention,
            name='proj-p1xp1-o11'),
    }


BUILTIN_RINGS = tuple(_builtin_rings(conventions.DEFAULT_BUNDLE_CONVENTION))


def builtin_ring(name: str, convention=conventions.DEFAULT_BUNDLE_CONVENTION) -> ChernRing:
    try:
        factory = _builtin_rings(convention)[name]
    except KeyError:
        raise UnknownSpace(f"unknown ring {name!r}; choose from {', '.join(BUILTIN_RINGS)}")
    return factory()


def bundle_from_degrees(ring: ChernRing, twists: Sequence[Sequence[int]], labels=()) -> BundleClass:
    """Split bundle whose summands are O(d_1, ..., d_k) in the ring's hyperplane classes."""
    classes = []
    for degrees in twists:
        degrees = list(degrees)
        if len(degrees) == 1 and len(ring.hyperplanes) > 1:
            degrees = degrees * len(ring.hyperplanes)
        if len(degrees) != len(ring.hyperplanes):
            raise UnknownSpace(f"{ring.name} takes {len(ring.hyperplanes)} degrees, got {len(degrees)}")
        classes.append(sum((d * h for d, h in zip(degrees, ring.hyperplanes)), sympy.Integer(0)))
    return BundleClass.split(ring, classes, labels=labels)


def _require_threefold(ring: ChernRing):
    if ring.dimension != DIMENSION:
        raise DimensionMismatch(f"{ring.name} has dimension {ring.dimension}")


def euler_characteristic(ring: ChernRing) -> int:
    return int(ring.integrate(ring.tangent_class(ring.dimension)))


def c3_t_omega(ring: ChernRing) -> int:
    """Integral of c3(T tensor omega) = c3(T) - c1(T) c2(T)."""
    _require_threefold(ring)
    c1, c2, c3 = ring.chern_classes()
    return int(ring.integrate(c3 - c1 * c2))


def c3_twisted(ring: ChernRing, bundle: BundleClass, line_class) -> Fraction:
    """c3(E tensor L) for rank-3 E: c3 + c2 l + c1 l^2 + l^3."""
    if bundle.rank != 3:
        raise RankMismatch(f"twist formula needs rank 3, got {bundle.rank}")
    c1, c2, c3 = (bundle.chern_class(ring, k) for k in (1, 2, 3))
    return ring.integrate(c3 + c2 * line_class + c1 * line_class ** 2 + line_class ** 3)


ChernVariable = Tuple[str, int]


@lru_cache(maxsize=None)
def chern_monomials(r: int) -> Tuple[Tuple[ChernVariable, ...], ...]:
    """Degree-3 monomials in c_i(T) and c_k(F): T-only first, then mixed."""
    variables = [('T', 1), ('T', 2), ('T', 3)] + [('F', k) for k in range(1, min(r, 3) + 1)]
    by_degree = {d: [v for v in variables if v[1] == d] for d in (1, 2, 3)}
    monomials = [(v,) for v in by_degree[3]]
    monomials += [(a, b) for a in by_degree[2] for b in by_degree[1]]
    monomials += list(combinations_with_replacement(by_degree[1], 3))
    t_only = [m for m in monomials if all(kind == 'T' for kind, _ in m)]
    mixed = [m for m in monomials if m not in t_only]
    return tuple(t_only + mixed)


def monomial_label(monomial) -> str:
    return ''.join(f"c{k}({kind})" for kind, k in monomial)


@dataclass(frozen=True)
class MixedChernVector:
    labels: Tuple[str, ...]
    values: Tuple[Fraction, ...]

    def __add__(self, other):
        return MixedChernVector(self.labels, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return MixedChernVector(self.labels, tuple(a - b for a, b in zip(self.values, other.values)))

    def as_dict(self):
        return dict(zip(self.labels, self.values))


def mixed_chern_vector(ring: ChernRing, bundle: BundleClass) -> MixedChernVector:
    _require_threefold(ring)
    classes = {('T', k): ring.tangent_class(k) for k in (1, 2, 3)}
    classes.update({('F', k): bundle.chern_class(ring, k) for k in (1, 2, 3)})
    monomials = chern_monomials(bundle.rank)
    values = tuple(ring.integrate(prod(classes[v] for v in m)) for m in monomials)
    return MixedChernVector(tuple(monomial_label(m) for m in monomials), values)


def phi_class(pair: PartitionPair, r: int) -> Tuple[ChernRing, BundleClass]:
    """[P^lam, O^(r - l(mu)) + sum of O(1) pulled back from the factors named by mu]."""
    if pair.size != DIMENSION or not pair.is_valid(r):
        raise InvalidPartitionPair(f"{pair.label()} is not in P(3, {r})")
    ring = ring_of_projective_product(pair.lam)
    used = set()
    classes = []
    labels = []
    for part in pair.mu:
        index = next(i for i, m in enumerate(pair.lam) if m == part and i not in used)
        used.add(index)
        classes.append(ring.generators[index])
        labels.append(f"L{index + 1}")
    labels += ['O'] * (r - len(classes))
    return ring, BundleClass.split(ring, classes, rank=r, labels=labels)


@lru_cache(maxsize=None)
def basis(r: int):
    """Partition pairs of size 3 with the Chern-number matrix of their phi classes."""
    pairs = enum_partition_pairs(DIMENSION, r)
    columns = [mixed_chern_vector(*phi_class(pair, r)).values for pair in pairs]
    matrix = sympy.Matrix([[sympy.Rational(col[i].numerator, col[i].denominator) for col in columns]
                           for i in range(len(columns[0]))])
    return pairs, matrix


def basis_determinant(r: int) -> Fraction:
    _, matrix = basis(r)
    return _to_fraction(matrix.det())


def decompose(ring: ChernRing, bundle: BundleClass, r: int) -> Dict[PartitionPair, Fraction]:
    if bundle.rank != r:
        raise RankMismatch(f"bundle of rank {bundle.rank} decomposed in type {r}")
    pairs, matrix = basis(r)
    if matrix.shape[0] != matrix.shape[1] or matrix.det() == 0:
        raise SingularBasisMatrix(f"basis matrix of type {r} has shape {matrix.shape} and is singular")
    target = sympy.Matrix([sympy.Rational(v.numerator, v.denominator)
                           for v in mixed_chern_vector(ring, bundle).values])
    solution = matrix.LUsolve(target)
    return {pair: _to_fraction(solution[i]) for i, pair in enumerate(pairs)}


def reconstruct(coefficients: Mapping[PartitionPair, Fraction], r: int) -> MixedChernVector:
    pairs, matrix = basis(r)
    labels = tuple(monomial_label(m) for m in chern_monomials(r))
    values = tuple(
        sum((coefficients.get(pair, Fraction(0)) * _to_fraction(matrix[i, j])
             for j, pair in enumerate(pairs)), Fraction(0))
        for i in range(matrix.shape[0])
    )
    return MixedChernVector(labels, values)


ClassPair = Tuple[ChernRing, BundleClass]


@dataclass(frozen=True)
class DoublePointReport:
    vectors: Dict[str, MixedChernVector]
    exponents: Dict[str, int]
    chern_balance: bool
    exponent_balance: bool
    series_balance: bool
    order: int

    @property
    def passed(self):
        return self.chern_balance and self.exponent_balance and self.series_balance


def dpr_check(y_xi: ClassPair, a: ClassPair, b: ClassPair, p_pi: ClassPair,
              order: int = 4) -> DoublePointReport:
    """[Y_xi] - [A] - [B] + [P(pi)] against Chern numbers and the closed DT formula."""
    members = {'Y_xi': y_xi, 'A': a, 'B': b, 'P_pi': p_pi}
    for role, (ring, _) in members.items():
        if ring.dimension != DIMENSION:
            raise DimensionMismatch(f"{role} = {ring.name} has dimension {ring.dimension}")
    ranks = {role: bundle.rank for role, (_, bundle) in members.items()}
    if len(set(ranks.values())) != 1:
        raise RankMismatch(f"bundle ranks differ: {ranks}")
    r = ranks['Y_xi']
    vectors = {role: mixed_chern_vector(ring, bundle) for role, (ring, bundle) in members.items()}
    exponents = {role: c3_t_omega(ring) for role, (ring, _) in members.items()}
    chern_balance = vectors['Y_xi'].values == (vectors['A'] + vectors['B'] - vectors['P_pi']).values
    exponent_balance = exponents['Y_xi'] + exponents['P_pi'] == exponents['A'] + exponents['B']
    series = {role: dt_closed_formula(r, c3, order) for role, c3 in exponents.items()}
    series_balance = series['Y_xi'] * series['P_pi'] == series['A'] * series['B']
    logger.debug("double point check: chern=%s exponent=%s series=%s",
                 chern_balance, exponent_balance, series_balance)
    return DoublePointReport(vectors, exponents, chern_balance, exponent_balance, series_balance, order)


@dataclass(frozen=True)
class Relation:
    name: str
    description: str
    members: Tuple[ClassPair, ClassPair, ClassPair, ClassPair]
    expected_pass: bool = True


def _padded(ring, twists, r):
    twists = list(twists) + [(0,)] * (r - len(twists))
    return bundle_from_degrees(ring, twists)


def builtin_relation(name: str, r: int = 1,
                     convention=conventions.DEFAULT_BUNDLE_CONVENTION) -> Relation:
    def ring(key):
        return builtin_ring(key, convention)

    trivial = BundleClass.trivial(r)
    if name == 'normal-cone-p2':
        p3, cone = ring('p3'), ring('proj-p2-o1')
        return Relation(name, 'deformation to the normal cone of P2 in P3',
                        ((p3, trivial), (p3, trivial), (cone, trivial), (cone, trivial)))
    if name == 'point-blowup':
        p3, blowup, cone = ring('p3'), ring('blowup-p3'), ring('proj-p2-o1')
        return Relation(name, 'deformation to the normal cone of a point of P3, F = O(1) + O^(r-1)',
                        ((p3, _padded(p3, [(1,)], r)), (blowup, _padded(blowup, [(1,)], r)),
                         (p3, trivial), (cone, trivial)))
    if name == 'quadric-dpr':
        quadric, cone = ring('quadric'), ring('proj-p1xp1-o11')
        return Relation(name, 'deformation to the normal cone of a hyperplane section P1xP1 of the quadric',
                        ((quadric, trivial), (quadric, trivial), (cone, trivial), (cone, trivial)))
    if name == 'quadric-naive':
        quadric, p3, cone = ring('quadric'), ring('p3'), ring('proj-p2-o1')
        return Relation(name, 'quadric against two P3 meeting in P2 (singular total space)',
                        ((quadric, trivial), (p3, trivial), (p3, trivial), (cone, trivial)),
                        expected_pass=False)
    raise UnknownSpace(f"unknown relation {name!r}; choose from {', '.join(BUILTIN_RELATIONS)}")


BUILTIN_RELATIONS = ('normal-cone-p2', 'point-blowup', 'quadric-dpr', 'quadric-naive')
