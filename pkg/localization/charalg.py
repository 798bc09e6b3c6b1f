"""Exact Laurent polynomials in t1, t2, t3 and the color variables u1..ur.

A character of a virtual torus representation is stored sparsely as a map
from exponent vectors to nonzero integer multiplicities. Positions 0..2 of
an exponent vector belong to t1, t2, t3 and positions 3..3+r-1 to u1..ur.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple

from localization.exceptions import RankMismatch

Exponent = Tuple[int, ...]

TORUS_DIM = 3


def _normalize(terms, width):
    clean = {}
    for exponent, coeff in terms:
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != width:
            raise ValueError(f"exponent {exponent} has length {len(exponent)}, expected {width}")
        coeff = int(coeff)
        if coeff:
            clean[exponent] = clean.get(exponent, 0) + coeff
    return {e: clean[e] for e in sorted(clean) if clean[e]}


class LaurentPoly:
    __slots__ = ('_terms', '_rank')

    def __init__(self, terms=None, rank=0):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        self._rank = rank
        self._terms = _normalize(items, TORUS_DIM + rank)

    @classmethod
    def _from_clean(cls, terms, rank):
        poly = cls.__new__(cls)
        poly._rank = rank
        poly._terms = {e: terms[e] for e in sorted(terms) if terms[e]}
        return poly

    @classmethod
    def zero(cls, rank=0):
        return cls._from_clean({}, rank)

    @classmethod
    def one(cls, rank=0):
        return cls.monomial((0,) * (TORUS_DIM + rank), rank=rank)

    @classmethod
    def monomial(cls, exponent, coeff=1, rank=0):
        return cls({tuple(exponent): coeff}, rank=rank)

    @classmethod
    def t(cls, index, rank=0, power=1):
        """The torus variable t_(index+1)."""
        exponent = [0] * (TORUS_DIM + rank)
        exponent[index] = power
        return cls.monomial(exponent, rank=rank)

    @classmethod
    def u(cls, index, rank, power=1):
        """The color variable u_(index+1)."""
        exponent = [0] * (TORUS_DIM + rank)
        exponent[TORUS_DIM + index] = power
        return cls.monomial(exponent, rank=rank)

    @property
    def rank(self):
        return self._rank

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self):
        return hash((self._rank, tuple(self._terms.items())))

    def _check_rank(self, other):
        if self._rank != other._rank:
            raise RankMismatch(f"rank {self._rank} does not match rank {other._rank}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_rank(other)
        total = dict(self._terms)
        for exponent, coeff in other._terms.items():
            total[exponent] = total.get(exponent, 0) + coeff
        return LaurentPoly._from_clean(total, self._rank)

    def __neg__(self):
        return LaurentPoly._from_clean({e: -c for e, c in self._terms.items()}, self._rank)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._from_clean({e: c * other for e, c in self._terms.items()}, self._rank)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def dual(self):
        return poly_dual(self)

    def shift(self, exponent):
        """Multiply by the monomial with the given exponent."""
        return LaurentPoly._from_clean(
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()},
            self._rank,
        )

    def constant_term(self):
        return self._terms.get((0,) * (TORUS_DIM + self._rank), 0)

    def value_at_one(self):
        return sum(self._terms.values())

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, rank={self._rank})"


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check_rank(b)
    product = defaultdict(int)
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            product[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return LaurentPoly._from_clean(product, a._rank)


def poly_dual(a: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._from_clean(
        {tuple(-x for x in e): c for e, c in a._terms.items()}, a._rank)


def poly_sum(polys: Iterable[LaurentPoly], rank=0) -> LaurentPoly:
    total = defaultdict(int)
    for poly in polys:
        if poly.rank != rank:
            raise RankMismatch(f"rank {poly.rank} does not match rank {rank}")
        for exponent, coeff in poly.items():
            total[exponent] += coeff
    return LaurentPoly._from_clean(total, rank)


@dataclass(frozen=True)
class EquivParams:
    s: Tuple[int, int, int]
    v: Tuple[int, ...] = ()

    @property
    def rank(self):
        return len(self.v)

    def scaled(self, factor):
        return EquivParams(tuple(x * factor for x in self.s), tuple(x * factor for x in self.v))

    def negated(self):
        return self.scaled(-1)

    def as_list(self):
        return list(self.s) + list(self.v)


def weight_form(exponent: Exponent, params: EquivParams) -> Fraction:
    """Evaluate the linear form of a monomial's weight at ``params``."""
    if len(exponent) != TORUS_DIM + params.rank:
        raise ValueError(f"exponent {tuple(exponent)} does not fit rank {params.rank}")
    return Fraction(
        sum(e * x for e, x in zip(exponent[:TORUS_DIM], params.s))
        + sum(e * x for e, x in zip(exponent[TORUS_DIM:], params.v))
    )


def format_monomial(exponent: Exponent) -> str:
    names = [f"t{i + 1}" for i in range(TORUS_DIM)] + \
        [f"u{j + 1}" for j in range(len(exponent) - TORUS_DIM)]
    factors = []
    for name, power in zip(names, exponent):
        if power == 1:
            factors.append(name)
        elif power:
            factors.append(f"{name}^{power}")
    return '*'.join(factors) or '1'


def format_poly(poly: LaurentPoly) -> str:
    if not poly:
        return '0'
    chunks = []
    for exponent, coeff in poly.items():
        monomial = format_monomial(exponent)
        sign = '-' if coeff < 0 else '+'
        magnitude = abs(coeff)
        body = monomial if magnitude == 1 else (
            str(magnitude) if monomial == '1' else f"{magnitude}*{monomial}")
        chunks.append(f"{sign} {body}")
    text = ' '.join(chunks)
    return text[2:] if text.startswith('+ ') else '-' + text[2:]
