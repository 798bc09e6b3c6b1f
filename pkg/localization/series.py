"""Truncated power series in q with exact rational coefficients."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from localization.exceptions import NonUnitSeries


@dataclass(frozen=True)
class Series:
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series carries at least its constant term")
        object.__setattr__(self, 'coefficients', tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def one(cls, order):
        return cls((Fraction(1),) + (Fraction(0),) * order)

    @classmethod
    def zero(cls, order):
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def monomial(cls, degree, order, coeff=1):
        coefficients = [Fraction(0)] * (order + 1)
        if degree <= order:
            coefficients[degree] = Fraction(coeff)
        return cls(tuple(coefficients))

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def truncate(self, order):
        return Series(self.coefficients[:order + 1])

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coefficients[:order + 1], other.coefficients)))

    def __neg__(self):
        return Series(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coefficients))
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return Series(tuple(
            sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0))
            for n in range(order + 1)
        ))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return series_pow(self, exponent)

    def substitute_sign(self):
        """q -> -q."""
        return Series(tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coefficients)))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def as_integers(self):
        return [int(c) for c in self.coefficients]

    def as_strings(self):
        return [str(c) for c in self.coefficients]

    def __str__(self):
        chunks = []
        for n, c in enumerate(self.coefficients):
            if not c:
                continue
            power = '' if n == 0 else ('q' if n == 1 else f"q^{n}")
            body = str(abs(c)) if not power else (power if abs(c) == 1 else f"{abs(c)}*{power}")
            chunks.append(('- ' if c < 0 else '+ ') + body)
        text = ' '.join(chunks) or '0'
        text = text[2:] if text.startswith('+ ') else text
        return f"{text} + O(q^{self.order + 1})"


def series_pow(series: Series, exponent: int) -> Series:
    """Power of a series with constant term 1 by the J.C.P. Miller recurrence."""
    if not isinstance(exponent, int):
        raise TypeError("only integer exponents are supported")
    if series[0] != 1:
        raise NonUnitSeries(f"constant term is {series[0]}")
    c = series.coefficients
    result = [Fraction(1)]
    for n in range(1, series.order + 1):
        acc = sum(((exponent + 1) * k - n) * c[k] * result[n - k] for k in range(1, n + 1))
        result.append(Fraction(acc) / n)
    return Series(tuple(result))


def macmahon(order: int) -> Series:
    """M(q) = prod_{n>=1} (1 - q^n)^(-n) through q^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    result = Series.one(order)
    for n in range(1, order + 1):
        factor = Series.one(order) - Series.monomial(n, order)
        result = result * series_pow(factor, -n)
    return result


def dt_closed_formula(r: int, c3: int, order: int) -> Series:
    """M((-1)^r q)^(r * c3)."""
    base = macmahon(order)
    if r % 2:
        base = base.substitute_sign()
    return series_pow(base, r * c3)
