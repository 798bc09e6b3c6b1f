"""Plane partitions, their colored tuples, partitions and partition pairs."""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Tuple

from localization.charalg import LaurentPoly

Box = Tuple[int, int, int]
Partition = Tuple[int, ...]


@dataclass(frozen=True)
class PlanePartition:
    boxes: Tuple[Box, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'boxes', tuple(sorted(set(self.boxes))))

    @classmethod
    def from_layers(cls, layers):
        """Build from Young diagrams stacked along the third axis."""
        return cls(tuple(
            (i, j, k)
            for k, layer in enumerate(layers)
            for i, row in enumerate(layer)
            for j in range(row)
        ))

    @property
    def size(self):
        return len(self.boxes)

    def __len__(self):
        return len(self.boxes)

    def is_valid(self):
        return is_plane_partition(self.boxes)


def is_plane_partition(boxes) -> bool:
    box_set = set(boxes)
    for i, j, k in box_set:
        if min(i, j, k) < 0:
            return False
        for neighbour in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
            if min(neighbour) >= 0 and neighbour not in box_set:
                return False
    return True


@dataclass(frozen=True)
class ColoredPlanePartition:
    parts: Tuple[PlanePartition, ...]

    @property
    def rank(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(part.size for part in self.parts)


@dataclass(frozen=True)
class PartitionPair:
    lam: Partition
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, 'lam', tuple(sorted(self.lam, reverse=True)))
        object.__setattr__(self, 'mu', tuple(sorted(self.mu, reverse=True)))

    @property
    def size(self):
        return sum(self.lam)

    def is_valid(self, r):
        remaining = list(self.lam)
        for part in self.mu:
            if part not in remaining:
                return False
            remaining.remove(part)
        return len(self.mu) <= r and all(p > 0 for p in self.lam)

    def label(self):
        return f"({','.join(map(str, self.lam))}|{','.join(map(str, self.mu))})"


def _diagrams_inside(size: int, bound: Optional[Partition], max_row: Optional[int] = None,
                     row: int = 0) -> Iterator[Partition]:
    if size == 0:
        yield ()
        return
    limit = size if max_row is None else min(size, max_row)
    if bound is not None:
        limit = min(limit, bound[row] if row < len(bound) else 0)
    for length in range(limit, 0, -1):
        for rest in _diagrams_inside(size - length, bound, length, row + 1):
            yield (length,) + rest


def _layer_stacks(n: int, bound: Optional[Partition]) -> Iterator[Tuple[Partition, ...]]:
    if n == 0:
        yield ()
        return
    for size in range(n, 0, -1):
        for layer in _diagrams_inside(size, bound):
            for rest in _layer_stacks(n - size, layer):
                yield (layer,) + rest


@lru_cache(maxsize=None)
def _plane_partitions(n: int) -> Tuple[PlanePartition, ...]:
    return tuple(PlanePartition.from_layers(stack) for stack in _layer_stacks(n, None))


def enum_plane_partitions(n: int) -> Tuple[PlanePartition, ...]:
    if n < 0:
        raise ValueError("size must be nonnegative")
    return _plane_partitions(n)


STANDARD_BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def pp_character(pp: PlanePartition, rank: int = 0, basis=STANDARD_BASIS) -> LaurentPoly:
    """Sum over boxes (i, j, k) of t^(i a + j b + k c) for the basis (a, b, c)."""
    pad = (0,) * rank
    terms = {}
    for i, j, k in pp.boxes:
        exponent = tuple(i * x + j * y + k * z for x, y, z in zip(*basis)) + pad
        terms[exponent] = terms.get(exponent, 0) + 1
    return LaurentPoly(terms, rank=rank)


def compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``n`` into ``parts`` ordered summands."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def enum_colored(n: int, r: int) -> Iterator[ColoredPlanePartition]:
    if r < 1:
        raise ValueError("rank must be positive")
    for sizes in compositions(n, r):
        for parts in product(*(enum_plane_partitions(k) for k in sizes)):
            yield ColoredPlanePartition(tuple(parts))


def enum_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in enum_partitions(n - first, first):
            yield (first,) + rest


def _sub_multisets(lam: Partition, r: int) -> Iterator[Partition]:
    values = sorted(set(lam), reverse=True)
    counts = [lam.count(v) for v in values]
    for choice in product(*(range(c + 1) for c in counts)):
        mu = tuple(v for v, k in zip(values, choice) for _ in range(k))
        if len(mu) <= r:
            yield mu


def enum_partition_pairs(n: int, r: int) -> Tuple[PartitionPair, ...]:
    pairs = []
    for lam in enum_partitions(n):
        for mu in sorted(_sub_multisets(lam, r), key=lambda m: (len(m), m)):
            pairs.append(PartitionPair(lam, mu))
    return tuple(pairs)
