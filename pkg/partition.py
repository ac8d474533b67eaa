import logging
import numbers
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def require_int(value, what: str) -> int:
    """Integers only: floats, strings and bools are rejected instead of coerced."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return int(value)


class Cell(NamedTuple):
    """A box of a Young diagram, 1-based (row, col)."""
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers, stored without zeros."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(require_int(p, "partition part") for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts not weakly decreasing: {list(parts)}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> 'Partition':
        """Sort decreasingly and drop zeros."""
        return cls(tuple(sorted((v for v in values if v), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """lambda_i with 1-based index, 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def cells(self) -> List[Cell]:
        return [Cell(r + 1, c + 1) for r, p in enumerate(self.parts) for c in range(p)]

    def __contains__(self, cell) -> bool:
        row, col = cell
        return row >= 1 and col >= 1 and self.part(row) >= col

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return f"({','.join(str(p) for p in self.parts)})"

    def to_json(self) -> List[int]:
        return list(self.parts)


def conjugate(lam: Partition) -> Partition:
    """Column lengths of the Young diagram."""
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= c) for c in range(1, lam.parts[0] + 1)))


def durfee(lam: Partition) -> int:
    """Side of the largest square (d, d) contained in the diagram."""
    return sum(1 for i, p in enumerate(lam.parts, start=1) if p >= i)


def is_threshold(lam: Partition) -> bool:
    """lambda^t_i = lambda_i + 1 for every i up to the Durfee size."""
    conj = conjugate(lam)
    return all(conj.part(i) == lam.part(i) + 1 for i in range(1, durfee(lam) + 1))


def is_hook(lam: Partition) -> bool:
    """No 2x2 square, i.e. lambda_2 <= 1."""
    return lam.part(2) <= 1


def dominates(lam: Partition, mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order; mu is sorted decreasingly first, sizes must agree."""
    mu_sorted = sorted((int(m) for m in mu), reverse=True)
    width = max(len(lam.parts), len(mu_sorted), 1)
    left = np.zeros(width, dtype=np.int64)
    right = np.zeros(width, dtype=np.int64)
    left[:len(lam.parts)] = lam.parts
    right[:len(mu_sorted)] = mu_sorted
    if left.sum() != right.sum():
        return False
    return bool(np.all(np.cumsum(left) >= np.cumsum(right)))


def opposite_position(cell: Cell) -> Cell:
    """(t+1, s) when s <= t, otherwise (t, s-1)."""
    s, t = cell
    if s < 1 or t < 1:
        raise ValueError(f"cell coordinates must be positive: {tuple(cell)}")
    if s <= t:
        return Cell(t + 1, s)
    return Cell(t, s - 1)


def largest_hook(lam: Partition) -> Partition:
    """The biggest hook inside lam: its first row plus the rest of its first column."""
    if not lam.parts:
        return Partition()
    return Partition((lam.parts[0],) + (1,) * (lam.length - 1))


def hook(k: int) -> Partition:
    """The threshold hook (k, 1^k)."""
    if k < 0:
        raise ValueError(f"hook arm must be nonnegative: {k}")
    return Partition((k,) + (1,) * k) if k else Partition()


def frobenius(lam: Partition) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Arm and leg lengths along the main diagonal."""
    conj = conjugate(lam)
    d = durfee(lam)
    arms = tuple(lam.part(i) - i for i in range(1, d + 1))
    legs = tuple(conj.part(i) - i for i in range(1, d + 1))
    return arms, legs


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Rebuild a partition from strictly decreasing arm and leg lengths."""
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have the same length")
    d = len(arms)
    for seq in (arms, legs):
        if any(seq[i] <= seq[i + 1] for i in range(d - 1)) or any(x < 0 for x in seq):
            raise ValueError(f"Frobenius coordinates must be strictly decreasing and nonnegative: {list(seq)}")
    # rows 1..d come from the arms; rows below the square come from the legs
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = (legs[0] + 1) if d else 0
    for r in range(d + 1, depth + 1):
        rows.append(sum(1 for j in range(d) if legs[j] + j + 1 >= r))
    return Partition(tuple(rows))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""
    for parts in _partitions(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def threshold_partitions(size: int) -> List[Partition]:
    """Threshold partitions of `size`, built from strict partitions of size/2.

    Legs exceed arms by one, so each diagonal hook has 2*(arm+1) cells.
    """
    if size < 0 or size % 2:
        return []
    found = []
    for strict in _strict_partitions(size // 2, size // 2):
        arms = tuple(p - 1 for p in strict)
        found.append(from_frobenius(arms, tuple(a + 1 for a in arms)))
    found.sort(key=lambda p: p.parts, reverse=True)
    logger.debug(f"{len(found)} threshold partitions of {size}")
    return found


def _strict_partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            yield (first,) + rest
