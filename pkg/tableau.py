import logging
from bisect import bisect_left, bisect_right
from collections import Counter
from typing import Iterator, List, Sequence, Tuple

from partition import Cell, Partition, require_int

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class Tableau:
    """Semistandard Young tableau stored row-major with 1-based values.

    Construction validates semistandardness; `validate=False` is reserved for
    internal fast paths whose inputs are already known to be valid.
    """

    __slots__ = ('_rows',)

    def __init__(self, rows: Sequence[Sequence[int]] = (), validate: bool = True):
        frozen = [tuple(row) for row in rows]
        # internal removals can leave trailing empty rows
        while frozen and not frozen[-1]:
            frozen.pop()
        if validate:
            frozen = [tuple(require_int(v, "tableau entry") for v in row) for row in frozen]
            _check_semistandard(tuple(frozen))
        object.__setattr__(self, '_rows', tuple(frozen))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self._rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self._rows)

    @property
    def max_entry(self) -> int:
        return max((row[-1] for row in self._rows), default=0)

    def cells(self) -> List[Cell]:
        return [Cell(r + 1, c + 1) for r, row in enumerate(self._rows) for c in range(len(row))]

    def entry(self, cell: Cell) -> int:
        row, col = cell
        if not (1 <= row <= len(self._rows) and 1 <= col <= len(self._rows[row - 1])):
            raise ValueError(f"cell {tuple(cell)} is outside the tableau")
        return self._rows[row - 1][col - 1]

    def is_empty(self) -> bool:
        return not self._rows

    def __eq__(self, other):
        if isinstance(other, Tableau):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self._rows]})"

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self._rows]

    @classmethod
    def from_json(cls, data) -> 'Tableau':
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise ValueError("tableau must be a list of lists of integers")
        if any(not row for row in data):
            raise ValueError("tableau rows must be non-empty")
        return cls(data)


def _check_semistandard(rows: Tuple[Tuple[int, ...], ...]) -> None:
    for r, row in enumerate(rows, start=1):
        if not row:
            raise ValueError(f"row {r} is empty")
        if any(v < 1 for v in row):
            raise ValueError(f"entries must be positive integers (row {r})")
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            raise ValueError(f"entries must weakly increase along row {r}")
    for r in range(len(rows) - 1):
        upper, lower = rows[r], rows[r + 1]
        if len(lower) > len(upper):
            raise ValueError(f"row {r + 2} is longer than row {r + 1}")
        for c in range(len(lower)):
            if upper[c] >= lower[c]:
                raise ValueError(f"entries must strictly increase down column {c + 1}")


def _from_lists(rows: List[List[int]], validate: bool) -> Tableau:
    return Tableau(rows, validate=validate)


def insert(tableau: Tableau, x: int, validate: bool = True) -> Tuple[Tableau, Cell]:
    """Schensted row insertion T <- x; returns the new tableau and the added cell.

    Each row bumps its leftmost entry strictly greater than the incoming letter.
    """
    if x < 1:
        raise ValueError(f"letters must be positive: {x}")
    rows = [list(row) for row in tableau.rows]
    letter = x
    for r, row in enumerate(rows):
        pos = bisect_right(row, letter)
        if pos == len(row):
            row.append(letter)
            return _from_lists(rows, validate), Cell(r + 1, pos + 1)
        row[pos], letter = letter, row[pos]
    rows.append([letter])
    return _from_lists(rows, validate), Cell(len(rows), 1)


def reverse_bump(tableau: Tableau, cell: Cell, validate: bool = True) -> Tuple[Tableau, int]:
    """Schensted reverse bumping T -> x from a cell at the end of its row."""
    row_idx, col_idx = cell
    rows = [list(row) for row in tableau.rows]
    if not (1 <= row_idx <= len(rows)) or col_idx != len(rows[row_idx - 1]):
        raise ValueError(f"cell {tuple(cell)} is not at the end of a row")
    if row_idx < len(rows) and len(rows[row_idx]) >= col_idx:
        raise ValueError(f"cell {tuple(cell)} is not a removable corner")
    letter = rows[row_idx - 1].pop()
    for r in range(row_idx - 2, -1, -1):
        row = rows[r]
        # rightmost entry strictly smaller than the letter coming up
        pos = bisect_left(row, letter) - 1
        row[pos], letter = letter, row[pos]
    return _from_lists(rows, validate), letter


def schensted_p(word: Sequence[int]) -> Tableau:
    """Insertion tableau P(w)."""
    tableau = Tableau()
    for letter in word:
        tableau, _ = insert(tableau, letter, validate=False)
    return tableau


def reading_word(tableau: Tableau) -> Word:
    """Rows read left to right, bottom row first."""
    return tuple(v for row in reversed(tableau.rows) for v in row)


def restricted_reading_word(tableau: Tableau, i: int) -> Word:
    return tuple(v for v in reading_word(tableau) if v in (i, i + 1))


def reading_positions(tableau: Tableau) -> List[Cell]:
    """Cells in the order `reading_word` visits them."""
    positions = []
    for r in range(len(tableau.rows), 0, -1):
        positions.extend(Cell(r, c) for c in range(1, len(tableau.rows[r - 1]) + 1))
    return positions


def weight(tableau: Tableau) -> Tuple[int, ...]:
    """Multiplicity of each letter 1..max entry."""
    counts = Counter(v for row in tableau.rows for v in row)
    return tuple(counts.get(v, 0) for v in range(1, tableau.max_entry + 1))


def _check_alphabet(alphabet: Sequence[int], needed: int) -> List[int]:
    values = [require_int(c, "alphabet letter") for c in alphabet]
    if len(values) != needed:
        raise ValueError(f"alphabet has {len(values)} letters but {needed} are needed")
    if any(values[k] >= values[k + 1] for k in range(len(values) - 1)):
        raise ValueError("alphabet must be strictly increasing")
    if values and values[0] < 1:
        raise ValueError("alphabet letters must be positive")
    return values


def standardize_tableau(tableau: Tableau, alphabet: Sequence[int]) -> Tableau:
    """Relabel the 1's left to right with c_1.., then the 2's, and so on."""
    values = _check_alphabet(alphabet, tableau.size)
    # equal entries form a horizontal strip, so left to right is by column
    order = sorted(tableau.cells(), key=lambda cell: (tableau.entry(cell), cell.col))
    rows = [list(row) for row in tableau.rows]
    for value, cell in zip(values, order):
        rows[cell.row - 1][cell.col - 1] = value
    return Tableau(rows)


def standardize_word(word: Sequence[int], alphabet: Sequence[int]) -> Word:
    values = _check_alphabet(alphabet, len(word))
    order = sorted(range(len(word)), key=lambda k: (word[k], k))
    result = [0] * len(word)
    for value, k in zip(values, order):
        result[k] = value
    return tuple(result)


def knuth_equivalent(word: Sequence[int], other: Sequence[int]) -> bool:
    """Knuth equivalence decided by equality of insertion tableaux."""
    return schensted_p(word) == schensted_p(other)


def longest_weakly_increasing(word: Sequence[int]) -> int:
    """Patience-sorting length of the longest weakly increasing subword."""
    tails: List[int] = []
    for letter in word:
        pos = bisect_right(tails, letter)
        if pos == len(tails):
            tails.append(letter)
        else:
            tails[pos] = letter
    return len(tails)


def enumerate_tableaux(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """All semistandard tableaux of `shape` with entries in [max_entry], row-major backtracking."""
    if shape.length > max_entry:
        return
    cells = shape.cells()
    rows: List[List[int]] = [[0] * p for p in shape.parts]

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(rows, validate=False)
            return
        r, c = cells[k].row - 1, cells[k].col - 1
        low = 1
        if c > 0:
            low = max(low, rows[r][c - 1])
        if r > 0:
            low = max(low, rows[r - 1][c] + 1)
        # leave room for the strictly increasing column below
        high = max_entry - _column_below(shape, r + 1, c + 1)
        for value in range(low, high + 1):
            rows[r][c] = value
            yield from fill(k + 1)
        rows[r][c] = 0

    yield from fill(0)


def _column_below(shape: Partition, row: int, col: int) -> int:
    return sum(1 for r in range(row + 1, shape.length + 1) if shape.part(r) >= col)


def highest_weight_tableau(shape: Partition) -> Tableau:
    """Row r filled with r."""
    return Tableau([[r] * p for r, p in enumerate(shape.parts, start=1)])
