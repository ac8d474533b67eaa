import logging
from collections import Counter
from typing import List, Sequence, Tuple

from graph import BurgeArray, SimpleGraph, from_burge_array, to_burge_array
from partition import Cell, Partition, is_threshold, opposite_position
from tableau import Tableau, _check_alphabet, insert, reverse_bump

logger = logging.getLogger(__name__)


def _place(tableau: Tableau, cell: Cell, value: int, validate: bool) -> Tableau:
    """Add a box holding `value` at `cell`, which must extend the shape."""
    rows = [list(row) for row in tableau.rows]
    row, col = cell
    if row == len(rows) + 1 and col == 1:
        rows.append([value])
    elif row <= len(rows) and col == len(rows[row - 1]) + 1 and (row == 1 or len(rows[row - 2]) >= col):
        rows[row - 1].append(value)
    else:
        raise ValueError(f"cell {tuple(cell)} cannot be added to shape {tableau.shape}")
    return Tableau(rows, validate=validate)


def burge_insert(tableau: Tableau, a: int, b: int, validate: bool = True) -> Tableau:
    """Insert b by Schensted insertion, then record a at the opposite of the new cell."""
    if a <= b:
        raise ValueError(f"Burge columns need a > b, got ({a}, {b})")
    bumped, cell = insert(tableau, b, validate=validate)
    try:
        result = _place(bumped, opposite_position(cell), a, validate)
    except ValueError as e:
        raise ValueError(f"inserting column ({a}, {b}) out of Burge order: {str(e)}") from e
    if validate and not is_threshold(result.shape):
        raise ValueError(f"shape {result.shape} after inserting ({a}, {b}) is not threshold")
    return result


def encode(array: BurgeArray, validate: bool = True) -> Tableau:
    """Threshold tableau T_G of a Burge array; `validate=False` is the fast path."""
    tableau = Tableau()
    for a, b in array.columns:
        tableau = burge_insert(tableau, a, b, validate=validate)
    return tableau


def _largest_rightmost(tableau: Tableau) -> Cell:
    top = tableau.max_entry
    holders = [cell for cell in tableau.cells() if tableau.entry(cell) == top]
    return max(holders, key=lambda cell: (cell.col, cell.row))


def _remove(tableau: Tableau, cell: Cell) -> Tableau:
    rows = [list(row) for row in tableau.rows]
    if cell.col != len(rows[cell.row - 1]):
        raise ValueError(f"cell {tuple(cell)} is not at the end of its row")
    rows[cell.row - 1].pop()
    return Tableau(rows, validate=False)


def decode(tableau: Tableau) -> BurgeArray:
    """Inverse of `encode`: peel off the largest, rightmost entry and reverse-bump its opposite."""
    if not is_threshold(tableau.shape):
        raise ValueError(f"tableau shape {tableau.shape} is not threshold")
    columns: List[Tuple[int, int]] = []
    current = tableau
    while not current.is_empty():
        cell = _largest_rightmost(current)
        a = current.entry(cell)
        current = _remove(current, cell)
        current, b = reverse_bump(current, opposite_position(cell), validate=False)
        columns.append((a, b))
    columns.reverse()
    return BurgeArray(tuple(columns))


def graph_tableau(graph: SimpleGraph, validate: bool = True) -> Tableau:
    return encode(to_burge_array(graph), validate=validate)


def tableau_graph(tableau: Tableau, n: int) -> SimpleGraph:
    return from_burge_array(decode(tableau), n)


def shape_of_graph(graph: SimpleGraph) -> Partition:
    return graph_tableau(graph, validate=False).shape


def standardize_burge_array(array: BurgeArray, alphabet: Sequence[int]) -> BurgeArray:
    """Relabel each value class left to right, column by column, with consecutive letters of C.

    A column never holds a value twice since a_k > b_k.
    """
    values = _check_alphabet(alphabet, 2 * len(array))
    occurrences = []
    for k, (a, b) in enumerate(array.columns):
        occurrences.append((b, k, 1))
        occurrences.append((a, k, 0))
    occurrences.sort(key=lambda occ: (occ[0], occ[1]))
    relabelled = [[0, 0] for _ in array.columns]
    for value, (_, k, slot) in zip(values, occurrences):
        relabelled[k][slot] = value
    return BurgeArray(tuple((a, b) for a, b in relabelled))


def content(array: BurgeArray) -> Counter:
    """Letter multiplicities over both rows (the degree of each vertex)."""
    return Counter(array.top + array.bottom)
