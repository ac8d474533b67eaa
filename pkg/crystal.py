"""Type A crystal structure on semistandard tableaux and on PV-free Burge arrays.

The Stembridge checker uses the local axioms for simply-laced crystals in the
formulation of Bump and Schilling, "Crystal Bases", with
delta(x, j) = -epsilon_j(x):

  P1  i-edges form strings: at most one incoming and one outgoing i-edge, no cycles.
  P2  wt(f_i x) = wt(x) - e_i + e_{i+1} and phi_i(x) - epsilon_i(x) = wt_i(x) - wt_{i+1}(x).
  P3  if e_i x is defined: Delta_i delta(x, j) + Delta_i phi(x, j) = a_ij.
  P4  if e_i x is defined: Delta_i delta(x, j) <= 0 and Delta_i phi(x, j) <= 0.
  P5  if e_i x, e_j x are defined and Delta_i delta(x, j) = 0:
      y = e_i e_j x = e_j e_i x and Nabla_j phi(y, i) = 0.
  P6  if e_i x, e_j x are defined and Delta_i delta(x, j) = Delta_j delta(x, i) = -1:
      y = e_i e_j^2 e_i x = e_j e_i^2 e_j x and Nabla_i phi(y, j) = Nabla_j phi(y, i) = -1.
  P5' if f_i x, f_j x are defined and Nabla_i phi(x, j) = 0:
      y = f_i f_j x = f_j f_i x and Delta_j delta(y, i) = 0.
  P6' if f_i x, f_j x are defined and Nabla_i phi(x, j) = Nabla_j phi(x, i) = -1:
      y = f_i f_j^2 f_i x = f_j f_i^2 f_j x and Delta_i delta(y, j) = Delta_j delta(y, i) = -1.

Here Delta_i g(x) = g(e_i x) - g(x), Nabla_i g(x) = g(x) - g(f_i x) and a_ij is
the type A Cartan entry (-1 for |i - j| = 1, 0 otherwise, j != i).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from graph import BurgeArray
from partition import Partition, is_hook
from pvfree import is_pv_free
from tableau import Tableau, highest_weight_tableau, reading_positions, reading_word

logger = logging.getLogger(__name__)


AXIOMS = {
    "P1": "i-edges form strings (at most one in/out edge per label, no cycles)",
    "P2": "weight shifts by -e_i + e_{i+1} along f_i and phi_i - epsilon_i = wt_i - wt_{i+1}",
    "P3": "Delta_i delta(x,j) + Delta_i phi(x,j) = a_ij",
    "P4": "Delta_i delta(x,j) <= 0 and Delta_i phi(x,j) <= 0",
    "P5": "Delta_i delta(x,j) = 0 implies e_i e_j x = e_j e_i x with Nabla_j phi(y,i) = 0",
    "P6": "Delta_i delta(x,j) = Delta_j delta(x,i) = -1 implies e_i e_j^2 e_i x = e_j e_i^2 e_j x "
          "with Nabla_i phi(y,j) = Nabla_j phi(y,i) = -1",
    "P5'": "Nabla_i phi(x,j) = 0 implies f_i f_j x = f_j f_i x with Delta_j delta(y,i) = 0",
    "P6'": "Nabla_i phi(x,j) = Nabla_j phi(x,i) = -1 implies f_i f_j^2 f_i x = f_j f_i^2 f_j x "
           "with Delta_i delta(y,j) = Delta_j delta(y,i) = -1",
}

EDGE_COLORS = ["blue", "red", "green", "orange", "purple", "brown"]


@dataclass
class BracketState:
    """Result of i-pair cancellation on a restricted reading word."""
    unpaired_close: List[Hashable]
    unpaired_open: List[Hashable]
    pairs: int


def bracket(letters: Sequence[Tuple[Hashable, int]], i: int) -> BracketState:
    """Cancel each i+1 ('(') against the next free i (')') in one left-to-right pass."""
    open_stack: List[Hashable] = []
    unpaired_close: List[Hashable] = []
    pairs = 0
    for location, letter in letters:
        if letter == i + 1:
            open_stack.append(location)
        elif letter == i:
            if open_stack:
                open_stack.pop()
                pairs += 1
            else:
                unpaired_close.append(location)
    return BracketState(unpaired_close, open_stack, pairs)


# --- tableaux ---------------------------------------------------------------

def _tableau_letters(tableau: Tableau, i: int) -> List[Tuple[Hashable, int]]:
    return [(cell, v) for cell, v in zip(reading_positions(tableau), reading_word(tableau)) if v in (i, i + 1)]


def _replace_entry(tableau: Tableau, cell, value: int) -> Tableau:
    rows = [list(row) for row in tableau.rows]
    rows[cell.row - 1][cell.col - 1] = value
    return Tableau(rows)


def f_tableau(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Lowering operator: the i of the rightmost unpaired ')' becomes i+1."""
    state = bracket(_tableau_letters(tableau, i), i)
    if not state.unpaired_close:
        return None
    return _replace_entry(tableau, state.unpaired_close[-1], i + 1)


def e_tableau(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Raising operator: the i+1 of the leftmost unpaired '(' becomes i."""
    state = bracket(_tableau_letters(tableau, i), i)
    if not state.unpaired_open:
        return None
    return _replace_entry(tableau, state.unpaired_open[0], i)


# --- Burge arrays -----------------------------------------------------------

TOP = 'top'
BOTTOM = 'bottom'


def burge_reading_letters(array: BurgeArray, i: int) -> List[Tuple[Tuple[int, str], int]]:
    """Letters of the i-th reading word of a Burge array, tagged with (column, row).

    The leftmost top-row i+1 leads when it sits in the first column or its bottom
    entry is weakly above the previous one; everything else is read column by
    column. A column [i+1, i] is always that leading column.
    """
    top, bottom = array.top, array.bottom
    lead = next((k for k, a in enumerate(top) if a == i + 1), None)
    if lead is not None and not (lead == 0 or bottom[lead - 1] <= bottom[lead]):
        lead = None
    letters = []
    if lead is not None:
        letters.append(((lead, TOP), i + 1))
    for k, (a, b) in enumerate(array.columns):
        if b in (i, i + 1):
            letters.append(((k, BOTTOM), b))
        if a in (i, i + 1) and k != lead:
            letters.append(((k, TOP), a))
    return letters


def burge_reading_word(array: BurgeArray, i: int) -> Tuple[int, ...]:
    return tuple(letter for _, letter in burge_reading_letters(array, i))


def _require_pv_free(array: BurgeArray) -> None:
    if not is_pv_free(array):
        raise ValueError(f"crystal operators are only defined on PV-free arrays: {array.label()}")


def _run_start(bottom: Sequence[int], end: int) -> int:
    """Smallest l with b_l <= b_{l+1} <= ... <= b_end."""
    start = end
    while start > 0 and bottom[start - 1] <= bottom[start]:
        start -= 1
    return start


def f_burge(array: BurgeArray, i: int) -> Optional[BurgeArray]:
    _require_pv_free(array)
    state = bracket(burge_reading_letters(array, i), i)
    if not state.unpaired_close:
        return None
    k, row = state.unpaired_close[-1]
    top, bottom = list(array.top), list(array.bottom)
    if row == BOTTOM and top[k] == i + 1:
        if k == 0:
            raise ValueError("column [i+1, i] in first position cannot hold an unpaired i")
        ell = _run_start(bottom, k - 1)
        m = max(s for s in range(ell, k + 1) if bottom[s] < array.top[ell])
        old_top, old_bottom = array.top, array.bottom
        for s in range(ell, k - 1):
            top[s] = old_top[s + 1]
        top[k - 1] = i + 1
        bottom[m] = old_top[ell]
        bottom[k] = old_bottom[m]
    elif row == BOTTOM:
        bottom[k] = i + 1
    else:
        top[k] = i + 1
    return BurgeArray.from_rows(top, bottom)


def e_burge(array: BurgeArray, i: int) -> Optional[BurgeArray]:
    _require_pv_free(array)
    state = bracket(burge_reading_letters(array, i), i)
    if not state.unpaired_open:
        return None
    k, row = state.unpaired_open[0]
    top, bottom = list(array.top), list(array.bottom)
    if row == TOP and k > 0 and array.top[k - 1] == i + 1:
        return _undo_exchange(array, k, i)
    if row == TOP:
        top[k] = i
    else:
        bottom[k] = i
    return BurgeArray.from_rows(top, bottom)


def _undo_exchange(array: BurgeArray, k: int, i: int) -> BurgeArray:
    """Preimage of the column exchange f_i makes at a [i+1, i] column k.

    f_i overwrites b_m with a_l, so the run b_l <= ... <= b_{k-1} it started
    from can reach further left in the lowered array. Each exchange column m is
    undone in turn; l is the run start of the restored bottom row, and the
    candidate that f_i maps back onto the array is the answer.
    """
    top, bottom = array.top, array.bottom
    for m in range(k):
        if bottom[m] <= bottom[k]:
            continue
        old_bottom = list(bottom)
        old_bottom[m] = bottom[k]
        old_bottom[k] = i
        ell = _run_start(old_bottom, k - 1)
        if ell > m:
            continue
        old_top = list(top)
        old_top[ell] = bottom[m]
        for s in range(ell + 1, k):
            old_top[s] = top[s - 1]
        try:
            candidate = BurgeArray.from_rows(old_top, old_bottom)
            if f_burge(candidate, i) == array:
                return candidate
        except ValueError:
            continue
    raise ValueError(f"no column to exchange with while raising {array.label()} at {i}")


def burge_weight(array: BurgeArray, m: int) -> Tuple[int, ...]:
    counts = [0] * m
    for v in array.top + array.bottom:
        if v > m:
            raise ValueError(f"entry {v} exceeds the letter bound {m}")
        counts[v - 1] += 1
    return tuple(counts)


def tableau_weight(tableau: Tableau, m: int) -> Tuple[int, ...]:
    counts = [0] * m
    for row in tableau.rows:
        for v in row:
            if v > m:
                raise ValueError(f"entry {v} exceeds the letter bound {m}")
            counts[v - 1] += 1
    return tuple(counts)


def is_star_from_one(array: BurgeArray) -> bool:
    """Columns are exactly (2,1), (3,1), ..., (k+1,1): a star centred at 1 up to singletons."""
    return array.columns == tuple((v, 1) for v in range(2, len(array) + 2))


# --- operator families --------------------------------------------------------

class CrystalFamily:
    """Operators, weight and serialization for one kind of crystal element."""
    name = "abstract"

    def f(self, x, i: int):
        raise NotImplementedError

    def e(self, x, i: int):
        raise NotImplementedError

    def weight(self, x, m: int) -> Tuple[int, ...]:
        raise NotImplementedError

    def key(self, x):
        raise NotImplementedError

    def label(self, x) -> str:
        raise NotImplementedError

    def to_json(self, x) -> Any:
        return x.to_json()

    def highest_weight_seed(self, shape: Partition, m: int):
        raise NotImplementedError


class TableauCrystal(CrystalFamily):
    name = "tableaux"

    def f(self, x: Tableau, i: int) -> Optional[Tableau]:
        return f_tableau(x, i)

    def e(self, x: Tableau, i: int) -> Optional[Tableau]:
        return e_tableau(x, i)

    def weight(self, x: Tableau, m: int) -> Tuple[int, ...]:
        return tableau_weight(x, m)

    def key(self, x: Tableau):
        return x.rows

    def label(self, x: Tableau) -> str:
        sep = '' if x.max_entry < 10 else ','
        return '/'.join(sep.join(map(str, row)) for row in x.rows)

    def highest_weight_seed(self, shape: Partition, m: int) -> Tableau:
        if shape.length > m:
            raise ValueError(f"shape {shape} has more than {m} rows")
        return highest_weight_tableau(shape)


class BurgeCrystal(CrystalFamily):
    name = "arrays"

    def f(self, x: BurgeArray, i: int) -> Optional[BurgeArray]:
        return f_burge(x, i)

    def e(self, x: BurgeArray, i: int) -> Optional[BurgeArray]:
        return e_burge(x, i)

    def weight(self, x: BurgeArray, m: int) -> Tuple[int, ...]:
        return burge_weight(x, m)

    def key(self, x: BurgeArray):
        return (x.top, x.bottom)

    def label(self, x: BurgeArray) -> str:
        return x.label()

    def highest_weight_seed(self, shape: Partition, m: int) -> BurgeArray:
        """Star centred at 1 whose shape is the hook (k, 1^k)."""
        k = shape.part(1)
        if k == 0:
            return BurgeArray()
        if not is_hook(shape) or shape.length != k + 1:
            raise ValueError(f"Burge crystals exist only for threshold hooks (k,1^k), got {shape}")
        if k + 1 > m:
            raise ValueError(f"shape {shape} needs {k + 1} letters but only {m} are allowed")
        return BurgeArray(tuple((v, 1) for v in range(2, k + 2)))


TABLEAUX = TableauCrystal()
ARRAYS = BurgeCrystal()


def family_for(x) -> CrystalFamily:
    if isinstance(x, Tableau):
        return TABLEAUX
    if isinstance(x, BurgeArray):
        return ARRAYS
    raise ValueError(f"no crystal structure for {type(x).__name__}")


# --- crystal graphs -----------------------------------------------------------

@dataclass
class CrystalGraph:
    vertices: List[Any]
    edges: List[Tuple[int, int, int]]
    weights: List[Tuple[int, ...]]
    max_label: int
    family: CrystalFamily = field(default=ARRAYS, repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    def index(self) -> Dict[Any, int]:
        return {self.family.key(v): idx for idx, v in enumerate(self.vertices)}

    def labels(self) -> range:
        return range(1, self.max_label)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for idx, w in enumerate(self.weights):
            g.add_node(idx, weight=tuple(w))
        for src, dst, i in self.edges:
            g.add_edge(src, dst, label=i)
        return g

    def components(self) -> List[List[int]]:
        return sorted(sorted(c) for c in nx.weakly_connected_components(self.to_networkx()))

    def relabel_edge(self, position: int, label: int) -> 'CrystalGraph':
        """Copy with one edge's label replaced; used to corrupt graphs on purpose."""
        edges = list(self.edges)
        src, dst, _ = edges[position]
        edges[position] = (src, dst, label)
        return CrystalGraph(list(self.vertices), edges, list(self.weights), self.max_label, self.family)

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertices": [self.family.to_json(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "weights": [list(w) for w in self.weights],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=plaintext];"]
        for idx, v in enumerate(self.vertices):
            lines.append(f'  n{idx} [label="{self.family.label(v)}"];')
        for src, dst, i in self.edges:
            color = EDGE_COLORS[(i - 1) % len(EDGE_COLORS)]
            lines.append(f'  n{src} -> n{dst} [label="{i}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def generate_crystal(seeds: Sequence[Any], max_label: int, ops: Sequence[str] = ('f', 'e'),
                     family: Optional[CrystalFamily] = None) -> CrystalGraph:
    """Breadth-first closure of the seeds under f_i / e_i for 1 <= i < max_label.

    Each BFS level is sorted by key, so vertex numbering does not depend on
    operator evaluation order.
    """
    if not seeds:
        return CrystalGraph([], [], [], max_label, family or ARRAYS)
    family = family or family_for(seeds[0])
    unknown = set(ops) - {'f', 'e'}
    if unknown:
        raise ValueError(f"unknown crystal operators: {sorted(unknown)}")
    index: Dict[Any, int] = {}
    vertices: List[Any] = []
    level = sorted({family.key(s): s for s in seeds}.items())
    while level:
        for key, x in level:
            index[key] = len(vertices)
            vertices.append(x)
        found = {}
        for _, x in level:
            for i in range(1, max_label):
                for op in ops:
                    y = family.f(x, i) if op == 'f' else family.e(x, i)
                    if y is not None:
                        key = family.key(y)
                        if key not in index and key not in found:
                            found[key] = y
        level = sorted(found.items())
    edges = []
    for src, x in enumerate(vertices):
        for i in range(1, max_label):
            y = family.f(x, i)
            if y is not None and family.key(y) in index:
                edges.append((src, index[family.key(y)], i))
    weights = [family.weight(x, max_label) for x in vertices]
    logger.info(f"Generated {family.name} crystal with {len(vertices)} vertices and {len(edges)} edges")
    return CrystalGraph(vertices, sorted(edges), weights, max_label, family)


def crystal_for_shape(shape: Partition, max_label: int, family: CrystalFamily) -> CrystalGraph:
    """The connected crystal generated by the highest weight element of `shape`."""
    return generate_crystal([family.highest_weight_seed(shape, max_label)], max_label, family=family)


def is_highest_weight(x, m: int) -> bool:
    family = family_for(x)
    return all(family.e(x, i) is None for i in range(1, m))


def raise_to_highest_weight(x, m: int):
    family = family_for(x)
    current = x
    while True:
        step = next((y for y in (family.e(current, i) for i in range(1, m)) if y is not None), None)
        if step is None:
            return current
        current = step


def is_extremal(x, m: int) -> bool:
    """Every i-string is entered at an end and the weight permutes the highest weight."""
    family = family_for(x)
    for i in range(1, m):
        if family.f(x, i) is not None and family.e(x, i) is not None:
            return False
    top = raise_to_highest_weight(x, m)
    return sorted(family.weight(x, m)) == sorted(family.weight(top, m))


def epsilon(x, i: int) -> int:
    family = family_for(x)
    count = 0
    while (x := family.e(x, i)) is not None:
        count += 1
    return count


def phi(x, i: int) -> int:
    family = family_for(x)
    count = 0
    while (x := family.f(x, i)) is not None:
        count += 1
    return count


# --- Stembridge axioms ----------------------------------------------------------

@dataclass
class StembridgeReport:
    vertices: int
    edges: int
    max_label: int
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict[str, Any]:
        return {
            "axioms": AXIOMS,
            "vertices": self.vertices,
            "edges": self.edges,
            "max_label": self.max_label,
            "ok": self.ok,
            "violations": self.violations,
        }


class _GraphOperators:
    """f/e/epsilon/phi read off the edges of a finite crystal graph."""

    def __init__(self, crystal: CrystalGraph, report: StembridgeReport):
        self.down: Dict[Tuple[int, int], int] = {}
        self.up: Dict[Tuple[int, int], int] = {}
        self.size = len(crystal.vertices)
        for src, dst, i in crystal.edges:
            if (src, i) in self.down:
                report.violations.append(_violation("P1", src, (i,), f"two outgoing {i}-edges"))
            if (dst, i) in self.up:
                report.violations.append(_violation("P1", dst, (i,), f"two incoming {i}-edges"))
            self.down[(src, i)] = dst
            self.up[(dst, i)] = src
        self._eps: Dict[Tuple[int, int], int] = {}
        self._phi: Dict[Tuple[int, int], int] = {}

    def f(self, x: Optional[int], i: int) -> Optional[int]:
        return None if x is None else self.down.get((x, i))

    def e(self, x: Optional[int], i: int) -> Optional[int]:
        return None if x is None else self.up.get((x, i))

    def _walk(self, x: int, i: int, step: Callable[[int, int], Optional[int]]) -> Optional[int]:
        count = 0
        while (x := step(x, i)) is not None:
            count += 1
            if count > self.size:
                return None
        return count

    def eps(self, x: int, i: int) -> Optional[int]:
        if (x, i) not in self._eps:
            self._eps[(x, i)] = self._walk(x, i, self.e)
        return self._eps[(x, i)]

    def phi(self, x: int, i: int) -> Optional[int]:
        if (x, i) not in self._phi:
            self._phi[(x, i)] = self._walk(x, i, self.f)
        return self._phi[(x, i)]

    def delta_up(self, x: int, i: int, j: int) -> int:
        """Delta_i delta(x, j) = epsilon_j(x) - epsilon_j(e_i x)."""
        return self.eps(x, j) - self.eps(self.e(x, i), j)

    def phi_up(self, x: int, i: int, j: int) -> int:
        """Delta_i phi(x, j) = phi_j(e_i x) - phi_j(x)."""
        return self.phi(self.e(x, i), j) - self.phi(x, j)

    def nabla_phi(self, x: int, i: int, j: int) -> int:
        """Nabla_i phi(x, j) = phi_j(x) - phi_j(f_i x)."""
        return self.phi(x, j) - self.phi(self.f(x, i), j)


def _violation(axiom: str, vertex: int, labels: Tuple[int, ...], detail: str) -> Dict[str, Any]:
    return {"axiom": axiom, "vertex": vertex, "labels": list(labels), "detail": detail}


def _cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def check_stembridge(crystal: CrystalGraph) -> StembridgeReport:
    """Check the Kashiwara basics and the Stembridge local axioms; violations are data."""
    report = StembridgeReport(len(crystal.vertices), len(crystal.edges), crystal.max_label)
    ops = _GraphOperators(crystal, report)
    labels = list(crystal.labels())
    weights = crystal.weights

    for x in range(len(crystal.vertices)):
        for i in labels:
            if ops.eps(x, i) is None or ops.phi(x, i) is None:
                report.violations.append(_violation("P1", x, (i,), "cyclic i-string"))
    if report.violations:
        return report

    for src, dst, i in crystal.edges:
        expected = list(weights[src])
        expected[i - 1] -= 1
        expected[i] += 1
        if tuple(weights[dst]) != tuple(expected):
            report.violations.append(_violation("P2", src, (i,), f"f_{i} does not move one {i} to {i + 1}"))

    for x in range(len(crystal.vertices)):
        w = weights[x]
        for i in labels:
            if ops.phi(x, i) - ops.eps(x, i) != w[i - 1] - w[i]:
                report.violations.append(_violation("P2", x, (i,), "string length disagrees with weight"))
        for i in labels:
            for j in labels:
                if i == j:
                    continue
                _check_raising_pair(ops, report, x, i, j)
                _check_lowering_pair(ops, report, x, i, j)

    logger.info(f"Stembridge check: {len(report.violations)} violations on {report.vertices} vertices")
    return report


def _check_raising_pair(ops: _GraphOperators, report: StembridgeReport, x: int, i: int, j: int) -> None:
    if ops.e(x, i) is None:
        return
    d_delta = ops.delta_up(x, i, j)
    d_phi = ops.phi_up(x, i, j)
    if d_delta + d_phi != _cartan(i, j):
        report.violations.append(_violation("P3", x, (i, j), f"sum {d_delta + d_phi} != {_cartan(i, j)}"))
    if d_delta > 0 or d_phi > 0:
        report.violations.append(_violation("P4", x, (i, j), f"increments ({d_delta}, {d_phi})"))
    if ops.e(x, j) is None:
        return
    other = ops.delta_up(x, j, i)
    if d_delta == 0:
        y = ops.e(ops.e(x, j), i)
        if y is None or y != ops.e(ops.e(x, i), j):
            report.violations.append(_violation("P5", x, (i, j), "e_i e_j x != e_j e_i x"))
        elif ops.nabla_phi(y, j, i) != 0:
            report.violations.append(_violation("P5", x, (i, j), "Nabla_j phi(y, i) != 0"))
    elif d_delta == -1 and other == -1:
        y = ops.e(ops.e(ops.e(ops.e(x, i), j), j), i)
        z = ops.e(ops.e(ops.e(ops.e(x, j), i), i), j)
        if y is None or y != z:
            report.violations.append(_violation("P6", x, (i, j), "e_i e_j^2 e_i x != e_j e_i^2 e_j x"))
        elif ops.nabla_phi(y, i, j) != -1 or ops.nabla_phi(y, j, i) != -1:
            report.violations.append(_violation("P6", x, (i, j), "Nabla phi at y is not -1"))


def _check_lowering_pair(ops: _GraphOperators, report: StembridgeReport, x: int, i: int, j: int) -> None:
    if ops.f(x, i) is None or ops.f(x, j) is None:
        return
    forward = ops.nabla_phi(x, i, j)
    backward = ops.nabla_phi(x, j, i)
    if forward == 0:
        y = ops.f(ops.f(x, j), i)
        if y is None or y != ops.f(ops.f(x, i), j):
            report.violations.append(_violation("P5'", x, (i, j), "f_i f_j x != f_j f_i x"))
        elif ops.e(y, j) is not None and ops.delta_up(y, j, i) != 0:
            report.violations.append(_violation("P5'", x, (i, j), "Delta_j delta(y, i) != 0"))
    elif forward == -1 and backward == -1:
        y = ops.f(ops.f(ops.f(ops.f(x, i), j), j), i)
        z = ops.f(ops.f(ops.f(ops.f(x, j), i), i), j)
        if y is None or y != z:
            report.violations.append(_violation("P6'", x, (i, j), "f_i f_j^2 f_i x != f_j f_i^2 f_j x"))
        elif ops.delta_up(y, i, j) != -1 or ops.delta_up(y, j, i) != -1:
            report.violations.append(_violation("P6'", x, (i, j), "Delta delta at y is not -1"))


# --- isomorphism ----------------------------------------------------------------

def crystal_isomorphic(first: CrystalGraph, second: CrystalGraph) -> Optional[Dict[int, int]]:
    """Vertex bijection preserving weights and labelled edges, or None."""
    if len(first) != len(second) or len(first.edges) != len(second.edges):
        return None
    matcher = DiGraphMatcher(
        first.to_networkx(),
        second.to_networkx(),
        node_match=lambda u, v: u["weight"] == v["weight"],
        edge_match=lambda u, v: u["label"] == v["label"],
    )
    if not matcher.is_isomorphic():
        return None
    return dict(sorted(matcher.mapping.items()))
