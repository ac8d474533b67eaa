import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from partition import Partition, dominates, is_threshold, require_int, threshold_partitions

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 7

Edge = Tuple[int, int]


def _canonical_edge(a: int, b: int) -> Edge:
    a, b = require_int(a, "vertex"), require_int(b, "vertex")
    if a == b:
        raise ValueError(f"loops are not allowed: ({a}, {b})")
    return (a, b) if a > b else (b, a)


@dataclass(frozen=True)
class SimpleGraph:
    """Graph on [n]; edges kept as (larger, smaller) pairs."""
    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative: {self.n}")
        edges = frozenset(_canonical_edge(a, b) for a, b in self.edges)
        for a, b in edges:
            if b < 1 or a > self.n:
                raise ValueError(f"edge ({a}, {b}) is outside the vertex set [1..{self.n}]")
        object.__setattr__(self, 'edges', edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> 'SimpleGraph':
        edge_list = [tuple(e) for e in edges]
        canonical = [_canonical_edge(*e) for e in edge_list]
        if len(set(canonical)) != len(canonical):
            raise ValueError("duplicate edges are not allowed")
        return cls(n, frozenset(canonical))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> List[int]:
        return sorted({a if b == v else b for a, b in self.edges if v in (a, b)})

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'SimpleGraph':
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError('graph must be an object with "n" and "edges"')
        edges = data["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise ValueError("graph edges must be a list of [a, b] pairs")
        return cls.from_edges(require_int(data["n"], "vertex count"), edges)


@dataclass(frozen=True)
class BurgeArray:
    """Two-line array of edge columns (a_k, b_k) in Burge order."""
    columns: Tuple[Edge, ...] = ()

    def __post_init__(self):
        columns = tuple((require_int(a, "Burge array entry"), require_int(b, "Burge array entry"))
                        for a, b in self.columns)
        for k, (a, b) in enumerate(columns, start=1):
            if b < 1:
                raise ValueError(f"column {k} has a non-positive entry")
            if a <= b:
                raise ValueError(f"column {k} has a_k <= b_k ({a} <= {b})")
        for k in range(len(columns) - 1):
            (a, b), (a_next, b_next) = columns[k], columns[k + 1]
            if a > a_next:
                raise ValueError(f"top row not weakly increasing at column {k + 1}")
            if a == a_next and b <= b_next:
                raise ValueError(f"bottom row not decreasing under equal top entries at column {k + 1}")
        object.__setattr__(self, 'columns', columns)

    @property
    def top(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def bottom(self) -> Tuple[int, ...]:
        return tuple(b for _, b in self.columns)

    @property
    def max_entry(self) -> int:
        return max(self.top, default=0)

    def __len__(self):
        return len(self.columns)

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[int]) -> 'BurgeArray':
        if len(top) != len(bottom):
            raise ValueError("top and bottom rows have different lengths")
        return cls(tuple(zip(top, bottom)))

    def label(self) -> str:
        """Compact `top/bottom` form, e.g. 234/123."""
        sep = '' if self.max_entry < 10 else ','
        return f"{sep.join(map(str, self.top))}/{sep.join(map(str, self.bottom))}"

    def to_json(self) -> Dict[str, List[int]]:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'BurgeArray':
        if not isinstance(data, dict) or "top" not in data or "bottom" not in data:
            raise ValueError('Burge array must be an object with "top" and "bottom"')
        return cls.from_rows(list(data["top"]), list(data["bottom"]))


def to_burge_array(graph: SimpleGraph) -> BurgeArray:
    """Edges sorted by a ascending, then b descending."""
    return BurgeArray(tuple(sorted(graph.edges, key=lambda e: (e[0], -e[1]))))


def from_burge_array(array: BurgeArray, n: int) -> SimpleGraph:
    if array.max_entry > n:
        raise ValueError(f"Burge array entry {array.max_entry} exceeds vertex count {n}")
    if len(set(array.columns)) != len(array.columns):
        raise ValueError("Burge array repeats an edge")
    return SimpleGraph(n, frozenset(array.columns))


def degree_sequence(graph: SimpleGraph) -> Tuple[int, ...]:
    degrees = [0] * graph.n
    for a, b in graph.edges:
        degrees[a - 1] += 1
        degrees[b - 1] += 1
    return tuple(degrees)


def degree_partition(graph: SimpleGraph) -> Partition:
    return Partition.from_sequence(degree_sequence(graph))


def is_threshold_graph(graph: SimpleGraph) -> bool:
    return is_threshold(degree_partition(graph))


def is_graphic(degrees: Sequence[int]) -> bool:
    """Graphic iff dominated by some threshold partition of the same size."""
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    total = sum(degrees)
    return any(dominates(lam, degrees) for lam in threshold_partitions(total))


def star(n: int, center: int) -> SimpleGraph:
    if n < 1 or not 1 <= center <= n:
        raise ValueError(f"star needs 1 <= center <= n, got center={center}, n={n}")
    return SimpleGraph(n, frozenset(_canonical_edge(center, v) for v in range(1, n + 1) if v != center))


def enumerate_graphs(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[SimpleGraph]:
    """Every simple graph on [n], ordered by the bitmask over lexicographic vertex pairs."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative: {n}")
    if n > cap:
        raise ValueError(f"refusing to enumerate graphs on {n} > {cap} vertices")
    pairs = [(b, a) for a, b in combinations(range(1, n + 1), 2)]
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for bit, p in enumerate(pairs) if mask >> bit & 1))


def non_isolated_vertices(graph: SimpleGraph) -> List[int]:
    return sorted({v for e in graph.edges for v in e})


def is_connected_ignoring_singletons(graph: SimpleGraph) -> bool:
    """Connected once isolated vertices are dropped; false for edgeless graphs."""
    if not graph.edges:
        return False
    return nx.is_connected(graph.to_networkx().subgraph(non_isolated_vertices(graph)))


def is_forest(graph: SimpleGraph) -> bool:
    if graph.n == 0:
        return True
    return nx.is_forest(graph.to_networkx())


def has_redundant_edges(graph: SimpleGraph) -> bool:
    """True when as many edges as there are non-trivial components can be removed
    without changing the component count; such graphs never have hook shape."""
    if not graph.edges:
        return False
    core = graph.to_networkx().subgraph(non_isolated_vertices(graph))
    components = nx.number_connected_components(core)
    cycle_rank = graph.edge_count - core.number_of_nodes() + components
    return cycle_rank >= components
