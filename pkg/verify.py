"""Exhaustive verification harness for the Burge correspondence, the hook-graph
characterization and the crystal structure on PV-free arrays.

Every suite is deterministic: objects are enumerated in a fixed order and
failures are reported in the order they are found.
"""
import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from burge import content, decode, encode, standardize_burge_array
from crystal import (ARRAYS, TABLEAUX, bracket, burge_reading_letters, burge_reading_word, check_stembridge,
                     crystal_for_shape, crystal_isomorphic, e_burge, e_tableau, f_burge, f_tableau,
                     generate_crystal, is_extremal, is_highest_weight, is_star_from_one)
from graph import (BurgeArray, SimpleGraph, degree_sequence, enumerate_graphs, from_burge_array,
                   has_redundant_edges, is_connected_ignoring_singletons, is_forest, is_graphic,
                   is_threshold_graph, star, to_burge_array)
from partition import (Partition, dominates, hook, is_hook, is_threshold, largest_hook, partitions,
                       threshold_partitions)
from pvfree import find_peak, find_valley, is_pv_free, longest_pv_free_subarray, subarray
from tableau import (Tableau, enumerate_tableaux, highest_weight_tableau, insert, knuth_equivalent,
                     longest_weakly_increasing, reading_word, restricted_reading_word, reverse_bump,
                     schensted_p, standardize_tableau, standardize_word)

logger = logging.getLogger(__name__)

LITTLEWOOD_CAP = 6
HOOK_CHARACTERIZATION_CAP = 7
MAX_REPORTED_FAILURES = 10
MUTATIONS = ("no-peak", "no-valley")

SAMPLE_GRAPH = SimpleGraph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4)])
SAMPLE_ARRAY = BurgeArray.from_rows([2, 3, 3, 4], [1, 2, 1, 2])
SAMPLE_TABLEAU = Tableau([[1, 1, 2], [2, 2], [3, 3], [4]])
NON_HOOK_TREE = BurgeArray.from_rows([2, 4, 4], [1, 3, 2])
PV_FREE_PATH = BurgeArray.from_rows([4, 5, 6, 7], [1, 3, 5, 2])
LONG_ARRAY = BurgeArray.from_rows([4, 8, 8, 9, 9], [1, 3, 2, 5, 2])
LONG_TABLEAU = Tableau([[1, 2, 2], [3, 5, 9], [4, 8], [8, 9]])
CRYSTAL_ARRAY = BurgeArray.from_rows([2, 3, 4], [1, 2, 3])
DELETION_PARENT = BurgeArray.from_rows([3, 4, 5, 5], [1, 2, 3, 1])


@dataclass
class VerifyConfig:
    max_n: int = 5
    star_max_n: int = 7
    littlewood_max_n: int = 5
    tableau_max_cells: int = 8
    tableau_max_entry: int = 6
    crystal_max_letter: int = 5
    graphic_max_length: int = 6
    graphic_max_entry: int = 5
    workers: int = 1
    mutation: Optional[str] = None
    fast: bool = False

    def __post_init__(self):
        if not 1 <= self.max_n <= HOOK_CHARACTERIZATION_CAP:
            raise ValueError(f"max_n must be between 1 and {HOOK_CHARACTERIZATION_CAP}, got {self.max_n}")
        if not 1 <= self.littlewood_max_n <= LITTLEWOOD_CAP:
            raise ValueError(f"littlewood_max_n must be between 1 and {LITTLEWOOD_CAP}")
        if self.crystal_max_letter < 2:
            raise ValueError("crystal_max_letter must be at least 2")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.mutation is not None and self.mutation not in MUTATIONS:
            raise ValueError(f"unknown mutation {self.mutation!r}; choose from {', '.join(MUTATIONS)}")

    @property
    def validate(self) -> bool:
        return not self.fast


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failure_count: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, condition: bool, message: str) -> bool:
        self.checked += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(message)
            logger.debug(f"[{self.name}] failed: {message}")
        return bool(condition)

    def add(self, checked: int, failures: Sequence[str]) -> None:
        """Fold in a batch of `checked` checks run elsewhere."""
        self.checked += checked
        self.failure_count += len(failures)
        room = MAX_REPORTED_FAILURES - len(self.failures)
        self.failures.extend(failures[:max(room, 0)])

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }
        if timings:
            data["seconds"] = round(self.seconds, 4)
        return data


@dataclass
class VerifyReport:
    config: VerifyConfig
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "config": asdict(self.config),
            "suites": [s.to_json(timings) for s in self.suites],
        }


@dataclass
class HookCharacterizationReport:
    n: int
    graphs: int
    counterexamples: List[Dict[str, Any]]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


# --- oracles ------------------------------------------------------------------

def schur_polynomial(lam: Partition, n: int) -> Counter:
    """Monomials of s_lam(x_1..x_n) as exponent vector -> coefficient."""
    if n < 1:
        raise ValueError(f"variable count must be positive, got {n}")
    monomials: Counter = Counter()
    for tableau in enumerate_tableaux(lam, n):
        counts = [0] * n
        for row in tableau.rows:
            for v in row:
                counts[v - 1] += 1
        monomials[tuple(counts)] += 1
    return monomials


def threshold_partitions_filtered(size: int) -> List[Partition]:
    """Threshold partitions of `size` by filtering every partition."""
    return sorted((lam for lam in partitions(size) if is_threshold(lam)), key=lambda p: p.parts, reverse=True)


def littlewood_check(n: int, cap: int = LITTLEWOOD_CAP) -> bool:
    """Degree sequences of all graphs on [n] versus the sum of threshold Schur polynomials."""
    if not 1 <= n <= cap:
        raise ValueError(f"littlewood_check needs 1 <= n <= {cap}, got {n}")
    graphs = Counter(degree_sequence(g) for g in enumerate_graphs(n, cap=cap))
    schur_sum: Counter = Counter()
    for size in range(0, n * (n - 1) + 1, 2):
        for lam in threshold_partitions(size):
            if lam.length <= n:
                schur_sum.update(schur_polynomial(lam, n))
    logger.info(f"Littlewood n={n}: {sum(graphs.values())} graphs, {len(schur_sum)} monomials")
    return graphs == schur_sum


def hook_characterization_exhaustive(n: int, pv_test: Callable[[BurgeArray], bool] = is_pv_free,
                                     validate: bool = True) -> HookCharacterizationReport:
    """Compare PV-freeness with hook shape on every graph on [n]."""
    if not 0 <= n <= HOOK_CHARACTERIZATION_CAP:
        raise ValueError(f"hook characterization is capped at n={HOOK_CHARACTERIZATION_CAP}, got {n}")
    graphs = 0
    counterexamples = []
    for g in enumerate_graphs(n, cap=HOOK_CHARACTERIZATION_CAP):
        graphs += 1
        array = to_burge_array(g)
        if pv_test(array) != is_hook(encode(array, validate=validate).shape):
            counterexamples.append(g.to_json())
    logger.info(f"Hook characterization n={n}: {graphs} graphs, {len(counterexamples)} counterexamples")
    return HookCharacterizationReport(n, graphs, counterexamples)


def erdos_gallai_oracle(degrees: Sequence[int]) -> bool:
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    d = np.sort(np.asarray(degrees, dtype=np.int64))[::-1]
    if d.sum() % 2:
        return False
    prefix = np.cumsum(d)
    for k in range(1, len(d) + 1):
        if prefix[k - 1] > k * (k - 1) + np.minimum(d[k:], k).sum():
            return False
    return True


# --- enumeration helpers -----------------------------------------------------------

def _arrays(n: int) -> Iterator[Tuple[SimpleGraph, BurgeArray]]:
    for g in enumerate_graphs(n):
        yield g, to_burge_array(g)


def _pv_free_arrays(n: int) -> List[BurgeArray]:
    return [a for _, a in _arrays(n) if is_pv_free(a)]


def _threshold_shapes(max_cells: int, max_rows: int) -> List[Partition]:
    return [lam for size in range(0, max_cells + 1, 2) for lam in threshold_partitions(size) if lam.length <= max_rows]


def _mutated_pv_test(mutation: Optional[str]) -> Callable[[BurgeArray], bool]:
    if mutation == "no-peak":
        return lambda a: find_valley(a) is None
    if mutation == "no-valley":
        return lambda a: find_peak(a) is None
    return is_pv_free


# --- suites --------------------------------------------------------------------

def suite_burge_examples(config: VerifyConfig, result: SuiteResult) -> None:
    check = result.check
    check(to_burge_array(SAMPLE_GRAPH) == SAMPLE_ARRAY, "sample graph Burge array")
    check(encode(SAMPLE_ARRAY) == SAMPLE_TABLEAU, "sample graph tableau")
    check(decode(SAMPLE_TABLEAU) == SAMPLE_ARRAY, "sample tableau decodes back")
    check(SAMPLE_TABLEAU.shape == Partition((3, 2, 2, 1)), "sample shape is (3,2,2,1)")
    check(find_peak(NON_HOOK_TREE) == (1, 2, 3), "tree array peak at (1,2,3)")
    check(find_valley(NON_HOOK_TREE) is None, "tree array has no valley")
    check(encode(NON_HOOK_TREE).shape == Partition((2, 2, 2)), "tree shape is (2,2,2)")
    check(is_pv_free(PV_FREE_PATH), "minimal-j regression array is PV-free")
    check(find_peak(SAMPLE_ARRAY) is not None and find_valley(SAMPLE_ARRAY) is not None,
          "sample array has both a peak and a valley")
    check(encode(LONG_ARRAY) == LONG_TABLEAU, "five-column array tableau")
    check(LONG_TABLEAU.shape == Partition((3, 3, 2, 2)), "five-column shape is (3,3,2,2)")
    check(is_pv_free(subarray(LONG_ARRAY, (0, 1, 3, 4))), "four-column subsequence is PV-free")
    check(longest_pv_free_subarray(LONG_ARRAY) == 4, "longest PV-free subsequence has 4 columns")
    check(largest_hook(LONG_TABLEAU.shape) == Partition((3, 1, 1, 1)), "largest hook in (3,3,2,2)")
    check(standardize_burge_array(SAMPLE_ARRAY, range(1, 9)) == BurgeArray.from_rows([3, 6, 7, 8], [1, 4, 2, 5]),
          "sample array standardization")
    lowered = BurgeArray.from_rows([3, 3, 4], [2, 1, 3])
    check(burge_reading_word(lowered, 1) == (2, 1), "reading word R_1 = 21")
    check(burge_reading_word(lowered, 2) == (3, 2, 3, 3), "reading word R_2 = 3233")
    check(burge_reading_word(lowered, 3) == (4, 3, 3, 3), "reading word R_3 = 4333")
    check(burge_reading_word(BurgeArray.from_rows([3, 4], [2, 1]), 3) == (3, 4), "reading word R_3 = 34")
    check(f_burge(CRYSTAL_ARRAY, 2) == lowered, "f_2 example")
    check(f_burge(CRYSTAL_ARRAY, 3) == BurgeArray.from_rows([3, 4, 4], [2, 2, 1]), "f_3 example")
    check(e_burge(lowered, 2) == CRYSTAL_ARRAY, "e_2 inverts f_2 example")
    check(e_burge(BurgeArray.from_rows([3, 4, 4], [2, 2, 1]), 3) == CRYSTAL_ARRAY, "e_3 inverts f_3 example")


def suite_graph_round_trip(config: VerifyConfig, result: SuiteResult) -> None:
    for g, array in _arrays(config.max_n):
        tableau = encode(array, validate=config.validate)
        result.check(decode(tableau) == array, f"decode(encode) differs for {array.label()}")
        result.check(from_burge_array(array, g.n) == g, f"graph round trip differs for {array.label()}")
        result.check(tableau.size == 2 * g.edge_count, f"tableau size is not twice the edges for {array.label()}")


def suite_tableau_round_trip(config: VerifyConfig, result: SuiteResult) -> None:
    for lam in _threshold_shapes(config.tableau_max_cells, config.tableau_max_entry):
        for tableau in enumerate_tableaux(lam, config.tableau_max_entry):
            try:
                back = encode(decode(tableau), validate=config.validate)
            except ValueError as e:
                result.check(False, f"decode failed on {tableau.rows}: {str(e)}")
                continue
            result.check(back == tableau, f"encode(decode) differs for {tableau.rows}")


def suite_threshold_shapes(config: VerifyConfig, result: SuiteResult) -> None:
    for g, array in _arrays(config.max_n):
        tableau = encode(array, validate=False)
        degrees = degree_sequence(g)
        result.check(is_threshold(tableau.shape), f"shape {tableau.shape} of {array.label()} is not threshold")
        result.check(_weight(tableau, g.n) == degrees,
                     f"tableau weight differs from degrees for {array.label()}")
        letters = content(array)
        result.check(tuple(letters[v] for v in range(1, g.n + 1)) == degrees,
                     f"array content differs from degrees for {array.label()}")
        result.check(dominates(tableau.shape, degrees), f"shape does not dominate degrees for {array.label()}")


def _weight(tableau: Tableau, n: int) -> Tuple[int, ...]:
    counts = Counter(v for row in tableau.rows for v in row)
    return tuple(counts.get(v, 0) for v in range(1, n + 1))


def suite_hook_characterization(config: VerifyConfig, result: SuiteResult) -> None:
    pv_test = _mutated_pv_test(config.mutation)
    for n in range(1, config.max_n + 1):
        report = hook_characterization_exhaustive(n, pv_test=pv_test, validate=config.validate)
        result.add(report.graphs, [f"n={n}: counterexample {g}" for g in report.counterexamples])


def suite_connected_hooks_are_trees(config: VerifyConfig, result: SuiteResult) -> None:
    for g, array in _arrays(config.max_n):
        if is_connected_ignoring_singletons(g) and is_pv_free(array):
            core = len({v for e in g.edges for v in e})
            result.check(g.edge_count == core - 1 and is_forest(g), f"connected hook-graph {array.label()} is not a tree")


def suite_redundant_edges(config: VerifyConfig, result: SuiteResult) -> None:
    for g, array in _arrays(config.max_n):
        if has_redundant_edges(g):
            result.check(not is_hook(encode(array, validate=False).shape),
                         f"{array.label()} has redundant edges but hook shape")


def suite_star_graphs(config: VerifyConfig, result: SuiteResult) -> None:
    for n in range(1, config.star_max_n + 1):
        for center in range(1, n + 1):
            array = to_burge_array(star(n, center))
            result.check(is_pv_free(array), f"star({n}, {center}) is not PV-free")
            result.check(is_hook(encode(array, validate=False).shape), f"star({n}, {center}) has non-hook shape")


def suite_standardization(config: VerifyConfig, result: SuiteResult) -> None:
    for _, array in _arrays(config.max_n):
        alphabet = range(1, 2 * len(array) + 1)
        left = encode(standardize_burge_array(array, alphabet), validate=config.validate)
        right = standardize_tableau(encode(array, validate=config.validate), alphabet)
        result.check(left == right, f"standardization does not commute with encoding for {array.label()}")


def suite_insertion(config: VerifyConfig, result: SuiteResult) -> None:
    letters = min(config.max_n, 4)
    for length in range(config.max_n + 1):
        for word in product(range(1, letters + 1), repeat=length):
            p = schensted_p(word)
            first_row = len(p.rows[0]) if p.rows else 0
            result.check(longest_weakly_increasing(word) == first_row, f"first row length differs for {word}")
            result.check(knuth_equivalent(word, reading_word(p)), f"{word} not equivalent to its reading word")
            alphabet = range(1, length + 1)
            result.check(schensted_p(standardize_word(word, alphabet)) == standardize_tableau(p, alphabet),
                         f"standardization does not commute with insertion for {word}")
            if length < config.max_n:
                for x in range(1, letters + 1):
                    bumped, cell = insert(p, x)
                    result.check(reverse_bump(bumped, cell) == (p, x), f"reverse bump fails for {word} <- {x}")


def suite_littlewood(config: VerifyConfig, result: SuiteResult) -> None:
    for n in range(1, config.littlewood_max_n + 1):
        result.check(littlewood_check(n), f"Littlewood identity fails for n={n}")
        for size in range(0, n * (n - 1) + 1, 2):
            result.check(threshold_partitions(size) == threshold_partitions_filtered(size),
                         f"threshold partition generators disagree at size {size}")


def suite_graphic_sequences(config: VerifyConfig, result: SuiteResult) -> None:
    for length in range(1, config.graphic_max_length + 1):
        for values in combinations_with_replacement(range(config.graphic_max_entry, -1, -1), length):
            result.check(is_graphic(values) == erdos_gallai_oracle(values), f"graphic test disagrees on {values}")


def suite_pv_subsequences(config: VerifyConfig, result: SuiteResult) -> None:
    """Column deletion keeps the Burge invariants; PV-freeness is not inherited."""
    checked, failures = 0, []
    for array in _pv_free_arrays(min(config.max_n, 5)):
        r = len(array)
        for size in range(r + 1):
            for indices in combinations(range(r), size):
                checked += 1
                try:
                    subarray(array, indices)
                except ValueError as e:
                    failures.append(f"subsequence {indices} of {array.label()} is not a Burge array: {str(e)}")
    result.add(checked, failures)
    result.check(is_pv_free(DELETION_PARENT), f"{DELETION_PARENT.label()} is PV-free")
    result.check(encode(DELETION_PARENT).shape == hook(4), f"{DELETION_PARENT.label()} has shape (4,1,1,1,1)")
    result.check(find_peak(subarray(DELETION_PARENT, (0, 2, 3))) == (1, 2, 3),
                 f"columns (0, 2, 3) of {DELETION_PARENT.label()} should have a peak at (1,2,3)")


def suite_longest_pv_free(config: VerifyConfig, result: SuiteResult) -> None:
    longest = longest_pv_free_subarray(LONG_ARRAY)
    hook_part = largest_hook(encode(LONG_ARRAY).shape)
    result.check(longest == 4, f"longest PV-free subsequence of the five-column array is {longest}")
    result.check(encode(subarray(LONG_ARRAY, (0, 1, 3, 4))).shape == hook(4), "four-column subsequence has shape (4,1,1,1,1)")
    result.check(hook(longest).size > hook_part.size, "longest PV-free subsequence does not beat the largest hook")
    for _, array in _arrays(min(config.max_n, 4)):
        longest = longest_pv_free_subarray(array)
        result.check((longest == len(array)) == is_pv_free(array), f"full-length answer wrong for {array.label()}")
        result.check(longest >= min(len(array), 2), f"two columns are always PV-free ({array.label()})")


def suite_crystal_intertwining(config: VerifyConfig, result: SuiteResult) -> None:
    n = config.max_n
    for array in _pv_free_arrays(n):
        tableau = encode(array)
        for i in range(1, n):
            lowered = f_burge(array, i)
            expected = f_tableau(tableau, i)
            result.check((lowered is None) == (expected is None), f"f_{i} definedness differs on {array.label()}")
            if lowered is not None and expected is not None:
                result.check(encode(lowered) == expected, f"encode(f_{i}) differs on {array.label()}")
                result.check(is_pv_free(lowered), f"f_{i} leaves the PV-free arrays on {array.label()}")
                result.check(e_burge(lowered, i) == array, f"e_{i} does not invert f_{i} on {array.label()}")
            raised = e_burge(array, i)
            expected = e_tableau(tableau, i)
            result.check((raised is None) == (expected is None), f"e_{i} definedness differs on {array.label()}")
            if raised is not None and expected is not None:
                result.check(encode(raised) == expected, f"encode(e_{i}) differs on {array.label()}")


def suite_i_pairs(config: VerifyConfig, result: SuiteResult) -> None:
    n = config.max_n
    for array in _pv_free_arrays(n):
        for i in range(1, n):
            pairs = bracket(burge_reading_letters(array, i), i).pairs
            result.check(pairs <= 1, f"{pairs} i-pairs in R_{i} of {array.label()}")


def suite_knuth_reading_words(config: VerifyConfig, result: SuiteResult) -> None:
    n = min(config.max_n, 5)
    for array in _pv_free_arrays(n):
        tableau = encode(array)
        for i in range(1, n):
            result.check(knuth_equivalent(burge_reading_word(array, i), restricted_reading_word(tableau, i)),
                         f"R_{i} of {array.label()} is not Knuth equivalent to the tableau word")


def suite_highest_weight(config: VerifyConfig, result: SuiteResult) -> None:
    n = config.max_n
    for array in _pv_free_arrays(n):
        top = is_highest_weight(array, n)
        result.check(top == is_star_from_one(array), f"highest weight test wrong for {array.label()}")
        tableau = encode(array)
        result.check(top == (tableau == highest_weight_tableau(tableau.shape)),
                     f"highest weight disagrees with the tableau side for {array.label()}")


def suite_extremal(config: VerifyConfig, result: SuiteResult) -> None:
    m = min(config.max_n, 5)
    for k in range(1, m):
        crystal = crystal_for_shape(hook(k), m, ARRAYS)
        for array in crystal.vertices:
            result.check(is_extremal(array, m) == is_threshold_graph(from_burge_array(array, m)),
                         f"extremal test disagrees with threshold degrees for {array.label()}")


def suite_stembridge(config: VerifyConfig, result: SuiteResult) -> None:
    for m in range(2, config.crystal_max_letter + 1):
        seeds = _pv_free_arrays(m)
        crystal = generate_crystal(seeds, m, family=ARRAYS)
        result.check(len(crystal) == len(seeds), f"m={m}: PV-free arrays are not closed under the operators")
        report = check_stembridge(crystal)
        result.check(report.ok, f"m={m}: {len(report.violations)} axiom violations, first {report.violations[:1]}")
        for k in range(1, m):
            burge_side = crystal_for_shape(hook(k), m, ARRAYS)
            tableau_side = crystal_for_shape(hook(k), m, TABLEAUX)
            mapping = crystal_isomorphic(burge_side, tableau_side)
            if not result.check(mapping is not None, f"m={m}, hook({k}): Burge and tableau crystals differ"):
                continue
            index = tableau_side.index()
            result.check(all(index[encode(burge_side.vertices[u]).rows] == v for u, v in mapping.items()),
                         f"m={m}, hook({k}): isomorphism is not the Burge map")
        if m >= 3 and crystal.edges:
            label = crystal.edges[0][2]
            corrupted = crystal.relabel_edge(0, 1 if label != 1 else 2)
            result.check(not check_stembridge(corrupted).ok, f"m={m}: corrupted edge went undetected")
    tableau_crystal = crystal_for_shape(Partition((2, 1)), 3, TABLEAUX)
    result.check(check_stembridge(tableau_crystal).ok, "tableau crystal of shape (2,1) violates the axioms")


HOOK_CRYSTALS = {
    (2, 1, 1): (15, 18),
    (3, 1, 1, 1): (10, 12),
}


def suite_hook_crystals(config: VerifyConfig, result: SuiteResult) -> None:
    m = 4
    arrays = _pv_free_arrays(m)
    for parts, (vertex_count, edge_count) in HOOK_CRYSTALS.items():
        shape = Partition(parts)
        seeds = [a for a in arrays if encode(a).shape == shape]
        crystal = generate_crystal(seeds, m, family=ARRAYS)
        result.check(len(crystal) == vertex_count, f"{shape}: {len(crystal)} vertices, expected {vertex_count}")
        result.check(len(crystal.edges) == edge_count, f"{shape}: {len(crystal.edges)} edges, expected {edge_count}")
        result.check(len(crystal.components()) == 1, f"{shape}: crystal is not connected")
        per_label = Counter(i for _, _, i in crystal.edges)
        result.check(len(set(per_label.values())) == 1, f"{shape}: uneven edge labels {dict(per_label)}")


SUITES: Dict[str, Callable[[VerifyConfig, SuiteResult], None]] = {
    "burge-examples": suite_burge_examples,
    "graph-round-trip": suite_graph_round_trip,
    "tableau-round-trip": suite_tableau_round_trip,
    "threshold-shapes": suite_threshold_shapes,
    "hook-characterization": suite_hook_characterization,
    "connected-hooks-are-trees": suite_connected_hooks_are_trees,
    "redundant-edges": suite_redundant_edges,
    "star-graphs": suite_star_graphs,
    "standardization": suite_standardization,
    "insertion": suite_insertion,
    "littlewood": suite_littlewood,
    "graphic-sequences": suite_graphic_sequences,
    "pv-subsequences": suite_pv_subsequences,
    "longest-pv-free": suite_longest_pv_free,
    "crystal-intertwining": suite_crystal_intertwining,
    "i-pairs": suite_i_pairs,
    "knuth-reading-words": suite_knuth_reading_words,
    "highest-weight": suite_highest_weight,
    "extremal": suite_extremal,
    "stembridge": suite_stembridge,
    "hook-crystals": suite_hook_crystals,
}


def run_suite(name: str, config: VerifyConfig) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    result = SuiteResult(name)
    logger.info(f"Running suite {name}")
    start = time.perf_counter()
    try:
        SUITES[name](config, result)
    except Exception as e:
        logger.error(f"Suite {name} raised: {str(e)}")
        result.check(False, f"suite raised {type(e).__name__}: {str(e)}")
    result.seconds = time.perf_counter() - start
    logger.info(f"Suite {name}: {result.checked} checks, {result.failure_count} failures in {result.seconds:.2f}s")
    return result


def run_all(config: VerifyConfig, names: Optional[Sequence[str]] = None) -> VerifyReport:
    """Run the selected suites (all by default); results keep declaration order."""
    selected = list(SUITES) if names is None else list(names)
    for name in selected:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda name: run_suite(name, config), selected))
    else:
        results = [run_suite(name, config) for name in selected]
    report = VerifyReport(config, results)
    logger.info(f"Verification {'passed' if report.ok else 'failed'}: "
                f"{sum(not s.ok for s in results)} of {len(results)} suites failing")
    return report
