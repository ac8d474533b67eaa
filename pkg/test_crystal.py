import logging
from collections import Counter

import pytest

from burge import encode
from crystal import (ARRAYS, TABLEAUX, bracket, burge_reading_word, burge_weight, check_stembridge,
                     crystal_for_shape, crystal_isomorphic, e_burge, e_tableau, epsilon, f_burge, f_tableau,
                     generate_crystal, is_extremal, is_highest_weight, phi, raise_to_highest_weight)
from graph import BurgeArray, enumerate_graphs, from_burge_array, is_threshold_graph, to_burge_array
from partition import Partition, partitions
from pvfree import is_pv_free
from tableau import Tableau, enumerate_tableaux, highest_weight_tableau

# Configure logging
logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

PATH_ARRAY = BurgeArray.from_rows([2, 3, 4], [1, 2, 3])
READING_ARRAY = BurgeArray.from_rows([3, 3, 4], [2, 1, 3])


def test_bracket():
    """Each i+1 cancels the next free i to its right."""
    state = bracket([(0, 2), (1, 1), (2, 1)], 1)
    assert state.pairs == 1, "one pair"
    assert state.unpaired_close == [2] and state.unpaired_open == [], "last 1 is free"
    state = bracket([(0, 1), (1, 2)], 1)
    assert state.unpaired_close == [0] and state.unpaired_open == [1], "closes precede opens"


def test_tableau_operators():
    """Lowering and raising on small tableaux."""
    logger.info("Testing tableau crystal operators...")
    assert f_tableau(Tableau([[1, 1]]), 1) == Tableau([[1, 2]]), "rightmost free 1 changes"
    assert f_tableau(Tableau([[1], [2]]), 1) is None, "the 2 pairs the 1"
    assert f_tableau(Tableau([[1, 2], [2]]), 1) is None, "reading word 212 has no free 1"
    assert e_tableau(Tableau([[1, 2]]), 1) == Tableau([[1, 1]]), "inverse of the first example"
    top = highest_weight_tableau(Partition((3, 2, 1)))
    for i in range(1, 5):
        assert e_tableau(top, i) is None, f"highest weight tableau raised by e_{i}"
    logger.info("Tableau operator test passed")


def test_tableau_operators_are_inverse():
    """e(f(T)) = T and f(e(T)) = T for every tableau with at most 6 cells and entries <= 4."""
    for size in range(1, 7):
        for shape in partitions(size):
            for tableau in enumerate_tableaux(shape, 4):
                for i in range(1, 4):
                    lowered = f_tableau(tableau, i)
                    if lowered is not None:
                        assert lowered.shape == tableau.shape, f"f_{i} changed the shape of {tableau}"
                        assert e_tableau(lowered, i) == tableau, f"e_{i} f_{i} != id on {tableau}"
                    raised = e_tableau(tableau, i)
                    if raised is not None:
                        assert f_tableau(raised, i) == tableau, f"f_{i} e_{i} != id on {tableau}"


def test_burge_reading_words():
    """Reading words put the leading top-row i+1 first."""
    assert burge_reading_word(READING_ARRAY, 1) == (2, 1), "i = 1"
    assert burge_reading_word(READING_ARRAY, 2) == (3, 2, 3, 3), "i = 2"
    assert burge_reading_word(READING_ARRAY, 3) == (4, 3, 3, 3), "i = 3 with a leading 4"
    assert burge_reading_word(BurgeArray.from_rows([3, 4], [2, 1]), 3) == (3, 4), "4 after a descent"
    assert burge_reading_word(BurgeArray(), 1) == (), "empty array"


def test_burge_operators():
    """Lowering and raising on Burge arrays, both column cases."""
    logger.info("Testing Burge crystal operators...")
    assert f_burge(PATH_ARRAY, 2) == READING_ARRAY, "f_2 shares a column"
    assert f_burge(PATH_ARRAY, 3) == BurgeArray.from_rows([3, 4, 4], [2, 2, 1]), "f_3 shifts the top row"
    assert f_burge(BurgeArray.from_rows([2, 3], [1, 1]), 3) == BurgeArray.from_rows([2, 4], [1, 1]), "free top 3"
    assert f_burge(BurgeArray.from_rows([2, 3], [1, 1]), 4) is None, "no 4 or 5 present"
    assert e_burge(READING_ARRAY, 2) == PATH_ARRAY, "inverse of f_2"
    assert e_burge(BurgeArray.from_rows([3, 4, 4], [2, 2, 1]), 3) == PATH_ARRAY, "inverse of f_3"
    assert e_burge(BurgeArray.from_rows([2, 3], [1, 2]), 1) == BurgeArray.from_rows([2, 3], [1, 1]), \
        "free 2 in the bottom row"
    assert e_burge(BurgeArray.from_rows([2, 3], [1, 1]), 1) is None, "star from 1 is highest weight"
    with pytest.raises(ValueError, match="PV-free"):
        f_burge(BurgeArray.from_rows([2, 3, 3, 4], [1, 2, 1, 2]), 1)
    with pytest.raises(ValueError, match="PV-free"):
        e_burge(BurgeArray.from_rows([2, 4, 4], [1, 3, 2]), 1)
    logger.info("Burge operator test passed")


def test_raising_through_a_column_exchange():
    """e_i undoes the exchange even when the bottom run reaches past the exchanged column."""
    raised = e_burge(BurgeArray.from_rows([3, 4, 4], [2, 3, 1]), 3)
    assert raised == BurgeArray.from_rows([3, 3, 4], [2, 1, 3]), f"e_3 gave {raised}"
    assert encode(raised) == e_tableau(encode(BurgeArray.from_rows([3, 4, 4], [2, 3, 1])), 3), "tableau side"
    for top, bottom, i in [([3, 4, 4], [2, 3, 1], 3), ([3, 5, 5], [2, 4, 1], 4), ([4, 5, 5], [2, 4, 1], 4),
                           ([3, 4, 4, 5], [2, 3, 1, 4], 3)]:
        array = BurgeArray.from_rows(top, bottom)
        raised = e_burge(array, i)
        assert raised is not None and f_burge(raised, i) == array, f"f_{i} e_{i} != id on {array.label()}"
    assert e_burge(BurgeArray.from_rows([3, 5, 5], [2, 4, 1]), 4) == BurgeArray.from_rows([3, 4, 5], [2, 1, 4]), \
        "e_4 moves the 4 back into the top row"


def test_burge_operators_intertwine_encoding():
    """encode commutes with f_i and e_i on PV-free arrays from graphs on [5]."""
    logger.info("Testing operator intertwining on 5 vertices...")
    for g in enumerate_graphs(5):
        array = to_burge_array(g)
        if not is_pv_free(array):
            continue
        tableau = encode(array)
        for i in range(1, 5):
            lowered = f_burge(array, i)
            expected = f_tableau(tableau, i)
            if lowered is None:
                assert expected is None, f"f_{i} undefined on {array.label()} but defined on its tableau"
            else:
                assert encode(lowered) == expected, f"f_{i} does not intertwine on {array.label()}"
                assert is_pv_free(lowered), f"f_{i} left the PV-free arrays from {array.label()}"
                assert e_burge(lowered, i) == array, f"e_{i} f_{i} != id on {array.label()}"
            raised = e_burge(array, i)
            expected = e_tableau(tableau, i)
            if raised is None:
                assert expected is None, f"e_{i} undefined on {array.label()} but defined on its tableau"
            else:
                assert encode(raised) == expected, f"e_{i} does not intertwine on {array.label()}"
    logger.info("Intertwining test passed")


def test_weights():
    """Weights count letters up to the bound."""
    assert burge_weight(PATH_ARRAY, 4) == (1, 2, 2, 1), "path weight is its degree sequence"
    assert burge_weight(BurgeArray(), 3) == (0, 0, 0), "empty weight"
    with pytest.raises(ValueError, match="exceeds"):
        burge_weight(PATH_ARRAY, 3)


def test_generate_small_crystals():
    """The vector representation of A_1 and generator edge cases."""
    chain = generate_crystal([Tableau([[1]])], 2)
    assert chain.vertices == [Tableau([[1]]), Tableau([[2]])], "two vertices in order"
    assert chain.edges == [(0, 1, 1)], "one edge labelled 1"
    assert chain.weights == [(1, 0), (0, 1)], "weights"
    assert len(generate_crystal([], 3)) == 0, "no seeds, no vertices"
    with pytest.raises(ValueError, match="unknown"):
        generate_crystal([Tableau([[1]])], 2, ops=('g',))
    from_bottom = generate_crystal([Tableau([[2]])], 2, ops=('e',))
    assert from_bottom.vertices == [Tableau([[2]]), Tableau([[1]])], "closure under e only"
    assert chain.to_json() == {"vertices": [[[1]], [[2]]], "edges": [[0, 1, 1]], "weights": [[1, 0], [0, 1]]}, \
        "JSON payload"


def test_hook_crystals():
    """Burge crystals of the hooks (2,1,1) and (3,1,1,1) over {1..4}."""
    logger.info("Testing hook crystals...")
    for shape, vertices, edges in (((2, 1, 1), 15, 18), ((3, 1, 1, 1), 10, 12)):
        crystal = crystal_for_shape(Partition(shape), 4, ARRAYS)
        assert len(crystal) == vertices, f"{shape}: {len(crystal)} vertices"
        assert len(crystal.edges) == edges, f"{shape}: {len(crystal.edges)} edges"
        per_label = Counter(label for _, _, label in crystal.edges)
        assert per_label == {1: edges // 3, 2: edges // 3, 3: edges // 3}, f"{shape}: labels {per_label}"
        assert all(is_pv_free(v) for v in crystal.vertices), f"{shape}: vertex outside the PV-free arrays"
        assert crystal.components() == [list(range(vertices))], f"{shape}: crystal is not connected"
    logger.info("Hook crystal test passed")


def test_crystal_for_shape_errors():
    """Array crystals only exist for threshold hooks that fit the alphabet."""
    assert len(crystal_for_shape(Partition(), 3, ARRAYS)) == 1, "empty shape gives the empty array"
    with pytest.raises(ValueError, match="hooks"):
        crystal_for_shape(Partition((2, 2)), 4, ARRAYS)
    with pytest.raises(ValueError, match="letters"):
        crystal_for_shape(Partition((3, 1, 1, 1)), 3, ARRAYS)
    with pytest.raises(ValueError, match="rows"):
        crystal_for_shape(Partition((1, 1, 1)), 2, TABLEAUX)


def test_stembridge():
    """Generated crystals satisfy the local axioms and corrupted ones do not."""
    logger.info("Testing Stembridge axioms...")
    tableaux = crystal_for_shape(Partition((2, 1)), 3, TABLEAUX)
    report = check_stembridge(tableaux)
    assert report.ok, f"tableau crystal violations: {report.violations}"
    arrays = crystal_for_shape(Partition((2, 1, 1)), 4, ARRAYS)
    assert check_stembridge(arrays).ok, "array crystal of (2,1,1)"
    assert check_stembridge(crystal_for_shape(Partition((3, 1, 1, 1)), 4, ARRAYS)).ok, "array crystal of (3,1,1,1)"
    src, dst, label = tableaux.edges[0]
    broken = check_stembridge(tableaux.relabel_edge(0, 3 - label))
    assert not broken.ok, "relabelled edge went unnoticed"
    assert any(v["axiom"] == "P2" for v in broken.violations), "weight axiom should catch the relabelled edge"
    assert broken.to_json()["ok"] is False, "report payload"
    logger.info("Stembridge test passed")


def test_crystal_isomorphism():
    """The array crystal matches the tableau crystal through encode."""
    arrays = crystal_for_shape(Partition((2, 1, 1)), 4, ARRAYS)
    tableaux = crystal_for_shape(Partition((2, 1, 1)), 4, TABLEAUX)
    mapping = crystal_isomorphic(arrays, tableaux)
    assert mapping is not None, "crystals should be isomorphic"
    for a, t in mapping.items():
        assert encode(arrays.vertices[a]) == tableaux.vertices[t], f"isomorphism is not encode at vertex {a}"
    short = crystal_for_shape(Partition((1,)), 2, TABLEAUX)
    longer = crystal_for_shape(Partition((1,)), 3, TABLEAUX)
    assert crystal_isomorphic(short, longer) is None, "2-chain vs 3-chain"
    assert crystal_isomorphic(arrays, arrays) == {v: v for v in range(len(arrays))}, "identity"


def test_highest_weight_and_extremal():
    """Highest weight stars and extremal threshold graphs."""
    assert is_highest_weight(BurgeArray.from_rows([2, 3, 4], [1, 1, 1]), 4), "star centred at 1"
    assert is_highest_weight(BurgeArray(), 4), "empty array"
    assert not is_highest_weight(PATH_ARRAY, 4), "path is not highest weight"
    assert is_highest_weight(Tableau([[1, 1], [2]]), 3), "Yamanouchi tableau"
    assert not is_highest_weight(Tableau([[1, 2], [2]]), 3), "reading word 212 has a free 2"
    assert raise_to_highest_weight(Tableau([[1, 2], [3]]), 3) == Tableau([[1, 1], [2]]), "raise to the top"
    crystal = crystal_for_shape(Partition((2, 1, 1)), 4, ARRAYS)
    for array, w in zip(crystal.vertices, crystal.weights):
        extremal = is_extremal(array, 4)
        assert extremal == (sorted(w) == [0, 1, 1, 2]), f"{array.label()} with weight {w}"
        assert extremal == is_threshold_graph(from_burge_array(array, 4)), f"{array.label()} threshold mismatch"


def test_string_lengths():
    """epsilon and phi walk the i-strings."""
    assert phi(Tableau([[1, 1]]), 1) == 2 and epsilon(Tableau([[1, 1]]), 1) == 0, "string through [[1,1]]"
    assert phi(Tableau([[1, 2]]), 1) == 1 and epsilon(Tableau([[1, 2]]), 1) == 1, "middle of the string"
    assert phi(PATH_ARRAY, 1) - epsilon(PATH_ARRAY, 1) == 1 - 2, "phi - epsilon = wt_1 - wt_2"


def test_dot_output():
    """DOT output is stable and colours edges by label."""
    dot = crystal_for_shape(Partition((1,)), 2, TABLEAUX).to_dot()
    assert dot.startswith("digraph crystal {"), "DOT header"
    assert 'n0 -> n1 [label="1", color=blue];' in dot, "edge line"
    assert 'n0 [label="1"];' in dot, "node label"
    first = crystal_for_shape(Partition((2, 1, 1)), 4, ARRAYS)
    second = crystal_for_shape(Partition((2, 1, 1)), 4, ARRAYS)
    assert first.to_dot() == second.to_dot(), "generation is deterministic"


if __name__ == "__main__":
    try:
        logger.info("Starting crystal tests...")
        test_bracket()
        test_tableau_operators()
        test_tableau_operators_are_inverse()
        test_burge_reading_words()
        test_burge_operators()
        test_raising_through_a_column_exchange()
        test_burge_operators_intertwine_encoding()
        test_weights()
        test_generate_small_crystals()
        test_hook_crystals()
        test_crystal_for_shape_errors()
        test_stembridge()
        test_crystal_isomorphism()
        test_highest_weight_and_extremal()
        test_string_lengths()
        test_dot_output()
        logger.info("All tests completed successfully")
    except Exception as e:
        logger.error(f"Test failed: {str(e)}")
        raise
