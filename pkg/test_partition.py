import logging

import pytest

from partition import (Cell, Partition, conjugate, dominates, durfee, from_frobenius, frobenius, hook, is_hook,
                       is_threshold, largest_hook, opposite_position, partitions, threshold_partitions)

# Configure logging
logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_partition_validation():
    """Parts must be positive and weakly decreasing."""
    with pytest.raises(ValueError, match="weakly decreasing"):
        Partition((1, 2))
    with pytest.raises(ValueError, match="positive"):
        Partition((2, 0))
    with pytest.raises(ValueError, match="must be an integer"):
        Partition((2.5, 1))
    with pytest.raises(ValueError, match="must be an integer"):
        Partition((True,))
    assert Partition.from_sequence([2, 0, 3, 2, 1]) == Partition((3, 2, 2, 1)), "from_sequence should sort and drop zeros"
    lam = Partition((3, 1))
    assert lam.size == 4 and lam.length == 2, "size/length mismatch"
    assert lam.part(3) == 0, "parts past the end are zero"
    assert Cell(2, 1) in lam and Cell(2, 2) not in lam, "cell membership wrong"


def test_conjugate_and_durfee():
    """Column lengths and the Durfee square."""
    assert conjugate(Partition((3, 2, 2, 1))) == Partition((4, 3, 1)), "conjugate of (3,2,2,1)"
    assert conjugate(Partition()) == Partition(), "conjugate of the empty partition"
    assert conjugate(Partition((2, 2, 2))) == Partition((3, 3)), "conjugate of (2,2,2)"
    assert durfee(Partition((3, 2, 2, 1))) == 2, "Durfee size of (3,2,2,1)"
    assert durfee(Partition()) == 0, "Durfee size of ()"
    assert durfee(Partition((1, 1))) == 1, "Durfee size of (1,1)"


def test_threshold_and_hook():
    """Threshold and hook predicates on the reference shapes."""
    logger.info("Testing threshold and hook predicates...")
    assert is_threshold(Partition((3, 2, 2, 1))), "(3,2,2,1) is threshold"
    assert is_threshold(Partition((2, 2, 2))), "(2,2,2) is threshold"
    assert not is_threshold(Partition((2, 1))), "(2,1) is not threshold"
    assert is_threshold(Partition()), "empty partition is threshold"
    assert is_hook(Partition((3, 1, 1, 1))), "(3,1,1,1) is a hook"
    assert not is_hook(Partition((2, 2))), "(2,2) is not a hook"
    assert not is_hook(Partition((3, 2, 2, 1))), "(3,2,2,1) is not a hook"
    logger.info("Threshold and hook test passed")


def test_dominance():
    """Dominance compares sorted prefix sums of equal-size sequences."""
    assert dominates(Partition((3, 2, 2, 1)), (2, 3, 2, 1)), "sorted sequences are equal"
    assert dominates(Partition((2, 2)), (2, 2)), "dominance is reflexive"
    assert not dominates(Partition((2, 1, 1)), (3, 1)), "prefix 2 < 3"
    assert not dominates(Partition((2, 1)), (1, 1)), "different sizes never dominate"
    assert dominates(Partition((2, 1, 1)), (1, 1, 1, 1)), "(2,1,1) dominates (1,1,1,1)"


def test_opposite_position():
    """op(s,t) = (t+1, s) for s <= t and (t, s-1) otherwise."""
    assert opposite_position(Cell(1, 1)) == Cell(2, 1), "op(1,1)"
    assert opposite_position(Cell(2, 1)) == Cell(1, 1), "op(2,1)"
    assert opposite_position(Cell(1, 2)) == Cell(3, 1), "op(1,2)"
    for s in range(1, 5):
        for t in range(1, 5):
            cell = Cell(s, t)
            back = opposite_position(opposite_position(cell))
            if s <= t:
                assert back == cell, f"op should be an involution between the two diagram halves at {cell}"


def test_frobenius_round_trip():
    """Frobenius coordinates rebuild the partition."""
    for n in range(9):
        for lam in partitions(n):
            arms, legs = frobenius(lam)
            assert from_frobenius(arms, legs) == lam, f"Frobenius round trip failed for {lam}"
    with pytest.raises(ValueError):
        from_frobenius((1, 1), (2, 1))


def test_partitions_count():
    """Partition numbers p(0..8)."""
    counts = [sum(1 for _ in partitions(n)) for n in range(9)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22], f"unexpected partition counts {counts}"


def test_threshold_partitions():
    """Direct construction agrees with filtering every partition."""
    logger.info("Testing threshold partition generators...")
    for size in range(13):
        direct = threshold_partitions(size)
        filtered = sorted((lam for lam in partitions(size) if is_threshold(lam)), key=lambda p: p.parts, reverse=True)
        assert direct == filtered, f"generators disagree at size {size}"
    assert threshold_partitions(6) == [Partition((3, 1, 1, 1)), Partition((2, 2, 2))], "threshold partitions of 6"
    assert threshold_partitions(5) == [], "odd sizes have no threshold partitions"
    assert threshold_partitions(0) == [Partition()], "the empty partition is threshold"
    logger.info("Threshold partition test passed")


def test_hooks():
    """Threshold hooks and the largest contained hook."""
    assert hook(3) == Partition((3, 1, 1, 1)), "hook(3)"
    assert hook(0) == Partition(), "hook(0)"
    assert is_threshold(hook(4)) and is_hook(hook(4)), "hook(k) is a threshold hook"
    assert largest_hook(Partition((3, 3, 2, 2))) == Partition((3, 1, 1, 1)), "largest hook of (3,3,2,2)"


if __name__ == "__main__":
    try:
        logger.info("Starting partition tests...")
        test_partition_validation()
        test_conjugate_and_durfee()
        test_threshold_and_hook()
        test_dominance()
        test_opposite_position()
        test_frobenius_round_trip()
        test_partitions_count()
        test_threshold_partitions()
        test_hooks()
        logger.info("All tests completed successfully")
    except Exception as e:
        logger.error(f"Test failed: {str(e)}")
        raise
