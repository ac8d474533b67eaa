import logging
from itertools import combinations
from typing import Any, Dict, Optional, Sequence, Tuple

from burge import encode, shape_of_graph
from graph import BurgeArray, SimpleGraph, to_burge_array
from partition import is_hook

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

LONGEST_SUBARRAY_CAP = 16


def find_peak(array: BurgeArray) -> Optional[Triple]:
    """First (i, j, k), 1-based, ordered by (i, k), with b_i <= b_k, j the least index
    between them with b_k < b_j, and a_i <= b_j."""
    top, bottom = array.top, array.bottom
    r = len(array)
    for i in range(r):
        for k in range(i + 2, r):
            if bottom[i] > bottom[k]:
                continue
            # j is bound to the (i, k) pair: only the minimal one counts
            j = next((j for j in range(i + 1, k) if bottom[k] < bottom[j]), None)
            if j is not None and top[i] <= bottom[j]:
                return (i + 1, j + 1, k + 1)
    return None


def find_valley(array: BurgeArray) -> Optional[Triple]:
    """Lexicographically first (i, j, k) with b_j <= b_k < a_j and b_j < b_i."""
    top, bottom = array.top, array.bottom
    r = len(array)
    for i in range(r):
        for j in range(i + 1, r):
            if bottom[j] >= bottom[i]:
                continue
            for k in range(j + 1, r):
                if bottom[j] <= bottom[k] < top[j]:
                    return (i + 1, j + 1, k + 1)
    return None


def is_pv_free(array: BurgeArray) -> bool:
    return find_peak(array) is None and find_valley(array) is None


def is_hook_graph(graph: SimpleGraph) -> bool:
    return is_pv_free(to_burge_array(graph))


def subarray(array: BurgeArray, indices: Sequence[int]) -> BurgeArray:
    """Columns at the given 0-based indices, in order; re-validated on construction."""
    if any(indices[t] >= indices[t + 1] for t in range(len(indices) - 1)):
        raise ValueError("subarray indices must be strictly increasing")
    return BurgeArray(tuple(array.columns[k] for k in indices))


def longest_pv_free_subarray(array: BurgeArray, cap: int = LONGEST_SUBARRAY_CAP) -> int:
    """Brute force over column subsequences, largest first."""
    r = len(array)
    if r > cap:
        raise ValueError(f"array has {r} columns, above the brute-force cap of {cap}")
    for size in range(r, 0, -1):
        for indices in combinations(range(r), size):
            if is_pv_free(subarray(array, indices)):
                logger.debug(f"PV-free subarray of size {size}: columns {indices}")
                return size
    return 0


def pv_report(array: BurgeArray) -> Dict[str, Any]:
    """Peak, valley and shape summary for one array."""
    peak = find_peak(array)
    valley = find_valley(array)
    return {
        "peak": list(peak) if peak else None,
        "valley": list(valley) if valley else None,
        "pv_free": peak is None and valley is None,
        "hook_shape": is_hook(encode(array, validate=False).shape),
    }


def hook_graph_by_shape(graph: SimpleGraph) -> bool:
    return is_hook(shape_of_graph(graph))
