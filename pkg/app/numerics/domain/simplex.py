"""Edge bookkeeping for an ordered ideal simplex."""
from typing import Dict, Tuple

# Edge k joins EDGES[k]; opposite edges are k and k + 3.
EDGES: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3))

EDGE_INDEX: Dict[Tuple[int, int], int] = {}
for _index, (_a, _b) in enumerate(EDGES):
    EDGE_INDEX[(_a, _b)] = _index
    EDGE_INDEX[(_b, _a)] = _index

# Edges 01/23 carry z and w0, 12/03 carry z' and w1, 02/13 carry z'' and w2.
LOG_PARAMETER_OF_EDGE: Tuple[int, ...] = (0, 1, 2, 0, 1, 2)


def edge_index(a: int, b: int) -> int:
    return EDGE_INDEX[(a, b)]


def parameter_index(a: int, b: int) -> int:
    """Which of (z, z', z'') sits on the edge joining vertices a and b."""
    return LOG_PARAMETER_OF_EDGE[EDGE_INDEX[(a, b)]]
