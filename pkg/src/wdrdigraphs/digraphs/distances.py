from .digraph import Digraph

import numpy as np
from scipy.sparse.csgraph import shortest_path

from typing import Sequence


UNREACHABLE = -1


def reach_mask(rows: Sequence[int], source: int) -> int:
    """Bit mask of the vertices reachable from `source` along `rows`."""
    seen = 1 << source
    frontier = seen
    while frontier:
        step = 0
        while frontier:
            low = frontier & -frontier
            step |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = step & ~seen
        seen |= frontier
    return seen


def rows_strongly_connected(order: int, out_rows: Sequence[int],
                            in_rows: Sequence[int]) -> bool:
    """Strong connectivity straight from bit rows.

    Vertex 0 must reach every vertex and be reached from every vertex.
    """
    full = (1 << order) - 1
    return reach_mask(out_rows, 0) == full and reach_mask(in_rows, 0) == full


def is_strongly_connected(d: Digraph) -> bool:
    """Whether every ordered pair of vertices is joined by a path."""
    return rows_strongly_connected(d.order, d.out_rows, d.in_rows)


def distance_matrix(d: Digraph, allow_unreachable: bool = False) -> np.ndarray:
    """All-pairs one-way distances by breadth-first search from every vertex.

    Parameters
    ----------
    d : Digraph
        The digraph.
    allow_unreachable : bool, optional
        If :py:obj:`True`, unreachable pairs are reported as
        :py:data:`UNREACHABLE` instead of raising (default is
        :py:obj:`False`).

    Returns
    -------
    numpy.ndarray
        Read-only integer array with entry ``[x, y]`` equal to the length
        of a shortest path from ``x`` to ``y``.

    Raises
    ------
    Digraph.NotStronglyConnectedError
        If some pair has no path and `allow_unreachable` is not set. The
        first such pair in row-major order is the witness.
    """
    raw = shortest_path(d.sparse_adjacency(), method='D', directed=True, unweighted=True)
    missing = np.isinf(raw)

    if missing.any() and not allow_unreachable:
        x, y = np.argwhere(missing)[0]
        raise Digraph.NotStronglyConnectedError((int(x), int(y)))

    distances = np.where(missing, UNREACHABLE, raw).astype(np.int64)
    distances.setflags(write=False)
    return distances
