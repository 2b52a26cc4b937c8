from ..digraphs import Digraph, distance_matrix

import numpy as np


MAX_ORDER = 16


type VertexInvariant = tuple[int, int, tuple[tuple[int, int], ...]]


def pair_codes(d: Digraph) -> np.ndarray:
    """``codes[x, y] = (d(x, y) + 1) * 32 + d(y, x) + 1``, with unreachable distances as ``-1``.

    The code determines adjacency (``d(x, y) == 1``) and is preserved by
    isomorphisms.
    """
    dist = distance_matrix(d, allow_unreachable=True).astype(np.int64)
    return (dist + 1) * 32 + (dist.T + 1)


def vertex_invariants(d: Digraph) -> list[VertexInvariant]:
    """Out-degree, in-degree and the sorted two-way distances from each vertex."""
    dist = distance_matrix(d, allow_unreachable=True)
    n = d.order
    return [
        (
            d.out_degree(x),
            d.in_degree(x),
            tuple(sorted((int(dist[x, y]), int(dist[y, x])) for y in range(n))),
        )
        for x in range(n)
    ]


def initial_colors(d: Digraph) -> list[int]:
    """Rank of each vertex's invariant among the distinct invariants present."""
    invariants = vertex_invariants(d)
    ranks = {inv: k for k, inv in enumerate(sorted(set(invariants)))}
    return [ranks[inv] for inv in invariants]


def refine(colors: list[int], codes: np.ndarray) -> list[int]:
    """Refine a vertex colouring until every colour class sees each colour
    through each pair code equally often.

    New colours are ranks of sorted signatures, so the result does not depend
    on vertex labels and never merges classes of the input.
    """
    n = len(colors)
    current = list(colors)
    count = len(set(current))
    while True:
        signatures = [
            (current[x], tuple(sorted(zip(codes[x].tolist(), current))))
            for x in range(n)
        ]
        ranks = {sig: k for k, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[sig] for sig in signatures]
        if len(ranks) == count:
            return refined
        current, count = refined, len(ranks)
