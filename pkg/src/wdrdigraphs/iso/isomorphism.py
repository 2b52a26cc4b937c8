from .certificate import Certificate
from .invariants import vertex_invariants, pair_codes
from ..digraphs import Digraph

from collections import Counter


def are_isomorphic(a: Digraph, b: Digraph) -> tuple[int, ...] | None:
    """A bijection ``f`` with ``(u, v)`` an arc of `a` iff ``(f[u], f[v])`` is an arc of `b`.

    Vertices are matched only to vertices with the same out-degree,
    in-degree and two-way distance profile, and every partial assignment
    must preserve two-way distances between assigned vertices.

    Returns
    -------
    tuple of int or None
        ``f`` indexed by the vertices of `a`, or :py:obj:`None` when the
        digraphs are not isomorphic.

    Raises
    ------
    Certificate.OrderTooLargeError
        If either digraph has more than 16 vertices.
    """
    Certificate._assert_order_supported(a)
    Certificate._assert_order_supported(b)
    if a.order != b.order or a.arc_count != b.arc_count:
        return None

    inv_a, inv_b = vertex_invariants(a), vertex_invariants(b)
    if Counter(inv_a) != Counter(inv_b):
        return None

    codes_a, codes_b = pair_codes(a), pair_codes(b)
    n = a.order
    candidates = [[y for y in range(n) if inv_b[y] == inv_a[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))

    f = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if used[y]:
                continue
            if any(codes_a[x, u] != codes_b[y, f[u]] for u in order[:depth]):
                continue
            f[x], used[y] = y, True
            if extend(depth + 1):
                return True
            f[x], used[y] = -1, False
        return False

    return tuple(f) if extend(0) else None
