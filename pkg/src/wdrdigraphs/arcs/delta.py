from .verdicts import LemmaVerdict, Tally, not_applicable
from ..cayley import cayley_product
from ..digraphs import Digraph, RelationPartition, TwoWayType, arc_type
from ..iso import are_isomorphic, MAX_ORDER
from ..schemes import IntersectionTensor, SchemeReport, relation_power

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from collections import deque
import logging


logger = logging.getLogger(__name__)

BIPARTITE = 'bipartite-double-arcs'
CYCLIC_LAYERS = 'cyclic-layer-structure'
POWER_COLLAPSE = 'power-collapse'


def _arc_type_components(part: RelationPartition, t: TwoWayType) -> np.ndarray:
    arcs = sorted(part.pairs_by_type[t])
    rows = [u for u, _ in arcs]
    cols = [v for _, v in arcs]
    matrix = csr_matrix((np.ones(len(arcs), dtype=np.int8), (rows, cols)),
                        shape=(part.order, part.order))
    _, labels = connected_components(matrix, directed=True, connection='weak')
    return labels


def delta_component(d: Digraph, part: RelationPartition, q: int,
                    x: int) -> tuple[Digraph, tuple[int, ...]]:
    """The component containing `x` of the digraph keeping only arcs of type ``(1, q-1)``.

    Parameters
    ----------
    d : Digraph
    part : RelationPartition
        The two-way partition of `d`.
    q : int
        Circuit length of the arc type, at least 2.
    x : int
        A vertex of `d`.

    Returns
    -------
    tuple of (Digraph, tuple of int)
        The component relabelled ``0..r-1``, and the original vertex of each
        new label.

    Raises
    ------
    RelationPartition.UnknownTypeError
        If ``(1, q-1)`` is not a type of `d`.
    """
    if q < 2:
        raise ValueError(f"`q` must be >= 2. Found {q}.")
    if not 0 <= x < d.order:
        raise ValueError(f"Vertex {x} is outside 0..{d.order - 1}.")
    t = arc_type(q)
    part.index(t)

    labels = _arc_type_components(part, t)
    vertices = tuple(v for v in range(d.order) if labels[v] == labels[x])
    relabel = {v: k for k, v in enumerate(vertices)}
    arcs = [(relabel[u], relabel[v]) for u, v in sorted(part.pairs_by_type[t])
            if u in relabel]
    return Digraph(len(vertices), arcs), vertices


def is_complete_bipartite(g: Digraph, n: int) -> bool:
    """Whether `g` is ``K_{n,n}`` with every edge present as a pair of opposite arcs."""
    if g.order != 2 * n:
        return False
    side = [-1] * g.order
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.out_neighbors(u) + g.in_neighbors(u):
            if side[v] == -1:
                side[v] = 1 - side[u]
                queue.append(v)
    if -1 in side or side.count(0) != n:
        return False
    return all(
        g.has_arc(u, v) == (side[u] != side[v])
        for u in range(g.order) for v in range(g.order) if u != v
    )


def _components(d: Digraph, part: RelationPartition, q: int):
    seen: set[int] = set()
    for x in range(d.order):
        if x in seen:
            continue
        sub, vertices = delta_component(d, part, q, x)
        seen.update(vertices)
        yield x, sub


def check_delta_structure(d: Digraph, part: RelationPartition, t: IntersectionTensor,
                          flags: SchemeReport) -> tuple[LemmaVerdict, ...]:
    """Check the shape of the components of single arc types.

    * When ``k_{1,1} = n > 0`` every component of the symmetric arcs is
      ``K_{n,n}``.
    * When ``p^{(2,q-2)}_{(1,q-1),(1,q-1)} = m > 0`` every component of the
      arcs of type ``(1,q-1)`` is isomorphic to
      ``Cay(Z_q x Z_m, {(1,0), ..., (1,m-1)})``, and the ``l``-th power of
      ``(1,q-1)`` is ``{(l,q-l)}`` for ``1 <= l <= q-1``.

    Both require a commutative regular scheme; otherwise every verdict is
    ``not-applicable``.
    """
    names = (BIPARTITE, CYCLIC_LAYERS, POWER_COLLAPSE)
    if not flags.hypotheses_hold:
        return tuple(not_applicable(name, "scheme is not commutative and regular") for name in names)

    bipartite = Tally(BIPARTITE)
    double = TwoWayType(1, 1)
    if t.has_type(double):
        n = t.k(double)
        for x, sub in _components(d, part, 2):
            bipartite.record(is_complete_bipartite(sub, n),
                             f"component of vertex {x} is not K_{{{n},{n}}}")

    layers = Tally(CYCLIC_LAYERS)
    collapse = Tally(POWER_COLLAPSE)
    for arc in part.arc_types:
        q = arc.circuit_length
        if q < 3:
            continue
        m = t.get(TwoWayType(2, q - 2), arc, arc)
        if m == 0:
            continue

        for x, sub in _components(d, part, q):
            if sub.order > MAX_ORDER:
                logger.warning("component of vertex %d has order %d; isomorphism check skipped",
                               x, sub.order)
                layers.skip(f"q={q}: component of vertex {x} has order {sub.order} > {MAX_ORDER}")
                continue
            expected = cayley_product(q, m, [(1, j) for j in range(m)])
            layers.record(are_isomorphic(sub, expected) is not None,
                          f"q={q}: component of vertex {x} is not Cay(Z_{q} x Z_{m})")

        for l in range(1, q):
            power = relation_power(arc, l, t)
            want = TwoWayType(l, q - l)
            collapse.record(power == {want},
                            f"q={q}: power {l} of {arc} is "
                            f"{{{', '.join(map(str, sorted(power)))}}}, expected {{{want}}}")

    return (bipartite.verdict(), layers.verdict(), collapse.verdict())
