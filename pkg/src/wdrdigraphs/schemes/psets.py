from ..digraphs import Digraph, RelationPartition, TwoWayType


def pset(d: Digraph, part: RelationPartition, i: TwoWayType, j: TwoWayType,
         x: int, y: int) -> frozenset[int]:
    """``P_{i,j}(x, y)``: the vertices ``z`` with ``type(x, z) == i`` and ``type(z, y) == j``.

    Equal to ``Gamma_i(x) & Gamma_{j*}(y)``; its size is ``p^h_{i,j}`` for
    ``h = type(x, y)`` whenever the digraph is weakly distance-regular.
    """
    for v in (x, y):
        if not 0 <= v < d.order:
            raise ValueError(f"Vertex {v} is outside 0..{d.order - 1}.")
    return part.fiber(x, i) & part.fiber(y, j.conjugate)
