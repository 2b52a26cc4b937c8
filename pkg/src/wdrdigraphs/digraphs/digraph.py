from numbers import Integral

import numpy as np
from scipy.sparse import csr_matrix

from typing import Iterable, Iterator, Self, Sequence


type Arc = tuple[int, int]


class Digraph:
    """An immutable, loop-free digraph on the vertices ``0 .. order-1``.

    Adjacency is stored as one integer bit row per vertex (bit ``v`` of
    row ``u`` is set iff ``(u, v)`` is an arc), together with the transposed
    rows, so neighbourhood and reachability queries are word operations.

    Parameters
    ----------
    order : int
        The number of vertices, between 1 and :py:attr:`MAX_ORDER`.
    arcs : iterable of (int, int)
        The arcs. Loops and repeated arcs are rejected, not merged.
    require_not_undirected : bool, optional
        If :py:obj:`True`, reject digraphs in which every arc has its
        reverse (default is :py:obj:`False`).

    Raises
    ------
    Digraph.OrderError
        If `order` is not an integer in ``[1, MAX_ORDER]``.
    Digraph.VertexRangeError
        If an arc endpoint is not a vertex.
    Digraph.LoopError
        If an arc ``(u, u)`` is present.
    Digraph.DuplicateArcError
        If an arc occurs more than once.
    Digraph.UndirectedError
        If `require_not_undirected` is set and the digraph is undirected.
    """

    MAX_ORDER = 64

    # - - Exceptions - -

    class OrderError(ValueError):
        """Raised when the vertex count is not supported."""
        pass

    class VertexRangeError(ValueError):
        """Raised when an arc endpoint is outside ``0 .. order-1``."""
        pass

    class LoopError(ValueError):
        """Raised when an arc joins a vertex to itself."""
        pass

    class DuplicateArcError(ValueError):
        """Raised when the same arc is listed twice."""
        pass

    class UndirectedError(ValueError):
        """Raised when an undirected digraph is given where a proper digraph is required."""
        pass

    class NotStronglyConnectedError(ValueError):
        """Raised when an operation needs a path between every ordered pair.

        Attributes
        ----------
        witness : tuple of (int, int)
            An ordered pair ``(x, y)`` with no path from ``x`` to ``y``.
        """
        def __init__(self, witness: Arc):
            self.witness = witness
            super(Digraph.NotStronglyConnectedError, self).__init__(
                f"Digraph is not strongly connected: no path from "
                f"{witness[0]} to {witness[1]}."
            )

    # - - Initialization - -

    def __init__(self, order: int, arcs: Iterable[Arc],
                 require_not_undirected: bool = False):
        self._assert_order_valid(order)
        self._order = int(order)

        out_rows = [0] * self._order
        in_rows = [0] * self._order
        for arc in arcs:
            u, v = self._assert_arc_valid(arc)
            if out_rows[u] >> v & 1:
                raise Digraph.DuplicateArcError(f"Arc ({u},{v}) is listed more than once.")
            out_rows[u] |= 1 << v
            in_rows[v] |= 1 << u

        self._out_rows: tuple[int, ...] = tuple(out_rows)
        self._in_rows: tuple[int, ...] = tuple(in_rows)

        if require_not_undirected:
            self._assert_not_undirected()

    @classmethod
    def from_rows(cls, order: int, out_rows: Sequence[int],
                  require_not_undirected: bool = False) -> Self:
        """Build a digraph directly from out-neighbour bit rows.

        Used by the exhaustive searches, which enumerate rows rather than
        arc lists.
        """
        return cls(order, _arcs_from_rows(out_rows), require_not_undirected)

    # - - Assertions - -

    def _assert_order_valid(self, order):
        if isinstance(order, bool) or not isinstance(order, Integral):
            raise Digraph.OrderError(
                f"`order` must be an integer. Found object of type {type(order).__name__}"
            )
        if not 1 <= order <= Digraph.MAX_ORDER:
            raise Digraph.OrderError(
                f"`order` must be between 1 and {Digraph.MAX_ORDER}. Found {order}."
            )

    def _assert_arc_valid(self, arc) -> Arc:
        try:
            u, v = arc
        except (TypeError, ValueError) as e:
            raise Digraph.VertexRangeError(f"Arc {arc!r} is not a vertex pair.") from e

        for w in (u, v):
            if isinstance(w, bool) or not isinstance(w, Integral) or not 0 <= w < self._order:
                raise Digraph.VertexRangeError(
                    f"Arc ({u},{v}) has an endpoint outside 0..{self._order - 1}."
                )
        if u == v:
            raise Digraph.LoopError(f"Loop ({u},{v}) is not allowed in a simple digraph.")

        return int(u), int(v)

    def _assert_not_undirected(self):
        if self.is_undirected():
            raise Digraph.UndirectedError(
                "Digraph is undirected: every arc has its reverse."
            )

    # - - Queries - -

    @property
    def order(self) -> int:
        return self._order

    @property
    def out_rows(self) -> tuple[int, ...]:
        """Out-neighbour bit rows, one per vertex."""
        return self._out_rows

    @property
    def in_rows(self) -> tuple[int, ...]:
        """In-neighbour bit rows, one per vertex."""
        return self._in_rows

    @property
    def arcs(self) -> frozenset[Arc]:
        return frozenset(_arcs_from_rows(self._out_rows))

    @property
    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self._out_rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out_rows[u] >> v & 1)

    def out_neighbors(self, u: int) -> list[int]:
        return _bits(self._out_rows[u])

    def in_neighbors(self, v: int) -> list[int]:
        return _bits(self._in_rows[v])

    def out_degree(self, u: int) -> int:
        return self._out_rows[u].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in_rows[v].bit_count()

    def sorted_arcs(self) -> list[Arc]:
        return list(_arcs_from_rows(self._out_rows))

    def is_undirected(self) -> bool:
        """Whether every arc ``(u, v)`` has its reverse ``(v, u)``."""
        return self._out_rows == self._in_rows

    # - - Conversions - -

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix with rows indexed by tail."""
        matrix = np.zeros((self._order, self._order), dtype=np.int64)
        for u, v in _arcs_from_rows(self._out_rows):
            matrix[u, v] = 1
        return matrix

    def sparse_adjacency(self) -> csr_matrix:
        return csr_matrix(self.adjacency_matrix())

    def relabel(self, mapping: Sequence[int]) -> 'Digraph':
        """Return the digraph with each vertex ``u`` renamed ``mapping[u]``."""
        if sorted(mapping) != list(range(self._order)):
            raise ValueError("`mapping` must be a permutation of the vertices.")
        return Digraph(self._order, ((mapping[u], mapping[v]) for u, v in self.sorted_arcs()))

    def induced(self, vertices: Sequence[int]) -> 'Digraph':
        """Induced subdigraph on `vertices`, relabelled by position in the sequence."""
        position = {v: k for k, v in enumerate(vertices)}
        return Digraph(len(vertices), (
            (position[u], position[v]) for u, v in self.sorted_arcs()
            if u in position and v in position
        ))

    # - - Dunder - -

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._order == other._order and self._out_rows == other._out_rows

    def __hash__(self):
        return hash((self._order, self._out_rows))

    def __repr__(self):
        return f"Digraph(order={self._order}, arcs={self.sorted_arcs()})"


def build_digraph(order: int, arcs: Iterable[Arc],
                  require_not_undirected: bool = True) -> Digraph:
    """Validate `arcs` and build a :py:class:`Digraph`.

    Parameters
    ----------
    order : int
        Vertex count.
    arcs : iterable of (int, int)
        Arc list. Duplicates are an error.
    require_not_undirected : bool, optional
        Reject undirected input (default is :py:obj:`True`, matching the
        standing assumption that the digraphs studied are not undirected).

    Returns
    -------
    Digraph
    """
    return Digraph(order, list(arcs), require_not_undirected=require_not_undirected)


# - - Bit Helpers - -

def _bits(row: int) -> list[int]:
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length() - 1)
        row ^= low
    return out


def _arcs_from_rows(rows: Sequence[int]) -> Iterator[Arc]:
    for u, row in enumerate(rows):
        for v in _bits(row):
            yield (u, v)
