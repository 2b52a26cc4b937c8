from ..digraphs import Digraph, Arc, distance_matrix, UNREACHABLE

import numpy as np

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Circuit:
    """A closed walk ``w_0 -> w_1 -> ... -> w_{r-1} -> w_0``.

    Vertices may repeat. The closing arc ``(w_{r-1}, w_0)`` is implied.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        r = len(self.vertices)
        return [(self.vertices[t], self.vertices[(t + 1) % r]) for t in range(r)]

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def closes_in(self, d: Digraph) -> bool:
        return all(d.has_arc(u, v) for u, v in self.arcs())

    def to_list(self) -> list[int]:
        return list(self.vertices)

    def __str__(self):
        return '(' + ','.join(map(str, self.vertices)) + ')'


def _rotations_from(walk: Sequence[int], arc: Arc) -> Iterator[tuple[int, ...]]:
    r = len(walk)
    for s in range(r):
        if walk[s] == arc[0] and walk[(s + 1) % r] == arc[1]:
            yield tuple(walk[s:]) + tuple(walk[:s])


def circuits_through_arc(d: Digraph, arc: Arc, q: int, simple: bool = False,
                         distances: np.ndarray | None = None) -> Iterator[Circuit]:
    """Every closed walk of length `q` that uses `arc` as one of its steps.

    Each cyclic class is emitted once, rotated so that `arc` is its first
    step. A walk using `arc` more than once is emitted in its
    lexicographically smallest such rotation. Walks are produced in
    lexicographic order of their vertex sequences.

    Parameters
    ----------
    d : Digraph
    arc : tuple of (int, int)
        An arc of `d`.
    q : int
        Circuit length, at least 2.
    simple : bool, default=False
        Restrict to circuits whose vertices are distinct.
    distances : numpy.ndarray, optional
        The distance matrix of `d`, as from
        :py:func:`~wdrdigraphs.digraphs.distance_matrix`. Computed when
        not given.

    Yields
    ------
    Circuit

    Raises
    ------
    ValueError
        If `q` < 2 or `arc` is not an arc of `d`.
    """
    if q < 2:
        raise ValueError(f"`q` must be >= 2. Found {q}.")
    u, v = arc
    if not (0 <= u < d.order and 0 <= v < d.order and d.has_arc(u, v)):
        raise ValueError(f"{arc} is not an arc of the digraph.")

    if distances is None:
        distances = distance_matrix(d, allow_unreachable=True)
    back = distances[:, u]
    walk = [u, v]

    def extend() -> Iterator[Circuit]:
        last = walk[-1]
        if len(walk) == q:
            if d.has_arc(last, u):
                candidate = tuple(walk)
                if min(_rotations_from(candidate, arc)) == candidate:
                    yield Circuit(candidate)
            return
        remaining = q - len(walk)
        for w in d.out_neighbors(last):
            if back[w] == UNREACHABLE or back[w] > remaining:
                continue
            if simple and w in walk:
                continue
            walk.append(w)
            yield from extend()
            walk.pop()

    yield from extend()
