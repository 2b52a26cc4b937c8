from .invariants import MAX_ORDER, initial_colors, pair_codes, refine
from ..digraphs import Digraph

import numpy as np

from dataclasses import dataclass
import logging


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Certificate:
    """A canonical byte string for a digraph of order at most 16.

    Two digraphs have equal certificates exactly when they are isomorphic.
    The bytes are the order followed by the two-way distance matrix, row by
    row, under the lexicographically smallest labelling reachable by
    individualising vertices and refining.
    """

    data: bytes

    class OrderTooLargeError(ValueError):
        """Raised when a certificate is requested for a digraph of order above 16."""
        pass

    @staticmethod
    def _assert_order_supported(d: Digraph):
        if d.order > MAX_ORDER:
            raise Certificate.OrderTooLargeError(
                f"Certificates are supported up to order {MAX_ORDER}. Found order {d.order}."
            )

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def fromhex(cls, text: str) -> 'Certificate':
        return cls(bytes.fromhex(text))

    def __str__(self):
        return self.hex()


def _individualize(colors: list[int], v: int) -> list[int]:
    return [2 * c + (0 if x == v else 1) for x, c in enumerate(colors)]


def _target_cell(colors: list[int]) -> list[int] | None:
    """Vertices of the first colour class with more than one member."""
    members: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        members.setdefault(c, []).append(x)
    for c in sorted(members):
        if len(members[c]) > 1:
            return members[c]
    return None


def _orbit_representatives(cell: list[int], generators: list[tuple[int, ...]],
                           fixed: list[int]) -> set[int]:
    """Union-find over `cell` using the automorphisms that fix every vertex of `fixed`."""
    parent = {v: v for v in cell}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in generators:
        if any(g[x] != x for x in fixed):
            continue
        for v in cell:
            w = g[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return {v for v in cell if find(v) == v}


class _CanonicalSearch:

    def __init__(self, d: Digraph):
        self.n = d.order
        self.codes = pair_codes(d)
        self.best_code: bytes | None = None
        self.best_perm: tuple[int, ...] | None = None
        self.automorphisms: list[tuple[int, ...]] = []
        self.leaves = 0

    def _leaf_code(self, perm: tuple[int, ...]) -> bytes:
        relabeled = self.codes[np.ix_(perm, perm)]
        return bytes([self.n]) + (relabeled // 32).astype(np.uint8).tobytes()

    def _visit_leaf(self, colors: list[int]):
        self.leaves += 1
        perm = tuple(sorted(range(self.n), key=colors.__getitem__))
        code = self._leaf_code(perm)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_perm = code, perm
        elif code == self.best_code:
            g = [0] * self.n
            for a, b in zip(self.best_perm, perm):
                g[a] = b
            self.automorphisms.append(tuple(g))

    def search(self, colors: list[int], fixed: list[int]):
        cell = _target_cell(colors)
        if cell is None:
            self._visit_leaf(colors)
            return
        explored: list[int] = []
        for v in cell:
            if explored:
                reps = _orbit_representatives(cell, self.automorphisms, fixed)
                if v not in reps:
                    continue
            explored.append(v)
            self.search(refine(_individualize(colors, v), self.codes), fixed + [v])


def canonical_certificate(d: Digraph) -> Certificate:
    """Canonical certificate of a digraph of order at most 16.

    Vertices start coloured by out-degree, in-degree and two-way distance
    profile; the colouring is refined, and the search individualises each
    vertex of the first non-singleton class in turn. Branches equivalent
    under automorphisms already found are skipped.

    Raises
    ------
    Certificate.OrderTooLargeError
        If `d` has more than 16 vertices.
    """
    Certificate._assert_order_supported(d)
    search = _CanonicalSearch(d)
    search.search(refine(initial_colors(d), search.codes), [])
    logger.debug("certificate search visited %d leaves", search.leaves)
    return Certificate(search.best_code)
