from .digraph import Digraph
from .distances import distance_matrix
from .two_way_type import TwoWayType

import numpy as np

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Final, Literal, Mapping


NON_CONSTANT: Final = 'non-constant'
"""Valency marker for a type whose fibre size differs between vertices."""

type Valency = int | Literal['non-constant']


@dataclass(frozen=True, eq=False)
class RelationPartition:
    """The partition of ordered vertex pairs by two-way distance.

    Attributes
    ----------
    order : int
        Vertex count of the digraph the partition was built from.
    distances : numpy.ndarray
        The one-way distance matrix.
    types : tuple of TwoWayType
        The types present, in lexicographic order.
    type_matrix : numpy.ndarray
        ``type_matrix[x, y]`` is the index in :py:attr:`types` of the type of
        ``(x, y)``.
    pairs_by_type : Mapping[TwoWayType, frozenset of (int, int)]
        The classes of the partition.
    valencies : Mapping[TwoWayType, int or 'non-constant']
        Fibre size per type, or :py:data:`NON_CONSTANT` when vertices disagree.
    diameter : int
        The largest forward distance.
    """

    order: int
    distances: np.ndarray = field(repr=False)
    types: tuple[TwoWayType, ...]
    type_matrix: np.ndarray = field(repr=False)
    pairs_by_type: Mapping[TwoWayType, frozenset[tuple[int, int]]] = field(repr=False)
    valencies: Mapping[TwoWayType, Valency]
    diameter: int
    _fibers: tuple[Mapping[TwoWayType, frozenset[int]], ...] = field(repr=False)

    class UnknownTypeError(KeyError):
        pass

    # - - Lookups - -

    def index(self, t: TwoWayType) -> int:
        try:
            return self._type_index[t]
        except KeyError as e:
            raise RelationPartition.UnknownTypeError(f"Type {t} is not present.") from e

    @cached_property
    def _type_index(self) -> dict[TwoWayType, int]:
        return {t: k for k, t in enumerate(self.types)}

    def type_of(self, x: int, y: int) -> TwoWayType:
        return self.types[self.type_matrix[x, y]]

    def fiber(self, x: int, t: TwoWayType) -> frozenset[int]:
        """``{y : type(x, y) == t}``; empty for types that are not present."""
        return self._fibers[x].get(t, frozenset())

    def valency(self, t: TwoWayType) -> int:
        value = self.valencies[t]
        if value == NON_CONSTANT:
            raise ValueError(f"Valency of {t} is not constant.")
        return value

    def has_type(self, t: TwoWayType) -> bool:
        return t in self.pairs_by_type

    @property
    def arc_types(self) -> tuple[TwoWayType, ...]:
        """The present types ``(1, q-1)``, in order of ``q``."""
        return tuple(t for t in self.types if t.is_arc)

    @property
    def valencies_constant(self) -> bool:
        return all(v != NON_CONSTANT for v in self.valencies.values())

    def first_non_constant(self) -> tuple[TwoWayType, int, int] | None:
        """The first type with unequal fibres and two vertices disagreeing on it."""
        for t in self.types:
            if self.valencies[t] != NON_CONSTANT:
                continue
            sizes = [len(self.fiber(x, t)) for x in range(self.order)]
            x = 0
            y = next(v for v in range(self.order) if sizes[v] != sizes[0])
            return t, x, y
        return None


def two_way_partition(d: Digraph) -> RelationPartition:
    """Partition ``V x V`` by two-way distance.

    Parameters
    ----------
    d : Digraph
        A strongly connected digraph.

    Returns
    -------
    RelationPartition

    Raises
    ------
    Digraph.NotStronglyConnectedError
        Propagated from :py:func:`~.distance_matrix`.
    """
    distances = distance_matrix(d)
    n = d.order

    pair_types: dict[tuple[int, int], TwoWayType] = {}
    for x in range(n):
        for y in range(n):
            pair_types[(x, y)] = TwoWayType(int(distances[x, y]), int(distances[y, x]))

    types = tuple(sorted(set(pair_types.values())))
    index = {t: k for k, t in enumerate(types)}

    type_matrix = np.empty((n, n), dtype=np.int64)
    pairs: dict[TwoWayType, set[tuple[int, int]]] = {t: set() for t in types}
    fibers: list[dict[TwoWayType, set[int]]] = [{} for _ in range(n)]
    for (x, y), t in pair_types.items():
        type_matrix[x, y] = index[t]
        pairs[t].add((x, y))
        fibers[x].setdefault(t, set()).add(y)
    type_matrix.setflags(write=False)

    valencies: dict[TwoWayType, Valency] = {}
    for t in types:
        sizes = {len(fibers[x].get(t, ())) for x in range(n)}
        valencies[t] = sizes.pop() if len(sizes) == 1 else NON_CONSTANT

    return RelationPartition(
        order=n,
        distances=distances,
        types=types,
        type_matrix=type_matrix,
        pairs_by_type=MappingProxyType({t: frozenset(p) for t, p in pairs.items()}),
        valencies=MappingProxyType(valencies),
        diameter=int(distances.max()),
        _fibers=tuple(
            MappingProxyType({t: frozenset(ys) for t, ys in f.items()}) for f in fibers
        ),
    )
