from ..digraphs import Digraph, RelationPartition, TwoWayType, IDENTITY

import numpy as np

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping
import logging


logger = logging.getLogger(__name__)

type TypeTriple = tuple[TwoWayType, TwoWayType, TwoWayType]


@dataclass(frozen=True)
class WdrWitness:
    """Evidence that a digraph is not weakly distance-regular.

    Two pairs of the same type ``h`` see different numbers of vertices
    ``z`` with ``type(x, z) == i`` and ``type(z, y) == j``. A non-constant
    valency is reported with ``h = (0,0)``, ``j = i*`` and diagonal pairs,
    since then the count is the fibre size.
    """

    h: TwoWayType
    i: TwoWayType
    j: TwoWayType
    pair1: tuple[int, int]
    pair2: tuple[int, int]
    count1: int
    count2: int

    def to_dict(self) -> dict:
        return {
            'h': str(self.h), 'i': str(self.i), 'j': str(self.j),
            'pair1': list(self.pair1), 'pair2': list(self.pair2),
            'count1': self.count1, 'count2': self.count2,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'WdrWitness':
        return cls(
            h=TwoWayType.parse(data['h']), i=TwoWayType.parse(data['i']),
            j=TwoWayType.parse(data['j']),
            pair1=tuple(data['pair1']), pair2=tuple(data['pair2']),
            count1=data['count1'], count2=data['count2'],
        )


@dataclass(frozen=True, eq=False)
class IntersectionTensor:
    """Intersection numbers of a weakly distance-regular digraph.

    ``array[a, b, c]`` holds ``p^h_{i,j}`` for ``h, i, j = types[a], types[b],
    types[c]``. Use :py:meth:`__getitem__` for strict lookups and
    :py:meth:`get` when a type may be absent (absent types count as zero).
    """

    types: tuple[TwoWayType, ...]
    array: np.ndarray = field(repr=False)
    valencies: Mapping[TwoWayType, int]

    class UnknownTypeError(KeyError):
        """Raised when a type not present in the tensor is looked up."""
        pass

    @cached_property
    def _index(self) -> dict[TwoWayType, int]:
        return {t: k for k, t in enumerate(self.types)}

    def index(self, t: TwoWayType) -> int:
        try:
            return self._index[t]
        except KeyError as e:
            raise IntersectionTensor.UnknownTypeError(f"Type {t} is not a type of this tensor.") from e

    def has_type(self, t: TwoWayType) -> bool:
        return t in self._index

    def __getitem__(self, key: TypeTriple) -> int:
        h, i, j = key
        return int(self.array[self.index(h), self.index(i), self.index(j)])

    def get(self, h: TwoWayType, i: TwoWayType, j: TwoWayType) -> int:
        if not (self.has_type(h) and self.has_type(i) and self.has_type(j)):
            return 0
        return self[h, i, j]

    def k(self, t: TwoWayType) -> int:
        try:
            return self.valencies[t]
        except KeyError as e:
            raise IntersectionTensor.UnknownTypeError(f"Type {t} is not a type of this tensor.") from e

    @property
    def rank(self) -> int:
        return len(self.types)

    @property
    def p(self) -> dict[TypeTriple, int]:
        """All nonzero intersection numbers keyed by ``(h, i, j)``."""
        return {
            (self.types[a], self.types[b], self.types[c]): int(self.array[a, b, c])
            for a, b, c in zip(*np.nonzero(self.array))
        }

    def triples(self) -> Iterator[TypeTriple]:
        for h in self.types:
            for i in self.types:
                for j in self.types:
                    yield h, i, j

    def __eq__(self, other):
        if not isinstance(other, IntersectionTensor):
            return NotImplemented
        return (self.types == other.types
                and dict(self.valencies) == dict(other.valencies)
                and np.array_equal(self.array, other.array))


def _valency_witness(part: RelationPartition) -> WdrWitness | None:
    found = part.first_non_constant()
    if found is None:
        return None
    t, x, y = found
    return WdrWitness(
        h=IDENTITY, i=t, j=t.conjugate, pair1=(x, x), pair2=(y, y),
        count1=len(part.fiber(x, t)), count2=len(part.fiber(y, t)),
    )


def intersection_tensor(d: Digraph, part: RelationPartition) -> IntersectionTensor | WdrWitness:
    """Count ``p^h_{i,j}(x, y)`` for every pair and check it is constant on each class.

    Pairs are visited class by class in type order, and within a class in
    lexicographic order. The first pair whose counts differ from the first
    pair of its class stops the computation.

    Parameters
    ----------
    d : Digraph
        A strongly connected digraph.
    part : RelationPartition
        Its two-way distance partition.

    Returns
    -------
    IntersectionTensor or WdrWitness
        The tensor, or the first witness of non-constancy.
    """
    witness = _valency_witness(part)
    if witness is not None:
        logger.debug("valency of %s is not constant", witness.i)
        return witness

    r = len(part.types)
    T = part.type_matrix
    array = np.zeros((r, r, r), dtype=np.int64)

    for a, h in enumerate(part.types):
        pairs = sorted(part.pairs_by_type[h])
        reference = None
        reference_pair = None
        for x, y in pairs:
            counts = np.bincount(T[x, :] * r + T[:, y], minlength=r * r).reshape(r, r)
            if reference is None:
                reference, reference_pair = counts, (x, y)
                continue
            if not np.array_equal(counts, reference):
                b, c = np.argwhere(counts != reference)[0]
                return WdrWitness(
                    h=h, i=part.types[b], j=part.types[c],
                    pair1=reference_pair, pair2=(x, y),
                    count1=int(reference[b, c]), count2=int(counts[b, c]),
                )
        array[a] = reference

    array.setflags(write=False)
    return IntersectionTensor(
        types=part.types,
        array=array,
        valencies={t: int(part.valencies[t]) for t in part.types},
    )


def intersection_tensor_from_matrices(d: Digraph, part: RelationPartition) -> IntersectionTensor | WdrWitness:
    """Independent computation of the tensor from indicator matrix products.

    With ``A_t`` the 0/1 matrix of relation ``t``, the product ``A_i A_j``
    must be constant on the support of every ``A_h``; that constant is
    ``p^h_{i,j}``.
    """
    witness = _valency_witness(part)
    if witness is not None:
        return witness

    r = len(part.types)
    indicators = np.stack([(part.type_matrix == k).astype(np.int64) for k in range(r)])
    products = np.einsum('ixz,jzy->ijxy', indicators, indicators)

    array = np.zeros((r, r, r), dtype=np.int64)
    for a, h in enumerate(part.types):
        support = indicators[a].astype(bool)
        first = tuple(np.argwhere(support)[0])
        for b in range(r):
            for c in range(r):
                values = products[b, c][support]
                if not np.all(values == values[0]):
                    other = tuple(np.argwhere(support & (products[b, c] != values[0]))[0])
                    return WdrWitness(
                        h=h, i=part.types[b], j=part.types[c],
                        pair1=(int(first[0]), int(first[1])),
                        pair2=(int(other[0]), int(other[1])),
                        count1=int(values[0]), count2=int(products[b, c][other]),
                    )
                array[a, b, c] = values[0]

    array.setflags(write=False)
    return IntersectionTensor(
        types=part.types,
        array=array,
        valencies={t: int(part.valencies[t]) for t in part.types},
    )
