from .tensor import IntersectionTensor, WdrWitness
from .products import relation_product
from ..digraphs import TwoWayType

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class SchemeReport:
    """Structural flags of the scheme attached to a digraph.

    A digraph that is not weakly distance-regular gets a report with
    ``is_wdr`` false, its witness, and every other flag false.
    """

    is_wdr: bool
    wdr_witness: WdrWitness | None
    commutative: bool
    regular: bool
    max_valency: int
    thin: bool
    quasi_thin: bool
    equivalenced: int | None

    @classmethod
    def not_wdr(cls, witness: WdrWitness) -> 'SchemeReport':
        return cls(
            is_wdr=False, wdr_witness=witness, commutative=False, regular=False,
            max_valency=0, thin=False, quasi_thin=False, equivalenced=None,
        )

    @property
    def hypotheses_hold(self) -> bool:
        """Weakly distance-regular, commutative and regular."""
        return self.is_wdr and self.commutative and self.regular

    def to_dict(self) -> dict:
        return {
            'is_wdr': self.is_wdr,
            'wdr_witness': None if self.wdr_witness is None else self.wdr_witness.to_dict(),
            'commutative': self.commutative,
            'regular': self.regular,
            'max_valency': self.max_valency,
            'thin': self.thin,
            'quasi_thin': self.quasi_thin,
            'equivalenced': self.equivalenced,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'SchemeReport':
        witness = data['wdr_witness']
        return cls(
            is_wdr=data['is_wdr'],
            wdr_witness=None if witness is None else WdrWitness.from_dict(witness),
            commutative=data['commutative'],
            regular=data['regular'],
            max_valency=data['max_valency'],
            thin=data['thin'],
            quasi_thin=data['quasi_thin'],
            equivalenced=data['equivalenced'],
        )


def is_commutative(t: IntersectionTensor) -> bool:
    return bool((t.array == t.array.transpose(0, 2, 1)).all())


def is_regular(t: IntersectionTensor) -> bool:
    """Whether ``{i*}({i}{i}) == {i}`` for every type ``i``, the identity included."""
    for i in t.types:
        square = relation_product({i}, {i}, t)
        if relation_product({i.conjugate}, square, t) != {i}:
            return False
    return True


def scheme_flags(t: IntersectionTensor) -> SchemeReport:
    """Commutativity, regularity and valency flags of a tensor."""
    nontrivial = [t.k(i) for i in t.types if not i.is_diagonal]
    max_valency = max(t.valencies.values())
    equal = set(nontrivial)

    return SchemeReport(
        is_wdr=True,
        wdr_witness=None,
        commutative=is_commutative(t),
        regular=is_regular(t),
        max_valency=max_valency,
        thin=max_valency == 1,
        quasi_thin=max_valency == 2,
        equivalenced=equal.pop() if len(equal) == 1 else None,
    )


def check_regular_values(t: IntersectionTensor) -> tuple[TwoWayType, TwoWayType] | None:
    """First ``(h, i)`` with ``p^h_{i,i}`` or ``p^h_{i,i*}`` outside ``{0, k_i}``.

    Only meaningful for regular schemes, where no such pair exists.
    """
    for h in t.types:
        for i in t.types:
            k = t.k(i)
            if t[h, i, i] not in (0, k) or t[h, i, i.conjugate] not in (0, k):
                return (h, i)
    return None
