from .tensor import IntersectionTensor
from .products import relation_product
from ..digraphs import TwoWayType

from dataclasses import dataclass
from math import gcd
from typing import Mapping


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the valency identities every association scheme satisfies.

    ``triple_violation`` is the first ``(d, e, f)`` breaking
    ``k_f p^f_{d,e} = k_d p^d_{f,e*} = k_e p^e_{d*,f}``; ``bound_violation``
    the first ``(d, e)`` with ``|{d}{e}| > gcd(k_d, k_e)``. A violation
    points at a bug in the tensor, never at the digraph.
    """

    triple_violation: tuple[TwoWayType, TwoWayType, TwoWayType] | None
    bound_violation: tuple[TwoWayType, TwoWayType] | None

    @property
    def holds(self) -> bool:
        return self.triple_violation is None and self.bound_violation is None

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'triple_violation': None if self.triple_violation is None
                else [str(t) for t in self.triple_violation],
            'bound_violation': None if self.bound_violation is None
                else [str(t) for t in self.bound_violation],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'IdentityReport':
        triple = data['triple_violation']
        bound = data['bound_violation']
        return cls(
            triple_violation=None if triple is None else tuple(TwoWayType.parse(s) for s in triple),
            bound_violation=None if bound is None else tuple(TwoWayType.parse(s) for s in bound),
        )


def check_scheme_identities(t: IntersectionTensor) -> IdentityReport:
    triple_violation = None
    for d, e, f in t.triples():
        first = t.k(f) * t[f, d, e]
        second = t.k(d) * t[d, f, e.conjugate]
        third = t.k(e) * t[e, d.conjugate, f]
        if not first == second == third:
            triple_violation = (d, e, f)
            break

    bound_violation = None
    for d in t.types:
        for e in t.types:
            if len(relation_product({d}, {e}, t)) > gcd(t.k(d), t.k(e)):
                bound_violation = (d, e)
                break
        if bound_violation is not None:
            break

    return IdentityReport(triple_violation=triple_violation, bound_violation=bound_violation)
