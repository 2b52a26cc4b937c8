from .circuits import Circuit, circuits_through_arc
from ..digraphs import Digraph, Arc, RelationPartition, TwoWayType, arc_type

from dataclasses import dataclass
from typing import Mapping
import logging


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PurityEntry:
    """Purity of the arc type ``(1, q-1)``.

    ``witness`` is the first circuit of length ``q`` through an arc of this
    type that also uses an arc of another type; ``witness_types`` lists the
    types of its arcs in order.
    """

    q: int
    pure: bool
    witness: Circuit | None = None
    witness_types: tuple[TwoWayType, ...] | None = None

    def to_dict(self) -> dict:
        return {
            'q': self.q,
            'pure': self.pure,
            'witness': None if self.witness is None else self.witness.to_list(),
            'witness_types': None if self.witness_types is None
                else [str(t) for t in self.witness_types],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'PurityEntry':
        witness = data['witness']
        types = data['witness_types']
        return cls(
            q=data['q'],
            pure=data['pure'],
            witness=None if witness is None else Circuit(tuple(witness)),
            witness_types=None if types is None else tuple(TwoWayType.parse(s) for s in types),
        )


@dataclass(frozen=True)
class PurityReport:
    """Purity of every arc type present, keyed by circuit length ``q``."""

    entries: Mapping[int, PurityEntry]
    simple: bool = False

    @property
    def qs(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def has(self, q: int) -> bool:
        return q in self.entries

    def is_pure(self, q: int) -> bool:
        return self.entries[q].pure

    def is_mixed(self, q: int) -> bool:
        return not self.entries[q].pure

    def to_dict(self) -> dict:
        return {
            'simple': self.simple,
            'entries': [self.entries[q].to_dict() for q in self.qs],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'PurityReport':
        entries = [PurityEntry.from_dict(e) for e in data['entries']]
        return cls(entries={e.q: e for e in entries}, simple=data['simple'])


def arc_is_pure(d: Digraph, part: RelationPartition, arc: Arc,
                simple: bool = False) -> Circuit | None:
    """The first mixed circuit through `arc`, or :py:obj:`None` when `arc` is pure.

    An arc of type ``(1, q-1)`` is pure when every circuit of length ``q``
    through it consists of arcs of type ``(1, q-1)``.
    """
    t = part.type_of(*arc)
    if not t.is_arc:
        raise ValueError(f"{arc} is not an arc of the digraph.")
    q = t.circuit_length
    for circuit in circuits_through_arc(d, arc, q, simple=simple, distances=part.distances):
        if any(part.type_of(u, v) != t for u, v in circuit.arcs()):
            return circuit
    return None


def purity_report(d: Digraph, part: RelationPartition, simple: bool = False) -> PurityReport:
    """Check every arc of every arc type against the circuits through it.

    Arcs of a type are visited in lexicographic order and the first mixed
    circuit found is kept as the witness.

    Parameters
    ----------
    d : Digraph
    part : RelationPartition
        The two-way partition of `d`.
    simple : bool, default=False
        Only consider circuits with distinct vertices.

    Returns
    -------
    PurityReport
    """
    entries = {}
    for t in part.arc_types:
        q = t.circuit_length
        entry = PurityEntry(q=q, pure=True)
        for arc in sorted(part.pairs_by_type[t]):
            witness = arc_is_pure(d, part, arc, simple=simple)
            if witness is not None:
                entry = PurityEntry(
                    q=q, pure=False, witness=witness,
                    witness_types=tuple(part.type_of(u, v) for u, v in witness.arcs()),
                )
                logger.debug("arc type %s is mixed, witness %s", arc_type(q), witness)
                break
        entries[q] = entry
    return PurityReport(entries=entries, simple=simple)
