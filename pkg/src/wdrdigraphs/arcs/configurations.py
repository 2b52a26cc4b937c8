from .purity import PurityReport
from ..digraphs import arc_type
from ..schemes import IntersectionTensor, SchemeReport

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Mapping


@dataclass(frozen=True)
class ConfigEntry:
    """The two configurations for one circuit length ``q``.

    ``c_value`` is ``p^{(1,q-2)}_{(1,q-1),(1,q-1)}`` and ``d_value`` is
    ``p^{(1,q-1)}_{(1,q-2),(q-2,1)}``; both are zero when ``(1,q-2)`` is not
    a type, in which case ``lower_pure`` is :py:obj:`None`.
    """

    q: int
    c_value: int
    d_value: int
    lower_pure: bool | None

    @property
    def c_exists(self) -> bool:
        return self.c_value != 0 and bool(self.lower_pure)

    @property
    def d_exists(self) -> bool:
        return self.d_value != 0 and bool(self.lower_pure)

    def to_dict(self) -> dict:
        return {
            'q': self.q,
            'c_exists': self.c_exists,
            'd_exists': self.d_exists,
            'c_value': self.c_value,
            'd_value': self.d_value,
            'lower_pure': self.lower_pure,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'ConfigEntry':
        return cls(q=data['q'], c_value=data['c_value'], d_value=data['d_value'],
                   lower_pure=data['lower_pure'])


@dataclass(frozen=True)
class ConfigReport:
    entries: Mapping[int, ConfigEntry]

    @property
    def qs(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def c_exists(self, q: int) -> bool:
        entry = self.entries.get(q)
        return entry is not None and entry.c_exists

    def d_exists(self, q: int) -> bool:
        entry = self.entries.get(q)
        return entry is not None and entry.d_exists

    def to_dict(self) -> dict:
        return {'entries': [self.entries[q].to_dict() for q in self.qs]}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'ConfigReport':
        entries = [ConfigEntry.from_dict(e) for e in data['entries']]
        return cls(entries={e.q: e for e in entries})


def config_report(t: IntersectionTensor, pr: PurityReport) -> ConfigReport:
    """Decide which of the configurations ``C(q)`` and ``D(q)`` exist.

    ``C(q)`` exists when ``p^{(1,q-2)}_{(1,q-1),(1,q-1)} != 0``, and ``D(q)``
    when ``p^{(1,q-1)}_{(1,q-2),(q-2,1)} != 0``; both further require the
    arc type ``(1,q-2)`` to be pure. One entry is made per arc type present.
    """
    entries = {}
    for q in pr.qs:
        upper = arc_type(q)
        if q < 3 or not t.has_type(arc_type(q - 1)):
            entries[q] = ConfigEntry(q=q, c_value=0, d_value=0, lower_pure=None)
            continue
        lower = arc_type(q - 1)
        entries[q] = ConfigEntry(
            q=q,
            c_value=t[lower, upper, upper],
            d_value=t[upper, lower, lower.conjugate],
            lower_pure=pr.is_pure(q - 1),
        )
    return ConfigReport(entries=entries)


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Whether "``(1,q-1)`` is mixed iff ``C(q)`` or ``D(q)`` exists" holds for each ``q``."""

    class Status(StrEnum):
        CONSISTENT = 'consistent'
        INCONSISTENT = 'inconsistent'
        NOT_APPLICABLE = 'not-applicable'

    status: Status
    per_q: Mapping[int, bool] = field(default_factory=dict)

    @property
    def first_inconsistent(self) -> int | None:
        return next((q for q in sorted(self.per_q) if not self.per_q[q]), None)

    def to_dict(self) -> dict:
        return {
            'status': str(self.status),
            'per_q': {str(q): self.per_q[q] for q in sorted(self.per_q)},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'CharacterizationVerdict':
        return cls(
            status=cls.Status(data['status']),
            per_q={int(q): v for q, v in data['per_q'].items()},
        )


def verify_mixed_arc_characterization(pr: PurityReport, cr: ConfigReport,
                                      flags: SchemeReport) -> CharacterizationVerdict:
    """Compare purity against configuration existence for every ``q``.

    The equivalence is only claimed for weakly distance-regular digraphs
    whose scheme is commutative and regular; otherwise the verdict is
    ``not-applicable``.
    """
    if not flags.hypotheses_hold:
        return CharacterizationVerdict(CharacterizationVerdict.Status.NOT_APPLICABLE)

    per_q = {
        q: pr.is_mixed(q) == (cr.c_exists(q) or cr.d_exists(q))
        for q in pr.qs
    }
    status = (CharacterizationVerdict.Status.CONSISTENT if all(per_q.values())
              else CharacterizationVerdict.Status.INCONSISTENT)
    return CharacterizationVerdict(status=status, per_q=per_q)
