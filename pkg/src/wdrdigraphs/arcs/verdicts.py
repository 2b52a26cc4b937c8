from dataclasses import dataclass
from enum import StrEnum
from typing import Mapping


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of one conditional check on one digraph.

    A check is ``vacuous`` when its hypothesis never applies, ``holds``
    when it applies and every conclusion was confirmed, and ``fails``
    otherwise; ``detail`` then names the first counterexample. A check
    with a case it could not decide and no counterexample is
    ``inconclusive``, and ``detail`` names that case.
    """

    class Status(StrEnum):
        HOLDS = 'holds'
        VACUOUS = 'vacuous'
        FAILS = 'fails'
        INCONCLUSIVE = 'inconclusive'
        NOT_APPLICABLE = 'not-applicable'

    name: str
    status: Status
    detail: str = ''

    @property
    def failed(self) -> bool:
        return self.status == LemmaVerdict.Status.FAILS

    def to_dict(self) -> dict:
        return {'name': self.name, 'status': str(self.status), 'detail': self.detail}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'LemmaVerdict':
        return cls(name=data['name'], status=cls.Status(data['status']),
                   detail=data.get('detail', ''))


class Tally:
    """Accumulates the cases of one check into a single verdict."""

    def __init__(self, name: str):
        self.name = name
        self.applied = False
        self.failure: str | None = None
        self.undecided: str | None = None

    def record(self, ok: bool, detail: str):
        self.applied = True
        if not ok and self.failure is None:
            self.failure = detail

    def skip(self, detail: str):
        """Note a case the hypothesis covers but that could not be decided."""
        if self.undecided is None:
            self.undecided = detail

    def verdict(self) -> LemmaVerdict:
        if self.failure is not None:
            return LemmaVerdict(self.name, LemmaVerdict.Status.FAILS, self.failure)
        if self.undecided is not None:
            return LemmaVerdict(self.name, LemmaVerdict.Status.INCONCLUSIVE, self.undecided)
        if self.applied:
            return LemmaVerdict(self.name, LemmaVerdict.Status.HOLDS)
        return LemmaVerdict(self.name, LemmaVerdict.Status.VACUOUS)


def not_applicable(name: str, reason: str) -> LemmaVerdict:
    return LemmaVerdict(name, LemmaVerdict.Status.NOT_APPLICABLE, reason)
