from .pipeline import analyze
from .report import AnalysisReport
from .search import run_work_items
from ..arcs import LemmaVerdict
from ..cayley import CayleySpec
from ..digraphs import Digraph, rows_strongly_connected

from collections import Counter
from dataclasses import dataclass, field
import logging
import time

from typing import Iterable, Mapping


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusFailure:
    """The first failed check of a corpus run and where it happened."""

    member: str
    check: str
    detail: str

    def to_dict(self) -> dict:
        return {'member': self.member, 'check': self.check, 'detail': self.detail}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'CorpusFailure':
        return cls(member=data['member'], check=data['check'], detail=data['detail'])


@dataclass(frozen=True)
class CorpusVerdict:
    """Aggregate of every check over a corpus.

    ``tally`` maps each check name to the number of members per status.
    Members that are not strongly connected are listed in ``skipped``.
    """

    members: int
    hypotheses_held: int
    skipped: tuple[str, ...] = ()
    tally: Mapping[str, Mapping[str, int]] = field(default_factory=dict)
    failure: CorpusFailure | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'members': self.members,
            'hypotheses_held': self.hypotheses_held,
            'skipped': list(self.skipped),
            'tally': {name: dict(sorted(counts.items()))
                      for name, counts in sorted(self.tally.items())},
            'failure': None if self.failure is None else self.failure.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'CorpusVerdict':
        failure = data['failure']
        return cls(
            members=data['members'],
            hypotheses_held=data['hypotheses_held'],
            skipped=tuple(data['skipped']),
            tally={name: dict(counts) for name, counts in data['tally'].items()},
            failure=None if failure is None else CorpusFailure.from_dict(failure),
        )


def _member_item(index: int, member: CayleySpec | Digraph) -> tuple[str, int, tuple[int, ...]]:
    if isinstance(member, CayleySpec):
        d = member.digraph()
        return (str(member), d.order, d.out_rows)
    return (f"member-{index}", member.order, member.out_rows)


def _verify_member(item: tuple[str, int, tuple[int, ...]]) -> AnalysisReport | None:
    label, order, rows = item
    d = Digraph.from_rows(order, rows)
    if not rows_strongly_connected(order, d.out_rows, d.in_rows):
        return None
    return analyze(d, label=label, certify=False, cross_check=True)


def corpus_verify(members: Iterable[CayleySpec | Digraph], workers: int = 1,
                  progress: bool = False) -> CorpusVerdict:
    """Analyze every member with cross-checks and aggregate all check outcomes.

    The reported failure is the first one in member order, and within a
    member the first in report order, so serial and parallel runs agree.
    An empty corpus passes.
    """
    start = time.perf_counter()
    items = [_member_item(k, m) for k, m in enumerate(members)]
    reports = run_work_items(_verify_member, items, total=len(items), workers=workers,
                             progress=progress, desc='corpus')

    tally: dict[str, Counter] = {}
    skipped, failure, held = [], None, 0
    for (label, _, _), report in zip(items, reports):
        if report is None:
            logger.warning("%s is not strongly connected; skipped", label)
            skipped.append(label)
            continue
        if report.hypotheses_hold:
            held += 1
        for verdict in report.verdicts():
            tally.setdefault(verdict.name, Counter())[str(verdict.status)] += 1
            if failure is None and verdict.status == LemmaVerdict.Status.FAILS:
                failure = CorpusFailure(label, verdict.name, verdict.detail)

    logger.info("corpus of %d members: %d within hypotheses, %.2fs",
                len(items), held, time.perf_counter() - start)
    return CorpusVerdict(
        members=len(items),
        hypotheses_held=held,
        skipped=tuple(skipped),
        tally={name: dict(counts) for name, counts in tally.items()},
        failure=failure,
    )
