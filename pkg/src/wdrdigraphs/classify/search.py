from .pipeline import analyze
from .report import AnalysisReport
from ..arcs import LemmaVerdict
from ..arcs.verdicts import Tally
from ..cayley import SearchRangeError, classification_catalog, \
    enumerate_circulants, count_circulants
from ..digraphs import Digraph, rows_strongly_connected
from ..iso import canonical_certificate

from tqdm import tqdm

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import batched, combinations, product
from math import comb
import logging
import time

from typing import Callable, Iterable, Mapping


logger = logging.getLogger(__name__)

MAX_ALL_DIGRAPHS_ORDER = 5

_CHUNK_SIZE = 64
_CHUNKS_PER_WORKER = 16


@dataclass(frozen=True)
class Survivor:
    label: str
    certificate: str
    report: AnalysisReport

    def to_dict(self) -> dict:
        return {'label': self.label, 'certificate': self.certificate,
                'report': self.report.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Survivor':
        return cls(label=data['label'], certificate=data['certificate'],
                   report=AnalysisReport.from_dict(data['report']))


@dataclass(frozen=True)
class ClassificationResult:
    """Certificate-distinct survivors of a search and how they match the catalog.

    ``matched_catalog`` maps a survivor label to the label (``i`` to ``ix``)
    of the catalog entry it is isomorphic to; ``unmatched`` lists survivors
    isomorphic to no entry.
    """

    survivors: tuple[Survivor, ...]
    matched_catalog: Mapping[str, str]
    unmatched: tuple[str, ...]
    candidates: int
    diameter: int | None
    checks: tuple[LemmaVerdict, ...] = ()

    def failures(self) -> list[LemmaVerdict]:
        out = [v for v in self.checks if v.failed]
        for s in self.survivors:
            out.extend(s.report.failures())
        return out

    def to_dict(self) -> dict:
        return {
            'candidates': self.candidates,
            'diameter': self.diameter,
            'survivors': [s.to_dict() for s in self.survivors],
            'matched_catalog': dict(sorted(self.matched_catalog.items())),
            'unmatched': list(self.unmatched),
            'checks': [v.to_dict() for v in self.checks],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'ClassificationResult':
        return cls(
            survivors=tuple(Survivor.from_dict(s) for s in data['survivors']),
            matched_catalog=dict(data['matched_catalog']),
            unmatched=tuple(data['unmatched']),
            candidates=data['candidates'],
            diameter=data['diameter'],
            checks=tuple(LemmaVerdict.from_dict(v) for v in data['checks']),
        )


# - - Work items - -

def _analyze_candidate(item: tuple[str, int, tuple[int, ...], int | None]) -> AnalysisReport | None:
    """Analyze one candidate in a worker; certify it only when it survives."""
    label, order, rows, diameter = item
    d = Digraph.from_rows(order, rows)
    if d.is_undirected() or not rows_strongly_connected(order, d.out_rows, d.in_rows):
        return None
    report = analyze(d, label=label, certify=False)
    if not report.is_survivor(diameter):
        return None
    return replace(report, certificate=canonical_certificate(d).hex())


def run_work_items(fn: Callable, items: Iterable, total: int | None = None,
                   workers: int = 1, progress: bool = False, desc: str = '') -> list:
    """``[fn(item) for item in items]``, across a process pool when ``workers > 1``.

    Results keep the order of `items` whatever the scheduling. Items are
    drawn from `items` in batches, so at most one batch is held in memory.
    """
    bar = tqdm(total=total, desc=desc, disable=not progress, leave=False)
    results = []
    try:
        if workers <= 1:
            for item in items:
                results.append(fn(item))
                bar.update()
        else:
            batch_size = workers * _CHUNK_SIZE * _CHUNKS_PER_WORKER
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for batch in batched(items, batch_size):
                    for result in pool.map(fn, batch, chunksize=_CHUNK_SIZE):
                        results.append(result)
                        bar.update()
    finally:
        bar.close()
    return results


def _dedupe(reports: Iterable[AnalysisReport | None]) -> tuple[Survivor, ...]:
    seen: dict[str, Survivor] = {}
    for report in reports:
        if report is None or report.certificate in seen:
            continue
        seen[report.certificate] = Survivor(report.label, report.certificate, report)
    return tuple(seen.values())


def _match_catalog(survivors: tuple[Survivor, ...], diameter: int | None,
                   candidates: int) -> ClassificationResult:
    catalog = {canonical_certificate(e.digraph).hex(): e for e in classification_catalog()}
    matched, unmatched = {}, []
    branch = Tally('branch-matches-catalog')
    for s in survivors:
        entry = catalog.get(s.certificate)
        if entry is None:
            unmatched.append(s.label)
            continue
        matched[s.label] = entry.label
        branch.record(s.report.diameter_two_branch == entry.branch,
                      f"{s.label}: branch {s.report.diameter_two_branch}, "
                      f"catalog entry ({entry.label}) has {entry.branch}")
    return ClassificationResult(
        survivors=survivors,
        matched_catalog=matched,
        unmatched=tuple(unmatched),
        candidates=candidates,
        diameter=diameter,
        checks=(branch.verdict(),),
    )


# - - Searches - -

def search_circulants(n_min: int, n_max: int, diameter: int | None = None,
                      workers: int = 1, progress: bool = False) -> ClassificationResult:
    """Analyze every circulant on ``n_min..n_max`` vertices that is not undirected.

    Survivors are the strongly connected weakly distance-regular circulants
    with a commutative regular scheme (of the given diameter, when given),
    deduplicated by certificate keeping the first in enumeration order, and
    matched against :py:func:`~wdrdigraphs.cayley.classification_catalog`.

    Raises
    ------
    SearchRangeError
        If the range is not within ``2 <= n_min <= n_max <= 16``.
    """
    start = time.perf_counter()
    total = count_circulants(n_min, n_max)
    items = ((str(spec), spec.order, spec.digraph().out_rows, diameter)
             for spec in enumerate_circulants(n_min, n_max))
    reports = run_work_items(_analyze_candidate, items, total=total, workers=workers,
                             progress=progress, desc='circulants')
    survivors = _dedupe(reports)
    logger.info("circulants %d..%d: %d candidates, %d survivors, %.2fs",
                n_min, n_max, total, len(survivors), time.perf_counter() - start)
    return _match_catalog(survivors, diameter, total)


def _regular_out_rows(n: int) -> Iterable[tuple[int, ...]]:
    """Out-neighbourhood rows of every loopless digraph on `n` vertices with
    constant out-degree."""
    for k in range(1, n):
        choices = []
        for x in range(n):
            others = [y for y in range(n) if y != x]
            choices.append([sum(1 << y for y in subset) for subset in combinations(others, k)])
        yield from product(*choices)


def _all_out_rows(n: int) -> Iterable[tuple[int, ...]]:
    for x_rows in product(range(1 << (n - 1)), repeat=n):
        rows = []
        for x, mask in enumerate(x_rows):
            low = mask & ((1 << x) - 1)
            high = (mask >> x) << (x + 1)
            rows.append(low | high)
        yield tuple(rows)


def _has_constant_in_degree(rows: tuple[int, ...], n: int) -> bool:
    degrees = [sum(row >> y & 1 for row in rows) for y in range(n)]
    return len(set(degrees)) == 1


def search_all_digraphs(max_n: int, diameter: int | None = None, prune: bool = True,
                        workers: int = 1, progress: bool = False) -> ClassificationResult:
    """Exhaustive search over every digraph on ``2..max_n`` vertices.

    With `prune`, only digraphs whose out-degrees and in-degrees are
    constant are analyzed, since weak distance-regularity forces both.
    Without it every arc set is analyzed.

    Raises
    ------
    SearchRangeError
        If `max_n` is not between 2 and 5.
    """
    if not 2 <= max_n <= MAX_ALL_DIGRAPHS_ORDER:
        raise SearchRangeError(
            f"Expected 2 <= max_n <= {MAX_ALL_DIGRAPHS_ORDER}. Found {max_n}."
        )
    start = time.perf_counter()

    def candidates():
        for n in range(2, max_n + 1):
            source = _regular_out_rows(n) if prune else _all_out_rows(n)
            for rows in source:
                if prune and not _has_constant_in_degree(rows, n):
                    continue
                yield (f"n{n}:" + ','.join(map(str, rows)), n, rows, diameter)

    if prune:
        total = sum(comb(n - 1, k) ** n for n in range(2, max_n + 1) for k in range(1, n))
    else:
        total = sum(1 << (n * (n - 1)) for n in range(2, max_n + 1))
    reports = run_work_items(_analyze_candidate, candidates(), workers=workers,
                             progress=progress, desc='digraphs')
    survivors = _dedupe(reports)
    logger.info("all digraphs up to %d (prune=%s): %d candidates enumerated, %d analyzed, "
                "%d survivors, %.2fs", max_n, prune, total, len(reports), len(survivors),
                time.perf_counter() - start)
    return _match_catalog(survivors, diameter, len(reports))
