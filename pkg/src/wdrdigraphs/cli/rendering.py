from ..arcs import LemmaVerdict, PurityEntry
from ..cayley import CatalogEntry
from ..classify import AnalysisReport, ClassificationResult, CorpusVerdict

import json

from typing import Iterable, Literal


type Renderable = AnalysisReport | ClassificationResult | CorpusVerdict
type Format = Literal['text', 'json']

FORMATS = ('text', 'json')

_KINDS = {
    'analysis': AnalysisReport,
    'classification': ClassificationResult,
    'corpus': CorpusVerdict,
}


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def _verdict_line(v: LemmaVerdict) -> str:
    line = f"check {v.name}: {v.status}"
    return f"{line} ({v.detail})" if v.detail else line


def _witness_line(entry: PurityEntry) -> str:
    """``0 -(1,2)-> 2 -(1,1)-> 1 -(1,1)-> 0``"""
    vertices = entry.witness.vertices
    parts = [str(vertices[0])]
    for k, t in enumerate(entry.witness_types):
        parts.append(f"-{t}-> {vertices[(k + 1) % len(vertices)]}")
    return ' '.join(parts)


# - - Text - -

def _analysis_lines(r: AnalysisReport) -> list[str]:
    lines = [
        f"digraph: {r.label or 'input'}",
        f"certificate: {r.certificate or 'none'}",
        f"order: {r.order}",
        f"arcs: {r.arc_count}",
        f"strongly connected: {_flag(r.strongly_connected)}",
        f"not undirected: {_flag(r.not_undirected)}",
        f"diameter: {r.diameter}",
        "types: " + ' '.join(f"{t}:{k}" for t, k in r.types),
        f"wdr: {_flag(r.scheme.is_wdr)}",
    ]
    if not r.scheme.is_wdr:
        w = r.scheme.wdr_witness
        lines.append(
            f"wdr witness: h={w.h} i={w.i} j={w.j} pairs {w.pair1} {w.pair2} "
            f"counts {w.count1} {w.count2}"
        )
    else:
        s = r.scheme
        lines += [
            f"commutative: {_flag(s.commutative)}",
            f"regular: {_flag(s.regular)}",
            f"max valency: {s.max_valency}",
            f"thin: {_flag(s.thin)}",
            f"quasi-thin: {_flag(s.quasi_thin)}",
            f"equivalenced: {'none' if s.equivalenced is None else s.equivalenced}",
        ]
    if r.purity is not None:
        for q in r.purity.qs:
            entry = r.purity.entries[q]
            if entry.pure:
                lines.append(f"purity q={q}: pure")
            else:
                lines.append(f"purity q={q}: mixed, witness {_witness_line(entry)}")
    if r.configs is not None:
        for q in r.configs.qs:
            c = r.configs.entries[q]
            lines.append(f"config q={q}: C {_flag(c.c_exists)} ({c.c_value}), "
                         f"D {_flag(c.d_exists)} ({c.d_value})")
    if r.characterization is not None:
        lines.append(f"mixed-arc characterization: {r.characterization.status}")
    lines += [_verdict_line(v) for v in r.verdicts()]
    if r.diameter_two_branch is not None:
        lines.append(f"diameter-two branch: {r.diameter_two_branch}")
    if r.stopped_at is not None:
        lines.append(f"stopped at: {r.stopped_at}")
    return lines


def _classification_lines(c: ClassificationResult) -> list[str]:
    lines = [
        f"candidates: {c.candidates}",
        f"diameter filter: {'none' if c.diameter is None else c.diameter}",
    ]
    for s in c.survivors:
        match = c.matched_catalog.get(s.label)
        target = f"catalog ({match})" if match else 'unmatched'
        lines.append(f"survivor {s.label}: {target}, diameter {s.report.diameter}, "
                     f"branch {s.report.diameter_two_branch or 'none'}")
    lines += [_verdict_line(v) for v in c.checks]
    lines.append(f"survivors: {len(c.survivors)} / catalog matched: {len(c.matched_catalog)} "
                 f"/ unmatched: {len(c.unmatched)}")
    return lines


def _corpus_lines(v: CorpusVerdict) -> list[str]:
    lines = [f"members: {v.members}", f"within hypotheses: {v.hypotheses_held}"]
    lines += [f"skipped: {label}" for label in v.skipped]
    for name in sorted(v.tally):
        counts = ', '.join(f"{status} {n}" for status, n in sorted(v.tally[name].items()))
        lines.append(f"check {name}: {counts}")
    if v.failure is not None:
        f = v.failure
        lines.append(f"failure: {f.member} {f.check} ({f.detail})")
    lines.append(f"passed: {_flag(v.passed)}")
    return lines


# - - Public - -

def render_report(obj: Renderable, fmt: Format = 'text') -> str:
    """Render a report deterministically as text or as a JSON document.

    The JSON document carries a ``kind`` key so that :py:func:`load_report`
    can rebuild the object.
    """
    if fmt not in FORMATS:
        raise ValueError(f"`fmt` must be one of {FORMATS}. Found {fmt!r}.")
    kind = next(k for k, cls in _KINDS.items() if isinstance(obj, cls))
    if fmt == 'json':
        return json.dumps({'kind': kind, **obj.to_dict()}, indent=2, sort_keys=True)
    match obj:
        case AnalysisReport():
            lines = _analysis_lines(obj)
        case ClassificationResult():
            lines = _classification_lines(obj)
        case _:
            lines = _corpus_lines(obj)
    return '\n'.join(lines)


def load_report(text: str) -> Renderable:
    """Rebuild a report from its JSON rendering."""
    data = json.loads(text)
    try:
        cls = _KINDS[data.pop('kind')]
    except KeyError as e:
        raise ValueError(f"Unknown or missing report kind in {list(data)[:3]}...") from e
    return cls.from_dict(data)


def render_catalog(entries: Iterable[CatalogEntry], fmt: Format = 'text') -> str:
    rows = [
        {
            'label': e.label,
            'spec': str(e.spec),
            'order': e.spec.order,
            'out_degree': len(e.spec.connection_set),
            'branch': e.branch,
        }
        for e in entries
    ]
    if fmt == 'json':
        return json.dumps({'kind': 'catalog', 'entries': rows}, indent=2, sort_keys=True)
    return '\n'.join(
        f"({r['label']}) {r['spec']}: order {r['order']}, out-degree {r['out_degree']}, "
        f"branch {r['branch']}"
        for r in rows
    )
