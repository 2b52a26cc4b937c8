from ..arcs import PurityReport, ConfigReport, CharacterizationVerdict, LemmaVerdict
from ..digraphs import TwoWayType, NON_CONSTANT
from ..schemes import SchemeReport, IdentityReport

from dataclasses import dataclass
from typing import Mapping


type Valency = int | str


def _optional(data: Mapping, key: str, cls):
    value = data.get(key)
    return None if value is None else cls.from_dict(value)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analysis pipeline learned about one digraph.

    Stages that were not reached are :py:obj:`None` (or empty), and
    ``stopped_at`` names the first stage whose preconditions failed:
    ``wdr`` when the digraph is not weakly distance-regular, ``hypotheses``
    when the scheme is not both commutative and regular.
    """

    label: str | None
    certificate: str | None
    order: int
    arc_count: int
    strongly_connected: bool
    not_undirected: bool
    diameter: int
    types: tuple[tuple[TwoWayType, Valency], ...]
    scheme: SchemeReport
    identities: IdentityReport | None = None
    purity: PurityReport | None = None
    configs: ConfigReport | None = None
    characterization: CharacterizationVerdict | None = None
    delta: tuple[LemmaVerdict, ...] = ()
    lemmas: tuple[LemmaVerdict, ...] = ()
    checks: tuple[LemmaVerdict, ...] = ()
    diameter_two_branch: str | None = None
    stopped_at: str | None = None

    # - - Queries - -

    @property
    def hypotheses_hold(self) -> bool:
        return self.scheme.hypotheses_hold

    def is_survivor(self, diameter: int | None = None) -> bool:
        """Not undirected, weakly distance-regular with a commutative regular
        scheme, and of the given diameter when one is given."""
        return (self.strongly_connected and self.not_undirected and self.hypotheses_hold
                and (diameter is None or self.diameter == diameter))

    def verdicts(self) -> list[LemmaVerdict]:
        """Every check outcome in the report as a flat list, identities first."""
        out = []
        if self.identities is not None:
            holds, fails = LemmaVerdict.Status.HOLDS, LemmaVerdict.Status.FAILS
            triple = self.identities.triple_violation
            bound = self.identities.bound_violation
            out.append(LemmaVerdict(
                'triple-identity', holds if triple is None else fails,
                '' if triple is None else 'd, e, f = ' + ', '.join(map(str, triple))))
            out.append(LemmaVerdict(
                'product-size-bound', holds if bound is None else fails,
                '' if bound is None else 'd, e = ' + ', '.join(map(str, bound))))
        if self.characterization is not None:
            out.append(_characterization_verdict(self.characterization))
        out.extend(self.delta)
        out.extend(self.lemmas)
        out.extend(self.checks)
        return out

    def failures(self) -> list[LemmaVerdict]:
        return [v for v in self.verdicts() if v.failed]

    # - - Serialization - -

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'certificate': self.certificate,
            'order': self.order,
            'arc_count': self.arc_count,
            'strongly_connected': self.strongly_connected,
            'not_undirected': self.not_undirected,
            'diameter': self.diameter,
            'types': [{'type': str(t), 'valency': k} for t, k in self.types],
            'scheme': self.scheme.to_dict(),
            'identities': None if self.identities is None else self.identities.to_dict(),
            'purity': None if self.purity is None else self.purity.to_dict(),
            'configs': None if self.configs is None else self.configs.to_dict(),
            'characterization': None if self.characterization is None
                else self.characterization.to_dict(),
            'delta': [v.to_dict() for v in self.delta],
            'lemmas': [v.to_dict() for v in self.lemmas],
            'checks': [v.to_dict() for v in self.checks],
            'diameter_two_branch': self.diameter_two_branch,
            'stopped_at': self.stopped_at,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> 'AnalysisReport':
        return cls(
            label=data['label'],
            certificate=data['certificate'],
            order=data['order'],
            arc_count=data['arc_count'],
            strongly_connected=data['strongly_connected'],
            not_undirected=data['not_undirected'],
            diameter=data['diameter'],
            types=tuple((TwoWayType.parse(e['type']), e['valency']) for e in data['types']),
            scheme=SchemeReport.from_dict(data['scheme']),
            identities=_optional(data, 'identities', IdentityReport),
            purity=_optional(data, 'purity', PurityReport),
            configs=_optional(data, 'configs', ConfigReport),
            characterization=_optional(data, 'characterization', CharacterizationVerdict),
            delta=tuple(LemmaVerdict.from_dict(v) for v in data['delta']),
            lemmas=tuple(LemmaVerdict.from_dict(v) for v in data['lemmas']),
            checks=tuple(LemmaVerdict.from_dict(v) for v in data['checks']),
            diameter_two_branch=data['diameter_two_branch'],
            stopped_at=data['stopped_at'],
        )


def _characterization_verdict(c: CharacterizationVerdict) -> LemmaVerdict:
    name = 'mixed-arc-characterization'
    match c.status:
        case CharacterizationVerdict.Status.CONSISTENT:
            return LemmaVerdict(name, LemmaVerdict.Status.HOLDS)
        case CharacterizationVerdict.Status.INCONSISTENT:
            return LemmaVerdict(name, LemmaVerdict.Status.FAILS, f"q={c.first_inconsistent}")
        case _:
            return LemmaVerdict(name, LemmaVerdict.Status.NOT_APPLICABLE)


def valency_value(k) -> Valency:
    return NON_CONSTANT if k == NON_CONSTANT else int(k)
