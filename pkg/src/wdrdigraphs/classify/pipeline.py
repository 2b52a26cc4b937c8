from .report import AnalysisReport, valency_value
from ..arcs import PurityReport, LemmaVerdict, purity_report, config_report, \
    verify_mixed_arc_characterization, check_delta_structure, conditional_lemma_suite
from ..arcs.verdicts import Tally
from ..digraphs import Digraph, RelationPartition, TwoWayType, two_way_partition, arc_type
from ..iso import canonical_certificate, MAX_ORDER
from ..schemes import IntersectionTensor, WdrWitness, SchemeReport, intersection_tensor, \
    intersection_tensor_from_matrices, scheme_flags, check_scheme_identities

import logging
import warnings


logger = logging.getLogger(__name__)

PURE_BRANCH = 'pure'
C_BRANCH = 'c-config'
D_BRANCH = 'd-config'

_DIAMETER_TWO_TYPES = frozenset({
    TwoWayType(0, 0), TwoWayType(1, 1), TwoWayType(1, 2), TwoWayType(2, 1), TwoWayType(2, 2),
})


def diameter_two_branch(t: IntersectionTensor, purity: PurityReport) -> str | None:
    """Which case of the diameter-two analysis a digraph falls under.

    ``pure`` when ``(1,2)`` is pure, otherwise ``c-config`` when
    ``p^{(1,1)}_{(1,2),(1,2)} != 0`` and ``d-config`` when
    ``p^{(1,2)}_{(1,1),(1,1)} != 0``; :py:obj:`None` if ``(1,2)`` is absent
    or no case applies.
    """
    upper, double = arc_type(3), TwoWayType(1, 1)
    if not purity.has(3):
        return None
    if purity.is_pure(3):
        return PURE_BRANCH
    if t.get(double, upper, upper) != 0:
        return C_BRANCH
    if t.get(upper, double, double) != 0:
        return D_BRANCH
    return None


def _diameter_two_check(part: RelationPartition, branch: str | None) -> LemmaVerdict:
    tally = Tally('diameter-two-types')
    if part.diameter == 2:
        extra = set(part.types) - _DIAMETER_TWO_TYPES
        tally.record(not extra, "unexpected types " + ', '.join(map(str, sorted(extra))))
        tally.record(len(part.arc_types) <= 2, f"{len(part.arc_types)} arc types")
        tally.record(branch is not None, "no diameter-two case applies")
    return tally.verdict()


def _tensor_oracle_check(d: Digraph, part: RelationPartition,
                         t: IntersectionTensor) -> LemmaVerdict:
    tally = Tally('tensor-oracle')
    other = intersection_tensor_from_matrices(d, part)
    tally.record(isinstance(other, IntersectionTensor) and other == t,
                 "matrix-product tensor differs from the counted tensor")
    return tally.verdict()


def _circuit_modes_check(d: Digraph, part: RelationPartition,
                         purity: PurityReport) -> LemmaVerdict:
    tally = Tally('circuit-modes-agree')
    simple = purity_report(d, part, simple=True)
    for q in purity.qs:
        tally.record(simple.is_pure(q) == purity.is_pure(q),
                     f"q={q}: closed walks say {'pure' if purity.is_pure(q) else 'mixed'}, "
                     f"simple circuits say {'pure' if simple.is_pure(q) else 'mixed'}")
    return tally.verdict()


def _certificate(d: Digraph, certify: bool) -> str | None:
    if not certify:
        return None
    if d.order > MAX_ORDER:
        warnings.warn(f"No certificate for a digraph of order {d.order} > {MAX_ORDER}.",
                      UserWarning)
        return None
    return canonical_certificate(d).hex()


def analyze(d: Digraph, label: str | None = None, certify: bool = True,
            cross_check: bool = False) -> AnalysisReport:
    """Run the full analysis pipeline on a digraph.

    The stages are the two-way partition, the intersection tensor, the
    scheme flags and identities, arc purity, configurations, the mixed-arc
    characterization, the component structure checks and the conditional
    lemma suite. A digraph that is not weakly distance-regular stops after
    the tensor stage.

    Parameters
    ----------
    d : Digraph
        A strongly connected digraph.
    label : str, optional
        A name carried into the report, such as a Cayley spec string.
    certify : bool, default=True
        Compute the canonical certificate (orders up to 16).
    cross_check : bool, default=False
        Also recompute the tensor from indicator matrix products and purity
        from simple circuits, and record whether they agree.

    Returns
    -------
    AnalysisReport

    Raises
    ------
    Digraph.NotStronglyConnectedError
        If `d` is not strongly connected.
    """
    part = two_way_partition(d)
    base = dict(
        label=label,
        certificate=_certificate(d, certify),
        order=d.order,
        arc_count=d.arc_count,
        strongly_connected=True,
        not_undirected=not d.is_undirected(),
        diameter=part.diameter,
        types=tuple((t, valency_value(part.valencies[t])) for t in part.types),
    )

    t = intersection_tensor(d, part)
    if isinstance(t, WdrWitness):
        logger.debug("%s is not weakly distance-regular", label or d)
        return AnalysisReport(scheme=SchemeReport.not_wdr(t), stopped_at='wdr', **base)

    flags = scheme_flags(t)
    identities = check_scheme_identities(t)
    if not flags.hypotheses_hold:
        logger.debug("%s: scheme is not commutative and regular", label or d)
        checks = (_tensor_oracle_check(d, part, t),) if cross_check else ()
        return AnalysisReport(scheme=flags, identities=identities, checks=checks,
                              stopped_at='hypotheses', **base)

    purity = purity_report(d, part)
    configs = config_report(t, purity)
    characterization = verify_mixed_arc_characterization(purity, configs, flags)
    delta = check_delta_structure(d, part, t, flags)
    lemmas = conditional_lemma_suite(d, part, t, flags, purity, configs)

    branch = diameter_two_branch(t, purity) if part.diameter == 2 else None
    checks = [_diameter_two_check(part, branch)]
    if cross_check:
        checks.append(_tensor_oracle_check(d, part, t))
        checks.append(_circuit_modes_check(d, part, purity))

    return AnalysisReport(
        scheme=flags,
        identities=identities,
        purity=purity,
        configs=configs,
        characterization=characterization,
        delta=delta,
        lemmas=lemmas,
        checks=tuple(checks),
        diameter_two_branch=branch,
        **base,
    )
