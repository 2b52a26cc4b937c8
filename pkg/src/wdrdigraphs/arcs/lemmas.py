from .circuits import circuits_through_arc
from .configurations import ConfigReport
from .purity import PurityReport
from .verdicts import LemmaVerdict, Tally, not_applicable
from ..digraphs import Digraph, RelationPartition, TwoWayType, arc_type
from ..schemes import IntersectionTensor, SchemeReport, TypeSet, relation_product, \
    check_product_associativity, check_regular_values

from itertools import permutations


CHECK_NAMES = (
    'regular-values',
    'product-associativity',
    'square-disjointness',
    'product-pair-valency',
    'c-configuration-squares',
    'c-configuration-circuits',
    'd-configuration-squares',
    'pure-or-c-product-support',
    'd-product-support',
    'mixed-product-support',
    'symmetric-arc-products',
)


def _render(types: TypeSet) -> str:
    return '{' + ', '.join(map(str, sorted(types))) + '}'


# - - Unconditional consequences of a regular scheme - -

def _regular_values(t: IntersectionTensor) -> LemmaVerdict:
    tally = Tally('regular-values')
    found = check_regular_values(t)
    tally.record(found is None, f"h={found[0]}, i={found[1]}" if found else '')
    return tally.verdict()


def _associativity(t: IntersectionTensor) -> LemmaVerdict:
    tally = Tally('product-associativity')
    found = check_product_associativity(t)
    tally.record(found is None, "a, b, c = " + ', '.join(map(str, found)) if found else '')
    return tally.verdict()


def _square_disjointness(t: IntersectionTensor, qs: tuple[int, ...]) -> LemmaVerdict:
    tally = Tally('square-disjointness')
    for q in qs:
        square = relation_product({arc_type(q)}, {arc_type(q)}, t)
        for p in qs:
            if p == q:
                continue
            mixed = relation_product({arc_type(q)}, {arc_type(p)}, t)
            common = square & mixed
            tally.record(not common, f"q={q}, p={p}: common types {_render(common)}")
    return tally.verdict()


def _product_pair_valency(t: IntersectionTensor) -> LemmaVerdict:
    tally = Tally('product-pair-valency')
    for i in t.types:
        if i.is_diagonal:
            continue
        if len(relation_product({i}, {i.conjugate}, t)) == 2:
            tally.record(t.k(i) == 2, f"type {i}: valency {t.k(i)}")
    return tally.verdict()


# - - Configurations - -

def _c_squares(t: IntersectionTensor, configs: ConfigReport) -> LemmaVerdict:
    tally = Tally('c-configuration-squares')
    for q in configs.qs:
        if not configs.c_exists(q):
            continue
        square = relation_product({arc_type(q)}, {arc_type(q)}, t)
        allowed = ({arc_type(q - 1)}, {arc_type(q - 1), TwoWayType(2, q - 1)})
        tally.record(square in allowed, f"q={q}: square is {_render(square)}")
    return tally.verdict()


def _c_circuits(d: Digraph, part: RelationPartition, configs: ConfigReport) -> LemmaVerdict:
    tally = Tally('c-configuration-circuits')
    for q in configs.qs:
        if not configs.c_exists(q):
            continue
        allowed = {arc_type(q), arc_type(q - 1)}
        offending = None
        for arc in sorted(part.pairs_by_type[arc_type(q)]):
            for circuit in circuits_through_arc(d, arc, q, distances=part.distances):
                if any(part.type_of(u, v) not in allowed for u, v in circuit.arcs()):
                    offending = circuit
                    break
            if offending is not None:
                break
        tally.record(offending is None, f"q={q}: circuit {offending}")
    return tally.verdict()


def _d_squares(t: IntersectionTensor, qs: tuple[int, ...]) -> LemmaVerdict:
    tally = Tally('d-configuration-squares')
    for q in qs:
        lower = arc_type(q - 1) if q >= 3 else None
        if lower is None or t.get(arc_type(q), lower, lower.conjugate) == 0:
            continue
        square = relation_product({arc_type(q)}, {arc_type(q)}, t)
        allowed = ({TwoWayType(2, q - 2)}, {TwoWayType(2, q - 1)})
        tally.record(square in allowed, f"q={q}: square is {_render(square)}")
    return tally.verdict()


# - - Product support - -

def _product_support(name: str, t: IntersectionTensor, qs: tuple[int, ...],
                     applies) -> LemmaVerdict:
    """``p^{(1,q-1)}_{(1,s-1),(1,t-1)} != 0`` with ``s != t`` forces ``q`` into ``{s, t}``."""
    tally = Tally(name)
    for q in qs:
        if not applies(q):
            continue
        for s, u in permutations(qs, 2):
            if t[arc_type(q), arc_type(s), arc_type(u)] != 0:
                tally.record(q in (s, u), f"q={q}, s={s}, t={u}")
    return tally.verdict()


def _symmetric_arc_products(t: IntersectionTensor, purity: PurityReport) -> LemmaVerdict:
    tally = Tally('symmetric-arc-products')
    double = TwoWayType(1, 1)
    if not t.has_type(double):
        return tally.verdict()
    for q in purity.qs:
        if q < 3 or not purity.is_pure(q):
            continue
        product = relation_product({double}, {arc_type(q)}, t)
        allowed = ({arc_type(q)}, {TwoWayType(2, q)})
        tally.record(product in allowed, f"q={q}: product is {_render(product)}")
    return tally.verdict()


def conditional_lemma_suite(d: Digraph, part: RelationPartition, t: IntersectionTensor,
                            flags: SchemeReport, purity: PurityReport,
                            configs: ConfigReport) -> tuple[LemmaVerdict, ...]:
    """Evaluate every conditional structure check on one digraph.

    Each check looks for the situations its hypothesis describes and
    confirms the conclusion in each of them. A digraph outside the
    standing assumptions (weakly distance-regular, commutative, regular)
    gets ``not-applicable`` for every check.

    Returns
    -------
    tuple of LemmaVerdict
        One verdict per name in :py:data:`CHECK_NAMES`, in that order.
    """
    if not flags.hypotheses_hold:
        return tuple(not_applicable(name, "scheme is not commutative and regular")
                     for name in CHECK_NAMES)

    qs = purity.qs
    return (
        _regular_values(t),
        _associativity(t),
        _square_disjointness(t, qs),
        _product_pair_valency(t),
        _c_squares(t, configs),
        _c_circuits(d, part, configs),
        _d_squares(t, qs),
        _product_support('pure-or-c-product-support', t, qs,
                         lambda q: purity.is_pure(q) or configs.c_exists(q)),
        _product_support('d-product-support', t, qs, configs.d_exists),
        _product_support('mixed-product-support', t, qs, lambda q: True),
        _symmetric_arc_products(t, purity),
    )
