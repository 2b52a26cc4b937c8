from .tensor import IntersectionTensor
from ..digraphs import TwoWayType, IDENTITY

import numpy as np

from typing import Iterable


type TypeSet = frozenset[TwoWayType]


def relation_product(E: Iterable[TwoWayType], F: Iterable[TwoWayType],
                     t: IntersectionTensor) -> TypeSet:
    """The set product ``EF``: the types ``h`` with ``sum p^h_{i,j} != 0`` over ``i in E, j in F``.

    Raises
    ------
    IntersectionTensor.UnknownTypeError
        If a member of `E` or `F` is not a type of `t`.
    """
    rows = [t.index(i) for i in E]
    cols = [t.index(j) for j in F]
    if not rows or not cols:
        return frozenset()
    block = t.array[:, rows, :][:, :, cols]
    totals = block.sum(axis=(1, 2))
    return frozenset(t.types[a] for a in np.nonzero(totals)[0])


def relation_power(i: TwoWayType, l: int, t: IntersectionTensor) -> TypeSet:
    """The ``l``-fold product ``{i}{i}...{i}``, evaluated left to right."""
    if l < 1:
        raise ValueError(f"`l` must be >= 1. Found {l}.")
    result = frozenset({i})
    for _ in range(l - 1):
        result = relation_product(result, {i}, t)
    return result


def closed_subset(generators: Iterable[TwoWayType], t: IntersectionTensor) -> TypeSet:
    """Smallest closed set containing `generators`.

    A set ``E`` is closed when ``{i*}{j}`` lies in ``E`` for all ``i, j`` in ``E``.
    """
    closed = set(generators)
    if not closed:
        raise ValueError("`generators` must be nonempty.")
    for g in closed:
        t.index(g)

    changed = True
    while changed:
        changed = False
        for i in sorted(closed):
            for j in sorted(closed):
                new = relation_product({i.conjugate}, {j}, t) - closed
                if new:
                    closed |= new
                    changed = True
    closed.add(IDENTITY)
    return frozenset(closed)


def check_product_associativity(t: IntersectionTensor) -> tuple[TwoWayType, TwoWayType, TwoWayType] | None:
    """First singleton triple with ``({a}{b}){c} != {a}({b}{c})``, or :py:obj:`None`."""
    for a in t.types:
        for b in t.types:
            ab = relation_product({a}, {b}, t)
            for c in t.types:
                left = relation_product(ab, {c}, t)
                right = relation_product({a}, relation_product({b}, {c}, t), t)
                if left != right:
                    return (a, b, c)
    return None
