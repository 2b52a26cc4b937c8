from .cayley_spec import CayleySpec
from ..digraphs import Digraph

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class CatalogEntry:
    """One of the nine circulants that are, up to isomorphism, every diameter-two
    weakly distance-regular digraph with a commutative regular scheme.

    ``branch`` names the case of the diameter-two analysis the entry comes
    from: ``pure`` when ``(1,2)`` is pure, ``c-config`` when
    ``p^{(1,1)}_{(1,2),(1,2)} != 0`` and ``d-config`` when
    ``p^{(1,2)}_{(1,1),(1,1)} != 0``.
    """

    label: str
    spec: CayleySpec
    branch: str

    @cached_property
    def digraph(self) -> Digraph:
        return self.spec.digraph(require_not_undirected=True)

    def __str__(self):
        return f"({self.label}) {self.spec}"


_CATALOG: tuple[tuple[str, int, tuple[int, ...], str], ...] = (
    ('i', 3, (1,), 'pure'),
    ('ii', 4, (1, 2), 'c-config'),
    ('iii', 6, (1, 3, 4), 'pure'),
    ('iv', 6, (1, 2, 3, 5), 'd-config'),
    ('v', 8, (1, 2, 5, 6), 'c-config'),
    ('vi', 8, (1, 2, 3, 5, 7), 'd-config'),
    ('vii', 12, (1, 3, 4, 7, 9, 10), 'pure'),
    ('viii', 12, (1, 3, 4, 5, 7, 9, 11), 'd-config'),
    ('ix', 12, (1, 2, 3, 5, 7, 8, 9, 11), 'd-config'),
)


def classification_catalog() -> tuple[CatalogEntry, ...]:
    """The nine diameter-two catalog entries, labelled ``i`` to ``ix``."""
    return tuple(
        CatalogEntry(label=label, spec=CayleySpec.cyclic(n, s), branch=branch)
        for label, n, s, branch in _CATALOG
    )
