from .cayley_spec import CayleySpec

from typing import Iterator


MAX_CIRCULANT_ORDER = 16


class SearchRangeError(ValueError):
    """Raised when a search range is empty or exceeds the supported orders."""
    pass


def _assert_range_valid(n_min: int, n_max: int):
    if not 2 <= n_min <= n_max <= MAX_CIRCULANT_ORDER:
        raise SearchRangeError(
            f"Expected 2 <= n_min <= n_max <= {MAX_CIRCULANT_ORDER}. "
            f"Found n_min={n_min}, n_max={n_max}."
        )


def _negated_mask(n: int, mask: int) -> int:
    negated = 0
    for k in range(1, n):
        if mask >> (k - 1) & 1:
            negated |= 1 << (n - k - 1)
    return negated


def enumerate_circulants(n_min: int, n_max: int,
                         exclude_undirected: bool = True) -> Iterator[CayleySpec]:
    """Every circulant connection set for ``n_min <= n <= n_max``.

    Connection sets are visited as bitmasks in ascending order, bit ``k-1``
    standing for the residue ``k``; ``n`` ascends in the outer loop.

    Raises
    ------
    SearchRangeError
        If the range is not within ``2 <= n_min <= n_max <= 16``.
    """
    _assert_range_valid(n_min, n_max)
    for n in range(n_min, n_max + 1):
        for mask in range(1, 1 << (n - 1)):
            if exclude_undirected and _negated_mask(n, mask) == mask:
                continue
            yield CayleySpec.cyclic(n, (k for k in range(1, n) if mask >> (k - 1) & 1))


def count_circulants(n_min: int, n_max: int, exclude_undirected: bool = True) -> int:
    return sum(1 for _ in enumerate_circulants(n_min, n_max, exclude_undirected))
