from dataclasses import dataclass
from numbers import Integral
import re

from typing import Self


_TYPE_PATTERN = re.compile(r'^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$')


@dataclass(frozen=True, order=True, slots=True)
class TwoWayType:
    """The two-way distance ``(d(x, y), d(y, x))`` of an ordered vertex pair.

    Instances index the relations of the two-way distance partition. The
    dataclass ordering is lexicographic on ``(forward, backward)``, which is
    the order used for every listing of types in this package.

    Parameters
    ----------
    forward : int
        Distance from the first vertex to the second.
    backward : int
        Distance from the second vertex back to the first.

    Raises
    ------
    TypeError
        If either component is not an integer.
    ValueError
        If a component is negative, or exactly one component is zero.
    """

    forward: int
    backward: int

    def __post_init__(self):
        self._assert_components_valid(self.forward, self.backward)

    # - - Assertions - -

    @staticmethod
    def _assert_components_valid(forward, backward):
        for name, value in (('forward', forward), ('backward', backward)):
            if isinstance(value, bool) or not isinstance(value, Integral):
                raise TypeError(
                    f"`{name}` must be an integer. Found object of type "
                    f"{type(value).__name__}"
                )
            if value < 0:
                raise ValueError(f"`{name}` must be >= 0. Found {value}.")

        if (forward == 0) != (backward == 0):
            raise ValueError(
                "Only the diagonal type (0,0) may have a zero component. "
                f"Found ({forward},{backward})."
            )

    # - - Properties - -

    @property
    def conjugate(self) -> 'TwoWayType':
        """The reversed type ``(backward, forward)``."""
        return TwoWayType(self.backward, self.forward)

    @property
    def is_diagonal(self) -> bool:
        return self.forward == 0

    @property
    def is_arc(self) -> bool:
        """Whether pairs of this type are arcs, i.e. ``forward == 1``."""
        return self.forward == 1

    @property
    def is_symmetric(self) -> bool:
        return self.forward == self.backward

    @property
    def circuit_length(self) -> int:
        """For an arc type ``(1, q-1)``, the length ``q`` of its shortest circuits."""
        if not self.is_arc:
            raise ValueError(f"{self} is not an arc type.")
        return self.backward + 1

    # - - Conversions - -

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the ``(a,b)`` rendering produced by ``str``."""
        match = _TYPE_PATTERN.match(text.strip())
        if match is None:
            raise ValueError(f"Cannot parse a two-way type from {text!r}.")
        return cls(int(match.group(1)), int(match.group(2)))

    def as_tuple(self) -> tuple[int, int]:
        return (self.forward, self.backward)

    def __str__(self):
        return f"({self.forward},{self.backward})"


IDENTITY = TwoWayType(0, 0)


def arc_type(q: int) -> TwoWayType:
    """The arc type ``(1, q-1)`` whose arcs lie on circuits of length ``q``."""
    return TwoWayType(1, q - 1)
