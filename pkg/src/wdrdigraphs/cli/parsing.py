from ..cayley import CayleySpec
from ..digraphs import Digraph, Arc, build_digraph

from dataclasses import dataclass


@dataclass(frozen=True)
class InputParser:
    """Reads a digraph from an edge list or a Cayley spec string.

    Edge lists start with a header ``n <order>`` followed by one arc
    ``<u> <v>`` per line. A Cayley spec is a single line
    ``cay:zn:<n>:<c1>,...`` or ``cay:prod:<q>x<m>:<a.b>,...``. Blank lines
    and lines starting with ``#`` are ignored in both forms.

    Parameters
    ----------
    allow_undirected : bool, default=False
        Accept digraphs whose arcs all come in opposite pairs.
    """

    allow_undirected: bool = False

    class ParsingError(ValueError):
        """Raised for a malformed input line; ``line_number`` is 1-based."""

        def __init__(self, line_number: int, message: str):
            super().__init__(f"line {line_number}: {message}")
            self.line_number = line_number

    @staticmethod
    def _content_lines(text: str) -> list[tuple[int, str]]:
        lines = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line and not line.startswith('#'):
                lines.append((number, line))
        return lines

    def parse(self, text: str) -> Digraph:
        """
        Raises
        ------
        InputParser.ParsingError
            If a line is malformed or the input is empty.
        CayleySpec.ConnectionSetError
            If a Cayley spec has an invalid connection set.
        Digraph.UndirectedError, Digraph.LoopError, Digraph.DuplicateArcError, Digraph.VertexRangeError
            Propagated from :py:func:`~wdrdigraphs.digraphs.build_digraph`.
        """
        lines = self._content_lines(text)
        if not lines:
            raise InputParser.ParsingError(1, "input is empty")

        first_number, first = lines[0]
        if first.startswith('cay:'):
            if len(lines) > 1:
                raise InputParser.ParsingError(lines[1][0], "unexpected content after a Cayley spec")
            try:
                spec = CayleySpec.parse(first)
            except CayleySpec.ConnectionSetError:
                raise
            except ValueError as e:
                raise InputParser.ParsingError(first_number, str(e)) from e
            return spec.digraph(require_not_undirected=not self.allow_undirected)

        order = self._parse_header(first_number, first)
        arcs: list[Arc] = []
        for number, line in lines[1:]:
            arcs.append(self._parse_arc(number, line))
        return build_digraph(order, arcs, require_not_undirected=not self.allow_undirected)

    # - - Line Parsers - -

    @staticmethod
    def _parse_header(number: int, line: str) -> int:
        fields = line.split()
        if len(fields) != 2 or fields[0] != 'n' or not fields[1].isdigit():
            raise InputParser.ParsingError(number, f"expected header 'n <order>', found {line!r}")
        return int(fields[1])

    @staticmethod
    def _parse_arc(number: int, line: str) -> Arc:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise InputParser.ParsingError(number, f"expected '<u> <v>', found {line!r}")
        return (int(fields[0]), int(fields[1]))


def parse_input(text: str, allow_undirected: bool = False) -> Digraph:
    return InputParser(allow_undirected=allow_undirected).parse(text)
