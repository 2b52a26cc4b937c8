from wdrdigraphs.cayley import CayleySpec
from wdrdigraphs.cli import InputParser, parse_input
from wdrdigraphs.digraphs import Digraph

import conftests as fx

import pytest


TRIANGLE = """\
# a directed triangle
n 3
0 1

1 2
2 0
"""


class TestEdgeLists:

    @staticmethod
    def test_parse_with_comments_and_blank_lines():
        assert parse_input(TRIANGLE) == fx.directed_triangle()

    @staticmethod
    @pytest.mark.parametrize('text, line', [
        ('', 1),
        ('# only a comment\n', 1),
        ('3\n0 1\n', 1),
        ('n three\n', 1),
        ('n 3\n0 1\n# note\n1 x\n', 4),
        ('n 3\n0 1 2\n', 2),
        ('n 3\n-1 2\n', 2),
    ])
    def test_malformed(text, line):
        with pytest.raises(InputParser.ParsingError) as e:
            parse_input(text)
        assert e.value.line_number == line
        assert str(e.value).startswith(f"line {line}:")

    @staticmethod
    def test_digraph_errors_propagate():
        with pytest.raises(Digraph.LoopError):
            parse_input('n 3\n1 1\n')
        with pytest.raises(Digraph.DuplicateArcError):
            parse_input('n 3\n0 1\n0 1\n')
        with pytest.raises(Digraph.VertexRangeError):
            parse_input('n 3\n0 3\n')

    @staticmethod
    def test_undirected_needs_permission():
        text = 'n 2\n0 1\n1 0\n'
        with pytest.raises(Digraph.UndirectedError):
            parse_input(text)
        assert InputParser(allow_undirected=True).parse(text).is_undirected()


class TestCayleyLines:

    @staticmethod
    def test_cayley_spec():
        assert parse_input('cay:zn:6:1,2,3,5\n') == fx.z6_d_config()
        assert parse_input('# header\ncay:prod:3x2:1.0,1.1') == CayleySpec.product(
            3, 2, [(1, 0), (1, 1)]).digraph()

    @staticmethod
    def test_content_after_spec():
        with pytest.raises(InputParser.ParsingError) as e:
            parse_input('cay:zn:3:1\n0 1\n')
        assert e.value.line_number == 2

    @staticmethod
    def test_bad_spec_is_a_parsing_error():
        with pytest.raises(InputParser.ParsingError):
            parse_input('cay:zn:6:')
        with pytest.raises(InputParser.ParsingError):
            parse_input('cay:zn:1:1')

    @staticmethod
    def test_connection_set_error_propagates():
        with pytest.raises(CayleySpec.ConnectionSetError):
            parse_input('cay:zn:6:0,1')

    @staticmethod
    def test_repeats_rejected_in_both_forms():
        with pytest.raises(CayleySpec.ConnectionSetError):
            parse_input('cay:zn:6:1,1')
        with pytest.raises(Digraph.DuplicateArcError):
            parse_input('n 3\n0 1\n1 2\n2 0\n0 1\n')

    @staticmethod
    def test_undirected_spec():
        with pytest.raises(Digraph.UndirectedError):
            parse_input('cay:zn:6:1,5')
        assert parse_input('cay:zn:6:1,5', allow_undirected=True).arc_count == 12
