from wdrdigraphs.cayley import CayleySpec, SearchRangeError, cayley_cyclic, cayley_product, \
    classification_catalog, enumerate_circulants, count_circulants, MAX_CIRCULANT_ORDER
from wdrdigraphs.classify import analyze

import pytest


class TestCayleySpec:

    @staticmethod
    def test_cyclic_arcs():
        d = cayley_cyclic(6, [1, 2, 3, 5])
        assert d.order == 6
        assert d.out_neighbors(4) == [0, 1, 3, 5]

    @staticmethod
    def test_product_vertices():
        spec = CayleySpec.product(3, 2, [(1, 0), (1, 1)])
        assert spec.order == 6
        assert spec.vertex((2, 1)) == 5
        assert spec.vertex((4, 3)) == spec.vertex((1, 1))
        assert spec.digraph().out_neighbors(0) == [2, 3]
        assert cayley_product(3, 2, [(1, 0), (1, 1)]) == spec.digraph()

    @staticmethod
    @pytest.mark.parametrize('s', [[], [0], [6], [1, 7]])
    def test_connection_set_rejected(s):
        with pytest.raises(CayleySpec.ConnectionSetError):
            CayleySpec.cyclic(6, s)

    @staticmethod
    def test_moduli_rejected():
        with pytest.raises(ValueError):
            CayleySpec.cyclic(1, [0])
        with pytest.raises(ValueError):
            CayleySpec(3, 0, frozenset({(1, 0)}))
        with pytest.raises(TypeError):
            CayleySpec(3.0, 1, frozenset({(1, 0)}))

    @staticmethod
    def test_undirected():
        assert CayleySpec.cyclic(6, [1, 5]).is_undirected()
        assert not CayleySpec.cyclic(6, [1, 2, 3, 5]).is_undirected()
        assert CayleySpec.cyclic(6, [1, 2]).negation() == {(5, 0), (4, 0)}

    @staticmethod
    def test_parse_and_render():
        spec = CayleySpec.parse('cay:zn:8:6,1,5,2')
        assert spec.residues == [1, 2, 5, 6]
        assert str(spec) == 'cay:zn:8:1,2,5,6'

        product = CayleySpec.parse('  cay:prod:3x2:1.1,1.0 ')
        assert product.elements == [(1, 0), (1, 1)]
        assert str(product) == 'cay:prod:3x2:1.0,1.1'
        assert product.group_name == 'Z_3 x Z_2'

    @staticmethod
    @pytest.mark.parametrize('text', ['cay:zn:8:', 'cay:zn:8:1;2', 'zn:8:1', 'cay:prod:3:1.0'])
    def test_parse_rejects(text):
        with pytest.raises(ValueError):
            CayleySpec.parse(text)

    @staticmethod
    def test_parse_rejects_identity():
        with pytest.raises(CayleySpec.ConnectionSetError):
            CayleySpec.parse('cay:zn:8:0,1')

    @staticmethod
    @pytest.mark.parametrize('text', ['cay:zn:6:1,1', 'cay:zn:8:1,2,5,2', 'cay:prod:3x2:1.0,1.1,1.0'])
    def test_parse_rejects_repeated_elements(text):
        with pytest.raises(CayleySpec.ConnectionSetError):
            CayleySpec.parse(text)

    @staticmethod
    def test_scaling():
        spec = CayleySpec.cyclic(8, [1, 2, 5, 6])
        assert spec.scaled(3).residues == [2, 3, 6, 7]
        with pytest.raises(ValueError):
            spec.scaled(2)
        with pytest.raises(ValueError):
            CayleySpec.product(3, 2, [(1, 0)]).scaled(1)
        with pytest.raises(ValueError):
            CayleySpec.product(3, 2, [(1, 0)]).residues


class TestEnumeration:

    @staticmethod
    def test_small_orders():
        assert [str(s) for s in enumerate_circulants(3, 3)] == ['cay:zn:3:1', 'cay:zn:3:2']
        assert [str(s) for s in enumerate_circulants(4, 4)] == [
            'cay:zn:4:1', 'cay:zn:4:1,2', 'cay:zn:4:3', 'cay:zn:4:2,3',
        ]
        assert count_circulants(2, 2) == 0

    @staticmethod
    def test_counts():
        assert count_circulants(3, 12, exclude_undirected=False) == 4082
        assert count_circulants(4, 4) == 4
        assert count_circulants(6, 6) == 24

    @staticmethod
    def test_excluded_sets_are_undirected():
        every = set(map(str, enumerate_circulants(3, 8, exclude_undirected=False)))
        kept = set(map(str, enumerate_circulants(3, 8)))
        dropped = every - kept
        assert all(CayleySpec.parse(s).is_undirected() for s in dropped)
        assert not any(CayleySpec.parse(s).is_undirected() for s in kept)

    @staticmethod
    @pytest.mark.parametrize('bounds', [(1, 4), (5, 4), (3, MAX_CIRCULANT_ORDER + 1)])
    def test_range_rejected(bounds):
        with pytest.raises(SearchRangeError):
            list(enumerate_circulants(*bounds))


class TestCatalog:

    @staticmethod
    def test_labels_and_specs():
        catalog = classification_catalog()
        assert [e.label for e in catalog] == ['i', 'ii', 'iii', 'iv', 'v', 'vi', 'vii', 'viii', 'ix']
        assert str(catalog[3]) == '(iv) cay:zn:6:1,2,3,5'
        assert [e.spec.order for e in catalog] == [3, 4, 6, 6, 8, 8, 12, 12, 12]

    @staticmethod
    @pytest.mark.parametrize('entry', classification_catalog(), ids=lambda e: e.label)
    def test_every_entry_is_a_diameter_two_survivor(entry):
        report = analyze(entry.digraph, label=str(entry.spec), certify=False)
        assert report.is_survivor(diameter=2)
        assert report.diameter_two_branch == entry.branch
        assert not report.failures()
