from wdrdigraphs.arcs import Circuit, circuits_through_arc
from wdrdigraphs.digraphs import distance_matrix

import conftests as fx

from itertools import product

import pytest


def brute_force_circuits(d, arc, q):
    """Canonical rotations of every closed walk of length `q` using `arc`."""
    u, v = arc
    found = set()
    for middle in product(range(d.order), repeat=q - 2):
        walk = (u, v, *middle)
        c = Circuit(walk)
        if not c.closes_in(d):
            continue
        rotations = [walk[s:] + walk[:s] for s in range(q)
                     if walk[s] == u and walk[(s + 1) % q] == v]
        found.add(min(rotations))
    return found


class TestCircuit:

    @staticmethod
    def test_arcs_close_the_walk():
        c = Circuit((0, 2, 1))
        assert c.length == 3
        assert c.arcs() == [(0, 2), (2, 1), (1, 0)]
        assert c.is_simple()
        assert not Circuit((0, 2, 0, 2)).is_simple()
        assert str(c) == '(0,2,1)'
        assert c.to_list() == [0, 2, 1]


class TestCircuitsThroughArc:

    @staticmethod
    def test_triangles_through_arc():
        d = fx.z4_c_config()
        assert list(circuits_through_arc(d, (0, 1), 3)) == [Circuit((0, 1, 2)), Circuit((0, 1, 3))]

    @staticmethod
    def test_digon():
        assert list(circuits_through_arc(fx.z4_c_config(), (0, 2), 2)) == [Circuit((0, 2))]

    @staticmethod
    def test_repeated_arc_emitted_once():
        d = fx.z4_c_config()
        walks = list(circuits_through_arc(d, (0, 2), 4))
        assert walks.count(Circuit((0, 2, 0, 2))) == 1
        simple = list(circuits_through_arc(d, (0, 2), 4, simple=True))
        assert Circuit((0, 2, 0, 2)) not in simple
        assert all(c.is_simple() for c in simple)
        assert set(simple) <= set(walks)

    @staticmethod
    @pytest.mark.parametrize('builder, arc, q', [
        (fx.z6_d_config, (0, 2), 3),
        (fx.z6_d_config, (0, 1), 4),
        (fx.z8_c_config, (0, 1), 3),
        (fx.z6_pure, (0, 4), 4),
    ])
    def test_matches_brute_force(builder, arc, q):
        d = builder()
        walks = list(circuits_through_arc(d, arc, q))
        assert len(walks) == len(set(walks))
        assert {c.vertices for c in walks} == brute_force_circuits(d, arc, q)
        assert [c.vertices for c in walks] == sorted(c.vertices for c in walks)

    @staticmethod
    def test_given_distances_are_used(mocker):
        d = fx.z6_d_config()
        expected = list(circuits_through_arc(d, (0, 2), 3))
        distances = distance_matrix(d)
        spy = mocker.patch('wdrdigraphs.arcs.circuits.distance_matrix')
        assert list(circuits_through_arc(d, (0, 2), 3, distances=distances)) == expected
        spy.assert_not_called()

    @staticmethod
    def test_invalid_arguments():
        d = fx.z4_c_config()
        with pytest.raises(ValueError):
            list(circuits_through_arc(d, (0, 1), 1))
        with pytest.raises(ValueError):
            list(circuits_through_arc(d, (1, 0), 3))
