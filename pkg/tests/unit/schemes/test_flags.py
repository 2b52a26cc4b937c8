from wdrdigraphs.cayley import cayley_cyclic
from wdrdigraphs.digraphs import TwoWayType, IDENTITY, two_way_partition
from wdrdigraphs.schemes import IntersectionTensor, SchemeReport, IdentityReport, \
    relation_product, relation_power, closed_subset, check_product_associativity, \
    check_regular_values, check_scheme_identities, is_commutative, is_regular, \
    intersection_tensor

import conftests as fx

import pytest


T = TwoWayType


def paley_tournament_stages():
    """Cay(Z_7, {1,2,4}): a commutative scheme that is not regular."""
    return fx.stages(cayley_cyclic(7, [1, 2, 4]))


# - - Products - -

class TestRelationProducts:

    @staticmethod
    def test_thin_products():
        t = fx.stages(fx.z4_c_config()).tensor
        assert relation_product({T(1, 2)}, {T(1, 2)}, t) == {T(1, 1)}
        assert relation_product({T(1, 1)}, {T(1, 1)}, t) == {IDENTITY}
        assert relation_product({T(1, 2)}, {T(2, 1)}, t) == {IDENTITY}

    @staticmethod
    def test_set_products():
        t = fx.stages(fx.z6_d_config()).tensor
        assert relation_product({T(1, 1)}, {T(1, 1)}, t) == {IDENTITY, T(1, 2), T(2, 1)}
        assert relation_product({T(1, 2), T(2, 1)}, {T(1, 2)}, t) == {IDENTITY, T(2, 1)}
        assert relation_product([], {T(1, 2)}, t) == frozenset()

    @staticmethod
    def test_unknown_type():
        t = fx.stages(fx.directed_triangle()).tensor
        with pytest.raises(IntersectionTensor.UnknownTypeError):
            relation_product({T(1, 1)}, {T(1, 2)}, t)

    @staticmethod
    def test_powers():
        t = fx.stages(fx.z6_d_config()).tensor
        assert relation_power(T(1, 2), 1, t) == {T(1, 2)}
        assert relation_power(T(1, 2), 2, t) == {T(2, 1)}
        assert relation_power(T(1, 2), 3, t) == {IDENTITY}
        with pytest.raises(ValueError):
            relation_power(T(1, 2), 0, t)

    @staticmethod
    def test_closed_subsets():
        t = fx.stages(fx.z8_c_config()).tensor
        assert closed_subset({T(2, 2)}, t) == {IDENTITY, T(2, 2)}
        assert closed_subset({T(1, 1)}, t) == {IDENTITY, T(1, 1), T(2, 2)}
        assert closed_subset({T(1, 2)}, t) == set(t.types)
        with pytest.raises(ValueError):
            closed_subset([], t)

    @staticmethod
    @pytest.mark.parametrize('builder', [fx.z4_c_config, fx.z6_d_config, fx.z8_c_config])
    def test_associativity(builder):
        assert check_product_associativity(fx.stages(builder()).tensor) is None


# - - Flags - -

class TestSchemeFlags:

    @staticmethod
    def test_thin():
        flags = fx.stages(fx.z4_c_config()).flags
        assert flags.is_wdr and flags.commutative and flags.regular
        assert flags.thin and not flags.quasi_thin
        assert flags.max_valency == 1
        assert flags.equivalenced == 1
        assert flags.hypotheses_hold

    @staticmethod
    def test_quasi_thin():
        flags = fx.stages(fx.z8_c_config()).flags
        assert flags.quasi_thin and not flags.thin
        assert flags.equivalenced is None

    @staticmethod
    def test_equivalenced():
        flags = fx.stages(fx.z6_d_config()).flags
        assert flags.max_valency == 3
        assert flags.equivalenced is None
        assert fx.stages(cayley_cyclic(7, [1, 2, 4])).flags.equivalenced == 3

    @staticmethod
    def test_not_regular():
        s = paley_tournament_stages()
        assert is_commutative(s.tensor)
        assert not is_regular(s.tensor)
        assert s.flags.is_wdr and not s.flags.hypotheses_hold

    @staticmethod
    @pytest.mark.parametrize('builder', [fx.directed_triangle, fx.z4_c_config, fx.z6_pure,
                                         fx.z6_d_config, fx.z8_c_config])
    def test_regular_values(builder):
        t = fx.stages(builder()).tensor
        assert is_regular(t)
        assert check_regular_values(t) is None

    @staticmethod
    def test_regular_values_fail_without_regularity():
        t = paley_tournament_stages().tensor
        assert check_regular_values(t) is not None

    @staticmethod
    def test_round_trip():
        flags = fx.stages(fx.z8_c_config()).flags
        assert SchemeReport.from_dict(flags.to_dict()) == flags

        d = fx.z5_not_wdr()
        witness = intersection_tensor(d, two_way_partition(d))
        report = SchemeReport.not_wdr(witness)
        assert not report.hypotheses_hold
        assert SchemeReport.from_dict(report.to_dict()) == report


# - - Identities - -

class TestSchemeIdentities:

    @staticmethod
    @pytest.mark.parametrize('builder', [fx.z4_c_config, fx.z6_pure, fx.z6_d_config,
                                         fx.z8_c_config])
    def test_hold_on_real_tensors(builder):
        assert check_scheme_identities(fx.stages(builder()).tensor).holds

    @staticmethod
    def test_hold_without_regularity():
        assert check_scheme_identities(paley_tournament_stages().tensor).holds

    @staticmethod
    def test_tampered_tensor():
        t = fx.stages(fx.z4_c_config()).tensor
        array = t.array.copy()
        array[t.index(T(1, 1)), t.index(T(1, 2)), t.index(T(1, 2))] = 0
        report = check_scheme_identities(IntersectionTensor(t.types, array, t.valencies))
        assert not report.holds
        assert report.triple_violation is not None
        assert IdentityReport.from_dict(report.to_dict()) == report
