from wdrdigraphs.arcs import LemmaVerdict
from wdrdigraphs.cayley import cayley_cyclic
from wdrdigraphs.classify import AnalysisReport, analyze, diameter_two_branch
from wdrdigraphs.digraphs import Digraph, TwoWayType, IDENTITY
from wdrdigraphs.iso import canonical_certificate

import conftests as fx

import pytest


T = TwoWayType
Status = LemmaVerdict.Status


class TestAnalyze:

    @staticmethod
    def test_d_configuration_report():
        report = analyze(fx.z6_d_config(), label='cay:zn:6:1,2,3,5')
        assert report.label == 'cay:zn:6:1,2,3,5'
        assert report.certificate == canonical_certificate(fx.z6_d_config()).hex()
        assert (report.order, report.arc_count, report.diameter) == (6, 24, 2)
        assert report.types == ((IDENTITY, 1), (T(1, 1), 3), (T(1, 2), 1), (T(2, 1), 1))
        assert report.hypotheses_hold
        assert report.diameter_two_branch == 'd-config'
        assert report.stopped_at is None
        assert report.is_survivor(2) and not report.is_survivor(3)
        assert not report.failures()

    @staticmethod
    @pytest.mark.parametrize('builder, branch', [
        (fx.directed_triangle, 'pure'),
        (fx.z4_c_config, 'c-config'),
        (fx.z6_pure, 'pure'),
        (fx.z8_c_config, 'c-config'),
    ])
    def test_branches(builder, branch):
        assert analyze(builder(), certify=False).diameter_two_branch == branch

    @staticmethod
    def test_no_branch_beyond_diameter_two():
        report = analyze(cayley_cyclic(5, [1]), certify=False)
        assert report.diameter == 4
        assert report.hypotheses_hold
        assert report.diameter_two_branch is None

    @staticmethod
    def test_stops_when_not_wdr():
        report = analyze(fx.z5_not_wdr(), certify=False)
        assert report.stopped_at == 'wdr'
        assert not report.scheme.is_wdr
        assert report.scheme.wdr_witness.h == T(1, 2)
        assert report.purity is None and report.lemmas == ()
        assert report.verdicts() == []

    @staticmethod
    def test_five_cycle_with_chord_is_rejected():
        report = analyze(fx.five_cycle_with_chord(), certify=False)
        assert report.stopped_at == 'wdr'
        assert not report.scheme.is_wdr
        witness = report.scheme.wdr_witness
        assert (witness.h, witness.i, witness.j) == (IDENTITY, T(1, 3), T(3, 1))
        assert (witness.count1, witness.count2) == (1, 0)
        assert dict(report.types)[T(1, 3)] == 'non-constant'
        assert not report.is_survivor()

    @staticmethod
    def test_stops_at_hypotheses():
        report = analyze(cayley_cyclic(7, [1, 2, 4]), certify=False)
        assert report.stopped_at == 'hypotheses'
        assert report.scheme.is_wdr and not report.scheme.regular
        assert not report.is_survivor()
        assert report.purity is None and report.configs is None
        assert report.characterization is None
        assert report.delta == () and report.lemmas == ()
        statuses = {v.name: v.status for v in report.verdicts()}
        assert list(statuses) == ['triple-identity', 'product-size-bound']
        assert statuses['triple-identity'] == Status.HOLDS

    @staticmethod
    def test_stop_at_hypotheses_skips_arc_analysis(mocker):
        purity = mocker.patch('wdrdigraphs.classify.pipeline.purity_report')
        lemmas = mocker.patch('wdrdigraphs.classify.pipeline.conditional_lemma_suite')
        report = analyze(cayley_cyclic(7, [1, 2, 4]), certify=False, cross_check=True)
        purity.assert_not_called()
        lemmas.assert_not_called()
        assert [(v.name, v.status) for v in report.checks] == [('tensor-oracle', Status.HOLDS)]

    @staticmethod
    def test_not_strongly_connected():
        with pytest.raises(Digraph.NotStronglyConnectedError):
            analyze(fx.one_way_path())

    @staticmethod
    def test_cross_checks():
        report = analyze(fx.z8_c_config(), certify=False, cross_check=True)
        checks = {v.name: v.status for v in report.checks}
        assert checks == {
            'diameter-two-types': Status.HOLDS,
            'tensor-oracle': Status.HOLDS,
            'circuit-modes-agree': Status.HOLDS,
        }

    @staticmethod
    def test_verdict_order():
        names = [v.name for v in analyze(fx.z6_d_config(), certify=False).verdicts()]
        assert names[:3] == ['triple-identity', 'product-size-bound', 'mixed-arc-characterization']
        assert names[3:6] == ['bipartite-double-arcs', 'cyclic-layer-structure', 'power-collapse']
        assert names[-1] == 'diameter-two-types'

    @staticmethod
    def test_large_order_skips_certificate():
        with pytest.warns(UserWarning):
            report = analyze(cayley_cyclic(18, [1]))
        assert report.certificate is None

    @staticmethod
    def test_round_trip():
        for builder in (fx.z6_d_config, fx.z5_not_wdr, lambda: cayley_cyclic(7, [1, 2, 4])):
            report = analyze(builder(), cross_check=True)
            assert AnalysisReport.from_dict(report.to_dict()) == report


class TestDiameterTwoBranch:

    @staticmethod
    def test_absent_upper_type():
        s = fx.stages(cayley_cyclic(5, [1]))
        purity, _ = fx.purity_and_configs(s)
        assert diameter_two_branch(s.tensor, purity) is None
