from wdrdigraphs.arcs import LemmaVerdict
from wdrdigraphs.cayley import classification_catalog
from wdrdigraphs.classify import AnalysisReport, ClassificationResult, CorpusVerdict, analyze, \
    search_circulants, corpus_verify
from wdrdigraphs.cli import main, render_report, load_report, render_catalog
from wdrdigraphs.config import Settings, load_settings

import conftests as fx

import io
import json

import pytest


@pytest.fixture(autouse=True)
def serial_environment(monkeypatch):
    monkeypatch.setenv('WDRDIGRAPHS_WORKERS', '1')
    monkeypatch.delenv('WDRDIGRAPHS_LOG_LEVEL', raising=False)
    monkeypatch.delenv('WDRDIGRAPHS_PROGRESS', raising=False)


# - - Rendering - -

class TestRendering:

    @staticmethod
    def test_analysis_text():
        text = render_report(analyze(fx.z6_d_config(), label='cay:zn:6:1,2,3,5'))
        lines = text.splitlines()
        assert lines[0] == 'digraph: cay:zn:6:1,2,3,5'
        for expected in ('wdr: true', 'regular: true', 'diameter: 2',
                         'purity q=3: mixed, witness 0 -(1,2)-> 2 -(1,1)-> 1 -(1,1)-> 0',
                         'config q=3: C false (0), D true (3)',
                         'diameter-two branch: d-config',
                         'check bipartite-double-arcs: holds'):
            assert expected in lines

    @staticmethod
    def test_not_wdr_text():
        text = render_report(analyze(fx.z5_not_wdr(), certify=False))
        assert 'wdr: false' in text
        assert 'wdr witness: h=(1,2) i=(1,2) j=(1,2) pairs (0, 1) (0, 2) counts 0 1' in text
        assert 'stopped at: wdr' in text

    @staticmethod
    def test_json_round_trips():
        reports = [
            analyze(fx.z8_c_config(), cross_check=True),
            search_circulants(3, 4, diameter=2),
            corpus_verify([fx.one_way_path(), fx.z4_c_config()]),
        ]
        for report in reports:
            text = render_report(report, 'json')
            assert render_report(report, 'json') == text
            assert load_report(text) == report

    @staticmethod
    def test_json_kinds():
        assert json.loads(render_report(search_circulants(3, 3), 'json'))['kind'] == 'classification'
        assert json.loads(render_report(corpus_verify([]), 'json'))['kind'] == 'corpus'
        with pytest.raises(ValueError):
            load_report('{"kind": "other"}')
        with pytest.raises(ValueError):
            render_report(corpus_verify([]), 'yaml')

    @staticmethod
    def test_summaries():
        assert render_report(search_circulants(3, 4, diameter=2)).endswith(
            'survivors: 2 / catalog matched: 2 / unmatched: 0')
        assert render_report(corpus_verify([])).endswith('passed: true')

    @staticmethod
    def test_catalog():
        lines = render_catalog(classification_catalog()).splitlines()
        assert len(lines) == 9
        assert lines[1] == '(ii) cay:zn:4:1,2: order 4, out-degree 2, branch c-config'
        entries = json.loads(render_catalog(classification_catalog(), 'json'))['entries']
        assert [e['branch'] for e in entries].count('d-config') == 4


# - - Settings - -

class TestSettings:

    @staticmethod
    def test_environment():
        settings = load_settings({'WDRDIGRAPHS_WORKERS': '3', 'WDRDIGRAPHS_LOG_LEVEL': 'debug',
                                  'WDRDIGRAPHS_PROGRESS': 'yes'})
        assert settings == Settings(workers=3, log_level='DEBUG', progress=True)

    @staticmethod
    def test_defaults(mocker):
        mocker.patch('os.process_cpu_count', return_value=None)
        assert load_settings({}) == Settings()

    @staticmethod
    @pytest.mark.parametrize('environ', [
        {'WDRDIGRAPHS_WORKERS': 'many'},
        {'WDRDIGRAPHS_WORKERS': '0'},
        {'WDRDIGRAPHS_LOG_LEVEL': 'LOUD'},
        {'WDRDIGRAPHS_PROGRESS': 'maybe'},
    ])
    def test_invalid(environ):
        with pytest.raises(Settings.InvalidSettingError):
            load_settings(environ)

    @staticmethod
    def test_override_skips_none():
        settings = Settings(workers=2).override(workers=None, progress=True)
        assert settings == Settings(workers=2, progress=True)


# - - Command Line - -

class TestMain:

    @staticmethod
    def test_analyze_spec_json(capsys):
        assert main(['analyze', 'cay:zn:6:1,2,3,5', '--format', 'json']) == 0
        report = load_report(capsys.readouterr().out)
        assert isinstance(report, AnalysisReport)
        assert report.label == 'cay:zn:6:1,2,3,5'
        assert report.diameter_two_branch == 'd-config'

    @staticmethod
    def test_analyze_file(tmp_path, capsys):
        path = tmp_path / 'z4.txt'
        path.write_text('n 4\n0 1\n0 2\n1 2\n1 3\n2 3\n2 0\n3 0\n3 1\n')
        assert main(['analyze', str(path)]) == 0
        assert 'diameter-two branch: c-config' in capsys.readouterr().out

    @staticmethod
    def test_analyze_stdin(monkeypatch, capsys):
        monkeypatch.setattr('sys.stdin', io.StringIO('n 3\n0 1\n1 2\n2 0\n'))
        assert main(['analyze', '-']) == 0
        assert 'digraph: input' in capsys.readouterr().out

    @staticmethod
    @pytest.mark.parametrize('argv', [
        ['analyze', 'cay:zn:4:2'],
        ['analyze', 'cay:zn:4:0'],
        ['analyze', 'cay:zn:4:'],
        ['analyze', 'no-such-file.txt'],
    ])
    def test_input_errors(argv, capsys):
        assert main(argv) == 3
        assert capsys.readouterr().err.startswith('wdrdigraphs: ')

    @staticmethod
    def test_precondition_errors(tmp_path):
        path = tmp_path / 'path.txt'
        path.write_text('n 2\n0 1\n')
        assert main(['analyze', str(path)]) == 4
        assert main(['search', 'circulants', '--min', '3', '--max', '20']) == 4
        assert main(['search', 'all', '--max', '6']) == 4

    @staticmethod
    def test_usage_errors(monkeypatch):
        with pytest.raises(SystemExit) as e:
            main([])
        assert e.value.code == 2
        monkeypatch.setenv('WDRDIGRAPHS_WORKERS', 'many')
        assert main(['catalog']) == 2
        assert main(['catalog', '--workers', '0']) == 2

    @staticmethod
    def test_catalog(capsys):
        assert main(['catalog', '--format', 'json']) == 0
        assert len(json.loads(capsys.readouterr().out)['entries']) == 9

    @staticmethod
    def test_search_circulants(capsys):
        assert main(['search', 'circulants', '--min', '3', '--max', '4', '--diameter', '2',
                     '--format', 'json']) == 0
        result = load_report(capsys.readouterr().out)
        assert isinstance(result, ClassificationResult)
        assert len(result.survivors) == 2

    @staticmethod
    def test_search_all(capsys):
        assert main(['search', 'all', '--max', '3']) == 0
        assert capsys.readouterr().out.rstrip().endswith('unmatched: 0')

    @staticmethod
    def test_verify_corpus(tmp_path, capsys):
        path = tmp_path / 'z8.txt'
        path.write_text('cay:zn:8:1,2,5,6\n')
        assert main(['verify', 'corpus', '--catalog', '--circulants', '3', '4', str(path),
                     'cay:zn:6:1,3,4', '--format', 'json']) == 0
        verdict = load_report(capsys.readouterr().out)
        assert isinstance(verdict, CorpusVerdict)
        assert verdict.members == 9 + 6 + 2
        assert verdict.passed

    @staticmethod
    def test_verify_corpus_rejects_undirected_members(capsys):
        assert main(['verify', 'corpus', 'cay:zn:3:1', 'cay:zn:6:1,5']) == 3
        assert capsys.readouterr().err.startswith('wdrdigraphs: ')

    @staticmethod
    def test_verify_corpus_allows_undirected_members_on_request(capsys):
        assert main(['verify', 'corpus', 'cay:zn:6:1,5', '--allow-undirected',
                     '--format', 'json']) == 0
        verdict = load_report(capsys.readouterr().out)
        assert (verdict.members, verdict.hypotheses_held) == (1, 0)

    @staticmethod
    def test_failed_check_exit_code(mocker, capsys):
        failing = (LemmaVerdict('square-disjointness', LemmaVerdict.Status.FAILS, 'q=3, p=2'),)
        mocker.patch('wdrdigraphs.classify.pipeline.conditional_lemma_suite', return_value=failing)
        assert main(['analyze', 'cay:zn:4:1,2']) == 5
        assert 'check square-disjointness: fails (q=3, p=2)' in capsys.readouterr().out
        assert main(['verify', 'corpus', 'cay:zn:3:1']) == 5
