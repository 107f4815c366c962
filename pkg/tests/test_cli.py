"""
End-to-end tests for the command-line front end
"""
import json
from fractions import Fraction

import pytest

from hypermatch.cli import run
from hypermatch.shared.config import Config
from hypermatch.shared.constants import ExitCode


def write(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(json.dumps(body))
    return str(path)


def output(capsys):
    return json.loads(capsys.readouterr().out)


@pytest.fixture
def fano_file(tmp_path, capsys):
    path = tmp_path / "fano.json"
    assert run(['gen', '--family', 'pg', '--q', '2', '--output', str(path)]) == 0
    capsys.readouterr()
    return str(path)


@pytest.fixture
def triangle_file(tmp_path):
    return write(tmp_path, "triangle.json", {
        'kind': 'bmatch', 'num_vertices': 3, 'edges': [[0, 1], [1, 2], [0, 2]],
        'b': [1, 1, 1], 'w': ['1', '1', '1'],
    })


class TestGen:
    def test_gen_to_stdout(self, capsys):
        assert run(['gen', '--family', 'truncated', '--q', '2']) == 0
        body = output(capsys)
        assert body['kind'] == 'bmatch'
        assert body['bipartite_u'] == [4, 5]
        assert len(body['edges']) == 4

    def test_unsupported_order(self, capsys):
        assert run(['gen', '--family', 'pg', '--q', '6']) == ExitCode.VALIDATION
        assert 'Unsupported field order' in capsys.readouterr().err


class TestInstanceCommands:
    def test_fano_gap(self, fano_file, capsys):
        assert run(['gap', '--instance', fano_file, '--no-timing']) == 0
        body = output(capsys)
        assert body['gap'] == '7/3'
        assert body['lp_value'] == '7/3'
        assert body['ilp_value'] == '1'
        assert body['decomposition_ratio'] == '7/3'

    def test_truncated_gap_with_witness(self, tmp_path, capsys):
        path = str(tmp_path / "truncated.json")
        assert run(['gen', '--family', 'truncated', '--q', '3', '--output', path]) == 0
        assert run(['gap', '--instance', path, '--bipartite', '--no-timing']) == 0
        body = output(capsys)
        assert body['gap'] == '3'
        assert body['bound'] == '3'

    def test_solve_lp(self, triangle_file, capsys):
        assert run(['solve-lp', '--instance', triangle_file, '--no-timing']) == 0
        body = output(capsys)
        assert body['lp_value'] == '3/2'
        assert body['x'] == ['1/2', '1/2', '1/2']
        assert 'wall_time' not in body

    def test_decompose_reports_ratio(self, triangle_file, capsys):
        assert run(['decompose', '--instance', triangle_file, '--oracle', '--no-timing']) == 0
        body = output(capsys)
        assert body['alpha'] == '3/2'
        assert body['best_value'] == '1'
        assert body['certified_ratio'] == '3/2'
        assert body['ilp_value'] == '1'
        assert body['expected_value'] == '1'

    def test_decompose_lists_terms_and_recomposition(self, fano_file, capsys):
        assert run(['decompose', '--instance', fano_file, '--no-timing']) == 0
        body = output(capsys)
        assert body['recomposition'] is True
        assert len(body['terms']) == body['term_count']
        weights = [Fraction(weight) for weight, _ in body['terms']]
        assert sum(weights) == Fraction(7, 3)
        x = [Fraction(0)] * 7
        for weight, edges in body['terms']:
            assert len(edges) <= 1
            for e in edges:
                x[e] += Fraction(weight)
        assert x == [Fraction(1, 3)] * 7

    def test_decompose_and_verify(self, fano_file, tmp_path, capsys):
        saved = str(tmp_path / "decomposition.json")
        assert run(['decompose', '--instance', fano_file, '--output', saved]) == 0
        capsys.readouterr()
        assert run(['verify', '--decomposition', saved]) == 0
        body = output(capsys)
        assert body['verified'] is True
        assert body['alpha'] == '7/3'

    def test_verify_detects_tampering(self, fano_file, tmp_path, capsys):
        saved = tmp_path / "decomposition.json"
        assert run(['decompose', '--instance', fano_file, '--output', str(saved)]) == 0
        capsys.readouterr()
        document = json.loads(saved.read_text())
        document['x'][0] = '1'
        saved.write_text(json.dumps(document))
        assert run(['verify', '--decomposition', str(saved)]) == ExitCode.VALIDATION
        assert output(capsys)['verified'] is False

    def test_no_timing_is_deterministic(self, fano_file, capsys):
        assert run(['decompose', '--instance', fano_file, '--no-timing']) == 0
        first = capsys.readouterr().out
        assert run(['decompose', '--instance', fano_file, '--no-timing']) == 0
        assert capsys.readouterr().out == first

    def test_timing_reported_by_default(self, triangle_file, capsys):
        assert run(['solve-lp', '--instance', triangle_file]) == 0
        assert 'wall_time' in output(capsys)

    def test_demand_match_trace(self, tmp_path, capsys):
        path = write(tmp_path, "demand.json", {
            'kind': 'demand', 'num_vertices': 2, 'edges': [[0, 1], [0, 1]],
            'b': [3, 5], 'd': [1, 2], 'w': ['1', '1'],
        })
        assert run(['demand-match', '--instance', path, '--trace', '--oracle', '--no-timing']) == 0
        body = output(capsys)
        assert body['algorithm'] == 'hdm'
        assert body['bound'] == '4'
        assert body['trace']['levels'][0]['w_hat'] == {'0': '1', '1': '3/2'}

    def test_bounded_color(self, tmp_path, capsys):
        path = write(tmp_path, "colored.json", {
            'kind': 'colored', 'num_vertices': 3, 'edges': [[0, 1], [1, 2], [0, 2]],
            'b': [1, 1, 1], 'w': ['1', '1', '1'], 'colors': [0, 1, 2], 'budgets': [1, 1, 1],
        })
        assert run(['bounded-color', '--instance', path, '--oracle', '--no-timing']) == 0
        body = output(capsys)
        assert body['alpha'] == '2'
        assert body['ilp_value'] == '1'

    def test_auction(self, tmp_path, capsys):
        path = write(tmp_path, "auction.json", {
            'kind': 'auction', 'bidders': 2, 'items': 1,
            'bids': [[0, [0], '2'], [1, [0], '5']],
        })
        assert run(['auction', '--instance', path, '--seed', '4', '--no-timing']) == 0
        body = output(capsys)
        assert body['seed'] == 4
        assert body['lp_value'] == '5'
        assert body['expected_welfare'] == '5'

    def test_many_instances_keep_order(self, fano_file, triangle_file, capsys):
        argv = ['gap', '--instance', triangle_file, '--instance', fano_file,
                '--jobs', '2', '--no-timing']
        assert run(argv) == 0
        bodies = output(capsys)
        assert [body['instance'] for body in bodies] == [triangle_file, fano_file]
        assert [body['gap'] for body in bodies] == ['3/2', '7/3']


class TestExitCodes:
    def test_zero_denominator_is_parse_error(self, tmp_path, capsys):
        path = write(tmp_path, "bad.json", {
            'num_vertices': 2, 'edges': [[0, 1]], 'b': [1, 1], 'w': ['1/0'],
        })
        assert run(['solve-lp', '--instance', path]) == ExitCode.PARSE
        assert 'denominator' in capsys.readouterr().err

    def test_float_weight_is_parse_error(self, tmp_path):
        path = write(tmp_path, "bad.json", {
            'num_vertices': 2, 'edges': [[0, 1]], 'b': [1, 1], 'w': [0.5],
        })
        assert run(['solve-lp', '--instance', path]) == ExitCode.PARSE

    def test_missing_file_is_parse_error(self, tmp_path):
        assert run(['solve-lp', '--instance', str(tmp_path / "missing.json")]) == ExitCode.PARSE

    def test_unknown_argument(self):
        assert run(['solve-lp', '--frobnicate']) == ExitCode.PARSE

    def test_negative_weight_is_validation_error(self, tmp_path):
        path = write(tmp_path, "bad.json", {
            'num_vertices': 2, 'edges': [[0, 1]], 'b': [1, 1], 'w': ['-1'],
        })
        assert run(['decompose', '--instance', path]) == ExitCode.VALIDATION

    def test_bipartite_flag_needs_witness(self, triangle_file):
        assert run(['decompose', '--instance', triangle_file, '--bipartite']) == ExitCode.VALIDATION

    def test_wrong_instance_kind(self, triangle_file):
        assert run(['demand-match', '--instance', triangle_file]) == ExitCode.VALIDATION

    def test_budget_exceeded(self, fano_file, capsys):
        assert run(['gap', '--instance', fano_file, '--budget', '1']) == ExitCode.BUDGET
        assert 'exceeds budget' in capsys.readouterr().err

    def test_first_failure_decides(self, tmp_path, triangle_file, capsys):
        bad = write(tmp_path, "bad.json", {
            'num_vertices': 2, 'edges': [[0, 1]], 'b': [1, 1], 'w': ['-1'],
        })
        assert run(['solve-lp', '--instance', bad, '--instance', triangle_file]) == ExitCode.VALIDATION
        assert output(capsys)['lp_value'] == '3/2'

    def test_no_instance(self):
        assert run(['solve-lp']) == ExitCode.VALIDATION

    @pytest.mark.parametrize("bids", [{'0': [0]}, 7, 'none'])
    def test_bids_must_be_a_list(self, tmp_path, bids, capsys):
        path = write(tmp_path, "auction.json", {'kind': 'auction', 'bidders': 1, 'items': 1, 'bids': bids})
        assert run(['auction', '--instance', path]) == ExitCode.PARSE
        assert "'bids' must be a list" in capsys.readouterr().err

    def test_decomposition_terms_must_be_a_list(self, fano_file, tmp_path):
        saved = tmp_path / "decomposition.json"
        assert run(['decompose', '--instance', fano_file, '--output', str(saved)]) == 0
        document = json.loads(saved.read_text())
        document['terms'] = 3
        saved.write_text(json.dumps(document))
        assert run(['verify', '--decomposition', str(saved)]) == ExitCode.PARSE

    def test_unknown_log_level(self, triangle_file):
        assert run(['solve-lp', '--instance', triangle_file, '--log-level', 'loud']) == ExitCode.PARSE

    def test_log_level_is_case_insensitive(self, triangle_file):
        assert run(['solve-lp', '--instance', triangle_file, '--log-level', 'debug']) == ExitCode.OK


class TestSuiteCommand:
    def test_suite_passes(self, tmp_path, capsys):
        argv = ['suite', '--name', 'demand', '--count', '3', '--log-dir', str(tmp_path)]
        assert run(argv) == 0
        body = output(capsys)
        assert body['runs'] == 3
        assert body['failures'] == 0

    def test_suite_logs_to_report_dir_by_default(self, tmp_path, monkeypatch, capsys):
        monkeypatch.chdir(tmp_path)
        assert run(['suite', '--name', 'bounded-color', '--count', '2']) == 0
        assert output(capsys)['runs'] == 2
        assert list((tmp_path / Config.REPORT_DIR).glob('bounded-color_*.csv'))
