import json

import pytest

from cycleprefix.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "info", "--delta", "3", "--d", "3", "--r", "0")
        assert code == 0
        assert "vertices:         24" in out
        assert "degree (in=out):  3" in out
        assert "claimed diameter: 3" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "info", "--delta", "4", "--d", "4", "--r", "1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["vertices"] == 120
        assert payload["degree"] == 3
        assert payload["claimed_diameter"] == 5

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run(capsys, "info", "--delta", "2", "--d", "3")
        assert code == 2
        assert "error" in err

    def test_missing_args_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["info", "--delta", "3"])
        assert exc.value.code == 2


class TestExport:
    def test_edgelist_gamma22(self, capsys):
        code, out, _ = run(capsys, "export", "--delta", "2", "--d", "2")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 12  # 6 vertices, degree 2
        assert lines[0] == "1.2 -> 2.1  [R2]"
        assert lines[1] == "1.2 -> 3.1  [S3]"

    def test_dot_structure(self, capsys):
        code, out, _ = run(capsys, "export", "--delta", "2", "--d", "2", "--format", "dot")
        assert code == 0
        assert out.startswith('digraph "gamma_2_2_r0" {')
        assert out.rstrip().endswith("}")
        assert '"1.2" -> "2.1" [label="R2"];' in out
        assert out.count("->") == 12

    def test_json_structure(self, capsys):
        code, out, _ = run(capsys, "export", "--delta", "2", "--d", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["params"] == {"delta": 2, "d": 2, "r": 0}
        assert len(payload["vertices"]) == 6
        assert len(payload["arcs"]) == 12
        assert payload["arcs"][0] == {"source": "1.2", "target": "2.1", "label": "R2"}

    def test_size_guard_exit_3(self, capsys):
        # ~4e6 vertices: rejected before any arc is generated
        code, _, err = run(capsys, "export", "--delta", "1999", "--d", "2")
        assert code == 3
        assert "guard" in err

    @pytest.mark.parametrize("fmt", ["edgelist", "dot", "json"])
    def test_deterministic_across_runs(self, tmp_path, fmt):
        paths = [tmp_path / f"g33_{i}.{fmt}" for i in (1, 2)]
        for p in paths:
            code = main(
                ["export", "--delta", "3", "--d", "3", "--format", fmt, "--out", str(p)]
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestAnalyze:
    def test_gamma33(self, capsys):
        code, out, _ = run(capsys, "analyze", "--delta", "3", "--d", "3")
        assert code == 0
        assert "diameter:            3 (matches claimed 3)" in out
        assert "strongly connected:  True" in out

    def test_gamma44r1_json(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--delta", "4", "--d", "4", "--r", "1", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["diameter"] == 5
        assert payload["diameter_matches"] is True
        assert payload["strongly_connected"] is True
        assert payload["degree_regular"] is True


class TestCertify:
    def test_gamma32(self, capsys):
        code, out, _ = run(capsys, "certify", "--delta", "3", "--d", "2")
        assert code == 0
        assert "24" in out
        assert "PASS" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "certify", "--delta", "3", "--d", "3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["automorphisms_found"] == 24
        assert payload["expected_order"] == 24
        assert payload["ok"] is True

    def test_size_guard_exit_3(self, capsys):
        code, _, err = run(capsys, "certify", "--delta", "5", "--d", "4")
        assert code == 3
        assert "guard" in err


class TestRoute:
    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "route", "--delta", "3", "--d", "3", "1.2.3", "1.2.3")
        assert code == 0
        assert "bfs length 0: 1.2.3" in out

    def test_greedy_matches_bfs_on_disjoint_words(self, capsys):
        code, out, _ = run(
            capsys, "route", "--delta", "5", "--d", "3", "1.2.3", "4.5.6", "--greedy"
        )
        assert code == 0
        assert "bfs length 3" in out
        assert "greedy length 3" in out
        assert "-[S6]-> 6.1.2" in out

    def test_within_diameter(self, capsys):
        code, out, _ = run(capsys, "route", "--delta", "3", "--d", "3", "1.2.3", "1.2.4")
        assert code == 0
        length = int(out.split("bfs length ")[1].split(":")[0])
        assert 0 < length <= 3

    def test_bad_vertex_exit_2(self, capsys):
        code, _, err = run(capsys, "route", "--delta", "3", "--d", "3", "1.2.x", "1.2.3")
        assert code == 2
        assert "error" in err
        code, _, err = run(capsys, "route", "--delta", "3", "--d", "3", "1.1.2", "1.2.3")
        assert code == 2

    def test_greedy_rejected_for_restricted_rotations(self, capsys):
        code, _, err = run(
            capsys,
            "route", "--delta", "4", "--d", "4", "--r", "1", "1.2.3.4", "2.1.3.4",
            "--greedy",
        )
        assert code == 2
        assert "greedy" in err
