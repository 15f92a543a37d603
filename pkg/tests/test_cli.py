import json

import pytest

from vtt import cli
from vtt.fixtures import run_all
from vtt.graphs import cayley_digraph, petersen, to_edge_list
from vtt.groups import cyclic


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_single_prime(self, capsys):
        code, out, _ = run(capsys, "count", "11")
        assert code == 0
        assert out == "11\t4\n"

    def test_range(self, capsys):
        code, out, _ = run(capsys, "count", "3..13")
        assert code == 0
        assert out == "3\t1\n5\t1\n7\t2\n11\t4\n13\t6\n"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "count", "7", "--format", "json")
        assert code == 0
        assert json.loads(out) == [{"p": 7, "count": 2}]

    def test_rejects_non_prime(self, capsys):
        code, _, err = run(capsys, "count", "4")
        assert code == 2
        assert "not an odd prime" in err

    def test_rejects_garbage(self, capsys):
        code, _, err = run(capsys, "count", "eleven")
        assert code == 2

    def test_env_format_override(self, capsys, monkeypatch):
        monkeypatch.setenv("VTT_FORMAT", "json")
        code, out, _ = run(capsys, "count", "7")
        assert code == 0
        assert json.loads(out) == [{"p": 7, "count": 2}]

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("VTT_FORMAT", "json")
        code, out, _ = run(capsys, "count", "7", "--format", "tsv")
        assert out == "7\t2\n"


class TestClasses:
    def test_p11(self, capsys):
        code, out, _ = run(capsys, "classes", "11")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 4
        assert sorted(r["size"] for r in records) == [2, 10, 10, 10]
        assert all(r["p"] == 11 for r in records)

    def test_p3(self, capsys):
        code, out, _ = run(capsys, "classes", "3")
        assert code == 0
        assert out == '{"p":3,"rep":[2],"size":2}\n'

    def test_members_flag(self, capsys):
        code, out, _ = run(capsys, "classes", "7", "--members")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 2
        assert sum(len(r["members"]) for r in records) == 8

    def test_over_budget(self, capsys):
        code, _, err = run(capsys, "classes", "67")
        assert code == 3
        assert "budget" in err

    def test_worker_output_identical(self, capsys):
        _, seq, _ = run(capsys, "classes", "11", "--workers", "1")
        _, par, _ = run(capsys, "classes", "11", "--workers", "2")
        assert seq == par

    def test_env_members(self, capsys, monkeypatch):
        monkeypatch.setenv("VTT_MEMBERS", "1")
        _, out, _ = run(capsys, "classes", "3")
        assert "members" in out


class TestVerify:
    def test_p11(self, capsys):
        code, out, _ = run(capsys, "verify", "11")
        assert code == 0
        assert out == "formula=4 enumeration=4 burnside=4 OK\n"

    def test_p31(self, capsys):
        code, out, _ = run(capsys, "verify", "31")
        assert code == 0
        assert out == "formula=1096 enumeration=1096 burnside=1096 OK\n"

    def test_p3_json(self, capsys):
        code, out, _ = run(capsys, "verify", "3", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"p": 3, "formula": 1, "enumeration": 1,
                                   "burnside": 1, "ok": True}

    def test_bad_input(self, capsys):
        code, _, _ = run(capsys, "verify", "9")
        assert code == 2


class TestRecognize:
    def test_petersen(self, capsys, tmp_path):
        path = tmp_path / "pet.txt"
        path.write_text("digraph 10\n" + to_edge_list(petersen()))
        code, out, _ = run(capsys, "recognize", str(path))
        assert code == 0
        assert out.splitlines()[0] == "vertex-transitive: yes, cayley: no"

    def test_directed_triangle(self, capsys, tmp_path):
        path = tmp_path / "tri.txt"
        path.write_text("digraph 3\n0 1\n1 2\n2 0\n")
        code, out, _ = run(capsys, "recognize", str(path))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "vertex-transitive: yes, cayley: yes"
        assert lines[1].startswith("witness: ")
        assert "(0 1 2)" in lines[1]

    def test_exported_tournament_is_cayley(self, capsys, tmp_path):
        g = cayley_digraph(cyclic(7), {1, 2, 3})
        path = tmp_path / "t7.txt"
        path.write_text("digraph 7\n" + to_edge_list(g))
        code, out, _ = run(capsys, "recognize", str(path))
        assert code == 0
        assert "cayley: yes" in out.splitlines()[0]

    def test_undirected_header(self, capsys, tmp_path):
        path = tmp_path / "pent.txt"
        path.write_text("graph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
        code, out, _ = run(capsys, "recognize", str(path), "--format", "json")
        record = json.loads(out)
        assert record["vertex_transitive"] and record["cayley"]
        assert len(record["witness"]) == 5

    def test_parse_failure(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("nonsense\n")
        code, _, err = run(capsys, "recognize", str(path))
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "recognize", "/nonexistent/graph.txt")
        assert code == 2

    def test_cap_exceeded(self, capsys, tmp_path):
        path = tmp_path / "c17.txt"
        path.write_text("graph 17\n" + "".join(f"{v} {(v + 1) % 17}\n" for v in range(17)))
        code, _, err = run(capsys, "recognize", str(path))
        assert code == 3
        code, out, _ = run(capsys, "recognize", str(path), "--aut-cap", "17")
        assert code == 0

    def test_dot_passthrough(self, capsys, tmp_path):
        path = tmp_path / "tri.txt"
        path.write_text("digraph 3\n0 1\n1 2\n2 0\n")
        code, out, _ = run(capsys, "recognize", str(path), "--format", "dot")
        assert code == 0
        assert out.startswith("digraph G {")


class TestFixtures:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == 0
        lines = out.splitlines()
        assert [ln[:2] for ln in lines[:3]] == ["a:", "b:", "c:"]
        assert all(ln.endswith("PASS") for ln in lines[:3])
        assert lines[3] == "fixtures: all passed"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "fixtures", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["ok"]
        assert record["a"]["unit_multiplier"] is None
        assert record["b"]["cyclic_max"] == 4
        assert record["b"]["product_max"] < 4
        assert record["c"]["witness_set"] is not None

    def test_run_all_details(self):
        results = run_all()
        assert [r.name for r in results] == ["a", "b", "c"]
        assert all(r.ok for r in results)


class TestBadFlags:
    def test_unsupported_format(self, capsys):
        code, _, err = run(capsys, "count", "7", "--format", "dot")
        assert code == 2

    def test_nonpositive_workers(self, capsys):
        code, _, err = run(capsys, "classes", "7", "--workers", "0")
        assert code == 2

    def test_bad_env_integer(self, capsys, monkeypatch):
        monkeypatch.setenv("VTT_BUDGET_BITS", "many")
        with pytest.raises(SystemExit) as exc:
            cli.main(["classes", "7"])
        assert exc.value.code == 2
