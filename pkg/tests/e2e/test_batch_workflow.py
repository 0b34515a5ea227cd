import io
import json

from chromagap.main import cli


def run_batch(capsys, *argv):
    code = cli(["batch", *argv])
    return code, json.loads(capsys.readouterr().out)


class TestBatchWorkflow:

    def test_empty_stream(self, capsys, write_file):
        path = write_file("empty.g6", "")
        code, payload = run_batch(capsys, "--run", "chromatic", "--graph6", str(path))
        assert code == 0
        assert payload["graphs"] == []
        assert payload["summary"]["graphs"] == 0
        assert payload["summary"]["violations"] == 0

    def test_corrupt_line_is_isolated(self, capsys, write_file):
        path = write_file("mixed.g6", "Bw\nB!\n\nA_\n")
        code, payload = run_batch(capsys, "--run", "chromatic", "--graph6", str(path))
        assert code == 0
        assert [entry["status"] for entry in payload["graphs"]] == ["ok", "error", "ok"]
        assert [entry["name"] for entry in payload["graphs"]] == ["mixed#1", "mixed#2", "mixed#4"]
        assert payload["graphs"][1]["exit_code"] == 2
        assert payload["graphs"][0]["result"]["polynomial"] == "x^3 - 3x^2 + 2x"
        assert payload["summary"]["errors"] == 1
        assert payload["summary"]["ok"] == 2

    def test_undecodable_line_is_isolated(self, capsys, tmp_path):
        path = tmp_path / "raw.g6"
        path.write_bytes(b"Bw\nA\xff\nA_\n")
        code, payload = run_batch(capsys, "--run", "chromatic", "--graph6", str(path))
        assert code == 0
        assert [entry["status"] for entry in payload["graphs"]] == ["ok", "error", "ok"]
        bad = payload["graphs"][1]
        assert bad["name"] == "raw#2"
        assert bad["exit_code"] == 2
        assert bad["graph6"] == "A\\xff"
        assert "byte 1" in bad["error"]
        assert payload["summary"]["errors"] == 1

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
        code, payload = run_batch(capsys, "--run", "nbc-profile", "--graph6", "-")
        assert code == 0
        (entry,) = payload["graphs"]
        assert entry["name"] == "stdin#1"
        assert entry["result"]["counts_total"] == [1, 3, 2]

    def test_catalog_verify(self, capsys):
        code, payload = run_batch(capsys, "--run", "verify", "--catalog", "connected:4")
        assert code == 0
        summary = payload["summary"]
        assert summary["graphs"] == 10
        assert summary["ok"] == 10
        assert summary["violations"] == 0
        assert summary["records"]["violated"] == 0
        assert summary["records"]["holds"] > 0

    def test_budget_refusals_are_counted(self, capsys):
        code, payload = run_batch(capsys, "--run", "search-min", "--catalog", "connected:3", "--k", "2",
                                  "--exhaustive", "--budget", "1")
        assert code == 0
        assert payload["summary"]["budget_refusals"] == payload["summary"]["graphs"] - 1
        assert payload["graphs"][0]["status"] == "ok"

    def test_order_preserved_across_workers(self, capsys):
        argv = ("--run", "chromatic", "--catalog", "connected:4")
        _, serial = run_batch(capsys, *argv, "--workers", "1")
        _, pooled = run_batch(capsys, *argv, "--workers", "3")
        assert pooled == serial
        assert [entry["index"] for entry in pooled["graphs"]] == list(range(10))

    def test_edge_list_rejected(self, capsys, write_file):
        path = write_file("k3.edges", "3 3\n0 1\n0 2\n1 2\n")
        assert cli(["batch", "--run", "chromatic", "--graph", str(path)]) == 2

    def test_catalog_only_for_batch(self, capsys):
        assert cli(["chromatic", "--catalog", "connected:3"]) == 2
