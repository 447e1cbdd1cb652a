import io
import json
import subprocess
import sys

import pytest

from hereditary import cli
from hereditary.containment import Witness, verify_witness
from hereditary.forbidden import enumerate_graphs
from hereditary.graph import complement, complete, cycle
from hereditary.recognizers import CLASS_NAMES, certificate_from_json, verify_certificate
from hereditary.graph6 import parse_graph6

C5 = cycle(5).to_graph6()


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    def test_all_classes(self, capsys, monkeypatch):
        code, out, _ = run(["classify", "--threads", "1", "-"], capsys, "DUW\n", monkeypatch)
        assert code == 0
        (rec,) = [json.loads(line) for line in out.splitlines()]
        assert rec["graph6"] == "DUW"
        assert list(rec["member"]) == list(CLASS_NAMES)
        assert "certificates" not in rec

    def test_c5_berge_perfect(self, capsys, monkeypatch):
        code, out, _ = run(["classify", "--classes", "berge,perfect", "--threads", "1"], capsys, C5 + "\n", monkeypatch)
        assert code == 0
        assert json.loads(out)["member"] == {"berge": False, "perfect": False}

    def test_empty_input(self, capsys, monkeypatch):
        code, out, err = run(["classify", "--threads", "1"], capsys, "", monkeypatch)
        assert (code, out, err) == (0, "", "")

    def test_parse_errors_reported_with_line_numbers(self, capsys, monkeypatch):
        text = ">>graph6<<\nA_\nnot a graph\n\nBw\n"
        code, out, err = run(["classify", "--threads", "1", "--classes", "forest"], capsys, text, monkeypatch)
        assert code == 2
        assert "line 3" in err
        assert [json.loads(line)["graph6"] for line in out.splitlines()] == ["A_", "Bw"]

    def test_capacity_error_is_skipped(self, capsys, monkeypatch):
        big = "~?@}" + "?" * ((126 * 125 // 2 + 5) // 6)
        code, out, err = run(["classify", "--threads", "1", "--classes", "forest"], capsys, big + "\nA_\n", monkeypatch)
        assert code == 0
        assert "line 1" in err
        assert len(out.splitlines()) == 1

    def test_unknown_class_rejected(self, capsys, monkeypatch):
        code, out, err = run(["classify", "--classes", "forest,planar"], capsys, C5 + "\n", monkeypatch)
        assert code == 2 and out == "" and "planar" in err

    def test_tsv(self, capsys, monkeypatch):
        code, out, _ = run(["classify", "--format", "tsv", "--classes", "forest,chordal", "--threads", "1"],
                           capsys, "Bw\nCr\n", monkeypatch)
        assert code == 0
        assert out.splitlines() == ["graph6\tforest\tchordal", "Bw\t0\t1", "Cr\t0\t0"]

    def test_certificates_replay(self, tmp_path, capsys):
        corpus = tmp_path / "in.g6"
        corpus.write_text("\n".join(g.to_graph6() for g in (cycle(5), cycle(6), complete(4), complement(cycle(7)))))
        code, out, _ = run(["classify", "--certificates", "--threads", "1", str(corpus)], capsys)
        assert code == 0
        for line in out.splitlines():
            rec = json.loads(line)
            g = parse_graph6(rec["graph6"])
            for name, data in rec["certificates"].items():
                if data is not None:
                    assert verify_certificate(g, certificate_from_json(data), name)

    def test_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.THREADS_ENV, "2")
        code, out, _ = run(["classify", "--classes", "threshold"], capsys, "Bw\nCr\nA_\n", monkeypatch)
        assert code == 0 and len(out.splitlines()) == 3


class TestForb:
    def test_threshold(self, capsys):
        code, out, _ = run(["forb", "--class", "threshold", "--max-n", "6", "--threads", "1"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["phi"][3] == 3 and sum(data["phi"]) == 3

    def test_chordal(self, capsys):
        code, out, _ = run(["forb", "--class", "chordal", "--max-n", "6", "--threads", "1"], capsys)
        assert [e["graph6"] for e in json.loads(out)["forbidden"]] == [
            g.canonical_form().to_graph6() for g in (cycle(4), cycle(5), cycle(6))]

    def test_mock_threshold_holes_and_antiholes(self, tmp_path, capsys):
        target = tmp_path / "mt.json"
        code, out, _ = run(["forb", "--class", "mock_threshold", "--max-n", "7", "--out", str(target)], capsys)
        assert code == 0 and out == ""
        entries = {e["graph6"] for e in json.loads(target.read_text())["forbidden"]}
        for g in (cycle(5), cycle(6), cycle(7), complement(cycle(7))):
            assert g.canonical_form().to_graph6() in entries

    def test_non_hereditary_exits_3(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "ROSTER", {"four": lambda g: g.n == 4})
        code, out, err = run(["forb", "--class", "four", "--max-n", "5", "--threads", "1"], capsys)
        assert code == 3 and out == ""
        info = json.loads(err.strip().splitlines()[-1])
        assert parse_graph6(info["graph6"]).n == 4
        assert parse_graph6(info["deleted"]).n == 3

    def test_bad_arguments(self, capsys):
        assert run(["forb", "--class", "planar", "--max-n", "5"], capsys)[0] == 2
        assert run(["forb", "--class", "forest", "--max-n", "12"], capsys)[0] == 2


class TestContain:
    def test_verdicts(self, capsys):
        assert run(["contain", "--order", "minor", "--pattern", "C~", "--host", "D~{"], capsys)[:2] == (0, "contained\n")
        assert run(["contain", "--order", "ind", "--pattern", cycle(4).to_graph6(), "--host", C5], capsys)[:2] == (
            1, "not contained\n")
        assert run(["contain", "--order", "topind", "--pattern", "D~{", "--host", "D~{"], capsys)[0] == 0

    def test_witness(self, tmp_path, capsys):
        (tmp_path / "p.g6").write_text(">>graph6<<" + cycle(4).to_graph6() + "\n")
        (tmp_path / "h.g6").write_text(C5 + "\n")
        code, out, _ = run(["contain", "--order", "minor", "--pattern", str(tmp_path / "p.g6"),
                            "--host", str(tmp_path / "h.g6"), "--witness"], capsys)
        assert code == 0
        verdict, payload = out.splitlines()
        assert verdict == "contained"
        assert verify_witness(cycle(5), cycle(4), Witness.from_json(json.loads(payload)))

    def test_parse_error(self, capsys):
        code, _, err = run(["contain", "--order", "sub", "--pattern", "A!", "--host", C5], capsys)
        assert code == 2 and "error" in err


class TestGen:
    @pytest.mark.parametrize("n, lines", [(0, 1), (1, 1), (4, 11), (5, 34)])
    def test_counts(self, n, lines, capsys):
        code, out, _ = run(["gen", "--n", str(n)], capsys)
        assert code == 0 and len(out.splitlines()) == lines

    def test_empty_graph(self, capsys):
        assert run(["gen", "--n", "0"], capsys)[1] == "?\n"

    def test_out_of_range(self, capsys):
        assert run(["gen", "--n", "10"], capsys)[0] == 2


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "hereditary.cli", "gen", "--n", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == [g.to_graph6() for g in enumerate_graphs(3)]


def test_missing_command():
    with pytest.raises(SystemExit) as info:
        cli.main([])
    assert info.value.code == 2
