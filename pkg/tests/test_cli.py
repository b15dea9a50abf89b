"""CLI commands, output formats, exit codes."""

import json

from khfront.cli import EXIT_CONVENTION, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

TREFOIL = "L1 L2 X1 X1 X1 R2 R1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "analyze", TREFOIL, "--oracle")
        assert code == EXIT_OK
        assert "tb           = 1" in out
        assert "sharp_certified" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "analyze", TREFOIL, "--oracle", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["tb"] == 1
        assert payload["min_delta"] == 1
        assert payload["verdict"] == "sharp_certified"

    def test_deterministic(self, capsys):
        _, out1, _ = run(capsys, "analyze", TREFOIL, "--json")
        _, out2, _ = run(capsys, "analyze", TREFOIL, "--json")
        assert out1 == out2


class TestTrees:
    def test_three_records(self, capsys):
        code, out, _ = run(capsys, "trees", TREFOIL, "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["trees"]) == 3
        labels = {
            "".join(t["labels"][k] for k in sorted(t["labels"]))
            for t in payload["trees"]
        }
        assert labels == {"LLd", "LdD", "lDD"}

    def test_both_colorings(self, capsys):
        code, out, _ = run(capsys, "trees", TREFOIL, "--coloring", "both", "--json")
        payload = json.loads(out)
        assert {t["coloring"] for t in payload["trees"]} == {
            "canonical",
            "reversed",
        }


class TestOracleCommands:
    def test_homology_json(self, capsys):
        code, out, _ = run(capsys, "homology", TREFOIL, "--json")
        payload = json.loads(out)
        assert payload["min_delta"] == 1
        groups = {(g["i"], g["j"]): (g["rank"], g["torsion"]) for g in payload["groups"]}
        assert groups[(3, 7)] == (0, [2])

    def test_jones_text(self, capsys):
        code, out, _ = run(capsys, "jones", TREFOIL)
        assert out.strip() == "q + q^3 + q^5 - q^9"

    def test_max_crossings(self, capsys):
        code, _, err = run(capsys, "homology", TREFOIL, "--max-crossings", "2")
        assert code == EXIT_INVALID
        assert "exceeds" in err


class TestCorpus:
    def test_bundled_corpus(self, capsys, tmp_path):
        from khfront.corpus import write_corpus_dir

        write_corpus_dir(tmp_path)
        code, out, _ = run(capsys, "corpus", str(tmp_path))
        assert code == EXIT_OK
        assert "0 violations" in out

    def test_out_file_written_atomically(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "certify", TREFOIL, "--json", "--out", str(target)
        )
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text())["verdict"] == "sharp_certified"
        assert not target.with_suffix(".json.tmp").exists()


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert run(capsys, "bogus")[0] == EXIT_USAGE

    def test_missing_command(self, capsys):
        assert run(capsys)[0] == EXIT_USAGE

    def test_invalid_front(self, capsys):
        code, _, err = run(capsys, "analyze", "L1 X2 R1")
        assert code == EXIT_INVALID
        assert "strand" in err.lower() or "needs" in err

    def test_disconnected_front(self, capsys):
        assert run(capsys, "analyze", "L1 R1 L1 R1")[0] == EXIT_INVALID

    def test_missing_file(self, capsys):
        assert run(capsys, "analyze", "@/no/such/file.front")[0] == EXIT_INVALID

    def test_convention_exit_code_value(self):
        assert EXIT_CONVENTION == 2
