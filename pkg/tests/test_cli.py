import json

import pytest

from logrewrite.cli import main
from logrewrite.presentation import parse_presentation
from logrewrite.words import parse_monoid
from logrewrite.ysequences import boundary_in, parse_ysequence

from tests.conftest import Q8_TEXT, TREFOIL_TEXT


@pytest.fixture(scope="module")
def q8_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "q8.pres"
    path.write_text(Q8_TEXT)
    return str(path)


@pytest.fixture(scope="module")
def abelian_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "abelian.pres"
    path.write_text("generators: x, y\nrelators:\n  r = x y x^-1 y^-1\n")
    return str(path)


@pytest.fixture(scope="module")
def trefoil_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "trefoil.pres"
    path.write_text(TREFOIL_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestComplete:
    def test_q8_table(self, capsys, q8_file):
        code, out, err = run(capsys, "complete", q8_file)
        lines = out.splitlines()
        assert code == 0
        assert lines[0].split() == ["lhs", "rhs", "log"]
        assert len(lines) == 17  # header + 16 rules
        assert "16 rules" in err

    def test_byte_stable(self, capsys, q8_file):
        _, out1, _ = run(capsys, "complete", q8_file)
        _, out2, _ = run(capsys, "complete", q8_file)
        assert out1 == out2

    def test_json_roundtrips(self, capsys, q8_file):
        code, out, _ = run(capsys, "complete", q8_file, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["rules"]) == 16
        p = parse_presentation(Q8_TEXT)
        relators = p.relator_map()
        for rule in payload["rules"]:
            lhs = parse_monoid(p.alphabet, rule["lhs"])
            rhs = parse_monoid(p.alphabet, rule["rhs"])
            log = parse_ysequence(rule["log"], relators, p.alphabet)
            from logrewrite.words import free_multiply, mu_inverse

            assert mu_inverse(lhs) == free_multiply(
                boundary_in(log, p.alphabet), mu_inverse(rhs)
            )

    def test_order_override(self, capsys, trefoil_file):
        code, out, _ = run(capsys, "complete", trefoil_file)
        assert code == 0 and len(out.splitlines()) == 7
        # shortlex cannot orient X -> xxYY, so the run must stop at a limit
        code, _, err = run(
            capsys, "complete", trefoil_file, "--order", "shortlex",
            "--max-passes", "3", "--max-rules", "200",
        )
        assert code == 1
        assert "last rules added" in err


class TestReduce:
    def test_abba(self, capsys, q8_file):
        code, out, _ = run(capsys, "reduce", q8_file, "a b b a")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "I = <id>"
        assert lines[1].startswith("L = ")
        # the log must witness the reduction: boundary(L) = abba
        p = parse_presentation(Q8_TEXT)
        log = parse_ysequence(lines[1][4:], p.relator_map(), p.alphabet)
        from logrewrite.words import parse_group

        assert boundary_in(log, p.alphabet) == parse_group(p.alphabet, "a b b a")

    def test_irreducible(self, capsys, q8_file):
        code, out, _ = run(capsys, "reduce", q8_file, "a b")
        assert code == 0
        assert out.splitlines() == ["I = ab", "L = <idY>"]

    def test_bad_word(self, capsys, q8_file):
        code, _, err = run(capsys, "reduce", q8_file, "z")
        assert code == 1 and "error:" in err


class TestKone:
    def test_q8_table(self, capsys, q8_file):
        code, out, _ = run(capsys, "kone", q8_file)
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["edge", "target", "word", "k1"]
        assert len(lines) == 17  # header + 16 edges
        row = next(l for l in lines if l.startswith("[aa, b]"))
        assert "(r4^+)" in row

    def test_infinite_group(self, capsys, abelian_file):
        code, _, err = run(
            capsys, "kone", abelian_file, "--vertex-cap", "50"
        )
        assert code == 1
        assert "vertex cap" in err


class TestIdentities:
    def test_kept(self, capsys, q8_file):
        code, out, err = run(capsys, "identities", q8_file)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 19  # header + 18 kept
        assert "32 records, 18 kept" in err

    def test_keep_all_shows_statuses(self, capsys, q8_file):
        code, out, _ = run(capsys, "identities", q8_file, "--keep-all")
        lines = out.splitlines()
        assert len(lines) == 33
        assert any("primary" in l for l in lines)
        assert any("trivial" in l for l in lines)

    def test_emit_k1(self, capsys, q8_file):
        code, out, _ = run(capsys, "identities", q8_file, "--emit", "k1")
        assert code == 0
        assert out.splitlines()[0].split() == ["edge", "target", "word", "k1"]

    def test_json(self, capsys, q8_file):
        code, out, _ = run(
            capsys, "identities", q8_file, "--format", "json", "--keep-all"
        )
        payload = json.loads(out)
        assert len(payload) == 32
        p = parse_presentation(Q8_TEXT)
        relators = p.relator_map()
        for rec in payload:
            seq = parse_ysequence(rec["sequence"], relators, p.alphabet)
            assert boundary_in(seq, p.alphabet).is_identity()
        assert sum(1 for rec in payload if rec["status"] == "kept") == 18

    def test_infinite_group(self, capsys, abelian_file):
        code, _, err = run(
            capsys, "identities", abelian_file, "--vertex-cap", "50"
        )
        assert code == 1
        assert "identity_for" in err


class TestPlumbing:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["complete"])  # missing file argument
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys, q8_file):
        with pytest.raises(SystemExit) as exc:
            main(["complete", q8_file, "--frobnicate"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "complete", "/nonexistent.pres")
        assert code == 1 and "error:" in err

    def test_parse_error_reported(self, capsys, tmp_path):
        path = tmp_path / "bad.pres"
        path.write_text("relators:\n  r = a\n")
        code, _, err = run(capsys, "complete", str(path))
        assert code == 1
        assert "line 1" in err
