"""End-to-end checks of the command-line surface."""

import pytest

from bck.bckfile import emit_bck, parse_bck
from bck.cli import main
from bck.construct import b_star, m_chain, union
from bck.core import PI, TC, TWO, find_violation, validate


def write(path, algebra):
    path.write_text(emit_bck(algebra.table))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_valid_file(tmp_path, capsys):
    code, out, err = run(capsys, "verify", write(tmp_path / "pi.bck", PI))
    assert (code, out, err) == (0, "valid\n", "")


def test_verify_invalid_table_prints_diagnostic(tmp_path, capsys):
    path = tmp_path / "bad.bck"
    path.write_text("bck 1\n2\n0 1\n1 0\n")
    code, out, err = run(capsys, "verify", str(path))
    assert code == 1
    assert "BCK4" in out
    assert err == ""


def test_verify_unparseable_file_is_a_domain_error(tmp_path, capsys):
    path = tmp_path / "junk.bck"
    path.write_text("not a table\n")
    code, out, err = run(capsys, "verify", str(path))
    assert code == 1
    assert out == ""
    assert "line 1" in err


def test_missing_file_is_a_domain_error(tmp_path, capsys):
    code, _, err = run(capsys, "cd", str(tmp_path / "absent.bck"))
    assert code == 1
    assert err != ""


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_cd_prints_raw_and_reduced(tmp_path, capsys):
    code, out, _ = run(capsys, "cd", write(tmp_path / "pi.bck", PI))
    assert (code, out) == (0, "7/9 = 7/9\n")
    code, out, _ = run(capsys, "cd", write(tmp_path / "m4.bck", m_chain(4)))
    assert (code, out) == (0, "10/16 = 5/8\n")


def test_props_output(tmp_path, capsys):
    code, out, _ = run(capsys, "props", write(tmp_path / "m4.bck", m_chain(4)))
    assert code == 0
    assert out == (
        "commutative: false\nbounded: true (top=3)\npositive-implicative: true\n"
    )
    code, out, _ = run(capsys, "props", write(tmp_path / "tc.bck", TC))
    assert out.splitlines()[0] == "commutative: true"
    assert out.splitlines()[2] == "positive-implicative: false"


def test_build_writes_files_that_reverify(tmp_path, capsys):
    out_path = tmp_path / "m5.bck"
    code, out, _ = run(capsys, "build", "mn", "5", "-o", str(out_path))
    assert code == 0 and out == ""
    assert parse_bck(out_path.read_text()) == m_chain(5).table
    code, out, _ = run(capsys, "build", "bn", "5")
    assert code == 0
    assert parse_bck(out) == b_star(5).table


def test_cd_of_built_chains_matches_the_minimum_formula(tmp_path, capsys):
    for n in (3, 10, 50):
        path = tmp_path / f"m{n}.bck"
        assert run(capsys, "build", "mn", str(n), "-o", str(path))[0] == 0
        _, out, _ = run(capsys, "cd", str(path))
        assert out.startswith(f"{3 * n - 2}/{n * n} = ")


def test_eval_expression(tmp_path, capsys):
    code, out, _ = run(capsys, "eval", "(PI+T)+2")
    assert code == 0
    assert parse_bck(out) == union(m_chain(4), TWO).table
    code, _, err = run(capsys, "eval", "(PI+X)")
    assert code == 1 and "unexpected" in err


def test_op_extend_and_union(tmp_path, capsys):
    pi = write(tmp_path / "pi.bck", PI)
    two = write(tmp_path / "two.bck", TWO)
    out_path = tmp_path / "ext.bck"
    code, _, _ = run(capsys, "op", "extend", pi, "-o", str(out_path))
    assert code == 0
    assert parse_bck(out_path.read_text()) == m_chain(4).table
    code, out, _ = run(capsys, "op", "union", pi, two)
    assert code == 0
    assert parse_bck(out) == union(PI, TWO).table


def test_family_listing(capsys):
    code, out, _ = run(capsys, "family", "4", "--exprs")
    assert code == 0
    assert out.splitlines() == [
        "PI+T  10/16 = 5/8",
        "TC+T  12/16 = 3/4",
        "PI+2  14/16 = 7/8",
    ]
    code, out, _ = run(capsys, "family", "5")
    assert [line.split(" = ")[0] for line in out.splitlines()] == [
        "13/25",
        "15/25",
        "17/25",
        "19/25",
        "21/25",
        "23/25",
    ]


def test_cdset_listing(capsys):
    code, out, _ = run(capsys, "cdset", "3")
    assert (code, out) == (0, "7/9 = 7/9\n")
    code, out, _ = run(capsys, "cdset", "4")
    assert out.splitlines() == ["10/16 = 5/8", "12/16 = 3/4", "14/16 = 7/8"]


def test_synth_worked_example(tmp_path, capsys):
    out_path = tmp_path / "synth.bck"
    code, out, _ = run(capsys, "synth", "2/5", "-o", str(out_path))
    assert code == 0
    assert out.splitlines() == [
        "order: 10",
        "k: 30",
        "index: 7",
        "expression: ((((((PI+2)+T)+2)+T)+T)+T)+T",
        "40/100 = 2/5",
    ]
    algebra = validate(parse_bck(out_path.read_text()))
    assert algebra.commuting_report().pair_count == 30


def test_synth_notes_escalation(capsys):
    code, out, _ = run(capsys, "synth", "1/2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("note:") and "order 8" in lines[0]
    assert "order: 8" in lines
    assert "k: 16" in lines


def test_synth_degree_one(capsys):
    code, out, _ = run(capsys, "synth", "1/1")
    assert code == 0
    assert "expression: TC" in out.splitlines()
    assert "9/9 = 1/1" in out.splitlines()


def test_synth_rejects_malformed_fractions(capsys):
    for bad in ("2", "2/5/7", "a/b", "3/2"):
        code, _, err = run(capsys, "synth", bad)
        assert code == 1 and err.startswith("error:")


def test_enum_counts(capsys):
    code, out, _ = run(capsys, "enum", "4", "--count-only")
    assert (code, out) == (0, "14\n")
    code, out, _ = run(capsys, "enum", "4", "--count-only", "--noncommutative")
    assert (code, out) == (0, "9\n")


def test_enum_listing_shows_degrees_and_flags(capsys):
    code, out, _ = run(capsys, "enum", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert all(line.startswith("000") for line in lines)
    assert any("commutative" in line for line in lines)


def test_enum_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BCK_ENUM_BUDGET", "4")
    code, _, err = run(capsys, "enum", "5", "--count-only")
    assert code == 1
    assert "budget" in err


def test_enum_catalog_directory(tmp_path, capsys):
    directory = tmp_path / "catalog"
    code, out, _ = run(capsys, "enum", "4", "-o", str(directory))
    assert code == 0
    assert "wrote 14 classes" in out
    files = sorted(directory.glob("*.bck"))
    assert len(files) == 14
    assert files[0].name == "0001.bck"
    for path in files:
        assert find_violation(parse_bck(path.read_text())) is None
    manifest = (directory / "manifest.tsv").read_text().splitlines()
    assert manifest[0] == "index\traw\tdegree\tflags"
    assert len(manifest) == 15
    assert manifest[1].startswith("0001\t")


def test_census_table(capsys):
    code, out, _ = run(capsys, "census", "4")
    assert code == 0
    assert "14/16 = 7/8: 3" in out.splitlines()
    assert "10/16 = 5/8: 1" in out.splitlines()


def test_iso_witness_and_rejection(tmp_path, capsys):
    a = write(tmp_path / "a.bck", union(TWO, PI))
    b = write(tmp_path / "b.bck", union(PI, TWO))
    code, out, _ = run(capsys, "iso", a, b)
    assert code == 0
    images = [int(v) for v in out.split()]
    assert sorted(images) == [0, 1, 2, 3]
    pi = write(tmp_path / "pi.bck", PI)
    tc = write(tmp_path / "tc.bck", TC)
    code, out, _ = run(capsys, "iso", pi, tc)
    assert (code, out) == (0, "not isomorphic\n")


def test_subalg_output(tmp_path, capsys):
    code, out, _ = run(capsys, "subalg", write(tmp_path / "pi.bck", PI))
    assert (code, out) == (0, "0 1\n")


def test_hasse_output(tmp_path, capsys):
    code, out, _ = run(capsys, "hasse", write(tmp_path / "m4.bck", m_chain(4)))
    assert code == 0
    assert out.startswith("digraph hasse {")
    assert "  2 -> 3;" in out.splitlines()
