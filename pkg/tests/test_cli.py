"""CLI surface: subcommands, formats, exit codes."""
import json

from redtype.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out


def test_analyze_json(capsys):
    code, out = run_cli(capsys, "--format", "json", "analyze", "4,9,11")
    assert code == 0
    d = json.loads(out)
    assert d["generators"] == [4, 9, 11]
    assert d["pf"] == [7, 14]
    assert d["reduced_type"] == 1
    assert d["pseudo_symmetric"] is True
    assert d["edim"] == 3


def test_analyze_json_roundtrip_byte_identical(capsys):
    code, out = run_cli(capsys, "--format", "json", "analyze", "5", "11", "17,18,19")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    d = json.loads(out)
    assert d["far_flung_gorenstein"] is True
    assert d["reduced_type"] == 3 and d["type"] == 4
    assert d["max_reduced_type"] is False


def test_analyze_csv(capsys):
    code, out = run_cli(capsys, "--format", "csv", "analyze", "2,3")
    assert code == 0
    header, row = out.strip().split("\n")
    cols = header.split(",")
    values = row.split(",")
    record = dict(zip(cols, values))
    assert record["type"] == "1"
    assert record["gorenstein"] == "true"
    assert record["generators"] == "2 3"


def test_analyze_text(capsys):
    code, out = run_cli(capsys, "analyze", "5,6,7,9")
    assert code == 0
    assert "reduced_type" in out and "pseudo_symmetric" in out


def test_analyze_bad_input_exit_1(capsys):
    assert main(["analyze", "4,6"]) == 1  # gcd 2
    capsys.readouterr()
    assert main(["analyze", "zebra"]) == 1
    capsys.readouterr()


def test_bad_flags_exit_1(capsys):
    assert main(["--format", "yaml", "analyze", "2,3"]) == 1
    capsys.readouterr()
    assert main(["frobnicate"]) == 1
    capsys.readouterr()


def test_glue_subcommand(capsys):
    code, out = run_cli(
        capsys,
        "--format", "json",
        "glue", "--h1", "4,9,11", "--h2", "5,6,7,9", "-x", "10", "-y", "13",
    )
    assert code == 0
    d = json.loads(out)
    assert d["generators"] == [40, 65, 78, 90, 91, 110, 117]
    assert d["conductor"] == 375
    assert d["reduced_type"] == 1


def test_glue_invalid_exit_1(capsys):
    code = main(["glue", "--h1", "4,9,11", "--h2", "5,6,7,9", "-x", "5", "-y", "13"])
    assert code == 1
    capsys.readouterr()


def test_dual_subcommand(capsys):
    code, out = run_cli(capsys, "--format", "json", "dual", "5,9,11,12")
    assert code == 0
    assert json.loads(out)["generators"] == [5, 6, 7, 9]

    code, out = run_cli(capsys, "--format", "json", "dual", "2,3")
    assert code == 0
    assert json.loads(out)["full"] is True


def test_rohrbach_subcommand(capsys):
    code, out = run_cli(capsys, "--format", "json", "rohrbach", "5")
    assert code == 0
    d = json.loads(out)
    assert d == {"r": 5, "value": 13, "witness": [0, 1, 3, 5, 6]}
    assert main(["rohrbach", "12"]) == 1
    capsys.readouterr()


def test_enumerate_with_filter(capsys):
    code, out = run_cli(
        capsys, "--format", "json", "enumerate", "--max-genus", "5",
        "--filter", "pseudo_symmetric",
    )
    assert code == 0
    got = [tuple(d["generators"]) for d in json.loads(out)]
    from redtype import classify, enumerate_by_genus

    expected = [
        H.generators
        for H in enumerate_by_genus(5)
        if not H.is_full and classify(H).pseudo_symmetric
    ]
    assert got == expected
    assert (3, 4, 5) in got


def test_enumerate_unknown_filter(capsys):
    assert main(["enumerate", "--max-genus", "3", "--filter", "shiny"]) == 1
    capsys.readouterr()


def test_verify_pass_and_exit_codes(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "redtype-bound", "--max-genus", "8")
    assert code == 0
    assert "violations=0 PASS" in out

    assert main(["verify", "--suite", "bogus", "--max-genus", "5"]) == 1
    capsys.readouterr()


def test_verify_violation_exit_2(capsys, monkeypatch):
    from redtype.enumeration import SweepResult

    def fake(names, g_max, workers=1):
        return [SweepResult("redtype-bound", g_max, 1, [((2, 3), "forced")])]

    monkeypatch.setattr("redtype.cli.run_suites", fake)
    code, out = run_cli(capsys, "verify", "--suite", "redtype-bound", "--max-genus", "3")
    assert code == 2
    assert "FAIL" in out


def test_verify_real_violation_exit_2(capsys):
    # the type-5 clause of ffg-implications genuinely fails at genus 17
    code, out = run_cli(
        capsys, "verify", "--suite", "ffg-implications", "--max-genus", "17",
        "--workers", "4",
    )
    assert code == 2
    assert "<9 15 16 17 21 28 29>" in out


def test_analyze_full_semigroup_exit_1(capsys):
    assert main(["analyze", "1"]) == 1  # no gaps, nothing to classify
    capsys.readouterr()


def test_internal_error_exit_3(capsys, monkeypatch):
    from redtype.errors import InternalInconsistency

    def boom(H):
        raise InternalInconsistency("forced")

    monkeypatch.setattr("redtype.cli.classify", boom)
    assert main(["analyze", "2,3"]) == 3
    capsys.readouterr()


def test_probe_subcommand(capsys):
    code, out = run_cli(capsys, "--format", "json", "probe", "--max-genus", "8")
    assert code == 0
    d = json.loads(out)
    assert d[0]["findings"] == []


def test_enumerate_text_format(capsys):
    code, out = run_cli(capsys, "enumerate", "--max-genus", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 3  # <2,3>, then <2,5> and <3,4,5> at genus 2
    assert lines[0].startswith("<2 3>")
    assert "genus=1" in lines[0]


def test_verify_csv_format(capsys):
    code, out = run_cli(
        capsys, "--format", "csv", "verify", "--suite", "redtype-bound", "--max-genus", "6"
    )
    assert code == 0
    header, row = out.strip().split("\n")
    assert header == "suite,genus_bound,checked,violations,findings"
    assert row == "redtype-bound,6,49,0,0"


def test_global_flags_after_subcommand(capsys):
    code, out = run_cli(capsys, "analyze", "2,3", "--format", "json")
    assert code == 0
    assert json.loads(out)["generators"] == [2, 3]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["--format", "json", "--out", str(path), "analyze", "2,3"])
    assert code == 0
    capsys.readouterr()
    d = json.loads(path.read_text())
    assert d["generators"] == [2, 3]


def test_help_exit_0(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_seed_flag_accepted(capsys):
    code, _ = run_cli(capsys, "--seed", "7", "analyze", "3,5,7")
    assert code == 0
