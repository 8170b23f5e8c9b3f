import json
import subprocess
import sys
from pathlib import Path

import pytest

from germtools.cli import main
from germtools.germ import format_germ_file, germ, parse_germ_file, read_germ_file

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_codim_table_entry(capsys):
    code, out, _ = run(capsys, "codim", DATA / "5_2.germ")
    assert code == 0
    assert out.startswith("codim = 2 (certified at order ")
    assert "window 3)" in out.splitlines()[0]
    assert "order  dim" in out


def test_codim_stable(capsys):
    code, out, _ = run(capsys, "codim", DATA / "fold.germ")
    assert code == 0 and out.startswith("codim = 0")


def test_codim_non_stabilizing(capsys):
    code, out, _ = run(capsys, "codim", DATA / "f2_bigerm_cuspidal.germ")
    assert code == 2
    assert out.startswith("non-stabilizing: ")


def test_codim_json_and_options(capsys):
    code, out, _ = run(capsys, "codim", DATA / "5_2.germ", "--json", "--max-order", "8", "--window", "4")
    data = json.loads(out)
    assert code == 0 and data["value"] == 2 and data["stabilization_window"] == 4
    assert len(data["history"]) == 8


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.germ"
    bad.write_text("source_vars = [x]\ntarget_dim = 1\nbranch = ( x^^2 )\n")
    code, _, err = run(capsys, "codim", bad)
    assert code == 1
    assert ":3:" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "codim", DATA / "nope.germ")
    assert code == 1 and "error" in err


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["codim"])
    assert e.value.code == 2 or e.value.code == 1


def test_augment(capsys, tmp_path):
    out_file = tmp_path / "a.germ"
    code, out, _ = run(capsys, "op", "augment", "--h", DATA / "cusp.germ", "--phi", "z^3", "--out", out_file, "--check")
    assert code == 0
    assert "predicted = 2, direct = 2" in out
    assert read_germ_file(out_file) == parse_germ_file(format_germ_file(germ(["x^3+z^3*x", "z"], "x,z")))


def test_cuspidal_concat_check(capsys):
    code, out, _ = run(capsys, "op", "concat", "--kind", "cuspidal", "--f", DATA / "x4.germ", "--F", DATA / "swallowtail.germ", "--check")
    assert code == 0
    assert "predicted = 3, direct = 3" in out
    germ_text = "\n".join(l for l in out.splitlines() if not l.startswith("predicted"))
    assert parse_germ_file(germ_text).r == 2


def test_monic_immersion_concat(capsys, tmp_path):
    f = tmp_path / "f.germ"
    f.write_text(format_germ_file(germ(["x^2", "x^3"], "x")))
    F = tmp_path / "F.germ"
    F.write_text(format_germ_file(germ(["x^2", "x^3+y*x", "y"], "x,y")))
    code, out, _ = run(capsys, "op", "concat", "--kind", "monic", "--k", "0", "--f", f, "--F", F, "--check")
    assert code == 0
    h = parse_germ_file("\n".join(l for l in out.splitlines() if not l.startswith("predicted")))
    assert h.branches[1] == germ(["x", "y", "0"], "x,y")
    assert "predicted = 1, direct = 1" in out


def test_constructor_errors(capsys):
    code, _, err = run(capsys, "op", "concat", "--kind", "monic", "--k", "0", "--F", DATA / "cusp.germ")
    assert code == 1 and "p + k = n + 1" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", DATA / "aug_concat_l2.germ")
    assert code == 0
    assert out.startswith("AUGMENTATION_AND_CONCATENATION")
    code, _, err = run(capsys, "classify", DATA / "fold.germ")
    assert code == 1 and "codim = 0, not 2" in err


def test_verify_filter(capsys):
    code, out, _ = run(capsys, "verify-paper", "--filter", "augmentation", "--jobs", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["name", "expected", "computed"]
    assert lines[-1].endswith("match")


def test_verify_reports_mismatch(capsys):
    code, out, _ = run(capsys, "verify-paper", "--filter", "6_1", "--jobs", "1", "--json")
    data = json.loads(out)
    assert data["rows"][0]["expected"] == 3
    assert code == (3 if data["mismatches"] else 0)


def test_verify_cuspidal_rows(capsys):
    code, out, _ = run(capsys, "verify-paper", "--filter", "cuspidal", "--json")
    names = [r["name"] for r in json.loads(out)["rows"]]
    assert all("cuspidal" in n for n in names)
    assert len(names) == 9


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "germtools", "codim", str(DATA / "fold.germ")], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("codim = 0")


def test_output_is_deterministic(capsys):
    first = run(capsys, "codim", DATA / "5_2.germ")
    second = run(capsys, "codim", DATA / "5_2.germ")
    assert first == second
