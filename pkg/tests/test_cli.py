import csv
import io
import json
import subprocess
import sys

import pytest

from hookline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "3 4 1 2 7 9 5 10 6 8 11 12", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["descent_set"] == [2, 6, 8]
    assert data["maj"] == 16
    assert "i321" in data["classes"]
    assert data["rs_recording"] == "1 2 5 6 8 11 12; 3 4 7 9 10"


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "2,1,3")
    assert code == 0
    assert "descent_set: [1]" in out


def test_map(capsys):
    code, out, _ = run(capsys, "map", "--chain", "rho,xi,psi-inv", "3 4 1 2 7 9 5 10 6 8 11 12", "--format", "json")
    assert code == 0
    stages = json.loads(out)
    assert [s["value"] for s in stages[1:]] == ["NNEENNENEENN", "NNEENNENEEEN", "4,4,3,3,2"]
    assert all(s["set"] == [2, 6, 8] for s in stages)


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "i321", "--n", "8", "--stat", "maj", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [r[1] for r in data["rows"]] == [1, 1, 2, 3, 5, 5, 7, 7, 8, 7, 7, 5, 5, 3, 2, 1, 1]
    assert data["closed_form_matches"] is True


def test_enumerate_csv_has_header(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "i321", "--n", "4", "--stat", "des", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["des", "count", "closed_form", "match"]
    assert [r[1] for r in rows[1:]] == ["1", "4", "1"]


def test_enumerate_members(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "s321", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 14


@pytest.mark.parametrize("argv, expected", [
    (["--id", "qbinom", "--n", "4", "--j", "2"], "1 + q + 2q^2 + q^3 + q^4"),
    (["--id", "catalan", "--n", "4"], "14"),
    (["--id", "a-poly", "--n", "3"], "1 + 2*x1 + 2*x2"),
    (["--id", "exact-count", "--n", "4", "--set", "1,3"], "2"),
    (["--id", "double213-enum", "--n", "3"], "1 + q^2"),
    (["--id", "limit-joint", "--k", "1", "--order", "3"], "q + 2q^2 + 3q^3"),
])
def test_poly_text(capsys, argv, expected):
    code, out, _ = run(capsys, "poly", *argv)
    assert code == 0
    assert out.strip() == expected


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "--id", "qbinom", "--n", "8", "--j", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["var"] == "q" and sum(data["coeffs"]) == 70
    code, out, _ = run(capsys, "poly", "--id", "descent-set", "--n", "3", "--format", "json")
    assert json.loads(out) == [
        {"vars": [], "coeff": 1}, {"vars": [1], "coeff": 2}, {"vars": [2], "coeff": 2},
    ]


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "double-213", "--max-n", "4")
    assert code == 0
    assert "known-discrepancy" in out

    from hookline import harness
    monkeypatch.setitem(harness.SUITES, "maj", lambda n_max: [harness._record("maj/q-binomial", "n=0", 1, 2)])
    code, out, _ = run(capsys, "verify", "--suite", "maj")
    assert code == 1


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "maj", "--max-n", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True and len(data["records"]) == 6


@pytest.mark.parametrize("argv", [
    ["stats", "1 1 2"],
    ["map", "3 2 1"],
    ["enumerate", "--class", "nope", "--n", "3"],
    ["enumerate", "--class", "all", "--n", "12", "--backend", "brute"],
    ["poly", "--id", "qbinom", "--n", "3"],
    ["verify", "--suite", "nope"],
    ["render", "--object", "partition", "--box", "4", "4,4,3,3,2"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("hookline: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--id", "nonsense"])
    assert exc.value.code == 2


def test_render_svg(capsys):
    code, out, _ = run(capsys, "render", "--object", "partition", "--box", "12", "4,4,3,3,2", "--format", "svg")
    assert code == 0
    assert out.startswith("<?xml")


def test_render_ascii_chain(capsys):
    code, out, _ = run(capsys, "render", "--object", "permutation-chain", "3 4 1 2")
    assert code == 0
    assert "[psi-inv]" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hookline", "poly", "--id", "catalan", "--n", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "42"
