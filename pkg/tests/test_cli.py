import csv
import io
import json
import subprocess
import sys

import pytest

from radchaos.cli import emit, run
from radchaos.norms import NormResult

K3 = "3 2\n0 1 1.0\n0 2 1.0\n1 2 1.0\n"
SIGNED = "1,-1\n-1,1\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "k3.hg").write_text(K3)
    (tmp_path / "m.csv").write_text(SIGNED)
    (tmp_path / "bad.hg").write_text("3 2\n0 0 1.0\n")
    (tmp_path / "v.json").write_text('{"dims": [2], "values": [1, 1]}')
    return tmp_path


def _run(argv, capsys):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_norm_cut(files, capsys):
    code, out, _ = _run(["norm", "--kind", "cut", "--input", files / "m.csv"], capsys)
    assert code == 0
    assert json.loads(out) == {"value": 1.0, "witness": {"I1": "0x1", "I2": "0x1"}}


@pytest.mark.parametrize("kind,value", [("opnorm", 4.0), ("linf", 4.0)])
def test_norm_matrix_kinds(files, capsys, kind, value):
    code, out, _ = _run(["norm", "--kind", kind, "--input", files / "m.csv"], capsys)
    assert code == 0 and json.loads(out)["value"] == value


def test_norm_chaos_kinds(files, capsys):
    code, out, _ = _run(["norm", "--kind", "chaos", "--input", files / "k3.hg"], capsys)
    assert code == 0 and json.loads(out)["value"] == 3.0
    code, out, _ = _run(["norm", "--kind", "cut-star", "--input", files / "k3.hg"], capsys)
    assert json.loads(out)["witness"] == {"I": "0x7"}


def test_norm_lp_and_profile(files, capsys):
    code, out, _ = _run(["norm", "--kind", "lp", "--p", "2", "--input", files / "v.json"], capsys)
    assert json.loads(out)["value"] == float(f"{2 ** 0.5:.12g}")
    code, out, _ = _run(["norm", "--kind", "profile", "--input", files / "m.csv"], capsys)
    assert json.loads(out)["m"] == [2.82842712475, 2.82842712475]


def test_disc_modes(files, capsys):
    code, out, _ = _run(["disc", "--input", files / "k3.hg"], capsys)
    r = json.loads(out)
    assert code == 0 and r["value"] == 1.0 and r["balance"] == 4.24264068712
    _, out, _ = _run(["disc", "--expected", "--input", files / "k3.hg"], capsys)
    assert json.loads(out)["value"] == 1.5
    _, out, _ = _run(["disc", "--coloring", "++-", "--input", files / "k3.hg"], capsys)
    assert json.loads(out)["value"] == 1.0
    _, out, _ = _run(["disc", "--coloring", "1,1,1", "--input", files / "k3.hg"], capsys)
    assert json.loads(out)["value"] == 3.0
    _, out, _ = _run(["disc", "--mc", "--trials", "2000", "--seed", "4", "--input", files / "k3.hg"], capsys)
    r = json.loads(out)
    assert r["trials"] == 2000 and abs(r["value"] - 1.5) < 3 * r["stderr"]


def test_verify_suite(capsys):
    code, out, _ = _run(["verify", "--suite", "sandwich", "--sizes", "4", "--count", "10", "--seed", "7"], capsys)
    r = json.loads(out)
    assert code == 0 and r["name"] == "sandwich" and r["pass"] is True
    assert r["instances"] == 3 * 10 + 6


def test_scan_csv(capsys):
    code, out, _ = _run(["scan", "--n-min", "3", "--n-max", "5", "--trials", "200", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["n", "disc_exact", "e_mc", "best", "balance", "n_pow"]
    assert [r[0] for r in rows[1:]] == ["3", "4", "5"]
    assert [float(r[1]) for r in rows[1:]] == [1.0, 1.0, 1.0]


def test_output_file(files, capsys):
    dest = files / "out.json"
    code, out, _ = _run(["norm", "--kind", "cut", "--input", files / "m.csv", "--output", dest], capsys)
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["value"] == 1.0


def test_exit_codes(files, capsys):
    code, _, err = _run(["disc", "--input", files / "bad.hg"], capsys)
    assert code == 2 and err.startswith("error:")
    code, _, err = _run(["norm", "--kind", "cut", "--input", files / "m.csv", "--format", "csv"], capsys)
    assert code == 2 and err.startswith("error:")
    code, _, err = _run(["norm", "--kind", "bogus", "--input", files / "m.csv"], capsys)
    assert code == 2 and err.startswith("error:")
    code, _, err = _run(["norm", "--kind", "cut", "--input", files / "missing.csv"], capsys)
    assert code == 2
    code, _, err = _run(["verify", "--suite", "nope"], capsys)
    assert code == 2
    code, _, err = _run(["disc", "--input", files / "k3.hg", "--budget", "4"], capsys)
    assert code == 3 and err.startswith("error:")


def test_budget_from_environment(files, capsys, monkeypatch):
    monkeypatch.setenv("RADCHAOS_BUDGET", "4")
    code, _, _ = _run(["disc", "--input", files / "k3.hg"], capsys)
    assert code == 3
    code, _, _ = _run(["disc", "--input", files / "k3.hg", "--budget", "1000"], capsys)
    assert code == 0


def test_emit_rounding():
    text = emit(NormResult(1 / 3, {"x": 10}))
    assert json.loads(text) == {"value": 0.333333333333, "witness": {"x": "0xa"}}
    with pytest.raises(ValueError):
        emit(NormResult(1.0, {}), "csv")


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "radchaos", "disc", "--exact", "--input", str(files / "k3.hg")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 1.0
