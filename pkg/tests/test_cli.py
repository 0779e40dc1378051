import csv
import io
import math
import subprocess
import sys

import numpy as np
import pytest

from ncteleport.cli import CSV_HEADER, SweepSpec, UsageError, main, parse_grid, parse_number, sweep_rows


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def parse_point(out):
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


def read_rows(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_HEADER
    return [dict(zip(CSV_HEADER, r)) for r in rows[1:]]


def test_parse_number_and_grid():
    assert parse_number("pi/4") == pytest.approx(math.pi / 4)
    assert parse_number("3*pi/16") == pytest.approx(3 * math.pi / 16)
    assert parse_number("0.25") == 0.25
    assert parse_grid("0:1:5", "--p-grid") == pytest.approx([0, 0.25, 0.5, 0.75, 1])
    assert parse_grid("0.3", "--p-grid") == [0.3]
    with pytest.raises(UsageError, match="--p-grid"):
        parse_grid("0:1", "--p-grid")


def test_sweep_spec_validation():
    with pytest.raises(UsageError, match="--r-grid"):
        SweepSpec([1.0], [1.0], [0.5])
    with pytest.raises(UsageError, match="empty"):
        SweepSpec([], [0.0], [0.5])


def test_point_ideal(capsys):
    code, out, _ = run(["point", "--p", "1", "--r", "0", "--alpha2", "0.5"], capsys)
    assert code == 0
    vals = parse_point(out)
    assert float(vals["min_fidelity"]) == 1.0
    assert float(vals["discord_B"]) == pytest.approx(1.0, abs=1e-6)
    assert float(vals["negativity"]) == pytest.approx(1.0)


def test_point_separability_boundary(capsys):
    code, out, _ = run(["point", "--p", "0.333333", "--r", "0", "--alpha2", "0.5"], capsys)
    assert code == 0
    assert float(parse_point(out)["min_fidelity"]) == pytest.approx((1 + 0.333333) / 2, abs=1e-12)


def test_point_both_sides(capsys):
    code, out, _ = run(["point", "--p", "0.8", "--r", "0.5", "--measure-side", "both"], capsys)
    vals = parse_point(out)
    assert code == 0 and "discord_A" in vals and "discord_B" in vals


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["point", "--p", "1", "--r", "0.7854"], "--r"),
        (["point", "--p", "1.5"], "--p"),
        (["point", "--alpha2", "-0.1"], "--alpha2"),
    ],
)
def test_point_out_of_range(argv, flag, capsys):
    code, _, err = run(argv, capsys)
    assert code != 0
    assert flag in err


def test_point_phase_invariance(capsys):
    _, a, _ = run(["point", "--p", "0.7", "--r", "0.4", "--alpha2", "0.3"], capsys)
    _, b, _ = run(["point", "--p", "0.7", "--r", "0.4", "--alpha2", "0.3", "--phase", "1.9"], capsys)
    assert parse_point(a)["min_fidelity"] == parse_point(b)["min_fidelity"]


def test_sweep_custom_grid_row_major(capsys):
    code, out, _ = run(["sweep", "--p-grid", "0.5:1:2", "--r-grid", "0:pi/4:3", "--alpha2-grid", "0.2"], capsys)
    assert code == 0
    rows = read_rows(out)
    assert len(rows) == 6
    order = [(float(r["p"]), float(r["r"])) for r in rows]
    assert order == sorted(order)
    assert out.endswith("\n") and "\r" not in out


def test_sweep_figure3_inertial_law(tmp_path, capsys):
    path = tmp_path / "fig3.csv"
    assert run(["sweep", "--figure", "3", "--out", str(path)], capsys)[0] == 0
    rows = read_rows(path.read_text(encoding="utf-8"))
    assert len(rows) == 65 * 2
    inertial = [r for r in rows if float(r["r"]) == 0.0]
    assert len(inertial) == 65
    for r in inertial:
        assert float(r["min_F"]) == pytest.approx((1 + float(r["p"])) / 2, abs=1e-10)


def test_sweep_figure4_separable(capsys):
    _, out, _ = run(["sweep", "--figure", "4"], capsys)
    rows = read_rows(out)
    assert len(rows) == 65
    assert all(float(r["negativity"]) == 0.0 for r in rows)
    assert all(float(r["discord_B"]) > 0.0 for r in rows)


def test_sweep_figure2_bell_endpoint(capsys):
    _, out, _ = run(["sweep", "--figure", "2"], capsys)
    first = read_rows(out)[0]
    assert float(first["r"]) == 0.0
    assert float(first["negativity"]) == pytest.approx(1.0, abs=1e-10)
    assert float(first["discord_B"]) == pytest.approx(1.0, abs=1e-6)


def test_sweep_measure_side_leaves_other_column_blank(capsys):
    _, out, _ = run(["sweep", "--p-grid", "0.9", "--r-grid", "0.3", "--measure-side", "A"], capsys)
    row = read_rows(out)[0]
    assert row["discord_B"] == "" and float(row["discord_A"]) > 0


def test_sweep_deterministic_across_thread_counts(tmp_path, capsys):
    args = ["sweep", "--p-grid", "0:1:4", "--r-grid", "0:pi/4:4", "--alpha2-grid", "0:1:3"]
    run(args + ["--out", str(tmp_path / "a.csv")], capsys)
    run(args + ["--out", str(tmp_path / "b.csv"), "--threads", "4"], capsys)
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_sweep_twelve_significant_digits(capsys):
    _, out, _ = run(["sweep", "--p-grid", "0.7", "--r-grid", "0.3", "--alpha2-grid", "0.3"], capsys)
    value = read_rows(out)[0]["F_i0"]
    assert len(value.replace("0.", "", 1).lstrip("0")) <= 12


def test_sweep_errors(tmp_path, capsys):
    code, _, err = run(["sweep", "--p-grid", "0:1:0"], capsys)
    assert code != 0 and "--p-grid" in err
    code, _, err = run(["sweep", "--out", str(tmp_path / "missing" / "x.csv")], capsys)
    assert code != 0 and "--out" in err
    code, _, err = run(["sweep", "--threads", "0"], capsys)
    assert code != 0 and "--threads" in err


def test_config_file_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\np = 0.6\nr = pi/8\nalpha2 = 0.9\n", encoding="utf-8")
    _, out, _ = run(["point", "--config", str(cfg)], capsys)
    vals = parse_point(out)
    assert float(vals["p"]) == 0.6 and float(vals["alpha2"]) == pytest.approx(0.9)
    _, out, _ = run(["point", "--config", str(cfg), "--p", "0.2"], capsys)
    assert float(parse_point(out)["p"]) == 0.2
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense = 1\n", encoding="utf-8")
    code, _, err = run(["point", "--config", str(bad)], capsys)
    assert code != 0 and "nonsense" in err


def test_selfcheck(capsys):
    code, out, _ = run(["selfcheck"], capsys)
    assert code == 0
    assert out.count("PASS") == 5 and "FAIL" not in out


def test_rows_satisfy_invariants():
    spec = SweepSpec(list(np.linspace(0, 1, 4)), list(np.linspace(0, math.pi / 4, 4)), [0.0, 0.6, 1.0])
    for row in sweep_rows(spec):
        _, _, _, f0, f1, fmin, favg, d_b, d_a, neg, mi = row
        assert 0 <= fmin <= favg <= 1 + 1e-12
        assert fmin == min(f0, f1)
        assert d_a >= 0 and d_b >= 0 and neg >= 0 and mi >= -1e-12


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "ncteleport", "point", "--p", "1", "--r", "0"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert "min_fidelity: 1" in res.stdout
