import numpy as np
import pytest

from avgfw.cli import main, read_trace_csv


def run_cli(*argv):
    return main(list(argv))


def write_config(path, text):
    path.write_text(text)
    return str(path)


SCALAR_CONFIG = """
[problem]
kind = scalar1d
alpha = 1.0

[solver]
variant = fw
c = 2
p = 1
max_iters = 50
trace_every = 1
x0 = 0.5

[output]
seed = 0
"""

CS_COMPARE_CONFIG = """
[problem]
kind = cs
noise_std = 0.0
alpha_scale = 1.0

[solver]
c = 3
p = 1
max_iters = 2000

[compare]
window_lo = 100
window_hi = 1999
reference_iters = 4000

[output]
seed = 2
emit_plots = {plots}
"""

FORCED_FLOW_CONFIG = """
[problem]
kind = scalar1d

[solver]
c = 3
p = 1

[flow]
variant = avgfw
forced_signal = one
t_end = 6.0
dt = 1e-3
record_every = 1.0

[output]
seed = 0
"""

SCALAR_FLOW_CONFIG = """
[problem]
kind = scalar1d
alpha = 1.0

[solver]
c = 2
p = 1

[flow]
variant = fw
t_end = 50.0
dt = 1e-3
record_every = 1.0
x0 = 0.5

[output]
seed = 0
"""


def read_csv_rows(path):
    rows = []
    header = {}
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("# "):
                key, _, val = line[2:].partition(" = ")
                header[key] = val
            elif line and not line[0].isalpha():
                rows.append(line.split(","))
    return header, rows


def test_solve_scalar_demo_gap_at_k0(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_CONFIG)
    out = tmp_path / "out"
    assert run_cli("solve", "--config", cfg, "--out", str(out), "--quiet") == 0
    header, rows = read_csv_rows(out / "trace.csv")
    assert rows[0][0] == "0"
    assert float(rows[0][2]) == pytest.approx(1.5)
    assert header["variant"] == "fw"


def test_solve_missing_config_exits_2(tmp_path):
    assert run_cli("solve", "--config", str(tmp_path / "absent.ini"), "--quiet") == 2


def test_solve_is_byte_identical_across_runs(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_CONFIG)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert run_cli("solve", "--config", cfg, "--out", str(out1), "--quiet") == 0
    assert run_cli("solve", "--config", cfg, "--out", str(out2), "--quiet") == 0
    assert (out1 / "trace.csv").read_bytes() == (out2 / "trace.csv").read_bytes()


def test_trace_csv_format_contract(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_CONFIG)
    out = tmp_path / "out"
    run_cli("solve", "--config", cfg, "--out", str(out), "--quiet")
    raw = (out / "trace.csv").read_bytes()
    assert b"\r" not in raw
    text = raw.decode("ascii")
    data_lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    assert data_lines[0] == "k,f,gap,disc_err,gamma,beta,atom_id"
    assert "," in data_lines[1] and ";" not in data_lines[1]


def test_compare_cs_summary_and_plots(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", CS_COMPARE_CONFIG.format(plots="true"))
    out = tmp_path / "out"
    assert run_cli("compare", "--config", cfg, "--out", str(out), "--quiet") == 0
    summary = (out / "summary.txt").read_text()
    entries = dict(line.split(" = ") for line in summary.strip().splitlines())
    assert float(entries["c"]) == 3.0
    assert float(entries["p"]) == 1.0
    assert "alpha" in entries
    slope_fw = float(entries["slope_gap_fw"])
    slope_avg = float(entries["slope_gap_avgfw"])
    assert slope_avg <= slope_fw - 0.2
    for name in ("fw_trace.csv", "avgfw_trace.csv", "gap.svg", "disc_err.svg", "support.svg"):
        assert (out / name).exists()
    assert "<svg" in (out / "gap.svg").read_text()


def test_compare_without_plots_writes_no_svg(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", CS_COMPARE_CONFIG.format(plots="false"))
    out = tmp_path / "out"
    assert run_cli("compare", "--config", cfg, "--out", str(out), "--quiet") == 0
    assert not list(out.glob("*.svg"))


def test_flow_forced_signal_matches_closed_form(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", FORCED_FLOW_CONFIG)
    out = tmp_path / "out"
    assert run_cli("flow", "--config", cfg, "--out", str(out), "--quiet") == 0
    header, _ = read_csv_rows(out / "flow_trace.csv")
    assert float(header["final_s_bar"]) == pytest.approx(26.0 / 27.0, abs=1e-3)


def test_flow_scalar_envelope(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_FLOW_CONFIG)
    out = tmp_path / "out"
    assert run_cli("flow", "--config", cfg, "--out", str(out), "--quiet") == 0
    _, rows = read_csv_rows(out / "flow_trace.csv")
    h0 = float(rows[0][4])
    h_end = float(rows[-1][4])
    assert h0 == pytest.approx(0.25)
    assert h_end <= 1.05 * h0 * (2.0 / 52.0) ** 2


def test_flow_oversized_dt_exits_3(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_FLOW_CONFIG.replace("dt = 1e-3", "dt = 0.5"))
    assert run_cli("flow", "--config", cfg, "--out", str(tmp_path / "o"), "--quiet") == 3


def test_diag_refits_existing_csv(tmp_path, capsys):
    cfg = write_config(tmp_path / "cfg.ini", CS_COMPARE_CONFIG.format(plots="false"))
    out = tmp_path / "out"
    run_cli("compare", "--config", cfg, "--out", str(out), "--quiet")
    assert run_cli("diag", str(out / "fw_trace.csv"), "--window-lo", "100", "--window-hi", "1999") == 0
    printed = capsys.readouterr().out
    entries = dict(line.split(" = ") for line in printed.strip().splitlines())
    assert -1.35 <= float(entries["slope_gap"]) <= -0.75
    assert "support_first" in entries


def test_diag_missing_file_exits_2(tmp_path):
    assert run_cli("diag", str(tmp_path / "none.csv")) == 2


SWEEP_CONFIG = """
[problem]
kind = synthetic_logistic
m = 60
n = 40
density = 0.1

[solver]
variant = avgfw
c = 3
p = 1
max_iters = 150

[sweep]
alpha_lo = 1
alpha_hi = 100
points = 3
train_frac = 0.6

[output]
seed = 0
"""


def test_sweep_reports_validation_loss_grid(tmp_path, capsys):
    cfg = write_config(tmp_path / "cfg.ini", SWEEP_CONFIG)
    out = tmp_path / "out"
    assert run_cli("sweep", "--config", cfg, "--out", str(out)) == 0
    assert "best alpha" in capsys.readouterr().out
    _, rows = read_csv_rows(out / "sweep.csv")
    assert len(rows) == 3
    for row in rows:
        assert np.isfinite(float(row[2]))  # validation loss column


def test_sweep_rejects_non_classification_problem(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_CONFIG + "\n[sweep]\npoints = 2\n")
    assert run_cli("sweep", "--config", cfg, "--out", str(tmp_path / "o"), "--quiet") == 2


def test_gen_data_round_trips(tmp_path):
    out = tmp_path / "data"
    assert run_cli("gen-data", "--out", str(out), "--m", "40", "--n", "60", "--density", "0.05", "--quiet") == 0
    from avgfw.experiments import load_svmlight

    data = load_svmlight(str(out / "synthetic_logistic.svmlight"), n_features_hint=60)
    assert data.Z.shape == (40, 60)


def test_read_trace_csv_round_trip(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", SCALAR_CONFIG)
    out = tmp_path / "out"
    run_cli("solve", "--config", cfg, "--out", str(out), "--quiet")
    trace = read_trace_csv(str(out / "trace.csv"))
    assert trace.ks[0] == 0
    assert trace.gap[0] == pytest.approx(1.5)


def test_env_var_default_out_dir(tmp_path, monkeypatch):
    cfg_text = SCALAR_CONFIG  # no [output] dir key
    cfg = write_config(tmp_path / "cfg.ini", cfg_text)
    target = tmp_path / "envout"
    monkeypatch.setenv("AVGFW_OUT", str(target))
    assert run_cli("solve", "--config", cfg, "--quiet") == 0
    assert (target / "trace.csv").exists()


def test_seed_flag_overrides_config(tmp_path):
    cfg = write_config(tmp_path / "cfg.ini", CS_COMPARE_CONFIG.format(plots="false").replace("max_iters = 2000", "max_iters = 200"))
    out1, out2 = tmp_path / "s2", tmp_path / "s5"
    run_cli("solve", "--config", cfg, "--out", str(out1), "--quiet")
    run_cli("solve", "--config", cfg, "--out", str(out2), "--seed", "5", "--quiet")
    a = read_trace_csv(str(out1 / "trace.csv"))
    b = read_trace_csv(str(out2 / "trace.csv"))
    assert not np.array_equal(a.f, b.f)
