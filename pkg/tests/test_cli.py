import json
import math

import numpy as np
import pytest

from bogolon.cli import main


def _read_csv(path):
    meta, header, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            if " = " in line:
                key, _, value = line[2:].partition(" = ")
                meta[key] = value
            continue
        if header is None:
            header = line.split(",")
            continue
        rows.append([float(x) for x in line.split(",")])
    return meta, header, np.array(rows)


def test_levels_with_preset_and_magic_angle_row(tmp_path):
    out = tmp_path / "levels.csv"
    rc = main(["levels", "--preset", "paper", "--out", str(out),
               "--sweep", "theta:54.7356:80:236"])
    assert rc == 0
    meta, header, rows = _read_csv(out)
    assert header == ["theta_deg", "E_plus", "E_minus", "E_s", "E_a"]
    assert rows.shape == (236, 5)
    assert meta["lattice.theta_deg"] == "80.0"
    # first grid point is the magic angle: levels collapse
    assert abs(rows[0, 3] - rows[0, 4]) < 1e-9
    # at 80 degrees the dark level lies below the bright one
    assert rows[-1, 4] < rows[-1, 3]
    assert rows[-1, 4] == pytest.approx(-8.185648576659407e-05, rel=1e-9)


def test_levels_bare_angle_columns(tmp_path):
    out = tmp_path / "levels.csv"
    assert main(["levels", "--preset", "paper", "--out", str(out),
                 "--sweep", "theta:0:1:2"]) == 0
    _, _, rows = _read_csv(out)
    # theta = 0: E_s - E_A = -1.8e-4, dark level mirrored above
    assert rows[0, 3] == pytest.approx(-1.7999556250e-4, rel=1e-9)
    assert rows[0, 4] == pytest.approx(+1.7999556250e-4, rel=1e-9)


def test_dispersion_dataset_crosses_dark_level(tmp_path):
    out = tmp_path / "disp.csv"
    assert main(["dispersion", "--preset", "paper", "--out", str(out)]) == 0
    meta, header, rows = _read_csv(out)
    assert header == ["k", "E_plus", "E_minus", "E_ph", "E_s", "E_a"]
    k_star = float(meta["derived.k_star"])
    assert k_star == pytest.approx(1.4e-5, rel=0.10)
    # zero photon detuning at k = 0
    assert rows[0, 3] == pytest.approx(0.0, abs=1e-12)
    # the lower branch crosses the flat dark level at finite k
    gap = rows[:, 2] - rows[:, 5]
    assert gap[0] < 0.0 and gap[-1] > 0.0
    crossings = np.sum(np.sign(gap[:-1]) != np.sign(gap[1:]))
    assert crossings == 1


def test_fractions_dataset(tmp_path):
    out = tmp_path / "frac.csv"
    assert main(["fractions", "--preset", "paper", "--out", str(out)]) == 0
    meta, header, rows = _read_csv(out)
    assert header == ["k", "X2_upper", "Y2_upper", "X2_lower", "Y2_lower"]
    assert np.allclose(rows[:, 1] + rows[:, 2], 1.0, atol=1e-12)
    assert np.allclose(rows[:, 3] + rows[:, 4], 1.0, atol=1e-12)
    k_star = float(meta["derived.k_star"])
    nearest = np.argmin(np.abs(rows[:, 0] - k_star))
    assert rows[nearest, 3] == pytest.approx(0.56, abs=0.02)
    # fractions swap across the anticrossing
    assert rows[0, 3] < 0.5 < rows[-1, 3]
    assert np.all(np.diff(rows[:, 3]) > 0)


def test_spectrum_dataset_two_peaks_and_determinism(tmp_path):
    out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    assert main(["spectrum", "--preset", "paper", "--out", str(out1)]) == 0
    assert main(["spectrum", "--preset", "paper", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    meta, header, rows = _read_csv(out1)
    assert header == ["E_offset", "I_minus_scaled", "I_plus_scaled"]
    i_minus = rows[:, 1]
    peaks = [i for i in range(1, len(rows) - 1)
             if i_minus[i] > i_minus[i - 1] and i_minus[i] > i_minus[i + 1]]
    assert len(peaks) == 2
    dt = float(meta["derived.Delta_tilde"])
    assert rows[peaks[0], 0] == pytest.approx(dt, rel=0.05)
    assert rows[peaks[1], 0] == pytest.approx(3 * dt, rel=0.05)
    assert all(rows[p, 0] > 0 for p in peaks)


def test_evolve_matches_steady_intensities(tmp_path):
    out = tmp_path / "ev.csv"
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({
        "drive": {"hGamma_a": 1e-6, "hGamma_s": 4e-6, "hGamma_ph": 4e-6,
                  "F_pump": 0.0},
        "evolve": {"t_end": 2.0e7, "sample_every": 1000},
    }))
    assert main(["evolve", "--preset", "paper", "--config", str(config),
                 "--out", str(out)]) == 0
    meta, header, rows = _read_csv(out)
    assert header == ["t", "A2", "B_plus2", "B_minus2"]
    assert rows[0, 1] == rows[0, 2] == rows[0, 3] == 0.0
    assert rows[-1, 2] == pytest.approx(float(meta["steady.I_plus"]), rel=1e-6)
    assert rows[-1, 3] == pytest.approx(float(meta["steady.I_minus"]), rel=1e-6)


def test_evolve_capped_without_explicit_budget(tmp_path):
    out = tmp_path / "ev.csv"
    config = tmp_path / "cfg.json"
    # preset dark damping needs ~1e10 steps; the default budget caps it
    config.write_text(json.dumps({"evolve": {"sample_every": 5000}}))
    assert main(["evolve", "--preset", "paper", "--config", str(config),
                 "--out", str(out)]) == 0
    meta, _, _ = _read_csv(out)
    assert meta["evolve.capped"] == "True"


def test_evolve_explicit_budget_overflow_is_numerical_error(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"evolve": {"t_end": 1e9, "dt": 1.0}}))
    rc = main(["evolve", "--preset", "paper", "--config", str(config),
               "--out", str(tmp_path / "x.csv")])
    assert rc == 3


def test_oracle_report(tmp_path):
    out = tmp_path / "oracle.csv"
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"oracle": {"n_cells": 3, "V_dyn": 1e-3}}))
    assert main(["oracle", "--preset", "paper", "--config", str(config),
                 "--out", str(out)]) == 0
    text = out.read_text()
    values = {}
    for line in text.splitlines():
        if line.startswith("#") or line == "section,key,value":
            continue
        section, key, value = line.split(",")
        values[(section, key)] = value
    assert values[("blocking", "expected_dimension")] == "15"
    assert values[("blocking", "separated")] == "True"
    assert float(values[("blocking", "separation")]) == pytest.approx(2e-3, rel=0.1)
    assert float(values[("band", "deviation_over_J")]) < 2e-3


def test_plot_script_flag(tmp_path):
    out = tmp_path / "frac.csv"
    assert main(["fractions", "--preset", "paper", "--out", str(out),
                 "--sweep", "k:0:2e-5:11", "--plot-script"]) == 0
    script = (tmp_path / "frac.csv.gp").read_text()
    assert "plot" in script and "using 1:2" in script


def test_exit_code_config_errors(tmp_path):
    assert main(["levels", "--out", str(tmp_path / "x.csv")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["levels", "--config", str(bad)]) == 2
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"lattice": {"R": 2000.0}}))
    assert main(["levels", "--preset", "paper", "--config", str(invalid)]) == 2
    assert main(["levels", "--preset", "paper", "--sweep", "nope:0:1:5"]) == 2
    assert main(["spectrum", "--preset", "paper", "--sweep", "theta:0:90:5",
                 "--out", str(tmp_path / "y.csv")]) == 2


def test_exit_code_numerical_domain(tmp_path):
    config = tmp_path / "cfg.json"
    # dark level far above the lower branch: no resonance wavenumber
    config.write_text(json.dumps({"drive": {"E_drive": 1.6, "k_pump": None},
                                  "lattice": {"theta_deg": 10.0}}))
    rc = main(["spectrum", "--preset", "paper", "--config", str(config),
               "--out", str(tmp_path / "x.csv")])
    assert rc == 3


def test_config_without_preset(tmp_path):
    out = tmp_path / "lv.csv"
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({
        "lattice": {"E_A": 1.5, "a": 1000.0, "R": 100.0, "mu": 2.5,
                    "theta_deg": 80.0, "N": 101},
        "waveguide": {"epsilon": 2.0, "u_b": 0.25,
                      "S_bar": math.pi * 1e6, "L": None, "q0": None},
        "sweep": {"variable": "theta", "min": 0.0, "max": 90.0, "count": 11},
    }))
    assert main(["levels", "--config", str(config), "--out", str(out)]) == 0
    meta, _, rows = _read_csv(out)
    assert meta["lattice.N"] == "101"
    assert rows.shape == (11, 5)
