import json
import math

import numpy as np
import pytest

from catgate.cli import main


def read_csv(path):
    names = None
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if names is None:
                names = line.split(",")
                continue
            rows.append([float(v) for v in line.split(",")])
    data = np.array(rows)
    return {name: data[:, i] for i, name in enumerate(names)}


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CATGATE_GRID", raising=False)
    return tmp_path


def test_collapse_vacuum_resource():
    assert main(["collapse", "--fock", "0", "--ym", "0"]) == 0
    summary = json.loads(open("collapse.json").read())
    assert summary["P"] == pytest.approx(0.3989, abs=1e-4)
    table = read_csv("collapse.csv")
    assert set(table) == {"x", "re", "im", "abs2"}
    meta = json.loads(open("collapse.csv.meta.json").read())
    assert meta["command"] == "collapse"
    assert "version" in meta


def test_collapse_fock5_headline():
    assert main(["collapse", "--fock", "5", "--ym", "0", "--out", "f5"]) == 0
    summary = json.loads(open("f5.json").read())
    assert summary["P"] == pytest.approx(0.098, abs=3e-3)
    assert 1.0 - summary["fidelities"]["cat"] == pytest.approx(0.005, abs=2e-3)


def test_collapse_requires_one_resource():
    assert main(["collapse"]) == 2
    assert main(["collapse", "--fock", "1", "--cubic", "0.1,1,0.5"]) == 2


def test_malformed_flag_exits_with_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["collapse", "--bogus"])
    assert exc.value.code == 2


def test_byte_identical_rerun():
    main(["collapse", "--fock", "3", "--ym", "0.5", "--out", "a"])
    main(["collapse", "--fock", "3", "--ym", "0.5", "--out", "b"])
    assert open("a.csv", "rb").read() == open("b.csv", "rb").read()
    assert open("a.json", "rb").read() == open("b.json", "rb").read()


def test_wigner_vacuum():
    assert main(["wigner", "--vacuum", "--out", "wv"]) == 0
    meta = json.loads(open("wv.csv.meta.json").read())
    assert meta["normalization"] == pytest.approx(1.0, abs=1e-4)
    assert meta["max_value"] == pytest.approx(1.0 / math.pi, abs=1e-4)


def test_wigner_cubic_negativity():
    args = ["wigner", "--cubic", "0.334,11.012,0.241", "--out", "wc"]
    assert main(args) == 0
    meta = json.loads(open("wc.csv.meta.json").read())
    assert meta["min_value"] < -0.25
    assert meta["normalization"] == pytest.approx(1.0, abs=1e-4)


def test_wigner_vacuum_excludes_resources():
    assert main(["wigner", "--vacuum", "--fock", "5"]) == 2


def test_wigner_ym_override_for_cubic():
    args = ["wigner", "--cubic", "0.075,2.486,0.3", "--ym", "0.5",
            "--stride", "16", "--out", "wo"]
    assert main(args) == 0
    meta = json.loads(open("wo.csv.meta.json").read())
    assert meta["parameters"]["ym"] == "0.5"


def test_scan_probability_completeness():
    assert main(["scan", "probability", "--fock", "1..2", "--out", "sp"]) == 0
    meta = json.loads(open("sp.csv.meta.json").read())
    for n in ("1", "2"):
        assert meta["integrals"][n] == pytest.approx(1.0, abs=1e-3)
    table = read_csv("sp.csv")
    assert set(table) == {"n", "ym", "P"}


def test_scan_mixfid_monotone():
    args = ["scan", "mixfid", "--fock", "5", "--d", "0..1.4", "--points", "8", "--out", "sm"]
    assert main(args) == 0
    table = read_csv("sm.csv")
    inf = table["infidelity_mix"]
    assert np.all(np.diff(inf) >= -1e-12)


def test_scan_squeeze_matched_row():
    args = ["scan", "squeeze", "--gamma", "0.075", "--ym", "2.486",
            "--srange", "0.111,0.231,5", "--out", "sq"]
    assert main(args) == 0
    table = read_csv("sq.csv")
    row = int(np.flatnonzero(np.isclose(table["s"], 0.171))[0])
    assert table["P"][row] == pytest.approx(0.098, abs=3e-3)


def test_scan_cohfid_small():
    assert main(["scan", "cohfid", "--fock", "1", "--step", "0.4", "--out", "sc"]) == 0
    table = read_csv("sc.csv")
    assert np.all((table["infidelity_coh"] >= 0) & (table["infidelity_coh"] <= 1))


def test_scan_catfid_small():
    args = ["scan", "catfid", "--fock", "5", "--window", "0,1", "--step", "0.25", "--out", "sf"]
    assert main(args) == 0
    table = read_csv("sf.csv")
    assert table["infidelity_cat"][0] == pytest.approx(0.005, abs=2e-3)


def test_match_squeeze_probability():
    args = ["match", "squeeze", "--gamma", "0.075", "--ym", "2.486",
            "--probability", "0.098", "--out", "ms"]
    assert main(args) == 0
    report = json.loads(open("ms.json").read())
    assert abs(report["fitted"]["s"] - 0.171) < 0.01
    assert report["converged"] is True


def test_match_squeeze_flag_validation():
    assert main(["match", "squeeze", "--gamma", "0.075", "--ym", "2.486"]) == 2
    args = ["match", "squeeze", "--gamma", "0.075", "--ym", "2.486",
            "--probability", "0.098", "--infidelity", "0.005"]
    assert main(args) == 2


def test_match_ladder_first_entry():
    args = ["match", "ladder", "--kmax", "1", "--scan", "0.9,1.3,0.05", "--out", "ml"]
    assert main(args) == 0
    table = read_csv("ml.csv")
    assert abs(table["ym"][0] - 1.066) < 0.02
    assert abs(table["gamma"][0] - 0.032) < 0.002
    report = json.loads(open("ml.json").read())
    assert report["entries"][0]["entry"] == 1


def test_match_ladder_nonconvergence_exit_code():
    args = ["match", "ladder", "--kmax", "2", "--scan", "0.9,1.3,0.05"]
    assert main(args) == 3


@pytest.mark.slow
def test_match_compare_entry_mode():
    # entry mode locates the odd-cat point, then fits s for equal success
    # probability with the Fock gate
    args = ["match", "compare", "--fock", "5", "--entry", "2", "--out", "me"]
    assert main(args) == 0
    report = json.loads(open("me.json").read())
    assert report["fock"]["P"] == pytest.approx(report["cubic"]["P"], abs=2e-3)
    assert 15.0 < report["infidelity_ratio"] < 25.0


def test_match_compare_degenerate():
    args = ["match", "compare", "--fock", "0", "--cubic", "0,0,1", "--out", "mc"]
    assert main(args) == 0
    report = json.loads(open("mc.json").read())
    assert report["fock"]["P"] == pytest.approx(report["cubic"]["P"], abs=1e-9)
    assert report["cubic"]["copy_spacing"] is None


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[collapse]\nfock = 0\nym = 1.0\nout = fromfile\n")
    assert main(["collapse", "--config", str(cfg)]) == 0
    summary = json.loads(open("fromfile.json").read())
    assert summary["y_m"] == 1.0
    # flags win over the file
    assert main(["collapse", "--config", str(cfg), "--ym", "0", "--out", "flagged"]) == 0
    assert json.loads(open("flagged.json").read())["y_m"] == 0.0


def test_config_file_unknown_key(tmp_path):
    cfg = tmp_path / "bad.ini"
    cfg.write_text("[collapse]\nfock = 0\nwidgets = 3\n")
    assert main(["collapse", "--config", str(cfg)]) == 2


def test_grid_environment_override(monkeypatch):
    monkeypatch.setenv("CATGATE_GRID", "-8,8,1024")
    assert main(["collapse", "--fock", "0", "--out", "envgrid"]) == 0
    meta = json.loads(open("envgrid.csv.meta.json").read())
    assert meta["parameters"]["grid"] == "-8.0,8.0,1024"
    # explicit flag beats the environment (= form for the leading minus)
    assert main(["collapse", "--fock", "0", "--grid=-16,16,2048", "--out", "g2"]) == 0
    assert json.loads(open("g2.csv.meta.json").read())["parameters"]["grid"] == "-16.0,16.0,2048"


def test_io_error_exit_code():
    assert main(["collapse", "--fock", "0", "--out", "missing_dir/out"]) == 4
