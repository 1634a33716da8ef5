import math

import pytest

from catgate import (
    CubicGateConfig,
    compare_gates,
    cubic_collapse,
    default_grid,
    fit_squeezing,
    make_vacuum,
    matched_outcome_ratio,
    odd_cat_ladder,
    odd_cat_phase_offset,
)
from catgate.errors import ConvergenceError, FitRangeError

GRID = default_grid()
VACUUM = make_vacuum(GRID)

# benchmark operating points for the first two odd-cat entries
ENTRY_1 = (1.066, 0.032)
ENTRY_2 = (2.486, 0.075)


def test_matched_outcome_ratio():
    assert matched_outcome_ratio(5) == 33.0
    assert matched_outcome_ratio(0) == 3.0


def test_ladder_first_two_entries():
    entries = odd_cat_ladder(2)
    assert len(entries) == 2
    for (y_m, gamma), (y_ref, g_ref) in zip(entries, (ENTRY_1, ENTRY_2)):
        assert abs(y_m - y_ref) < 0.02
        assert abs(gamma - g_ref) < 0.002
        assert gamma == pytest.approx(y_m / 33.0, abs=1e-12)


def test_ladder_entries_realize_odd_cats():
    # feeding an entry back through the gate must give a state whose
    # interference node sits at the origin (phase offset ~ 0)
    entries = odd_cat_ladder(2)
    for y_m, gamma in entries:
        result = cubic_collapse(VACUUM, CubicGateConfig(gamma, y_m, 0.05))
        theta = odd_cat_phase_offset(result.psi_out, math.sqrt(11.0))
        assert abs(theta) < 0.05


def test_ladder_determinism():
    kwargs = dict(scan_start=0.9, scan_stop=1.3, scan_step=0.05)
    first = odd_cat_ladder(1, **kwargs)
    second = odd_cat_ladder(1, **kwargs)
    assert first == second
    assert abs(first[0][0] - ENTRY_1[0]) < 0.02


def test_ladder_errors():
    with pytest.raises(ConvergenceError):
        odd_cat_ladder(1, scan_start=0.5, scan_stop=0.9, scan_step=0.05)
    with pytest.raises(ValueError):
        odd_cat_ladder(0)
    with pytest.raises(ValueError):
        odd_cat_ladder(10)


def test_fit_squeezing_probability_target():
    report = fit_squeezing(0.075, 2.486, "probability", 0.098)
    assert report.converged
    assert report.iterations > 0
    assert abs(report.fitted.s - 0.171) < 0.01
    assert abs(report.achieved_probability - 0.098) < 1e-3
    # achieved values recomputed from scratch agree with the stored ones
    check = cubic_collapse(VACUUM, report.fitted)
    assert abs(check.norm_N - report.achieved_probability) < 1e-10


def test_fit_squeezing_deterministic():
    a = fit_squeezing(0.075, 2.486, "probability", 0.098)
    b = fit_squeezing(0.075, 2.486, "probability", 0.098)
    assert a.fitted.s == b.fitted.s
    assert a.achieved_probability == b.achieved_probability


def test_fit_squeezing_out_of_range():
    with pytest.raises(FitRangeError):
        fit_squeezing(0.075, 2.486, "probability", 1.0)
    with pytest.raises(ValueError):
        fit_squeezing(0.075, 2.486, "norm", 0.1)


def test_compare_gates_degenerate_reduction():
    comparison = compare_gates(0, CubicGateConfig(0.0, 0.0, 1.0))
    assert comparison.fock.probability == pytest.approx(comparison.cubic.probability, abs=1e-9)
    assert comparison.fock.infidelity == pytest.approx(comparison.cubic.infidelity, abs=1e-9)
    assert comparison.fock.copy_spacing == 1.0
    assert math.isnan(comparison.cubic.copy_spacing)
    assert comparison.fock.wigner is None


def test_compare_gates_probability_matched_entry():
    comparison = compare_gates(5, CubicGateConfig(0.075, 2.486, 0.171))
    assert comparison.fock.probability == pytest.approx(comparison.cubic.probability, abs=2e-3)
    assert 15.0 < comparison.infidelity_ratio < 25.0
    assert comparison.fock.copy_spacing == pytest.approx(math.sqrt(11.0), abs=1e-12)
    assert comparison.cubic.copy_spacing == pytest.approx(math.sqrt(11.0), abs=0.01)


def test_compare_gates_with_wigner():
    comparison = compare_gates(1, CubicGateConfig(0.05, 0.45, 0.5), include_wigner=True)
    assert comparison.fock.wigner is not None
    assert comparison.fock.wigner.normalization() == pytest.approx(1.0, abs=1e-4)
    assert comparison.cubic.wigner.normalization() == pytest.approx(1.0, abs=1e-4)
