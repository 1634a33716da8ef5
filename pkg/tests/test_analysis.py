import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catgate import (
    AcceptanceWindow,
    CatParams,
    FockResource,
    Grid,
    WaveFunction,
    collapse,
    default_grid,
    fidelity,
    fidelity_cat,
    fidelity_coh,
    fidelity_mix,
    fourier_transform,
    make_cat,
    make_vacuum,
    probability_density,
    wigner,
)
from catgate.errors import GridSupportError, LinearizationDomainError

GRID = default_grid()
ODD_GRID = Grid(-16.0, 16.0, 4097)
VACUUM = make_vacuum(GRID)
ODD_VACUUM = make_vacuum(ODD_GRID)


# ---------------------------------------------------------------- wigner

def test_vacuum_wigner_peak_and_positivity():
    w = wigner(ODD_VACUUM)
    i0 = w.x_axis.n_points // 2
    assert w.x_axis.points[i0] == 0.0
    assert w.values[i0, i0] == pytest.approx(1.0 / math.pi, abs=1e-8)
    assert w.values.min() > -1e-12
    assert w.normalization() == pytest.approx(1.0, abs=1e-6)


def test_odd_cat_wigner_origin_value():
    cat = make_cat(CatParams(math.sqrt(11.0), 0.0, "odd"), ODD_GRID)
    w = wigner(cat)
    i0 = w.x_axis.n_points // 2
    assert w.values[i0, i0] == pytest.approx(-1.0 / math.pi, abs=1e-3)
    assert w.values[i0, i0] == pytest.approx(-1.0 / math.pi, abs=1e-6)


def test_wigner_marginals_of_collapsed_state():
    result = collapse(VACUUM, FockResource(5), 0.0)
    w = wigner(result.psi_out)
    position = np.abs(result.psi_out.values[::8]) ** 2
    assert np.max(np.abs(w.position_marginal() - position)) < 1e-5
    momentum = np.abs(fourier_transform(result.psi_out).values[::8]) ** 2
    assert np.max(np.abs(w.momentum_marginal() - momentum)) < 1e-5
    assert w.normalization() == pytest.approx(1.0, abs=1e-4)
    assert w.values.min() >= -1.0 / math.pi - 1e-3
    assert w.imag_residue < 1e-10


def test_collapsed_state_wigner_structure():
    # two positive lobes near p = +-3.3 and interference fringes with deep
    # negativity around the origin
    out = collapse(ODD_VACUUM, FockResource(5), 0.0).psi_out
    w = wigner(out, y_axis=Grid(-6.0, 6.0, 385))
    i0 = w.x_axis.n_points // 2
    p = w.y_axis.points
    assert w.values[i0, (p > 2.8) & (p < 3.8)].max() > 0.1
    assert w.values[i0, (p < -2.8) & (p > -3.8)].max() > 0.1
    assert w.values[i0, np.abs(p) < 1.0].min() < -0.25


def test_wigner_axis_errors():
    with pytest.raises(GridSupportError):
        wigner(VACUUM, x_axis=Grid(-20.0, 20.0, 16))
    with pytest.raises(GridSupportError):
        wigner(VACUUM, x_axis=Grid(-1.0, 1.0, 17))  # nodes off the grid lattice


def test_wigner_custom_momentum_axis():
    w = wigner(ODD_VACUUM, y_axis=Grid(-2.0, 2.0, 101))
    peak = w.values[w.x_axis.n_points // 2, 50]
    assert w.y_axis.points[50] == 0.0
    assert peak == pytest.approx(1.0 / math.pi, abs=1e-8)


# ---------------------------------------------------------------- fidelities

@settings(max_examples=15, deadline=None)
@given(phase=st.floats(0.0, 2 * math.pi), n=st.integers(0, 8))
def test_fidelity_phase_invariance_and_symmetry(phase, n):
    from catgate import hermite_function

    a = hermite_function(n, GRID)
    b = WaveFunction(
        GRID,
        (0.8 * hermite_function(n, GRID).values + 0.6 * hermite_function(1, GRID).values),
    )
    b = b.normalized()
    rotated = WaveFunction(GRID, np.exp(1j * phase) * a.values)
    f_ab = fidelity(a, b)
    assert 0.0 <= f_ab <= 1.0
    assert fidelity(rotated, b) == pytest.approx(f_ab, abs=1e-12)
    assert fidelity(b, a) == pytest.approx(f_ab, abs=1e-12)


def test_fidelity_self_is_one():
    cat = make_cat(CatParams(math.sqrt(11.0), 0.0, "odd"), GRID)
    assert fidelity(cat, cat) == pytest.approx(1.0, abs=1e-12)


def test_headline_fock5_infidelity():
    result = collapse(VACUUM, FockResource(5), 0.0)
    inf_cat = 1.0 - fidelity_cat(result.psi_out, 5)
    assert inf_cat == pytest.approx(0.005, abs=2e-3)
    # the two measures coincide at y_m = 0: same reference state
    assert fidelity_coh(result.psi_out, 5, 0.0) == pytest.approx(
        fidelity_cat(result.psi_out, 5), abs=1e-14
    )


def test_fidelity_coh_domain_error():
    result = collapse(VACUUM, FockResource(5), 0.0)
    with pytest.raises(LinearizationDomainError):
        fidelity_coh(result.psi_out, 5, 4.0)


def test_cat_fidelity_even_in_outcome():
    for y_m in (0.4, 0.8, 1.3):
        plus = fidelity_cat(collapse(VACUUM, FockResource(5), y_m).psi_out, 5)
        minus = fidelity_cat(collapse(VACUUM, FockResource(5), -y_m).psi_out, 5)
        assert plus == pytest.approx(minus, abs=1e-10)


def test_fixed_reference_degrades_faster_than_best_phase():
    # the fixed-cat measure collapses as the relative phase rotates with
    # y_m, while the phase-tracking measure stays high
    for y_m in (0.5, 1.5):
        out = collapse(VACUUM, FockResource(5), y_m).psi_out
        assert fidelity_coh(out, 5, y_m) > 0.9
        assert fidelity_cat(out, 5) < 0.01


# ---------------------------------------------------------------- acceptance window

def test_window_validation():
    with pytest.raises(ValueError):
        AcceptanceWindow(0.0)
    with pytest.raises(ValueError):
        AcceptanceWindow(1.0, 4)
    with pytest.raises(ValueError):
        fidelity_mix(5, AcceptanceWindow(2.1 * math.sqrt(11.0)), VACUUM)


def test_mix_fidelity_degenerate_window():
    f_mix, p_mix = fidelity_mix(5, AcceptanceWindow(1e-6), VACUUM)
    f_cat0 = fidelity_cat(collapse(VACUUM, FockResource(5), 0.0).psi_out, 5)
    assert abs(f_mix - f_cat0) < 1e-8
    assert p_mix == pytest.approx(probability_density(VACUUM, FockResource(5), 0.0) * 1e-6, rel=1e-4)


def test_mix_probability_linear_for_small_windows():
    p0 = probability_density(VACUUM, FockResource(5), 0.0)
    for d in (0.1, 0.2):
        _, p_mix = fidelity_mix(5, AcceptanceWindow(d), VACUUM)
        assert p_mix == pytest.approx(p0 * d, rel=0.02)


def test_mix_infidelity_grows_with_window():
    values = []
    for d in np.linspace(0.2, 1.4, 7):
        f_mix, _ = fidelity_mix(5, AcceptanceWindow(float(d)), VACUUM)
        values.append(1.0 - f_mix)
    assert all(b > a for a, b in zip(values, values[1:]))


def test_mix_quadrature_self_check():
    f64, p64 = fidelity_mix(5, AcceptanceWindow(1.0, 64), VACUUM)
    f128, p128 = fidelity_mix(5, AcceptanceWindow(1.0, 128), VACUUM)
    assert abs(f64 - f128) < 1e-6
    assert abs(p64 - p128) < 1e-6
