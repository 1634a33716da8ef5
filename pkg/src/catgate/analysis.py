"""Output-state diagnostics: Wigner functions on a phase-space grid and the
three fidelity measures used to grade the gates (best-phase reference, fixed
even/odd cat reference, and the acceptance-window-averaged mixture)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gate
from .errors import GridSupportError
from .numerics import Grid, WaveFunction, overlap
from .semiclassical import reference_cat
from .states import FockResource, make_vacuum


@dataclass
class WignerGrid:
    """Real phase-space quasi-probability on an (x, y) product grid.

    ``imag_residue`` records the largest imaginary part discarded when the
    transform was truncated to its real part.
    """

    x_axis: Grid
    y_axis: Grid
    values: np.ndarray
    imag_residue: float = 0.0

    def normalization(self) -> float:
        inner = np.trapezoid(self.values, dx=self.y_axis.spacing, axis=1)
        return float(np.trapezoid(inner, dx=self.x_axis.spacing))

    def position_marginal(self) -> np.ndarray:
        """integral W dy, one value per x-axis node."""
        return np.trapezoid(self.values, dx=self.y_axis.spacing, axis=1)

    def momentum_marginal(self) -> np.ndarray:
        """integral W dx, one value per y-axis node."""
        return np.trapezoid(self.values, dx=self.x_axis.spacing, axis=0)


def _axis_indices(psi_grid: Grid, axis: Grid) -> np.ndarray:
    """Indices of the axis nodes on the wavefunction grid; the x output axis
    must lie on grid nodes so the z-products need no interpolation."""
    psi_grid.require_coverage(axis.x_min, axis.x_max, "wigner output axis")
    pos = (np.asarray(axis.points) - psi_grid.x_min) / psi_grid.spacing
    idx = np.rint(pos).astype(int)
    if np.max(np.abs(pos - idx)) > 1e-6:
        raise GridSupportError("wigner x-axis nodes must coincide with wavefunction grid nodes")
    return idx


def default_wigner_axes(grid: Grid, stride: int = 8) -> tuple[Grid, Grid]:
    """Phase-space axes obtained by striding the wavefunction grid."""
    pts = grid.points[::stride]
    axis = Grid(float(pts[0]), float(pts[-1]), len(pts))
    return axis, axis


def wigner(psi: WaveFunction, x_axis: Grid | None = None, y_axis: Grid | None = None) -> WignerGrid:
    """Wigner function W(x, y) = (1/pi) integral dz conj(psi)(x+z) psi(x-z)
    exp(2 i y z).

    The z integral runs over the full symmetric lattice of grid offsets (the
    state vanishes at the window edge, so the trapezoid sum is spectrally
    accurate); each x row is one vectorized oscillatory quadrature against the
    requested y axis.
    """
    grid = psi.grid
    if x_axis is None or y_axis is None:
        xa, ya = default_wigner_axes(grid)
        x_axis = x_axis or xa
        y_axis = y_axis or ya
    idx = _axis_indices(grid, x_axis)
    n = grid.n_points
    offsets = np.arange(-(n - 1), n)
    padded = np.zeros(3 * n, dtype=np.complex128)
    padded[n:2 * n] = psi.values
    kernel = np.exp(2j * np.outer(offsets * grid.spacing, y_axis.points))
    values = np.empty((len(idx), y_axis.n_points))
    imag_residue = 0.0
    for row, i in enumerate(idx):
        products = np.conj(padded[n + i + offsets]) * padded[n + i - offsets]
        transform = (products @ kernel) * (grid.spacing / np.pi)
        imag_residue = max(imag_residue, float(np.max(np.abs(transform.imag))))
        values[row] = transform.real
    return WignerGrid(x_axis=x_axis, y_axis=y_axis, values=values, imag_residue=imag_residue)


def fidelity(a: WaveFunction, b: WaveFunction) -> float:
    """Squared overlap of two normalized pure states; insensitive to the
    global phase of either argument."""
    value = abs(overlap(a, b)) ** 2
    return min(float(value), 1.0)


def fidelity_coh(psi_out: WaveFunction, n: int, y_m: float) -> float:
    """Fidelity against the linearized reference whose phase theta tracks the
    measurement outcome (the best-matching coherent superposition)."""
    return fidelity(psi_out, reference_cat(n, y_m, psi_out.grid))


def fidelity_cat(psi_out: WaveFunction, n: int) -> float:
    """Fidelity against the fixed even/odd cat reference (the y_m = 0 target);
    coincides with fidelity_coh at y_m = 0."""
    return fidelity(psi_out, reference_cat(n, 0.0, psi_out.grid))


@dataclass(frozen=True)
class AcceptanceWindow:
    """Window of accepted outcomes [-d/2, d/2] and the quadrature order used
    to average over it."""

    d: float
    n_quadrature: int = 64

    def __post_init__(self) -> None:
        if self.d <= 0:
            raise ValueError("window width d must be positive")
        if self.n_quadrature < 8:
            raise ValueError("n_quadrature must be at least 8")


def fidelity_mix(
    n: int,
    window: AcceptanceWindow,
    psi_in: WaveFunction | None = None,
) -> tuple[float, float]:
    """Average cat fidelity of the mixed state obtained by accepting all
    outcomes in the window, weighted by their probability density:

        F_mix = (1/P_mix) integral P(y) F_cat(y) dy,
        P_mix = integral P(y) dy,

    both by Gauss-Legendre quadrature with ``window.n_quadrature`` nodes.
    Returns (F_mix, P_mix).
    """
    if window.d > 2.0 * math.sqrt(2 * n + 1):
        raise ValueError(
            f"window d={window.d} exceeds the cat regime width 2*sqrt(2n+1)"
        )
    if psi_in is None:
        from .numerics import default_grid

        psi_in = make_vacuum(default_grid())
    reference = reference_cat(n, 0.0, psi_in.grid)
    nodes, weights = np.polynomial.legendre.leggauss(window.n_quadrature)
    ys = 0.5 * window.d * nodes
    ws = 0.5 * window.d * weights
    resource = FockResource(n)
    densities = np.empty_like(ys)
    fidelities = np.empty_like(ys)
    for i, y_m in enumerate(ys):
        result = gate.collapse(psi_in, resource, float(y_m))
        densities[i] = result.norm_N
        fidelities[i] = fidelity(result.psi_out, reference)
    p_mix = float(np.sum(ws * densities))
    f_mix = float(np.sum(ws * densities * fidelities) / p_mix)
    return f_mix, p_mix
