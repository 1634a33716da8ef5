"""Shared numerical kernels: grids, wavefunctions, Hermite functions, Fourier
transforms in the continuum convention, and the oscillatory integral behind the
cubic-phase ancilla.

Conventions used throughout the package:

* quadratures are dimensionless, ``a = (q + ip)/sqrt(2)``, ``[q, p] = i``;
* the Fourier transform to the momentum representation is
  ``[F psi](y) = (2 pi)^(-1/2) integral dx exp(-i y x) psi(x)``;
* all integrals on grids use the trapezoid rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np
from scipy import fft as _fft

from .errors import (
    GridMismatchError,
    GridSupportError,
    NyquistError,
    OscillationBudgetError,
)

MAX_HERMITE_ORDER = 64

#: Hard cap on the number of quadrature samples for one oscillatory integral.
OSCILLATION_SAMPLE_BUDGET = 2 ** 26

#: Half-width of the cubic-state integration window in units of 1/s.  At
#: |x| = 8/s the Gaussian envelope is exp(-32) ~ 1.3e-14, far below every
#: tolerance used by callers.
CUBIC_WINDOW_FACTOR = 8.0


@dataclass(frozen=True)
class Grid:
    """Uniform coordinate grid, endpoints included."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 16:
            raise ValueError(f"grid needs at least 16 points, got {self.n_points}")
        if not self.x_max > self.x_min:
            raise ValueError("grid requires x_max > x_min")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @cached_property
    def points(self) -> np.ndarray:
        pts = np.linspace(self.x_min, self.x_max, self.n_points)
        pts.setflags(write=False)
        return pts

    @property
    def is_symmetric(self) -> bool:
        return abs(self.x_min + self.x_max) <= 1e-12 * max(abs(self.x_min), abs(self.x_max))

    def covers(self, lo: float, hi: float) -> bool:
        return self.x_min <= lo and self.x_max >= hi

    def require_coverage(self, lo: float, hi: float, what: str) -> None:
        if not self.covers(lo, hi):
            raise GridSupportError(
                f"{what} needs grid coverage of [{lo:.3f}, {hi:.3f}], "
                f"got [{self.x_min}, {self.x_max}]"
            )


def default_grid() -> Grid:
    """Grid used for all Fock-gate work: wide enough for displacements ~3.3
    plus Gaussian tails, fine enough for every oscillation met in practice."""
    return Grid(-16.0, 16.0, 4096)


@dataclass
class WaveFunction:
    """Complex amplitudes on a uniform grid; the universal state carrier."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.complex128)
        if values.shape != (self.grid.n_points,):
            raise ValueError(
                f"amplitude array of shape {values.shape} does not match "
                f"grid with {self.grid.n_points} points"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("wavefunction amplitudes must be finite")
        self.values = values

    def squared_norm(self) -> float:
        return float(np.trapezoid(np.abs(self.values) ** 2, dx=self.grid.spacing))

    def norm(self) -> float:
        return math.sqrt(self.squared_norm())

    def normalized(self) -> "WaveFunction":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero wavefunction")
        return WaveFunction(self.grid, self.values / n)


def overlap(a: WaveFunction, b: WaveFunction) -> complex:
    """Inner product ``integral dx conj(a) b`` by the grid trapezoid rule."""
    if a.grid != b.grid:
        raise GridMismatchError("overlap requires identical grids")
    return complex(np.trapezoid(np.conj(a.values) * b.values, dx=a.grid.spacing))


def hermite_values(n: int, x: np.ndarray) -> np.ndarray:
    """Normalized Hermite function psi_n(x) = (pi^(1/4) sqrt(2^n n!))^(-1)
    H_n(x) exp(-x^2/2), evaluated pointwise.

    Uses the recurrence on the normalized functions themselves,
    ``psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1}``,
    which stays bounded where the raw polynomials overflow.
    """
    x = np.asarray(x, dtype=np.float64)
    h0 = np.pi ** -0.25 * np.exp(-x ** 2 / 2.0)
    if n == 0:
        return h0
    h1 = math.sqrt(2.0) * x * h0
    if n == 1:
        return h1
    prev, cur = h0, h1
    for k in range(1, n):
        prev, cur = cur, x * math.sqrt(2.0 / (k + 1)) * cur - math.sqrt(k / (k + 1.0)) * prev
    return cur


def hermite_function(n: int, grid: Grid) -> WaveFunction:
    """Number-state wavefunction |n> on a grid, unit norm."""
    if not 0 <= n <= MAX_HERMITE_ORDER:
        raise ValueError(f"hermite order must be in [0, {MAX_HERMITE_ORDER}], got {n}")
    support = math.sqrt(2 * n + 1) + 5.0
    grid.require_coverage(-support, support, f"hermite function n={n}")
    psi = WaveFunction(grid, hermite_values(n, grid.points).astype(np.complex128))
    return psi.normalized()


def _offset_dft(f: np.ndarray, x0: float, h: float, y0: float, dy: float, m: int) -> np.ndarray:
    """Evaluate ``X_j = sum_n f_n exp(-i y_j x_n)`` for ``x_n = x0 + n h`` and
    ``y_j = y0 + j dy`` via Bluestein's chirp factorization:
    ``y_j x_n = y_j x0 + y0 h n + dy h (j^2 + n^2 - (j-n)^2)/2``.
    Exact up to FFT roundoff for any grid offsets and spacings.
    """
    n = len(f)
    a = dy * h
    k = np.arange(n, dtype=np.float64)
    g = f * np.exp(-1j * ((y0 * h) * k + 0.5 * a * k * k))
    nfft = _fft.next_fast_len(n + m - 1, real=False)
    kk = np.arange(max(n, m), dtype=np.float64)
    chirp = np.exp(0.5j * a * kk * kk)
    kernel = np.zeros(nfft, dtype=np.complex128)
    kernel[:m] = chirp[:m]
    if n > 1:
        kernel[-(n - 1):] = chirp[1:n][::-1]
    out = _fft.ifft(_fft.fft(g, nfft) * _fft.fft(kernel))[:m]
    j = np.arange(m, dtype=np.float64)
    out *= np.exp(-1j * (0.5 * a * j * j + (y0 + dy * j) * x0))
    return out


def fourier_transform(psi: WaveFunction, max_wavenumber: float | None = None) -> WaveFunction:
    """Continuum Fourier transform ``[F psi](y)`` sampled on psi's own grid.

    The grid must be symmetric about zero.  ``max_wavenumber`` is the caller's
    declared fastest local phase slope of psi; when given, the grid must
    resolve it (Nyquist).  Parseval holds to ~1e-12 for states whose momentum
    content fits inside the grid window.
    """
    grid = psi.grid
    if not grid.is_symmetric:
        raise ValueError("fourier_transform requires a grid symmetric about 0")
    dx = grid.spacing
    if max_wavenumber is not None and abs(max_wavenumber) > np.pi / dx:
        raise NyquistError(
            f"declared wavenumber {max_wavenumber:.3g} exceeds the grid "
            f"Nyquist limit {np.pi / dx:.3g}"
        )
    out = _offset_dft(psi.values, grid.x_min, dx, grid.x_min, dx, grid.n_points)
    return WaveFunction(grid, out * dx / math.sqrt(2.0 * math.pi))


def _validate_cubic_params(gamma: float, s: float) -> None:
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"cubic nonlinearity must be in [0, 1], got {gamma}")
    if not 0.05 <= s <= 1.0:
        raise ValueError(f"squeezing factor must be in [0.05, 1], got {s}")


def _cubic_rule(gamma: float, s: float, y_max: float, oversample: float = 1.0):
    """Integration window and step for the cubic-state Fourier integral.

    Step bound: pi / (4 max|phase slope|) with the slope of
    ``gamma x^3 - y x`` maximized over the window, plus the envelope rate as a
    small pad.  Returns (half_width, n_samples).
    """
    half_width = CUBIC_WINDOW_FACTOR / s
    slope = 3.0 * gamma * half_width ** 2 + abs(y_max) + s ** 2 * half_width
    step = np.pi / (4.0 * slope * oversample)
    n_samples = int(math.ceil(2.0 * half_width / step)) + 1
    if n_samples > OSCILLATION_SAMPLE_BUDGET:
        raise OscillationBudgetError(
            f"cubic factor at gamma={gamma}, s={s}, |y|<={y_max:.3g} needs "
            f"{n_samples} samples (budget {OSCILLATION_SAMPLE_BUDGET})"
        )
    return half_width, n_samples


def _cubic_factor_scalar(gamma: float, s: float, y: float, oversample: float = 1.0) -> complex:
    half_width, n_samples = _cubic_rule(gamma, s, y, oversample)
    x = np.linspace(-half_width, half_width, n_samples)
    h = x[1] - x[0]
    total = 0.0 + 0.0j
    chunk = 1 << 21
    for lo in range(0, n_samples, chunk):
        xk = x[lo:lo + chunk]
        total += np.sum(np.exp(-s ** 2 * xk ** 2 / 2.0 + 1j * (gamma * xk ** 3 - y * xk)))
    ends = np.exp(-s ** 2 * half_width ** 2 / 2.0 + 1j * (gamma * x[0] ** 3 - y * x[0])) \
        + np.exp(-s ** 2 * half_width ** 2 / 2.0 + 1j * (gamma * x[-1] ** 3 - y * x[-1]))
    total -= 0.5 * ends
    return complex((s ** 2 / np.pi) ** 0.25 * h * total / math.sqrt(2.0 * math.pi))


def _cubic_factor_uniform(gamma: float, s: float, y0: float, dy: float, m: int,
                          oversample: float = 1.0) -> np.ndarray:
    y_max = max(abs(y0), abs(y0 + dy * (m - 1)))
    half_width, n_samples = _cubic_rule(gamma, s, y_max, oversample)
    x = np.linspace(-half_width, half_width, n_samples)
    h = x[1] - x[0]
    f = np.exp(-s ** 2 * x ** 2 / 2.0 + 1j * gamma * x ** 3)
    f[0] *= 0.5
    f[-1] *= 0.5
    out = _offset_dft(f, x[0], h, y0, dy, m)
    return out * ((s ** 2 / np.pi) ** 0.25 * h / math.sqrt(2.0 * math.pi))


def oscillatory_fourier_factor(
    gamma: float,
    s: float,
    y: Union[float, np.ndarray],
    oversample: float = 1.0,
) -> Union[complex, np.ndarray]:
    """Momentum-representation amplitude of the cubic phase state,

    ``(2 pi)^(-1/2) integral dx exp(-i y x) (s^2/pi)^(1/4)
    exp(-s^2 x^2 / 2) exp(+i gamma x^3)``,

    by trapezoid quadrature on a window |x| <= 8/s with step
    pi / (4 max|phase slope|).  Accepts a scalar y or a uniformly spaced
    array of y values (evaluated with a single chirp transform).

    ``oversample`` tightens the step by that factor; used by convergence
    checks.
    """
    _validate_cubic_params(gamma, s)
    if np.isscalar(y):
        return _cubic_factor_scalar(gamma, s, float(y), oversample)
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.size == 0:
        raise ValueError("y must be a scalar or a 1-D array")
    if y.size == 1:
        return np.array([_cubic_factor_scalar(gamma, s, float(y[0]), oversample)])
    steps = np.diff(y)
    dy = steps[0]
    if dy == 0.0 or not np.allclose(steps, dy, rtol=1e-9, atol=0.0):
        return np.array([_cubic_factor_scalar(gamma, s, float(v), oversample) for v in y])
    if dy > 0:
        return _cubic_factor_uniform(gamma, s, float(y[0]), float(dy), y.size, oversample)
    rev = _cubic_factor_uniform(gamma, s, float(y[-1]), float(-dy), y.size, oversample)
    return rev[::-1]
