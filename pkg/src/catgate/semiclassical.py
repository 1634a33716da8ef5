"""Semiclassical layer: in-out quadrature mappings for both gates, the factor
the measurement adds to the target wavefunction, its linearization into cat
parameters (theta, p_plus), and the reference cat construction.

For a Fock ancilla the measurement shifts the target momentum by

    +- delta_p(x) = +- sqrt(2n + 1 - (y_m - x)^2),

the two signs being the two "copies" of a cat.  The accumulated phase of each
copy is the antiderivative of delta_p, written via z = (x - y_m)/sqrt(2n+1) as

    phi(n, z) = (2n + 1)/2 * (z sqrt(1 - z^2) + arcsin z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import LinearizationDomainError
from .numerics import Grid, WaveFunction
from .states import CatParams, Parity, make_cat

#: Relative width of the degenerate band around a vanishing discriminant.
_DEGENERACY_RTOL = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class PhasePoint:
    """Point in phase space, convention a = (q + ip)/sqrt(2)."""

    q: float
    p: float


@dataclass(frozen=True)
class MappingResult:
    """Output branches of a multivalued in-out mapping: zero branches where
    the measurement is classically incompatible, one at the degenerate edge,
    two in the cat regime."""

    branches: Tuple[PhasePoint, ...]
    degenerate: bool


def _branches(q: float, p: float, radicand: float, scale: float) -> MappingResult:
    if abs(radicand) <= _DEGENERACY_RTOL * scale:
        return MappingResult((PhasePoint(q, p),), degenerate=True)
    if radicand < 0:
        return MappingResult((), degenerate=False)
    shift = math.sqrt(radicand)
    return MappingResult((PhasePoint(q, p + shift), PhasePoint(q, p - shift)), degenerate=False)


def fock_mapping(n: int, y_m: float, point_in: PhasePoint) -> MappingResult:
    """Semiclassical in-out mapping for the Fock-resource gate:
    q_out = q_in, p_out = p_in +- sqrt(2n + 1 - (y_m - q_in)^2)."""
    radicand = 2 * n + 1 - (y_m - point_in.q) ** 2
    scale = max(2 * n + 1, (y_m - point_in.q) ** 2)
    return _branches(point_in.q, point_in.p, radicand, scale)


def cubic_mapping(gamma: float, y_m: float, point_in: PhasePoint, p2_in: float = 0.0) -> MappingResult:
    """Semiclassical in-out mapping for the cubic-phase-resource gate:
    q_out = q_in, p_out = p_in +- sqrt((y_m - q_in - p2_in)/(3 gamma))."""
    if gamma <= 0:
        raise ValueError("cubic mapping requires gamma > 0")
    radicand = (y_m - point_in.q - p2_in) / (3.0 * gamma)
    scale = max(abs(y_m), abs(point_in.q), abs(p2_in), 1.0) / (3.0 * gamma)
    return _branches(point_in.q, point_in.p, radicand, scale)


def phase_function(n: int, z) -> np.ndarray:
    """Accumulated semiclassical phase phi(n, z) of one copy; |z| <= 1."""
    z = np.asarray(z, dtype=np.float64)
    if np.any(np.abs(z) > 1.0):
        raise ValueError("phase_function is defined for |z| <= 1")
    return 0.5 * (2 * n + 1) * (z * np.sqrt(1.0 - z ** 2) + np.arcsin(z))


def added_factor(n: int, y_m: float, x, epsilon: float = 1e-3):
    """Superposition of the two semiclassical copy factors,

        (1 - z^2)^(-1/4) [exp(i phi) + (-1)^n exp(-i phi)],

    with the 1/|delta_p| branch weights folded into the prefactor, defined up
    to one overall constant.  Valid only away from the turning points: points
    with |z| >= 1 - epsilon are flagged invalid and get value 0.

    Returns (values, valid_mask).
    """
    x = np.asarray(x, dtype=np.float64)
    z = (x - y_m) / math.sqrt(2 * n + 1)
    valid = np.abs(z) < 1.0 - epsilon
    z_safe = np.clip(z, -1.0 + epsilon, 1.0 - epsilon)
    phi = phase_function(n, z_safe)
    values = (1.0 - z_safe ** 2) ** -0.25 * (np.exp(1j * phi) + (-1) ** n * np.exp(-1j * phi))
    values = np.where(valid, values, 0.0 + 0.0j)
    return values, valid


@dataclass(frozen=True)
class LinearizedCat:
    """Cat parameters from the linear Taylor term of the copy phase."""

    theta: float
    p_plus: float
    parity: Parity


def linearize(n: int, y_m: float) -> LinearizedCat:
    """Expand phi around the input's center: theta = phi(n, -y_m/sqrt(2n+1)),
    p_plus = sqrt(2n + 1 - y_m^2)."""
    if y_m ** 2 >= 2 * n + 1:
        raise LinearizationDomainError(
            f"outcome y_m={y_m} outside the cat domain y_m^2 < {2 * n + 1}"
        )
    theta = float(phase_function(n, -y_m / math.sqrt(2 * n + 1)))
    p_plus = math.sqrt(2 * n + 1 - y_m ** 2)
    parity: Parity = "even" if n % 2 == 0 else "odd"
    return LinearizedCat(theta=theta, p_plus=p_plus, parity=parity)


def reference_cat(n: int, y_m: float, grid: Grid) -> WaveFunction:
    """The coherent-superposition target the exact output is compared to."""
    lin = linearize(n, y_m)
    return make_cat(CatParams(lin.p_plus, lin.theta, lin.parity), grid)


def odd_cat_phase_offset(psi: WaveFunction, p_plus: float) -> float:
    """Relative-phase offset of an odd-cat-like state, from the position of
    the interference node nearest the symmetry point: a state
    ~ sin(theta + p_plus x) exp(-x^2/2) has its node at x = -theta/p_plus.

    Insensitive to the global phase; meaningful for |theta| < pi/2.
    """
    grid = psi.grid
    window = 0.5 * np.pi / p_plus
    sel = np.abs(grid.points) <= window
    idx = np.flatnonzero(sel)
    dens = np.abs(psi.values[idx]) ** 2
    j = int(np.argmin(dens))
    if 0 < j < len(idx) - 1:
        num = dens[j - 1] - dens[j + 1]
        den = 2.0 * (dens[j - 1] - 2.0 * dens[j] + dens[j + 1])
        shift = num / den if den != 0 else 0.0
    else:
        shift = 0.0
    x_node = grid.points[idx[j]] + shift * grid.spacing
    return -p_plus * float(x_node)
