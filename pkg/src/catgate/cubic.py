"""Cubic-phase-state branch of the gate: collapse with the cubic resource and
the squeezing-dependent probability/fidelity diagnostics used to compare it
against the Fock-state gate."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gate
from .analysis import fidelity
from .numerics import Grid, WaveFunction, default_grid
from .semiclassical import reference_cat
from .states import CubicPhaseResource, make_vacuum


@dataclass(frozen=True)
class CubicGateConfig:
    """One operating point of the cubic gate.  Outcomes are taken y_m >= 0 by
    convention; unlike the Fock branch the curves are not symmetric in y_m."""

    gamma: float
    y_m: float
    s: float

    def __post_init__(self) -> None:
        CubicPhaseResource(self.gamma, self.s)  # range validation
        if self.y_m < 0:
            raise ValueError("cubic gate outcomes use the y_m >= 0 convention")

    @property
    def resource(self) -> CubicPhaseResource:
        return CubicPhaseResource(self.gamma, self.s)

    def copy_spacing(self) -> float:
        """Semiclassical momentum displacement of each copy,
        sqrt(y_m / (3 gamma)), for a centered vacuum input."""
        if self.gamma == 0.0:
            return math.nan
        return math.sqrt(self.y_m / (3.0 * self.gamma))


def cubic_collapse(psi_in: WaveFunction, cfg: CubicGateConfig) -> gate.CollapseResult:
    return gate.collapse(psi_in, cfg.resource, cfg.y_m)


def squeezing_db(s: float) -> float:
    """Momentum squeezing of the ancilla in dB; s is an amplitude factor."""
    return -20.0 * math.log10(s)


@dataclass
class SqueezingScan:
    """Probability density and cat infidelity versus the squeezing factor at
    fixed (gamma, y_m)."""

    gamma: float
    y_m: float
    s: np.ndarray
    probability: np.ndarray
    infidelity: np.ndarray

    @property
    def inverse_s(self) -> np.ndarray:
        return 1.0 / self.s


def squeezing_scan(
    gamma: float,
    y_m: float,
    s_values,
    grid: Grid | None = None,
    reference_n: int = 5,
) -> SqueezingScan:
    """Scan the squeezing factor at fixed (gamma, y_m), recording P(y_m) and
    the infidelity against the odd/even cat produced by the Fock gate with
    ``reference_n`` photons at y_m = 0."""
    grid = grid or default_grid()
    psi_in = make_vacuum(grid)
    reference = reference_cat(reference_n, 0.0, grid)
    s_values = np.asarray(s_values, dtype=np.float64)
    probability = np.empty_like(s_values)
    infidelity = np.empty_like(s_values)
    for i, s in enumerate(s_values):
        result = cubic_collapse(psi_in, CubicGateConfig(gamma, y_m, float(s)))
        probability[i] = result.norm_N
        infidelity[i] = 1.0 - fidelity(result.psi_out, reference)
    return SqueezingScan(gamma=gamma, y_m=y_m, s=s_values,
                         probability=probability, infidelity=infidelity)
