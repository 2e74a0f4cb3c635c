"""Thermal-imager recognition chain.

A target is recognised when the imager resolves enough spatial cycles across
its critical dimension. The inherent target-background temperature
difference decays exponentially along the path; the imager's minimum
resolvable temperature difference grows exponentially with spatial
frequency, MRTD(f) = a * exp(b * f). Inverting the MRTD curve at the
apparent temperature difference gives the highest resolvable frequency,
which times the target's angular subtense (height in m over range in km,
i.e. milliradians) gives the resolvable cycle count N. The cycle count maps
to a recognition probability through the standard transform

    P = (N / N50)^E / (1 + (N / N50)^E),   E = 2.7 + 0.7 * (N / N50),

where N50 is the cycle count for a 50% outcome.

Spatial frequencies are in cycles/mrad, temperature differences in kelvin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .sweep import SweepResult, SweepSample, crossing_range, range_grid

__all__ = [
    "MrtdCurve",
    "ThermalScenario",
    "ThermalState",
    "apparent_delta_t",
    "max_resolvable_frequency",
    "mrtd",
    "recognition_range",
    "resolvable_cycles",
    "thermal_state",
    "thermal_sweep",
    "ttpf",
]


def _require_positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return value


def _require_nonnegative(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0:
        raise DomainError(f"{name} must be finite and >= 0, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class MrtdCurve:
    """Exponential minimum-resolvable-temperature-difference model a*exp(b*f)."""

    a: float
    b: float

    def __post_init__(self) -> None:
        _require_positive(self.a, "a")
        _require_positive(self.b, "b")


@dataclass(frozen=True, slots=True)
class ThermalScenario:
    """Target, imager and atmosphere parameters for the recognition chain."""

    delta_t_inherent: float
    target_height: float
    mrtd: MrtdCurve
    n50: float
    attenuation: float

    def __post_init__(self) -> None:
        _require_positive(self.delta_t_inherent, "delta_t_inherent")
        _require_positive(self.target_height, "target_height")
        _require_positive(self.n50, "n50")
        _require_positive(self.attenuation, "attenuation")


@dataclass(frozen=True, slots=True)
class ThermalState:
    """Intermediate quantities of the recognition chain at one range."""

    delta_t_apparent: float
    critical_subtense: float
    max_frequency: float
    cycles: float
    p_recognition: float


def apparent_delta_t(delta_t_inherent: float, attenuation: float, range_km: float) -> float:
    """Inherent temperature difference after exponential path extinction."""
    delta_t_inherent = _require_positive(delta_t_inherent, "delta_t_inherent")
    attenuation = _require_nonnegative(attenuation, "attenuation")
    range_km = _require_nonnegative(range_km, "range_km")
    return delta_t_inherent * math.exp(-attenuation * range_km)


def mrtd(curve: MrtdCurve, sf: float) -> float:
    """Smallest resolvable temperature difference at spatial frequency ``sf``."""
    sf = _require_nonnegative(sf, "sf")
    return curve.a * math.exp(curve.b * sf)


def max_resolvable_frequency(curve: MrtdCurve, delta_t_apparent: float) -> float:
    """Highest spatial frequency resolvable with ``delta_t_apparent`` kelvin.

    Inverse of :func:`mrtd`. Below the curve floor (delta_t_apparent <= a)
    not even the coarsest bar pattern is resolvable and the result clamps
    to 0.
    """
    delta_t_apparent = _require_positive(delta_t_apparent, "delta_t_apparent")
    if delta_t_apparent <= curve.a:
        return 0.0
    return math.log(delta_t_apparent / curve.a) / curve.b


def resolvable_cycles(f_x: float, target_height: float, range_km: float) -> float:
    """Cycles resolvable across the target: frequency times subtense in mrad."""
    f_x = _require_nonnegative(f_x, "f_x")
    target_height = _require_positive(target_height, "target_height")
    range_km = _require_positive(range_km, "range_km")
    return f_x * (target_height / range_km)


def ttpf(n: float, n50: float) -> float:
    """Target transform probability: cycle count to recognition probability.

    Depends on n only through the ratio n / n50; exactly 0.5 at n = n50,
    0 at n = 0, approaching 1 as n grows.
    """
    n = _require_nonnegative(n, "n")
    n50 = _require_positive(n50, "n50")
    if n == 0.0:
        return 0.0
    x = n / n50
    exponent = 2.7 + 0.7 * x
    powered = x**exponent
    return powered / (1.0 + powered)


def thermal_state(scenario: ThermalScenario, range_km: float) -> ThermalState:
    """Full recognition-chain state at the given range."""
    range_km = _require_positive(range_km, "range_km")
    dt = apparent_delta_t(scenario.delta_t_inherent, scenario.attenuation, range_km)
    f_x = max_resolvable_frequency(scenario.mrtd, dt)
    subtense_mrad = scenario.target_height / range_km
    n = resolvable_cycles(f_x, scenario.target_height, range_km)
    return ThermalState(
        delta_t_apparent=dt,
        critical_subtense=subtense_mrad,
        max_frequency=f_x,
        cycles=n,
        p_recognition=ttpf(n, scenario.n50),
    )


def thermal_sweep(
    scenario: ThermalScenario, r_start: float, r_end: float, r_step: float
) -> SweepResult:
    """Evaluate the chain over an inclusive range grid."""
    samples = []
    for r in range_grid(r_start, r_end, r_step):
        state = thermal_state(scenario, r)
        samples.append(SweepSample(range_km=r, state=state, probability=state.p_recognition))
    return SweepResult(samples=tuple(samples))


def recognition_range(scenario: ThermalScenario, p_target: float) -> float | None:
    """Range at which recognition probability falls to ``p_target``.

    Bisection over the 1 m .. 100 km bracket, resolved to 0.1 m. Returns
    None when the probability at 1 m is already below the target (or, for
    pathological scenarios, still above it at 100 km).
    """
    return crossing_range(lambda r: thermal_state(scenario, r).p_recognition, p_target)
