"""Visual-band detection chain: eye, binocular, and image intensifier.

The chain works through a photon budget. Scene illumination and diffuse
reflectances give target and background luminance (L = reflectance *
illuminance / pi), whose normalised difference is the inherent contrast. The
sight path attenuates contrast exponentially. The target subtends an angle
proportional to its characteristic linear size (square root of area) over
range. Luminance, attenuated contrast, subtense, collecting aperture,
detector efficiency and integration time then set the photon signal-to-noise
ratio, which the threshold device of :mod:`eoperf.sdt` converts into a
detection probability.

Unit conventions, fixed throughout: illuminance in lux, luminance in cd/m^2,
areas in m^2, aperture radius in mm, integration time in s, photon intensity
in photons per lumen-second, attenuation in 1/km, range in km, subtense in
arcminutes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import sdt
from .errors import DegenerateSceneError, DomainError
from .sweep import SweepResult, SweepSample, crossing_range, range_grid

__all__ = [
    "PhotometricState",
    "VisualScenario",
    "angular_subtense",
    "apparent_contrast",
    "contrast",
    "detection_range",
    "luminance",
    "visual_pd",
    "visual_snr",
    "visual_sweep",
]

# Calibration constant of the photon-budget SNR expression, applied verbatim
# for the unit conventions above.
SNR_CONSTANT = 2.66e-11

# Arcminutes per radian as used by the subtense rule (57.3 deg/rad * 60).
_ARCMIN_PER_RAD = 57.3 * 60.0


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
class VisualScenario:
    """Scene, target and sensor parameters for the visual chain.

    ``quantum_efficiency`` is the detector efficiency figure as tabulated for
    the device (for the eye, ~1/4200); it enters the SNR expression once as
    a plain factor. ``aperture_radius`` is in mm.
    """

    illumination: float
    target_area: float
    target_reflectance: float
    background_reflectance: float
    aperture_radius: float
    quantum_efficiency: float
    integration_time: float
    photon_intensity: float
    pfa: float
    attenuation: float

    def __post_init__(self) -> None:
        _require_positive(self.illumination, "illumination")
        _require_positive(self.target_area, "target_area")
        _require_positive(self.aperture_radius, "aperture_radius")
        _require_positive(self.quantum_efficiency, "quantum_efficiency")
        _require_positive(self.integration_time, "integration_time")
        _require_positive(self.photon_intensity, "photon_intensity")
        _require_positive(self.attenuation, "attenuation")
        for name in ("target_reflectance", "background_reflectance"):
            r = getattr(self, name)
            if not math.isfinite(r) or not 0.0 < r <= 1.0:
                raise DomainError(f"{name} must lie in (0, 1], got {r!r}")
        if not 0.0 < self.pfa < 1.0:
            raise DomainError(f"pfa must lie in (0, 1), got {self.pfa!r}")


@dataclass(frozen=True, slots=True)
class PhotometricState:
    """Intermediate photometric quantities at one range."""

    target_luminance: float
    background_luminance: float
    mean_luminance: float
    inherent_contrast: float
    apparent_contrast: float
    subtense: float
    snr: float


def luminance(reflectance: float, illumination: float) -> float:
    """Luminance of a diffuse surface: reflectance * illuminance / pi."""
    reflectance = float(reflectance)
    if not math.isfinite(reflectance) or not 0.0 <= reflectance <= 1.0:
        raise DomainError(f"reflectance must lie in [0, 1], got {reflectance!r}")
    illumination = _require_nonnegative(illumination, "illumination")
    return reflectance * illumination / math.pi


def contrast(l_target: float, l_background: float) -> float:
    """Normalised luminance difference (Lt - Lb) / (Lt + Lb), in [-1, 1]."""
    l_target = _require_nonnegative(l_target, "l_target")
    l_background = _require_nonnegative(l_background, "l_background")
    total = l_target + l_background
    if total == 0.0:
        raise DegenerateSceneError("target and background are both perfectly dark")
    return (l_target - l_background) / total


def apparent_contrast(c: float, attenuation: float, range_km: float) -> float:
    """Inherent contrast after exponential extinction over the sight path."""
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"contrast must be finite, got {c!r}")
    attenuation = _require_nonnegative(attenuation, "attenuation")
    range_km = _require_nonnegative(range_km, "range_km")
    return c * math.exp(-attenuation * range_km)


def angular_subtense(target_area: float, range_km: float) -> float:
    """Angle in arcminutes subtended by the target's characteristic size.

    The characteristic linear size is sqrt(area) in metres; the range is
    converted to metres.
    """
    target_area = _require_positive(target_area, "target_area")
    range_km = _require_positive(range_km, "range_km")
    return _ARCMIN_PER_RAD * math.sqrt(target_area) / (1000.0 * range_km)


def visual_snr(scenario: VisualScenario, range_km: float) -> PhotometricState:
    """Photometric state, including photon SNR, at the given range."""
    range_km = _require_positive(range_km, "range_km")
    l_t = luminance(scenario.target_reflectance, scenario.illumination)
    l_b = luminance(scenario.background_reflectance, scenario.illumination)
    l_m = 0.5 * (l_t + l_b)
    c = contrast(l_t, l_b)
    c_apparent = apparent_contrast(c, scenario.attenuation, range_km)
    subtense = angular_subtense(scenario.target_area, range_km)
    snr_sq = (
        SNR_CONSTANT
        * l_m * l_m
        * c_apparent * c_apparent
        * subtense * subtense
        * scenario.quantum_efficiency
        * scenario.photon_intensity
        * scenario.aperture_radius * scenario.aperture_radius
        * scenario.integration_time
    )
    return PhotometricState(
        target_luminance=l_t,
        background_luminance=l_b,
        mean_luminance=l_m,
        inherent_contrast=c,
        apparent_contrast=c_apparent,
        subtense=subtense,
        snr=math.sqrt(snr_sq),
    )


def visual_pd(scenario: VisualScenario, range_km: float) -> float:
    """Detection probability at the given range."""
    return sdt.pd_from_snr(visual_snr(scenario, range_km).snr, scenario.pfa)


def visual_sweep(
    scenario: VisualScenario, r_start: float, r_end: float, r_step: float
) -> SweepResult:
    """Evaluate the chain over an inclusive range grid."""
    samples = []
    for r in range_grid(r_start, r_end, r_step):
        state = visual_snr(scenario, r)
        pd = sdt.pd_from_snr(state.snr, scenario.pfa)
        samples.append(SweepSample(range_km=r, state=state, probability=pd))
    return SweepResult(samples=tuple(samples))


def detection_range(scenario: VisualScenario, p_target: float) -> float | None:
    """Range at which detection probability falls to ``p_target``.

    Bisection over the 1 m .. 100 km bracket, resolved to 0.1 m. Returns
    None when the curve never reaches the target inside the bracket.
    """
    return crossing_range(lambda r: visual_pd(scenario, r), p_target)
