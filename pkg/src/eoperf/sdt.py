"""Gaussian signal-detection relations.

The detector model: noise-only amplitudes follow N(0, 1), signal-plus-noise
amplitudes follow N(k, 1), where k is the signal-to-rms-noise ratio. A
threshold T on the amplitude axis fixes the false-alarm probability (noise
mass above T) and the detection probability (signal-plus-noise mass above T):

    T  = Phi^-1(1 - pfa)
    pd = 1 - Phi(T - k)

with Phi the standard normal CDF. Everything here is a pure function of its
arguments; all four quantities are tied together by :class:`SdtPoint`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, NegativeSnrWarning

__all__ = [
    "SdtPoint",
    "normal_cdf",
    "normal_quantile",
    "pd_from_snr",
    "snr_required",
    "threshold_from_pfa",
]

_SQRT2 = math.sqrt(2.0)
_SQRT_TAU = math.sqrt(2.0 * math.pi)

# Acklam's rational approximation to the standard normal quantile. Raw
# accuracy is ~1.15e-9 relative; one Halley step against normal_cdf brings it
# to full double precision, a second is insurance.
_ACKLAM_A = (
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00,
)
_ACKLAM_B = (
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01,
)
_ACKLAM_C = (
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00,
)
_ACKLAM_D = (
    7.784695709041462e-03, 3.224671290700398e-01,
    2.445134137142996e+00, 3.754408661907416e+00,
)
_ACKLAM_SPLIT = 0.02425


def _require_probability(p: float, name: str) -> float:
    p = float(p)
    if not math.isfinite(p) or not 0.0 < p < 1.0:
        raise DomainError(f"{name} must lie strictly inside (0, 1), got {p!r}")
    return p


def normal_cdf(x: float) -> float:
    """Standard normal CDF Phi(x), accurate to well below 1e-12 absolute."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"normal_cdf requires a finite argument, got {x!r}")
    return 0.5 * math.erfc(-x / _SQRT2)


def _normal_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / _SQRT_TAU


def _acklam_quantile(p: float) -> float:
    if p < _ACKLAM_SPLIT:
        q = math.sqrt(-2.0 * math.log(p))
        c, d = _ACKLAM_C, _ACKLAM_D
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / (
            (((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0
        )
    if p > 1.0 - _ACKLAM_SPLIT:
        return -_acklam_quantile(1.0 - p)
    q = p - 0.5
    r = q * q
    a, b = _ACKLAM_A, _ACKLAM_B
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q / (
        ((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0
    )


def normal_quantile(p: float) -> float:
    """Inverse of :func:`normal_cdf` on (0, 1).

    Rejects p outside the open interval instead of returning infinities.
    """
    p = _require_probability(p, "p")
    x = _acklam_quantile(p)
    for _ in range(2):
        density = _normal_pdf(x)
        if density <= 0.0 or not math.isfinite(density):
            break
        err = (normal_cdf(x) - p) / density
        # Halley step; the curvature term is x for the normal density.
        x -= err / (1.0 + x * err / 2.0)
    return x


def threshold_from_pfa(pfa: float) -> float:
    """Decision level T whose noise-only upper tail mass equals ``pfa``.

    Computed as -quantile(pfa), which equals quantile(1 - pfa) exactly by
    symmetry but keeps full precision for very small false-alarm rates.
    """
    pfa = _require_probability(pfa, "pfa")
    return -normal_quantile(pfa) + 0.0


def pd_from_snr(snr: float, pfa: float) -> float:
    """Detection probability of an ideal amplitude-threshold device.

    ``snr`` is the separation k between the noise-only and signal-plus-noise
    distributions in noise standard deviations. At snr = 0 the two
    distributions coincide and the result equals ``pfa``; it grows strictly
    with both arguments. Negative snr is rejected: the upstream scene models
    produce snr >= 0 by construction.
    """
    snr = float(snr)
    if not math.isfinite(snr) or snr < 0.0:
        raise DomainError(f"snr must be finite and >= 0, got {snr!r}")
    t = threshold_from_pfa(pfa)
    return 0.5 * math.erfc((t - snr) / _SQRT2)


def snr_required(pd: float, pfa: float) -> float:
    """Separation k needed to reach ``pd`` at false-alarm rate ``pfa``.

    Exact inverse of :func:`pd_from_snr` in its valid range. The map is
    total: pd < pfa yields a negative value, which is returned but flagged
    with :class:`NegativeSnrWarning` because no physical scene produces it.
    """
    pd = _require_probability(pd, "pd")
    pfa = _require_probability(pfa, "pfa")
    k = normal_quantile(pd) - normal_quantile(pfa)
    if k < 0.0:
        warnings.warn(
            f"required snr is negative ({k:.6g}): pd={pd:.6g} lies below pfa={pfa:.6g}",
            NegativeSnrWarning,
            stacklevel=2,
        )
    return k


@dataclass(frozen=True, slots=True)
class SdtPoint:
    """One consistent (snr, pfa, pd, threshold) operating point."""

    snr: float
    pfa: float
    pd: float
    threshold: float

    def __post_init__(self) -> None:
        _require_probability(self.pfa, "pfa")
        _require_probability(self.pd, "pd")
        expected_t = threshold_from_pfa(self.pfa)
        if not math.isclose(self.threshold, expected_t, rel_tol=0.0, abs_tol=1e-12):
            raise DomainError(
                f"threshold {self.threshold!r} inconsistent with pfa {self.pfa!r} "
                f"(expected {expected_t!r})"
            )
        if self.snr >= 0.0 and self.pd < self.pfa - 1e-12:
            raise DomainError("pd below pfa with nonnegative snr is not a valid operating point")

    @classmethod
    def from_snr(cls, snr: float, pfa: float) -> "SdtPoint":
        """Operating point of a device with known snr and false-alarm rate."""
        pd = pd_from_snr(snr, pfa)
        return cls(snr=float(snr), pfa=float(pfa), pd=pd, threshold=threshold_from_pfa(pfa))

    @classmethod
    def from_rates(cls, pd: float, pfa: float) -> "SdtPoint":
        """Operating point reconstructed from the two observable rates."""
        snr = snr_required(pd, pfa)
        return cls(snr=snr, pfa=float(pfa), pd=float(pd), threshold=threshold_from_pfa(pfa))
