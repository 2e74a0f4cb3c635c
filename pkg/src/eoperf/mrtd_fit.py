"""Least-squares calibration of the exponential MRTD curve.

The model a * exp(b * f) is linear in (ln a, b) after taking logs, so the
fit is ordinary least squares of ln(MRTD) on spatial frequency, solved in
closed form. Diagnostics (residuals, SSE, R^2) are reported in log space,
where the fit is optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, FitError
from .thermal import MrtdCurve, mrtd

__all__ = ["FitReport", "MrtdObservation", "fit_mrtd", "predict"]


@dataclass(frozen=True, slots=True)
class MrtdObservation:
    """One measured point: spatial frequency (cycles/mrad), MRTD (kelvin)."""

    sf: float
    mrtd: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.sf) or self.sf < 0.0:
            raise DomainError(f"sf must be finite and >= 0, got {self.sf!r}")
        if not math.isfinite(self.mrtd) or self.mrtd <= 0.0:
            raise DomainError(f"mrtd must be finite and > 0, got {self.mrtd!r}")


@dataclass(frozen=True, slots=True)
class FitReport:
    """Fitted curve plus log-space diagnostics, in observation order."""

    curve: MrtdCurve
    residuals_log: tuple[float, ...]
    sse_log: float
    r_squared_log: float
    predicted: tuple[float, ...]


def fit_mrtd(observations: Sequence[MrtdObservation] | Iterable[MrtdObservation]) -> FitReport:
    """Fit a * exp(b * sf) to observations by least squares on ln(MRTD).

    Needs at least 3 observations with at least 2 distinct spatial
    frequencies. Duplicate frequencies are fine. Raises :class:`FitError`
    with the specific cause otherwise.
    """
    obs = list(observations)
    if len(obs) < 3:
        raise FitError(f"need at least 3 observations, got {len(obs)}")
    sf = np.array([o.sf for o in obs], dtype=float)
    y = np.log([o.mrtd for o in obs])

    sxx = float(np.sum((sf - sf.mean()) ** 2))
    if sxx == 0.0:
        raise FitError("all observations share one spatial frequency; slope is undetermined")

    b = float(np.sum((sf - sf.mean()) * (y - y.mean())) / sxx)
    ln_a = float(y.mean() - b * sf.mean())
    curve = MrtdCurve(a=math.exp(ln_a), b=b)

    fitted_log = ln_a + b * sf
    residuals = y - fitted_log
    sse = float(np.dot(residuals, residuals))
    sst = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if sst == 0.0 else 1.0 - sse / sst
    return FitReport(
        curve=curve,
        residuals_log=tuple(float(r) for r in residuals),
        sse_log=sse,
        r_squared_log=r_squared,
        predicted=tuple(float(np.exp(v)) for v in fitted_log),
    )


def predict(report: FitReport, sf: float) -> float:
    """Evaluate the fitted curve at a spatial frequency."""
    return mrtd(report.curve, sf)
