"""Range-sweep plumbing shared by the visual and thermal chains."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

from .errors import DomainError

__all__ = ["SweepResult", "SweepSample", "crossing_range", "range_grid"]

# Bisection bracket for probability-vs-range crossings: 1 m to 100 km.
CROSSING_BRACKET_KM = (0.001, 100.0)
# Crossing is located to within 0.1 m.
CROSSING_TOL_KM = 1e-4

_GRID_EPS = 1e-9


def range_grid(r_start: float, r_end: float, r_step: float) -> list[float]:
    """Inclusive grid r_start, r_start + r_step, ... up to r_end.

    Both endpoints are included when the step divides the interval; a
    trailing partial step is dropped. Values are computed as
    ``r_start + i * r_step`` so the grid is deterministic.
    """
    if not (math.isfinite(r_start) and math.isfinite(r_end) and math.isfinite(r_step)):
        raise DomainError("range grid bounds and step must be finite")
    if r_start <= 0.0 or r_end <= r_start or r_step <= 0.0:
        raise DomainError(
            f"range grid requires 0 < start < end and step > 0, "
            f"got start={r_start!r} end={r_end!r} step={r_step!r}"
        )
    n = int(math.floor((r_end - r_start) / r_step + _GRID_EPS))
    return [r_start + i * r_step for i in range(n + 1)]


@dataclass(frozen=True, slots=True)
class SweepSample:
    """One range sample: the per-range intermediate state and the probability."""

    range_km: float
    state: Any
    probability: float


@dataclass(frozen=True, slots=True)
class SweepResult:
    """Ordered range samples produced by a sweep."""

    samples: tuple[SweepSample, ...]

    def __post_init__(self) -> None:
        if not self.samples:
            raise DomainError("a sweep must contain at least one sample")
        ranges = [s.range_km for s in self.samples]
        if any(b <= a for a, b in zip(ranges, ranges[1:])):
            raise DomainError("sweep ranges must be strictly increasing")

    def ranges(self) -> list[float]:
        return [s.range_km for s in self.samples]

    def probabilities(self) -> list[float]:
        return [s.probability for s in self.samples]


def crossing_range(
    probability_at: Callable[[float], float],
    p_target: float,
    bracket_km: tuple[float, float] = CROSSING_BRACKET_KM,
    tol_km: float = CROSSING_TOL_KM,
) -> float | None:
    """Range at which a falling probability curve crosses ``p_target``.

    ``probability_at`` must be non-increasing in range. Bisection over
    ``bracket_km`` locates the crossing to within ``tol_km``. Returns None
    when there is no crossing inside the bracket, i.e. the probability is
    already below the target at the near end or still above it at the far
    end.
    """
    if not 0.0 < p_target < 1.0:
        raise DomainError(f"p_target must lie in (0, 1), got {p_target!r}")
    lo, hi = bracket_km
    if probability_at(lo) < p_target:
        return None
    if probability_at(hi) >= p_target:
        return None
    while hi - lo > tol_km:
        mid = 0.5 * (lo + hi)
        if probability_at(mid) >= p_target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
