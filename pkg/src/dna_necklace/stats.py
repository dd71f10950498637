"""Theoretical alternation pdfs, Gaussian fits, and parameter sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import curve_fit

from .counting import NecklaceSpec, alternation_distribution

_SIGMA_FLOOR = 1e-6


@dataclass
class DiscretePdf:
    """Probability distribution over even alternation counts.

    `provenance` is "theoretical" (exact counts normalized) or "empirical"
    (Monte Carlo frequencies).  Theoretical pdfs carry the full support
    {0, 2, ..., 2*min(n_at, n_gc)} including zero-probability entries;
    empirical ones carry only observed values.
    """

    entries: dict[int, float]
    provenance: str = "theoretical"

    def prob(self, alpha: int) -> float:
        return self.entries.get(alpha, 0.0)

    def support(self) -> list[int]:
        return sorted(self.entries)

    def total(self) -> float:
        return sum(self.entries.values())


@dataclass(frozen=True)
class GaussianFit:
    """A*exp(-(alpha - alpha0)^2 / (2 sigma^2)) fitted to a pdf.

    `amplitude` is the curve's peak value (its value at alpha0); `rmse` is
    the root-mean-square residual over the fitted support points.
    """

    alpha0: float
    sigma: float
    amplitude: float
    rmse: float


def theoretical_pdf(spec: NecklaceSpec) -> DiscretePdf:
    """P(alpha) = count(alpha) / total, one class-uniform weight per necklace.

    Probabilities come from exact integer ratios; floating point enters
    only in the final division (int/int division rounds correctly even for
    counts around 10^25).
    """
    dist = alternation_distribution(spec)
    total = sum(dist.values())
    return DiscretePdf(
        {alpha: count / total for alpha, count in dist.items()}, "theoretical"
    )


def _gaussian(x: np.ndarray, amplitude: float, alpha0: float, sigma: float):
    return amplitude * np.exp(-((x - alpha0) ** 2) / (2.0 * sigma**2))


def fit_gaussian(pdf: DiscretePdf) -> GaussianFit:
    """Least-squares Gaussian through the pdf's nonzero support points.

    Initialized from the sample moments (weighted mean and standard
    deviation, amplitude from the peak entry) and refined by damped
    least squares (Levenberg-Marquardt).  The amplitude is free, not
    constrained to normalize: the curve traces the pdf points.
    """
    points = sorted((a, p) for a, p in pdf.entries.items() if p > 0)
    if len(points) < 3:
        raise ValueError(
            f"support too small to fit: {len(points)} nonzero points, need 3"
        )
    x = np.array([a for a, _ in points], dtype=float)
    y = np.array([p for _, p in points], dtype=float)
    mean0 = float((x * y).sum() / y.sum())
    sigma0 = float(np.sqrt((y * (x - mean0) ** 2).sum() / y.sum()))
    sigma0 = max(sigma0, _SIGMA_FLOOR)
    start = (float(y.max()), mean0, sigma0)
    params, _ = curve_fit(
        _gaussian, x, y, p0=start, maxfev=20000, xtol=1e-12, ftol=1e-12
    )
    amplitude, alpha0, sigma = (float(v) for v in params)
    sigma = abs(sigma)  # the model is even in sigma
    if sigma < _SIGMA_FLOOR:
        raise ValueError(f"fitted width degenerated below {_SIGMA_FLOOR}")
    rmse = float(np.sqrt(np.mean((_gaussian(x, amplitude, alpha0, sigma) - y) ** 2)))
    return GaussianFit(alpha0=alpha0, sigma=sigma, amplitude=amplitude, rmse=rmse)


@dataclass(frozen=True)
class FixedAtRow:
    """One sweep row; `fit` is None when the row failed, with the reason."""

    n_gc: int
    fit: GaussianFit | None = None
    error: str | None = None


def sweep_fixed_at(n_at: int, gc_values: Sequence[int]) -> list[FixedAtRow]:
    """Gaussian characteristics as n_gc grows at fixed n_at.

    Row failures (e.g. supports too small to fit) are recorded on the row
    and the sweep continues.
    """
    if n_at <= 0:
        raise ValueError(f"n_at must be >= 1, got {n_at}")
    if not gc_values:
        raise ValueError("gc_values must be non-empty")
    rows = []
    for n_gc in gc_values:
        try:
            fit = fit_gaussian(theoretical_pdf(NecklaceSpec(n_at, n_gc)))
            rows.append(FixedAtRow(n_gc=n_gc, fit=fit))
        except (ValueError, RuntimeError) as exc:
            rows.append(FixedAtRow(n_gc=n_gc, error=str(exc)))
    return rows


@dataclass(frozen=True)
class RatioRow:
    n: int
    n_at: int
    n_gc: int
    fit: GaussianFit | None = None
    error: str | None = None


@dataclass(frozen=True)
class RatioSweepResult:
    """Per-N fits at a fixed gc:at ratio plus the slope of alpha0 against N."""

    rows: list[RatioRow] = field(default_factory=list)
    slope: float | None = None
    intercept: float | None = None


def split_by_ratio(ratio_gc_to_at: tuple[int, int], n: int) -> tuple[int, int]:
    """(n_at, n_gc) realizing the gc:at ratio at total length n.

    Exact when (gc + at) divides n; otherwise n_gc is the half-up nearest
    integer to n*gc/(gc+at) and n_at takes the remainder.
    """
    gc_part, at_part = ratio_gc_to_at
    if gc_part <= 0 or at_part <= 0:
        raise ValueError(f"ratio parts must be >= 1, got {ratio_gc_to_at}")
    if n <= 0:
        raise ValueError(f"total length must be >= 1, got {n}")
    whole = gc_part + at_part
    n_gc = (2 * n * gc_part + whole) // (2 * whole)
    return n - n_gc, n_gc


def sweep_fixed_ratio(
    ratio_gc_to_at: tuple[int, int], n_values: Sequence[int]
) -> RatioSweepResult:
    """Gaussian characteristics as N grows at a fixed gc:at ratio.

    The slope is an ordinary least-squares fit of alpha0 against N over
    the successful rows (None if fewer than two succeed).
    """
    if not n_values:
        raise ValueError("n_values must be non-empty")
    rows = []
    for n in n_values:
        n_at, n_gc = split_by_ratio(ratio_gc_to_at, n)
        try:
            fit = fit_gaussian(theoretical_pdf(NecklaceSpec(n_at, n_gc)))
            rows.append(RatioRow(n=n, n_at=n_at, n_gc=n_gc, fit=fit))
        except (ValueError, RuntimeError) as exc:
            rows.append(RatioRow(n=n, n_at=n_at, n_gc=n_gc, error=str(exc)))
    fitted = [(row.n, row.fit.alpha0) for row in rows if row.fit is not None]
    if len(fitted) >= 2:
        slope, intercept = np.polyfit(
            [n for n, _ in fitted], [a for _, a in fitted], 1
        )
        return RatioSweepResult(rows, float(slope), float(intercept))
    return RatioSweepResult(rows)
