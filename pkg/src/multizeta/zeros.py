"""Real-zero census of zeta_r: bracketing, refinement, counting.

Zero taxonomy on the real line:

* TRIVIAL zeros at s = -2n (every factor zeta(-2nj) vanishes); exact.
* ITZ ("inter-trivial"): zeros strictly between consecutive trivial zeros
  -2n and -2(n-1); there are exactly r-1 of them for n >= 2, and the same
  count is observed for n = 1.
* IAZ ("inter-asymptotic"): zeros between consecutive asymptotes 1/k and
  1/(k-1) inside (0, 1); the observed count is floor(r/k) per interval.

Detection is sign-change bracketing on an adaptive grid (denser near the
interval ends, where poles and trivial zeros compress the oscillations)
followed by bisection.  Even-order zeros produce no sign change and would be
missed; all zeros found at these scales are simple, and a count mismatch
surfaces in the ConjectureReport rather than crashing.

The total IAZ count, assuming one zero per unit of pole order, is

    sum_{k=2}^{r} floor(r/k) = sum_{l<=r} d(l) - r
                             = r log r - 2(1-gamma) r + O(sqrt(r)),

with d the divisor-count function and gamma Euler's constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple

import numpy as np

from .errors import DomainError, NoConvergenceError, PoleInIntervalError
from .profiles import eval_exact, eval_profile
from .special import ZetaParams

EULER_GAMMA = 0.5772156649

RESIDUAL_REL = 1e-9        # residual target relative to bracket-edge scale
BRACKET_WIDTH = 1e-12
DENSE_FRACTION = 0.10      # outer fraction of the interval sampled 4x denser
DEFAULT_GRID = 512


@dataclass(frozen=True)
class ZeroRecord:
    """One certified real zero of zeta_r."""

    r: int
    kind: Literal["IAZ", "ITZ", "TRIVIAL"]
    interval: tuple[float, float]
    location: float
    residual: float
    bracket_width: float


@dataclass(frozen=True)
class ConjectureReport:
    """Observed versus expected zero counts for one r.

    ``iaz_counts`` maps k to the count found on (1/k, 1/(k-1)); the expected
    count is floor(r/k).  ``itz_counts`` maps n to the count found on
    (-2n, -2(n-1)); the expected count is r-1.  Only the parts that were
    actually enumerated are present.
    """

    r: int
    iaz_counts: dict[int, int] | None = None
    expected_iaz: dict[int, int] | None = None
    itz_counts: dict[int, int] | None = None
    expected_itz: int | None = None

    @property
    def all_match(self) -> bool:
        ok = True
        if self.iaz_counts is not None:
            ok &= self.iaz_counts == self.expected_iaz
        if self.itz_counts is not None:
            ok &= all(c == self.expected_itz for c in self.itz_counts.values())
        return ok


def _sample_points(lo: float, hi: float, grid: int) -> np.ndarray:
    """Grid with 4x densification in the outer DENSE_FRACTION of each end."""
    span = hi - lo
    h = span / grid
    cut = DENSE_FRACTION * span
    left = np.arange(lo, lo + cut, h / 4)
    mid = np.arange(lo + cut, hi - cut, h)
    right = np.arange(hi - cut, hi, h / 4)
    pts = np.concatenate([left, mid, right, [hi]])
    return np.unique(pts)


def _bisect(f: Callable[[float], float], a: float, b: float,
            fa: float, fb: float, scale: float) -> tuple[float, float, float]:
    """Refine a sign-change bracket; returns (location, residual, width)."""
    target = RESIDUAL_REL * scale
    mid, fmid = 0.5 * (a + b), math.nan
    for _ in range(200):
        mid = 0.5 * (a + b)
        fmid = f(mid)
        if fmid == 0.0:
            return mid, 0.0, b - a
        if (fmid < 0.0) == (fa < 0.0):
            a, fa = mid, fmid
        else:
            b, fb = mid, fmid
        if b - a <= BRACKET_WIDTH and abs(fmid) <= target:
            return 0.5 * (a + b), abs(fmid), b - a
    raise NoConvergenceError(
        f"bisection stalled on [{a}, {b}]: residual {abs(fmid)} > {target}")


def find_zeros_in_interval(r: int, lo: float, hi: float,
                           grid: int = DEFAULT_GRID,
                           params: ZetaParams | None = None) -> list[ZeroRecord]:
    """All sign-change zeros of zeta_r on [lo, hi], sorted by location.

    [lo, hi] must not contain a pole of zeta_r in its interior; margins that
    exclude the poles are the caller's responsibility.
    """
    if grid < 16:
        raise DomainError("grid must be >= 16")
    if not lo < hi:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    for k in range(1, r + 1):
        if lo < 1.0 / k < hi:
            raise PoleInIntervalError(
                f"pole of zeta_{r} at 1/{k} lies inside [{lo}, {hi}]")
    kind = "ITZ" if hi <= 0.0 else "IAZ"

    def f(s: float) -> float:
        return eval_profile(s, r, params).value(r)

    pts = _sample_points(lo, hi, grid)
    vals = np.array([f(s) for s in pts])
    out = []
    neg = vals < 0.0
    for i in np.nonzero(neg[:-1] != neg[1:])[0]:
        a, b = float(pts[i]), float(pts[i + 1])
        fa, fb = float(vals[i]), float(vals[i + 1])
        scale = max(abs(fa), abs(fb))
        loc, res, width = _bisect(f, a, b, fa, fb, scale)
        out.append(ZeroRecord(r=r, kind=kind, interval=(a, b), location=loc,
                              residual=res, bracket_width=width))
    out.sort(key=lambda z: z.location)
    return out


def enumerate_iaz(r: int, params: ZetaParams | None = None,
                  grid: int = DEFAULT_GRID,
                  ) -> tuple[list[ZeroRecord], ConjectureReport]:
    """Census of the zeros of zeta_r on (0, 1), one interval per asymptote pair.

    Interval k covers (1/k + d_k, 1/(k-1) - d_k) with pole margin
    d_k = 1e-4/k, for k = r down to 2.
    """
    if not 2 <= r <= 12:
        raise DomainError("IAZ census certified for 2 <= r <= 12")
    records = []
    counts = {}
    for k in range(r, 1, -1):
        delta = 1e-4 / k
        lo = 1.0 / k + delta
        hi = 1.0 / (k - 1) - delta
        found = find_zeros_in_interval(r, lo, hi, grid, params)
        counts[k] = len(found)
        records.extend(found)
    records.sort(key=lambda z: z.location)
    report = ConjectureReport(
        r=r, iaz_counts=counts, expected_iaz={k: r // k for k in counts})
    return records, report


def enumerate_itz(r: int, n_max: int, params: ZetaParams | None = None,
                  grid: int = DEFAULT_GRID,
                  ) -> tuple[list[ZeroRecord], ConjectureReport]:
    """Census on (-2n, -2(n-1)) for n = 1..n_max, plus TRIVIAL records at -2n.

    Trivial zeros are certified exactly through the rational path, not by
    floating evaluation.
    """
    if not 2 <= r <= 8:
        raise DomainError("ITZ census certified for 2 <= r <= 8")
    if 2 * n_max > 60:
        raise DomainError("2*n_max must stay within the float-path domain")
    eps = 1e-4
    records = []
    counts = {}
    for n in range(1, n_max + 1):
        lo = -2.0 * n + eps
        hi = -2.0 * (n - 1) - eps
        found = find_zeros_in_interval(r, lo, hi, grid, params)
        counts[n] = len(found)
        records.extend(found)
        if eval_exact(2 * n, r)[r] != 0:
            raise AssertionError(f"zeta_{r}(-{2*n}) expected to vanish")
        records.append(ZeroRecord(
            r=r, kind="TRIVIAL", interval=(-2.0 * n, -2.0 * n),
            location=-2.0 * n, residual=0.0, bracket_width=0.0))
    records.sort(key=lambda z: z.location)
    report = ConjectureReport(r=r, itz_counts=counts, expected_itz=r - 1)
    return records, report


class IazCount(NamedTuple):
    sum: int            # sum_{k=2}^{r} floor(r/k)
    divisor_sum: int    # sum_{l<=r} d(l) - r, via a divisor sieve
    asymptotic: float   # r log r - 2(1-gamma) r


def divisor_sum_table(r_max: int) -> np.ndarray:
    """D[m] = sum_{l<=m} d(l) for m = 0..r_max, by sieving multiples."""
    d = np.zeros(r_max + 1, dtype=np.int64)
    for k in range(1, r_max + 1):
        d[k::k] += 1
    return np.cumsum(d)


def iaz_count_formula(r: int) -> IazCount:
    """Conjectured total IAZ count of zeta_r, computed two independent ways,
    with the asymptotic r log r - 2(1-gamma) r alongside."""
    if r < 2:
        raise DomainError("r must be >= 2")
    direct = sum(r // k for k in range(2, r + 1))
    dsum = int(divisor_sum_table(r)[r]) - r
    asym = r * math.log(r) - 2.0 * (1.0 - EULER_GAMMA) * r
    return IazCount(sum=direct, divisor_sum=dsum, asymptotic=asym)


def extremum_scan(r: int, lo: float, hi: float,
                  params: ZetaParams | None = None,
                  grid: int = DEFAULT_GRID,
                  ) -> list[tuple[float, float, Literal["min", "max"]]]:
    """Interior extrema of zeta_r on a pole-free open interval.

    Sign changes of a central-difference derivative (step 1e-6) locate the
    brackets; golden-section refines each to 1e-8 in location.
    """
    for k in range(1, r + 1):
        if lo <= 1.0 / k <= hi:
            raise PoleInIntervalError(
                f"pole of zeta_{r} at 1/{k} inside [{lo}, {hi}]")

    def f(s: float) -> float:
        return eval_profile(s, r, params).value(r)

    h = 1e-6

    def deriv(s: float) -> float:
        return (f(s + h) - f(s - h)) / (2.0 * h)

    pts = _sample_points(lo + h, hi - h, grid)
    dv = np.array([deriv(s) for s in pts])
    out = []
    neg = dv < 0.0
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    for i in np.nonzero(neg[:-1] != neg[1:])[0]:
        a, b = float(pts[i]), float(pts[i + 1])
        kind = "max" if dv[i] > 0 else "min"
        sgn = 1.0 if kind == "max" else -1.0
        c = b - (b - a) * invphi
        d = a + (b - a) * invphi
        fc, fd = sgn * f(c), sgn * f(d)
        while b - a > 1e-8:
            if fc > fd:
                b, d, fd = d, c, fc
                c = b - (b - a) * invphi
                fc = sgn * f(c)
            else:
                a, c, fc = c, d, fd
                d = a + (b - a) * invphi
                fd = sgn * f(d)
        loc = 0.5 * (a + b)
        out.append((loc, f(loc), kind))
    out.sort(key=lambda t: t[0])
    return out
