"""Numerical verification of the boundary inequalities behind the ITZ count.

The count of zeros between consecutive trivial zeros is transferred from
zeta(r*s) to zeta_r(s) by Rouche's theorem on a family of rectangles around
each negative interval: for positive integers a, b and k > 0,

    R_k(a+b): Re s in [-2-(2k+1)/(a+b), -2-(2k-1)/(a+b)],
              Im s in [-1/(a+b), 1/(a+b)],

and R_0(a+b) spans Re s in [-2-1/(a+b), -2-eps] (shrunk by a small eps > 0).

On the boundaries three inequalities hold, checked here by dense sampling:

  1. |sin(pi(a+b)s/2)| / (|sin(pi a s/2)||sin(pi b s/2)|) > 2/(a+b);
  2. |Gamma(1-(a+b)s)/(Gamma(1-as)Gamma(1-bs))|
         * |zeta(1-(a+b)s)/(zeta(1-as)zeta(1-bs))| > (a+b)^2/(2 pi);
  3. |zeta(rs)| > r |zeta((r-j)s)| |zeta(js)| for 0 < j < r (via 1 x 2 and
     the functional equation), hence |zeta_r(s)| < |zeta(rs)| and

        |sum_{j=1}^{r-1} (-1)^(j-1) zeta_{r-j}(s) zeta(js)| < |zeta(rs)|,

which is the Rouche hypothesis.  Sampling cannot prove the inequalities --
the module is a falsification harness; margins and their stability under
sample doubling make regressions detectable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .profiles import eval_profile
from .special import (DEFAULT_PARAMS, ZetaParams, gamma, loggamma,
                      riemann_zeta, sinpi_complex)

_TINY = 1e-280


@dataclass(frozen=True)
class Rectangle:
    """One R_k(a+b) box; corners derive from (a, b, k, epsilon)."""

    a: int
    b: int
    k: int
    epsilon: float = 0.0

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError("a and b must be positive integers")
        if self.k < 0:
            raise DomainError("k must be >= 0")
        if self.k > 0 and self.epsilon != 0.0:
            raise DomainError("epsilon is only meaningful for k = 0")
        if not 0.0 <= self.epsilon <= 1.0 / (2 * (self.a + self.b)):
            raise DomainError("epsilon outside [0, 1/(2(a+b))]")

    @property
    def order(self) -> int:
        return self.a + self.b

    @property
    def re_lo(self) -> float:
        if self.k > 0:
            return -2.0 - (2 * self.k + 1) / self.order
        return -2.0 - 1.0 / self.order

    @property
    def re_hi(self) -> float:
        if self.k > 0:
            return -2.0 - (2 * self.k - 1) / self.order
        return -2.0 - self.epsilon

    @property
    def im_hi(self) -> float:
        return 1.0 / self.order

    @property
    def im_lo(self) -> float:
        return -1.0 / self.order


@dataclass
class BoundaryCheckReport:
    """Outcome of one boundary sweep: per-inequality minimum margins."""

    rectangle: Rectangle
    samples: int
    margins: dict[str, float] = field(default_factory=dict)
    worst_points: dict[str, complex] = field(default_factory=dict)
    overflow_fallbacks: int = 0

    @property
    def min_margin(self) -> float:
        return min(self.margins.values())

    @property
    def worst_point(self) -> complex:
        name = min(self.margins, key=self.margins.get)
        return self.worst_points[name]

    @property
    def all_pass(self) -> bool:
        return all(m > 0.0 for m in self.margins.values())

    def _note(self, name: str, margin: float, point: complex) -> None:
        if margin < self.margins.get(name, math.inf):
            self.margins[name] = margin
            self.worst_points[name] = point


def sample_boundary(rect: Rectangle, per_side: int) -> list[complex]:
    """4*per_side uniformly spaced boundary points, corners included once.

    Deterministic order: counterclockwise from the bottom-left corner.
    """
    if per_side < 8:
        raise DomainError("per_side must be >= 8")
    x0, x1 = rect.re_lo, rect.re_hi
    y0, y1 = rect.im_lo, rect.im_hi
    pts = []
    for i in range(per_side):
        t = i / per_side
        pts.append(complex(x0 + t * (x1 - x0), y0))
    for i in range(per_side):
        t = i / per_side
        pts.append(complex(x1, y0 + t * (y1 - y0)))
    for i in range(per_side):
        t = i / per_side
        pts.append(complex(x1 - t * (x1 - x0), y1))
    for i in range(per_side):
        t = i / per_side
        pts.append(complex(x0, y1 - t * (y1 - y0)))
    return pts


def check_lemma1(rect: Rectangle, per_side: int) -> BoundaryCheckReport:
    """Sine-quotient inequality; pure trig, independent of ZetaParams.

    A vanishing denominator (the t = 0 point of a side that meets the real
    axis at an even integer multiple) means the quotient is +infinity, which
    passes by convention.
    """
    a, b = rect.a, rect.b
    pts = sample_boundary(rect, per_side)
    report = BoundaryCheckReport(rectangle=rect, samples=len(pts))
    bound = 2.0 / (a + b)
    for s in pts:
        num = abs(sinpi_complex((a + b) * s / 2))
        den = abs(sinpi_complex(a * s / 2)) * abs(sinpi_complex(b * s / 2))
        lhs = math.inf if den < _TINY else num / den
        report._note("sine_quotient", lhs - bound, s)
    return report


def _gamma_ratio_abs(a: int, b: int, s: complex) -> tuple[float, bool]:
    """|Gamma(1-(a+b)s) / (Gamma(1-as) Gamma(1-bs))|; True if log fallback used."""
    try:
        g_top = gamma(1 - (a + b) * s)
        g_a = gamma(1 - a * s)
        g_b = gamma(1 - b * s)
        val = abs(g_top) / (abs(g_a) * abs(g_b))
        if math.isfinite(val) and val != 0.0:
            return val, False
    except OverflowError:
        pass
    lg = (loggamma(1 - (a + b) * s).real - loggamma(1 - a * s).real
          - loggamma(1 - b * s).real)
    return math.exp(lg), True


def check_lemma2(rect: Rectangle, per_side: int,
                 params: ZetaParams | None = None) -> BoundaryCheckReport:
    """Gamma x zeta ratio inequality on the boundary (and interior-valid)."""
    p = params or DEFAULT_PARAMS
    a, b = rect.a, rect.b
    pts = sample_boundary(rect, per_side)
    report = BoundaryCheckReport(rectangle=rect, samples=len(pts))
    bound = (a + b) ** 2 / (2.0 * math.pi)
    for s in pts:
        gratio, fellback = _gamma_ratio_abs(a, b, s)
        if fellback:
            report.overflow_fallbacks += 1
        z_top = abs(riemann_zeta(1 - (a + b) * s, p).value)
        z_a = abs(riemann_zeta(1 - a * s, p).value)
        z_b = abs(riemann_zeta(1 - b * s, p).value)
        lhs = gratio * z_top / (z_a * z_b)
        report._note("gamma_zeta_ratio", lhs - bound, s)
    return report


def check_lemma3_and_rouche(r: int, k: int, per_side: int,
                            params: ZetaParams | None = None,
                            epsilon: float = 1e-3) -> BoundaryCheckReport:
    """Boundary sweep of R_k(r) checking three inequalities at once:

    * ``zeta_ratio``: |zeta(rs)| - r |zeta((r-j)s)||zeta(js)| over all 0<j<r;
    * ``dominance``:  |zeta(rs)| - |zeta_r(s)|;
    * ``rouche_sum``: |zeta(rs)| - |sum_{j<r} (-1)^(j-1) zeta_{r-j}(s) zeta(js)|.

    A sample landing within 1e-9 of a zero of zeta(rs) is re-jittered by half
    a boundary step (no such point should exist on these boundaries).
    """
    if not 2 <= r <= 6:
        raise DomainError("rouche sweep certified for 2 <= r <= 6")
    if k > 10:
        raise DomainError("k must be <= 10")
    p = params or DEFAULT_PARAMS
    rect = Rectangle(a=1, b=r - 1, k=k, epsilon=epsilon if k == 0 else 0.0)
    pts = sample_boundary(rect, per_side)
    report = BoundaryCheckReport(rectangle=rect, samples=len(pts))
    n = len(pts)
    for idx, s in enumerate(pts):
        zs = [riemann_zeta(j * s, p).value for j in range(1, r + 1)]
        if abs(zs[r - 1]) < 1e-9:
            s = s + 0.5 * (pts[(idx + 1) % n] - s)
            zs = [riemann_zeta(j * s, p).value for j in range(1, r + 1)]
        z_rs = abs(zs[r - 1])
        for j in range(1, r):
            report._note("zeta_ratio",
                         z_rs - r * abs(zs[r - j - 1]) * abs(zs[j - 1]), s)
        prof = eval_profile(s, r, p)
        report._note("dominance", z_rs - abs(prof.value(r)), s)
        acc = 0.0 + 0.0j
        sign = 1.0
        for j in range(1, r):
            acc += sign * prof.value(r - j) * zs[j - 1]
            sign = -sign
        report._note("rouche_sum", z_rs - abs(acc), s)
    return report
