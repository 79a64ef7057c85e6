"""Pole structure and growth regimes of zeta_r.

On (0, 1] the function zeta_r(s) has exactly r poles, at s = 1/k for
k = 1..r, of order floor(r/k), with leading behavior

    zeta_r(s) ~ C_r(k) * (k*s - 1)^(-floor(r/k))      (s -> 1/k),

where sign C_r(k) = (-1)^(r + floor(r/k)).  The leading coefficients have
closed forms: writing r = k*q + l with 0 <= l < k,

    C_r(1)      = 1/r!
    C_r(r)      = (-1)^(r-1)/r
    C_{kq}(k)   = (-1)^((k-1)q) / (k^q q!)
    C_{kq+l}(k) = (-1)^((k-1)q) / (k^q q!) * zeta_l(1/k)   (1 <= l < k),

and an independent recursion (used here as the verification path):

    C_r(k) = (1/r) { sum*_j (-1)^(j-1) zeta(j/k) C_{r-j}(k)
                     + (-1)^(k-1) D_{r-k}(k) },

with D_m(k) = C_m(k) if k <= r/2 else zeta_m(1/k), and sum* over j <= r-k,
j != k, floor((r-j)/k) = floor(r/k).

Also provided: the large-s envelope zeta_r(s) ~ (r!)^-s with its explicit
product upper bound, and the leading-term models for zeta_r(-k) as odd
k -> infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .profiles import eval_profile
from .special import (DEFAULT_PARAMS, ZetaParams, log_abs_fraction,
                      riemann_zeta, zeta_neg_int_exact)


@dataclass(frozen=True)
class PoleSpec:
    """One asymptote of zeta_r: location 1/k, order floor(r/k), coefficient."""

    r: int
    k: int
    location: Fraction
    order: int
    coefficient: float

    def __post_init__(self):
        expected = -1 if (self.r + self.order) % 2 else 1
        actual = -1 if self.coefficient < 0 else 1
        if actual != expected:
            raise ValueError(
                f"C_{self.r}({self.k}) = {self.coefficient} violates the "
                f"sign law (-1)^(r + order)")


class GrowthModel(Enum):
    LARGE_S_FACTORIAL = "large_s_factorial"
    NEG_ODD_R_ODD = "neg_odd_r_odd"
    NEG_ODD_R2 = "neg_odd_r2"
    NEG_ODD_R_EVEN = "neg_odd_r_even"


@dataclass(frozen=True)
class GrowthPrediction:
    model: GrowthModel
    r: int
    predicted_log_abs: float
    predicted_sign: int


def _check_rk(r: int, k: int) -> None:
    if r < 1:
        raise DomainError("r must be >= 1")
    if not 1 <= k <= r:
        raise DomainError(f"k = {k} outside [1, r] = [1, {r}]")


def coefficient_closed_form(r: int, k: int,
                            params: ZetaParams | None = None) -> float:
    """C_r(k) from the closed forms; zeta_l(1/k) is evaluated by the recursion
    (1/k < 1/l there, so the argument avoids every pole of zeta_l)."""
    _check_rk(r, k)
    if k == 1:
        return 1.0 / math.factorial(r)
    q, l = divmod(r, k)
    lead = (-1.0 if ((k - 1) * q) % 2 else 1.0) / (k ** q * math.factorial(q))
    if l == 0:
        return lead
    zl = eval_profile(1.0 / k, l, params).value(l)
    return lead * zl


def coefficient_recursive(r: int, k: int,
                          params: ZetaParams | None = None,
                          _memo: dict | None = None) -> float:
    """C_r(k) by the proof recursion; the independent second path.

    D and the starred sum are implemented literally rather than reusing the
    closed form, so the two routes only share the scalar zeta evaluator.
    """
    _check_rk(r, k)
    p = params or DEFAULT_PARAMS
    memo = _memo if _memo is not None else {}
    key = (r, k)
    if key in memo:
        return memo[key]
    if r == k:
        val = (1.0 if r % 2 else -1.0) / r
        memo[key] = val
        return val
    if 2 * k <= r:
        d_term = coefficient_recursive(r - k, k, p, memo)
    else:
        d_term = eval_profile(1.0 / k, r - k, p).value(r - k)
    total = (-1.0 if (k - 1) % 2 else 1.0) * d_term
    order = r // k
    for j in range(1, r - k + 1):
        if j == k or (r - j) // k != order:
            continue
        zjk = riemann_zeta(j / k, p).value
        cj = coefficient_recursive(r - j, k, p, memo)
        total += (LSIGN[j % 2]) * zjk * cj
    val = total / r
    memo[key] = val
    return val


LSIGN = {1: 1.0, 0: -1.0}  # (-1)^(j-1)


def pole_table(r: int, params: ZetaParams | None = None) -> list[PoleSpec]:
    """All r poles of zeta_r with orders and leading coefficients.

    The sign law is enforced at construction time.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    out = []
    for k in range(1, r + 1):
        out.append(PoleSpec(
            r=r, k=k, location=Fraction(1, k), order=r // k,
            coefficient=coefficient_closed_form(r, k, params)))
    return out


def near_pole_model(r: int, k: int, s: float,
                    params: ZetaParams | None = None) -> float:
    """Leading asymptotic model C_r(k) * (k*s - 1)^(-floor(r/k)) near s = 1/k.

    Valid in the window 0 < |s - 1/k| <= 0.1/k where the leading term
    dominates visibly; outside it lower-order terms pollute the picture.
    """
    _check_rk(r, k)
    d = s - 1.0 / k
    if d == 0.0:
        raise DomainError("s sits exactly on the pole")
    if abs(d) > 0.1 / k:
        raise DomainError(
            f"|s - 1/{k}| = {abs(d)} outside the window 0.1/{k}")
    order = r // k
    return coefficient_closed_form(r, k, params) * (k * s - 1.0) ** (-order)


def growth_prediction(r: int, *, s: float | None = None,
                      k: int | None = None) -> GrowthPrediction:
    """Leading-term prediction for zeta_r in one of two regimes.

    ``s``: large-s regime (s > 1), zeta_r(s) ~ (r!)^-s, sign +.

    ``k``: odd negative integer regime, argument -k with odd k:
      * r odd      : zeta_r(-k) ~ zeta(-rk)/r, sign (-1)^((rk+1)/2);
      * r = 2      : zeta_2(-k) = zeta(-k)^2/2 exactly, sign +;
      * r >= 4 even: zeta_r(-k) ~ zeta(-k) zeta(-(r-1)k)/(r-1),
                     sign (-1)^(r/2 - 1).

    Logs come from the exact Bernoulli rationals, so no overflow occurs even
    for huge magnitudes.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    if (s is None) == (k is None):
        raise DomainError("give exactly one of s= (large-s) or k= (neg-odd)")
    if s is not None:
        if s <= 1:
            raise DomainError("large-s regime needs s > 1")
        return GrowthPrediction(
            model=GrowthModel.LARGE_S_FACTORIAL, r=r,
            predicted_log_abs=-s * math.lgamma(r + 1), predicted_sign=1)
    if k < 1 or k % 2 == 0:
        raise DomainError("neg-odd regime needs odd k >= 1")
    if r % 2 == 1:
        val = zeta_neg_int_exact(r * k) / r
        sign = -1 if ((r * k + 1) // 2) % 2 else 1
        return GrowthPrediction(GrowthModel.NEG_ODD_R_ODD, r,
                                log_abs_fraction(val), sign)
    if r == 2:
        val = zeta_neg_int_exact(k) ** 2 / 2
        return GrowthPrediction(GrowthModel.NEG_ODD_R2, r,
                                log_abs_fraction(val), 1)
    val = zeta_neg_int_exact(k) * zeta_neg_int_exact((r - 1) * k) / (r - 1)
    sign = -1 if (r // 2 - 1) % 2 else 1
    return GrowthPrediction(GrowthModel.NEG_ODD_R_EVEN, r,
                            log_abs_fraction(val), sign)


def upper_bound_large_s(r: int, s: float) -> float:
    """Explicit product bound dominating zeta_r(s) for s > 1:

        (r!)^-s * prod_{k=2}^{r} (1 + ((k-1)/k)^s (1 + k/(s-1)))
                * (1 + r/(s-1)).

    Together with the trivial zeta_r(s) >= (r!)^-s this pins the large-s
    envelope (r!)^-s.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    if s <= 1:
        raise DomainError(f"bound needs s > 1, got {s}")
    log_lead = -s * math.lgamma(r + 1)
    prod = 1.0 + r / (s - 1.0)
    for k in range(2, r + 1):
        prod *= 1.0 + ((k - 1.0) / k) ** s * (1.0 + k / (s - 1.0))
    return math.exp(log_lead) * prod if log_lead > -700 else math.exp(
        log_lead + math.log(prod))
