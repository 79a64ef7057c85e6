"""Multiple zeta-functions with identical arguments, zeta_r(s).

The workhorse identity is the infinite-variable form of Newton's identities
relating elementary symmetric functions to power sums: with x_m = m^-s,

    r * zeta_r(s) = sum_{j=1}^{r} (-1)^(j-1) zeta_{r-j}(s) * zeta(j*s),

with zeta_0 = 1.  The right-hand side only involves the Riemann zeta-function
and lower levels, so one bottom-up pass yields the whole profile
zeta_1(s), ..., zeta_r(s); the identity also provides the meromorphic
continuation wherever zeta(j*s) is defined.

Three evaluation paths are provided and cross-checked in the test suite:

* ``eval_profile``   -- float (or complex) recursion with first-order error
                        propagation;
* ``eval_exact``     -- the same recursion over exact rationals at
                        nonpositive integer arguments;
* ``eval_series_oracle`` -- the truncated defining series
                        N_r(s) = sum_{m_1<...<m_r<=M} (m_1...m_r)^-s,
                        a strict lower bound of zeta_r(s) for s > 1,
                        computed by a dynamic program in O(r*M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError
from .special import (DEFAULT_PARAMS, EvalResult, Scalar, ZetaParams,
                      riemann_zeta, zeta_neg_int_exact)

FLOAT_PATH_MIN_S = -60.0   # below this the float recursion loses all digits
IM_STRIP_LIMIT = 50.0      # |Im(j*s)| must stay within the zeta strip


@dataclass(frozen=True)
class MultiZetaProfile:
    """zeta_0(s) .. zeta_{r_max}(s) as EvalResults (zeta_0 = 1 exactly)."""

    argument: Scalar
    r_max: int
    values: tuple[EvalResult, ...]

    def __getitem__(self, r: int) -> EvalResult:
        return self.values[r]

    def value(self, r: int) -> Scalar:
        return self.values[r].value


@dataclass(frozen=True)
class ExactProfile:
    """zeta_0(-n) .. zeta_{r_max}(-n) as exact rationals."""

    n: int
    r_max: int
    values: tuple[Fraction, ...]

    def __getitem__(self, r: int) -> Fraction:
        return self.values[r]


@dataclass(frozen=True)
class SeriesTruncation:
    """Truncation (largest index M, depth r) of the defining nested series."""

    cutoff: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError("series depth r must be >= 1")
        if self.cutoff < self.r:
            raise DomainError(
                f"cutoff {self.cutoff} < depth {self.r}: empty sum")


def _check_pole_distance(s: Scalar, r_max: int, radius: float) -> None:
    for k in range(1, r_max + 1):
        if abs(s - 1.0 / k) <= radius:
            raise PoleError(
                f"argument {s} is within {radius} of the pole at 1/{k}",
                location=1.0 / k, k=k)


def eval_profile(s: Scalar, r_max: int,
                 params: ZetaParams | None = None) -> MultiZetaProfile:
    """Evaluate zeta_1(s) .. zeta_{r_max}(s) bottom-up by the recursion.

    Error estimates propagate first-order through each product and include a
    rounding allowance for the alternating sum, so cancellation-dominated
    regimes (very large s, deep negative s) are visible in ``abs_err_est``
    rather than silently wrong.
    """
    p = params or DEFAULT_PARAMS
    if r_max < 0:
        raise DomainError("r_max must be >= 0")
    if isinstance(s, complex) and s.imag != 0.0:
        if r_max >= 1 and abs(s.imag) > IM_STRIP_LIMIT / r_max:
            raise DomainError(
                f"|Im s| = {abs(s.imag)} outside supported strip "
                f"{IM_STRIP_LIMIT}/{r_max}")
    else:
        sr = s.real if isinstance(s, complex) else s
        if sr < FLOAT_PATH_MIN_S:
            raise DomainError(
                f"s = {sr} < {FLOAT_PATH_MIN_S}: float path refuses; "
                "use eval_exact for integer arguments")
    _check_pole_distance(s, r_max, p.pole_radius)

    zetas = [None]  # 1-based: zetas[j] = zeta(j*s)
    near = False
    for j in range(1, r_max + 1):
        res = riemann_zeta(j * s, p)
        near = near or res.near_pole
        zetas.append(res)

    one = complex(1.0) if isinstance(s, complex) else 1.0
    out = [EvalResult(one, 0.0)]
    for r in range(1, r_max + 1):
        acc = 0.0 * one
        err = 0.0
        mag = 0.0
        sign = 1.0
        for j in range(1, r + 1):
            lower = out[r - j]
            zj = zetas[j]
            term = lower.value * zj.value
            acc += sign * term
            err += (abs(lower.value) * zj.abs_err_est
                    + abs(zj.value) * lower.abs_err_est)
            mag += abs(term)
            sign = -sign
        err += 2.3e-16 * mag  # rounding of the alternating sum
        out.append(EvalResult(acc / r, err / r, near))
    return MultiZetaProfile(argument=s, r_max=r_max, values=tuple(out))


def eval_exact(n: int, r_max: int,
               max_bernoulli_index: int = 2000) -> ExactProfile:
    """Exact rational profile zeta_j(-n), j <= r_max, no rounding anywhere."""
    if n < 0:
        raise DomainError("n must be >= 0 (argument is s = -n)")
    if r_max < 0:
        raise DomainError("r_max must be >= 0")
    if n * r_max + 1 > max_bernoulli_index:
        raise DomainError(
            f"n*r_max = {n * r_max} needs Bernoulli index beyond "
            f"{max_bernoulli_index}")
    zetas = [None] + [zeta_neg_int_exact(j * n) for j in range(1, r_max + 1)]
    out = [Fraction(1)]
    for r in range(1, r_max + 1):
        acc = Fraction(0)
        sign = 1
        for j in range(1, r + 1):
            acc += sign * out[r - j] * zetas[j]
            sign = -sign
        out.append(acc / r)
    return ExactProfile(n=n, r_max=r_max, values=tuple(out))


def eval_series_oracle(s: float, trunc: SeriesTruncation) -> float:
    """Truncated nested series N_r(s) over indices m_1 < ... < m_r <= M.

    Dynamic program over prefix sums: with x_m = m^-s,

        e_j(m) = e_j(m-1) + e_{j-1}(m-1) * x_m,

    (e_0 = 1) which is O(r*M) instead of the r-fold nested loop.  The result
    is a strict lower bound of zeta_r(s) and converges to it as M grows,
    valid only for s > 1.
    """
    if s <= 1:
        raise DomainError(f"series oracle needs s > 1, got {s}")
    M, r = trunc.cutoff, trunc.r
    x = np.arange(1, M + 1, dtype=np.float64) ** (-float(s))
    prev = np.ones(M + 1)          # e_0(m) for m = 0..M
    for _ in range(r):
        cur = np.empty(M + 1)
        cur[0] = 0.0
        np.cumsum(prev[:-1] * x, out=cur[1:])
        prev = cur
    return float(prev[M])


def series_tail_bound(s: float, r: int, cutoff: int) -> float:
    """Upper bound for zeta_r(s) - N_r(s) from the integral tail estimate.

    The largest index exceeds M in every omitted tuple, and the remaining
    r-1 indices contribute at most zeta(s)^(r-1):

        tail <= zeta(s)^(r-1) * (M+1)^-s * (1 + (M+1)/(s-1)).
    """
    if s <= 1:
        raise DomainError(f"tail bound needs s > 1, got {s}")
    z = riemann_zeta(float(s)).value
    m1 = cutoff + 1
    return z ** (r - 1) * m1 ** (-s) * (1.0 + m1 / (s - 1.0))


def explicit_smallr(s: Scalar, r: int,
                    params: ZetaParams | None = None) -> EvalResult:
    """zeta_r(s) for r in {2, 3, 4} from the expanded closed forms.

    These use Riemann zeta values only:

        zeta_2 = (z1^2 - z2)/2
        zeta_3 = (z1^3 - 3 z1 z2 + 2 z3)/6
        zeta_4 = (z1^4 - 6 z1^2 z2 + 3 z2^2 + 8 z1 z3 - 6 z4)/24

    (z_j = zeta(j*s)); they exist purely as an independent cross-check of
    ``eval_profile``.
    """
    if r not in (2, 3, 4):
        raise DomainError(f"closed forms cover r in {{2,3,4}}, got r = {r}")
    p = params or DEFAULT_PARAMS
    _check_pole_distance(s, r, p.pole_radius)
    zs = [riemann_zeta(j * s, p) for j in range(1, r + 1)]
    v = [z.value for z in zs]
    e = [z.abs_err_est for z in zs]
    near = any(z.near_pole for z in zs)
    z1, z2 = v[0], v[1]
    r1, r2 = e[0], e[1]
    if r == 2:
        val = (z1 * z1 - z2) / 2
        err = (2 * abs(z1) * r1 + r2) / 2
        terms = abs(z1 * z1) + abs(z2)
    elif r == 3:
        z3 = v[2]
        val = (z1 ** 3 - 3 * z1 * z2 + 2 * z3) / 6
        err = (3 * abs(z1 * z1) * r1
               + 3 * (abs(z2) * r1 + abs(z1) * r2) + 2 * e[2]) / 6
        terms = abs(z1 ** 3) + 3 * abs(z1 * z2) + 2 * abs(z3)
    else:
        z3, z4 = v[2], v[3]
        val = (z1 ** 4 - 6 * z1 * z1 * z2 + 3 * z2 * z2
               + 8 * z1 * z3 - 6 * z4) / 24
        err = (4 * abs(z1 ** 3) * r1
               + 6 * (2 * abs(z1 * z2) * r1 + abs(z1 * z1) * r2)
               + 6 * abs(z2) * r2
               + 8 * (abs(z3) * r1 + abs(z1) * e[2])
               + 6 * e[3]) / 24
        terms = (abs(z1 ** 4) + 6 * abs(z1 * z1 * z2) + 3 * abs(z2 * z2)
                 + 8 * abs(z1 * z3) + 6 * abs(z4))
    return EvalResult(val, err + 2.3e-16 * terms / r, near)


def sign_on_initial_interval(s: float, r: int) -> int:
    """Predicted sign of zeta_r(s) on [0, 1/r): (-1)^r, never zero there."""
    if r < 1:
        raise DomainError("r must be >= 1")
    if not 0.0 <= s < 1.0 / r:
        raise DomainError(f"s = {s} outside [0, 1/{r})")
    return 1 if r % 2 == 0 else -1
