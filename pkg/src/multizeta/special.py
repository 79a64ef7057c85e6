"""Scalar special functions: Bernoulli numbers, Gamma, and the Riemann zeta-function.

Everything downstream reduces to these three ingredients:

* exact Bernoulli numbers B_n (convention B_1 = -1/2) as `fractions.Fraction`,
  which give the exact values zeta(-n) = -B_{n+1}/(n+1) on the negative axis;
* a Lanczos approximation of Gamma(z) for real and complex arguments, with a
  log-Gamma entry point for magnitudes beyond float range;
* an Euler-Maclaurin evaluation of zeta(s),

      zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1}^{K} B_{2k}/(2k)! * (s)_{2k-1} * N^(-s-2k+1),

  combined with the functional equation

      zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)

  for arguments left of the reflection threshold.

Double precision is used throughout; exactness lives in the Fraction-valued
functions only.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, PoleError, ResourceLimitError

Rational = Fraction
Scalar = Union[float, complex]

_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

# Relative error target the evaluator aims for; EvalResult.accuracy_degraded
# reports when the internal estimate misses it.
ACCURACY_TARGET = 1e-12


# --------------------------------------------------------------------------
# result / parameter types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalResult:
    """A floating evaluation together with an error estimate.

    ``abs_err_est`` is a first-order estimate (not a guarantee); ``near_pole``
    is set when the argument fell inside the configured pole-exclusion radius.
    """

    value: Scalar
    abs_err_est: float
    near_pole: bool = False

    @property
    def accuracy_degraded(self) -> bool:
        return self.abs_err_est > ACCURACY_TARGET * max(1.0, abs(self.value))


@dataclass(frozen=True)
class ZetaParams:
    """Tuning knobs of the Euler-Maclaurin evaluator.

    ``em_cutoff`` is the base summation cutoff N (raised automatically with
    |Im s|), ``em_terms`` the number K of B_{2k} correction terms, and
    ``reflect_threshold`` the real part below which the functional equation
    is used.  ``pole_radius`` is the exclusion radius around each pole.
    """

    em_cutoff: int = 30
    em_terms: int = 12
    reflect_threshold: float = 0.5
    pole_radius: float = 1e-9

    def __post_init__(self):
        if self.em_cutoff < 10:
            raise DomainError("em_cutoff must be >= 10")
        if not 1 <= self.em_terms <= 30:
            raise DomainError("em_terms must be in [1, 30]")
        if not 0.0 <= self.reflect_threshold <= 1.0:
            raise DomainError("reflect_threshold must be in [0, 1]")
        if self.pole_radius <= 0:
            raise DomainError("pole_radius must be positive")


DEFAULT_PARAMS = ZetaParams()


# --------------------------------------------------------------------------
# Bernoulli numbers and exact zeta values
# --------------------------------------------------------------------------

class BernoulliCache:
    """Monotonically growing table of B_0, B_1, ... as exact rationals.

    B_1 = -1/2; the defining recurrence is sum_{j=0}^{m} C(m+1, j) B_j = 0
    for every m >= 1.  Growth is serialized by a lock; reads are lock-free
    (the table is append-only).
    """

    def __init__(self, hard_cap: int = 2000):
        self.hard_cap = hard_cap
        self._table = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._table) - 1

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Bernoulli index must be >= 0, got {n}")
        if n > self.hard_cap:
            raise ResourceLimitError(
                f"Bernoulli index {n} exceeds hard cap {self.hard_cap}")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(self._table) <= n:
                m = len(self._table)
                if m % 2 and m > 1:
                    self._table.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(m):
                    bj = self._table[j]
                    if bj:
                        acc += math.comb(m + 1, j) * bj
                self._table.append(-acc / (m + 1))
        return self._table[n]

    def known(self) -> list[Fraction]:
        """Snapshot of the table computed so far."""
        return list(self._table)


_BERNOULLI = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number (B_1 = -1/2) from the shared cache."""
    return _BERNOULLI.get(n)


def zeta_neg_int_exact(n: int) -> Fraction:
    """Exact zeta(-n) for integer n >= 0.

    zeta(0) = -1/2 and zeta(-n) = -B_{n+1}/(n+1) for n >= 1; in particular
    zeta(-n) = 0 for even n >= 2 (the trivial zeros).
    """
    if n < 0:
        raise DomainError(f"expected n >= 0, got {n}")
    if n == 0:
        return Fraction(-1, 2)
    return -bernoulli(n + 1) / (n + 1)


def log_abs_fraction(q: Fraction) -> float:
    """Natural log of |q| for a nonzero rational of arbitrary size.

    Exact integer logs keep this accurate to ~1e-15 relative even when the
    numerator has thousands of digits.
    """
    if q == 0:
        raise DomainError("log of zero")
    return math.log(abs(q.numerator)) - math.log(q.denominator)


# --------------------------------------------------------------------------
# sin / cos of pi*x with exact argument reduction
# --------------------------------------------------------------------------

def sinpi(x: float) -> float:
    """sin(pi*x) with the integer part of x removed exactly.

    Near integers this retains full relative accuracy, which plain
    sin(math.pi*x) loses; the trivial zeros of zeta depend on it.
    """
    n = round(x)
    r = x - n
    v = math.sin(math.pi * r)
    return -v if n % 2 else v


def cospi(x: float) -> float:
    """cos(pi*x) via the same exact reduction as sinpi."""
    n = round(x)
    r = x - n
    v = math.cos(math.pi * r)
    return -v if n % 2 else v


def sinpi_complex(z: complex) -> complex:
    """sin(pi*z) = sin(pi x)cosh(pi y) + i cos(pi x)sinh(pi y)."""
    x, y = z.real, z.imag
    if y == 0.0:
        return complex(sinpi(x), 0.0)
    return complex(sinpi(x) * math.cosh(math.pi * y),
                   cospi(x) * math.sinh(math.pi * y))


# --------------------------------------------------------------------------
# Gamma: Lanczos approximation (g = 607/128, 15 terms)
# --------------------------------------------------------------------------

_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)


def _lanczos_series(z):
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z - 1 + i)
    return acc


def _loggamma_right(z):
    """log Gamma(z) for Re z >= 0.5 (principal branch on that half-plane)."""
    a = _lanczos_series(z)
    t = z + (_LANCZOS_G - 0.5)
    if isinstance(z, complex):
        return (z - 0.5) * cmath.log(t) - t + cmath.log(_SQRT_TWO_PI * a)
    return (z - 0.5) * math.log(t) - t + math.log(_SQRT_TWO_PI * a)


def _is_nonpositive_int(z: Scalar) -> bool:
    if isinstance(z, complex):
        if z.imag != 0.0:
            return False
        z = z.real
    return z <= 0.0 and z == math.floor(z)


def gamma(z: Scalar) -> Scalar:
    """Gamma(z) for real or complex z; poles at nonpositive integers raise.

    Real overflow (Re z beyond ~171.6) returns a signed infinity; use
    ``loggamma`` / ``gammaln_signed`` in that regime.
    """
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma pole at z = {z}", location=float(complex(z).real))
    if isinstance(z, complex):
        if z.real >= 0.5:
            if z.real > 141.0:
                # the direct product overflows long before Gamma itself does
                w = _loggamma_right(z)
                if w.real > 709.0:
                    return cmath.rect(math.inf, w.imag)
                return cmath.exp(w)
            a = _lanczos_series(z)
            t = z + (_LANCZOS_G - 0.5)
            return _SQRT_TWO_PI * a * t ** (z - 0.5) * cmath.exp(-t)
        # reflection into the right half-plane
        return math.pi / (sinpi_complex(z) * gamma(1.0 - z))
    x = float(z)
    if x >= 0.5:
        if x > 141.0:
            # assemble in log space; the direct product overflows early
            w = _loggamma_right(x)
            return math.exp(w) if w <= 709.0 else math.inf
        a = _lanczos_series(x)
        t = x + (_LANCZOS_G - 0.5)
        return _SQRT_TWO_PI * a * t ** (x - 0.5) * math.exp(-t)
    sp = sinpi(x)
    lg = _loggamma_right(1.0 - x)
    if lg > 690.0:
        logabs = _LNPI - math.log(abs(sp)) - lg
        return math.copysign(math.exp(logabs), sp)
    return math.pi / (sp * math.exp(lg))


def loggamma(z: Scalar) -> Scalar:
    """log Gamma(z).

    Real z > 0: exact principal value.  Complex z with Re z >= 0.5: principal
    branch.  For Re z < 0.5 the reflection formula is used and the imaginary
    part is not branch-normalized (magnitudes are still correct).
    """
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma pole at z = {z}", location=float(complex(z).real))
    if isinstance(z, complex):
        if z.real >= 0.5:
            return _loggamma_right(z)
        return cmath.log(math.pi) - cmath.log(sinpi_complex(z)) - _loggamma_right(1.0 - z)
    x = float(z)
    if x >= 0.5:
        return _loggamma_right(x)
    if x > 0.0:
        return math.log(math.pi / sinpi(x)) - _loggamma_right(1.0 - x)
    raise DomainError("real loggamma needs x > 0; use gammaln_signed")


def gammaln_signed(x: float) -> tuple[float, float]:
    """(log |Gamma(x)|, sign) for real non-pole x, valid on both half-lines."""
    if _is_nonpositive_int(x):
        raise PoleError(f"Gamma pole at x = {x}", location=float(x))
    if x >= 0.5:
        return _loggamma_right(x), 1.0
    sp = sinpi(x)
    logabs = _LNPI - math.log(abs(sp)) - _loggamma_right(1.0 - x)
    return logabs, math.copysign(1.0, sp)


# --------------------------------------------------------------------------
# Riemann zeta
# --------------------------------------------------------------------------

_B2K_OVER_FACT: list[float] = []  # B_{2k}/(2k)! for k = 0, 1, 2, ...
_B2K_LOCK = threading.Lock()


def _b2k_over_fact(k: int) -> float:
    if k >= len(_B2K_OVER_FACT):
        with _B2K_LOCK:
            while len(_B2K_OVER_FACT) <= k:
                m = len(_B2K_OVER_FACT)
                _B2K_OVER_FACT.append(
                    float(bernoulli(2 * m) / math.factorial(2 * m)))
    return _B2K_OVER_FACT[k]


def _em_cutoff_for(s: Scalar, params: ZetaParams) -> int:
    t = abs(s.imag) if isinstance(s, complex) else 0.0
    return max(params.em_cutoff, math.ceil(10.0 + 1.3 * t))


def zeta_euler_maclaurin(s: Scalar, cutoff: int, terms: int) -> tuple[Scalar, float]:
    """Raw Euler-Maclaurin sum for zeta(s) with explicit (N, K).

    Returns (value, error estimate).  The estimate is the first omitted
    correction term scaled by the standard tail factor, plus a rounding
    allowance proportional to the summed magnitudes.  Intended for
    Re s > -(2K+1); accuracy at strongly negative Re s is limited by
    cancellation, which the estimate reflects.
    """
    if s == 1:
        raise PoleError("zeta pole at s = 1", location=1.0, k=1)
    N, K = cutoff, terms
    e = -s
    acc = 0.0 + 0.0j if isinstance(s, complex) else 0.0
    absacc = 0.0
    for n in range(1, N):
        term = n ** e
        acc += term
        absacc += abs(term)
    tail = N ** (1 + e) / (s - 1)
    half = 0.5 * N ** e
    acc += tail + half
    absacc += abs(tail) + abs(half)
    poch = s                     # rising factorial (s)_{2k-1}
    npow = N ** (e - 1.0)        # N^(-s-2k+1) at k = 1
    ninv2 = 1.0 / (N * N)
    for k in range(1, K + 1):
        term = _b2k_over_fact(k) * poch * npow
        acc += term
        absacc += abs(term)
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        npow *= ninv2
    sigma = s.real if isinstance(s, complex) else s
    next_term = abs(_b2k_over_fact(K + 1)) * abs(poch) * abs(npow)
    if sigma + 2 * K + 1 > 0:
        tail_factor = max(1.0, abs(s + 2 * K + 1) / (sigma + 2 * K + 1))
        est = next_term * tail_factor
    else:
        est = math.inf
    est += 4e-16 * absacc
    return acc, est


def _reflect(s: Scalar, params: ZetaParams) -> tuple[Scalar, float]:
    """zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), Re s below threshold."""
    w = 1 - s
    N = _em_cutoff_for(w, params)
    zw, zw_err = zeta_euler_maclaurin(w, N, params.em_terms)
    rel = zw_err / abs(zw) + 6e-15 if zw != 0 else 6e-15
    if isinstance(s, complex):
        sp = sinpi_complex(s / 2)
        lg = _loggamma_right(w)
        # direct product unless the Gamma factor alone overflows
        if lg.real < 690.0:
            val = 2 ** s * math.pi ** (s - 1) * sp * cmath.exp(lg) * zw
        else:
            val = cmath.exp(s * _LN2 + (s - 1) * _LNPI + cmath.log(sp) + lg + cmath.log(zw))
        return val, abs(val) * rel
    sp = sinpi(s / 2.0)
    if sp == 0.0:
        return 0.0, 0.0          # trivial zero, exact
    lg = _loggamma_right(w)
    logmag = s * _LN2 + (s - 1) * _LNPI + math.log(abs(sp)) + lg + math.log(abs(zw))
    sign = math.copysign(1.0, sp) * math.copysign(1.0, zw)
    if logmag > 700.0 or lg > 690.0:
        val = sign * math.exp(logmag) if logmag <= 709.0 else sign * math.inf
    else:
        val = 2.0 ** s * math.pi ** (s - 1.0) * sp * math.exp(lg) * zw
    err = abs(val) * (rel + 9e-16 * (abs(logmag) + 1.0))
    return val, err


def riemann_zeta(s: Scalar, params: ZetaParams | None = None) -> EvalResult:
    """zeta(s) for real or complex s != 1.

    Euler-Maclaurin summation right of ``params.reflect_threshold``, the
    functional equation left of it.  Within ``params.pole_radius`` of s = 1
    the value is still returned, flagged ``near_pole`` with a degraded error
    estimate.
    """
    p = params or DEFAULT_PARAMS
    if s == 1:
        raise PoleError("zeta pole at s = 1", location=1.0, k=1)
    if s == 0:
        return EvalResult(complex(-0.5) if isinstance(s, complex) else -0.5, 0.0)
    sigma = s.real if isinstance(s, complex) else s
    near = abs(s - 1) <= p.pole_radius
    if sigma >= p.reflect_threshold:
        value, err = zeta_euler_maclaurin(s, _em_cutoff_for(s, p), p.em_terms)
    else:
        value, err = _reflect(s, p)
    if near:
        err = max(err, abs(value) * 1e-12)
    return EvalResult(value, err, near)


def zeta_value(s: Scalar, params: ZetaParams | None = None) -> Scalar:
    """Convenience: the bare value of riemann_zeta."""
    return riemann_zeta(s, params).value
