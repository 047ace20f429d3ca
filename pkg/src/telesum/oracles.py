"""Brute-force series summation with certified truncation bounds.

Every oracle returns a SumResult whose error_bound is an honest bound on
|value - true sum|: an analytic tail bound (Euler-Maclaurin integral plus
half-term for monotone tails, the Leibniz-interval midpoint for alternating
tails) plus a floating-point roundoff floor.  All accumulation goes through
math.fsum, which is exactly rounded, so results are independent of
summation order and the roundoff floor only has to cover the rounding of
the individual terms.

Terms that suffer cancellation against an irrational lattice (multiples of
pi minus the shift) are recomputed in mpmath and patched into the term
array before summation; integer-lattice terms (n + theta) need no patching
because a single float addition is exactly rounded even when it cancels.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import List, Tuple, Union

import mpmath
import numpy as np

from .apostol_polys import DEFAULT_DPS

__all__ = [
    "SumResult",
    "ToleranceUnreachable",
    "sinpi",
    "cospi",
    "sum_zeta",
    "sum_beta",
    "sum_Z",
    "sum_Ztilde",
    "sum_inverse_square",
    "sum_cotangent",
    "hurwitz_partial",
    "herglotz_residual",
    "herglotz_limit",
]

_EPS = sys.float_info.epsilon
_TWO_PI = 2.0 * math.pi
_LATTICE_BAND = 1e-9

# Hard caps on term counts; tolerances that would need more raise
# ToleranceUnreachable instead of thrashing memory.
_ZETA_N_CAP = 20_000_000
_BETA_M_CAP = 20_000_000
_CHUNK = 1_000_000


@dataclass(frozen=True)
class SumResult:
    """Certified summation result: |value - true sum| <= error_bound."""

    value: float
    error_bound: float
    terms_used: int


class ToleranceUnreachable(ArithmeticError):
    """Requested tolerance cannot be certified; .achieved holds the best bound."""

    def __init__(self, message: str, achieved: float) -> None:
        super().__init__(message)
        self.achieved = achieved


def sinpi(y: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """sin(pi*y) with exact zeros at integer y and full relative accuracy
    near them, via range reduction of y rather than of pi*y."""
    arr = np.asarray(y, dtype=np.float64)
    r = np.mod(arr, 2.0)
    s = np.where(r > 1.0, -1.0, 1.0)
    r = np.where(r > 1.0, r - 1.0, r)
    r = np.where(r > 0.5, 1.0 - r, r)
    out = s * np.sin(np.pi * r)
    if np.ndim(y) == 0:
        return float(out)
    return out


def cospi(y: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """cos(pi*y) with exact zeros at half-integer y and exact +-1 at integers.

    Reduces y itself (never pi*y, and never y + 0.5, which is inexact for
    |y| >= 2**52): fold the period onto r in [0, 1/2] where every
    subtraction is exact (Sterbenz), then evaluate sin(pi*(1/2 - r)).
    """
    arr = np.asarray(y, dtype=np.float64)
    r = np.mod(arr, 2.0)
    r = np.where(r > 1.0, 2.0 - r, r)
    s = np.where(r > 0.5, -1.0, 1.0)
    r = np.where(r > 0.5, 1.0 - r, r)
    out = s * np.sin(np.pi * (0.5 - r))
    if np.ndim(y) == 0:
        return float(out)
    return out


def _roundoff_floor(abs_accum: float, value: float, per_term: float = 16.0) -> float:
    # per_term * eps covers the relative rounding of each summand; fsum
    # itself contributes only the final rounding, covered by the value term.
    return per_term * _EPS * abs_accum + 4.0 * _EPS * abs(value)


def _power_tail(a: float, b: float, p: float, A: int) -> Tuple[float, float]:
    """Certified tail of sum_{m >= A} (a*m + b)**(-p) for a > 0, p > 1.

    Estimate is the integral plus half-term; the trapezoid-defect bound
    (|f'(A)| + f''(A)) / 12 is valid because f is convex decreasing with
    decreasing second derivative.
    """
    y = a * A + b
    if y <= 0:
        raise ValueError("tail start a*A + b must be positive")
    est = y ** (1.0 - p) / (a * (p - 1.0)) + 0.5 * y ** (-p)
    bound = (p * a * y ** (-p - 1.0) + p * (p + 1.0) * a * a * y ** (-p - 2.0)) / 12.0
    return est, bound


def _alternating_tail(h0: float, h1: float) -> Tuple[float, float]:
    """Certified tail of sum_{i>=0} (-1)**i h(i) for h >= 0 convex decreasing.

    The Leibniz interval is [h0/2, h0/2 + (h0-h1)/2]; returning its midpoint
    halves the worst-case error to (h0-h1)/4.
    """
    d0 = max(h0 - h1, 0.0)
    est = 0.5 * h0 + 0.25 * d0
    bound = 0.25 * d0 + 4.0 * _EPS * h0
    return est, bound


def _fsum_chunked(values: np.ndarray) -> float:
    if values.size <= _CHUNK:
        return math.fsum(values.tolist())
    parts = []
    for start in range(0, values.size, _CHUNK):
        parts.append(math.fsum(values[start : start + _CHUNK].tolist()))
    return math.fsum(parts)


def _check_tol(target_tol: float) -> float:
    target_tol = float(target_tol)
    if not (target_tol > 0.0) or not math.isfinite(target_tol):
        raise ValueError("target_tol must be a positive finite real")
    return target_tol


def sum_zeta(s: int, target_tol: float = 1e-10) -> SumResult:
    """Partial sum of m**(-s) over m >= 1 with a certified tail correction.

    The tail from N on is replaced by its integral-plus-half-term estimate
    N**(1-s)/(s-1) + N**(-s)/2; N is chosen so the certified remainder
    (trapezoid defect plus roundoff floor) is at most target_tol.
    """
    if not isinstance(s, (int, np.integer)) or isinstance(s, bool):
        raise ValueError("s must be an integer >= 2")
    if s < 2:
        raise ValueError("s must be an integer >= 2")
    target_tol = _check_tol(target_tol)
    s = int(s)

    # cheapest possible bound: roundoff floor at abs sum ~ zeta(s) >= 1
    if 16.0 * _EPS > target_tol:
        raise ToleranceUnreachable(
            "tolerance %.3e is below the double-precision roundoff floor"
            % target_tol,
            achieved=16.0 * _EPS,
        )

    N = max(10, int(math.ceil((s / (6.0 * target_tol)) ** (1.0 / (s + 1)))))
    while True:
        N = min(N, _ZETA_N_CAP)
        m = np.arange(1, N, dtype=np.float64)
        terms = m ** float(-s)
        partial = _fsum_chunked(terms)
        tail_est, tail_bound = _power_tail(1.0, 0.0, float(s), N)
        value = partial + tail_est
        bound = tail_bound + _roundoff_floor(partial + abs(tail_est), value)
        if bound <= target_tol:
            return SumResult(value=value, error_bound=bound, terms_used=N - 1)
        if N >= _ZETA_N_CAP:
            raise ToleranceUnreachable(
                "tolerance %.3e unreachable at the N cap %d (achieved %.3e)"
                % (target_tol, _ZETA_N_CAP, bound),
                achieved=bound,
            )
        N *= 2


def sum_beta(s: int, target_tol: float = 1e-10) -> SumResult:
    """Alternating sum of (-1)**m (2m+1)**(-s) with a certified tail.

    Terms are grouped pairwise (m even with m odd) so the grouped series has
    positive decreasing terms; the remaining alternating tail is certified
    by the Leibniz interval around its half-term midpoint.
    """
    if not isinstance(s, (int, np.integer)) or isinstance(s, bool):
        raise ValueError("s must be an integer >= 1")
    if s < 1:
        raise ValueError("s must be an integer >= 1")
    target_tol = _check_tol(target_tol)
    s = int(s)

    if 16.0 * _EPS > target_tol:
        raise ToleranceUnreachable(
            "tolerance %.3e is below the double-precision roundoff floor"
            % target_tol,
            achieved=16.0 * _EPS,
        )

    # bound ~ (s/2)(2M+1)^(-s-1); solve for the anchor 2M+1
    anchor = (s / target_tol) ** (1.0 / (s + 1))
    J = max(8, int(math.ceil((anchor - 1.0) / 4.0)) + 2)
    while True:
        J = min(J, _BETA_M_CAP // 2)
        M = 2 * J
        j = np.arange(J, dtype=np.float64)
        lo = (4.0 * j + 1.0) ** float(-s)
        hi = (4.0 * j + 3.0) ** float(-s)
        groups = lo - hi
        partial = _fsum_chunked(groups)
        fM = (2.0 * M + 1.0) ** float(-s)
        fM1 = (2.0 * M + 3.0) ** float(-s)
        tail_est, tail_bound = _alternating_tail(fM, fM1)
        # tail anchor M is even, so the omitted tail starts with + sign
        value = partial + tail_est
        abs_accum = _fsum_chunked(lo + hi) + tail_est
        bound = tail_bound + _roundoff_floor(abs_accum, value)
        if bound <= target_tol:
            return SumResult(value=value, error_bound=bound, terms_used=M)
        if M >= _BETA_M_CAP:
            raise ToleranceUnreachable(
                "tolerance %.3e unreachable at the term cap %d (achieved %.3e)"
                % (target_tol, _BETA_M_CAP, bound),
                achieved=bound,
            )
        J *= 2


def _check_order(order: str) -> bool:
    if order == "ascending":
        return False
    if order == "descending":
        return True
    raise ValueError("order must be 'ascending' or 'descending'")


def sum_Z(k: int, mu: float, N: int = 10000, order: str = "ascending") -> SumResult:
    """Bilateral alternating lattice sum (-1)**m / ((2m+1)*pi - mu)**(k+1).

    Lattice indices m and -m-1 are paired before summation (the pairing is
    part of the contract: it is what gives the conditionally convergent
    k = 0 case its symmetric-limit meaning).  N pairs cover the window
    m = -N..N-1; the paired tail is alternating with a convex decreasing
    magnitude, certified by the Leibniz midpoint.  The first few pairs are
    recomputed in mpmath because (2m+1)*pi - mu cancels against float pi.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 0:
        raise ValueError("k must be an integer >= 0")
    k = int(k)
    mu = float(mu)
    if not (abs(mu) < math.pi):
        raise ValueError("mu must satisfy |mu| < pi")
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("N must be an integer >= 1")
    N = int(N)
    reverse = _check_order(order)

    p = k + 1
    sgnk = 1.0 if k % 2 == 0 else -1.0

    m = np.arange(N, dtype=np.float64)
    base = (2.0 * m + 1.0) * np.pi
    pair = (base - mu) ** (-p) + sgnk * (base + mu) ** (-p)
    signs = 1.0 - 2.0 * (m.astype(np.int64) % 2).astype(np.float64)
    terms = (signs * pair).tolist()

    with mpmath.workdps(DEFAULT_DPS):
        mmu = mpmath.mpf(mu)
        for j in range(min(3, N)):
            b = (2 * j + 1) * mpmath.pi
            tj = (b - mmu) ** (-p) + sgnk * (b + mmu) ** (-p)
            terms[j] = float((-1) ** j * tj)
        hb = (2 * N + 1) * mpmath.pi
        hb1 = (2 * N + 3) * mpmath.pi
        h0 = float(abs((hb - mmu) ** (-p) + sgnk * (hb + mmu) ** (-p)))
        h1 = float(abs((hb1 - mmu) ** (-p) + sgnk * (hb1 + mmu) ** (-p)))

    if reverse:
        terms.reverse()
    partial = math.fsum(terms)
    abs_accum = math.fsum(abs(t) for t in terms)

    if k % 2 == 0:
        sigma = 1.0
    else:
        sigma = 0.0 if mu == 0.0 else math.copysign(1.0, mu)
    tail_mag, tail_bound = _alternating_tail(h0, h1)
    sign_N = 1.0 if N % 2 == 0 else -1.0
    value = partial + sigma * sign_N * tail_mag
    if sigma == 0.0:
        tail_bound = 0.0
    bound = tail_bound + _roundoff_floor(abs_accum, value, per_term=16.0 + 4.0 * k)
    return SumResult(value=value, error_bound=bound, terms_used=2 * N)


def _check_lattice_distance(x: float, spacing: float, what: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("%s must be finite" % what)
    if abs(math.remainder(x, spacing)) <= _LATTICE_BAND:
        raise ValueError(
            "%s must stay at least 1e-9 away from multiples of %s"
            % (what, "2*pi" if spacing == _TWO_PI else "1")
        )
    return x


def sum_Ztilde(k: int, mu: float, N: int = 10000, order: str = "ascending") -> SumResult:
    """Bilateral lattice sum 1 / (2*m*pi - mu)**(k+1) over m = -N..N.

    For k >= 1 the terms are summed directly (absolute convergence); both
    one-sided tails get integral-plus-half-term corrections.  For k = 0 the
    conditionally convergent sum is given its symmetric-limit meaning by
    pairing m with -m, which yields terms 2*mu/((2*m*pi)^2 - mu^2).  Terms
    nearest the lattice singularity are recomputed in mpmath.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 0:
        raise ValueError("k must be an integer >= 0")
    k = int(k)
    mu = _check_lattice_distance(mu, _TWO_PI, "mu")
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("N must be an integer >= 1")
    N = int(N)
    reverse = _check_order(order)
    A = N + 1
    if A <= abs(mu) / _TWO_PI:
        raise ValueError("N too small: need N + 1 > |mu| / (2*pi)")

    p = k + 1
    if k == 0:
        m = np.arange(1, N + 1, dtype=np.float64)
        lo = _TWO_PI * m - mu
        hi = _TWO_PI * m + mu
        terms = (2.0 * mu / (lo * hi)).tolist()
        near = int(round(abs(mu) / _TWO_PI))
        with mpmath.workdps(DEFAULT_DPS):
            mmu = mpmath.mpf(mu)
            for mm in range(max(1, near - 1), min(N, near + 1) + 1):
                b = 2 * mm * mpmath.pi
                terms[mm - 1] = float(2 * mmu / ((b - mmu) * (b + mmu)))
        terms.append(-1.0 / mu)
        if reverse:
            terms.reverse()
        partial = math.fsum(terms)
        abs_accum = math.fsum(abs(t) for t in terms)

        yl = _TWO_PI * A - mu
        yh = _TWO_PI * A + mu
        tail_est = math.log1p(2.0 * mu / yl) / _TWO_PI + 0.5 * (1.0 / yl - 1.0 / yh)
        hp = _TWO_PI * abs(yl ** -2 - yh ** -2)
        hpp = 8.0 * math.pi ** 2 * abs(yl ** -3 - yh ** -3)
        tail_bound = (hp + hpp) / 12.0
        value = partial + tail_est
        bound = tail_bound + _roundoff_floor(abs_accum + abs(tail_est), value)
        return SumResult(value=value, error_bound=bound, terms_used=2 * N + 1)

    m = np.arange(-N, N + 1, dtype=np.float64)
    denom = _TWO_PI * m - mu
    terms = (1.0 / denom ** p).tolist()
    near = int(round(mu / _TWO_PI))
    with mpmath.workdps(DEFAULT_DPS):
        mmu = mpmath.mpf(mu)
        for mm in range(max(-N, near - 1), min(N, near + 1) + 1):
            terms[mm + N] = float((2 * mm * mpmath.pi - mmu) ** (-p))
    if reverse:
        terms.reverse()
    partial = math.fsum(terms)
    abs_accum = math.fsum(abs(t) for t in terms)

    up_est, up_bound = _power_tail(_TWO_PI, -mu, float(p), A)
    dn_est, dn_bound = _power_tail(_TWO_PI, mu, float(p), A)
    sign_low = 1.0 if p % 2 == 0 else -1.0
    value = partial + up_est + sign_low * dn_est
    bound = up_bound + dn_bound + _roundoff_floor(
        abs_accum + up_est + dn_est, value, per_term=16.0 + 4.0 * k
    )
    return SumResult(value=value, error_bound=bound, terms_used=2 * N + 1)


def sum_inverse_square(theta: float, N: int = 100000) -> SumResult:
    """Bilateral sum of (n + theta)**(-2) over n = -N..N with certified tails.

    Converges to pi**2 / sin(pi*theta)**2.  Integer-lattice terms need no
    extended precision: n + theta is a single exactly-rounded addition.
    """
    theta = _check_lattice_distance(theta, 1.0, "theta")
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("N must be an integer >= 1")
    N = int(N)
    A = N + 1
    if A <= abs(theta):
        raise ValueError("N too small: need N + 1 > |theta|")

    n = np.arange(-N, N + 1, dtype=np.float64)
    terms = 1.0 / (n + theta) ** 2
    partial = _fsum_chunked(terms)

    up_est, up_bound = _power_tail(1.0, theta, 2.0, A)
    dn_est, dn_bound = _power_tail(1.0, -theta, 2.0, A)
    value = partial + up_est + dn_est
    bound = up_bound + dn_bound + _roundoff_floor(value, value)
    return SumResult(value=value, error_bound=bound, terms_used=2 * N + 1)


def sum_cotangent(theta: float, N: int = 100000) -> SumResult:
    """Symmetrically paired partial-fraction sum 1/theta + sum 2*theta/(theta^2 - n^2).

    Converges to pi / tan(pi*theta).  The paired tail is monotone; its
    integral-plus-half-term estimate uses the exact antiderivative
    log((x - theta)/(x + theta)).
    """
    theta = _check_lattice_distance(theta, 1.0, "theta")
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("N must be an integer >= 1")
    N = int(N)
    A = N + 1
    if A <= abs(theta):
        raise ValueError("N too small: need N + 1 > |theta|")

    n = np.arange(1, N + 1, dtype=np.float64)
    paired = (2.0 * theta / ((theta - n) * (theta + n))).tolist()
    paired.append(1.0 / theta)
    partial = math.fsum(paired)
    abs_accum = math.fsum(abs(t) for t in paired)

    hA = 1.0 / (A - theta) - 1.0 / (A + theta)
    tail_est = -(math.log1p(2.0 * theta / (A - theta)) + 0.5 * hA)
    hp = abs((A + theta) ** -2 - (A - theta) ** -2)
    hpp = 2.0 * abs((A - theta) ** -3 - (A + theta) ** -3)
    tail_bound = (hp + hpp) / 12.0
    value = partial + tail_est
    bound = tail_bound + _roundoff_floor(abs_accum + abs(tail_est), value)
    return SumResult(value=value, error_bound=bound, terms_used=2 * N + 1)


_HURWITZ_KINDS = ("B_even", "B_odd", "E_even", "E_odd")


def hurwitz_partial(kind: str, k: int, x: float, M: int = 100000) -> float:
    """Truncated trigonometric expansion of a Bernoulli/Euler polynomial.

    kind selects the target: B_even -> B_{2k}(x), B_odd -> B_{2k+1}(x),
    E_even -> E_{2k}(x), E_odd -> E_{2k-1}(x), each valid for k >= 1 and
    x in [0, 1].  Returns the M-term partial sum including the leading
    constant (applied after the exactly-rounded summation, so lattice points
    where every term vanishes come out as exact zeros).
    """
    if kind not in _HURWITZ_KINDS:
        raise ValueError("kind must be one of %s" % (_HURWITZ_KINDS,))
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise ValueError("k must be an integer >= 1")
    k = int(k)
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise ValueError("x must lie in [0, 1]")
    if not isinstance(M, (int, np.integer)) or M < 1:
        raise ValueError("M must be an integer >= 1")
    M = int(M)

    sign = -1.0 if k % 2 == 0 else 1.0  # (-1)**(k-1)
    if kind == "B_even":
        m = np.arange(1, M + 1, dtype=np.float64)
        s = math.fsum((cospi(2.0 * x * m) / m ** (2 * k)).tolist())
        const = 2.0 * sign * math.factorial(2 * k) / _TWO_PI ** (2 * k)
    elif kind == "B_odd":
        m = np.arange(1, M + 1, dtype=np.float64)
        s = math.fsum((sinpi(2.0 * x * m) / m ** (2 * k + 1)).tolist())
        const = 2.0 * sign * math.factorial(2 * k + 1) / _TWO_PI ** (2 * k + 1)
    elif kind == "E_even":
        odd = 2.0 * np.arange(M, dtype=np.float64) + 1.0
        s = math.fsum((sinpi(odd * x) / odd ** (2 * k + 1)).tolist())
        const = -4.0 * sign * math.factorial(2 * k) / math.pi ** (2 * k + 1)
    else:  # E_odd, target E_{2k-1}
        odd = 2.0 * np.arange(M, dtype=np.float64) + 1.0
        s = math.fsum((cospi(odd * x) / odd ** (2 * k)).tolist())
        const = -4.0 * sign * math.factorial(2 * k - 1) / math.pi ** (2 * k)
    return const * s


def herglotz_residual(theta: float, N: int = 10000) -> Tuple[float, float]:
    """Functional-equation defects of pi^2/sin^2 and its truncated lattice sum.

    Returns (|f(t/2) + f((t+1)/2) - 4 f(t)|, same with f replaced by the
    tail-corrected truncated sum g_N from sum_inverse_square).  The f-defect
    is an exact trig identity, so it measures pure roundoff; the g-defect
    shrinks as N grows.
    """
    theta = _check_lattice_distance(theta, 1.0, "theta")

    def f(t: float) -> float:
        sp = sinpi(t)
        return math.pi ** 2 / (sp * sp)

    f_res = abs(math.fsum([f(theta / 2.0), f((theta + 1.0) / 2.0), -4.0 * f(theta)]))
    g1 = sum_inverse_square(theta / 2.0, N).value
    g2 = sum_inverse_square((theta + 1.0) / 2.0, N).value
    g3 = sum_inverse_square(theta, N).value
    g_res = abs(math.fsum([g1, g2, -4.0 * g3]))
    return f_res, g_res


def herglotz_limit(theta: float, N: int = 1000000) -> float:
    """Truncated lattice sum minus its pole term: g_N(theta) - 1/theta**2.

    Tends to pi**2 / 3 as theta -> 0 (with N large enough that the
    truncation error at the given theta is negligible).
    """
    theta = _check_lattice_distance(theta, 1.0, "theta")
    return sum_inverse_square(theta, N).value - 1.0 / theta ** 2
