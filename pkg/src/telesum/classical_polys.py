"""Bernoulli and Euler polynomials and numbers, computed exactly.

Both families are Appell sequences generated by power-series recurrences,
obtained by multiplying the defining generating series through by
(e^z - 1)/z, respectively (e^z + 1)/2, and matching coefficients of z^n:

    B_n(x) = x**n - 1/(n+1) * sum_{j<n} C(n+1, j) * B_j(x)
    E_n(x) = x**n - 1/2     * sum_{j<n} C(n, j)   * E_j(x)

The recurrences are O(n^2) with memoization, so both caches are eagerly
precomputed to DEFAULT_CACHE_DEPTH at import and grow on demand under a lock;
readers always observe a consistent, fully-built prefix.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import List

from .exact_core import InternalConsistencyError, Poly, binomial, poly_eval

__all__ = [
    "DEFAULT_CACHE_DEPTH",
    "precompute",
    "bernoulli_poly",
    "euler_poly",
    "bernoulli_number",
    "euler_number",
]

DEFAULT_CACHE_DEPTH = 64

_lock = threading.Lock()
_bernoulli: List[Poly] = []
_euler: List[Poly] = []


def _extend_bernoulli(upto: int) -> None:
    # caller holds _lock
    coeff_rows: List[List[Fraction]] = [list(p.coeffs) for p in _bernoulli]
    for n in range(len(coeff_rows), upto + 1):
        acc = [Fraction(0)] * n  # sum_{j<n} C(n+1, j) B_j, degree < n
        for j in range(n):
            cnj = binomial(n + 1, j)
            for i, c in enumerate(coeff_rows[j]):
                acc[i] += cnj * c
        inv = Fraction(1, n + 1)
        row = [-a * inv for a in acc]
        row.append(Fraction(1))  # monic x**n term
        coeff_rows.append(row)
        _bernoulli.append(Poly(row))


def _extend_euler(upto: int) -> None:
    # caller holds _lock
    coeff_rows: List[List[Fraction]] = [list(p.coeffs) for p in _euler]
    half = Fraction(1, 2)
    for n in range(len(coeff_rows), upto + 1):
        acc = [Fraction(0)] * n
        for j in range(n):
            cnj = binomial(n, j)
            for i, c in enumerate(coeff_rows[j]):
                acc[i] += cnj * c
        row = [-a * half for a in acc]
        row.append(Fraction(1))
        coeff_rows.append(row)
        _euler.append(Poly(row))


def precompute(depth: int = DEFAULT_CACHE_DEPTH) -> None:
    """Eagerly fill both polynomial caches through index ``depth``."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    with _lock:
        _extend_bernoulli(depth)
        _extend_euler(depth)


def bernoulli_poly(k: int) -> Poly:
    """Exact Bernoulli polynomial B_k(x); monic of degree k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k >= len(_bernoulli):
        with _lock:
            _extend_bernoulli(k)
    return _bernoulli[k]


def euler_poly(k: int) -> Poly:
    """Exact Euler polynomial E_k(x); monic of degree k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k >= len(_euler):
        with _lock:
            _extend_euler(k)
    return _euler[k]


def bernoulli_number(k: int) -> Fraction:
    """Bernoulli number B_k = B_k(0), exactly."""
    p = bernoulli_poly(k)
    return p.coeffs[0] if p.coeffs else Fraction(0)


def euler_number(k: int) -> Fraction:
    """Integer Euler number of even index: 2**k * E_k(1/2).

    Only even indices are defined in this normalization; odd indices are
    rejected (their value would be 0 in the secant-series convention, but the
    closed forms downstream never use them).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k % 2:
        raise ValueError("Euler number index must be even")
    value = 2 ** k * poly_eval(euler_poly(k), Fraction(1, 2))
    if value.denominator != 1:
        raise InternalConsistencyError(
            "Euler number at index %d is not an integer: %s" % (k, value)
        )
    return value


precompute()
