"""Exact arithmetic building blocks.

Rational values are ``fractions.Fraction`` instances, which already guarantee
the canonical lowest-terms form (positive denominator, gcd 1) and exact
closed arithmetic; this module layers on top of them:

* ``PiScalar`` -- exact scalars of the form (rational) * pi**n, the result
  type of every closed-form evaluation in this package;
* ``Poly`` -- dense univariate polynomials with rational coefficients;
* serialization helpers shared by the CLI renderers.

Everything here is immutable after construction and safe for unrestricted
concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

__all__ = [
    "Rational",
    "RationalLike",
    "InternalConsistencyError",
    "binomial",
    "PiScalar",
    "Poly",
    "poly_eval",
    "poly_derivative",
    "poly_integral_01",
    "poly_reflect",
    "collapse_pi_terms",
    "format_rational",
    "format_pi_scalar",
]

# Canonical rational type: Fraction already enforces lowest terms.
Rational = Fraction

RationalLike = Union[Fraction, int]


class InternalConsistencyError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be >= 0")
    return math.comb(n, k) if k <= n else 0


class PiScalar:
    """Exact scalar ``coeff * pi**pi_power``.

    The zero scalar is canonicalized to ``pi_power == 0`` so that structural
    equality coincides with value equality.  Addition and subtraction are
    defined only between scalars carrying the same power of pi (a zero
    operand is always compatible); nothing downstream needs mixed-power
    addition, and refusing it keeps the type exact.
    """

    __slots__ = ("coeff", "pi_power")

    def __init__(self, coeff: RationalLike, pi_power: int = 0) -> None:
        coeff = Fraction(coeff)
        pi_power = int(pi_power)
        if coeff == 0:
            pi_power = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_power", pi_power)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PiScalar is immutable")

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiScalar):
            return NotImplemented
        return self.coeff == other.coeff and self.pi_power == other.pi_power

    def __hash__(self) -> int:
        return hash((self.coeff, self.pi_power))

    def _check_addable(self, other: "PiScalar") -> int:
        if self.is_zero:
            return other.pi_power
        if other.is_zero:
            return self.pi_power
        if self.pi_power != other.pi_power:
            raise ValueError(
                "cannot add pi^%d and pi^%d terms exactly"
                % (self.pi_power, other.pi_power)
            )
        return self.pi_power

    def __add__(self, other: "PiScalar") -> "PiScalar":
        if not isinstance(other, PiScalar):
            return NotImplemented
        power = self._check_addable(other)
        return PiScalar(self.coeff + other.coeff, power)

    def __sub__(self, other: "PiScalar") -> "PiScalar":
        if not isinstance(other, PiScalar):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PiScalar":
        return PiScalar(-self.coeff, self.pi_power)

    def __mul__(self, other: object) -> "PiScalar":
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff * other.coeff, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.coeff * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "PiScalar":
        if isinstance(other, PiScalar):
            if other.is_zero:
                raise ZeroDivisionError("division by zero PiScalar")
            return PiScalar(self.coeff / other.coeff, self.pi_power - other.pi_power)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.coeff / other, self.pi_power)
        return NotImplemented

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** self.pi_power

    def __repr__(self) -> str:
        return "PiScalar(%s, %d)" % (self.coeff, self.pi_power)

    def __str__(self) -> str:
        return format_pi_scalar(self)


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` multiplies x**i.  Trailing zero coefficients are trimmed at
    construction, so the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @staticmethod
    def monomial(n: int, c: RationalLike = 1) -> "Poly":
        if n < 0:
            raise ValueError("monomial degree must be >= 0")
        return Poly([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __repr__(self) -> str:
        return "Poly(%r)" % ([str(c) for c in self.coeffs],)


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    """Exact Horner evaluation of p at a rational point."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    """Exact formal derivative."""
    return Poly([i * c for i, c in enumerate(p.coeffs)][1:])


def poly_integral_01(p: Poly) -> Fraction:
    """Exact integral of p over [0, 1]: sum of c_i / (i + 1)."""
    return sum((c / (i + 1) for i, c in enumerate(p.coeffs)), Fraction(0))


def poly_reflect(p: Poly) -> Poly:
    """Exact coefficients of the reflected polynomial p(1 - x)."""
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # expand c * (1 - x)**i
        for j in range(i + 1):
            sign = -1 if j % 2 else 1
            out[j] += sign * binomial(i, j) * c
    return Poly(out)


def collapse_pi_terms(
    terms: Dict[int, Fraction]
) -> Union[PiScalar, List[Tuple[Fraction, int]]]:
    """Collapse a pi_power -> coefficient map to its simplest exact form.

    Returns a single PiScalar when at most one power survives, otherwise the
    full list of (coefficient, pi_power) pairs sorted by increasing power.
    """
    live = {p: c for p, c in terms.items() if c != 0}
    if not live:
        return PiScalar(0)
    if len(live) == 1:
        (power, coeff), = live.items()
        return PiScalar(coeff, power)
    return [(live[p], p) for p in sorted(live)]


def format_rational(q: RationalLike) -> str:
    """Render a rational as "p/q", omitting the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def format_pi_scalar(x: PiScalar) -> str:
    """Render a PiScalar as "p/q * pi^n"; the pi factor is omitted for n=0."""
    if x.pi_power == 0:
        return format_rational(x.coeff)
    return "%s * pi^%d" % (format_rational(x.coeff), x.pi_power)
