"""Exact integer polynomials in the canonical variable lambda.

Every chromatic polynomial in this package is stored in powers of lambda,
whatever basis it was derived in.  A parity tag records the argument domain
the polynomial counts on:

* ``"odd"``  -- signed colorings, lambda = 2k + 1
* ``"even"`` -- zero-free (balanced) colorings, lambda = 2k
* ``"all"``  -- ordinary colorings or plain algebra

Equality compares coefficients only, so a signed and an ordinary chromatic
polynomial of an all-positive graph compare equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import InexactDivision, InterpolationError

PARITIES = ("odd", "even", "all")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coefficients[i]`` is the coefficient of lambda**i; the zero polynomial
    has no coefficients.
    """

    coefficients: tuple[int, ...] = ()
    parity: str = field(default="all", compare=False)

    def __post_init__(self):
        if self.parity not in PARITIES:
            raise ValueError(f"unknown parity {self.parity!r}")
        coeffs = _trim(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, parity: str = "all") -> "IntPolynomial":
        return cls((c,), parity)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, parity: str = "all") -> "IntPolynomial":
        return cls((0,) * degree + (coeff,), parity)

    @classmethod
    def linear(cls, root: int, parity: str = "all") -> "IntPolynomial":
        """The polynomial ``lambda - root``."""
        return cls((-root, 1), parity)

    def with_parity(self, parity: str) -> "IntPolynomial":
        return IntPolynomial(self.coefficients, parity)

    # inspection ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def __bool__(self):
        return not self.is_zero()

    def __len__(self):
        return len(self.coefficients)

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,), self.parity)
        return NotImplemented

    def _join_parity(self, other: "IntPolynomial") -> str:
        if self.parity == other.parity or other.parity == "all":
            return self.parity
        if self.parity == "all":
            return other.parity
        raise ValueError(f"cannot combine {self.parity} and {other.parity} polynomials")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        return IntPolynomial(out, self._join_parity(other))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coefficients], self.parity)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial((), self._join_parity(other))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out, self._join_parity(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,), self.parity)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "IntPolynomial"):
        """Division with remainder over the rationals; raises if the quotient is not integral."""
        q, r = _divmod_fraction(self.coefficients, other.coefficients)
        if any(c.denominator != 1 for c in q + r):
            raise InexactDivision("quotient or remainder has non-integral coefficients")
        parity = self._join_parity(other)
        return (IntPolynomial([int(c) for c in q], parity),
                IntPolynomial([int(c) for c in r], parity))

    # evaluation ---------------------------------------------------------

    def evaluate(self, x):
        """Horner evaluation with no parity check (works for ints and Fractions)."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __call__(self, x: int) -> int:
        if self.parity == "odd" and x % 2 != 1:
            raise ValueError(f"odd-parity polynomial evaluated at even argument {x}")
        if self.parity == "even" and x % 2 != 0:
            raise ValueError(f"even-parity polynomial evaluated at odd argument {x}")
        return self.evaluate(x)

    def compose_linear(self, a: int, b: int) -> "IntPolynomial":
        """Return p(a*lambda + b)."""
        step = IntPolynomial((b, a))
        acc = IntPolynomial(())
        for c in reversed(self.coefficients):
            acc = acc * step + c
        return acc.with_parity(self.parity)

    def in_half_basis(self) -> list[Fraction]:
        """Coefficients in k, where lambda = 2k+1 (odd), 2k (even) or k (all)."""
        if self.parity == "all":
            return [Fraction(c) for c in self.coefficients]
        shift = 1 if self.parity == "odd" else 0
        return [Fraction(c) for c in self.compose_linear(2, shift).coefficients]

    # rendering ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "variable": "lambda",
            "parity": self.parity,
            "coefficients": [str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data) -> "IntPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("variable") != "lambda":
            raise ValueError("polynomial JSON must use variable 'lambda'")
        return cls([int(c) for c in data["coefficients"]], data["parity"])

    def latex(self, variable: str = r"\lambda") -> str:
        return latex_terms(self.coefficients, variable)

    def __str__(self):
        return latex_terms(self.coefficients, "λ", braces=False)


def latex_terms(coeffs: Sequence, variable: str, braces: bool = True) -> str:
    """Render coefficients (ints or Fractions) in descending powers."""
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if power == 0:
            body = str(mag)
        else:
            var = variable if power == 1 else (
                f"{variable}^{{{power}}}" if braces else f"{variable}^{power}")
            if mag == 1:
                body = var
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}{var}" if braces else f"({mag}){var}"
            else:
                body = f"{mag}{var}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _divmod_fraction(num: Sequence, den: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    if not den or all(c == 0 for c in den):
        raise ZeroDivisionError("polynomial division by zero")
    den = list(_trim(den)) if all(isinstance(c, int) for c in den) else list(den)
    rem = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    dq = len(rem) - len(den)
    if dq < 0:
        return [], rem
    quot = [Fraction(0)] * (dq + 1)
    for shift in range(dq, -1, -1):
        c = rem[shift + len(den) - 1] / lead
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def evaluate(p: IntPolynomial, x: int) -> int:
    return p(x)


def exact_divide(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``num == q * den``; raise :class:`InexactDivision` otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = _divmod_fraction(num.coefficients, den.coefficients)
    if rem:
        raise InexactDivision(f"inexact division: remainder {rem}")
    if any(c.denominator != 1 for c in quot):
        raise InexactDivision("inexact division: non-integral quotient")
    return IntPolynomial([int(c) for c in quot], num._join_parity(den))


def falling_factorial(order: int) -> IntPolynomial:
    """k(k-1)...(k-order+1) as a polynomial in its own variable."""
    if order < 0:
        raise ValueError("falling factorial order must be non-negative")
    result = IntPolynomial((1,))
    for j in range(order):
        result = result * IntPolynomial.linear(j)
    return result


def from_two_k_basis(coeffs: Sequence[int]) -> IntPolynomial:
    """Polynomial given in powers of 2k, re-expressed in lambda = 2k + 1."""
    return IntPolynomial(coeffs).compose_linear(1, -1).with_parity("odd")


def from_two_k_minus_one_basis(coeffs: Sequence[int]) -> IntPolynomial:
    """Polynomial given in powers of 2k - 1, re-expressed in lambda = 2k."""
    return IntPolynomial(coeffs).compose_linear(1, -1).with_parity("even")


def substitute_affine(coeffs_in_k: Sequence, scale: int, shift: int,
                      parity: str = "all") -> IntPolynomial:
    """Rewrite a polynomial in k as one in lambda, where lambda = scale*k + shift.

    Raises :class:`InexactDivision` when the lambda-coefficients are not integers.
    """
    # k = (lambda - shift) / scale
    step = [Fraction(-shift, scale), Fraction(1, scale)]
    acc: list[Fraction] = []
    for c in reversed(list(coeffs_in_k)):
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i] += a * step[0]
            nxt[i + 1] += a * step[1]
        nxt[0] += Fraction(c)
        acc = nxt
    if any(c.denominator != 1 for c in acc):
        raise InexactDivision(f"non-integral lambda coefficients {acc}")
    return IntPolynomial([int(c) for c in acc], parity)


def interpolate(points: Sequence[tuple[int, int]], expected_degree: int,
                monic: bool = False, parity: str = "all") -> IntPolynomial:
    """Exact Lagrange interpolation through integer points.

    The result must have integer coefficients and degree at most
    ``expected_degree``; with ``monic=True`` it must also be monic of exactly
    that degree.  Violations raise :class:`InterpolationError`, which usually
    means the sampled values were miscounted.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("duplicate interpolation nodes")
    if len(xs) < expected_degree + 1:
        raise InterpolationError(
            f"need {expected_degree + 1} nodes for degree {expected_degree}, got {len(xs)}")
    total = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for t, c in enumerate(basis):
            total[t] += scale * c
    while total and total[-1] == 0:
        total.pop()
    if any(c.denominator != 1 for c in total):
        raise InterpolationError(f"non-integral coefficients {total}")
    poly = IntPolynomial([int(c) for c in total], parity)
    if poly.degree > expected_degree:
        raise InterpolationError(f"degree {poly.degree} exceeds expected {expected_degree}")
    if monic and (poly.degree != expected_degree or not poly.is_monic()):
        raise InterpolationError(f"expected monic polynomial of degree {expected_degree}, got {poly}")
    return poly


def binomial_power(root: int, exponent: int, parity: str = "all") -> IntPolynomial:
    """(lambda - root) ** exponent, expanded directly."""
    return IntPolynomial(
        [comb(exponent, i) * (-root) ** (exponent - i) for i in range(exponent + 1)], parity)


def as_linear_power(p: IntPolynomial) -> tuple[int, int] | None:
    """Return ``(root, d)`` when ``p == (lambda - root)**d`` exactly, else None."""
    d = p.degree
    if d < 1 or not p.is_monic():
        return None
    c = p.coefficients[d - 1]
    if c % d:
        return None
    root = -c // d
    return (root, d) if binomial_power(root, d) == p else None
