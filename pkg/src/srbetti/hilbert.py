"""Exact Hilbert series, Hilbert polynomials and the resolution identities.

All arithmetic is integer arithmetic on polynomial coefficient tuples; the
identities checked here are exact, so the tolerance everywhere is zero.
Rational functions only ever have denominator (1-z)^d, represented by the
pole order next to an integer numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .simplicial import FVector, HVector


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[k] multiplies z^k, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        if end != len(c):
            object.__setattr__(self, "coeffs", c[:end])

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-x for x in other.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * a for a in self.coeffs))

    def shift(self, s: int) -> "IntPolynomial":
        """Multiply by z^s."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * s + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                body = str(abs(a))
            else:
                mag = "" if abs(a) == 1 else str(abs(a))
                body = f"{mag}z" if k == 1 else f"{mag}z^{k}"
            if not parts:
                parts.append(body if a > 0 else "-" + body)
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))


def one_minus_z_pow(k: int) -> IntPolynomial:
    """(1-z)^k expanded by the binomial theorem."""
    if k < 0:
        raise ValueError("negative power")
    return IntPolynomial(tuple((-1) ** j * comb(k, j) for j in range(k + 1)))


def divide_by_one_minus_z(poly: IntPolynomial) -> IntPolynomial:
    """Synthetic division by (1-z); requires exact divisibility (poly(1) = 0)."""
    if poly.is_zero:
        return poly
    if poly.evaluate(1) != 0:
        raise ValueError("not divisible by (1-z)")
    acc = 0
    out = []
    for a in poly.coeffs[:-1]:
        acc += a
        out.append(acc)
    return IntPolynomial(tuple(out))


def binom_int(m: int, k: int) -> int:
    """The binomial polynomial C(x, k) evaluated at an arbitrary integer x = m."""
    if k < 0:
        raise ValueError("negative lower index")
    if m >= 0:
        return comb(m, k)
    num = 1
    for t in range(k):
        num *= m - t
    return num // factorial(k)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1-z)^pole_order in lowest terms with respect to (1-z)."""

    numerator: IntPolynomial
    pole_order: int

    def __post_init__(self):
        if self.pole_order < 0:
            raise ValueError("negative pole order")
        if not self.numerator.is_zero and self.pole_order > 0 and self.numerator.evaluate(1) == 0:
            raise ValueError("numerator still divisible by (1-z)")

    def __str__(self) -> str:
        num = f"({self.numerator})" if len(self.numerator.coeffs) > 1 else str(self.numerator)
        if self.pole_order == 0:
            return num
        den = "(1-z)" if self.pole_order == 1 else f"(1-z)^{self.pole_order}"
        return f"{num} / {den}"


def series_from_f(f: FVector) -> HilbertSeries:
    """Hilbert series of the face ring: sum of f_{i-1} z^i / (1-z)^i terms.

    Summed over the common denominator (1-z)^d and reduced to lowest terms in
    (1-z).  For a genuine f-vector the numerator coefficients are exactly the
    h-vector and no reduction occurs, since their sum f_{d-1} is positive.
    """
    d = f.d
    num = ZERO
    for k in range(d + 1):
        num = num + one_minus_z_pow(d - k).shift(k).scale(f.entries[k])
    pole = d
    while pole > 0 and not num.is_zero and num.evaluate(1) == 0:
        num = divide_by_one_minus_z(num)
        pole -= 1
    return HilbertSeries(num, pole)


def multiplicity(h: HVector) -> int:
    """The normalized leading coefficient of the Hilbert polynomial: sum of h."""
    return h.total()


@dataclass(frozen=True)
class HilbertPolynomial:
    """Coefficients (m_0, ..., m_{d-1}) over the basis C(z, d-1), ..., C(z, 0).

    Empty for d = 0 (the zero polynomial of a finite-dimensional module).
    m_0 is the multiplicity whenever d >= 1.
    """

    binom_coeffs: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.binom_coeffs)

    @property
    def leading(self) -> int:
        return self.binom_coeffs[0] if self.binom_coeffs else 0

    def evaluate(self, s: int) -> int:
        d = self.d
        return sum(m * binom_int(s, d - 1 - j) for j, m in enumerate(self.binom_coeffs))


def hilbert_polynomial(h: HVector, d: int) -> HilbertPolynomial:
    """Expand sum h_i z^i / (1-z)^d into the falling binomial basis.

    The value at s >> 0 is sum_i h_i C(s - i + d - 1, d - 1); evaluating that
    at s = 0..d-1 and taking forward differences yields the basis
    coefficients.  d = 0 returns the empty (zero) polynomial.
    """
    if d < 0:
        raise ValueError("negative dimension")
    if d == 0:
        return HilbertPolynomial(())
    vals = [
        sum(h.get(i) * binom_int(s - i + d - 1, d - 1) for i in range(h.d + 1))
        for s in range(d)
    ]
    coeffs = [0] * d
    row = vals
    for r in range(d):
        coeffs[d - 1 - r] = row[0]
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return HilbertPolynomial(tuple(coeffs))


def numerator_from_resolution(p: int, degrees: Sequence[int], betti: Sequence[int]) -> IntPolynomial:
    """1 + sum_i (-1)^(i+1) beta_i z^(d_i), the series numerator over (1-z)^n."""
    degrees = tuple(degrees)
    betti = tuple(betti)
    if len(degrees) != p + 1 or len(betti) != p + 1:
        raise ValueError("need p+1 degrees and p+1 Betti numbers")
    if any(b <= 0 for b in betti):
        raise ValueError("Betti numbers must be positive")
    if any(degrees[i] >= degrees[i + 1] for i in range(p)) or (degrees and degrees[0] < 1):
        raise ValueError("degrees must be strictly increasing and >= 1")
    out = [0] * (degrees[-1] + 1)
    out[0] = 1
    for i in range(p + 1):
        out[degrees[i]] += (-1) ** (i + 1) * betti[i]
    return IntPolynomial(tuple(out))


def verify_series_identity(
    h: HVector,
    n: int,
    d: int,
    p: int,
    degrees: Sequence[int],
    betti: Sequence[int],
) -> IntPolynomial:
    """Residual of the numerator identity relating h-vector and resolution data.

    Returns (1-z)^(n-d) * sum h_i z^i minus (1 + sum (-1)^(i+1) beta_i z^(d_i));
    the zero polynomial iff the identity holds.
    """
    if n < d:
        raise ValueError("need n >= d")
    lhs = one_minus_z_pow(n - d) * IntPolynomial(h.entries)
    rhs = numerator_from_resolution(p, degrees, betti)
    return lhs - rhs
