"""Exact polynomial and rational-function arithmetic over the rationals.

The power series of interest carry the first-occurrence counts a(n) as
coefficients: ``finite_gf`` is the degree-m partial sum with a(n) on x**n,
and every built-in pattern has a closed rational form whose Taylor expansion
at 0 reproduces the whole sequence.  Evaluating the partial sum at 1/2 gives
the probability of seeing the pattern within m tosses, which is what makes
these objects worth manipulating exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .counting import builtin_spec, counts, extend_counts
from .words import Word

__all__ = [
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "closed_gf",
    "finite_gf",
    "poly_gcd",
    "truncation_remainder",
]

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a zero of its denominator."""


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree; trailing zeros trimmed, zero = ()."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        return cls((0,) * power + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        mixed = list(a)
        for i, c in enumerate(b):
            mixed[i] += c
        return Polynomial(tuple(mixed))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            factor = rem[k + other.degree] / lead
            if factor:
                quot[k] = factor
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= factor * c
        return Polynomial(tuple(quot)), Polynomial(tuple(rem))

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = "x" if k == 1 else f"x^{k}"
            else:
                body = f"{mag}*x" if k == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a * (Fraction(1) / a.coeffs[-1])


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Quotient of two exact polynomials; equality is by cross-multiplication."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")

    def reduced(self) -> "RationalFunction":
        """Divide out the polynomial gcd and rescale.

        The lowest-order nonzero denominator coefficient is scaled to +1 or
        -1 (sign preserved), which keeps the printable built-in forms fixed.
        """
        num, den = self.num, self.den
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = divmod(num, g)[0]
            den = divmod(den, g)[0]
        anchor = next(c for c in den.coeffs if c != 0)
        scale = Fraction(1) / abs(anchor)
        if scale != 1:
            num = num * scale
            den = den * scale
        return RationalFunction(num, den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFunction | Scalar") -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def derivative(self) -> "RationalFunction":
        """Quotient-rule derivative, left unreduced (reduction happens on demand)."""
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x: Scalar) -> Fraction:
        bottom = self.den(x)
        if bottom == 0:
            raise PoleError(f"denominator vanishes at x = {x}")
        return self.num(x) / bottom

    def series(self, n_max: int) -> tuple[Fraction, ...]:
        """Taylor coefficients c_0..c_n_max at 0.

        Driven by the denominator's induced recurrence on the coefficient
        stream: q_0 c_n = p_n - sum(q_k c_{n-k}), so the only divisions are
        by the constant term, which must be nonzero.
        """
        q = self.den.coeffs
        if not q or q[0] == 0:
            raise ValueError(
                "denominator has zero constant term: no Taylor expansion at 0"
            )
        out: list[Fraction] = []
        for n in range(n_max + 1):
            acc = self.num.coefficient(n)
            for k in range(1, min(n, len(q) - 1) + 1):
                acc -= q[k] * out[n - k]
            out.append(acc / q[0])
        return tuple(out)

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"


def finite_gf(w: Word, m: int) -> Polynomial:
    """Partial sum polynomial: coefficient of x**n is a(n) for 1 <= n <= m."""
    seq = counts(w, m)
    return Polynomial((Fraction(0),) + tuple(Fraction(v) for v in seq.values))


def closed_gf(w: Word) -> RationalFunction:
    """Closed rational form whose Taylor coefficients at 0 are the counts a(n).

    Only patterns of length 2 or 3 are covered; complements share one form.
    For length 3 the denominator is C x**3 + B x**2 + A x - 1 with (A, B, C)
    the recurrence coefficients.
    """
    rep = w.representative().letters
    if rep == "HT":
        return RationalFunction(Polynomial((0, 0, 1)), Polynomial((1, -2, 1)))
    if rep == "HH":
        return RationalFunction(Polynomial((0, 0, -1)), Polynomial((-1, 1, 1)))
    if len(rep) == 3:
        a, b, c = builtin_spec(w).coefficients
        return RationalFunction(Polynomial((0, 0, 0, -1)), Polynomial((-1, a, b, c)))
    raise ValueError(
        f"no closed generating function for {w} (length {len(w)}): "
        "only lengths 2 and 3 are covered"
    )


def truncation_remainder(w: Word, m: int) -> Polynomial:
    """The remainder polynomial R_m with finite_gf(w, m) * den == num * (1 - R_m).

    R_m = a(m+1) x**(m-2) + (B a(m) + C a(m-1)) x**(m-1) + C a(m) x**m for the
    length-3 built-ins, where (A, B, C) are the recurrence coefficients.
    """
    if len(w) != 3:
        raise ValueError("the truncation identity is only defined for length-3 words")
    if m < 2:
        raise ValueError(f"truncation remainder needs m >= 2, got {m}")
    spec = builtin_spec(w)
    _, b, c = spec.coefficients
    seq = extend_counts(spec, m + 1)
    return (
        Polynomial.monomial(m - 2, seq.at(m + 1))
        + Polynomial.monomial(m - 1, b * seq.at(m) + c * seq.at(m - 1))
        + Polynomial.monomial(m, c * seq.at(m))
    )
