"""Exact probabilities, tails, and moments of first-occurrence waiting times.

Every fair-coin probability here is a dyadic rational a(n)/2**n, so the
module keeps an exact dyadic type for distribution values and plain
``fractions.Fraction`` for moments.  Floating point only ever appears in the
displayed standard deviation.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import counts
from .genfun import closed_gf
from .words import Word

__all__ = [
    "DyadicRational",
    "WordStats",
    "cdf",
    "closed_tail",
    "moments",
    "partial_moment_sums",
    "pmf",
    "tail",
    "threshold",
]

_THRESHOLD_LIMIT = 100_000  # scan guard; tails decay geometrically long before this


@dataclass(frozen=True)
class DyadicRational:
    """numerator / 2**exponent, canonical with an odd (or zero) numerator."""

    numerator: int
    exponent: int

    def __post_init__(self) -> None:
        num, k = self.numerator, self.exponent
        if num < 0:
            raise ValueError(f"dyadic numerator must be >= 0, got {num}")
        if k < 0:
            raise ValueError(f"dyadic exponent must be >= 0, got {k}")
        if num == 0:
            k = 0
        else:
            while num % 2 == 0 and k > 0:
                num //= 2
                k -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        return self.numerator / (1 << self.exponent)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        k = max(self.exponent, other.exponent)
        num = (self.numerator << (k - self.exponent)) + (
            other.numerator << (k - other.exponent)
        )
        return DyadicRational(num, k)

    def __sub__(self, other: "DyadicRational") -> "DyadicRational":
        k = max(self.exponent, other.exponent)
        num = (self.numerator << (k - self.exponent)) - (
            other.numerator << (k - other.exponent)
        )
        if num < 0:
            raise ValueError("dyadic subtraction went negative")
        return DyadicRational(num, k)

    def _cmp_key(self, other: "DyadicRational | Fraction | int") -> Fraction:
        if isinstance(other, DyadicRational):
            return other.as_fraction()
        return Fraction(other)

    def __lt__(self, other) -> bool:
        return self.as_fraction() < self._cmp_key(other)

    def __le__(self, other) -> bool:
        return self.as_fraction() <= self._cmp_key(other)

    def __gt__(self, other) -> bool:
        return self.as_fraction() > self._cmp_key(other)

    def __ge__(self, other) -> bool:
        return self.as_fraction() >= self._cmp_key(other)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


DYADIC_ZERO = DyadicRational(0, 0)
DYADIC_ONE = DyadicRational(1, 0)


@dataclass(frozen=True)
class WordStats:
    """Exact mean and variance of the waiting time, stddev as a float."""

    word: Word
    mean: Fraction
    variance: Fraction
    stddev: float


def pmf(w: Word, n: int) -> DyadicRational:
    """P(first occurrence ends exactly at toss n) = a(n)/2**n."""
    if n < 1:
        raise ValueError(f"toss index must be >= 1, got {n}")
    return DyadicRational(counts(w, n).at(n), n)


def cdf(w: Word, m: int) -> DyadicRational:
    """P(first occurrence within the first m tosses); m = 0 gives 0."""
    if m < 0:
        raise ValueError(f"toss count must be >= 0, got {m}")
    if m == 0:
        return DYADIC_ZERO
    seq = counts(w, m)
    total = 0
    for v in seq.values:
        total = (total << 1) + v
    return DyadicRational(total, m)


def tail(w: Word, n: int) -> DyadicRational:
    """P(first occurrence needs at least n tosses) = 1 - cdf(n - 1)."""
    if n < 1:
        raise ValueError(f"toss index must be >= 1, got {n}")
    return DYADIC_ONE - cdf(w, n - 1)


def closed_tail(w: Word, n: int) -> DyadicRational:
    """Tail probability via the per-pattern closed identities in the counts.

    An independent route to the same value as :func:`tail`:

      HT       n / 2**(n-1)
      HH       a(n+2) / 2**(n-1)
      HHH      (2 a(n+2) - a(n-1)) / 2**(n-1)
      HHT/HTT  (2 a(n+1) - a(n-1)) / 2**(n-1)
      HTH      (2 a(n+1) + a(n-1)) / 2**(n-1)

    Each identity holds from n = 2 on (n = 1 is trivially 1: the pattern
    cannot have occurred before any toss).  Built-in patterns only.
    """
    if n < 1:
        raise ValueError(f"toss index must be >= 1, got {n}")
    rep = w.representative().letters
    if n == 1:
        return DYADIC_ONE
    if rep == "HT":
        return DyadicRational(n, n - 1)
    seq = counts(w, n + 2, engine="recurrence")  # raises for unsupported words
    if rep == "HH":
        num = seq.at(n + 2)
    elif rep == "HHH":
        num = 2 * seq.at(n + 2) - seq.at(n - 1)
    elif rep in ("HHT", "HTT"):
        num = 2 * seq.at(n + 1) - seq.at(n - 1)
    else:  # HTH
        num = 2 * seq.at(n + 1) + seq.at(n - 1)
    return DyadicRational(num, n - 1)


def moments(w: Word) -> WordStats:
    """Exact mean and variance from derivatives of the closed form at 1/2.

    mean = f'(1/2)/2 and variance = f''(1/2)/4 + mean - mean**2, valid because
    every built-in denominator's smallest root lies strictly beyond 1/2.
    """
    f = closed_gf(w)
    half = Fraction(1, 2)
    d1 = f.derivative()
    mean = half * d1(half)
    second = Fraction(1, 4) * d1.derivative()(half) + mean
    variance = second - mean * mean
    return WordStats(word=w, mean=mean, variance=variance, stddev=math.sqrt(variance))


def threshold(w: Word, q: Fraction | float | str) -> int:
    """Smallest n with tail(w, n) <= q, for 0 < q <= 1.

    Scans the single-pass partial sums of the pmf; the tail is strictly
    decreasing once n reaches the pattern length, so the scan terminates.
    """
    q = Fraction(q)
    if not 0 < q <= 1:
        raise ValueError(f"quantile must satisfy 0 < q <= 1, got {q}")
    target = 1 - q  # tail(n) <= q  <=>  cdf(n-1) >= 1 - q
    seq = counts(w, 64)
    partial = Fraction(0)
    for n in itertools.count(1):
        if partial >= target:
            return n
        if n > len(seq):
            seq = counts(w, 2 * len(seq))
        partial += Fraction(seq.at(n), 1 << n)
        if n > _THRESHOLD_LIMIT:
            raise RuntimeError(f"threshold scan for {w} passed n = {n}")
    raise AssertionError("unreachable")


def partial_moment_sums(w: Word, n_max: int) -> tuple[Fraction, Fraction]:
    """Exact truncated sums (sum n p(n), sum n**2 p(n)) for n <= n_max."""
    seq = counts(w, n_max)
    num1 = 0
    num2 = 0
    for n, a in enumerate(seq.values, start=1):
        shift = n_max - n
        num1 += (n * a) << shift
        num2 += (n * n * a) << shift
    den = 1 << n_max
    return Fraction(num1, den), Fraction(num2, den)
