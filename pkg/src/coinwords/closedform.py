"""Floating-point closed forms for the counts, with a measured trust range.

Each built-in pattern's counts grow like the reciprocal of the smallest root
of its closed-form denominator, and rounding the dominant term to the nearest
integer recovers the exact count as long as double precision can still tell
integers apart.  How far that holds is not assumed: ``certify_horizon``
measures it against the exact recurrence and stores the result.
"""

import math
from dataclasses import dataclass

import numpy as np

from .counting import builtin_spec, extend_counts
from .genfun import closed_gf
from .words import Word

__all__ = [
    "DEFAULT_CERTIFY_PROBE",
    "RESIDUAL_TOL",
    "ClosedFormModel",
    "certify_horizon",
    "closed_form_count",
    "roots_csv",
    "root_formula_count",
    "secondary_term",
    "solve_denominator",
]

GOLDEN = (1 + math.sqrt(5)) / 2
PSI = (1 - math.sqrt(5)) / 2
SQRT5 = math.sqrt(5)

RESIDUAL_TOL = 1e-12
DEFAULT_CERTIFY_PROBE = 70

_REAL_EPS = 1e-9  # imaginary part below this means a real root


@dataclass
class ClosedFormModel:
    """Denominator roots plus the largest n the rounding formula is certified for.

    Roots are ordered real-first by ascending magnitude, then complex with the
    positive-imaginary member of each conjugate pair first.  Only
    ``reliability_horizon`` is ever mutated (by ``certify_horizon``).
    """

    word: Word
    roots: tuple[complex, ...]
    leading_term_scale: complex
    reliability_horizon: int


def _ceval(coeffs: tuple[float, ...], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _polish_root(z: complex, coeffs: tuple[float, ...]) -> complex:
    """Newton refinement; skipped near multiple roots where the slope vanishes."""
    deriv = tuple(k * c for k, c in enumerate(coeffs))[1:]
    for _ in range(4):
        slope = _ceval(deriv, z)
        if abs(slope) < 1e-9:
            break
        step = _ceval(coeffs, z) / slope
        z -= step
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    return z


def _quadratic_roots(coeffs: tuple[float, ...]) -> list[complex]:
    c0, c1, c2 = coeffs
    disc = c1 * c1 - 4 * c2 * c0
    root = math.sqrt(disc) if disc >= 0 else complex(0, math.sqrt(-disc))
    return [(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)]


def _ordered(roots: list[complex]) -> list[complex]:
    reals = sorted(
        (complex(z.real, 0.0) for z in roots if abs(z.imag) < _REAL_EPS),
        key=lambda z: (abs(z), z.real),
    )
    others = sorted(
        (z for z in roots if abs(z.imag) >= _REAL_EPS),
        key=lambda z: (abs(z), -z.imag),
    )
    if len(others) == 2:
        # conjugate pair: pin the symmetry exactly
        others[1] = others[0].conjugate()
    return reals + others


def solve_denominator(w: Word, probe: int = DEFAULT_CERTIFY_PROBE) -> ClosedFormModel:
    """Solve the closed-form denominator and certify the rounding horizon.

    Degree 2 uses the quadratic formula; degree 3 goes through the numpy
    companion-matrix solver with Newton polishing.  Residuals above
    RESIDUAL_TOL indicate a solver failure and raise.
    """
    f = closed_gf(w)
    coeffs = tuple(float(c) for c in f.den.coeffs)
    if len(coeffs) == 3:
        raw = _quadratic_roots(coeffs)
    else:
        raw = [complex(z) for z in np.roots(coeffs[::-1])]
    roots = _ordered([_polish_root(z, coeffs) for z in raw])
    worst = max(abs(_ceval(coeffs, z)) for z in roots)
    if worst > RESIDUAL_TOL:
        raise ArithmeticError(
            f"root polishing for {w} stalled at residual {worst:.3e}"
        )
    rep = w.representative().letters
    if rep in ("HHH", "HTH"):
        a, b, c = roots
        scale = 1.0 / ((a - b) * (a - c))
    elif rep in ("HH", "HHT", "HTT"):
        scale = complex(1 / SQRT5)
    else:
        scale = complex(1.0)
    model = ClosedFormModel(
        word=w, roots=tuple(roots), leading_term_scale=scale, reliability_horizon=0
    )
    certify_horizon(model, probe)
    return model


def _formula_value(model: ClosedFormModel, n: int) -> int:
    """The rounded closed-form count, with no horizon guard."""
    rep = model.word.representative().letters
    if rep == "HT":
        return round(float(n) - 1.0)
    if rep == "HH":
        return round(GOLDEN ** (n - 1) / SQRT5)
    if rep in ("HHT", "HTT"):
        return round(GOLDEN**n / SQRT5) - 1
    if rep == "HTH" and n < 3:
        return 0  # the rounding form only starts at n = 3
    lead = model.leading_term_scale * model.roots[0] ** (2 - n)
    return round(lead.real)


def closed_form_count(model: ClosedFormModel, n: int) -> int:
    """Exact count a(n) computed in double precision and rounded.

    Refuses n beyond the certified horizon, where accumulated floating error
    could silently flip the rounding.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > model.reliability_horizon:
        raise ValueError(
            f"n={n} is beyond the certified horizon {model.reliability_horizon} "
            f"for {model.word}; recertify with certify_horizon to extend"
        )
    return _formula_value(model, n)


def certify_horizon(model: ClosedFormModel, n_probe: int) -> int:
    """Largest n <= n_probe with the rounding formula exact for ALL k <= n.

    Compared term by term against the exact recurrence; the result is stored
    on the model as its new reliability_horizon.
    """
    exact = extend_counts(builtin_spec(model.word), n_probe)
    horizon = 0
    for n in range(1, n_probe + 1):
        if _formula_value(model, n) != exact.at(n):
            break
        horizon = n
    model.reliability_horizon = horizon
    return horizon


def root_formula_count(model: ClosedFormModel, n: int) -> complex:
    """Full three-root expression for a(n), evaluated in complex floats.

    (a**(2-n)(b-c) - b**(2-n)(a-c) + c**(2-n)(a-b)) / (C (a-b)(a-c)(b-c))
    where a, b, c are the denominator roots and C the cubic's leading
    recurrence coefficient.  The value is permutation-invariant in the roots;
    its imaginary part measures only floating noise.
    """
    if len(model.word) != 3:
        raise ValueError("the root formula applies to length-3 words only")
    a, b, c = model.roots
    cc = builtin_spec(model.word).coefficients[2]
    num = (
        a ** (2 - n) * (b - c)
        - b ** (2 - n) * (a - c)
        + c ** (2 - n) * (a - b)
    )
    return num / (cc * (a - b) * (a - c) * (b - c))


def secondary_term(model: ClosedFormModel, n: int) -> float:
    """Magnitude of the part the rounding formula throws away at n.

    Rounding recovers the exact count precisely when this stays below 1/2
    (for HTH that is only claimed from n = 3 on).
    """
    rep = model.word.representative().letters
    if rep == "HT":
        return 0.0
    if rep == "HH":
        return abs(PSI ** (n - 1) / SQRT5)
    if rep in ("HHT", "HTT"):
        return abs(PSI**n / SQRT5)
    lead = model.leading_term_scale * model.roots[0] ** (2 - n)
    return abs(root_formula_count(model, n) - lead)


def roots_csv(model: ClosedFormModel) -> str:
    """CSV of the solved roots, 12 significant digits."""
    lines = ["word,root_re,root_im"]
    lines.extend(
        f"{model.word},{z.real:.12g},{z.imag:.12g}" for z in model.roots
    )
    return "\n".join(lines) + "\n"
