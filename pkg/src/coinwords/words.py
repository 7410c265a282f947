"""Binary pattern words over the alphabet {H, T} and the enumeration oracle.

Outcome strings (full toss records) are plain ``str`` values over the same
alphabet.  The enumeration oracle iterates outcomes as integers with H = bit 1
and T = bit 0, first toss in the most significant position, so substring
tests reduce to shifts and masks.
"""

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "ENUMERATION_CAP_ENV",
    "Word",
    "all_words",
    "brute_force_count",
    "enumeration_cap",
    "first_occurrence_ends_at",
    "parse_word",
]

DEFAULT_ENUMERATION_CAP = 24
ENUMERATION_CAP_ENV = "COINWORDS_ENUM_CAP"

_COMPLEMENT = str.maketrans("HT", "TH")
_CHUNK = 1 << 22  # outcome integers per numpy block


@dataclass(frozen=True)
class Word:
    """A nonempty pattern over {H, T} in canonical uppercase form."""

    letters: str

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("word must have at least one letter")
        for pos, ch in enumerate(self.letters, start=1):
            if ch not in "HT":
                raise ValueError(
                    f"invalid letter {ch!r} at position {pos}: words use only H and T"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def complement(self) -> "Word":
        """The word with every H replaced by T and vice versa."""
        return Word(self.letters.translate(_COMPLEMENT))

    def representative(self) -> "Word":
        """The H-initial member of this word's complement-symmetry pair.

        Counts, probabilities, and closed forms are invariant under swapping
        H and T, so tables only need to be stored for H-initial words.
        """
        return self if self.letters[0] == "H" else self.complement()

    def bits(self) -> int:
        """Integer encoding of the letters, first letter most significant, H = 1."""
        value = 0
        for ch in self.letters:
            value = (value << 1) | (ch == "H")
        return value


def parse_word(text: str) -> Word:
    """Parse ``text`` into a :class:`Word`, accepting lowercase letters.

    Raises ``ValueError`` for an empty string or for any character outside
    {H, T, h, t}, naming the offending character and its 1-based position.
    """
    if not text:
        raise ValueError("empty word: expected a nonempty string over {H, T}")
    for pos, ch in enumerate(text, start=1):
        if ch not in "HTht":
            raise ValueError(
                f"invalid character {ch!r} at position {pos}: expected H or T"
            )
    return Word(text.upper())


def first_occurrence_ends_at(outcome: str, w: Word) -> bool:
    """True iff ``w`` first occurs in ``outcome`` ending exactly at the last toss.

    An occurrence anywhere earlier disqualifies the string, and occurrences
    may overlap (HH ends at positions 2 and 3 of HHH).
    """
    pattern = w.letters
    if not outcome.endswith(pattern):
        return False
    return outcome.find(pattern) == len(outcome) - len(pattern)


def enumeration_cap() -> int:
    """Current cap on brute-force toss counts (overridable via the environment)."""
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENUMERATION_CAP_ENV} must be an integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise ValueError(f"{ENUMERATION_CAP_ENV} must be positive, got {cap}")
    return cap


def brute_force_count(w: Word, n: int, cap: int | None = None) -> int:
    """Count length-``n`` outcome strings whose first occurrence of ``w`` ends at toss ``n``.

    Enumerates all 2**n outcomes as integers in fixed-size numpy blocks.  The
    result is independent of the block partitioning, and this path is kept
    deliberately independent of the recurrence and automaton engines so it can
    serve as their oracle.
    """
    if n < 1:
        raise ValueError(f"toss count must be >= 1, got {n}")
    if cap is None:
        cap = enumeration_cap()
    if n > cap:
        raise ValueError(
            f"toss count {n} exceeds the enumeration cap {cap}; raise it "
            f"explicitly or via {ENUMERATION_CAP_ENV} to enumerate 2**{n} strings"
        )
    if n > 62:
        raise ValueError("enumeration beyond 62 tosses is not supported")
    size = len(w)
    if n < size:
        return 0
    wbits = w.bits()
    mask = (1 << size) - 1
    total = 0
    for lo in range(0, 1 << n, _CHUNK):
        hi = min(lo + _CHUNK, 1 << n)
        xs = np.arange(lo, hi, dtype=np.int64)
        ok = (xs & mask) == wbits
        # window ending at toss p < n sits at shift n - p
        for shift in range(1, n - size + 1):
            ok &= ((xs >> shift) & mask) != wbits
        total += int(np.count_nonzero(ok))
    return total


def all_words(length: int) -> Iterator[Word]:
    """Yield every word of the given length, H before T at each position."""
    if length < 1:
        raise ValueError(f"word length must be >= 1, got {length}")
    for combo in itertools.product("HT", repeat=length):
        yield Word("".join(combo))
