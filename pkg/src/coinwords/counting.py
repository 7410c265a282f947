"""Exact integer sequences a(n) of first-occurrence counts.

a(n) is the number of length-n toss records whose first occurrence of a
pattern ends at toss n.  Patterns of length 2 or 3 have built-in linear
recurrences with small integer coefficients; arbitrary patterns are counted
by a dynamic program over the prefix-match states of the pattern automaton.
All arithmetic uses Python's unbounded integers.
"""

from dataclasses import dataclass

from .words import Word, brute_force_count

__all__ = [
    "ESSENTIAL_WORDS",
    "CountSequence",
    "RecurrenceSpec",
    "automaton_counts",
    "builtin_spec",
    "counts",
    "extend_counts",
    "transition_table",
]

ESSENTIAL_WORDS = tuple(Word(s) for s in ("HT", "HH", "HHH", "HHT", "HTT", "HTH"))

# representative letters -> (coefficients, initial values); coefficients apply
# to the most recent terms first: a(n) = sum(c[i] * a(n - 1 - i))
_BUILTIN = {
    "HT": ((2, -1), (0, 1)),
    "HH": ((1, 1), (0, 1)),
    "HHH": ((1, 1, 1), (0, 0, 1)),
    "HHT": ((2, 0, -1), (0, 0, 1)),
    "HTT": ((2, 0, -1), (0, 0, 1)),
    "HTH": ((2, -1, 1), (0, 0, 1)),
}


@dataclass(frozen=True)
class RecurrenceSpec:
    """Linear recurrence a(n) = sum(coefficients[i] * a(n-1-i)), seeded by initial_values."""

    order: int
    coefficients: tuple[int, ...]
    initial_values: tuple[int, ...]
    word: Word | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"recurrence order must be >= 1, got {self.order}")
        if len(self.coefficients) != self.order:
            raise ValueError("need exactly one coefficient per order")
        if len(self.initial_values) != self.order:
            raise ValueError("need exactly one initial value per order")


@dataclass(frozen=True)
class CountSequence:
    """First-occurrence counts indexed from n = 1."""

    word: Word | None
    values: tuple[int, ...]

    def at(self, n: int) -> int:
        """a(n) for 1 <= n <= len(self)."""
        if n < 1:
            raise IndexError(f"counts are indexed from n = 1, got {n}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def to_csv(self) -> str:
        lines = ["n,a_W(n)"]
        lines.extend(f"{n},{v}" for n, v in enumerate(self.values, start=1))
        return "\n".join(lines) + "\n"


def builtin_spec(w: Word) -> RecurrenceSpec:
    """The built-in recurrence for a pattern of length 2 or 3.

    Complement pairs share one spec: TTH gets the HHT recurrence, and so on.
    """
    rep = w.representative().letters
    if rep not in _BUILTIN:
        if len(w) >= 4:
            raise ValueError(
                f"no built-in recurrence for {w} (length {len(w)}): "
                "use automaton_counts for longer patterns"
            )
        raise ValueError(
            f"no built-in recurrence for {w}: only lengths 2 and 3 are covered"
        )
    coeffs, init = _BUILTIN[rep]
    return RecurrenceSpec(
        order=len(coeffs), coefficients=coeffs, initial_values=init, word=w
    )


def extend_counts(spec: RecurrenceSpec, n_max: int) -> CountSequence:
    """Run the recurrence out to ``n_max`` terms, exactly."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    values = list(spec.initial_values[:n_max])
    for _ in range(len(values), n_max):
        values.append(sum(c * values[-1 - i] for i, c in enumerate(spec.coefficients)))
    return CountSequence(word=spec.word, values=tuple(values))


def transition_table(w: Word) -> list[list[int]]:
    """Prefix-match automaton transitions.

    State s in 0..N-1 is the length of the longest proper prefix of ``w``
    matching the current toss suffix; row s is (next state on T, next state
    on H).  State N means the pattern just completed and is absorbing.
    Fallbacks use the classical longest-suffix-that-is-a-prefix function.
    """
    letters = w.letters
    size = len(letters)
    fail = [0] * size
    k = 0
    for i in range(1, size):
        while k and letters[i] != letters[k]:
            k = fail[k - 1]
        if letters[i] == letters[k]:
            k += 1
        fail[i] = k
    table = [[0, 0] for _ in range(size + 1)]
    table[0][letters[0] == "H"] = 1
    for s in range(1, size):
        table[s] = list(table[fail[s - 1]])
        table[s][letters[s] == "H"] = s + 1
    table[size] = [size, size]
    return table


def automaton_counts(w: Word, n_max: int) -> CountSequence:
    """Count first completions at each toss via the prefix automaton.

    Tracks how many length-t strings sit in each non-completed state; paths
    entering the full-match state are counted once and removed, which is
    exactly the first-occurrence condition.  Agrees with brute_force_count
    for every word and toss count, with no enumeration cap.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    table = transition_table(w)
    size = len(w)
    state_counts = [0] * size
    state_counts[0] = 1
    values = []
    for _ in range(n_max):
        nxt = [0] * size
        completed = 0
        for s, cnt in enumerate(state_counts):
            if not cnt:
                continue
            for b in (0, 1):
                t = table[s][b]
                if t == size:
                    completed += cnt
                else:
                    nxt[t] += cnt
        values.append(completed)
        state_counts = nxt
    return CountSequence(word=w, values=tuple(values))


def counts(w: Word, n_max: int, engine: str = "auto") -> CountSequence:
    """Counts for ``w`` up to ``n_max`` using the requested engine.

    ``auto`` picks the built-in recurrence when available, the automaton
    otherwise.  ``brute`` is capped (see words.enumeration_cap) and intended
    for cross-validation.
    """
    if engine == "auto":
        engine = "recurrence" if w.representative().letters in _BUILTIN else "automaton"
    if engine == "recurrence":
        return extend_counts(builtin_spec(w), n_max)
    if engine == "automaton":
        return automaton_counts(w, n_max)
    if engine == "brute":
        values = tuple(brute_force_count(w, n) for n in range(1, n_max + 1))
        return CountSequence(word=w, values=values)
    raise ValueError(
        f"unknown engine {engine!r}: expected recurrence, automaton, or brute"
    )
