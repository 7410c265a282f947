import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coinwords.counting import (
    ESSENTIAL_WORDS,
    CountSequence,
    RecurrenceSpec,
    automaton_counts,
    builtin_spec,
    counts,
    extend_counts,
    transition_table,
)
from coinwords.words import Word, brute_force_count

# First 15 terms for the length-3 patterns, frozen from the reference tables.
GOLDEN_ROWS = {
    "HHH": (0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927),
    "HTT": (0, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609),
    "HHT": (0, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376, 609),
    "HTH": (0, 0, 1, 2, 3, 5, 9, 16, 28, 49, 86, 151, 265, 465, 816),
}

words_st = st.lists(st.sampled_from("HT"), min_size=1, max_size=5).map(
    lambda ls: Word("".join(ls))
)


class TestBuiltinSpec:
    @pytest.mark.parametrize(
        "letters,coeffs,init",
        [
            ("HT", (2, -1), (0, 1)),
            ("TH", (2, -1), (0, 1)),
            ("HH", (1, 1), (0, 1)),
            ("TT", (1, 1), (0, 1)),
            ("HHH", (1, 1, 1), (0, 0, 1)),
            ("TTT", (1, 1, 1), (0, 0, 1)),
            ("HHT", (2, 0, -1), (0, 0, 1)),
            ("HTT", (2, 0, -1), (0, 0, 1)),
            ("TTH", (2, 0, -1), (0, 0, 1)),
            ("THH", (2, 0, -1), (0, 0, 1)),
            ("HTH", (2, -1, 1), (0, 0, 1)),
            ("THT", (2, -1, 1), (0, 0, 1)),
        ],
    )
    def test_table(self, letters, coeffs, init):
        spec = builtin_spec(Word(letters))
        assert spec.coefficients == coeffs
        assert spec.initial_values == init
        assert spec.order == len(coeffs)

    def test_rejects_long_words_pointing_at_automaton(self):
        with pytest.raises(ValueError, match="automaton_counts"):
            builtin_spec(Word("HTHT"))

    def test_rejects_single_letter(self):
        with pytest.raises(ValueError, match="lengths 2 and 3"):
            builtin_spec(Word("H"))

    def test_spec_shape_validation(self):
        with pytest.raises(ValueError):
            RecurrenceSpec(order=2, coefficients=(1,), initial_values=(0, 1))
        with pytest.raises(ValueError):
            RecurrenceSpec(order=2, coefficients=(1, 1), initial_values=(0,))


class TestExtendCounts:
    def test_hh_first_six(self):
        seq = extend_counts(builtin_spec(Word("HH")), 6)
        assert seq.values == (0, 1, 1, 2, 3, 5)

    def test_ht_first_five(self):
        seq = extend_counts(builtin_spec(Word("HT")), 5)
        assert seq.values == (0, 1, 2, 3, 4)

    @pytest.mark.parametrize("letters,row", sorted(GOLDEN_ROWS.items()))
    def test_golden_rows(self, letters, row):
        seq = extend_counts(builtin_spec(Word(letters)), 15)
        assert seq.values == row

    def test_truncation_below_order(self):
        seq = extend_counts(builtin_spec(Word("HHH")), 2)
        assert seq.values == (0, 0)

    def test_at_is_one_indexed(self):
        seq = extend_counts(builtin_spec(Word("HH")), 6)
        assert seq.at(1) == 0 and seq.at(6) == 5
        with pytest.raises(IndexError):
            seq.at(0)


class TestAutomaton:
    def test_transition_table_shape(self):
        table = transition_table(Word("HTH"))
        assert len(table) == 4
        assert table[3] == [3, 3]  # completion state is absorbing

    def test_hhh_matches_golden_row(self):
        assert automaton_counts(Word("HHH"), 15).values == GOLDEN_ROWS["HHH"]

    def test_hh_is_fibonacci_prefix(self):
        seq = automaton_counts(Word("HH"), 10)
        assert seq.values == (0, 1, 1, 2, 3, 5, 8, 13, 21, 34)

    def test_htht_matches_enumeration(self):
        w = Word("HTHT")
        seq = automaton_counts(w, 12)
        for n in range(1, 13):
            assert seq.at(n) == brute_force_count(w, n)

    @given(words_st, st.integers(min_value=1, max_value=12))
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_enumeration(self, w, n):
        assert automaton_counts(w, n).at(n) == brute_force_count(w, n)

    @given(words_st)
    @settings(max_examples=40, deadline=None)
    def test_complement_invariance(self, w):
        assert (
            automaton_counts(w, 20).values
            == automaton_counts(w.complement(), 20).values
        )

    @given(words_st)
    @settings(max_examples=30, deadline=None)
    def test_counts_bounded_by_two_to_n(self, w):
        seq = automaton_counts(w, 16)
        for n in range(1, 17):
            assert 0 <= seq.at(n) <= 2**n


class TestSequenceIdentities:
    def test_ht_counts_are_n_minus_one(self):
        seq = extend_counts(builtin_spec(Word("HT")), 1000)
        assert all(seq.at(n) == n - 1 for n in range(1, 1001))

    def test_hht_and_htt_sequences_identical(self):
        a = extend_counts(builtin_spec(Word("HHT")), 200)
        b = extend_counts(builtin_spec(Word("HTT")), 200)
        assert a.values == b.values

    def test_hhh_summing_property(self):
        seq = extend_counts(builtin_spec(Word("HHH")), 203)
        for n in range(1, 201):
            assert seq.at(n + 3) == seq.at(n + 2) + seq.at(n + 1) + seq.at(n)

    def test_partial_probability_sums_approach_one(self):
        for w in ESSENTIAL_WORDS:
            seq = extend_counts(builtin_spec(w), 200)
            total = 0
            for v in seq.values:
                total = (total << 1) + v
            # total / 2**200 >= 1 - 1e-6
            assert total * 10**6 >= (10**6 - 1) * (1 << 200)


class TestOracleTriangle:
    @pytest.mark.parametrize("w", [w for e in ESSENTIAL_WORDS for w in (e, e.complement())], ids=str)
    def test_three_engines_agree(self, w):
        rec = extend_counts(builtin_spec(w), 14)
        auto = automaton_counts(w, 14)
        for n in range(1, 15):
            b = brute_force_count(w, n)
            assert rec.at(n) == auto.at(n) == b, f"{w} at n={n}"


class TestCountsDispatch:
    def test_engines_by_name(self):
        w = Word("HH")
        assert counts(w, 8, "recurrence").values == counts(w, 8, "automaton").values
        assert counts(w, 8, "brute").values == counts(w, 8, "auto").values

    def test_auto_falls_back_to_automaton_for_long_words(self):
        assert counts(Word("HTHT"), 6).at(4) == 1

    def test_rejects_unknown_engine(self):
        with pytest.raises(ValueError, match="unknown engine"):
            counts(Word("HH"), 5, engine="psychic")


class TestCsv:
    def test_round_trip(self):
        seq = counts(Word("HTH"), 15)
        text = seq.to_csv()
        lines = text.strip().splitlines()
        assert lines[0] == "n,a_W(n)"
        parsed = [tuple(map(int, line.split(","))) for line in lines[1:]]
        assert parsed == [(n, seq.at(n)) for n in range(1, 16)]
        rebuilt = CountSequence(word=seq.word, values=tuple(v for _, v in parsed))
        assert rebuilt.values == seq.values
