import random
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from mawlab.core import Alphabet
from mawlab.automaton import build_automaton, enumerate_maws_fast
from mawlab.oracle import enumerate_maws_naive

BIN = Alphabet.of("01")
ABC = Alphabet.of("abc")


class TestAutomaton:
    def test_tiny_examples(self):
        assert build_automaton("aa").state_count == 3
        assert build_automaton("").state_count == 1
        sam = build_automaton("abaab")
        assert sam.accepts("aba")
        assert sam.accepts("")
        assert not sam.accepts("bb")
        assert not sam.accepts("abaabx")

    def test_accepts_exactly_the_substrings(self):
        for s in ("abcbc", "bananas", "0110100", "aabbaabb"):
            sam = build_automaton(s)
            subs = {s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)}
            for m in range(1, len(s) + 2):
                for tup in product(sorted(set(s)), repeat=m):
                    w = "".join(tup)
                    assert sam.accepts(w) == (w in subs)
                if m > 3:
                    break  # exhaustive only for short candidates; spot-check the rest
            for i in range(len(s)):
                for j in range(i + 1, len(s) + 1):
                    assert sam.accepts(s[i:j])

    def test_size_bounds_exhaustive(self):
        for n in range(3, 13):
            for tup in product("01", repeat=n):
                s = "".join(tup)
                sam = build_automaton(s)
                assert sam.state_count <= 2 * n - 1, s
                assert sam.transition_count <= 3 * n - 4, s

    def test_size_bounds_random(self):
        rng = random.Random(7)
        for sigma, count in ((2, 150), (4, 150), (26, 150)):
            symbols = "abcdefghijklmnopqrstuvwxyz"[:sigma]
            for _ in range(count):
                n = rng.randint(3, 200)
                s = "".join(rng.choices(symbols, k=n))
                sam = build_automaton(s)
                assert sam.state_count <= 2 * n - 1
                assert sam.transition_count <= 3 * n - 4


class TestFastEnumerator:
    def test_golden(self):
        abcd = Alphabet.of("abcd")
        assert enumerate_maws_fast("cbaaaa", abcd).words == enumerate_maws_naive("cbaaaa", abcd).words
        assert enumerate_maws_fast("a", Alphabet.of("a")).words == ("aa",)
        assert enumerate_maws_fast("", BIN).words == ("0", "1")

    def test_oracle_equivalence_exhaustive_binary(self):
        for n in range(0, 13):
            for tup in product("01", repeat=n):
                s = "".join(tup)
                assert enumerate_maws_fast(s, BIN).words == enumerate_maws_naive(s, BIN).words, s

    def test_oracle_equivalence_exhaustive_ternary(self):
        for n in range(0, 9):
            for tup in product("abc", repeat=n):
                s = "".join(tup)
                assert enumerate_maws_fast(s, ABC).words == enumerate_maws_naive(s, ABC).words, s

    def test_oracle_equivalence_random(self):
        rng = random.Random(42)
        for sigma in (2, 4, 26):
            symbols = "abcdefghijklmnopqrstuvwxyz"[:sigma]
            alphabet = Alphabet.of(symbols)
            for _ in range(120):
                n = rng.randint(1, 120)
                s = "".join(rng.choices(symbols, k=n))
                assert enumerate_maws_fast(s, alphabet).words == enumerate_maws_naive(s, alphabet).words

    @settings(max_examples=200)
    @given(st.text(alphabet="ab", max_size=60))
    def test_oracle_equivalence_property(self, s):
        ab = Alphabet.of("ab")
        assert enumerate_maws_fast(s, ab).words == enumerate_maws_naive(s, ab).words
