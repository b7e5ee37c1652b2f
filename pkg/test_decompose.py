import random

import pytest

import catalogue
from automaton import build_letter_dfao, enumerate_language, evaluate
from decompose import (
    decompose,
    is_admissible,
    lemma_bound_holds,
    letter_by_division,
    locate,
    quotient_remainder,
    tail,
)
from periodic import expand_segment
from substitution import iterate
from test_substitution import BUNDLED
from utils import parse_digits

# tail of ψ_T at letter a, for p = 1, 2, 3 and n = 0, 1, ...
TRIBONACCI_TAILS = {
    1: ["0", "1"],
    2: ["00", "01", "10", "11"],
    3: ["000", "001", "010", "011", "100", "101", "110"],
}


@pytest.mark.parametrize("p", sorted(TRIBONACCI_TAILS))
def test_tribonacci_tail_table(psi_t, p):
    assert [tail(psi_t, p, "a", n) for n in range(len(TRIBONACCI_TAILS[p]))] == [
        parse_digits(w) for w in TRIBONACCI_TAILS[p]
    ]


def test_tail_out_of_range(psi_t):
    with pytest.raises(ValueError, match="out of range"):
        tail(psi_t, 3, "a", 7)
    with pytest.raises(ValueError, match="out of range"):
        tail(psi_t, 3, "a", -1)


def test_decompose(phi, psi_t):
    seq = decompose(phi, 2, "a", 2)
    assert seq.entries == ((("a",), "b"), ((), "a"))
    assert seq.digits == (1, 0)
    seq = decompose(psi_t, 3, "a", 6)
    assert seq.letter == "a"
    assert seq.digits == (1, 1, 0)
    seq = decompose(psi_t, 4, "b", 0)
    assert all(prefix == () for prefix, _ in seq.entries)
    assert seq.letter == iterate(psi_t, "b", 4)[0]


def test_decompose_at_level_zero(phi):
    seq = decompose(phi, 0, "b", 0)
    assert seq.entries == ()
    assert seq.letter == "b"


@pytest.mark.parametrize("name", BUNDLED)
def test_decompositions_are_admissible_and_bounded(name):
    s = catalogue.load_substitution(name)
    for x in s.letters:
        for k in range(6):
            word = iterate(s, (x,), k)
            for n, letter in enumerate(word):
                seq = decompose(s, k, x, n)
                assert is_admissible(s, seq)
                assert lemma_bound_holds(s, seq)
                assert seq.letter == letter
                expansion = sum(s.word_length(prefix, k - 1 - t) for t, (prefix, _) in enumerate(seq.entries))
                assert expansion == n


@pytest.mark.parametrize("name", BUNDLED)
def test_random_decompositions(name):
    s = catalogue.load_substitution(name)
    rng = random.Random(11)
    for _ in range(1000):
        x = rng.choice(sorted(s.growing))
        k = rng.randrange(1, 30)
        n, other = sorted(rng.sample(range(s.length(x, k)), 2))
        seq = decompose(s, k, x, n)
        assert lemma_bound_holds(s, seq)
        dfao = build_letter_dfao(s, x)
        digits = seq.digits
        for i, (_, letter) in enumerate(seq.entries):
            assert evaluate(dfao, digits[: i + 1]) == letter
        assert digits < tail(s, k, x, other)


@pytest.mark.parametrize("name", BUNDLED)
def test_tail_is_order_preserving(name):
    s = catalogue.load_substitution(name)
    for x in s.letters:
        for p in range(1, 5):
            tails = [tail(s, p, x, n) for n in range(s.length(x, p))]
            assert tails == sorted(tails)
            assert len(set(tails)) == len(tails)


@pytest.mark.parametrize("name", BUNDLED)
def test_tail_extracts_letters(name):
    s = catalogue.load_substitution(name)
    for x in s.letters:
        dfao = build_letter_dfao(s, x)
        for p in range(1, 5):
            word = iterate(s, (x,), p)
            for n, letter in enumerate(word):
                assert evaluate(dfao, tail(s, p, x, n)) == letter


@pytest.mark.parametrize("name", BUNDLED)
def test_accepted_words_are_tails(name):
    s = catalogue.load_substitution(name)
    for x in s.letters:
        dfao = build_letter_dfao(s, x)
        for k in range(1, 6):
            accepted = enumerate_language(dfao, k)
            assert accepted == [tail(s, k, x, n) for n in range(s.length(x, k))]


def test_locate(gamma):
    assert locate(gamma, 0) == (0, "a", 0)
    assert locate(gamma, -1) == (0, "b", 0)
    assert locate(gamma, 10) == (6, "a", 10)
    assert locate(gamma, -2) == (2, "b", 0)


@pytest.mark.parametrize(
    "name, n, expected",
    [
        ("gamma", 10, (3, 2)),
        ("gamma", -2, (-1, 0)),
        ("beta", 7, (3, 1)),
    ],
)
def test_quotient_remainder(points, name, n, expected):
    assert quotient_remainder(points[name], n) == expected


@pytest.mark.parametrize("n", [0, -1])
def test_quotient_remainder_of_seed_positions(gamma, n):
    with pytest.raises(ValueError, match="no quotient"):
        quotient_remainder(gamma, n)


@pytest.mark.parametrize("name", catalogue.TABLE_POINTS)
def test_quotient_remainder_bounds(points, name):
    pp = points[name]
    radius = 60 if name == "xi" else 300
    segment = expand_segment(pp, -radius, radius + 1)
    for n in range(-radius, radius + 1):
        if n in (-1, 0):
            continue
        q, r = quotient_remainder(pp, n)
        assert abs(q) < abs(n)
        assert (q >= 0) == (n >= 0)
        u_q = segment[q + radius]
        assert 0 <= r < pp.substitution.length(u_q, pp.period)
        assert iterate(pp.substitution, (u_q,), pp.period)[r] == segment[n + radius]


@pytest.mark.parametrize("name", catalogue.TABLE_POINTS)
def test_letter_by_division(points, name):
    pp = points[name]
    radius = 60 if name == "xi" else 300
    segment = expand_segment(pp, -radius, radius + 1)
    assert [letter_by_division(pp, n) for n in range(-radius, radius + 1)] == list(segment)
