import pytest

import catalogue
from datatypes import Seed
from periodic import enumerate_seeds, expand_segment, make_periodic_point, parse_seed
from substitution import iterate
from test_substitution import BUNDLED


def test_enumerate_seeds(phi, psi_t, mu):
    assert enumerate_seeds(phi) == [(Seed("a", "a"), 2), (Seed("b", "a"), 2)]
    assert enumerate_seeds(psi_t) == [(Seed("a", "a"), 3), (Seed("b", "a"), 3), (Seed("c", "a"), 3)]
    assert (Seed("c", "a"), 1) in enumerate_seeds(mu)


def test_enumerate_seeds_skips_bounded_letters(rho):
    assert enumerate_seeds(rho) == [(Seed("b", "a"), 1)]


@pytest.mark.parametrize(
    "name, seed, period",
    [
        ("alpha", "a|a", 2),
        ("beta", "b|a", 1),
        ("gamma", "b|a", 2),
        ("delta", "a|a", 2),
        ("tau", "c|a", 3),
        ("chi", "c|a", 1),
        ("xi", "b|a", 1),
    ],
)
def test_catalogue_points(points, name, seed, period):
    assert str(points[name].seed) == seed
    assert points[name].period == period


def test_make_periodic_point(phi, rho):
    assert make_periodic_point(phi, "b|a").period == 2
    assert make_periodic_point(rho, "b|a").period == 1


@pytest.mark.parametrize(
    "seed, message",
    [
        ("a|b", "not periodic"),
        ("a|z", "unknown letter"),
        ("ab", "Invalid seed"),
    ],
)
def test_make_periodic_point_errors(phi, seed, message):
    with pytest.raises(ValueError, match=message):
        make_periodic_point(phi, seed)


def test_bounded_seed_letter_is_rejected(rho):
    with pytest.raises(ValueError, match="not growing"):
        make_periodic_point(rho, "c|a")


def test_parse_seed_strips_spaces():
    assert parse_seed(" b | a ") == Seed("b", "a")


def test_expand_segment(gamma, tau):
    assert expand_segment(gamma, -3, 3) == tuple("aababa")
    assert expand_segment(tau, 0, 7) == tuple("abacaba")
    assert expand_segment(gamma, 0, 0) == ()
    assert expand_segment(gamma, -5, -2) == expand_segment(gamma, -5, 3)[:3]
    assert expand_segment(gamma, 2, 6) == expand_segment(gamma, 0, 6)[2:]


def test_seed_consistency(points):
    for pp in points.values():
        assert expand_segment(pp, -1, 1) == (pp.seed.left, pp.seed.right)


@pytest.mark.parametrize("name", BUNDLED)
def test_segment_is_fixed_by_period_power(name):
    s = catalogue.load_substitution(name)
    n = 1000
    for seed, period in enumerate_seeds(s):
        pp = make_periodic_point(s, seed)
        segment = expand_segment(pp, -n, n)
        left = iterate(s, segment[:n], period)
        right = iterate(s, segment[n:], period)
        assert left[len(left) - n :] == segment[:n], seed
        assert right[:n] == segment[n:], seed


@pytest.mark.parametrize("name", catalogue.TABLE_POINTS)
def test_period_is_minimal(points, name):
    pp = points[name]
    s = pp.substitution
    for q in range(1, pp.period):
        image_right = iterate(s, (pp.seed.right,), q)
        image_left = iterate(s, (pp.seed.left,), q)
        assert image_right[0] != pp.seed.right or image_left[-1] != pp.seed.left
