from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhht import exactdp
from hhht.exactdp import GameOutcome, ScoreDistribution


def string_oracle(n):
    """Count overlapping HH / HT in every flip string; independent of the bit trick."""
    bob = alice = tie = 0
    for flips in product("HT", repeat=n):
        s = "".join(flips)
        hh = sum(s[i:i + 2] == "HH" for i in range(n - 1))
        ht = sum(s[i:i + 2] == "HT" for i in range(n - 1))
        bob += ht > hh
        alice += hh > ht
        tie += hh == ht
    return GameOutcome(n, Fraction(bob, 2**n), Fraction(alice, 2**n), Fraction(tie, 2**n))


@pytest.mark.parametrize("n", range(1, 11))
def test_bit_enumeration_matches_string_scan(n):
    assert exactdp.enumerate_exhaustive(n) == string_oracle(n)


def test_enumeration_examples():
    o1 = exactdp.enumerate_exhaustive(1)
    assert (o1.p_bob, o1.p_alice, o1.p_tie, o1.delta) == (0, 0, 1, 0)
    o3 = exactdp.enumerate_exhaustive(3)
    assert (o3.p_bob, o3.p_alice, o3.p_tie, o3.delta) == (Fraction(3, 8), Fraction(2, 8), Fraction(3, 8), Fraction(1, 8))
    o4 = exactdp.enumerate_exhaustive(4)
    assert (o4.p_bob, o4.p_alice, o4.delta) == (Fraction(6, 16), Fraction(4, 16), Fraction(1, 8))


@pytest.mark.parametrize("n", [0, -1, 25])
def test_enumeration_rejects_out_of_range(n):
    with pytest.raises(ValueError):
        exactdp.enumerate_exhaustive(n)


def test_dp_step_from_base():
    d2 = exactdp.dp_step(exactdp.base_distribution())
    assert d2.n == 2
    assert dict(d2.probs_T) == {0: Fraction(1, 2), -1: Fraction(1, 2)}
    assert dict(d2.probs_H) == {0: Fraction(1, 2), 1: Fraction(1, 2)}


def test_dp_step_three_times_gives_delta_one_eighth():
    d = exactdp.base_distribution()
    for _ in range(3):
        d = exactdp.dp_step(d)
    assert d.n == 4
    assert exactdp.outcome_of(d).delta == Fraction(1, 8)


def test_distribution_base_and_marginal():
    d1 = exactdp.distribution(1)
    assert dict(d1.probs_T) == {0: 1} and dict(d1.probs_H) == {0: 1}
    assert exactdp.distribution(2).marginal() == {-1: Fraction(1, 4), 0: Fraction(1, 2), 1: Fraction(1, 4)}


@pytest.mark.parametrize("n", range(1, 17))
def test_outcome_equals_enumeration(n):
    assert exactdp.outcome(n) == exactdp.enumerate_exhaustive(n)


def test_distribution_16_matches_enumeration_tallies():
    marginal = exactdp.distribution(16).marginal()
    tallies = {}
    for seq in range(1 << 16):
        s = format(seq, "016b").replace("1", "H").replace("0", "T")
        k = sum(s[i:i + 2] == "HH" for i in range(15)) - sum(s[i:i + 2] == "HT" for i in range(15))
        tallies[k] = tallies.get(k, 0) + 1
    assert marginal == {k: Fraction(c, 1 << 16) for k, c in sorted(tallies.items())}


def test_integer_kernel_agrees_with_rational_steps():
    d = exactdp.base_distribution()
    for n in range(1, 30):
        assert exactdp.distribution(n) == d
        d = exactdp.dp_step(d)


@pytest.mark.parametrize("n,delta", [(2, 0), (3, Fraction(1, 8)), (5, Fraction(3, 32))])
def test_outcome_examples(n, delta):
    assert exactdp.outcome(n).delta == delta


@pytest.mark.parametrize("n", [1, 2, 7, 40, 120])
def test_mass_and_support(n):
    d = exactdp.distribution(n)
    assert d.total_mass() == 1
    assert d.is_valid()
    assert all(abs(k) <= n - 1 for k in d.marginal())
    o = exactdp.outcome(n)
    assert o.p_bob + o.p_alice + o.p_tie == 1


def test_iter_outcomes_matches_outcome():
    outs = list(exactdp.iter_outcomes(30))
    assert [o.n for o in outs] == list(range(1, 31))
    assert outs[-1] == exactdp.outcome(30)


def test_sign_of_gap_small_n():
    outs = list(exactdp.iter_outcomes(300))
    assert outs[0].delta == outs[1].delta == 0
    assert all(o.delta > 0 for o in outs[2:])


def test_rejects_n_zero():
    with pytest.raises(ValueError):
        exactdp.distribution(0)
    with pytest.raises(ValueError):
        exactdp.outcome(0)
    with pytest.raises(ValueError):
        ScoreDistribution(0, {0: 1}, {0: 1})


def test_distribution_is_read_only():
    d = exactdp.distribution(3)
    with pytest.raises(TypeError):
        d.probs_T[0] = Fraction(1)


@st.composite
def random_distribution(draw):
    """Arbitrary rational masses on |k| <= n-1 whose average sums to 1."""
    n = draw(st.integers(1, 6))
    keys = list(range(-(n - 1), n))
    weights_T = draw(st.lists(st.integers(0, 50), min_size=len(keys), max_size=len(keys)))
    weights_H = draw(st.lists(st.integers(0, 50), min_size=len(keys), max_size=len(keys)))
    total = sum(weights_T) + sum(weights_H)
    if total == 0:
        weights_T[0] = total = 1
    # marginal = (T + H)/2, so scale each side by 2/total
    scale = Fraction(2, total)
    probs_T = {k: w * scale for k, w in zip(keys, weights_T) if w}
    probs_H = {k: w * scale for k, w in zip(keys, weights_H) if w}
    return ScoreDistribution(n, probs_T, probs_H)


@settings(max_examples=200, deadline=None)
@given(random_distribution())
def test_dp_step_preserves_mass(d):
    assert d.total_mass() == 1
    nxt = exactdp.dp_step(d)
    assert nxt.total_mass() == 1
    assert nxt.is_valid()
