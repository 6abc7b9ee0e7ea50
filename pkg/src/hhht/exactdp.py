"""Exact distribution of the score difference in the HH-vs-HT coin game.

A fair coin is flipped ``n`` times. Alice scores one point for every
(overlapping) ``HH`` and Bob one point for every ``HT``. Scores are tracked as
``k = Alice - Bob``, so Bob wins when ``k < 0``.

The state carried between flips is the pair of conditional distributions of
``k`` given that the last flip was tails (``probs_T``) or heads (``probs_H``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping

ENUMERATION_CAP = 24

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GameOutcome:
    n: int
    p_bob: Fraction
    p_alice: Fraction
    p_tie: Fraction

    @property
    def delta(self) -> Fraction:
        """Win-probability gap ``P(Bob) - P(Alice)``."""
        return self.p_bob - self.p_alice


@dataclass(frozen=True)
class ScoreDistribution:
    """Conditional score distributions after ``n`` flips.

    ``probs_T[k]`` is ``P(Y_n = k | last flip T)``, likewise ``probs_H``.
    Unreachable scores are absent from the maps.
    """

    n: int
    probs_T: Mapping[int, Fraction]
    probs_H: Mapping[int, Fraction]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "probs_T", MappingProxyType(dict(self.probs_T)))
        object.__setattr__(self, "probs_H", MappingProxyType(dict(self.probs_H)))

    def marginal(self) -> dict[int, Fraction]:
        """Unconditional ``P(Y_n = k)``, sorted by ``k``."""
        keys = sorted(set(self.probs_T) | set(self.probs_H))
        return {
            k: (self.probs_T.get(k, 0) + self.probs_H.get(k, 0)) * _HALF
            for k in keys
        }

    def total_mass(self) -> Fraction:
        return sum(self.marginal().values(), Fraction(0))

    def is_valid(self) -> bool:
        bound = self.n - 1
        for probs in (self.probs_T, self.probs_H):
            for k, p in probs.items():
                if p < 0 or abs(k) > bound:
                    return False
        return self.total_mass() == 1


def base_distribution() -> ScoreDistribution:
    """One flip: no pair exists yet, so both conditionals are a point mass at 0."""
    return ScoreDistribution(1, {0: Fraction(1)}, {0: Fraction(1)})


def dp_step(d: ScoreDistribution) -> ScoreDistribution:
    """Advance the conditional distributions by one flip.

    A new tail after a tail scores nothing; after a head it scores for Bob
    (``k`` drops by one). A new head after a tail scores nothing; after a
    head it scores for Alice.
    """
    new_T: dict[int, Fraction] = {}
    new_H: dict[int, Fraction] = {}
    for k, p in d.probs_T.items():
        # previous T, next T or H: score unchanged
        new_T[k] = new_T.get(k, 0) + p * _HALF
        new_H[k] = new_H.get(k, 0) + p * _HALF
    for k, p in d.probs_H.items():
        new_T[k - 1] = new_T.get(k - 1, 0) + p * _HALF
        new_H[k + 1] = new_H.get(k + 1, 0) + p * _HALF
    return ScoreDistribution(
        d.n + 1,
        {k: v for k, v in new_T.items() if v},
        {k: v for k, v in new_H.items() if v},
    )


def _iter_counts(n_max: int) -> Iterator[tuple[int, list[int], list[int]]]:
    """Yield ``(n, count_T, count_H)`` for ``n = 1..n_max``.

    ``count_X[i]`` is the number of length-``n`` sequences ending in ``X``
    with score ``i - (n - 1)``, i.e. ``p_{n,k,X} * 2**(n-1)``. Running the
    recurrence on integer counts avoids a gcd per rational addition.
    """
    count_T, count_H = [1], [1]
    n = 1
    while True:
        yield n, count_T, count_H
        if n >= n_max:
            return
        t = [0, *count_T, 0]
        h = [0, *count_H, 0]
        # index i of the new lists corresponds to score i - n
        count_T = [a + b for a, b in zip(t, h[1:] + [0])]
        count_H = [a + b for a, b in zip(t, [0] + h[:-1])]
        n += 1


def _to_probs(counts: list[int], offset: int, denom: int) -> dict[int, Fraction]:
    return {i - offset: Fraction(c, denom) for i, c in enumerate(counts) if c}


def distribution(n: int) -> ScoreDistribution:
    """Exact conditional distributions after ``n`` flips (``O(n^2)`` integer ops)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for m, count_T, count_H in _iter_counts(n):
        pass
    denom = 1 << (m - 1)
    return ScoreDistribution(
        m, _to_probs(count_T, m - 1, denom), _to_probs(count_H, m - 1, denom)
    )


def _outcome_from_counts(n: int, count_T: list[int], count_H: list[int]) -> GameOutcome:
    total = [a + b for a, b in zip(count_T, count_H)]
    mid = n - 1
    denom = 1 << n
    return GameOutcome(
        n,
        p_bob=Fraction(sum(total[:mid]), denom),
        p_alice=Fraction(sum(total[mid + 1:]), denom),
        p_tie=Fraction(total[mid], denom),
    )


def outcome_of(d: ScoreDistribution) -> GameOutcome:
    marg = d.marginal()
    return GameOutcome(
        d.n,
        p_bob=sum((p for k, p in marg.items() if k < 0), Fraction(0)),
        p_alice=sum((p for k, p in marg.items() if k > 0), Fraction(0)),
        p_tie=marg.get(0, Fraction(0)),
    )


def outcome(n: int) -> GameOutcome:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for m, count_T, count_H in _iter_counts(n):
        pass
    return _outcome_from_counts(m, count_T, count_H)


def iter_outcomes(n_max: int) -> Iterator[GameOutcome]:
    """Outcomes for ``n = 1..n_max`` from a single DP sweep."""
    if n_max < 1:
        return
    for n, count_T, count_H in _iter_counts(n_max):
        yield _outcome_from_counts(n, count_T, count_H)


def enumerate_exhaustive(n: int) -> GameOutcome:
    """Brute force over all ``2**n`` flip sequences.

    Bit ``i`` of the sequence index is flip ``i`` (1 = heads). Flip ``i``
    followed by flip ``i+1`` is HH when both bits are set and HT when bit
    ``i`` is set and bit ``i+1`` is clear.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration needs 1 <= n <= {ENUMERATION_CAP}, got {n}")
    pair_mask = (1 << (n - 1)) - 1  # positions that have a successor
    bob = alice = tie = 0
    for seq in range(1 << n):
        nxt = seq >> 1
        hh = (seq & nxt & pair_mask).bit_count()
        ht = (seq & ~nxt & pair_mask).bit_count()
        if ht > hh:
            bob += 1
        elif hh > ht:
            alice += 1
        else:
            tie += 1
    denom = 1 << n
    return GameOutcome(n, Fraction(bob, denom), Fraction(alice, denom), Fraction(tie, denom))
