"""Exact win-probability gap for the HH-vs-HT coin game, with identity checks."""

from .exactdp import GameOutcome, ScoreDistribution, distribution, enumerate_exhaustive, outcome
from .recurrence import delta_exact, delta_float_sequence, e_sequence

__all__ = [
    "GameOutcome",
    "ScoreDistribution",
    "delta_exact",
    "delta_float_sequence",
    "distribution",
    "e_sequence",
    "enumerate_exhaustive",
    "outcome",
]
