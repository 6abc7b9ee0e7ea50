"""Counting colored lattice paths and their diagonal.

A step set ``S`` of non-negative integer vectors (never ``(0, 0)``) with a
color count ``c_s`` per step. ``N(a, b)`` is the number of colored paths from
the origin to ``(a, b)``; conditioning on the last step gives

    N(a, b) = [a == b == 0] + sum_{s in S} c_s N(a - s_x, b - s_y).

For the step set ``{(6,5), (0,1), (1,1), (3,3)}`` with ``(3,3)`` in two colors
the diagonal ``N(n, n)`` equals ``2**(n+1) * Delta_n + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from . import series
from .recurrence import deltas_exact
from .report import VerificationReport

Step = tuple[int, int]

WINDOW_THRESHOLD = 512


@dataclass(frozen=True)
class LatticeSpec:
    colors: Mapping[Step, int]

    def __post_init__(self):
        colors = {(int(i), int(j)): int(c) for (i, j), c in dict(self.colors).items()}
        for (i, j), c in colors.items():
            if (i, j) == (0, 0):
                raise ValueError("(0, 0) is not a valid step")
            if i < 0 or j < 0:
                raise ValueError(f"step {(i, j)} leaves the non-negative quadrant")
            if c < 1:
                raise ValueError(f"step {(i, j)} needs at least one color, got {c}")
        object.__setattr__(self, "colors", MappingProxyType(colors))

    @property
    def steps(self) -> frozenset[Step]:
        return frozenset(self.colors)

    @classmethod
    def uniform(cls, steps) -> "LatticeSpec":
        return cls({s: 1 for s in steps})

    def without(self, step: Step) -> "LatticeSpec":
        return LatticeSpec({s: c for s, c in self.colors.items() if s != step})


def paper_spec() -> LatticeSpec:
    """``{(6,5), (0,1), (1,1), (3,3)}`` with two colors on ``(3,3)``."""
    return LatticeSpec({(6, 5): 1, (0, 1): 1, (1, 1): 1, (3, 3): 2})


def draft_spec() -> LatticeSpec:
    """Alternative step set ``{(5,4), (1,2), (1,1), (3,3)}``, same coloring."""
    return LatticeSpec({(5, 4): 1, (1, 2): 1, (1, 1): 1, (3, 3): 2})


@dataclass(frozen=True)
class PathCountGrid:
    bounds: tuple[int, int]
    counts: tuple[tuple[int, ...], ...]  # counts[a][b]

    def __call__(self, a: int, b: int) -> int:
        A, B = self.bounds
        if a < 0 or b < 0:
            return 0
        if a > A or b > B:
            raise IndexError(f"({a}, {b}) outside the computed grid {self.bounds}")
        return self.counts[a][b]


def _next_row(rows, a: int, B: int, weighted: list[tuple[int, int, int]]) -> list[int]:
    """Row ``a`` of the grid given access to earlier rows as ``rows[a - i]``.

    ``weighted`` holds ``(i, j, c)``; steps with ``i == 0`` stay within the row
    and are applied left to right.
    """
    row = [0] * (B + 1)
    if a == 0:
        row[0] = 1
    for i, j, c in weighted:
        if i == 0 or i > a:
            continue
        src = rows[a - i]
        for b in range(j, B + 1):
            v = src[b - j]
            if v:
                row[b] += c * v
    same_row = [(j, c) for i, j, c in weighted if i == 0]
    if same_row:
        for b in range(B + 1):
            acc = 0
            for j, c in same_row:
                if j <= b:
                    acc += c * row[b - j]
            row[b] += acc
    return row


def _weighted(spec: LatticeSpec) -> list[tuple[int, int, int]]:
    return sorted((i, j, c) for (i, j), c in spec.colors.items())


def count_paths(spec: LatticeSpec, A: int, B: int) -> PathCountGrid:
    if A < 0 or B < 0:
        raise ValueError("grid bounds must be non-negative")
    weighted = _weighted(spec)
    rows: list[list[int]] = []
    for a in range(A + 1):
        rows.append(_next_row(rows, a, B, weighted))
    return PathCountGrid((A, B), tuple(tuple(r) for r in rows))


def diagonal(spec: LatticeSpec, order: int, window: bool | None = None) -> list[int]:
    """``[N(0,0), ..., N(order, order)]``.

    With ``window`` (default: on above ``WINDOW_THRESHOLD``) only the last
    ``max step x + 1`` rows are kept in memory.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if window is None:
        window = order > WINDOW_THRESHOLD
    if not window:
        grid = count_paths(spec, order, order)
        return [grid(n, n) for n in range(order + 1)]
    weighted = _weighted(spec)
    depth = max(i for i, _, _ in weighted) + 1
    rows: dict[int, list[int]] = {}
    out = []
    for a in range(order + 1):
        rows[a] = _next_row(rows, a, order, weighted)
        out.append(rows[a][a])
        rows.pop(a - depth + 1, None)
    return out


def step_polynomial(spec: LatticeSpec) -> dict[Step, int]:
    return dict(spec.colors)


def stanley_polynomial(f: Sequence[int], g: Sequence[int], h: Sequence[int]) -> dict[Step, int]:
    """Monomials of ``x f(xy) + y g(xy) + h(xy)`` as ``{(i, j): coeff}``."""
    out: dict[Step, int] = {}
    for k, c in enumerate(f):
        if c:
            out[(k + 1, k)] = out.get((k + 1, k), 0) + c
    for k, c in enumerate(g):
        if c:
            out[(k, k + 1)] = out.get((k, k + 1), 0) + c
    for k, c in enumerate(h):
        if c:
            out[(k, k)] = out.get((k, k), 0) + c
    return out


PAPER_F = (0, 0, 0, 0, 0, 1)  # t^5
PAPER_G = (1,)
PAPER_H = (0, 1, 0, 2)  # t + 2t^3


def stanley_diagonal_series(f: Sequence[int], g: Sequence[int], h: Sequence[int], order: int) -> series.TruncatedSeries:
    """``1 / sqrt((1 - h(t))^2 - 4 t f(t) g(t))``; needs ``h(0) = 0``."""
    if h and h[0] != 0:
        raise ValueError("the diagonal formula needs h(0) = 0")
    P = series.poly
    one_minus_h = P([1], order) - P(h, order)
    radicand = one_minus_h * one_minus_h - P([0, 4], order) * P(f, order) * P(g, order)
    return radicand.sqrt_inv()


def stanley_diagonal_check(
    order: int,
    f: Sequence[int] = PAPER_F,
    g: Sequence[int] = PAPER_G,
    h: Sequence[int] = PAPER_H,
    spec: LatticeSpec | None = None,
) -> bool:
    """Instance check of the diagonal formula for ``x f(xy) + y g(xy) + h(xy)``.

    Passes when (1) the decomposition reproduces the step polynomial of
    ``spec``, (2) the closed form matches the counted diagonal through
    ``order``, and (3) the closed form equals
    ``1/sqrt(4t^4 - 4t^3 + t^2 - 2t + 1)``.
    """
    spec = spec or paper_spec()
    if stanley_polynomial(f, g, h) != step_polynomial(spec):
        return False
    closed = stanley_diagonal_series(f, g, h, order)
    if [int(c) for c in closed] != diagonal(spec, order) or any(c.denominator != 1 for c in closed):
        return False
    simplified = series.poly(series.DISCRIMINANT, order).sqrt_inv()
    return closed == simplified


def theorem3_check(order: int, deltas: Sequence | None = None) -> VerificationReport:
    """``N(n, n) == 2**(n+1) * Delta_n + 1`` for ``0 <= n <= order``.

    ``deltas[n]`` defaults to the exact recurrence values.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if deltas is None:
        deltas = deltas_exact(order)
    report = VerificationReport("theorem3")
    diag = diagonal(paper_spec(), order)
    for n in range(order + 1):
        expected = deltas[n] * (1 << (n + 1)) + 1
        if not report.record("N(n,n) == 2^(n+1) Delta_n + 1", n, expected, diag[n]):
            break
    return report
