"""Asymptotics of the win-probability gap and a numeric contour-integral check.

The gap behaves like ``1 / (2 sqrt(n pi))`` with an ``O(n^{-3/2})``
correction. Independently, it is the contour integral

    Delta_n = 2^{-n} (1/(2 pi i)) oint 1^T (A(z)^{n-1} - A(1/z)^{n-1}) 1 / (1 - z) dz,
    A(z) = [[1, 1/z], [1, z]],

over any circle around the origin, evaluated here by the trapezoidal rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .recurrence import delta_float_sequence, deltas_exact

# Frozen bound for |2 sqrt(n pi) Delta_n - 1| <= C1 / n on 100 <= n <= 10^4.
# Calibrated by scripts/calibrate_asymptotics.py; observed max is 0.062476
# (n * (ratio - 1) tends to -1/16).
ASYMPTOTIC_C1 = 0.0625
CALIBRATION_RANGE = (100, 10_000)

EXACT_LIMIT = 20_000  # exact e_n is cheap up to here
CONTOUR_MAX_N = 32
IMAG_TOL = 1e-8


def leading_term(n: int) -> float:
    return 1.0 / (2.0 * math.sqrt(n * math.pi))


@dataclass(frozen=True)
class AsymptoticRecord:
    n: int
    delta: float
    leading: float
    ratio: float
    scaled_err: float


def _deltas_float(n_max: int) -> Sequence[float]:
    if n_max <= EXACT_LIMIT:
        return [float(d) for d in deltas_exact(n_max)]
    return delta_float_sequence(n_max)


def asymptotic_table(n_values: Iterable[int], deltas: Sequence[float] | None = None) -> list[AsymptoticRecord]:
    """One record per ``n``; ``deltas[n]`` is computed by the recurrence if not given."""
    n_values = list(n_values)
    if any(n < 3 for n in n_values):
        raise ValueError("asymptotic records need n >= 3")
    if deltas is None:
        deltas = _deltas_float(max(n_values, default=4))
    out = []
    for n in n_values:
        d = float(deltas[n])
        lead = leading_term(n)
        out.append(AsymptoticRecord(n, d, lead, d / lead, n**1.5 * abs(d - lead)))
    return out


def calibrate_c1(n_lo: int = CALIBRATION_RANGE[0], n_hi: int = CALIBRATION_RANGE[1]) -> tuple[float, int]:
    """``max n |ratio(n) - 1|`` over the range from exact data, with its argmax."""
    deltas = deltas_exact(n_hi)
    best, arg = -1.0, n_lo
    for n in range(n_lo, n_hi + 1):
        v = n * abs(float(deltas[n]) / leading_term(n) - 1.0)
        if v > best:
            best, arg = v, n
    return best, arg


@dataclass(frozen=True)
class ContourConfig:
    radius: float = 0.75
    points: int = 1024

    def __post_init__(self):
        if not 0 < self.radius < 1:
            raise ValueError(f"radius must lie in (0, 1), got {self.radius}")
        if self.points < 64:
            raise ValueError(f"need at least 64 quadrature nodes, got {self.points}")


class ContourAccuracyError(ArithmeticError):
    pass


def _transfer(z: np.ndarray) -> np.ndarray:
    """Stack of ``A(z) = [[1, 1/z], [1, z]]`` for each node."""
    a = np.empty(z.shape + (2, 2), dtype=complex)
    a[..., 0, 0] = 1
    a[..., 0, 1] = 1 / z
    a[..., 1, 0] = 1
    a[..., 1, 1] = z
    return a


def contour_integral(n: int, cfg: ContourConfig = ContourConfig()) -> complex:
    """Trapezoidal estimate of the contour formula; the imaginary part is the residual."""
    if n < 2:
        raise ValueError(f"contour formula needs n >= 2, got {n}")
    theta = 2 * np.pi * np.arange(cfg.points) / cfg.points
    z = cfg.radius * np.exp(1j * theta)
    # matrix_power uses binary exponentiation and broadcasts over the node axis
    inner = np.linalg.matrix_power(_transfer(z), n - 1)
    outer = np.linalg.matrix_power(_transfer(1 / z), n - 1)
    quad = (inner - outer).sum(axis=(-2, -1)) / (1 - z)
    # dz = i z dtheta, and the 1/(2 pi i) factor leaves the mean of quad * z
    total = math.fsum((quad * z).real) + 1j * math.fsum((quad * z).imag)
    return total / cfg.points / 2.0**n


def contour_delta(n: int, cfg: ContourConfig = ContourConfig(), imag_tol: float = IMAG_TOL) -> float:
    value = contour_integral(n, cfg)
    if abs(value.imag) > imag_tol:
        raise ContourAccuracyError(
            f"imaginary residual {value.imag:.3e} exceeds {imag_tol:.0e} at n={n}, {cfg}"
        )
    return value.real
