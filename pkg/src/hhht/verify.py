"""Verification suites: every identity checked against an independent route.

Each suite returns a :class:`VerificationReport`. ``run_suite("all")`` runs
every suite in name order at its default bound.
"""

from __future__ import annotations

import time
from math import comb
from typing import Callable

from . import analysis, exactdp, lattice, recurrence, series
from .report import VerificationReport

FLOAT_REL_TOL = 1e-9
CONTOUR_TOL = 1e-6


def _suite_dp(max_n: int = 16) -> VerificationReport:
    if not 1 <= max_n <= exactdp.ENUMERATION_CAP:
        raise ValueError(f"dp suite bound must be in 1..{exactdp.ENUMERATION_CAP}")
    rep = VerificationReport("dp")
    rational = exactdp.base_distribution()
    for n, out in enumerate(exactdp.iter_outcomes(max_n), start=1):
        rep.record("dp.outcome == enumeration", n, exactdp.enumerate_exhaustive(n), out)
        dist = exactdp.distribution(n)
        rep.record("dp.mass == 1", n, 1, dist.total_mass())
        rep.record("dp.valid", n, True, dist.is_valid())
        rep.record("dp.step == integer kernel", n, dist, rational)
        rational = exactdp.dp_step(rational)
    for n in (1, 2):
        if n <= max_n:
            rep.record("dp.Delta_n == 0", n, 0, exactdp.outcome(n).delta)
    return rep


def _suite_series(max_n: int = 200) -> VerificationReport:
    rep = VerificationReport("series")
    closed = series.delta_from_closed_form(max_n)
    for n, out in enumerate(exactdp.iter_outcomes(max_n), start=1):
        rep.record("series.closed_form == dp", n, out.delta, closed[n])
    order = 64
    h_div, h_closed = series.h_coefficients(order), series.h_closed_form(order)
    for n in range(order + 1):
        rep.record("series.h == 2^n + r_n", n, h_closed[n], h_div[n])
    rep.record("series.log_derivative_identity", order, True, series.log_derivative_identity_check(order))
    rep.record("series.ode_identity", order, True, series.ode_identity_check(order))
    twice = [2 * c for c in series.f_tilde(order)]
    rep.record("series.2f~ integral", order, True, all(c.denominator == 1 for c in twice))
    series.h_positivity_scan(10**5, rep)
    series.delta_positivity_scan(closed, rep)
    return rep


def _suite_recurrence(max_n: int = 2000, positivity_n: int = 10_000) -> VerificationReport:
    rep = VerificationReport("recurrence")
    exact = recurrence.deltas_exact(max(max_n, positivity_n))
    closed = series.delta_from_closed_form(max_n)
    for n, out in enumerate(exactdp.iter_outcomes(max_n), start=1):
        rep.record("recurrence.triple_pipeline", n, (out.delta, out.delta), (closed[n], exact[n]))
    if max_n >= 4:
        floats = recurrence.delta_float_sequence(max(max_n, positivity_n))
        worst, where = 0.0, None
        for n in range(4, max_n + 1):
            err = abs(floats[n] - float(exact[n])) / float(exact[n])
            if err > worst:
                worst, where = err, n
        rep.record("recurrence.float_fidelity", where, f"<= {FLOAT_REL_TOL}", worst, ok=worst <= FLOAT_REL_TOL)
        bad = next((n for n in range(3, positivity_n + 1) if not floats[n] > 0), None)
        rep.record("recurrence.Delta_n > 0 (float)", bad or positivity_n, True, bad is None)
    bad = next((n for n in range(3, positivity_n + 1) if not exact[n] > 0), None)
    rep.record("recurrence.Delta_n > 0 (exact)", bad or positivity_n, True, bad is None)
    rep.record("recurrence.Delta_1 == Delta_2 == 0", (1, 2), (0, 0), (exact[1], exact[2]))
    return rep


def _suite_lattice(max_n: int = 60) -> VerificationReport:
    rep = VerificationReport("lattice")
    rep.extend(lattice.theorem3_check(max_n))
    order = 64
    rep.record("lattice.stanley_diagonal", order, True, lattice.stanley_diagonal_check(order))
    grid = lattice.count_paths(lattice.LatticeSpec.uniform([(1, 0), (0, 1)]), 10, 10)
    ok = all(grid(a, b) == comb(a + b, a) for a in range(11) for b in range(11))
    rep.record("lattice.binomial_sanity", 10, True, ok)
    return rep


def _suite_contour(max_n: int = analysis.CONTOUR_MAX_N) -> VerificationReport:
    rep = VerificationReport("contour")
    exact = recurrence.deltas_exact(max(max_n, 12))
    for n in range(2, max_n + 1):
        got = analysis.contour_delta(n)
        rep.record("contour.delta", n, float(exact[n]), got, ok=abs(got - float(exact[n])) <= CONTOUR_TOL)
    for n in range(2, 13):
        for radius in (0.5, 0.6, 0.7, 0.8, 0.9):
            got = analysis.contour_delta(n, analysis.ContourConfig(radius=radius))
            rep.record(
                "contour.radius_invariance", (n, radius), float(exact[n]), got,
                ok=abs(got - float(exact[n])) <= CONTOUR_TOL,
            )
    return rep


def _suite_asymptotics(max_n: int = 10_000) -> VerificationReport:
    rep = VerificationReport("asymptotics")
    lo = analysis.CALIBRATION_RANGE[0]
    floats = recurrence.delta_float_sequence(max_n)
    c1 = analysis.ASYMPTOTIC_C1
    for rec in analysis.asymptotic_table(range(lo, max_n + 1), floats):
        rep.record(
            "asymptotics.C1_bound", rec.n, f"<= {c1}/n", abs(rec.ratio - 1),
            ok=abs(rec.ratio - 1) <= c1 / rec.n,
        )
    return rep


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "asymptotics": _suite_asymptotics,
    "contour": _suite_contour,
    "dp": _suite_dp,
    "lattice": _suite_lattice,
    "recurrence": _suite_recurrence,
    "series": _suite_series,
}

# In-scope claims and the check ids that exercise them.
COVERAGE_MANIFEST: dict[str, tuple[str, ...]] = {
    "conditional DP recurrences": ("dp.outcome == enumeration", "dp.step == integer kernel"),
    "contour-integral formula": ("contour.delta", "contour.radius_invariance"),
    "closed-form generating function": ("series.closed_form == dp",),
    "log-derivative identity": ("series.log_derivative_identity",),
    "h coefficient closed form": ("series.h == 2^n + r_n",),
    "coefficient positivity": ("h_n > 0", "Delta_n > 0", "Delta_n == 0"),
    "path-count recurrence": ("lattice.binomial_sanity",),
    "lattice-path diagonal identity": ("N(n,n) == 2^(n+1) Delta_n + 1",),
    "diagonal closed form": ("lattice.stanley_diagonal",),
    "leading asymptotics": ("asymptotics.C1_bound",),
    "ODE and linear recurrence": ("series.ode_identity", "recurrence.triple_pipeline"),
    "main theorem scan": ("recurrence.Delta_n > 0 (exact)", "recurrence.Delta_n > 0 (float)"),
}


def run_suite(name: str, max_n: int | None = None) -> list[VerificationReport]:
    """Run one suite (or ``"all"``); reports come back sorted by suite name."""
    if name == "all":
        if max_n is not None:
            raise ValueError("--max-n is per suite; it cannot be combined with 'all'")
        names = sorted(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(sorted(SUITES))}")
    reports = []
    for suite in names:
        kwargs = {} if max_n is None else {"max_n": max_n}
        start = time.perf_counter()
        rep = SUITES[suite](**kwargs)
        rep.elapsed = time.perf_counter() - start
        reports.append(rep)
    return reports
