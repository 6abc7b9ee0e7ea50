"""Exit criteria, one test per criterion, each at its stated tolerance."""

import math
import time

from hhht import analysis, exactdp, lattice, recurrence, series


def test_c01_oracle_equivalence(criterion):
    start = time.perf_counter()
    mismatches = []
    for out in exactdp.iter_outcomes(16):
        brute = exactdp.enumerate_exhaustive(out.n)
        if (out.p_bob, out.p_alice, out.p_tie, out.delta) != (brute.p_bob, brute.p_alice, brute.p_tie, brute.delta):
            mismatches.append(out.n)
    elapsed = time.perf_counter() - start
    ok = criterion("C1 enumeration == DP, n<=16, <30s", not mismatches and elapsed < 30,
                   f"mismatches={mismatches} t={elapsed:.2f}s")
    assert ok


def test_c02_triple_pipeline(criterion):
    start = time.perf_counter()
    closed = series.delta_from_closed_form(2000)
    exact = recurrence.deltas_exact(2000)
    bad = [o.n for o in exactdp.iter_outcomes(2000) if not (o.delta == closed[o.n] == exact[o.n])]
    elapsed = time.perf_counter() - start
    ok = criterion("C2 DP == series == recurrence, n<=2000, <60s", not bad and elapsed < 60,
                   f"first_bad={bad[:1]} t={elapsed:.2f}s")
    assert ok


def test_c03_main_theorem_scan(criterion):
    N = 10_000
    dp = {o.n: o.delta for o in exactdp.iter_outcomes(2000)}
    zeros_ok = dp[1] == 0 and dp[2] == 0
    exact_ok = all(dp[n] > 0 for n in range(3, 2001))
    floats = recurrence.delta_float_sequence(N)
    float_ok = floats[1] == floats[2] == 0 and all(floats[n] > 0 for n in range(3, N + 1))
    # integer mode: e_n = N(n,n) is a path count; Delta_n > 0 iff e_n > 1
    e = recurrence.e_sequence(N)
    integer_ok = e[1] == e[2] == 1 and all(x > 1 for x in e[3:])
    lattice_ok = lattice.diagonal(lattice.paper_spec(), 600) == e[:601]
    ok = criterion("C3 Delta_1=Delta_2=0, Delta_n>0 for 3<=n<=1e4", zeros_ok and exact_ok and float_ok and integer_ok and lattice_ok,
                   f"exact<=2000:{exact_ok} float:{float_ok} integer:{integer_ok} lattice<=600:{lattice_ok}")
    assert ok


def test_c04_theorem3(criterion):
    start = time.perf_counter()
    rep = lattice.theorem3_check(60)
    first = lattice.diagonal(lattice.paper_spec(), 5)
    elapsed = time.perf_counter() - start
    ok = criterion("C4 N(n,n) = 2^(n+1) Delta_n + 1, n<=60, <5s",
                   rep.passed and rep.checks_run == 61 and first == [1, 1, 1, 3, 5, 7] and elapsed < 5,
                   f"first={first} t={elapsed:.2f}s")
    assert ok


def test_c05_identity_suite(criterion):
    logd = series.log_derivative_identity_check(64)
    ode = series.ode_identity_check(64)
    stanley = lattice.stanley_diagonal_check(64)
    ok = criterion("C5 log-derivative, ODE, diagonal identities to order 64", logd and ode and stanley,
                   f"logd={logd} ode={ode} diagonal={stanley}")
    assert ok


def test_c06_h_coefficients(criterion):
    closed_ok = series.h_coefficients(64) == series.h_closed_form(64)
    pos = series.h_positivity_scan(10**5)
    ok = criterion("C6 h_n = 2^n + r_n (n<=64), h_n>0 (n<=1e5)", closed_ok and pos.passed,
                   f"closed_form={closed_ok} positivity={pos.passed}")
    assert ok


def test_c07_contour(criterion):
    exact = recurrence.deltas_exact(20)
    worst = max(abs(analysis.contour_delta(n) - float(exact[n])) for n in range(2, 21))
    spread = 0.0
    for n in range(2, 13):
        vals = [analysis.contour_delta(n, analysis.ContourConfig(radius=r)) for r in (0.5, 0.6, 0.7, 0.75, 0.8, 0.9)]
        spread = max(spread, max(vals) - min(vals))
    ok = criterion("C7 contour within 1e-6 (n<=20), radius-invariant within 1e-6 (n<=12)",
                   worst <= 1e-6 and spread <= 1e-6, f"max_err={worst:.2e} max_spread={spread:.2e}")
    assert ok


def test_c08_asymptotics(criterion):
    lo, hi = analysis.CALIBRATION_RANGE
    c1 = analysis.ASYMPTOTIC_C1
    exact = recurrence.deltas_exact(hi)
    worst = max(n * abs(2 * math.sqrt(n * math.pi) * float(exact[n]) - 1) for n in range(lo, hi + 1))
    ok = criterion(f"C8 |2 sqrt(n pi) Delta_n - 1| <= C1/n, 100<=n<=1e4, C1={c1}", worst <= c1,
                   f"max n*|ratio-1| = {worst:.6f}")
    assert ok


def test_c09_performance(criterion):
    start = time.perf_counter()
    e = recurrence.e_sequence(20_000)
    t_exact = time.perf_counter() - start
    start = time.perf_counter()
    f = recurrence.delta_float_sequence(10**7)
    t_float = time.perf_counter() - start
    ok = criterion("C9 exact e_n to 2e4 <10s, float Delta_n to 1e7 <10s",
                   t_exact < 10 and t_float < 10 and len(e) == 20_001 and len(f) == 10**7 + 1,
                   f"exact={t_exact:.2f}s float={t_float:.2f}s")
    assert ok


def test_c10_float_fidelity(criterion):
    exact = recurrence.deltas_exact(2000)
    floats = recurrence.delta_float_sequence(2000)
    worst = max(abs(floats[n] - float(exact[n])) / float(exact[n]) for n in range(4, 2001))
    ok = criterion("C10 float vs exact relative error <= 1e-9, 4<=n<=2000", worst <= 1e-9, f"max_rel_err={worst:.2e}")
    assert ok
