"""Acceptance criteria 1-8, each at exact tolerance.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-case lines; the
terminal summary always shows one PASS/FAIL line per criterion.
"""

from fractions import Fraction
from functools import lru_cache

import pytest

from hilbertkunz import cubics, hankel, properties, series
from hilbertkunz.closedform import CubicFamily, hk_formula, reference_polynomial
from hilbertkunz.polynomial import parse_poly
from hilbertkunz.quotient import hk_profile

CUSPIDAL_CASES = [(p, q) for p in (3, 5, 7) for q in (p, p * p)]
NODAL_CASES = [(p, q) for p in (2, 3, 5, 7) for q in (p, p * p)]
ELLIPTIC_ODD_CASES = [(p, q) for p in (3, 5, 7, 11) for q in (p, p * p)] + [(5, 125)]
CHAR2_CASES = [(2, q) for q in (2, 4, 8, 16)]

CRITERION_1 = (
    [(CubicFamily.CUSPIDAL, p, q) for p, q in CUSPIDAL_CASES]
    + [(CubicFamily.NODAL, p, q) for p, q in NODAL_CASES]
    + [(CubicFamily.ELLIPTIC_ODD, p, q) for p, q in ELLIPTIC_ODD_CASES]
    + [(CubicFamily.ELLIPTIC_CHAR2_J0, p, q) for p, q in CHAR2_CASES]
    + [(CubicFamily.ELLIPTIC_CHAR2_JNZ, p, q) for p, q in CHAR2_CASES]
)


@lru_cache(maxsize=None)
def profile(family: CubicFamily, p: int, q: int):
    return hk_profile(reference_polynomial(family, p), q)


def _case_id(case):
    family, p, q = case
    return f"{family.value}-p{p}-q{q}"


@pytest.mark.parametrize("case", CRITERION_1, ids=_case_id)
def test_criterion_1_closed_forms(record, case):
    family, p, q = case
    engine, formula = profile(family, p, q).hk_value, hk_formula(family, p, q)
    record(1, _case_id(case), engine == formula)
    assert engine == formula, f"engine {engine} != formula {formula}"


def test_criterion_2_cayley(record):
    bad = []
    for p in (2, 3, 5):
        f = reference_polynomial(CubicFamily.CAYLEY, p)
        for q in range(1, 9):
            prof = hk_profile(f, q)
            socle = 2 * q - 1 if q > 1 else 0
            if prof.hk_value != 2 * q**3 - q or prof.a_q != socle:
                bad.append((p, q))
    record(2, "p in {2,3,5}, q in 1..8", not bad)
    assert not bad


def _table_closed_form(n: int, d: int, q: int) -> Fraction:
    Q = Fraction(q)
    if (n, d) == (2, 2):
        return Fraction(3, 2) * Q**2 - (Fraction(1, 2) if q % 2 else 0)
    if (n, d) == (3, 2):
        return Fraction(4, 3) * Q**3 - Q / 3
    if (n, d) == (2, 3):
        return Fraction(9, 4) * Q**2 - (Fraction(5, 4) if q % 2 else 2)
    return 2 * Q**3 - Q


def test_criterion_3_lower_bound_table(record):
    table_ok = all(
        series.lower_bound_L(n, d, q) == _table_closed_form(n, d, q)
        for n in (2, 3) for d in (2, 3) for q in range(1, 51)
    )
    quadrics = [(2, "x^2 - y*z", ["x", "y", "z"]), (3, "x*y - z*w", ["x", "y", "z", "w"])]
    quadric_ok = all(
        hk_profile(parse_poly(text, names, p), q).hk_value == series.lower_bound_L(n, 2, q)
        for n, text, names in quadrics for p in (3, 5) for q in range(1, 9)
    )
    record(3, "d/n table q in 1..50 and minimal quadrics q in 1..8", table_ok and quadric_ok)
    assert table_ok and quadric_ok


@pytest.mark.parametrize("p,q", ELLIPTIC_ODD_CASES, ids=lambda v: str(v))
def test_criterion_4_elliptic_maximal_rank(record, p, q):
    prof = profile(CubicFamily.ELLIPTIC_ODD, p, q)
    ok = (
        prof.a_q == (3 * q - 1) // 2
        and prof.iota_q == 3 * (q - 1) - prof.a_q
        and prof.maximal_rank
        and prof.hk_value == prof.L_q
    )
    record(4, f"elliptic_odd p={p} q={q}", ok)
    assert ok


SINGULAR_CASES = [
    (CubicFamily.NODAL, p, q) for p, q in NODAL_CASES if q > 2
] + [(CubicFamily.CUSPIDAL, p, q) for p, q in CUSPIDAL_CASES if q > 2]


@pytest.mark.parametrize("case", SINGULAR_CASES, ids=_case_id)
def test_criterion_4_singular_not_maximal_rank(record, case):
    family, p, q = case
    prof = profile(family, p, q)
    record(4, _case_id(case), not prof.maximal_rank)
    assert not prof.maximal_rank, (
        f"{family.value} at p={p}, q={q} has maximal rank: hk={prof.hk_value}, L={prof.L_q}, "
        f"a={prof.a_q}, m={prof.m_q}"
    )


def test_criterion_5_nodal_decomposition(record):
    ok = True
    for p in (3, 5, 7):
        for q in (p, p * p):
            dec = cubics.hk_singular_assembled(0, 1, p, q)
            engine = profile(CubicFamily.NODAL, p, q).hk_value
            ok &= dec.nodal and dec.hk_assembled == hk_formula(CubicFamily.NODAL, p, q) == engine
    ok &= all(cubics.dim_F(q) == cubics.dim_F_direct(q) for q in range(1, 201))
    models = [(0, 1, 3), (0, 1, 5), (0, 1, 7), (1, 0, 2)]
    ok &= all(cubics.dim_M_model(a1, a2, p, q) == cubics.dim_F(q)
              for a1, a2, p in models for q in range(1, 10))
    record(5, "assembly, dim_F identity q<=200, monomial model q<=9", ok)
    assert ok


def test_criterion_6_hankel(record):
    ok = all(hankel.geronimus_check_range(15)) and all(hankel.corollary_check_range(15))
    for p in (3, 5, 7, 11):
        ok &= all(hankel.geronimus_check_range(15, p)) and all(hankel.corollary_check_range(15, p))
    ok &= all(hankel.congruence_check(p, q) for p, q in ((3, 9), (5, 5), (5, 25), (7, 7)))
    for p in (5, 13):
        ok &= all(hankel.syzygy_rank_check(p, p, t) for t in range(p) if (t * t - 1) % p)
    record(6, "Geronimus/corollary k<=15, congruences, syzygy ranks", ok)
    assert ok


def test_criterion_7_beta_limit(record):
    printed = [Fraction(1), Fraction(1), Fraction(3, 4), Fraction(2, 3),
               Fraction(115, 192), Fraction(11, 20)]
    ok = [series.beta(i) for i in range(1, 7)] == printed
    for n, d in ((2, 3), (3, 3)):
        g501 = series.beta_limit_gap(n, d, 501)
        g1001 = series.beta_limit_gap(n, d, 1001)
        ok &= g501 < Fraction(1, 50) and g1001 < g501
    record(7, "beta_1..beta_6 and limit gaps", ok)
    assert ok


def test_criterion_8_property_suite(record):
    results = properties.run_suite(60, seed=20240531)
    required = {"duality", "theta_reciprocal_unimodal", "maximal_rank_equivalence", "brute_force"}
    coverage = all(required <= set(r.checks) for r in results)
    failed = [(r.p, r.n, r.d, r.q, r.poly) for r in results if not r.ok]
    record(8, f"{len(results)} random instances", coverage and not failed)
    assert coverage
    assert not failed
