import random

import numpy as np
import pytest

from hilbertkunz.errors import NotHomogeneous, PreconditionViolated, TooLarge, ZeroPolynomial
from hilbertkunz.linalg import FpMatrix, rank_mod_p
from hilbertkunz.polynomial import MultiPoly, all_forms, parse_poly, random_homogeneous
from hilbertkunz.quotient import (
    brute_force_colength, hk_profile, is_in_frobenius_power, mult_matrix, rank, slice_basis,
)
from hilbertkunz.series import theta_dim

XYZ = ["x", "y", "z"]
XYZW = ["x", "y", "z", "w"]
ELLIPTIC = "y^2*z - x^3 - x*z^2"
CAYLEY = "x*y*z + x*y*w + x*z*w + y*z*w"


def poly(text, p, names=XYZ):
    return parse_poly(text, names, p)


def test_slice_basis_examples():
    assert slice_basis(2, 2, 3).as_tuples() == [(1, 1, 1)]
    assert slice_basis(2, 2, 1).as_tuples() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    # coefficient of t^6 in (1 + ... + t^4)^3 is C(8,2) - 3*C(3,2)
    coeff = np.convolve(np.convolve(np.ones(5, int), np.ones(5, int)), np.ones(5, int))[6]
    assert len(slice_basis(2, 5, 6)) == coeff == 19


@pytest.mark.parametrize("n,q", [(1, 4), (2, 3), (2, 5), (3, 3)])
def test_slice_basis_sizes_and_order(n, q):
    for i in range(-1, (n + 1) * (q - 1) + 2):
        basis = slice_basis(n, q, i)
        assert len(basis) == theta_dim(n, q, i)
        tuples = basis.as_tuples()
        assert tuples == sorted(tuples, reverse=True)
        assert all(sum(m) == i and max(m) < q for m in tuples)


def test_mult_matrix_examples():
    M = mult_matrix(poly("x^3", 3), 2, 3)
    assert (M.rows, M.cols) == (1, 1) and rank(M) == 0
    assert rank(mult_matrix(poly("x*y*z", 3), 2, 3)) == 1
    assert rank(mult_matrix(poly(ELLIPTIC, 5), 5, 3)) == 1


def test_mult_matrix_entries_by_hand():
    # f = x + 2y on Theta_0 -> Theta_1 in k[x,y]/(x^2,y^2)
    M = mult_matrix(poly("x + 2*y", 5, ["x", "y"]), 2, 1)
    assert M.entries.tolist() == [[1], [2]]


def test_mult_matrix_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneous):
        mult_matrix(poly("x^2 + y", 5), 3, 2)


def test_rank_examples():
    assert rank(FpMatrix.zeros(3, 3, 5)) == 0
    assert rank(FpMatrix.from_rows(np.eye(4, dtype=np.int64), 7)) == 4
    assert rank(FpMatrix.from_rows([[1, 2], [2, 4]], 5)) == 1


def _rank_fraction_free(rows, p):
    """Reference rank over F_p by plain Python elimination."""
    m = [[v % p for v in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] * inv
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


@pytest.mark.parametrize("p", [2, 3, 7, 101, 3037000493])
def test_rank_matches_reference(p):
    rng = random.Random(p)
    for _ in range(30):
        rows, cols = rng.randint(1, 9), rng.randint(1, 9)
        k = rng.randint(1, min(rows, cols))
        # low-rank products make rank deficiency common
        a = np.array([[rng.randrange(p) for _ in range(k)] for _ in range(rows)], dtype=object)
        b = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(k)], dtype=object)
        m = [[int(v) % p for v in row] for row in a.dot(b)]
        assert rank_mod_p(np.array(m, dtype=np.int64), p) == _rank_fraction_free(m, p)


def test_hk_profile_examples():
    prof = hk_profile(poly(ELLIPTIC, 5), 5)
    assert (prof.hk_value, prof.a_q, prof.maximal_rank) == (55, 7, True)
    assert hk_profile(poly("z*y^2 - x^3", 5), 5).hk_value == 57
    prof = hk_profile(poly("x^3", 3), 1)
    assert (prof.hk_value, prof.a_q) == (1, 0)
    prof = hk_profile(poly(CAYLEY, 3, XYZW), 4)
    assert (prof.hk_value, prof.a_q) == (124, 7)


def test_hk_profile_degree_above_top():
    # f maps everything to zero, so theta = Theta
    prof = hk_profile(poly("x^5", 3), 2)
    assert prof.hk_value == 8 and prof.maximal_rank


def test_hk_profile_errors():
    with pytest.raises(NotHomogeneous):
        hk_profile(poly("x^2 + y", 5), 3)
    with pytest.raises(ZeroPolynomial):
        hk_profile(MultiPoly({}, 3, 5), 3)
    with pytest.raises(PreconditionViolated):
        hk_profile(poly("x", 5), 0)
    with pytest.raises(PreconditionViolated):
        hk_profile(poly("x*y*z", 5), 3, method="monic")


def test_brute_force_examples():
    f = poly("x^3", 3)
    assert brute_force_colength(f, 3) == hk_profile(f, 3).hk_value
    assert brute_force_colength(poly("y^2*z - x^3", 3), 3) == 21
    assert brute_force_colength(poly("x^2 - y*z", 3), 3) == 13
    with pytest.raises(TooLarge):
        brute_force_colength(poly(CAYLEY, 3, XYZW), 18)


def test_is_in_frobenius_power_examples():
    assert is_in_frobenius_power(poly("x^3", 3), 2)
    assert not is_in_frobenius_power(poly("x*y*z", 3), 2)
    assert is_in_frobenius_power(poly("x^2*y^2 + y^4", 3), 2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_every_binary_quadric_over_f2_matches_oracle(q):
    for f in all_forms(3, 2, 2):
        assert hk_profile(f, q).hk_value == brute_force_colength(f, q)


@pytest.mark.parametrize("seed", range(6))
def test_monic_and_slice_routes_agree(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5, 7])
    nv, d = rng.choice([(3, 2), (3, 3), (3, 4), (4, 2), (4, 3)])
    f = random_homogeneous(nv, d, p, rng, density=0.6)
    f = f + MultiPoly({tuple(d if k == 0 else 0 for k in range(nv)): 1}, nv, p)
    if f.is_zero() or not f.pure_power_variables():
        f = f + MultiPoly({tuple(d if k == 1 else 0 for k in range(nv)): 1}, nv, p)
    for q in (2, 3, 5, 6):
        slices = hk_profile(f, q, method="slices")
        monic = hk_profile(f, q, method="monic")
        assert slices.theta_quotient_dims == monic.theta_quotient_dims
        assert slices.ranks == monic.ranks
        if q ** nv <= 2000:
            assert brute_force_colength(f, q) == slices.hk_value


def test_auto_route_on_large_slices():
    prof = hk_profile(poly(ELLIPTIC, 5), 25)
    assert prof.method == "slices" and prof.hk_value == 1405
    assert hk_profile(poly(ELLIPTIC, 5), 25, method="monic").hk_value == 1405


def _random_invertible(nv, p, rng):
    while True:
        m = [[rng.randrange(p) for _ in range(nv)] for _ in range(nv)]
        if rank_mod_p(np.array(m, dtype=np.int64), p) == nv:
            return m


@pytest.mark.parametrize("p,q,nv,d", [(2, 4, 3, 3), (3, 3, 3, 3), (3, 9, 3, 2), (5, 5, 3, 3), (3, 3, 4, 2)])
def test_frobenius_power_profiles_are_coordinate_free(p, q, nv, d):
    rng = random.Random(p * 100 + q)
    f = random_homogeneous(nv, d, p, rng)
    base = hk_profile(f, q)
    for _ in range(5):
        g = f.substitute_linear(_random_invertible(nv, p, rng))
        prof = hk_profile(g, q)
        assert prof.theta_quotient_dims == base.theta_quotient_dims


def test_per_degree_duality():
    f = poly("x^2*y + y^2*z + 2*z^3", 5)
    prof = hk_profile(f, 5)
    top = 3 * 4
    assert [prof.theta_quotient_dims[i] for i in range(top + 1)] == \
        [prof.nullities[top - i] for i in range(top + 1)]


def test_generalized_value_depends_on_coordinates():
    # q = 2 is not a power of 3: the generalized function may move under GL(3)
    rng = random.Random(11)
    f = poly("x*y*z", 3)
    values = {hk_profile(f.substitute_linear(_random_invertible(3, 3, rng)), 2).hk_value
              for _ in range(20)}
    assert 7 in values and len(values) > 1
