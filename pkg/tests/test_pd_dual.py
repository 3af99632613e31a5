import math
import random

import pytest
from fractions import Fraction

from prismlab.intpoly import gen_binom
from prismlab.pd_dual import (
    NotPD, PDElem, delta_to_e, distr_mul, exact_sequence_check,
    f_ab, gsharp_comparison, log_pd, log_sharp_power, mu_p_pd_check,
    pair_distr, pair_xu, pairing_series, pd_normalize, rescaled_section,
    stirling_first,
)


def test_pd_normalize_examples():
    assert pd_normalize([0, 0, Fraction(1, 2)]) == PDElem.gamma(2)
    with pytest.raises(NotPD):
        pd_normalize([0, Fraction(1, 2)])
    assert pd_normalize([0, 1]) == PDElem.gamma(1)


def test_pd_mul_example():
    # x * gamma_2 = gamma_2 + 3 gamma_3  (x = 1 + gamma_1)
    x = PDElem((1, 1))
    got = x * PDElem.gamma(2)
    assert got == PDElem((0, 0, 1, 3))


def test_pd_divided_power_law():
    for m in range(5):
        for n in range(5):
            got = PDElem.gamma(m) * PDElem.gamma(n)
            assert got == PDElem.gamma(m + n).scale(math.comb(m + n, n))


def test_delta_to_e_examples():
    assert delta_to_e(2, 6).coords[:3] == (1, 2, 2)
    assert delta_to_e(0, 6).coords == (1, 0, 0, 0, 0, 0, 0)
    d1, dm1 = delta_to_e(1, 8), delta_to_e(-1, 8)
    assert distr_mul(d1, dm1) == delta_to_e(0, 8)


def test_delta_to_e_convolution():
    for m in range(-3, 4):
        for n in range(-3, 4):
            order = 8 + abs(m) + abs(n)
            lhs = distr_mul(delta_to_e(m, order), delta_to_e(n, order))
            # valid at filtration order >= |m| + |n|
            assert lhs == delta_to_e(m + n, order)


def test_delta_inverse_expansion():
    # delta_1^{-1} = sum (-1)^n n! e_n
    got = delta_to_e(-1, 6)
    assert got.coords == tuple((-1) ** n * math.factorial(n) for n in range(7))


def test_pairing_matrix():
    for m in range(-6, 7):
        for n in range(13):
            assert pair_xu(m, PDElem.gamma(n)) == gen_binom(m, n)
            d = delta_to_e(m, 14)
            assert pair_distr(d, PDElem.gamma(n)) == gen_binom(m, n)


def test_pair_delta0():
    for n in range(1, 6):
        assert pair_xu(0, PDElem.gamma(n)) == 0
    assert pair_xu(0, PDElem.gamma(0)) == 1


def test_pairing_linear():
    f = PDElem((2, -3, 5))
    assert pair_xu(4, f) == 2 - 3 * 4 + 5 * 6


def test_f_ab_example():
    f = f_ab(0, 2)  # u(u-1)(u-2)
    # evaluate at u = 2
    val = sum(c * 2 ** i for i, c in enumerate(f))
    assert val == 0
    assert len(pairing_series(4)) == 5


def test_bialgebra_duality():
    # <delta_m delta_n, f> = <delta_m x delta_n, Delta f> with
    # Delta gamma_k = sum gamma_i tensor x^i gamma_j; restricted to pure
    # delta-points the prefactor acts through the Vandermonde identity
    rng = random.Random(0)
    for _ in range(20):
        m, n = rng.randrange(-4, 5), rng.randrange(-4, 5)
        f = PDElem(tuple(rng.randrange(-5, 6) for _ in range(7)))
        lhs = pair_xu(m + n, f)
        rhs = 0
        for k, a in enumerate(f.coords):
            for i in range(k + 1):
                rhs += a * gen_binom(m, i) * gen_binom(n, k - i)
        assert lhs == rhs


def test_log_pd_coords():
    # log x = gamma_1 - gamma_2 + 2 gamma_3 - ...
    got = log_pd(3)
    assert got == PDElem((0, 1, -1, 2))


def test_log_sharp_k1():
    assert log_sharp_power(1, 3) == PDElem((0, 1, -1, 2))


def test_log_sharp_k2():
    got = log_sharp_power(2, 4)
    assert got == PDElem((0, 0, 1, -3, 11))


def test_log_sharp_leading():
    for k in (2, 3, 4):
        got = log_sharp_power(k, k)
        assert got == PDElem.gamma(k)


def test_log_sharp_stirling_certificate():
    for n in range(21):
        for k in range(1, 11):
            if k <= n <= 20:
                got = log_sharp_power(k, n).coord(n)
                assert got == stirling_first(n, k)


def test_mu_p_pd_check():
    rng = random.Random(1)
    for p in (2, 3, 5):
        rep = mu_p_pd_check(p, 50, rng)
        assert not rep["failures"]


def test_mu_p_example_p2():
    # f = x - 1 in Z[x]/(x^2-1): f^2 = -2(x-1)
    rep = mu_p_pd_check(2, 1, random.Random(2))
    assert not rep["failures"]


def test_rescaled_section():
    assert rescaled_section(2) == PDElem((0, 1, 1))
    assert rescaled_section(3) == PDElem((0, 1, 2, 2))


def test_gsharp_reduction_example_p2():
    # gamma_2(t) = z - t
    from prismlab.pd_dual import _gsharp_basis_elem, reduce_against_basis
    z = rescaled_section(2)
    basis = {0: PDElem.from_int(1), 1: PDElem.gamma(1), 2: z}
    coords = reduce_against_basis(PDElem.gamma(2), basis, 2)
    assert coords == {2: Fraction(1), 1: Fraction(-1)}


def test_gsharp_comparison():
    rng = random.Random(3)
    for p in (2, 3):
        rep = gsharp_comparison(p, 12, 25, rng)
        assert not rep["failures"]
        expected = rescaled_section(p).coords
        assert tuple(rep["z_coords"]) == expected


def test_exact_sequence_check():
    for p in (2, 3):
        rep = exact_sequence_check(p, 6, 5)
        assert rep["log_xu"]
        assert rep["log_at_zero"]
        assert rep["log_mu_p"]
        assert rep["exp_pairing"]
