import random

import pytest
from fractions import Fraction

from prismlab.ringcore import (
    CyclotomicRing, DoesNotConverge, ExactInt, ExactRat, ModP,
    NonIntegralCoefficient, NonzeroConstantTerm, Prec, QPoly, QSeriesRing,
    RingMismatch, TruncSeries, clear_denominators, h_element, padic_log,
    phi_p_element, q_element, series_arith, series_compose, series_exp,
    series_inverse,
)


def z_series(ring, order, var="z"):
    return TruncSeries.var(ring, (var,), order, var)


def test_prec_validates():
    Prec(p=5)
    with pytest.raises(ValueError):
        Prec(p=4)
    with pytest.raises(ValueError):
        Prec(p=2, n_p=0)


def test_ring_basics():
    Z = ExactInt()
    assert Z.add(2, 3) == 5
    Q = ExactRat()
    assert Q.mul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    R = ModP(2, 4)
    assert R.add(9, 9) == 2
    assert R.inv_int(3) == 11  # 3 * 11 = 33 = 1 mod 16
    assert R.inv_int(2) is None


def test_qpoly_and_qseries():
    P = QPoly()
    q = q_element(P)
    h = h_element(P)
    assert P.sub(q, P.one) == h
    # (q-1)*(q+1) = q^2 - 1 = h^2 + 2h
    assert P.mul(h, P.add(q, P.one)) == P.make_ints([0, 2, 1])
    S = QSeriesRing(3)
    hh = h_element(S)
    assert S.pow(hh, 3) == S.zero
    assert S.pow(hh, 2) == S.make_ints([0, 0, 1])


def test_cyclotomic():
    C = CyclotomicRing(3)
    z = q_element(C)
    # 1 + z + z^2 = 0
    assert C.add(C.add(C.one, z), C.mul(z, z)) == C.zero
    assert C.pow(z, 3) == C.one
    Cm = CyclotomicRing(3, n_p=2)
    zm = q_element(Cm)
    assert Cm.pow(zm, 3) == Cm.one


def test_phi_p_element():
    P = QPoly()
    # Phi_2(q) = 1 + q = 2 + h
    assert phi_p_element(P, 2) == P.make_ints([2, 1])
    # Phi_3(q) = 1 + q + q^2 = 3 + 3h + h^2
    assert phi_p_element(P, 3) == P.make_ints([3, 3, 1])
    # q^p - 1 = (q-1) Phi_p(q)
    for p in (2, 3, 5):
        q = q_element(P)
        lhs = P.sub(P.pow(q, p), P.one)
        rhs = P.mul(h_element(P), phi_p_element(P, p))
        assert lhs == rhs


def test_series_mul_trivial():
    Z = ExactInt()
    z = z_series(Z, 2)
    one = TruncSeries.one(Z, ("z",), 2)
    # (1+z)(1-z) = 1 - z^2 at order 2
    assert (one + z) * (one - z) == TruncSeries.from_int_terms(
        Z, ("z",), 2, {(0,): 1, (2,): -1})


def test_series_commutes_two_vars():
    Z = ExactInt()
    z1 = TruncSeries.var(Z, ("z1", "z2"), 4, "z1")
    z2 = TruncSeries.var(Z, ("z1", "z2"), 4, "z2")
    assert z1 * z2 + z2 * z1 == (z1 * z2).scale_int(2)


def test_series_convolution_truncates():
    # (sum_{n<=4} z^n) * (1 - z) = 1 at order 4 (the z^5 term is cut)
    Z = ExactInt()
    f = TruncSeries.from_int_terms(Z, ("z",), 4, {(n,): 1 for n in range(5)})
    g = TruncSeries.from_int_terms(Z, ("z",), 4, {(0,): 1, (1,): -1})
    assert f * g == TruncSeries.one(Z, ("z",), 4)


def test_series_ring_mismatch():
    Z, Q = ExactInt(), ExactRat()
    with pytest.raises(RingMismatch):
        series_arith(z_series(Z, 2), z_series(Q, 2), "add")


def test_compose_trivial():
    Z = ExactInt()
    one = TruncSeries.one(Z, ("z",), 3)
    f = one + z_series(Z, 3)
    g = -z_series(Z, 3)
    assert series_compose(f, g) == one - z_series(Z, 3)


def test_compose_exp_2z():
    Q = ExactRat()
    z = z_series(Q, 4)
    f = series_exp(z)
    g = z.scale(Fraction(2))
    got = series_compose(f, g)
    want = TruncSeries(Q, ("z",), {
        (0,): Fraction(1), (1,): Fraction(2), (2,): Fraction(2),
        (3,): Fraction(4, 3), (4,): Fraction(2, 3)}, 4)
    assert got == want


def test_compose_rational_oracle():
    # f = z/(1+z) composed with itself gives z/(1+2z)
    Q = ExactRat()
    z = z_series(Q, 3)
    one = TruncSeries.one(Q, ("z",), 3)
    f = z * series_inverse(one + z)
    got = series_compose(f, f)
    want = z * series_inverse(one + z.scale(Fraction(2)))
    assert got == want
    assert want == TruncSeries(Q, ("z",), {
        (1,): Fraction(1), (2,): Fraction(-2), (3,): Fraction(4)}, 3)


def test_compose_rejects_constant_term():
    Q = ExactRat()
    z = z_series(Q, 3)
    one = TruncSeries.one(Q, ("z",), 3)
    with pytest.raises(NonzeroConstantTerm):
        series_compose(series_exp(z), one + z)


def test_compose_associative():
    Z = ExactInt()
    rng = random.Random(7)

    def rand_series():
        return TruncSeries(Z, ("z",),
                           {(n,): rng.randrange(-4, 5) for n in range(1, 6)}, 6)

    for _ in range(10):
        f, g, h = rand_series(), rand_series(), rand_series()
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_ring_axioms_random_triples():
    Z = ExactInt()
    rng = random.Random(11)

    def rand_series():
        return TruncSeries(Z, ("z1", "z2"),
                           {(i, j): rng.randrange(-3, 4)
                            for i in range(3) for j in range(3)}, 4)

    for _ in range(20):
        a, b, c = rand_series(), rand_series(), rand_series()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_clear_denominators_examples():
    Q = ExactRat()
    f = TruncSeries(Q, ("z",), {(3,): Fraction(4, 3)}, 4)
    got = clear_denominators(f, ModP(2, 4))
    assert got.coefficient((3,)) == 12
    with pytest.raises(NonIntegralCoefficient):
        clear_denominators(TruncSeries(Q, ("z",), {(1,): Fraction(1, 2)}, 2),
                           ModP(2, 4))
    f = TruncSeries(Q, ("z",), {(1,): Fraction(1)}, 2)
    assert clear_denominators(f, ExactInt()).coefficient((1,)) == 1


def test_clear_denominators_roundtrip():
    Z, Q = ExactInt(), ExactRat()
    rng = random.Random(3)
    f = TruncSeries(Z, ("z",), {(n,): rng.randrange(-9, 10) for n in range(5)}, 4)
    up = f.map_coeffs(Fraction, Q)
    assert clear_denominators(up, Z) == f


def test_padic_log_exact():
    Q = ExactRat()
    z = z_series(Q, 3)
    one = TruncSeries.one(Q, ("z",), 3)
    got = padic_log(one + z)
    assert got == TruncSeries(Q, ("z",), {
        (1,): Fraction(1), (2,): Fraction(-1, 2), (3,): Fraction(1, 3)}, 3)


def test_padic_log_inverse_of_exp():
    Q = ExactRat()
    z = z_series(Q, 4)
    p = 3
    f = series_exp(z.scale(Fraction(p)))
    assert padic_log(f) == z.scale(Fraction(p))


def test_padic_log_zeta_is_zero():
    # log of a primitive p-th root of unity vanishes at mod-p^n precision
    C = CyclotomicRing(3, n_p=4)
    z = q_element(C)
    u = TruncSeries.const(C, ("z",), 2, z)
    got = padic_log(u)
    assert got.is_zero()


def test_padic_log_needs_modulus():
    C = CyclotomicRing(3)  # exact: the log of zeta never stabilizes
    z = q_element(C)
    u = TruncSeries.const(C, ("z",), 2, z)
    with pytest.raises(DoesNotConverge):
        padic_log(u)


def test_exact_and_modular_backends_agree():
    # the same computation over Z[h] and over Z/p^n[h] matches after reduction
    rng = random.Random(13)
    E = QSeriesRing(4)
    M = QSeriesRing(4, p=3, n_p=4)
    for _ in range(10):
        coeffs = {(n,): [rng.randrange(-40, 40) for _ in range(4)]
                  for n in range(4)}
        a_e = TruncSeries(E, ("z",), {e: E.make_ints(c) for e, c in coeffs.items()}, 4)
        a_m = TruncSeries(M, ("z",), {e: M.make_ints(c) for e, c in coeffs.items()}, 4)
        prod_e = a_e * a_e
        prod_m = a_m * a_m
        _, _, reduce_ = M.lifted()
        assert prod_e.map_coeffs(reduce_, M) == prod_m


def test_padic_log_product_rule():
    # units congruent to 1 modulo p, where the log series is p-integral
    R = QSeriesRing(4, p=3, n_p=4)
    rng = random.Random(5)
    for _ in range(5):
        a = TruncSeries(R, ("z",), {
            (0,): R.one,
            (1,): R.make_ints([3 * rng.randrange(9), rng.randrange(3) * 3]),
            (2,): R.make_ints([rng.randrange(-3, 4) * 3]),
        }, 4)
        b = TruncSeries(R, ("z",), {
            (0,): R.one,
            (1,): R.make_ints([3 * rng.randrange(-2, 3)]),
            (2,): R.make_ints([0, 3 * rng.randrange(5)]),
        }, 4)
        assert padic_log(a * b).eq(padic_log(a) + padic_log(b))
