import random

import pytest
from fractions import Fraction

from prismlab.derham import NotTeichmuller
from prismlab.qprism import (
    GQPoint, TailNotStabilized, bh_coords,
    canonical_point, derham_specialization_of_x0, equivariance_report,
    factorization_identity, frobenius_of_point, gq_at_q1_matches_derham,
    gq_op, gq_ring, gq_to_unit, hodge_tate_check, phi_of_section_identity,
    q_exp_agreement, q_exponential, q_log,
    q_log_of_sigma, q_log_precision_loss, q_power_substitute, sample_gq,
    sigma_point, zp_action,
)
from prismlab.ringcore import TruncSeries, h_element, q_element
from prismlab.witt import WittVector, witt_op, zero_vector


def test_factorization_and_section_identities():
    for p in (2, 3, 5):
        assert factorization_identity(p)
    for p in (2, 3):
        assert phi_of_section_identity(p)


def test_sigma_unit_is_qp():
    for p in (2, 3):
        ring = gq_ring(p, 4, 4)
        s = sigma_point(ring, p, 2)
        assert ring.eq(gq_to_unit(s), ring.pow(q_element(ring), p))


def test_sigma_is_delta_point():
    # F(sigma(q)) = sigma(q^p): the Witt Frobenius matches the base map
    for p in (2, 3):
        ring = gq_ring(p, 4, 4)
        s = sigma_point(ring, p, 3)
        fs = frobenius_of_point(s)
        # sigma at base q^p: x = [q^p] - 1
        from prismlab.witt import teichmuller, witt_neg
        qp = ring.pow(q_element(ring), p)
        expected = witt_op(teichmuller(ring, p, 2, qp),
                           witt_neg(teichmuller(ring, p, 2, ring.one)), "add")
        assert fs.x == expected


def test_gq_membership_enforced():
    ring = gq_ring(3, 4, 4)
    bad = WittVector(ring, 3, [ring.one, ring.one])
    with pytest.raises(NotTeichmuller):
        GQPoint(bad)


def test_gq_group_unit():
    rng = random.Random(0)
    for p in (2, 3):
        ring = gq_ring(p, 4, 4)
        a = sample_gq(ring, p, 2, rng)
        zero = GQPoint(zero_vector(ring, p, 2), check=False)
        assert gq_op(a, zero) == a


def test_gq_to_unit_multiplicative():
    rng = random.Random(1)
    ring = gq_ring(3, 4, 4)
    for _ in range(5):
        a, b = sample_gq(ring, 3, 2, rng), sample_gq(ring, 3, 2, rng)
        s = gq_op(a, b)
        assert ring.eq(gq_to_unit(s), ring.mul(gq_to_unit(a), gq_to_unit(b)))


def test_gq_law_at_q1_is_derham():
    rng = random.Random(2)
    for p in (2, 3):
        assert gq_at_q1_matches_derham(p, 4, 2, rng)


# --- q-exponential ------------------------------------------------------------


def test_q_exponential_constant_term():
    e = q_exponential(2, 4, 4)
    coords = bh_coords(e["ring"], e["element"])
    H = e["ring"].scalar
    assert H.eq(coords[0], H.one)


def test_q_exp_agreement_criterion():
    for p in (2, 3):
        rep = q_exp_agreement(p, 4, 4, 4)
        assert rep["coords_are_phi_powers"]
        assert rep["agree"]


def test_q_exp_mod_q_minus_1():
    # at q = 1 the coordinates Phi^k become p^k, the divided-power shape
    for p in (2, 3):
        e = q_exponential(p, 4, 4)
        coords = bh_coords(e["ring"], e["element"])
        for k in range(5):
            c = coords[k] if k < len(coords) else ()
            const = c[0] if c else Fraction(0)
            assert const == p ** k


# --- canonical point -----------------------------------------------------------


def test_canonical_point_criterion():
    for p in (2, 3):
        cp = canonical_point(p, 4, 4, L=2, t_deg=4)
        assert cp["teichmuller"]
        assert cp["rank_one"]
        assert cp["zeroth_component"]


def test_canonical_point_derham_specialization():
    for p in (2, 3):
        assert derham_specialization_of_x0(p, 4, 4)


def test_r0_relation():
    from prismlab.qprism import r0_relation_check
    for p in (2, 3):
        rep = r0_relation_check(p, 4, 4)
        assert rep["rank_one"] and rep["t0_fiber"] and rep["q1_fiber"]


# --- q-logarithm ----------------------------------------------------------------


def test_q_log_of_sigma():
    assert q_log_of_sigma(3, 4, 4)[0]
    assert q_log_of_sigma(2, 6, 4)[0]


def test_q_log_of_unit_point():
    ring = gq_ring(3, 4, 4)
    zero = GQPoint(zero_vector(ring, 3, 2), check=False)
    out_ring, val = q_log(zero, 4, 4)
    assert out_ring.is_zero(val)


def test_q_log_additive():
    for p, n_p in ((3, 4), (2, 7)):
        rng = random.Random(3)
        ring = gq_ring(p, n_p, 4)
        for _ in range(5):
            a, b = sample_gq(ring, p, 2, rng), sample_gq(ring, p, 2, rng)
            oring, vs = q_log(gq_op(a, b), n_p, 4)
            _, va = q_log(a, n_p, 4)
            _, vb = q_log(b, n_p, 4)
            assert oring.eq(vs, oring.add(va, vb))


def test_q_log_precision_guard():
    assert q_log_precision_loss(3, 4) == 2
    ring = gq_ring(3, 2, 4)
    s = sigma_point(ring, 3, 2)
    with pytest.raises(TailNotStabilized):
        q_log(s, 2, 4)


# --- unit action -----------------------------------------------------------------


def test_zp_action_formula_n2():
    ring = gq_ring(3, 4, 6)
    act = zp_action(ring, 2, 6)
    # z -> (2z + (q-1)z^2)/(q+1)
    q = q_element(ring)
    vinv_num = TruncSeries(ring, ("z",), {
        (1,): ring.from_int(2), (2,): h_element(ring)}, 6)
    lhs = act.scale(ring.add(q, ring.one))
    assert lhs == vinv_num


def test_zp_action_identity():
    ring = gq_ring(3, 4, 6)
    act = zp_action(ring, 1, 6)
    assert act == TruncSeries.var(ring, ("z",), 6, "z")


def test_equivariance_criterion():
    for p in (2, 3, 5):
        for n in (2, 3, 4):
            if n % p == 0:
                continue
            rep = equivariance_report(p, n, 6, 6, 6)
            assert rep["equivariant"]
            assert rep["composes"]
            assert rep["exact_polynomial_identity"]


# --- Hodge-Tate fiber -------------------------------------------------------------


def test_hodge_tate_criterion():
    for p in (2, 3, 5):
        rep = hodge_tate_check(p, 6, 5)
        assert rep["additive"]
        assert rep["kills_torsion_point"]
        assert rep["leading_one"]


def test_q_power_substitute():
    ring = gq_ring(3, 4, 4)
    q = q_element(ring)
    got = q_power_substitute(ring, q, 3)
    assert ring.eq(got, ring.pow(q, 3))


def test_section_vanishes_exactly_on_cyclotomic_fiber():
    # the section value Phi_p(q) is zero in Z[q]/(Phi_p(q)) and is a
    # nonzerodivisor in Z[q]: its vanishing locus is exactly that quotient
    from prismlab.ringcore import CyclotomicRing, QPoly, phi_p_element
    for p in (2, 3, 5):
        C = CyclotomicRing(p)
        assert C.is_zero(phi_p_element(C, p))
        P = QPoly()
        phi = phi_p_element(P, p)
        # nonzerodivisor: multiplication by Phi is injective on samples
        rng = random.Random(17)
        for _ in range(10):
            f = P.make_ints([rng.randrange(-9, 10) for _ in range(4)])
            if not P.is_zero(f):
                assert not P.is_zero(P.mul(phi, f))
