"""The acceptance matrix: twelve exact checks at fixed truncations.

Each criterion function returns (ok, detail) and is deterministic for a
fixed seed; the same bodies back both the pytest acceptance module and the
CLI criteria suites.  trials_scale shrinks the documented trial counts for
quick runs (the defaults reproduce the full matrix)."""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


def _n(base: int, scale: float) -> int:
    return max(1, int(base * scale))


def criterion_1(seed: int = 0, scale: float = 1.0) -> tuple:
    """Witt kernel: ghost roundtrip, universal agreement, FV = p,
    Teichmuller Frobenius, big-Witt Frobenius composition."""
    from .ringcore import ExactInt, QPoly, h_element
    from .witt import (BigWitt, WittVector, frobenius, frobenius_big,
                       from_ghost, from_int_vector, ghost, teichmuller,
                       teichmuller_big, verschiebung, witt_op,
                       witt_op_universal)
    Z = ExactInt()
    ok = True
    for p in (2, 3, 5):
        rng = random.Random(seed * 7919 + 100 + p)
        bound = 2 if p == 5 else 9
        for _ in range(_n(1000, scale)):
            w = WittVector(Z, p, [rng.randrange(-9, 10) for _ in range(4)])
            ok = ok and from_ghost(Z, p, ghost(w)) == w
            a = WittVector(Z, p, [rng.randrange(-bound, bound + 1)
                                  for _ in range(4)])
            b = WittVector(Z, p, [rng.randrange(-bound, bound + 1)
                                  for _ in range(4)])
            op = "add" if rng.randrange(2) else "mul"
            ok = ok and witt_op_universal(a, b, op) == witt_op(a, b, op)
        ok = ok and frobenius(verschiebung(teichmuller(Z, p, 4, 1))) == \
            from_int_vector(Z, p, 3, p)
        ok = ok and frobenius(teichmuller(Z, p, 4, 5)) == \
            teichmuller(Z, p, 3, 5 ** p)
    P = QPoly()
    rngb = random.Random(seed * 7919 + 9)
    w = teichmuller_big(P, 12, h_element(P))
    ok = ok and frobenius_big(frobenius_big(w, 2), 2) == \
        frobenius_big(w, 4).truncate(3)
    v = BigWitt(Z, 12, {k: rngb.randrange(-3, 4) for k in range(1, 13)})
    ok = ok and frobenius_big(frobenius_big(v, 2), 2) == \
        frobenius_big(v, 4).truncate(3)
    return ok, "p in {2,3,5}, L = 4, %d vectors each" % _n(1000, scale)


def criterion_2(seed: int = 0, scale: float = 1.0) -> tuple:
    """de Rham log/exp: mutual inverses, eigen landing, homomorphism, and
    the Frobenius power identity, on the full grid."""
    from .derham import (f_log, frob_power_identity, g_exp, gdr_op, is_eigen,
                         sample_eigen, sample_gdr)
    from .ringcore import ModP
    from .witt import witt_op
    ok = True
    for p in (2, 3):
        for L in (2, 3, 4):
            for n_p in (4, 6):
                R = ModP(p, n_p)
                rng = random.Random(seed * 7919 + 1000 * p + 10 * L + n_p)
                for _ in range(_n(100, scale)):
                    a = sample_gdr(R, p, L, rng)
                    y = f_log(a)
                    ok = ok and is_eigen(y) and g_exp(y) == a
                y = sample_eigen(R, p, L, rng)
                ok = ok and f_log(g_exp(y)) == y
                a, b = sample_gdr(R, p, L, rng), sample_gdr(R, p, L, rng)
                ok = ok and f_log(gdr_op(a, b)) == \
                    witt_op(f_log(a), f_log(b), "add")
                ok = ok and frob_power_identity(a)["ok"]
    return ok, "grid {2,3} x {2,3,4} x {4,6}, %d points per cell" % _n(100, scale)


def criterion_3(seed: int = 0, scale: float = 1.0) -> tuple:
    """Characteristic-p discrepancy and the kernel lemma px = x^p = 0,
    exhaustively over the length-3 Witt vectors of F_p[a]/(a^3) with Fx=0."""
    from .derham import discrepancy_check
    from .ringcore import ModP, PolyQuotRing
    from .witt import WittVector, frobenius, scalar_mul, witt_pow
    ok = True
    counts = []
    for p in (2, 3):
        R = PolyQuotRing(ModP(p, 1), (0, 0, 0, 1), "a")
        elems = [R.make_ints(v) for v in itertools.product(range(p), repeat=3)]
        nilp = [c for c in elems if R.is_zero(R.pow(c, p))]
        xs = [WittVector(R, p, comps)
              for comps in itertools.product(nilp, repeat=3)]
        rep = discrepancy_check(R, p, 3, xs)
        ok = ok and not rep["failures"] and rep["differs_from_identity"]
        counts.append(rep["count"])
        for x in xs:
            ok = ok and frobenius(x).is_zero()
            ok = ok and scalar_mul(p, x).is_zero()
            ok = ok and witt_pow(x, p).is_zero()
    return ok, "exhaustive kernels of sizes %s" % counts


def criterion_4(seed: int = 0, scale: float = 1.0) -> tuple:
    """Canonical Witt point: Teichmuller identity componentwise and the
    rank-one condition, p in {2,3}, L=2, (n_p, n_q) = (4,4), t-degree <= 4."""
    from .qprism import canonical_point
    ok = True
    for p in (2, 3):
        rep = canonical_point(p, 4, 4, L=2, t_deg=4)
        ok = ok and rep["teichmuller"] and rep["rank_one"] \
            and rep["zeroth_component"]
    return ok, "L = 2, (n_p, n_q) = (4, 4), t-degree <= 4"


def criterion_5(seed: int = 0, scale: float = 1.0) -> tuple:
    """The two q-exponential sums agree, p in {2,3}, (4,4), t-degree <= 4."""
    from .qprism import q_exp_agreement
    ok = True
    tails = []
    for p in (2, 3):
        rep = q_exp_agreement(p, 4, 4, 4)
        ok = ok and rep["coords_are_phi_powers"] and rep["agree"]
        tails.append(rep["tails"])
    return ok, "tail cuts %s" % tails


def criterion_6(seed: int = 0, scale: float = 1.0) -> tuple:
    """Hopf algebra: integral structure constants to total degree 12, the
    h = 1 and h = 0 specializations, Adams ring-hom and coproduct
    compatibility for n <= 4 to degree 8."""
    from .intpoly import IntPoly, int_mul
    from .qhopf import (QH, B0Elem, adams, b0_coproduct, b0_mul,
                        structure_constants, v_scalar)
    ok = True
    for m in range(7):
        for n in range(m, 13 - m):
            for g in structure_constants(m, n):
                ok = ok and (QH.is_zero(g)
                             or all(f.denominator == 1 for f in g))
    rng = random.Random(seed * 7919 + 6)

    def at_h1(x):
        out = IntPoly(())
        for n, c in enumerate(x.specialize_h(Fraction(1))):
            v = c[0] if c else Fraction(0)
            out = out + IntPoly.basis(n).scale(int(v))
        return out

    for _ in range(_n(20, scale)):
        a = B0Elem(tuple(QH.make([Fraction(rng.randrange(-3, 4))])
                         for _ in range(4)))
        b = B0Elem(tuple(QH.make([Fraction(rng.randrange(-3, 4))])
                         for _ in range(4)))
        ok = ok and at_h1(b0_mul(a, b)) == int_mul(at_h1(a), at_h1(b))
    for m in range(5):
        for n in range(5):
            spec = b0_mul(B0Elem.basis(m), B0Elem.basis(n)).specialize_h(
                Fraction(0))
            for k, c in enumerate(spec):
                v = c[0] if c else Fraction(0)
                ok = ok and v == (math.comb(m + n, n) if k == m + n else 0)
    for _ in range(_n(10, scale)):
        a = B0Elem(tuple(QH.make([Fraction(rng.randrange(-2, 3)),
                                  Fraction(rng.randrange(-2, 3))])
                         for _ in range(8)))
        b = B0Elem(tuple(QH.make([Fraction(rng.randrange(-2, 3))])
                         for _ in range(8)))
        for n in (2, 3, 4):
            ok = ok and adams(n, a * b) == adams(n, a) * adams(n, b)
    for n in (2, 3, 4):
        for d in range(9):
            x = B0Elem.basis(d)
            lhs = b0_coproduct(adams(n, x))
            rhs = {}
            for (i, j), c in b0_coproduct(x).items():
                for k, f in enumerate(c):
                    if f:
                        term = QH.mul(QH.make([Fraction(0)] * k + [f]),
                                      QH.pow(v_scalar(n), i + j + k))
                        rhs[(i, j)] = QH.add(rhs.get((i, j), QH.zero), term)
            rhs = {k: v for k, v in rhs.items() if not QH.is_zero(v)}
            ok = ok and lhs == rhs
    return ok, "constants to degree 12; Adams n <= 4 to degree 8"


def criterion_7(seed: int = 0, scale: float = 1.0) -> tuple:
    """Both eigen-embeddings pass for the universal point and for numeric
    specializations, m <= 3, N_big = 12, plus the q = 2 degeneration."""
    from .cartier_witt import (MultHomSeries, embed_G_I, embed_G_II,
                               eigencheck_I, eigencheck_II, eigencheck_R,
                               universal_pairing)
    from .intpoly import gen_binom
    from .qhopf import QH, B0Elem
    from .ringcore import ExactInt, TruncSeries
    N = 12
    f = universal_pairing(N)
    q = B0Elem((QH.make([Fraction(1), Fraction(1)]),))
    ok = f.verify()
    wI, wII = embed_G_I(f), embed_G_II(f)
    for m in (2, 3):
        ok = ok and eigencheck_I(wI, q, m) and eigencheck_II(wII, q, m)
    Z = ExactInt()
    rng = random.Random(seed * 7919 + 7)
    for _ in range(_n(50, scale)):
        qv = rng.randrange(2, 8)
        k = rng.randrange(-5, 6)
        h = qv - 1
        coeffs = {(n,): gen_binom(k, n) * h ** n for n in range(N + 1)}
        g = MultHomSeries(TruncSeries(Z, ("z",), coeffs, N), "G", h)
        vI, vII = embed_G_I(g), embed_G_II(g)
        for m in (2, 3):
            ok = ok and eigencheck_I(vI, qv, m)
            ok = ok and eigencheck_II(vII, qv, m)
    coeffs = {(n,): gen_binom(3, n) for n in range(N + 1)}
    g = MultHomSeries(TruncSeries(Z, ("z",), coeffs, N), "G", 1)
    w = embed_G_I(g)
    for m in (2, 3, 4):
        ok = ok and eigencheck_R(w, m)
    return ok, "universal + %d numeric specializations" % _n(50, scale)


def criterion_8(seed: int = 0, scale: float = 1.0) -> tuple:
    """Pairing matrix |m| <= 6, n <= 12; Stirling certification n <= 20,
    k <= 10; mu_p with 200 trials each; generation to degree 12."""
    from .intpoly import gen_binom
    from .pd_dual import (PDElem, gsharp_comparison, log_sharp_power,
                          mu_p_pd_check, pair_xu, stirling_first)
    ok = True
    for m in range(-6, 7):
        for n in range(13):
            ok = ok and pair_xu(m, PDElem.gamma(n)) == gen_binom(m, n)
    for n in range(21):
        for k in range(1, 11):
            if k <= n:
                ok = ok and log_sharp_power(k, n).coord(n) == \
                    stirling_first(n, k)
    for p in (2, 3, 5):
        rep = mu_p_pd_check(p, _n(200, scale),
                            random.Random(seed * 7919 + 80 + p))
        ok = ok and not rep["failures"]
    for p in (2, 3):
        rep = gsharp_comparison(p, 12, _n(25, scale),
                                random.Random(seed * 7919 + 90 + p))
        ok = ok and not rep["failures"]
    return ok, "pairing, Stirling, mu_p (%d trials), generation" % _n(200, scale)


def criterion_9(seed: int = 0, scale: float = 1.0) -> tuple:
    """Wilkerson (300 trials per prime), the Mahler table of C(u,2) mod 2,
    and the delta-basis roundtrip to degree p^3."""
    from .intpoly import (IntPoly, delta_basis_combine, delta_basis_expand,
                          mahler_table)
    ok = True
    for p in (2, 3, 5):
        rng = random.Random(seed * 7919 + 200 + p)
        for _ in range(_n(300, scale)):
            x = IntPoly(tuple(rng.randrange(-9, 10) for _ in range(11)))
            diff = (x ** p) - x
            ok = ok and all(c % p == 0 for c in diff.coords)
    t = mahler_table(IntPoly.basis(2), 2, 1)
    ok = ok and t["period"] == 4 and t["residues"] == [0, 0, 1, 1]
    for p in (2, 3):
        rng = random.Random(seed * 7919 + 300 + p)
        for _ in range(_n(5, scale)):
            x = IntPoly(tuple(rng.randrange(-9, 10)
                              for _ in range(p ** 3 + 1)))
            coords = delta_basis_expand(x, p, 3)
            ok = ok and delta_basis_combine(coords, p) == x.to_rational()
            ok = ok and all(c.denominator % p != 0 for c in coords.values())
    return ok, "%d Wilkerson trials per prime" % _n(300, scale)


def criterion_10(seed: int = 0, scale: float = 1.0) -> tuple:
    """Unit-action equivariance and composition, n in {2,3,4} prime to p,
    orders (6, 6)."""
    from .qprism import equivariance_report
    ok = True
    for p in (2, 3, 5):
        for n in (2, 3, 4):
            if n % p == 0:
                continue
            rep = equivariance_report(p, n, 6, 6, 6)
            ok = ok and rep["equivariant"] and rep["composes"] \
                and rep["exact_polynomial_identity"]
    return ok, "n in {2,3,4} coprime to p, orders (6,6)"


def criterion_11(seed: int = 0, scale: float = 1.0) -> tuple:
    """Cyclotomic-fiber logarithm: additivity to order 5 and the vanishing
    on the torsion point, p in {2,3,5}, n_p = 6."""
    from .qprism import hodge_tate_check
    ok = True
    for p in (2, 3, 5):
        rep = hodge_tate_check(p, 6, 5)
        ok = ok and rep["additive"] and rep["kills_torsion_point"] \
            and rep["leading_one"]
    return ok, "order 5, n_p = 6"


def criterion_12(seed: int = 0, scale: float = 1.0) -> tuple:
    """Built-in law axioms to order 8; the [p]-series of the deformed law
    has vanishing coefficients below degree p mod (p, q-1)."""
    from .fgl import (FormalGroupLaw, additive_law, f_pullback_h_law, h_law,
                      multiplicative_law, n_series)
    from .ringcore import QPoly, h_element
    P = QPoly()
    ok = True
    for law in (additive_law(P, 8), multiplicative_law(P, 8),
                h_law(P, h_element(P), 8), f_pullback_h_law(P, 2, 8),
                f_pullback_h_law(P, 3, 8)):
        try:
            FormalGroupLaw(law.law)
        except Exception:   # noqa: BLE001
            ok = False
    for p in (2, 3, 5):
        F = h_law(P, h_element(P), p + 2)
        sp = n_series(F, p).series
        for n in range(1, p):
            c = sp.coefficient((n,))
            const = c[0] if c else 0
            ok = ok and const % p == 0  # and every higher h-power dies at q=1
    return ok, "laws to order 8; [p]-series mod (p, q-1)"


CRITERIA = [
    (1, criterion_1), (2, criterion_2), (3, criterion_3), (4, criterion_4),
    (5, criterion_5), (6, criterion_6), (7, criterion_7), (8, criterion_8),
    (9, criterion_9), (10, criterion_10), (11, criterion_11),
    (12, criterion_12),
]
