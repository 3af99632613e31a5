"""The q-deformed fiber: points (q, x) with 1 + Phi_p([q]) x Teichmuller,
the canonical Witt point of the completed coordinate ring, the two forms of
the q-exponential, the q-logarithm, the unit-group action, and the
cyclotomic (Hodge-Tate) specialization.

The completed ring (infinite sums sum a_n c_n with a_n -> 0 in the
(p, q-1)-adic topology) is modeled exactly: elements live in Q[t,h]/(h^N)
with Fraction coefficients, infinite sums are cut at an explicit tail index,
and every comparison happens inside the box (p^n_p, h^n_q) with the tail
error certified to fall outside it.  Divisions by p or by Phi_p(q) are exact
in this representation, so no precision is lost inside a computation.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .qhopf import _c_monomial, _from_monomial
from .ringcore import (
    CyclotomicRing, IntModRing, PolyQuotRing, PrismlabError,
    QSeriesRing, RatRing, TruncSeries, h_element, phi_p_element,
    q_element,
)
from .witt import (
    DeltaRing, WittVector, from_ghost, joyal_lift, teichmuller, witt_op,
    zero_vector,
)
from .derham import NotTeichmuller, IdentityFailed, is_teichmuller


class TailNotStabilized(PrismlabError):
    pass


# ---------------------------------------------------------------------------
# the exact model of the completed ring


def bhat_ring(h_prec: int) -> PolyQuotRing:
    """Q[t, h]/(h^h_prec): the exact cover of the completed ring."""
    hring = PolyQuotRing(RatRing(), (0,) * h_prec + (1,), "h")
    return PolyQuotRing(hring, None, "t")


def _hring(R: PolyQuotRing) -> PolyQuotRing:
    return R.scalar


def bh_phi_scalar(R: PolyQuotRing, p: int):
    """Phi_p(q) as an h-ring scalar."""
    return phi_p_element(_hring(R), p)


def bh_embed_scalar(R: PolyQuotRing, c) -> tuple:
    return R.make([c])


def _c_mono_in(R: PolyQuotRing, n: int) -> tuple:
    """c_n(t, h) inside the truncated exact ring."""
    H = _hring(R)
    mono = _c_monomial(n)
    return R.make([H.make(list(c)) for c in mono])


def frac_vp(f: Fraction, p: int) -> float:
    if f == 0:
        return math.inf
    v = 0
    n = f.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = f.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def bh_in_box(R: PolyQuotRing, a, p: int, n_p: int, n_q: int,
              t_deg: int | None = None) -> bool:
    """Whether a vanishes mod (p^n_p, h^n_q), optionally only on the
    monomials of t-degree <= t_deg."""
    for i, hc in enumerate(a):
        if t_deg is not None and i > t_deg:
            continue
        for j, f in enumerate(hc):
            if j < n_q and frac_vp(f, p) < n_p:
                return False
    return True


def bh_eq_box(R, a, b, p, n_p, n_q, t_deg=None) -> bool:
    return bh_in_box(R, R.sub(a, b), p, n_p, n_q, t_deg)


def bh_phi_endo(R: PolyQuotRing, p: int):
    """The Frobenius lift: q -> q^p (h -> (1+h)^p - 1) and t -> Phi_p(q) t."""
    H = _hring(R)
    hp = H.sub(H.pow(H.make([Fraction(1), Fraction(1)]), p), H.one)
    phi = bh_phi_scalar(R, p)

    def apply(a):
        out = R.zero
        tpow = R.one
        t_image = R.make([H.zero, phi])
        for i, hc in enumerate(a):
            if i:
                tpow = R.mul(tpow, t_image)
            if H.is_zero(hc):
                continue
            coeff = H.subst(hc, hp)
            out = R.add(out, R.mul(R.make([coeff]), tpow))
        return out

    return apply


def bh_coords(R: PolyQuotRing, a) -> list:
    """Coordinates of a against c_n(t, h), as h-ring scalars (exact)."""
    H = _hring(R)
    # reuse the Hopf-side triangular elimination by mapping into Q[h][t]
    from .qhopf import QH, QHT
    lift = QHT.make([QH.make([Fraction(f) for f in hc]) for hc in a])
    coords = _from_monomial(lift)
    return [H.make([Fraction(f) for f in c]) for c in coords]


# ---------------------------------------------------------------------------
# the q-exponential, two ways


def tail_cut(p: int, n_p: int, n_q: int, slack: int) -> int:
    return n_p + n_q + slack


def q_exponential(p: int, n_p: int, n_q: int, L: int = 2,
                  h_prec: int | None = None) -> dict:
    """X = sum c_n(t,h) Phi_p(q)^n, cut where Phi^n falls outside the box.

    Returns the ring, the element, and the bookkeeping of the cut."""
    h_prec = h_prec if h_prec is not None else n_q
    R = bhat_ring(h_prec)
    H = _hring(R)
    phi = bh_phi_scalar(R, p)
    n_max = tail_cut(p, n_p, n_q, L + 6)
    acc = R.zero
    power = H.one
    for n in range(n_max + 1):
        if n:
            power = H.mul(power, phi)
        acc = R.add(acc, R.mul(R.make([power]), _c_mono_in(R, n)))
    # certificate: the next coordinate Phi^(n_max+1) is already in the box
    nxt = H.mul(power, phi)
    if not bh_in_box(R, R.make([nxt]), p, n_p, n_q):
        raise TailNotStabilized("Phi^%d not yet inside the box" % (n_max + 1))
    return {"ring": R, "element": acc, "tail": n_max}


def q_exp_alt(p: int, n_p: int, n_q: int, t_deg: int,
              h_prec: int | None = None) -> dict:
    """sum_n c_n(pt, h): the c_k-coordinate of the n-th summand is an
    integer polynomial divisible by h^(n-k), so coordinates of degree <= K
    receive no contribution past n = K + h_prec."""
    h_prec = h_prec if h_prec is not None else n_q
    R = bhat_ring(h_prec)
    n_max = t_deg + h_prec
    acc = R.zero
    for n in range(n_max + 1):
        acc = R.add(acc, _alpha_n(R, n, p))
    return {"ring": R, "element": acc, "tail": n_max}


def _alpha_n(R: PolyQuotRing, n: int, p: int) -> tuple:
    """c_n(p t, h) in the exact ring."""
    mono = _c_mono_in(R, n)
    return R.make([_hring(R).mul_int(c, p ** i) for i, c in enumerate(mono)])


def q_exp_agreement(p: int, n_p: int, n_q: int, t_deg: int) -> dict:
    """The two sums agree coordinatewise mod (p^n_p, h^n_q) up to t_deg;
    coordinates of the first form are exactly Phi^k."""
    e1 = q_exponential(p, n_p, n_q)
    e2 = q_exp_alt(p, n_p, n_q, t_deg)
    R = e1["ring"]
    H = _hring(R)
    c1 = bh_coords(R, e1["element"])
    c2 = bh_coords(R, e2["element"])
    phi = bh_phi_scalar(R, p)
    ok_phi = True
    power = H.one
    for k in range(t_deg + 1):
        if k:
            power = H.mul(power, phi)
        got = c1[k] if k < len(c1) else H.zero
        ok_phi = ok_phi and H.eq(got, power)
    ok_agree = True
    for k in range(t_deg + 1):
        a = c1[k] if k < len(c1) else H.zero
        b = c2[k] if k < len(c2) else H.zero
        diff = H.sub(a, b)
        ok_agree = ok_agree and all(
            frac_vp(f, p) >= n_p for j, f in enumerate(diff) if j < n_q)
    return {"coords_are_phi_powers": ok_phi, "agree": ok_agree,
            "tails": (e1["tail"], e2["tail"])}


# ---------------------------------------------------------------------------
# the canonical Witt point


def canonical_point(p: int, n_p: int, n_q: int, L: int = 2,
                    t_deg: int = 4) -> dict:
    """x = (Joyal lift of (X-1)/Phi): the 0-th component is the explicit
    series, 1 + Phi_p([q]) x is the Teichmuller lift of X componentwise in
    the box, and phi(X) = X^p (the rank-one condition)."""
    slack = L + 6
    h_prec = n_q
    R = bhat_ring(h_prec)
    H = _hring(R)
    phi_s = bh_phi_scalar(R, p)
    n_max = tail_cut(p, n_p, n_q, slack)
    # X - 1 = Phi * x0 with x0 = sum_{n>=1} c_n Phi^(n-1): no division needed
    x0 = R.zero
    power = H.one
    for n in range(1, n_max + 1):
        if n > 1:
            power = H.mul(power, phi_s)
        x0 = R.add(x0, R.mul(R.make([power]), _c_mono_in(R, n)))
    X = R.add(R.one, R.mul(R.make([phi_s]), x0))
    phi_endo = bh_phi_endo(R, p)
    dr = DeltaRing(R, p, phi_endo)
    x = joyal_lift(dr, x0, L)
    # Teichmuller identity: 1 + Phi_p([q]) x = [X]
    q_scalar = R.make([H.make([Fraction(1), Fraction(1)])])
    phi_teich = zero_vector(R, p, L)
    for i in range(p):
        phi_teich = witt_op(phi_teich,
                            teichmuller(R, p, L, R.pow(q_scalar, i)), "add")
    lhs = witt_op(teichmuller(R, p, L, R.one),
                  witt_op(phi_teich, x, "mul"), "add")
    rhs = teichmuller(R, p, L, X)
    teich_ok = all(bh_eq_box(R, a, b, p, n_p, n_q, t_deg)
                   for a, b in zip(lhs.components, rhs.components))
    # rank one: phi(X) = X^p
    rank_one = bh_eq_box(R, phi_endo(X), R.pow(X, p), p, n_p, n_q, t_deg)
    # 0-th component is the explicit series by construction
    zeroth = x.components[0] == x0
    return {"ring": R, "x": x, "X": X, "x0": x0,
            "teichmuller": teich_ok, "rank_one": rank_one,
            "zeroth_component": zeroth, "tail": n_max}


def derham_specialization_of_x0(p: int, n_p: int, n_q: int,
                                t_deg: int = 6) -> bool:
    """At q = 1 the 0-th component becomes (exp(pt) - 1)/p."""
    cp = canonical_point(p, n_p, n_q, L=2, t_deg=t_deg)
    R = cp["ring"]
    x0 = cp["x0"]
    for i in range(1, t_deg + 1):
        hc = x0[i] if i < len(x0) else _hring(R).zero
        const = hc[0] if hc else Fraction(0)
        if const != Fraction(p ** (i - 1), math.factorial(i)):
            return False
    return True


def r0_relation_check(p: int, n_p: int, n_q: int, t_deg: int = 4) -> dict:
    """delta(1 + Phi_p(q) x0) = 0: the rank-one condition phi(X) = X^p,
    plus its t = 0 and q = 1 degenerations."""
    cp = canonical_point(p, n_p, n_q, L=2, t_deg=t_deg)
    R, X = cp["ring"], cp["X"]
    H = _hring(R)
    phi_endo = bh_phi_endo(R, p)
    out = {"rank_one": cp["rank_one"]}
    # t = 0 fiber: X(0) = 1
    out["t0_fiber"] = H.eq(X[0] if X else H.zero, H.one)
    # q = 1 fiber: phi(X) and X^p both specialize to exp(p^2 t) in the box
    lhs, rhs = phi_endo(X), R.pow(X, p)
    ok = True
    for i in range(t_deg + 1):
        la = lhs[i][0] if i < len(lhs) and lhs[i] else Fraction(0)
        rb = rhs[i][0] if i < len(rhs) and rhs[i] else Fraction(0)
        target = Fraction(p ** (2 * i), math.factorial(i))
        ok = ok and frac_vp(la - target, p) >= n_p \
            and frac_vp(rb - target, p) >= n_p
    out["q1_fiber"] = ok
    return out


# ---------------------------------------------------------------------------
# concrete points over Z[q]/((q-1)^n_q, p^n_p)


def gq_ring(p: int, n_p: int, n_q: int) -> PolyQuotRing:
    return QSeriesRing(n_q, p=p, n_p=n_p)


class GQPoint:
    """(q, x): x a Witt vector with 1 + Phi_p([q]) x Teichmuller."""

    __slots__ = ("x",)

    def __init__(self, x: WittVector, check: bool = True):
        if check and not is_teichmuller(_one_plus_phi_x(x)):
            raise NotTeichmuller("1 + Phi_p([q]) x is not Teichmuller")
        self.x = x

    def __eq__(self, other):
        if not isinstance(other, GQPoint):
            return NotImplemented
        return self.x == other.x

    def __repr__(self):
        return "GQ(%r)" % (self.x,)


def _p_of(ring) -> int:
    scalar = ring.scalar
    assert isinstance(scalar, IntModRing)
    return scalar.p


def phi_teich_vector(ring, p, L) -> WittVector:
    """Phi_p([q]) = 1 + [q] + ... + [q^(p-1)] in W(ring)."""
    q = q_element(ring)
    acc = zero_vector(ring, p, L)
    for i in range(p):
        acc = witt_op(acc, teichmuller(ring, p, L, ring.pow(q, i)), "add")
    return acc


def _one_plus_phi_x(x: WittVector) -> WittVector:
    ring, p, L = x.ring, x.p, x.L
    one = teichmuller(ring, p, L, ring.one)
    return witt_op(one, witt_op(phi_teich_vector(ring, p, L), x, "mul"), "add")


def gq_to_unit(a: GQPoint):
    return _one_plus_phi_x(a.x).components[0]


def gq_op(a: GQPoint, b: GQPoint) -> GQPoint:
    """x1 + x2 + Phi_p([q]) x1 x2."""
    x1, x2 = a.x, b.x
    ring, p, L = x1.ring, x1.p, x1.L
    cross = witt_op(phi_teich_vector(ring, p, L),
                    witt_op(x1, x2, "mul"), "mul")
    return GQPoint(witt_op(witt_op(x1, x2, "add"), cross, "add"), check=False)


def sigma_point(ring, p, L) -> GQPoint:
    """sigma(q) = (q, [q] - 1); its unit is q^p."""
    from .witt import witt_neg
    q = q_element(ring)
    one = teichmuller(ring, p, L, ring.one)
    x = witt_op(teichmuller(ring, p, L, q), witt_neg(one), "add")
    return GQPoint(x)


def frobenius_of_point(a: GQPoint) -> GQPoint:
    """F(q, x) = (q^p, F x), landing over the subring generated by q^p."""
    from .witt import frobenius
    return GQPoint(frobenius(a.x), check=False)


def q_power_substitute(ring: PolyQuotRing, elem, n: int):
    """The ring map q -> q^n, i.e. h -> (1+h)^n - 1."""
    target = ring.sub(ring.pow(ring.add(ring.one, ring.x), n), ring.one)
    return ring.subst(elem, target)


def sample_gq(ring, p, L, rng, tries: int = 32) -> GQPoint:
    """Random point: lift U = 1 + Phi_p(q) r exactly, solve the ghost
    equations of Phi_p([q]) x = [U] - 1 over Q[h], certify p-integrality,
    reduce back."""
    lring, lift, reduce_ = ring.lifted()
    rring, to_rat, _ = lring.rationalized()
    n_q = ring.deg
    for _ in range(tries):
        r = [rng.randrange(-9, 10) for _ in range(n_q)]
        U = rring.add(rring.one,
                      rring.mul(phi_p_element(rring, p), rring.make(
                          [Fraction(c) for c in r])))
        ghosts = []
        ok = True
        for i in range(L):
            # ghost_i(x) = (U^(p^i) - 1) / Phi_p(q^(p^i))
            num = rring.sub(rring.pow(U, p ** i), rring.one)
            den = phi_p_element(rring, p) if i == 0 else \
                q_power_substitute(rring, phi_p_element(rring, p), p ** i)
            inv = _invert_unit_poly(rring, den)
            if inv is None:
                ok = False
                break
            ghosts.append(rring.mul(num, inv))
        if not ok:
            continue
        try:
            xq = from_ghost(rring, p, ghosts)
        except Exception:
            continue
        comps = []
        for c in xq.components:
            img = ring.from_rational(c)
            if img is None:
                comps = None
                break
            comps.append(img)
        if comps is None:
            continue
        pt = GQPoint(WittVector(ring, p, comps), check=False)
        if is_teichmuller(_one_plus_phi_x(pt.x)):
            return pt
    raise TailNotStabilized("no q-deformed point found")


def _invert_unit_poly(rring: PolyQuotRing, a):
    """Inverse in Q[h]/(h^n) of an element with nonzero constant term."""
    if not a or a[0] == 0:
        return None
    inv0 = Fraction(1) / a[0]
    u = rring.sub(rring.mul(rring.make([inv0]), a), rring.one)
    acc, term = rring.one, rring.one
    for _ in range(rring.deg):
        term = rring.mul(term, rring.neg(u))
        acc = rring.add(acc, term)
    return rring.mul(rring.make([inv0]), acc)


# ---------------------------------------------------------------------------
# the q-logarithm


def q_log(a: GQPoint, n_p: int, n_q: int) -> tuple:
    """(q-1) log_q of the point's unit, normalized so that sigma goes to
    q - 1: computed as log(U) (q-1)/(p log q), exactly over Q[h] with the
    p-adic tail cut certified, then reduced.

    The division by p costs one digit: the result is valid mod p^(n_p - 1)
    and is returned together with its output ring at that precision.
    """
    ring = a.x.ring
    p = _p_of(ring)
    lring, lift, _ = ring.lifted()
    rring, to_rat, _ = lring.rationalized()
    U = to_rat(lift(gq_to_unit(a)))
    # log(U): U - 1 is in (p, h), so v_p of the n-th term grows like
    # n/(p-1)-ish minus log_p n; cut generously
    n_max = (n_p + n_q + 4) * max(1, p - 1)
    w = rring.sub(U, rring.one)
    log_u = rring.zero
    power = rring.one
    for n in range(1, n_max + 1):
        power = rring.mul(power, w)
        log_u = rring.add(log_u,
                          rring.mul(power, rring.make([Fraction((-1) ** (n - 1), n)])))
    # R_log = log(1+h)/h, a unit in Q[h]/(h^n)
    rlog = rring.make([Fraction((-1) ** k, k + 1) for k in range(rring.deg)])
    inv = _invert_unit_poly(rring, rlog)
    val = rring.mul(log_u, inv)
    val = rring.make([c / p for c in val])
    out_np = n_p - q_log_precision_loss(p, n_q)
    if out_np < 1:
        raise TailNotStabilized(
            "q-log needs input precision above %d at n_q = %d"
            % (q_log_precision_loss(p, n_q), n_q))
    out_ring = QSeriesRing(n_q, p=p, n_p=out_np)
    out = out_ring.from_rational(val)
    if out is None:
        raise TailNotStabilized("q-log value is not p-integral at this precision")
    return out_ring, out


def q_log_precision_loss(p: int, n_q: int) -> int:
    """Digits of p-precision consumed by q_log: one for the division by p
    plus the worst denominator of ((q-1)/log q), measured on its actual
    coefficients."""
    rring = PolyQuotRing(RatRing(), (0,) * n_q + (1,), "h")
    rlog = rring.make([Fraction((-1) ** k, k + 1) for k in range(n_q)])
    inv = _invert_unit_poly(rring, rlog)
    worst = 0
    for c in inv:
        v = frac_vp(c, p)
        if v < 0:
            worst = max(worst, -int(v))
    return 1 + worst


def q_log_of_sigma(p: int, n_p: int, n_q: int):
    ring = gq_ring(p, n_p, n_q)
    out_ring, val = q_log(sigma_point(ring, p, 2), n_p, n_q)
    return out_ring.eq(val, h_element(out_ring)), val


# ---------------------------------------------------------------------------
# unit-group action on the deformed multiplicative law


def h_n_series(ring, n: int, order: int) -> TruncSeries:
    """h_n(z, q) = ((1+(q-1)z)^n - 1)/(q-1) = sum C(n,i)(q-1)^(i-1) z^i."""
    h = h_element(ring)
    coeffs = {}
    for i in range(1, min(n, order) + 1):
        coeffs[(i,)] = ring.mul_int(ring.pow(h, i - 1), math.comb(n, i))
    return TruncSeries(ring, ("z",), coeffs, order)


def v_n_scalar(ring, n: int):
    q = q_element(ring)
    acc, power = ring.zero, ring.one
    for _ in range(n):
        acc = ring.add(acc, power)
        power = ring.mul(power, q)
    return acc


def zp_action(ring, n: int, order: int) -> TruncSeries:
    """The action of the unit n on the coordinate z, as a series:
    z -> h_n(z, q)/h_n(1, q); needs v_n = h_n(1,q) invertible (n prime
    to p)."""
    hn = h_n_series(ring, n, order)
    vn = v_n_scalar(ring, n)
    inv = _invert_scalar(ring, vn)
    if inv is None:
        raise IdentityFailed("h_n(1, q) is not invertible for n = %d" % n)
    return hn.scale(inv)


def _invert_scalar(ring: PolyQuotRing, a):
    """Invert an element of Z/p^k[h]/(h^n) whose constant term is a unit."""
    if not a:
        return None
    c0 = a[0]
    scalar = ring.scalar
    inv0 = scalar.inv_int(c0 if isinstance(c0, int) else 0)
    if inv0 is None:
        return None
    u = ring.sub(ring.mul(ring.make([inv0]), a), ring.one)
    acc, term = ring.one, ring.one
    for _ in range(ring.deg):
        term = ring.mul(term, ring.neg(u))
        acc = ring.add(acc, term)
    return ring.mul(ring.make([inv0]), acc)


def sigma_star(ring, z: TruncSeries) -> TruncSeries:
    """(q, z) -> 1 + (q-1) z."""
    one = TruncSeries.one(ring, z.variables, z.order)
    return one + z.scale(h_element(ring))


def equivariance_report(p: int, n: int, n_p: int, n_q: int, n_z: int) -> dict:
    """sigma* intertwines the action with n-th powers, and the action
    composes: action(m) after action(n) = action(mn)."""
    ring = gq_ring(p, n_p, n_q)
    z = TruncSeries.var(ring, ("z",), n_z, "z")
    act = zp_action(ring, n, n_z)
    # equivariance: the image point has base q^n and coordinate act(z), so
    # sigma* of it is 1 + (q^n - 1) act(z); it must equal (1 + (q-1)z)^n
    hn_elem = ring.sub(ring.pow(q_element(ring), n), ring.one)
    lhs = TruncSeries.one(ring, ("z",), n_z) + act.scale(hn_elem)
    rhs = sigma_star(ring, z) ** n
    ok_equi = lhs == rhs
    # composition of actions
    ok_comp = True
    for m in (2, 3):
        if math.gcd(m * n, p) != 1:
            continue
        act_m_at_qn = zp_action(ring, m, n_z).map_coeffs(
            lambda c: q_power_substitute(ring, c, n))
        composed = act_m_at_qn.subs({"z": act})
        direct = zp_action(ring, m * n, n_z)
        ok_comp = ok_comp and composed == direct
    # division-free global identity over Z[q]: (q-1) h_n + 1 = (1+(q-1)z)^n
    from .ringcore import QPoly
    P = QPoly()
    zP = TruncSeries.var(P, ("z",), n_z, "z")
    lhsP = TruncSeries.one(P, ("z",), n_z) + \
        h_n_series(P, n, n_z).scale(h_element(P))
    rhsP = sigma_star(P, zP) ** n
    return {"equivariant": ok_equi, "composes": ok_comp,
            "exact_polynomial_identity": lhsP == rhsP}


# ---------------------------------------------------------------------------
# the cyclotomic fiber


def hodge_tate_check(p: int, n_p: int, order: int) -> dict:
    """(a) the logarithm map is additive for the law z1 + z2 + (zeta-1)z1z2;
    (b) it kills z = 1 (the image of Z/p); (c) its linear coefficient is 1."""
    C = CyclotomicRing(p, n_p=n_p)
    zeta = q_element(C)
    lam = _lambda_series(C, p, n_p, order)
    # (a) additivity
    z1 = TruncSeries.var(C, ("z1", "z2"), order, "z1")
    z2 = TruncSeries.var(C, ("z1", "z2"), order, "z2")
    law = z1 + z2 + (z1 * z2).scale(h_element(C))
    lhs = lam.subs({"z": law})
    rhs = lam.subs({"z": z1}) + lam.subs({"z": z2})
    ok_add = lhs == rhs
    # (b) lambda(1) = (zeta-1)^{-1} log(zeta) = 0: the infinite sum needs
    # its own stabilization bound, (p-1) steps per p-adic digit
    exact = CyclotomicRing(p)
    rring, _, _ = exact.rationalized()
    zeta1 = rring.sub(q_element(rring), rring.one)
    n_max = (p - 1) * (n_p + 4) + 8
    val = C.zero
    power = rring.one
    for n in range(1, n_max + 1):
        if n > 1:
            power = rring.mul(power, zeta1)
        term = C.from_rational(
            rring.mul(power, rring.make([Fraction((-1) ** (n - 1), n)])))
        if term is None:
            raise TailNotStabilized("lambda(1) term %d not p-integral" % n)
        val = C.add(val, term)
    ok_kernel = C.is_zero(val)
    # (c) leading coefficient
    ok_lead = C.eq(lam.coefficient((1,)), C.one)
    return {"additive": ok_add, "kills_torsion_point": ok_kernel,
            "leading_one": ok_lead, "zeta": zeta}


def _lambda_series(C, p: int, n_p: int, order: int) -> TruncSeries:
    """(zeta-1)^{-1} log(1 + (zeta-1) z) = sum (-1)^(n-1) (zeta-1)^(n-1)/n z^n,
    coefficients computed exactly in Q(zeta) and certified p-integral."""
    exact = CyclotomicRing(p)
    rring, to_rat, _ = exact.rationalized()
    zeta1 = rring.sub(q_element(rring), rring.one)
    coeffs = {}
    power = rring.one
    for n in range(1, order + 1):
        if n > 1:
            power = rring.mul(power, zeta1)
        c = rring.mul(power, rring.make([Fraction((-1) ** (n - 1), n)]))
        img = C.from_rational(c)
        if img is None:
            raise TailNotStabilized("lambda coefficient %d not p-integral" % n)
        coeffs[(n,)] = img
    return TruncSeries(C, ("z",), coeffs, order)


# ---------------------------------------------------------------------------
# exact polynomial shadows


def factorization_identity(p: int) -> bool:
    """q^p - 1 = (q - 1) Phi_p(q) in Z[q]."""
    from .ringcore import QPoly
    P = QPoly()
    q = q_element(P)
    return P.eq(P.sub(P.pow(q, p), P.one),
                P.mul(h_element(P), phi_p_element(P, p)))


def phi_of_section_identity(p: int) -> bool:
    """The [p]-series of the deformed law at z = Phi_p(q) equals
    (q^(p^2)-1)/(q-1), which also factors as Phi_p(q) Phi_p(q^p)+...;
    both closed forms agree exactly in Z[q]."""
    from .ringcore import QPoly
    P = QPoly()
    q = q_element(P)
    h = h_element(P)
    phi = phi_p_element(P, p)
    # [p]-series of z1+z2+(q-1)z1z2 is ((1+(q-1)z)^p - 1)/(q-1); at z = Phi:
    # (1+(q-1)Phi) = q^p, so the value is (q^(p^2)-1)/(q-1) = v_{p^2}
    val = v_n_scalar(P, p * p)
    lhs_num = P.sub(P.pow(P.add(P.one, P.mul(h, phi)), p), P.one)
    ok1 = P.eq(lhs_num, P.mul(h, val))
    phi_qp = q_power_substitute_poly(P, phi, p)
    ok2 = P.eq(P.mul(phi, phi_qp), val)
    return ok1 and ok2


def q_power_substitute_poly(P, elem, n: int):
    target = P.sub(P.pow(P.add(P.one, P.x), n), P.one)
    return P.subst(elem, target)


def gq_at_q1_matches_derham(p: int, n_p: int, L: int, rng, trials: int = 5) -> bool:
    """Specializing q to 1 collapses the deformed law onto the de Rham one."""
    from .derham import gdr_op, GdRPoint, sample_gdr
    from .ringcore import ModP
    ring = gq_ring(p, n_p, 1)  # h = 0: the ring is Z/p^n_p itself in degree 0
    base = ModP(p, n_p)
    for _ in range(trials):
        a = sample_gdr(base, p, L, rng)
        b = sample_gdr(base, p, L, rng)
        # transport to the h-adic ring with h = 0
        ax = WittVector(ring, p, [ring.make_ints([c]) for c in a.x.components])
        bx = WittVector(ring, p, [ring.make_ints([c]) for c in b.x.components])
        got = gq_op(GQPoint(ax, check=False), GQPoint(bx, check=False))
        expect = gdr_op(a, b)
        if [c[0] if c else 0 for c in got.x.components] != list(expect.x.components):
            return False
    return True
