"""p-typical and big Witt vectors.

Two arithmetic backends: ghost components over torsion-free rings (exact,
with integrality certificates) and memoized universal polynomials, valid
over any coefficient ring.  The two must agree wherever both apply; that
agreement is part of the test suite.
"""
from __future__ import annotations

import threading

from .ringcore import (
    IntModRing, IntRing, PrecisionExhausted, PrismlabError, Ring,
    RingMismatch, TruncSeries, series_inverse,
)


class NonIntegralGhost(PrismlabError):
    pass


class NotADeltaRing(PrismlabError):
    pass


# ---------------------------------------------------------------------------
# p-typical vectors


class WittVector:
    """Witt coordinates (x_0, ..., x_{L-1}) over a coefficient ring."""

    __slots__ = ("ring", "p", "components")

    def __init__(self, ring: Ring, p: int, components):
        self.ring = ring
        self.p = p
        self.components = tuple(components)

    @property
    def L(self) -> int:
        return len(self.components)

    def _check(self, other: "WittVector"):
        if self.ring != other.ring or self.p != other.p:
            raise RingMismatch("incompatible Witt vectors")

    def truncate(self, L: int) -> "WittVector":
        return WittVector(self.ring, self.p, self.components[:L])

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return (self.ring == other.ring and self.p == other.p
                and len(self.components) == len(other.components)
                and all(self.ring.eq(a, b)
                        for a, b in zip(self.components, other.components)))

    def __hash__(self):
        return hash((self.ring, self.p, self.components))

    def is_zero(self):
        return all(self.ring.is_zero(c) for c in self.components)

    def __add__(self, other):
        return witt_op(self, other, "add")

    def __mul__(self, other):
        return witt_op(self, other, "mul")

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return "W(%s)" % ", ".join(self.ring.fmt(c) for c in self.components)


def zero_vector(ring, p, L) -> WittVector:
    return WittVector(ring, p, [ring.zero] * L)


def teichmuller(ring, p, L, a) -> WittVector:
    return WittVector(ring, p, [a] + [ring.zero] * (L - 1))


def from_int_vector(ring, p, L, n: int) -> WittVector:
    """The image of the integer n under Z -> W(ring)."""
    return scalar_mul(n, teichmuller(ring, p, L, ring.one))


# --- ghost backend ----------------------------------------------------------


def ghost_in_ring(w: WittVector) -> list:
    """Ghost components computed with the vector's own ring arithmetic
    (polynomial data, no division)."""
    ring, p = w.ring, w.p
    out = []
    for n in range(len(w.components)):
        acc = ring.zero
        for i in range(n + 1):
            acc = ring.add(acc, ring.mul_int(
                ring.pow(w.components[i], p ** (n - i)), p ** i))
        out.append(acc)
    return out


def from_ghost_exact(ring, p, ghosts) -> WittVector:
    """Ghost solve by exact integer division inside the ring; raises on a
    non-integral component.  Internal fast path for torsion-free rings."""
    comps = []
    for n, g in enumerate(ghosts):
        acc = g
        for i in range(n):
            acc = ring.sub(acc, ring.mul_int(
                ring.pow(comps[i], p ** (n - i)), p ** i))
        if n:
            acc = ring.div_int_exact(acc, p ** n)
            if acc is None:
                raise NonIntegralGhost("ghost component %d is not integral" % n)
        comps.append(acc)
    return WittVector(ring, p, comps)


def _has_exact_division(ring) -> bool:
    return ring.div_int_exact(ring.one, 1) is not None


def ghost(w: WittVector) -> list:
    """Ghost components in the rationalized coefficient ring."""
    rat = w.ring.rationalized()
    if rat is None:
        raise NonIntegralGhost("ring %s has no fraction cover; "
                               "use the universal backend" % w.ring)
    rring, to_rat, _ = rat
    p = w.p
    comps = [to_rat(c) for c in w.components]
    out = []
    for n in range(len(comps)):
        acc = rring.zero
        for i in range(n + 1):
            acc = rring.add(acc, rring.mul_int(
                rring.pow(comps[i], p ** (n - i)), p ** i))
        out.append(acc)
    return out


def from_ghost(ring, p, ghosts) -> WittVector:
    """Solve the ghost equations; error if a component is not integral."""
    rat = ring.rationalized()
    if rat is None:
        raise NonIntegralGhost("ring %s has no fraction cover" % ring)
    rring, _, from_rat = rat
    inv_p = rring.inv_int(p)
    comps_rat = []
    comps = []
    for n, g in enumerate(ghosts):
        acc = g
        for i in range(n):
            acc = rring.sub(acc, rring.mul_int(
                rring.pow(comps_rat[i], p ** (n - i)), p ** i))
        for _ in range(n):
            acc = rring.mul(acc, inv_p)
        comps_rat.append(acc)
        img = from_rat(acc)
        if img is None:
            raise NonIntegralGhost("ghost component %d solves to %s"
                                   % (n, rring.fmt(acc)))
        comps.append(img)
    return WittVector(ring, p, comps)


# --- universal polynomial backend -------------------------------------------
#
# The tables are built once per (p, L, op) with raw integer-dict polynomial
# arithmetic: the p=5, L=4 entries run to tens of thousands of monomials and
# Fraction overhead would dominate.

_universal_cache: dict = {}
_universal_lock = threading.Lock()


def _ip_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return {e: c for e, c in out.items() if c}


def _ip_pow(a: dict, n: int, nvars: int) -> dict:
    acc = {(0,) * nvars: 1}
    base = a
    while n:
        if n & 1:
            acc = _ip_mul(acc, base)
        base = _ip_mul(base, base) if n > 1 else base
        n >>= 1
    return acc


def _ip_axpy(acc: dict, s: int, b: dict) -> dict:
    for e, c in b.items():
        v = acc.get(e, 0) + s * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


def _ip_div_exact(a: dict, d: int) -> dict:
    out = {}
    for e, c in a.items():
        q, r = divmod(c, d)
        if r:
            raise NonIntegralGhost("universal polynomial solve hit %s/%s" % (c, d))
        out[e] = q
    return out


def _ghost_int_polys(p, L, nvars, offset) -> list:
    """Ghost components of a generic vector whose i-th coordinate is
    variable offset+i, as integer-dict polynomials."""
    out = []
    for n in range(L):
        acc: dict = {}
        for i in range(n + 1):
            e = [0] * nvars
            e[offset + i] = p ** (n - i)
            _ip_axpy(acc, 1, {tuple(e): p ** i})
        out.append(acc)
    return out


def _solve_ghost_int(p, ghosts, nvars) -> list:
    sols = []
    for n, g in enumerate(ghosts):
        acc = dict(g)
        for i in range(n):
            _ip_axpy(acc, -(p ** i), _ip_pow(sols[i], p ** (n - i), nvars))
        sols.append(_ip_div_exact(acc, p ** n))
    return sols


def witt_universal(op: str, p: int, L: int):
    """Universal polynomials for add/mul/neg/frobenius, memoized per (p, L, op).

    add/mul: polynomials in a0..a_{L-1}, b0..b_{L-1}; neg: in a_i;
    frobenius: L-1 polynomials in a0..a_{L-1}.
    """
    key = (op, p, L)
    with _universal_lock:
        if key in _universal_cache:
            return _universal_cache[key]
    avars = tuple("a%d" % i for i in range(L))
    bvars = tuple("b%d" % i for i in range(L))
    Z = IntRing()
    if op in ("add", "mul"):
        names = avars + bvars
        nv = 2 * L
        ga = _ghost_int_polys(p, L, nv, 0)
        gb = _ghost_int_polys(p, L, nv, L)
        if op == "add":
            combined = [_ip_axpy(dict(x), 1, y) for x, y in zip(ga, gb)]
        else:
            combined = [_ip_mul(x, y) for x, y in zip(ga, gb)]
        sols = _solve_ghost_int(p, combined, nv)
    elif op == "neg":
        names, nv = avars, L
        ga = _ghost_int_polys(p, L, nv, 0)
        sols = _solve_ghost_int(p, [{e: -c for e, c in g.items()} for g in ga], nv)
    elif op == "frobenius":
        names, nv = avars, L
        ga = _ghost_int_polys(p, L, nv, 0)
        sols = _solve_ghost_int(p, ga[1:], nv)
    else:
        raise ValueError("unknown op %r" % op)
    polys = tuple(TruncSeries(Z, names, s, None) for s in sols)
    with _universal_lock:
        _universal_cache[key] = polys
    return polys


_compiled_cache: dict = {}
_COMPILE_THRESHOLD = 512


def _compile_int_poly(poly: TruncSeries):
    """Compile a large integer polynomial to a plain-int evaluator using
    per-call power tables; worthwhile for the big p=5 tables."""
    key = id(poly)
    fn = _compiled_cache.get(key)
    if fn is not None:
        return fn
    nv = len(poly.variables)
    terms = []
    for e, c in poly.coeffs.items():
        factors = ["_p%d[%d]" % (i, n) for i, n in enumerate(e) if n]
        terms.append("*".join([repr(c)] + factors))
    maxdeg = [max((e[i] for e in poly.coeffs), default=0) for i in range(nv)]
    lines = ["def _f(vals):"]
    for i in range(nv):
        lines.append("    _v = vals[%d]" % i)
        lines.append("    _p%d = [1] * %d" % (i, maxdeg[i] + 1))
        lines.append("    for _k in range(1, %d): _p%d[_k] = _p%d[_k-1] * _v"
                     % (maxdeg[i] + 1, i, i))
    lines.append("    _acc = 0")
    for k in range(0, len(terms), 400):
        lines.append("    _acc += " + " + ".join(terms[k:k + 400]))
    lines.append("    return _acc")
    ns: dict = {}
    exec("\n".join(lines), ns)  # noqa: S102 - generated from trusted table
    fn = ns["_f"]
    _compiled_cache[key] = fn
    return fn


def eval_int_poly(poly: TruncSeries, ring: Ring, values: list):
    """Evaluate an integer polynomial at ring elements, caching powers."""
    if (len(poly.coeffs) >= _COMPILE_THRESHOLD
            and all(isinstance(v, int) for v in values)
            and isinstance(ring, (IntRing, IntModRing))):
        out = _compile_int_poly(poly)(values)
        return out if isinstance(ring, IntRing) else out % ring.m
    pows = [{} for _ in values]
    acc = ring.zero
    for e, c in poly.coeffs.items():
        term = ring.from_int(c)
        for i, n in enumerate(e):
            if n:
                cache = pows[i]
                if n not in cache:
                    cache[n] = ring.pow(values[i], n)
                term = ring.mul(term, cache[n])
        acc = ring.add(acc, term)
    return acc


def witt_op(a: WittVector, b: WittVector, op: str) -> WittVector:
    a._check(b)
    if len(a.components) != len(b.components):
        raise RingMismatch("Witt lengths differ")
    ring, p, L = a.ring, a.p, a.L
    if op not in ("add", "mul"):
        raise ValueError("op must be add or mul")
    if ring.is_torsion_free and _has_exact_division(ring):
        ga, gb = ghost_in_ring(a), ghost_in_ring(b)
        combine = ring.add if op == "add" else ring.mul
        return from_ghost_exact(ring, p, [combine(x, y)
                                          for x, y in zip(ga, gb)])
    if ring.rationalized() is not None:
        ga, gb = ghost(a), ghost(b)
        rring = ring.rationalized()[0]
        if op == "add":
            gs = [rring.add(x, y) for x, y in zip(ga, gb)]
        else:
            gs = [rring.mul(x, y) for x, y in zip(ga, gb)]
        return from_ghost(ring, p, gs)
    lifted = ring.lifted()
    if lifted is not None:
        # compute on integral lifts and reduce: identical to evaluating the
        # universal integer polynomials, but far cheaper at length 4
        lring, up, down = lifted
        la = WittVector(lring, p, [up(c) for c in a.components])
        lb = WittVector(lring, p, [up(c) for c in b.components])
        out = witt_op(la, lb, op)
        return WittVector(ring, p, [down(c) for c in out.components])
    polys = witt_universal(op, p, L)
    values = list(a.components) + list(b.components)
    return WittVector(ring, p, [eval_int_poly(s, ring, values) for s in polys])


def witt_neg(a: WittVector) -> WittVector:
    ring, p = a.ring, a.p
    if ring.is_torsion_free and _has_exact_division(ring):
        return from_ghost_exact(ring, p,
                                [ring.neg(g) for g in ghost_in_ring(a)])
    if ring.rationalized() is not None:
        rring = ring.rationalized()[0]
        return from_ghost(ring, p, [rring.neg(g) for g in ghost(a)])
    lifted = ring.lifted()
    if lifted is not None:
        lring, up, down = lifted
        out = witt_neg(WittVector(lring, p, [up(c) for c in a.components]))
        return WittVector(ring, p, [down(c) for c in out.components])
    polys = witt_universal("neg", p, a.L)
    return WittVector(ring, p, [eval_int_poly(s, ring, list(a.components))
                                for s in polys])


def witt_op_universal(a: WittVector, b: WittVector, op: str) -> WittVector:
    """Force the universal-polynomial backend (oracle cross-checks)."""
    polys = witt_universal(op, a.p, a.L)
    values = list(a.components) + list(b.components)
    return WittVector(a.ring, a.p, [eval_int_poly(s, a.ring, values)
                                    for s in polys])


def scalar_mul(n: int, w: WittVector) -> WittVector:
    """n . w = w + ... + w for an integer n (Witt addition)."""
    if n < 0:
        return scalar_mul(-n, witt_neg(w))
    acc = zero_vector(w.ring, w.p, w.L)
    base = w
    while n:
        if n & 1:
            acc = witt_op(acc, base, "add")
        base = witt_op(base, base, "add")
        n >>= 1
    return acc


def witt_pow(w: WittVector, n: int) -> WittVector:
    acc = teichmuller(w.ring, w.p, w.L, w.ring.one)
    base = w
    while n:
        if n & 1:
            acc = witt_op(acc, base, "mul")
        base = witt_op(base, base, "mul")
        n >>= 1
    return acc


def frobenius(w: WittVector) -> WittVector:
    """F: W_L -> W_{L-1}; ghost(Fw)_n = ghost(w)_{n+1}."""
    ring, p, L = w.ring, w.p, w.L
    if L < 2:
        return WittVector(ring, p, [])
    if ring.is_torsion_free and _has_exact_division(ring):
        return from_ghost_exact(ring, p, ghost_in_ring(w)[1:])
    if ring.rationalized() is not None:
        return from_ghost(ring, p, ghost(w)[1:])
    lifted = ring.lifted()
    if lifted is not None:
        lring, up, down = lifted
        out = frobenius(WittVector(lring, p, [up(c) for c in w.components]))
        return WittVector(ring, p, [down(c) for c in out.components])
    polys = witt_universal("frobenius", p, L)
    vals = list(w.components)
    return WittVector(ring, p, [eval_int_poly(s, ring, vals) for s in polys])


def verschiebung(w: WittVector) -> WittVector:
    """V at fixed length: (0, x_0, ..., x_{L-2})."""
    return WittVector(w.ring, w.p, (w.ring.zero,) + w.components[:-1])


# ---------------------------------------------------------------------------
# delta-rings and the Joyal lift


class DeltaRing:
    """A torsion-free ring with a Frobenius lift phi; delta comes for free."""

    def __init__(self, ring: Ring, p: int, phi):
        rat = ring.rationalized()
        if rat is None:
            raise NotADeltaRing("delta structure needs a torsion-free ring")
        self.ring = ring
        self.p = p
        self.phi = phi
        self._rring, self._to_rat, self._from_rat = rat

    def verify(self, samples) -> None:
        """Check phi(x) = x^p mod p on sample elements."""
        r = self.ring
        for x in samples:
            diff = r.sub(self.phi(x), r.pow(x, self.p))
            if self._div_p(diff) is None:
                raise NotADeltaRing("phi is not a Frobenius lift at %s"
                                    % r.fmt(x))

    def _div_p(self, x):
        q = self.ring.div_int_exact(x, self.p)
        if q is not None or _has_exact_division(self.ring):
            return q
        rr = self._rring
        y = rr.mul(self._to_rat(x), rr.inv_int(self.p))
        return self._from_rat(y)

    def delta(self, x):
        r = self.ring
        num = r.sub(self.phi(x), r.pow(x, self.p))
        out = self._div_p(num)
        if out is None:
            raise NotADeltaRing("(phi(x) - x^p)/p is not integral at %s"
                                % r.fmt(x))
        return out

    def phi_iter(self, x, n: int):
        for _ in range(n):
            x = self.phi(x)
        return x


def joyal_lift(dr: DeltaRing, b, L: int) -> WittVector:
    """The unique delta-ring section of W(ring) -> ring, componentwise:
    ghost_n = phi^n(b), Buium-Joyal coordinates (b, delta b, delta^2 b, ...)."""
    ghosts = [dr.phi_iter(b, n) for n in range(L)]
    if _has_exact_division(dr.ring):
        return from_ghost_exact(dr.ring, dr.p, ghosts)
    rring, to_rat, _ = dr.ring.rationalized()
    return from_ghost(dr.ring, dr.p, [to_rat(g) for g in ghosts])


def bj_coordinates(dr: DeltaRing, b, L: int) -> list:
    """(b, delta b, delta^2 b, ...)."""
    out = [b]
    for _ in range(L - 1):
        out.append(dr.delta(out[-1]))
    return out


def bj_to_witt(ring, p, coords) -> WittVector:
    """Convert Buium-Joyal coordinates to Witt coordinates via the formal
    Frobenius phi(c_j) = c_j^p + p c_{j+1} (c beyond the last index is 0)."""
    rat = ring.rationalized()
    if rat is None:
        raise NonIntegralGhost("ring %s has no fraction cover" % ring)
    rring, to_rat, _ = rat
    cs = [to_rat(c) for c in coords]

    def phi_of(j, k):
        # phi^k(c_j), expanding phi formally
        if k == 0:
            return cs[j] if j < len(cs) else rring.zero
        prev = phi_of(j, k - 1)
        nxt = phi_of(j + 1, k - 1)
        return rring.add(rring.pow(prev, p), rring.mul_int(nxt, p))

    ghosts = [phi_of(0, n) for n in range(len(cs))]
    return from_ghost(ring, p, ghosts)


def witt_to_bj(w: WittVector) -> list:
    """Buium-Joyal coordinates of a Witt vector (torsion-free rings)."""
    ring, p = w.ring, w.p
    rring, to_rat, from_rat = ring.rationalized()
    gs = ghost(w)
    cs: list = []

    def phi_of(j, k):
        # formal phi^k(c_j) with entries beyond the known prefix set to 0
        if k == 0:
            return cs[j] if j < len(cs) else rring.zero
        prev = phi_of(j, k - 1)
        nxt = phi_of(j + 1, k - 1)
        return rring.add(rring.pow(prev, p), rring.mul_int(nxt, p))

    inv_p = rring.inv_int(p)
    for n, g in enumerate(gs):
        # c_n enters phi^n(c_0) only linearly, with coefficient p^n
        resid = rring.sub(g, phi_of(0, n))
        for _ in range(n):
            resid = rring.mul(resid, inv_p)
        cs.append(resid)
    out = []
    for c in cs:
        img = from_rat(c)
        if img is None:
            raise NonIntegralGhost("BJ coordinate %s not integral" % rring.fmt(c))
        out.append(img)
    return out


# ---------------------------------------------------------------------------
# big Witt vectors, stored as series 1 + z A[[z]] mod z^(N+1)


class BigWitt:
    """Group of series 1 + z A[[z]] mod z^(N+1); addition is series product."""

    __slots__ = ("ring", "N", "coeffs")

    def __init__(self, ring: Ring, N: int, coeffs: dict):
        self.ring = ring
        self.N = N
        self.coeffs = {n: c for n, c in coeffs.items()
                       if 1 <= n <= N and not ring.is_zero(c)}

    @classmethod
    def one(cls, ring, N):
        """Additive unit: the series 1."""
        return cls(ring, N, {})

    @classmethod
    def from_series_coeffs(cls, ring, N, seq):
        return cls(ring, N, {n: c for n, c in enumerate(seq) if n >= 1})

    def coefficient(self, n: int):
        if n == 0:
            return self.ring.one
        return self.coeffs.get(n, self.ring.zero)

    def truncate(self, N: int) -> "BigWitt":
        return BigWitt(self.ring, min(N, self.N), self.coeffs)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("big Witt rings differ")

    def __eq__(self, other):
        if not isinstance(other, BigWitt):
            return NotImplemented
        if self.ring != other.ring or self.N != other.N:
            return False
        r = self.ring
        return all(r.eq(self.coefficient(n), other.coefficient(n))
                   for n in range(1, self.N + 1))

    def eq(self, other, N=None):
        self._check(other)
        N = N if N is not None else min(self.N, other.N)
        r = self.ring
        return all(r.eq(self.coefficient(n), other.coefficient(n))
                   for n in range(1, N + 1))

    def to_series(self) -> TruncSeries:
        ts = {(0,): self.ring.one}
        ts.update({(n,): c for n, c in self.coeffs.items()})
        return TruncSeries(self.ring, ("z",), ts, self.N)

    @classmethod
    def from_series(cls, f: TruncSeries) -> "BigWitt":
        if len(f.variables) != 1:
            raise RingMismatch("big Witt vectors are univariate series")
        if not f.ring.eq(f.constant_term(), f.ring.one):
            raise NonIntegralGhost("constant term must be 1")
        return cls(f.ring, f.order,
                   {e[0]: c for e, c in f.coeffs.items() if e[0] >= 1})

    def __add__(self, other):
        self._check(other)
        return BigWitt.from_series(self.to_series() * other.to_series())

    def __neg__(self):
        return BigWitt.from_series(series_inverse(self.to_series()))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return bigwitt_mul(self, other)

    def __repr__(self):
        return "BigW(%s)" % self.to_series()


def teichmuller_big(ring, N, a) -> BigWitt:
    """[a] = 1 - a z (the ring unit of W_big is 1 - z)."""
    return BigWitt(ring, N, {1: ring.neg(a)})


def teich_mul(a, w: BigWitt) -> BigWitt:
    """Multiplication by the Teichmuller lift [a]: f(z) -> f(a z)."""
    r = w.ring
    return BigWitt(r, w.N, {n: r.mul(r.pow(a, n), c)
                            for n, c in w.coeffs.items()})


def ghost_big_in_ring(w: BigWitt) -> list:
    """[g_1, ..., g_N] from -z f'(z)/f(z) = sum g_d z^d, with the ring's own
    arithmetic (no division)."""
    ring = w.ring
    f = [w.coefficient(n) for n in range(w.N + 1)]
    gs = [ring.zero]
    for n in range(1, w.N + 1):
        acc = ring.mul_int(f[n], -n)
        for d in range(1, n):
            acc = ring.sub(acc, ring.mul(gs[d], f[n - d]))
        gs.append(acc)
    return gs[1:]


def ghost_big(w: BigWitt) -> list:
    """Ghost components over the rationalized ring."""
    rat = w.ring.rationalized()
    if rat is None:
        raise NonIntegralGhost("ring %s has no fraction cover" % w.ring)
    rring, to_rat, _ = rat
    lifted = BigWitt(rring, w.N, {n: to_rat(c) for n, c in w.coeffs.items()})
    return ghost_big_in_ring(lifted)


def from_ghost_big(ring, N, gs) -> BigWitt:
    """Inverse of ghost_big with integrality certificate; ghosts live in the
    rationalized ring."""
    rat = ring.rationalized()
    rring, _, from_rat = rat
    f = [rring.one]
    for n in range(1, N + 1):
        acc = rring.zero
        for d in range(1, n + 1):
            acc = rring.add(acc, rring.mul(gs[d - 1], f[n - d]))
        acc = rring.mul(rring.neg(acc), rring.inv_int(n))
        f.append(acc)
    out = {}
    for n in range(1, N + 1):
        img = from_rat(f[n])
        if img is None:
            raise NonIntegralGhost("big Witt coefficient %d solves to %s"
                                   % (n, rring.fmt(f[n])))
        out[n] = img
    return BigWitt(ring, N, out)


def _from_ghost_big_exact(ring, N, gs) -> BigWitt:
    f = [ring.one]
    for n in range(1, N + 1):
        acc = ring.zero
        for d in range(1, n + 1):
            acc = ring.add(acc, ring.mul(gs[d - 1], f[n - d]))
        q = ring.div_int_exact(ring.neg(acc), n)
        if q is None:
            raise NonIntegralGhost("big Witt coefficient %d is not integral" % n)
        f.append(q)
    return BigWitt(ring, N, {n: f[n] for n in range(1, N + 1)})


def bigwitt_mul(a: BigWitt, b: BigWitt) -> BigWitt:
    a._check(b)
    N = min(a.N, b.N)
    ring = a.ring
    if ring.is_torsion_free and _has_exact_division(ring):
        ga = ghost_big_in_ring(a.truncate(N))
        gb = ghost_big_in_ring(b.truncate(N))
        return _from_ghost_big_exact(ring, N,
                                     [ring.mul(x, y) for x, y in zip(ga, gb)])
    rring = ring.rationalized()[0]
    ga, gb = ghost_big(a.truncate(N)), ghost_big(b.truncate(N))
    return from_ghost_big(ring, N, [rring.mul(x, y) for x, y in zip(ga, gb)])


def frobenius_big(w: BigWitt, m: int) -> BigWitt:
    """F_m; ghost(F_m w)_d = ghost(w)_{m d}.  Output order floor(N/m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    N_out = w.N // m
    if N_out < 1:
        raise PrecisionExhausted("need N_big >= %d for F_%d" % (m, m))
    ring = w.ring
    if ring.is_torsion_free and _has_exact_division(ring):
        gs = ghost_big_in_ring(w)
        return _from_ghost_big_exact(
            ring, N_out, [gs[m * d - 1] for d in range(1, N_out + 1)])
    gs = ghost_big(w)
    return from_ghost_big(w.ring, N_out,
                          [gs[m * d - 1] for d in range(1, N_out + 1)])


def bigwitt_scalar_mul(n: int, w: BigWitt) -> BigWitt:
    if n < 0:
        return bigwitt_scalar_mul(-n, -w)
    acc = BigWitt.one(w.ring, w.N)
    base = w
    while n:
        if n & 1:
            acc = acc + base
        base = base + base
        n >>= 1
    return acc


# ---------------------------------------------------------------------------
# characteristic-p kernel checks


def wf_kernel_report(ring, p: int, L: int, trials: int, rng) -> dict:
    """Over an F_p-algebra: for x with Fx = 0, check px = x^p = 0 and that
    {Fy = py} and {Fy = 0} cut out the same solutions."""
    checks = {"fx0_px": 0, "fx0_xp": 0, "eigen_equiv": 0}
    failures = []
    for _ in range(trials):
        x = _random_f_kernel(ring, p, L, rng)
        fx = frobenius(x)
        if not fx.is_zero():
            failures.append(("Fx", repr(x)))
            continue
        if scalar_mul(p, x).is_zero():
            checks["fx0_px"] += 1
        else:
            failures.append(("px", repr(x)))
        if witt_pow(x, p).is_zero():
            checks["fx0_xp"] += 1
        else:
            failures.append(("x^p", repr(x)))
        # Fy = py and Fy = 0 agree as conditions
        py = scalar_mul(p, x).truncate(L - 1)
        if frobenius(x) == py:
            checks["eigen_equiv"] += 1
        else:
            failures.append(("eigen", repr(x)))
    return {"trials": trials, "checks": checks, "failures": failures}


def _random_f_kernel(ring, p, L, rng):
    """Random x over a char-p ring with Fx = 0, i.e. every component a
    p-th-power nilpotent (F is the componentwise p-power map in char p)."""
    comps = []
    for _ in range(L):
        for _ in range(40):
            c = ring.rand(rng)
            if ring.is_zero(ring.pow(c, p)):
                comps.append(c)
                break
        else:
            comps.append(ring.zero)
    return WittVector(ring, p, comps)
