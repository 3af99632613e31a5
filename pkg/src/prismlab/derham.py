"""The de Rham fiber: Witt vectors x with 1 + px a Teichmuller unit, the
mutually inverse log/exp maps onto the Frobenius eigen-space {Fy = py},
the kernel description of the special fiber, and the characteristic-p
discrepancy between the two identifications.

Series are evaluated on Witt vectors in the Witt ring itself; every
eigen-space input is certified first, since for p = 2 the exponential's
coefficients do not tend to zero and only the argument's nilpotence makes
the sum finite.
"""
from __future__ import annotations

from fractions import Fraction

from .ringcore import (
    DoesNotConverge, IntModRing, ModP, PrismlabError, Ring,
)
from .witt import (
    WittVector, frobenius, scalar_mul, teichmuller, verschiebung, witt_neg,
    witt_op, zero_vector,
)


class NotTeichmuller(PrismlabError):
    pass


class EigenCheckFailed(PrismlabError):
    pass


class IdentityFailed(PrismlabError):
    pass


def _wadd(a, b):
    return witt_op(a, b, "add")


def _wmul(a, b):
    return witt_op(a, b, "mul")


def _wsub(a, b):
    return witt_op(a, witt_neg(b), "add")


def one_plus_p_x(x: WittVector) -> WittVector:
    p = x.p
    one = teichmuller(x.ring, p, x.L, x.ring.one)
    return _wadd(one, scalar_mul(p, x))


def is_teichmuller(w: WittVector) -> bool:
    return w == teichmuller(w.ring, w.p, w.L, w.components[0])


class GdRPoint:
    """A Witt vector x over Z/p^n with 1 + px Teichmuller."""

    __slots__ = ("x",)

    def __init__(self, x: WittVector, check: bool = True):
        if check and not is_teichmuller(one_plus_p_x(x)):
            raise NotTeichmuller("1 + px is not a Teichmuller unit")
        self.x = x

    def __eq__(self, other):
        if not isinstance(other, GdRPoint):
            return NotImplemented
        return self.x == other.x

    def __repr__(self):
        return "GdR(%r)" % (self.x,)

    def unit(self):
        """The unit u with [u] = 1 + px."""
        return one_plus_p_x(self.x).components[0]


def gdr_op(a: GdRPoint, b: GdRPoint) -> GdRPoint:
    """x1 + x2 + p x1 x2 in the Witt ring."""
    x1, x2 = a.x, b.x
    out = _wadd(_wadd(x1, x2), scalar_mul(x1.p, _wmul(x1, x2)))
    return GdRPoint(out, check=False)


def gdr_zero(ring, p, L) -> GdRPoint:
    return GdRPoint(zero_vector(ring, p, L), check=False)


# --- series evaluation on Witt vectors ---------------------------------------


def _scalar_rep(ring: Ring, frac: Fraction, p: int) -> int:
    """Integer representative of a p-adically integral rational, at the
    ring's precision plus a margin covering scalar-multiplication slack."""
    _, n_p = _base_scalar(ring)
    target = ModP(p, n_p + 4)
    img = target.from_rational(frac)
    if img is None:
        raise DoesNotConverge("coefficient %s is not p-integral" % frac)
    return img


def witt_series_eval(coeff, x: WittVector, bound: int) -> WittVector:
    """sum_{n>=1} coeff(n) . x^n, where coeff(n) is a p-integral rational.

    Terms vanish once x^n does (componentwise p-valuations of x add up
    under Witt multiplication), so the cutoff is certified by checking that
    the final terms contribute nothing.
    """
    ring, p = x.ring, x.p
    acc = zero_vector(ring, p, x.L)
    power = x
    tail_zero = True
    for n in range(1, bound + 1):
        c = _scalar_rep(ring, Fraction(coeff(n)), p)
        term = scalar_mul(c, power)
        acc = _wadd(acc, term)
        if n >= bound - 1:
            tail_zero = tail_zero and term.is_zero()
        if n < bound:
            power = _wmul(power, x)
    if not tail_zero:
        raise DoesNotConverge("series did not stabilize within %d terms" % bound)
    return acc


def _base_scalar(ring) -> tuple:
    """(p, n_p) of a mod-p^n coefficient ring or of its scalar base."""
    from .ringcore import PolyQuotRing
    if isinstance(ring, PolyQuotRing):
        return _base_scalar(ring.scalar)
    if not isinstance(ring, IntModRing) or ring.p is None:
        raise DoesNotConverge("de Rham maps run over Z/p^n coefficients")
    n_p, m = 0, ring.m
    while m % ring.p == 0:
        m //= ring.p
        n_p += 1
    return ring.p, n_p


def f_log(a: GdRPoint) -> WittVector:
    """p^{-1} log(1 + px) evaluated in the Witt ring; lands in {Fy = py}."""
    x = a.x
    p, n_p = _base_scalar(x.ring)
    y = witt_series_eval(lambda n: Fraction((-p) ** (n - 1), n), x, n_p + 2)
    fy = frobenius(y)
    if fy != scalar_mul(p, y).truncate(x.L - 1):
        raise EigenCheckFailed("f_log output broke F y = p y")
    return y


def is_eigen(y: WittVector) -> bool:
    """F y = p y at the available length."""
    return frobenius(y) == scalar_mul(y.p, y).truncate(y.L - 1)


def g_exp(y: WittVector) -> GdRPoint:
    """(exp(py) - 1)/p, defined only on certified {Fy = py} points."""
    if not is_eigen(y):
        raise EigenCheckFailed("g_exp needs Fy = py")
    p, n_p = _base_scalar(y.ring)
    import math
    x = witt_series_eval(lambda n: Fraction(p ** (n - 1), math.factorial(n)),
                         y, n_p + 2)
    return GdRPoint(x)


def frob_power_identity(a: GdRPoint) -> dict:
    """F x equals the p-th power of x for the rescaled group operation:
    h(x) = ((1+px)^p - 1)/p = sum C(p,i) p^(i-1) x^i."""
    import math
    x = a.x
    p = x.p
    acc = zero_vector(x.ring, p, x.L)
    power = x
    for i in range(1, p + 1):
        c = math.comb(p, i) * p ** (i - 1)
        acc = _wadd(acc, scalar_mul(c, power))
        if i < p:
            power = _wmul(power, x)
    ok = frobenius(x) == acc.truncate(x.L - 1)
    return {"ok": ok, "fx": frobenius(x), "h": acc.truncate(x.L - 1)}


def id_minus_V(y: WittVector) -> WittVector:
    """y - Vy, mapping {Fy = py} into the kernel of F; the inverse is
    summing Verschiebung iterates."""
    if not is_eigen(y):
        raise EigenCheckFailed("id - V is certified on Fy = py only")
    out = _wsub(y, verschiebung(y))
    if not frobenius(out).is_zero():
        raise EigenCheckFailed("F(y - Vy) did not vanish")
    return out


def v_geometric(x: WittVector) -> WittVector:
    """sum_k V^k x, the inverse of id - V at finite length."""
    acc = zero_vector(x.ring, x.p, x.L)
    v = x
    for _ in range(x.L):
        acc = _wadd(acc, v)
        v = verschiebung(v)
    return acc


# --- samplers -----------------------------------------------------------------


def sample_gdr(ring, p, L, rng, tries: int = 64) -> GdRPoint:
    """Random point: pick a unit u in 1 + pA and solve p . x = [u] - 1
    triangularly, choosing p-adic digit branches at random."""
    one = teichmuller(ring, p, L, ring.one)
    _, n_p = _base_scalar(ring)
    for _ in range(tries):
        u = ring.from_int(1 + p * rng.randrange(p ** (n_p - 1)))
        target = _wsub(teichmuller(ring, p, L, u), one)
        x = _solve_scalar_p(target, rng)
        if x is not None:
            return GdRPoint(x)
    raise DoesNotConverge("no de Rham point found")


def _solve_scalar_p(target: WittVector, rng):
    """Solve p . x = target for x, one component at a time; (p.x)_i is
    p x_i plus a polynomial in earlier components."""
    ring, p, L = target.ring, target.p, target.L
    _, n_p = _base_scalar(ring)
    comps = []
    for i in range(L):
        partial = WittVector(ring, p, comps + [ring.zero] * (L - i))
        base = scalar_mul(p, partial).components[i]
        resid = ring.sub(target.components[i], base)
        inv = _divide_by_p(ring, resid, p, n_p)
        if inv is None:
            return None
        comps.append(ring.add(inv, ring.from_int(
            p ** (n_p - 1) * rng.randrange(p))))
    x = WittVector(ring, p, comps)
    if scalar_mul(p, x) != target:
        return None
    return x


def _divide_by_p(ring, value, p, n_p):
    if isinstance(ring, IntModRing) and isinstance(value, int):
        v = value % ring.m
        if v % p:
            return None
        return (v // p) % ring.m
    return None


def sample_eigen(ring, p, L, rng, tries: int = 64) -> WittVector:
    """Random y with Fy = py: solve F(y) - p.y = 0 triangularly; y_{i+1}
    enters the i-th equation linearly with coefficient p."""
    _, n_p = _base_scalar(ring)
    for _ in range(tries):
        comps = [ring.mul_int(ring.from_int(rng.randrange(p ** (n_p - 1))), p)]
        ok = True
        for i in range(L - 1):
            partial = WittVector(ring, p, comps + [ring.zero] * (L - 1 - i))
            lhs = frobenius(partial).components[i]
            rhs = scalar_mul(p, partial).components[i]
            resid = ring.sub(rhs, lhs)
            div = _divide_by_p(ring, resid, p, n_p)
            if div is None:
                ok = False
                break
            comps.append(ring.add(div, ring.from_int(
                p ** (n_p - 1) * rng.randrange(p))))
        if not ok:
            continue
        y = WittVector(ring, p, comps)
        if is_eigen(y):
            return y
    raise DoesNotConverge("no eigen point found")


def sample_f_kernel(ring, p, L, rng) -> WittVector:
    """Random x with Fx = 0 over a char-p coefficient ring: components are
    p-power nilpotents."""
    comps = []
    for _ in range(L):
        for _ in range(64):
            c = ring.rand(rng)
            if ring.is_zero(ring.pow(c, p)):
                comps.append(c)
                break
        else:
            comps.append(ring.zero)
    return WittVector(ring, p, comps)


# --- characteristic-p checks ---------------------------------------------------


def witt_unit_inverse(w: WittVector) -> WittVector:
    """Inverse of a unit with 0-th component 1, by the geometric series in
    its nilpotent part."""
    one = teichmuller(w.ring, w.p, w.L, w.ring.one)
    u = _wsub(one, w)
    acc, term = one, one
    for _ in range(4 * w.L):
        term = _wmul(term, u)
        acc = _wadd(acc, term)
        if term.is_zero():
            break
    if _wmul(acc, w) != one:
        raise IdentityFailed("unit inverse did not stabilize")
    return acc


def discrepancy_check(ring, p: int, L: int, xs) -> dict:
    """The two unit-group identifications of the kernel fiber differ by
    exactly id - V: running the honest composite (geometric V-series, then
    the exponential back into the rescaled group) on the argument Vx - x
    reproduces the naive class of x, i.e. f(Vx - x) = f_naive(x).

    The displayed form f(x) = f_naive(Vx - x) puts id - V on the wrong
    side: it only agrees up to V^2-terms and has counterexamples for odd p
    at length >= 3.
    """
    one = teichmuller(ring, p, L, ring.one)
    failures = []
    count = 0
    nontrivial = False
    for x in xs:
        count += 1
        if not frobenius(x).is_zero():
            failures.append(("not in kernel", repr(x)))
            continue
        arg = _wsub(verschiebung(x), x)
        # the point of the rescaled group that the composite sends to arg
        point = g_exp(v_geometric(arg))
        # triangular identity: sum_k V^k (Vx - x) = -x
        if v_geometric(arg) != witt_neg(x):
            failures.append(("geometric series", repr(x)))
        rep_f = witt_unit_inverse(_wadd(one, verschiebung(point.x)))
        rep_naive = _wadd(one, verschiebung(x))
        if rep_f != rep_naive:
            failures.append(("class mismatch", repr(x)))
        if arg != x:
            nontrivial = True
    return {"count": count, "failures": failures,
            "differs_from_identity": nontrivial}


def g_eta_check(ring, p: int, L: int, xs_pairs) -> dict:
    """At the special point: V(1) x = V(Fx) identically, the subgroup cut
    out by V(1) x = 0 is exactly ker F, and on it the induced operation is
    plain Witt addition."""
    v1 = verschiebung(teichmuller(ring, p, L, ring.one))
    failures = []
    for x, y in xs_pairs:
        lhs = _wmul(v1, x)
        # V maps length L-1 into length L: V(Fx) uses every component of Fx
        rhs = WittVector(ring, p, (ring.zero,) + frobenius(x).components)
        if lhs != rhs:
            failures.append(("projection formula", repr(x)))
        in_kernel_v = _wmul(v1, x).is_zero()
        in_kernel_f = frobenius(x).is_zero()
        if in_kernel_v != in_kernel_f:
            failures.append(("kernel mismatch", repr(x)))
        if in_kernel_f and frobenius(y).is_zero():
            law = _wadd(_wadd(x, y), _wmul(v1, _wmul(x, y)))
            if law != _wadd(x, y):
                failures.append(("law not additive", (repr(x), repr(y))))
    return {"failures": failures}


def generic_vector(p: int, L: int, prefix: str = "x", extra: int = 2):
    """A Witt vector whose components are polynomial generators over F_p,
    for symbolic identity checks; the degree cap covers the largest power
    a length-L identity can produce."""
    from .ringcore import SeriesCoeffRing
    base = ModP(p, 1)
    names = tuple("%s%d" % (prefix, i) for i in range(L))
    ring = SeriesCoeffRing(base, names, p ** L + extra)
    comps = [ring.var(n) for n in names]
    return ring, WittVector(ring, p, comps)
