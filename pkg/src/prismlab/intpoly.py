"""Integer-valued polynomials in the binomial basis.

An element is a finite integer vector (a_0, ..., a_d) standing for
sum a_n * C(u, n).  Monomial form over Q exists only transiently, for
multiplication, lambda-operations and the delta operator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ringcore import PolyQuotRing, PrismlabError, RatRing


class NotIntegerValued(PrismlabError):
    pass


_RATPOLY = PolyQuotRing(RatRing(), None, "u")


def gen_binom(m: int, n: int) -> int:
    """C(m, n) for any integer m and n >= 0."""
    if n < 0:
        return 0
    if m >= 0:
        return math.comb(m, n)
    return (-1) ** n * math.comb(n - m - 1, n)


def binom_poly(n: int) -> tuple:
    """C(u, n) = u(u-1)...(u-n+1)/n! as a rational polynomial."""
    R = _RATPOLY
    out = R.one
    for i in range(n):
        out = R.mul(out, R.make([Fraction(-i), Fraction(1)]))
    return tuple(c / math.factorial(n) for c in out)


@dataclass(frozen=True)
class IntPoly:
    """Finite integer coordinate vector against the basis C(u, n)."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        while coords and coords[-1] == 0:
            coords = coords[:-1]
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, n: int) -> "IntPoly":
        return cls((0,) * n + (1,))

    @classmethod
    def from_int(cls, n: int) -> "IntPoly":
        return cls((n,))

    @classmethod
    def u(cls) -> "IntPoly":
        return cls.basis(1)

    def degree(self) -> int:
        return len(self.coords) - 1 if self.coords else -1

    def coord(self, n: int) -> int:
        return self.coords[n] if n < len(self.coords) else 0

    def __call__(self, m: int) -> int:
        return sum(a * gen_binom(m, n) for n, a in enumerate(self.coords))

    def to_rational(self) -> tuple:
        R = _RATPOLY
        acc = R.zero
        for n, a in enumerate(self.coords):
            if a:
                acc = R.add(acc, tuple(Fraction(a) * c for c in binom_poly(n)))
        return acc

    def __add__(self, other):
        n = max(len(self.coords), len(other.coords))
        return IntPoly(tuple(self.coord(i) + other.coord(i) for i in range(n)))

    def __neg__(self):
        return IntPoly(tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return int_mul(self, other)

    def scale(self, n: int) -> "IntPoly":
        return IntPoly(tuple(n * a for a in self.coords))

    def __pow__(self, n: int) -> "IntPoly":
        acc = IntPoly.from_int(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for n, a in enumerate(self.coords):
            if a:
                base = "1" if n == 0 else "C(u,%d)" % n
                parts.append(base if a == 1 and n > 0 else
                             "%d" % a if n == 0 else "%d*%s" % (a, base))
        return " + ".join(parts)


def to_binomial(poly) -> IntPoly:
    """Convert a rational polynomial (tuple of Fractions, low degree first)
    to binomial coordinates via iterated finite differences at 0."""
    poly = tuple(Fraction(c) for c in poly)
    R = _RATPOLY
    coords = []
    current = poly
    n = 0
    while current:
        a = R.subst(current, Fraction(0))
        a = a[0] if a else Fraction(0)
        if a.denominator != 1:
            raise NotIntegerValued("difference Delta^%d f(0) = %s is not an integer"
                                   % (n, a))
        coords.append(int(a))
        # Delta f(u) = f(u+1) - f(u)
        shifted = _shift_one(current)
        current = R.sub(shifted, current)
        n += 1
    return IntPoly(tuple(coords))


def _shift_one(poly: tuple) -> tuple:
    R = _RATPOLY
    return R.subst(poly, R.make([Fraction(1), Fraction(1)]))


def int_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    # Vandermonde-type structure constants: C(u,m) C(u,n) =
    # sum_k C(k,m) C(m, m+n-k) C(u,k); integer arithmetic throughout,
    # and int_mul_rational below is the independent oracle
    out: dict = {}
    for m, am in enumerate(a.coords):
        if not am:
            continue
        for n, bn in enumerate(b.coords):
            if not bn:
                continue
            for k in range(max(m, n), m + n + 1):
                c = math.comb(k, m) * math.comb(m, m + n - k)
                if c:
                    out[k] = out.get(k, 0) + am * bn * c
    size = max(out, default=-1) + 1
    return IntPoly(tuple(out.get(i, 0) for i in range(size)))


def int_mul_rational(a: IntPoly, b: IntPoly) -> IntPoly:
    """Multiplication through the transient monomial form over Q."""
    return to_binomial(_RATPOLY.mul(a.to_rational(), b.to_rational()))


def lambda_op(n: int, x: IntPoly) -> IntPoly:
    """lambda_n(x) = x(x-1)...(x-n+1)/n!, integer-valued by Wilkerson."""
    R = _RATPOLY
    fx = x.to_rational()
    acc = R.one
    for i in range(n):
        acc = R.mul(acc, R.sub(fx, R.make([Fraction(i)])))
    return to_binomial(tuple(c / math.factorial(n) for c in acc))


def adams(n: int, x: IntPoly) -> IntPoly:
    """psi^n on this ring is the identity for every n."""
    return x


def delta_p(x: IntPoly, p: int) -> IntPoly:
    """delta(x) = (x - x^p)/p; integrality is the Frobenius-fixed-point fact
    and the conversion would fail loudly if it broke."""
    R = _RATPOLY
    fx = x.to_rational()
    num = R.sub(fx, R.pow(fx, p))
    return to_binomial(tuple(c / p for c in num))


def difference(x: IntPoly) -> tuple[IntPoly, int]:
    """(Delta x, least m with Delta^m x = 0); Delta shifts the coordinates
    down by one place."""
    return IntPoly(x.coords[1:]), len(x.coords)


def mahler_table(x: IntPoly, p: int, n: int) -> dict:
    """Smallest period p^k with x(a) = x(b) mod p^n whenever a = b mod p^k,
    plus the residue table.

    Periodicity is decided on coordinates: all values of g lie in p^n Z
    exactly when all binomial coordinates of g do."""
    d = max(x.degree(), 0)
    mod = p ** n
    cap = n + d + 2
    for k in range(cap + 1):
        if _coords_vanish_mod(_shift_by(x, p ** k) - x, mod):
            period = p ** k
            return {"period": period,
                    "residues": [x(r) % mod for r in range(period)]}
    raise NotIntegerValued("no period found below p^%d" % cap)


def _shift_by(x: IntPoly, s: int) -> IntPoly:
    # C(u+s, n) = sum_j C(s, n-j) C(u, j)
    out = [0] * (len(x.coords) or 1)
    for n, a in enumerate(x.coords):
        if a:
            for j in range(n + 1):
                out[j] += a * gen_binom(s, n - j)
    return IntPoly(tuple(out))


def _coords_vanish_mod(x: IntPoly, mod: int) -> bool:
    return all(a % mod == 0 for a in x.coords)


import functools


@functools.lru_cache(maxsize=None)
def _delta_iterate(p: int, i: int) -> IntPoly:
    """delta^i(u)."""
    if i == 0:
        return IntPoly.u()
    return delta_p(_delta_iterate(p, i - 1), p)


@functools.lru_cache(maxsize=None)
def delta_basis(p: int, n: int) -> tuple:
    """The basis monomial prod delta^i(u)^{d_i} indexed by the base-p digits
    d_i of n, as a rational polynomial (degree exactly n)."""
    R = _RATPOLY
    digits = []
    m = n
    while m:
        digits.append(m % p)
        m //= p
    acc = R.one
    for i, d in enumerate(digits):
        if d:
            acc = R.mul(acc, R.pow(_delta_iterate(p, i).to_rational(), d))
    return acc


def delta_basis_expand(x: IntPoly, p: int, deg: int) -> dict:
    """Coordinates of x against the monomials prod delta^i(u)^{d_i} with
    0 <= d_i < p, as p-integral rationals, by triangular degree reduction."""
    if x.degree() >= p ** (deg + 1):
        raise NotIntegerValued("degree %d exceeds p^(deg+1)" % x.degree())
    R = _RATPOLY
    residual = x.to_rational()
    coords: dict = {}
    while residual:
        n = len(residual) - 1
        basis = delta_basis(p, n)
        c = residual[-1] / basis[-1]
        if c.denominator % p == 0:
            raise NotIntegerValued(
                "leading coordinate %s at degree %d is not p-integral" % (c, n))
        coords[n] = c
        residual = R.sub(residual, tuple(c * b for b in basis))
        if len(residual) - 1 >= n and residual:
            raise NotIntegerValued("reduction failed to lower the degree")
    return coords


def delta_basis_combine(coords: dict, p: int) -> tuple:
    """Rational polynomial sum of coords[n] * basis_n (roundtrip check)."""
    R = _RATPOLY
    acc = R.zero
    for n, c in coords.items():
        acc = R.add(acc, tuple(c * b for b in delta_basis(p, n)))
    return acc


def rational_of_intpoly(x: IntPoly) -> tuple:
    return x.to_rational()
