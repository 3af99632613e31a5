"""Coefficient rings and truncated multivariate power series.

Everything downstream (Witt vectors, formal group laws, the q-binomial Hopf
algebra) runs over the small ring protocol defined here: exact integers and
rationals, integers mod p^n, polynomial and series quotients in h = q - 1,
and the cyclotomic quotient Z[q]/(Phi_p(q)).  All values are immutable;
rings are stateless and freely shareable across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class PrismlabError(Exception):
    """Base class for all library errors."""


class RingMismatch(PrismlabError):
    pass


class NonzeroConstantTerm(PrismlabError):
    pass


class NonIntegralCoefficient(PrismlabError):
    pass


class DoesNotConverge(PrismlabError):
    pass


class PrecisionExhausted(PrismlabError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Prec:
    """Truncation parameters shared by every suite.

    p: prime; n_p: coefficients are tracked mod p^n_p; n_q: (q-1)-adic cutoff;
    n_z: series order cutoff per formal variable block; L: p-typical Witt
    length; N_big: big-Witt series cutoff.
    """

    p: int = 2
    n_p: int = 8
    n_q: int = 8
    n_z: int = 8
    L: int = 4
    N_big: int = 12

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("p must be prime")
        for field in ("n_p", "n_q", "n_z", "L", "N_big"):
            if getattr(self, field) < 1:
                raise ValueError("%s must be >= 1" % field)


# ---------------------------------------------------------------------------
# scalar rings


class Ring:
    """Protocol shared by all coefficient rings.

    Elements are plain immutable values (int, Fraction, tuples of those);
    all arithmetic goes through the ring object.
    """

    name = "?"
    is_torsion_free = True

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, n: int):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def pow(self, a, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def mul_int(self, a, n: int):
        return self.mul(a, self.from_int(n))

    # --- optional capabilities -------------------------------------------

    def inv_int(self, n: int):
        """Inverse of the integer n in this ring, or None."""
        return None

    def div_int_exact(self, a, n: int):
        """a / n when exactly divisible, else None (None also when the ring
        cannot divide); lets ghost solvers stay in integer arithmetic."""
        return None

    def from_rational(self, x):
        """Image of a rationalized element, or None if not integral here."""
        return None

    def rationalized(self):
        """(ring over Q, to_rat, from_rat) for torsion-free rings, else None."""
        return None

    def lifted(self):
        """(torsion-free cover, lift, reduce) for torsion rings, else None."""
        return None

    def rand(self, rng):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return repr(a)

    def __repr__(self):
        return self.name


class IntRing(Ring):
    name = "Z"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def pow(self, a, n):
        return a ** n

    def inv_int(self, n):
        return n if n in (1, -1) else None

    def div_int_exact(self, a, n):
        q, r = divmod(a, n)
        return q if r == 0 else None

    def from_rational(self, x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else None

    def rationalized(self):
        return RatRing(), Fraction, self.from_rational

    def rand(self, rng):
        return rng.randrange(-9, 10)

    def __eq__(self, other):
        return type(other) is IntRing

    def __hash__(self):
        return hash("Z")


class RatRing(Ring):
    name = "Q"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def pow(self, a, n):
        return a ** n

    def inv_int(self, n):
        return Fraction(1, n) if n != 0 else None

    def div_int_exact(self, a, n):
        return a / n

    def from_rational(self, x):
        return Fraction(x)

    def rationalized(self):
        return self, lambda a: a, lambda a: a

    def rand(self, rng):
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 8))

    def __eq__(self, other):
        return type(other) is RatRing

    def __hash__(self):
        return hash("Q")


class IntModRing(Ring):
    """Z/m, normally with m = p^n_p."""

    is_torsion_free = False

    def __init__(self, m: int, p: int | None = None):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.p = p
        self.name = "Z/%d" % m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def from_int(self, n):
        return n % self.m

    def pow(self, a, n):
        return pow(a, n, self.m)

    def inv_int(self, n):
        if math.gcd(n, self.m) != 1:
            return None
        return pow(n, -1, self.m)

    def from_rational(self, x):
        x = Fraction(x)
        inv = self.inv_int(x.denominator)
        if inv is None:
            return None
        return (x.numerator * inv) % self.m

    def lifted(self):
        return IntRing(), lambda a: a, lambda a: a % self.m

    def rand(self, rng):
        return rng.randrange(self.m)

    def __eq__(self, other):
        return type(other) is IntModRing and other.m == self.m

    def __hash__(self):
        return hash(("Zmod", self.m))


class PolyQuotRing(Ring):
    """scalar[x]/(modulus), or the plain polynomial ring scalar[x].

    Elements are tuples of scalar elements (coefficients of 1, x, x^2, ...)
    with trailing zeros stripped.  modulus is a monic integer polynomial
    given by its coefficient tuple; None means no reduction.
    """

    def __init__(self, scalar: Ring, modulus: tuple | None, var: str = "h"):
        self.scalar = scalar
        self.var = var
        self.modulus = tuple(modulus) if modulus is not None else None
        if self.modulus is not None:
            if self.modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            self.deg = len(self.modulus) - 1
            # x^deg = -(m_0 + m_1 x + ...): precompute the scalar images
            self._top = tuple(scalar.from_int(-c) for c in self.modulus[:-1])
        else:
            self.deg = None
        self.is_torsion_free = scalar.is_torsion_free
        mod_tag = "" if modulus is None else "/(%s)" % self._fmt_modulus()
        self.name = "%s[%s]%s" % (scalar.name, var, mod_tag)

    def _fmt_modulus(self):
        parts = []
        for i, c in enumerate(self.modulus):
            if c:
                parts.append("%s%s" % ("" if (c == 1 and i) else c,
                                       "" if i == 0 else
                                       self.var if i == 1 else "%s^%d" % (self.var, i)))
        return "+".join(parts)

    def _strip(self, coeffs: list) -> tuple:
        while coeffs and self.scalar.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def _reduce(self, coeffs: list) -> tuple:
        if self.modulus is None:
            return self._strip(coeffs)
        d = self.deg
        s = self.scalar
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if not s.is_zero(c):
                for j, t in enumerate(self._top):
                    coeffs[i - d + j] = s.add(coeffs[i - d + j], s.mul(c, t))
            coeffs.pop()
        return self._strip(coeffs)

    def make(self, coeffs) -> tuple:
        """Element from an iterable of scalar coefficients, low degree first."""
        return self._reduce(list(coeffs))

    def make_ints(self, coeffs) -> tuple:
        return self.make([self.scalar.from_int(c) for c in coeffs])

    def coeff(self, a, i: int):
        return a[i] if i < len(a) else self.scalar.zero

    @property
    def x(self) -> tuple:
        return self.make_ints([0, 1])

    def add(self, a, b):
        n = max(len(a), len(b))
        s = self.scalar
        return self._strip([s.add(self.coeff(a, i), self.coeff(b, i)) for i in range(n)])

    def neg(self, a):
        return tuple(self.scalar.neg(c) for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        s = self.scalar
        out = [s.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if s.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = s.add(out[i + j], s.mul(ca, cb))
        return self._reduce(out)

    def from_int(self, n):
        c = self.scalar.from_int(n)
        return (c,) if not self.scalar.is_zero(c) else ()

    def is_zero(self, a):
        return a == ()

    def eq(self, a, b):
        return self.sub(a, b) == ()

    def inv_int(self, n):
        inv = self.scalar.inv_int(n)
        return None if inv is None else self._strip([inv])

    def div_int_exact(self, a, n):
        out = []
        for c in a:
            q = self.scalar.div_int_exact(c, n)
            if q is None:
                return None
            out.append(q)
        return self._strip(out)

    def from_rational(self, x):
        out = []
        for c in x:
            img = self.scalar.from_rational(c)
            if img is None:
                return None
            out.append(img)
        return self._strip(out)

    def rationalized(self):
        base = self.scalar.rationalized()
        if base is None:
            return None
        rat_scalar, to_rat, _ = base
        rring = PolyQuotRing(rat_scalar, self.modulus, self.var)

        def up(a):
            return rring._strip([to_rat(c) for c in a])

        return rring, up, self.from_rational

    def lifted(self):
        base = self.scalar.lifted()
        if base is None:
            return None
        lift_scalar, up, down = base
        lring = PolyQuotRing(lift_scalar, self.modulus, self.var)

        def lift(a):
            return lring._strip([up(c) for c in a])

        def reduce(a):
            return self._strip([down(c) for c in a])

        return lring, lift, reduce

    def rand(self, rng):
        n = self.deg if self.deg is not None else rng.randrange(1, 4)
        return self._strip([self.scalar.rand(rng) for _ in range(n)])

    def div_by_x(self, a):
        """(a / x, constant remainder); exact shift in the variable."""
        if not a:
            return (), self.scalar.zero
        return self._strip(list(a[1:])), a[0]

    def subst(self, a, value):
        """Evaluate the polynomial a at a ring element."""
        acc = self.zero
        power = self.one
        for c in a:
            acc = self.add(acc, self.mul(self._strip([c]), power))
            power = self.mul(power, value)
        return acc

    def fmt(self, a):
        if not a:
            return "0"
        parts = []
        for i, c in enumerate(a):
            if self.scalar.is_zero(c):
                continue
            cs = self.scalar.fmt(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = self.var if i == 1 else "%s^%d" % (self.var, i)
                parts.append(xs if cs == "1" else "%s*%s" % (cs, xs))
        return " + ".join(parts)

    def __eq__(self, other):
        return (type(other) is PolyQuotRing and other.scalar == self.scalar
                and other.modulus == self.modulus and other.var == self.var)

    def __hash__(self):
        return hash(("PolyQuot", self.scalar, self.modulus, self.var))


# --- named constructors ----------------------------------------------------


def ExactInt() -> IntRing:
    return IntRing()


def ExactRat() -> RatRing:
    return RatRing()


def ModP(p: int, n_p: int) -> IntModRing:
    if not is_prime(p):
        raise ValueError("p must be prime")
    return IntModRing(p ** n_p, p=p)


def QPoly() -> PolyQuotRing:
    """Z[q] represented on the basis of powers of h = q - 1."""
    return PolyQuotRing(IntRing(), None, "h")


def QSeriesRing(n_q: int, p: int | None = None, n_p: int | None = None) -> PolyQuotRing:
    """Z[q]/((q-1)^n_q), optionally with coefficients mod p^n_p."""
    scalar = IntRing() if p is None else ModP(p, n_p)
    return PolyQuotRing(scalar, (0,) * n_q + (1,), "h")


def cyclotomic_modulus(p: int) -> tuple:
    return (1,) * p


def CyclotomicRing(p: int, n_p: int | None = None) -> PolyQuotRing:
    """Z[q]/(Phi_p(q)), basis 1, z, ..., z^(p-2) where z is the image of q."""
    scalar = IntRing() if n_p is None else ModP(p, n_p)
    return PolyQuotRing(scalar, cyclotomic_modulus(p), "zeta")


def q_element(ring: PolyQuotRing) -> tuple:
    """The image of q in a ring built on h = q - 1 or on zeta."""
    if ring.var == "zeta":
        return ring.make_ints([0, 1])
    return ring.make_ints([1, 1])


def h_element(ring: PolyQuotRing) -> tuple:
    """The image of q - 1."""
    if ring.var == "zeta":
        return ring.make_ints([-1, 1])
    return ring.make_ints([0, 1])


def phi_p_element(ring: PolyQuotRing, p: int) -> tuple:
    """Phi_p(q) = 1 + q + ... + q^(p-1) inside the given ring."""
    q = q_element(ring)
    acc = ring.zero
    term = ring.one
    for _ in range(p):
        acc = ring.add(acc, term)
        term = ring.mul(term, q)
    return acc


class SeriesCoeffRing(Ring):
    """Adapter: truncated series over a base ring used as coefficients.

    Lets a formal group law acquire an extra polynomial parameter (the
    deformation variable) without special-casing downstream code.
    """

    def __init__(self, base: Ring, variables, order):
        self.base = base
        self.variables = tuple(variables)
        self.order = order
        self.is_torsion_free = base.is_torsion_free
        self.name = "%s[[%s]]<=%s" % (base.name, ",".join(self.variables), order)

    def _const(self, value):
        return TruncSeries.const(self.base, self.variables, self.order, value)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return self._const(self.base.from_int(n))

    def is_zero(self, a):
        return a.is_zero()

    def var(self, name):
        return TruncSeries.var(self.base, self.variables, self.order, name)

    def embed(self, c):
        return self._const(c)

    def eval_at(self, a, values: dict):
        """Collapse a coefficient series at base-ring values."""
        acc = self.base.zero
        for e, c in a.coeffs.items():
            term = c
            for v, n in zip(self.variables, e):
                if n:
                    term = self.base.mul(term, self.base.pow(values[v], n))
            acc = self.base.add(acc, term)
        return acc

    def rationalized(self):
        rat = self.base.rationalized()
        if rat is None:
            return None
        rbase, to_rat, from_rat = rat
        rring = SeriesCoeffRing(rbase, self.variables, self.order)

        def up(a):
            return a.map_coeffs(to_rat, rbase)

        def down(a):
            out = {}
            for e, c in a.coeffs.items():
                img = from_rat(c)
                if img is None:
                    return None
                out[e] = img
            return TruncSeries(self.base, self.variables, out, self.order)

        return rring, up, down

    def inv_int(self, n):
        inv = self.base.inv_int(n)
        return None if inv is None else self._const(inv)

    def div_int_exact(self, a, n):
        out = {}
        for e, c in a.coeffs.items():
            q = self.base.div_int_exact(c, n)
            if q is None:
                return None
            out[e] = q
        return TruncSeries(self.base, self.variables, out, self.order)

    def from_rational(self, x):
        out = {}
        for e, c in x.coeffs.items():
            img = self.base.from_rational(c)
            if img is None:
                return None
            out[e] = img
        return TruncSeries(self.base, self.variables, out, self.order)

    def rand(self, rng):
        return TruncSeries(self.base, self.variables,
                           {(n,) + (0,) * (len(self.variables) - 1): self.base.rand(rng)
                            for n in range(2)}, self.order)

    def fmt(self, a):
        return repr(a)

    def __eq__(self, other):
        return (type(other) is SeriesCoeffRing and other.base == self.base
                and other.variables == self.variables and other.order == self.order)

    def __hash__(self):
        return hash(("SeriesCoeff", self.base, self.variables, self.order))


# ---------------------------------------------------------------------------
# truncated multivariate power series


class TruncSeries:
    """Sparse truncated series: {exponent tuple: coefficient} with a total
    degree bound.  order None means no truncation (plain polynomials)."""

    __slots__ = ("ring", "variables", "coeffs", "order")

    def __init__(self, ring, variables, coeffs, order):
        self.ring = ring
        self.variables = tuple(variables)
        self.order = order
        if order is not None:
            coeffs = {e: c for e, c in coeffs.items() if sum(e) <= order}
        self.coeffs = {e: c for e, c in coeffs.items() if not ring.is_zero(c)}

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring, variables, order):
        return cls(ring, variables, {}, order)

    @classmethod
    def const(cls, ring, variables, order, value):
        n = len(tuple(variables))
        return cls(ring, variables, {(0,) * n: value}, order)

    @classmethod
    def one(cls, ring, variables, order):
        return cls.const(ring, variables, order, ring.one)

    @classmethod
    def var(cls, ring, variables, order, name):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(ring, variables, {tuple(e): ring.one}, order)

    @classmethod
    def from_int_terms(cls, ring, variables, order, terms):
        return cls(ring, variables,
                   {e: ring.from_int(c) for e, c in terms.items()}, order)

    # --- bookkeeping --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("%s vs %s" % (self.ring, other.ring))
        if self.variables != other.variables:
            raise RingMismatch("variable sets differ: %s vs %s"
                               % (self.variables, other.variables))

    def _join_order(self, other):
        if self.order is None:
            return other.order
        if other.order is None:
            return self.order
        return min(self.order, other.order)

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, exps: tuple):
        return self.coeffs.get(tuple(exps), self.ring.zero)

    def constant_term(self):
        return self.coefficient((0,) * len(self.variables))

    def degree(self):
        return max((sum(e) for e in self.coeffs), default=0)

    def low_order(self):
        """Smallest total degree with a nonzero coefficient; None if zero."""
        return min((sum(e) for e in self.coeffs), default=None)

    def truncate(self, order):
        return TruncSeries(self.ring, self.variables, self.coeffs, order)

    def map_coeffs(self, fn, ring=None):
        ring = ring or self.ring
        return TruncSeries(ring, self.variables,
                           {e: fn(c) for e, c in self.coeffs.items()}, self.order)

    def extend_vars(self, variables):
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.coeffs.items():
            ne = [0] * len(variables)
            for i, x in zip(pos, e):
                ne[i] = x
            out[tuple(ne)] = c
        return TruncSeries(self.ring, variables, out, self.order)

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        r = self.ring
        for e, c in other.coeffs.items():
            out[e] = r.add(out.get(e, r.zero), c)
        return TruncSeries(r, self.variables, out, self._join_order(other))

    def __neg__(self):
        return self.map_coeffs(self.ring.neg)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        order = self._join_order(other)
        r = self.ring
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if order is not None and d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = r.mul(c1, c2)
                out[e] = r.add(out[e], prod) if e in out else prod
        return TruncSeries(r, self.variables, out, order)

    def scale(self, c):
        r = self.ring
        return self.map_coeffs(lambda x: r.mul(c, x))

    def scale_int(self, n):
        return self.scale(self.ring.from_int(n))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative series power")
        result = TruncSeries.one(self.ring, self.variables, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eq(self, other, order=None):
        self._check(other)
        if order is None:
            order = self._join_order(other)
        d = self - other
        if order is None:
            return d.is_zero()
        return all(sum(e) > order for e in d.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.ring == other.ring and self.variables == other.variables
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.variables, self.order,
                     frozenset(self.coeffs.items())))

    # --- substitution -------------------------------------------------------

    def subs(self, mapping: dict):
        """Substitute series for variables.  Every variable occurring in a
        monomial with positive exponent must be mapped; values must share
        ring, variables and order."""
        template = next(iter(mapping.values()))
        r = template.ring
        if r != self.ring:
            raise RingMismatch("substitution into a different ring")
        order = template.order
        out = TruncSeries.zero(r, template.variables, order)
        powers = {v: [TruncSeries.one(r, template.variables, order)]
                  for v in mapping}

        def power(v, n):
            cache = powers[v]
            while len(cache) <= n:
                cache.append(cache[-1] * mapping[v])
            return cache[n]

        for e, c in self.coeffs.items():
            term = TruncSeries.const(r, template.variables, order, c)
            for v, n in zip(self.variables, e):
                if n:
                    if v not in mapping:
                        raise RingMismatch("no substitution given for %s" % v)
                    term = term * power(v, n)
            out = out + term
        return out

    def compose(self, g: "TruncSeries"):
        """f(g) for univariate f; g must have zero constant term unless f is
        a polynomial (finite, untruncated)."""
        if len(self.variables) != 1:
            raise RingMismatch("compose needs a univariate outer series")
        if not g.ring.is_zero(g.constant_term()) and self.order is not None:
            raise NonzeroConstantTerm("inner series has nonzero constant term")
        return self.subs({self.variables[0]: g})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=lambda t: (sum(t), t)):
            c = self.coeffs[e]
            mono = "*".join("%s^%d" % (v, n) if n > 1 else v
                            for v, n in zip(self.variables, e) if n)
            cs = self.ring.fmt(c)
            parts.append(cs if not mono else
                         mono if cs == "1" else "%s*%s" % (cs, mono))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# spec-level operations


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError("op must be 'add' or 'mul'")


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f.compose(g)


def clear_denominators(f: TruncSeries, target: Ring) -> TruncSeries:
    """Map a series over Q (or a rationalized quotient ring) into target.

    Each coefficient's denominator must be invertible in target; the error
    names the offending monomial.
    """
    out = {}
    for e, c in f.coeffs.items():
        img = target.from_rational(c)
        if img is None:
            mono = "*".join("%s^%d" % (v, n) if n > 1 else v
                            for v, n in zip(f.variables, e) if n) or "1"
            raise NonIntegralCoefficient(
                "coefficient %s of %s has no image in %s"
                % (f.ring.fmt(c), mono, target))
        out[e] = img
    return TruncSeries(target, f.variables, out, f.order)


def embed_exact(f: TruncSeries, rat_ring: Ring, to_rat) -> TruncSeries:
    return f.map_coeffs(to_rat, rat_ring)


def series_inverse(f: TruncSeries) -> TruncSeries:
    """1/f for f with constant term a unit (constant term 1 or -1 over
    non-rational rings; any nonzero constant over Q-type rings)."""
    r = f.ring
    c0 = f.constant_term()
    inv0 = None
    if r.eq(c0, r.one):
        inv0 = r.one
    elif r.eq(c0, r.neg(r.one)):
        inv0 = r.neg(r.one)
    else:
        rat = r.rationalized()
        if rat is not None and rat[0] == r:
            # invert the constant inside the fraction field representation
            inv0 = _invert_rat_elem(r, c0)
    if inv0 is None:
        raise NonzeroConstantTerm("constant term is not a visible unit")
    if f.order is None:
        raise PrecisionExhausted("series inverse needs a finite order")
    one = TruncSeries.one(r, f.variables, f.order)
    u = one - f.scale(inv0)  # positive order
    out = one
    term = one
    for _ in range(f.order):
        term = term * u
        if term.is_zero():
            break
        out = out + term
    return out.scale(inv0)


def _invert_rat_elem(ring, c):
    if isinstance(c, Fraction):
        return Fraction(c.denominator, c.numerator) if c != 0 else None
    if isinstance(ring, PolyQuotRing) and isinstance(c, tuple):
        # invert c = c0(1 + n) with n of positive var-order, c0 in Q
        if not c or c[0] == 0:
            return None
        if ring.modulus is None or ring.modulus[:-1].count(0) != len(ring.modulus) - 1:
            return None  # only for truncation quotients
        inv0 = Fraction(1) / c[0]
        n = ring.mul(ring._strip([inv0]), c)  # 1 + positive order
        n = ring.sub(n, ring.one)
        acc, term = ring.one, ring.one
        for _ in range(ring.deg):
            term = ring.mul(term, ring.neg(n))
            acc = ring.add(acc, term)
        return ring.mul(ring._strip([inv0]), acc)
    return None


def series_log(f: TruncSeries) -> TruncSeries:
    """log f for f = 1 + u with u of positive order, over a Q-type ring."""
    r = f.ring
    u = f - TruncSeries.one(r, f.variables, f.order)
    if u.low_order() in (0, None) and not u.is_zero():
        raise NonzeroConstantTerm("log needs f = 1 + (positive order)")
    if f.order is None:
        raise PrecisionExhausted("log needs a finite order")
    out = TruncSeries.zero(r, f.variables, f.order)
    term = TruncSeries.one(r, f.variables, f.order)
    for n in range(1, f.order + 1):
        term = term * u
        if term.is_zero():
            break
        coeff = Fraction((-1) ** (n - 1), n)
        out = out + term.scale(_rat_scalar(r, coeff))
    return out


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp f for f of positive order, over a Q-type ring."""
    r = f.ring
    if f.low_order() in (0,) and not f.is_zero():
        raise NonzeroConstantTerm("exp needs positive order")
    if f.order is None:
        raise PrecisionExhausted("exp needs a finite order")
    out = TruncSeries.one(r, f.variables, f.order)
    term = TruncSeries.one(r, f.variables, f.order)
    for n in range(1, f.order + 1):
        term = term * f.scale(_rat_scalar(r, Fraction(1, n)))
        if term.is_zero():
            break
        out = out + term
    return out


def _rat_scalar(ring, frac: Fraction):
    """The element frac * 1 in a ring over Q."""
    img = ring.from_rational(_as_rat_element(ring, frac))
    if img is None:
        raise NonIntegralCoefficient("ring does not contain %s" % frac)
    return img


def _as_rat_element(ring, frac: Fraction):
    if isinstance(ring, PolyQuotRing):
        return (frac,)
    return frac


def padic_log(u: TruncSeries, n_terms: int | None = None) -> TruncSeries:
    """log of a series congruent to 1 modulo the augmentation ideal plus the
    topologically nilpotent part of the coefficient ring.

    Over torsion-free rings the positive-order case is computed exactly over
    Q and cleared back (NonIntegralCoefficient if the result does not live in
    the ring).  When the constant term differs from 1 the coefficient ring
    must be a mod-p^n quotient; terms are then summed to the analytic
    stabilization bound.
    """
    r = u.ring
    w = u - TruncSeries.one(r, u.variables, u.order)
    if w.is_zero():
        return w
    if w.low_order() and w.low_order() > 0:
        rat = r.rationalized()
        if rat is not None:
            rring, to_rat, _ = rat
            res = series_log(u.map_coeffs(to_rat, rring))
            return clear_denominators(res, r)
        lift = r.lifted()
        if lift is None:
            raise DoesNotConverge("no exact cover for %s" % r)
        lring, up, _ = lift
        rring, to_rat, _ = lring.rationalized()
        res = series_log(u.map_coeffs(lambda c: to_rat(up(c)), rring))
        return clear_denominators(res, r)
    # constant part: need a p-adically truncated coefficient ring
    bound = n_terms or _log_term_bound(r)
    if bound is None:
        raise DoesNotConverge(
            "constant term differs from 1 and %s carries no p-adic modulus" % r)
    lift = r.lifted()
    if lift is None:
        raise DoesNotConverge("no exact cover for %s" % r)
    lring, up, down = lift
    rat = lring.rationalized()
    if rat is None:
        raise DoesNotConverge("cover of %s has no fraction field" % r)
    rring, to_rat, _ = rat
    wq = w.map_coeffs(lambda c: to_rat(up(c)), rring)
    out = TruncSeries.zero(r, u.variables, u.order)
    power = TruncSeries.one(rring, u.variables, u.order)
    for n in range(1, bound + 1):
        power = power * wq
        term = power.scale(_rat_scalar(rring, Fraction((-1) ** (n - 1), n)))
        out = out + clear_denominators(term, r)
    return out


def _log_term_bound(ring) -> int | None:
    """Terms needed for log series stabilization at the ring's precision.

    Decay model: the n-th term (u-1)^n / n gains at least n/(p-1) in the
    (p, q-1, zeta-1)-adic filtration and loses v_p(n); the bound makes the
    net gain exceed the stored precision for every later term.
    """
    p, n_p, extra = _padic_profile(ring)
    if p is None:
        return None
    target = n_p + extra
    n = 1
    while True:
        if all(Fraction(k, p - 1) - math.floor(math.log(k, p)) >= target
               for k in range(n, 4 * n + 8)):
            return 4 * n + 8
        n += 1


def _padic_profile(ring):
    """(p, n_p, extra_steps) if the ring is a mod-p^n quotient, else Nones."""
    if isinstance(ring, IntModRing):
        if ring.p is None:
            return None, None, None
        n_p = round(math.log(ring.m, ring.p))
        return ring.p, n_p, 0
    if isinstance(ring, PolyQuotRing):
        p, n_p, extra = _padic_profile(ring.scalar)
        if p is None:
            return None, None, None
        return p, n_p, extra + (ring.deg or 0)
    return None, None, None
