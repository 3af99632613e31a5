"""Divided-power hulls of the multiplicative group and monoid, the dual
ind-group of integer points, distribution algebras, the evaluation pairing,
powers of the logarithm, and the mu_p and rescaled-group comparisons.

A PD element is an integer vector against gamma_n = (x-1)^n / n! (so
gamma_m gamma_n = C(m+n, n) gamma_{m+n}), optionally carrying an x^{-k}
unit prefactor.  Distributions are integer vectors against
e_n = (delta_1 - delta_0)^n / n! with delta_m delta_n = delta_{m+n}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intpoly import gen_binom
from .ringcore import (
    CyclotomicRing, IntRing, PolyQuotRing, PrismlabError, RatRing,
    TruncSeries, padic_log, q_element, series_log,
)


class NotPD(PrismlabError):
    pass


class ReductionFailure(PrismlabError):
    pass


@dataclass(frozen=True)
class PDElem:
    """x^{-unit_power} * sum coords[n] gamma_n with integer coordinates."""

    coords: tuple
    unit_power: int = 0

    def __post_init__(self):
        coords = tuple(self.coords)
        while coords and coords[-1] == 0:
            coords = coords[:-1]
        object.__setattr__(self, "coords", coords)

    @classmethod
    def gamma(cls, n: int) -> "PDElem":
        return cls((0,) * n + (1,))

    @classmethod
    def from_int(cls, n: int) -> "PDElem":
        return cls((n,))

    def coord(self, n: int) -> int:
        return self.coords[n] if n < len(self.coords) else 0

    def degree(self) -> int:
        return len(self.coords) - 1 if self.coords else -1

    def __add__(self, other):
        if self.unit_power != other.unit_power:
            raise NotPD("unit powers differ; normalize first")
        n = max(len(self.coords), len(other.coords))
        return PDElem(tuple(self.coord(i) + other.coord(i) for i in range(n)),
                      self.unit_power)

    def __neg__(self):
        return PDElem(tuple(-c for c in self.coords), self.unit_power)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for m, a in enumerate(self.coords):
            if not a:
                continue
            for n, b in enumerate(other.coords):
                if b:
                    k = m + n
                    out[k] = out.get(k, 0) + a * b * math.comb(k, n)
        size = max(out, default=-1) + 1
        return PDElem(tuple(out.get(i, 0) for i in range(size)),
                      self.unit_power + other.unit_power)

    def scale(self, n: int) -> "PDElem":
        return PDElem(tuple(n * c for c in self.coords), self.unit_power)

    def to_rational_series(self) -> tuple:
        """(x-1)-adic coefficients a_n / n! as Fractions."""
        return tuple(Fraction(c, math.factorial(n))
                     for n, c in enumerate(self.coords))

    def __repr__(self):
        head = "" if not self.unit_power else "x^%d * " % (-self.unit_power)
        if not self.coords:
            return head + "0"
        parts = []
        for n, c in enumerate(self.coords):
            if c:
                base = "1" if n == 0 else "g%d" % n
                parts.append(base if c == 1 and n else
                             str(c) if n == 0 else "%d*%s" % (c, base))
        return head + " + ".join(parts)


def pd_normalize(series, unit_power: int = 0) -> PDElem:
    """From (x-1)-adic rational coefficients to PD coordinates; membership
    requires n! a_n integral, and the error names the first failing index."""
    coords = []
    for n, a in enumerate(series):
        c = Fraction(a) * math.factorial(n)
        if c.denominator != 1:
            raise NotPD("coefficient of (x-1)^%d is %s; n! a_n is not integral"
                        % (n, Fraction(a)))
        coords.append(int(c))
    return PDElem(tuple(coords), unit_power)


# ---------------------------------------------------------------------------
# distributions


@dataclass(frozen=True)
class DistrElem:
    """Integer coordinates against e_n, truncated at a filtration order."""

    coords: tuple
    order: int

    def coord(self, n: int) -> int:
        return self.coords[n] if n < len(self.coords) else 0

    def __add__(self, other):
        order = min(self.order, other.order)
        return DistrElem(tuple(self.coord(i) + other.coord(i)
                               for i in range(order + 1)), order)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for m, a in enumerate(self.coords):
            if not a or m > order:
                continue
            for n, b in enumerate(other.coords):
                if b and m + n <= order:
                    out[m + n] += a * b * math.comb(m + n, n)
        return DistrElem(tuple(out), order)

    def __eq__(self, other):
        if not isinstance(other, DistrElem):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coord(i) == other.coord(i) for i in range(order + 1))

    def __repr__(self):
        return "Distr(%s; order %d)" % (list(self.coords), self.order)


def delta_to_e(m: int, order: int = 12) -> DistrElem:
    """delta_m = sum_n C(m,n) n! e_n, valid for every integer m (negative m
    is the truncated expansion of delta_1^{-1})."""
    return DistrElem(tuple(gen_binom(m, n) * math.factorial(n)
                           for n in range(order + 1)), order)


def distr_mul(a: DistrElem, b: DistrElem) -> DistrElem:
    return a * b


def pair_xu(m: int, f: PDElem) -> int:
    """Cartier pairing of the integer point m against a PD function:
    sum a_n C(m, n), from the expansion x^m = sum C(m,n) (x-1)^n."""
    if f.unit_power:
        raise NotPD("pairing needs a pure PD element (unit_power 0)")
    return sum(a * gen_binom(m, n) for n, a in enumerate(f.coords))


def pair_distr(d: DistrElem, f: PDElem) -> Fraction:
    """Bilinear extension: <e_n, gamma_n> = 1/n!; integer on distributions
    that come from integer points."""
    if f.unit_power:
        raise NotPD("pairing needs a pure PD element (unit_power 0)")
    acc = Fraction(0)
    for n, c in enumerate(d.coords):
        acc += Fraction(c * f.coord(n), math.factorial(n))
    return acc


def f_ab(a: int, b: int) -> tuple:
    """f_{a,b}(u) = prod_{i=a}^{b} (u - i) as integer coefficients."""
    R = PolyQuotRing(IntRing(), None, "u")
    acc = R.one
    for i in range(a, b + 1):
        acc = R.mul(acc, R.make_ints([-i, 1]))
    return acc


def pairing_series(N: int) -> list:
    """[f_{0,n}(u)] for n = 0..N."""
    return [f_ab(0, n) for n in range(N + 1)]


# ---------------------------------------------------------------------------
# the logarithm and Stirling certification


def log_pd(N: int) -> PDElem:
    """log x = sum (-1)^(n-1) (n-1)! gamma_n, to order N."""
    return PDElem(tuple(0 if n == 0 else
                        (-1) ** (n - 1) * math.factorial(n - 1)
                        for n in range(N + 1)))


def log_sharp_power(k: int, N: int) -> PDElem:
    """(log x)^k / k! with certified integral PD coordinates."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = log_pd(N)
    for _ in range(k - 1):
        acc = acc * log_pd(N)
    acc = PDElem(acc.coords[:N + 1])
    out = []
    for n, c in enumerate(acc.coords):
        q, r = divmod(c, math.factorial(k))
        if r:
            raise NotPD("(log x)^%d not divisible by %d! at gamma_%d"
                        % (k, k, n))
        out.append(q)
    return PDElem(tuple(out))


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind via the recurrence
    s(n+1, k) = s(n, k-1) - n s(n, k)."""
    if n == k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return stirling_first(n - 1, k - 1) - (n - 1) * stirling_first(n - 1, k)


# ---------------------------------------------------------------------------
# mu_p inside the PD hull


def mu_p_pd_check(p: int, trials: int, rng) -> dict:
    """In Z[x]/(x^p - 1): f in (x-1) implies f^p in p (x-1)."""
    R = PolyQuotRing(IntRing(), None, "x")
    modulus = tuple([-1] + [0] * (p - 1) + [1])
    Rq = PolyQuotRing(IntRing(), modulus, "x")
    xm1 = Rq.make_ints([-1, 1])
    failures = []
    for _ in range(trials):
        g = Rq.make_ints([rng.randrange(-9, 10) for _ in range(p)])
        f = Rq.mul(xm1, g)
        fp = Rq.pow(f, p)
        if any(c % p for c in fp):
            failures.append(Rq.fmt(f))
            continue
        quot = tuple(c // p for c in fp)
        if sum(quot) != 0:  # evaluation at x = 1 detects (x-1)-membership
            failures.append(Rq.fmt(f))
    _ = R
    return {"trials": trials, "failures": failures}


# ---------------------------------------------------------------------------
# comparison with the p-rescaled group


def rescaled_section(p: int) -> PDElem:
    """z = ((1+t)^p - 1)/p in the PD coordinates of t."""
    coeffs = [Fraction(0)] + [Fraction(math.comb(p, i), p) for i in range(1, p + 1)]
    return pd_normalize(coeffs)


def _gamma_op(w: PDElem, p: int) -> PDElem:
    """gamma(w) = w^p / p for w in the PD ideal."""
    acc = w
    for _ in range(p - 1):
        acc = acc * w
    out = []
    for c in acc.coords:
        q, r = divmod(c, p)
        if r:
            raise ReductionFailure("w^p not divisible by p")
        out.append(q)
    return PDElem(tuple(out))


def _gsharp_basis_elem(n: int, p: int, z_iterates: list) -> PDElem:
    """t^{d_0} prod_{i>=1} (gamma^{i-1}(z))^{d_i} for the base-p digits d_i
    of n; has t-degree exactly n."""
    digits = []
    m = n
    while m:
        digits.append(m % p)
        m //= p
    acc = PDElem.from_int(1)
    t = PDElem.gamma(1)
    for d0 in range(digits[0] if digits else 0):
        acc = acc * t
    for i, d in enumerate(digits[1:]):
        for _ in range(d):
            acc = acc * z_iterates[i]
    return acc


def gsharp_comparison(p: int, max_degree: int, trials: int, rng) -> dict:
    """(a) integer PD coordinates of z = ((1+t)^p - 1)/p; (b) triangular
    reduction expressing random PD elements as combinations of the basis
    t^{d_0} prod gamma^{i-1}(z)^{d_i} with p-integral coefficients."""
    z = rescaled_section(p)
    report = {"z_coords": list(z.coords), "failures": [], "trials": trials}
    depth = 1
    while p ** (depth + 1) <= max_degree:
        depth += 1
    z_iter = [z]
    for _ in range(depth):
        z_iter.append(_gamma_op(z_iter[-1], p))
    basis = {n: _gsharp_basis_elem(n, p, z_iter) for n in range(max_degree + 1)}
    for _ in range(trials):
        f = PDElem(tuple(rng.randrange(-9, 10) for _ in range(max_degree + 1)))
        try:
            coords = reduce_against_basis(f, basis, p)
        except ReductionFailure as err:
            report["failures"].append(str(err))
            continue
        back = [Fraction(0)] * (max_degree + 1)
        for n, c in coords.items():
            for i, v in enumerate(basis[n].coords):
                back[i] += c * v
        if any(back[i] != f.coord(i) for i in range(max_degree + 1)):
            report["failures"].append("roundtrip mismatch for %r" % (f,))
    return report


def reduce_against_basis(f: PDElem, basis: dict, p: int) -> dict:
    """Triangular reduction on the top degree; coefficients must be
    p-integral rationals (here the random integer inputs make them integers
    whenever the proposition holds)."""
    coords: dict = {}
    residual = [Fraction(c) for c in f.coords]
    while residual and residual[-1] == 0:
        residual.pop()
    while residual:
        n = len(residual) - 1
        lead_b = basis[n].coord(n)
        c = residual[n] / lead_b
        if c.denominator % p == 0:
            raise ReductionFailure(
                "coefficient %s at degree %d is not p-integral" % (c, n))
        coords[n] = c
        for i, v in enumerate(basis[n].coords):
            residual[i] -= c * v
        while residual and residual[-1] == 0:
            residual.pop()
        if len(residual) - 1 >= n and residual:
            raise ReductionFailure("degree did not drop at %d" % n)
    return coords


# ---------------------------------------------------------------------------
# the exact sequence: log, mu_p, and the exponential pairing


def exact_sequence_check(p: int, n_p: int, N: int) -> dict:
    """(a) log(x^u) = u log(x) as series in Q[u][[x-1]] to order N;
    (b) log vanishes on the mu_p classes mod p^n_p;
    (c) exp(uv) exhibits gamma_n(u) and v^n as dual bases."""
    out = {"log_xu": False, "log_mu_p": False, "exp_pairing": False}
    QU = PolyQuotRing(RatRing(), None, "u")
    u = QU.make([Fraction(0), Fraction(1)])
    # x^u = sum C(u,n) w^n with w = x - 1
    xu = TruncSeries(QU, ("w",), {
        (n,): _binom_u(QU, n) for n in range(N + 1)}, N)
    log_xu = series_log(xu)
    w = TruncSeries.var(QU, ("w",), N, "w")
    one = TruncSeries.one(QU, ("w",), N)
    log_x = series_log(one + w)
    out["log_xu"] = log_xu == log_x.scale(u)
    # u = 0 sanity
    out["log_at_zero"] = series_log(
        TruncSeries.one(QU, ("w",), N)).is_zero()
    # (b): log(zeta) = 0 mod p^n_p
    C = CyclotomicRing(p, n_p=n_p)
    zeta = q_element(C)
    out["log_mu_p"] = padic_log(
        TruncSeries.const(C, ("w",), 1, zeta)).is_zero()
    # (c): exp(uv) = sum gamma_n(u) v^n, identity matrix in those bases
    Q2 = RatRing()
    exp_uv = TruncSeries.zero(Q2, ("u", "v"), None)
    for n in range(N + 1):
        exp_uv = exp_uv + TruncSeries(
            Q2, ("u", "v"), {(n, n): Fraction(1, math.factorial(n))}, None)
    ok = True
    for (i, j), c in exp_uv.coeffs.items():
        expected = Fraction(1, math.factorial(i)) if i == j else Fraction(0)
        ok = ok and (c == expected)
    # matrix in the bases gamma_i(u) = u^i/i! and v^j: entry = c * i!
    matrix_ok = all(
        (exp_uv.coefficient((i, j)) * math.factorial(i) ==
         (1 if i == j else 0)) for i in range(N + 1) for j in range(N + 1))
    out["exp_pairing"] = ok and matrix_ok
    return out


def _binom_u(QU, n: int) -> tuple:
    acc = QU.one
    for i in range(n):
        acc = QU.mul(acc, QU.make([Fraction(-i), Fraction(1)]))
    return tuple(c / math.factorial(n) for c in acc)
