"""Exact scalar arithmetic.

Two scalar sorts are used throughout the engine:

* ``Scalar`` -- elements of the coefficient field: multivariate rational
  functions in formal parameters (a1, a2, ...) over the cyclotomic
  rationals, extended by radical monomials (rational powers of single
  symbols and of positive integers).  These house pole coefficients and
  singularity locations such as ``a1^2/4`` or ``6*(a1/6)^(6/5)``.

* ``Eigenvalue`` -- elements of the multiplicative group
  (roots of unity) x (free abelian group on formal symbols with rational
  exponents).  These house monodromy eigenvalues such as ``-l^-2``.

Everything is immutable and canonically normalized, so equality is
structural and decidable.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class IrrationalRootError(ValueError):
    """Raised when a requested p-th root does not exist in the supported
    radical extension of the coefficient field."""


class IrrationalSumError(ValueError):
    """Raised when adding scalars with incompatible radical parts."""


# ---------------------------------------------------------------------------
# cyclotomic fields Q(zeta_N), power basis mod Phi_N, minimal-order canonical
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Dense coefficient tuple (low degree first) of Phi_n over Q."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    # x^n - 1 divided by prod of Phi_d for proper divisors d
    num = [Fraction(0)] * (n + 1)
    num[0], num[n] = Fraction(-1), Fraction(1)
    for d in range(1, n):
        if n % d == 0:
            num = _dense_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _dense_divexact(a: list, b: list) -> list:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert all(x == 0 for x in a[: len(b) - 1])
    return out


@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _zeta_power(n: int, k: int) -> tuple:
    """Coordinates of zeta_n^k in the power basis of Q(zeta_n)."""
    k %= n
    phi = _euler_phi(n)
    dense = [Fraction(0)] * (k + 1)
    dense[k] = Fraction(1)
    dense = _reduce_mod_phi(dense, n)
    dense += [Fraction(0)] * (phi - len(dense))
    return tuple(dense[:phi])


def _reduce_mod_phi(dense: list, n: int) -> list:
    phi = list(cyclotomic_poly(n))
    d = len(phi) - 1
    dense = dense[:]
    for i in range(len(dense) - 1, d - 1, -1):
        c = dense[i]
        if c:
            dense[i] = Fraction(0)
            for j in range(d):
                dense[i - d + j] -= c * phi[j]
    while len(dense) > d:
        dense.pop()
    while len(dense) < d:
        dense.append(Fraction(0))
    return dense


def _solve_linear(rows, rhs):
    """Solve A x = b over Q; A given as list of rows. Returns None if
    inconsistent, else one solution (free vars set to 0)."""
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    nrows, ncols = len(m), len(m[0]) - 1
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = m[i][-1]
    return x


@lru_cache(maxsize=None)
def _subfield_basis(n: int, m: int) -> tuple:
    """Columns: coordinates in Q(zeta_n) of the power basis of Q(zeta_m)."""
    step = n // m
    return tuple(_zeta_power(n, step * k) for k in range(_euler_phi(m)))


class Cyclotomic:
    """Element of a cyclotomic field in canonical form.

    Stored as (order n, coordinates in the power basis of Q(zeta_n)), with
    n minimal: an element lying in Q(zeta_m) for m | n is re-expressed at
    order m.  Zero has order 1.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords):
        self.order = order
        self.coords = tuple(Fraction(c) for c in coords)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        return Cyclotomic(1, (Fraction(q),))

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        return Cyclotomic._make(n, list(_zeta_power(n, k)))

    @staticmethod
    def _make(n: int, dense) -> "Cyclotomic":
        dense = _reduce_mod_phi(list(dense), n)
        return Cyclotomic._canonical(n, dense)

    @staticmethod
    def _canonical(n: int, coords) -> "Cyclotomic":
        if all(c == 0 for c in coords):
            return Cyclotomic(1, (Fraction(0),))
        for m in sorted(d for d in range(1, n + 1) if n % d == 0):
            if m == n:
                break
            cols = _subfield_basis(n, m)
            rows = [[col[i] for col in cols] for i in range(_euler_phi(n))]
            sol = _solve_linear(rows, list(coords))
            if sol is not None:
                return Cyclotomic(m, sol)
        return Cyclotomic(n, coords)

    def _lift(self, n: int) -> list:
        """Dense coords of self inside Q(zeta_n) (self.order | n)."""
        step = n // self.order
        dense = [Fraction(0)] * _euler_phi(n)
        for k, c in enumerate(self.coords):
            if c:
                zp = _zeta_power(n, step * k)
                for i, v in enumerate(zp):
                    dense[i] += c * v
        return dense

    # -- arithmetic --------------------------------------------------------
    def _binop(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(other)
        n = _lcm(self.order, other.order)
        return n, self._lift(n), other._lift(n)

    def __add__(self, other):
        n, a, b = self._binop(other)
        return Cyclotomic._canonical(n, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        n, a, b = self._binop(other)
        return Cyclotomic._canonical(n, [x - y for x, y in zip(a, b)])

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coords))

    def __mul__(self, other):
        n, a, b = self._binop(other)
        prod = [Fraction(0)] * (2 * len(a))
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._make(n, prod)

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic inverse of zero")
        n = self.order
        phi = _euler_phi(n)
        a = self._lift(n)
        # columns of multiplication-by-a matrix
        cols = []
        for k in range(phi):
            col = [Fraction(0)] * (phi + k)
            for i, x in enumerate(a):
                col[i + k] += x
            cols.append(_reduce_mod_phi(col, n))
        rows = [[cols[c][r] for c in range(phi)] for r in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        sol = _solve_linear(rows, rhs)
        assert sol is not None
        return Cyclotomic._canonical(n, sol)

    def __truediv__(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(other)
        return self * other.inverse()

    def galois(self, j: int) -> "Cyclotomic":
        """Apply zeta -> zeta^j (j coprime to the order)."""
        n = self.order
        dense = [Fraction(0)] * _euler_phi(n)
        for k, c in enumerate(self.coords):
            if c:
                zp = _zeta_power(n, j * k)
                for i, v in enumerate(zp):
                    dense[i] += c * v
        return Cyclotomic._canonical(n, dense)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.order == 1 and self.coords[0] == 0

    def is_rational(self) -> bool:
        return self.order == 1

    def rational_value(self) -> Fraction:
        assert self.order == 1
        return self.coords[0]

    def as_unit_times_rational(self):
        """Return (q, torsion) with self = q * e^(2 pi i torsion), q rational
        positive... q may be any nonzero rational; torsion in [0,1).
        None if self is not rational times a root of unity."""
        if self.is_zero():
            return None
        n = self.order if self.order % 2 == 0 else 2 * self.order
        for k in range(n):
            z = Cyclotomic.zeta(n, k)
            q = self * z.inverse()
            if q.is_rational():
                qv = q.rational_value()
                t = Fraction(k, n)
                if qv < 0:
                    qv, t = -qv, (t + Fraction(1, 2)) % 1
                return qv, t % 1
        return None

    def sort_key(self):
        return (self.order, self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        return isinstance(other, Cyclotomic) and self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash((self.order, self.coords))

    def __repr__(self):
        return f"Cyclotomic({render_cyclotomic(self)})"


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


ONE_C = Cyclotomic.from_rational(1)
ZERO_C = Cyclotomic.from_rational(0)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Cyclotomic
# ---------------------------------------------------------------------------
# A monomial is a tuple of (symbol, positive int exponent) pairs, sorted by
# symbol; a polynomial is a dict monomial -> nonzero Cyclotomic.

def mono_mul(a, b):
    d = dict(a)
    for s, e in b:
        d[s] = d.get(s, 0) + e
    return tuple(sorted((s, e) for s, e in d.items() if e))


def mono_key(m):
    """Graded-lex key; the *smallest* key is the leading monomial."""
    return (-sum(e for _, e in m), tuple((s, -e) for s, e in m))


def poly_const(c: Cyclotomic) -> dict:
    return {} if c.is_zero() else {(): c}


def poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, ZERO_C) + c
        if s.is_zero():
            out.pop(m, None)
        else:
            out[m] = s
    return out


def poly_neg(a: dict) -> dict:
    return {m: -c for m, c in a.items()}


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            s = out.get(m, ZERO_C) + ca * cb
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
    return out


def poly_scale(a: dict, c: Cyclotomic) -> dict:
    if c.is_zero():
        return {}
    return {m: cc * c for m, cc in a.items()}


def poly_leading(a: dict):
    m = min(a, key=mono_key)
    return m, a[m]


def poly_is_monomial(a: dict) -> bool:
    return len(a) == 1


def poly_vars(a: dict):
    vs = set()
    for m in a:
        for s, _ in m:
            vs.add(s)
    return vs


def _poly_to_univ(a: dict, var: str) -> dict:
    """Split off `var`: returns dict degree -> poly-in-remaining-vars."""
    out: dict = {}
    for m, c in a.items():
        d = 0
        rest = []
        for s, e in m:
            if s == var:
                d = e
            else:
                rest.append((s, e))
        lvl = out.setdefault(d, {})
        rest = tuple(rest)
        s2 = lvl.get(rest, ZERO_C) + c
        if s2.is_zero():
            lvl.pop(rest, None)
        else:
            lvl[rest] = s2
    return {d: p for d, p in out.items() if p}


def _univ_to_poly(u: dict, var: str) -> dict:
    out: dict = {}
    for d, p in u.items():
        for m, c in p.items():
            mm = mono_mul(m, ((var, d),) if d else ())
            out[mm] = c
    return out


def poly_divexact(a: dict, b: dict) -> dict:
    """Exact division; raises if not divisible."""
    if not a:
        return {}
    if not b:
        raise ZeroDivisionError
    rem = dict(a)
    out: dict = {}
    mb, cb = poly_leading(b)
    cbi = cb.inverse()
    while rem:
        ma, ca = poly_leading(rem)
        q = _mono_div(ma, mb)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        cq = ca * cbi
        out[q] = cq
        rem = poly_add(rem, poly_neg(poly_mul({q: cq}, b)))
    return out


def _mono_div(a, b):
    d = dict(a)
    for s, e in b:
        if d.get(s, 0) < e:
            return None
        d[s] -= e
    return tuple(sorted((s, e) for s, e in d.items() if e))


def poly_gcd(a: dict, b: dict) -> dict:
    """GCD over the cyclotomic coefficient field, normalized monic in
    graded-lex leading term."""
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    if poly_is_monomial(a) or poly_is_monomial(b):
        ga = _mono_gcd_all(a)
        gb = _mono_gcd_all(b)
        g = {}
        da, db = dict(ga), dict(gb)
        for s in set(da) & set(db):
            g[s] = min(da[s], db[s])
        return {tuple(sorted(g.items())): ONE_C}
    vs = sorted(poly_vars(a) | poly_vars(b))
    if not vs:
        return {(): ONE_C}
    return _monic(_gcd_rec(a, b, vs))


def _mono_gcd_all(a: dict):
    its = iter(a)
    g = dict(next(its))
    for m in its:
        d = dict(m)
        g = {s: min(e, d[s]) for s, e in g.items() if s in d}
    return tuple(sorted(g.items()))


def _monic(a: dict) -> dict:
    if not a:
        return a
    _, c = poly_leading(a)
    return poly_scale(a, c.inverse())


def _gcd_rec(a: dict, b: dict, vs) -> dict:
    if not a:
        return b
    if not b:
        return a
    if not vs:
        return {(): ONE_C}
    if (() in a and len(a) == 1) or (() in b and len(b) == 1):
        return {(): ONE_C}
    var = vs[0]
    ua, ub = _poly_to_univ(a, var), _poly_to_univ(b, var)
    if len(ua) == 1 and 0 in ua and len(ub) == 1 and 0 in ub:
        return _gcd_rec(a, b, vs[1:])
    ca = _content(ua, vs[1:])
    cb = _content(ub, vs[1:])
    pa = {d: poly_divexact(p, ca) for d, p in ua.items()}
    pb = {d: poly_divexact(p, cb) for d, p in ub.items()}
    g = _univ_gcd(pa, pb, vs[1:])
    cg = _gcd_rec(ca, cb, vs[1:])
    return poly_mul(_univ_to_poly(g, var), cg)


def _content(u: dict, vs) -> dict:
    if not vs:
        return {(): ONE_C}
    polys = list(u.values())
    g = polys[0]
    for p in polys[1:]:
        g = _gcd_rec(g, p, list(vs))
        if g == {(): ONE_C}:
            break
    return _monic(g)


def _univ_gcd(a: dict, b: dict, vs) -> dict:
    """Primitive PRS on univariate polys with poly coefficients."""
    def deg(u):
        return max(u) if u else -1

    def prim(u):
        if not u:
            return u
        c = _content(u, vs) if vs else {(): ONE_C}
        if vs:
            u = {d: poly_divexact(p, c) for d, p in u.items()}
        lc = u[deg(u)]
        if len(lc) == 1 and () in lc:
            u = {d: poly_scale(p, lc[()].inverse()) for d, p in u.items()}
        return u

    a, b = prim(a), prim(b)
    if deg(a) < deg(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, prim(r)
    return a


def _pseudo_rem(a: dict, b: dict) -> dict:
    def deg(u):
        return max(u) if u else -1

    da, db = deg(a), deg(b)
    lb = b[db]
    r = {d: dict(p) for d, p in a.items()}
    while r and deg(r) >= db:
        dr = deg(r)
        lr = r[dr]
        # r = lb*r - lr*x^(dr-db)*b
        new: dict = {}
        for d, p in r.items():
            new[d] = poly_mul(p, lb)
        for d, p in b.items():
            dd = d + dr - db
            term = poly_mul(p, lr)
            new[dd] = poly_add(new.get(dd, {}), poly_neg(term))
        r = {d: p for d, p in new.items() if p}
    return r


def poly_root(a: dict, p: int) -> dict:
    """p-th root of a polynomial with leading coefficient a perfect p-th
    power; raises IrrationalRootError when impossible."""
    if not a:
        return {}
    if p == 1:
        return dict(a)
    ml, cl = poly_leading(a)
    if any(e % p for _, e in ml):
        raise IrrationalRootError("leading monomial not a p-th power")
    croot = cyclotomic_root(cl, p)
    g = {tuple((s, e // p) for s, e in ml): croot}
    # Newton-style term matching: p * lead(g)^(p-1) * t = leading term of a - g^p
    lg_m, lg_c = poly_leading(g)
    denom_m = tuple((s, e * (p - 1)) for s, e in lg_m)
    denom_c = _cyc_pow(lg_c, p - 1) * Fraction(p)
    denom_ci = denom_c.inverse()
    for _ in range(len(a) * p * 4 + 8):
        diff = poly_add(a, poly_neg(_poly_pow_full(g, p)))
        if not diff:
            return g
        m, c = poly_leading(diff)
        q = _mono_div(m, denom_m)
        if q is None:
            raise IrrationalRootError("polynomial is not a perfect p-th power")
        g = poly_add(g, {q: c * denom_ci})
    raise IrrationalRootError("polynomial root iteration did not converge")


def _cyc_pow(c: Cyclotomic, n: int) -> Cyclotomic:
    out = ONE_C
    for _ in range(n):
        out = out * c
    return out


def _poly_pow_full(a: dict, n: int) -> dict:
    out = {(): ONE_C}
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def cyclotomic_root(c: Cyclotomic, p: int) -> Cyclotomic:
    """Canonical p-th root of (rational) x (root of unity), staying inside
    the cyclotomic numbers when the rational part is a perfect p-th power;
    otherwise raises (radical handling happens at the Scalar level)."""
    ur = c.as_unit_times_rational()
    if ur is None:
        raise IrrationalRootError("cyclotomic coefficient is not unit times rational")
    q, t = ur
    num, den = _perfect_root(q.numerator, p), _perfect_root(q.denominator, p)
    if num is None or den is None:
        raise IrrationalRootError("rational part is not a perfect p-th power")
    # minimal-argument root of the unit part
    tt = t / p
    zz = _torsion_to_cyclotomic(tt)
    return zz * Fraction(num, den)


def _perfect_root(n: int, p: int):
    if n <= 0:
        return None
    r = round(n ** (1.0 / p))
    for cand in (r - 1, r, r + 1):
        if cand > 0 and cand ** p == n:
            return cand
    return None


def _torsion_to_cyclotomic(t: Fraction) -> Cyclotomic:
    t %= 1
    return Cyclotomic.zeta(t.denominator, t.numerator)


# ---------------------------------------------------------------------------
# Scalar: rational function x radical monomial
# ---------------------------------------------------------------------------

def _rad_canon(rad):
    out = []
    for base, e in rad:
        e %= 1
        if e:
            out.append((base, e))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Scalar:
    """num/den * prod(base^frac) with num, den canonical polynomials.

    The radical part carries the fractional exponents; integer parts are
    folded into num/den at construction time.  Addition is only defined
    between scalars with identical radical parts.
    """

    num: tuple
    den: tuple
    rad: tuple = ()

    # internal: num/den stored as tuples of (mono, Cyclotomic) for hashing
    @staticmethod
    def _pack(d: dict):
        return tuple(sorted(d.items(), key=lambda t: mono_key(t[0])))

    @staticmethod
    def _unpack(t) -> dict:
        return dict(t)

    @staticmethod
    def make(num: dict, den: dict, rad=()) -> "Scalar":
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            return Scalar(Scalar._pack({}), Scalar._pack({(): ONE_C}), ())
        g = poly_gcd(num, den)
        if not (len(g) == 1 and () in g and g[()] == ONE_C):
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        # also cancel plain monomial content
        gm = poly_gcd({_mono_gcd_all(num): ONE_C}, {_mono_gcd_all(den): ONE_C})
        gmono = next(iter(gm))
        if gmono:
            num = poly_divexact(num, {gmono: ONE_C})
            den = poly_divexact(den, {gmono: ONE_C})
        _, lc = poly_leading(den)
        if not (lc == ONE_C):
            inv = lc.inverse()
            num = poly_scale(num, inv)
            den = poly_scale(den, inv)
        return Scalar(Scalar._pack(num), Scalar._pack(den), _rad_canon(rad))

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_cyclotomic(c: Cyclotomic) -> "Scalar":
        return Scalar.make(poly_const(c), poly_const(ONE_C))

    @staticmethod
    def rational(q) -> "Scalar":
        return Scalar.from_cyclotomic(Cyclotomic.from_rational(Fraction(q)))

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Scalar":
        return Scalar.from_cyclotomic(Cyclotomic.zeta(n, k))

    @staticmethod
    def sym(name: str) -> "Scalar":
        return Scalar.make({((name, 1),): ONE_C}, poly_const(ONE_C))

    # -- views -------------------------------------------------------------
    def numd(self) -> dict:
        return Scalar._unpack(self.num)

    def dend(self) -> dict:
        return Scalar._unpack(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self == ONE

    def is_rational(self):
        if self.rad or len(self.num) > 1 or len(self.den) > 1:
            return None
        nd, dd = self.numd(), self.dend()
        if not nd:
            return Fraction(0)
        (mn, cn), = nd.items()
        (md, cd), = dd.items()
        if mn or md or not cn.is_rational() or not cd.is_rational():
            return None
        return cn.rational_value() / cd.rational_value()

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Scalar") -> "Scalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.rad != other.rad:
            raise IrrationalSumError("adding scalars with different radical parts")
        a, b, c, d = self.numd(), self.dend(), other.numd(), other.dend()
        return Scalar.make(poly_add(poly_mul(a, d), poly_mul(c, b)), poly_mul(b, d), self.rad)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(Scalar._pack(poly_neg(self.numd())), self.den, self.rad)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        num = poly_mul(self.numd(), other.numd())
        den = poly_mul(self.dend(), other.dend())
        rad, carry_num, carry_den = _rad_merge(self.rad, other.rad)
        num = poly_mul(num, carry_num)
        den = poly_mul(den, carry_den)
        return Scalar.make(num, den, rad)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        inv_rad = tuple((b, -e) for b, e in other.rad)
        inv = Scalar.make(other.dend(), other.numd(), ())
        rad, cn, cd = _rad_merge(inv_rad, ())
        inv = Scalar.make(poly_mul(inv.numd(), cn), poly_mul(inv.dend(), cd), rad)
        return self * inv

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def root(self, p: int) -> "Scalar":
        """Canonical p-th root; raises IrrationalRootError when the value
        is not a perfect power in the supported radical extension."""
        if p < 1:
            raise ValueError("root index must be >= 1")
        if p == 1 or self.is_zero():
            return self
        num, den = self.numd(), self.dend()
        rad = [(b, e / p) for b, e in self.rad]
        npart, nrad = _poly_radical_root(num, p)
        dpart, drad = _poly_radical_root(den, p)
        rad += nrad
        rad += [(b, -e) for b, e in drad]
        rad2, cn, cd = _rad_merge(tuple(rad), ())
        out = Scalar.make(poly_mul(npart, cn), poly_mul(dpart, cd), rad2)
        check = out ** p
        if check != self:
            raise IrrationalRootError(f"{render_scalar(self)} has no canonical {p}-th root (got {render_scalar(check)})")
        return out

    def subs_symbol(self, name: str, value: "Scalar") -> "Scalar":
        """Substitute a formal parameter by a scalar (used by golden-table
        specializations)."""
        out = ZERO
        for m, c in self.numd().items():
            t = Scalar.from_cyclotomic(c)
            for s, e in m:
                t = t * ((value if s == name else Scalar.sym(s)) ** e)
            out = out + t
        outd = ZERO
        for m, c in self.dend().items():
            t = Scalar.from_cyclotomic(c)
            for s, e in m:
                t = t * ((value if s == name else Scalar.sym(s)) ** e)
            outd = outd + t
        res = out / outd
        for b, e in self.rad:
            kind, key = b
            if kind == "sym" and key == name:
                raise IrrationalRootError("cannot substitute under a radical")
            base = Scalar.sym(key) if kind == "sym" else Scalar.rational(key)
            res = res * _rad_scalar(b, e)
        return res

    def sort_key(self):
        def poly_key(t):
            return tuple((m, c.sort_key()) for m, c in t)
        return (self.rad, poly_key(self.den), poly_key(self.num))

    def __repr__(self):
        return f"Scalar({render_scalar(self)})"


def _rad_scalar(base, e) -> Scalar:
    return Scalar(Scalar._pack(poly_const(ONE_C)), Scalar._pack(poly_const(ONE_C)), _rad_canon(((base, e),)))


def _rad_merge(r1, r2):
    """Merge radical exponent lists; returns (canonical radical, carry-num
    poly, carry-den poly) where carries absorb integer exponent parts."""
    tot: dict = {}
    for b, e in list(r1) + list(r2):
        tot[b] = tot.get(b, Fraction(0)) + e
    rad = []
    cnum: dict = {(): ONE_C}
    cden: dict = {(): ONE_C}
    for b, e in sorted(tot.items()):
        fl = e.numerator // e.denominator  # floor
        frac = e - fl
        if frac:
            rad.append((b, frac))
        if fl:
            kind, key = b
            if kind == "sym":
                mono = ((key, abs(fl)),)
                if fl > 0:
                    cnum = poly_mul(cnum, {mono: ONE_C})
                else:
                    cden = poly_mul(cden, {mono: ONE_C})
            else:
                q = Fraction(key) ** fl
                cnum = poly_scale(cnum, Cyclotomic.from_rational(q))
    return tuple(rad), cnum, cden


def _poly_radical_root(a: dict, p: int):
    """p-th root of a polynomial allowing radical output: factors into
    cyclotomic-unit x rational x monomial x primitive-poly, roots each.
    Returns (poly part, radical exponent list)."""
    if not a:
        return {}, []
    gm = _mono_gcd_all(a)
    rest = poly_divexact(a, {gm: ONE_C}) if gm else dict(a)
    _, lc = poly_leading(rest)
    rest = poly_scale(rest, lc.inverse())
    rad = []
    out = {(): ONE_C}
    # monomial part
    mono_int = []
    for s, e in gm:
        q, r = divmod(e, p)
        if q:
            mono_int.append((s, q))
        if r:
            rad.append((("sym", s), Fraction(r, p)))
    if mono_int:
        out = poly_mul(out, {tuple(mono_int): ONE_C})
    # coefficient part: unit x rational
    ur = lc.as_unit_times_rational()
    if ur is None:
        raise IrrationalRootError("coefficient is not unit times rational")
    q, t = ur
    zz = _torsion_to_cyclotomic(t / p)
    out = poly_scale(out, zz)
    for prime, e in _factor(q.numerator).items():
        qq, r = divmod(e, p)
        if qq:
            out = poly_scale(out, Cyclotomic.from_rational(Fraction(prime) ** qq))
        if r:
            rad.append((("prime", prime), Fraction(r, p)))
    for prime, e in _factor(q.denominator).items():
        qq, r = divmod(e, p)
        if qq:
            out = poly_scale(out, Cyclotomic.from_rational(Fraction(1, prime) ** qq))
        if r:
            rad.append((("prime", prime), Fraction(-r, p)))
    # primitive polynomial part
    if not (len(rest) == 1 and () in rest):
        g = poly_root(rest, p)
        out = poly_mul(out, g)
    return out, rad


def _factor(n: int) -> dict:
    n = abs(n)
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


ZERO = Scalar.make({}, poly_const(ONE_C))
ONE = Scalar.make(poly_const(ONE_C), poly_const(ONE_C))


def Sym(name: str) -> Scalar:
    return Scalar.sym(name)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def scalar_root(a: Scalar, p: int) -> Scalar:
    return a.root(p)


# ---------------------------------------------------------------------------
# Eigenvalue: torsion x free abelian word
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Eigenvalue:
    """exp(2 pi i torsion) * prod(sym^exp) with rational torsion/exponents."""

    torsion: Fraction = Fraction(0)
    word: tuple = ()

    @staticmethod
    def make(torsion=Fraction(0), word=()) -> "Eigenvalue":
        w = {}
        for s, e in word:
            w[s] = w.get(s, Fraction(0)) + Fraction(e)
        return Eigenvalue(Fraction(torsion) % 1, tuple(sorted((s, e) for s, e in w.items() if e)))

    @staticmethod
    def one() -> "Eigenvalue":
        return Eigenvalue()

    @staticmethod
    def minus_one() -> "Eigenvalue":
        return Eigenvalue(Fraction(1, 2), ())

    @staticmethod
    def of_torsion(t) -> "Eigenvalue":
        return Eigenvalue(Fraction(t) % 1, ())

    @staticmethod
    def sym(name: str) -> "Eigenvalue":
        return Eigenvalue(Fraction(0), ((name, Fraction(1)),))

    def __mul__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue.make(self.torsion + other.torsion, self.word + other.word)

    def __truediv__(self, other: "Eigenvalue") -> "Eigenvalue":
        return self * other.inverse()

    def inverse(self) -> "Eigenvalue":
        return Eigenvalue.make(-self.torsion, tuple((s, -e) for s, e in self.word))

    def pow(self, r) -> "Eigenvalue":
        r = Fraction(r)
        return Eigenvalue.make(self.torsion * r, tuple((s, e * r) for s, e in self.word))

    def is_one(self) -> bool:
        return self.torsion == 0 and not self.word

    def to_cyclotomic(self) -> Cyclotomic:
        if self.word:
            raise ValueError("eigenvalue with formal symbols has no cyclotomic value")
        return _torsion_to_cyclotomic(self.torsion)

    def sort_key(self):
        return (self.word, self.torsion)

    def __repr__(self):
        return f"Eigenvalue({render_eigenvalue(self)})"


def eigenvalue_ops(a: Eigenvalue, b=None, op: str = "mul", r=None):
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a.pow(r)
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_cyclotomic(c: Cyclotomic) -> str:
    if c.is_zero():
        return "0"
    ur = c.as_unit_times_rational()
    if ur is not None:
        q, t = ur
        parts = []
        if t == Fraction(1, 2):
            q = -q
            t = Fraction(0)
        if q != 1 or t == 0:
            parts.append(render_fraction(q))
        if t:
            n, k = t.denominator, t.numerator
            parts.append(f"zeta({n})" + (f"^{k}" if k != 1 else ""))
        return "*".join(parts)
    terms = []
    n = c.order
    for k, co in enumerate(c.coords):
        if co == 0:
            continue
        if k == 0:
            terms.append(render_fraction(co))
        else:
            z = f"zeta({n})" + (f"^{k}" if k != 1 else "")
            if co == 1:
                terms.append(z)
            elif co == -1:
                terms.append(f"-{z}")
            else:
                terms.append(f"{render_fraction(co)}*{z}")
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return f"({out})" if len(terms) > 1 else out


def _render_mono(m) -> str:
    return "*".join(s + (f"^{e}" if e != 1 else "") for s, e in m)


def _render_poly(d: dict) -> str:
    if not d:
        return "0"
    items = sorted(d.items(), key=lambda t: mono_key(t[0]))
    parts = []
    for m, c in items:
        cs = render_cyclotomic(c)
        ms = _render_mono(m)
        if not ms:
            parts.append(cs)
        elif cs == "1":
            parts.append(ms)
        elif cs == "-1":
            parts.append(f"-{ms}")
        else:
            parts.append(f"{cs}*{ms}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def render_scalar(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    numd, dend = s.numd(), s.dend()
    num = _render_poly(numd)
    if len(numd) > 1:
        num = f"({num})"
    parts = [num]
    if dend != {(): ONE_C}:
        den = _render_poly(dend)
        if len(dend) > 1 or any(m for m in dend):
            den = f"({den})" if len(dend) > 1 else den
        parts[0] = f"{num}/{den}"
    for (kind, key), e in s.rad:
        base = key if kind == "sym" else str(key)
        parts.append(f"{base}^({render_fraction(e)})")
    return "*".join(parts)


def render_eigenvalue(e: Eigenvalue) -> str:
    parts = []
    if e.torsion == Fraction(1, 2):
        parts.append("-1")
    elif e.torsion:
        n, k = e.torsion.denominator, e.torsion.numerator
        parts.append(f"zeta({n})" + (f"^{k}" if k != 1 else ""))
    for s, ex in e.word:
        if ex == 1:
            parts.append(s)
        elif ex.denominator == 1:
            parts.append(f"{s}^{ex}")
        else:
            parts.append(f"{s}^({render_fraction(ex)})")
    if not parts:
        return "1"
    if parts[0] == "-1" and len(parts) > 1:
        return "-" + "*".join(parts[1:])
    return "*".join(parts)


# ---------------------------------------------------------------------------
# parsing (shared expression grammar)
# ---------------------------------------------------------------------------

class _Tok:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch=None):
        c = self.peek()
        if ch and c != ch:
            raise ValueError(f"expected {ch!r} at {self.pos} in {self.text!r}")
        self.pos += 1
        return c

    def ident(self):
        c = self.peek()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def number(self) -> int:
        start = self.pos
        self.peek()
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])


def parse_scalar(text: str) -> Scalar:
    tok = _Tok(text)
    v = _parse_expr(tok)
    if tok.peek():
        raise ValueError(f"trailing input in scalar {text!r}")
    return v


def _parse_expr(tok: _Tok) -> Scalar:
    v = _parse_term(tok)
    while tok.peek() and tok.peek() in "+-":
        op = tok.take()
        t = _parse_term(tok)
        v = v + t if op == "+" else v - t
    return v


def _parse_term(tok: _Tok) -> Scalar:
    v = _parse_factor(tok)
    while tok.peek() and tok.peek() in "*/":
        op = tok.take()
        f = _parse_factor(tok)
        v = v * f if op == "*" else v / f
    return v


def _parse_factor(tok: _Tok) -> Scalar:
    c = tok.peek()
    neg = False
    while c and c in "+-":
        tok.take()
        if c == "-":
            neg = not neg
        c = tok.peek()
    base = _parse_atom(tok)
    if tok.peek() == "^":
        tok.take()
        e = _parse_exponent(tok)
        if e.denominator == 1:
            base = base ** e.numerator
        else:
            base = (base ** e.numerator).root(e.denominator)
    return -base if neg else base


def _parse_exponent(tok: _Tok) -> Fraction:
    if tok.peek() == "(":
        tok.take("(")
        sign = 1
        if tok.peek() == "-":
            tok.take()
            sign = -1
        n = tok.number()
        d = 1
        if tok.peek() == "/":
            tok.take()
            d = tok.number()
        tok.take(")")
        return Fraction(sign * n, d)
    sign = 1
    if tok.peek() == "-":
        tok.take()
        sign = -1
    return Fraction(sign * tok.number())


def _parse_atom(tok: _Tok) -> Scalar:
    c = tok.peek()
    if c == "(":
        tok.take("(")
        v = _parse_expr(tok)
        tok.take(")")
        return v
    if c.isdigit():
        n = tok.number()
        return Scalar.rational(n)
    name = tok.ident()
    if not name:
        raise ValueError(f"parse error at {tok.pos} in {tok.text!r}")
    if name == "zeta":
        tok.take("(")
        n = tok.number()
        tok.take(")")
        k = 1
        if tok.peek() == "^":
            tok.take()
            k = int(_parse_exponent(tok))
        return Scalar.zeta(n, k)
    return Scalar.sym(name)


def parse_eigenvalue(text: str) -> Eigenvalue:
    tok = _Tok(text)
    out = Eigenvalue.one()
    neg = False
    while True:
        c = tok.peek()
        if c and c in "+-":
            tok.take()
            if c == "-":
                neg = not neg
            continue
        break
    while True:
        c = tok.peek()
        if c == "(":
            tok.take("(")
            inner = _parse_eig_factor(tok)
            tok.take(")")
        else:
            inner = _parse_eig_factor(tok)
        out = out * inner
        if tok.peek() == "*":
            tok.take()
            continue
        if tok.peek() == "/":
            tok.take()
            nxt = _parse_eig_factor(tok)
            out = out / nxt
            continue
        break
    if tok.peek():
        raise ValueError(f"trailing input in eigenvalue {text!r}")
    if neg:
        out = out * Eigenvalue.minus_one()
    return out


def _parse_eig_factor(tok: _Tok) -> Eigenvalue:
    c = tok.peek()
    if c.isdigit():
        n = tok.number()
        if n == 1:
            base = Eigenvalue.one()
        elif n == 0:
            raise ValueError("eigenvalue cannot be zero")
        else:
            raise ValueError("only 1 and roots of unity are numeric eigenvalues")
    else:
        name = tok.ident()
        if name == "zeta":
            tok.take("(")
            n = tok.number()
            tok.take(")")
            base = Eigenvalue.of_torsion(Fraction(1, n))
        elif name == "i":
            base = Eigenvalue.of_torsion(Fraction(1, 4))
        else:
            base = Eigenvalue.sym(name)
    if tok.peek() == "^":
        tok.take()
        e = _parse_exponent(tok)
        base = base.pow(e)
    return base
