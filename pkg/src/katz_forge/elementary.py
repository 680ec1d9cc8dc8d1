"""Elementary modules El(rho, phi, R).

El(rho, phi, R) is the pushforward along the ramified cover rho(u) = c*u^p
of the exponential twist E^phi tensored with a regular connection R.  The
tail phi is kept mod regular terms, as a map {pole order j >= 1 -> Scalar}.

Canonical form: ramification coefficient 1 (normalized by substituting a
canonical p-th root) and the lexicographically minimal representative of
the zeta_p-orbit of the tail.  Isomorphism testing, duals, determinants,
Hom decomposition (Sabbah), reduction to minimal form and Kummer pullback
all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .scalars import (Scalar, Eigenvalue, ZERO, ONE,
                      render_scalar, parse_scalar)
from .jordan import JordanData, render_jordan, parse_jordan


def _tail_pack(tail: dict) -> tuple:
    return tuple(sorted((int(j), a) for j, a in tail.items() if not a.is_zero()))


def _pos_key(s: Scalar):
    """Scalar ordering that prefers positive rational parts, so canonical
    orbit representatives read naturally (a1 before -a1)."""
    def poly_key(t):
        return tuple((m, c.order, tuple((x < 0, abs(x)) for x in c.coords))
                     for m, c in t)
    return (s.rad, poly_key(s.den), poly_key(s.num))


@dataclass(frozen=True)
class ElementaryModule:
    p: int
    coeff: Scalar
    tail: tuple  # ((pole order j, Scalar coefficient), ...), j >= 1
    r: JordanData

    @staticmethod
    def make(p: int, coeff: Scalar, tail, r: JordanData) -> "ElementaryModule":
        if isinstance(tail, dict):
            tail = _tail_pack(tail)
        if coeff.is_zero():
            raise ValueError("ramification coefficient must be nonzero")
        return ElementaryModule(int(p), coeff, tail, r)

    def taild(self) -> dict:
        return dict(self.tail)

    def q(self) -> int:
        return max((j for j, _ in self.tail), default=0)

    def rank(self) -> int:
        return self.p * self.r.rank()

    def slope(self) -> Fraction:
        return Fraction(self.q(), self.p)

    def irregularity(self) -> int:
        return self.r.rank() * self.q()

    def is_regular(self) -> bool:
        return not self.tail

    # -- canonical form ------------------------------------------------------
    def normalize(self) -> "ElementaryModule":
        """Coefficient-1 form, reduced to minimal inner ramification, with
        the canonical zeta_p-orbit representative of the tail."""
        e = self._coeff_one()._reduce()
        return e._orbit_min()

    def _coeff_one(self) -> "ElementaryModule":
        if self.coeff == ONE:
            return self
        g = self.coeff.root(self.p)
        tail = {j: a * (g ** j) for j, a in self.tail}
        return ElementaryModule.make(self.p, ONE, tail, self.r)

    def _reduce(self) -> "ElementaryModule":
        e = self
        while True:
            if not e.tail:
                if e.p == 1:
                    return e
                return ElementaryModule.make(1, ONE, {}, e.r.push(e.p))
            m = e.p
            for j, _ in e.tail:
                m = gcd(m, j)
            if m == 1:
                return e
            tail = {j // m: a for j, a in e.tail}
            e = ElementaryModule.make(e.p // m, ONE, tail, e.r.push(m))

    def _orbit_min(self) -> "ElementaryModule":
        if self.p == 1 or not self.tail:
            return self
        best = None
        for k in range(self.p):
            tail = {j: a * Scalar.zeta(self.p, (-j * k) % self.p) for j, a in self.tail}
            key = tuple((-j, _pos_key(a)) for j, a in sorted(tail.items(), reverse=True))
            if best is None or key < best[0]:
                best = (key, tail)
        return ElementaryModule.make(self.p, ONE, best[1], self.r)

    # -- basic functors --------------------------------------------------------
    def dual(self) -> "ElementaryModule":
        return ElementaryModule.make(self.p, self.coeff,
                                     {j: -a for j, a in self.tail},
                                     self.r.dual()).normalize()

    def det(self) -> "DetData":
        e = self._coeff_one()
        rk = e.r.rank()
        tail = {}
        for j, a in e.tail:
            if j % e.p == 0:
                tail[j // e.p] = tail.get(j // e.p, ZERO) + a * Scalar.rational(e.p * rk)
        eig = e.r.det() * Eigenvalue.of_torsion(Fraction((e.p - 1) * rk, 2))
        return DetData(_tail_pack(tail), eig)

    def iso_eq(self, other: "ElementaryModule") -> bool:
        return self.normalize() == other.normalize()

    def twist_regular(self, s: JordanData) -> "ElementaryModule":
        """Tensor with a regular connection (pulled through the cover)."""
        return ElementaryModule.make(self.p, self.coeff, self.taild(),
                                     self.r.tensor(s.pull(self.p)))

    def scale_eigenvalues(self, eig: Eigenvalue) -> "ElementaryModule":
        """Tensor with a rank-one regular of downstairs eigenvalue `eig`."""
        return ElementaryModule.make(self.p, self.coeff, self.taild(),
                                     self.r.scale(eig.pow(self.p)))

    def pullback(self, k: int) -> list:
        """Kummer pullback along u -> u^k, as a list of normalized
        elementary modules."""
        e = self.normalize()
        d = gcd(k, e.p)
        pp, kk = e.p // d, k // d
        out = []
        for j in range(d):
            tail = {}
            for i, a in e.tail:
                tail[i * kk] = a * Scalar.zeta(e.p, (-i * j) % e.p)
            out.append(ElementaryModule.make(pp, ONE, tail, e.r.pull(kk)).normalize())
        return out

    def sort_key(self):
        return (self.p, tuple((j, a.sort_key()) for j, a in self.tail),
                self.r.sort_key(), self.coeff.sort_key())

    def __repr__(self):
        return f"ElementaryModule({render_elementary(self)})"


@dataclass(frozen=True)
class DetData:
    """Rank-one determinant data: exponential tail (downstairs coordinate)
    plus regular eigenvalue."""

    tail: tuple
    eig: Eigenvalue

    def is_trivial(self) -> bool:
        return not self.tail and self.eig.is_one()

    def __mul__(self, other: "DetData") -> "DetData":
        tail = dict(self.tail)
        for j, a in other.tail:
            tail[j] = tail.get(j, ZERO) + a
        return DetData(_tail_pack(tail), self.eig * other.eig)


def El(p: int, tail, r, coeff: Scalar = ONE) -> ElementaryModule:
    """Shorthand constructor: El(p, alpha, M) is the elementary module with
    ramification u^p, tail alpha/u and regular part of monodromy M."""
    if isinstance(tail, Scalar):
        tail = {1: tail}
    elif isinstance(tail, str):
        tail = {1: parse_scalar(tail)}
    if isinstance(r, str):
        r = parse_jordan(r)
    elif isinstance(r, Eigenvalue):
        r = JordanData.single(r, 1)
    return ElementaryModule.make(p, coeff, tail, r)


# -- Hom / tensor decomposition (Sabbah) -------------------------------------

def el_hom(e1: ElementaryModule, e2: ElementaryModule) -> list:
    """Hom(E1, E2) decomposed into elementary modules (normalized); regular
    summands come out with empty tail."""
    a = e1.normalize()
    b = e2.normalize()
    d = gcd(a.p, b.p)
    p1p, p2p = a.p // d, b.p // d
    pw = a.p * b.p // d
    rr = a.r.dual().pull(p2p).tensor(b.r.pull(p1p))
    out = []
    for k in range(d):
        tail: dict = {}
        for j, c in b.tail:
            jj = j * p1p
            tail[jj] = tail.get(jj, ZERO) + c
        for j, c in a.tail:
            jj = j * p2p
            # phi1((zeta w)^{p2'}): coefficient picks up zeta^(-j p2') with
            # zeta = e^(2 pi i k d / (p1 p2)), so the twist is e^(-2 pi i k j / p1)
            tw = Scalar.zeta(a.p, (-k * j) % a.p)
            tail[jj] = tail.get(jj, ZERO) - c * tw
        tail = {j: c for j, c in tail.items() if not c.is_zero()}
        out.append(ElementaryModule.make(pw, ONE, tail, rr).normalize())
    return out


def el_tensor(e1: ElementaryModule, e2: ElementaryModule) -> list:
    return el_hom(e1.dual(), e2)


# operation wrappers --------------------------------------------------------

def el_normalize(e: ElementaryModule) -> ElementaryModule:
    return e.normalize()


def el_dual(e: ElementaryModule) -> ElementaryModule:
    return e.dual()


def el_det(e: ElementaryModule) -> DetData:
    return e.det()


def el_iso_eq(e1: ElementaryModule, e2: ElementaryModule) -> bool:
    return e1.iso_eq(e2)


def el_reduce(e: ElementaryModule) -> ElementaryModule:
    return e.normalize()


def el_pullback(e: ElementaryModule, k: int) -> list:
    return e.pullback(k)


# rendering / parsing ----------------------------------------------------------

def render_tail(tail) -> str:
    if not tail:
        return "0"
    parts = []
    for j, a in sorted(tail, key=lambda t: -t[0]):
        s = render_scalar(a)
        if "+" in s or ("-" in s[1:].replace("^-", "^x")):
            s = f"({s})"
        parts.append(f"{s}/u" + (f"^{j}" if j > 1 else ""))
    return " + ".join(parts)


def render_elementary(e: ElementaryModule) -> str:
    c = "" if e.coeff == ONE else f"{render_scalar(e.coeff)}*"
    if not e.tail:
        return f"El({c}u^{e.p}, 0, {render_jordan(e.r)})"
    if len(e.tail) == 1 and e.tail[0][0] == 1 and e.coeff == ONE:
        return f"El({e.p}, {render_scalar(e.tail[0][1])}, {render_jordan(e.r)})"
    return f"El({c}u^{e.p}, {render_tail(e.tail)}, {render_jordan(e.r)})"


def parse_elementary(text: str) -> ElementaryModule:
    text = text.strip()
    assert text.startswith("El(") and text.endswith(")")
    body = text[3:-1]
    depth = 0
    args = []
    cur = ""
    for ch in body:
        if ch == "," and depth == 0:
            args.append(cur)
            cur = ""
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        cur += ch
    args.append(cur)
    assert len(args) == 3, f"El(...) needs 3 arguments: {text!r}"
    ram, tail_s, r_s = (x.strip() for x in args)
    coeff = ONE
    if "u" in ram:
        head, _, exp = ram.partition("u")
        head = head.rstrip("*").strip()
        coeff = parse_scalar(head) if head else ONE
        p = int(exp.lstrip("^") or 1)
    else:
        p = int(ram)
    tail: dict = {}
    if tail_s not in ("0", ""):
        for term in _split_top(tail_s, "+"):
            term = term.strip()
            if "/u" in term:
                num, _, upow = term.rpartition("/u")
                j = int(upow.lstrip("^") or 1)
            else:
                num, j = term, 1
            num = num.strip()
            if num.startswith("(") and num.endswith(")"):
                num = num[1:-1]
            tail[j] = tail.get(j, ZERO) + parse_scalar(num)
    return ElementaryModule.make(p, coeff, tail, parse_jordan(r_s))


def _split_top(text: str, sep: str):
    depth = 0
    cur = ""
    out = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
            continue
        cur += ch
    out.append(cur)
    return out
