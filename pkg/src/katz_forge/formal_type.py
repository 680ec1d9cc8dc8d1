"""Formal types at a point: regular part plus elementary modules.

A formal type is stored in minimal form: every elementary member is
normalized (coefficient 1, minimal ramification, canonical tail orbit
representative), members in the same isomorphism class are merged by
joining their regular parts, and fully regular content lives in the
Jordan-data regular part.

This module computes every local invariant the classification consumes:
rank/slope/irregularity bookkeeping, End via pairwise Hom, solution-space
dimensions via centralizers, self-duality and determinant checks, formal
monodromy, exponential-torus dimension, exterior cubes, and the nearby /
vanishing-cycle local-data dictionaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Scalar, Eigenvalue, ONE, render_scalar, parse_scalar
from .jordan import JordanData, render_jordan, parse_jordan
from .elementary import (ElementaryModule, DetData, el_hom, el_tensor,
                         render_elementary, parse_elementary)


@dataclass(frozen=True)
class FormalType:
    regular: JordanData
    irregular: tuple  # normalized, canonically sorted ElementaryModules

    @staticmethod
    def make(regular: JordanData, irregular=()) -> "FormalType":
        reg = regular
        merged: dict = {}
        for e in irregular:
            e = e.normalize()
            if e.is_regular():
                reg = reg + e.r
                continue
            key = (e.p, e.tail)
            if key in merged:
                merged[key] = ElementaryModule.make(e.p, ONE, e.taild(), merged[key].r + e.r)
            else:
                merged[key] = e
        els = tuple(sorted(merged.values(), key=lambda e: e.sort_key()))
        return FormalType(reg, els)

    @staticmethod
    def regular_only(j: JordanData) -> "FormalType":
        return FormalType.make(j, ())

    def rank(self) -> int:
        return self.regular.rank() + sum(e.rank() for e in self.irregular)

    def irregularity(self) -> int:
        return sum(e.irregularity() for e in self.irregular)

    def slopes(self) -> dict:
        """slope -> dimension of that slope part (slope 0 omitted unless
        there is regular content)."""
        out: dict = {}
        if self.regular.rank():
            out[Fraction(0)] = self.regular.rank()
        for e in self.irregular:
            out[e.slope()] = out.get(e.slope(), 0) + e.rank()
        return out

    def summands(self) -> list:
        """All summands as elementary modules, the regular part as El(1,0,R)."""
        out = list(self.irregular)
        if self.regular.rank():
            out.append(ElementaryModule.make(1, ONE, {}, self.regular))
        return out

    def __add__(self, other: "FormalType") -> "FormalType":
        return FormalType.make(self.regular + other.regular,
                               self.irregular + other.irregular)

    # -- invariants ------------------------------------------------------------
    def end(self) -> "FormalType":
        parts = self.summands()
        reg = JordanData.zero()
        els = []
        for a in parts:
            for b in parts:
                for h in el_hom(a, b):
                    if h.is_regular():
                        reg = reg + h.r
                    else:
                        els.append(h)
        return FormalType.make(reg, els)

    def soln_dim(self) -> int:
        """Horizontal sections: invariants of the regular part."""
        return self.regular.invariants_dim()

    def checks(self) -> dict:
        det = DetData((), self.regular.det())
        for e in self.irregular:
            det = det * e.det()
        duals = FormalType.make(self.regular.dual(), [e.dual() for e in self.irregular])
        return {"self_dual": duals == self, "det_trivial": det.is_trivial()}

    def formal_monodromy(self) -> JordanData:
        out = self.regular
        for e in self.irregular:
            out = out + e.r.push(e.p)
        return out

    def exponential_torus_dim(self) -> int:
        """Dimension of the Q-span of the conjugate exponential tails of all
        members, with symbols/radicals/cyclotomic basis elements treated as
        independent coordinates."""
        n = 1
        for e in self.irregular:
            n = _lcm(n, e.p)
            for _, a in e.tail:
                for cyc in a.numd().values():
                    n = _lcm(n, cyc.order)
        vectors = []
        for e in self.irregular:
            for i in range(e.p):
                vec: dict = {}
                for j, a in e.tail:
                    tw = a * Scalar.zeta(e.p, (-j * i) % e.p)
                    for key, val in _scalar_coords(tw, n).items():
                        vec[(j,) + key] = vec.get((j,) + key, Fraction(0)) + val
                vectors.append(vec)
        return _rank_of_vectors(vectors)

    def tensor(self, other: "FormalType") -> "FormalType":
        reg = self.regular.tensor(other.regular) if self.regular.rank() and other.regular.rank() else JordanData.zero()
        els = []
        for a in self.irregular:
            if other.regular.rank():
                els.append(a.twist_regular(other.regular))
            for b in other.irregular:
                for t in el_tensor(a, b):
                    els.append(t)
        for b in other.irregular:
            if self.regular.rank():
                els.append(b.twist_regular(self.regular))
        return FormalType.make(reg, els)

    def exterior_cube(self) -> "FormalType":
        return _exterior_cube(self)

    def dual(self) -> "FormalType":
        return FormalType.make(self.regular.dual(), [e.dual() for e in self.irregular])

    def scale(self, eig: Eigenvalue) -> "FormalType":
        return FormalType.make(self.regular.scale(eig),
                               [e.scale_eigenvalues(eig) for e in self.irregular])

    def sort_key(self):
        return (self.regular.sort_key(), tuple(e.sort_key() for e in self.irregular))

    def __repr__(self):
        return f"FormalType({render_formal_type(self)})"


def _scalar_coords(s: Scalar, order: int) -> dict:
    """Rational coordinate vector of a scalar: keys index (radical part,
    denominator, numerator monomial, basis slot in Q(zeta_order))."""
    out: dict = {}
    for mono, cyc in s.numd().items():
        for k, co in enumerate(cyc._lift(order)):
            if co:
                out[(s.rad, s.den, mono, k)] = co
    return out


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _rank_of_vectors(vectors) -> int:
    keys = sorted({k for v in vectors for k in v})
    rows = [[v.get(k, Fraction(0)) for k in keys] for v in vectors]
    rank = 0
    ncols = len(keys)
    col = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pr[col]
        rows[rank] = [x / inv for x in pr]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- exterior cube -------------------------------------------------------------

def _refine(ft: FormalType) -> list:
    """Split elementary members into single-Jordan-block pieces; returns a
    list of summands ('el', piece) / ('reg', jordan)."""
    out = []
    for e in ft.irregular:
        if e.p == 1:
            out.append(("el", e))
            continue
        for eig, size in e.r.blocks:
            if size > 1:
                raise ValueError(
                    f"unsupported exterior power: ramified summand {render_elementary(e)} "
                    "has a Jordan block of size > 1")
            out.append(("el", ElementaryModule.make(e.p, ONE, e.taild(),
                                                    JordanData.single(eig, 1))))
    if ft.regular.rank():
        out.append(("reg", ft.regular))
    return out


def _piece_exterior(kind, obj, k: int):
    """Lambda^k of a single summand, as a FormalType (possibly zero rank)."""
    if kind == "reg":
        if k > obj.rank():
            return None
        return FormalType.regular_only(obj.exterior(k)) if k else _trivial_ft()
    e = obj
    n = e.rank()
    if k > n:
        return None
    if k == 0:
        return _trivial_ft()
    if k == 1:
        return FormalType.make(JordanData.zero(), [e])
    if e.p == 1:
        tail = {j: a * Scalar.rational(k) for j, a in e.tail}
        return FormalType.make(JordanData.zero(),
                               [ElementaryModule.make(1, ONE, tail, e.r.exterior(k))])
    if k == n:
        return _det_ft(e.det())
    if k == n - 1:
        # Lambda^(n-1) = det (x) dual
        d = e.det()
        dualized = e.dual()
        if d.tail:
            raise ValueError("exponential determinant in exterior power not supported")
        return FormalType.make(JordanData.zero(), [dualized.scale_eigenvalues(d.eig)])
    raise ValueError(
        f"unsupported exterior power Lambda^{k} of {render_elementary(e)} (rank {n})")


def _trivial_ft() -> FormalType:
    return FormalType.regular_only(JordanData.identity(1))


def _det_ft(d: DetData) -> FormalType:
    reg = JordanData.single(d.eig, 1)
    if not d.tail:
        return FormalType.regular_only(reg)
    return FormalType.make(JordanData.zero(),
                           [ElementaryModule.make(1, ONE, dict(d.tail), reg)])


def _exterior_cube(ft: FormalType) -> FormalType:
    pieces = _refine(ft)
    total = FormalType.make(JordanData.zero(), ())
    for comp in _compositions(len(pieces), 3):
        factors = []
        ok = True
        for (kind, obj), k in zip(pieces, comp):
            f = _piece_exterior(kind, obj, k)
            if f is None:
                ok = False
                break
            if k:
                factors.append(f)
        if not ok:
            continue
        prod = factors[0] if factors else _trivial_ft()
        for f in factors[1:]:
            prod = prod.tensor(f)
        total = total + prod
    return total


def _compositions(n: int, total: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest


# -- local data ------------------------------------------------------------------

@dataclass(frozen=True)
class LocalData:
    """Numerical nearby/vanishing data: maps (phi key, eigenvalue, level) ->
    count; counts carry a factor p(phi), so they are divisible by the
    ramification degree."""

    kind: str  # "finite" | "infinite"
    rank: int
    nearby: tuple
    vanishing: tuple

    @staticmethod
    def _pack(d: dict) -> tuple:
        def phi_sort(phi):
            tag, p, tail = phi
            return (tag, p, tuple((j, a.sort_key()) for j, a in tail))

        return tuple(sorted(((k, v) for k, v in d.items() if v),
                            key=lambda t: (phi_sort(t[0][0]), t[0][1].sort_key(), t[0][2])))


REG_KEY = ("reg", 1, ())


def _el_key(e: ElementaryModule):
    return ("el", e.p, e.tail)


def ft_to_local(ft: FormalType, kind: str) -> LocalData:
    nearby: dict = {}
    for eig, size in ft.regular.blocks:
        key = (REG_KEY, eig, size - 1)
        nearby[key] = nearby.get(key, 0) + 1
    for e in ft.irregular:
        for eig, size in e.r.blocks:
            key = (_el_key(e), eig, size - 1)
            nearby[key] = nearby.get(key, 0) + e.p
    vanishing = dict(nearby)
    if kind == "finite":
        out: dict = {}
        for (phi, eig, l), c in vanishing.items():
            if phi == REG_KEY and eig.is_one():
                if l >= 1:
                    out[(phi, eig, l - 1)] = out.get((phi, eig, l - 1), 0) + c
            else:
                out[(phi, eig, l)] = out.get((phi, eig, l), 0) + c
        vanishing = out
    return LocalData(kind, ft.rank(), LocalData._pack(nearby), LocalData._pack(vanishing))


def local_to_ft(ld: LocalData) -> FormalType:
    """Inverse of ft_to_local, reconstructing from the vanishing data at a
    finite point (minimal extension) or the nearby data at infinity."""
    src = dict(ld.vanishing if ld.kind == "finite" else ld.nearby)
    if ld.kind == "finite":
        shifted: dict = {}
        for (phi, eig, l), c in src.items():
            if c < 0:
                raise ValueError("negative local-data count")
            if phi == REG_KEY and eig.is_one():
                shifted[(phi, eig, l + 1)] = c
            else:
                shifted[(phi, eig, l)] = c
        src = shifted
    reg_blocks = []
    els: dict = {}
    for (phi, eig, l), c in src.items():
        if phi == REG_KEY:
            reg_blocks.extend([(eig, l + 1)] * c)
        else:
            _, p, tail = phi
            assert c % p == 0, "nearby count not divisible by ramification"
            els.setdefault((p, tail), []).extend([(eig, l + 1)] * (c // p))
    if ld.kind == "finite":
        have = sum(s for _, s in reg_blocks) + sum(
            p * sum(s for _, s in bl) for (p, _), bl in els.items())
        pad = ld.rank - have
        if pad < 0:
            raise ValueError("local data exceeds rank")
        reg_blocks.extend([(Eigenvalue.one(), 1)] * pad)
    el_list = [ElementaryModule.make(p, ONE, dict(tail), JordanData.make(bl))
               for (p, tail), bl in els.items()]
    return FormalType.make(JordanData.make(reg_blocks), el_list)


# operation wrappers -------------------------------------------------------------

def ft_invariants(ft: FormalType) -> dict:
    return {"rank": ft.rank(), "slopes": ft.slopes(), "irregularity": ft.irregularity()}


def ft_end(ft: FormalType) -> FormalType:
    return ft.end()


def ft_soln_dim(ft: FormalType) -> int:
    return ft.soln_dim()


def ft_checks(ft: FormalType) -> dict:
    return ft.checks()


def ft_formal_monodromy(ft: FormalType) -> JordanData:
    return ft.formal_monodromy()


def ft_exponential_torus_dim(ft: FormalType) -> int:
    return ft.exponential_torus_dim()


def ft_exterior_cube(ft: FormalType) -> FormalType:
    return ft.exterior_cube()


def ft_local_data(ft: FormalType, kind: str) -> LocalData:
    return ft_to_local(ft, kind)


# rendering / JSON ------------------------------------------------------------------

def render_formal_type(ft: FormalType) -> str:
    parts = [render_elementary(e) for e in ft.irregular]
    if ft.regular.rank():
        parts.append(render_jordan(ft.regular))
    return " + ".join(parts) if parts else "0"


def formal_type_to_json(ft: FormalType) -> dict:
    return {
        "regular": [[_eig_str(e), s] for e, s in ft.regular.blocks],
        "irregular": [
            {"p": e.p, "c": render_scalar(e.coeff),
             "phi": {str(-j): render_scalar(a) for j, a in e.tail},
             "R": [[_eig_str(ei), s] for ei, s in e.r.blocks]}
            for e in ft.irregular
        ],
    }


def formal_type_from_json(d: dict) -> FormalType:
    from .scalars import parse_eigenvalue
    reg = JordanData.make([(parse_eigenvalue(e), int(s)) for e, s in d.get("regular", [])])
    els = []
    for ed in d.get("irregular", []):
        tail = {-int(j): parse_scalar(a) for j, a in ed.get("phi", {}).items()}
        r = JordanData.make([(parse_eigenvalue(e), int(s)) for e, s in ed["R"]])
        coeff = parse_scalar(ed.get("c", "1"))
        els.append(ElementaryModule.make(int(ed["p"]), coeff, tail, r))
    return FormalType.make(reg, els)


def _eig_str(e: Eigenvalue) -> str:
    from .scalars import render_eigenvalue
    return render_eigenvalue(e)


def parse_formal_type(text: str) -> FormalType:
    """Parse 'El(...) + El(...) + (jordan)' pretty form."""
    reg = JordanData.zero()
    els = []
    for chunk in _split_plus(text):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        if chunk.startswith("El"):
            els.append(parse_elementary(chunk))
        else:
            reg = reg + parse_jordan(chunk)
    return FormalType.make(reg, els)


def _split_plus(text: str):
    depth = 0
    cur = ""
    out = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
            continue
        cur += ch
    out.append(cur)
    return out
