"""Global connection descriptors and the operation calculus.

A descriptor records the generic rank and the formal type at every singular
location (finite points carry full-rank nearby data under minimal-extension
semantics; `inf` carries the formal type at infinity).  The four operations
of the Katz-Arinkin algorithm act on descriptors by transporting this local
data; no matrix realizations are ever computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scalars import (Scalar, Eigenvalue, ZERO, ONE, render_scalar, parse_scalar,
                      parse_eigenvalue)
from .jordan import JordanData
from .elementary import ElementaryModule
from .formal_type import (FormalType, formal_type_to_json, formal_type_from_json,
                          render_formal_type)
from .fourier import (OutOfScopeError, vanishing_data, nearby_from_vanishing,
                      lft_shifted, lft_inf_to_s, epsilon_twist_inf)

INF = "inf"


class ContradictionError(RuntimeError):
    """A transport step produced structurally impossible data; the report
    carries the reason (these reports are how non-existence is proved)."""

    def __init__(self, report: str):
        super().__init__(report)
        self.report = report


@dataclass(frozen=True)
class ConnectionDescriptor:
    rank: int
    points: tuple  # ((location, FormalType), ...); location Scalar or "inf"

    @staticmethod
    def make(points: dict, rank: int) -> "ConnectionDescriptor":
        items = []
        for loc, ft in points.items():
            if loc != INF and not isinstance(loc, Scalar):
                loc = Scalar.rational(loc) if not isinstance(loc, str) else parse_scalar(loc)
            if _is_trivial_type(ft):
                continue
            items.append((loc, ft))
        items.sort(key=lambda t: (1, ()) if t[0] == INF else (0, t[0].sort_key()))
        locs = [l for l, _ in items]
        assert len(set(locs)) == len(locs), "duplicate singular locations"
        return ConnectionDescriptor(int(rank), tuple(items))

    def point(self, loc) -> FormalType:
        for l, ft in self.points:
            if l == loc:
                return ft
        return _trivial(self.rank)

    def finite_points(self):
        return [(l, ft) for l, ft in self.points if l != INF]

    def inf_type(self) -> FormalType:
        return self.point(INF)

    def locations(self):
        return [l for l, _ in self.points]

    def __repr__(self):
        rows = ", ".join(
            f"{render_location(l)}: {render_formal_type(ft)}" for l, ft in self.points)
        return f"ConnectionDescriptor(rank {self.rank}; {rows})"


def _trivial(rank: int) -> FormalType:
    return FormalType.regular_only(JordanData.identity(rank))


def _is_trivial_type(ft: FormalType) -> bool:
    return not ft.irregular and ft.regular.is_trivial()


def render_location(loc) -> str:
    return INF if loc == INF else render_scalar(loc)


# -- invariants ---------------------------------------------------------------

def rigidity_index(c: ConnectionDescriptor) -> int:
    r = len(c.points)
    h = c.rank
    out = (2 - r) * h * h
    for _, ft in c.points:
        end = ft.end()
        out -= end.irregularity()
        out += end.soln_dim()
    return out


def euler_char_middle(c: ConnectionDescriptor, family: dict) -> int:
    """chi of the middle extension of an auxiliary family given at each
    singular point (e.g. exterior cubes of the formal types)."""
    r = len(c.points)
    rank = None
    out = 0
    for loc, ft in family.items():
        if rank is None:
            rank = ft.rank()
        assert ft.rank() == rank, "family members must share a rank"
        out -= ft.irregularity()
        out += ft.soln_dim()
    return (2 - r) * rank + out


# -- operations ----------------------------------------------------------------

def op_twist(c: ConnectionDescriptor, twists: dict) -> ConnectionDescriptor:
    """Tensor with the rank-one system having monodromy twists[loc] at each
    location (the product over all entries must be 1)."""
    prod = Eigenvalue.one()
    for eig in twists.values():
        prod = prod * eig
    if not prod.is_one():
        raise ValueError("twist monodromies must multiply to 1")
    pts = {l: ft for l, ft in c.points}
    for loc, eig in twists.items():
        if eig.is_one():
            continue
        ft = pts.get(loc, _trivial(c.rank))
        pts[loc] = ft.scale(eig)
    return ConnectionDescriptor.make(pts, c.rank)


def op_moebius(c: ConnectionDescriptor, kind: str, a: Scalar = None, b: Scalar = None) -> ConnectionDescriptor:
    if kind == "inv":
        pts = {}
        for loc, ft in c.points:
            if loc == INF:
                pts[Scalar.rational(0)] = ft
            elif loc.is_zero():
                pts[INF] = ft
            else:
                if ft.irregular:
                    raise OutOfScopeError(
                        "inversion with irregular content away from 0 and inf")
                pts[ONE / loc] = ft
        return ConnectionDescriptor.make(pts, c.rank)
    if kind == "affine":
        if a is None or a.is_zero():
            raise ValueError("affine map needs a != 0")
        b = b if b is not None else ZERO
        pts = {}
        for loc, ft in c.points:
            if loc == INF:
                pts[INF] = _affine_inf(ft, a, b)
            else:
                pts[loc * a + b] = ft
        return ConnectionDescriptor.make(pts, c.rank)
    raise ValueError(f"unknown Moebius kind {kind!r}")


def _affine_inf(ft: FormalType, a: Scalar, b: Scalar) -> FormalType:
    els = []
    for e in ft.irregular:
        if not b.is_zero() and e.slope() > 1:
            raise OutOfScopeError("affine shift with slopes > 1 at infinity")
        root = a.root(e.p)
        tail = {j: coef / (root ** j) for j, coef in e.tail}
        els.append(ElementaryModule.make(e.p, ONE, tail, e.r))
    return FormalType.make(ft.regular, els)


def fourier_rank(c: ConnectionDescriptor) -> int:
    """Generic rank of the Fourier transform (the rank lemma); slope-(<=1)
    content at infinity contributes nothing."""
    for e in c.inf_type().irregular:
        if e.slope() > 1:
            raise OutOfScopeError("slopes > 1 at infinity are out of scope")
    h = 0
    for loc, ft in c.finite_points():
        h += vanishing_data(ft.regular).rank()
        for e in ft.irregular:
            h += (e.p + e.q()) * e.r.rank()
    return h


def stationary_phase(c: ConnectionDescriptor) -> FormalType:
    """Formal type at infinity of the Fourier transform: direct sum of the
    local transforms of the finite slots."""
    for e in c.inf_type().irregular:
        if e.slope() > 1:
            raise OutOfScopeError("slopes > 1 at infinity are out of scope")
    inf_reg = JordanData.zero()
    inf_els = []
    for loc, ft in c.finite_points():
        v = vanishing_data(ft.regular)
        if v.rank():
            slot = lft_shifted(v, loc)
            inf_reg = inf_reg + slot.regular
            inf_els.extend(slot.irregular)
        for e in ft.irregular:
            slot = lft_shifted(e, loc)
            inf_reg = inf_reg + slot.regular
            inf_els.extend(slot.irregular)
    return FormalType.make(inf_reg, inf_els)


def op_fourier(c: ConnectionDescriptor) -> ConnectionDescriptor:
    h_new = fourier_rank(c)
    new_inf = stationary_phase(c)
    if new_inf.rank() != h_new:
        raise ContradictionError(
            f"rank mismatch: transform has generic rank {h_new} but the "
            f"assembled infinity type has rank {new_inf.rank()}")
    # finite points of the transform from the infinity content of the source;
    # slope-(<1) pieces carry the z -> -z deck twist so that applying the
    # transform twice is the epsilon pullback
    van: dict = {}
    for e in c.inf_type().irregular:
        if e.slope() < 1:
            e = epsilon_twist_inf(e)
        s, payload = lft_inf_to_s(e)
        ft0 = van.setdefault(_key(s), [s, JordanData.zero(), []])
        if isinstance(payload, JordanData):
            ft0[1] = ft0[1] + payload
        else:
            ft0[2].append(payload)
    if c.inf_type().regular.rank():
        s = Scalar.rational(0)
        ft0 = van.setdefault(_key(s), [s, JordanData.zero(), []])
        ft0[1] = ft0[1] + c.inf_type().regular
    pts = {}
    for _, (s, vreg, vels) in van.items():
        el_rank = sum(e.rank() for e in vels)
        if _nearby_rank_needed(vreg, el_rank) > h_new:
            ft_putative = FormalType.make(vreg, vels)
            raise ContradictionError(
                f"rank mismatch: transform has generic rank {h_new} but the "
                f"formal type at {render_scalar(s)} would need rank "
                f"{_nearby_rank_needed(vreg, el_rank)}: vanishing data "
                f"{render_formal_type(ft_putative)}")
        nearby = nearby_from_vanishing(vreg, h_new - el_rank)
        pts[s] = FormalType.make(nearby, vels)
    pts[INF] = new_inf
    return ConnectionDescriptor.make(pts, h_new)


def _nearby_rank_needed(vreg: JordanData, el_rank: int) -> int:
    return sum((s + 1) if e.is_one() else s for e, s in vreg.blocks) + el_rank


def _key(s: Scalar):
    return s.sort_key()


def op_middle_convolution(c: ConnectionDescriptor, chi: Eigenvalue) -> ConnectionDescriptor:
    if chi.is_one():
        raise ValueError("middle convolution requires chi != 1")
    inf = c.inf_type()
    scal = inf.regular.is_scalar() if not inf.irregular else None
    if scal != chi:
        raise ValueError(
            "middle convolution needs scalar monodromy chi at infinity; "
            "twist first (adding a fake singularity if necessary)")
    h_new = fourier_rank(c) - c.rank
    if h_new <= 0:
        raise ContradictionError(f"middle convolution rank dropped to {h_new}")
    pts = {}
    for loc, ft in c.finite_points():
        vreg = vanishing_data(ft.regular).scale(chi)
        vels = [ElementaryModule.make(e.p, ONE, e.taild(),
                                      e.r.scale(chi.pow(e.p + e.q()))).normalize()
                for e in ft.irregular]
        el_rank = sum(e.rank() for e in vels)
        if _nearby_rank_needed(vreg, el_rank) > h_new:
            raise ContradictionError(
                f"rank {h_new} system forced to carry vanishing data "
                f"{render_formal_type(FormalType.make(vreg, vels))} at "
                f"{render_location(loc)} (needs rank >= "
                f"{_nearby_rank_needed(vreg, el_rank)})")
        nearby = nearby_from_vanishing(vreg, h_new - el_rank)
        pts[loc] = FormalType.make(nearby, vels)
    pts[INF] = FormalType.regular_only(
        JordanData.make([(chi.inverse(), 1)] * h_new))
    return ConnectionDescriptor.make(pts, h_new)


# -- scripts --------------------------------------------------------------------

@dataclass(frozen=True)
class ScriptStep:
    op: str
    args: tuple


def parse_script(text: str):
    steps = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "twist":
            if ":" in rest:
                pairs = []
                for chunk in rest.split(","):
                    loc_s, _, eig_s = chunk.rpartition(":")
                    pairs.append((loc_s.strip(), parse_eigenvalue(eig_s.strip())))
                steps.append(ScriptStep("twist", ("named", tuple(pairs))))
            else:
                eigs = tuple(parse_eigenvalue(x.strip()) for x in rest.split(","))
                steps.append(ScriptStep("twist", ("positional", eigs)))
        elif head == "moebius":
            parts = rest.split()
            if parts[0] == "inv":
                steps.append(ScriptStep("moebius", ("inv",)))
            elif parts[0] == "affine":
                steps.append(ScriptStep("moebius", ("affine", parse_scalar(parts[1]), parse_scalar(parts[2]) if len(parts) > 2 else ZERO)))
            else:
                raise ValueError(f"line {ln}: unknown moebius kind {parts[0]!r}")
        elif head == "fourier":
            steps.append(ScriptStep("fourier", ()))
        elif head == "mc":
            steps.append(ScriptStep("mc", (parse_eigenvalue(rest),)))
        else:
            raise ValueError(f"line {ln}: unknown operation {head!r}")
    return steps


def apply_step(c: ConnectionDescriptor, step: ScriptStep) -> ConnectionDescriptor:
    if step.op == "twist":
        mode, data = step.args
        if mode == "positional":
            locs = [l for l in c.locations() if l != INF] + [INF]
            if len(data) != len(locs):
                raise ValueError(
                    f"twist arity {len(data)} does not match the {len(locs)} "
                    "singular points; use the named loc:eig form to add points")
            twists = dict(zip(locs, data))
        else:
            twists = {}
            for loc_s, eig in data:
                loc = INF if loc_s == INF else parse_scalar(loc_s)
                twists[loc] = eig
        return op_twist(c, twists)
    if step.op == "moebius":
        if step.args[0] == "inv":
            return op_moebius(c, "inv")
        return op_moebius(c, "affine", step.args[1], step.args[2])
    if step.op == "fourier":
        return op_fourier(c)
    if step.op == "mc":
        return op_middle_convolution(c, step.args[0])
    raise ValueError(f"unknown step {step.op!r}")


def run_script(c0: ConnectionDescriptor, steps) -> list:
    """Apply the steps in order; returns the trace [c0, c1, ...].  The first
    failing step raises with its index and reason attached."""
    if isinstance(steps, str):
        steps = parse_script(steps)
    trace = [c0]
    for i, step in enumerate(steps, 1):
        try:
            trace.append(apply_step(trace[-1], step))
        except ContradictionError as exc:
            raise ContradictionError(f"step {i} ({step.op}): {exc.report}") from exc
        except (ValueError, OutOfScopeError) as exc:
            raise type(exc)(f"step {i} ({step.op}): {exc}") from exc
    return trace


# -- JSON ---------------------------------------------------------------------------

def descriptor_to_json(c: ConnectionDescriptor) -> dict:
    return {
        "rank": c.rank,
        "points": {render_location(l): formal_type_to_json(ft) for l, ft in c.points},
    }


def descriptor_from_json(d: dict) -> ConnectionDescriptor:
    pts = {}
    for loc_s, ft_d in d["points"].items():
        loc = INF if loc_s == INF else parse_scalar(loc_s)
        pts[loc] = formal_type_from_json(ft_d)
    return ConnectionDescriptor.make(pts, int(d["rank"]))


def load_descriptor(path: str) -> ConnectionDescriptor:
    with open(path) as fh:
        return descriptor_from_json(json.load(fh))
