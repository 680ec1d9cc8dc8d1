"""Local Fourier transforms of formal data.

Conventions are pinned so that the construction schemes replay verbatim:

* the slot of a finite singularity s carries the exponential s/theta, i.e.
  a regular payload V at s becomes El(1, s/theta, V) at infinity of the
  transform;
* for an irregular elementary input the transform of El(u^p, a/u^q, R) is
  El((p/(q a)) u^(p+q), ((p+q)/p) a / u^q, R (x) L_q) with L_q the rank-one
  twist by (-1)^q;
* slope-(<1) and regular content at infinity returns to the finite point 0,
  slope-1 unramified content El(1, c/theta, R) returns to the finite point
  c with payload R.

The paper's sources use conflicting global signs; these choices reproduce
every replay table bit-exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar, Eigenvalue, ZERO, ONE
from .jordan import JordanData
from .elementary import ElementaryModule
from .formal_type import FormalType


class OutOfScopeError(ValueError):
    """Raised for inputs outside the supported calculus (slopes > 1 at the
    transform source, ramified slope-1 content at infinity, ...)."""


def vanishing_data(j: JordanData) -> JordanData:
    """Vanishing cycles of a regular nearby monodromy at a finite point
    (minimal extension): eigenvalue-1 blocks lose one dimension."""
    out = []
    for e, s in j.blocks:
        if e.is_one():
            if s > 1:
                out.append((e, s - 1))
        else:
            out.append((e, s))
    return JordanData.make(out)


def nearby_from_vanishing(j: JordanData, rank: int) -> JordanData:
    """Inverse of vanishing_data given the ambient generic rank."""
    out = []
    for e, s in j.blocks:
        out.append((e, s + 1) if e.is_one() else (e, s))
    have = sum(s for _, s in out)
    pad = rank - have
    if pad < 0:
        raise OutOfScopeError("vanishing data exceeds generic rank")
    out.extend([(Eigenvalue.one(), 1)] * pad)
    return JordanData.make(out)


def _single_term(e: ElementaryModule):
    if len(e.tail) != 1:
        raise OutOfScopeError(
            "local Fourier transform of multi-term tails is outside the "
            "supported calculus")
    (q, a), = e.tail
    return q, a


def sabbah_transform_raw(e: ElementaryModule) -> ElementaryModule:
    """F^(0,infty) of an irregular elementary module, *not* normalized (the
    raw coefficient is kept so a shift term can still be attached)."""
    e = e.normalize()
    if e.is_regular():
        raise OutOfScopeError("regular input: use the vanishing-cycle path")
    q, a = _single_term(e)
    p = e.p
    coeff = Scalar.rational(Fraction(p, q)) / a
    tail = {q: Scalar.rational(Fraction(p + q, p)) * a}
    r = e.r.scale(Eigenvalue.of_torsion(Fraction(q, 2)))
    return ElementaryModule.make(p + q, coeff, tail, r)


def lft_zero_to_inf(e: ElementaryModule) -> ElementaryModule:
    return sabbah_transform_raw(e).normalize()


def lft_regular_to_inf(j: JordanData) -> JordanData:
    """Transform of a regular module given by its vanishing-cycle data: a
    regular payload at infinity with the same monodromy."""
    return j


def lft_shifted(content, s: Scalar):
    """F^(s,infty): the slot contribution at infinity of the content at the
    finite point s.  `content` is vanishing JordanData (regular part) or an
    elementary module."""
    if isinstance(content, JordanData):
        if s.is_zero():
            return FormalType.regular_only(content)
        return FormalType.make(JordanData.zero(),
                               [ElementaryModule.make(1, ONE, {1: s}, content)])
    raw = sabbah_transform_raw(content)
    if not s.is_zero():
        tail = raw.taild()
        shift = s / raw.coeff
        tail[raw.p] = tail.get(raw.p, ZERO) + shift
        raw = ElementaryModule.make(raw.p, raw.coeff, tail, raw.r)
    return FormalType.make(JordanData.zero(), [raw.normalize()])


def epsilon_twist_inf(e: ElementaryModule) -> ElementaryModule:
    """Pullback along z -> -z of a piece of an infinity formal type: the
    upstairs substitution u -> gamma u with gamma^p = -1 multiplies the tail
    coefficient at depth j by gamma^(-j) (canonical root chosen)."""
    e = e.normalize()
    gamma = Scalar.rational(-1).root(e.p)
    tail = {j: a / (gamma ** j) for j, a in e.tail}
    return ElementaryModule.make(e.p, ONE, tail, e.r)


def lft_inf_to_s(e: ElementaryModule):
    """Inverse transform of a slope-(<=1) piece of an infinity formal type.
    Returns (location Scalar, payload) with payload either vanishing
    JordanData (slope-1 unramified input) or an elementary module."""
    e = e.normalize()
    q = e.q()
    if q == 0:
        return Scalar.rational(0), e.r
    if q > e.p:
        raise OutOfScopeError("slope > 1 at infinity is out of scope")
    if q == e.p:
        if e.p != 1:
            raise OutOfScopeError("ramified slope-1 content at infinity is out of scope")
        c = dict(e.tail)[1]
        return c, e.r
    # slope < 1: invert the Sabbah formulas; the content came from 0
    p0 = e.p - q
    ahat = dict(e.tail)[q]
    base = ahat * Scalar.rational(Fraction(p0, e.p))
    a0 = (base ** e.p).root(p0) * (Scalar.rational(Fraction(q, p0)) ** q).root(p0)
    r0 = e.r.scale(Eigenvalue.of_torsion(Fraction(q, 2)))
    return Scalar.rational(0), ElementaryModule.make(p0, ONE, {q: a0}, r0).normalize()
