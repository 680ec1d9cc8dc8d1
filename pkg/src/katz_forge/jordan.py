"""Jordan data of regular formal connections.

A regular connection on the formal punctured disk is determined by the
Jordan form of its monodromy; we keep that as a multiset of
(eigenvalue, block size) pairs.  All invariants used downstream (centralizer
dimensions, tensor and exterior powers, pushforward/pullback along ramified
covers, duals and determinants) are computed combinatorially on this data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Eigenvalue, parse_eigenvalue, render_eigenvalue


@dataclass(frozen=True)
class JordanData:
    blocks: tuple  # ((Eigenvalue, size), ...) canonically sorted

    @staticmethod
    def make(blocks) -> "JordanData":
        bl = tuple(sorted(((e, int(s)) for e, s in blocks),
                          key=lambda t: (t[0].sort_key(), -t[1])))
        assert all(s >= 1 for _, s in bl)
        return JordanData(bl)

    @staticmethod
    def zero() -> "JordanData":
        return JordanData(())

    @staticmethod
    def identity(n: int) -> "JordanData":
        return JordanData.make([(Eigenvalue.one(), 1)] * n)

    @staticmethod
    def single(eig: Eigenvalue, size: int = 1) -> "JordanData":
        return JordanData.make([(eig, size)])

    def rank(self) -> int:
        return sum(s for _, s in self.blocks)

    def is_zero(self) -> bool:
        return not self.blocks

    def is_trivial(self) -> bool:
        return all(e.is_one() and s == 1 for e, s in self.blocks)

    def is_scalar(self):
        """The eigenvalue if the monodromy is scalar (all blocks J(1) with
        one common eigenvalue), else None."""
        eigs = {e for e, _ in self.blocks}
        if len(eigs) == 1 and all(s == 1 for _, s in self.blocks):
            return next(iter(eigs))
        return None

    def __add__(self, other: "JordanData") -> "JordanData":
        return JordanData.make(self.blocks + other.blocks)

    # -- invariants ----------------------------------------------------------
    def centralizer_dim(self) -> int:
        d = 0
        for e1, s1 in self.blocks:
            for e2, s2 in self.blocks:
                if e1 == e2:
                    d += min(s1, s2)
        return d

    def invariants_dim(self) -> int:
        """dim ker(T - id) = number of blocks with eigenvalue 1."""
        return sum(1 for e, _ in self.blocks if e.is_one())

    def dual(self) -> "JordanData":
        return JordanData.make([(e.inverse(), s) for e, s in self.blocks])

    def det(self) -> Eigenvalue:
        out = Eigenvalue.one()
        for e, s in self.blocks:
            out = out * e.pow(s)
        return out

    def scale(self, eig: Eigenvalue) -> "JordanData":
        """Tensor with the rank-one data of eigenvalue `eig`."""
        return JordanData.make([(e * eig, s) for e, s in self.blocks])

    def eigenvalue_multiset(self):
        out = []
        for e, s in self.blocks:
            out.extend([e] * s)
        return sorted(out, key=lambda x: x.sort_key())

    # -- functors -------------------------------------------------------------
    def tensor(self, other: "JordanData") -> "JordanData":
        out = []
        for e1, a in self.blocks:
            for e2, b in other.blocks:
                e = e1 * e2
                for k in range(min(a, b)):
                    out.append((e, a + b - 1 - 2 * k))
        return JordanData.make(out)

    def exterior(self, k: int) -> "JordanData":
        if k < 0 or k > self.rank():
            raise ValueError("exterior power index out of range")
        if k == 0:
            return JordanData.identity(1)
        letters = []
        for e, b in self.blocks:
            for j in range(b):
                letters.append((e, b - 1 - 2 * j))
        # elementary symmetric polynomial e_k of the letters
        elem = [dict() for _ in range(k + 1)]
        elem[0][(Eigenvalue.one(), 0)] = 1
        for lam, d in letters:
            for i in range(min(k, 1 + max(j for j in range(k + 1) if elem[j])), 0, -1):
                for (mu, dd), m in list(elem[i - 1].items()):
                    key = (mu * lam, dd + d)
                    elem[i][key] = elem[i].get(key, 0) + m
        return _character_to_blocks(elem[k])

    def pull(self, p: int) -> "JordanData":
        """Pullback along u -> u^p: monodromy T -> T^p."""
        return JordanData.make([(e.pow(p), s) for e, s in self.blocks])

    def push(self, p: int) -> "JordanData":
        """Pushforward along u -> u^p: T -> T^(1/p) (x) P_p, giving the p
        twisted p-th roots of each eigenvalue with unchanged block sizes."""
        out = []
        for e, s in self.blocks:
            root = e.pow(Fraction(1, p))
            for j in range(p):
                out.append((root * Eigenvalue.of_torsion(Fraction(j, p)), s))
        return JordanData.make(out)

    def sort_key(self):
        return tuple((e.sort_key(), s) for e, s in self.blocks)

    def __repr__(self):
        return f"JordanData({render_jordan(self)})"


def _character_to_blocks(counter: dict) -> JordanData:
    """Decompose an eigenvalue/q-degree character into Jordan blocks, greedily
    stripping the deepest block per eigenvalue."""
    by_eig: dict = {}
    for (e, d), m in counter.items():
        if m:
            by_eig.setdefault(e, {})[d] = m
    blocks = []
    for e, degs in by_eig.items():
        degs = dict(degs)
        while degs:
            d = max(degs)
            b = d + 1
            for dd in range(d, -d - 1, -2):
                cnt = degs.get(dd, 0) - 1
                if cnt < 0:
                    raise ArithmeticError("character is not a sum of block characters")
                if cnt == 0:
                    degs.pop(dd, None)
                else:
                    degs[dd] = cnt
            blocks.append((e, b))
    return JordanData.make(blocks)


# operation wrappers ------------------------------------------------------

def centralizer_dim(j: JordanData) -> int:
    return j.centralizer_dim()


def jordan_tensor(j1: JordanData, j2: JordanData) -> JordanData:
    return j1.tensor(j2)


def jordan_exterior(j: JordanData, k: int) -> JordanData:
    return j.exterior(k)


def jordan_push_pull(j: JordanData, p: int, direction: str) -> JordanData:
    if direction == "push":
        return j.push(p)
    if direction == "pull":
        return j.pull(p)
    raise ValueError(f"unknown direction {direction!r}")


def jordan_aux(j: JordanData, op: str):
    if op == "dual":
        return j.dual()
    if op == "det":
        return JordanData.single(j.det(), 1)
    if op == "invariants_dim":
        return j.invariants_dim()
    if op == "rank":
        return j.rank()
    raise ValueError(f"unknown op {op!r}")


# rendering / parsing -------------------------------------------------------

def render_jordan(j: JordanData) -> str:
    parts = []
    for e, s in j.blocks:
        es = render_eigenvalue(e)
        if s == 1:
            parts.append(es)
        elif e.is_one():
            parts.append(f"J({s})")
        else:
            parts.append(f"{es}J({s})")
    return "(" + ", ".join(parts) + ")"


def parse_jordan(text: str) -> JordanData:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    blocks = []
    depth = 0
    cur = ""
    entries = []
    for ch in text:
        if ch == "," and depth == 0:
            entries.append(cur)
            cur = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur += ch
    if cur.strip():
        entries.append(cur)
    for ent in entries:
        ent = ent.strip()
        if not ent:
            continue
        blocks.extend(_parse_jordan_entry(ent))
    return JordanData.make(blocks)


def _parse_jordan_entry(ent: str):
    # [eig][J(n)] or [eig]E<n> or [eig]E_<n>
    import re
    m = re.search(r"J\((\d+)\)\s*$", ent)
    if m:
        size = int(m.group(1))
        head = ent[: m.start()].strip()
        eig = parse_eigenvalue(head) if head and head != "+" else Eigenvalue.one()
        if head == "-":
            eig = Eigenvalue.minus_one()
        return [(eig, size)]
    m = re.search(r"E_?(\d+)\s*$", ent)
    if m:
        n = int(m.group(1))
        head = ent[: m.start()].strip()
        head = head.rstrip("*")
        if head in ("", "+"):
            eig = Eigenvalue.one()
        elif head == "-":
            eig = Eigenvalue.minus_one()
        else:
            eig = parse_eigenvalue(head)
        return [(eig, 1)] * n
    return [(parse_eigenvalue(ent), 1)]
