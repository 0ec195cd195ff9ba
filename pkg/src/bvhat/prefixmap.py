"""Elements of the symmetric fraction group as prefix substitutions.

An address ``(c, v)`` names the node ``v`` (a binary string) of the ``c``-th
copy of the infinite binary tree; infinite addresses are points of the
Cantor-set union.  A :class:`PrefixMap` sends a finite prefix-free cover of
copies ``0 .. n-1`` bijectively to another one, and shifts every copy
``c >= n`` to ``c + shift``.  It is computed straight from the forests and
the permutation, so it serves as an oracle for the fraction arithmetic.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .braid import Flavor, perm_of

Address = tuple[int, str]


def format_address(a: Address) -> str:
    return f"{a[0]}.{a[1]}" if a[1] else f"{a[0]}"


@dataclass(frozen=True)
class PrefixMap:
    pairs: tuple[tuple[Address, Address], ...]
    covered: int
    shift: int

    def as_dict(self) -> dict[Address, Address]:
        return dict(self.pairs)

    def __call__(self, a: Address) -> Address:
        """Image of an address lying at or below some source (or in the tail)."""
        c, v = a
        if c >= self.covered:
            return c + self.shift, v
        for (sc, sv), (tc, tv) in self.pairs:
            if sc == c and v.startswith(sv):
                return tc, tv + v[len(sv) :]
        raise ValueError(f"address {format_address(a)} lies above the source cover")

    def __str__(self) -> str:
        body = ", ".join(f"{format_address(s)}↦{format_address(t)}" for s, t in self.pairs if s != t)
        tail = f"; c↦c{self.shift:+d} for c≥{self.covered}" if self.shift else ""
        return "{" + body + tail + "}"

    def inverse(self) -> PrefixMap:
        return canonical(((t, s) for s, t in self.pairs), self.covered + self.shift, -self.shift)

    def is_identity(self) -> bool:
        return self.covered == 0 and self.shift == 0


def canonical(pairs: Iterable[tuple[Address, Address]], covered: int, shift: int) -> PrefixMap:
    """Merge sibling pairs and absorb whole copies into the tail."""
    table: dict[Address, Address] = dict(pairs)
    changed = True
    while changed:
        changed = False
        for (c, v), (d, w) in list(table.items()):
            if not v.endswith("0") or not w.endswith("0"):
                continue
            sib = (c, v[:-1] + "1")
            if table.get(sib) == (d, w[:-1] + "1"):
                del table[(c, v)], table[sib]
                table[(c, v[:-1])] = (d, w[:-1])
                changed = True
    while covered > 0 and table.get((covered - 1, "")) == (covered - 1 + shift, ""):
        del table[(covered - 1, "")]
        covered -= 1
    return PrefixMap(tuple(sorted(table.items())), covered, shift)


def as_prefix_map(t) -> PrefixMap:
    """Leaf ``j`` of the denominator goes to leaf ``perm(j)`` of the numerator."""
    if t.flavor is not Flavor.SYMMETRIC:
        raise ValueError("prefix maps describe symmetric-flavor elements")
    F, G = t.numerator, t.denominator
    p = perm_of(t.braid)
    n = max(F.leaf_span, G.leaf_span, p.support_end)
    src = list(G.leaves(n))
    dst = list(F.leaves(n))
    pairs = [(src[j], dst[p(j)]) for j in range(n)]
    covered = src[-1][0] + 1 if src else 0
    shift = (dst[-1][0] + 1 if dst else 0) - covered
    return canonical(pairs, covered, shift)


def compose(x: PrefixMap, y: PrefixMap) -> PrefixMap:
    """``x o y``: apply ``y`` first."""
    work = list(y.pairs)
    covered = max(y.covered, x.covered - y.shift)
    work.extend(((c, ""), (c + y.shift, "")) for c in range(y.covered, covered))
    out = []
    while work:
        s, t = work.pop()
        try:
            out.append((s, x(t)))
        except ValueError:
            # t sits above x's cover: refine both sides
            for b in "01":
                work.append(((s[0], s[1] + b), (t[0], t[1] + b)))
    return canonical(out, covered, x.shift + y.shift)


def from_mapping(m: Mapping[Address, Address], covered: int, shift: int = 0) -> PrefixMap:
    return canonical(m.items(), covered, shift)
