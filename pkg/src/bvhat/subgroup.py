"""Simple elements, the balanced subgroups BV and V, and presentation checks.

A forest is simple when every tree after tree 0 is trivial; its type is its
number of carets.  A monoid element ``(F, b)`` is simple of type ``k`` when
``F`` is and ``b`` lies in ``B_(k+1)`` (``S_(k+1)``).  An element of the
fraction group belongs to the subgroup when some representative has a simple
numerator and denominator of one type.

Membership is decided on the reduced triple.  Left factors of simple elements
are simple, so if the reduced triple fails the forest test every other
representative (a fattening of it) fails too.  The braid condition on the
reduced triple is used as stated and is property-tested separately.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .braid import BraidWord, Flavor, in_Bk
from .forest import Forest, forest_to_word, word_to_forest
from .fraction import FractionTriple, evaluate, frac_eq, reduce
from .zappa import MonoidElt, mono_mul


@dataclass(frozen=True)
class SimplicityReport:
    is_simple: bool
    type_k: int | None = None
    braid_ok: bool | None = None

    def __bool__(self) -> bool:
        return self.is_simple


def is_simple_forest(F: Forest) -> SimplicityReport:
    """Simple iff the ascending word ``i_1 ... i_n`` has ``i_j < j``."""
    word = forest_to_word(F)
    if all(i < j for j, i in enumerate(word, start=1)):
        return SimplicityReport(True, len(word))
    return SimplicityReport(False)


def is_simple_elt(x: MonoidElt) -> SimplicityReport:
    rep = is_simple_forest(x.forest)
    if not rep.is_simple:
        return rep
    ok = in_Bk(x.braid, rep.type_k)
    return SimplicityReport(ok, rep.type_k if ok else None, ok)


def member_type(x: FractionTriple) -> int | None:
    """Type of the balanced reduced representative, or ``None``."""
    t = reduce(x)
    num, den = is_simple_forest(t.numerator), is_simple_forest(t.denominator)
    if not (num.is_simple and den.is_simple) or num.type_k != den.type_k:
        return None
    return num.type_k if in_Bk(t.braid, num.type_k) else None


def is_member(x: FractionTriple) -> bool:
    return member_type(x) is not None


def simple_product_bound(x: MonoidElt, G: Sequence[int]) -> bool:
    """Whether ``x G`` is simple, for ``x`` simple of type ``k`` and ``G = l_{i1} ... l_{in}``."""
    rep = is_simple_elt(x)
    if not rep.is_simple:
        raise ValueError("x must be simple")
    k = rep.type_k
    return all(i <= k + j - 1 for j, i in enumerate(G, start=1))


def simple_product_direct(x: MonoidElt, G: Sequence[int]) -> bool:
    """The same question answered by multiplying out."""
    g = MonoidElt(word_to_forest(G), BraidWord((), x.flavor))
    return is_simple_elt(mono_mul(x, g)).is_simple


# -- presentation -----------------------------------------------------------

Gen = tuple[str, int, int]


@dataclass(frozen=True)
class Relation:
    family: str
    lhs: tuple[Gen, ...]
    rhs: tuple[Gen, ...]

    def __str__(self) -> str:
        return f"{_render(self.lhs)} = {_render(self.rhs)}"


def _render(word: Sequence[Gen]) -> str:
    out = []
    for kind, i, s in word:
        out.append(f"{kind}{i}" + ("'" if s < 0 else ""))
    return " ".join(out) or "1"


def L(i: int) -> Gen:
    return ("l", i, 1)


def S(i: int, e: int = 1) -> Gen:
    return ("s", i, e)


def relations(N: int, flavor: Flavor) -> list[Relation]:
    """Every instance with all indices at most ``N``."""
    rng = range(N + 1)
    signs = (1,) if flavor is Flavor.SYMMETRIC else (1, -1)
    rels = []
    for m in rng:
        for q in rng:
            if m < q and q + 1 <= N:
                rels.append(Relation("lambda shuffle", (L(q), L(m)), (L(m), L(q + 1))))
    if flavor is Flavor.SYMMETRIC:
        rels += [Relation("involution", (S(m), S(m)), ()) for m in rng]
    for m in rng:
        for n in rng:
            if abs(m - n) >= 2:
                rels.append(Relation("far commutation", (S(m), S(n)), (S(n), S(m))))
        if m + 1 <= N:
            rels.append(Relation("braid", (S(m), S(m + 1), S(m)), (S(m + 1), S(m), S(m + 1))))
    for e in signs:
        for m in rng:
            for q in rng:
                if m < q and q + 1 <= N:
                    rels.append(Relation("sigma past lambda (m<q)", (S(q, e), L(m)), (L(m), S(q + 1, e))))
                if m > q + 1:
                    rels.append(Relation("sigma past lambda (m>q+1)", (S(q, e), L(m)), (L(m), S(q, e))))
            if m + 1 <= N:
                rels.append(Relation("sigma_m lambda_m", (S(m, e), L(m)), (L(m + 1), S(m, e), S(m + 1, e))))
                rels.append(Relation("sigma_m lambda_m+1", (S(m, e), L(m + 1)), (L(m), S(m + 1, e), S(m, e))))
    return rels


@dataclass
class PresentationReport:
    checked: int = 0
    failures: list[tuple[Relation, FractionTriple, FractionTriple]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_relation(rel: Relation, flavor: Flavor) -> tuple[bool, FractionTriple, FractionTriple]:
    a, b = evaluate(rel.lhs, flavor), evaluate(rel.rhs, flavor)
    return frac_eq(a, b), a, b


def verify_presentation(N: int, flavor: Flavor = Flavor.BRAID, workers: int = 1) -> PresentationReport:
    if N < 2:
        raise ValueError("N must be at least 2")
    rels = relations(N, flavor)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda r: check_relation(r, flavor), rels))
    rep = PresentationReport()
    for rel, (ok, a, b) in zip(rels, results):
        rep.checked += 1
        if ok:
            rep.lines.append(f"OK   {rel}")
        else:
            rep.failures.append((rel, a, b))
            rep.lines.append(f"FAIL {rel}    [{a}] vs [{b}]")
    return rep
