"""Groups of right fractions of the forest-braid monoids.

An element is stored as a triple ``(F, a, G)`` standing for ``(F a) G^-1``.
:func:`reduce` strips common right ``lambda_i`` factors until none is left,
which yields the unique reduced triple; its braid is then rewritten to a
canonical word so that equal elements give identical triples.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace

from .braid import BraidWord, Flavor, braid_eq, canonical_word, free_reduce
from .forest import TRIVIAL, Forest, forest_to_word, forest_union, left_divide, word_to_forest
from .zappa import MonoidElt, act_on_generator, act_on_word, strip_generator


@dataclass(frozen=True)
class FractionTriple:
    numerator: Forest
    braid: BraidWord
    denominator: Forest
    normalized: bool = False

    @property
    def flavor(self) -> Flavor:
        return self.braid.flavor

    def __mul__(self, other: FractionTriple) -> FractionTriple:
        return frac_mul(self, other)

    def __invert__(self) -> FractionTriple:
        return frac_inv(self)

    def __str__(self) -> str:
        from .textio import format_triple

        return format_triple(self)

    def key(self) -> tuple:
        """Hashable identity of the stored triple (not of the group element)."""
        return (self.numerator, self.braid.letters, self.denominator, self.flavor)


def identity(flavor: Flavor = Flavor.BRAID) -> FractionTriple:
    return FractionTriple(TRIVIAL, BraidWord((), flavor), TRIVIAL, True)


def triple(F: Forest | Sequence[int], braid: BraidWord | Sequence[int], G: Forest | Sequence[int], flavor: Flavor = Flavor.BRAID) -> FractionTriple:
    if not isinstance(F, Forest):
        F = word_to_forest(F)
    if not isinstance(G, Forest):
        G = word_to_forest(G)
    if not isinstance(braid, BraidWord):
        braid = BraidWord(tuple(braid), flavor)
    return FractionTriple(F, braid, G)


def frac_new(x: MonoidElt, y: MonoidElt) -> FractionTriple:
    """``x y^-1`` with ``x = (F, b)``, ``y = (G, c)`` folded to ``(F, b c^-1, G)``."""
    if x.flavor is not y.flavor:
        raise ValueError("monoid elements of different flavors")
    braid = BraidWord(free_reduce(x.braid.letters + y.braid.inverse().letters, x.flavor), x.flavor)
    return FractionTriple(x.forest, braid, y.forest)


StripPolicy = Callable[[list[int]], int]


def lowest(cands: list[int]) -> int:
    return cands[0]


def highest(cands: list[int]) -> int:
    return cands[-1]


def shuffled(seed: int) -> StripPolicy:
    rng = random.Random(seed)
    return lambda cands: rng.choice(cands)


def strip_candidates(t: FractionTriple) -> list[int]:
    """Indices ``i`` at which a common ``lambda_i`` can be stripped."""
    num = MonoidElt(t.numerator, t.braid)
    return [i for i in t.denominator.exposed_carets() if strip_generator(num, i) is not None]


def reduce(t: FractionTriple, policy: StripPolicy = lowest) -> FractionTriple:
    """The normal form of ``t``; ``policy`` picks which strippable index goes first."""
    if t.normalized:
        return t
    num = MonoidElt(t.numerator, t.braid.free_reduce())
    den = t.denominator
    while True:
        cands = []
        for i in den.exposed_carets():
            stripped = strip_generator(num, i)
            if stripped is not None:
                cands.append((i, stripped))
        if not cands:
            break
        i = policy([c[0] for c in cands])
        num = dict(cands)[i]
        den = _strip(den, i)
    return FractionTriple(num.forest, canonical_word(num.braid), den, True)


def _strip(F: Forest, i: int) -> Forest:
    from .forest import strip_right_caret

    out = strip_right_caret(F, i)
    assert out is not None
    return out


def frac_inv(a: FractionTriple) -> FractionTriple:
    """``(F b G^-1)^-1 = G b^-1 F^-1``."""
    return FractionTriple(a.denominator, a.braid.inverse(), a.numerator)


def frac_mul(a: FractionTriple, b: FractionTriple) -> FractionTriple:
    """Product through the common right multiple ``G1 u F2`` of the inner forests."""
    if a.flavor is not b.flavor:
        raise ValueError("fractions of different flavors")
    fl = a.flavor
    U = forest_union(a.denominator, b.numerator)
    X = left_divide(a.denominator, U)
    Y = left_divide(b.numerator, U)
    # a b = F1 a1 X Y^-1 a2 G2^-1, and Y^-1 a2 = ((a2^-1)^Y)^-1 (a2^-1 . Y)^-1
    xs, a1x = act_on_word(a.braid.letters, forest_to_word(X))
    inv2 = b.braid.inverse().letters
    ys, a2y = act_on_word(inv2, forest_to_word(Y))
    num = a.numerator * word_to_forest(xs)
    den = b.denominator * word_to_forest(ys)
    mid = free_reduce(a1x + tuple(-x for x in reversed(a2y)), fl)
    return reduce(FractionTriple(num, BraidWord(mid, fl), den))


def frac_eq(a: FractionTriple, b: FractionTriple) -> bool:
    ra, rb = reduce(a), reduce(b)
    return ra.numerator == rb.numerator and ra.denominator == rb.denominator and braid_eq(ra.braid, rb.braid)


def frac_pow(a: FractionTriple, n: int) -> FractionTriple:
    out = identity(a.flavor)
    base = a if n >= 0 else frac_inv(a)
    for _ in range(abs(n)):
        out = frac_mul(out, base)
    return out


def embed_forest(F: Forest, flavor: Flavor = Flavor.BRAID) -> FractionTriple:
    return reduce(FractionTriple(F, BraidWord((), flavor), TRIVIAL))


def embed_braid(beta: BraidWord) -> FractionTriple:
    return reduce(FractionTriple(TRIVIAL, beta, TRIVIAL))


def embed_mono(x: MonoidElt) -> FractionTriple:
    return reduce(FractionTriple(x.forest, x.braid, TRIVIAL))


def fatten(t: FractionTriple, J: Forest, gamma: BraidWord) -> FractionTriple:
    """The representative ``(F a J g)(G J g)^-1`` of the same element."""
    js, aj = act_on_word(t.braid.letters, forest_to_word(J))
    num = t.numerator * word_to_forest(js)
    den = t.denominator * J
    # (G J g)^-1 = g^-1 (G J)^-1, so the middle braid becomes a^J g g^-1 = a^J
    return FractionTriple(num, BraidWord(aj + gamma.letters + gamma.inverse().letters, t.flavor), den)


def project_to_V(t: FractionTriple) -> FractionTriple:
    """Image under ``B_inf -> S_inf``."""
    if t.flavor is not Flavor.BRAID:
        raise ValueError("projection expects a braided element")
    return reduce(replace(t, braid=t.braid.with_flavor(Flavor.SYMMETRIC), normalized=False))


def lift_to_BV(t: FractionTriple) -> FractionTriple:
    """Same word read as a braid (a set-theoretic section of the projection)."""
    return replace(t, braid=t.braid.with_flavor(Flavor.BRAID), normalized=False)


def generator(kind: str, i: int, sign: int = 1, flavor: Flavor = Flavor.BRAID) -> FractionTriple:
    """``lambda_i`` (``kind='l'``) or ``sigma_i^sign`` (``kind='s'``) as a group element."""
    if kind == "l":
        return embed_forest(word_to_forest([i]), flavor)
    return embed_braid(BraidWord((sign * (i + 1),), flavor))


def evaluate(word: Sequence[tuple[str, int, int]], flavor: Flavor = Flavor.BRAID) -> FractionTriple:
    """Product of generators ``(kind, index, sign)``; ``sign=-1`` on ``l`` means ``lambda^-1``."""
    out = identity(flavor)
    for kind, i, s in word:
        g = generator(kind, i, s if kind == "s" else 1, flavor)
        if kind == "l" and s < 0:
            g = frac_inv(g)
        out = frac_mul(out, g)
    return out


def random_triple(rng: random.Random, flavor: Flavor = Flavor.BRAID, max_carets: int = 3, max_index: int = 3, braid_len: int = 4) -> FractionTriple:
    """A random element with forests of at most ``max_carets`` carets."""
    F = word_to_forest(rng.randint(0, max_index) for _ in range(rng.randint(0, max_carets)))
    G = word_to_forest(rng.randint(0, max_index) for _ in range(rng.randint(0, max_carets)))
    width = max(F.leaf_span, G.leaf_span, 2)
    n = rng.randint(0, braid_len)
    braid = BraidWord(tuple(rng.choice((1, -1)) * rng.randint(1, width - 1) for _ in range(n)), flavor)
    return FractionTriple(F, braid, G)


def triple_to_json(t: FractionTriple) -> dict:
    from .forest import forest_to_json

    return {
        "F": forest_to_json(t.numerator),
        "alpha": list(t.braid.letters),
        "G": forest_to_json(t.denominator),
        "flavor": t.flavor.value,
        "normalized": t.normalized,
    }


def triple_from_json(data: dict) -> FractionTriple:
    from .forest import forest_from_json

    fl = Flavor.parse(data.get("flavor", "B"))
    t = FractionTriple(forest_from_json(data["F"]), BraidWord(tuple(data.get("alpha", ())), fl), forest_from_json(data["G"]))
    return reduce(t) if data.get("normalized") else t
