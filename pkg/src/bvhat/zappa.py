"""Mutual actions of braids and forests, and the monoids F x| B_inf, F x| S_inf.

A monoid element ``(F, b)`` is a forest with the braid ``b`` hanging from
its leaves.  Braid words act on forest words one letter at a time, which
is the same thing as normalizing the mixed word ``b u`` under the
interleaving rules ``s l -> (s . l)(s ^ l)``.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .braid import (
    BraidWord,
    Flavor,
    braid_eq,
    delete_strand,
    delete_strand_tracked,
    free_reduce,
    perm_images,
    transposition,
)
from .forest import TRIVIAL, Forest, forest_mul, forest_to_word, lam, strip_right_caret, word_to_forest
from .rewrite import RuleSchema, RuleSystem, normalize


def split_letter(x: int, m: int) -> tuple[int, ...]:
    """``(sigma_q^e)^(lambda_m)`` for the letter ``x = e (q+1)``."""
    q = abs(x) - 1
    s = 1 if x > 0 else -1
    if m < q:
        return (s * (q + 2),)
    if m == q:
        return (x, s * (q + 2))
    if m == q + 1:
        return (s * (q + 2), x)
    return (x,)


def act_on_generator(letters: Sequence[int], m: int) -> tuple[int, tuple[int, ...]]:
    """``(j, b^(lambda_m))`` where ``b . lambda_m = lambda_j``."""
    parts: list[tuple[int, ...]] = []
    for x in reversed(letters):
        parts.append(split_letter(x, m))
        m = transposition(abs(x) - 1, m)
    return m, tuple(y for part in reversed(parts) for y in part)


def act_on_word(letters: Sequence[int], word: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(b . u, b ^ u)`` for a braid word ``b`` and a forest word ``u``."""
    out = []
    b = tuple(letters)
    for m in word:
        j, b = act_on_generator(b, m)
        out.append(j)
    return tuple(out), b


def act_on_forest(beta: BraidWord, F: Forest) -> Forest:
    """``beta . F``."""
    word, _ = act_on_word(beta.letters, forest_to_word(F))
    return word_to_forest(word)


def act_on_braid(beta: BraidWord, F: Forest) -> BraidWord:
    """``beta ^ F``."""
    _, b = act_on_word(beta.letters, forest_to_word(F))
    return BraidWord(b, beta.flavor)


def split(beta: BraidWord, i: int) -> BraidWord:
    """``beta ^ lambda_i``: the strand with bottom ``i`` doubled."""
    return BraidWord(act_on_generator(beta.letters, i)[1], beta.flavor)


def try_unsplit(beta: BraidWord, i: int) -> BraidWord | None:
    """The braid ``b`` with ``split(b, i) == beta``, if the bottoms ``i, i+1`` run parallel."""
    p = perm_images(beta.letters, i + 2)
    t = p[i]
    if p[i + 1] != t + 1:
        return None
    cand = delete_strand(beta, t).free_reduce()
    if braid_eq(split(cand, i), beta):
        return cand
    return None


# -- the monoid ---------------------------------------------------------------


@dataclass(frozen=True)
class MonoidElt:
    forest: Forest
    braid: BraidWord

    @property
    def flavor(self) -> Flavor:
        return self.braid.flavor

    def __mul__(self, other: MonoidElt) -> MonoidElt:
        return mono_mul(self, other)

    def __str__(self) -> str:
        from .textio import format_monoid

        return format_monoid(self)


def mono(forest: Forest | Sequence[int] = TRIVIAL, braid: BraidWord | Sequence[int] = (), flavor: Flavor = Flavor.BRAID) -> MonoidElt:
    if not isinstance(forest, Forest):
        forest = word_to_forest(forest)
    if not isinstance(braid, BraidWord):
        braid = BraidWord(tuple(braid), flavor)
    return MonoidElt(forest, braid)


def mono_identity(flavor: Flavor = Flavor.BRAID) -> MonoidElt:
    return MonoidElt(TRIVIAL, BraidWord((), flavor))


def mono_mul(x: MonoidElt, y: MonoidElt) -> MonoidElt:
    """``(u, a)(v, b) = (u (a . v), a^v b)``."""
    if x.flavor is not y.flavor:
        raise ValueError("monoid elements of different flavors")
    moved, tail = act_on_word(x.braid.letters, forest_to_word(y.forest))
    forest = forest_mul(x.forest, word_to_forest(moved))
    braid = free_reduce(tail + y.braid.letters, x.flavor)
    return MonoidElt(forest, BraidWord(braid, x.flavor))


def mono_eq(x: MonoidElt, y: MonoidElt) -> bool:
    return x.forest == y.forest and braid_eq(x.braid, y.braid)


def strip_generator(x: MonoidElt, i: int) -> MonoidElt | None:
    """``x'`` with ``x = x' lambda_i``, or ``None``."""
    prev = try_unsplit(x.braid, i)
    if prev is None:
        return None
    j, _ = act_on_generator(prev.letters, i)
    F = strip_right_caret(x.forest, j)
    if F is None:
        return None
    return MonoidElt(F, prev)


def mono_gcrf(x: MonoidElt, y: MonoidElt) -> tuple[MonoidElt, MonoidElt, MonoidElt]:
    """``(xbar, ybar, r)`` with ``x = xbar r``, ``y = ybar r`` and ``r`` greatest.

    The braid of ``y`` is moved into ``r`` first (braids are units), then
    common ``lambda_i`` factors are stripped from the right.
    """
    fl = x.flavor
    tail = y.braid
    x = MonoidElt(x.forest, BraidWord(free_reduce((x.braid * tail.inverse()).letters, fl), fl))
    y = MonoidElt(y.forest, BraidWord((), fl))
    stripped: list[int] = []
    while True:
        for i in y.forest.exposed_carets():
            xs, ys = strip_generator(x, i), strip_generator(y, i)
            if xs is not None and ys is not None:
                x, y = xs, ys
                stripped.append(i)
                break
        else:
            break
    r = MonoidElt(word_to_forest(reversed(stripped)), tail)
    return x, y, r


# -- interleaving rewrite system ---------------------------------------------


def _interleave(window: tuple) -> tuple | None:
    (k1, a), (k2, b) = window
    if k1 != "s" or k2 != "l":
        return None
    j, out = act_on_generator((a,), b)
    return (("l", j),) + tuple(("s", y) for y in out)


INTERLEAVING_RULES = RuleSystem(
    "interleave",
    (RuleSchema("s l -> (s.l)(s^l)", 2, _interleave),),
    alphabet=lambda bound: [("l", i) for i in range(bound + 1)]
    + [("s", s * (i + 1)) for i in range(bound + 1) for s in (1, -1)],
    render=lambda x: f"l{x[1]}" if x[0] == "l" else (f"s{abs(x[1]) - 1}" + ("'" if x[1] < 0 else "")),
)


def factor_mixed(beta: BraidWord, word: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Normalize the mixed word ``beta u`` under the interleaving rules."""
    mixed = tuple(("s", x) for x in beta.letters) + tuple(("l", i) for i in word)
    res = normalize(mixed, INTERLEAVING_RULES, fuel=10 * (len(mixed) + 1) ** 3).result
    ls = tuple(v for k, v in res if k == "l")
    ss = tuple(v for k, v in res if k == "s")
    return ls, ss


# -- axiom checks ------------------------------------------------------------


@dataclass
class AxiomReport:
    checked: int
    failures: list[tuple[str, tuple]]

    @property
    def ok(self) -> bool:
        return not self.failures


def random_braid(rng: random.Random, max_len: int, width: int, flavor: Flavor = Flavor.BRAID) -> BraidWord:
    n = rng.randint(0, max_len)
    return BraidWord(tuple(rng.choice((1, -1)) * rng.randint(1, max(1, width - 1)) for _ in range(n)), flavor)


def random_forest_word(rng: random.Random, max_len: int, max_index: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_index) for _ in range(rng.randint(0, max_len)))


def _beq(u: BraidWord | Sequence[int], v: BraidWord | Sequence[int], flavor: Flavor) -> bool:
    if not isinstance(u, BraidWord):
        u = BraidWord(tuple(u), flavor)
    if not isinstance(v, BraidWord):
        v = BraidWord(tuple(v), flavor)
    return braid_eq(u, v)


def _feq(u: Sequence[int], v: Sequence[int]) -> bool:
    return word_to_forest(u) == word_to_forest(v)


def axiom_holds(name: str, a: BraidWord, b: BraidWord, u: Sequence[int], v: Sequence[int]) -> bool:
    """Evaluate one of the identities (a)-(h) on words."""
    fl = a.flavor
    A, B = a.letters, b.letters
    if name == "a":
        return _feq(act_on_word(A + B, u)[0], act_on_word(A, act_on_word(B, u)[0])[0])
    if name == "b":
        bu = act_on_word(B, u)[0]
        return _beq(act_on_word(A + B, u)[1], act_on_word(A, bu)[1] + act_on_word(B, u)[1], fl)
    if name == "c":
        au, a_u = act_on_word(A, u)
        return _feq(act_on_word(A, tuple(u) + tuple(v))[0], au + act_on_word(a_u, v)[0])
    if name == "d":
        a_u = act_on_word(A, u)[1]
        return _beq(act_on_word(A, tuple(u) + tuple(v))[1], act_on_word(a_u, v)[1], fl)
    if name == "e":
        return _beq(act_on_word(A, ())[1], A, fl)
    if name == "f":
        return _feq(act_on_word((), u)[0], u)
    if name == "g":
        return act_on_word(A, ())[0] == ()
    if name == "h":
        return act_on_word((), u)[1] == ()
    raise ValueError(name)


AXIOMS = "abcdefgh"


def check_zappa_axioms(samples: int, bound: int, flavor: Flavor = Flavor.BRAID, seed: int = 0, width: int = 8) -> AxiomReport:
    """Property-check (a)-(h) on random words of length at most ``bound``."""
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        a = random_braid(rng, bound, width, flavor)
        b = random_braid(rng, bound, width, flavor)
        u = random_forest_word(rng, bound, width)
        v = random_forest_word(rng, bound, width)
        for name in AXIOMS:
            if not axiom_holds(name, a, b, u, v):
                failures.append((name, (a, b, u, v)))
    return AxiomReport(samples * len(AXIOMS), failures)


def coaction_identities(q: int, m: int, flavor: Flavor = Flavor.BRAID) -> tuple[bool, bool]:
    """The two identities relating deletion and splitting on ``sigma_q``, ``lambda_m``."""
    s = BraidWord((q + 1,), flavor)
    t = transposition(q, m)
    split_s = split(s, m)
    rest, residual = delete_strand_tracked(split_s, t)
    return braid_eq(rest, s), residual == m


def mono_to_json(x: MonoidElt) -> dict:
    from .forest import forest_to_json

    return {"forest": forest_to_json(x.forest), "braid": list(x.braid.letters), "flavor": x.flavor.value}


def mono_from_json(data: dict) -> MonoidElt:
    from .forest import forest_from_json

    fl = Flavor.parse(data.get("flavor", "B"))
    return MonoidElt(forest_from_json(data["forest"]), BraidWord(tuple(data.get("braid", ())), fl))
