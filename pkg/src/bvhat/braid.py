"""Words in the infinite braid group and the infinite symmetric group.

A braid word is a tuple of signed letters: ``+(i+1)`` is ``sigma_i`` and
``-(i+1)`` its inverse.  Words read left to right stack top to bottom.

The permutation of a word ``w = a_1 ... a_n`` is the composite
``a_1 o a_2 o ... o a_n`` of transpositions; ``perm_of(w)(j)`` is the top
position of the strand whose bottom is ``j``.  This is the order for which
``w . lambda_j = lambda_{w(j)}`` holds for the extended action.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from . import garside, handle
from .rewrite import DELTA_RULES, normalize


class Flavor(str, enum.Enum):
    BRAID = "B"
    SYMMETRIC = "S"

    @classmethod
    def parse(cls, s: str | Flavor) -> Flavor:
        if isinstance(s, Flavor):
            return s
        return {"B": cls.BRAID, "S": cls.SYMMETRIC}[s.upper()]


def _letter(x: int) -> int:
    if not isinstance(x, int) or x == 0:
        raise ValueError(f"bad braid letter {x!r}")
    return x


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...] = ()
    flavor: Flavor = Flavor.BRAID

    def __post_init__(self):
        letters = tuple(_letter(x) for x in self.letters)
        if self.flavor is Flavor.SYMMETRIC:
            letters = tuple(abs(x) for x in letters)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]], flavor: Flavor = Flavor.BRAID) -> BraidWord:
        """Build from ``(index, sign)`` pairs."""
        return cls(tuple(s * (i + 1) for i, s in pairs), flavor)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _same_flavor(self, other)
        return BraidWord(self.letters + other.letters, self.flavor)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-x for x in reversed(self.letters)), self.flavor)

    @property
    def width(self) -> int:
        """Strands that the word can move: max index + 2 (1 when empty)."""
        return max((abs(x) for x in self.letters), default=0) + 1

    def with_flavor(self, flavor: Flavor) -> BraidWord:
        return BraidWord(self.letters, flavor)

    def free_reduce(self) -> BraidWord:
        return BraidWord(free_reduce(self.letters, self.flavor), self.flavor)

    def __str__(self) -> str:
        return format_braid(self)


def _same_flavor(*ws: BraidWord) -> None:
    if len({w.flavor for w in ws}) > 1:
        raise ValueError("braid words of different flavors")


def free_reduce(letters: Sequence[int], flavor: Flavor = Flavor.BRAID) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        cancel = (-x) if flavor is Flavor.BRAID else x
        if out and out[-1] == cancel:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def sigma(i: int, sign: int = 1, flavor: Flavor = Flavor.BRAID) -> BraidWord:
    return BraidWord((sign * (i + 1),), flavor)


# -- permutations -----------------------------------------------------------


class Perm:
    """Finitely supported bijection of ``N``; ``images[j]`` is the image of ``j``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int] = ()):
        imgs = list(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("not a permutation")
        while imgs and imgs[-1] == len(imgs) - 1:
            imgs.pop()
        self.images = tuple(imgs)

    def __call__(self, j: int) -> int:
        return self.images[j] if j < len(self.images) else j

    def __mul__(self, other: Perm) -> Perm:
        """Composition: ``(p * q)(j) = p(q(j))``."""
        n = max(len(self.images), len(other.images))
        return Perm([self(other(j)) for j in range(n)])

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for j, x in enumerate(self.images):
            inv[x] = j
        return Perm(inv)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        moved = {j: x for j, x in enumerate(self.images) if j != x}
        return f"Perm({moved})"

    @property
    def support_end(self) -> int:
        return len(self.images)

    def as_mapping(self) -> Mapping[int, int]:
        return {j: x for j, x in enumerate(self.images) if j != x}


def transposition(m: int, j: int) -> int:
    """Image of ``j`` under the transposition ``sigma_m``."""
    if j == m:
        return m + 1
    if j == m + 1:
        return m
    return j


def perm_images(letters: Sequence[int], n: int | None = None) -> list[int]:
    width = max((abs(x) for x in letters), default=0) + 1
    p = list(range(max(width, n or 0)))
    for x in letters:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return p


def perm_of(w: BraidWord | Sequence[int]) -> Perm:
    letters = w.letters if isinstance(w, BraidWord) else w
    return Perm(perm_images(letters))


# -- equality -------------------------------------------------------------


def canonical_form(w: BraidWord, strands: int | None = None, backend: str = "garside"):
    """Canonical value of ``w`` inside ``B_strands`` (default: its width).

    Symmetric words are represented by their permutation.
    """
    if w.flavor is Flavor.SYMMETRIC:
        return perm_of(w)
    if backend != "garside":
        raise ValueError("only the garside backend produces canonical values")
    n = strands or w.width
    inf, factors = garside.left_normal_form(w.letters, n)
    return n, inf, factors


def garside_eq(u: Sequence[int], v: Sequence[int]) -> bool:
    n = max((abs(x) for x in (*u, *v)), default=0) + 1
    return garside.left_normal_form(u, n) == garside.left_normal_form(v, n)


def handle_eq(u: Sequence[int], v: Sequence[int]) -> bool:
    return handle.is_trivial(tuple(u) + tuple(-x for x in reversed(v)))


_BACKENDS = {"garside": garside_eq, "handle": handle_eq}


def braid_eq(u: BraidWord, v: BraidWord, backend: str = "handle") -> bool:
    """Equality in ``B_inf`` (or ``S_inf`` for symmetric words)."""
    _same_flavor(u, v)
    if backend not in _BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if u.flavor is Flavor.SYMMETRIC:
        return perm_of(u) == perm_of(v)
    a, b = free_reduce(u.letters), free_reduce(v.letters)
    if a == b:
        return True
    if perm_of(a) != perm_of(b):
        return False
    return _BACKENDS[backend](a, b)


# -- deletion of strands ----------------------------------------------------


def delete_letter(q: int, x: int) -> tuple[tuple[int, ...], int]:
    """Push ``delta_q`` through one letter: ``(emitted letters, new index)``."""
    m = abs(x) - 1
    s = 1 if x > 0 else -1
    if q < m:
        out: tuple[int, ...] = (s * m,)
    elif q in (m, m + 1):
        out = ()
    else:
        out = (x,)
    return out, transposition(m, q)


def delete_strand_tracked(w: BraidWord, q: int) -> tuple[BraidWord, int]:
    """Delete the strand with top ``q``; also return the residual deletion index."""
    out: list[int] = []
    for x in w.letters:
        emitted, q = delete_letter(q, x)
        out.extend(emitted)
    return BraidWord(tuple(out), w.flavor), q


def delete_strand(w: BraidWord, q: int) -> BraidWord:
    return delete_strand_tracked(w, q)[0]


def delete_strand_steps(w: BraidWord, q: int) -> list[tuple[BraidWord, int, BraidWord]]:
    """Each stage ``(emitted, delta index, remaining word)`` of pushing ``delta_q`` through."""
    stages = [(BraidWord((), w.flavor), q, w)]
    out: list[int] = []
    for k, x in enumerate(w.letters):
        emitted, q = delete_letter(q, x)
        out.extend(emitted)
        stages.append((BraidWord(tuple(out), w.flavor), q, BraidWord(w.letters[k + 1 :], w.flavor)))
    return stages


def restrict(w: BraidWord, k: int) -> BraidWord:
    """Delete every strand with top above ``k``; the result lies in ``B_(k+1)``."""
    for q in range(w.width - 1, k, -1):
        w = delete_strand(w, q)
    return w


def in_Bk(w: BraidWord, k: int) -> bool:
    """Membership in the standard copy of ``B_(k+1)`` (or ``S_(k+1)``)."""
    if k < 0:
        raise ValueError("k must be a natural number")
    if w.flavor is Flavor.SYMMETRIC:
        return perm_of(w).support_end <= k + 1
    if w.width <= k + 1:
        return True
    return braid_eq(w, restrict(w, k))


def min_strands(w: BraidWord) -> int:
    """Smallest ``n`` with ``w`` in ``B_n``."""
    k = max(perm_of(w).support_end - 1, 0)
    while not in_Bk(w, k):
        k += 1
    return k + 1


@lru_cache(maxsize=65536)
def _canonical_letters(letters: tuple[int, ...], flavor: Flavor) -> tuple[int, ...]:
    w = BraidWord(letters, flavor)
    if flavor is Flavor.SYMMETRIC:
        return tuple(i + 1 for i in garside.reduced_word(tuple(perm_images(letters))))
    n = min_strands(w)
    inf, factors = garside.left_normal_form(restrict(w, n - 1).letters, n)
    return free_reduce(garside.normal_form_word(inf, factors, n))


def canonical_word(w: BraidWord) -> BraidWord:
    """A word depending only on the element ``w`` represents.

    Braids: the Garside normal form spelled out in the smallest ``B_n``
    containing the element.  Permutations: the least reduced word.
    """
    return BraidWord(_canonical_letters(free_reduce(w.letters, w.flavor), w.flavor), w.flavor)


def delta_normalize(d: Iterable[int], fuel: int | None = None) -> tuple[int, ...]:
    return normalize(tuple(d), DELTA_RULES, fuel=fuel).result


# -- text and JSON --------------------------------------------------------


def format_letter(x: int) -> str:
    return f"s{abs(x) - 1}" + ("'" if x < 0 else "")


def format_braid(w: BraidWord) -> str:
    return " ".join(format_letter(x) for x in w.letters) or "1"


def braid_to_json(w: BraidWord) -> list[int]:
    return list(w.letters)


def braid_from_json(data: Sequence[int], flavor: Flavor = Flavor.BRAID) -> BraidWord:
    return BraidWord(tuple(int(x) for x in data), flavor)
