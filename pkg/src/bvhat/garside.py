"""Left-greedy (Garside) normal form in the finite braid group ``B_n``.

Simple braids are stored as permutation tuples ``p`` of ``range(n)``; the
simple braid with positive word ``s_{i1} ... s_{ik}`` has permutation
``s_{i1} o ... o s_{ik}``, matching :func:`bvhat.braid.perm_of`.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

Perm = tuple[int, ...]


@lru_cache(maxsize=None)
def identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def right_mul_gen(p: Perm, i: int) -> Perm:
    """``p o s_i``."""
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def left_mul_gen(p: Perm, i: int) -> Perm:
    """``s_i o p``."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


def tau(p: Perm) -> Perm:
    """Conjugation by the half twist."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def right_descents(p: Perm) -> set[int]:
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def left_descents(p: Perm) -> set[int]:
    inv = [0] * len(p)
    for j, x in enumerate(p):
        inv[x] = j
    return {i for i in range(len(p) - 1) if inv[i] > inv[i + 1]}


def reduced_word(p: Perm) -> tuple[int, ...]:
    """Lexicographically least reduced word (bubble sort, smallest descent first)."""
    q = list(p)
    rec = []
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                rec.append(i)
                break
        else:
            return tuple(reversed(rec))


def _make_left_weighted(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    while True:
        movable = left_descents(b) - right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = right_mul_gen(a, i)
        b = left_mul_gen(b, i)


def left_normal_form(letters: Sequence[int], n: int) -> tuple[int, tuple[Perm, ...]]:
    """Normal form ``Delta^inf x_1 ... x_k`` of a signed word in ``B_n``.

    Letters are ``+(i+1)`` for ``sigma_i`` and ``-(i+1)`` for its inverse.
    """
    if n < 1:
        raise ValueError("need at least one strand")
    ident, D = identity(n), delta(n)
    inf = 0
    factors: list[Perm] = []
    for x in letters:
        i = abs(x) - 1
        if i > n - 2:
            raise ValueError(f"generator sigma_{i} not in B_{n}")
        if x > 0:
            factors.append(right_mul_gen(ident, i))
        else:
            factors = [tau(f) for f in factors]
            inf -= 1
            factors.append(right_mul_gen(D, i))
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b = _make_left_weighted(factors[k], factors[k + 1])
            if a != factors[k]:
                factors[k], factors[k + 1] = a, b
                changed = True
    lo = 0
    while lo < len(factors) and factors[lo] == D:
        lo += 1
    hi = len(factors)
    while hi > lo and factors[hi - 1] == ident:
        hi -= 1
    return inf + lo, tuple(factors[lo:hi])


def normal_form_word(inf: int, factors: Sequence[Perm], n: int) -> tuple[int, ...]:
    """A signed word spelling out a normal form."""
    dw = tuple(i + 1 for i in reduced_word(delta(n)))
    if inf >= 0:
        out = list(dw * inf)
    else:
        out = list(tuple(-x for x in reversed(dw)) * (-inf))
    for f in factors:
        out.extend(i + 1 for i in reduced_word(f))
    return tuple(out)
