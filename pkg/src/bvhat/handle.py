"""Handle reduction for braid words.

A ``sigma_i``-handle is a subword ``s_i^e v s_i^-e`` where ``v`` contains
no ``s_i`` and no ``s_(i-1)``.  Reducing it deletes the ends and conjugates
each ``s_(i+1)^d`` in ``v`` to ``s_(i+1)^-e s_i^d s_(i+1)^e``.  Reducing the
handle whose right end comes first always reduces a permitted handle, and a
word represents the identity iff it reduces to the empty word.
"""

from __future__ import annotations

from collections.abc import Sequence


class HandleFuelExhausted(RuntimeError):
    pass


def _first_handle(w: list[int]) -> tuple[int, int] | None:
    # last_seen[g] = (position, sign) of the latest occurrence of generator g
    last: dict[int, tuple[int, int]] = {}
    for j, x in enumerate(w):
        g, s = abs(x) - 1, (1 if x > 0 else -1)
        prev = last.get(g)
        if prev is not None and prev[1] == -s:
            block = last.get(g - 1)
            if block is None or block[0] < prev[0]:
                return prev[0], j
        last[g] = (j, s)
    return None


def reduce_handles(word: Sequence[int], fuel: int = 10**7) -> tuple[int, ...]:
    w = list(word)
    steps = 0
    while True:
        h = _first_handle(w)
        if h is None:
            return tuple(w)
        steps += 1
        if steps > fuel:
            raise HandleFuelExhausted(f"handle reduction exceeded {fuel} steps")
        a, b = h
        i = abs(w[a]) - 1
        e = 1 if w[a] > 0 else -1
        mid: list[int] = []
        up = i + 2  # letter code of s_(i+1)
        for x in w[a + 1 : b]:
            if abs(x) == up:
                d = 1 if x > 0 else -1
                mid.extend((-e * up, d * (i + 1), e * up))
            else:
                mid.append(x)
        w[a : b + 1] = mid


def is_trivial(word: Sequence[int]) -> bool:
    return not reduce_handles(word)
