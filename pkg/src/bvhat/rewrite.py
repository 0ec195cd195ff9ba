"""String rewriting with rule schemas over infinite indexed alphabets.

A rule schema looks at a fixed-width window of letters and either declines
or returns a replacement.  Because the alphabets are infinite, local
confluence can only be checked on a bounded window of indices; the checker
reports that as bounded evidence.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

Letter = Hashable
Word = tuple


class FuelExhausted(RuntimeError):
    """Normalization ran past its step budget."""

    def __init__(self, partial: Word, steps: int):
        super().__init__(f"fuel exhausted after {steps} steps")
        self.partial = partial
        self.steps = steps


@dataclass(frozen=True)
class RuleSchema:
    name: str
    width: int
    apply: Callable[[tuple], tuple | None]

    def __call__(self, window: tuple) -> tuple | None:
        return self.apply(window)


@dataclass(frozen=True)
class RuleSystem:
    """Rules together with the bounded alphabet used for critical pairs."""

    name: str
    rules: tuple[RuleSchema, ...]
    alphabet: Callable[[int], Iterable[Letter]] = field(default=lambda bound: range(bound + 1))
    render: Callable[[Letter], str] = field(default=str)


@dataclass(frozen=True)
class NormalizationReport:
    result: Word
    steps: int
    strategy: str


def default_fuel(n: int) -> int:
    return max(1, 10 * n * n)


def _rules_of(rules: RuleSystem | Sequence[RuleSchema]) -> tuple[RuleSchema, ...]:
    return rules.rules if isinstance(rules, RuleSystem) else tuple(rules)


def redexes(word: Word, rules) -> Iterable[tuple[int, RuleSchema, tuple]]:
    """All ``(position, rule, replacement)`` applicable to ``word``."""
    for r in _rules_of(rules):
        for p in range(len(word) - r.width + 1):
            out = r(word[p : p + r.width])
            if out is not None:
                yield p, r, out


def _first_redex(word: Word, rules: tuple[RuleSchema, ...], positions) -> tuple[int, RuleSchema, tuple] | None:
    for p in positions:
        for r in rules:
            if p + r.width <= len(word):
                out = r(word[p : p + r.width])
                if out is not None:
                    return p, r, out
    return None


def normalize(word: Iterable[Letter], rules, strategy: str = "leftmost", fuel: int | None = None) -> NormalizationReport:
    """Rewrite until irreducible.  Strategy is ``leftmost`` or ``rightmost``."""
    w = tuple(word)
    rs = _rules_of(rules)
    if fuel is None:
        fuel = default_fuel(len(w))
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    steps = 0
    while True:
        order = range(len(w)) if strategy == "leftmost" else range(len(w) - 1, -1, -1)
        hit = _first_redex(w, rs, order)
        if hit is None:
            return NormalizationReport(w, steps, strategy)
        if steps >= fuel:
            raise FuelExhausted(w, steps)
        p, r, out = hit
        w = w[:p] + tuple(out) + w[p + r.width :]
        steps += 1


def rewrite_trace(word: Iterable[Letter], rules, strategy: str = "leftmost", fuel: int | None = None) -> list[Word]:
    """Every word visited by :func:`normalize`, starting with the input."""
    w = tuple(word)
    rs = _rules_of(rules)
    fuel = default_fuel(len(w)) if fuel is None else fuel
    trace = [w]
    while True:
        order = range(len(w)) if strategy == "leftmost" else range(len(w) - 1, -1, -1)
        hit = _first_redex(w, rs, order)
        if hit is None:
            return trace
        if len(trace) > fuel:
            raise FuelExhausted(w, len(trace) - 1)
        p, r, out = hit
        w = w[:p] + tuple(out) + w[p + r.width :]
        trace.append(w)


@dataclass(frozen=True)
class CriticalPair:
    peak: Word
    left: Word
    right: Word
    rules: tuple[str, str]


def critical_pairs(system: RuleSystem, index_bound: int) -> list[CriticalPair]:
    """Overlapping redex pairs on words over ``system.alphabet(index_bound)``.

    A pair is recorded when two distinct redexes overlap and together span
    the whole peak word.
    """
    rs = system.rules
    if not rs:
        return []
    letters = list(system.alphabet(index_bound))
    widest = max(r.width for r in rs)
    seen: set[tuple] = set()
    pairs: list[CriticalPair] = []
    for n in range(1, 2 * widest):
        for peak in itertools.product(letters, repeat=n):
            found = [(p, r, tuple(out)) for p, r, out in redexes(peak, rs)]
            for (p1, r1, o1), (p2, r2, o2) in itertools.combinations(found, 2):
                lo, hi = min(p1, p2), max(p1 + r1.width, p2 + r2.width)
                if lo != 0 or hi != n:
                    continue
                if p1 + r1.width <= p2 or p2 + r2.width <= p1:
                    continue
                left = peak[:p1] + o1 + peak[p1 + r1.width :]
                right = peak[:p2] + o2 + peak[p2 + r2.width :]
                key = (peak, frozenset((left, right)))
                if key in seen:
                    continue
                seen.add(key)
                pairs.append(CriticalPair(peak, left, right, (r1.name, r2.name)))
    return pairs


@dataclass(frozen=True)
class PairResult:
    pair: CriticalPair
    joined: bool
    join: Word | None
    steps: int
    note: str = ""


@dataclass
class ConfluenceReport:
    system: str
    index_bound: int
    results: list[PairResult]

    @property
    def ok(self) -> bool:
        return all(r.joined for r in self.results)

    @property
    def counterexample(self) -> PairResult | None:
        return next((r for r in self.results if not r.joined), None)

    def lines(self, render: Callable[[Letter], str] = str) -> list[str]:
        def w(word):
            return " ".join(render(x) for x in word) or "1"

        out = []
        for r in self.results:
            head = f"{w(r.pair.peak)} → {{{w(r.pair.left)}, {w(r.pair.right)}}}"
            if r.joined:
                out.append(f"{head} JOIN at {w(r.join)} ({r.steps})")
            else:
                out.append(f"{head} FAIL {r.note}".rstrip())
        return out


def check_local_confluence(system: RuleSystem, index_bound: int, fuel: int | None = None) -> ConfluenceReport:
    """Join every critical pair by normalizing both sides.

    Joining is decided by comparing normal forms, which is exact for
    terminating systems.  The verdict covers indices up to ``index_bound`` only.
    """
    results = []
    for cp in critical_pairs(system, index_bound):
        try:
            a = normalize(cp.left, system, fuel=fuel)
            b = normalize(cp.right, system, fuel=fuel)
        except FuelExhausted as exc:
            results.append(PairResult(cp, False, None, exc.steps, "fuel exhausted"))
            continue
        ok = a.result == b.result
        results.append(PairResult(cp, ok, a.result if ok else None, a.steps + b.steps))
    return ConfluenceReport(system.name, index_bound, results)


def translation_invariant(system: RuleSystem, bounds: Iterable[int], shift: Callable[[Word], Word]) -> bool:
    """Check that shifting every index of a peak by one preserves joinability.

    Peaks found at bound ``b`` are shifted and re-joined; ``True`` when the
    verdicts agree for every peak in every bound.
    """
    for b in bounds:
        for cp in critical_pairs(system, b):
            base = normalize(cp.left, system).result == normalize(cp.right, system).result
            sl, sr = shift(cp.left), shift(cp.right)
            moved = normalize(sl, system).result == normalize(sr, system).result
            if base != moved:
                return False
    return True


# -- the schemas used throughout the package --------------------------------


def _forest_rule(w: tuple) -> tuple | None:
    q, m = w
    return (m, q + 1) if m < q else None


def _hedge_rule(w: tuple) -> tuple | None:
    q, m = w
    return (m, q + 1) if m <= q else None


def _hedge_inverse_rule(w: tuple) -> tuple | None:
    m, q1 = w
    q = q1 - 1
    return (q, m) if 0 <= q and m <= q else None


FOREST_RULES = RuleSystem("forest", (RuleSchema("l_q l_m -> l_m l_(q+1), m<q", 2, _forest_rule),), render=lambda i: f"l{i}")
HEDGE_RULES = RuleSystem("hedge", (RuleSchema("n_q n_m -> n_m n_(q+1), m<=q", 2, _hedge_rule),), render=lambda i: f"n{i}")
HEDGE_INVERSE_RULES = RuleSystem(
    "hedge-inverse", (RuleSchema("n_m n_(q+1) -> n_q n_m, m<=q", 2, _hedge_inverse_rule),), render=lambda i: f"n{i}"
)
DELTA_RULES = RuleSystem("delta", (RuleSchema("d_q d_m -> d_m d_(q+1), m<=q", 2, _hedge_rule),), render=lambda i: f"d{i}")


def index_sum_measure(word: Sequence[int], top: int) -> int:
    """Termination measure for the ascending forest/hedge rules.

    Each step raises the index sum by exactly one, and no equivalent word
    of length ``n`` built from indices at most ``top`` has an index above
    ``top + n``; so ``n * (top + n) - sum`` is a natural number that drops
    at every step.
    """
    n = len(word)
    return n * (top + n) - sum(word)
