"""Binary forests under leaf-to-root grafting.

A tree is a finite, prefix-closed, sibling-complete set of addresses over
``{0,1}`` (the root is ``""``).  A forest is a sequence of trees indexed by
``N`` in which all but finitely many trees are trivial; only non-trivial
trees are stored.  Leaves are numbered globally: left to right inside a tree,
trees in index order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

TRIVIAL_TREE: frozenset[str] = frozenset({""})


def _check_tree(nodes: frozenset[str]) -> None:
    if "" not in nodes:
        raise ValueError("tree is missing its root")
    for a in nodes:
        if a and (a[:-1] not in nodes):
            raise ValueError(f"address {a!r} has no parent")
        if a and (a[:-1] + ("1" if a[-1] == "0" else "0")) not in nodes:
            raise ValueError(f"address {a!r} has no sibling")
        if set(a) - {"0", "1"}:
            raise ValueError(f"bad address {a!r}")


def tree_leaves(nodes: frozenset[str]) -> tuple[str, ...]:
    """Leaves of a tree in left-to-right order."""
    return tuple(sorted(a for a in nodes if a + "0" not in nodes))


def subtree(nodes: frozenset[str], at: str) -> frozenset[str]:
    n = len(at)
    return frozenset(a[n:] for a in nodes if a.startswith(at))


class Forest:
    """An element of the forest monoid.  Immutable."""

    def __init__(self, trees: Mapping[int, Iterable[str]] | None = None, *, check: bool = True):
        clean: dict[int, frozenset[str]] = {}
        for i, nodes in (trees or {}).items():
            if i < 0:
                raise ValueError("tree index must be a natural number")
            fs = frozenset(nodes)
            if check:
                _check_tree(fs)
            if len(fs) > 1:
                clean[int(i)] = fs
        self._trees = dict(sorted(clean.items()))

    # -- basic protocol -------------------------------------------------

    @property
    def trees(self) -> Mapping[int, frozenset[str]]:
        return self._trees

    def tree(self, i: int) -> frozenset[str]:
        return self._trees.get(i, TRIVIAL_TREE)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self._trees == other._trees

    def __hash__(self) -> int:
        return hash(tuple((i, tuple(sorted(t))) for i, t in self._trees.items()))

    def __repr__(self) -> str:
        return f"Forest({format_forest(self)})"

    def __mul__(self, other: Forest) -> Forest:
        return forest_mul(self, other)

    def is_trivial(self) -> bool:
        return not self._trees

    @cached_property
    def _leaf_lists(self) -> dict[int, tuple[str, ...]]:
        return {i: tree_leaves(t) for i, t in self._trees.items()}

    @cached_property
    def length(self) -> int:
        """Number of carets."""
        return sum((len(t) - 1) // 2 for t in self._trees.values())

    @cached_property
    def leaf_span(self) -> int:
        """Global number of the first leaf after the last non-trivial tree."""
        if not self._trees:
            return 0
        last = max(self._trees)
        return last + 1 + sum(len(v) - 1 for v in self._leaf_lists.values())

    def first_leaf(self, t: int) -> int:
        """Global number of the leftmost leaf of tree ``t``."""
        return t + sum(len(v) - 1 for i, v in self._leaf_lists.items() if i < t)

    def locate_leaf(self, n: int) -> tuple[int, str]:
        """Return ``(tree index, address)`` of global leaf ``n``."""
        extra = 0
        for t, leaves in self._leaf_lists.items():
            start = t + extra
            if n < start:
                break
            if n < start + len(leaves):
                return t, leaves[n - start]
            extra += len(leaves) - 1
        return n - extra, ""

    def leaves(self, upto: int | None = None) -> Iterator[tuple[int, str]]:
        """Yield ``(tree, address)`` for global leaves ``0 .. upto-1``."""
        stop = self.leaf_span if upto is None else upto
        n = 0
        t = 0
        while n < stop:
            for a in self._leaf_lists.get(t, ("",)):
                if n >= stop:
                    return
                yield t, a
                n += 1
            t += 1

    def exposed_carets(self) -> list[int]:
        """Indices ``i`` such that leaves ``i`` and ``i+1`` hang from one caret."""
        out = []
        extra = 0
        for t, leaves in self._leaf_lists.items():
            start = t + extra
            for k in range(len(leaves) - 1):
                a, b = leaves[k], leaves[k + 1]
                if a[:-1] == b[:-1] and a[-1] == "0" and b[-1] == "1":
                    out.append(start + k)
            extra += len(leaves) - 1
        return out


TRIVIAL = Forest()


def lam(i: int) -> Forest:
    """The forest with a single caret, on tree ``i``."""
    return Forest({i: ("", "0", "1")}, check=False)


def _with_caret(F: Forest, n: int) -> Forest:
    t, a = F.locate_leaf(n)
    trees = dict(F.trees)
    trees[t] = F.tree(t) | {a + "0", a + "1"}
    return Forest(trees, check=False)


def forest_mul(F: Forest, G: Forest) -> Forest:
    """Graft the ``i``-th root of ``G`` onto the ``i``-th leaf of ``F``."""
    if G.is_trivial():
        return F
    if F.is_trivial():
        return G
    trees = {i: set(t) for i, t in F.trees.items()}
    for j, nodes in G.trees.items():
        t, a = F.locate_leaf(j)
        trees.setdefault(t, {""}).update(a + s for s in nodes)
    return Forest(trees, check=False)


def word_to_forest(word: Iterable[int]) -> Forest:
    F = TRIVIAL
    for i in word:
        if i < 0:
            raise ValueError("generator index must be a natural number")
        F = _with_caret(F, i)
    return F


def _drop_first_caret(F: Forest, i: int) -> Forest:
    """``lam(i) \\ F`` for ``i`` a non-trivial tree of ``F``."""
    trees: dict[int, frozenset[str]] = {}
    for t, nodes in F.trees.items():
        if t < i:
            trees[t] = nodes
        elif t == i:
            trees[i] = subtree(nodes, "0")
            trees[i + 1] = subtree(nodes, "1")
        else:
            trees[t + 1] = nodes
    return Forest(trees, check=False)


def forest_to_word(F: Forest) -> tuple[int, ...]:
    """The unique nondecreasing word for ``F``."""
    out = []
    while not F.is_trivial():
        i = next(iter(F.trees))
        out.append(i)
        F = _drop_first_caret(F, i)
    return tuple(out)


def length(F: Forest) -> int:
    return F.length


def forest_union(F: Forest, G: Forest) -> Forest:
    keys = set(F.trees) | set(G.trees)
    return Forest({i: F.tree(i) | G.tree(i) for i in keys}, check=False)


def forest_intersection(F: Forest, G: Forest) -> Forest:
    keys = set(F.trees) & set(G.trees)
    return Forest({i: F.tree(i) & G.tree(i) for i in keys}, check=False)


def is_left_factor(A: Forest, B: Forest) -> bool:
    return all(nodes <= B.tree(i) for i, nodes in A.trees.items())


def left_divide(A: Forest, B: Forest) -> Forest | None:
    """The forest ``X`` with ``A X = B``, or ``None``."""
    if not is_left_factor(A, B):
        return None
    trees: dict[int, frozenset[str]] = {}
    for t, nodes in B.trees.items():
        n = A.first_leaf(t)
        for a in A._leaf_lists.get(t, ("",)):
            sub = subtree(nodes, a)
            if len(sub) > 1:
                trees[n] = sub
            n += 1
    return Forest(trees, check=False)


def strip_right_caret(F: Forest, i: int) -> Forest | None:
    """The forest ``F'`` with ``F = F' lam(i)``, or ``None``."""
    t0, a = F.locate_leaf(i)
    t1, b = F.locate_leaf(i + 1)
    if t0 != t1 or not a or a[:-1] != b[:-1] or a[-1] != "0" or b[-1] != "1":
        return None
    trees = dict(F.trees)
    trees[t0] = F.tree(t0) - {a, b}
    return Forest(trees, check=False)


def _hang(top: frozenset[str], trees: Sequence[frozenset[str]]) -> tuple[frozenset[str], int] | None:
    """Split ``top`` as a tree with consecutive ``trees`` hung from its leaves.

    Greedily consumes a prefix of ``trees``; returns the upper part and the
    number of trees consumed, or ``None`` if no such decomposition exists.
    """
    leaves = tree_leaves(top)
    pos = 0
    used = 0
    cut: set[str] = set()
    while pos < len(leaves):
        if used >= len(trees):
            return None
        t = trees[used]
        c = len(tree_leaves(t))
        if pos + c > len(leaves):
            return None
        first, last = leaves[pos], leaves[pos + c - 1]
        k = 0
        while k < min(len(first), len(last)) and first[k] == last[k]:
            k += 1
        node = first[:k] if c > 1 else first
        if subtree(top, node) != t:
            return None
        cut.update(node + s for s in t if s)
        pos += c
        used += 1
    return frozenset(top - cut), used


class _TreeStream:
    """Trees of a forest as an indexable stream, trivial past the support."""

    def __init__(self, F: Forest):
        self.F = F
        self.last = max(F.trees, default=-1)

    def window(self, j: int, size: int) -> list[frozenset[str]]:
        return [self.F.tree(k) for k in range(j, j + size)]


def right_divide(L: Forest, F: Forest) -> Forest | None:
    """The forest ``P`` with ``P F = L``, or ``None``."""
    src = _TreeStream(F)
    top: dict[int, frozenset[str]] = {}
    j = 0
    t = 0
    last_l = max(L.trees, default=-1)
    while t <= last_l or j <= src.last:
        nodes = L.tree(t)
        res = _hang(nodes, src.window(j, len(tree_leaves(nodes))))
        if res is None:
            return None
        top[t], used = res
        j += used
        t += 1
    return Forest(top, check=False)


def gcrf_forest(F: Forest, G: Forest) -> tuple[Forest, Forest, Forest]:
    """Return ``(Fbar, Gbar, R)`` with ``F = Fbar R``, ``G = Gbar R``, ``R`` greatest."""
    stripped: list[int] = []
    while True:
        common = set(F.exposed_carets()) & set(G.exposed_carets())
        if not common:
            break
        i = min(common)
        F = strip_right_caret(F, i)
        G = strip_right_caret(G, i)
        stripped.append(i)
    return F, G, word_to_forest(reversed(stripped))


def lclm_forest(F: Forest, G: Forest) -> tuple[Forest, Forest, Forest] | None:
    """Least common left multiple ``L = P F = Q G`` as ``(P, Q, L)``, or ``None``.

    Every tree of the least multiple is a single tree of ``F`` or of ``G``;
    the trees are matched greedily and absence means no common left multiple.
    """
    fs, gs = _TreeStream(F), _TreeStream(G)
    L: dict[int, frozenset[str]] = {}
    P: dict[int, frozenset[str]] = {}
    Q: dict[int, frozenset[str]] = {}
    j = k = t = 0
    while j <= fs.last or k <= gs.last:
        fj, gk = F.tree(j), G.tree(k)
        over_g = _hang(fj, gs.window(k, len(tree_leaves(fj))))
        if over_g is not None:
            L[t], Q[t] = fj, over_g[0]
            j += 1
            k += over_g[1]
        else:
            over_f = _hang(gk, fs.window(j, len(tree_leaves(gk))))
            if over_f is None:
                return None
            L[t], P[t] = gk, over_f[0]
            k += 1
            j += over_f[1]
        t += 1
    return Forest(P, check=False), Forest(Q, check=False), Forest(L, check=False)


def leaf_count(F: Forest):
    """The hedge of leaf counts of ``F``."""
    from .hedge import Hedge

    return Hedge({i: len(v) for i, v in F._leaf_lists.items()})


@dataclass(frozen=True)
class LeafRoot:
    """Nondecreasing surjection sending global leaf ``n`` to its tree index.

    ``runs`` lists ``(first_leaf, n_leaves, tree)`` for non-trivial trees;
    elsewhere the map is ``n -> n - offset`` with the offset accumulated
    from earlier runs.
    """

    runs: tuple[tuple[int, int, int], ...]

    def __call__(self, n: int) -> int:
        extra = 0
        for first, size, tree in self.runs:
            if n < first:
                break
            if n < first + size:
                return tree
            extra += size - 1
        return n - extra


def leaf_root(F: Forest) -> LeafRoot:
    return LeafRoot(tuple((F.first_leaf(t), len(v), t) for t, v in F._leaf_lists.items()))


# -- text and JSON --------------------------------------------------------


def format_forest(F: Forest) -> str:
    word = forest_to_word(F)
    return " ".join(f"l{i}" for i in word) if word else "1"


def forest_to_json(F: Forest) -> dict:
    return {"trees": {str(i): sorted(t, key=lambda a: (len(a), a)) for i, t in F.trees.items()}}


def forest_from_json(data: Mapping) -> Forest:
    return Forest({int(i): nodes for i, nodes in data.get("trees", {}).items()})
