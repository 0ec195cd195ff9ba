"""Tree-braid-tree diagrams of fraction triples.

The numerator forest sits on top with roots up, the braid hangs from its
leaves, and the denominator forest is drawn upside down underneath.  For a
positive letter ``s_i`` the strand travelling from column ``i`` to column
``i+1`` passes over; the other strand is broken around the crossing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forest import Forest
from .fraction import FractionTriple, reduce

COL = 40  # horizontal spacing between strands
ROW = 30  # vertical spacing of tree levels and braid letters
PAD = 20


@dataclass(frozen=True)
class TreeLayout:
    """Node positions ``(x, level)`` and edges for a forest over ``n`` leaves."""

    nodes: tuple[tuple[float, int], ...]
    edges: tuple[tuple[int, int], ...]
    depth: int


@dataclass(frozen=True)
class DiagramSpec:
    strands: int
    top: TreeLayout
    crossings: tuple[tuple[int, int], ...]  # (index, sign)
    bottom: TreeLayout


def layout_forest(F: Forest, n: int) -> TreeLayout:
    """Leaves at level 0 in columns ``0 .. n-1``; parents at increasing levels."""
    nodes: list[tuple[float, int]] = []
    edges: list[tuple[int, int]] = []
    col = 0
    t = 0
    while col < n:
        tree = F.tree(t)
        leaves = sorted(a for a in tree if a + "0" not in tree) or [""]
        ids: dict[str, int] = {}
        for a in leaves:
            ids[a] = len(nodes)
            nodes.append((float(col), 0))
            col += 1

        def place(a: str) -> int:
            if a in ids:
                return ids[a]
            left, right = place(a + "0"), place(a + "1")
            level = max(nodes[left][1], nodes[right][1]) + 1
            ids[a] = len(nodes)
            nodes.append(((nodes[left][0] + nodes[right][0]) / 2, level))
            edges.extend(((ids[a], left), (ids[a], right)))
            return ids[a]

        place("")
        t += 1
    levels = max((lv for _, lv in nodes), default=0)
    return TreeLayout(tuple(nodes), tuple(edges), levels)


def diagram(t: FractionTriple, reduced: bool = True) -> DiagramSpec:
    """Layout of ``t``, drawn from its normal form unless ``reduced`` is false."""
    if reduced:
        t = reduce(t)
    letters = t.braid.letters
    n = max(t.numerator.leaf_span, t.denominator.leaf_span, t.braid.width, 1)
    return DiagramSpec(
        n,
        layout_forest(t.numerator, n),
        tuple((abs(x) - 1, 1 if x > 0 else -1) for x in letters),
        layout_forest(t.denominator, n),
    )


def to_svg(dg: DiagramSpec) -> str:
    top_h = dg.top.depth * ROW
    braid_h = max(len(dg.crossings), 1) * ROW
    bot_h = dg.bottom.depth * ROW
    width = (dg.strands - 1) * COL + 2 * PAD
    height = top_h + braid_h + bot_h + 2 * PAD
    y0 = PAD + top_h  # top of the braid
    y1 = y0 + braid_h  # bottom of the braid
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}">',
        '<g stroke="black" stroke-width="2" fill="none" stroke-linecap="round">',
    ]

    def x(c: float) -> float:
        return PAD + c * COL

    for layout, base, up in ((dg.top, y0, -1), (dg.bottom, y1, 1)):
        for a, b in layout.edges:
            (xa, la), (xb, lb) = layout.nodes[a], layout.nodes[b]
            out.append(f'<line class="tree" x1="{x(xa)}" y1="{base + up * la * ROW}" x2="{x(xb)}" y2="{base + up * lb * ROW}"/>')
    crossing_rows = dict(enumerate(dg.crossings))
    rows = max(len(dg.crossings), 1)
    for k in range(rows):
        ya, yb = y0 + k * ROW, y0 + (k + 1) * ROW
        c = crossing_rows.get(k)
        for j in range(dg.strands):
            if c is None or j not in (c[0], c[0] + 1):
                out.append(f'<line class="strand" x1="{x(j)}" y1="{ya}" x2="{x(j)}" y2="{yb}"/>')
        if c is None:
            continue
        i, s = c
        over = (x(i), ya, x(i + 1), yb) if s > 0 else (x(i + 1), ya, x(i), yb)
        under = (x(i + 1), ya, x(i), yb) if s > 0 else (x(i), ya, x(i + 1), yb)
        out.append(f'<g class="crossing" data-index="{i}" data-sign="{s}">')
        out.append(f'<line class="over" x1="{over[0]}" y1="{over[1]}" x2="{over[2]}" y2="{over[3]}"/>')
        # under strand: two pieces with a gap around the midpoint
        mx, my = (under[0] + under[2]) / 2, (under[1] + under[3]) / 2
        for ex, ey in ((under[0], under[1]), (under[2], under[3])):
            gx, gy = mx + (ex - mx) * 0.3, my + (ey - my) * 0.3
            out.append(f'<line class="under" x1="{ex}" y1="{ey}" x2="{gx}" y2="{gy}"/>')
        out.append("</g>")
    out.append("</g></svg>")
    return "\n".join(out)


def to_ascii(dg: DiagramSpec) -> str:
    """A lossy text picture: crossings are drawn without over/under."""
    w = dg.strands
    lines = ["(ascii diagram is lossy: no over/under information)"]
    lines += _ascii_forest(dg.top, w, roots_up=True)
    for i, s in dg.crossings:
        row = ["|"] * w
        row[i], row[i + 1] = "\\", "/"
        lines.append(" ".join(row) + f"    s{i}" + ("'" if s < 0 else ""))
        lines.append(" ".join("|" if j not in (i, i + 1) else ("/" if j == i else "\\") for j in range(w)))
    lines += _ascii_forest(dg.bottom, w, roots_up=False)
    return "\n".join(lines)


def _ascii_forest(layout: TreeLayout, w: int, roots_up: bool) -> list[str]:
    rows = []
    for level in range(layout.depth, 0, -1):
        cells = [" "] * (2 * w - 1)
        for xpos, lv in layout.nodes:
            if lv == level:
                cells[int(round(2 * xpos))] = "^" if roots_up else "v"
        rows.append("".join(cells).rstrip())
    rows.append(" ".join("|" for _ in range(w)))
    return rows if roots_up else list(reversed(rows))
