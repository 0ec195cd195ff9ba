"""Text syntax for monoid and group elements.

Grammar (tokens separated by optional whitespace)::

    element := product ('/' product)?
    product := factor*
    factor  := 'l' NAT | 's' NAT "'"? | '1' | '(' element ')' | 'inv' '(' element ')'

A side made only of ``l``/``s`` letters is a monoid word; ``NUM / DEN`` with
two such sides is folded directly into the triple ``(F, a, G)`` without
reduction.  Anything else is evaluated with the group operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import BraidWord, Flavor, format_braid
from .forest import forest_to_word
from .fraction import FractionTriple, frac_inv, frac_mul, frac_new, identity, reduce
from .zappa import MonoidElt, mono, mono_identity, mono_mul

MAX_INDEX = 2**32


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text, self.pos, self.msg = text, pos, msg
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"\s*(?:(inv)\b|([ls])(\d+)('?)|(1)(?!\d)|([()/]))")


@dataclass(frozen=True)
class Letter:
    kind: str  # "l" or "s"
    index: int
    sign: int = 1


@dataclass(frozen=True)
class Product:
    factors: tuple  # of Letter | Quotient | Inverse


@dataclass(frozen=True)
class Quotient:
    num: Product
    den: Product | None


@dataclass(frozen=True)
class Inverse:
    body: Quotient


ElementExpr = Quotient


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.toks: list[tuple[int, str, tuple]] = []
        while True:
            m = _TOKEN.match(text, self.pos)
            if m is None:
                rest = text[self.pos :]
                if not rest.strip():
                    break
                start = self.pos + len(rest) - len(rest.lstrip())
                raise ParseError(text, start, f"unexpected character {text[start]!r}")
            start = m.end() - len(m.group(0).lstrip())
            if m.group(1):
                self.toks.append((start, "inv", ()))
            elif m.group(2):
                idx = int(m.group(3))
                if idx >= MAX_INDEX:
                    raise ParseError(text, m.start(3), f"index {idx} exceeds 2^32-1")
                if m.group(2) == "l" and m.group(4):
                    raise ParseError(text, m.start(4), "inverse marker on a forest letter")
                self.toks.append((start, m.group(2), (idx, -1 if m.group(4) else 1)))
            elif m.group(5):
                self.toks.append((start, "1", ()))
            else:
                self.toks.append((start, m.group(6), ()))
            self.pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][1] if self.i < len(self.toks) else None

    def here(self) -> int:
        return self.toks[self.i][0] if self.i < len(self.toks) else len(self.text)

    def expect(self, kind: str) -> None:
        if self.peek() != kind:
            raise ParseError(self.text, self.here(), f"expected {kind!r}")
        self.i += 1

    def element(self) -> Quotient:
        num = self.product()
        den = None
        if self.peek() == "/":
            self.i += 1
            den = self.product()
            if self.peek() == "/":
                raise ParseError(self.text, self.here(), "more than one '/'")
        return Quotient(num, den)

    def product(self) -> Product:
        out = []
        while True:
            k = self.peek()
            if k in ("l", "s"):
                _, kind, (idx, sign) = self.toks[self.i]
                out.append(Letter(kind, idx, sign))
                self.i += 1
            elif k == "1":
                self.i += 1
            elif k == "(":
                self.i += 1
                out.append(self.element())
                self.expect(")")
            elif k == "inv":
                self.i += 1
                self.expect("(")
                out.append(Inverse(self.element()))
                self.expect(")")
            else:
                return Product(tuple(out))


def parse_expr(text: str) -> ElementExpr:
    p = _Parser(text)
    expr = p.element()
    if p.peek() is not None:
        raise ParseError(text, p.here(), f"unexpected {p.peek()!r}")
    return expr


def _is_monoid_word(p: Product) -> bool:
    return all(isinstance(f, Letter) for f in p.factors)


def _monoid(p: Product, flavor: Flavor) -> MonoidElt:
    x = mono_identity(flavor)
    for f in p.factors:
        if f.kind == "l":
            g = mono([f.index], (), flavor)
        else:
            g = mono((), (f.sign * (f.index + 1),), flavor)
        x = mono_mul(x, g)
    return x


def _eval_product(p: Product, flavor: Flavor) -> FractionTriple:
    if _is_monoid_word(p):
        return frac_new(_monoid(p, flavor), mono_identity(flavor))
    out = identity(flavor)
    run: list = []

    def flush():
        nonlocal out, run
        if run:
            out = frac_mul(out, frac_new(_monoid(Product(tuple(run)), flavor), mono_identity(flavor)))
            run = []

    for f in p.factors:
        if isinstance(f, Letter):
            run.append(f)
            continue
        flush()
        if isinstance(f, Inverse):
            out = frac_mul(out, frac_inv(_eval(f.body, flavor)))
        else:
            out = frac_mul(out, _eval(f, flavor))
    flush()
    return out


def _eval(q: Quotient, flavor: Flavor) -> FractionTriple:
    if q.den is None:
        return _eval_product(q.num, flavor)
    if _is_monoid_word(q.num) and _is_monoid_word(q.den):
        return frac_new(_monoid(q.num, flavor), _monoid(q.den, flavor))
    return frac_mul(_eval_product(q.num, flavor), frac_inv(_eval_product(q.den, flavor)))


def parse_element(text: str, flavor: Flavor | str = Flavor.BRAID) -> FractionTriple:
    """Parse ``text`` into an (unreduced unless composite) triple."""
    return _eval(parse_expr(text), Flavor.parse(flavor))


def parse_monoid(text: str, flavor: Flavor | str = Flavor.BRAID) -> MonoidElt:
    expr = parse_expr(text)
    if expr.den is not None or not _is_monoid_word(expr.num):
        raise ParseError(text, 0, "expected a monoid word of l and s letters")
    return _monoid(expr.num, Flavor.parse(flavor))


def _word(forest_word: tuple[int, ...], braid: BraidWord | None = None) -> str:
    parts = [f"l{i}" for i in forest_word]
    if braid is not None and braid.letters:
        parts.append(format_braid(braid))
    return " ".join(parts) or "1"


def format_monoid(x: MonoidElt) -> str:
    return _word(forest_to_word(x.forest), x.braid)


def format_triple(t: FractionTriple) -> str:
    return f"{_word(forest_to_word(t.numerator), t.braid)} / {_word(forest_to_word(t.denominator))}"


def format_normal(t: FractionTriple) -> str:
    return format_triple(reduce(t))
