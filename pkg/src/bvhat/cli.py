"""Command-line calculator for the fraction groups.

Exit codes: 0 on success, 1 when ``eq`` or ``member`` answers false, 2 on
errors (bad input, fuel exhaustion, failed verification).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .braid import Flavor
from .fraction import frac_eq, frac_inv, frac_mul, identity, project_to_V, reduce, triple_to_json
from .prefixmap import as_prefix_map, format_address
from .render import diagram, to_ascii, to_svg
from .rewrite import FOREST_RULES, HEDGE_INVERSE_RULES, HEDGE_RULES, FuelExhausted, check_local_confluence
from .subgroup import member_type, verify_presentation
from .textio import ParseError, format_triple, parse_element
from .zappa import check_zappa_axioms, coaction_identities

GROUP_NAME = {Flavor.BRAID: "BV", Flavor.SYMMETRIC: "V"}


class CommandError(Exception):
    pass


def _flavor(args) -> Flavor:
    return Flavor.parse(args.flavor)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _element(args, text: str):
    return parse_element(text, _flavor(args))


def cmd_nf(args) -> int:
    t = reduce(_element(args, args.element))
    _emit(args, format_triple(t), triple_to_json(t))
    return 0


def cmd_eq(args) -> int:
    same = frac_eq(_element(args, args.left), _element(args, args.right))
    _emit(args, "true" if same else "false", {"equal": same})
    return 0 if same else 1


def cmd_mul(args) -> int:
    out = identity(_flavor(args))
    for e in args.elements:
        out = frac_mul(out, _element(args, e))
    out = reduce(out)
    _emit(args, format_triple(out), triple_to_json(out))
    return 0


def cmd_inv(args) -> int:
    t = reduce(frac_inv(_element(args, args.element)))
    _emit(args, format_triple(t), triple_to_json(t))
    return 0


def cmd_member(args) -> int:
    k = member_type(_element(args, args.element))
    name = GROUP_NAME[_flavor(args)]
    text = f"member of {name}, type {k}" if k is not None else f"not a member of {name}"
    _emit(args, text, {"member": k is not None, "type": k, "group": name})
    return 0 if k is not None else 1


def cmd_project(args) -> int:
    if _flavor(args) is not Flavor.BRAID:
        raise CommandError("project expects --flavor B")
    t = project_to_V(_element(args, args.element))
    _emit(args, format_triple(t), triple_to_json(t))
    return 0


def cmd_eval(args) -> int:
    t = _element(args, args.element)
    if t.flavor is Flavor.BRAID:
        t = project_to_V(t)
    pm = as_prefix_map(t)
    rows = [f"{format_address(s):>10}  ->  {format_address(d)}" for s, d in pm.pairs]
    rows.append(f"copies c >= {pm.covered}: c -> c{pm.shift:+d}")
    payload = {
        "pairs": [[format_address(s), format_address(d)] for s, d in pm.pairs],
        "covered": pm.covered,
        "shift": pm.shift,
    }
    _emit(args, "\n".join(rows), payload)
    return 0


def cmd_verify(args) -> int:
    fl = _flavor(args)
    if args.what == "presentation":
        rep = verify_presentation(args.max_index, fl, workers=args.workers)
        lines, ok, checked, failed = rep.lines, rep.ok, rep.checked, len(rep.failures)
    elif args.what == "axioms":
        rep = check_zappa_axioms(args.samples, args.bound, fl, seed=args.seed)
        lines = [f"FAIL ({name}) {tuple(map(str, inst))}" for name, inst in rep.failures]
        co = [(q, m) for q in range(args.bound + 1) for m in range(args.bound + 1) if not all(coaction_identities(q, m, fl))]
        lines += [f"FAIL coaction q={q} m={m}" for q, m in co]
        checked, failed = rep.checked + (args.bound + 1) ** 2, len(rep.failures) + len(co)
        ok = failed == 0
    else:
        lines, checked, failed = [], 0, 0
        for system in (FOREST_RULES, HEDGE_RULES, HEDGE_INVERSE_RULES):
            for b in range(2, args.max_index + 1):
                rep = check_local_confluence(system, b, fuel=args.fuel)
                checked += len(rep.results)
                failed += sum(not r.joined for r in rep.results)
                if args.verbose or not rep.ok:
                    lines += rep.lines(system.render)
                lines.append(f"{system.name} bound {b}: {len(rep.results)} peaks, {'OK' if rep.ok else 'FAIL'}")
        ok = failed == 0
    lines.append(f"{args.what}: {checked} checked, {failed} failed")
    _emit(args, "\n".join(lines), {"what": args.what, "checked": checked, "failed": failed, "ok": ok})
    return 0 if ok else 2


def cmd_render(args) -> int:
    dg = diagram(_element(args, args.element), reduced=not args.raw)
    text = to_svg(dg) if args.format == "svg" else to_ascii(dg)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return 0


GLOBAL_DEFAULTS = {"flavor": "B", "seed": 0, "fuel": None, "json": False}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--flavor", choices=["B", "S"], default=argparse.SUPPRESS, help="braided (B) or symmetric (S) group")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS, help="step limit for rewriting")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    # the actions are shared with every subparser, so defaults are filled in after parsing
    p = argparse.ArgumentParser(prog="bvhat", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    add("nf", cmd_nf, "print the normal form").add_argument("element")
    sp = add("eq", cmd_eq, "decide equality (exit 1 if different)")
    sp.add_argument("left")
    sp.add_argument("right")
    add("mul", cmd_mul, "multiply elements left to right").add_argument("elements", nargs="+")
    add("inv", cmd_inv, "invert an element").add_argument("element")
    add("member", cmd_member, "membership in BV or V (exit 1 if not)").add_argument("element")
    add("project", cmd_project, "image in the symmetric group").add_argument("element")
    add("eval", cmd_eval, "prefix-map table of the symmetric image").add_argument("element")
    sp = add("verify", cmd_verify, "run a verification harness")
    sp.add_argument("what", choices=["presentation", "axioms", "confluence"])
    sp.add_argument("--max-index", type=int, default=6)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--verbose", action="store_true")
    sp = add("render", cmd_render, "draw the tree-braid-tree diagram")
    sp.add_argument("element")
    sp.add_argument("--format", choices=["svg", "ascii"], default="svg")
    sp.add_argument("--output", "-o")
    sp.add_argument("--raw", action="store_true", help="keep the braid word unreduced")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    random.seed(args.seed)
    try:
        return args.func(args)
    except (ParseError, CommandError, ValueError, FuelExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
