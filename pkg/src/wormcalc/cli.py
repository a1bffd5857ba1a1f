"""Command-line interface.

Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 for
success (or a positive answer), 1 for a well-posed query with a negative
answer (invalid point, refuted formula, spectra already apart at the first
coordinate), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formula as fm
from . import ignatiev as ig
from . import spectrum as sp
from .ordinal import from_int, last_exponent, parse_ordinal, print_ordinal
from .parsing import ParseError
from .worm import (
    compare_worms,
    head,
    ordinal_of,
    parse_worm,
    print_worm,
    remainder,
    worm_of_ordinal,
)

_COMPARISON_WORDS = {-1: "Less", 0: "Equal", 1: "Greater"}


def _ordinal_text(x, args) -> str:
    return print_ordinal(x, unicode=not args.ascii)


def _point_text(p, args) -> str:
    return ig.print_point(p, unicode=not args.ascii)


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else text)


def _read_presentation(argument: str) -> sp.TheoryPresentation:
    text = argument
    if not argument.lstrip().startswith("{"):
        with open(argument, "r", encoding="utf-8") as handle:
            text = handle.read()
    return sp.TheoryPresentation.from_json(text)


def _parse_universe(text: str) -> list:
    if text.startswith("finite:"):
        k = int(text.split(":", 1)[1])
        if k < 0:
            raise ValueError("finite:<k> needs a natural k")
        return [from_int(i) for i in range(k + 1)]
    ordinals = {parse_ordinal(part) for part in text.split(",")}
    ordinals.add(from_int(0))
    # close under last exponents; each step strictly shrinks, so this stops
    frontier = list(ordinals)
    while frontier:
        x = frontier.pop()
        e = last_exponent(x)
        if e not in ordinals:
            ordinals.add(e)
            frontier.append(e)
    return sorted(ordinals)


def _spectrum_payload(s: sp.Spectrum, args) -> tuple[str, dict]:
    worms = " ".join(print_worm(w) for w in s.worms)
    text = f"{_point_text(s.point, args)} worms: {worms}"
    return text, s.to_json()


def _resolve_spectrum(argument: str):
    named = sp.registry()
    if argument in named:
        return named[argument]
    return sp.Spectrum.of_point(ig.parse_point(argument))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as error:
        print(f"parse error: {error}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument(
        "--ascii", action="store_true", help="grammar-form ASCII output (default is unicode)"
    )

    parser = argparse.ArgumentParser(
        prog="wormcalc",
        description="Worm calculus, ordinal arithmetic and theory spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("o", parents=[common], help="ordinal denoted by a worm at a level")
    p.add_argument("-n", "--level", type=int, default=0)
    p.add_argument("worm")
    p.set_defaults(handler=_cmd_ordinal)

    p = sub.add_parser("compare", parents=[common], help="compare two worms at a level")
    p.add_argument("-n", "--level", type=int, default=0)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_compare)

    for name, title in (("head", "leading block at a level"), ("rem", "what the head leaves")):
        p = sub.add_parser(name, parents=[common], help=title)
        p.add_argument("-n", "--level", type=int, default=0)
        p.add_argument("worm")
        p.set_defaults(handler=_cmd_head if name == "head" else _cmd_rem)

    p = sub.add_parser("worm-of", parents=[common], help="canonical worm for an ordinal")
    p.add_argument("level", type=int)
    p.add_argument("ordinal")
    p.set_defaults(handler=_cmd_worm_of)

    p = sub.add_parser("point-check", parents=[common], help="check the world condition")
    p.add_argument("point")
    p.set_defaults(handler=_cmd_point_check)

    p = sub.add_parser("min-point", parents=[common], help="minimal world forcing a worm")
    p.add_argument("worm")
    p.set_defaults(handler=_cmd_min_point)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of a presentation")
    p.add_argument("presentation", help="JSON text or a path to a JSON file")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("normalize", parents=[common], help="normalize a presentation")
    p.add_argument("presentation", help="JSON text or a path to a JSON file")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("conserve", parents=[common], help="conservation level of two theories")
    p.add_argument("left", help="registry name or point literal")
    p.add_argument("right", help="registry name or point literal")
    p.set_defaults(handler=_cmd_conserve)

    p = sub.add_parser("model", parents=[common], help="enumerate a finite fragment as DOT")
    p.add_argument("--universe", required=True, help="finite:<k> or a comma-separated ordinal list")
    p.add_argument("--max-index", type=int, default=2)
    p.add_argument("--dot", help="write DOT here instead of stdout")
    p.add_argument("--no-reduce", action="store_true", help="draw all arrows, not only covers")
    p.add_argument(
        "--label",
        action="append",
        default=[],
        metavar="POINT=NAME",
        help="attach a theory name to a world (repeatable)",
    )
    p.set_defaults(handler=_cmd_model)

    p = sub.add_parser("forces", parents=[common], help="evaluate a formula at a world")
    p.add_argument("--universe", required=True)
    p.add_argument("--max-index", type=int, default=None)
    p.add_argument("point")
    p.add_argument("formula")
    p.set_defaults(handler=_cmd_forces)

    p = sub.add_parser("valid", parents=[common], help="check a formula at every world")
    p.add_argument("--universe", required=True)
    p.add_argument("--max-index", type=int, default=None)
    p.add_argument("formula")
    p.set_defaults(handler=_cmd_valid)

    return parser


def _cmd_ordinal(args) -> int:
    value = ordinal_of(parse_worm(args.worm), args.level)
    _emit(args, _ordinal_text(value, args), {"ordinal": print_ordinal(value)})
    return 0


def _cmd_compare(args) -> int:
    left = parse_worm(args.left)
    right = parse_worm(args.right)
    word = _COMPARISON_WORDS[compare_worms(left, right, args.level)]
    _emit(args, word, {"result": word})
    return 0


def _cmd_head(args) -> int:
    result = head(parse_worm(args.worm), args.level)
    _emit(args, print_worm(result), {"worm": print_worm(result)})
    return 0


def _cmd_rem(args) -> int:
    result = remainder(parse_worm(args.worm), args.level)
    _emit(args, print_worm(result), {"worm": print_worm(result)})
    return 0


def _cmd_worm_of(args) -> int:
    if args.level < 0:
        raise ValueError("level must be a natural number")
    result = worm_of_ordinal(parse_ordinal(args.ordinal), args.level)
    _emit(args, print_worm(result), {"worm": print_worm(result)})
    return 0


def _cmd_point_check(args) -> int:
    coords = ig.parse_coords(args.point)
    violation = ig.first_violation(coords)
    if violation is None:
        point = ig.Point.of(coords)
        _emit(
            args,
            "valid",
            {"valid": True, "coords": [print_ordinal(c) for c in point.coords]},
        )
        return 0
    _emit(args, f"invalid at index {violation}", {"valid": False, "index": violation})
    return 1


def _cmd_min_point(args) -> int:
    point = ig.min_point_for_worm(parse_worm(args.worm))
    _emit(
        args,
        _point_text(point, args),
        {"coords": [print_ordinal(c) for c in point.coords]},
    )
    return 0


def _cmd_spectrum(args) -> int:
    result = sp.normalize(_read_presentation(args.presentation))
    text, payload = _spectrum_payload(result, args)
    _emit(args, text, payload)
    return 0


def _cmd_conserve(args) -> int:
    left = _resolve_spectrum(args.left)
    right = _resolve_spectrum(args.right)
    for side in (left, right):
        if isinstance(side, sp.LimitTheory):
            raise ValueError(f"{side.name} has no point in the model ({side.note})")
    level = sp.conservation_level(left, right)
    _emit(args, sp.describe_conservation(level), {"level": level})
    return 1 if level == "none" else 0


def _parse_labels(raw_labels: list[str]) -> dict:
    labels = {}
    for item in raw_labels:
        if "=" not in item:
            raise ValueError(f"--label expects POINT=NAME, got {item!r}")
        point_text, name = item.split("=", 1)
        labels[ig.parse_point(point_text)] = name
    return labels


def _cmd_model(args) -> int:
    model = ig.enumerate_submodel(_parse_universe(args.universe), args.max_index)
    dot = ig.render_dot(
        model,
        labels=_parse_labels(args.label),
        reduce_transitive=not args.no_reduce,
    )
    if args.dot and args.dot != "-":
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
        destination = args.dot
    else:
        destination = None
    edge_counts = {str(n): len(model.edges(n)) for n in range(model.max_index + 1)}
    if args.json:
        payload = {
            "worlds": [[print_ordinal(c) for c in p.coords] for p in model.worlds],
            "edges": edge_counts,
            "witness_complete": model.witness_complete,
        }
        print(json.dumps(payload))
    elif destination is None:
        print(dot, end="")
    print(
        f"worlds={len(model.worlds)} "
        + " ".join(f"edges[{n}]={k}" for n, k in edge_counts.items()),
        file=sys.stderr,
    )
    return 0


def _evaluation_model(args, needed_index: int) -> ig.FiniteSubmodel:
    max_index = args.max_index if args.max_index is not None else max(needed_index, 0)
    return ig.enumerate_submodel(_parse_universe(args.universe), max_index)


def _cmd_forces(args) -> int:
    point = ig.parse_point(args.point)
    f = fm.parse_formula(args.formula)
    model = _evaluation_model(args, max(fm.max_modality(f), point.support - 1))
    result = ig.forces(model, point, f)
    if not result.exact:
        print("note: fragment-relative answer (universe is not witness-complete)", file=sys.stderr)
    _emit(args, "true" if result.value else "false", {"value": result.value, "exact": result.exact})
    return 0 if result.value else 1


def _cmd_valid(args) -> int:
    f = fm.parse_formula(args.formula)
    model = _evaluation_model(args, fm.max_modality(f))
    result = ig.validity_check(f, model)
    if not result.exact:
        print("note: fragment-relative answer (universe is not witness-complete)", file=sys.stderr)
    _emit(args, "true" if result.value else "false", {"value": result.value, "exact": result.exact})
    return 0 if result.value else 1


if __name__ == "__main__":
    raise SystemExit(main())
