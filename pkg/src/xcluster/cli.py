"""Command line interface: ``xcluster <command> ...``.

Exit status is 0 when every check of a report passes (or the command has
nothing to check), 1 when a check fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dtcheck
from .folding import QuotientMaps, fold_diagram, fold_seed, generators_for_orbits, parse_orbits, validate_pi
from .looijenga import ModelType, build_seed
from .scatter import MAX_WALLS, ResourceCapError, complete, initial_diagram, to_svg
from .seed import MutationState, Seed, apply_word


def load_seed(spec: str) -> Seed:
    """A seed from a JSON file, or a model name such as D4 or E6."""
    path = Path(spec)
    if path.exists():
        return Seed.from_json(path.read_text())
    try:
        return build_seed(ModelType.parse(spec))
    except ValueError:
        raise ValueError(f"{spec!r} is neither a seed file nor a model name") from None


def parse_word(text: str, zero_based: bool) -> tuple:
    shift = 1 if zero_based else 0
    tokens = text.replace(",", " ").split()
    return tuple(int(t) + shift for t in tokens)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _matrix_text(name: str, rows) -> str:
    width = max((len(str(v)) for r in rows for v in r), default=1)
    body = "\n".join("  [" + " ".join(str(v).rjust(width) for v in r) + "]" for r in rows)
    return f"{name}:\n{body}"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------
def cmd_verify(args) -> int:
    if args.campaign == "dt":
        report = dtcheck.verify_dt(args.model)
    elif args.campaign == "fold":
        report = dtcheck.verify_fold_theorem(args.model, k=args.k, depth=args.depth, trials=args.trials)
    else:
        report = dtcheck.verify_weyl_scatter(args.model, k=args.k or 5, trials=args.trials)
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.passed else 1


def cmd_scan(args) -> int:
    report = dtcheck.conjecture_scan(args.m, args.depth)
    _emit(args, report.to_json(), report.to_text())
    return 0


def cmd_scatter(args) -> int:
    seed = load_seed(args.seed)
    try:
        diagram = complete(initial_diagram(seed, args.k), args.k, max_walls=args.max_walls)
    except ResourceCapError as exc:
        print(f"error: {exc} (reached order {exc.partial_order})", file=sys.stderr)
        return 2
    if args.svg:
        Path(args.svg).write_text(to_svg(diagram))
    lines = [f"consistent diagram to order {args.k}: rank {diagram.rank}, {len(diagram.walls)} walls"]
    if diagram.explicit:
        for w in diagram.outgoing_walls:
            lines.append(f"  n0={w.n0} weight={w.weight} f={w.func}")
    else:
        lines.append(f"  {len(diagram.element.terms)} terms in the consistent element")
    _emit(args, diagram.to_json(), "\n".join(lines))
    return 0


def cmd_mutate(args) -> int:
    seed = load_seed(args.seed)
    word = parse_word(args.word, args.zero_based)
    state = apply_word(MutationState.initial(seed), word)
    shown = {"eps": state.eps, "c": state.cmat, "g": state.gmat}
    keys = list(shown) if args.show == "all" else [args.show]
    payload = {"word": list(word), **{k: [list(r) for r in shown[k]] for k in keys}}
    _emit(args, payload, "\n".join(_matrix_text(k, shown[k]) for k in keys))
    return 0


def cmd_fold(args) -> int:
    seed = load_seed(args.seed)
    orbits = parse_orbits(args.orbits)
    if args.zero_based:
        orbits = [[i + 1 for i in orbit] for orbit in orbits]
    pi = validate_pi(seed, generators_for_orbits(seed.n, orbits))
    folded = fold_seed(seed, pi)
    payload = folded.to_json()
    lines = [f"orbits: {[list(o) for o in pi.orbits]}", f"multipliers: {list(folded.seed.d)}",
             _matrix_text("folded exchange matrix", folded.seed.eps),
             _matrix_text("d_a {e_a, e_b}", folded.seed.dual_eps)]
    if args.k:
        diagram = complete(initial_diagram(seed, args.k), args.k)
        quotient = fold_diagram(diagram, pi, QuotientMaps.of(folded), args.k, folded)
        payload["diagram"] = quotient.to_json()
        lines.append(f"folded diagram to order {args.k}: {len(quotient.walls)} walls")
    _emit(args, payload, "\n".join(lines))
    return 0


# --------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xcluster", description="Exact cluster seed and scattering diagram tools.")
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument("--zero-based", action="store_true", help="read words and orbits with indices starting at 0")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification campaign")
    verify.add_argument("campaign", choices=["dt", "fold", "weyl"])
    verify.add_argument("--model", required=True)
    verify.add_argument("-k", type=int, default=None, help="order for diagram checks")
    verify.add_argument("--depth", type=int, default=8)
    verify.add_argument("--trials", type=int, default=30)
    verify.set_defaults(func=cmd_verify)

    scan = sub.add_parser("scan", help="report-only scans")
    scan.add_argument("target", choices=["conjecture"])
    scan.add_argument("--m", type=int, required=True)
    scan.add_argument("--depth", type=int, default=8)
    scan.set_defaults(func=cmd_scan)

    scatter = sub.add_parser("scatter", help="scattering diagrams")
    scatter.add_argument("action", choices=["complete"])
    scatter.add_argument("--seed", required=True, help="seed JSON file or model name")
    scatter.add_argument("-k", type=int, default=6)
    scatter.add_argument("--svg", default=None, help="write a picture (rank 2 only)")
    scatter.add_argument("--max-walls", type=int, default=MAX_WALLS)
    scatter.set_defaults(func=cmd_scatter)

    mutate = sub.add_parser("mutate", help="apply a mutation word")
    mutate.add_argument("--seed", required=True)
    mutate.add_argument("--word", required=True, help="comma separated indices")
    mutate.add_argument("--show", choices=["eps", "c", "g", "all"], default="all")
    mutate.set_defaults(func=cmd_mutate)

    fold = sub.add_parser("fold", help="fold a seed by orbits")
    fold.add_argument("--seed", required=True)
    fold.add_argument("--orbits", required=True, help='orbits such as "1 2|3 4|5 6"')
    fold.add_argument("-k", type=int, default=None, help="also fold the diagram to this order")
    fold.set_defaults(func=cmd_fold)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
