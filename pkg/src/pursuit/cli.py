"""``pursuit`` command line: build graphs, solve, simulate, verify, export.

Graphs travel between subcommands as GraphDocument JSON on stdin/stdout::

    pursuit build Q | pursuit copnumber --max 2

Exit codes: 0 success, 1 claim violated, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import verify
from .constructions import (
    Tag,
    add_kite_diagonals,
    dodecahedron,
    one_planarize,
    petersen_two_planar_drawing,
    quadrangulate,
    subdivide_uniform,
    triangulate_pentagons,
)
from .game import ClaimViolation, IllegalMove
from .graph import GraphError
from .io import GraphDocument, certificate_document, document_from, to_dot
from .outer import random_outer_one_planar, robber_policy_outer
from .solver import BUDGET_ENV, BudgetExceeded, OptimalCops, OptimalRobber, cop_number, solve
from .strategies import EscapeRobber, SubsetRobber, ThreeCopPolicy, Transcript, check_transcript, simulate

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        if sys.stdin.isatty():
            raise UsageError("expected a graph document on stdin (or use --input)")
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_doc(args) -> GraphDocument:
    return GraphDocument.loads(_read_text(args.input))


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------------


def cmd_build(args) -> int:
    what = args.what
    if what in ("dodecahedron", "T", "Q", "Qprime"):
        d = dodecahedron()
        if what == "dodecahedron":
            doc = document_from(d)
        else:
            t = triangulate_pentagons(d)
            if what == "T":
                doc = document_from(t)
            else:
                q = quadrangulate(t)
                if what == "Q":
                    doc = document_from(q)
                else:
                    g, kites = add_kite_diagonals(q)
                    doc = document_from(g, kites, q.vertex_tags)
    elif what == "subdivide":
        if args.s is None or args.s < 0:
            raise UsageError("build subdivide needs --s >= 0")
        doc = document_from(subdivide_uniform(_read_doc(args).graph, args.s))
    elif what == "one-planarize":
        drawing = petersen_two_planar_drawing() if args.input is None else _read_doc(args).crossing_drawing()
        g, cert = one_planarize(drawing)
        doc = certificate_document(g, cert)
        print(f"# subdivisions={cert.subdivisions} max_crossings_per_edge={cert.max_crossings}", file=sys.stderr)
    else:  # outer
        if args.n is None or args.seed is None:
            raise UsageError("build outer needs --n and --seed")
        doc = document_from(random_outer_one_planar(args.n, args.seed))
    _emit(doc.dumps(), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_doc(args).graph
    table = solve(g, args.cops)
    wins = table.winning_placements()
    if wins.size:
        best = min(table.placement_value(int(c)) for c in wins)
        print(f"COP_WIN cops={args.cops} winning_placements={wins.size}/{table.index.count} capture_halfmoves={best}")
    else:
        print(f"ROBBER_WIN cops={args.cops} winning_placements=0/{table.index.count}")
    return EXIT_OK


def cmd_copnumber(args) -> int:
    c = cop_number(_read_doc(args).graph, args.max)
    print(f"cop_number exceeds {args.max}" if c is None else f"cop_number {c}")
    return EXIT_OK


def _cop_policy(name: str, doc: GraphDocument, k: int, seed: int):
    g = doc.graph
    if name in ("optimal", "optimal-chase"):
        table = solve(g, k)
        return OptimalCops(table, tiebreak="chase" if name == "optimal-chase" else "lex", seed=seed), k
    if name == "three-cop":
        return ThreeCopPolicy(g, doc.kites()), 3
    raise UsageError(f"unknown cop policy {name!r}")


def _robber_policy(name: str, doc: GraphDocument, k: int):
    g = doc.graph
    if name == "optimal":
        return OptimalRobber(solve(g, k))
    if name == "subset":
        return SubsetRobber(solve(g, k - 1), k)
    if name == "escape":
        tags = doc.tag_list()
        if tags is None or Tag.D_VERTEX not in tags:
            raise UsageError("escape robber needs a tagged dodecahedral document (build Q or Qprime)")
        return EscapeRobber.from_tags(g, tags)
    if name == "outer":
        if not doc.outer:
            raise UsageError("outer robber needs a document marked \"outer\": true")
        return robber_policy_outer(doc.outer_drawing())
    raise UsageError(f"unknown robber policy {name!r}")


def cmd_simulate(args) -> int:
    doc = _read_doc(args)
    cops, k = _cop_policy(args.cops, doc, args.k, args.seed)
    robber = _robber_policy(args.robber, doc, k)
    t = simulate(doc.graph, cops, robber, args.rounds)
    if args.transcript:
        _emit(t.to_text(), args.transcript)
    print(f"{t.outcome} cops={args.cops} robber={args.robber} rounds={args.rounds} seed={args.seed}")
    return EXIT_OK


_SIZES = {
    "oracle": {"trees": "trees", "samples": "graphs"},
    "thm2": {"seeds": "seeds", "rounds": "rounds"},
    "thm3": {"seeds": "seeds", "rounds": "rounds", "samples": "pairs"},
    "thm5": {"horizon": "horizon_factor"},
    "thm6": {"samples": "size", "rounds": "rounds"},
    "prop1": {"samples": "size"},
    "subdivision": {"samples": "graphs"},
}
_BUDGETED = {"thm2", "thm3", "thm5", "subdivision"}


def cmd_verify(args) -> int:
    kwargs = {}
    for flag, param in _SIZES[args.suite].items():
        value = getattr(args, flag, None)
        if value is not None:
            kwargs[param] = value
    if args.budget is not None and args.suite in _BUDGETED:
        kwargs["budget"] = args.budget
    if args.suite == "thm5" and args.exact_q:
        kwargs["exact_q"] = True
    verdicts = verify.SUITES[args.suite](**kwargs)
    for v in verdicts:
        print(v)
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_CLAIM


def cmd_export(args) -> int:
    if args.format == "transcript":
        if not args.transcript:
            raise UsageError("export --format transcript needs --transcript FILE")
        with open(args.transcript, encoding="utf-8") as fh:
            t = Transcript.from_text(fh.read())
        if args.input is not None:
            problems = check_transcript(GraphDocument.loads(_read_text(args.input)).graph, t)
            for p in problems:
                print(f"ILLEGAL {p}", file=sys.stderr)
            if problems:
                return EXIT_CLAIM
        _emit(t.to_text(), args.output)
        return EXIT_OK
    doc = _read_doc(args)
    _emit(doc.dumps() if args.format == "json" else to_dot(doc), args.output)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pursuit", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker cap for sweeps (the solver runs single-threaded)")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--input", "-i", help="GraphDocument JSON file (default: stdin)")

    b = sub.add_parser("build", help="emit a construction as GraphDocument JSON")
    b.add_argument("what", choices=["dodecahedron", "T", "Q", "Qprime", "subdivide", "one-planarize", "outer"])
    b.add_argument("--s", type=int, help="subdivide: internal vertices per edge")
    b.add_argument("--n", type=int, help="outer: vertex count")
    b.add_argument("--seed", type=int, help="outer: generator seed")
    b.add_argument("--input", "-i", help="input graph for subdivide / drawing for one-planarize")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("solve", help="solve the k-cop game exactly")
    s.add_argument("--cops", type=int, required=True)
    graph_input(s)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("copnumber", help="smallest winning cop count up to --max")
    c.add_argument("--max", type=int, required=True)
    graph_input(c)
    c.set_defaults(func=cmd_copnumber)

    m = sub.add_parser("simulate", help="play a cop policy against a robber policy")
    m.add_argument("--cops", required=True, choices=["optimal", "optimal-chase", "three-cop"])
    m.add_argument("--robber", required=True, choices=["optimal", "subset", "escape", "outer"])
    m.add_argument("--rounds", type=int, required=True)
    m.add_argument("--seed", type=int, required=True, help="seeds the optimal cops' opening placement")
    m.add_argument("--k", type=int, default=2, help="cop count for optimal cops (three-cop always uses 3)")
    m.add_argument("--transcript", help="write the transcript to this file")
    graph_input(m)
    m.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="run a verification suite, printing VERDICT lines")
    v.add_argument("suite", choices=sorted(verify.SUITES))
    v.add_argument("--budget", type=int, help=f"state budget for exact solves (default ${BUDGET_ENV} or built-in)")
    v.add_argument("--seeds", type=int)
    v.add_argument("--rounds", type=int)
    v.add_argument("--samples", type=int, help="corpus size / sample count")
    v.add_argument("--trees", type=int)
    v.add_argument("--horizon", type=int, help="thm5: rounds allowed per vertex")
    v.add_argument("--exact-q", action="store_true", help="thm5: also solve Q exactly with three cops")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="re-emit a graph as JSON or DOT, or a transcript")
    e.add_argument("--format", required=True, choices=["json", "dot", "transcript"])
    e.add_argument("--transcript", help="transcript file (format transcript)")
    e.add_argument("--output", "-o")
    graph_input(e)
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except ClaimViolation as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CLAIM
    except BudgetExceeded as exc:
        print(f"BUDGET_EXCEEDED {exc} (raise ${BUDGET_ENV} or --budget)", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError, IllegalMove, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
