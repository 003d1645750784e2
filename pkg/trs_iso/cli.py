"""
------------------------------------------------------------------------------------------------------------------------

CLI
---

Command-line surface of trs_iso (console script 'trs-iso').

    decide      --relation R A.trs B.trs [--witness out.json] [--check]
    oracle      --relation R A.trs B.trs
    survey      A.trs B.trs
    template    --kind v|f|full A.trs
    normalize   --kind v|f|full A.trs
    encode      --kind forest|gf|gv|full A.trs [--format json|dot]
    graph2trs   --kind funcs|vars graph.json
    probe       A.trs --term T [--to U]
    corpus      [--list | NAME] [--group trs|graphs]

Exit codes: 0 isomorphic / success / proven, 1 not isomorphic / refuted, 2 parse or usage error,
3 normal-form precondition violated, 4 size guard exceeded, 5 probe ran out of fuel.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import argparse
import json
import logging
import sys
from pathlib import Path

from .core import Kind, Trs, parse_term, parse_trs, print_trs
from .corpus import FixtureCorpus
from .deciders import SEMANTIC_RELATIONS, Relation, brute_force_decide, check_semantic_compatibility, decide_any, \
    survey, witness_to_json
from .graphs import emit_graph, encode, graph_to_trs_funcs, graph_to_trs_vars, parse_graph
from .rewriting import convertible_bounded, terminates_bounded
from .templates import maximal_normal_form, template
from ._utility._classes import NormalFormViolation, SizeGuardExceeded
from ._utility.config_utility import settings
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)

EXIT_ISO = 0
EXIT_NOT_ISO = 1
EXIT_USAGE = 2
EXIT_NORMAL_FORM = 3
EXIT_SIZE_GUARD = 4
EXIT_UNKNOWN = 5


def _read_trs(path: str, permissive: bool) -> Trs:
    return parse_trs(Path(path).read_text(), permissive=permissive)


def _verdict_code(is_iso: bool) -> int:
    return EXIT_ISO if is_iso else EXIT_NOT_ISO


# subcommands
# ----------------------------------------------------------------------------------------------------------------------

def cmd_decide(args) -> int:
    a, b = _read_trs(args.file_a, args.permissive), _read_trs(args.file_b, args.permissive)
    decision = decide_any(a, b, args.relation)
    print(f"{decision.relation.value}: {'isomorphic' if decision.is_iso else 'not isomorphic'}")
    if args.verbose or not decision.is_iso:
        for message in decision.trail:
            print(f"  {message}")
    if args.witness is not None:
        Path(args.witness).write_text(json.dumps(witness_to_json(decision), indent=2) + "\n")
    if args.check and decision.is_iso:
        if decision.relation in SEMANTIC_RELATIONS:
            report = check_semantic_compatibility(a, b, decision.relation, decision.witness, seed=args.seed)
            print(f"one-step compatibility on {report.samples} sample terms: {len(report.violations)} violations")
        else:
            print(f"one-step compatibility is not guaranteed for {decision.relation.value}; check skipped")
    return _verdict_code(decision.is_iso)


def cmd_oracle(args) -> int:
    a, b = _read_trs(args.file_a, args.permissive), _read_trs(args.file_b, args.permissive)
    result = brute_force_decide(a, b, args.relation)
    print(f"{args.relation.value}: {'isomorphic' if result else 'not isomorphic'} (exhaustive search)")
    return _verdict_code(result)


def cmd_survey(args) -> int:
    a, b = _read_trs(args.file_a, args.permissive), _read_trs(args.file_b, args.permissive)
    print(survey(a, b)[["relation", "verdict"]].to_string(index=False))
    return EXIT_ISO


def cmd_template(args) -> int:
    result = template(_read_trs(args.file, args.permissive), args.kind)
    sys.stdout.write(print_trs(result.templated))
    return EXIT_ISO


def cmd_normalize(args) -> int:
    normal, partition = maximal_normal_form(_read_trs(args.file, args.permissive), args.kind)
    logger.info("classes: %s", partition)
    sys.stdout.write(print_trs(normal))
    return EXIT_ISO


def cmd_encode(args) -> int:
    text = emit_graph(encode(_read_trs(args.file, args.permissive), args.kind), args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_ISO


def cmd_graph2trs(args) -> int:
    graph = parse_graph(Path(args.file).read_text(), kind="digraph")
    trs = graph_to_trs_funcs(graph) if args.kind == "funcs" else graph_to_trs_vars(graph)
    sys.stdout.write(print_trs(trs))
    return EXIT_ISO


def cmd_probe(args) -> int:
    trs = _read_trs(args.file, False)
    term = parse_term(args.term, trs)
    if args.to is None:
        verdict = terminates_bounded(trs, term, args.fuel)
        label = {"proven": "terminates", "refuted": "does not terminate", "unknown": "unknown"}[verdict.status.value]
    else:
        verdict = convertible_bounded(trs, term, parse_term(args.to, trs), args.fuel)
        label = "convertible" if verdict.proven else "unknown"
    print(f"{label} ({verdict.explored} terms expanded)")
    for step in verdict.path:
        print(f"  {step}")
    if verdict.unknown:
        return EXIT_UNKNOWN
    return EXIT_ISO if verdict.proven else EXIT_NOT_ISO


def cmd_corpus(args) -> int:
    if args.list or args.name is None:
        FixtureCorpus.available_fixtures(args.group)
        return EXIT_ISO
    sys.stdout.write(FixtureCorpus.fetch(args.name, group=args.group or "trs").get_as_text())
    return EXIT_ISO


# parser
# ----------------------------------------------------------------------------------------------------------------------

def _relation(text: str) -> Relation:
    try:
        return Relation.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def build_parser() -> argparse.ArgumentParser:
    dict_defaults = settings("defaults")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging and full decision trail")
    common.add_argument("--permissive", action="store_true",
                        help="Accept variable lhs and unbound rhs variables (no rewriting)")
    common.add_argument("--seed", type=lambda text: int(text, 0), default=dict_defaults["seed"],
                        help="Seed of all randomized behavior")
    common.add_argument("--fuel", type=int, default=dict_defaults["fuel"], help="Bound of the rewriting probes")

    parser = argparse.ArgumentParser(prog="trs-iso",
                                     description="Syntactic equivalence of term rewriting systems up to renaming.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    kinds = [kind.value for kind in Kind]
    relations = ", ".join(relation.value for relation in Relation)

    for name, func, help_text in (("decide", cmd_decide, "Decide a relation with witness"),
                                  ("oracle", cmd_oracle, "Decide a relation by exhaustive search")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--relation", "-r", type=_relation, required=True, help=relations)
        sub.add_argument("file_a")
        sub.add_argument("file_b")
        if name == "decide":
            sub.add_argument("--witness", help="Write the witness JSON to this file")
            sub.add_argument("--check", action="store_true", help="Check one-step compatibility of the witness")
        sub.set_defaults(func=func)

    sub = subparsers.add_parser("survey", parents=[common], help="Decide every relation for one pair")
    sub.add_argument("file_a")
    sub.add_argument("file_b")
    sub.set_defaults(func=cmd_survey)

    for name, func in (("template", cmd_template), ("normalize", cmd_normalize)):
        sub = subparsers.add_parser(name, parents=[common], help=f"Print the {name}d TRS")
        sub.add_argument("--kind", "-k", choices=kinds, default="full")
        sub.add_argument("file")
        sub.set_defaults(func=func)

    sub = subparsers.add_parser("encode", parents=[common], help="Print a graph encoding")
    sub.add_argument("--kind", "-k", choices=["forest", "gf", "gv", "full"], default="full")
    sub.add_argument("--format", choices=["json", "dot"], default="json")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_encode)

    sub = subparsers.add_parser("graph2trs", parents=[common], help="Encode a directed graph as TRS")
    sub.add_argument("--kind", "-k", choices=["funcs", "vars"], default="funcs")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_graph2trs)

    sub = subparsers.add_parser("probe", parents=[common], help="Bounded termination or convertibility probe")
    sub.add_argument("file")
    sub.add_argument("--term", required=True)
    sub.add_argument("--to", help="Probe convertibility into this term instead of termination")
    sub.set_defaults(func=cmd_probe)

    sub = subparsers.add_parser("corpus", parents=[common], help="List or print bundled fixtures")
    sub.add_argument("name", nargs="?")
    sub.add_argument("--list", action="store_true")
    sub.add_argument("--group", choices=["trs", "graphs"], default=None)
    sub.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code not in (0, None) else 0

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NormalFormViolation as err:
        print(f"normal-form precondition violated: {err}", file=sys.stderr)
        return EXIT_NORMAL_FORM
    except SizeGuardExceeded as err:
        print(f"size guard exceeded: {err}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (ValueError, KeyError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


# debugging
if __name__ == "__main__":
    sys.exit(main())
