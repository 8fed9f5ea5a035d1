import argparse
import sys

from src.codec import parse_element, parse_point, parse_quot, render
from src.congruence import canonical, lift, top
from src.errors import IPFError, ParseError
from src.monoid import apply, compose, inverse, psi
from src.order import GREEN_RELATIONS, green, nat_leq
from src.suites import SUITES, run_verify
from src.utils import create_logger, load_config

ERROR_PREFIX = "error: "


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true",
                        help="Reject stored default values (1 in NSeq, 0 in ZSeq) and fixed points in permutations")
    common.add_argument("--log_level", default=None, type=str, help="Logging level, e.g. INFO or DEBUG")

    parser = argparse.ArgumentParser(prog="ipf_cli.py",
                                     description="Exact arithmetic in the inverse monoid IPF(sigma-N^kappa)")
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb, names, help_text in [
        ("compose", ("A", "B"), "Product A then B"),
        ("inverse", ("A",), "Inverse element"),
        ("apply", ("A", "P"), "Image of the point P under A"),
        ("canonical", ("A",), "Class of A in the maximal group image"),
        ("top", ("A",), "Greatest element congruent to A"),
        ("leq", ("A", "B"), "Natural partial order A <= B"),
        ("psi", ("A",), "Image of A in the semidirect product"),
    ]:
        sub = verbs.add_parser(verb, parents=[common], help=help_text)
        for name in names:
            sub.add_argument(name, type=str)

    sub = verbs.add_parser("green", parents=[common], help="Green's relation between A and B")
    sub.add_argument("relation", choices=GREEN_RELATIONS)
    sub.add_argument("A", type=str)
    sub.add_argument("B", type=str)

    sub = verbs.add_parser("lift", parents=[common], help="An element whose class is the quotient element Q")
    sub.add_argument("Q", type=str)

    sub = verbs.add_parser("verify", parents=[common], help="Run the seeded property suites")
    sub.add_argument("--suite", default=None, type=str, choices=["all"] + list(SUITES),
                     help="Suite to run, `all` runs every suite")
    sub.add_argument("--cases", default=None, type=int, help="Cases per suite")
    sub.add_argument("--seed", default=None, type=int, help="Random seed")
    sub.add_argument("--bound", default=None, type=int, help="Grid bound used by the oracle suite")
    sub.add_argument("--config", default=None, type=str, help="YAML file with the suite parameters")
    sub.add_argument("--report_format", default="text", type=str, choices=["text", "jsonl"],
                     help="Plain text summary or JSON lines")
    return parser


def execute(args):
    strict = args.strict
    if args.verb == "compose":
        return render(compose(parse_element(args.A, strict), parse_element(args.B, strict))), 0
    if args.verb == "inverse":
        return render(inverse(parse_element(args.A, strict))), 0
    if args.verb == "apply":
        return render(apply(parse_element(args.A, strict), parse_point(args.P, strict))), 0
    if args.verb == "canonical":
        return render(canonical(parse_element(args.A, strict))), 0
    if args.verb == "top":
        return render(top(parse_element(args.A, strict))), 0
    if args.verb == "leq":
        return render(nat_leq(parse_element(args.A, strict), parse_element(args.B, strict))), 0
    if args.verb == "green":
        return render(green(args.relation, parse_element(args.A, strict), parse_element(args.B, strict))), 0
    if args.verb == "lift":
        return render(lift(parse_quot(args.Q, strict))), 0
    if args.verb == "psi":
        return render(psi(parse_element(args.A, strict))), 0
    if args.verb == "verify":
        cfg = load_config(args.config, dict(suite=args.suite, cases=args.cases, seed=args.seed, bound=args.bound))
        if cfg.cases < 0:
            raise ParseError(f"`cases` has to be non-negative but is {cfg.cases}", "--cases")
        if cfg.bound < 2:
            raise ParseError(f"`bound` has to be at least 2 but is {cfg.bound}", "--bound")
        if cfg.suite not in ["all", *SUITES]:
            raise ParseError(f"unknown suite {cfg.suite!r}, expected one of {['all', *SUITES]}", "--suite")
        if args.log_level is None:
            create_logger(level=cfg.get("log_level", "WARNING"))
        report, _, ok = run_verify(cfg, args.report_format)
        return report, 0 if ok else 1
    raise ValueError(f"Unknown verb: {args.verb}")


def run(argv):
    """Runs one command line and returns its output text and exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage errors were already reported by argparse
        return "", 2 if e.code else 0
    if args.log_level is not None:
        create_logger(level=args.log_level)
    try:
        return execute(args)
    except ParseError as e:
        return f"{ERROR_PREFIX}{e}", 2
    except IPFError as e:
        return f"{ERROR_PREFIX}{e}", 1


def main():
    text, code = run(sys.argv[1:])
    if text:
        print(text, file=sys.stderr if text.startswith(ERROR_PREFIX) else sys.stdout)
    sys.exit(code)


if __name__ == "__main__":
    main()
