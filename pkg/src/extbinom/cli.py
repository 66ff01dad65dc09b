"""Command-line front end: ``extbinom <subcommand> ...``.

Exit status: 0 on success, 1 when a verification sweep (or a bench cross-check)
finds a mismatch, 2 on usage errors and violated hypotheses.
"""
from __future__ import annotations

import argparse
import json
import sys
import textwrap
import time

from . import congruences, exact, formats, modular, primes
from .errors import ExtBinomError
from .weights import format_spec, parse

GRAMMAR = textwrap.dedent(
    """\
    weight spec grammar:
      spec   := "table:" pairs | "set:" ints | "odd" | "id" | "ones"
              | "avoid:a=" int ",m=" int | "binom"
      pairs  := int "=" int ("," int "=" int)*
      ints   := int ("," int)*
      suffix := "|zero=" ints | "|put=" pairs
    ranges: NAME=ITEM[,ITEM...] with ITEM an int, a..b (inclusive) or a word,
      e.g. --ranges p=2,3,5 n=0..30 family=pair,odd
    environment: EXTBINOM_BUDGET overrides the enumeration budget"""
)

_DEFAULT_FORMAT = {
    "compute": "tsv",
    "triangle": "tsv",
    "sequence": "tsv",
    "bracket": "tsv",
    "verify": "json",
    "prime": "json",
    "bench": "json",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def parse_ranges(tokens):
    """``["p=2,3", "n=0..4"]`` -> ``{"p": [2, 3], "n": [0, 1, 2, 3, 4]}``."""
    ranges = {}
    for token in tokens or ():
        name, sep, body = token.partition("=")
        if not sep or not name:
            raise UsageError(f"bad range {token!r}; expected NAME=ITEMS")
        items = []
        for item in body.split(","):
            lo, dots, hi = item.partition("..")
            try:
                if dots:
                    a, b = int(lo), int(hi)
                    if a < 0 or b < a:
                        raise UsageError(f"bad range {item!r} in {token!r}")
                    items.extend(range(a, b + 1))
                elif item.isdigit():
                    items.append(int(item))
                elif item.isidentifier():
                    items.append(item)
                else:
                    raise UsageError(f"bad item {item!r} in {token!r}")
            except ValueError:
                raise UsageError(f"bad range {item!r} in {token!r}") from None
        ranges[name] = items
    return ranges


def build_parser():
    parser = _Parser(
        prog="extbinom",
        description="Extended binomial coefficients <k,n>_f and their congruences.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, epilog=GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--format", choices=["tsv", "json"], default=_DEFAULT_FORMAT[name])
        p.add_argument("--budget", type=_nonneg, help="enumeration budget (tuples)")
        return p

    p = add("compute", "one coefficient <k,n>_f, optionally mod a prime")
    p.add_argument("--weights", required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--mod", type=_nonneg, help="prime modulus (uses the digit recursion)")
    p.add_argument("--method", choices=["power", "rows", "partitions", "enumeration"], default="power")
    p.add_argument("--cap", type=_nonneg, default=modular.DEFAULT_CAP)

    p = add("triangle", "rows 0..R, columns 0..C of the triangle")
    p.add_argument("--weights", required=True)
    p.add_argument("--rows", type=_nonneg, required=True)
    p.add_argument("--cols", type=_nonneg, required=True)

    p = add("sequence", "c_f(0..N), compositions with any number of parts")
    p.add_argument("--weights", required=True)
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("bracket", "sum of <k,n>_f over n = r (mod m)")
    p.add_argument("--weights", required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)

    p = add("verify", "sweep one theorem over parameter ranges")
    p.add_argument("--theorem", required=True, choices=congruences.THEOREMS)
    p.add_argument("--ranges", nargs="+", default=[])
    p.add_argument("--weights", action="append", default=[], help="repeat for a corpus")

    p = add("prime", "primality by the weighted Mann-Shanks criterion")
    p.add_argument("--weights", default="binom")
    p.add_argument("--n", type=int, required=True)

    p = add("bench", "digit recursion vs exact-then-reduce timing")
    p.add_argument("--weights", required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--no-exact", action="store_true", help="skip the exact path")
    p.add_argument("--cap", type=_nonneg, default=modular.DEFAULT_CAP)
    return parser


# -- subcommands: each returns (payload for json, text for tsv, exit code) ----

def _compute(args):
    f = parse(args.weights)
    if args.mod is not None:
        value = modular.granville_mod(args.k, args.n, f, args.mod, cap=args.cap).value
    elif args.method == "rows":
        value = exact.triangle(f, args.k, args.n).value(args.k, args.n)
    elif args.method == "partitions":
        value = exact.ext_binom_by_partitions(args.k, args.n, f, args.budget)
    elif args.method == "enumeration":
        value = exact.count_by_enumeration(args.n, args.k, f, args.budget)
    else:
        value = exact.ext_binom(args.k, args.n, f)
    payload = {"weights": format_spec(f), "k": args.k, "n": args.n, "value": str(value)}
    if args.mod is not None:
        payload["modulus"] = args.mod
    return payload, f"{value}\n", 0


def _triangle(args):
    table = exact.triangle(parse(args.weights), args.rows, args.cols)
    return json.loads(formats.triangle_to_json(table)), formats.triangle_to_tsv(table), 0


def _sequence(args):
    seq = exact.c_sequence(parse(args.weights), args.n)
    return json.loads(formats.sequence_to_json(seq)), formats.sequence_to_tsv(seq), 0


def _bracket(args):
    f = parse(args.weights)
    if args.m < 1 or args.r >= args.m:
        raise UsageError("need m >= 1 and 0 <= r < m")
    value = exact.bracket(args.k, args.r, args.m, f)
    payload = {"weights": format_spec(f), "k": args.k, "r": args.r, "m": args.m, "value": str(value)}
    return payload, f"{value}\n", 0


def _verify(args):
    corpus = [parse(w) for w in args.weights] or [None]
    summary = congruences.sweep(args.theorem, parse_ranges(args.ranges), corpus)
    text = f"{summary.theorem_id}\t{summary.total_cases}\t{summary.skipped}\t{len(summary.failures)}\n"
    return summary.to_dict(), text, 0 if summary.ok else 1


def _prime(args):
    f = parse(args.weights)
    verdict = primes.mann_shanks_is_prime(args.n, f)
    oracle = primes.trial_division_is_prime(args.n)
    payload = {
        "n": verdict.n,
        "weights": format_spec(f),
        "is_prime": verdict.is_prime,
        "witness": verdict.witness,
        "trial_division": oracle,
    }
    word = "prime" if verdict.is_prime else f"composite\twitness={verdict.witness}"
    return payload, f"{args.n}\t{word}\n", 0 if verdict.is_prime == oracle else 1


def _bench(args):
    f = parse(args.weights)
    start = time.perf_counter()
    fast = modular.granville_mod(args.k, args.n, f, args.p, cap=args.cap)
    fast_time = time.perf_counter() - start
    payload = {
        "weights": format_spec(f),
        "k": args.k,
        "n": args.n,
        "p": args.p,
        "granville": {"residue": fast.value, "seconds": fast_time},
        "exact": None,
        "match": None,
    }
    code = 0
    if not args.no_exact:
        start = time.perf_counter()
        slow = exact.ext_binom(args.k, args.n, f) % args.p
        payload["exact"] = {"residue": slow, "seconds": time.perf_counter() - start}
        payload["match"] = slow == fast.value
        code = 0 if payload["match"] else 1
    lines = [f"granville\t{fast.value}\t{fast_time:.6f}"]
    if payload["exact"] is not None:
        lines.append(f"exact\t{payload['exact']['residue']}\t{payload['exact']['seconds']:.6f}")
    return payload, "\n".join(lines) + "\n", code


_COMMANDS = {
    "compute": _compute,
    "triangle": _triangle,
    "sequence": _sequence,
    "bracket": _bracket,
    "verify": _verify,
    "prime": _prime,
    "bench": _bench,
}


def _wants_json(argv):
    if "--format" in argv:
        i = argv.index("--format")
        return i + 1 < len(argv) and argv[i + 1] == "json"
    if "--format=json" in argv:
        return True
    command = next((a for a in argv if a in _DEFAULT_FORMAT), None)
    return _DEFAULT_FORMAT.get(command) == "json"


def run(argv, out=None, err=None):
    """Run the CLI on ``argv``; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    as_json = _wants_json(argv)
    try:
        args = build_parser().parse_args(argv)
        payload, text, code = _COMMANDS[args.command](args)
    except (UsageError, ExtBinomError, ValueError) as exc:
        if as_json:
            out.write(json.dumps({"error": str(exc), "kind": type(exc).__name__}) + "\n")
        else:
            err.write(f"extbinom: error: {exc}\n\n{GRAMMAR}\n")
        return 2
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text)
    return code


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)
