"""Command-line interface.

Machine output (JSON or CSV) goes to stdout; human-readable notes go to
stderr, except for `verify`, whose machine report is a file and whose
summary goes to stdout.  Exit codes: 0 = property holds / suite passed,
1 = property violated / suite failed, 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import verifier
from .enumeration import (
    DEFAULT_EXHAUSTIVE_CEILING,
    EnumerationQuery,
    count_words,
    enumerate_words,
)
from .factorization import decomposition_tower, factorize
from .morphisms import parse_morphism
from .repetitions import Threshold, find_occurrences, is_power_free
from .words import Word, WordError

__all__ = ["main"]


def _fail(message: str) -> int:
    print(f"powerlab: error: {message}", file=sys.stderr)
    return 2


def _listing_ceiling() -> int:
    raw = os.environ.get("POWERLAB_MAX_ENUM")
    if raw is None:
        return DEFAULT_EXHAUSTIVE_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"POWERLAB_MAX_ENUM must be an integer, got {raw!r}")


def _cmd_check(args: argparse.Namespace) -> int:
    threshold = Threshold.parse(args.threshold)
    if args.stdin:
        texts = [line.strip() for line in sys.stdin if line.strip()]
    else:
        texts = args.words
    if not texts:
        return _fail("no words given (pass words or --stdin)")
    words = [Word(text) for text in texts]
    any_violation = False
    for w in words:
        free = is_power_free(w, threshold)
        occurrences = [] if free else [o.to_json() for o in find_occurrences(w, threshold)]
        any_violation |= not free
        print(
            json.dumps(
                {
                    "word": str(w),
                    "threshold": str(threshold),
                    "free": free,
                    "occurrences": occurrences,
                },
                sort_keys=True,
            )
        )
        verdict = "free" if free else f"{len(occurrences)} violating occurrence(s)"
        print(f"{w[:40]}{'...' if len(w) > 40 else ''}: {verdict}", file=sys.stderr)
    return 1 if any_violation else 0


def _cmd_scan(args: argparse.Namespace) -> int:
    threshold = Threshold.parse(args.threshold)
    w = Word(args.word)
    occurrences = find_occurrences(w, threshold)
    print(json.dumps([o.to_json() for o in occurrences]))
    return 1 if occurrences else 0


def _cmd_factorize(args: argparse.Namespace) -> int:
    threshold = Threshold.parse(args.threshold)
    w = Word(args.word)
    if args.tower:
        tower = decomposition_tower(w, threshold, min_core=args.min_core)
        print(json.dumps(tower.to_json()))
    else:
        splits = factorize(w, threshold)
        print(json.dumps([s.to_json() for s in splits]))
    return 0


def _cmd_morphism(args: argparse.Namespace) -> int:
    h = parse_morphism(args.morphism)
    action = args.action
    if action == "apply":
        if args.operand is None:
            return _fail("apply needs a word operand")
        print(h(Word(args.operand)))
    elif action == "classify":
        from .morphisms import classify_form

        print(classify_form(h))
    elif action == "fixpoint":
        if args.length is None:
            return _fail("fixpoint needs --length")
        print(h.fixed_point_prefix(args.start, args.length))
    elif action == "compose":
        if args.operand is None:
            return _fail("compose needs a second morphism operand")
        print(h.compose(parse_morphism(args.operand)).to_text())
    elif action == "power":
        if args.operand is None:
            return _fail("power needs an integer operand")
        try:
            k = int(args.operand)
        except ValueError:
            return _fail(f"power operand must be an integer, got {args.operand!r}")
        print(h.power(k).to_text())
    elif action == "images":
        print(json.dumps(h.to_json(), sort_keys=True))
    else:  # pragma: no cover - argparse restricts choices
        return _fail(f"unknown action {action!r}")
    return 0


def _cmd_tm(args: argparse.Namespace) -> int:
    from .morphisms import thue_morse_direct

    print(thue_morse_direct(args.length))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    ceiling = _listing_ceiling()
    if args.length > ceiling:
        return _fail(
            f"length {args.length} exceeds the listing ceiling {ceiling} "
            f"(set POWERLAB_MAX_ENUM to raise it)"
        )
    query = EnumerationQuery(
        length=args.length,
        threshold=Threshold.parse(args.threshold),
        prefix=Word(args.prefix) if args.prefix is not None else None,
        suffix=Word(args.suffix) if args.suffix is not None else None,
        forbidden_prefix=Word(args.no_prefix) if args.no_prefix is not None else None,
        forbidden_suffix=Word(args.no_suffix) if args.no_suffix is not None else None,
        first_symbol=args.first_symbol,
    )
    for w in enumerate_words(query):
        print(w)
    return 0


def _parse_lengths(spec: str) -> range:
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(spec)
    if lo < 0 or hi < lo:
        raise ValueError(f"bad length range {spec!r}")
    return range(lo, hi + 1)


def _cmd_count(args: argparse.Namespace) -> int:
    lengths = _parse_lengths(args.lengths)
    table = count_words(lengths, Threshold.parse(args.threshold))
    if args.format == "json":
        print(json.dumps({str(n): table[n] for n in sorted(table)}))
    else:
        print("length,count")
        for n in sorted(table):
            print(f"{n},{table[n]}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = verifier.VerifierConfig(
        lemma1_length=args.lemma1_length,
        lemma1_symmetry=not args.no_symmetry,
        lemma2_max_core=args.lemma2_max_core,
        lemma3_max_j=args.lemma3_max_j,
        lemma6_bound=args.lemma6_bound,
        theorem9_prefix_length=args.theorem9_length,
        intro_prefix_length=args.intro_length,
    )
    ids = verifier.claim_ids(config)
    if args.list:
        for cid in ids:
            print(cid)
        return 0
    selection: Optional[list[str]] = None
    wanted = args.claims or ["all"]
    if wanted != ["all"]:
        unknown = [cid for cid in wanted if cid not in ids]
        if unknown:
            return _fail(
                f"unknown claim id(s) {unknown}; valid ids: {ids}"
            )
        selection = wanted
    report = verifier.run_all(config, only=selection)
    with open(args.report, "w", encoding="utf-8") as handle:
        json.dump(report.to_json(), handle, indent=2, sort_keys=True)
        handle.write("\n")
    for line in report.summary_lines():
        print(line)
    print(f"report written to {args.report}")
    return 0 if report.overall else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerlab",
        description="Fractional-repetition analysis of binary words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test words against an exponent threshold")
    p.add_argument("words", nargs="*", help="binary words (ASCII 0/1)")
    p.add_argument("--threshold", "-t", default="7/3", help='e.g. "7/3", "7/3+", "2+"')
    p.add_argument("--stdin", action="store_true", help="read one word per line")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("scan", help="list all maximal violating repetitions")
    p.add_argument("word")
    p.add_argument("--threshold", "-t", default="7/3")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("factorize", help="split a free word as u*MU(y)*v")
    p.add_argument("word")
    p.add_argument("--threshold", "-t", default="7/3")
    p.add_argument("--tower", action="store_true", help="iterate to a short core")
    p.add_argument("--min-core", type=int, default=7)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("morphism", help="apply, iterate, or classify a morphism")
    p.add_argument("morphism", help='"0->01;1->10" or a name (mu, E, id, h-seebold19)')
    p.add_argument(
        "action",
        choices=["apply", "classify", "fixpoint", "compose", "power", "images"],
    )
    p.add_argument("operand", nargs="?", help="word / morphism / integer, per action")
    p.add_argument("--length", type=int, help="prefix length for fixpoint")
    p.add_argument("--start", default="0", choices=["0", "1"], help="fixpoint seed")
    p.set_defaults(func=_cmd_morphism)

    p = sub.add_parser("tm", help="Thue-Morse prefix via popcount parity")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=_cmd_tm)

    p = sub.add_parser("enumerate", help="list threshold-free words of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--threshold", "-t", default="7/3")
    p.add_argument("--prefix")
    p.add_argument("--suffix")
    p.add_argument("--no-prefix")
    p.add_argument("--no-suffix")
    p.add_argument("--first-symbol", choices=["0", "1"])
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="count threshold-free words per length")
    p.add_argument("--lengths", required=True, help='"1..14" or a single length')
    p.add_argument("--threshold", "-t", default="7/3")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="run the claim-verification suite")
    p.add_argument("claims", nargs="*", help='claim ids, or "all" (default)')
    p.add_argument("--report", default="verification-report.json")
    p.add_argument("--list", action="store_true", help="print claim ids and exit")
    p.add_argument("--lemma1-length", type=int, default=52)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--lemma2-max-core", type=int, default=8)
    p.add_argument("--lemma3-max-j", type=int, default=3)
    p.add_argument("--lemma6-bound", type=int, default=10000)
    p.add_argument("--theorem9-length", type=int, default=100000)
    p.add_argument("--intro-length", type=int, default=4096)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (WordError, ValueError, KeyError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
