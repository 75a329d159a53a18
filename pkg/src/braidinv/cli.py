"""Command-line front end.

Subcommands: invariants, exchange, family, morton-replay, scan.  Output is
human-readable text by default; --json switches to the documented JSON
schemas (all carry "schema": 1).  Exit codes: 0 success, 2 parse error,
3 domain error (closure is not a knot), 4 illegal move in a replay script.

The environment variable BRAID_TRUNC_ORDER overrides the default series
truncation order used for the q invariants.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families
from .algebra import exp_substitute
from .braid import (
    BraidWord,
    ExchangePair,
    MoveError,
    ParseError,
    parse_braid,
    run_script,
    triviality_filters,
)
from .fiedler import NotAKnotError, exchange_analysis, fiedler_poly
from .qinv import (
    conjecture_scan,
    evaluate_pair,
    q_difference,
    q_invariant,
    scan_to_jsonl,
    trace_of,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_MOVE = 4


def _orders(text):
    try:
        return sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError:
        raise ParseError(f"bad order list {text!r}") from None


def _trunc_override():
    raw = os.environ.get("BRAID_TRUNC_ORDER")
    return int(raw) if raw else None


def _parse_word(text, n=None):
    if n is not None and "n=" not in text:
        text = f"n={n}; {text}"
    return parse_braid(text)


def cmd_invariants(args, out):
    w = _parse_word(args.braid, args.n)
    perm = w.permutation(allow_singular=True)
    report = {
        "schema": 1,
        "word": w.to_json(),
        "n": w.n,
        "writhe": w.writhe() if not w.has_singular else None,
        "is_knot": w.is_knot(),
        "permutation": str(perm),
    }
    trunc = _trunc_override()
    if args.fiedler:
        poly = fiedler_poly(w)  # raises NotAKnotError when not a knot
        report["fiedler"] = poly.to_json()
        report["fiedler_text"] = str(poly)
    if args.tl_trace:
        tr = trace_of(w)
        report["tl_trace"] = tr.to_json()
        report["tl_trace_text"] = str(tr)
    if args.q is not None:
        orders = _orders(args.q)
        qs = {}
        for k in orders:
            qs[str(k)] = q_invariant(w, k, trunc=trunc).to_json()
        report["q"] = qs
    if args.json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"word: {w.to_text()}\n")
    out.write(f"writhe: {report['writhe']}\n")
    out.write(f"permutation: {report['permutation']}\n")
    out.write(f"is_knot: {report['is_knot']}\n")
    if args.fiedler:
        out.write(f"fiedler: {report['fiedler_text']}\n")
    if args.tl_trace:
        out.write(f"tl_trace: {report['tl_trace_text']}\n")
    if args.q is not None:
        for k in sorted(report["q"], key=int):
            out.write(f"q_{k}: {q_invariant(w, int(k), trunc=trunc)}\n")
    return EXIT_OK


def cmd_exchange(args, out):
    X = _parse_word(args.X, args.n)
    Y = _parse_word(args.Y, args.n)
    pair = ExchangePair(X, Y)
    report = triviality_filters(X, Y)
    payload = {
        "schema": 1,
        "n": pair.n,
        "X": X.to_json(),
        "Y": Y.to_json(),
        "beta1": pair.beta1.to_json(),
        "beta2": pair.beta2.to_json(),
        "flags": report.to_json(),
    }
    trunc = _trunc_override()
    analysis = exchange_analysis(pair) if pair.beta1.is_knot() else None
    payload["analysis"] = analysis.to_json() if analysis else None
    q_diffs = {}
    for k in _orders(args.orders):
        q_diffs[str(k)] = q_difference(pair, k, trunc=trunc).to_json()
    payload["q_differences"] = q_diffs
    distinguished = (analysis is not None and not analysis.vanishes) or any(
        v for v in q_diffs.values()
    )
    payload["verdict"] = (
        "distinguished: not conjugate" if distinguished else "not distinguished"
    )
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"beta1: {pair.beta1.to_text()}\n")
    out.write(f"beta2: {pair.beta2.to_text()}\n")
    for flag in report.flags:
        out.write(f"flag: {flag}\n")
    if analysis is not None:
        out.write(f"m1: {analysis.m1}  m2: {analysis.m2}  l: {analysis.l}\n")
        out.write(
            f"cycle lengths: first {list(analysis.first_lengths)}, second {list(analysis.second_lengths)}\n"
        )
        out.write(f"fiedler difference: {analysis.difference}\n")
    else:
        out.write("closure is not a knot; crossing-sum analysis skipped\n")
    for k in sorted(q_diffs, key=int):
        out.write(f"q_{k} difference: {q_difference(pair, int(k), trunc=trunc)}\n")
    out.write(f"verdict: {payload['verdict']}\n")
    return EXIT_OK


def cmd_family(args, out):
    if args.name == "ex1":
        pair = families.example1(args.k)
    elif args.name == "ex2":
        pair = families.example2()
    elif args.name == "ex3":
        if args.family_n is None or args.i is None:
            raise ParseError("ex3 requires --n and --i")
        if args.family_n % 2:
            raise ParseError("ex3 requires even n")
        pair = families.example3(args.family_n, args.i)
    else:
        raise ParseError(f"unknown family {args.name!r}")
    payload = {
        "schema": 1,
        "X": pair.X.to_json(),
        "Y": pair.Y.to_json(),
        "beta1": pair.beta1.to_json(),
        "beta2": pair.beta2.to_json(),
    }
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"X: {pair.X.to_text()}\n")
    out.write(f"Y: {pair.Y.to_text()}\n")
    out.write(f"beta1: {pair.beta1.to_text()}\n")
    out.write(f"beta2: {pair.beta2.to_text()}\n")
    return EXIT_OK


def cmd_morton_replay(args, out):
    if args.script_file:
        with open(args.script_file) as fh:
            spec = json.load(fh)
        word = parse_braid(spec["start"])
        script = [tuple(step) for step in spec["steps"]]
    else:
        word = families.morton_unknot()
        script = families.MORTON_REPLAY_SCRIPT
    log = run_script(word, script)
    final = log[-1].after if log else word
    if final.letters or final.n != 1:
        raise MoveError(f"replay did not reach the empty 1-strand word: {final.to_text()}")
    if args.json:
        payload = {
            "schema": 1,
            "start": word.to_text(),
            "steps": [step.to_json() for step in log],
            "final": final.to_text(),
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    for step in log:
        args_txt = " ".join(map(str, step.args))
        out.write(
            f"step {step.index:2d}: {step.move} {args_txt}".rstrip()
            + f" -> {step.after.to_text()}\n"
        )
    out.write(f"final: {final.to_text()} (empty word on 1 strand)\n")
    return EXIT_OK


def _load_includes(path):
    pairs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            n = int(obj["n"])
            X = _parse_word(obj["X"], n)
            Y = _parse_word(obj["Y"], n)
            pairs.append(ExchangePair(X, Y))
    return pairs


def cmd_scan(args, out):
    include = _load_includes(args.include_file) if args.include_file else ()
    records, summary = conjecture_scan(
        args.scan_n, args.length, args.samples, args.seed, include=include
    )
    out.write(scan_to_jsonl(records, summary))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="braidinv",
        description="Exact conjugacy-class invariants of closed braids.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("invariants", help="invariants of one braid word")
    pi.add_argument("braid", help="braid text, e.g. '1 1 1' or 'n=4; 1 -2'")
    pi.add_argument("--n", type=int, default=None, help="strand count override")
    pi.add_argument("--fiedler", action="store_true")
    pi.add_argument("--tl-trace", action="store_true")
    pi.add_argument("--q", default=None, help="comma-separated orders, e.g. 0,1")
    pi.add_argument("--json", action="store_true")
    pi.set_defaults(func=cmd_invariants)

    pe = sub.add_parser("exchange", help="compare an exchange-related pair")
    pe.add_argument("X")
    pe.add_argument("Y")
    pe.add_argument("--n", type=int, default=None)
    pe.add_argument("--orders", default="1")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_exchange)

    pf = sub.add_parser("family", help="emit a named example family")
    pf.add_argument("name", choices=["ex1", "ex2", "ex3"])
    pf.add_argument("--k", type=int, default=0)
    pf.add_argument("--n", dest="family_n", type=int, default=None)
    pf.add_argument("--i", type=int, default=None)
    pf.add_argument("--json", action="store_true")
    pf.set_defaults(func=cmd_family)

    pm = sub.add_parser("morton-replay", help="replay the scripted unknot simplification")
    pm.add_argument("--json", action="store_true")
    pm.add_argument("--script-file", default=None, help="JSON replay script override")
    pm.set_defaults(func=cmd_morton_replay)

    ps = sub.add_parser("scan", help="sample exchange pairs and compare vanishing")
    ps.add_argument("--n", dest="scan_n", type=int, default=4)
    ps.add_argument("--length", type=int, default=10)
    ps.add_argument("--samples", type=int, default=100)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--include-file", default=None)
    ps.set_defaults(func=cmd_scan)

    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_PARSE
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except MoveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MOVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
