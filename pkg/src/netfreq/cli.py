"""Command-line interface: ``netfreq {build,query,all,stats,fib,bench,corpus}``.

Exit codes: 0 success, 1 generic failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import oracle
from .bench import MODES, BenchQuerySpec, english_like_corpus, format_csv, format_queries, generate_queries, run_bench, summary_rows
from .crl import build_crl
from .errors import IndexFormatError, OutOfRange, SentinelCollision
from .fibonacci import fib_word, verify_fibonacci_theorems
from .nf_all import (
    all_nf_extract_direct,
    all_nf_extract_traverse,
    format_json,
    format_tsv,
    records_from_multiset,
    records_from_reports,
    traverse_reports,
    unescape_bytes,
)
from .nf_query import STRATEGIES, nf_function
from .stats import compute_stats, nf_totals
from .suffix_index import build_index, frequency, load_index, save_index, text_from_index
from .text import SENTINEL, Text, load_text, read_text

EXIT_FAILURE = 1
EXIT_INVALID = 2


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, allow_index: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("input", nargs="?", help="input file, read as raw bytes")
    group.add_argument("--text", help="use this literal string as the input text")
    group.add_argument("--fib", type=int, metavar="I", help="use the I-th Fibonacci word as the input text")
    if allow_index:
        group.add_argument("--index", metavar="PATH", help="load a prebuilt NFIX1 index")


def _load_source(args) -> tuple[Text, object | None]:
    if getattr(args, "index", None):
        idx = load_index(args.index, validate=True)
        return text_from_index(idx), idx
    if args.text is not None:
        return load_text(unescape_bytes(args.text)), None
    if args.fib is not None:
        return load_text(fib_word(args.fib).content), None
    return read_text(args.input), None


def _indexed(args):
    t, idx = _load_source(args)
    if idx is None:
        idx = build_index(t)
    return t, idx


def cmd_build(args) -> int:
    t, _ = _load_source(args)
    start = time.perf_counter()
    idx = build_index(t)
    elapsed = time.perf_counter() - start
    save_index(idx, args.output)
    print(f"n={idx.n} sigma={idx.sigma} build_seconds={elapsed:.3f}")
    return 0


def cmd_query(args) -> int:
    pattern = unescape_bytes(args.pattern)
    if not pattern:
        raise UsageError("pattern must be non-empty")
    if SENTINEL in pattern:
        raise UsageError("pattern contains the sentinel byte")
    t, idx = _indexed(args)
    crl = build_crl(idx) if args.algo == "crl" else None
    nf = nf_function(args.algo, idx, t, crl)(pattern)
    print(f"nf={nf} f={frequency(idx, t, pattern)}")
    if args.oracle:
        brute = oracle.BruteForce(t)
        by_def = brute.nf_by_definition(pattern)
        by_char = brute.nf_by_characteristic(pattern)
        print(f"oracle_definition={by_def} oracle_characteristic={by_char}")
        if not nf == by_def == by_char:
            print("oracle mismatch", file=sys.stderr)
            return EXIT_FAILURE
    return 0


def cmd_all(args) -> int:
    t, idx = _indexed(args)
    if args.mode == "report":
        if args.algo != "traverse":
            raise UsageError("report mode needs --algo traverse")
        reports = traverse_reports(idx, t)
        records = records_from_reports(t, reports, args.min_len)
        data = t.data
        multiset = {data[r.span.start - 1 : r.span.start - 1 + r.span.length]: r.nf for r in reports}
    else:
        multiset = all_nf_extract_direct(idx, t) if args.algo == "direct" else all_nf_extract_traverse(idx, t)
        records = records_from_multiset(multiset, args.min_len)
    out = sys.stdout
    if args.format == "json":
        out.write(format_json(records))
    else:
        out.writelines(format_tsv(records))
    totals = nf_totals(multiset)
    print(
        f"strings={totals['distinct_pos_nf']} sum_nf={totals['sum_nf']} N={totals['big_n']} L={totals['big_l']}",
        file=sys.stderr,
    )
    violated = compute_stats(idx, t, multiset).check_bounds()
    if violated:
        print(f"bound violated: {', '.join(violated)}", file=sys.stderr)
        return EXIT_FAILURE
    return 0


def cmd_stats(args) -> int:
    t, idx = _indexed(args)
    multiset = all_nf_extract_traverse(idx, t)
    report = compute_stats(idx, t, multiset).to_json()
    if args.upper_bound is not None:
        report["upper_bounded"] = {"max_len": args.upper_bound, **nf_totals(multiset, args.upper_bound)}
    print(json.dumps(report, indent=1))
    return 0


def cmd_fib(args) -> int:
    if args.verify:
        print(json.dumps(verify_fibonacci_theorems(args.i).to_json(), indent=1))
    else:
        print(fib_word(args.i).content.decode("ascii"))
    return 0


def cmd_bench(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("NF_SEED", "0"))
    spec = BenchQuerySpec(
        mode=args.mode,
        min_len=args.min_len,
        max_len=args.max_len,
        count=args.count,
        seed=seed,
        delimiter=args.delimiter,
    )
    t, idx = _indexed(args)
    crl = build_crl(idx)
    queries = generate_queries(t, spec)
    algos = tuple(a.strip() for a in args.algos.split(","))
    for a in algos:
        if a not in STRATEGIES:
            raise UsageError(f"unknown algorithm {a!r}")
    result = run_bench(idx, t, crl, queries, algos, threads=args.threads)
    csv_text = format_csv(summary_rows(result))
    if args.output:
        Path(args.output).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.queries_out:
        Path(args.queries_out).write_text(format_queries(result))
    return 0


def cmd_corpus(args) -> int:
    Path(args.output).write_bytes(english_like_corpus(args.size, args.seed))
    return 0


def _byte(value: str) -> int:
    v = int(value, 0)
    if not 0 < v < 256:
        raise argparse.ArgumentTypeError("delimiter must be a nonzero byte value")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netfreq", description="Net frequency of strings via augmented suffix arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and save an NFIX1 index")
    _add_source(p, allow_index=False)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="net frequency of one pattern")
    p.add_argument("pattern", help="literal pattern; \\xHH escapes allowed")
    _add_source(p)
    p.add_argument("--algo", choices=STRATEGIES, default="crl")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("all", help="every string with positive net frequency")
    _add_source(p)
    p.add_argument("--mode", choices=("extract", "report"), default="extract")
    p.add_argument("--algo", choices=("direct", "traverse"), default="traverse")
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_all)

    p = sub.add_parser("stats", help="corpus statistics as JSON")
    _add_source(p)
    p.add_argument("--upper-bound", type=int, metavar="LEN", help="also report totals over strings of length <= LEN")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("fib", help="print or verify a Fibonacci word")
    p.add_argument("i", type=int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("bench", help="time SINGLE-NF strategies on generated queries")
    _add_source(p)
    p.add_argument("--mode", choices=MODES, default="token-concat")
    p.add_argument("--min-len", type=int, default=5)
    p.add_argument("--max-len", type=int, default=35)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, help="defaults to $NF_SEED, then 0")
    p.add_argument("--delimiter", type=_byte, default=0x20)
    p.add_argument("--algos", default=",".join(STRATEGIES))
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output", help="CSV destination (default stdout)")
    p.add_argument("--queries-out", help="write the generated queries with f and NF")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("corpus", help="write a deterministic English-like corpus")
    p.add_argument("output")
    p.add_argument("--size", type=int, default=10_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SentinelCollision, OutOfRange, IndexFormatError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
