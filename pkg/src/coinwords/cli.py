"""Command-line front end.

Subcommands: counts, table, gf, stats, tail, threshold, simulate, verify.
Exit codes: 0 success, 1 usage error, 2 domain error (and verify exits 2 when
any cross-check fails).  Exact values are printed next to float
approximations, and CSV output carries exact decimal / num-den strings so it
round-trips losslessly.
"""

import argparse
import sys
from fractions import Fraction

from . import closedform, genfun, montecarlo, stats, verify
from .counting import CountSequence, builtin_spec, counts
from .words import Word, parse_word

__all__ = ["build_parser", "main"]

TABLE_WORDS = ("HHH", "HTT", "HHT", "HTH")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract here wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_word_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("word_pos", nargs="?", metavar="WORD", help="pattern over {H,T}")
    sub.add_argument("--word", dest="word_flag", help="pattern over {H,T}")


def _resolve_word(args: argparse.Namespace) -> Word:
    text = args.word_flag if args.word_flag is not None else args.word_pos
    if text is None:
        raise _UsageError("a word is required (positional or --word)")
    return parse_word(text)


class _UsageError(Exception):
    pass


def _print_counts_csv(seq: CountSequence) -> None:
    sys.stdout.write(seq.to_csv())


def _cmd_counts(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    n_max = args.n_flag if args.n_flag is not None else args.n_pos
    if n_max is None:
        raise _UsageError("a toss count is required (positional or --n-max)")
    seq = counts(w, n_max, engine=args.engine)
    if args.format == "csv":
        _print_counts_csv(seq)
    else:
        print(", ".join(str(v) for v in seq.values))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    header = ["word", "A", "B", "C"] + [f"a_W({n})" for n in range(1, 16)]
    rows = []
    for letters in TABLE_WORDS:
        w = Word(letters)
        spec = builtin_spec(w)
        seq = counts(w, 15, engine="recurrence")
        rows.append([letters, *map(str, spec.coefficients), *map(str, seq.values)])
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    else:
        for row in rows:
            coeffs = ", ".join(f"{c:>2s}" for c in row[1:4])
            print(f"{row[0]:<4s} {coeffs}   {', '.join(row[4:])}")
    return 0


def _cmd_gf(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    m = args.m
    partial = genfun.finite_gf(w, m)
    print(f"word: {w}")
    print(f"partial m={m}: {partial}")
    print(f"closed: {genfun.closed_gf(w)}")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    st = stats.moments(w)
    if args.format == "csv":
        print("word,mean,variance,stddev")
        print(f"{w},{st.mean},{st.variance},{st.stddev}")
    else:
        print(f"word={w} mean={st.mean} variance={st.variance} stddev={st.stddev}")
    return 0


def _cmd_tail(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    n = args.n_flag if args.n_flag is not None else args.n_pos
    if n is None:
        raise _UsageError("a toss index is required (positional or --n-max)")
    value = stats.tail(w, n)
    frac = value.as_fraction()
    if args.format == "csv":
        print("word,N,tail_exact_num,tail_exact_den,tail_float")
        print(f"{w},{n},{frac.numerator},{frac.denominator},{float(value)}")
    else:
        print(f"{value} ({float(value)})")
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    q = args.q_flag if args.q_flag is not None else args.q_pos
    if q is None:
        raise _UsageError("a quantile is required (positional or --q)")
    q = Fraction(q)
    n = stats.threshold(w, q)
    value = stats.tail(w, n)
    if args.format == "csv":
        print("word,q,N,tail_exact_num,tail_exact_den,tail_float")
        frac = value.as_fraction()
        print(f"{w},{q},{n},{frac.numerator},{frac.denominator},{float(value)}")
    else:
        print(f"N={n} tail={value} ({float(value)})")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    w = _resolve_word(args)
    cfg = montecarlo.TrialConfig(
        word=w, trials=args.trials, seed=args.seed, max_tosses_per_trial=args.cap
    )
    summary = montecarlo.run_trials(cfg, workers=args.workers)
    if args.format == "csv":
        sys.stdout.write(montecarlo.summary_csv(summary))
        print()
        sys.stdout.write(montecarlo.histogram_csv(summary))
    else:
        st = stats.moments(w) if len(w) in (2, 3) else None
        print(f"word={w} trials={summary.trials} seed={summary.seed} cap={cfg.max_tosses_per_trial}")
        print(f"completed={summary.count} truncated={summary.truncated}")
        if st is not None:
            print(f"empirical_mean={summary.mean} exact_mean={st.mean} ({float(st.mean)})")
            print(
                f"empirical_variance={summary.variance} "
                f"exact_variance={st.variance} ({float(st.variance)})"
            )
        else:
            print(f"empirical_mean={summary.mean}")
            print(f"empirical_variance={summary.variance}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    depth = "full" if args.full else "quick"
    results = verify.run_checks(depth=depth)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failed += not res.passed
        print(f"{status} {res.name}: {res.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed ({depth})")
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="coinwords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("counts", help="first-occurrence counts a(n)")
    _add_word_args(p)
    p.add_argument("n_pos", nargs="?", type=int, metavar="N_MAX")
    p.add_argument("--n-max", dest="n_flag", type=int)
    p.add_argument(
        "--engine",
        choices=("auto", "recurrence", "automaton", "brute"),
        default="auto",
    )
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("table", help="summary table of the length-3 patterns")
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("gf", help="partial-sum and closed generating functions")
    _add_word_args(p)
    p.add_argument("--m", type=int, default=8, help="partial-sum degree")
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("stats", help="exact mean, variance, stddev")
    _add_word_args(p)
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("tail", help="P(waiting time >= N), exact")
    _add_word_args(p)
    p.add_argument("n_pos", nargs="?", type=int, metavar="N")
    p.add_argument("--n-max", dest="n_flag", type=int, metavar="N")
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_tail)

    p = sub.add_parser("threshold", help="smallest N with tail(N) <= q")
    _add_word_args(p)
    p.add_argument("q_pos", nargs="?", metavar="Q")
    p.add_argument("--q", dest="q_flag", metavar="Q")
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("simulate", help="seeded Monte Carlo waiting times")
    _add_word_args(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=512)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "text"), default="text")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--quick", action="store_true", default=True)
    group.add_argument("--full", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors / --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
