"""Command-line front end.

Runs the decomposition and fairness algorithms on model files or on
generated benchmark families, optionally comparing the basic and the
improved variant, checking against the explicit oracles, and emitting CSV
step-count reports.  Exit codes: 0 ok, 1 validation or usage error,
2 oracle mismatch, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .errors import FairchkError, ModelError, UsageError
from .generate import FAMILIES, generate_objects
from .model import StreettPairs, parse_model, parse_pairs
from .runner import COMMANDS, oracle_matches, run_command

__all__ = ["main"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_ORACLE = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="fairchk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("--model", help="model file")
        p.add_argument("--pairs", help="pairs file")
        p.add_argument("--algorithm", default="improved",
                       choices=["basic", "improved", "both"])
        p.add_argument("--threshold", default="auto",
                       help="auto, practical, or a positive integer")
        p.add_argument("--backend", default="bitset",
                       choices=["bitset", "obdd"])
        p.add_argument("--compare", action="store_true",
                       help="run basic and improved on identical inputs")
        p.add_argument("--check-oracle", action="store_true",
                       help="validate results against the explicit oracle")
        p.add_argument("--debug-invariants", action="store_true",
                       help="enable internal invariant assertions")
        p.add_argument("--csv", help="write per-instance rows to this file")
        p.add_argument("--family", choices=list(FAMILIES),
                       help="generate instances instead of reading files")
        p.add_argument("--sizes", default="64",
                       help="comma-separated vertex counts for sweeps")
        p.add_argument("--seeds", type=int, default=1,
                       help="seeds 0..N-1 per size")
        p.add_argument("--k", type=int, default=1,
                       help="number of generated objective pairs")
        p.add_argument("--edge-factor", type=float, default=2.0,
                       help="edges per vertex for random families")
        p.add_argument("--random-fraction", type=float, default=0.2,
                       help="fraction of random vertices (mdp-random)")
        p.add_argument("--cycle-size", type=int, default=4,
                       help="cycle size for chain-of-cycles")
    return parser


def _parse_threshold(text):
    if text in ("auto", "practical"):
        return text
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"bad threshold {text!r}") from None
    if value < 1:
        raise UsageError("threshold must be positive")
    return value


def _load_instances(args):
    """Yield (instance_id, model, pairs) for files or generated sweeps."""
    if args.family:
        sizes = []
        for item in args.sizes.split(","):
            item = item.strip()
            if item:
                sizes.append(int(item))
        if not sizes or args.seeds < 1:
            raise UsageError("sweeps need at least one size and one seed")
        for n in sizes:
            for seed in range(args.seeds):
                model, pairs = generate_objects(
                    args.family,
                    n=n,
                    m=max(n, int(args.edge_factor * n)),
                    k=args.k,
                    cycle_size=args.cycle_size,
                    random_fraction=args.random_fraction,
                    seed=seed,
                )
                yield f"{args.family}-n{n}-s{seed}", model, pairs
        return
    if not args.model:
        raise UsageError("either --model or --family is required")
    try:
        model_text = Path(args.model).read_text()
    except OSError as exc:
        raise _IoError(str(exc)) from exc
    model = parse_model(model_text)
    if args.pairs:
        try:
            pairs_text = Path(args.pairs).read_text()
        except OSError as exc:
            raise _IoError(str(exc)) from exc
        pairs = parse_pairs(pairs_text, model.n)
    else:
        pairs = StreettPairs(0, ())
    yield Path(args.model).stem, model, pairs


class _IoError(FairchkError):
    pass


class _OracleMismatch(FairchkError):
    pass


def _print_report(instance, report):
    print(f"instance: {instance}")
    print(f"algorithm: {report.algorithm}")
    label = "mecs" if report.components is not None else "winning-set"
    if report.algorithm.startswith("scc"):
        label = "sccs"
    print(f"{label}: {report.result_text()}")
    c = report.counters
    main = report.main_counters
    print(
        f"steps: {main.headline} after preprocessing "
        f"(total pre={c.pre_ops} post={c.post_ops} cpre={c.cpre_ops} "
        f"set={c.set_ops} card={c.cardinality_ops} pick={c.pick_ops}; "
        f"preprocessing={report.preprocessing.headline})"
    )
    print(f"time: {report.wall_time:.6f}s")


def _run(args):
    threshold = _parse_threshold(args.threshold)
    compare = args.compare or args.algorithm == "both"
    algorithms = ["basic", "improved"] if compare else [args.algorithm]
    rows = []
    for instance, model, pairs in _load_instances(args):
        reports = {}
        for algorithm in algorithms:
            report = run_command(
                args.command, model, pairs,
                algorithm=algorithm,
                backend=args.backend,
                threshold=threshold,
                debug=args.debug_invariants,
            )
            reports[algorithm] = report
            if not args.family:
                _print_report(instance, report)
            if args.check_oracle:
                matched = oracle_matches(args.command, model, pairs, report)
                if not args.family:
                    print(f"oracle-match: {'true' if matched else 'false'}")
                if not matched:
                    raise _OracleMismatch(
                        f"oracle mismatch: instance={instance} "
                        f"algorithm={report.algorithm} n={model.n} "
                        f"m={model.m} k={pairs.k}"
                    )
        if compare:
            basic, improved = reports["basic"], reports["improved"]
            rows.append(
                {
                    "instance": instance,
                    "n": model.n,
                    "m": model.m,
                    "k": pairs.k,
                    "basic_steps": basic.main_steps,
                    "improved_steps": improved.main_steps,
                    "basic_time": f"{basic.wall_time:.6f}",
                    "improved_time": f"{improved.wall_time:.6f}",
                    "basic_prep_steps": basic.preprocessing.headline,
                    "improved_prep_steps": improved.preprocessing.headline,
                }
            )
            if args.family:
                print(
                    f"{instance}: basic_steps={basic.main_steps} "
                    f"improved_steps={improved.main_steps}"
                )
        else:
            report = reports[algorithms[0]]
            rows.append(
                {
                    "instance": instance,
                    "n": model.n,
                    "m": model.m,
                    "k": pairs.k,
                    "algorithm": report.algorithm,
                    "steps": report.main_steps,
                    "time": f"{report.wall_time:.6f}",
                    "prep_steps": report.preprocessing.headline,
                }
            )
            if args.family:
                print(f"{instance}: steps={report.main_steps}")
    if args.csv:
        try:
            with open(args.csv, "w", newline="") as handle:
                writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
                writer.writeheader()
                writer.writerows(rows)
        except OSError as exc:
            raise _IoError(str(exc)) from exc
        print(f"csv: {args.csv} ({len(rows)} rows)")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _OracleMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ORACLE
    except _IoError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ModelError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
