"""Command-line front end: ``enumerate``, ``bench`` and ``verify``.

Exit codes: 0 success, 1 property failure or aborted enumeration, 2 input
parse failure, 3 I/O failure, 4 guard violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Sequence

from . import checks
from .cone import all_roots
from .cuts import CutInvariantError
from .netlist_io import Dag, NetlistError, read_circuit
from .pipeline import CSV_HEADER, CircuitStats, default_jobs, enumerate_circuit

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_GUARD = 4
MAX_K = 16


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Dag:
    try:
        return read_circuit(path)
    except FileNotFoundError:
        raise CliError(EXIT_PARSE, f"cannot read {path}: no such file") from None
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None
    except NetlistError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise CliError(EXIT_GUARD, f"k must be in 1..{MAX_K}, got {k}")


def select_roots(dag: Dag, selector: str) -> list[int]:
    """``all``, ``outputs`` or a comma/space separated id list."""
    gates = set(all_roots(dag))
    if selector == "all":
        return sorted(gates)
    if selector == "outputs":
        outs = dag.outputs or tuple(v for v in range(dag.node_count) if not dag.fanouts[v])
        return sorted(v for v in set(outs) if v in gates)
    try:
        ids = [int(tok) for tok in selector.replace(",", " ").split()]
    except ValueError:
        raise CliError(EXIT_GUARD, f"bad roots selector {selector!r}") from None
    for v in ids:
        if v not in gates:
            raise CliError(EXIT_GUARD, f"root {v} is not a gate")
    return sorted(set(ids))


def _check_cone_limit(dag: Dag, roots: Sequence[int], limit: int | None) -> None:
    if limit is None:
        return
    widest = max((len(dag.fanins[r]) for r in roots), default=0)
    if limit < max(1, widest):
        raise CliError(EXIT_GUARD, f"cone limit {limit} below root fanin {widest}")


class _AtomicWriter:
    """Write to a temp file beside ``path``; rename into place on success."""

    def __init__(self, path: str):
        self.path = path
        directory = os.path.dirname(os.path.abspath(path))
        try:
            fd, self.tmp = tempfile.mkstemp(dir=directory, prefix=".strongcuts-")
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None
        self.fh = os.fdopen(fd, "w", encoding="utf-8", newline="\n")

    def __enter__(self):
        return self.fh

    def __exit__(self, exc_type, exc, tb):
        self.fh.close()
        if exc_type is None:
            try:
                os.replace(self.tmp, self.path)
            except OSError as err:
                os.unlink(self.tmp)
                raise CliError(EXIT_IO, f"cannot write {self.path}: {err.strerror}") from None
        else:
            os.unlink(self.tmp)
        return False


def _open_out(path: str | None):
    if path is None or path == "-":
        return _Stdout()
    if os.path.exists(path) and not os.path.isfile(path):
        # devices and pipes cannot be replaced by a rename
        return _DirectWriter(path)
    return _AtomicWriter(path)


class _DirectWriter:
    def __init__(self, path: str):
        try:
            self.fh = open(path, "w", encoding="utf-8", newline="\n")
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None

    def __enter__(self):
        return self.fh

    def __exit__(self, *exc):
        self.fh.close()
        return False


class _Stdout:
    def __enter__(self):
        return sys.stdout

    def __exit__(self, *exc):
        sys.stdout.flush()
        return False


def cmd_enumerate(args: argparse.Namespace) -> int:
    _check_k(args.k)
    dag = _load(args.input)
    roots = select_roots(dag, args.roots)
    _check_cone_limit(dag, roots, args.cone_limit)
    stats = CircuitStats(len(dag.inputs), dag.node_count, args.k, args.cone_limit)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    records = enumerate_circuit(
        dag, args.k, roots, args.cone_limit, stats, jobs=jobs, max_node_cut=args.max_node_cut
    )
    try:
        with _open_out(args.output) as out:
            if args.format == "csv":
                out.write(CSV_HEADER + "\n")
                for rec in records:
                    out.write(rec.to_csv() + "\n")
            else:
                for rec in records:
                    out.write(rec.to_json() + "\n")
        if args.stats:
            with _open_out(args.stats) as out:
                json.dump(stats.to_dict(), out, indent=2)
                out.write("\n")
    except OSError as exc:
        raise CliError(EXIT_IO, f"write failed: {exc}") from None
    return EXIT_OK


BENCH_COLUMNS = (
    "circuit", "inputs", "nodes", "k", "cone_limit",
    "cuts", "candidates", "prune_s", "enum_s",
)


def _parse_limit(tok: str) -> int | None:
    if tok.lower() in ("none", "no", "inf", "-"):
        return None
    try:
        return int(tok)
    except ValueError:
        raise CliError(EXIT_GUARD, f"bad cone limit {tok!r}") from None


def cmd_bench(args: argparse.Namespace) -> int:
    if not args.k:
        raise CliError(EXIT_GUARD, "empty k list")
    for k in args.k:
        _check_k(k)
    limits = [_parse_limit(tok) for tok in (args.cone_limit or ["none"])]
    jobs = args.jobs if args.jobs is not None else default_jobs()
    rows = []
    for path in sorted(args.input):
        dag = _load(path)
        roots = all_roots(dag)
        for k in args.k:
            for limit in limits:
                _check_cone_limit(dag, roots, limit)
                stats = CircuitStats(len(dag.inputs), dag.node_count, k, limit)
                for _ in enumerate_circuit(dag, k, roots, limit, stats, jobs=jobs):
                    pass
                rows.append((
                    os.path.basename(path), stats.inputs, stats.nodes, k,
                    "none" if limit is None else limit,
                    stats.total_cuts, stats.total_candidates,
                    f"{stats.prune_seconds:.3f}", f"{stats.enum_seconds:.3f}",
                ))
    fmt = args.report_format
    if fmt is None:
        fmt = "markdown" if (args.report or "").endswith(".md") else "csv"
    if fmt == "markdown":
        text = "| " + " | ".join(BENCH_COLUMNS) + " |\n"
        text += "|" + "---|" * len(BENCH_COLUMNS) + "\n"
        text += "".join("| " + " | ".join(map(str, r)) + " |\n" for r in rows)
    else:
        text = ",".join(BENCH_COLUMNS) + "\n"
        text += "".join(",".join(map(str, r)) + "\n" for r in rows)
    try:
        with _open_out(args.report) as out:
            out.write(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"write failed: {exc}") from None
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    _check_k(args.k)
    if args.trials < 0 or args.max_nodes < 3:
        raise CliError(EXIT_GUARD, "trials must be >= 0 and max-nodes >= 3")
    counts, bad = checks.verify_random(args.seed, args.trials, args.max_nodes, args.k)
    failed = {v.prop for v in bad}
    for prop in checks.PROPERTIES:
        status = "FAIL" if prop in failed else "ok"
        print(f"{prop:24s} {counts.get(prop, 0):6d} checks  {status}")
    print(f"total                    {sum(counts.values()):6d} checks")
    if bad:
        print("counterexample:", json.dumps(bad[0].to_dict()), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongcuts",
        description="Enumerate k-feasible strong line cuts of a Boolean network.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate cuts of selected roots")
    p.add_argument("--input", required=True, help="aag or edge-list file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cone-limit", type=int, default=None)
    p.add_argument("--roots", default="all", help="'all', 'outputs' or an id list")
    p.add_argument("--output", default="-")
    p.add_argument("--stats", default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--max-node-cut", type=int, default=None,
                   help="also drop cuts whose node form exceeds this size")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="timing/count table over circuits")
    p.add_argument("--input", nargs="+", required=True)
    p.add_argument("--k", type=int, nargs="*", default=[6])
    p.add_argument("--cone-limit", nargs="*", default=None, help="ints or 'none'")
    p.add_argument("--report", default="-")
    p.add_argument("--report-format", choices=("csv", "markdown"), default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="oracle cross-checks on random DAGs")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-nodes", type=int, default=10)
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"strongcuts: {exc}", file=sys.stderr)
        return exc.code
    except CutInvariantError as exc:
        print(f"strongcuts: internal invariant violated, aborting: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
