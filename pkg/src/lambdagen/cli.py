"""Command-line front end.

Results go to stdout in a machine-readable form; timings and ratios go to
stderr and are dropped with ``--quiet``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import List, Optional, TextIO

from . import __version__
from .canonical import DEFAULT_BUDGET_M, BudgetExceeded, canonical_form, mu
from .codec import STYLES, MatrixParseError, format_matrix, iter_parse, matrix_from_rows
from .oracle import OracleBudgetExceeded, lambda_classes, oracle_report, oracle_semicanonical, row_codes
from .published import DEFAULT_MAX_N, PUBLISHED_NU
from .semicanon import LambdaSpec, enumerate_semicanonical

COMMANDS = ("semi-count", "semi-list", "classes", "canon-form", "verify", "bench")
EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    format: Optional[str] = None
    workers: int = 1
    budget_m: int = DEFAULT_BUDGET_M
    quiet: bool = False
    list_reps: bool = False
    width: Optional[int] = None
    stretch: bool = False
    ks: Optional[List[int]] = None
    max_n: Optional[int] = None

    def spec(self) -> LambdaSpec:
        if self.n is None or self.k is None:
            raise UsageError(f"{self.command} needs n and k")
        try:
            return LambdaSpec(self.n, self.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _detect_style(text: str) -> str:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise UsageError("no matrix on standard input")
    if lines[0].startswith("{"):
        return "json-line"
    if all(len(ln.split()) == 1 and set(ln) <= {"0", "1"} for ln in lines) and len(lines) > 1:
        return "bit-grid"
    return "row-codes"


def _semi_count(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    spec = cfg.spec()
    t0 = time.perf_counter()
    report = enumerate_semicanonical(spec, None, cfg.workers)
    elapsed = time.perf_counter() - t0
    if cfg.format == "json-line":
        out.write(json.dumps({
            "n": spec.n, "k": spec.k, "nu": report.nu, "visited": report.visited,
            "pruned": report.pruned, "candidate_space": report.candidate_space,
            "elapsed": round(elapsed, 6),
        }) + "\n")
    else:
        out.write(f"{report.nu}\n")
    if not cfg.quiet:
        err.write(
            f"# n={spec.n} k={spec.k} nu={report.nu} visited={report.visited} pruned={report.pruned} "
            f"candidate_space={report.candidate_space} visited/space={float(report.efficiency):.3e} "
            f"elapsed={elapsed:.3f}s\n"
        )
    return EXIT_OK


def _semi_list(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    spec = cfg.spec()
    style = cfg.format or "row-codes"
    first = True

    def emit(t):
        nonlocal first
        if style == "bit-grid" and not first:
            out.write("\n")
        first = False
        out.write(format_matrix(matrix_from_rows(t), style) + "\n")

    report = enumerate_semicanonical(spec, emit, cfg.workers)
    out.write(f"# count={report.nu}\n")
    return EXIT_OK


def _classes(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    spec = cfg.spec()
    t0 = time.perf_counter()
    report = mu(spec, keep_reps=cfg.list_reps, budget_m=cfg.budget_m, workers=cfg.workers)
    out.write(f"{report.mu} {report.semi_count}\n")
    if cfg.list_reps:
        style = cfg.format or "row-codes"
        sep = "\n" if style == "bit-grid" else ""
        for i, t in enumerate(report.canonical_reps):
            out.write((sep if i else "") + format_matrix(matrix_from_rows(t), style) + "\n")
    if not cfg.quiet:
        err.write(f"# mu={report.mu} nu={report.semi_count} elapsed={time.perf_counter() - t0:.3f}s\n")
    return EXIT_OK


def _canon_form(cfg: RunConfig, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    text = stdin.read()
    style = cfg.format or _detect_style(text)
    mats = list(iter_parse(text, style, cfg.width))
    if len(mats) != 1:
        raise UsageError(f"expected one matrix on standard input, found {len(mats)}")
    out.write(format_matrix(canonical_form(mats[0], cfg.budget_m), style) + "\n")
    return EXIT_OK


def _verify(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    spec = cfg.spec()
    n, k = spec.n, spec.k
    checks = []
    fast = []
    report = enumerate_semicanonical(spec, fast.append, cfg.workers)
    oracle = oracle_report(spec)
    checks.append(("semi-set", fast == oracle_semicanonical(n, k)))
    checks.append(("semi-count", report.nu == oracle.semi_size))
    top = (1 << k) - 1
    checks.append(("first-row-and-column", all(
        t[0] == top and sum(((x >> (n - 1)) & 1) << (n - 1 - i) for i, x in enumerate(t)) == top
        for t in fast
    )))
    classes = mu(spec, budget_m=cfg.budget_m, workers=cfg.workers)
    checks.append(("class-count", classes.mu == oracle.class_count))
    reps = set(mu(spec, keep_reps=True, budget_m=cfg.budget_m).canonical_reps)
    checks.append(("one-canonical-per-class", all(
        sum(row_codes(g) in reps for g in members) == 1 for members in lambda_classes(n, k)
    )))
    if (n, k) in PUBLISHED_NU:
        checks.append(("published-nu", report.nu == PUBLISHED_NU[n, k]))
    for name, ok in checks:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
    if not cfg.quiet:
        err.write(
            f"# lambda_size={oracle.lambda_size} nu={oracle.semi_size} mu={oracle.class_count} "
            f"nu/lambda={oracle.ratio}\n"
        )
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_VERIFY


def _bench(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    ks = cfg.ks or sorted(DEFAULT_MAX_N)
    out.write("n\tk\tnu\tpublished\tmatch\telapsed_s\n")
    failed = False
    for k in ks:
        if cfg.max_n is not None:
            top = cfg.max_n
        elif cfg.stretch:
            top = max(n for (n, kk) in PUBLISHED_NU if kk == k)
        else:
            top = DEFAULT_MAX_N.get(k, k + 3)
        for n in range(k, top + 1):
            t0 = time.perf_counter()
            value = enumerate_semicanonical(LambdaSpec(n, k), None, cfg.workers).nu
            elapsed = time.perf_counter() - t0
            expected = PUBLISHED_NU.get((n, k))
            match = "-" if expected is None else ("yes" if value == expected else "NO")
            failed |= match == "NO"
            out.write(f"{n}\t{k}\t{value}\t{'-' if expected is None else expected}\t{match}\t{elapsed:.3f}\n")
            out.flush()
    return EXIT_VERIFY if failed else EXIT_OK


def run(cfg: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None,
        stdin: Optional[TextIO] = None) -> int:
    """Execute one command; returns the process exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        if cfg.command not in COMMANDS:
            raise UsageError(f"unknown command {cfg.command!r}")
        if cfg.format is not None and cfg.format not in STYLES:
            raise UsageError(f"unknown format {cfg.format!r}")
        if cfg.workers < 1:
            raise UsageError("--workers must be at least 1")
        if cfg.command == "semi-count":
            return _semi_count(cfg, out, err)
        if cfg.command == "semi-list":
            return _semi_list(cfg, out, err)
        if cfg.command == "classes":
            return _classes(cfg, out, err)
        if cfg.command == "canon-form":
            return _canon_form(cfg, out, err, stdin)
        if cfg.command == "verify":
            return _verify(cfg, out, err)
        return _bench(cfg, out, err)
    except (UsageError, MatrixParseError, BudgetExceeded, OracleBudgetExceeded) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lambdagen", description="Semi-canonical and canonical (0,1)-matrices with k ones per line.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--format", choices=STYLES, default=None,
                   help="output style (canon-form: also the input style; auto-detected if omitted)")
    p.add_argument("--workers", type=int, default=1, help="processes for the enumeration")
    p.add_argument("--budget-m", type=int, default=DEFAULT_BUDGET_M,
                   help="largest column count allowed in canonical-form searches")
    p.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
    p.add_argument("--list-reps", action="store_true", help="classes: print canonical representatives")
    p.add_argument("--width", type=int, default=None, help="canon-form: column count for row-codes input")
    p.add_argument("--stretch", action="store_true", help="bench: run every published value")
    p.add_argument("--ks", type=lambda s: [int(v) for v in s.split(",")], default=None,
                   help="bench: comma-separated k values")
    p.add_argument("--max-n", type=int, default=None, help="bench: largest n for every k")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
