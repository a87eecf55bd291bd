"""Batch command-line interface.

Subcommands: chartable, eval, vanishing-pairs, structure-constant, verify.
Standard output carries only the requested payload; diagnostics go to stderr.
Exit codes: 0 success, 1 verification mismatch or failed checks, 2 invalid
input, 3 I/O failure, 4 brute-force verification requested beyond the
configured limit.

JSON output renders every integer as a decimal string so arbitrarily large
character values survive consumers that parse numbers as doubles.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .characters import (
    CharTable,
    CharTableCacheError,
    character_table,
    mn_char,
    table_to_json,
)
from .class_algebra import (
    BRUTE_FORCE_DEFAULT_LIMIT,
    BruteForceLimitError,
    deterministic_triples,
    structure_constant,
    structure_constant_bruteforce,
)
from .formulas import (
    NearHookShape,
    hook_char_recursive,
    near_hook_value,
    shape_partition,
    two_row_char_recursive,
)
from .partitions import (
    Partition,
    centralizer_order,
    class_size,
    format_partition,
    is_hook,
    parse_partition,
    partitions_of,
)
from .vanishing import CoveringPairReport, find_covering_pairs, verify_main_theorem

__all__ = ["RunConfig", "main", "run"]

DEFAULT_CACHE_DIR = "./.symchar-cache"
CACHE_ENV_VAR = "SYMCHAR_CACHE"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_IO_FAILURE = 3
EXIT_BRUTE_FORCE_LIMIT = 4


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by all subcommands."""

    cache_dir: Path
    workers: int = 1
    format: str = "pretty"
    brute_force_limit: int = BRUTE_FORCE_DEFAULT_LIMIT


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _workers_arg(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"workers must be a positive int or 'auto', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"workers must be >= 1, got {value}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _dot(p: Partition) -> str:
    """Comma-free partition rendering for tabular headers: (6, 1) -> '6.1'."""
    return format_partition(p, sep=".")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symchar",
        description="Exact symmetric-group character computations.",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help=f"character-table cache directory (default {DEFAULT_CACHE_DIR}, "
        f"or ${CACHE_ENV_VAR} when set)",
    )
    parser.add_argument(
        "--workers",
        type=_workers_arg,
        default=1,
        help="worker threads for table builds: a positive int or 'auto'",
    )
    parser.add_argument(
        "--brute-force-limit",
        type=_positive_int,
        default=BRUTE_FORCE_DEFAULT_LIMIT,
        help="largest n allowed for brute-force verification (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("chartable", help="emit the full character table of S_n")
    p_table.add_argument("n", type=_positive_int)
    p_table.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p_table.add_argument("--out", default=None, help="write to this path instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate one character value")
    p_eval.add_argument("--lambda", dest="lam", required=True, help="character label, e.g. 6,1")
    p_eval.add_argument("--mu", required=True, help="class cycle type, e.g. 7 or 5,1^2")
    p_eval.add_argument("--method", choices=("mn", "formula", "recursion"), default="mn")

    p_pairs = sub.add_parser("vanishing-pairs", help="covering pairs of classes for S_n")
    p_pairs.add_argument("n", type=_positive_int)
    p_pairs.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p_pairs.add_argument(
        "--prune",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="apply sound parity/merge prefilters for n > 6",
    )

    p_sc = sub.add_parser("structure-constant", help="class-algebra structure constant")
    p_sc.add_argument("--mu", required=True)
    p_sc.add_argument("--nu", required=True)
    p_sc.add_argument("--gamma", required=True)
    p_sc.add_argument(
        "--verify",
        action="store_true",
        help="also count by brute-force enumeration and compare",
    )

    p_verify = sub.add_parser("verify", help="run self-check suites over a range of n")
    p_verify.add_argument(
        "--suite",
        choices=("theorem", "orthogonality", "formulas", "structure", "all"),
        default="all",
    )
    p_verify.add_argument("--n-min", type=_positive_int, default=3)
    p_verify.add_argument("--n-max", type=_positive_int, default=8)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_DIR
    return RunConfig(
        cache_dir=Path(cache_dir),
        workers=args.workers,
        format=getattr(args, "format", "pretty"),
        brute_force_limit=args.brute_force_limit,
    )


def _table(n: int, cfg: RunConfig) -> CharTable:
    return character_table(n, workers=cfg.workers, cache_dir=cfg.cache_dir)


# --- chartable -------------------------------------------------------------


def _render_table_csv(table: CharTable) -> str:
    lines = ["," + ",".join(_dot(mu) for mu in table.order)]
    for lam, row in zip(table.order, table.values):
        lines.append(_dot(lam) + "," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _render_table_pretty(table: CharTable) -> str:
    headers = [""] + [_dot(mu) for mu in table.order]
    rows = [
        [_dot(lam)] + [str(v) for v in row] for lam, row in zip(table.order, table.values)
    ]
    widths = [max(len(line[i]) for line in [headers] + rows) for i in range(len(headers))]
    out = []
    for line in [headers] + rows:
        out.append(
            "  ".join(
                cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
                for i, cell in enumerate(line)
            ).rstrip()
        )
    return "\n".join(out) + "\n"


def _cmd_chartable(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = _table(args.n, cfg)
    if cfg.format == "json":
        payload = table_to_json(table)
    elif cfg.format == "csv":
        payload = _render_table_csv(table)
    else:
        payload = _render_table_pretty(table)
    if args.out is not None:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


# --- eval ------------------------------------------------------------------


def _shape_for(lam: Partition, n: int) -> NearHookShape | None:
    for shape in NearHookShape:
        try:
            if shape_partition(shape, n) == lam:
                return shape
        except ValueError:
            continue
    return None


def _cmd_eval(args: argparse.Namespace, cfg: RunConfig) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"lambda and mu must partition the same n: {lam} vs {mu}")
    n = sum(lam)
    if args.method == "mn":
        value = mn_char(lam, mu)
    elif args.method == "formula":
        shape = _shape_for(lam, n)
        if shape is None:
            raise ValueError(f"no closed-form shape matches {lam} at n={n}")
        value = near_hook_value(shape, mu)
    else:
        if is_hook(lam):
            value = hook_char_recursive(len(lam) - 1, mu)
        elif len(lam) == 2:
            value = two_row_char_recursive(lam[1], mu)
        else:
            raise ValueError(f"no recursion applies to {lam}: need a hook or two-row shape")
    print(value)
    return EXIT_OK


# --- vanishing-pairs -------------------------------------------------------


def _pairs_json(report: CoveringPairReport) -> str:
    payload = {
        "n": str(report.n),
        "k_value": None if report.k_value is None else str(report.k_value),
        "pairs": [
            [[str(part) for part in mu], [str(part) for part in nu]]
            for mu, nu in report.pairs
        ],
        "matches_theorem": report.matches_theorem,
        "pruning_stats": {k: str(v) for k, v in sorted(report.pruning_stats.items())},
        "vacuous": report.vacuous,
    }
    return json.dumps(payload, indent=2) + "\n"


def _pairs_csv(report: CoveringPairReport) -> str:
    lines = ["mu,nu"]
    for mu, nu in report.pairs:
        lines.append(f"{_dot(mu)},{_dot(nu)}")
    return "\n".join(lines) + "\n"


def _pairs_pretty(report: CoveringPairReport) -> str:
    lines = [
        f"n: {report.n}",
        f"k_value: {'none' if report.k_value is None else report.k_value}",
        f"vacuous: {'yes' if report.vacuous else 'no'}",
        f"covering pairs ({len(report.pairs)}):",
    ]
    for mu, nu in report.pairs:
        mark = "  [degenerate]" if mu == nu else ""
        lines.append(f"  ({format_partition(mu)}) ({format_partition(nu)}){mark}")
    if report.matches_theorem is None:
        lines.append("matches theorem: n/a (theorem range is n > 6)")
    else:
        lines.append(f"matches theorem: {'yes' if report.matches_theorem else 'no'}")
    stats = report.pruning_stats
    lines.append(
        f"pruning skipped: parity={stats.get('parity', 0)} merge={stats.get('merge', 0)}"
    )
    return "\n".join(lines) + "\n"


def _cmd_vanishing_pairs(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = _table(args.n, cfg)
    report = find_covering_pairs(args.n, table, use_pruning=args.prune)
    if cfg.format == "json":
        sys.stdout.write(_pairs_json(report))
    elif cfg.format == "csv":
        sys.stdout.write(_pairs_csv(report))
    else:
        sys.stdout.write(_pairs_pretty(report))
    return EXIT_OK


# --- structure-constant ----------------------------------------------------


def _cmd_structure_constant(args: argparse.Namespace, cfg: RunConfig) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    gamma = parse_partition(args.gamma)
    if not (sum(mu) == sum(nu) == sum(gamma)):
        raise ValueError(f"mu, nu, gamma must partition the same n: {mu}, {nu}, {gamma}")
    n = sum(mu)
    table = _table(n, cfg)
    value = structure_constant(mu, nu, gamma, table)
    if not args.verify:
        print(value)
        return EXIT_OK
    if n > cfg.brute_force_limit:
        raise BruteForceLimitError(
            f"--verify at n={n} exceeds the brute-force limit {cfg.brute_force_limit}"
        )
    counted = structure_constant_bruteforce(mu, nu, gamma, limit=cfg.brute_force_limit)
    print(value)
    print(counted)
    if value != counted:
        _log(f"mismatch: character formula gave {value}, enumeration gave {counted}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# --- verify ----------------------------------------------------------------


class _Checker:
    def __init__(self) -> None:
        self.failures = 0

    def check(self, name: str, fn) -> None:
        start = time.perf_counter()
        try:
            problems = fn() or []
        except Exception as e:  # a crashed check is a failed check
            problems = [f"raised {type(e).__name__}: {e}"]
        elapsed = time.perf_counter() - start
        if problems:
            self.failures += 1
            print(f"FAIL {name} ({elapsed:.2f}s)")
            for line in problems:
                print(f"     {line}")
        else:
            print(f"PASS {name} ({elapsed:.2f}s)")

    def skip(self, name: str, reason: str) -> None:
        print(f"SKIP {name} ({reason})")


def _check_theorem(n: int, cfg: RunConfig) -> list[str]:
    result = verify_main_theorem(n, _table(n, cfg))
    return result.diagnostics() if not result.ok else []


def _check_orthogonality(n: int, cfg: RunConfig) -> list[str]:
    table = _table(n, cfg)
    order = table.order
    values = table.values
    sizes = [class_size(mu) for mu in order]
    problems = []
    group_order = sum(sizes)
    for a in range(len(order)):
        for b in range(a, len(order)):
            row_sum = sum(
                sizes[c] * values[a][c] * values[b][c] for c in range(len(order))
            )
            expected = group_order if a == b else 0
            if row_sum != expected:
                problems.append(f"row orthogonality fails at ({order[a]}, {order[b]})")
            col_sum = sum(values[r][a] * values[r][b] for r in range(len(order)))
            expected_col = centralizer_order(order[a]) if a == b else 0
            if col_sum != expected_col:
                problems.append(f"column orthogonality fails at ({order[a]}, {order[b]})")
    return problems


def _check_formulas(n: int, cfg: RunConfig) -> list[str]:
    problems = []
    classes = partitions_of(n)
    for shape in NearHookShape:
        try:
            lam = shape_partition(shape, n)
        except ValueError:
            continue
        for mu in classes:
            got = near_hook_value(shape, mu)
            want = mn_char(lam, mu)
            if got != want:
                problems.append(f"{shape.name} at mu={mu}: formula {got} != mn {want}")
    for mu in classes:
        for k in range(n):
            got = hook_char_recursive(k, mu)
            want = mn_char((n - k,) + (1,) * k, mu)
            if got != want:
                problems.append(f"hook k={k} at mu={mu}: recursion {got} != mn {want}")
        for k in range(n // 2 + 1):
            got = two_row_char_recursive(k, mu)
            want = mn_char((n - k, k) if k else (n,), mu)
            if got != want:
                problems.append(f"two-row k={k} at mu={mu}: recursion {got} != mn {want}")
    return problems


def _check_structure(n: int, cfg: RunConfig) -> list[str]:
    table = _table(n, cfg)
    classes = partitions_of(n)
    if n <= 6:
        triples = [
            (mu, nu, gamma) for mu in classes for nu in classes for gamma in classes
        ]
    else:
        triples = deterministic_triples(n, 100)
    problems = []
    for mu, nu, gamma in triples:
        expected = structure_constant(mu, nu, gamma, table)
        counted = structure_constant_bruteforce(
            mu, nu, gamma, limit=cfg.brute_force_limit
        )
        if expected != counted:
            problems.append(
                f"({mu}, {nu}, {gamma}): formula {expected} != enumeration {counted}"
            )
    return problems


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.n_min < 3 or args.n_min > args.n_max:
        raise ValueError(f"need 3 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    checker = _Checker()
    ns = range(args.n_min, args.n_max + 1)
    if args.suite in ("theorem", "all"):
        for n in ns:
            if n <= 6:
                checker.skip(f"theorem n={n}", "theorem range is n > 6")
            else:
                checker.check(f"theorem n={n}", lambda n=n: _check_theorem(n, cfg))
    if args.suite in ("orthogonality", "all"):
        for n in ns:
            checker.check(f"orthogonality n={n}", lambda n=n: _check_orthogonality(n, cfg))
    if args.suite in ("formulas", "all"):
        for n in ns:
            checker.check(f"formulas n={n}", lambda n=n: _check_formulas(n, cfg))
    if args.suite in ("structure", "all"):
        for n in ns:
            if n > cfg.brute_force_limit:
                checker.skip(
                    f"structure n={n}", f"beyond brute-force limit {cfg.brute_force_limit}"
                )
            else:
                checker.check(f"structure n={n}", lambda n=n: _check_structure(n, cfg))
    return EXIT_VERIFY_FAILED if checker.failures else EXIT_OK


# --- entry point -----------------------------------------------------------

_DISPATCH = {
    "chartable": _cmd_chartable,
    "eval": _cmd_eval,
    "vanishing-pairs": _cmd_vanishing_pairs,
    "structure-constant": _cmd_structure_constant,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        return _DISPATCH[args.command](args, cfg)
    except BruteForceLimitError as e:
        _log(f"error: {e}")
        return EXIT_BRUTE_FORCE_LIMIT
    except CharTableCacheError as e:
        _log(f"error: {e}")
        return EXIT_IO_FAILURE
    except OSError as e:
        _log(f"error: {e}")
        return EXIT_IO_FAILURE
    except ValueError as e:
        _log(f"error: {e}")
        return EXIT_INVALID_INPUT


def run() -> None:
    raise SystemExit(main())
