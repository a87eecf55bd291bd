"""Classify pairs of conjugacy classes on which all non-linear characters die.

A pair of classes {mu, nu} (mu = nu allowed) "covers" S_n when every
irreducible character apart from the trivial and sign characters vanishes on
mu or on nu.  find_covering_pairs enumerates all covering pairs from a
character table; for n > 6 the expected answer is exactly {(n), (n-1,1)},
which verify_main_theorem checks and reports on.

The search can prune candidate pairs (n > 6 only) with two sound filters: a
covering pair must consist of classes of opposite sign, and its members must
be related by merging two cycle lengths.  Every survivor is still verified
against the full table, so pruned and unpruned runs return identical sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import CharTable
from .class_algebra import merge_lemma_check
from .partitions import Partition, sign_value

__all__ = [
    "CoveringPairReport",
    "TheoremCheck",
    "vanishing_set",
    "covers_all_nonlinear",
    "find_covering_pairs",
    "k_of_sn",
    "verify_main_theorem",
]

Pair = tuple[Partition, Partition]


@dataclass(frozen=True)
class CoveringPairReport:
    """Outcome of a covering-pair search over all classes of S_n.

    pairs lists each covering pair once, (mu, nu) with mu at or before nu in
    the canonical partition order, sorted by that order.  k_value is the
    least size of covering set found: 1 when a single class already covers,
    else 2 when any pair covers, else None.  matches_theorem is None outside
    the theorem's range n > 6.  vacuous flags n <= 2, where there are no
    non-linear characters and every pair covers trivially.
    """

    n: int
    pairs: tuple[Pair, ...]
    k_value: int | None
    matches_theorem: bool | None
    pruning_stats: dict[str, int] = field(compare=False)
    vacuous: bool = False

    def degenerate_pairs(self) -> tuple[Pair, ...]:
        """The pairs with mu = nu (a single class covering on its own)."""
        return tuple((mu, nu) for mu, nu in self.pairs if mu == nu)


@dataclass(frozen=True)
class TheoremCheck:
    """Comparison of the computed covering pairs against {(n), (n-1,1)}."""

    n: int
    ok: bool
    expected: Pair
    extra_pairs: tuple[Pair, ...]
    missing_pairs: tuple[Pair, ...]

    def diagnostics(self) -> list[str]:
        lines = []
        for pair in self.extra_pairs:
            lines.append(f"unexpected covering pair: {pair[0]} , {pair[1]}")
        for pair in self.missing_pairs:
            lines.append(f"expected covering pair not found: {pair[0]} , {pair[1]}")
        return lines


def _nonlinear_rows(table: CharTable) -> list[int]:
    """Row indices of characters of degree > 1, cross-checked two ways.

    A character is linear exactly when its label is (n) or (1^n), and exactly
    when its degree is 1.  Both criteria are evaluated and must agree; any
    disagreement means the table is corrupt, which is worth a loud stop.
    """
    n = table.n
    named_linear = {(n,), (1,) * n}
    rows = []
    for i, lam in enumerate(table.order):
        by_name = lam in named_linear
        by_degree = table.values[i][-1] == 1
        if by_name != by_degree:
            raise RuntimeError(
                f"linear-character criteria disagree at row {lam}: "
                f"named={by_name}, degree={table.values[i][-1]}"
            )
        if not by_name:
            rows.append(i)
    return rows


def vanishing_set(lam: Partition, table: CharTable) -> frozenset[Partition]:
    """All classes mu with chi_lam(w_mu) = 0."""
    row = table.values[table.index(tuple(lam))]
    return frozenset(mu for mu, value in zip(table.order, row) if value == 0)


def covers_all_nonlinear(mu: Partition, nu: Partition, table: CharTable) -> bool:
    """True when every non-linear character vanishes on mu or on nu."""
    i_mu = table.index(tuple(mu))
    i_nu = table.index(tuple(nu))
    for i in _nonlinear_rows(table):
        row = table.values[i]
        if row[i_mu] != 0 and row[i_nu] != 0:
            return False
    return True


def find_covering_pairs(n: int, table: CharTable, *, use_pruning: bool = True) -> CoveringPairReport:
    """Search all unordered pairs of classes of S_n for covering pairs.

    Pruning (active only for n > 6) discards pairs that fail the opposite-
    sign test or the merge relation in both directions before the table scan;
    survivors are always fully verified, so the result is identical with
    pruning on or off.
    """
    if table.n != n:
        raise ValueError(f"table is for n={table.n}, not n={n}")
    order = table.order
    nonlinear = _nonlinear_rows(table)
    vacuous = not nonlinear
    prune = use_pruning and n > 6
    stats = {"parity": 0, "merge": 0}

    signs = [sign_value(mu) for mu in order]
    pairs: list[Pair] = []
    for a in range(len(order)):
        for b in range(a, len(order)):
            if prune:
                if signs[a] * signs[b] != -1:
                    stats["parity"] += 1
                    continue
                if not (
                    merge_lemma_check(order[a], order[b])
                    or merge_lemma_check(order[b], order[a])
                ):
                    stats["merge"] += 1
                    continue
            if all(table.values[i][a] == 0 or table.values[i][b] == 0 for i in nonlinear):
                pairs.append((order[a], order[b]))

    singleton_covers = any(
        all(table.values[i][c] == 0 for i in nonlinear) for c in range(len(order))
    )
    if singleton_covers:
        k_value: int | None = 1
    elif pairs:
        k_value = 2
    else:
        k_value = None

    matches: bool | None = None
    if n > 6:
        matches = pairs == [((n,), (n - 1, 1))]
    return CoveringPairReport(
        n=n,
        pairs=tuple(pairs),
        k_value=k_value,
        matches_theorem=matches,
        pruning_stats=stats,
        vacuous=vacuous,
    )


def k_of_sn(n: int, table: CharTable) -> int:
    """Least number of classes needed to kill all non-linear characters.

    Defined for n >= 3.  Returns 1 when one class suffices (n = 3 only, via
    the class (2,1)), otherwise 2 when some pair covers; anything else raises
    because no S_n with n >= 3 should ever get there.
    """
    if n < 3:
        raise ValueError(f"k_of_sn is defined for n >= 3, got {n}")
    nonlinear = _nonlinear_rows(table)
    if any(
        all(table.values[i][c] == 0 for i in nonlinear) for c in range(len(table.order))
    ):
        return 1
    report = find_covering_pairs(n, table, use_pruning=False)
    if report.pairs:
        return 2
    raise RuntimeError(f"no covering pair of classes exists for n={n}; this contradicts theory")


def verify_main_theorem(n: int, table: CharTable) -> TheoremCheck:
    """Check that the covering pairs of S_n are exactly {(n), (n-1,1)}.

    Only meaningful for n > 6; smaller n raises (run find_covering_pairs
    directly to inspect the pairs there).
    """
    if n <= 6:
        raise ValueError(f"the covering-pair theorem applies for n > 6, got {n}")
    report = find_covering_pairs(n, table, use_pruning=True)
    expected: Pair = ((n,), (n - 1, 1))
    found = set(report.pairs)
    extra = tuple(pair for pair in report.pairs if pair != expected)
    missing = () if expected in found else (expected,)
    return TheoremCheck(
        n=n,
        ok=not extra and not missing,
        expected=expected,
        extra_pairs=extra,
        missing_pairs=missing,
    )
