"""Exact irreducible character values of symmetric groups.

The central routine is mn_char(lam, mu): the value of the irreducible
character of S_n labelled by the partition lam on the conjugacy class of
cycle type mu, computed by the Murnaghan-Nakayama rule with a fixed strategy
(always peel a border strip whose length is the largest remaining part of mu).
All arithmetic is exact over Python ints.

character_table(n) assembles the full p(n) x p(n) table in the canonical
partition order of partitions_of(n), optionally backed by a JSON disk cache
whose serialization is byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .partitions import Partition, partitions_of, sign_value

__all__ = [
    "RimHookRemoval",
    "CharTable",
    "CharTableCacheError",
    "SCHEMA_VERSION",
    "hook_length",
    "border_strip_removals",
    "mn_char",
    "degree",
    "sign_value",
    "character_table",
    "reset_mn_memo",
    "mn_memo_size",
    "table_cache_path",
    "table_to_json",
    "table_from_json",
    "save_table",
    "load_table",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RimHookRemoval:
    """One way to strip a border strip (rim hook) from a Young diagram.

    remaining: the partition left after removal (canonical descending form).
    height:    number of rows the strip occupies.
    sign:      (-1)^(height - 1), the factor this removal contributes.
    """

    remaining: Partition
    height: int
    sign: int


def hook_length(p: Partition, row: int, col: int) -> int:
    """Hook length of the cell (row, col) of p, both 1-based.

    arm + leg + 1, where the arm counts cells to the right in the same row
    and the leg counts cells below in the same column.
    """
    if not (1 <= row <= len(p)) or not (1 <= col <= p[row - 1]):
        raise ValueError(f"cell ({row}, {col}) outside partition {p}")
    arm = p[row - 1] - col
    leg = sum(1 for i in range(row, len(p)) if p[i] >= col)
    return arm + leg + 1


def _beta_set(p: Partition) -> list[int]:
    # First-column hook lengths: strictly decreasing, beta[i] = p[i] + (r-1-i).
    r = len(p)
    return [p[i] + (r - 1 - i) for i in range(r)]


def _beta_to_partition(beta: list[int]) -> Partition:
    # beta must be strictly decreasing and non-negative.
    r = len(beta)
    parts = [beta[i] - (r - 1 - i) for i in range(r)]
    return tuple(part for part in parts if part > 0)


def border_strip_removals(p: Partition, length: int) -> tuple[RimHookRemoval, ...]:
    """All ways to remove a border strip of the given length from p.

    One removal per cell of p whose hook length equals `length`, listed by
    the row of that cell in ascending order.  Removing a strip of length n
    from a partition of n leaves the empty partition; a partition with no
    hook of the given length yields no removals.

    Implemented with beta-sets (first-column hook lengths): strips of length
    L correspond to elements b of the beta-set with b - L >= 0 not in the
    set, and the strip height is one more than the number of beta elements
    strictly between b - L and b.
    """
    if length < 1:
        raise ValueError(f"strip length must be positive, got {length}")
    beta = _beta_set(p)
    present = set(beta)
    removals: list[RimHookRemoval] = []
    for i, b in enumerate(beta):  # ascending i = ascending row of the cell
        target = b - length
        if target < 0 or target in present:
            continue
        crossed = sum(1 for other in beta if target < other < b)
        new_beta = sorted((x if x != b else target for x in beta), reverse=True)
        removals.append(
            RimHookRemoval(
                remaining=_beta_to_partition(new_beta),
                height=crossed + 1,
                sign=-1 if crossed % 2 else 1,
            )
        )
    return tuple(removals)


_MN_MEMO: dict[tuple[Partition, Partition], int] = {}


def mn_char(lam: Partition, mu: Partition) -> int:
    """Character value chi_lam(w_mu) for partitions lam, mu of the same n.

    Murnaghan-Nakayama recursion: peel a border strip whose length is the
    largest remaining part of mu, summing sign * subvalue over all removals.
    The base case is chi of the empty partition at the empty class, which
    is 1.  Values are memoized; the memo persists across calls (grow-only,
    last-write-wins, so concurrent table builds may share it).
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _MN_MEMO.get(key)
    if cached is not None:
        return cached
    rest = mu[1:]
    total = 0
    for removal in border_strip_removals(lam, mu[0]):
        total += removal.sign * _mn(removal.remaining, rest)
    _MN_MEMO[key] = total
    return total


def reset_mn_memo() -> None:
    """Drop all memoized character values (mainly for cold-start timing)."""
    _MN_MEMO.clear()


def mn_memo_size() -> int:
    return len(_MN_MEMO)


def degree(lam: Partition) -> int:
    """Dimension of the irreducible labelled by lam: its value at (1^n)."""
    return mn_char(lam, (1,) * sum(lam))


@dataclass(frozen=True)
class CharTable:
    """Full character table of S_n with exact integer entries.

    order holds the canonical partition sequence from partitions_of(n); it
    indexes both rows (characters) and columns (classes), so values[0] is the
    trivial character (all ones) and the last row is the sign character.
    """

    n: int
    order: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    @cached_property
    def _index(self) -> dict[Partition, int]:
        return {p: i for i, p in enumerate(self.order)}

    def index(self, p: Partition) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise ValueError(f"{p} is not a partition of {self.n}") from None

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.index(lam)][self.index(mu)]

    def degree(self, lam: Partition) -> int:
        # identity class (1^n) is the last column in canonical order
        return self.values[self.index(lam)][-1]


def character_table(n: int, *, workers: int = 1, cache_dir: str | Path | None = None) -> CharTable:
    """Character table of S_n in canonical order.

    With cache_dir set, an existing cache file for this n and schema version
    is loaded (a corrupt file raises CharTableCacheError rather than being
    silently recomputed); otherwise the table is computed and saved there.
    workers > 1 shards rows across threads; results are identical to the
    single-threaded build since every entry is an exact integer.
    """
    if n < 1:
        raise ValueError(f"character_table needs n >= 1, got {n}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    path: Path | None = None
    if cache_dir is not None:
        path = table_cache_path(cache_dir, n)
        if path.exists():
            return load_table(path)

    order = partitions_of(n)

    def build_row(lam: Partition) -> tuple[int, ...]:
        return tuple(_mn(lam, mu) for mu in order)

    if workers == 1:
        rows = tuple(build_row(lam) for lam in order)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(build_row, order))
    table = CharTable(n=n, order=order, values=rows)
    if path is not None:
        save_table(table, path)
    return table


# ---------------------------------------------------------------------------
# Disk cache.  One JSON file per n; all integers are serialized as decimal
# strings so consumers never hit 53-bit float truncation.  The serializer is
# deterministic, which makes cache files byte-for-byte reproducible.


class CharTableCacheError(RuntimeError):
    """A cache file exists but cannot be trusted: report, never recompute."""


def table_cache_path(cache_dir: str | Path, n: int) -> Path:
    return Path(cache_dir) / f"chartable_v{SCHEMA_VERSION}_{n}.json"


def table_to_json(table: CharTable) -> str:
    payload = {
        "schema_version": str(SCHEMA_VERSION),
        "n": str(table.n),
        "order": [[str(part) for part in p] for p in table.order],
        "values": [[str(v) for v in row] for row in table.values],
    }
    return json.dumps(payload, indent=2) + "\n"


def _decode_int(text: object, what: str) -> int:
    if not isinstance(text, str) or str(int(text)) != text:
        raise CharTableCacheError(f"{what} must be a canonical decimal string, got {text!r}")
    return int(text)


def table_from_json(text: str, *, source: str = "<memory>") -> CharTable:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise CharTableCacheError(f"cache file {source} is not valid JSON: {e}") from None
    try:
        if not isinstance(payload, dict):
            raise CharTableCacheError(f"cache file {source}: top level must be an object")
        missing = {"schema_version", "n", "order", "values"} - payload.keys()
        if missing:
            raise CharTableCacheError(f"cache file {source}: missing keys {sorted(missing)}")
        version = _decode_int(payload["schema_version"], "schema_version")
        if version != SCHEMA_VERSION:
            raise CharTableCacheError(
                f"cache file {source}: schema_version {version} != expected {SCHEMA_VERSION}"
            )
        n = _decode_int(payload["n"], "n")
        order = tuple(
            tuple(_decode_int(part, "order entry") for part in p) for p in payload["order"]
        )
        if order != partitions_of(n):
            raise CharTableCacheError(f"cache file {source}: order is not canonical for n={n}")
        raw = payload["values"]
        if len(raw) != len(order):
            raise CharTableCacheError(f"cache file {source}: expected {len(order)} rows")
        values = []
        for row in raw:
            if len(row) != len(order):
                raise CharTableCacheError(f"cache file {source}: ragged row of length {len(row)}")
            values.append(tuple(_decode_int(v, "value") for v in row))
        return CharTable(n=n, order=order, values=tuple(values))
    except (TypeError, ValueError) as e:
        raise CharTableCacheError(f"cache file {source} is malformed: {e}") from None


def save_table(table: CharTable, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(table_to_json(table), encoding="utf-8")


def load_table(path: str | Path) -> CharTable:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return table_from_json(text, source=str(path))
