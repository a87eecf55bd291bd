"""Acceptance gate: one test per shipped guarantee, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
print.  Every check is exact (integer equality); the only tolerances anywhere
are the wall-clock budgets, asserted where stated.
"""

import sys
import time
from contextlib import contextmanager

from symchar import (
    centralizer_order,
    character_table,
    class_size,
    covers_all_nonlinear,
    deterministic_triples,
    find_covering_pairs,
    hook_char_recursive,
    is_hook,
    k_of_sn,
    merge_lemma_check,
    mn_char,
    near_hook_value,
    partitions_of,
    predicted_coefficient,
    shape_partition,
    structure_constant,
    structure_constant_bruteforce,
    two_row_char_recursive,
)
from symchar.characters import reset_mn_memo, table_to_json
from symchar.formulas import NearHookShape


@contextmanager
def criterion(name):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL {name}", file=sys.stdout, flush=True)
        raise
    elapsed = time.perf_counter() - start
    print(f"PASS {name} ({elapsed:.2f}s)", file=sys.stdout, flush=True)


def test_01_unique_covering_pair_for_n_7_to_12(table_for):
    with criterion("covering pairs for n=7..12 are exactly ((n),(n-1,1)), pruned and not"):
        start = time.perf_counter()
        for n in range(7, 13):
            t = table_for(n)
            for use_pruning in (True, False):
                report = find_covering_pairs(n, t, use_pruning=use_pruning)
                assert report.pairs == (((n,), (n - 1, 1)),), (n, use_pruning, report.pairs)
                assert report.matches_theorem is True
        assert time.perf_counter() - start < 120


def test_02_two_classes_needed_for_n_7_to_12(table_for):
    with criterion("k(S_n) = 2 for n=7..12: no single class covers, a pair does"):
        for n in range(7, 13):
            t = table_for(n)
            assert k_of_sn(n, t) == 2
            for mu in partitions_of(n):
                assert not covers_all_nonlinear(mu, mu, t), (n, mu)


def test_03_orthogonality_exact_through_n_12(table_for):
    with criterion("row and column orthogonality exact for n=1..12"):
        for n in range(1, 13):
            t = table_for(n)
            classes = t.order
            sizes = [class_size(mu) for mu in classes]
            group_order = sum(sizes)
            m = len(classes)
            for a in range(m):
                for b in range(a, m):
                    row = sum(sizes[c] * t.values[a][c] * t.values[b][c] for c in range(m))
                    assert row == (group_order if a == b else 0), (n, a, b)
                    col = sum(t.values[r][a] * t.values[r][b] for r in range(m))
                    assert col == (centralizer_order(classes[a]) if a == b else 0), (n, a, b)
        t3 = table_for(3)
        i = t3.index((2, 1))
        assert sum(row[i] ** 2 for row in t3.values) == centralizer_order((2, 1)) == 2


def test_04_hook_vanishing_for_n_7_to_14():
    with criterion("n=7..14: chi vanishes on the n-cycle iff non-hook; hooks die on (n-1,1)"):
        for n in range(7, 15):
            full = (n,)
            near = (n - 1, 1)
            for lam in partitions_of(n):
                on_full_cycle = mn_char(lam, full)
                if is_hook(lam):
                    assert on_full_cycle != 0, (n, lam)
                    if lam not in ((n,), (1,) * n):
                        assert mn_char(lam, near) == 0, (n, lam)
                else:
                    assert on_full_cycle == 0, (n, lam)


def test_05_closed_forms_match_mn_for_n_9_to_14():
    with criterion("all eight closed forms equal MN on every class for n=9..14"):
        start = time.perf_counter()
        for n in range(9, 15):
            classes = partitions_of(n)
            for shape in NearHookShape:
                lam = shape_partition(shape, n)
                for mu in classes:
                    assert near_hook_value(shape, mu) == mn_char(lam, mu), (shape, n, mu)
        assert time.perf_counter() - start < 60


def test_06_recursions_match_mn_through_n_13():
    with criterion("hook and two-row recursions equal MN for all valid k, n=1..13"):
        for n in range(1, 14):
            classes = partitions_of(n)
            for mu in classes:
                for k in range(n):
                    lam = (n - k,) + (1,) * k
                    assert hook_char_recursive(k, mu) == mn_char(lam, mu), (n, k, mu)
                for k in range(n // 2 + 1):
                    lam = (n - k, k) if k else (n,)
                    assert two_row_char_recursive(k, mu) == mn_char(lam, mu), (n, k, mu)


def test_07_structure_constants_agree_with_enumeration(table_for):
    with criterion("character-sum structure constants equal brute-force counts"):
        start = time.perf_counter()
        for n in range(1, 7):
            t = table_for(n)
            classes = partitions_of(n)
            for mu in classes:
                for nu in classes:
                    for gamma in classes:
                        assert structure_constant(mu, nu, gamma, t) == (
                            structure_constant_bruteforce(mu, nu, gamma)
                        ), (mu, nu, gamma)
        for n in (7, 8):
            t = table_for(n)
            triples = deterministic_triples(n, 100)
            assert len(triples) == 100
            for mu, nu, gamma in triples:
                assert structure_constant(mu, nu, gamma, t) == (
                    structure_constant_bruteforce(mu, nu, gamma)
                ), (mu, nu, gamma)
        assert time.perf_counter() - start < 300


def test_08_covering_pair_coefficients_collapse(table_for):
    with criterion("covering pairs at n=7..10 predict every structure constant"):
        for n in range(7, 11):
            t = table_for(n)
            report = find_covering_pairs(n, t)
            assert report.pairs
            for mu, nu in report.pairs:
                for gamma in partitions_of(n):
                    predicted = predicted_coefficient(mu, nu, gamma, t)
                    assert predicted is not None
                    assert predicted == structure_constant(mu, nu, gamma, t), (n, mu, nu, gamma)


def test_09_transposition_coefficient_forces_merge(table_for):
    with criterion("n<=9: positive transposition coefficient forces the merge relation"):
        for n in range(2, 10):
            t = table_for(n)
            transposition = (2,) + (1,) * (n - 2)
            classes = partitions_of(n)
            for i, mu in enumerate(classes):
                for nu in classes[i + 1 :]:
                    if structure_constant(mu, nu, transposition, t) > 0:
                        assert merge_lemma_check(mu, nu) or merge_lemma_check(nu, mu), (mu, nu)


def test_10_table_14_cold_build_time_and_worker_identity():
    with criterion("character_table(14) cold < 60s single-threaded; workers byte-identical"):
        reset_mn_memo()
        start = time.perf_counter()
        table = character_table(14, workers=1)
        assert time.perf_counter() - start < 60
        assert len(table.order) == 135
        assert table_to_json(character_table(14, workers=4)) == table_to_json(table)
