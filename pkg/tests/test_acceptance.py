"""Acceptance gate: one test per criterion, one PASS/FAIL line each.

Every quantity here is an exact integer; there are no tolerances.
Criterion 6 is implemented exactly as stated and is expected to fail:
the claimed equality characterizations are refuted by regular graphs
on the fixed panel (see the strict xfail below), and the failure is
reported rather than hidden.
"""

from __future__ import annotations

import shutil
import subprocess
import time

import pytest

from ctk import (
    brute_force_extremal,
    check_degree_system,
    check_m2_lower_bound,
    check_m2_upper_bound,
    check_maximizer_structure,
    check_zc1star_upper_bound,
    classify_max_family,
    closed_form,
    construct_family,
    enumerate_trees,
    first_zagreb,
    is_complete_graph,
    is_path_graph,
    is_star_graph,
    is_triangle_and_quadrangle_free,
    modified_connection_zagreb,
    modified_connection_zagreb_edge,
    partition_counts,
    prufer_oracle,
    second_zagreb,
    tree_from_levels,
)
from conftest import complete_graph, cycle_graph, path_graph, star_graph


def report(number: int, title: str, ok: bool) -> None:
    print(f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}")


def test_criterion_1_value_table() -> None:
    t0 = time.monotonic()
    multisets = {
        n: sorted(
            modified_connection_zagreb(tree_from_levels(code))
            for code in enumerate_trees(n, 4)
        )
        for n in (4, 5, 6)
    }
    elapsed = time.monotonic() - t0
    ok = (
        multisets[4] == [6, 6]
        and multisets[5] == [10, 12, 12]
        and multisets[6] == [14, 16, 18, 20, 20]
        and elapsed < 1.0
    )
    report(1, "small-order value table", ok)
    assert ok, (multisets, elapsed)


def test_criterion_2_enumeration_matches_oracle() -> None:
    counts = {}
    ok = True
    elapsed_9 = 0.0
    for n in range(4, 10):
        gen = set(enumerate_trees(n, 4))
        t0 = time.monotonic()
        orc = prufer_oracle(n, 4)
        if n == 9:
            elapsed_9 = time.monotonic() - t0
        counts[n] = len(gen)
        ok = ok and gen == orc
    ok = ok and (counts[4], counts[5], counts[6]) == (2, 3, 5)
    ok = ok and elapsed_9 < 60.0
    report(2, "generator equals exhaustive oracle", ok)
    assert ok, (counts, elapsed_9)


def test_criterion_3_minimum_is_path() -> None:
    t0 = time.monotonic()
    ok = True
    for n in range(5, 13):
        res = brute_force_extremal(n, "zc1star", "min", 4)
        ok = ok and res.value == 4 * n - 10
        ok = ok and len(res.witnesses) == 1
        ok = ok and is_path_graph(tree_from_levels(res.witnesses[0]))
    for n in range(5, 10):
        res = brute_force_extremal(n, "zc1star", "min", None)
        ok = ok and res.value == 4 * n - 10
        ok = ok and len(res.witnesses) == 1
        ok = ok and is_path_graph(tree_from_levels(res.witnesses[0]))
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 120.0
    report(3, "path minimum with unique witness", ok)
    assert ok, elapsed


def test_criterion_4_maximum_closed_form() -> None:
    ok = True
    for n in range(7, 13):
        res = brute_force_extremal(n, "zc1star", "max", 4)
        want = 10 * (n - 4) if n % 3 in (0, 1) else 2 * (5 * n - 19)
        ok = ok and res.value == want == closed_form(n, "max_chemical")
        positive = {
            code
            for code in enumerate_trees(n, 4)
            if classify_max_family(tree_from_levels(code)) is not None
        }
        ok = ok and positive == set(res.witnesses)
    spot = {
        n: brute_force_extremal(n, "zc1star", "max", 4).value for n in (7, 8, 9)
    }
    ok = ok and spot == {7: 30, 8: 42, 9: 50}
    report(4, "maximum value and witness classes", ok)
    assert ok, spot


def test_criterion_5_identity_suite() -> None:
    ok = True
    for n in range(1, 11):
        for code in enumerate_trees(n, 4):
            g = tree_from_levels(code)
            vertex_form = modified_connection_zagreb(g)
            ok = ok and vertex_form == modified_connection_zagreb_edge(g)
            ok = ok and vertex_form == 2 * second_zagreb(g) - first_zagreb(g)
            ok = ok and check_m2_lower_bound(g).equality_observed
    for g in (cycle_graph(3), cycle_graph(4), complete_graph(4)):
        bc = check_m2_lower_bound(g)
        ok = ok and bc.holds and not bc.equality_observed
    for g in (cycle_graph(5), cycle_graph(6)):
        ok = ok and check_m2_lower_bound(g).equality_observed
    report(5, "identity and degree-connection bound", ok)
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="refuted: every regular graph attains the second-Zagreb upper "
    "bound and cycles of girth five and up attain the connection-sum "
    "bound, so equality is not limited to stars and complete graphs",
)
def test_criterion_6_bound_equality_cases() -> None:
    panel = []
    for n in range(3, 9):
        panel.append(path_graph(n))
        panel.append(star_graph(n))
        panel.append(cycle_graph(n))
        panel.append(complete_graph(n))
    for n in range(2, 9):
        panel.extend(
            tree_from_levels(code) for code in enumerate_trees(n, None)
        )
    ok = True
    for g in panel:
        bc = check_m2_upper_bound(g)
        ok = ok and bc.holds
        ok = ok and bc.equality_observed == (is_star_graph(g) or is_complete_graph(g))
        if is_triangle_and_quadrangle_free(g):
            bc = check_zc1star_upper_bound(g)
            ok = ok and bc.holds
            ok = ok and bc.equality_observed == is_star_graph(g)
    report(6, "bound equality only on stars and completes", ok)
    assert ok


def test_criterion_7_degree_system() -> None:
    ok = True
    for n in range(2, 13):
        for code in enumerate_trees(n, 4):
            checks = check_degree_system(tree_from_levels(code))
            ok = ok and all(bc.passed for bc in checks)
    _, pairs, _ = partition_counts(construct_family("ct0", 9))
    ok = ok and pairs == {(1, 2): 1, (2, 4): 1, (1, 4): 5, (4, 4): 1}
    report(7, "degree-count equation system", ok)
    assert ok


def test_criterion_8_maximizer_structure() -> None:
    ok = True
    for n in range(7, 13):
        res = brute_force_extremal(n, "zc1star", "max", 4)
        for code in res.witnesses:
            checks = check_maximizer_structure(tree_from_levels(code))
            ok = ok and len(checks) == 5
            ok = ok and all(sc.holds for sc in checks)
    report(8, "maximizer structure facts", ok)
    assert ok


def test_criterion_9_determinism(tmp_path) -> None:
    exe = shutil.which("ctk")
    assert exe is not None, "console script not on PATH"
    verify_runs = [
        subprocess.run(
            [exe, "verify", "--n-max", "10"], capture_output=True, timeout=300
        )
        for _ in range(2)
    ]
    ok = verify_runs[0].stdout == verify_runs[1].stdout
    ok = ok and verify_runs[0].returncode == verify_runs[1].returncode
    files = []
    for tag in ("a", "b"):
        target = tmp_path / f"codes-{tag}.txt"
        run = subprocess.run(
            [exe, "enumerate", "--n", "12", "-o", str(target)],
            capture_output=True,
            timeout=300,
        )
        ok = ok and run.returncode == 0
        files.append(target.read_bytes())
    ok = ok and files[0] == files[1] and len(files[0].splitlines()) == 355
    report(9, "byte-identical repeated runs", ok)
    assert ok
