"""Exit criteria: one test per criterion, each recording a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary.
"""

import time

import networkx as nx
import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from strongcoal.coalition import (
    Partition,
    coalition_partner_count,
    construct_from_domatic,
    solve,
    validate_partition,
)
from strongcoal.domination import PLAIN, STRONG, domatic, enumerate_min_cardinality_sds, gamma
from strongcoal.families import c_oracle, family_g_check
from strongcoal.graph import (
    FamilyGParams,
    Graph,
    complete_bipartite,
    cycle,
    degree_stats,
    friendship,
    path,
    sample_graphs,
    star,
)
from strongcoal.scg import build_scg, export_dot


def record(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{number:>2}. [{'PASS' if ok else 'FAIL'}] {title}  {detail}".rstrip())
    assert ok, f"criterion {number} failed: {detail}"


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def test_01_path_table():
    t0 = time.perf_counter()
    got = tuple(solve(path(n), STRONG, workers=1).value for n in range(1, 14))
    elapsed = time.perf_counter() - t0
    expected = (1, 2, 0, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6)
    record(1, "SC(P_n), n=1..13", got == expected and elapsed < 120, f"{got} in {elapsed:.1f}s")


def test_02_cycle_table():
    t0 = time.perf_counter()
    got = tuple(solve(cycle(n), STRONG).value for n in range(3, 13))
    elapsed = time.perf_counter() - t0
    expected = (3, 4, 5, 6, 5, 6, 6, 6, 6, 6)
    record(2, "SC(C_n), n=3..12", got == expected and elapsed < 120, f"{got} in {elapsed:.1f}s")


def test_03_plain_cycle_table():
    got = tuple(solve(cycle(n), PLAIN).value for n in range(3, 13))
    expected = tuple(c_oracle("cycle", n).value for n in range(3, 13))
    record(3, "C(C_n), n=3..12", got == expected == (3, 4, 5, 6, 5, 6, 6, 6, 6, 6), str(got))


def test_04_complete_bipartite():
    problems = []
    for r, s in [(3, 2), (4, 2), (4, 3), (5, 3)]:
        g = complete_bipartite(r, s)
        sc, c = solve(g, STRONG).value, solve(g, PLAIN).value
        if sc != 2 or c != r + s or c - sc != r + s - 2:
            problems.append((r, s, sc, c))
    gaps = sorted(r + s - 2 for r, s in [(3, 2), (4, 2), (4, 3), (5, 3)])
    for r in (2, 3, 4):
        sc = solve(complete_bipartite(r, r), STRONG).value
        if sc != 2 * r:
            problems.append((r, r, sc))
    record(4, "K_{r,s}: SC, C and gap", not problems and gaps == [3, 4, 5, 6], f"gaps {gaps}, mismatches {problems}")


def test_05_strong_domination_of_paths():
    gammas = tuple(gamma(path(n), STRONG) for n in (7, 8, 9, 10, 11))
    n9 = len(enumerate_min_cardinality_sds(path(9), STRONG))
    n8 = len(enumerate_min_cardinality_sds(path(8), STRONG))
    ok = gammas == (3, 3, 3, 4, 4) and n9 == 1 and n8 == 2
    record(5, "gamma_st(P_n) and minimum sets", ok, f"gammas {gammas}, |min(P9)|={n9}, |min(P8)|={n8}")


def test_06_nonexistence():
    cases = [star(n) for n in range(2, 7)] + [friendship(2), friendship(3)]
    results = []
    for g in cases:
        quick = solve(g, STRONG)
        full = solve(g, STRONG, use_bounds=False)
        results.append(quick.value == full.value == 0 and quick.certified and full.certified)
    record(6, "SC = 0 for stars and friendship graphs", all(results), f"{sum(results)}/{len(results)}")


def test_07_family_g():
    checked, failures = 0, []
    for r in range(3):
        for s in range(3):
            for p in range(3):
                params = FamilyGParams(r, s, p) if r + s + 2 * p >= 1 else None
                if params is None or not 4 <= params.order <= 12:
                    continue
                checked += 1
                _, ok = family_g_check(params)
                if not ok:
                    failures.append((r, s, p))
    record(7, "family G: SC = order", not failures and checked > 0, f"{checked} instances, failures {failures}")


def test_08_regular_graphs():
    graphs = []
    seed = 0
    orders = [4, 6, 8, 10]
    while len(graphs) < 20:
        n = orders[len(graphs) % len(orders)]
        graphs.append(from_nx(nx.random_regular_graph(3, n, seed=seed)))
        seed += 1
    graphs += [cycle(n) for n in range(3, 11)]
    mismatches = [g.edges() for g in graphs if solve(g, STRONG).value != solve(g, PLAIN).value]
    record(8, "regular graphs: SC = C", not mismatches, f"{len(graphs)} graphs, {len(mismatches)} mismatches")


def test_09_bounds_suite():
    graphs = []
    for i, n in enumerate([5, 6, 7, 8, 9]):
        graphs += sample_graphs(6, n, p=0.5, seed=1000 + i, connected=True, no_universal=True)
    assert len(graphs) == 30
    violations = []
    for g in graphs:
        delta, Delta, universal = degree_stats(g)
        assert not universal and g.is_connected()
        res = solve(g, STRONG, use_bounds=False)
        sc = res.value
        if solve(g, STRONG).value != sc:
            violations.append(("bounded search disagrees", g.edges()))
        d, _ = domatic(g, STRONG)
        built = construct_from_domatic(g)
        if sc < 2 * d:
            violations.append(("SC >= 2 d_st", g.edges()))
        if not validate_partition(g, built, STRONG)[0] or len(built) < 2 * d:
            violations.append(("construction", g.edges()))
        for i in range(len(res.witness)):
            if coalition_partner_count(g, res.witness, i, STRONG) > Delta + 1:
                violations.append(("partners <= Delta + 1", g.edges()))
        if delta == 1 and sc > 2 + 2 * Delta:
            violations.append(("SC <= 2 + 2 Delta", g.edges()))
        if sc < 2:
            violations.append(("SC >= 2", g.edges()))
    record(9, "bounds on 30 random graphs", not violations, f"{len(violations)} violations")


@pytest.mark.slow
def test_10_solver_matches_unpruned_reference():
    t0 = time.perf_counter()
    graphs = [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1 and nx.is_connected(h)]
    mismatches = []
    for g in graphs:
        adj = oracles.adjacency(g)
        for style in (STRONG, PLAIN):
            if solve(g, style).value != oracles.naive_coalition_number(adj, style is STRONG):
                mismatches.append((style.value, g.edges()))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 600
    record(10, "pruned solver vs full enumeration, connected n<=7", ok,
           f"{len(graphs)} graphs x 2 styles, {len(mismatches)} mismatches, {elapsed:.0f}s")


def test_11_coalition_graphs():
    p7 = Partition.from_lists(7, [[0, 2], [1, 3], [5], [4, 6]])
    p5 = Partition.from_lists(5, [[2, 4], [0], [1], [3]])
    results = []
    for g, p, expected in [
        (path(7), p7, {(1, 3), (1, 4), (2, 3), (2, 4)}),
        (path(5), p5, {(1, 2), (1, 3), (3, 4)}),
    ]:
        adj = oracles.adjacency(g)
        blocks = [set(b) for b in p]
        brute = {
            (i + 1, j + 1)
            for i in range(len(blocks))
            for j in range(i + 1, len(blocks))
            if not oracles.sds(adj, blocks[i]) and not oracles.sds(adj, blocks[j])
            and oracles.sds(adj, blocks[i] | blocks[j])
        }
        cg = build_scg(g, p, STRONG)
        got = {(i + 1, j + 1) for i, j in cg.edges}
        stable = export_dot(cg) == export_dot(build_scg(g, p, STRONG))
        results.append(got == brute == expected and stable)
    record(11, "coalition graphs of the P7 and P5 witnesses", all(results), str(results))
