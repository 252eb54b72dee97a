"""Acceptance suite: ten checks, each printing one PASS/FAIL line.

Expected values come from the reference implementations in ``oracles``
(networkx or brute force), not from the package.
"""

from __future__ import annotations

import itertools
import math
import random
import time

import pytest

from minorkit.chromatic import chromatic_number, extract_clique_minor, hadwiger_scan, max_chromatic_layer
from minorkit.connectivity import fan, is_fan, vertex_connectivity
from minorkit.graph import Graph, all_graphs, apply_edits, complete, complete_bipartite, cycle, petersen
from minorkit.minors import (
    find_minor_model,
    has_minor_oracle,
    minimize_minor_witness,
    model_to_edit_sequence,
    verify_model,
)
from minorkit.planarity import K5, K33, is_planar, kuratowski_witness, planarity_oracle
from minorkit.topological import find_subdivision, minor_to_subdivision, verify_subdivision

import oracles


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str, started: float) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} | {detail} | {time.perf_counter() - started:.1f}s"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return emit


def _random_connected(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    return Graph(n, edges)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_criterion_01_petersen(report):
    t0 = time.perf_counter()
    p = petersen()
    reference = Graph(10, oracles.nx.petersen_graph().edges())
    checks = {
        "is Petersen": oracles.isomorphic(p, reference),
        "3-regular": all(len(p.neighbors(v)) == 3 for v in p.vertices()),
    }
    m = find_minor_model(p, K5)
    checks["K5 minor"] = m is not None and verify_model(m) and oracles.model_ok(p, K5, m.sets)
    checks["no K5 subdivision"] = find_subdivision(p, K5) is None
    e = find_subdivision(p, K33)
    checks["K3,3 subdivision"] = e is not None and verify_subdivision(e)
    checks["not planar"] = is_planar(p) is False and not oracles.planar_reference(p)
    checks["kappa 3"] = vertex_connectivity(p) == 3 == oracles.connectivity_reference(p)
    checks["chi 3"] = chromatic_number(p) == 3 == oracles.chromatic_reference(p)
    elapsed = time.perf_counter() - t0
    checks["under 10 s"] = elapsed < 10
    failed = [k for k, v in checks.items() if not v]
    report(1, "Petersen suite", not failed, f"failed={failed or 'none'}", t0)


def test_criterion_02_definition_equivalence(report):
    t0 = time.perf_counter()
    patterns = {"K2": complete(2), "K3": complete(3), "C4": cycle(4), "K4": complete(4), "K1,3": complete_bipartite(1, 3)}
    disagreements = bad_edits = pairs = 0
    for g in all_graphs(6):
        for h in patterns.values():
            pairs += 1
            m = find_minor_model(g, h)
            if (m is not None) != has_minor_oracle(g, h):
                disagreements += 1
            if m is not None and not oracles.isomorphic(apply_edits(g, model_to_edit_sequence(m)), h):
                bad_edits += 1
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and bad_edits == 0 and pairs == (1 << 15) * 5 and elapsed < 600
    report(2, "minor search vs exhaustive oracle on all 6-vertex graphs", ok,
           f"pairs={pairs} disagreements={disagreements} bad_edit_sequences={bad_edits}", t0)


def test_criterion_03_containment_chain(report):
    t0 = time.perf_counter()
    rng = random.Random(3003)
    violations = sub_count = subdiv_count = 0
    for _ in range(1000):
        g = _random_graph(rng, rng.randint(1, 9), rng.uniform(0.2, 0.8))
        h = _random_graph(rng, rng.randint(1, 5), rng.uniform(0.2, 0.8))
        contains = oracles.contains_subgraph(g, h)
        e = find_subdivision(g, h)
        m = find_minor_model(g, h)
        sub_count += contains
        subdiv_count += e is not None
        if contains and e is None:
            violations += 1
        if e is not None and (m is None or not verify_subdivision(e)):
            violations += 1
        if m is not None and not oracles.model_ok(g, h, m.sets):
            violations += 1
    report(3, "subgraph => subdivision => minor", violations == 0,
           f"pairs=1000 subgraph={sub_count} subdivision={subdiv_count} violations={violations}", t0)


def test_criterion_04_low_degree_equivalence(report):
    t0 = time.perf_counter()
    patterns = [
        Graph(a.number_of_nodes(), a.edges())
        for a in oracles.nx.graph_atlas_g()
        if 1 <= a.number_of_nodes() <= 5 and max((d for _, d in a.degree()), default=0) <= 3
    ]
    rng = random.Random(4004)
    hosts = [_random_graph(rng, rng.randint(3, 9), rng.uniform(0.15, 0.6)) for _ in range(500)]
    mismatches = bad_certificates = positives = 0
    for g in hosts:
        for h in patterns:
            minor = find_minor_model(g, h) is not None
            subdivision = find_subdivision(g, h) is not None
            if minor != subdivision:
                mismatches += 1
            if minor:
                positives += 1
                e = minor_to_subdivision(g, h)
                if e is None or not verify_subdivision(e):
                    bad_certificates += 1
    ok = mismatches == 0 and bad_certificates == 0
    report(4, "max-degree-3 patterns: minor <=> subdivision", ok,
           f"patterns={len(patterns)} hosts=500 positives={positives} mismatches={mismatches} bad_certificates={bad_certificates}", t0)


def test_criterion_05_wagner_vs_embedding(report):
    t0 = time.perf_counter()
    rng = random.Random(5005)
    graphs = [g for n in range(1, 7) for g in all_graphs(n)]
    sampled = 0
    while sampled < 500:
        g = _random_graph(rng, rng.choice((7, 8)), rng.uniform(0.2, 0.6))
        if g.m <= 16:
            graphs.append(g)
            sampled += 1
    disagreements = witness_errors = nonplanar = 0
    for g in graphs:
        planar = is_planar(g)
        if planar != planarity_oracle(g) or planar != oracles.planar_reference(g):
            disagreements += 1
        w = kuratowski_witness(g)
        if planar:
            witness_errors += w is not None
        else:
            nonplanar += 1
            witness_errors += w is None or not verify_subdivision(w.embedding)
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and witness_errors == 0 and elapsed < 1800
    report(5, "Wagner test vs rotation-system oracle", ok,
           f"graphs={len(graphs)} nonplanar={nonplanar} disagreements={disagreements} witness_errors={witness_errors}", t0)


def test_criterion_06_fans_in_connected_graphs(report):
    t0 = time.perf_counter()
    rng = random.Random(6006)
    trials = failures = 0
    while trials < 300:
        n = rng.randint(2, 8)
        g = _random_graph(rng, n, rng.uniform(0.4, 0.95))
        kappa = oracles.connectivity_reference(g)
        if kappa < 1:
            continue
        k = rng.randint(1, min(kappa, 4))
        x = rng.randrange(n)
        others = [v for v in range(n) if v != x]
        if len(others) < k:
            continue
        targets = set(rng.sample(others, rng.randint(k, len(others))))
        f = fan(g, x, targets)
        trials += 1
        if f is None or f.size < k or not is_fan(g, f) or not _fan_invariants(g, f, x, targets):
            failures += 1
    report(6, "large fans in k-connected graphs", failures == 0, f"trials={trials} failures={failures}", t0)


def _fan_invariants(g: Graph, f, x: int, targets: set[int]) -> bool:
    ends = [p[-1] for p in f.paths]
    if len(set(ends)) != len(ends) or not set(ends) <= targets:
        return False
    tails = [set(p[1:]) for p in f.paths]
    if any(a & b for a, b in itertools.combinations(tails, 2)):
        return False
    return all(p[0] == x and all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in f.paths)


def test_criterion_07_layer_bound(report):
    t0 = time.perf_counter()
    rng = random.Random(7007)
    roots = violations = mismatches = 0
    for _ in range(200):
        g = _random_connected(rng, rng.randint(1, 10), rng.uniform(0.1, 0.7))
        need = math.ceil(oracles.chromatic_reference(g) / 2)
        for x in g.vertices():
            roots += 1
            best = max(oracles.chromatic_reference(oracles.induced(g, s)) for s in oracles.bfs_layer_sets(g, x))
            violations += best < need
            mismatches += max_chromatic_layer(g, x).chi != best
    ok = violations == 0 and mismatches == 0
    report(7, "some BFS layer has chi >= ceil(chi/2)", ok,
           f"graphs=200 roots={roots} violations={violations} layer_mismatches={mismatches}", t0)


def test_criterion_08_clique_extraction(report):
    t0 = time.perf_counter()
    failures = []
    for k in (2, 3):
        for m in range(2 ** k, 11):
            trace = extract_clique_minor(complete(m), k)
            if not oracles.model_ok(complete(m), complete(k), trace.model.sets):
                failures.append(f"K{m}/k={k}")
    rng = random.Random(8008)
    random_done = 0
    while random_done < 50:
        g = _random_graph(rng, rng.randint(5, 10), rng.uniform(0.4, 0.8))
        if oracles.chromatic_reference(g) < 4:
            continue
        random_done += 1
        trace = extract_clique_minor(g, 2)
        if not oracles.model_ok(g, complete(2), trace.model.sets):
            failures.append(repr(g))
    start = time.perf_counter()
    trace = extract_clique_minor(complete(8), 3)
    k8_time = time.perf_counter() - start
    if not oracles.model_ok(complete(8), complete(3), trace.model.sets) or k8_time >= 1:
        failures.append(f"K8/k=3 took {k8_time:.3f}s")
    report(8, "clique-minor extraction from chromatic number", not failures,
           f"random=50 K8/k=3={k8_time * 1000:.1f}ms failures={failures or 'none'}", t0)


def test_criterion_09_hadwiger_scan(report):
    t0 = time.perf_counter()
    result = hadwiger_scan(6, 6, exhaustive=True)
    scan_time = time.perf_counter() - t0
    expected: dict[int, int] = {}
    oracle_misses = 0
    for n in range(1, 7):
        for g in all_graphs(n):
            chi = oracles.chromatic_reference(g)
            for k in range(2, min(chi, 6) + 1):
                expected[k] = expected.get(k, 0) + 1
            if chi >= 4:
                oracle_misses += not has_minor_oracle(g, complete(chi))
    ok = not result.counterexamples and result.checks_by_k == expected and oracle_misses == 0 and scan_time < 1800
    report(9, "Hadwiger scan up to 6 vertices", ok,
           f"graphs={result.graphs} counterexamples={len(result.counterexamples)} "
           f"checks_by_k={result.checks_by_k} oracle_misses={oracle_misses} scan={scan_time:.1f}s", t0)


def test_criterion_10_minimal_witness_clauses(report):
    t0 = time.perf_counter()
    rng = random.Random(1010)
    patterns = [complete(3), cycle(4), complete(4), complete_bipartite(1, 3), complete_bipartite(2, 3),
                cycle(5), Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])]
    failures: dict[str, int] = {}
    pairs = 0
    while pairs < 100:
        g = _random_graph(rng, rng.randint(4, 8), rng.uniform(0.3, 0.8))
        h = rng.choice(patterns)
        if not has_minor_oracle(g, h):
            continue
        pairs += 1
        w = minimize_minor_witness(g, h)
        clauses = oracles.witness_clauses(w)
        sub, _ = w.as_graph()
        clauses["minimal"] = all(not has_minor_oracle(Graph(sub.n, sub.edges - {e}), h) for e in sub.edges)
        for name, ok in clauses.items():
            if not ok:
                failures[name] = failures.get(name, 0) + 1
    report(10, "minimal witness structure", not failures,
           f"pairs={pairs} clause_failures={failures or 'none'}", t0)
