"""Acceptance gate: one PASS/FAIL line per criterion.

Each test records its outcome in ``conftest.ACCEPTANCE`` (summarised at the
end of the run) and prints the same line, then asserts.
"""

from __future__ import annotations

import io
import json
import math
import random

import numpy as np

import conftest
from earspec import canonical_form, cli, complete_graph, cycle_graph, parse_graph6
from earspec.ears import (
    ExchangeError,
    edge_exchange,
    find_bipartite_ear_decomposition,
    find_odd_ear_decomposition,
)
from earspec.extremal import (
    _grow,
    block_subgraphs,
    brute_mc_bipartite,
    brute_minimal_factor_critical,
    brute_minimal_mc_bipartite,
    enumerate_minimal_factor_critical,
    enumerate_minimal_mc_bipartite,
    gen_friendship,
    gen_p3star,
    minimal_factor_critical_blocks,
)
from earspec.graph import Graph, has_cycle_of_length
from earspec.matching import is_matching_covered, is_minimal_factor_critical, is_minimal_matching_covered
from earspec.nicecycle import minimality_via_nice_cycles
from earspec.spectral import automorphism_orbits, graph_rho, spectral_radius

TOL = 1e-9


def record(k: int, failures: list[str], detail: str) -> None:
    ok = not failures
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    if failures:
        line += f"  ({len(failures)} failures, first: {failures[0]})"
    conftest.ACCEPTANCE.append((k, ok, line.split("  ", 1)[1]))
    print(line)
    assert ok, line


def cli_json(argv: list[str]) -> tuple[int, dict]:
    out = io.StringIO()
    code = cli.run(argv + ["--format", "json"], stdin=io.StringIO(), stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())


def dense_rho(g: Graph) -> float:
    return float(np.max(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))))


def test_criterion_1_bipartite_extremal():
    expected = {
        2: (1.0, complete_graph(2)),
        4: (2.0, cycle_graph(4)),
        6: (2.0, cycle_graph(6)),
        8: ((1 + math.sqrt(13)) / 2, gen_p3star(8)),
        10: ((1 + math.sqrt(17)) / 2, gen_p3star(10)),
    }
    failures = []
    for n, (rho, g) in expected.items():
        code, rep = cli_json(["verify", "--theorem", "1", "--n", str(n)])
        if code != 0:
            failures.append(f"n={n}: exit {code}")
        if abs(rep["max_rho"] - rho) > TOL:
            failures.append(f"n={n}: max_rho {rep['max_rho']} != {rho}")
        if rep["argmax"] != [canonical_form(g)]:
            failures.append(f"n={n}: argmax {rep['argmax']}")
    record(1, failures, "max spectral radius of minimal matching covered bipartite graphs, n in 2..10")


def test_criterion_2_factor_critical_extremal():
    expected = {3: 2.0, 5: (1 + math.sqrt(17)) / 2, 7: 3.0, 9: (1 + math.sqrt(33)) / 2}
    failures = []
    for n, rho in expected.items():
        g = gen_friendship(n)
        if abs(dense_rho(g) - rho) > TOL:
            failures.append(f"n={n}: closed form disagrees with eigensolve")
        code, rep = cli_json(["verify", "--theorem", "2", "--n", str(n)])
        if code != 0:
            failures.append(f"n={n}: exit {code}")
        if abs(rep["max_rho"] - rho) > TOL:
            failures.append(f"n={n}: max_rho {rep['max_rho']} != {rho}")
        if rep["argmax"] != [canonical_form(g)]:
            failures.append(f"n={n}: argmax {rep['argmax']}")
    record(2, failures, "max spectral radius of minimal factor-critical graphs, n in 3..9")


def test_criterion_3_oracle_equivalence():
    failures = []
    for n in (2, 4, 6, 8):
        diff = enumerate_minimal_mc_bipartite(n) ^ brute_minimal_mc_bipartite(n)
        if diff:
            failures.append(f"bipartite n={n}: {sorted(diff)}")
    for n in (3, 5, 7):
        diff = enumerate_minimal_factor_critical(n) ^ brute_minimal_factor_critical(n)
        if diff:
            failures.append(f"factor-critical n={n}: {sorted(diff)}")
    record(3, failures, "ear-growth enumerators equal brute-force scans")


def test_criterion_4_nice_cycle_characterisation():
    codes: set[str] = set()
    for level in _grow([cycle_graph(k) for k in range(4, 11, 2)], 10, "bipartite").values():
        codes |= level
    for n in (2, 4, 6, 8, 10):
        codes |= enumerate_minimal_mc_bipartite(n)
    for n in (2, 4, 6, 8):
        codes |= brute_mc_bipartite(n)
    # plus a sample of matching covered graphs on 5+5 vertices, minimal or not
    rng = random.Random(4)
    while len(codes) < 236:
        g = Graph.from_edges(10, [(i, 5 + j) for i in range(5) for j in range(5) if rng.random() < 0.45])
        if is_matching_covered(g):
            codes.add(canonical_form(g))
    failures = []
    for c in sorted(codes):
        g = parse_graph6(c)
        if minimality_via_nice_cycles(g).verdict != is_minimal_matching_covered(g).verdict:
            failures.append(c)
    record(4, failures, f"nice-cycle chords decide minimality on {len(codes)} bipartite graphs")


def test_criterion_5_closed_form():
    failures = []
    for n in range(6, 65, 2):
        rho = spectral_radius(gen_p3star(n)).rho
        if abs(rho - (1 + math.sqrt(2 * n - 3)) / 2) > TOL:
            failures.append(f"n={n}: rho {rho}")
        if abs(rho * rho - rho - (n - 2) / 2) > TOL:
            failures.append(f"n={n}: root residual {rho * rho - rho - (n - 2) / 2}")
    record(5, failures, "P3* spectral radius matches its closed form, even n in 6..64")


def _random_connected(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


def _valid_exchange(rng: random.Random) -> tuple[Graph, set, set, set] | None:
    g = _random_connected(rng, rng.randint(5, 12), rng.uniform(0.1, 0.5))
    x = spectral_radius(g).perron
    v = rng.randrange(g.n)
    t = {v}
    if rng.random() < 0.4:
        common = [w for w in range(g.n) if w != v and g.adj[w] & g.adj[v] and not g.has_edge(v, w)]
        if common:
            t.add(rng.choice(common))
    shared = set.intersection(*(set(g.adj[u]) for u in t)) - t
    outside = [w for w in range(g.n) if w not in t and w not in shared and not any(g.has_edge(u, w) for u in t)]
    if not shared or not outside:
        return None
    s2 = set(rng.sample(sorted(shared), rng.randint(1, len(shared))))
    outside.sort(key=lambda w: -x[w])
    s1: set[int] = set()
    for w in outside:
        s1.add(w)
        if sum(x[u] for u in s1) >= sum(x[u] for u in s2):
            return g, t, s1, s2
    return None


def _invalid_exchange(rng: random.Random, g: Graph, t: set, s1: set, s2: set) -> tuple[tuple, str] | None:
    kind = rng.choice(["empty", "range", "overlap", "existing", "missing"])
    if kind == "empty":
        which = rng.choice(["T", "S1", "S2"])
        sets = {"T": set(t), "S1": set(s1), "S2": set(s2)}
        sets[which] = set()
        return (sets["T"], sets["S1"], sets["S2"]), f"empty:{which}"
    if kind == "range":
        return (t, s1 | {g.n}, s2), "out-of-range:S1"
    if kind == "overlap":
        pair = rng.choice([("T", "S1"), ("T", "S2"), ("S1", "S2")])
        sets = {"T": set(t), "S1": set(s1), "S2": set(s2)}
        sets[pair[1]].add(min(sets[pair[0]]))
        return (sets["T"], sets["S1"], sets["S2"]), f"overlap:{pair[0]},{pair[1]}"
    used = t | s1 | s2
    if kind == "existing":
        cands = [w for w in range(g.n) if w not in used and any(g.has_edge(u, w) for u in t)]
        if cands:
            return (t, s1 | {rng.choice(cands)}, s2), "existing-edge:T-S1"
        return None
    cands = [w for w in range(g.n) if w not in used and not all(g.has_edge(u, w) for u in t)]
    if cands:
        return (t, s1, s2 | {rng.choice(cands)}), "missing-edge:T-S2"
    return None


def test_criterion_6_edge_exchange():
    rng = random.Random(6)
    failures = []
    valid = invalid = 0
    while valid < 100 or invalid < 100:
        inst = _valid_exchange(rng)
        if inst is None:
            continue
        g, t, s1, s2 = inst
        if valid < 100:
            before = spectral_radius(g).rho
            after = graph_rho(edge_exchange(g, t, s1, s2))
            if not after > before + TOL:
                failures.append(f"no increase: {g.edges()} T={t} S1={s1} S2={s2}")
            valid += 1
        if invalid < 100:
            bad = _invalid_exchange(rng, g, t, s1, s2)
            if bad is None:
                continue
            (bt, b1, b2), reason = bad
            try:
                edge_exchange(g, bt, b1, b2)
                failures.append(f"accepted invalid instance ({reason})")
            except ExchangeError as exc:
                if exc.reason != reason:
                    failures.append(f"reason {exc.reason} != {reason}")
            invalid += 1
    record(6, failures, "edge exchange: 100 valid instances raise rho, 100 invalid ones rejected")


def test_criterion_7_structure():
    failures = []
    c4 = canonical_form(cycle_graph(4))
    for n in (2, 4, 6, 8, 10, 12):
        for c in enumerate_minimal_mc_bipartite(n):
            g = parse_graph6(c)
            if c != c4 and has_cycle_of_length(g, 4):
                failures.append(f"{c} has a 4-cycle")
            if n > 2 and min(g.degrees()) not in (2, 3):
                failures.append(f"{c} has minimum degree {min(g.degrees())}")
            d = find_bipartite_ear_decomposition(g)
            if d is None or any(e.trivial for e in d.ears):
                failures.append(f"{c}: decomposition missing or has a trivial ear")
    for n in (3, 5, 7, 9, 11):
        for c in enumerate_minimal_factor_critical(n):
            for b in block_subgraphs(parse_graph6(c)):
                if not is_minimal_factor_critical(b):
                    failures.append(f"{c}: block not minimal factor-critical")
    for level in minimal_factor_critical_blocks(11).values():
        for c in level:
            d = find_odd_ear_decomposition(parse_graph6(c))
            if d is None or any(e.trivial for e in d.ears):
                failures.append(f"block {c}: decomposition missing or has a trivial ear")
    record(7, failures, "C4-freeness, minimum degree, minimal blocks, nontrivial ears")


def test_criterion_8_perron_symmetry():
    corpus = [gen_p3star(n) for n in range(6, 13, 2)]
    corpus += [gen_friendship(n) for n in range(3, 12, 2)]
    corpus += [cycle_graph(n) for n in range(3, 13)]
    failures = []
    for g in corpus:
        x = spectral_radius(g).perron
        for orbit in automorphism_orbits(g):
            spread = max(x[v] for v in orbit) - min(x[v] for v in orbit)
            if spread > 1e-8:
                failures.append(f"{canonical_form(g)} orbit {orbit}: spread {spread:.2e}")
    record(8, failures, f"Perron entries constant on orbits across {len(corpus)} generator graphs")
