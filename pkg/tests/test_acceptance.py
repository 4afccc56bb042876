"""Exit criteria, one test each.  A summary line per criterion is printed at
the end of the run (see ``pytest_terminal_summary`` in conftest)."""

import io
import itertools
import time

import numpy as np

from walkiso import (Permutation, SolveConfig, Status, brute_force, build_forbidden,
                     extend_sequence, generate, iter_forbidden, permute, solve, validate, verify)
from walkiso.bench import DEFAULT_FAMILIES, dominance_violations, read_csv, run_bench, write_csv
from walkiso.formats import parse, write

from oracles import induced_is_cycle, induced_is_two_triangles, matrix_powers_mod32

SEED = 20240611


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        a = np.zeros((n, n), dtype=bool)
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                a[u, v] = a[v, u] = True
        yield validate(a)


def test_1_extension_matches_oracle(acceptance):
    rng = np.random.default_rng(SEED)
    spent = 0.0
    bad = 0
    for k in range(100):
        n = int(rng.integers(5, 51))
        p = (0.1, 0.5, 0.9)[k % 3]
        g = generate(f"random({n}, {p}, {int(rng.integers(2**31))})")
        t0 = time.perf_counter()
        levels = extend_sequence(g, 6)
        spent += time.perf_counter() - t0
        oracle = matrix_powers_mod32(g, 6)
        bad += sum(m.entries.tolist() != ref for m, ref in zip(levels, oracle))
    ok = bad == 0 and spent < 10.0
    acceptance(1, "extension == naive mod-2^32 matrix power", ok,
               f"{bad} mismatched levels, {spent:.2f}s")
    assert bad == 0
    assert spent < 10.0


def test_2_solver_matches_brute_force(acceptance):
    t0 = time.perf_counter()
    pool = [g for n in range(1, 6) for g in all_graphs(n)]
    disagreements = 0
    checked = 0
    by_key = {}
    for g in pool:
        by_key.setdefault((g.order, g.size), []).append(g)
    for group in by_key.values():
        for a, b in itertools.combinations_with_replacement(group, 2):
            expected = brute_force(a, b).status
            v = solve(a, b)
            checked += 1
            if v.status is not expected or (v.mapping is not None and not verify(a, b, v.mapping)):
                disagreements += 1
    rng = np.random.default_rng(SEED + 2)
    for k in range(500):
        n = int(rng.integers(6, 8))
        g = generate(f"random({n}, {rng.choice([0.3, 0.5, 0.7])}, {int(rng.integers(2**31))})")
        if k % 2:
            h = permute(g, Permutation.random(n, int(rng.integers(2**31))))
        else:
            h = generate(f"random({n}, {g.size / (n * (n - 1) / 2):.6f}, {int(rng.integers(2**31))})")
        expected = brute_force(g, h).status
        v = solve(g, h)
        checked += 1
        if v.status is not expected or (v.mapping is not None and not verify(g, h, v.mapping)):
            disagreements += 1
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and elapsed < 120
    acceptance(2, "solve agrees with brute force (all graphs n<=5 + 500 random n=6,7)", ok,
               f"{len(pool)} graphs, {checked} pairs, {disagreements} disagreements, {elapsed:.1f}s")
    assert disagreements == 0
    assert elapsed < 120


def test_3_forbidden_matrix_soundness(acceptance):
    rng = np.random.default_rng(SEED + 3)
    violations = 0
    levels = 0
    for k in range(200):
        n = int(rng.integers(2, 201))
        p = (0.02, 0.1, 0.3, 0.5, 0.9)[k % 5]
        g = generate(f"random({n}, {p}, {int(rng.integers(2**31))})")
        perm = Permutation.random(n, int(rng.integers(2**31)))
        h = permute(g, perm)
        for f in iter_forbidden(g, h):
            levels += 1
            violations += int(f.forbidden[np.arange(n), perm.as_array()].sum())
    acceptance(3, "F never forbids the planted isomorphism", violations == 0,
               f"200 pairs, {levels} levels checked, {violations} violations")
    assert violations == 0


def test_4_triangle_separation(acceptance):
    c6 = generate("cycle(6)")
    tt = generate("disjoint-union(complete(3), complete(3))")
    f = build_forbidden(c6, tt, alpha_max=3)
    v = solve(c6, tt)
    ok = (f.forbidden.all() and f.level_reached == 3 and v.status is Status.NON_ISOMORPHIC
          and v.stats.nodes == 0 and v.stats.decided_by == "prefilter")
    acceptance(4, "C6 vs 2xK3: full F at level 3, stage-1 rejection", ok,
               f"density={f.density}, nodes={v.stats.nodes}")
    assert ok


def test_5_srg_stress(acceptance):
    s, r = generate("shrikhande"), generate("rook(4)")
    t0 = time.perf_counter()
    v = solve(s, r)
    elapsed = time.perf_counter() - t0
    oracle = all(induced_is_cycle(s, np.flatnonzero(s.adjacency[x]).tolist())
                 and induced_is_two_triangles(r, np.flatnonzero(r.adjacency[x]).tolist())
                 for x in range(16))
    ok = (v.stats.f_density == 0.0 and v.status is Status.NON_ISOMORPHIC
          and oracle and elapsed < 5.0 and v.stats.nodes <= SolveConfig().node_budget)
    acceptance(5, "Shrikhande vs rook(4): F empty, search proves non-isomorphism", ok,
               f"density={v.stats.f_density}, nodes={v.stats.nodes}, {elapsed:.2f}s")
    assert ok


def test_6_unique_candidates_random_dense(acceptance):
    recs = run_bench(["random(100, 0.5)"], [], range(20), baseline_budget=None)
    fractions = [r.unique_candidate_fraction for r in recs]
    hits = sum(f == 1.0 for f in fractions)
    ok = len(recs) == 20 and hits >= 18 and all(r.verdict == "isomorphic" for r in recs)
    acceptance(6, "random(100, 0.5): every row has one candidate on >= 18/20 seeds", ok,
               f"{hits}/20 seeds at 1.0, min fraction {min(fractions):.3f}")
    assert ok


def test_7_pruning_dominance(acceptance):
    recs = run_bench(DEFAULT_FAMILIES)
    bad = dominance_violations(recs)
    ok = not bad and all(r.baseline_nodes >= 0 for r in recs)
    acceptance(7, "nodes(with F) <= nodes(without F) on the full bench suite", ok,
               f"{len(recs)} instances, {len(bad)} violations")
    assert ok


def test_8_scaling_smoke(acceptance):
    g = generate("random(1000, 0.01, 0)")
    t0 = time.perf_counter()
    extend_sequence(g, 5)
    direct = time.perf_counter() - t0
    recs = run_bench(["random(1000, 0.01)"], [], [0], SolveConfig(alpha_max=5), baseline_budget=None)
    buf = io.StringIO()
    write_csv(recs, buf)
    (row,) = read_csv(io.StringIO(buf.getvalue()))
    stage_ms = float(row["extension_ms"])
    ok = direct < 10.0 and stage_ms < 10_000 and int(row["alpha_reached"]) <= 5
    acceptance(8, "random(1000, 0.01), alpha=5 extension under 10 s", ok,
               f"extend_sequence {direct:.2f}s, bench extension stage {stage_ms / 1e3:.2f}s "
               f"(both graphs), verdict {row['verdict']}")
    assert ok


def test_9_format_roundtrip(acceptance):
    rng = np.random.default_rng(SEED + 9)
    failures = 0
    for k in range(200):
        n = int(rng.integers(1, 101))
        p = (0.0, 0.05, 0.3, 0.7, 1.0)[k % 5]
        g = generate(f"random({n}, {p}, {int(rng.integers(2**31))})")
        for fmt in ("graph6", "dimacs", "edgelist"):
            failures += parse(write(g, fmt), fmt).graph != g
    acceptance(9, "parse(write(g)) == g for graph6, DIMACS, edge list", failures == 0,
               f"600 round trips, {failures} failures")
    assert failures == 0
