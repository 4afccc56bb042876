"""Benchmark harness: run the solver over generated instances, emit CSV rows.

Each instance pairs a graph with a seed-permuted copy of itself, or with a
second graph for ``"A vs B"`` entries.  Family templates may use ``n`` for
the order, e.g. ``"random(n, 0.5)"``; random families without an explicit
seed take the instance seed.
"""

from __future__ import annotations

import csv
import re
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Iterator, TextIO

from .families import FamilySpec, generate, parse_family
from .graph import Graph, Permutation, permute
from .solver import SolveConfig, solve

DEFAULT_FAMILIES = (
    "cycle(n)",
    "path(n)",
    "circulant(n, [1, 3])",
    "random(n, 0.1)",
    "random(n, 0.5)",
    "random_regular(n, 3)",
    "petersen",
    "rook(4)",
    "shrikhande",
    "shrikhande vs rook(4)",
    "cycle(6) vs disjoint_union(complete(3), complete(3))",
)
DEFAULT_SIZES = (10, 20, 50)
DEFAULT_SEEDS = (0, 1, 2)
DEFAULT_BASELINE_BUDGET = 20_000
SEEDED = {"random": 3, "random_regular": 3}
_N_RE = re.compile(r"\bn\b")


@dataclass
class BenchRecord:
    family: str
    n: int
    seed: int
    pair: str
    alpha_reached: int
    f_density: float
    unique_candidate_fraction: float
    verdict: str
    nodes: int
    extension_ms: float
    search_ms: float
    baseline_verdict: str = ""
    baseline_nodes: int = -1
    baseline_search_ms: float = 0.0


FIELDNAMES = [f.name for f in fields(BenchRecord)]


@dataclass(frozen=True)
class Instance:
    family: str
    seed: int
    pair: str
    g: Graph
    g_prime: Graph


def seeded(spec: FamilySpec, seed: int) -> FamilySpec:
    """Append ``seed`` to a random family spec that does not fix one."""
    want = SEEDED.get(spec.name)
    if want is not None and len(spec.args) == want - 1:
        return FamilySpec(spec.name, spec.args + (seed,))
    return spec


def _expand(template: str, size: int | None) -> str:
    return _N_RE.sub(str(size), template) if size is not None else template


def instances(families: Iterable[str], sizes: Iterable[int], seeds: Iterable[int],
              distinct: bool = False) -> Iterator[Instance]:
    """Generate bench instances in a fixed, deterministic order."""
    sizes = list(sizes)
    seeds = list(seeds)
    for template in families:
        per_size = sizes if _N_RE.search(template) else [None]
        for size in per_size:
            text = _expand(template, size)
            for seed in seeds:
                if " vs " in text:
                    left, right = (s.strip() for s in text.split(" vs ", 1))
                    g = generate(seeded(parse_family(left), seed))
                    other = generate(seeded(parse_family(right), seed))
                    yield Instance(text, seed, "distinct", g,
                                   permute(other, Permutation.random(other.order, seed)))
                    continue
                spec = seeded(parse_family(text), seed)
                g = generate(spec)
                yield Instance(text, seed, "permuted", g,
                               permute(g, Permutation.random(g.order, seed)))
                if distinct and spec.name in SEEDED:
                    other = generate(seeded(parse_family(text), seed + 1_000_003))
                    yield Instance(text, seed, "distinct", g, other)


def run_instance(inst: Instance, config: SolveConfig,
                 baseline_budget: int | None = DEFAULT_BASELINE_BUDGET) -> BenchRecord:
    v = solve(inst.g, inst.g_prime, config)
    s = v.stats
    rec = BenchRecord(
        family=inst.family, n=inst.g.order, seed=inst.seed, pair=inst.pair,
        alpha_reached=s.levels, f_density=round(s.f_density, 6),
        unique_candidate_fraction=round(s.unique_candidate_fraction, 6),
        verdict=v.status.value, nodes=s.nodes,
        extension_ms=round(s.extension_ms, 3), search_ms=round(s.search_ms, 3),
    )
    if baseline_budget:
        # never give the baseline less budget than the pruned run actually used
        base_cfg = SolveConfig(alpha_max=config.alpha_max, stall=config.stall,
                               node_budget=max(baseline_budget, s.nodes, 1),
                               use_forbidden=False, multiset=config.multiset)
        b = solve(inst.g, inst.g_prime, base_cfg)
        rec.baseline_verdict = b.status.value
        rec.baseline_nodes = b.stats.nodes
        rec.baseline_search_ms = round(b.stats.search_ms, 3)
    return rec


def run_bench(families: Iterable[str] = DEFAULT_FAMILIES,
              sizes: Iterable[int] = DEFAULT_SIZES,
              seeds: Iterable[int] = DEFAULT_SEEDS,
              config: SolveConfig | None = None,
              baseline_budget: int | None = DEFAULT_BASELINE_BUDGET,
              distinct: bool = False) -> list[BenchRecord]:
    config = config or SolveConfig()
    return [run_instance(inst, config, baseline_budget)
            for inst in instances(families, sizes, seeds, distinct)]


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
    w = csv.DictWriter(stream, fieldnames=FIELDNAMES)
    w.writeheader()
    for r in records:
        w.writerow(asdict(r))


def read_csv(stream: TextIO) -> list[dict]:
    return list(csv.DictReader(stream))


def dominance_violations(records: Iterable[BenchRecord]) -> list[BenchRecord]:
    """Records where pruning explored more nodes than the unpruned baseline."""
    out = []
    for r in records:
        if r.baseline_nodes < 0:
            continue
        if r.nodes > r.baseline_nodes:
            out.append(r)
    return out
