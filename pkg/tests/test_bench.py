import csv
import io

import pytest

from walkiso.bench import (DEFAULT_FAMILIES, FIELDNAMES, BenchRecord, dominance_violations,
                           instances, read_csv, run_bench, seeded, write_csv)
from walkiso.errors import InvalidParams
from walkiso.families import parse_family
from walkiso.solver import SolveConfig


def test_seeded_appends_only_missing_seed():
    assert seeded(parse_family("random(10, 0.5)"), 4).args == (10, 0.5, 4)
    assert seeded(parse_family("random(10, 0.5, 9)"), 4).args == (10, 0.5, 9)
    assert seeded(parse_family("cycle(5)"), 4).args == (5,)


def test_instances_expand_sizes_and_pairs():
    insts = list(instances(["cycle(n)", "petersen", "shrikhande vs rook(4)"], [5, 7], [0, 1]))
    assert [i.family for i in insts] == ["cycle(5)"] * 2 + ["cycle(7)"] * 2 + ["petersen"] * 2 \
        + ["shrikhande vs rook(4)"] * 2
    assert {i.pair for i in insts[:6]} == {"permuted"}
    assert insts[-1].pair == "distinct"


def test_instances_distinct_draw():
    insts = list(instances(["random(n, 0.5)"], [12], [3], distinct=True))
    assert [i.pair for i in insts] == ["permuted", "distinct"]
    assert insts[0].g == insts[1].g and insts[1].g != insts[1].g_prime


def test_invalid_family():
    with pytest.raises(InvalidParams):
        list(instances(["bogus(n)"], [4], [0]))


def test_cycle50_record():
    (rec,) = run_bench(["cycle(50)"], [], [0])
    assert rec.verdict == "isomorphic"
    assert rec.unique_candidate_fraction == 0.0
    assert rec.f_density == 0.0


def test_random_record_unique_candidates():
    (rec,) = run_bench(["random(100, 0.5)"], [], [1], baseline_budget=None)
    assert rec.verdict == "isomorphic"
    assert 0.0 <= rec.unique_candidate_fraction <= 1.0
    assert rec.baseline_nodes == -1


def test_record_ranges():
    for rec in run_bench(["random(n, 0.2)", "path(n)"], [6, 9], [0, 1]):
        assert 0.0 <= rec.f_density <= 1.0
        assert 0.0 <= rec.unique_candidate_fraction <= 1.0
        assert rec.nodes >= 0 and rec.extension_ms >= 0 and rec.search_ms >= 0
        assert rec.nodes <= rec.baseline_nodes


def test_csv_schema_and_quoting():
    recs = run_bench(["circulant(n, [1, 2])"], [7], [0])
    buf = io.StringIO()
    write_csv(recs, buf)
    text = buf.getvalue()
    header = next(csv.reader(io.StringIO(text)))
    assert header == FIELDNAMES
    assert '"circulant(7, [1, 2])"' in text
    assert read_csv(io.StringIO(text))[0]["family"] == "circulant(7, [1, 2])"


def test_dominance_helper():
    ok = BenchRecord("x", 1, 0, "permuted", 1, 0.0, 0.0, "isomorphic", 3, 0.0, 0.0,
                     "isomorphic", 3)
    bad = BenchRecord("x", 1, 0, "permuted", 1, 0.0, 0.0, "isomorphic", 4, 0.0, 0.0,
                      "isomorphic", 3)
    assert dominance_violations([ok, bad]) == [bad]


def test_baseline_budget_covers_pruned_run():
    (rec,) = run_bench(["shrikhande vs rook(4)"], [], [0], baseline_budget=10)
    assert rec.baseline_nodes >= rec.nodes


def test_default_suite_names_parse():
    for fam in DEFAULT_FAMILIES:
        for part in fam.replace("(n", "(5").split(" vs "):
            parse_family(part)
