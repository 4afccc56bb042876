import numpy as np
import pytest

from walkiso import generate, parse_family
from walkiso.errors import InvalidParams

from oracles import girth, srg_parameters


def test_cycle4():
    g = generate("cycle(4)")
    assert (g.order, g.size) == (4, 4)
    assert set(g.degrees()) == {2}


def test_petersen():
    g = generate("petersen")
    assert (g.order, g.size) == (10, 15)
    assert set(g.degrees()) == {3}
    assert girth(g) == 5


def test_rook4_is_srg_16_6_2_2():
    g = generate("rook(4)")
    assert srg_parameters(g) == (16, 6, 2, 2)
    # vertex k*row + col
    assert g.adjacency[0, 3] and g.adjacency[0, 12] and not g.adjacency[0, 5]


def test_shrikhande_is_srg_16_6_2_2():
    g = generate("shrikhande")
    assert srg_parameters(g) == (16, 6, 2, 2)


def test_complete_and_path():
    assert generate("complete(5)").size == 10
    assert generate("path(1)").size == 0
    assert generate("path(4)").edges() == [(0, 1), (1, 2), (2, 3)]


def test_circulant():
    g = generate("circulant(8, [1, 3])")
    assert set(g.degrees()) == {4}
    assert g.adjacency[0, 3] and g.adjacency[0, 5] and not g.adjacency[0, 2]
    # steps s and n-s give the same edge
    assert generate("circulant(6, [2, 4])") == generate("circulant(6, [2])")


def test_circulant_rejects_zero_step():
    with pytest.raises(InvalidParams):
        generate("circulant(6, [0, 1])")
    with pytest.raises(InvalidParams):
        generate("circulant(6, [6])")


def test_disjoint_union():
    g = generate("disjoint-union(complete(3), complete(3))")
    assert g.order == 6 and g.size == 6
    assert not g.adjacency[:3, 3:].any()


def test_random_reproducible():
    a = generate("random(40, 0.3, 11)")
    b = generate("random(40, 0.3, 11)")
    assert a.adjacency.tobytes() == b.adjacency.tobytes()
    assert a != generate("random(40, 0.3, 12)")


@pytest.mark.parametrize("n, d, seed", [(10, 3, 0), (20, 4, 5), (30, 3, 9), (7, 0, 1)])
def test_random_regular(n, d, seed):
    g = generate(f"random-regular({n}, {d}, {seed})")
    assert set(g.degrees()) == {d}
    assert g == generate(f"random_regular({n}, {d}, {seed})")


def test_random_regular_odd_product():
    with pytest.raises(InvalidParams):
        generate("random-regular(7, 3, 0)")


@pytest.mark.parametrize("text", ["nosuch(3)", "cycle(2)", "cycle(3.5)", "random(5, 2.0)", "cycle(", "1 + 2"])
def test_bad_specs(text):
    with pytest.raises(InvalidParams):
        generate(text)


def test_spec_roundtrip():
    spec = parse_family("disjoint-union(cycle(4), circulant(7, [1, 2]))")
    assert parse_family(str(spec)) == spec


def test_all_generators_produce_simple_graphs():
    for text in ["cycle(7)", "petersen", "rook(3)", "shrikhande", "random(25, 0.9, 2)",
                 "random_regular(12, 5, 3)", "complete(1)"]:
        a = generate(text).adjacency
        assert np.array_equal(a, a.T) and not a.diagonal().any()
