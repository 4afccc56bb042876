"""Generators for the graph families used throughout tests and benchmarks.

Vertex numbering is fixed per family:

* ``cycle(n)``, ``path(n)``: ``i`` is joined to ``i+1`` (and ``n-1`` to ``0``
  for the cycle).
* ``complete(n)``: every pair.
* ``petersen``: outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram
  ``5+i -- 5+(i+2) % 5``.
* ``circulant(n, S)``: ``i -- (i ± s) mod n`` for ``s`` in ``S``.
* ``rook(k)``: square ``(row, col)`` is vertex ``k*row + col``; two squares
  are adjacent when they share a row or a column.
* ``shrikhande``: Cayley graph on Z4 x Z4, ``(a, b)`` is vertex ``4a + b``,
  connection set ``{±(1,0), ±(0,1), ±(1,1)}``.
* ``disjoint_union(G1, G2, ...)``: blocks in argument order.
* ``random(n, p, seed)``: each pair ``i < j`` independently with probability
  ``p``, drawn from ``numpy.random.default_rng(seed)``.
* ``random_regular(n, d, seed)``: pairing (configuration) model; restart on
  any loop or multi-edge.

Family specs are written as call expressions, e.g.
``"disjoint-union(complete(3), complete(3))"`` or ``"random(100, 0.5, 7)"``;
hyphens in names are accepted in place of underscores.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .errors import InvalidParams
from .graph import Graph, validate

MAX_PAIRING_ATTEMPTS = 100_000


@dataclass(frozen=True)
class FamilySpec:
    name: str
    args: tuple[Any, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(_fmt_arg(a) for a in self.args)})"


def _fmt_arg(a: Any) -> str:
    if isinstance(a, FamilySpec):
        return str(a)
    if isinstance(a, (list, tuple)):
        return "[" + ", ".join(_fmt_arg(x) for x in a) + "]"
    return repr(a)


def _need_int(value, what: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InvalidParams(f"{what} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidParams(f"{what} must be >= {minimum}, got {value}")
    return int(value)


def _from_edges(n: int, edges, label: str) -> Graph:
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    return validate(a, label=label)


def cycle(n: int) -> Graph:
    n = _need_int(n, "cycle order", 3)
    return _from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"cycle({n})")


def path(n: int) -> Graph:
    n = _need_int(n, "path order", 1)
    return _from_edges(n, ((i, i + 1) for i in range(n - 1)), f"path({n})")


def complete(n: int) -> Graph:
    n = _need_int(n, "complete order", 1)
    a = ~np.eye(n, dtype=bool)
    return validate(a, label=f"complete({n})")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _from_edges(10, outer + spokes + inner, "petersen")


def circulant(n: int, connections) -> Graph:
    n = _need_int(n, "circulant order", 1)
    try:
        steps = [int(s) for s in connections]
    except TypeError:
        steps = [int(connections)]
    if any(s % n == 0 for s in steps):
        raise InvalidParams(f"connection set {steps} contains 0 mod {n}")
    edges = [(i, (i + s) % n) for i in range(n) for s in steps]
    return _from_edges(n, edges, f"circulant({n}, {sorted(steps)})")


def rook(k: int) -> Graph:
    k = _need_int(k, "rook board size", 1)
    r, c = np.divmod(np.arange(k * k), k)
    a = (r[:, None] == r[None, :]) | (c[:, None] == c[None, :])
    np.fill_diagonal(a, False)
    return validate(a, label=f"rook({k})")


def shrikhande() -> Graph:
    gens = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in gens:
                edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return _from_edges(16, edges, "shrikhande")


def disjoint_union(*graphs: Graph) -> Graph:
    if len(graphs) == 1 and isinstance(graphs[0], (list, tuple)):
        graphs = tuple(graphs[0])
    if not graphs:
        raise InvalidParams("disjoint union of no graphs")
    n = sum(g.order for g in graphs)
    a = np.zeros((n, n), dtype=bool)
    off = 0
    for g in graphs:
        a[off:off + g.order, off:off + g.order] = g.adjacency
        off += g.order
    label = "disjoint_union(" + ", ".join(g.label or "?" for g in graphs) + ")"
    return validate(a, label=label)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    n = _need_int(n, "random order", 1)
    if not 0.0 <= float(p) <= 1.0:
        raise InvalidParams(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    a = np.triu(rng.random((n, n)) < p, k=1)
    return validate(a | a.T, label=f"random({n}, {p}, {seed})")


def random_regular(n: int, d: int, seed: int = 0) -> Graph:
    n = _need_int(n, "random-regular order", 1)
    d = _need_int(d, "degree", 0)
    if d and d >= n:
        raise InvalidParams(f"degree {d} impossible on {n} vertices")
    if (n * d) % 2:
        raise InvalidParams(f"n*degree = {n * d} is odd")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(MAX_PAIRING_ATTEMPTS):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        u, v = pairs[:, 0], pairs[:, 1]
        if np.any(u == v):
            continue
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        if np.unique(lo * n + hi).size != lo.size:
            continue
        a = np.zeros((n, n), dtype=bool)
        a[u, v] = a[v, u] = True
        return validate(a, label=f"random_regular({n}, {d}, {seed})")
    raise InvalidParams(
        f"pairing model found no simple {d}-regular graph on {n} vertices "
        f"in {MAX_PAIRING_ATTEMPTS} attempts"
    )


FAMILIES: dict[str, Callable[..., Graph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "petersen": petersen,
    "circulant": circulant,
    "rook": rook,
    "shrikhande": shrikhande,
    "disjoint_union": disjoint_union,
    "random": random_graph,
    "random_regular": random_regular,
}


def _canonical_name(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def parse_family(text: str) -> FamilySpec:
    """Parse ``"name(arg, ...)"`` into a :class:`FamilySpec`.

    Arguments may be numbers, lists of numbers or nested family specs.
    """
    src = text.strip()
    # rewrite only the hyphenated family names; any other '-' stays a minus sign
    src = src.replace("random-regular", "random_regular").replace(
        "disjoint-union", "disjoint_union")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise InvalidParams(f"cannot parse family spec {text!r}: {exc.msg}") from None
    return _spec_from_node(tree.body, text)


def _spec_from_node(node: ast.AST, text: str) -> FamilySpec:
    if isinstance(node, ast.Name):
        name = _canonical_name(node.id)
        args: tuple = ()
    elif isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        if node.keywords:
            raise InvalidParams(f"keyword arguments are not supported: {text!r}")
        name = _canonical_name(node.func.id)
        args = tuple(_arg_from_node(a, text) for a in node.args)
    else:
        raise InvalidParams(f"not a family spec: {text!r}")
    if name not in FAMILIES:
        raise InvalidParams(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    return FamilySpec(name, args)


def _arg_from_node(node: ast.AST, text: str):
    if isinstance(node, (ast.Name, ast.Call)):
        return _spec_from_node(node, text)
    if isinstance(node, (ast.List, ast.Tuple)):
        return tuple(_arg_from_node(e, text) for e in node.elts)
    try:
        return ast.literal_eval(node)
    except ValueError:
        raise InvalidParams(f"bad argument in family spec {text!r}") from None


def generate(family: FamilySpec | str) -> Graph:
    """Build the graph named by ``family`` (a spec or its string form)."""
    spec = parse_family(family) if isinstance(family, str) else family
    try:
        builder = FAMILIES[_canonical_name(spec.name)]
    except KeyError:
        raise InvalidParams(f"unknown family {spec.name!r}") from None
    args = [generate(a) if isinstance(a, FamilySpec) else a for a in spec.args]
    try:
        g = builder(*args)
    except TypeError as exc:
        raise InvalidParams(f"bad arguments for {spec.name}: {exc}") from None
    return g.with_label(str(spec))
