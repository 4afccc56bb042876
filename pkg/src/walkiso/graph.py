"""Undirected simple graphs and vertex permutations.

A :class:`Graph` wraps a read-only boolean adjacency matrix.  Vertices are
the integers ``0 .. order-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AsymmetricMatrix,
    EmptyMatrix,
    LengthMismatch,
    NotSquare,
    SelfLoop,
)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph given by its adjacency matrix.

    Construct through :func:`validate` (or :meth:`from_edges`) so the
    symmetry / zero-diagonal invariants are checked.
    """

    adjacency: np.ndarray
    label: str | None = None

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    @property
    def size(self) -> int:
        """Number of edges."""
        return int(np.count_nonzero(self.adjacency)) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        us, vs = np.nonzero(np.triu(self.adjacency, k=1))
        return list(zip(us.tolist(), vs.tolist()))

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])

    def with_label(self, label: str | None) -> Graph:
        return Graph(self.adjacency, label)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]],
                   label: str | None = None) -> Graph:
        a = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            a[u, v] = a[v, u] = True
        return validate(a, label=label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.order, np.packbits(self.adjacency).tobytes()))

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} order={self.order} size={self.size}>"


def validate(adjacency, label: str | None = None) -> Graph:
    """Check a square 0/1 matrix and wrap it as a :class:`Graph`.

    Nonzero entries count as edges.  Raises :class:`EmptyMatrix`,
    :class:`NotSquare`, :class:`SelfLoop` or :class:`AsymmetricMatrix`.
    """
    a = np.asarray(adjacency)
    if a.size == 0:
        raise EmptyMatrix("graph must have at least one vertex")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"adjacency must be square, got shape {a.shape}")
    a = a != 0
    loops = np.flatnonzero(np.diagonal(a))
    if loops.size:
        raise SelfLoop(f"self-loop at vertex {int(loops[0])}")
    if not np.array_equal(a, a.T):
        i, j = np.argwhere(a != a.T)[0]
        raise AsymmetricMatrix(f"adjacency[{i}][{j}] != adjacency[{j}][{i}]")
    return Graph(_frozen(a), label)


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``0 .. n-1``; ``self[i]`` is the image of ``i``."""

    map: tuple[int, ...]
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = tuple(int(x) for x in self.map)
        if sorted(m) != list(range(len(m))):
            raise LengthMismatch(f"not a permutation of 0..{len(m) - 1}: {m}")
        object.__setattr__(self, "map", m)
        object.__setattr__(self, "_array", _frozen(np.array(m, dtype=np.intp)))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def random(cls, n: int, seed: int | None = None) -> Permutation:
        return cls(tuple(np.random.default_rng(seed).permutation(n).tolist()))

    def inverse(self) -> Permutation:
        inv = np.empty(len(self), dtype=np.intp)
        inv[self._array] = np.arange(len(self))
        return Permutation(tuple(inv.tolist()))

    def as_array(self) -> np.ndarray:
        return self._array

    def __len__(self) -> int:
        return len(self.map)

    def __getitem__(self, i: int) -> int:
        return self.map[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.map)


def as_permutation(p: Permutation | Sequence[int]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(tuple(p))


def permute(g: Graph, p: Permutation | Sequence[int]) -> Graph:
    """Relabel vertex ``i`` as ``p[i]``.

    The result satisfies ``result[p[i]][p[j]] == g[i][j]``, so ``p`` is an
    isomorphism from ``g`` onto the result.
    """
    p = as_permutation(p)
    if len(p) != g.order:
        raise LengthMismatch(f"permutation of length {len(p)} for graph of order {g.order}")
    idx = p.as_array()
    out = np.zeros_like(g.adjacency)
    out[np.ix_(idx, idx)] = g.adjacency
    return Graph(_frozen(out), g.label)
