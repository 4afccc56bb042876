"""Walk-count matrices and the extended (weighted) graph.

``N^1`` is the adjacency matrix and ``N^(a+1)[i] = sum of N^a[j]`` over the
neighbours ``j`` of ``i``.  Entries therefore count *walks* of length ``a``
(vertices may repeat), not simple paths.

All arithmetic is unsigned 32-bit with wrap-around, i.e. every addition is
reduced mod 2**32.  Counts that agree mod 2**32 can in principle disagree as
integers; that only weakens pruning, never soundness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .graph import Graph

WORD = np.uint32
MODULUS = 1 << 32
# bound on gathered row elements held at once by extend_step
CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True, eq=False)
class PathCountMatrix:
    """Walk counts of one length (``level``), as a read-only uint32 matrix."""

    level: int
    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def diagonal(self) -> np.ndarray:
        return np.diagonal(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathCountMatrix):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.entries, other.entries)

    def __repr__(self) -> str:
        return f"<PathCountMatrix level={self.level} order={self.order}>"


@dataclass(frozen=True)
class ExtendedGraph:
    """Weighted graph carrying the nonzero off-diagonal counts of one level.

    ``edges`` holds ``(i, j, w)`` with ``i < j``.  Closed-walk counts live in
    ``diagonal`` rather than as self-loops.
    """

    order: int
    level: int
    edges: tuple[tuple[int, int, int], ...]
    diagonal: tuple[int, ...]


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _adjacency(m) -> np.ndarray:
    return m.adjacency if isinstance(m, Graph) else np.asarray(m, dtype=bool)


def base_level(g: Graph) -> PathCountMatrix:
    return PathCountMatrix(1, _readonly(g.adjacency.astype(WORD)))


def extend_step(m: Graph | np.ndarray, n_alpha: PathCountMatrix) -> PathCountMatrix:
    """Compute the next walk-count level from the adjacency and the current one.

    Every edge ``{i, j}`` adds row ``j`` of ``n_alpha`` into row ``i`` of the
    result and row ``i`` into row ``j``; non-edges cost nothing, so a step is
    O(|E| n).  Contributions are grouped per target row and summed in uint32,
    which wraps exactly as the per-addition reduction requires.
    """
    adj = _adjacency(m)
    prev = n_alpha.entries
    n = prev.shape[0]
    if adj.shape != (n, n):
        raise DimensionMismatch(f"adjacency {adj.shape} vs counts {prev.shape}")
    src, dst = np.nonzero(adj)  # row-major: grouped by target row src
    indptr = np.zeros(n + 1, dtype=np.intp)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    out = np.zeros((n, n), dtype=WORD)
    rows_per_chunk = max(1, CHUNK_ELEMENTS // max(1, n * max(1, src.size // n)))
    for r0 in range(0, n, rows_per_chunk):
        r1 = min(n, r0 + rows_per_chunk)
        e0, e1 = indptr[r0], indptr[r1]
        if e0 == e1:
            continue
        starts = indptr[r0:r1]
        busy = starts < indptr[r0 + 1:r1 + 1]
        gathered = prev[dst[e0:e1]]
        out[r0:r1][busy] = np.add.reduceat(gathered, starts[busy] - e0, axis=0, dtype=WORD)
    return PathCountMatrix(n_alpha.level + 1, _readonly(out))


def extend_sequence(g: Graph, alpha_max: int) -> list[PathCountMatrix]:
    """Levels ``1 .. alpha_max``; element ``k-1`` is ``N^k``."""
    if alpha_max < 1:
        raise ValueError("alpha_max must be >= 1")
    levels = [base_level(g)]
    for _ in range(alpha_max - 1):
        levels.append(extend_step(g, levels[-1]))
    return levels


def iter_levels(g: Graph):
    """Yield ``N^1, N^2, ...`` without bound."""
    cur = base_level(g)
    while True:
        yield cur
        cur = extend_step(g, cur)


def extended_graph(n_alpha: PathCountMatrix) -> ExtendedGraph:
    e = n_alpha.entries
    iu, ju = np.nonzero(np.triu(e, k=1))
    edges = tuple(zip(iu.tolist(), ju.tolist(), e[iu, ju].tolist()))
    return ExtendedGraph(
        order=n_alpha.order,
        level=n_alpha.level,
        edges=edges,
        diagonal=tuple(np.diagonal(e).tolist()),
    )
