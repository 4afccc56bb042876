"""Vertex signatures and the forbidden-assignment matrix.

A vertex ``i`` of ``G`` and ``i'`` of ``G'`` are compatible at level ``a``
when ``N^a[i, i] == N'^a[i', i']`` and row ``i`` of ``N^a`` equals row ``i'``
of ``N'^a`` as a multiset.  An isomorphism carries each row onto the row of
its image entry-for-entry, so incompatible pairs can never be matched.

By default rows are compared as multisets.  ``multiset=False`` switches to
the weaker set comparison (distinct values only) for experiments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import IndexOutOfRange, LevelMismatch, OrderMismatch, SizeMismatch
from .extension import PathCountMatrix, iter_levels
from .graph import Graph

DEFAULT_STALL = 2


@dataclass(frozen=True)
class VertexSignature:
    level: int
    diagonal: int
    row: tuple[int, ...]


def vertex_signature(n_alpha: PathCountMatrix, i: int) -> VertexSignature:
    n = n_alpha.order
    if not 0 <= i < n:
        raise IndexOutOfRange(f"vertex {i} not in [0, {n})")
    row = n_alpha.entries[i]
    return VertexSignature(n_alpha.level, int(row[i]), tuple(np.sort(row).tolist()))


def compatible(s: VertexSignature, s_prime: VertexSignature, multiset: bool = True) -> bool:
    if s.level != s_prime.level:
        raise LevelMismatch(f"levels {s.level} and {s_prime.level}")
    if len(s.row) != len(s_prime.row):
        raise SizeMismatch(f"row lengths {len(s.row)} and {len(s_prime.row)}")
    if s.diagonal != s_prime.diagonal:
        return False
    if multiset:
        return s.row == s_prime.row
    return set(s.row) == set(s_prime.row)


def signature_classes(a: PathCountMatrix, b: PathCountMatrix,
                      multiset: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Label every vertex of both matrices by its signature class.

    Labels are shared: vertex ``i`` of ``a`` and ``i'`` of ``b`` get the same
    label exactly when their signatures are compatible.
    """
    n = a.order
    rows = np.empty((2 * n, n + 1), dtype=a.entries.dtype)
    rows[:n, 0] = a.diagonal()
    rows[n:, 0] = b.diagonal()
    if multiset:
        rows[:n, 1:] = np.sort(a.entries, axis=1)
        rows[n:, 1:] = np.sort(b.entries, axis=1)
        keys = [r.tobytes() for r in rows]
    else:
        keys = [(int(r[0]), np.unique(r[1:]).tobytes())
                for r in np.concatenate([rows[:, :1], np.vstack([a.entries, b.entries])], axis=1)]
    # dict lookup hashes first, then confirms with exact byte equality
    seen: dict = {}
    labels = np.fromiter((seen.setdefault(k, len(seen)) for k in keys), dtype=np.intp,
                         count=2 * n)
    return labels[:n], labels[n:]


@dataclass
class ForbiddenMatrix:
    """Cumulative record of excluded assignments ``i -> i'``.

    ``forbidden[i, i']`` is True when some computed level found ``i`` and
    ``i'`` incompatible.  ``class_mismatch_level`` is the first level whose
    signature classes had different sizes in the two graphs, if any.
    """

    forbidden: np.ndarray
    level_reached: int = 0
    new_per_level: list[int] = field(default_factory=list)
    class_mismatch_level: int | None = None

    @property
    def order(self) -> int:
        return self.forbidden.shape[0]

    @property
    def candidate_counts(self) -> np.ndarray:
        return self.order - self.forbidden.sum(axis=1)

    @property
    def density(self) -> float:
        return float(self.forbidden.mean()) if self.forbidden.size else 0.0

    @property
    def unique_candidate_fraction(self) -> float:
        return float(np.mean(self.candidate_counts == 1))

    def has_full_row(self) -> bool:
        return bool(self.forbidden.all(axis=1).any())

    def has_full_column(self) -> bool:
        return bool(self.forbidden.all(axis=0).any())


def iter_forbidden(g: Graph, g_prime: Graph, alpha_max: int | None = None,
                   stall: int = DEFAULT_STALL,
                   multiset: bool = True) -> Iterator[ForbiddenMatrix]:
    """Grow ``F`` one level at a time, yielding it after each level.

    The same object is yielded each time and updated in place (entries only
    ever go from False to True).  Iteration stops after ``alpha_max`` levels
    (default: the order), after ``stall`` consecutive levels from level 2 on
    without a new exclusion, or as soon as a row is entirely forbidden.
    """
    if g.order != g_prime.order:
        raise OrderMismatch(f"orders {g.order} and {g_prime.order}")
    n = g.order
    alpha_max = n if alpha_max is None else alpha_max
    if alpha_max < 1 or stall < 1:
        raise ValueError("alpha_max and stall must be positive")
    f = ForbiddenMatrix(np.zeros((n, n), dtype=bool))
    quiet = 0
    for na, nb in zip(iter_levels(g), iter_levels(g_prime)):
        la, lb = signature_classes(na, nb, multiset)
        incompatible = la[:, None] != lb[None, :]
        added = int(np.count_nonzero(incompatible & ~f.forbidden))
        f.forbidden |= incompatible
        f.level_reached = na.level
        f.new_per_level.append(added)
        if f.class_mismatch_level is None:
            ca = np.bincount(la, minlength=2 * n)
            cb = np.bincount(lb, minlength=2 * n)
            if not np.array_equal(ca, cb):
                f.class_mismatch_level = na.level
        yield f
        # level 1 only sees degrees, which the level-2 diagonal repeats
        if na.level >= 2:
            quiet = quiet + 1 if added == 0 else 0
        if quiet >= stall or na.level >= alpha_max or f.has_full_row():
            return


def build_forbidden(g: Graph, g_prime: Graph, alpha_max: int | None = None,
                    stall: int = DEFAULT_STALL, multiset: bool = True) -> ForbiddenMatrix:
    f = None
    for f in iter_forbidden(g, g_prime, alpha_max, stall, multiset):
        pass
    return f


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.feasible


def feasibility(f: ForbiddenMatrix) -> Feasibility:
    """Cheap necessary conditions for any isomorphism to survive ``F``.

    A feasible result does not imply the graphs are isomorphic.
    """
    if f.has_full_row():
        return Feasibility(False, "fully-forbidden row")
    if f.has_full_column():
        return Feasibility(False, "fully-forbidden column")
    if f.class_mismatch_level is not None:
        return Feasibility(False, f"signature class sizes differ at level {f.class_mismatch_level}")
    return Feasibility(True)
