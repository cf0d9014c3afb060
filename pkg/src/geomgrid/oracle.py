"""Brute-force counts of gridded permutations and permutations in Geom(M).

Words over the alphabet of nonzero cells are plotted on a consistently
oriented figure: the k-th letter of a length-n word puts a point at
parameter k/(n+1) along its cell's segment, in the segment's direction.
Distinct (permutation, gridding) pairs are gridded permutations; distinct
permutations are the members of the class.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, InsufficientData, InvalidOrientation
from .graph import Orientation, consistent_orientation, parity_report, row_column_graph
from .matrix import GridMatrix, double_refinement

Symbol = tuple[int, int]
Word = Sequence[Symbol]

DEFAULT_BUDGET = 10**8
_CHUNK_ROWS = 1 << 18


@dataclass(frozen=True)
class GriddedPermutation:
    perm: tuple[int, ...]
    col_counts: tuple[int, ...]
    row_counts: tuple[int, ...]


def alphabet(m: GridMatrix) -> list[Symbol]:
    return [(i, j) for i, j, _ in m.nonzero_cells()]


def word_to_gridded(m: GridMatrix, o: Orientation, w: Word) -> GriddedPermutation:
    o.check(m)
    n = len(w)
    if n == 0:
        raise ValueError("word is empty")
    scale = n + 1
    points = []
    cols = [0] * m.t
    rows = [0] * m.u
    for k, (i, j) in enumerate(w, 1):
        if m[i, j] == 0:
            raise InvalidOrientation(f"symbol ({i}, {j}) is not a nonzero cell")
        # coordinates scaled by n + 1 to stay integral
        x = (i - 1) * scale + k if o.rightward(i) else i * scale - k
        y = (j - 1) * scale + k if o.upward(j) else j * scale - k
        points.append((x, y))
        cols[i - 1] += 1
        rows[j - 1] += 1
    points.sort()
    ys = sorted(y for _, y in points)
    rank = {y: r for r, y in enumerate(ys, 1)}
    return GriddedPermutation(tuple(rank[y] for _, y in points), tuple(cols), tuple(rows))


def oriented_figure(m: GridMatrix) -> tuple[GridMatrix, Orientation, bool]:
    """The matrix to enumerate on, its orientation, and whether it was refined."""
    if parity_report(row_column_graph(m)).has_negative_cycle:
        r = double_refinement(m)
        return r, consistent_orientation(r), True
    return m, consistent_orientation(m), False


class _Kernel:
    """Vectorised word_to_gridded over a block of words of one length."""

    def __init__(self, m: GridMatrix, o: Orientation):
        o.check(m)
        sym = alphabet(m)
        self.t, self.u = m.t, m.u
        self.col = np.array([i for i, _ in sym], dtype=np.int64)
        self.row = np.array([j for _, j in sym], dtype=np.int64)
        self.right = np.array([o.rightward(i) for i, _ in sym])
        self.up = np.array([o.upward(j) for _, j in sym])

    def keys(self, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (gridded keys, permutation keys) as byte-string row arrays."""
        count, n = words.shape
        scale = n + 1
        k = np.arange(1, n + 1, dtype=np.int64)
        c, r = self.col[words], self.row[words]
        x = np.where(self.right[words], (c - 1) * scale + k, c * scale - k)
        y = np.where(self.up[words], (r - 1) * scale + k, r * scale - k)
        order = np.argsort(x, axis=1, kind="stable")
        ys = np.take_along_axis(y, order, axis=1)
        perm = np.argsort(np.argsort(ys, axis=1, kind="stable"), axis=1, kind="stable").astype(np.uint8)
        col_counts = np.stack([(c == i).sum(axis=1) for i in range(1, self.t + 1)], axis=1)
        row_counts = np.stack([(r == j).sum(axis=1) for j in range(1, self.u + 1)], axis=1)
        gridded = np.concatenate([perm, col_counts.astype(np.uint8), row_counts.astype(np.uint8)], axis=1)
        return _row_bytes(gridded), _row_bytes(perm)


def _row_bytes(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    return np.unique(a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel())


def _words_with_prefix(prefix: tuple[int, ...], size: int, n: int) -> np.ndarray:
    tail = n - len(prefix)
    total = size**tail
    out = np.empty((total, n), dtype=np.int64)
    out[:, : len(prefix)] = prefix
    idx = np.arange(total, dtype=np.int64)
    for pos in range(n - 1, len(prefix) - 1, -1):
        out[:, pos] = idx % size
        idx //= size
    return out


def _prefixes(size: int, n: int) -> list[tuple[int, ...]]:
    depth = 0
    while depth < n and size ** (n - depth) > _CHUNK_ROWS:
        depth += 1
    return list(itertools.product(range(size), repeat=depth))


def count_length(
    m: GridMatrix, o: Orientation, n: int, prefixes: Iterable[tuple[int, ...]] | None = None
) -> tuple[set[bytes], set[bytes]]:
    """Distinct gridded-permutation and permutation keys over all words of length n.

    Work is split by word prefix; the merged sets do not depend on how the
    prefixes are ordered or grouped.
    """
    kern = _Kernel(m, o)
    size = len(kern.col)
    gridded: set[bytes] = set()
    perms: set[bytes] = set()
    for prefix in prefixes if prefixes is not None else _prefixes(size, n):
        g, p = kern.keys(_words_with_prefix(tuple(prefix), size, n))
        gridded.update(x.tobytes() for x in g)
        perms.update(x.tobytes() for x in p)
    return gridded, perms


@dataclass(frozen=True)
class CountSequence:
    n_max: int
    gridded: list[int]
    perms: list[int]
    refined: bool = False
    estimates: list[tuple[float, float]] = field(default_factory=list)

    def rows(self) -> list[dict]:
        out = []
        for n in range(1, self.n_max + 1):
            t, g = self.gridded[n - 1], self.perms[n - 1]
            out.append(
                {
                    "n": n,
                    "gridded_count": t,
                    "perm_count": g,
                    "gridded_root_estimate": f"{t ** (1 / n):.12g}",
                    "perm_root_estimate": f"{g ** (1 / n):.12g}",
                }
            )
        return out

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh,
                fieldnames=["n", "gridded_count", "perm_count", "gridded_root_estimate", "perm_root_estimate"],
            )
            writer.writeheader()
            writer.writerows(self.rows())


def enumerate_counts(m: GridMatrix, n_max: int, budget: int = DEFAULT_BUDGET) -> CountSequence:
    """Gridded counts t_n and permutation counts g_n for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    fig, o, refined = oriented_figure(m)
    size = sum(1 for _ in fig.nonzero_cells())
    if size**n_max > budget:
        raise BudgetExceeded(f"{size}^{n_max} words exceeds the budget of {budget}")
    gridded, perms = [], []
    for n in range(1, n_max + 1):
        g, p = count_length(fig, o, n)
        gridded.append(len(g))
        perms.append(len(p))
    estimates = [(t ** (1 / n), g ** (1 / n)) for n, (t, g) in enumerate(zip(gridded, perms), 1)]
    return CountSequence(n_max, gridded, perms, refined, estimates)


def trace_monoid_counts(r: Sequence[int], n_max: int) -> list[int]:
    """Coefficients t_1..t_n_max of 1 / sum_k (-1)^k r_k z^k."""
    if not r or r[0] != 1:
        raise ValueError("rook numbers must start with r_0 = 1")
    t = [1]
    for n in range(1, n_max + 1):
        t.append(sum((-1) ** (k + 1) * r[k] * t[n - k] for k in range(1, min(n, len(r) - 1) + 1)))
    return t[1:]


@dataclass(frozen=True)
class GrowthEstimate:
    root: float
    ratio: float



def empirical_growth_rate(c: CountSequence | Sequence[int]) -> GrowthEstimate:
    """t_n^(1/n) and t_n / t_(n-1) at the last available n (gridded counts)."""
    seq = list(c.gridded if isinstance(c, CountSequence) else c)
    if len(seq) < 2 or seq[-1] <= 0 or seq[-2] <= 0:
        raise InsufficientData("need at least two positive terms")
    n = len(seq)
    root = math.exp(math.log(seq[-1]) / n)
    ratio = seq[-1] / seq[-2]
    return GrowthEstimate(root=root, ratio=float(ratio))
