"""0/+1/-1 grid matrices.

Cells are indexed ``(i, j)`` with ``i`` the column (1..t, left to right) and
``j`` the row (1..u, bottom to top).  The text format lists rows top first, as
matrices are usually displayed, so parsing flips the row order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import BadToken, EmptyMatrix, OutOfBounds, RaggedRows, TooLarge

#: Default limit on either dimension of a user-supplied matrix.
MAX_DIM = 16

_TOKENS = {"-1": -1, "0": 0, "1": 1}


@dataclass(frozen=True)
class GridMatrix:
    """Immutable t x u matrix over {-1, 0, 1}.

    ``columns[i - 1][j - 1]`` holds the entry of cell ``(i, j)``.
    """

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.columns or not self.columns[0]:
            raise EmptyMatrix("matrix has no cells")
        u = len(self.columns[0])
        if any(len(col) != u for col in self.columns):
            raise RaggedRows("columns have unequal length")
        if any(v not in (-1, 0, 1) for col in self.columns for v in col):
            raise ValueError("entries must be -1, 0 or 1")
        if not any(v for col in self.columns for v in col):
            raise EmptyMatrix("matrix has no nonzero cell")
        if self.t > 2 * MAX_DIM or self.u > 2 * MAX_DIM:
            raise TooLarge(f"{self.t}x{self.u} exceeds {2 * MAX_DIM}x{2 * MAX_DIM}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GridMatrix":
        """Build from rows listed top to bottom, as usually written."""
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise EmptyMatrix("matrix has no cells")
        if any(len(r) != len(rows[0]) for r in rows):
            raise RaggedRows("rows have unequal length")
        bottom_up = rows[::-1]
        t = len(rows[0])
        return cls(tuple(tuple(int(r[i]) for r in bottom_up) for i in range(t)))

    @classmethod
    def from_cells(cls, t: int, u: int, cells: dict[tuple[int, int], int]) -> "GridMatrix":
        cols = [[0] * u for _ in range(t)]
        for (i, j), v in cells.items():
            if not (1 <= i <= t and 1 <= j <= u):
                raise OutOfBounds(f"cell ({i}, {j}) outside {t}x{u}")
            cols[i - 1][j - 1] = v
        return cls(tuple(tuple(c) for c in cols))

    @property
    def t(self) -> int:
        return len(self.columns)

    @property
    def u(self) -> int:
        return len(self.columns[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.t and 1 <= j <= self.u):
            raise OutOfBounds(f"cell ({i}, {j}) outside {self.t}x{self.u}")
        return self.columns[i - 1][j - 1]

    def nonzero_cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, value)`` for nonzero cells, column by column."""
        for i, col in enumerate(self.columns, 1):
            for j, v in enumerate(col, 1):
                if v:
                    yield i, j, v

    def rows(self) -> list[list[int]]:
        """Rows top to bottom."""
        return [[self.columns[i][j] for i in range(self.t)] for j in reversed(range(self.u))]

    def count(self, value: int) -> int:
        return sum(col.count(value) for col in self.columns)

    def __str__(self) -> str:
        return render_matrix(self)


def parse_matrix(text: str, max_dim: int = MAX_DIM) -> GridMatrix:
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for colno, token in enumerate(stripped.split(), 1):
            if token not in _TOKENS:
                raise BadToken(lineno, colno, token)
            row.append(_TOKENS[token])
        if rows and len(row) != len(rows[0]):
            raise RaggedRows(f"line {lineno} has {len(row)} entries, expected {len(rows[0])}")
        rows.append(row)
    if not rows:
        raise EmptyMatrix("no matrix rows found")
    if len(rows) > max_dim or len(rows[0]) > max_dim:
        raise TooLarge(f"{len(rows[0])}x{len(rows)} exceeds {max_dim}x{max_dim}")
    return GridMatrix.from_rows(rows)


def render_matrix(m: GridMatrix) -> str:
    width = 2 if m.count(-1) else 1
    return "\n".join(" ".join(f"{v:>{width}d}" for v in row) for row in m.rows()) + "\n"


def load_matrix(path: str | Path, max_dim: int = MAX_DIM) -> GridMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"), max_dim=max_dim)


def double_refinement(m: GridMatrix) -> GridMatrix:
    """Replace every cell by a 2x2 block carrying the same diagonal segment.

    A +1 cell becomes +1 entries in the lower-left and upper-right subcells;
    a -1 cell becomes -1 entries in the upper-left and lower-right subcells.
    """
    t2, u2 = 2 * m.t, 2 * m.u
    if t2 > 2 * MAX_DIM or u2 > 2 * MAX_DIM:
        raise TooLarge(f"refinement {t2}x{u2} exceeds {2 * MAX_DIM}x{2 * MAX_DIM}")
    cols = [[0] * u2 for _ in range(t2)]
    for i, j, v in m.nonzero_cells():
        x, y = 2 * i - 2, 2 * j - 2
        if v == 1:
            cols[x][y] = cols[x + 1][y + 1] = 1
        else:
            cols[x][y + 1] = cols[x + 1][y] = -1
    return GridMatrix(tuple(tuple(c) for c in cols))


def set_cell(m: GridMatrix, i: int, j: int, v: int) -> GridMatrix:
    if not (1 <= i <= m.t and 1 <= j <= m.u):
        raise OutOfBounds(f"cell ({i}, {j}) outside {m.t}x{m.u}")
    if v not in (-1, 0, 1):
        raise ValueError("entries must be -1, 0 or 1")
    cols = [list(c) for c in m.columns]
    cols[i - 1][j - 1] = v
    return GridMatrix(tuple(tuple(c) for c in cols))
