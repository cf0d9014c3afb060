"""Signed graphs, row-column graphs of grid matrices, and cycle parity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

from .errors import GraphFormatError, InvalidOrientation, NegativeCycle, NotAnEdge
from .matrix import GridMatrix


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph with a +1/-1 label on every edge.

    Graphs used only for their shape (matching and characteristic
    polynomials, expansion, subdivision) simply carry +1 everywhere.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        adj: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        if len(adj) != len(self.vertices):
            raise ValueError("duplicate vertex")
        for a, b, s in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if a not in adj or b not in adj:
                raise ValueError(f"edge {a}-{b} has an unknown endpoint")
            if b in adj[a]:
                raise ValueError(f"parallel edge {a}-{b}")
            if s not in (-1, 1):
                raise ValueError(f"edge sign {s} is not +1 or -1")
            adj[a][b] = s
            adj[b][a] = s
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(
        cls, edges: Iterable[Sequence], vertices: Iterable[str] | None = None
    ) -> "SignedGraph":
        """Edges are ``(u, v)`` or ``(u, v, sign)``; vertices default to edge order."""
        es = []
        order: dict[str, None] = dict.fromkeys(str(v) for v in vertices) if vertices is not None else {}
        for e in edges:
            a, b = str(e[0]), str(e[1])
            s = int(e[2]) if len(e) > 2 else 1
            es.append((a, b, s))
            order.setdefault(a)
            order.setdefault(b)
        return cls(tuple(order), tuple(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self, v: str) -> dict[str, int]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, a: str, b: str) -> bool:
        return a in self._adj and b in self._adj[a]

    def sign(self, a: str, b: str) -> int:
        if not self.has_edge(a, b):
            raise NotAnEdge(f"{a}-{b} is not an edge")
        return self._adj[a][b]

    def underlying(self) -> "SignedGraph":
        return SignedGraph(self.vertices, tuple((a, b, 1) for a, b, _ in self.edges))

    def remove_vertices(self, drop: Iterable[str]) -> "SignedGraph":
        gone = set(drop)
        return SignedGraph(
            tuple(v for v in self.vertices if v not in gone),
            tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone),
        )

    def remove_edge(self, a: str, b: str) -> "SignedGraph":
        if not self.has_edge(a, b):
            raise NotAnEdge(f"{a}-{b} is not an edge")
        return SignedGraph(self.vertices, tuple(e for e in self.edges if {e[0], e[1]} != {a, b}))

    def induced(self, keep: Iterable[str]) -> "SignedGraph":
        kept = set(keep)
        return self.remove_vertices(v for v in self.vertices if v not in kept)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((a, b, {"sign": s}) for a, b, s in self.edges)
        return g

    def components(self) -> list[list[str]]:
        """Vertex lists of the connected components, in vertex order."""
        seen: set[str] = set()
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def cycle_rank(self) -> int:
        """Number of independent cycles, |E| - |V| + comp."""
        return self.m - self.n + len(self.components())

    def is_forest(self) -> bool:
        return self.cycle_rank() == 0

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def fresh_name(self, base: str, taken: set[str] | None = None) -> str:
        taken = taken if taken is not None else set()
        name = base
        while name in self._adj or name in taken:
            name += "'"
        return name


def path_graph(n: int, prefix: str = "p") -> SignedGraph:
    vs = [f"{prefix}{k}" for k in range(1, n + 1)]
    return SignedGraph.from_edges(zip(vs, vs[1:]), vertices=vs)


def cycle_graph(n: int, prefix: str = "v") -> SignedGraph:
    vs = [f"{prefix}{k}" for k in range(1, n + 1)]
    return SignedGraph.from_edges(zip(vs, vs[1:] + vs[:1]), vertices=vs)


def disjoint_union(g: SignedGraph, h: SignedGraph, suffix: str = "#") -> SignedGraph:
    """G + H; vertices of ``h`` clashing with ``g`` get ``suffix`` appended."""
    rename = {}
    taken = set(g.vertices)
    for v in h.vertices:
        name = v
        while name in taken:
            name += suffix
        rename[v] = name
        taken.add(name)
    return SignedGraph(
        g.vertices + tuple(rename[v] for v in h.vertices),
        g.edges + tuple((rename[a], rename[b], s) for a, b, s in h.edges),
    )


def column_vertex(i: int) -> str:
    return f"c{i}"


def row_vertex(j: int) -> str:
    return f"r{j}"


def row_column_graph(m: GridMatrix) -> SignedGraph:
    """Bipartite graph with a vertex per column and row, an edge per nonzero cell."""
    vertices = tuple(column_vertex(i) for i in range(1, m.t + 1)) + tuple(
        row_vertex(j) for j in range(1, m.u + 1)
    )
    edges = tuple((column_vertex(i), row_vertex(j), v) for i, j, v in m.nonzero_cells())
    return SignedGraph(vertices, edges)


@dataclass(frozen=True)
class ParityReport:
    connected: bool
    component_count: int
    has_cycle: bool
    has_negative_cycle: bool
    has_odd_cycle: bool
    switching: dict[str, int] | None
    witness: list[str] | None = None

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "component_count": self.component_count,
            "has_cycle": self.has_cycle,
            "has_negative_cycle": self.has_negative_cycle,
            "has_odd_cycle": self.has_odd_cycle,
            "switching": self.switching,
            "witness": self.witness,
        }


def _tree_path(parent: dict[str, str | None], a: str, b: str) -> list[str]:
    up_a = [a]
    while parent[up_a[-1]] is not None:
        up_a.append(parent[up_a[-1]])
    index = {v: k for k, v in enumerate(up_a)}
    up_b = [b]
    while up_b[-1] not in index:
        up_b.append(parent[up_b[-1]])
    lca = up_b[-1]
    return up_a[: index[lca] + 1] + up_b[-2::-1]


def _switching(g: SignedGraph) -> tuple[dict[str, int], list[str] | None]:
    """Spanning-forest sign propagation.

    Returns the vertex signs and, if some edge disagrees with them, a
    negative cycle made of that edge and the tree path between its ends.
    """
    sigma: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    witness = None
    for root in g.vertices:
        if root in sigma:
            continue
        sigma[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s in g.neighbours(x).items():
                if y not in sigma:
                    sigma[y] = sigma[x] * s
                    parent[y] = x
                    queue.append(y)
                elif witness is None and sigma[x] * sigma[y] != s:
                    witness = _tree_path(parent, x, y)
    return sigma, witness


def parity_report(g: SignedGraph) -> ParityReport:
    sigma, witness = _switching(g)
    comps = len(g.components())
    return ParityReport(
        connected=comps == 1,
        component_count=comps,
        has_cycle=g.m - g.n + comps > 0,
        has_negative_cycle=witness is not None,
        has_odd_cycle=not g.is_bipartite(),
        switching=None if witness is not None else sigma,
        witness=witness,
    )


@dataclass(frozen=True)
class Orientation:
    """Direction of travel along every segment of a standard figure.

    ``columns[i - 1]`` is +1 if column ``i`` is traversed rightwards, -1 if
    leftwards; ``rows[j - 1]`` is +1 for upwards, -1 for downwards.
    """

    columns: tuple[int, ...]
    rows: tuple[int, ...]

    def rightward(self, i: int) -> bool:
        return self.columns[i - 1] == 1

    def upward(self, j: int) -> bool:
        return self.rows[j - 1] == 1

    def check(self, m: GridMatrix) -> None:
        """Raise InvalidOrientation unless every nonzero cell is compatible."""
        if len(self.columns) != m.t or len(self.rows) != m.u:
            raise InvalidOrientation("orientation shape does not match matrix")
        for i, j, v in m.nonzero_cells():
            if self.columns[i - 1] * self.rows[j - 1] != v:
                raise InvalidOrientation(f"cell ({i}, {j}) with slope {v} is inconsistent")

    def flipped(self) -> "Orientation":
        return Orientation(tuple(-c for c in self.columns), tuple(-r for r in self.rows))

    @classmethod
    def towards_centre(cls, t2: int, u2: int) -> "Orientation":
        """Orientation of a doubly refined figure: every segment points into its block's centre."""
        return cls(
            tuple(1 if i % 2 == 1 else -1 for i in range(1, t2 + 1)),
            tuple(1 if j % 2 == 1 else -1 for j in range(1, u2 + 1)),
        )


def consistent_orientation(m: GridMatrix) -> Orientation:
    """Orientation read off the switching signs; column 1 (if used) points right."""
    sigma, witness = _switching(row_column_graph(m))
    if witness is not None:
        raise NegativeCycle(witness)
    o = Orientation(
        tuple(sigma[column_vertex(i)] for i in range(1, m.t + 1)),
        tuple(sigma[row_vertex(j)] for j in range(1, m.u + 1)),
    )
    o.check(m)
    return o


def refine_graph(g: SignedGraph) -> SignedGraph:
    """Unsigned graph on two copies of the vertices, edges lifted by sign.

    A positive edge ``ab`` lifts to ``ab`` and ``a'b'``; a negative edge to
    ``ab'`` and ``a'b``.
    """
    taken = set(g.vertices)
    prime = {}
    for v in g.vertices:
        name = v + "'"
        while name in taken:
            name += "'"
        taken.add(name)
        prime[v] = name
    edges = []
    for a, b, s in g.edges:
        if s == 1:
            edges += [(a, b, 1), (prime[a], prime[b], 1)]
        else:
            edges += [(a, prime[b], 1), (prime[a], b, 1)]
    return SignedGraph(g.vertices + tuple(prime[v] for v in g.vertices), tuple(edges))


def parse_edge_list(text: str) -> SignedGraph:
    """One edge per line: ``u v`` or ``u v -`` for a negative edge."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) == 2:
            edges.append((parts[0], parts[1], 1))
        elif len(parts) == 3 and parts[2] in ("-", "+"):
            edges.append((parts[0], parts[1], -1 if parts[2] == "-" else 1))
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v' or 'u v -', got {line!r}")
    if not edges:
        raise GraphFormatError("edge list is empty")
    try:
        return SignedGraph.from_edges(edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def render_edge_list(g: SignedGraph) -> str:
    return "".join(f"{a} {b}{' -' if s < 0 else ''}\n" for a, b, s in g.edges)


def load_edge_list(path: str | Path) -> SignedGraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))
