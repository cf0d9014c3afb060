"""Graph-transformation experiments: edge subdivision, cell negation, cycle tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Disconnected, NotAnEdge, PreconditionViolated
from .graph import SignedGraph, column_vertex, cycle_graph, row_column_graph, row_vertex
from .growth import cycle_class_growth_rate, cycle_matrix, geom_growth_rate
from .matching import component_of, matching_root, on_cycle
from .matrix import GridMatrix, set_cell
from .polynomial import DEFAULT_TOLERANCE

ENDPATH = "endpath"
INTERNAL_ACYCLIC = "internal_acyclic"
ON_CYCLE = "on_cycle"

CASE_A = "case_a"
CASE_B = "case_b"
NEITHER = "neither"

VERDICT_TOLERANCE = 1e-9


def subdivide_edge(g: SignedGraph, u: str, v: str, new_vertices: int = 1) -> SignedGraph:
    """Replace ``uv`` by a path through ``new_vertices`` fresh vertices.

    The first new edge keeps the sign of ``uv`` so cycle parities survive.
    """
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge")
    if new_vertices < 1:
        raise ValueError("new_vertices must be at least 1")
    sign = g.sign(u, v)
    taken = set(g.vertices)
    fresh = []
    k = 1
    while len(fresh) < new_vertices:
        name = f"s{k}"
        if name not in taken:
            fresh.append(name)
            taken.add(name)
        k += 1
    chain = [u, *fresh, v]
    new_edges = tuple((a, b, sign if n == 0 else 1) for n, (a, b) in enumerate(zip(chain, chain[1:])))
    base = g.remove_edge(u, v)
    return SignedGraph(base.vertices + tuple(fresh), base.edges + new_edges)


def _is_path_ending_at(g: SignedGraph, comp: list[str], x: str) -> bool:
    """True if the component ``comp`` is a (possibly trivial) path with ``x`` as an end."""
    h = g.induced(comp)
    if h.m != h.n - 1 or any(h.degree(v) > 2 for v in h.vertices):
        return False
    return h.degree(x) <= 1


def classify_edge(g: SignedGraph, u: str, v: str) -> str:
    """Classify ``uv`` as on a cycle, on an endpath, or internal and acyclic.

    An endpath edge is a bridge one of whose sides is a path ending at the
    edge.
    """
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    if on_cycle(g, u, v):
        return ON_CYCLE
    cut = g.remove_edge(u, v)
    for x in (u, v):
        if _is_path_ending_at(cut, component_of(cut, x), x):
            return ENDPATH
    return INTERNAL_ACYCLIC


def separating_vertices(g: SignedGraph, x1: str, x2: str) -> list[str]:
    """Vertices ``u`` whose removal from ``g`` minus edge x1x2 separates x1 from x2."""
    cut = g.remove_edge(x1, x2)
    out = []
    for u in g.vertices:
        if u in (x1, x2):
            continue
        rest = cut.remove_vertices([u])
        if x2 not in component_of(rest, x1):
            out.append(u)
    return out


def subdivision_case(g: SignedGraph, e: tuple[str, str], u: str) -> str:
    """Decide which subdivision case applies to the cycle edge ``e`` relative to ``u``.

    With ``H1``, ``H2`` the components of ``(g - e) - u`` holding the ends
    ``x1``, ``x2`` of ``e``: ``case_a`` when both are paths ending at their
    ``x``, ``case_b`` when neither is, ``neither`` for the mixed case.
    """
    x1, x2 = e
    if not g.has_edge(x1, x2):
        raise NotAnEdge(f"{x1}-{x2} is not an edge")
    if u in (x1, x2) or u not in g.vertices:
        raise PreconditionViolated(f"{u} must be a vertex other than the ends of {x1}-{x2}")
    if not on_cycle(g, x1, x2):
        raise PreconditionViolated(f"{x1}-{x2} does not lie on a cycle")
    rest = g.remove_edge(x1, x2).remove_vertices([u])
    h1 = component_of(rest, x1)
    if x2 in h1:
        raise PreconditionViolated(f"removing {u} does not separate {x1} from {x2}")
    h2 = component_of(rest, x2)
    a1 = _is_path_ending_at(rest, h1, x1)
    a2 = _is_path_ending_at(rest, h2, x2)
    if a1 and a2:
        return CASE_A
    if not a1 and not a2:
        return CASE_B
    return NEITHER


lemma19_preconditions = subdivision_case


def squared_root(g: SignedGraph, tolerance: float = DEFAULT_TOLERANCE) -> tuple[float, tuple[Fraction, Fraction]]:
    r = matching_root(g, tolerance)
    lo, hi = r.squared()
    return float((lo + hi) / 2), (lo, hi)


def verdict(series: list[float], tol: float = VERDICT_TOLERANCE) -> str:
    diffs = [b - a for a, b in zip(series, series[1:])]
    if all(d > tol for d in diffs):
        return "increasing"
    if all(d < -tol for d in diffs):
        return "decreasing"
    if all(abs(d) <= tol for d in diffs):
        return "constant"
    return "mixed"


@dataclass
class SubdivisionExperiment:
    base_graph: SignedGraph
    edge: tuple[str, str]
    steps: int
    bipartite: bool = True
    series: list[float] = field(default_factory=list)
    brackets: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    graphs: list[SignedGraph] = field(default_factory=list)
    edge_class: str | None = None
    case: str | None = None
    row_column: bool = True

    @property
    def verdict(self) -> str:
        return verdict(self.series)

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "steps": self.steps,
            "mode": "bipartite" if self.bipartite else "raw",
            "edge_class": self.edge_class,
            "case": self.case,
            "row_column_graph": self.row_column,
            "series": [float(f"{x:.12g}") for x in self.series],
            "verdict": self.verdict,
        }


def run_subdivision(
    g: SignedGraph,
    edge: tuple[str, str],
    steps: int,
    bipartite: bool = True,
    u: str | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SubdivisionExperiment:
    """Subdivide an edge ``steps`` times, recording lambda^2 after each step.

    Each step subdivides the newest edge next to the original second
    endpoint, so all steps lengthen the same path.  Bipartite mode inserts
    two vertices per step, raw mode one.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    a, b = edge
    if not g.has_edge(a, b):
        raise NotAnEdge(f"{a}-{b} is not an edge")
    exp = SubdivisionExperiment(base_graph=g, edge=edge, steps=steps, bipartite=bipartite)
    if g.is_connected():
        exp.edge_class = classify_edge(g, a, b)
    if u is not None:
        exp.case = subdivision_case(g, edge, u)
    per_step = 2 if bipartite else 1
    current, head = g, a
    for step in range(steps + 1):
        value, bracket = squared_root(current, tolerance)
        exp.series.append(value)
        exp.brackets.append(bracket)
        exp.graphs.append(current)
        if step == steps:
            break
        before = set(current.vertices)
        current = subdivide_edge(current, head, b, per_step)
        head = [x for x in current.vertices if x not in before][-1]
    exp.row_column = all(h.is_bipartite() for h in exp.graphs)
    return exp


def decorated_cycle(half_length: int, leaves_a: int, leaves_b: int) -> SignedGraph:
    """C_{2k} with pendant leaves on two cycle vertices at distance 2.

    Cycle vertices are ``v1..v{2k}``; leaves on ``v1`` are ``a1, a2, ...``
    and on ``v3`` are ``b1, b2, ...``.
    """
    c = cycle_graph(2 * half_length)
    edges = list(c.edges)
    edges += [("v1", f"a{k}", 1) for k in range(1, leaves_a + 1)]
    edges += [("v3", f"b{k}", 1) for k in range(1, leaves_b + 1)]
    return SignedGraph.from_edges(edges, vertices=c.vertices)


# Leaf counts (at v1, at v3) of the three subdivision families: growth
# increasing, constant (lambda^2 = 5), decreasing.
FAMILY_LEAVES = {"increasing": (1, 1), "constant": (2, 1), "decreasing": (2, 2)}

# The subdivided edge v3-v4 sits on the long arc; v2 is the separating vertex.
FAMILY_EDGE = ("v3", "v4")
FAMILY_SEPARATOR = "v2"

# The same families as printed grid matrices (rows top first).
FAMILY_MATRICES = {
    "increasing": [
        [[1, 1, 1, 0], [0, 1, 1, 1]],
        [[1, 1, 0, 1, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 1]],
        [[1, 1, 0, 0, 1, 0], [0, 1, 1, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]],
    ],
    "constant": [
        [[1, 1, 1, 1, 0], [0, 0, 1, 1, 1]],
        [[1, 1, 1, 0, 1, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]],
        [[1, 1, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1, 1]],
    ],
    "decreasing": [
        [[1, 1, 1, 1, 0, 0], [0, 0, 1, 1, 1, 1]],
        [[1, 1, 1, 0, 1, 0, 0], [0, 0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1, 1]],
        [
            [1, 1, 1, 0, 0, 1, 0, 0],
            [0, 0, 1, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 1, 1, 1],
        ],
    ],
}


def family_graph(name: str, half_length: int) -> SignedGraph:
    a, b = FAMILY_LEAVES[name]
    return decorated_cycle(half_length, a, b)


def family_matrix(name: str, index: int) -> GridMatrix:
    return GridMatrix.from_rows(FAMILY_MATRICES[name][index])


def negate_cell_sweep(m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE) -> list[dict]:
    """Growth-rate change from negating each nonzero cell in turn.

    Purely empirical: reports the sign of the change and whether the cell's
    edge lies on a cycle, without asserting anything.
    """
    base = geom_growth_rate(m, tolerance)
    g = row_column_graph(m)
    out = []
    for i, j, v in m.nonzero_cells():
        flipped = geom_growth_rate(set_cell(m, i, j, -v), tolerance)
        delta = flipped.growth_rate - base.growth_rate
        out.append(
            {
                "cell": [i, j],
                "value": v,
                "on_cycle": on_cycle(g, column_vertex(i), row_vertex(j)),
                "base_negative_cycle": base.negative_cycle_present,
                "new_negative_cycle": flipped.negative_cycle_present,
                "base_growth_rate": base.growth_rate,
                "new_growth_rate": flipped.growth_rate,
                "change": "increase" if delta > VERDICT_TOLERANCE else "decrease" if delta < -VERDICT_TOLERANCE else "none",
            }
        )
    return out


def cycle_table(max_n: int, tolerance: float = DEFAULT_TOLERANCE) -> list[dict]:
    """Closed-form and pipeline growth rates of cycle classes C_4 .. C_max_n."""
    rows = []
    for n in range(4, max_n + 1, 2):
        row = {"n": n}
        for parity in ("positive", "negative"):
            row[f"{parity}_formula"] = cycle_class_growth_rate(n, parity)
            row[f"{parity}_pipeline"] = geom_growth_rate(cycle_matrix(n, parity), tolerance).growth_rate
        rows.append(row)
    return rows
