"""Matching numbers, matching and characteristic polynomials, and expansion.

``lambda(G)`` is the largest root of the matching polynomial and ``rho(G)``
the spectral radius, i.e. the largest root of the characteristic polynomial.
"""

from __future__ import annotations

import sys
from collections import deque

import networkx as nx
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import EdgeNotOnCycle, ExpansionTooLarge, NotAnEdge, TooLarge
from .graph import SignedGraph
from .matrix import GridMatrix
from .polynomial import DEFAULT_TOLERANCE, IntPolynomial, RootResult, largest_root

MAX_RECURRENCE_VERTICES = 64
MAX_BITMASK_SIDE = 32
MAX_CYCLE_SUM_VERTICES = 24
MAX_DP_STATES = 4_000_000


def _add_shifted(acc: list[int], src: tuple[int, ...], shift: int) -> None:
    need = len(src) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(src):
        acc[k + shift] += c


def _bfs_order(g: SignedGraph) -> list[str]:
    order = []
    for comp in g.components():
        order.extend(comp)
    return order


def _matching_numbers_recurrence(g: SignedGraph) -> list[int]:
    order = _bfs_order(g)
    index = {v: k for k, v in enumerate(order)}
    nbr = [0] * len(order)
    for a, b, _ in g.edges:
        nbr[index[a]] |= 1 << index[b]
        nbr[index[b]] |= 1 << index[a]

    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def count(mask: int) -> tuple[int, ...]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        acc = list(count(rest))
        near = nbr[v] & rest
        while near:
            w = near & -near
            near ^= w
            _add_shifted(acc, count(rest ^ w), 1)
        out = tuple(acc)
        memo[mask] = out
        if len(memo) > MAX_DP_STATES:
            raise TooLarge("matching recurrence exceeded its state budget")
        return out

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(order) + 100))
    try:
        return list(count((1 << len(order)) - 1))
    finally:
        sys.setrecursionlimit(limit)


def _bipartite_matching_numbers(sweep: list[list[int]], width: int) -> list[int]:
    """Matchings of a bipartite graph given, for each vertex on the swept side,
    the indices of its neighbours on the other (``width``-sized) side."""
    if width > MAX_BITMASK_SIDE:
        raise TooLarge(f"bitmask side {width} exceeds {MAX_BITMASK_SIDE}")
    states = {0: 1}
    for nbrs in sweep:
        nxt = dict(states)
        for mask, c in states.items():
            for j in nbrs:
                bit = 1 << j
                if not mask & bit:
                    nxt[mask | bit] = nxt.get(mask | bit, 0) + c
        states = nxt
        if len(states) > MAX_DP_STATES:
            raise TooLarge("bitmask DP exceeded its state budget")
    out = [0] * (width + 1)
    for mask, c in states.items():
        out[bin(mask).count("1")] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def matching_numbers(g: SignedGraph) -> list[int]:
    """``[m_0, m_1, ...]`` where ``m_k`` counts k-edge matchings (signs ignored)."""
    if g.n <= MAX_RECURRENCE_VERTICES:
        return _matching_numbers_recurrence(g)
    nxg = g.to_networkx()
    if nx.is_bipartite(nxg):
        left, right = set(), set()
        for comp in nx.connected_components(nxg):
            a, b = nx.bipartite.sets(nxg.subgraph(comp))
            left |= a
            right |= b
        small, big = (left, right) if len(left) <= len(right) else (right, left)
        if len(small) <= MAX_BITMASK_SIDE:
            idx = {v: k for k, v in enumerate(sorted(small))}
            sweep = [[idx[w] for w in g.neighbours(v)] for v in sorted(big)]
            return _bipartite_matching_numbers(sweep, len(small))
    raise TooLarge(f"graph with {g.n} vertices is too large for exact matching counts")


def rook_numbers(m: GridMatrix) -> list[int]:
    """Non-attacking rook placements on the nonzero cells, by number of rooks.

    Sweeps the longer side of the matrix, keeping a bitmask of occupied lines
    on the shorter side.
    """
    cells = list(m.nonzero_cells())
    if m.u <= m.t:
        sweep = [[j - 1 for i, j, _ in cells if i == col] for col in range(1, m.t + 1)]
        width = m.u
    else:
        sweep = [[i - 1 for i, j, _ in cells if j == row] for row in range(1, m.u + 1)]
        width = m.t
    return _bipartite_matching_numbers(sweep, width)


def polynomial_from_matching_numbers(numbers: list[int], n: int) -> IntPolynomial:
    """sum_k (-1)^k m_k z^(n - 2k)."""
    coeffs = [0] * (n + 1)
    for k, mk in enumerate(numbers):
        if mk:
            coeffs[n - 2 * k] = (-1) ** k * mk
    return IntPolynomial(coeffs)


def matching_polynomial(g: SignedGraph) -> IntPolynomial:
    return polynomial_from_matching_numbers(matching_numbers(g), g.n)


def characteristic_polynomial(g: SignedGraph, max_vertices: int = MAX_RECURRENCE_VERTICES) -> IntPolynomial:
    """det(zI - A) of the (unsigned) adjacency matrix, exactly over the integers."""
    if g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices exceeds the limit of {max_vertices}")
    if g.n == 0:
        return IntPolynomial([1])
    index = {v: k for k, v in enumerate(g.vertices)}
    rows = [[ZZ(0)] * g.n for _ in range(g.n)]
    for a, b, _ in g.edges:
        rows[index[a]][index[b]] = ZZ(1)
        rows[index[b]][index[a]] = ZZ(1)
    descending = DomainMatrix(rows, (g.n, g.n), ZZ).charpoly()
    return IntPolynomial(int(c) for c in reversed(descending))


def simple_cycles(g: SignedGraph) -> list[frozenset[frozenset[str]]]:
    """Every cycle of ``g`` as a set of edges."""
    out = []
    for cyc in nx.simple_cycles(g.to_networkx()):
        out.append(frozenset(frozenset((cyc[k], cyc[k - 1])) for k in range(len(cyc))))
    return out


def two_regular_subgraphs(g: SignedGraph) -> list[tuple[frozenset[str], int]]:
    """Nonempty unions of vertex-disjoint cycles as (vertex set, component count)."""
    cycles = []
    for edges in simple_cycles(g):
        verts = frozenset(v for e in edges for v in e)
        cycles.append(verts)
    out = []

    def extend(start: int, used: frozenset[str], comps: int) -> None:
        for k in range(start, len(cycles)):
            if used.isdisjoint(cycles[k]):
                now = used | cycles[k]
                out.append((now, comps + 1))
                extend(k + 1, now, comps + 1)

    extend(0, frozenset(), 0)
    return out


def mu_via_cycle_sum(g: SignedGraph) -> IntPolynomial:
    """Matching polynomial from characteristic polynomials of cycle complements."""
    if g.n > MAX_CYCLE_SUM_VERTICES:
        raise TooLarge(f"{g.n} vertices exceeds {MAX_CYCLE_SUM_VERTICES} for cycle enumeration")
    total = characteristic_polynomial(g)
    for verts, comps in two_regular_subgraphs(g):
        rest = g.remove_vertices(verts)
        total = total + characteristic_polynomial(rest) * (2 ** comps)
    return total


def matching_root(g: SignedGraph, tolerance: float = DEFAULT_TOLERANCE) -> RootResult:
    """lambda(G)."""
    return largest_root(matching_polynomial(g), tolerance)


def spectral_radius(
    g: SignedGraph, tolerance: float = DEFAULT_TOLERANCE, max_vertices: int = MAX_RECURRENCE_VERTICES
) -> RootResult:
    """rho(G)."""
    return largest_root(characteristic_polynomial(g, max_vertices), tolerance)


def on_cycle(g: SignedGraph, u: str, v: str) -> bool:
    """True if edge uv lies on a cycle, i.e. is not a bridge."""
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge")
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.neighbours(x):
            if (x == u and y == v) or y in seen:
                continue
            if y == v:
                return True
            seen.add(y)
            queue.append(y)
    return False


def component_of(g: SignedGraph, v: str) -> list[str]:
    for comp in g.components():
        if v in comp:
            return comp
    raise KeyError(v)


def expand_at(g: SignedGraph, u: str, v: str) -> SignedGraph:
    """Expand ``g`` at ``u`` along the cycle edge ``uv``.

    The result is ``g`` with ``uv`` removed, plus a fresh copy of the
    component ``H`` of ``g - u`` containing ``v``, plus an edge from ``u`` to
    the copy of ``v``.  Its matching polynomial has the same largest root.
    """
    if not on_cycle(g, u, v):
        raise EdgeNotOnCycle(f"{u}-{v} does not lie on a cycle")
    base = g.remove_edge(u, v)
    h = g.remove_vertices([u]).induced(component_of(g.remove_vertices([u]), v))
    taken = set(g.vertices)
    copy = {}
    for x in h.vertices:
        name = x + "'"
        while name in taken:
            name += "'"
        taken.add(name)
        copy[x] = name
    sign = g.sign(u, v)
    return SignedGraph(
        base.vertices + tuple(copy[x] for x in h.vertices),
        base.edges + tuple((copy[a], copy[b], s) for a, b, s in h.edges) + ((u, copy[v], sign),),
    )


def _least_cycle_edge(g: SignedGraph) -> tuple[str, str] | None:
    bridges = {frozenset(e) for e in nx.bridges(g.to_networkx())}
    candidates = [tuple(sorted((a, b))) for a, b, _ in g.edges if frozenset((a, b)) not in bridges]
    return min(candidates) if candidates else None


def fully_expand(g: SignedGraph, max_vertices: int = 10_000) -> SignedGraph:
    """Expand repeatedly (least cycle edge first) until no cycle remains."""
    while True:
        if g.n > max_vertices:
            raise ExpansionTooLarge(f"expansion reached {g.n} vertices (limit {max_vertices})")
        edge = _least_cycle_edge(g)
        if edge is None:
            return g
        g = expand_at(g, *edge)
