"""Growth rates of geometric and monotone grid classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import OddCycleLength
from .graph import parity_report, row_column_graph
from .matching import (
    characteristic_polynomial,
    matching_polynomial,
    rook_numbers,
)
from .matrix import GridMatrix, double_refinement
from .polynomial import DEFAULT_TOLERANCE, IntPolynomial, RootResult, largest_root

DIRECT = "G(M)"
REFINED = "G(M^x2)"


def _sig(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class GrowthRateResult:
    matrix: GridMatrix
    used_graph: str
    negative_cycle_present: bool
    matching_poly: IntPolynomial
    lam: RootResult
    growth_rate: float
    growth_bracket: tuple[Fraction, Fraction]
    monotone: RootResult
    monotone_growth_rate: float
    monotone_bracket: tuple[Fraction, Fraction]
    comparison: str
    connected: bool
    acyclic: bool

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.rows(),
            "t": self.matrix.t,
            "u": self.matrix.u,
            "negative_cycle": self.negative_cycle_present,
            "graph_used": self.used_graph,
            "matching_polynomial": self.matching_poly.to_json(),
            "lambda": {
                "value": _sig(self.lam.value),
                "bracket": [_sig(float(self.lam.bracket[0])), _sig(float(self.lam.bracket[1]))],
            },
            "geom_growth_rate": _sig(self.growth_rate),
            "monotone_growth_rate": _sig(self.monotone_growth_rate),
            "comparison": self.comparison,
        }


def _square(r: RootResult) -> tuple[float, tuple[Fraction, Fraction]]:
    lo, hi = r.squared()
    return float((lo + hi) / 2), (lo, hi)


def monotone_root(m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE) -> RootResult:
    """rho(G(M)); signs play no part."""
    return largest_root(characteristic_polynomial(row_column_graph(m)), tolerance)


def monotone_growth_rate(m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE) -> float:
    return _square(monotone_root(m, tolerance))[0]


def geom_growth_rate(
    m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE, always_refine: bool = False
) -> GrowthRateResult:
    """Growth rate of Geom(M) as the squared largest matching-polynomial root.

    ``G(M)`` is used directly when it has no negative cycle; otherwise (or
    when ``always_refine`` is set) the row-column graph of the double
    refinement is used.
    """
    g = row_column_graph(m)
    report = parity_report(g)
    refine = always_refine or report.has_negative_cycle
    graph = row_column_graph(double_refinement(m)) if refine else g
    mu = matching_polynomial(graph)
    lam = largest_root(mu, tolerance)
    rate, bracket = _square(lam)
    mono = largest_root(characteristic_polynomial(g), tolerance)
    mono_rate, mono_bracket = _square(mono)
    if bracket[0] > mono_bracket[1]:
        raise ArithmeticError("geometric growth rate exceeds monotone growth rate")
    strict = bracket[1] < mono_bracket[0]
    return GrowthRateResult(
        matrix=m,
        used_graph=REFINED if refine else DIRECT,
        negative_cycle_present=report.has_negative_cycle,
        matching_poly=mu,
        lam=lam,
        growth_rate=rate,
        growth_bracket=bracket,
        monotone=mono,
        monotone_growth_rate=mono_rate,
        monotone_bracket=mono_bracket,
        comparison="strict" if strict else "equal",
        connected=report.connected,
        acyclic=not report.has_cycle,
    )


def rook_polynomial_g(m: GridMatrix) -> IntPolynomial:
    """sum_k (-1)^k r_k z^(floor(n/2) - k) with n = t + u.

    Its largest root is the growth rate of the trace monoid of ``m``.
    """
    r = rook_numbers(m)
    top = (m.t + m.u) // 2
    coeffs = [0] * (top + 1)
    for k, rk in enumerate(r):
        coeffs[top - k] = (-1) ** k * rk
    return IntPolynomial(coeffs)


def trace_monoid_growth_rate(m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE) -> RootResult:
    """Largest root of the rook-number polynomial of ``m`` itself (no refinement)."""
    return largest_root(rook_polynomial_g(m), tolerance)


def cycle_class_growth_rate(n: int, parity: str) -> float:
    """Closed form for a class whose row-column graph is the cycle C_n."""
    if n < 4 or n % 2:
        raise OddCycleLength(f"row-column cycles have even length >= 4, got {n}")
    if parity == "positive":
        return 4 * math.cos(math.pi / (2 * n)) ** 2
    if parity == "negative":
        return 4 * math.cos(math.pi / (4 * n)) ** 2
    raise ValueError(f"parity must be 'positive' or 'negative', not {parity!r}")


def cycle_matrix(n: int, parity: str) -> GridMatrix:
    """k x k staircase matrix whose row-column graph is C_n, n = 2k.

    Column i meets rows i and i+1 (cyclically).  Negative parity flips the
    single cell (1, 1).
    """
    if n < 4 or n % 2:
        raise OddCycleLength(f"row-column cycles have even length >= 4, got {n}")
    k = n // 2
    cells = {}
    for i in range(1, k + 1):
        cells[(i, i)] = 1
        cells[(i, i % k + 1)] = 1
    if parity == "negative":
        cells[(1, 1)] = -1
    elif parity != "positive":
        raise ValueError(f"parity must be 'positive' or 'negative', not {parity!r}")
    return GridMatrix.from_cells(k, k, cells)


@dataclass(frozen=True)
class ComparisonReport:
    geom_growth_rate: float
    monotone_growth_rate: float
    connected: bool
    acyclic: bool
    comparison: str

    @property
    def strict(self) -> bool:
        return self.comparison == "strict"

    def to_json(self) -> dict:
        return {
            "geom_growth_rate": _sig(self.geom_growth_rate),
            "monotone_growth_rate": _sig(self.monotone_growth_rate),
            "connected": self.connected,
            "acyclic": self.acyclic,
            "comparison": self.comparison,
        }


def compare_classes(m: GridMatrix, tolerance: float = DEFAULT_TOLERANCE) -> ComparisonReport:
    res = geom_growth_rate(m, tolerance)
    return ComparisonReport(
        geom_growth_rate=res.growth_rate,
        monotone_growth_rate=res.monotone_growth_rate,
        connected=res.connected,
        acyclic=res.acyclic,
        comparison=res.comparison,
    )
