"""Exact integer polynomials and certified isolation of the largest real root."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoPositiveRoot, ZeroPolynomial

DEFAULT_TOLERANCE = 1e-12


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with Python ``int`` coefficients, ascending degree."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = _trim(coeffs)
        for x in c:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"coefficient {x!r} is not an int")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls(int(s) for s in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by z**k."""
        if self.is_zero():
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k) if len(self.coeffs) > 1 else IntPolynomial([0])

    def compose_neg(self) -> "IntPolynomial":
        """p(-z)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def primitive(self) -> "IntPolynomial":
        """Divide by the (positive) content; signs are preserved."""
        g = self.content()
        return self if g in (0, 1) else IntPolynomial(c // g for c in self.coeffs)

    def low_order_zeros(self) -> int:
        """Multiplicity of 0 as a root."""
        k = 0
        while k < len(self.coeffs) - 1 and self.coeffs[k] == 0:
            k += 1
        return k

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of p(x) for rational x."""
        a, b = x.numerator, x.denominator
        # b**d * p(a/b) by Horner; b > 0 so the sign is that of p(x)
        acc = 0
        bpow = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bpow
            bpow *= b
        return (acc > 0) - (acc < 0)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k) else str(mag)
            if k == 1:
                body += "z"
            elif k > 1:
                body += f"z^{k}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out


def _to_fractions(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _frac_trim(c: list[Fraction]) -> list[Fraction]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        shift = len(a) - 1 - db
        f = a[-1] / b[-1]
        q[shift] = f
        for k in range(db + 1):
            a[shift + k] -= f * b[k]
        a.pop()
        if not a:
            a = [Fraction(0)]
    return _frac_trim(q), _frac_trim(a)


def _from_fractions(c: list[Fraction]) -> IntPolynomial:
    """Positive rational multiple of ``c`` with coprime integer coefficients."""
    den = math.lcm(*(x.denominator for x in c))
    return IntPolynomial(int(x * den) for x in c).primitive()


def divmod_poly(a: IntPolynomial, b: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    return _frac_divmod(_to_fractions(a), _to_fractions(b))


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    q, r = divmod_poly(a, b)
    if any(r):
        raise ArithmeticError("division is not exact")
    if any(x.denominator != 1 for x in q):
        raise ArithmeticError("quotient is not integral")
    return IntPolynomial(int(x) for x in q)


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    x, y = _to_fractions(a), _to_fractions(b)
    while any(y):
        _, r = _frac_divmod(x, y)
        x, y = y, r
    if not any(x):
        return IntPolynomial([0])
    g = _from_fractions(x)
    return -g if g.lead < 0 else g


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), primitive, leading coefficient positive."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no squarefree part")
    if p.degree <= 0:
        return IntPolynomial([1])
    g = gcd(p, p.derivative())
    q, _ = divmod_poly(p, g)
    out = _from_fractions(q)
    return -out if out.lead < 0 else out


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of a squarefree polynomial, each member scaled positively."""
    seq = [p, p.derivative().primitive()]
    while seq[-1].degree > 0:
        _, r = divmod_poly(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append(-_from_fractions(r))
    return seq


def sign_variations(seq: list[IntPolynomial], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class RootResult:
    """Largest real root with a certified rational bracket ``[lo, hi]``.

    The squarefree part of the polynomial has exactly one root in
    ``(lo, hi]`` (or ``lo == hi`` is an exact root), and that root is the
    largest real root of the polynomial.
    """

    value: float
    bracket: tuple[Fraction, Fraction]
    tolerance: float

    @property
    def width(self) -> Fraction:
        return self.bracket[1] - self.bracket[0]

    def squared(self) -> tuple[Fraction, Fraction]:
        lo, hi = self.bracket
        return (lo * lo, hi * hi) if lo >= 0 else (Fraction(0), max(lo * lo, hi * hi))

    def to_json(self) -> dict:
        return {"value": self.value, "bracket": [float(self.bracket[0]), float(self.bracket[1])]}


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every root has modulus below 1 + max |c_k / c_lead|."""
    lead = abs(p.lead)
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))


def largest_root(p: IntPolynomial, tolerance: float = DEFAULT_TOLERANCE) -> RootResult:
    """Isolate the largest real root of ``p`` to within ``tolerance``.

    Roots at zero are deflated first.  A root of zero is reported only when
    no positive root exists.
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    tol = Fraction(tolerance)
    k = p.low_order_zeros()
    q = IntPolynomial(p.coeffs[k:])
    zero = Fraction(0)
    if q.degree <= 0:
        if k:
            return RootResult(0.0, (zero, zero), tolerance)
        raise NoPositiveRoot(f"{p} has no real root")
    sf = squarefree_part(q)
    seq = sturm_sequence(sf)
    hi = Fraction(math.ceil(root_bound(sf)))
    lo = zero
    v_hi = sign_variations(seq, hi)
    count = sign_variations(seq, lo) - v_hi
    if count == 0:
        if k:
            return RootResult(0.0, (zero, zero), tolerance)
        raise NoPositiveRoot(f"{p} has no nonnegative root")
    # Sturm bisection until (lo, hi] isolates the largest root
    while count > 1 and hi - lo > tol:
        mid = (lo + hi) / 2
        v_mid = sign_variations(seq, mid)
        upper = v_mid - v_hi
        if upper > 0:
            lo, count = mid, upper
        else:
            hi, v_hi = mid, v_mid
    if count > 1:
        return RootResult(float((lo + hi) / 2), (lo, hi), tolerance)
    # sign bisection on the simple root
    s_hi = sf.sign_at(hi)
    if s_hi == 0:
        return RootResult(float(hi), (hi, hi), tolerance)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s_mid = sf.sign_at(mid)
        if s_mid == 0:
            return RootResult(float(mid), (mid, mid), tolerance)
        if s_mid == s_hi:
            hi = mid
        else:
            lo = mid
    return RootResult(float((lo + hi) / 2), (lo, hi), tolerance)
