"""Point counts, L-polynomial and slope polygons of y^p - y = f(x).

Counting is by enumeration: over F_(q^s) an x that is not a pole of f lifts
to p points when the absolute trace of f(x) vanishes and to none otherwise,
and each pole carries exactly one (totally ramified) point since its order
is prime to p.  So

    N_s = (m+1) + p * #{ x in F_(q^s), x not a pole, Tr(f(x)) = 0 }.

The numerator L(u) of the zeta function is recovered from N_1..N_g through
the exponential power series identity (exact integer arithmetic; a
non-integral coefficient raises InconsistentCounts) and completed to degree
2g by the functional equation c_(2g-i) = q^(g-i) c_i.  Extension fields are
built on the canonical modulus, with base-field data carried across by the
canonical embedding.

The q-adic Newton polygon is the lower convex hull of (i, ord_p(c_i)/a),
q = p^a, recorded as a multiset of slopes with multiplicities.  The Hodge
polygon of f depends on the pole orders alone: slopes 0 and 1 with
multiplicity m, plus i/d_j for 0 < i < d_j at each pole.  When p = 1 mod L
the Newton polygon, shrunk by p-1 in both directions, equals the Hodge
polygon; compare_polygons performs that shrink-and-compare exactly, with
rational arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curve import CurveSpec, validate
from .errors import InconsistentCounts, NotShrinkable
from .finite_field import GF, embedding
from .ratfunc import Poly


# ---------------------------------------------------------------------------
# Point counting
# ---------------------------------------------------------------------------


def count_points(spec: CurveSpec, s: int) -> int:
    """Number of points of the smooth projective curve over F_(q^s)."""
    inv = validate(spec)
    base = spec.field
    if s == 1:
        big = base
    else:
        big = GF(base.p, base.k * s)
    phi = embedding(base, big)
    f0 = Poly(big, [phi(c) for c in spec.poles[0].coeffs])
    finite = [
        (phi(datum.location), [phi(c) for c in datum.coeffs])
        for datum in spec.poles[1:]
    ]
    locations = {loc for loc, _ in finite}
    zeros = 0
    for x in big.elements():
        if x in locations:
            continue
        val = f0.evaluate(x)
        for loc, coeffs in finite:
            t = (x - loc).inverse()
            acc = big.zero
            for c in reversed(coeffs):
                acc = (acc + c) * t
            val = val + acc
        if val.trace_to_prime() == 0:
            zeros += 1
    return (inv.m + 1) + base.p * zeros


# ---------------------------------------------------------------------------
# L-polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LPolynomial:
    """Numerator of the zeta function: integer coefficients, degree 2g.

    Always satisfies coeffs[0] = 1 and the functional equation
    coeffs[2g-i] = q^(g-i) * coeffs[i].
    """

    coeffs: tuple[int, ...]
    q: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("L-polynomial must have constant term 1")
        if len(self.coeffs) % 2 == 0:
            raise ValueError("L-polynomial must have even degree")
        g = self.genus
        for i in range(g + 1):
            if self.coeffs[2 * g - i] != self.q ** (g - i) * self.coeffs[i]:
                raise ValueError("functional equation violated")

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def predicted_count(self, s: int) -> int:
        """N_s implied by this polynomial (Newton's identities, exact)."""
        # L = prod (1 - alpha_i u); power sums A_s of the alpha_i satisfy
        # s*c_s = -sum_{r<=s} A_r c_{s-r}; then N_s = q^s + 1 - A_s.
        c = list(self.coeffs)
        A: list[int] = []
        for r in range(1, s + 1):
            acc = r * (c[r] if r < len(c) else 0)
            for t in range(1, r):
                if r - t < len(c):
                    acc += A[t - 1] * c[r - t]
            A.append(-acc)
        return self.q**s + 1 - A[s - 1]

    def weil_bounds_ok(self, tol: float = 1e-6) -> bool:
        """Numeric sanity bound: every reciprocal root has modulus sqrt(q)."""
        if self.genus == 0:
            return True
        roots = np.roots(np.array(self.coeffs[::-1], dtype=float))
        return bool(np.all(np.abs(np.abs(roots) * self.q**0.5 - 1.0) < tol))

    def to_json(self) -> dict:
        return {"q": self.q, "coeffs": list(self.coeffs)}


def l_from_counts(counts, q: int, g: int) -> LPolynomial:
    """L(u) from the counts N_1..N_g plus the functional equation.

    Exact integer arithmetic; counts that do not come from a curve of
    genus g over F_q surface as InconsistentCounts.
    """
    if len(counts) < g:
        raise ValueError(f"need N_1..N_{g}, got {len(counts)} counts")
    traces = [counts[s - 1] - q**s - 1 for s in range(1, g + 1)]
    c = [1]
    for n in range(1, g + 1):
        acc = sum(traces[s - 1] * c[n - s] for s in range(1, n + 1))
        if acc % n:
            raise InconsistentCounts(f"coefficient {n} is not an integer")
        c.append(acc // n)
    for i in range(g - 1, -1, -1):
        c.append(q ** (g - i) * c[i])
    return LPolynomial(tuple(c), q)


def l_polynomial(spec: CurveSpec) -> LPolynomial:
    """Recover L(u) of the curve by counting points over F_q..F_(q^g)."""
    inv = validate(spec)
    q = spec.field.order
    counts = [count_points(spec, s) for s in range(1, inv.g + 1)]
    return l_from_counts(counts, q, inv.g)


# ---------------------------------------------------------------------------
# Slope polygons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlopePolygon:
    """Multiset of rational slopes: ((slope, multiplicity), ...) ascending."""

    slopes: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def from_multiset(values) -> "SlopePolygon":
        counts: dict[Fraction, int] = {}
        for v in values:
            fv = Fraction(v)
            counts[fv] = counts.get(fv, 0) + 1
        return SlopePolygon(tuple(sorted(counts.items())))

    @property
    def length(self) -> int:
        return sum(m for _, m in self.slopes)

    def multiplicity(self, slope) -> int:
        target = Fraction(slope)
        for s, m in self.slopes:
            if s == target:
                return m
        return 0

    def expanded(self) -> list[Fraction]:
        return [s for s, m in self.slopes for _ in range(m)]

    def shrink(self, factor: int) -> "SlopePolygon":
        """Divide every multiplicity by factor; slopes are unchanged."""
        out = []
        for s, m in self.slopes:
            if m % factor:
                raise NotShrinkable(
                    f"multiplicity {m} of slope {s} is not divisible by {factor}"
                )
            out.append((s, m // factor))
        return SlopePolygon(tuple(out))

    def vertex_heights(self) -> list[Fraction]:
        """Partial sums of the sorted slopes (the polygon's vertices)."""
        heights = [Fraction(0)]
        for s in self.expanded():
            heights.append(heights[-1] + s)
        return heights

    def is_symmetric(self) -> bool:
        """Slope t and 1 - t occur with the same multiplicity."""
        return all(self.multiplicity(1 - s) == m for s, m in self.slopes)

    def to_json(self) -> list[list[int]]:
        return [[s.numerator, s.denominator, m] for s, m in self.slopes]


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            a = 0
            while q % p == 0:
                q //= p
                a += 1
            if q != 1:
                raise ValueError("q is not a prime power")
            return p, a
    raise ValueError("q must be >= 2")


def _ord(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_polygon(L: LPolynomial, q: int) -> SlopePolygon:
    """q-adic Newton polygon of L: lower hull of (i, ord_p(c_i)/a)."""
    p, a = _prime_power(q)
    points = [(i, _ord(c, p)) for i, c in enumerate(L.coeffs) if c != 0]
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1, (x2 - x1) * a)] * (x2 - x1))
    return SlopePolygon.from_multiset(slopes)


def hodge_polygon(orders) -> SlopePolygon:
    """Hodge polygon of f from its pole orders alone; total length D."""
    orders = list(orders)
    m = len(orders) - 1
    slopes = [Fraction(0)] * m + [Fraction(1)] * m
    for d in orders:
        slopes.extend(Fraction(i, d) for i in range(1, d))
    return SlopePolygon.from_multiset(slopes)


def compare_polygons(newton: SlopePolygon, hodge: SlopePolygon, p: int) -> str:
    """Shrink the Newton polygon by p-1 and compare with the Hodge polygon.

    Returns "equal", "np_above" (the shrunk Newton polygon lies on or above
    the Hodge polygon as a convex polygon) or "incomparable".
    """
    shrunk = newton.shrink(p - 1)
    if shrunk == hodge:
        return "equal"
    if shrunk.length != hodge.length:
        return "incomparable"
    hn = shrunk.vertex_heights()
    hh = hodge.vertex_heights()
    if all(a >= b for a, b in zip(hn, hh)):
        return "np_above"
    return "incomparable"
