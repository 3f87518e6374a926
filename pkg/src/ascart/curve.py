"""Artin-Schreier curves y^p - y = f(x) given by pole data.

A curve is described by its field and one PoleDatum per pole of f: the
location (infinity first, then finite points e_j) and the coefficients of
the principal part there.  For the pole at infinity the coefficients are
those of the polynomial part f_0(x), degrees 0..d_0 (a constant term is
allowed and retained; it never changes the basis or the Cartier matrix but
does change point counts).  For a finite pole they are the coefficients of
f_j(x_j) in x_j = (x - e_j)^(-1), degrees 1..d_j, so a constant term cannot
occur in well-formed data.

validate() checks the normal form (pole orders prime to p, nonzero leading
coefficients, distinct locations, infinity present and listed first) and
returns the numeric invariants: D, L, the genus g = D(p-1)/2, the p-rank
s = m(p-1), and, when p = 1 mod L, the slopes gamma_j = (p-1)/d_j.

basis() enumerates the monomial basis of regular 1-forms: blocks W_j of
forms x_j^b y^r dx subject to

    j = 0:   r, b >= 0      and  r*d_0 + b*p <= (p-1)*(d_0 - 1) - 2
    j >= 1:  r >= 0, b >= 1 and  r*d_j + b*p <= (p-1)*(d_j + 1)

sorted by r, then pole index, then b.  Block j has (d_j + eps_j)*(p-1)/2
elements, eps_0 = -1 and eps_j = 1 otherwise, so the total is the genus.

partition_HA() splits the basis (only when p = 1 mod L) into the forms H
whose Cartier images carry pivots, r >= (b - eps_j)*gamma_j, and the
complement A; the a-number equals #A in that regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ConditionNotSatisfied,
    ConstantTermOnFinitePole,
    DuplicatePoleLocation,
    MissingInfinitePole,
    PoleOrderDivisibleByP,
    ZeroLeadingCoefficient,
)
from .finite_field import Field, FieldElement, embedding
from .ratfunc import PartialFraction, Poly, RatFunc, partial_fractions


class Infinity:
    """The distinguished pole location at infinity (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = Infinity()


@dataclass(frozen=True)
class PoleDatum:
    """One pole of f: its location and the principal-part coefficients.

    coeffs covers degrees 0..d at infinity and degrees 1..d at a finite
    pole; the top entry is the leading coefficient u_j.
    """

    location: FieldElement | Infinity
    coeffs: tuple[FieldElement, ...]

    @staticmethod
    def at_infinity(field: Field, coeffs) -> "PoleDatum":
        return PoleDatum(INF, tuple(field(c) for c in coeffs))

    @staticmethod
    def finite(field: Field, location, coeffs, lowest_degree: int = 1) -> "PoleDatum":
        """Principal part at a finite pole.

        With lowest_degree=0 the sequence explicitly includes a degree-0
        slot; a nonzero value there violates the normal form.
        """
        cs = tuple(field(c) for c in coeffs)
        if lowest_degree == 0:
            if cs and not cs[0].is_zero():
                raise ConstantTermOnFinitePole(
                    f"finite pole at {location!r} has constant term {cs[0]!r}"
                )
            cs = cs[1:]
        elif lowest_degree != 1:
            raise ValueError("lowest_degree must be 0 or 1")
        return PoleDatum(field(location), cs)

    @property
    def is_infinite(self) -> bool:
        return isinstance(self.location, Infinity)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1 if self.is_infinite else len(self.coeffs)

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1]


@dataclass(frozen=True)
class CurveSpec:
    """y^p - y = f(x) with f given pole by pole, infinity first."""

    field: Field
    poles: tuple[PoleDatum, ...]

    @property
    def p(self) -> int:
        return self.field.p

    @staticmethod
    def from_rational(field: Field, f: RatFunc) -> "CurveSpec":
        """Build the pole-data form of f; f must have a pole at infinity."""
        pf = partial_fractions(f)
        if pf.poly.degree() < 1:
            raise MissingInfinitePole(
                "f has no pole at infinity; apply moebius_substitute to move "
                "one pole there first"
            )
        poles = [PoleDatum(INF, pf.poly.coeffs)]
        for e in sorted(pf.tails, key=lambda v: v.counter()):
            tail = pf.tails[e]
            d = max(tail)
            poles.append(
                PoleDatum(e, tuple(tail.get(n, field.zero) for n in range(1, d + 1)))
            )
        return CurveSpec(field, tuple(poles))

    def f_partial_fraction(self) -> PartialFraction:
        """f as a PartialFraction, straight from the pole data."""
        inf = self.poles[0]
        tails = {
            p.location: {n: c for n, c in enumerate(p.coeffs, start=1)}
            for p in self.poles[1:]
        }
        return PartialFraction(Poly(self.field, inf.coeffs), tails)

    def f_ratfunc(self) -> RatFunc:
        """f as a single canonical rational function."""
        return self.f_partial_fraction().assemble()

    def finite_locations(self) -> list[FieldElement]:
        return [p.location for p in self.poles[1:]]


@dataclass(frozen=True)
class CurveInvariants:
    """Numeric invariants of a validated curve."""

    orders: tuple[int, ...]
    m: int
    D: int
    L: int
    g: int
    s: int
    epsilon: tuple[int, ...]
    gamma: tuple[int, ...] | None
    theorem_applicable: bool

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "m": self.m,
            "D": self.D,
            "L": self.L,
            "genus": self.g,
            "p_rank": self.s,
            "epsilon": list(self.epsilon),
            "gamma": None if self.gamma is None else list(self.gamma),
            "theorem_applicable": self.theorem_applicable,
        }


def validate(spec: CurveSpec) -> CurveInvariants:
    """Check the normal form and return the curve's numeric invariants."""
    p = spec.p
    if not spec.poles or not spec.poles[0].is_infinite:
        raise MissingInfinitePole(
            "the first pole must be at infinity; apply moebius_substitute to "
            "move a pole of f there"
        )
    seen: set = set()
    for datum in spec.poles[1:]:
        if datum.is_infinite:
            raise DuplicatePoleLocation("infinity listed more than once")
        if datum.location in seen:
            raise DuplicatePoleLocation(f"two poles at {datum.location!r}")
        seen.add(datum.location)

    orders = []
    for j, datum in enumerate(spec.poles):
        if not datum.coeffs or datum.coeffs[-1].is_zero():
            if datum.is_infinite and datum.order < 1:
                raise MissingInfinitePole(
                    "f is regular at infinity; apply moebius_substitute to "
                    "move a pole there"
                )
            raise ZeroLeadingCoefficient(f"pole {j}: leading coefficient is zero")
        d = datum.order
        if datum.is_infinite and d < 1:
            raise MissingInfinitePole(
                "f is regular at infinity; apply moebius_substitute to move "
                "a pole there"
            )
        if d % p == 0:
            raise PoleOrderDivisibleByP(f"pole {j} has order {d} divisible by p={p}")
        orders.append(d)

    m = len(orders) - 1
    D = sum(d + 1 for d in orders) - 2
    L = math.lcm(*orders)
    applicable = (p - 1) % L == 0
    return CurveInvariants(
        orders=tuple(orders),
        m=m,
        D=D,
        L=L,
        g=D * (p - 1) // 2,
        s=m * (p - 1),
        epsilon=tuple(-1 if j == 0 else 1 for j in range(m + 1)),
        gamma=tuple((p - 1) // d for d in orders) if applicable else None,
        theorem_applicable=applicable,
    )


class BasisForm(NamedTuple):
    """The regular 1-form x_j^b y^r dx (x_0 = x, x_j = 1/(x - e_j))."""

    j: int
    b: int
    r: int

    def label(self) -> str:
        parts = []
        if self.j == 0:
            if self.b:
                parts.append("x" if self.b == 1 else f"x^{self.b}")
        else:
            parts.append(f"x{self.j}" if self.b == 1 else f"x{self.j}^{self.b}")
        if self.r:
            parts.append("y" if self.r == 1 else f"y^{self.r}")
        return " ".join(parts + ["dx"])


def block_bound(p: int, d: int, j: int) -> int:
    """Right side of the W_j inequality r*d + b*p <= bound."""
    return (p - 1) * (d - 1) - 2 if j == 0 else (p - 1) * (d + 1)


def in_basis(p: int, orders, form: BasisForm) -> bool:
    j, b, r = form
    if j < 0 or j >= len(orders) or r < 0 or b < (0 if j == 0 else 1):
        return False
    return r * orders[j] + b * p <= block_bound(p, orders[j], j)


def basis_blocks(spec: CurveSpec) -> list[list[BasisForm]]:
    """The W_j blocks, unsorted within the overall order."""
    inv = validate(spec)
    p = spec.p
    blocks = []
    for j, d in enumerate(inv.orders):
        bound = block_bound(p, d, j)
        block = []
        b = 0 if j == 0 else 1
        while b * p <= bound:
            block.extend(BasisForm(j, b, r) for r in range((bound - b * p) // d + 1))
            b += 1
        blocks.append(block)
    return blocks


def order_key(form: BasisForm) -> tuple[int, int, int]:
    """Sort key realizing the basis order: by r, then pole index, then b."""
    return (form.r, form.j, form.b)


def compare_forms(w1: BasisForm, w2: BasisForm) -> int:
    """-1, 0 or +1 as w1 precedes, equals or follows w2."""
    k1, k2 = order_key(w1), order_key(w2)
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


def basis(spec: CurveSpec) -> list[BasisForm]:
    """The full ordered basis of regular 1-forms; its length is the genus."""
    forms = [form for block in basis_blocks(spec) for form in block]
    forms.sort(key=order_key)
    return forms


def partition_HA(spec: CurveSpec) -> tuple[set[BasisForm], set[BasisForm]]:
    """Split the basis into pivot forms H and the complement A.

    Defined only when p = 1 mod L: H consists of the forms with
    r >= (b - eps_j) * gamma_j.  The a-number equals #A in that regime.
    """
    inv = validate(spec)
    if not inv.theorem_applicable:
        raise ConditionNotSatisfied(
            f"p = {spec.p} is not 1 mod L = {inv.L}; the partition needs "
            "integral slopes gamma_j"
        )
    H, A = set(), set()
    for block in basis_blocks(spec):
        for form in block:
            eps = inv.epsilon[form.j]
            if form.r >= (form.b - eps) * inv.gamma[form.j]:
                H.add(form)
            else:
                A.add(form)
    return H, A


def embed_curve(spec: CurveSpec, dst: Field) -> CurveSpec:
    """The same curve with all data pushed through the canonical embedding."""
    phi = embedding(spec.field, dst)
    poles = tuple(
        PoleDatum(
            INF if p.is_infinite else phi(p.location),
            tuple(phi(c) for c in p.coeffs),
        )
        for p in spec.poles
    )
    return CurveSpec(dst, poles)
