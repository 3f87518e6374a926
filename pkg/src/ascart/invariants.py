"""Rank, a-number and p-rank from the Cartier matrix.

The a-number is the corank: a = g - rank(M).  Rank is computed by exact
Gaussian elimination with first-nonzero pivoting; over prime fields the
elimination runs on int64 arrays mod p (a pure speed path -- the arithmetic
is identical), over extension fields on field elements directly.  Both give
the rank over the algebraic closure, since row echelon form does not care
about the ground field.

When p = 1 mod L the a-number also has a closed form depending only on the
pole orders:

    a = sum_j a_j,   a_j = (p-1)*d_j/4            if d_j is even,
                     a_j = (p-1)*(d_j^2-1)/(4*d_j) if d_j is odd,

and a_number() reports both values side by side.  For a monomial f = x^d
there is a separate expression through the residues h_b = (-1-b)/d mod p
which covers p != 1 mod d as well (a_monomial_remark).

The p-rank is the stable rank of the 1/p-semilinear operator: with sigma
the entrywise p-power map, s = rank(M * M^(sigma^-1) * ... ) once the
product stops dropping rank, which provably happens within g factors.  The
iteration keeps only a full-row-rank echelon basis V_n of the row space of
the n-factor product (rank(U @ W) = rank(W) whenever U has full column
rank), so each step is one r x g by g x g multiply plus an elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cartier import CartierMatrix, cartier_matrix
from .curve import CurveSpec, validate
from .errors import ConditionNotSatisfied, DNotCoprime
from .finite_field import FieldElement


# ---------------------------------------------------------------------------
# Exact elimination
# ---------------------------------------------------------------------------


def _echelon_int(rows: np.ndarray, p: int) -> np.ndarray:
    """Nonzero echelon rows of an int matrix mod p (rows already reduced)."""
    a = rows.copy()
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        if r + 1 < nrows:
            factors = a[r + 1 :, c : c + 1]
            a[r + 1 :] = (a[r + 1 :] - factors * a[r : r + 1]) % p
        r += 1
        if r == nrows:
            break
    return a[:r]


def _echelon_generic(rows: list[list[FieldElement]]) -> list[list[FieldElement]]:
    """Same elimination on field elements, for extension fields."""
    a = [list(row) for row in rows]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(a)):
            if not a[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [v * inv for v in a[r]]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            if not f.is_zero():
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return a[:r]


def _int_rows(M: CartierMatrix) -> np.ndarray | None:
    if M.field.k != 1:
        return None
    return np.array(
        [[c.digits[0] for c in row] for row in M.entries], dtype=np.int64
    )


def rank(M: CartierMatrix) -> int:
    """Exact rank over the field (invariant under any field extension)."""
    if M.dimension == 0:
        return 0
    ints = _int_rows(M)
    if ints is not None:
        return _echelon_int(ints, M.field.p).shape[0]
    return len(_echelon_generic([list(row) for row in M.entries]))


def rank_of_columns(M: CartierMatrix, columns) -> int:
    """Rank of the submatrix formed by the given column indices."""
    cols = sorted(columns)
    if not cols:
        return 0
    rows = [[M.entries[i][j] for j in cols] for i in range(M.dimension)]
    if M.field.k == 1:
        a = np.array([[c.digits[0] for c in row] for row in rows], dtype=np.int64)
        return _echelon_int(a, M.field.p).shape[0]
    return len(_echelon_generic(rows))


# ---------------------------------------------------------------------------
# p-rank: stable rank of twisted products
# ---------------------------------------------------------------------------


def twisted_rank_profile(M: CartierMatrix, factors: int | None = None) -> list[int]:
    """Ranks of M, M*M^(sigma^-1), ... for 1..factors twisted factors.

    Defaults to g+1 factors: the rank provably stabilizes by g factors, so
    the extra entry witnesses stationarity instead of assuming it.
    """
    g = M.dimension
    if factors is None:
        factors = g + 1
    if g == 0 or factors == 0:
        return []
    p = M.field.p
    ints = _int_rows(M)
    profile = []
    if ints is not None:
        # prime field: the twist is the identity
        V = _echelon_int(ints, p)
        profile.append(V.shape[0])
        for _ in range(factors - 1):
            V = _echelon_int(V @ ints % p, p)
            profile.append(V.shape[0])
        return profile
    rows = [list(row) for row in M.entries]
    V = _echelon_generic(rows)
    profile.append(len(V))
    twisted = rows
    for _ in range(factors - 1):
        twisted = [[c.pth_root() for c in row] for row in twisted]
        W = [
            [
                sum(
                    (vi * twisted[l][j] for l, vi in enumerate(vrow) if not vi.is_zero()),
                    M.field.zero,
                )
                for j in range(g)
            ]
            for vrow in V
        ]
        V = _echelon_generic(W)
        profile.append(len(V))
    return profile


def p_rank_stable(M: CartierMatrix) -> int:
    """Stable rank of the twisted products; equals the p-rank m(p-1)."""
    g = M.dimension
    if g == 0:
        return 0
    profile = twisted_rank_profile(M, g + 1)
    if any(profile[i] < profile[i + 1] for i in range(len(profile) - 1)):
        raise AssertionError("twisted ranks increased")  # unreachable
    if profile[-1] != profile[-2]:
        raise AssertionError("rank not stationary after g factors")  # unreachable
    return profile[g - 1]


# ---------------------------------------------------------------------------
# a-number
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ANumberReport:
    """Rank-based a-number next to the closed-form value, when it applies."""

    g: int
    rank: int
    a_rank: int
    a_formula: int | None
    match: bool | None

    def to_json(self) -> dict:
        return {
            "genus": self.g,
            "rank": self.rank,
            "a_rank": self.a_rank,
            "a_formula": self.a_formula,
            "match": self.match,
        }


def theorem_a_value(p: int, orders) -> int:
    """Closed-form a-number from pole orders; requires p = 1 mod every order."""
    total = 0
    for d in orders:
        if (p - 1) % d != 0:
            raise ConditionNotSatisfied(f"p = {p} is not 1 mod {d}")
        if d % 2 == 0:
            num = (p - 1) * d
            den = 4
        else:
            num = (p - 1) * (d - 1) * (d + 1)
            den = 4 * d
        if num % den:
            raise AssertionError("non-integral a_j")  # unreachable
        total += num // den
    return total


def a_number(spec: CurveSpec, pipeline: str = "local") -> ANumberReport:
    """a = g - rank(M), with the closed form alongside when p = 1 mod L."""
    inv = validate(spec)
    M = cartier_matrix(spec, pipeline)
    r = rank(M)
    a_rank = inv.g - r
    if inv.theorem_applicable:
        formula = theorem_a_value(spec.p, inv.orders)
        return ANumberReport(inv.g, r, a_rank, formula, a_rank == formula)
    return ANumberReport(inv.g, r, a_rank, None, None)


def a_monomial_remark(p: int, d: int) -> int:
    """a-number of y^p - y = x^d through the residues h_b = (-1-b)/d mod p.

    Defined whenever p does not divide d; intended for p != 1 mod d but
    also evaluated in the overlap regime as a cross-check.
    """
    if d % p == 0:
        raise DNotCoprime(f"p = {p} divides d = {d}")
    d_inv = pow(d % p, -1, p)
    total = 0
    for b in range(d - 1):
        h_b = ((-1 - b) * d_inv) % p
        ceil_term = -((p + 1 + b * p) // -d)
        total += min(h_b, p - ceil_term)
    return total
