"""Exact linear algebra over the rationals.

Matrices are sequences of rows; vectors are tuples. Entries are ints or
``fractions.Fraction``. No floating point: rank decisions made here are
the ground truth for everything else in the package.

Rank uses fraction-free (Bareiss) elimination on a denominator-cleared
integer copy; the remaining routines run ordinary Gaussian elimination
on Fractions, which is exact as well.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vec = tuple[Fraction, ...]
Mat = list[list[Fraction]]


def frac_rows(rows) -> Mat:
    """Copy ``rows`` into a mutable matrix of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, keeping direction.

    The zero vector maps to itself.
    """
    fr = [Fraction(x) for x in vec]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    mult = lcm(*(x.denominator for x in fr))
    ints = [int(x * mult) for x in fr]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _int_rows(rows) -> list[list[int]]:
    # Row scaling preserves rank and nullspace.
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        mult = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * mult) for x in fr])
    return out


def rank(rows) -> int:
    """Exact rank via fraction-free Bareiss elimination."""
    m = _int_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rref(rows) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = frac_rows(rows)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def nullspace(rows) -> list[Vec]:
    """Basis of {x : A x = 0}, one vector per free column, in RREF order."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs) -> Vec | None:
    """One solution of A x = b, or None when inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x)


def inverse(rows) -> Mat | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def independent_columns(rows) -> list[int]:
    """Pivot columns of A: indices of a maximal independent column set."""
    _, pivots = rref(rows)
    return pivots


def mat_vec(rows, vec) -> Vec:
    return tuple(sum(Fraction(a) * Fraction(x) for a, x in zip(row, vec))
                 for row in rows)


def mat_mul(a, b) -> Mat:
    bt = list(zip(*b))
    return [[sum(Fraction(x) * Fraction(y) for x, y in zip(row, col))
             for col in bt] for row in a]


def dot(u, v) -> Fraction:
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))
