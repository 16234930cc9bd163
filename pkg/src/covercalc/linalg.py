"""Exact linear algebra helpers.

Two rank engines are used throughout the package:

* Gaussian elimination over the prime field GF(q), for character and
  constraint systems (all matrices are tiny).
* Fraction-free Bareiss elimination over the integers, for the
  interpolation condition matrices.  Rows with rational entries are
  scaled by their common denominator first; row scaling does not change
  the rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def gf_rref(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(q).

    Returns the reduced matrix and the list of pivot columns.
    """
    m = [[value % q for value in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], q - 2, q) if q > 2 else 1
        m[r] = [(value * inv) % q for value in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [(a - factor * b) % q for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def gf_rank(rows: list[list[int]], q: int) -> int:
    if not rows:
        return 0
    return len(gf_rref(rows, q)[1])


def gf_nullspace(rows: list[list[int]], q: int, ncols: int) -> list[tuple[int, ...]]:
    """Basis of the solution space of ``rows . x = 0`` over GF(q).

    One basis vector per free column, in increasing column order; the
    vector for free column f has a 1 in position f.
    """
    if not rows:
        return [tuple(1 if i == f else 0 for i in range(ncols)) for f in range(ncols)]
    rref, pivots = gf_rref(rows, q)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, p in enumerate(pivots):
            vec[p] = (-rref[r][f]) % q
        basis.append(tuple(vec))
    return basis


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination."""
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        scale = 1
        for value in row:
            if isinstance(value, Fraction):
                scale = scale * value.denominator // gcd(scale, value.denominator)
        out.append([int(value * scale) for value in row])
    return out


def fraction_rank(rows) -> int:
    """Rank of a matrix with integer or Fraction entries."""
    if not rows:
        return 0
    return bareiss_rank(_integer_rows(rows))


def fraction_rank_mod(rows, p: int) -> int:
    """Rank of the same matrix reduced modulo a prime p.

    Raises ZeroDivisionError if an entry's denominator vanishes mod p.
    """
    reduced = []
    for row in rows:
        line = []
        for value in row:
            frac = Fraction(value)
            line.append(frac.numerator * pow(frac.denominator, p - 2, p) % p)
        reduced.append(line)
    return gf_rank(reduced, p)
