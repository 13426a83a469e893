"""Dense exact linear algebra over Q for the small systems in this package.

Matrices are lists of rows; entries are anything :class:`Fraction` accepts.
"""

from fractions import Fraction
from math import gcd, lcm


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(rows):
    """Reduced row echelon form. Returns ``(rref, pivot_columns)``."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows or not rows[0]:
        return 0
    return len(row_echelon(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{v : rows @ v = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rref, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rref[r][f]
        basis.append(v)
    return basis


def det(rows):
    """Determinant by fraction-exact elimination."""
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def primitive_integer_vector(v):
    """Scale a rational vector to integers with content 1 and positive first nonzero entry."""
    v = [Fraction(x) for x in v]
    nz = [x for x in v if x]
    if not nz:
        return [0] * len(v)
    den = lcm(*(x.denominator for x in nz))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return ints
