"""Exact integer/rational linear algebra.

Matrices are plain lists of rows of Python ints (arbitrary precision).
Everything here is division-free or rational-exact; no floating point,
so results can serve as certificates.
"""

from fractions import Fraction


class SingularMatrixError(ValueError):
    """Square system has no unique solution."""


def dims(m):
    rows = len(m)
    cols = len(m[0]) if rows else 0
    return rows, cols


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError("dimension mismatch")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)]


def trace(m):
    return sum(m[i][i] for i in range(len(m)))


def bareiss_det(m):
    """Determinant by fraction-free (Bareiss) elimination."""
    n, c = dims(m)
    if n != c:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m):
    """Rank over the rationals via fraction-free elimination."""
    nr, nc = dims(m)
    a = [list(row) for row in m]
    r = 0
    prev = 1
    for col in range(nc):
        pivot_row = None
        for i in range(r, nr):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        for i in range(r + 1, nr):
            aic = a[i][col]
            rowi = a[i]
            rowr = a[r]
            for j in range(col, nc):
                rowi[j] = (rowi[j] * pivot - aic * rowr[j]) // prev
        prev = pivot
        r += 1
        if r == nr:
            break
    return r


def nullity_at(m, lam):
    """dim ker(m - lam*I) over the rationals; m must be square."""
    n, c = dims(m)
    if n != c:
        raise ValueError("nullity of non-square matrix")
    shifted = [[m[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    return n - rank(shifted)


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_from_roots(roots):
    """Monic polynomial with the given integer roots (with multiplicity)."""
    p = [1]
    for r in roots:
        p = poly_mul(p, [-r, 1])
    return p


def _synthetic_div(p, r):
    """Divide polynomial p (ascending coeffs) by (x - r); remainder must be 0."""
    n = len(p) - 1
    out = [0] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        out[i] = acc
        acc = p[i] + acc * r
    if acc != 0:
        raise ArithmeticError("nonzero remainder in synthetic division")
    return out


def char_poly(m):
    """Monic characteristic polynomial det(xI - m), ascending integer coeffs.

    Evaluates det(kI - m) at n+1 consecutive integers with Bareiss
    determinants, then interpolates exactly with rational arithmetic.
    """
    n, c = dims(m)
    if n != c:
        raise ValueError("characteristic polynomial of non-square matrix")
    if n == 0:
        return [1]
    # symmetric sample window keeps the determinant values small
    points = [k - n // 2 for k in range(n + 1)]
    values = []
    for k in points:
        shifted = [[(k if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(shifted))
    # Lagrange interpolation: master = prod (x - x_i); basis_i = master/(x - x_i)
    master = poly_from_roots(points)
    coeffs = [Fraction(0)] * (n + 1)
    for xi, yi in zip(points, values):
        basis = _synthetic_div(master, xi)
        denom = poly_eval(basis, xi)
        w = Fraction(yi, denom)
        for j, b in enumerate(basis):
            coeffs[j] += w * b
    out = []
    for f in coeffs:
        if f.denominator != 1:
            raise ArithmeticError("interpolated characteristic polynomial not integral")
        out.append(int(f))
    if out[-1] != 1:
        raise ArithmeticError("characteristic polynomial not monic")
    return out


def solve_rational(m, rhs):
    """Solve m x = rhs exactly over the rationals.

    Returns a list of Fractions, or None if the system is inconsistent.
    Raises SingularMatrixError for a square singular (but consistent
    ambiguity is resolved by returning one particular solution when the
    system is not square-nonsingular yet consistent).
    """
    nr, nc = dims(m)
    if len(rhs) != nr:
        raise ValueError("rhs length mismatch")
    a = [[Fraction(m[i][j]) for j in range(nc)] + [Fraction(rhs[i])] for i in range(nr)]
    pivots = []
    r = 0
    for col in range(nc):
        pr = None
        for i in range(r, nr):
            if a[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nr):
        if a[i][nc] != 0:
            return None
    if nr == nc and r < nc:
        raise SingularMatrixError("square system is singular")
    x = [Fraction(0)] * nc
    for row, col in enumerate(pivots):
        x[col] = a[row][nc]
    return x
