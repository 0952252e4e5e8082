"""Exact integer and rational matrix algorithms.

Matrices are lists of lists (row-major).  Integer routines return integer
matrices; rational routines work over Fraction.  Everything is deterministic:
pivot choices follow fixed rules so canonical forms are canonical.

Provided here:
  * Hermite normal form (row style): H = U @ M with U unimodular,
  * Smith normal form: D = U @ M @ V with divisibility chain,
  * Bareiss fraction-free determinant,
  * rational solve / kernel via Gauss-Jordan,
  * preimage lattices {x in Z^m : B x in t Z^k},
  * lattice membership and canonical bases for rational lattices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm

IntMat = list[list[int]]
FracMat = list[list[Fraction]]


# ------------------------------------------------------------------ basics

def identity_int(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul_int(a: IntMat, b: IntMat) -> IntMat:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def mat_mul_frac(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [[sum((Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(inner)), Fraction(0))
             for j in range(cols)] for i in range(rows)]


def transpose(m):
    return [list(row) for row in zip(*m)] if m else []


def det_int(m: IntMat) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def frac_det(m: FracMat) -> Fraction:
    """Determinant of a square rational matrix by exact elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] * inv
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


# ----------------------------------------------------------- Hermite form

def hnf(m: IntMat) -> tuple[IntMat, IntMat]:
    """Row-style Hermite normal form.

    Returns (H, U) with H = U @ m, U unimodular.  H is upper staircase:
    pivots positive, strictly right-moving, entries above each pivot reduced
    into [0, pivot).  Zero rows sink to the bottom.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [[int(x) for x in row] for row in m]
    u = identity_int(rows)
    r = 0
    for c in range(cols):
        # gather nonzero entries at or below r in column c
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if len(nz) <= 1:
                break
            # reduce: pick the row with smallest |entry| as pivot
            piv = min(nz, key=lambda i: (abs(h[i][c]), i))
            for i in nz:
                if i == piv:
                    continue
                q = h[i][c] // h[piv][c]
                _row_axpy(h, i, piv, -q)
                _row_axpy(u, i, piv, -q)
        nz = [i for i in range(r, rows) if h[i][c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            h[r], h[i] = h[i], h[r]
            u[r], u[i] = u[i], u[r]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                _row_axpy(h, i, r, -q)
                _row_axpy(u, i, r, -q)
        r += 1
        if r == rows:
            break
    return h, u


def _row_axpy(m: IntMat, i: int, j: int, q: int) -> None:
    """row_i += q * row_j"""
    mj = m[j]
    mi = m[i]
    for k in range(len(mi)):
        mi[k] += q * mj[k]


# ------------------------------------------------------------- Smith form

def snf(m: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Smith normal form.

    Returns (D, U, V) with D = U @ m @ V, U and V unimodular, D diagonal
    with nonnegative entries d_1 | d_2 | ... (zeros trailing).
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [[int(x) for x in row] for row in m]
    u = identity_int(rows)
    v = identity_int(cols)

    def col_axpy(j: int, k: int, q: int) -> None:
        """col_j += q * col_k (on d and v)"""
        for i in range(rows):
            d[i][j] += q * d[i][k]
        for i in range(cols):
            v[i][j] += q * v[i][k]

    def col_swap(j: int, k: int) -> None:
        for i in range(rows):
            d[i][j], d[i][k] = d[i][k], d[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    def col_neg(j: int) -> None:
        for i in range(rows):
            d[i][j] = -d[i][j]
        for i in range(cols):
            v[i][j] = -v[i][j]

    t = 0
    while t < min(rows, cols):
        # find minimal nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            d[t], d[bi] = d[bi], d[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            col_swap(t, bj)
        # eliminate row and column t
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    _row_axpy(d, i, t, -q)
                    _row_axpy(u, i, t, -q)
                    if d[i][t] != 0:   # remainder smaller than pivot: swap up
                        d[t], d[i] = d[i], d[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    col_axpy(j, t, -q)
                    if d[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    # enforce the divisibility chain
    t = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for k in range(t - 1):
            a, b = d[k][k], d[k + 1][k + 1]
            if a == 0 and b != 0:
                # push zeros to the end
                d[k], d[k + 1] = d[k + 1], d[k]
                u[k], u[k + 1] = u[k + 1], u[k]
                col_swap(k, k + 1)
                changed = True
                continue
            if a != 0 and b % a != 0:
                # standard trick: col_k += col_{k+1}, then clean the 2x2 block
                col_axpy(k, k + 1, 1)
                _clean_block(d, u, v, k, rows, cols, col_axpy, col_swap)
                changed = True
        for k in range(t):
            if d[k][k] < 0:
                d[k] = [-x for x in d[k]]
                u[k] = [-x for x in u[k]]
                changed = True
    return d, u, v


def _clean_block(d, u, v, t, rows, cols, col_axpy, col_swap):
    """Re-run elimination at position t after a divisibility fix."""
    dirty = True
    while dirty:
        dirty = False
        # move minimal nonzero of the 2-row block into (t, t)
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        bi, bj = best
        if bi != t:
            d[t], d[bi] = d[bi], d[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            col_swap(t, bj)
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                _row_axpy(d, i, t, -q)
                _row_axpy(u, i, t, -q)
                if d[i][t] != 0:
                    d[t], d[i] = d[i], d[t]
                    u[t], u[i] = u[i], u[t]
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                col_axpy(j, t, -q)
                if d[t][j] != 0:
                    col_swap(t, j)
                    dirty = True


def snf_diagonal(m: IntMat) -> list[int]:
    d, _u, _v = snf(m)
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


# ------------------------------------------------------ rational elimination

def rref(a: FracMat) -> tuple[FracMat, list[int]]:
    """Reduced row echelon form and pivot column list (exact)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def kernel_basis(a: FracMat) -> list[list[Fraction]]:
    """Basis of {x : a x = 0} as a list of column vectors."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    r, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for idx, p in enumerate(pivots):
            vec[p] = -r[idx][f]
        basis.append(vec)
    return basis


def solve_exact(a: FracMat, b: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of a x = b, or None if inconsistent.

    Free variables (if any) are set to zero, so the answer is deterministic.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    for row in r:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    if pivots and pivots[-1] == cols:   # pivot in the constant column
        return None
    x = [Fraction(0)] * cols
    for idx, p in enumerate(pivots):
        x[p] = r[idx][-1]
    return x


def rank(a: FracMat) -> int:
    return len(rref(a)[1])


# ------------------------------------------------------------ lattice tools

def preimage_lattice(b: IntMat, t: int) -> IntMat:
    """Basis (as columns) of {x in Z^m : b @ x in t Z^k}.

    b is an integer k x m matrix, t a positive integer.  The result is an
    m x m integer matrix whose columns form a basis of the preimage lattice.
    """
    if t <= 0:
        raise ValueError("modulus must be positive")
    k = len(b)
    mcols = len(b[0]) if k else 0
    d, _u, v = snf(b)
    r = 0
    for i in range(min(k, mcols)):
        if d[i][i] != 0:
            r += 1
    scales = []
    for i in range(mcols):
        if i < r:
            di = d[i][i]
            scales.append(t // igcd(di, t))
        else:
            scales.append(1)
    # columns: v @ diag(scales)
    return [[v[i][j] * scales[j] for j in range(mcols)] for i in range(mcols)]


def lattice_canonical_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Canonical basis of the lattice spanned (over Z) by rational rows.

    Clears denominators, takes HNF, drops zero rows, restores the scale.
    The output is a canonical (HNF-shaped) list of rational rows.
    """
    if not rows:
        return []
    den = 1
    for row in rows:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in rows]
    h, _ = hnf(ints)
    out = []
    for row in h:
        if any(x != 0 for x in row):
            out.append([Fraction(x, den) for x in row])
    return out


def in_lattice_rows(rows: list[list[Fraction]], vec: list[Fraction]) -> list[int] | None:
    """Integer coordinates of vec in the row lattice, or None.

    rows must be Z-linearly independent.  Returns c with sum c_i rows_i = vec
    when the (unique) rational solution is integral, else None.
    """
    a = transpose([[Fraction(x) for x in row] for row in rows])
    sol = solve_exact(a, [Fraction(x) for x in vec])
    if sol is None:
        return None
    # verify (guards against free-variable fill-ins when rows are dependent)
    n = len(vec)
    for i in range(n):
        s = sum((sol[j] * Fraction(rows[j][i]) for j in range(len(rows))), Fraction(0))
        if s != Fraction(vec[i]):
            return None
    if any(c.denominator != 1 for c in sol):
        return None
    return [int(c) for c in sol]
