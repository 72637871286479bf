"""Exact integer matrix kernel: Smith/Hermite normal forms, solving.

Matrices are lists of rows of Python ints.  Everything is exact; p-adic
matrices are handled by running the integer algorithms on lifts and
normalizing afterwards (see CoeffRing.normalize_factor).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import CoeffRing, ZZ


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def mat_mul(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * n
        for k, a in enumerate(row):
            if a:
                Bk = B[k]
                for j in range(n):
                    acc[j] += a * Bk[j]
        out.append(acc)
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_mod(A, m):
    if m == 0:
        return [list(r) for r in A]
    return [[x % m for x in r] for r in A]


def shape(A):
    return (len(A), len(A[0]) if A else 0)


@dataclass
class SNFResult:
    """U @ M @ V == S, with S diagonal in a divisibility chain.

    U, V are invertible over the ring; their exact inverses are tracked so
    that U_inv @ S @ V_inv reconstructs M.
    """

    S: list
    U: list
    V: list
    U_inv: list
    V_inv: list
    ring: CoeffRing = ZZ

    def diagonal(self):
        m, n = shape(self.S)
        return [self.S[i][i] for i in range(min(m, n))]

    def rank(self):
        return sum(1 for d in self.diagonal() if d != 0)


def smith_normal_form(M, ring: CoeffRing = ZZ) -> SNFResult:
    """Smith normal form over Z or Z/p^N.

    Returns SNFResult with U·M·V = S.  Diagonal entries are canonical
    invariant factors (nonnegative; powers of p for Zp, truncated to 0 at
    valuation >= N).
    """
    A = [[int(x) for x in row] for row in M]
    m, n = shape(A)
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in U_inv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(i, j, c):
        # row_i += c * row_j ; U_inv gets the inverse column op
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for r in U_inv:
            r[j] -= c * r[i]

    def add_col(i, j, c):
        # col_i += c * col_j
        for r in A:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]
        V_inv[j] = [a - c * b for a, b in zip(V_inv[j], V_inv[i])]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for r in U_inv:
            r[i] = -r[i]

    def rdiv(a, d):
        # quotient rounded to nearest, keeps remainders <= |d|/2
        q, r = divmod(a, d)
        if 2 * abs(r) > abs(d):
            q += 1
        return q

    t = 0
    while t < min(m, n):
        # pivot: nonzero entry of minimal absolute value in A[t:, t:]
        piv, best = None, None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best, piv = abs(a), (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            # clear column t; swap any smaller residue into the pivot
            for i in range(t + 1, m):
                q = rdiv(A[i][t], A[t][t])
                if q:
                    add_row(i, t, -q)
            res = [i for i in range(t + 1, m) if A[i][t]]
            if res:
                i = min(res, key=lambda i: abs(A[i][t]))
                swap_rows(t, i)
                continue
            # clear row t
            for j in range(t + 1, n):
                q = rdiv(A[t][j], A[t][t])
                if q:
                    add_col(j, t, -q)
            res = [j for j in range(t + 1, n) if A[t][j]]
            if res:
                j = min(res, key=lambda j: abs(A[t][j]))
                swap_cols(t, j)
                continue
            # divisibility: fold any non-divisible submatrix entry into row t
            g = A[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % g:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        t += 1

    for i in range(min(m, n)):
        if A[i][i] < 0:
            negate_row(i)

    if ring.is_padic:
        mod = ring.modulus
        for i in range(min(m, n)):
            d = A[i][i]
            canon = ring.normalize_factor(d)
            if d != 0 and canon != 0:
                # fold the unit part of d into U (row scaling, invertible mod p^N)
                dd = d
                while dd % ring.p == 0:
                    dd //= ring.p
                u_inv = pow(dd % mod, -1, mod)
                U[i] = [(u_inv * x) % mod for x in U[i]]
                for rrow in U_inv:
                    rrow[i] = (rrow[i] * dd) % mod
            A[i][i] = canon
        A[:] = mat_mod(A, mod)
        U[:] = mat_mod(U, mod)
        V[:] = mat_mod(V, mod)
        U_inv[:] = mat_mod(U_inv, mod)
        V_inv[:] = mat_mod(V_inv, mod)

    return SNFResult(A, U, V, U_inv, V_inv, ring)


def hermite_row_basis(rows, modulus=0):
    """Canonical basis (Hermite normal form) of the lattice spanned by `rows`
    inside Z^n, plus modulus*e_i relations when modulus != 0.

    Used for canonical comparison of subgroups.  Returns a list of basis rows
    (each a list of ints), echelonized with positive pivots and reduced
    entries above each pivot.
    """
    if not rows and modulus == 0:
        return []
    n = len(rows[0]) if rows else 0
    work = [list(map(int, r)) for r in rows if any(r)]
    if modulus:
        n = n or 0
        for i in range(n):
            e = [0] * n
            e[i] = modulus
            work.append(e)
    if not work:
        return []
    n = len(work[0])
    basis = []
    col = 0
    while col < n and work:
        # reduce column col among remaining rows by gcd elimination
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            pivot = nz[0]
            for r in nz[1:]:
                q = r[col] // pivot[col]
                for j in range(n):
                    r[j] -= q * pivot[j]
        nz = [r for r in work if r[col] != 0]
        if nz:
            pivot = nz[0]
            work = [r for r in work if r is not pivot and any(r)]
            if pivot[col] < 0:
                pivot = [-x for x in pivot]
            basis.append(pivot)
        col += 1
    # reduce above pivots for canonicity
    for i in reversed(range(len(basis))):
        p_col = next(j for j, x in enumerate(basis[i]) if x != 0)
        for k in range(i):
            if basis[k][p_col] != 0:
                q = basis[k][p_col] // basis[i][p_col]
                if q:
                    basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def _echelon_rows_with_id(rows, width):
    """Row-reduce [rows | I] by integer elimination; returns the combined
    echelonized rows.  Entry growth stays moderate (Hermite-style)."""
    n = len(rows)
    work = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    pivots = []
    row_at = 0
    for col in range(width):
        while True:
            nz = [i for i in range(row_at, n) if work[i][col] != 0]
            if len(nz) == 0:
                break
            if len(nz) == 1:
                i = nz[0]
                work[row_at], work[i] = work[i], work[row_at]
                break
            nz.sort(key=lambda i: abs(work[i][col]))
            pi = nz[0]
            for i in nz[1:]:
                q = work[i][col] // work[pi][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[pi])]
        if row_at < n and work[row_at][col] != 0:
            if work[row_at][col] < 0:
                work[row_at] = [-x for x in work[row_at]]
            pivots.append((row_at, col))
            row_at += 1
    # reduce above pivots to keep entries small
    for r, c in reversed(pivots):
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
    return work, pivots


def solve(A, b, modulus=0):
    """One integer solution x of A x = b (mod modulus), or None."""
    m, n = shape(A)
    if modulus:
        # A x = b mod modulus  <=>  [A | modulus*I] (x, y) = b over Z
        aug = [row + [modulus if j == i else 0 for j in range(m)] for i, row in enumerate(A)]
        x = solve(aug, b, 0)
        return None if x is None else x[:n]
    # row-reduce [A^T | I]: rows combine columns of A, so a solution of
    # A x = b is a combination of echelon rows hitting b
    At = transpose(A) if A else [[] for _ in range(n)]
    if n == 0:
        return [] if all(x == 0 for x in b) else None
    work, pivots = _echelon_rows_with_id(At, m)
    # solve y . H = b by echelon substitution, where H rows are work[:, :m]
    y = [0] * n
    residue = list(b)
    for r, c in pivots:
        if residue[c] % work[r][c] != 0:
            return None
        coef = residue[c] // work[r][c]
        y[r] = coef
        if coef:
            residue = [a - coef * h for a, h in zip(residue, work[r][:m])]
    if any(residue):
        return None
    # x = sum y_r * (transform part of row r)
    x = [0] * n
    for r in range(n):
        if y[r]:
            for j in range(n):
                x[j] += y[r] * work[r][m + j]
    return x


def kernel_basis(A, modulus=0):
    """Basis vectors of {x : A x = 0 (mod modulus)} as a sublattice of Z^n."""
    m, n = shape(A)
    if n == 0:
        return []
    if modulus:
        aug = [row + [modulus if j == i else 0 for j in range(m)] for i, row in enumerate(A)]
        full = kernel_basis(aug, 0)
        proj = [row[:n] for row in full]
        return hermite_row_basis(proj) if proj else []
    At = transpose(A) if A else [[] for _ in range(n)]
    work, pivots = _echelon_rows_with_id(At, m)
    pivot_rows = {r for r, _ in pivots}
    out = []
    for i in range(n):
        if i not in pivot_rows and all(x == 0 for x in work[i][:m]):
            out.append(work[i][m:])
    return out
