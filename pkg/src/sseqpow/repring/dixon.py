"""Character tables by Dixon's modular method.

Work over F_q with q ≡ 1 (mod exponent) and q > 2 sqrt(|G|): simultaneous
eigenvectors of the class-sum multiplication matrices give the central
characters mod q, degrees are recovered as the unique small square root, and
values lift exactly to the cyclotomic integers Z[zeta_e] via the discrete
Fourier formula.  Values are stored as integer coefficient vectors of
zeta_e^j; rational extraction reduces modulo the cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..errors import OrderBoundExceeded
from .classfn import ClassFunction
from .group import FiniteGroup, pmul

TABLE_BOUND = 256


# --- F_q linear algebra (vectors/matrices of ints mod q) ---

def _nullspace(M, q):
    """Rows spanning {v : M v = 0} over F_q."""
    n = len(M)
    m = len(M[0]) if M else 0
    A = [row[:] for row in M]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if A[i][c] % q), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, q)
        A[r] = [(x * inv) % q for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] % q:
                f = A[i][c]
                A[i] = [(x - f * y) % q for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i][fc]) % q
        basis.append(v)
    return basis


def _solve_coords(basis, v, q):
    """Coordinates of v in the row space of `basis` (must lie there)."""
    n = len(basis)
    m = len(v)
    A = [[basis[i][c] for i in range(n)] + [v[c]] for c in range(m)]
    # Gaussian solve A[:, :n] x = A[:, n]
    r = 0
    where = [-1] * n
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] % q), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, q)
        A[r] = [(x * inv) % q for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] % q:
                f = A[i][c]
                A[i] = [(x - f * y) % q for x, y in zip(A[i], A[r])]
        where[c] = r
        r += 1
    x = [0] * n
    for c in range(n):
        if where[c] >= 0:
            x[c] = A[where[c]][n] % q
    # verify
    for c in range(m):
        if (sum(basis[i][c] * x[i] for i in range(n)) - v[c]) % q:
            raise ArithmeticError("vector not in row space")
    return x


def _charpoly(C, q):
    """Characteristic polynomial of C over F_q (Hessenberg method)."""
    n = len(C)
    H = [row[:] for row in C]
    for c in range(n - 1):
        piv = next((i for i in range(c + 1, n) if H[i][c] % q), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[c + 1], H[piv] = H[piv], H[c + 1]
            for row in H:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        inv = pow(H[c + 1][c], -1, q)
        for i in range(c + 2, n):
            if H[i][c] % q:
                f = (H[i][c] * inv) % q
                H[i] = [(x - f * y) % q for x, y in zip(H[i], H[c + 1])]
                for row in H:
                    row[c + 1] = (row[c + 1] + f * row[i]) % q
    # p_k(t) = charpoly of leading k x k Hessenberg block
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (t - H[k-1][k-1]) p_{k-1} - sum_j (prod subdiag) H[j-1][k-1] p_{j-1}
        prev = polys[k - 1]
        p = [0] + prev
        p = [(a - H[k - 1][k - 1] * b) % q for a, b in zip(p, prev + [0])]
        run = 1
        for j in range(k - 1, 0, -1):
            run = (run * H[j][j - 1]) % q
            term = [(run * H[j - 1][k - 1] * c) % q for c in polys[j - 1]]
            p = [(a - (term[i] if i < len(term) else 0)) % q
                 for i, a in enumerate(p)]
        polys.append(p)
    return polys[n]


def _poly_roots(p, q):
    """All roots in F_q by scanning (q is small)."""
    out = []
    for x in range(q):
        acc = 0
        for c in reversed(p):
            acc = (acc * x + c) % q
        if acc == 0:
            out.append(x)
    return out


_CYCLO_CACHE = {}


def _cyclotomic(n):
    """Integer coefficients of Phi_n, low degree first."""
    from .reps import poly_divexact

    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly_divexact(poly, _cyclotomic(d))
    _CYCLO_CACHE[n] = poly
    return poly


class CharacterTable:
    """Irreducible characters as exact cyclotomic coefficient vectors.

    values[i][c] is a tuple (m_0, ..., m_{e-1}) meaning
    sum_j m_j zeta_e^j, the value of character i on class c.
    """

    def __init__(self, group: FiniteGroup, exponent, degrees, values):
        self.group = group
        self.exponent = exponent
        self.degrees = degrees
        self.values = values

    def n_irreducibles(self):
        return len(self.degrees)

    def value_poly(self, i, c):
        return list(self.values[i][c])

    def _reduce_rational(self, coeffs):
        """The rational number a cyclotomic vector represents, or None."""
        phi = _cyclotomic(self.exponent)
        rem = [Fraction(x) for x in coeffs]
        # polynomial remainder mod the monic phi
        for top in range(len(rem) - 1, len(phi) - 2, -1):
            f = rem[top]
            if f:
                for j, c in enumerate(phi):
                    rem[top - (len(phi) - 1) + j] -= f * c
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) > 1:
            return None
        return rem[0] if rem else Fraction(0)

    def rational_value(self, i, c):
        return self._reduce_rational(self.values[i][c])

    def inner_with_rational(self, f: ClassFunction, i) -> Fraction:
        """<f, chi_i> = (1/|G|) sum_g f(g) chi_i(g^{-1}); exact rational."""
        G = self.group
        e = self.exponent
        acc = [Fraction(0)] * e
        for c, (_, cls) in enumerate(G.conjugacy_classes()):
            w = Fraction(len(cls)) * f.values[c]
            if w == 0:
                continue
            vec = self.values[i][G.inverse_class(c)]
            for j in range(e):
                acc[j] += w * vec[j]
        acc = [a / G.order for a in acc]
        val = self._reduce_rational(acc)
        if val is None:
            raise ArithmeticError("inner product is not rational")
        return val

    def inner_cyclotomic(self, i, j):
        """<chi_i, chi_j> in Z[x]/(x^e - 1), reduced to a rational."""
        G = self.group
        e = self.exponent
        acc = [Fraction(0)] * e
        for c, (_, cls) in enumerate(G.conjugacy_classes()):
            a = self.values[i][c]
            b = self.values[j][G.inverse_class(c)]
            for u in range(e):
                if a[u]:
                    for v in range(e):
                        if b[v]:
                            acc[(u + v) % e] += len(cls) * a[u] * b[v]
        acc = [x / Fraction(G.order) for x in acc]
        return self._reduce_rational(acc)

    def verify_orthogonality(self) -> bool:
        k = self.n_irreducibles()
        for i in range(k):
            for j in range(k):
                want = Fraction(1) if i == j else Fraction(0)
                if self.inner_cyclotomic(i, j) != want:
                    return False
        return sum(d * d for d in self.degrees) == self.group.order


def character_table(G: FiniteGroup) -> CharacterTable:
    if G.order > TABLE_BOUND:
        raise OrderBoundExceeded(
            f"character_table needs |G| <= {TABLE_BOUND}, got {G.order}")
    classes = G.conjugacy_classes()
    k = len(classes)
    sizes = [len(c) for _, c in classes]
    e = G.exponent()
    # modulus
    n = G.order
    q = e + 1
    while True:
        if q > 2 * isqrt(n) and (q - 1) % e == 0 and _is_prime(q):
            break
        q += 1
    # class constants: A[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l}
    index = {g: i for i, g in enumerate(G.elements)}
    class_of = [0] * G.order
    for c, (_, cls) in enumerate(classes):
        for g in cls:
            class_of[index[g]] = c
    M = [[[0] * k for _ in range(k)] for _ in range(k)]
    for x in G.elements:
        i = class_of[index[x]]
        for y in G.elements:
            j = class_of[index[y]]
            l = class_of[index[pmul(x, y)]]
            M[i][j][l] += 1
    for i in range(k):
        for j in range(k):
            for l in range(k):
                assert M[i][j][l] % sizes[l] == 0
                M[i][j][l] = (M[i][j][l] // sizes[l]) % q

    # split the column space into common eigenvectors
    spaces = [[[1 if a == b else 0 for b in range(k)] for a in range(k)]]
    for i in range(k):
        if sizes[i] == 1 and classes[i][0] == G.identity:
            continue
        Mi = M[i]
        new_spaces = []
        for B in spaces:
            if len(B) == 1:
                new_spaces.append(B)
                continue
            # restriction C: Mi . b^T = sum C[r][s] basis_s for each basis row
            imgs = [[sum(Mi[r][c] * b[c] for c in range(k)) % q for r in range(k)]
                    for b in B]
            C = [_solve_coords(B, img, q) for img in imgs]
            # column action: vector v = sum x_s b_s maps with matrix C^T
            Ct = [[C[s][r] for s in range(len(B))] for r in range(len(B))]
            roots = _poly_roots(_charpoly(Ct, q), q)
            for lam in sorted(set(roots)):
                shifted = [[(Ct[a][b] - (lam if a == b else 0)) % q
                            for b in range(len(B))] for a in range(len(B))]
                eigen = []
                for nv in _nullspace(shifted, q):
                    eigen.append([sum(nv[s] * B[s][c] for s in range(len(B))) % q
                                  for c in range(k)])
                if eigen:
                    new_spaces.append(eigen)
        spaces = new_spaces
        if all(len(B) == 1 for B in spaces) and len(spaces) == k:
            break
    if not (all(len(B) == 1 for B in spaces) and len(spaces) == k):
        raise ArithmeticError("eigenvector splitting failed")

    # recover characters
    id_class = next(c for c, (rep, _) in enumerate(classes) if rep == G.identity)
    inv_class = [G.inverse_class(c) for c in range(k)]
    chars = []
    for B in spaces:
        v = B[0]
        # normalize so v[id_class] = 1 (omega_1 = 1)
        if v[id_class] % q == 0:
            raise ArithmeticError("degenerate eigenvector")
        f = pow(v[id_class], -1, q)
        omega = [(x * f) % q for x in v]
        S = 0
        for c in range(k):
            S = (S + omega[c] * omega[inv_class[c]] * pow(sizes[c], -1, q)) % q
        d2 = (n * pow(S, -1, q)) % q
        r = _sqrt_mod(d2, q)
        deg = min(r, q - r)
        chi_mod = [(deg * omega[c] * pow(sizes[c], -1, q)) % q for c in range(k)]
        chars.append((deg, chi_mod))
    chars.sort(key=lambda t: (t[0], t[1]))

    # cyclotomic lift
    g0 = _primitive_root(q)
    w = pow(g0, (q - 1) // e, q)  # order e
    e_inv = pow(e, -1, q)
    w_pows = [pow(w, j, q) for j in range(e)]
    w_inv = pow(w, -1, q)
    values = []
    degrees = []
    for deg, chi_mod in chars:
        degrees.append(deg)
        row = []
        for c in range(k):
            coeffs = []
            for j in range(e):
                acc = 0
                winvj = pow(w_inv, j, q)
                t = 1
                for d in range(e):
                    acc = (acc + chi_mod[G.power_class(c, d)] * t) % q
                    t = (t * winvj) % q
                m = (acc * e_inv) % q
                coeffs.append(m)
            row.append(tuple(coeffs))
        values.append(tuple(row))
    table = CharacterTable(G, e, degrees, values)
    if not table.verify_orthogonality():
        raise ArithmeticError("character table fails orthogonality")
    return table


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _sqrt_mod(a, q):
    """A square root of a mod prime q (q is small: scan)."""
    a %= q
    for r in range(q):
        if (r * r) % q == a:
            return r
    raise ArithmeticError(f"{a} is not a square mod {q}")


def _primitive_root(q):
    fac = []
    n = q - 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            fac.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        fac.append(n)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in fac):
            return g
    raise ArithmeticError("no primitive root found")
