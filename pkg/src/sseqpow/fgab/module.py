"""Finitely generated modules in invariant-factor normal form, and their maps.

Internally every module over PadicIntegers(p, N) is treated as a Z-module
killed by p^N (a free summand at precision N is Z/p^N); invariant factors
p^e with e >= N display as 0.  All subquotient computations run over Z with
explicit relation lattices, so integer and p-adic answers agree by
construction wherever the spec requires it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import matrix as mx
from .ring import CoeffRing, ZZ


def _canonical_factors(ring: CoeffRing, factors):
    """Reduce an arbitrary factor list to a divisibility chain without units."""
    factors = [int(d) for d in factors]
    if not factors:
        return ()
    diag = [[factors[i] if i == j else 0 for j in range(len(factors))]
            for i in range(len(factors))]
    snf = mx.smith_normal_form(diag, ring)
    out = []
    for i in range(len(factors)):
        d = snf.S[i][i]
        d = ring.normalize_factor(d)
        if d == 1:
            continue
        out.append(d)
    # divisibility chain with 0s (free summands) last
    out.sort(key=lambda d: (d == 0, d))
    return tuple(out)


@dataclass(frozen=True)
class FgModule:
    """A f.g. module over Z or Z/p^N in invariant-factor normal form."""

    ring: CoeffRing
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", _canonical_factors(self.ring, self.factors))

    @property
    def ngens(self) -> int:
        return len(self.factors)

    def effective_order(self, i: int) -> int:
        """Order of generator i as a Z-module relation (p^N for Zp free)."""
        d = self.factors[i]
        if d == 0 and self.ring.is_padic:
            return self.ring.modulus
        return d

    def relation_rows(self):
        rows = []
        for i in range(self.ngens):
            d = self.effective_order(i)
            if d:
                row = [0] * self.ngens
                row[i] = d
                rows.append(row)
        return rows

    def true_relation_rows(self):
        """Relations of the underlying Z_p (resp. Z) module: free summands
        contribute none.  Kernels must be computed against these, or fixed
        precision fabricates p^{N-1}-torsion kernels."""
        rows = []
        for i, d in enumerate(self.factors):
            if d:
                row = [0] * self.ngens
                row[i] = d
                rows.append(row)
        return rows

    def reduce(self, vec):
        """Canonical coordinates of an element."""
        out = []
        for x, _ in zip(vec, self.factors):
            out.append(x)
        if len(out) != self.ngens:
            raise ValueError("coordinate length mismatch")
        res = []
        for i, x in enumerate(out):
            d = self.effective_order(i)
            res.append(x % d if d else int(x))
        return tuple(res)

    def zero(self):
        return (0,) * self.ngens

    def is_zero_element(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def add(self, u, v):
        return self.reduce([a + b for a, b in zip(u, v)])

    def neg(self, u):
        return self.reduce([-a for a in u])

    def smul(self, c, u):
        return self.reduce([c * a for a in u])

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self):
        """Number of elements, or None if infinite (genuinely free over Z)."""
        n = 1
        for i in range(self.ngens):
            d = self.effective_order(i)
            if d == 0:
                return None
            n *= d
        return n

    def elements(self):
        """Iterate all elements (finite modules only)."""
        if self.order() is None:
            raise ValueError("infinite module")
        ranges = [range(self.effective_order(i)) for i in range(self.ngens)]
        return (tuple(t) for t in itertools.product(*ranges))

    def rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    def torsion_factors(self):
        return tuple(d for d in self.factors if d != 0)

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        free_name = "Z" if not self.ring.is_padic else f"Z_{self.ring.p}"
        for d in self.factors:
            parts.append(free_name if d == 0 else f"Z/{d}")
        return " + ".join(parts)


def zero_module(ring: CoeffRing = ZZ) -> FgModule:
    return FgModule(ring, ())


def free_module(ring: CoeffRing, n: int) -> FgModule:
    return FgModule(ring, (0,) * n)


def cyclic_module(ring: CoeffRing, d: int) -> FgModule:
    return FgModule(ring, (d,))


@dataclass(frozen=True)
class Hom:
    """A homomorphism given by its matrix on normal-form generators.

    matrix[i][j] = coefficient of target generator i in the image of source
    generator j.  Well-definedness (matrix . source relations lies in target
    relations) is checked on construction.
    """

    source: FgModule
    target: FgModule
    matrix: tuple = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        if len(rows) != self.target.ngens or any(len(r) != self.source.ngens for r in rows):
            raise ValueError(
                f"matrix shape {mx.shape([list(r) for r in rows])} does not match "
                f"{self.target.ngens}x{self.source.ngens}"
            )
        mod = self.target.ring.modulus if self.target.ring.is_padic else 0
        normed = []
        for i, r in enumerate(rows):
            d = self.target.effective_order(i)
            normed.append(tuple(x % d if d else (x % mod if mod else x) for x in r))
        object.__setattr__(self, "matrix", tuple(normed))
        if self.source.ring != self.target.ring:
            raise ValueError("source and target rings differ")
        for j in range(self.source.ngens):
            dj = self.source.effective_order(j)
            if dj == 0:
                continue
            for i in range(self.target.ngens):
                di = self.target.effective_order(i)
                v = dj * self.matrix[i][j]
                if di:
                    if v % di != 0:
                        raise ValueError(
                            f"not well defined: order {dj} of source gen {j} does not "
                            f"kill its image (target gen {i})"
                        )
                elif v != 0:
                    raise ValueError("not well defined: torsion mapping to free part")

    def apply(self, vec):
        vec = self.source.reduce(vec)
        return self.target.reduce(mx.mat_vec([list(r) for r in self.matrix], list(vec)))

    def compose(self, other: "Hom") -> "Hom":
        """self o other (apply other first)."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        rows, cols = self.target.ngens, other.source.ngens
        M = [[sum(self.matrix[i][k] * other.matrix[k][j] for k in range(self.source.ngens))
              for j in range(cols)] for i in range(rows)]
        return Hom(other.source, self.target, M)

    def add(self, other: "Hom") -> "Hom":
        if (other.source, other.target) != (self.source, self.target):
            raise ValueError("addition mismatch")
        M = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)]
        return Hom(self.source, self.target, M)

    def neg(self) -> "Hom":
        return Hom(self.source, self.target, [[-a for a in r] for r in self.matrix])

    def solve(self, target_vec):
        """Some source vector mapping to target_vec, or None."""
        y = list(self.target.reduce(target_vec))
        if self.target.ngens == 0:
            return self.source.zero()
        A = [list(r) for r in self.matrix]
        rel = self.target.relation_rows()
        aug = [row + [rel[k][i] for k in range(len(rel))]
               for i, row in enumerate(A)]
        x = mx.solve(aug, y)
        if x is None:
            return None
        return self.source.reduce(x[: self.source.ngens])

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in r) for r in self.matrix)

    @staticmethod
    def identity(M: FgModule) -> "Hom":
        return Hom(M, M, mx.identity(M.ngens))

    @staticmethod
    def zero(source: FgModule, target: FgModule) -> "Hom":
        return Hom(source, target, mx.zeros(target.ngens, source.ngens))

    @staticmethod
    def scalar(M: FgModule, c: int) -> "Hom":
        return Hom(M, M, [[c if i == j else 0 for j in range(M.ngens)] for i in range(M.ngens)])

    def __str__(self):
        return f"Hom({self.source} -> {self.target}, {[list(r) for r in self.matrix]})"


class Submodule:
    """A subgroup of an FgModule, canonically presented.

    Stored as the Hermite basis of its preimage lattice in Z^k (generators
    plus the ambient relation lattice), which makes equality and membership
    decidable by comparison/solving.
    """

    def __init__(self, ambient: FgModule, generators):
        self.ambient = ambient
        gens = [list(ambient.reduce(g)) for g in generators]
        rows = [g for g in gens if any(g)] + ambient.relation_rows()
        self.lattice = mx.hermite_row_basis(rows) if rows else []
        self._normal = None

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.ambient == other.ambient
            and self.lattice == other.lattice
        )

    def __hash__(self):
        return hash((self.ambient, tuple(tuple(r) for r in self.lattice)))

    def contains(self, vec) -> bool:
        v = list(self.ambient.reduce(vec))
        if not any(v):
            return True
        if not self.lattice:
            return False
        return mx.solve(mx.transpose(self.lattice), v) is not None

    def contains_submodule(self, other: "Submodule") -> bool:
        return all(self.contains(row) for row in other.lattice)

    def coords_of(self, vec):
        """Coordinates of vec in the lattice basis, or None."""
        v = list(self.ambient.reduce(vec))
        if not self.lattice:
            return [] if not any(v) else None
        return mx.solve(mx.transpose(self.lattice), v)

    def _compute_normal(self):
        """Normal form (FgModule) and inclusion Hom of the subgroup L/R."""
        amb = self.ambient
        rel_rows = amb.relation_rows()
        B = self.lattice  # rows span L = <gens> + R
        if not B:
            mod = FgModule(amb.ring, ())
            self._normal = (mod, Hom.zero(mod, amb))
            return
        Bt = mx.transpose(B)  # columns = basis of L
        # express each relation generator in the basis of L
        C_cols = []
        for r in rel_rows:
            x = mx.solve(Bt, list(r))
            if x is None:
                raise RuntimeError("relation lattice not inside subgroup lattice")
            C_cols.append(x)
        C = mx.transpose(C_cols) if C_cols else [[] for _ in range(len(B))]
        if not C_cols:
            C = mx.zeros(len(B), 0)
        snf = mx.smith_normal_form(C)
        r = len(B)
        diag = snf.diagonal()
        factors = []
        keep = []
        for i in range(r):
            d = diag[i] if i < len(diag) else 0
            d = amb.ring.normalize_factor(d)
            if d == 1:
                continue
            factors.append(d)
            keep.append(i)
        # generator i of the quotient is B^T . (column i of U_inv)
        gen_vecs = []
        for i in keep:
            col = [snf.U_inv[k][i] for k in range(r)]
            gen_vecs.append(mx.mat_vec(Bt, col))
        mod = FgModule(amb.ring, factors)
        # order of `factors` inside FgModule may re-sort; map them explicitly
        mod2, incl = _presented_to_module(amb, gen_vecs, factors)
        self._normal = (mod2, incl)

    @property
    def module(self) -> FgModule:
        if self._normal is None:
            self._compute_normal()
        return self._normal[0]

    @property
    def inclusion(self) -> Hom:
        if self._normal is None:
            self._compute_normal()
        return self._normal[1]

    def is_zero(self) -> bool:
        return self.module.is_trivial

    def __str__(self):
        return f"Submodule({self.module} of {self.ambient})"


def _presented_to_module(ambient, gen_vecs, factors):
    """Build the FgModule for generators with given orders plus its inclusion.

    `factors` must already be a divisibility chain (possibly with unit-free
    entries and 0s last is NOT assumed; FgModule canonicalizes, so we align
    columns with the canonical ordering).
    """
    ring = ambient.ring
    canonical = _canonical_factors(ring, factors)
    mod = FgModule(ring, canonical)
    # align: canonical ordering may permute equal sorting keys; rebuild by
    # matching multiset order (factors sorted the same way FgModule sorts)
    order = sorted(range(len(factors)),
                   key=lambda i: (ring.normalize_factor(factors[i]) == 0,
                                  ring.normalize_factor(factors[i])))
    cols = [gen_vecs[i] for i in order]
    matink = mx.transpose(cols) if cols else mx.zeros(ambient.ngens, 0)
    incl = Hom(mod, ambient, matink)
    return mod, incl


def quotient(ambient: FgModule, generators):
    """(Q, proj) with Q = ambient / <generators>."""
    rel = [list(ambient.reduce(g)) for g in generators] + ambient.relation_rows()
    k = ambient.ngens
    if k == 0:
        Q = FgModule(ambient.ring, ())
        return Q, Hom.zero(ambient, Q)
    C = mx.transpose(rel) if rel else mx.zeros(k, 0)
    snf = mx.smith_normal_form(C)
    diag = snf.diagonal()
    factors = []
    keep = []
    for i in range(k):
        d = diag[i] if i < len(diag) else 0
        d = ambient.ring.normalize_factor(d)
        if d == 1:
            continue
        factors.append(d)
        keep.append(i)
    ring = ambient.ring
    order = sorted(range(len(factors)),
                   key=lambda i: (ring.normalize_factor(factors[i]) == 0,
                                  ring.normalize_factor(factors[i])))
    Q = FgModule(ring, [factors[i] for i in order])
    rows = [snf.U[keep[i]] for i in order]
    proj = Hom(ambient, Q, rows)
    return Q, proj


class SubQuotient:
    """Z/B for submodules B <= Z of a common ambient module."""

    def __init__(self, ambient: FgModule, z_sub: Submodule, b_sub: Submodule):
        if not z_sub.contains_submodule(b_sub):
            raise ValueError("B is not contained in Z")
        self.ambient = ambient
        self.z_sub = z_sub
        self.b_sub = b_sub
        zmod, zincl = z_sub.module, z_sub.inclusion
        # express B's lattice generators in Z-coordinates
        b_in_z = []
        for row in b_sub.lattice:
            x = zincl.solve(row)
            if x is None:
                raise RuntimeError("B generator not in Z")
            b_in_z.append(list(x))
        self.module, self._proj = quotient(zmod, b_in_z)
        self._zincl = zincl

    def project(self, ambient_vec):
        """Class of an ambient element that lies in Z."""
        x = self._zincl.solve(ambient_vec)
        if x is None:
            raise ValueError("element is not in Z")
        return self._proj.apply(x)

    def lift(self, class_vec):
        """An ambient representative of a class."""
        x = self._proj.solve(class_vec)
        if x is None:
            raise ValueError("not a valid class")
        return self._zincl.apply(x)

    def is_zero_class(self, ambient_vec) -> bool:
        return self.module.is_zero_element(self.project(ambient_vec))


def kernel(f: Hom):
    """(K, inclusion K -> source).

    Over PadicIntegers the kernel is the base change of the integer kernel
    (true relations only), so injective maps like x3 on a free module have
    zero kernel at every precision.
    """
    A = [list(r) for r in f.matrix]
    rel = f.target.true_relation_rows()
    n = f.source.ngens
    if f.target.ngens == 0:
        return Submodule(f.source, mx.identity(n))
    aug = [row + [rel[k][i] for k in range(len(rel))] for i, row in enumerate(A)]
    basis = mx.kernel_basis(aug)
    gens = [col[:n] for col in basis]
    # source relations are always in the kernel
    gens += f.source.true_relation_rows()
    return Submodule(f.source, gens)


def image(f: Hom) -> Submodule:
    cols = mx.transpose([list(r) for r in f.matrix])
    return Submodule(f.target, cols)


def cokernel(f: Hom):
    """(Q, projection target -> Q)."""
    cols = mx.transpose([list(r) for r in f.matrix])
    return quotient(f.target, cols)


def direct_sum(M1: FgModule, M2: FgModule):
    """(M, inc1, inc2, pr1, pr2) with M = M1 + M2 in normal form.

    Normalization can merge coprime factors (Z/2 + Z/3 = Z/6), so the
    inclusions/projections are computed through an explicit presentation.
    """
    if M1.ring != M2.ring:
        raise ValueError("ring mismatch")
    ring = M1.ring
    k1, k2 = M1.ngens, M2.ngens
    free = free_module(ring, k1 + k2)
    rels = []
    for j, d in enumerate(list(M1.factors) + list(M2.factors)):
        if d:
            row = [0] * (k1 + k2)
            row[j] = d
            rels.append(row)
    M, proj = quotient(free, rels)
    inc1 = Hom(M1, M, [[proj.matrix[i][j] for j in range(k1)] for i in range(M.ngens)])
    inc2 = Hom(M2, M, [[proj.matrix[i][k1 + j] for j in range(k2)] for i in range(M.ngens)])
    # projections: lift each generator of M to free coordinates and read parts
    lifts = []
    for i in range(M.ngens):
        e = [0] * M.ngens
        e[i] = 1
        v = proj.solve(e)
        if v is None:
            raise RuntimeError("projection not surjective")
        lifts.append(list(v))
    pr1 = Hom(M, M1, [[lifts[j][i] for j in range(M.ngens)] for i in range(k1)])
    pr2 = Hom(M, M2, [[lifts[j][k1 + i] for j in range(M.ngens)] for i in range(k2)])
    return M, inc1, inc2, pr1, pr2


def fiber_product(f: Hom, g: Hom):
    """(P, pr_to_f_source, pr_to_g_source) for f: A -> C, g: B -> C."""
    if f.target != g.target:
        raise ValueError("fiber product needs a common target")
    A, B = f.source, g.source
    S, incA, incB, prA, prB = direct_sum(A, B)
    # h = f o prA - g o prB : S -> C
    h = f.compose(prA).add(g.compose(prB).neg())
    ker = kernel(h)
    P, incl = ker.module, ker.inclusion
    p1 = prA.compose(incl)
    p2 = prB.compose(incl)
    return P, p1, p2
