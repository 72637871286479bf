"""Constructors for towers: two-stage derived limits and filtered complexes.

The filtered-complex builder assembles genuine LES data (exactness holds by
construction), and the homology of the underlying complex is an independent
oracle for E_inf.  Random towers for testing are drawn from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fgab import (
    FgModule,
    Hom,
    Submodule,
    SubQuotient,
    cokernel,
    image,
    kernel,
)
from ..fgab.ring import CoeffRing, ZZ
from .datum import TowerDatum


@dataclass
class TwoStageTower:
    """A two-stage tower with its kernel/cokernel presentation retained.

    E2 = E_inf with H0(phi) = ker phi at (s,t) = (degree, degree) (HLSS
    filtration 0) and H1(phi) = coker phi at (degree-1, degree) (filtration 1).
    """

    phi: Hom
    degree: int
    tower: TowerDatum
    ker_sub: Submodule
    coker: FgModule
    coker_proj: Hom

    def lift_h1(self, class_vec):
        """A representative in the target of phi of an H1 class."""
        x = self.coker_proj.solve(class_vec)
        if x is None:
            raise ValueError("not a cokernel class")
        return x

    def project_h1(self, target_vec):
        return self.coker_proj.apply(target_vec)

    def lift_h0(self, class_vec):
        return self.ker_sub.inclusion.apply(class_vec)


def two_stage(phi: Hom, degree: int = 0) -> TwoStageTower:
    """The tower of the two-term derived limit of phi: M -> M'.

    ker phi sits at (s,t) = (degree, degree), coker phi at (degree-1, degree);
    all differentials vanish, so E2 = E_inf and validate_tower returns [].
    """
    ring = phi.source.ring
    n = degree
    ker_sub = kernel(phi)
    K = ker_sub.module
    C, cproj = cokernel(phi)
    T = TowerDatum(ring, (n - 2, n + 1), (n, n + 1), closed=True)
    # X(t) = K and C in degrees n, n-1 for t >= n; 0 below the window
    for t in (n, n + 1):
        T.set_position(n, t, piX=K)
        T.set_position(n - 1, t, piX=C)
    T.set_position(n, n, piF=K, incl=Hom.identity(K))
    T.set_position(n - 1, n, piF=C, incl=Hom.identity(C))
    T.set_position(n, n + 1, proj=Hom.identity(K))
    T.set_position(n - 1, n + 1, proj=Hom.identity(C))
    return TwoStageTower(phi, n, T, ker_sub, C, cproj)


def zero_tower(ring: CoeffRing = ZZ, s_range=(0, 3), t_range=(0, 3)) -> TowerDatum:
    return TowerDatum(ring, s_range, t_range, closed=True)


@dataclass
class ChainComplex:
    """C_u with differentials d_u: C_u -> C_{u-1}, d d = 0."""

    ring: CoeffRing
    modules: dict            # u -> FgModule
    diffs: dict              # u -> Hom(C_u, C_{u-1})

    def __post_init__(self):
        for u, d in self.diffs.items():
            below = self.diffs.get(u - 1)
            if below is not None:
                comp = below.compose(d)
                if not comp.is_zero():
                    raise ValueError(f"d o d != 0 at degree {u}")

    @property
    def degrees(self):
        return sorted(self.modules)

    def module(self, u) -> FgModule:
        return self.modules.get(u, FgModule(self.ring, ()))

    def diff(self, u) -> Hom:
        d = self.diffs.get(u)
        if d is None:
            return Hom.zero(self.module(u), self.module(u - 1))
        return d

    def homology(self, u) -> SubQuotient:
        Z = kernel(self.diff(u))
        B = image(self.diff(u + 1))
        return SubQuotient(self.module(u), Z, B)


def _interval_homology(cx: ChainComplex, u, lo, hi) -> SubQuotient:
    """H_u of the truncation of cx to degrees lo..hi (inclusive)."""
    M = cx.module(u)
    if u < lo or u > hi:
        M0 = FgModule(cx.ring, ())
        return SubQuotient(M0, Submodule(M0, []), Submodule(M0, []))
    Z = kernel(cx.diff(u)) if u - 1 >= lo else Submodule(M, _full_gens(M))
    B = image(cx.diff(u + 1)) if u + 1 <= hi else Submodule(M, [])
    return SubQuotient(M, Z, B)


def _full_gens(M: FgModule):
    return [[1 if j == i else 0 for j in range(M.ngens)] for i in range(M.ngens)]


def _induced(sq_src: SubQuotient, sq_tgt: SubQuotient, chain: Hom = None) -> Hom:
    """Hom between subquotient normal forms induced by an ambient map."""
    cols = []
    for i in range(sq_src.module.ngens):
        e = [0] * sq_src.module.ngens
        e[i] = 1
        amb = sq_src.lift(e)
        if chain is not None:
            amb = chain.apply(amb)
        cols.append(list(sq_tgt.project(amb)))
    rows = [[cols[j][i] for j in range(len(cols))]
            for i in range(sq_tgt.module.ngens)]
    return Hom(sq_src.module, sq_tgt.module, rows)


@dataclass
class FilteredComplexTower:
    """Tower of C/F^{t+1} for the degree-cutoff filtration of a chain complex.

    `level[u]` assigns each homological degree its tower stage; levels must be
    strictly related to degree order (higher degree, lower-or-equal level) so
    each F^t is a subcomplex.
    """

    cx: ChainComplex
    level: dict
    tower: TowerDatum = None
    homology_sq: dict = field(default_factory=dict)  # (s,t) kinds, see build

    def interval(self, t):
        """Degrees in X(t) = C/F^{t+1}: all u with level[u] <= t."""
        return [u for u in self.cx.degrees if self.level[u] <= t]

    def chunk(self, t):
        return [u for u in self.cx.degrees if self.level[u] == t]


def tower_from_filtered_complex(cx: ChainComplex, level: dict, pad=1) -> FilteredComplexTower:
    """Assemble genuine LES data from a degree-filtered chain complex."""
    degs = cx.degrees
    if not degs:
        T = TowerDatum(cx.ring, (0, 1), (0, 1), closed=True)
        return FilteredComplexTower(cx, dict(level), T)
    # sanity: lower degrees never sit at lower levels than higher degrees
    for u in degs:
        for v in degs:
            if u > v and level[u] > level[v]:
                raise ValueError("level must be non-increasing in the degree")
    t_lo = min(level[u] for u in degs)
    t_hi = max(level[u] for u in degs)
    s_lo, s_hi = min(degs) - pad, max(degs) + pad
    T = TowerDatum(cx.ring, (s_lo, s_hi), (t_lo, t_hi), closed=True)
    fct = FilteredComplexTower(cx, dict(level), T)

    def X_sq(s, t):
        I = fct.interval(t)
        if not I:
            M0 = FgModule(cx.ring, ())
            return SubQuotient(M0, Submodule(M0, []), Submodule(M0, []))
        return _interval_homology(cx, s, min(I), max(I))

    def F_sq(s, t):
        ch = fct.chunk(t)
        if not ch:
            M0 = FgModule(cx.ring, ())
            return SubQuotient(M0, Submodule(M0, []), Submodule(M0, []))
        return _interval_homology(cx, s, min(ch), max(ch))

    for t in range(t_lo, t_hi + 1):
        for s in range(s_lo, s_hi + 1):
            f_sq = F_sq(s, t)
            x_sq = X_sq(s, t)
            fct.homology_sq[("F", s, t)] = f_sq
            fct.homology_sq[("X", s, t)] = x_sq
            if not f_sq.module.is_trivial:
                T.set_position(s, t, piF=f_sq.module)
            if not x_sq.module.is_trivial:
                T.set_position(s, t, piX=x_sq.module)
    for t in range(t_lo, t_hi + 1):
        for s in range(s_lo, s_hi + 1):
            f_sq = fct.homology_sq[("F", s, t)]
            x_sq = fct.homology_sq[("X", s, t)]
            # incl: chunk and interval share cycles at chunk degrees
            if not f_sq.module.is_trivial:
                T.set_position(s, t, incl=_induced(f_sq, x_sq))
            # proj: drop the bottom chunk
            x_above = fct.homology_sq.get(("X", s, t + 1))
            if x_above is not None and not x_above.module.is_trivial:
                T.set_position(s, t + 1, proj=_induced(x_above, x_sq))
            # bdry: differential into the next chunk
            f_next = fct.homology_sq.get(("F", s - 1, t + 1))
            if f_next is not None and not x_sq.module.is_trivial and not f_next.module.is_trivial:
                T.set_position(s, t, bdry=_induced(x_sq, f_next, chain=cx.diff(s)))
    return fct


def random_finite_module(rng, ring=ZZ, max_order=16):
    choices = [(), (2,), (3,), (4,), (2, 2), (5,), (8,), (2, 4), (9,), (6,)]
    factors = rng.choice([c for c in choices if _order(c) <= max_order])
    return FgModule(ring, factors)


def _order(factors):
    n = 1
    for d in factors:
        n *= d if d else 10**9
    return n


def random_hom(rng, A: FgModule, B: FgModule) -> Hom:
    """A random well-defined homomorphism A -> B.

    Entry (i, j) needs order(B_i) | order(A_j) * entry, i.e. the entry is a
    multiple of o_i / gcd(o_i, d_j); torsion cannot map to a free target.
    """
    from math import gcd

    rows = []
    for i in range(B.ngens):
        oi = B.effective_order(i)
        row = []
        for j in range(A.ngens):
            dj = A.effective_order(j)
            if dj == 0:
                row.append(rng.randint(-3, 3))
            elif oi == 0:
                row.append(0)
            else:
                step = oi // gcd(oi, dj)
                row.append(step * rng.randint(0, max(oi // step - 1, 0)))
        rows.append(row)
    return Hom(A, B, rows)


def random_complex(rng, ring=ZZ, length=3, max_order=16) -> ChainComplex:
    """d d = 0 by construction: each differential factors through the kernel
    of the previous one."""
    modules = {0: random_finite_module(rng, ring, max_order)}
    diffs = {}
    prev_kernel = None
    for u in range(1, length + 1):
        modules[u] = random_finite_module(rng, ring, max_order)
        if u == 1:
            diffs[1] = random_hom(rng, modules[1], modules[0])
        else:
            K = prev_kernel
            g = random_hom(rng, modules[u], K.module)
            diffs[u] = K.inclusion.compose(g)
        prev_kernel = kernel(diffs[u])
    return ChainComplex(ring, modules, diffs)


def random_exact_tower(rng, ring=ZZ, length=3, max_order=16):
    """A random exact tower plus its independent homology oracle."""
    cx = random_complex(rng, ring, length, max_order)
    degs = cx.degrees
    # random non-increasing level assignment: split degrees (top to bottom)
    # into consecutive stages
    stages = {}
    t = 0
    for u in sorted(degs, reverse=True):
        stages[u] = t
        if rng.random() < 0.6:
            t += 1
    fct = tower_from_filtered_complex(cx, stages)
    return fct
