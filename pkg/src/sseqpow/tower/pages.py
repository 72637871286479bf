"""Cycles, boundaries, differentials and pages of the tower spectral sequence.

Everything is phrased through the relation

    D_r(s,t) = piF(s,t) x_{piX(s,t)} Im(piX(s,t+r-2) -> piX(s,t) x piF(s-1,t+r-1))

whose associated partial function is the differential d_r.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ConvergenceUnverifiable, WindowExceeded
from ..fgab import (
    AdditiveRelation,
    FgModule,
    Submodule,
    SubQuotient,
    RelationFunction,
    fiber_product,
    kernel,
    relation_to_function,
)
from .datum import TowerDatum


def d_relation(T: TowerDatum, r, s, t) -> AdditiveRelation:
    """D_r(s,t) as an additive relation between piF(s,t) and piF(s-1,t+r-1)."""
    if r < 2:
        raise ValueError("differentials start at r = 2")
    F0 = T.module_F(s, t)
    F1 = T.module_F(s - 1, t + r - 1)
    inc = T.hom_incl(s, t)
    chain = T.proj_chain(s, t + r - 2, t)
    bd = T.hom_bdry(s, t + r - 2)
    FP, q1, q2 = fiber_product(inc, chain)
    pairs = []
    for i in range(FP.ngens):
        e = [0] * FP.ngens
        e[i] = 1
        pairs.append((q1.apply(e), bd.apply(q2.apply(e))))
    return AdditiveRelation(F0, F1, pairs)


def cycles(T: TowerDatum, r, s, t) -> Submodule:
    """Z_r(s,t) as a subgroup of piF(s,t)."""
    F0 = T.module_F(s, t)
    if r <= 0:
        raise ValueError("r >= 1 for cycles")
    if r == 1:
        return Submodule(F0, _gens(F0))
    R = d_relation(T, r, s, t)
    # Z_r = {f : (f, 0) in D_r} = indeterminacy of the swapped relation
    return relation_to_function(R.swap()).b_sub


def boundaries(T: TowerDatum, r, s, t) -> Submodule:
    """B_r(s,t) as a subgroup of piF(s,t)."""
    F0 = T.module_F(s, t)
    if r <= 0:
        raise ValueError("r >= 1 for boundaries")
    if r == 1:
        return Submodule(F0, [])
    R = d_relation(T, r, s + 1, t - r + 1)
    # B_r(s,t) = Im(D_r(s+1, t-r+1) -> piF(s,t))
    return relation_to_function(R.swap()).z_sub


def differential(T: TowerDatum, r, s, t) -> RelationFunction:
    """d_r at (s,t): the partial function of D_r(s,t).

    Domain Z_{r-1}(s,t), indeterminacy B_{r-1}(s-1,t+r-1), values in
    piF(s-1,t+r-1) / B_{r-1}.
    """
    return relation_to_function(d_relation(T, r, s, t))


def page(T: TowerDatum, r, s, t) -> SubQuotient:
    """E_r(s,t) = Z_{r-1}/B_{r-1} as a subquotient of piF(s,t)."""
    if r < 2:
        raise ValueError("pages start at r = 2")
    z = cycles(T, r - 1, s, t)
    b = boundaries(T, r - 1, s, t)
    return SubQuotient(T.module_F(s, t), z, b)


@dataclass
class PageElement:
    """An element of E_r(s,t), carried by a representative in piF(s,t)."""

    tower: TowerDatum
    r: int
    s: int
    t: int
    representative: tuple

    def __post_init__(self):
        F = self.tower.module_F(self.s, self.t)
        self.representative = F.reduce(self.representative)
        if not cycles(self.tower, self.r - 1, self.s, self.t).contains(self.representative):
            raise ValueError(
                f"representative is not an (r-1)-cycle at (s={self.s}, t={self.t})"
            )

    def page(self) -> SubQuotient:
        return page(self.tower, self.r, self.s, self.t)

    def is_zero(self) -> bool:
        return self.page().is_zero_class(self.representative)


def stable_page_index(T: TowerDatum) -> int:
    """An r from which E_r = E_inf everywhere in a closed window."""
    span = T.t_range[1] - T.t_range[0] + 1
    return span + 2


def limit_filtration(T: TowerDatum, s):
    """Filtration F^t pi_s(lim) = ker(pi_s X(t_max) -> pi_s X(t-1)), closed towers.

    Returns (L, {t: Submodule of L-ambient}) where L = pi_s X(t_max).
    """
    if not T.closed:
        raise ConvergenceUnverifiable(
            "limit data requires a closed tower or user-supplied filtration"
        )
    t_min, t_max = T.t_range
    L = T.module_X(s, t_max)
    filt = {}
    for t in range(t_min, t_max + 2):
        h = T.proj_chain(s, t_max, t - 1)
        filt[t] = kernel(h)
    return L, filt


def einfinity(T: TowerDatum, s, limit=None, axioms=None):
    """Convergence report at total degree s.

    Verifies gr(pi_s lim) = E_inf within the window and reports, for each
    filtration stage, the detecting E_inf data.  `limit` may supply the
    filtration as {t: Submodule of a common ambient module}; otherwise it is
    computed from a closed tower.
    """
    t_min, t_max = T.t_range
    if limit is None:
        L, filt = limit_filtration(T, s)
    else:
        L, filt = limit
        if not T.closed:
            raise ConvergenceUnverifiable(
                "cannot read E_inf from a non-closed window; enlarge the window"
            )
    r_inf = stable_page_index(T)
    rows = []
    ok_all = True
    for t in range(t_min, t_max + 1):
        einf = page(T, r_inf, s, t)
        gr = SubQuotient(L, filt[t], filt[t + 1]) if isinstance(filt[t], Submodule) else None
        gr_mod = gr.module if gr else FgModule(T.ring, ())
        ok = gr_mod == einf.module
        ok_all = ok_all and ok
        row = {
            "t": t,
            "filtration": t - s,
            "E_inf": einf.module,
            "gr": gr_mod,
            "consistent": ok,
        }
        if not einf.module.is_trivial:
            # pair generators positionally: both sides are in normal form
            detections = []
            for i in range(einf.module.ngens):
                e = [0] * einf.module.ngens
                e[i] = 1
                detections.append({
                    "einf_class": tuple(e),
                    "einf_representative": tuple(einf.lift(e)),
                    "limit_representative": tuple(gr.lift(e)) if gr and ok else None,
                })
            row["detections"] = detections
        rows.append(row)
    return {"s": s, "limit": L, "consistent": ok_all, "stages": rows,
            "axioms": list(axioms or [])}


@dataclass
class SSeqReport:
    """Everything the engine can say about a tower on its window."""

    tower: TowerDatum
    r_max: int
    pages: dict = field(default_factory=dict)          # (r,s,t) -> dict
    differentials: list = field(default_factory=list)  # nonzero d_r records
    convergence: list = field(default_factory=list)

    def to_rows(self):
        out = []
        for (r, s, t), rec in sorted(self.pages.items()):
            out.append({"r": r, "s": s, "t": t, **rec})
        return out


def report(T: TowerDatum, r_max=5, with_limit=False) -> SSeqReport:
    """Compute pages 2..r_max (plus differentials) over the whole window."""
    rep = SSeqReport(T, r_max)
    s_min, s_max = T.s_range
    t_min, t_max = T.t_range
    for r in range(2, r_max + 1):
        for s in range(s_min, s_max + 1):
            for t in range(t_min, t_max + 1):
                if T.module_F(s, t).is_trivial:
                    continue
                z = cycles(T, r - 1, s, t)
                b = boundaries(T, r - 1, s, t)
                E = SubQuotient(T.module_F(s, t), z, b)
                rep.pages[(r, s, t)] = {
                    "Z": z.module,
                    "B": b.module,
                    "E": E.module,
                }
                if E.module.is_trivial:
                    continue
                # record the differential leaving (s,t) when its target exists
                try:
                    fn = differential(T, r, s, t)
                except WindowExceeded:
                    continue
                tgt = T.module_F(s - 1, t + r - 1) if (
                    T.closed or T.in_window(s - 1, t + r - 1)) else None
                if tgt is None or tgt.is_trivial:
                    continue
                nonzero = False
                for i in range(T.module_F(s, t).ngens):
                    e = [0] * T.module_F(s, t).ngens
                    e[i] = 1
                    if fn.defined_at(e) and not fn.is_zero_value(e):
                        nonzero = True
                        break
                if nonzero:
                    rep.differentials.append({
                        "r": r, "s": s, "t": t,
                        "target": (s - 1, t + r - 1),
                        "indeterminacy": fn.b_sub.module,
                    })
    if with_limit and T.closed:
        for s in range(s_min, s_max + 1):
            rep.convergence.append(einfinity(T, s))
    return rep


def _gens(M: FgModule):
    out = []
    for i in range(M.ngens):
        e = [0] * M.ngens
        e[i] = 1
        out.append(e)
    return out
