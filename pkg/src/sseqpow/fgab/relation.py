"""Additive relations R <= M x N and their induced partial functions.

A relation gives a well-defined additive function Z -> N/B with
Z = Im(R -> M), K = ker(R -> M), B = Im(K -> N); the value at z is the
class of any n with (z, n) in R.
"""

from __future__ import annotations

from dataclasses import dataclass

from .module import FgModule, Hom, Submodule, direct_sum, kernel, quotient


@dataclass
class AdditiveRelation:
    """A subgroup of M x N presented by generating pairs."""

    left: FgModule
    right: FgModule
    generators: list  # list of (m_vec, n_vec)

    def __post_init__(self):
        if self.left.ring != self.right.ring:
            raise ValueError("ring mismatch")
        self.generators = [
            (self.left.reduce(m), self.right.reduce(n)) for m, n in self.generators
        ]

    def swap(self) -> "AdditiveRelation":
        return AdditiveRelation(self.right, self.left,
                                [(n, m) for m, n in self.generators])

    def pairs_in(self):
        """Generators embedded in the direct sum M + N (with the sum data)."""
        P, incM, incN, prM, prN = direct_sum(self.left, self.right)
        vecs = []
        for m, n in self.generators:
            vecs.append(P.add(incM.apply(m), incN.apply(n)))
        return P, incM, incN, prM, prN, vecs


@dataclass
class RelationFunction:
    """The function of an additive relation: domain Z, indeterminacy B,
    values in cokernel = N/B."""

    relation: AdditiveRelation
    z_sub: Submodule          # domain, as a subgroup of M
    b_sub: Submodule          # indeterminacy, as a subgroup of N
    cokernel: FgModule        # N/B
    coker_proj: Hom           # N -> N/B
    _solve_hom: Hom = None    # R_normal -> M (first projection)
    _to_right: Hom = None     # R_normal -> N (second projection)

    @property
    def domain(self) -> Submodule:
        return self.z_sub

    @property
    def indeterminacy(self) -> Submodule:
        return self.b_sub

    def defined_at(self, m_vec) -> bool:
        return self.z_sub.contains(m_vec)

    def value(self, m_vec):
        """Class in N/B of the relation's value at m_vec (m_vec must be in Z)."""
        r = self._solve_hom.solve(m_vec)
        if r is None:
            raise ValueError("element is not in the domain of the relation function")
        n = self._to_right.apply(r)
        return self.coker_proj.apply(n)

    def value_representative(self, m_vec):
        """Some n in N with (m, n) in R."""
        r = self._solve_hom.solve(m_vec)
        if r is None:
            raise ValueError("element is not in the domain of the relation function")
        return self._to_right.apply(r)

    def is_zero_value(self, m_vec) -> bool:
        return self.cokernel.is_zero_element(self.value(m_vec))


def relation_to_function(R: AdditiveRelation) -> RelationFunction:
    """Lemma-style data (Z, B, value map) of an additive relation."""
    M, N = R.left, R.right
    P, incM, incN, prM, prN, vecs = R.pairs_in()
    r_sub = Submodule(P, vecs)
    r_mod, r_incl = r_sub.module, r_sub.inclusion
    to_left = prM.compose(r_incl)    # R -> M
    to_right = prN.compose(r_incl)   # R -> N
    # Z = Im(R -> M)
    z_sub = Submodule(M, [to_left.apply(e) for e in _gen_vectors(r_mod)])
    # K = ker(R -> M), B = Im(K -> N)
    k_sub = kernel(to_left)
    b_gens = [to_right.apply(k_sub.inclusion.apply(e))
              for e in _gen_vectors(k_sub.module)]
    b_sub = Submodule(N, b_gens)
    C, proj = quotient(N, [list(g) for g in b_gens])
    return RelationFunction(R, z_sub, b_sub, C, proj, to_left, to_right)


def _gen_vectors(mod: FgModule):
    out = []
    for i in range(mod.ngens):
        e = [0] * mod.ngens
        e[i] = 1
        out.append(tuple(e))
    return out
