"""The epsilon-coefficient of the norm: e(G/K) reduced mod 2 in R(G).

The norm of epsilon is detected by e(G/K) . epsilon, and epsilon is
2-torsion, so the answer lives in R(G)/2.  Multiplicities are computed
exactly through the character table.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import OrderBoundExceeded
from .dixon import character_table
from .group import FiniteGroup
from .reps import PermRep, ReducedPermRep, euler_gset, has_transitive_cyclic


def _is_odd_prime_power(n):
    if n % 2 == 0 or n < 3:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 2
    return True  # n prime


def norm_epsilon(G: FiniteGroup, K):
    """Decompose e(G/K) in irreducibles mod 2.

    Returns a dict with the mod-2 multiplicity vector, vanishing flag, and,
    for normal K with cyclic quotient, the comparison with the reduced
    permutation representation of G/N (N the index-p subgroup above K).
    """
    if G.order > 64:
        raise OrderBoundExceeded("norm_epsilon is bounded to |G| <= 64")
    K = frozenset(K)
    table = character_table(G)
    e = euler_gset(G, K)
    mults = []
    for i in range(table.n_irreducibles()):
        m = table.inner_with_rational(e.classfn, i)
        if m.denominator != 1:
            raise ArithmeticError("non-integral multiplicity")
        mults.append(int(m) % 2)
    out = {
        "multiplicities_mod2": mults,
        "is_zero": all(m == 0 for m in mults),
        "euler_character": e.classfn,
        "transitive_cyclic_exists": has_transitive_cyclic(G, K),
        "status": "exact (odd p-group)" if _is_odd_prime_power(G.order)
        else "detection-level",
    }
    if G.is_normal(K):
        Q = G.quotient_by(K)
        cyc = _is_cyclic(Q)
        out["quotient_cyclic"] = cyc
        if cyc and Q.order > 1:
            p = _smallest_prime_factor(Q.order)
            N = _index_p_overgroup(G, K, p)
            rp = ReducedPermRep.from_perm(PermRep.coset(G, N))
            cf = rp.character()
            n_mults = []
            for i in range(table.n_irreducibles()):
                m = table.inner_with_rational(cf, i)
                n_mults.append(int(m) % 2)
            out["reduced_perm_GmodN_mod2"] = n_mults
            out["equals_reduced_perm_GmodN"] = n_mults == mults
    return out


def _is_cyclic(G: FiniteGroup) -> bool:
    return any(G.element_order(g) == G.order for g in G.elements)


def _smallest_prime_factor(n):
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def _index_p_overgroup(G: FiniteGroup, K, p):
    """The unique subgroup of index p containing K (G/K cyclic)."""
    for H in G.all_subgroups():
        if len(H) * p == G.order and K <= H:
            return H
    raise ValueError("no index-p overgroup found")
