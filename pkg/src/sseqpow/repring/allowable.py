"""The KU-allowability predicate.

G is KU-allowable iff for every cyclic subgroup C, every prime dividing
[N_G(C) : C_G(C)] divides |C|.  Nilpotent groups always qualify.
"""

from __future__ import annotations

from .group import FiniteGroup


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_ku_allowable(G: FiniteGroup):
    """(allowable, witness): witness names the offending (C, prime) on False."""
    for C in G.cyclic_subgroups():
        n = len(C)
        idx = len(G.normalizer(C)) // len(G.centralizer(C))
        for q in _prime_factors(idx):
            if n % q != 0:
                gen = max(C, key=G.element_order) if n > 1 else G.identity
                return False, {
                    "cyclic_order": n,
                    "cyclic_generator": gen,
                    "prime": q,
                    "index": idx,
                }
    return True, None
