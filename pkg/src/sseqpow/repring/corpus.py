"""The test corpus: every group of order <= 24, plus named extras.

Groups are built from abstract constructors (cyclic, direct, semidirect,
dicyclic, central quotients) and realized as permutation groups, via either
a small faithful action or the regular representation.  Isomorphism-class
counts per order are asserted in the test suite via invariant fingerprints.
"""

from __future__ import annotations

from .group import FiniteGroup, group_from_generators


class AbstractGroup:
    """Elements (hashable) with an explicit multiplication table."""

    def __init__(self, elements, mul, name=None):
        self.elements = list(elements)
        self.mul = mul
        self.name = name

    def identity(self):
        for e in self.elements:
            if all(self.mul(e, x) == x == self.mul(x, e) for x in self.elements[:4]):
                if all(self.mul(e, x) == x for x in self.elements):
                    return e
        raise ValueError("no identity found")

    def to_permutation_group(self, name=None) -> FiniteGroup:
        """Regular representation (degree = order)."""
        idx = {g: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        gens = []
        # generating set: grow greedily until the closure is everything
        chosen = []
        seen = {self.identity()}
        for g in self.elements:
            if g in seen:
                continue
            chosen.append(g)
            frontier = list(seen)
            while frontier:
                new = []
                for x in frontier:
                    for h in chosen:
                        y = self.mul(x, h)
                        if y not in seen:
                            seen.add(y)
                            new.append(y)
                frontier = new
            if len(seen) == n:
                break
        for g in chosen:
            gens.append(tuple(idx[self.mul(g, x)] for x in self.elements))
        return FiniteGroup(n, gens, name=name or self.name)


def abstract_cyclic(n):
    return AbstractGroup(list(range(n)), lambda a, b: (a + b) % n, name=f"C{n}")


def abstract_direct(A: AbstractGroup, B: AbstractGroup, name=None):
    elems = [(a, b) for a in A.elements for b in B.elements]
    return AbstractGroup(
        elems, lambda x, y: (A.mul(x[0], y[0]), B.mul(x[1], y[1])), name=name)


def abstract_semidirect(H: AbstractGroup, K: AbstractGroup, act, name=None):
    """H x| K with act(k) an automorphism of H: (h1,k1)(h2,k2) =
    (h1 . act(k1)(h2), k1 k2)."""
    elems = [(h, k) for h in H.elements for k in K.elements]

    def mul(x, y):
        return (H.mul(x[0], act(x[1])(y[0])), K.mul(x[1], y[1]))

    return AbstractGroup(elems, mul, name=name)


def abstract_dicyclic(n):
    """Dicyclic of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>."""
    elems = [(i, j) for i in range(2 * n) for j in (0, 1)]

    def mul(x, y):
        i, j = x
        u, v = y
        if j == 0:
            return ((i + u) % (2 * n), v)
        # (i,1)(u,v): b a^u = a^{-u} b
        if v == 0:
            return ((i - u) % (2 * n), 1)
        return ((i - u + n) % (2 * n), 0)

    return AbstractGroup(elems, mul, name=f"Dic{n}")


def abstract_quotient_central(G: AbstractGroup, Z, name=None):
    """G / Z for a central subgroup Z (set of elements)."""
    Z = set(Z)
    cosets = []
    seen = set()
    rep_of = {}
    for g in G.elements:
        coset = frozenset(G.mul(g, z) for z in Z)
        if coset not in seen:
            seen.add(coset)
            cosets.append(coset)
        rep_of[g] = coset

    def mul(c1, c2):
        g1, g2 = next(iter(c1)), next(iter(c2))
        return rep_of[G.mul(g1, g2)]

    return AbstractGroup(cosets, mul, name=name)


# --- permutation-level conveniences ---

def cyclic(n, name=None) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(1, [], name=name or "C1")
    gen = tuple(list(range(1, n)) + [0])
    return FiniteGroup(n, [gen], name=name or f"C{n}")


def dihedral(n, name=None) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n)."""
    if n == 1:
        return cyclic(2, name=name or "D1")
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((n - i) % n for i in range(n))
    return FiniteGroup(n, [rot, ref], name=name or f"D{n}(order {2*n})")


def symmetric(n, name=None) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return FiniteGroup(max(n, 1), gens, name=name or f"S{n}")


def alternating(n, name=None) -> FiniteGroup:
    if n < 3:
        return cyclic(1, name=name or f"A{n}")
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        if n % 2 == 1:
            gens.append(tuple(list(range(1, n)) + [0]))
        else:
            gens.append(tuple([0] + list(range(2, n)) + [1]))
    return FiniteGroup(n, gens, name=name or f"A{n}")


def direct(G: FiniteGroup, H: FiniteGroup, name=None) -> FiniteGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    dg, dh = G.degree, H.degree
    gens = [tuple(list(g) + list(range(dg, dg + dh))) for g in G.generators]
    gens += [tuple(list(range(dg)) + [dg + x for x in h]) for h in H.generators]
    nm = name or f"{G.name or 'G'}x{H.name or 'H'}"
    return FiniteGroup(dg + dh, gens, name=nm)


def quaternion(name="Q8") -> FiniteGroup:
    return abstract_dicyclic(2).to_permutation_group(name=name)


def heisenberg3(name="Heis27") -> FiniteGroup:
    """Unitriangular 3x3 matrices over F_3 (order 27, exponent 3)."""
    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)

    return AbstractGroup(elems, mul, name=name).to_permutation_group(name=name)


def sl23(name="SL(2,3)") -> FiniteGroup:
    """SL(2, F_3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    vi = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        (a, b), (c, d) = m
        return tuple(vi[((a * x + b * y) % 3, (c * x + d * y) % 3)]
                     for x, y in vecs)

    gens = [mat_perm(((1, 1), (0, 1))), mat_perm(((0, -1), (1, 0)))]
    return FiniteGroup(8, gens, name=name)


def _aut_pow(n, u):
    """x -> u x on Z/n as an automorphism function factory."""
    def act_k(k):
        def f(h):
            return (h * pow(u, k, n)) % n if n else h
        return f
    return act_k


def semidirect_cyclic(n, m, u, name=None) -> FiniteGroup:
    """C_n x| C_m with the generator of C_m acting by x -> u x."""
    H, K = abstract_cyclic(n), abstract_cyclic(m)
    if pow(u, m, n) != 1 % n:
        raise ValueError("u does not define an order-dividing-m action")
    G = abstract_semidirect(H, K, _aut_pow(n, u), name=name)
    return G.to_permutation_group(name=name or f"C{n}:C{m}(u={u})")


def _d4_abstract():
    """D4 (order 8) as pairs (i, j), r = (1,0), s = (0,1)."""
    def mul(x, y):
        i, j = x
        u, v = y
        if j == 0:
            return ((i + u) % 4, v)
        return ((i - u) % 4, 1 - v)

    return AbstractGroup([(i, j) for i in range(4) for j in (0, 1)], mul, name="D4")


def c3_semi_d4(name="C3:D4") -> FiniteGroup:
    """C3 x| D4 with kernel <r^2, s>: r inverts C3, s acts trivially."""
    H = abstract_cyclic(3)
    D4 = _d4_abstract()

    def act(k):
        i, _ = k
        if i % 2 == 1:
            return lambda h: (-h) % 3
        return lambda h: h

    return abstract_semidirect(H, D4, act, name=name).to_permutation_group(name=name)


def c3_semi_c8(name="C3:C8") -> FiniteGroup:
    """C3 x| C8 through C8 -> C2 (generator inverts)."""
    H, K = abstract_cyclic(3), abstract_cyclic(8)

    def act(k):
        if k % 2 == 1:
            return lambda h: (-h) % 3
        return lambda h: h

    return abstract_semidirect(H, K, act, name=name).to_permutation_group(name=name)


def c2sq_semi_c4(name="(C2xC2):C4") -> FiniteGroup:
    """C2^2 x| C4, the generator swapping the two coordinates."""
    H = abstract_direct(abstract_cyclic(2), abstract_cyclic(2))
    K = abstract_cyclic(4)

    def act(k):
        if k % 2 == 1:
            return lambda h: (h[1], h[0])
        return lambda h: h

    return abstract_semidirect(H, K, act, name=name).to_permutation_group(name=name)


def c4_semi_c4(name="C4:C4") -> FiniteGroup:
    return semidirect_cyclic(4, 4, 3, name=name)


def modular16(name="M4(16)") -> FiniteGroup:
    return semidirect_cyclic(8, 2, 5, name=name)


def semidihedral16(name="SD16") -> FiniteGroup:
    return semidirect_cyclic(8, 2, 3, name=name)


def pauli16(name="D4oC4") -> FiniteGroup:
    """Central product D4 o C4 = (D4 x C4)/<(r^2, 2)>."""
    D4 = _d4_abstract()
    C4 = abstract_cyclic(4)
    P = abstract_direct(D4, C4)
    z = (((2, 0), 2))
    e = (((0, 0), 0))
    Z = [e, z]
    return abstract_quotient_central(P, Z, name=name).to_permutation_group(name=name)


def c3xc3_semi_c2(name="(C3xC3):C2") -> FiniteGroup:
    """Generalized dihedral over C3 x C3 (inversion)."""
    H = abstract_direct(abstract_cyclic(3), abstract_cyclic(3))
    K = abstract_cyclic(2)

    def act(k):
        if k == 1:
            return lambda h: ((-h[0]) % 3, (-h[1]) % 3)
        return lambda h: h

    return abstract_semidirect(H, K, act, name=name).to_permutation_group(name=name)


def frobenius20(name="F20") -> FiniteGroup:
    return semidirect_cyclic(5, 4, 2, name=name)


def frobenius21(name="C7:C3") -> FiniteGroup:
    return semidirect_cyclic(7, 3, 2, name=name)


def dicyclic(n, name=None) -> FiniteGroup:
    return abstract_dicyclic(n).to_permutation_group(name=name or f"Dic{n}")


# --- the corpus ---

def groups_of_order(n):
    """All isomorphism classes of groups of order n (n <= 24)."""
    C = cyclic
    D = dihedral
    if n == 1:
        return [C(1)]
    if n == 2:
        return [C(2)]
    if n == 3:
        return [C(3)]
    if n == 4:
        return [C(4), direct(C(2), C(2), name="C2xC2")]
    if n == 5:
        return [C(5)]
    if n == 6:
        return [C(6), symmetric(3)]
    if n == 7:
        return [C(7)]
    if n == 8:
        return [C(8), direct(C(4), C(2), name="C4xC2"),
                direct(C(2), direct(C(2), C(2)), name="C2^3"),
                D(4, name="D4"), quaternion()]
    if n == 9:
        return [C(9), direct(C(3), C(3), name="C3xC3")]
    if n == 10:
        return [C(10), D(5, name="D5(order 10)")]
    if n == 11:
        return [C(11)]
    if n == 12:
        return [C(12), direct(C(6), C(2), name="C6xC2"),
                D(6, name="D6(order 12)"), alternating(4), dicyclic(3)]
    if n == 13:
        return [C(13)]
    if n == 14:
        return [C(14), D(7, name="D7(order 14)")]
    if n == 15:
        return [C(15)]
    if n == 16:
        return [
            C(16),
            direct(C(8), C(2), name="C8xC2"),
            direct(C(4), C(4), name="C4xC4"),
            direct(C(4), direct(C(2), C(2)), name="C4xC2^2"),
            direct(direct(C(2), C(2)), direct(C(2), C(2)), name="C2^4"),
            D(8, name="D8(order 16)"),
            semidihedral16(),
            modular16(),
            dicyclic(4, name="Q16"),
            direct(D(4), C(2), name="D4xC2"),
            direct(quaternion(), C(2), name="Q8xC2"),
            c4_semi_c4(),
            c2sq_semi_c4(),
            pauli16(),
        ]
    if n == 17:
        return [C(17)]
    if n == 18:
        return [C(18), direct(C(3), C(6), name="C3xC6"),
                D(9, name="D9(order 18)"),
                direct(C(3), symmetric(3), name="C3xS3"),
                c3xc3_semi_c2()]
    if n == 19:
        return [C(19)]
    if n == 20:
        return [C(20), direct(C(2), C(10), name="C2xC10"),
                D(10, name="D10(order 20)"), dicyclic(5), frobenius20()]
    if n == 21:
        return [C(21), frobenius21()]
    if n == 22:
        return [C(22), D(11, name="D11(order 22)")]
    if n == 23:
        return [C(23)]
    if n == 24:
        S3 = symmetric(3)
        return [
            C(24),
            direct(C(12), C(2), name="C12xC2"),
            direct(direct(C(6), C(2)), C(2), name="C6xC2^2"),
            symmetric(4),
            direct(alternating(4), C(2), name="A4xC2"),
            sl23(),
            D(12, name="D12(order 24)"),
            dicyclic(6),
            c3_semi_c8(),
            direct(C(3), D(4), name="C3xD4"),
            direct(C(3), quaternion(), name="C3xQ8"),
            direct(S3, C(4), name="S3xC4"),
            direct(direct(S3, C(2)), C(2), name="S3xC2^2"),
            direct(dicyclic(3), C(2), name="Dic3xC2"),
            c3_semi_d4(),
        ]
    raise ValueError(f"no classification list for order {n}")


EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                   10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1,
                   18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15}


def all_groups_up_to_24():
    out = []
    for n in range(1, 25):
        out.extend(groups_of_order(n))
    return out


def named_extras():
    """C_n (n <= 12), D4, Q8, S4, A4, C3xC3, Heisenberg 27, C27."""
    out = [cyclic(n) for n in range(1, 13)]
    out += [dihedral(4, name="D4"), quaternion(), symmetric(4), alternating(4),
            direct(cyclic(3), cyclic(3), name="C3xC3"), heisenberg3(),
            cyclic(27, name="C27")]
    return out


def _order_histogram(G: FiniteGroup):
    orders = {}
    for g in G.elements:
        o = G.element_order(g)
        orders[o] = orders.get(o, 0) + 1
    return tuple(sorted(orders.items()))


def derived_subgroup(G: FiniteGroup):
    from .group import pinv, pmul

    comms = set()
    for a in G.elements:
        ai = pinv(a)
        for b in G.elements:
            comms.add(pmul(pmul(a, b), pmul(ai, pinv(b))))
    return G.subgroup_closure(comms)


def fingerprint(G: FiniteGroup):
    """An isomorphism-class separator: order, element-order histogram,
    center order, class count, and the abelianization's order histogram."""
    center = len(G.centralizer(G.elements))
    classes = G.n_classes()
    ab = G.quotient_by(derived_subgroup(G))
    return (G.order, _order_histogram(G), center, classes, _order_histogram(ab))
