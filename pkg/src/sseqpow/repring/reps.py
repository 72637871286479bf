"""Realized representations and their lambda-operations and Euler classes.

A realized representation is one given by explicit permutation action
matrices; every lambda/Euler computation reduces to exact integer polynomial
arithmetic on the cycle structure:

    det(I + t M_g) = prod_cycles (1 - (-t)^len)
    f(V, g)(t) = det(t I - M_g) = prod_cycles (t^len - 1)

Reduced representations divide out the trivial summand exactly.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotRealized
from .classfn import ClassFunction
from .group import FiniteGroup, cycle_type, group_from_generators


# --- tiny exact polynomial helpers (coefficient lists, low degree first) ---

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divexact(a, b):
    """Exact division of integer polynomials (remainder must vanish)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in reversed(range(len(out))):
        c = a[i + len(b) - 1]
        if c % b[-1] != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // b[-1]
        out[i] = q
        for j, y in enumerate(b):
            a[i + j] -= q * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def poly_eval(a, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


class PermRep:
    """The permutation representation C[X] of G acting on npoints points.

    `action(g)` returns the permutation of range(npoints) induced by g.
    """

    def __init__(self, group: FiniteGroup, npoints, action, label=None):
        self.group = group
        self.npoints = npoints
        self.action = action
        self.label = label or f"C[{npoints} points]"
        self.reduced = False

    @classmethod
    def natural(cls, group: FiniteGroup):
        return cls(group, group.degree, lambda g: g, label="natural")

    @classmethod
    def coset(cls, group: FiniteGroup, K):
        cosets, action = group.coset_action(K)
        return cls(group, len(cosets), action, label=f"C[G/K], |G/K|={len(cosets)}")

    @classmethod
    def regular(cls, group: FiniteGroup):
        return cls.coset(group, [group.identity])

    @classmethod
    def trivial(cls, group: FiniteGroup):
        return cls(group, 1, lambda g: (0,), label="trivial")

    def dim(self):
        return self.npoints

    def cycle_type(self, g):
        return cycle_type(self.action(g), range(self.npoints))

    def character(self) -> ClassFunction:
        vals = []
        for rep, _ in self.group.conjugacy_classes():
            vals.append(sum(1 for l in self.cycle_type(rep) if l == 1))
        return ClassFunction(self.group, vals)

    def lambda_poly(self, g):
        """det(I + t M_g) as an integer coefficient list."""
        out = [1]
        for l in self.cycle_type(g):
            factor = [1] + [0] * (l - 1) + [-((-1) ** l)]
            out = poly_mul(out, factor)
        return out

    def char_poly(self, g):
        """f(V, g)(t) = det(t I - M_g)."""
        out = [1]
        for l in self.cycle_type(g):
            factor = [-1] + [0] * (l - 1) + [1]
            out = poly_mul(out, factor)
        return out


class ReducedPermRep(PermRep):
    """C~[X] = C[X]/C: the reduced permutation representation."""

    def __init__(self, group, npoints, action, label=None):
        super().__init__(group, npoints, action,
                         label=label or f"reduced C[{npoints} points]")
        self.reduced = True

    @classmethod
    def from_perm(cls, rep: PermRep):
        return cls(rep.group, rep.npoints, rep.action,
                   label="reduced " + rep.label)

    def dim(self):
        return self.npoints - 1

    def character(self) -> ClassFunction:
        full = PermRep.character(self)
        return full - ClassFunction.constant(self.group, 1)

    def lambda_poly(self, g):
        return poly_divexact(PermRep.lambda_poly(self, g), [1, 1])

    def char_poly(self, g):
        return poly_divexact(PermRep.char_poly(self, g), [-1, 1])


def _require_realized(V):
    if not isinstance(V, PermRep):
        raise NotRealized(
            "operation needs a permutation-realized representation")


def perm_character(G: FiniteGroup, X) -> ClassFunction:
    """chi(C[X], g) = number of fixed points of g on X.

    X may be a PermRep, or a subgroup (frozenset/iterable of elements) whose
    coset action is taken.
    """
    if isinstance(X, PermRep):
        return PermRep.character(X)
    return PermRep.coset(G, X).character()


def exterior_powers(V) -> list:
    """[chi(Lambda^0 V), chi(Lambda^1 V), ...] as ClassFunctions."""
    _require_realized(V)
    G = V.group
    polys = {i: V.lambda_poly(rep) for i, (rep, _) in enumerate(G.conjugacy_classes())}
    d = V.dim()
    out = []
    for n in range(d + 1):
        vals = [polys[i][n] if n < len(polys[i]) else 0
                for i in range(G.n_classes())]
        out.append(ClassFunction(G, vals))
    return out


class VirtualCharacter:
    """A class function with a certificate: an explicit integer combination
    of lambda-powers of a realized representation."""

    def __init__(self, classfn: ClassFunction, certificate):
        self.classfn = classfn
        self.certificate = list(certificate)  # [(coeff, ("Lambda", n, rep))]

    def verify(self) -> bool:
        total = ClassFunction.constant(self.classfn.group, 0)
        cache = {}
        for coeff, (op, n, rep) in self.certificate:
            assert op == "Lambda"
            key = id(rep)
            if key not in cache:
                cache[key] = exterior_powers(rep)
            lam = cache[key]
            term = lam[n] if n < len(lam) else ClassFunction.constant(self.classfn.group, 0)
            total = total + coeff * term
        return total == self.classfn

    def is_zero(self):
        return self.classfn.is_zero()

    def __str__(self):
        return str(self.classfn)


def euler_class(V) -> VirtualCharacter:
    """e(V) = sum_n (-1)^n Lambda^n(V), with its lambda certificate."""
    _require_realized(V)
    lam = exterior_powers(V)
    total = ClassFunction.constant(V.group, 0)
    cert = []
    for n, term in enumerate(lam):
        total = total + ((-1) ** n) * term
        cert.append(((-1) ** n, ("Lambda", n, V)))
    return VirtualCharacter(total, cert)


def euler_character_identity(V, g):
    """(lhs, rhs) with lhs = sum (-1)^n chi(Lambda^n V, g), rhs = f(V,g)(1)."""
    _require_realized(V)
    lam = V.lambda_poly(g)
    lhs = sum(((-1) ** n) * c for n, c in enumerate(lam))
    rhs = poly_eval(V.char_poly(g), 1)
    return lhs, rhs


def euler_gset(G: FiniteGroup, K) -> VirtualCharacter:
    """e(G/K): the Euler class of the reduced permutation representation."""
    return euler_class(ReducedPermRep.from_perm(PermRep.coset(G, K)))


def has_transitive_cyclic(G: FiniteGroup, K) -> bool:
    """Does some <g> act transitively on G/K?  (Brute-force scan.)"""
    rep = PermRep.coset(G, K)
    n = rep.npoints
    for g in G.elements:
        if rep.cycle_type(g) == (n,):
            return True
    return n == 1


def adams_operation(k: int, x: ClassFunction) -> ClassFunction:
    """psi^k: value at the class of g is x at the class of g^k."""
    G = x.group
    vals = [x.values[G.power_class(i, k)] for i in range(G.n_classes())]
    return ClassFunction(G, vals)


def symmetric_group(m: int) -> FiniteGroup:
    if m <= 1:
        return FiniteGroup(max(m, 1), [], name=f"S{m}")
    gens = ["(1 2)"]
    if m > 2:
        gens.append("(" + " ".join(str(i) for i in range(1, m + 1)) + ")")
    return group_from_generators(gens, degree=m, name=f"S{m}")


def bott_power_euler(m: int) -> VirtualCharacter:
    """e of the reduced complex permutation representation of Sigma_m."""
    from ..errors import OrderBoundExceeded

    if m > 8:
        raise OrderBoundExceeded("bott_power_euler supports m <= 8")
    G = symmetric_group(m)
    if m <= 1:
        # zero-dimensional reduced representation: e = 1
        one = ClassFunction.constant(G, 1)
        return VirtualCharacter(one, [(1, ("Lambda", 0, PermRep.trivial(G)))])
    return euler_class(ReducedPermRep.from_perm(PermRep.natural(G)))
