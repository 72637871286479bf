"""Finite groups as permutation groups on {0, ..., degree-1}.

Permutations are tuples p with p[i] = image of i.  Cycle notation in I/O is
1-indexed ("(1 2 3)(4 5)").
"""

from __future__ import annotations

from ..errors import OrderBoundExceeded

ORDER_BOUND = 10000
SUBGROUPS_BOUND = 64


def parse_cycles(text, degree):
    """Permutation tuple from 1-indexed cycle notation."""
    p = list(range(degree))
    text = text.strip()
    if text in ("", "()", "e"):
        return tuple(p)
    depth = 0
    cycles, cur = [], []
    token = ""
    for ch in text + " ":
        if ch == "(":
            depth += 1
            cur = []
            token = ""
        elif ch in (" ", ",", ")"):
            if token:
                cur.append(int(token) - 1)
                token = ""
            if ch == ")":
                depth -= 1
                if cur:
                    cycles.append(cur)
                cur = []
        else:
            token += ch
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < degree:
                raise ValueError(f"point {a + 1} outside degree {degree}")
            p[a] = b
    return tuple(p)


def cycles_str(p):
    """1-indexed cycle notation of a permutation tuple."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def pmul(a, b):
    """(a b)(i) = a(b(i))."""
    return tuple(a[b[i]] for i in range(len(a)))


def pinv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def cycle_type(p, points=None):
    """Sorted cycle lengths of p acting on `points` (default: all)."""
    if points is None:
        points = range(len(p))
    points = list(points)
    seen = set()
    out = []
    for i in points:
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            n += 1
            j = p[j]
        out.append(n)
    return tuple(sorted(out))


class FiniteGroup:
    """A permutation group with cached elements and conjugacy classes."""

    def __init__(self, degree, generators, name=None):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
        self.name = name
        self.identity = tuple(range(degree))
        self.elements = self._closure()
        self.order = len(self.elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._classes = None
        self._class_of = None
        self._subgroups = None

    def _closure(self):
        frontier = [self.identity]
        seen = {self.identity}
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = pmul(x, g)
                    if y not in seen:
                        if len(seen) >= ORDER_BOUND:
                            raise OrderBoundExceeded(
                                f"group order exceeds {ORDER_BOUND}")
                        seen.add(y)
                        new.append(y)
            frontier = new
        return sorted(seen)

    def __contains__(self, g):
        return g in self._index

    def __len__(self):
        return self.order

    def mul(self, a, b):
        return pmul(a, b)

    def inv(self, a):
        return pinv(a)

    def element_order(self, g):
        n, x = 1, g
        while x != self.identity:
            x = pmul(x, g)
            n += 1
        return n

    def exponent(self):
        from math import lcm

        out = 1
        for rep, _ in self.conjugacy_classes():
            out = lcm(out, self.element_order(rep))
        return out

    def conjugacy_classes(self):
        """List of (representative, frozenset of elements)."""
        if self._classes is None:
            classes = []
            assigned = {}
            for x in self.elements:
                if x in assigned:
                    continue
                orbit = {x}
                frontier = [x]
                while frontier:
                    new = []
                    for y in frontier:
                        for g in self.generators:
                            z = pmul(pmul(g, y), pinv(g))
                            if z not in orbit:
                                orbit.add(z)
                                new.append(z)
                    frontier = new
                rep = min(orbit)
                for y in orbit:
                    assigned[y] = len(classes)
                classes.append((rep, frozenset(orbit)))
            self._classes = classes
            self._class_of = assigned
        return self._classes

    def class_of(self, g) -> int:
        self.conjugacy_classes()
        return self._class_of[g]

    def n_classes(self):
        return len(self.conjugacy_classes())

    def inverse_class(self, i) -> int:
        rep, _ = self.conjugacy_classes()[i]
        return self.class_of(pinv(rep))

    def power_class(self, i, k) -> int:
        rep, _ = self.conjugacy_classes()[i]
        n = self.element_order(rep)
        k %= n
        x = self.identity
        for _ in range(k):
            x = pmul(x, rep)
        return self.class_of(x)

    # --- subgroup machinery (subgroups are frozensets of elements) ---

    def subgroup_closure(self, gens):
        gens = [tuple(g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = pmul(x, g)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def cyclic_subgroups(self):
        out = set()
        for g in self.elements:
            out.add(self.subgroup_closure([g]))
        return sorted(out, key=lambda H: (len(H), sorted(H)))

    def all_subgroups(self):
        """Every subgroup, by incremental closure; |G| <= 64 only."""
        if self.order > SUBGROUPS_BOUND:
            raise OrderBoundExceeded(
                f"all_subgroups needs |G| <= {SUBGROUPS_BOUND}, got {self.order}")
        if self._subgroups is not None:
            return self._subgroups
        cyclics = self.cyclic_subgroups()
        known = set(cyclics)
        frontier = list(cyclics)
        while frontier:
            new = []
            for H in frontier:
                for C in cyclics:
                    if C <= H:
                        continue
                    HC = self.subgroup_closure(list(H) + list(C))
                    if HC not in known:
                        known.add(HC)
                        new.append(HC)
            frontier = new
        self._subgroups = sorted(known, key=lambda H: (len(H), sorted(H)))
        return self._subgroups

    def normalizer(self, K):
        K = frozenset(K)
        out = []
        for g in self.elements:
            gi = pinv(g)
            if all(pmul(pmul(g, k), gi) in K for k in K):
                out.append(g)
        return frozenset(out)

    def centralizer(self, K):
        K = frozenset(K)
        return frozenset(g for g in self.elements
                         if all(pmul(g, k) == pmul(k, g) for k in K))

    def is_normal(self, K):
        return self.normalizer(K) == frozenset(self.elements)

    def is_nilpotent(self):
        """G is nilpotent iff its q-elements form a subgroup for every q."""
        primes = set()
        n = self.order
        q = 2
        while q * q <= n:
            if n % q == 0:
                primes.add(q)
                while n % q == 0:
                    n //= q
            q += 1
        if n > 1:
            primes.add(n)
        for q in primes:
            part = [g for g in self.elements
                    if _is_prime_power_order(self.element_order(g), q)]
            S = set(part)
            for a in part:
                for b in part:
                    if pmul(a, b) not in S:
                        return False
        return True

    # --- coset actions ---

    def coset_action(self, K):
        """(cosets, action) for G acting on left cosets gK.

        `cosets` is a list of frozensets; `action(g)` is the permutation tuple
        of g on the coset indices.
        """
        K = frozenset(K)
        cosets = []
        seen = set()
        for g in self.elements:
            coset = frozenset(pmul(g, k) for k in K)
            if coset not in seen:
                seen.add(coset)
                cosets.append(coset)
        index = {}
        for i, c in enumerate(cosets):
            for x in c:
                index[x] = i

        def action(g):
            return tuple(index[pmul(g, next(iter(c)))] for c in cosets)

        return cosets, action

    def quotient_by(self, K):
        """The quotient group G/K (K normal) as a permutation group on cosets."""
        if not self.is_normal(K):
            raise ValueError("quotient needs a normal subgroup")
        cosets, action = self.coset_action(K)
        gens = [action(g) for g in self.generators]
        return FiniteGroup(len(cosets), gens)

    def __str__(self):
        label = self.name or "G"
        return f"{label} (order {self.order}, degree {self.degree})"


def _is_prime_power_order(n, q):
    while n % q == 0:
        n //= q
    return n == 1


def group_from_generators(generators, degree=None, name=None) -> FiniteGroup:
    """Build a group from cycle-notation strings or permutation tuples."""
    parsed = []
    if degree is None:
        degree = 0
        for g in generators:
            if isinstance(g, str):
                for tok in g.replace("(", " ").replace(")", " ").replace(",", " ").split():
                    degree = max(degree, int(tok))
            else:
                degree = max(degree, len(g))
    for g in generators:
        if isinstance(g, str):
            parsed.append(parse_cycles(g, degree))
        else:
            parsed.append(tuple(g))
    return FiniteGroup(degree, parsed, name=name)
