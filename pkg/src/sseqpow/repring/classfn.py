"""Exact rational class functions on a finite group."""

from __future__ import annotations

from fractions import Fraction

from .group import FiniteGroup


class ClassFunction:
    """One exact rational value per conjugacy class."""

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        vals = [Fraction(v) for v in values]
        if len(vals) != group.n_classes():
            raise ValueError("one value per conjugacy class required")
        self.values = tuple(vals)

    @classmethod
    def constant(cls, group, c):
        return cls(group, [Fraction(c)] * group.n_classes())

    def value_at(self, g):
        return self.values[self.group.class_of(g)]

    def __call__(self, g):
        return self.value_at(g)

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group is other.group and self.values == other.values)

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __add__(self, other):
        other = self._coerce(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        other = self._coerce(other)
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassFunction(self.group, [a * other for a in self.values])
        other = self._coerce(other)
        return ClassFunction(self.group,
                             [a * b for a, b in zip(self.values, other.values)])

    __rmul__ = __mul__

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def _coerce(self, other):
        if isinstance(other, ClassFunction):
            if other.group is not self.group:
                raise ValueError("class functions on different groups")
            return other
        return ClassFunction.constant(self.group, other)

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def inner(self, other) -> Fraction:
        """<a, b> = (1/|G|) sum_g a(g) b(g^{-1})."""
        other = self._coerce(other)
        G = self.group
        total = Fraction(0)
        for i, (_, cls) in enumerate(G.conjugacy_classes()):
            total += len(cls) * self.values[i] * other.values[G.inverse_class(i)]
        return total / G.order

    def __str__(self):
        G = self.group
        parts = []
        for i, (rep, _) in enumerate(G.conjugacy_classes()):
            from .group import cycles_str
            parts.append(f"{cycles_str(rep)}: {self.values[i]}")
        return "{" + ", ".join(parts) + "}"
