"""Coefficient rings: Z, and Z/p^N with tracked valuation.

Elements of either ring are plain Python ints.  For PadicIntegers(p, N) the
canonical representative lies in [0, p^N); a residue of 0 means "zero at
precision N" and has valuation N.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PrecisionExhausted

DEFAULT_PRECISION = 12


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoeffRing:
    """Z (kind="Z") or PadicIntegers(p, N) (kind="Zp")."""

    kind: str
    p: int = 0
    precision: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Zp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zp":
            if not _is_prime(self.p):
                raise ValueError(f"p = {self.p} is not prime")
            if self.precision < 1:
                raise ValueError("precision must be >= 1")

    @property
    def is_padic(self) -> bool:
        return self.kind == "Zp"

    @property
    def modulus(self) -> int:
        """p^N for Zp, 0 (meaning "no modulus") for Z."""
        return self.p ** self.precision if self.is_padic else 0

    def normalize(self, x: int) -> int:
        return x % self.modulus if self.is_padic else x

    def valuation(self, x: int) -> int:
        """p-adic valuation of the residue; N for 0.  Z: 0/1 unit flag style."""
        if not self.is_padic:
            raise ValueError("valuation is only defined for Zp")
        x = self.normalize(x)
        if x == 0:
            return self.precision
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def is_unit(self, x: int) -> bool:
        if self.is_padic:
            return self.normalize(x) % self.p != 0
        return x in (1, -1)

    def unit_inverse(self, x: int) -> int:
        """Inverse of a unit; PrecisionExhausted/ValueError otherwise."""
        if self.is_padic:
            x = self.normalize(x)
            if x % self.p == 0:
                raise PrecisionExhausted(
                    f"residue {x} has valuation >= 1, not invertible mod {self.p}^{self.precision}"
                )
            return pow(x, -1, self.modulus)
        if x in (1, -1):
            return x
        raise ValueError(f"{x} is not a unit in Z")

    def divide(self, a: int, b: int) -> int:
        """Exact division a/b.  For Zp, b of valuation >= N is indistinguishable
        from 0 and raises PrecisionExhausted."""
        if self.is_padic:
            a, b = self.normalize(a), self.normalize(b)
            vb = self.valuation(b)
            if vb >= self.precision:
                raise PrecisionExhausted(
                    f"division by a residue of valuation >= {self.precision}"
                )
            va = self.valuation(a)
            if a == 0:
                return 0
            if va < vb:
                raise ValueError("inexact p-adic division")
            unit = self.unit_inverse(b // self.p**vb)
            return self.normalize((a // self.p**vb) * unit)
        if b == 0 or a % b != 0:
            raise ValueError("inexact integer division")
        return a // b

    def normalize_factor(self, d: int) -> int:
        """Canonical invariant factor: nonneg; for Zp a power of p, with
        p^e, e >= N collapsing to 0 ("free at this precision")."""
        if self.is_padic:
            d = abs(d)
            if d == 0:
                return 0
            v = 0
            while d % self.p == 0:
                d //= self.p
                v += 1
            return 0 if v >= self.precision else self.p**v
        return abs(d)

    def __str__(self):
        if self.is_padic:
            return f"Z_{self.p}@{self.precision}"
        return "Z"


ZZ = CoeffRing("Z")


def Zp(p: int, precision: int = DEFAULT_PRECISION) -> CoeffRing:
    return CoeffRing("Zp", p, precision)
