"""Long-exact-sequence data of a tower on a finite (s, t) window.

The tower is X(t) -> X(t-1) with fibers F(t); the datum stores pi_s of
everything plus the three families of maps

    incl(s,t): pi_s F(t) -> pi_s X(t)
    proj(s,t): pi_s X(t) -> pi_s X(t-1)
    bdry(s,t): pi_s X(t) -> pi_{s-1} F(t+1)

A `closed` tower certifies that F vanishes outside the window (and X(t) = 0
below it), so out-of-window reads return zero modules / stabilized X; a
non-closed tower treats any out-of-window read as a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import WindowExceeded
from ..fgab import FgModule, Hom, Submodule, image, kernel
from ..fgab.ring import CoeffRing


@dataclass
class TowerDatum:
    ring: CoeffRing
    s_range: tuple  # (s_min, s_max), inclusive
    t_range: tuple  # (t_min, t_max), inclusive
    piF: dict = field(default_factory=dict)   # (s,t) -> FgModule
    piX: dict = field(default_factory=dict)   # (s,t) -> FgModule
    incl: dict = field(default_factory=dict)  # (s,t) -> Hom piF(s,t)->piX(s,t)
    proj: dict = field(default_factory=dict)  # (s,t) -> Hom piX(s,t)->piX(s,t-1)
    bdry: dict = field(default_factory=dict)  # (s,t) -> Hom piX(s,t)->piF(s-1,t+1)
    closed: bool = False

    def __post_init__(self):
        self._zero = FgModule(self.ring, ())

    def in_window(self, s, t) -> bool:
        return (self.s_range[0] <= s <= self.s_range[1]
                and self.t_range[0] <= t <= self.t_range[1])

    def _require(self, s, t):
        if not self.in_window(s, t) and not self.closed:
            raise WindowExceeded(
                f"position (s={s}, t={t}) outside window s in {self.s_range}, "
                f"t in {self.t_range}; enlarge the window"
            )

    def module_F(self, s, t) -> FgModule:
        self._require(s, t)
        return self.piF.get((s, t), self._zero)

    def module_X(self, s, t) -> FgModule:
        self._require(s, t)
        if self.closed:
            if s < self.s_range[0] or s > self.s_range[1] or t < self.t_range[0]:
                return self._zero
            if t > self.t_range[1]:
                return self.piX.get((s, self.t_range[1]), self._zero)
        return self.piX.get((s, t), self._zero)

    def hom_incl(self, s, t) -> Hom:
        self._require(s, t)
        h = self.incl.get((s, t))
        if h is None:
            return Hom.zero(self.module_F(s, t), self.module_X(s, t))
        return h

    def hom_proj(self, s, t) -> Hom:
        """pi_s X(t) -> pi_s X(t-1)."""
        src, tgt = self.module_X(s, t), self.module_X(s, t - 1)
        if self.closed and t > self.t_range[1]:
            # stabilized region: X(t) = X(t_max)
            return Hom.identity(src) if src == tgt else Hom.zero(src, tgt)
        self._require(s, t)
        h = self.proj.get((s, t))
        if h is None:
            return Hom.zero(src, tgt)
        return h

    def hom_bdry(self, s, t) -> Hom:
        src, tgt = self.module_X(s, t), self.module_F(s - 1, t + 1)
        if self.closed and not self.in_window(s, t):
            return Hom.zero(src, tgt)
        self._require(s, t)
        h = self.bdry.get((s, t))
        if h is None:
            return Hom.zero(src, tgt)
        return h

    def proj_chain(self, s, t_from, t_to) -> Hom:
        """Composite pi_s X(t_from) -> pi_s X(t_to), t_from >= t_to."""
        if t_from < t_to:
            raise ValueError("proj_chain runs downward")
        h = Hom.identity(self.module_X(s, t_from))
        for u in range(t_from, t_to, -1):
            h = self.hom_proj(s, u).compose(h)
        return h

    def set_position(self, s, t, piF=None, piX=None, incl=None, proj=None, bdry=None):
        if piF is not None:
            self.piF[(s, t)] = piF
        if piX is not None:
            self.piX[(s, t)] = piX
        if incl is not None:
            self.incl[(s, t)] = incl
        if proj is not None:
            self.proj[(s, t)] = proj
        if bdry is not None:
            self.bdry[(s, t)] = bdry


def validate_tower(T: TowerDatum):
    """Exactness violations of the LES data; empty list iff exact.

    Violations are data, not errors: each is a dict naming the position and
    the failed condition.
    """
    out = []
    s_min, s_max = T.s_range
    t_min, t_max = T.t_range

    def check(kind, s, t, im: Submodule, ker: Submodule):
        if im != ker:
            out.append({
                "at": kind, "s": s, "t": t,
                "image": str(im.module), "kernel": str(ker.module),
            })

    for s in range(s_min, s_max + 1):
        for t in range(t_min, t_max + 1):
            # at X(s,t): incl(s,t) then proj(s,t)
            if t - 1 >= t_min or T.closed:
                check("X:incl/proj", s, t,
                      image(T.hom_incl(s, t)), kernel(T.hom_proj(s, t)))
            # at X(s,t): proj(s,t+1) then bdry(s,t)
            if (t + 1 <= t_max or T.closed) and (s - 1 >= s_min or T.closed):
                check("X:proj/bdry", s, t,
                      image(T.hom_proj(s, t + 1)), kernel(T.hom_bdry(s, t)))
            # at F(s-1,t+1): bdry(s,t) then incl(s-1,t+1)
            if s - 1 >= s_min and t + 1 <= t_max:
                check("F:bdry/incl", s - 1, t + 1,
                      image(T.hom_bdry(s, t)), kernel(T.hom_incl(s - 1, t + 1)))
    return out
