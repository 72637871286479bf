"""Tower JSON schema.

{"ring": ..., "window": {"s": [a, b], "t": [c, d]}, "closed": bool,
 "piF": {"s,t": [factors]}, "piX": {...},
 "incl": {"s,t": [[...]]}, "proj": {...}, "bdry": {...}}
"""

from __future__ import annotations

from ..errors import SchemaError
from ..fgab import FgModule, Hom
from ..fgab.serialize import ring_from_json, ring_to_json
from .datum import TowerDatum


def _key(s, t):
    return f"{s},{t}"


def _unkey(k):
    try:
        s, t = k.split(",")
        return int(s), int(t)
    except ValueError as exc:
        raise SchemaError(f"bad position key {k!r}") from exc


def tower_to_json(T: TowerDatum) -> dict:
    return {
        "ring": ring_to_json(T.ring),
        "window": {"s": list(T.s_range), "t": list(T.t_range)},
        "closed": T.closed,
        "piF": {_key(*k): list(m.factors) for k, m in sorted(T.piF.items())},
        "piX": {_key(*k): list(m.factors) for k, m in sorted(T.piX.items())},
        "incl": {_key(*k): [list(r) for r in h.matrix] for k, h in sorted(T.incl.items())},
        "proj": {_key(*k): [list(r) for r in h.matrix] for k, h in sorted(T.proj.items())},
        "bdry": {_key(*k): [list(r) for r in h.matrix] for k, h in sorted(T.bdry.items())},
    }


def tower_from_json(obj) -> TowerDatum:
    try:
        ring = ring_from_json(obj["ring"])
        s_range = tuple(int(x) for x in obj["window"]["s"])
        t_range = tuple(int(x) for x in obj["window"]["t"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad tower header") from exc
    T = TowerDatum(ring, s_range, t_range, closed=bool(obj.get("closed", False)))
    for field in ("piF", "piX"):
        for k, factors in obj.get(field, {}).items():
            s, t = _unkey(k)
            getattr(T, field)[(s, t)] = FgModule(ring, [int(d) for d in factors])
    for field, sig in (("incl", "incl"), ("proj", "proj"), ("bdry", "bdry")):
        for k, M in obj.get(field, {}).items():
            s, t = _unkey(k)
            if sig == "incl":
                src, tgt = T.module_F(s, t), T.module_X(s, t)
            elif sig == "proj":
                src, tgt = T.module_X(s, t), T.module_X(s, t - 1)
            else:
                src, tgt = T.module_X(s, t), T.module_F(s - 1, t + 1)
            try:
                getattr(T, field)[(s, t)] = Hom(src, tgt, [[int(x) for x in r] for r in M])
            except ValueError as exc:
                raise SchemaError(f"{field}({k}) is not well defined: {exc}") from exc
    return T
