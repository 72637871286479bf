"""JSON schemas for rings, matrices, modules, and homomorphisms.

Ring:    {"kind": "Z"} or {"kind": "Zp", "p": 3, "precision": 12}
Matrix:  {"ring": <ring>, "matrix": [[...], ...]}
Module:  {"ring": <ring>, "factors": [...]}
Hom:     {"ring": <ring>, "source": [...], "target": [...], "matrix": [[...]]}
"""

from __future__ import annotations

from ..errors import SchemaError
from .module import FgModule, Hom
from .ring import CoeffRing, ZZ, Zp


def ring_to_json(ring: CoeffRing) -> dict:
    if ring.is_padic:
        return {"kind": "Zp", "p": ring.p, "precision": ring.precision}
    return {"kind": "Z"}


def ring_from_json(obj) -> CoeffRing:
    try:
        kind = obj["kind"]
        if kind == "Z":
            return ZZ
        if kind == "Zp":
            return Zp(int(obj["p"]), int(obj["precision"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad ring object {obj!r}") from exc
    raise SchemaError(f"unknown ring kind {obj!r}")


def matrix_to_json(ring: CoeffRing, M) -> dict:
    return {"ring": ring_to_json(ring), "matrix": [list(map(int, r)) for r in M]}


def matrix_from_json(obj):
    try:
        ring = ring_from_json(obj["ring"])
        M = [[int(x) for x in row] for row in obj["matrix"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad matrix object") from exc
    if M and any(len(r) != len(M[0]) for r in M):
        raise SchemaError("ragged matrix")
    return ring, M


def module_to_json(mod: FgModule) -> dict:
    return {"ring": ring_to_json(mod.ring), "factors": [int(d) for d in mod.factors]}


def module_from_json(obj) -> FgModule:
    try:
        ring = ring_from_json(obj["ring"])
        factors = [int(d) for d in obj["factors"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad module object") from exc
    return FgModule(ring, factors)


def hom_to_json(h: Hom) -> dict:
    return {
        "ring": ring_to_json(h.source.ring),
        "source": [int(d) for d in h.source.factors],
        "target": [int(d) for d in h.target.factors],
        "matrix": [list(map(int, r)) for r in h.matrix],
    }


def hom_from_json(obj) -> Hom:
    try:
        ring = ring_from_json(obj["ring"])
        source = FgModule(ring, [int(d) for d in obj["source"]])
        target = FgModule(ring, [int(d) for d in obj["target"]])
        M = [[int(x) for x in row] for row in obj["matrix"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad hom object") from exc
    try:
        return Hom(source, target, M)
    except ValueError as exc:
        raise SchemaError(f"hom is not well defined: {exc}") from exc
