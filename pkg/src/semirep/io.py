"""JSON import and export for groups, maps, representations and lattices.

Every document carries a ``"kind"`` field so a file can be loaded without
knowing in advance what it holds.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .bmodules import BGModule, FiniteBModule
from .groups import FiniteGroup
from .monomial import Matrix, MonomialMap
from .representations import Representation
from .semifield import Semifield, from_json, to_json


class FormatError(ValueError):
    pass


def _require(obj: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"missing field(s): {', '.join(missing)}")


# -- groups ---------------------------------------------------------------------

def group_to_json(g: FiniteGroup) -> dict:
    out = {"kind": "group", "order": g.order, "table": [list(r) for r in g.table], "names": list(g.names)}
    if g.label:
        out["label"] = g.label
    return out


def group_from_json(obj: dict) -> FiniteGroup:
    _require(obj, "order", "table")
    if len(obj["table"]) != obj["order"]:
        raise FormatError("table size does not match the order")
    return FiniteGroup(obj["table"], obj.get("names"), obj.get("label"))


# -- maps -------------------------------------------------------------------------

def monomial_to_json(m: MonomialMap) -> dict:
    return {"kind": "monomial", "tag": m.tag.value, "perm": list(m.perm),
            "scalars": [to_json(s) for s in m.scalars]}


def monomial_from_json(obj: dict, tag: Semifield | None = None) -> MonomialMap:
    _require(obj, "perm", "scalars")
    tag = tag or Semifield.parse(obj["tag"])
    return MonomialMap(tag, tuple(obj["perm"]), tuple(from_json(s, tag) for s in obj["scalars"]))


def matrix_to_json(a: Matrix) -> dict:
    return {"kind": "matrix", "tag": a.tag.value, "rows": a.rows, "cols": a.cols,
            "entries": [[to_json(x) for x in row] for row in a.entries]}


def matrix_from_json(obj: dict) -> Matrix:
    _require(obj, "tag", "rows", "cols", "entries")
    tag = Semifield.parse(obj["tag"])
    return Matrix(tag, obj["rows"], obj["cols"],
                  tuple(tuple(from_json(x, tag) for x in row) for row in obj["entries"]))


# -- representations ------------------------------------------------------------

def representation_to_json(v: Representation) -> dict:
    images = {}
    for x in v.group.elements:
        m = v.images[x]
        images[str(x)] = {"perm": list(m.perm), "scalars": [to_json(s) for s in m.scalars]}
    return {"kind": "representation", "group": group_to_json(v.group), "tag": v.tag.value,
            "dim": v.dim, "images": images}


def representation_from_json(obj: dict) -> Representation:
    _require(obj, "group", "tag", "dim", "images")
    g = group_from_json(obj["group"])
    tag = Semifield.parse(obj["tag"])
    imgs = obj["images"]
    if sorted(imgs, key=int) != [str(x) for x in g.elements]:
        raise FormatError("images must be given for every group element")
    return Representation(g, tag, obj["dim"], [monomial_from_json(imgs[str(x)], tag) for x in g.elements])


# -- lattices ---------------------------------------------------------------------

def lattice_to_json(m: FiniteBModule | BGModule) -> dict:
    mod = m.module if isinstance(m, BGModule) else m
    out: dict[str, Any] = {"kind": "lattice", "size": mod.size,
                           "leq": [[int(x) for x in row] for row in mod.leq.tolist()],
                           "names": list(mod.names)}
    if mod.masks is not None:
        out["masks"] = [int(x) for x in mod.masks.tolist()]
    if isinstance(m, BGModule):
        out["group"] = group_to_json(m.group)
        out["action"] = {str(g): list(row) for g, row in enumerate(m.action)}
    return out


def lattice_from_json(obj: dict, group: FiniteGroup | None = None) -> FiniteBModule | BGModule:
    _require(obj, "size", "leq")
    if len(obj["leq"]) != obj["size"]:
        raise FormatError("leq size does not match the declared size")
    if "masks" in obj:
        mod = FiniteBModule(None, obj.get("names"), masks=obj["masks"])
        if [[int(x) for x in r] for r in mod.leq.tolist()] != obj["leq"]:
            raise FormatError("masks and leq disagree")
    else:
        mod = FiniteBModule(obj["leq"], obj.get("names"))
    if "action" not in obj:
        return mod
    if "group" in obj:
        group = group_from_json(obj["group"])
    if group is None:
        raise FormatError("an action needs a group (inline or from --group)")
    act = obj["action"]
    if sorted(act, key=int) != [str(x) for x in group.elements]:
        raise FormatError("action must be given for every group element")
    return BGModule(mod, group, [act[str(x)] for x in group.elements])


# -- dispatch ---------------------------------------------------------------------

_LOADERS = {
    "group": group_from_json,
    "monomial": monomial_from_json,
    "matrix": matrix_from_json,
    "representation": representation_from_json,
    "lattice": lattice_from_json,
}


def from_document(obj: dict):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("expected a JSON object with a 'kind' field")
    try:
        loader = _LOADERS[obj["kind"]]
    except KeyError:
        raise FormatError(f"unknown kind {obj['kind']!r}") from None
    return loader(obj)


def to_document(x) -> dict:
    if isinstance(x, FiniteGroup):
        return group_to_json(x)
    if isinstance(x, MonomialMap):
        return monomial_to_json(x)
    if isinstance(x, Matrix):
        return matrix_to_json(x)
    if isinstance(x, Representation):
        return representation_to_json(x)
    if isinstance(x, (FiniteBModule, BGModule)):
        return lattice_to_json(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(x) -> str:
    return json.dumps(to_document(x), sort_keys=True)


def load(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return from_document(json.load(fh))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None


def save(x, path: str | Path) -> None:
    Path(path).write_text(dumps(x) + "\n", encoding="utf-8")
