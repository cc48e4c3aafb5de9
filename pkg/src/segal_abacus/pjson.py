"""JSON forms for presheaves and maps.

Element ids are flattened to canonical strings on write; a load/save
cycle is therefore stable byte for byte, with levels and action keys in
sorted order.
"""

from __future__ import annotations

import json

from .decalage import BottomSplitSSet, PointedSSet
from .presheaf import BiSSet, DSet, SMap, SigmaSet, TruncSSet, fmt_id


def _table(d: dict) -> dict:
    return {fmt_id(k): fmt_id(v) for k, v in d.items()}


def _lvl_key(lvl) -> str:
    if isinstance(lvl, tuple):
        return f"({lvl[0]},{lvl[1]})"
    return str(lvl)


def _parse_lvl(key: str):
    if key.startswith("("):
        i, j = key[1:-1].split(",")
        return int(i), int(j)
    return int(key)


def sset_to_dict(X: TruncSSet) -> dict:
    return {
        "shape": "sset",
        "trunc": X.trunc,
        "levels": {str(n): [fmt_id(x) for x in X.level(n)] for n in sorted(X.levels)},
        "actions": {
            **{f"d{k}@{n}": _table(X.faces[(n, k)]) for (n, k) in sorted(X.faces)},
            **{f"s{k}@{n}": _table(X.degens[(n, k)]) for (n, k) in sorted(X.degens)},
        },
    }


def sset_from_dict(data: dict) -> TruncSSet:
    levels = {int(n): tuple(xs) for n, xs in data["levels"].items()}
    faces, degens = {}, {}
    for key, table in data["actions"].items():
        kind, idx, n = key[0], key[1 : key.index("@")], int(key[key.index("@") + 1 :])
        (faces if kind == "d" else degens)[(n, int(idx))] = dict(table)
    return TruncSSet(data["trunc"], levels, faces, degens)


def smap_to_dict(F: SMap) -> dict:
    return {
        "shape": "smap",
        "source": sset_to_dict(F.source),
        "target": sset_to_dict(F.target),
        "levels": {str(n): _table(F.levels[n]) for n in sorted(F.levels)},
    }


def smap_from_dict(data: dict) -> SMap:
    return SMap(
        sset_from_dict(data["source"]),
        sset_from_dict(data["target"]),
        {int(n): dict(t) for n, t in data["levels"].items()},
    )


def _grid_actions(B, kinds) -> dict:
    out = {}
    for kind in kinds:
        store = getattr(B, kind)
        if kind in ("f", "ssub"):
            for lvl in sorted(store):
                out[f"{kind}@{_lvl_key(lvl)}"] = _table(store[lvl])
        else:
            for (lvl, k) in sorted(store):
                out[f"{kind}{k}@{_lvl_key(lvl)}"] = _table(store[(lvl, k)])
    return out


def _grid_levels(B) -> dict:
    return {
        _lvl_key(lvl): [fmt_id(x) for x in B.levels[lvl]]
        for lvl in sorted(B.levels, key=_lvl_key)
    }


def _parse_grid(data, kinds):
    levels = {_parse_lvl(key): tuple(xs) for key, xs in data["levels"].items()}
    stores = {kind: {} for kind in kinds}
    for key, table in data["actions"].items():
        head, at = key.split("@")
        lvl = _parse_lvl(at)
        if head in ("f", "ssub"):
            stores[head][lvl] = dict(table)
        else:
            kind, k = head[0], int(head[1:])
            stores[kind][(lvl, k)] = dict(table)
    return levels, stores


def bisset_to_dict(B: BiSSet) -> dict:
    return {
        "shape": "bisset",
        "trunc": B.trunc,
        "levels": _grid_levels(B),
        "actions": _grid_actions(B, ("e", "t", "d", "s")),
    }


def bisset_from_dict(data: dict) -> BiSSet:
    levels, st = _parse_grid(data, ("e", "t", "d", "s"))
    return BiSSet(data["trunc"], levels, st["e"], st["t"], st["d"], st["s"])


def dset_to_dict(B: DSet) -> dict:
    return {
        "shape": "dset",
        "trunc": B.trunc,
        "levels": _grid_levels(B),
        "actions": _grid_actions(B, ("e", "t", "d", "s", "f", "ssub")),
    }


def dset_from_dict(data: dict) -> DSet:
    levels, st = _parse_grid(data, ("e", "t", "d", "s", "f", "ssub"))
    return DSet(data["trunc"], levels, st["e"], st["t"], st["d"], st["s"],
                st["f"], st["ssub"])


def sigmaset_to_dict(A: SigmaSet) -> dict:
    return {
        "shape": "sigmaset",
        "bulk": bisset_to_dict(A.bulk),
        "pointing": {
            "levels": [fmt_id(c) for c in A.point_set],
            "map": _table(A.pointing),
        },
    }


def sigmaset_from_dict(data: dict) -> SigmaSet:
    return SigmaSet(
        bisset_from_dict(data["bulk"]),
        tuple(data["pointing"]["levels"]),
        dict(data["pointing"]["map"]),
    )


def pointed_to_dict(P: PointedSSet) -> dict:
    return {
        "shape": "pointed",
        "sset": sset_to_dict(P.sset),
        "pointing": {
            "levels": [fmt_id(c) for c in P.point_set],
            "map": _table(P.pointing),
        },
    }


def pointed_from_dict(data: dict) -> PointedSSet:
    return PointedSSet(
        sset_from_dict(data["sset"]),
        tuple(data["pointing"]["levels"]),
        dict(data["pointing"]["map"]),
    )


def split_to_dict(A: BottomSplitSSet) -> dict:
    return {
        "shape": "split",
        "sset": sset_to_dict(A.sset),
        "split": {str(n): _table(t) for n, t in sorted(A.split.items())},
    }


def split_from_dict(data: dict) -> BottomSplitSSet:
    return BottomSplitSSet(
        sset_from_dict(data["sset"]),
        {int(n): dict(t) for n, t in data["split"].items()},
    )


_TO = {
    TruncSSet: sset_to_dict,
    SMap: smap_to_dict,
    BiSSet: bisset_to_dict,
    DSet: dset_to_dict,
    SigmaSet: sigmaset_to_dict,
    PointedSSet: pointed_to_dict,
    BottomSplitSSet: split_to_dict,
}
_FROM = {
    "sset": sset_from_dict,
    "smap": smap_from_dict,
    "bisset": bisset_from_dict,
    "dset": dset_from_dict,
    "sigmaset": sigmaset_from_dict,
    "pointed": pointed_from_dict,
    "split": split_from_dict,
}


def to_dict(P) -> dict:
    for cls, fn in _TO.items():
        if isinstance(P, cls):
            return fn(P)
    raise TypeError(f"cannot serialize {type(P).__name__}")


def from_dict(data: dict):
    return _FROM[data["shape"]](data)


def dump(P, path: str):
    with open(path, "w") as fh:
        json.dump(to_dict(P), fh, sort_keys=True, indent=1)
        fh.write("\n")


def load(path: str):
    with open(path) as fh:
        return from_dict(json.load(fh))


def dumps(P) -> str:
    return json.dumps(to_dict(P), sort_keys=True, indent=1)
