"""JSON file formats for quivers with relations and their representations."""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .linalg import QQ, field_from_tag
from .quiver import Arrow, Quiver, QuiverPresentation, make_AA, make_AA3c, make_B8, \
    make_B8_opposite, make_EE6
from .reps import Rep


def quiver_from_dict(d: dict) -> QuiverPresentation:
    """Parse ``{"vertices": [...], "arrows": [{"id","tail","head"}], "relations": [[ids]]}``."""
    if not isinstance(d, dict):
        raise ValueError("quiver must be a JSON object")
    try:
        vertices = [str(v) for v in d["vertices"]]
        arrows = [Arrow(str(a["id"]), str(a["tail"]), str(a["head"])) for a in d["arrows"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quiver: missing field {exc}") from None
    rels = d.get("relations", [])
    if not isinstance(rels, list) or any(not isinstance(r, list) for r in rels):
        raise ValueError("relations must be a list of arrow-id lists")
    return QuiverPresentation(Quiver(vertices, arrows), [[str(a) for a in r] for r in rels])


def quiver_to_dict(pres: QuiverPresentation) -> dict:
    return pres.to_dict()


def load_quiver(path: str) -> QuiverPresentation:
    with open(path, encoding="utf-8") as fh:
        return quiver_from_dict(json.load(fh))


def _entry(F, x):
    if F is QQ:
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise ValueError(f"rational entries must be integers or 'num/den' strings, got {x!r}")
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational entry {x!r}") from None
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < F.p:
        raise ValueError(f"F_{F.p} entries must be integers in 0..{F.p - 1}, got {x!r}")
    return x


def rep_from_dict(d: dict, base_dir: str = ".") -> Rep:
    """Parse a representation; ``quiver`` may be inline or a path relative to ``base_dir``."""
    if not isinstance(d, dict):
        raise ValueError("representation must be a JSON object")
    q = d.get("quiver")
    if isinstance(q, str):
        pres = load_quiver(os.path.join(base_dir, q))
    elif isinstance(q, dict):
        pres = quiver_from_dict(q)
    else:
        raise ValueError("representation needs an inline quiver or a quiver file reference")
    F = field_from_tag(str(d.get("field", "Q")))
    dims = {str(k): int(v) for k, v in d.get("dims", {}).items()}
    maps = {}
    for a, m in d.get("maps", {}).items():
        if not isinstance(m, list) or any(not isinstance(r, list) for r in m):
            raise ValueError(f"matrix for arrow {a!r} must be a list of rows")
        maps[str(a)] = [[_entry(F, x) for x in row] for row in m]
    return Rep(pres, dims, maps, F)


def rep_to_dict(V: Rep) -> dict:
    return V.to_dict()


def load_rep(path: str) -> Rep:
    with open(path, encoding="utf-8") as fh:
        return rep_from_dict(json.load(fh), os.path.dirname(os.path.abspath(path)))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def builtin(spec: str) -> QuiverPresentation:
    """Built-in presentations: ``AA:<n>``, ``AA3c``, ``EE6``, ``B8``, ``B8op``."""
    s = spec.strip()
    if s.upper().startswith("AA:"):
        try:
            n = int(s[3:])
        except ValueError:
            raise ValueError(f"bad builtin {spec!r}: expected AA:<n>") from None
        return make_AA(n)
    table = {"AA3C": make_AA3c, "EE6": make_EE6, "B8": make_B8, "B8OP": make_B8_opposite}
    try:
        return table[s.upper()]()
    except KeyError:
        raise ValueError(f"unknown builtin {spec!r}; expected AA:<n>, AA3c, EE6, B8 or B8op") from None
