"""JSON file formats and the word syntax used on the command line.

Word syntax: a flavor prefix ``l``, ``r`` or ``o`` followed by letters, each
one of ``{S1,S2}`` (explicit), ``{}`` (empty), ``*`` (all simples) or
``~{S0}`` (cofinite, one-loop quiver only).
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .errors import ParseError
from .opens import Flavor, Letter, Word
from .quiver import FIXTURES, Kind, Quiver, build_quiver, simples
from .rep import Representation, representation

FORMAT = 1


def quiver_to_dict(q: Quiver) -> dict:
    return {
        "format": FORMAT,
        "name": q.name,
        "vertices": list(q.vertices),
        "arrows": [{"from": a.source, "to": a.target, "id": a.id} for a in q.arrows],
    }


def quiver_from_dict(d: dict) -> Quiver:
    _check_format(d)
    try:
        return build_quiver(d["vertices"], d.get("arrows", []), name=d.get("name", ""))
    except KeyError as e:
        raise ParseError(f"quiver file is missing {e}") from None


def rep_to_dict(m: Representation) -> dict:
    q = m.quiver
    return {
        "format": FORMAT,
        "quiver": q.name,
        "p": m.p,
        "dim": {v: d for v, d in zip(q.vertices, m.dim)},
        "maps": {a.id: [list(r) for r in mat.data] for a, mat in zip(q.arrows, m.maps)},
    }


def rep_from_dict(d: dict, q: Quiver) -> Representation:
    _check_format(d)
    try:
        p = int(d["p"])
        dim = d["dim"]
        maps = d.get("maps", {})
    except KeyError as e:
        raise ParseError(f"representation file is missing {e}") from None
    if d.get("quiver") not in (None, "", q.name):
        raise ParseError(f"representation is for quiver {d['quiver']!r}, not {q.name!r}")
    unknown = set(maps) - {a.id for a in q.arrows}
    if unknown:
        raise ParseError(f"unknown arrows {sorted(unknown)}")
    try:
        return representation(q, p, dim if isinstance(dim, dict) else list(dim), maps)
    except ValueError as e:
        raise ParseError(str(e)) from None


def _check_format(d: Any):
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object")
    if d.get("format") != FORMAT:
        raise ParseError(f"unsupported format {d.get('format')!r}; expected {FORMAT}")


def dumps(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


def _load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from None


def load_quiver(source: str) -> Quiver:
    """Read a quiver file, or build a named fixture (``A2``, ``K2``, ``N2``, ``L1``)."""
    if source in FIXTURES and not Path(source).exists():
        return FIXTURES[source]()
    try:
        return quiver_from_dict(_load_json(source))
    except FileNotFoundError:
        raise ParseError(f"no quiver file or fixture named {source!r}") from None
    except (ValueError, TypeError) as e:
        raise ParseError(f"{source}: {e}") from None


def load_rep(path: str, q: Quiver) -> Representation:
    try:
        return rep_from_dict(_load_json(path), q)
    except FileNotFoundError:
        raise ParseError(f"no representation file {path!r}") from None


_LETTER = re.compile(r"\s*(~?\{[^}]*\}|\*)")


def parse_word(text: str, q: Quiver, p: int) -> Word:
    text = text.strip()
    if not text or text[0] not in "lro":
        raise ParseError(f"word must start with a flavor l, r or o: {text!r}")
    flavor = Flavor(text[0])
    rest = text[1:]
    names = simples(q, p)
    letters = []
    pos = 0
    while pos < len(rest):
        if not rest[pos:].strip():
            break
        m = _LETTER.match(rest, pos)
        if not m:
            raise ParseError(f"cannot parse letter at {rest[pos:]!r}")
        tok = m.group(1)
        pos = m.end()
        if tok == "*":
            letters.append(Letter(frozenset(names)))
            continue
        cofinite = tok.startswith("~")
        inner = tok.strip("~{}")
        members = frozenset(x.strip() for x in inner.split(",") if x.strip())
        bad = members - set(names)
        if bad:
            raise ParseError(f"unknown simples {sorted(bad)}; this quiver has {names}")
        if cofinite:
            if q.kind is not Kind.ONELOOP:
                raise ParseError("cofinite letters are only allowed on the one-loop quiver")
            letters.append(Letter.cofinite(members, names))
        else:
            letters.append(Letter(members))
    return Word(tuple(letters), flavor)


def format_word(w: Word) -> str:
    return str(w)
