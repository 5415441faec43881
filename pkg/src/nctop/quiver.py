"""Quivers and their simple representations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import CycleError, UnsupportedShape
from .linalg import check_prime


class Kind(str, Enum):
    ACYCLIC = "acyclic"
    ONELOOP = "oneloop"


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    id: str


@dataclass(frozen=True)
class Quiver:
    """Vertices and arrows; build instances with :func:`build_quiver`."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    kind: Kind
    name: str = ""

    def vertex_index(self, v: str) -> int:
        return self.vertices.index(v)

    def arrow_index(self, a: str) -> int:
        return [x.id for x in self.arrows].index(a)

    def arrows_from(self, v: str) -> list[int]:
        return [k for k, a in enumerate(self.arrows) if a.source == v]

    def arrow_count(self, i: str, j: str) -> int:
        return sum(1 for a in self.arrows if a.source == i and a.target == j)

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.target, a.source, a.id) for a in self.arrows),
            self.kind,
            f"{self.name}^op" if self.name else "",
        )


def _has_cycle(vertices: Sequence[str], arrows: Sequence[Arrow]) -> bool:
    indeg = {v: 0 for v in vertices}
    for a in arrows:
        indeg[a.target] += 1
    queue = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for a in arrows:
            if a.source == v:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
    return seen != len(vertices)


def build_quiver(
    vertices: Iterable,
    arrows: Iterable = (),
    name: str = "",
) -> Quiver:
    """Validate vertex/arrow data and classify it.

    ``arrows`` holds ``(source, target)`` or ``(source, target, id)`` tuples
    or ``{"from", "to", "id"}`` mappings. Missing ids become ``a1, a2, ...``.
    """
    verts = tuple(str(v) for v in vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("vertex ids must be unique")
    arrs = []
    for k, a in enumerate(arrows, start=1):
        if isinstance(a, Mapping):
            src, tgt, aid = a["from"], a["to"], a.get("id", f"a{k}")
        elif len(a) == 3:
            src, tgt, aid = a
        else:
            (src, tgt), aid = a, f"a{k}"
        src, tgt = str(src), str(tgt)
        if src not in verts or tgt not in verts:
            raise ValueError(f"arrow {aid} references an unknown vertex")
        arrs.append(Arrow(src, tgt, str(aid)))
    if len({a.id for a in arrs}) != len(arrs):
        raise ValueError("arrow ids must be unique")

    loops = [a for a in arrs if a.source == a.target]
    if loops:
        if len(verts) == 1 and len(arrs) == 1:
            return Quiver(verts, tuple(arrs), Kind.ONELOOP, name)
        raise UnsupportedShape(
            "loops are only supported on the one-vertex one-loop quiver"
        )
    if _has_cycle(verts, arrs):
        raise CycleError("quiver has a directed cycle")
    return Quiver(verts, tuple(arrs), Kind.ACYCLIC, name)


def simples(q: Quiver, p: int) -> list[str]:
    """Names of the split simples: ``S<vertex>`` or ``S<eigenvalue>``."""
    check_prime(p)
    if q.kind is Kind.ONELOOP:
        return [f"S{lam}" for lam in range(p)]
    return [f"S{v}" for v in q.vertices]


def simple_vertex(q: Quiver, s: str) -> str:
    if q.kind is not Kind.ACYCLIC or not s.startswith("S") or s[1:] not in q.vertices:
        raise ValueError(f"{s} is not a vertex simple of this quiver")
    return s[1:]


def simple_eigenvalue(q: Quiver, s: str, p: int) -> int:
    if q.kind is not Kind.ONELOOP or s not in simples(q, p):
        raise ValueError(f"{s} is not a split simple of the one-loop quiver over F_{p}")
    return int(s[1:])


# Fixtures used throughout the tests, CLI and scripts.

def quiver_a2() -> Quiver:
    return build_quiver(["1", "2"], [("1", "2", "a")], name="A2")


def quiver_k2() -> Quiver:
    return build_quiver(["1", "2"], [("1", "2", "a"), ("1", "2", "b")], name="K2")


def quiver_no_arrows(n: int = 2) -> Quiver:
    return build_quiver([str(i) for i in range(1, n + 1)], [], name=f"N{n}")


def quiver_one_loop() -> Quiver:
    return build_quiver(["1"], [("1", "1", "x")], name="L1")


FIXTURES = {
    "A2": quiver_a2,
    "K2": quiver_k2,
    "N2": quiver_no_arrows,
    "L1": quiver_one_loop,
}
