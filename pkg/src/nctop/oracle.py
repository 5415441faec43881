"""Brute-force oracles, deliberately independent of the row-reduction code.

Subspaces are materialised as frozensets of vectors and subrepresentations
as tuples of such sets, so every answer here comes from plain enumeration.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .quiver import Kind, Quiver, simples
from .rep import Representation, direct_sum, iso_test, representation, simple_rep

Space = frozenset


def _matvec(rows, v, p):
    return tuple(sum(a * b for a, b in zip(r, v)) % p for r in rows)


def _span(vectors, n: int, p: int) -> Space:
    out = {(0,) * n}
    for v in vectors:
        out = {tuple((x + c * y) % p for x, y in zip(u, v)) for u in out for c in range(p)}
    return frozenset(out)


@lru_cache(maxsize=None)
def all_subspaces(n: int, p: int) -> tuple[Space, ...]:
    vecs = list(itertools.product(range(p), repeat=n))
    found = {_span([], n, p)}
    frontier = set(found)
    while frontier:
        nxt = set()
        for s in frontier:
            for v in vecs:
                if v not in s:
                    t = _span(list(_basis_of(s, n, p)) + [v], n, p)
                    if t not in found:
                        found.add(t)
                        nxt.add(t)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def _basis_of(space: Space, n: int, p: int) -> list[tuple[int, ...]]:
    basis: list = []
    cur = _span([], n, p)
    for v in sorted(space):
        if v not in cur:
            basis.append(v)
            cur = _span(basis, n, p)
    return basis


def _dim(space: Space, p: int) -> int:
    d, size = 0, 1
    while size < len(space):
        size *= p
        d += 1
    return d


def subrepresentations(m: Representation) -> list[tuple[Space, ...]]:
    """Every arrow-stable tuple of per-vertex subspaces."""
    q, p = m.quiver, m.p
    ends = [(q.vertex_index(a.source), q.vertex_index(a.target)) for a in q.arrows]
    rows = [mat.data for mat in m.maps]
    out = []
    for tup in itertools.product(*(all_subspaces(d, p) for d in m.dim)):
        if all(
            _matvec(r, v, p) in tup[j] for (i, j), r in zip(ends, rows) for v in tup[i]
        ):
            out.append(tup)
    return out


def subrepresentation_bases(m: Representation, dim: Sequence[int]) -> list[list[list[tuple[int, ...]]]]:
    """Per-vertex bases of the subrepresentations with dimension vector ``dim``."""
    out = []
    for tup in subrepresentations(m):
        if tuple(_dim(s, m.p) for s in tup) == tuple(dim):
            out.append([_basis_of(s, d, m.p) for s, d in zip(tup, m.dim)])
    return out


def _step_factor(m: Representation, lower, upper) -> str | None:
    """Name of the simple ``upper / lower`` if it is a split simple, else None."""
    q, p = m.quiver, m.p
    grew = [k for k, (a, b) in enumerate(zip(lower, upper)) if len(b) > len(a)]
    if len(grew) != 1 or len(upper[grew[0]]) != p * len(lower[grew[0]]):
        return None
    k = grew[0]
    if q.kind is Kind.ACYCLIC:
        return f"S{q.vertices[k]}"
    v = next(x for x in upper[k] if x not in lower[k])
    mv = _matvec(m.maps[0].data, v, p)
    for lam in range(p):
        diff = tuple((a - lam * b) % p for a, b in zip(mv, v))
        if diff in lower[k]:
            return f"S{lam}"
    return None


def brute_force_sequences(m: Representation) -> frozenset[tuple[str, ...]]:
    """Factor orders of all complete chains of subrepresentations.

    Empty for a positive-dimensional representation with a non-split factor.
    """
    subs = subrepresentations(m)
    bottom = subs[0]
    top = tuple(frozenset(itertools.product(range(m.p), repeat=d)) for d in m.dim)
    size = {s: sum(_dim(x, m.p) for x in s) for s in subs}
    by_size: dict[int, list] = {}
    for s in subs:
        by_size.setdefault(size[s], []).append(s)

    @lru_cache(maxsize=None)
    def chains(lower) -> frozenset:
        if lower == top:
            return frozenset({()})
        out = set()
        for upper in by_size.get(size[lower] + 1, []):
            if all(a <= b for a, b in zip(lower, upper)):
                f = _step_factor(m, lower, upper)
                if f is not None:
                    out.update((f,) + rest for rest in chains(upper))
        return frozenset(out)

    return chains(bottom)


def all_representations(q: Quiver, p: int, dim: Sequence[int]):
    """Every matrix tuple of the given dimension vector (not up to isomorphism)."""
    shapes = [(dim[q.vertex_index(a.target)], dim[q.vertex_index(a.source)]) for a in q.arrows]
    per_arrow = [
        [
            [list(flat[r * c_:(r + 1) * c_]) for r in range(r_)]
            for flat in itertools.product(range(p), repeat=r_ * c_)
        ]
        for r_, c_ in shapes
    ]
    for maps in itertools.product(*per_arrow):
        yield representation(q, p, dim, list(maps))


def extension_exists(q: Quiver, s: str, t: str, p: int) -> bool:
    """Is there a non-split ``0 -> t -> X -> s -> 0``? Decided by enumerating every X."""
    S, T = simple_rep(q, p, s), simple_rep(q, p, t)
    split = direct_sum(T, S)
    for x in all_representations(q, p, split.dim):
        if (t, s) in brute_force_sequences(x) and not iso_test(x, split):
            return True
    return False


def fixture_simple_pairs(q: Quiver, p: int):
    names = simples(q, p)
    return list(itertools.product(names, repeat=2))
