"""Representations over F_p, Jordan-Hölder factor sequences and iso classes."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import BudgetExceeded, NonSplitFactor, NotEmbedding
from .linalg import (
    Matrix,
    Vector,
    block_diag,
    check_prime,
    general_linear_group,
    gl_order,
    kernel_basis,
    projective_points,
    quotient_action,
    restriction_action,
    vstack,
    all_matrices,
)
from .quiver import Kind, Quiver, simple_eigenvalue, simple_vertex, simples


@dataclass(frozen=True)
class Budget:
    """Enumeration limits; exceeding one raises :class:`BudgetExceeded`."""

    jh_nodes: int = 10**6
    group_order: int = 10**7
    matrix_tuples: int = 10**6

    @classmethod
    def from_env(cls) -> "Budget":
        base = cls()
        return cls(
            jh_nodes=int(os.environ.get("NCTOP_JH_BUDGET", base.jh_nodes)),
            group_order=int(os.environ.get("NCTOP_GROUP_BUDGET", base.group_order)),
            matrix_tuples=int(os.environ.get("NCTOP_TUPLE_BUDGET", base.matrix_tuples)),
        )


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Representation:
    """Per-vertex dimensions and per-arrow matrices (shape ``dim[target] x dim[source]``)."""

    quiver: Quiver = field(repr=False)
    p: int
    dim: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        q = self.quiver
        if len(self.dim) != len(q.vertices) or any(d < 0 for d in self.dim):
            raise ValueError("dimension vector does not match the quiver")
        if len(self.maps) != len(q.arrows):
            raise ValueError("need exactly one matrix per arrow")
        for a, m in zip(q.arrows, self.maps):
            want = (self.dim[q.vertex_index(a.target)], self.dim[q.vertex_index(a.source)])
            if m.shape != want:
                raise ValueError(f"arrow {a.id}: matrix has shape {m.shape}, expected {want}")
            if m.p != self.p:
                raise ValueError(f"arrow {a.id}: matrix is over F_{m.p}, expected F_{self.p}")

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def vertex_dim(self, v: str) -> int:
        return self.dim[self.quiver.vertex_index(v)]

    def arrow_map(self, arrow_id: str) -> Matrix:
        return self.maps[self.quiver.arrow_index(arrow_id)]

    def key(self) -> tuple:
        return (self.total_dim, self.dim, tuple(m.entries for m in self.maps))

    def __str__(self):
        maps = ", ".join(
            f"{a.id}={[list(r) for r in m.data]}" for a, m in zip(self.quiver.arrows, self.maps)
        )
        return f"Rep(dim={list(self.dim)}{', ' + maps if maps else ''})"


def representation(
    q: Quiver,
    p: int,
    dim: Sequence[int] | Mapping[str, int],
    maps: Sequence | Mapping | None = None,
) -> Representation:
    """Build a representation; ``maps`` is keyed by arrow id or given in arrow order.

    Missing maps default to zero.
    """
    check_prime(p)
    if isinstance(dim, Mapping):
        dim = [int(dim.get(v, 0)) for v in q.vertices]
    dim = tuple(int(d) for d in dim)
    if len(dim) != len(q.vertices):
        raise ValueError("dimension vector does not match the quiver")
    if maps is None:
        maps = {}
    if not isinstance(maps, Mapping):
        maps = {a.id: m for a, m in zip(q.arrows, maps)}
    built = []
    for a in q.arrows:
        r = dim[q.vertex_index(a.target)]
        c = dim[q.vertex_index(a.source)]
        m = maps.get(a.id)
        if m is None:
            built.append(Matrix.zeros(r, c, p))
        elif isinstance(m, Matrix):
            built.append(m)
        else:
            rows = [list(row) for row in m]
            if len(rows) != r or any(len(row) != c for row in rows):
                raise ValueError(
                    f"arrow {a.id}: matrix has shape "
                    f"{(len(rows), len(rows[0]) if rows else 0)}, expected {(r, c)}"
                )
            built.append(Matrix.from_rows(rows, p, cols=c))
    return Representation(q, p, dim, tuple(built))


def zero_rep(q: Quiver, p: int) -> Representation:
    return representation(q, p, [0] * len(q.vertices))


def simple_rep(q: Quiver, p: int, s: str) -> Representation:
    if q.kind is Kind.ONELOOP:
        lam = simple_eigenvalue(q, s, p)
        return representation(q, p, [1], [[[lam]]])
    v = simple_vertex(q, s)
    return representation(q, p, [int(u == v) for u in q.vertices])


def direct_sum(m: Representation, n: Representation) -> Representation:
    if m.quiver != n.quiver or m.p != n.p:
        raise ValueError("direct sum needs the same quiver and field")
    maps = tuple(block_diag(a, b) for a, b in zip(m.maps, n.maps))
    dim = tuple(x + y for x, y in zip(m.dim, n.dim))
    return Representation(m.quiver, m.p, dim, maps)


def dual(m: Representation) -> Representation:
    """Transpose representation on the opposite quiver."""
    return Representation(m.quiver.opposite(), m.p, m.dim, tuple(a.transpose() for a in m.maps))


def simple_sub_space(m: Representation, s: str) -> list[Vector]:
    """Basis of the vectors spanning a copy of ``s`` inside ``m``.

    For a vertex simple these are the vectors at that vertex killed by every
    outgoing arrow; for the one-loop quiver, the ``lambda``-eigenvectors.
    """
    q = m.quiver
    if q.kind is Kind.ONELOOP:
        lam = simple_eigenvalue(q, s, m.p)
        n = m.dim[0]
        return kernel_basis(m.maps[0] - Matrix.identity(n, m.p).scale(lam))
    v = simple_vertex(q, s)
    n = m.vertex_dim(v)
    outgoing = [m.maps[k] for k in q.arrows_from(v)]
    return kernel_basis(vstack(outgoing, n, m.p))


def _is_embedding(m: Representation, s: str, line: Sequence[int]) -> bool:
    q = m.quiver
    line = tuple(x % m.p for x in line)
    if not any(line):
        return False
    if q.kind is Kind.ONELOOP:
        if len(line) != m.dim[0]:
            return False
        lam = simple_eigenvalue(q, s, m.p)
        return m.maps[0].apply(line) == tuple((lam * x) % m.p for x in line)
    v = simple_vertex(q, s)
    if len(line) != m.vertex_dim(v):
        return False
    return all(not any(m.maps[k].apply(line)) for k in q.arrows_from(v))


def subspace_quotient(m: Representation, bases: Sequence[Sequence[Vector]]) -> Representation:
    """Quotient of ``m`` by the subrepresentation with per-vertex ``bases``."""
    q = m.quiver
    maps = []
    for a, mat in zip(q.arrows, m.maps):
        i, j = q.vertex_index(a.source), q.vertex_index(a.target)
        maps.append(quotient_action(mat, bases[i], bases[j]))
    dim = tuple(d - len(b) for d, b in zip(m.dim, bases))
    return Representation(q, m.p, dim, tuple(maps))


def subspace_restriction(m: Representation, bases: Sequence[Sequence[Vector]]) -> Representation:
    """The subrepresentation spanned by per-vertex ``bases`` (must be arrow-stable)."""
    q = m.quiver
    maps = []
    for a, mat in zip(q.arrows, m.maps):
        i, j = q.vertex_index(a.source), q.vertex_index(a.target)
        maps.append(restriction_action(mat, bases[i], bases[j]))
    dim = tuple(len(b) for b in bases)
    return Representation(q, m.p, dim, tuple(maps))


def quotient_by_simple_line(m: Representation, s: str, line: Sequence[int]) -> Representation:
    if not _is_embedding(m, s, line):
        raise NotEmbedding(f"{tuple(line)} does not span a copy of {s}")
    q = m.quiver
    where = 0 if q.kind is Kind.ONELOOP else q.vertex_index(simple_vertex(q, s))
    bases = [[tuple(line)] if k == where else [] for k in range(len(q.vertices))]
    return subspace_quotient(m, bases)


_JH_CACHE: dict[Representation, frozenset] = {}


def jh_sequences(m: Representation, budget: Budget | None = None) -> frozenset[tuple[str, ...]]:
    """Every bottom-to-top factor order realised by a Jordan-Hölder filtration.

    Exhaustive: every line in every simple socle component is tried and the
    quotient recursed on.
    """
    if m in _JH_CACHE:
        return _JH_CACHE[m]
    budget = budget or DEFAULT_BUDGET
    names = simples(m.quiver, m.p)
    nodes = 0

    def walk(x: Representation) -> frozenset:
        nonlocal nodes
        if x.total_dim == 0:
            return frozenset({()})
        if x in _JH_CACHE:
            return _JH_CACHE[x]
        nodes += 1
        if nodes > budget.jh_nodes:
            raise BudgetExceeded(f"Jordan-Hölder search exceeded {budget.jh_nodes} nodes")
        out = set()
        for s in names:
            for line in projective_points(simple_sub_space(x, s), x.p):
                rest = quotient_by_simple_line(x, s, line)
                out.update((s,) + tail for tail in walk(rest))
        if not out:
            raise NonSplitFactor(f"{x} has no split simple subrepresentation over F_{x.p}")
        _JH_CACHE[x] = frozenset(out)
        return _JH_CACHE[x]

    return walk(m)


def factor_multiset(m: Representation) -> tuple[str, ...]:
    """Sorted composition factors (independent of the filtration chosen)."""
    seqs = jh_sequences(m)
    return tuple(sorted(next(iter(seqs))))


def is_split(m: Representation) -> bool:
    try:
        jh_sequences(m)
    except NonSplitFactor:
        return False
    return True


def ext1_dim(q: Quiver, s: str, t: str, p: int) -> int:
    """Dimension of Ext^1(s, t), i.e. extensions ``0 -> t -> X -> s -> 0``."""
    if q.kind is Kind.ONELOOP:
        simple_eigenvalue(q, s, p), simple_eigenvalue(q, t, p)
        return int(s == t)
    check_prime(p)
    return q.arrow_count(simple_vertex(q, s), simple_vertex(q, t))


def group_order(q: Quiver, dim: Sequence[int], p: int) -> int:
    out = 1
    for d in dim:
        out *= gl_order(d, p)
    return out


def _group(q: Quiver, dim: Sequence[int], p: int, budget: Budget):
    order = group_order(q, dim, p)
    if order > budget.group_order:
        raise BudgetExceeded(f"GL(alpha) has order {order} > {budget.group_order}")
    return itertools.product(*(general_linear_group(d, p) for d in dim))


def iso_test(m: Representation, n: Representation, budget: Budget | None = None) -> bool:
    """Brute-force search for per-vertex invertible maps intertwining m and n."""
    if m.quiver != n.quiver or m.p != n.p:
        raise ValueError("isomorphism test needs the same quiver and field")
    if m.dim != n.dim:
        return False
    if m == n:
        return True
    q = m.quiver
    ends = [(q.vertex_index(a.source), q.vertex_index(a.target)) for a in q.arrows]
    for gs in _group(q, m.dim, m.p, budget or DEFAULT_BUDGET):
        if all(gs[j][0] @ ma == na @ gs[i][0] for (i, j), ma, na in zip(ends, m.maps, n.maps)):
            return True
    return False


def dimension_vectors(q: Quiver, max_total_dim: int, min_total_dim: int = 0) -> list[tuple[int, ...]]:
    vecs = [
        a for a in itertools.product(range(max_total_dim + 1), repeat=len(q.vertices))
        if min_total_dim <= sum(a) <= max_total_dim
    ]
    return sorted(vecs, key=lambda a: (sum(a), a))


def universe_slice(
    q: Quiver, p: int, dim: Sequence[int], budget: Budget | None = None
) -> list[tuple[Representation, int]]:
    """Iso-class representatives of dimension ``dim`` with their orbit sizes.

    The representative of an orbit is its lexicographically smallest matrix
    tuple; classes come back sorted by that tuple.
    """
    budget = budget or DEFAULT_BUDGET
    dim = tuple(dim)
    shapes = [
        (dim[q.vertex_index(a.target)], dim[q.vertex_index(a.source)]) for a in q.arrows
    ]
    count = p ** sum(r * c for r, c in shapes)
    if count > budget.matrix_tuples:
        raise BudgetExceeded(f"{count} matrix tuples > {budget.matrix_tuples}")
    group = list(_group(q, dim, p, budget))
    ends = [(q.vertex_index(a.source), q.vertex_index(a.target)) for a in q.arrows]
    seen: set = set()
    classes = []
    for maps in itertools.product(*(list(all_matrices(r, c, p)) for r, c in shapes)):
        if maps in seen:
            continue
        orbit = {
            tuple(gs[j][0] @ mat @ gs[i][1] for (i, j), mat in zip(ends, maps))
            for gs in group
        }
        seen |= orbit
        rep_maps = min(orbit, key=lambda t: tuple(m.entries for m in t))
        classes.append((Representation(q, p, dim, rep_maps), len(orbit)))
    classes.sort(key=lambda c: c[0].key())
    return classes


def enumerate_universe(
    q: Quiver,
    p: int,
    max_total_dim: int,
    split_only: bool = False,
    min_total_dim: int = 0,
    budget: Budget | None = None,
) -> list[Representation]:
    """One representative per iso class for every ``|alpha| <= max_total_dim``.

    ``split_only`` drops classes with a composition factor that is not a
    split simple (only possible on the one-loop quiver).
    """
    out = []
    for a in dimension_vectors(q, max_total_dim, min_total_dim):
        for m, _ in universe_slice(q, p, a, budget):
            if split_only and not is_split(m):
                continue
            out.append(m)
    return out
