"""The composition monoid of an acyclic quiver as a word-rewriting system.

Words are tuples of vertex ids, bottom factor leftmost: the word ``(2, 1)``
stands for ``R_2 * R_1``, whose points are the representations with a
filtration whose factors read ``S_2, S_1`` from the bottom. Relations are
unoriented; two words are equal when one is reachable from the other by
substituting either side of a relation anywhere in the word.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import UnsupportedShape
from .opens import Flavor, Universe, Word, word
from .quiver import Kind, Quiver
from .rep import Budget, Representation, iso_test, jh_sequences, universe_slice

MonoidWord = tuple[str, ...]

CAVEAT = "points over F_p of iso classes, not closed subvarieties over an algebraically closed field"


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[tuple[MonoidWord, MonoidWord], ...]

    def __post_init__(self):
        for lhs, rhs in self.relations:
            if Counter(lhs) != Counter(rhs):
                raise ValueError(f"relation {lhs} = {rhs} changes the generator multiset")

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)


def fmt(v: Sequence[str]) -> str:
    return "".join(f"R{i}" for i in v) or "1"


def parse_monoid_word(text: str) -> MonoidWord:
    """``"R2R2R1"`` -> ``("2", "2", "1")``; ``"1"`` or ``""`` is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    parts = text.split("R")
    if parts[0] != "" or any(not p for p in parts[1:]):
        raise ValueError(f"cannot parse monoid word {text!r}")
    return tuple(p.strip("*") for p in parts[1:])


def relations_from_quiver(q: Quiver) -> RelationSet:
    """Commutation for arrow-free pairs, the two braid-like families otherwise."""
    if q.kind is not Kind.ACYCLIC:
        raise UnsupportedShape("the composition monoid needs a quiver without oriented cycles")
    rels = []
    for i, j in itertools.combinations(q.vertices, 2):
        ij, ji = q.arrow_count(i, j), q.arrow_count(j, i)
        if ij == 0 and ji == 0:
            rels.append(((i, j), (j, i)))
            continue
        # orient so that there are no arrows i -> j and n arrows j -> i
        if ji == 0:
            i, j, ji = j, i, ij
        n = ji
        rels.append(((i,) * (n + 1) + (j,), (i,) * n + (j, i)))
        rels.append(((i,) + (j,) * (n + 1), (j, i) + (j,) * n))
    return RelationSet(tuple(rels))


def _neighbours(v: MonoidWord, r: RelationSet):
    for lhs, rhs in r:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            k = len(a)
            for pos in range(len(v) - k + 1):
                if v[pos:pos + k] == a:
                    yield v[:pos] + b + v[pos + k:]


@lru_cache(maxsize=None)
def equivalence_class(v: MonoidWord, r: RelationSet) -> frozenset[MonoidWord]:
    """BFS closure; finite because relations preserve the letter multiset."""
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(cur, r):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def monoid_eq(v: Sequence[str], v2: Sequence[str], r: RelationSet) -> bool:
    v, v2 = tuple(v), tuple(v2)
    if Counter(v) != Counter(v2):
        return False
    return v2 in equivalence_class(v, r)


def exists_prefix_rewrite(v: Sequence[str], prefix: Sequence[str], r: RelationSet, side: str = "left") -> bool:
    """Can ``v`` be rewritten to start (``left``) or end (``right``) with ``prefix``?"""
    prefix = tuple(prefix)
    if len(prefix) > len(v):
        return False
    k = len(prefix)
    for u in equivalence_class(tuple(v), r):
        if (u[:k] if side == "left" else u[len(u) - k:]) == prefix:
            return True
    return False


def word_dim(q: Quiver, v: Sequence[str]) -> tuple[int, ...]:
    return tuple(sum(1 for x in v if x == u) for u in q.vertices)


@dataclass(frozen=True)
class SemanticSet:
    dim: tuple[int, ...]
    classes: tuple[Representation, ...]

    def __len__(self):
        return len(self.classes)

    def __contains__(self, m):
        return m in self.classes

    def __le__(self, other: "SemanticSet"):
        return set(self.classes) <= set(other.classes)

    def __lt__(self, other: "SemanticSet"):
        return set(self.classes) < set(other.classes)


def semantic_set(v: Sequence[str], q: Quiver, p: int, budget: Budget | None = None) -> SemanticSet:
    """Iso classes with a filtration whose factors read ``S_{v_1}, ..., S_{v_u}`` bottom-up."""
    dim = word_dim(q, v)
    target = tuple(f"S{x}" for x in v)
    classes = tuple(
        m for m, _ in universe_slice(q, p, dim, budget) if target in jh_sequences(m)
    )
    return SemanticSet(dim, classes)


@dataclass
class RelationCheck:
    lhs: MonoidWord
    rhs: MonoidWord
    ok: bool
    only_lhs: list[Representation] = field(default_factory=list)
    only_rhs: list[Representation] = field(default_factory=list)


def check_relation_semantics(r: RelationSet, q: Quiver, p: int, budget: Budget | None = None) -> list[RelationCheck]:
    out = []
    for lhs, rhs in r:
        a, b = semantic_set(lhs, q, p, budget), semantic_set(rhs, q, p, budget)
        sa, sb = set(a.classes), set(b.classes)
        out.append(RelationCheck(
            lhs, rhs, sa == sb,
            sorted(sa - sb, key=Representation.key),
            sorted(sb - sa, key=Representation.key),
        ))
    return out


def extension_product(
    sub_classes: Sequence[Representation],
    quot_classes: Sequence[Representation],
    q: Quiver,
    p: int,
    budget: Budget | None = None,
) -> list[Representation]:
    """Iso classes X with a subrepresentation in ``sub_classes`` and quotient in ``quot_classes``.

    Decided by running over all arrow-stable subspace tuples of every X.
    """
    from .oracle import subrepresentation_bases
    from .rep import subspace_quotient, subspace_restriction

    if not sub_classes or not quot_classes:
        return []
    a, b = sub_classes[0].dim, quot_classes[0].dim
    dim = tuple(x + y for x, y in zip(a, b))
    out = []
    for x, _ in universe_slice(q, p, dim, budget):
        for bases in subrepresentation_bases(x, a):
            sub = subspace_restriction(x, bases)
            quo = subspace_quotient(x, bases)
            if any(iso_test(sub, s, budget) for s in sub_classes) and any(
                iso_test(quo, t, budget) for t in quot_classes
            ):
                out.append(x)
                break
    return out


def _side(flavor: Flavor | str) -> str:
    flavor = Flavor(flavor)
    if flavor is Flavor.SCATTERED:
        raise ValueError("only the one-sided flavors have a monoid description")
    return "left" if flavor is Flavor.LEFT else "right"


def singleton_vertices(w: Word) -> MonoidWord:
    out = []
    for letter in w.letters:
        if len(letter.simples) != 1:
            raise ValueError(f"{w} is not a word of single simples")
        (s,) = letter.simples
        out.append(s[1:])
    return tuple(out)


@dataclass
class Prop2Report:
    word: Word
    relations: RelationSet
    checked: int
    disagreements: list[tuple[Representation, bool, bool]] = field(default_factory=list)
    max_dim: int = 0

    @property
    def agree(self) -> bool:
        return not self.disagreements


def check_prop2(w: Word, q: Quiver, p: int, universe, flavor: Flavor | str | None = None) -> Prop2Report:
    """Membership versus rewritability of some factor order to start (end) with ``w``."""
    flavor = Flavor(flavor or w.flavor)
    side = _side(flavor)
    w = Word(w.letters, flavor)
    target = singleton_vertices(w)
    r = relations_from_quiver(q)
    u = universe if isinstance(universe, Universe) else Universe(universe)
    report = Prop2Report(w, r, len(u), max_dim=max((m.total_dim for m in u.reps), default=0))
    for i, m in enumerate(u.reps):
        direct = u.member(i, w)
        via_monoid = any(
            exists_prefix_rewrite(tuple(s[1:] for s in seq), target, r, side)
            for seq in u.seqs[i]
        )
        if direct != via_monoid:
            report.disagreements.append((m, direct, via_monoid))
    return report


@dataclass
class Prop3Report:
    w: Word
    w2: Word
    star_len_bound: int
    monoid_equiv: bool
    universe_equiv: bool
    scanned: int
    monoid_witness: MonoidWord | None = None
    universe_witness: Representation | None = None
    note: str = "monoid side is relative to the listed relations only"

    @property
    def agree(self) -> bool:
        return self.monoid_equiv == self.universe_equiv


def star_words(q: Quiver, max_len: int, containing: Counter | None = None):
    containing = containing or Counter()
    for k in range(max_len + 1):
        for v in itertools.product(q.vertices, repeat=k):
            c = Counter(v)
            if all(c[x] >= n for x, n in containing.items()):
                yield v


def check_prop3(w: Word, w2: Word, q: Quiver, p: int, universe, star_len_bound: int) -> Prop3Report:
    """Compare monoid-level and universe-level equivalence of two words of single simples."""
    side = _side(w.flavor)
    if w2.flavor != w.flavor:
        raise ValueError("both words need the same flavor")
    r = relations_from_quiver(q)
    a, b = singleton_vertices(w), singleton_vertices(w2)
    need = Counter(a) | Counter(b)
    monoid_ok, witness, scanned = True, None, 0
    for v in star_words(q, star_len_bound, need):
        scanned += 1
        if exists_prefix_rewrite(v, a, r, side) != exists_prefix_rewrite(v, b, r, side):
            monoid_ok, witness = False, v
            break
    u = universe if isinstance(universe, Universe) else Universe(universe)
    uni_wit = u.counterexample(w, w2) or u.counterexample(w2, w)
    return Prop3Report(w, w2, star_len_bound, monoid_ok, uni_wit is None, scanned, witness, uni_wit)


def singleton_words(q: Quiver, max_len: int, flavor: Flavor | str) -> list[Word]:
    return [
        word(flavor, *({f"S{x}"} for x in v))
        for k in range(1, max_len + 1)
        for v in itertools.product(q.vertices, repeat=k)
    ]
