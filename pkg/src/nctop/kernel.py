"""Generic checker for the axioms (A1)-(A10) of one-sided non-commutative topologies.

A :class:`LatticeInstance` bundles the order, the equivalence, the constants
and the two operations. Quantifiers are instantiated over explicit finite
samples, so a passing report means "no counterexample at this scale".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Sequence, Union

from .errors import InvalidCover, NotIdempotent


class Side(str, Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"


MIDDLE_ONLY = frozenset({3, 7})


@dataclass(frozen=True, order=True)
class AxiomId:
    family: int
    side: Side

    def __post_init__(self):
        if not 1 <= self.family <= 10:
            raise ValueError(f"no axiom A{self.family}")
        if (self.family in MIDDLE_ONLY) != (self.side is Side.MIDDLE):
            raise ValueError(f"A{self.family} has no {self.side.value} column")

    def __str__(self):
        return f"A{self.family}-{self.side.value}"

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        fam, side = text.split("-")
        return cls(int(fam.lstrip("Aa")), Side(side))


ALL_AXIOMS: tuple[AxiomId, ...] = tuple(
    AxiomId(f, s)
    for f in range(1, 11)
    for s in ((Side.MIDDLE,) if f in MIDDLE_ONLY else (Side.LEFT, Side.RIGHT))
)

COLUMNS = {
    "left": (Side.LEFT, Side.MIDDLE),
    "right": (Side.MIDDLE, Side.RIGHT),
    "full": (Side.LEFT, Side.MIDDLE, Side.RIGHT),
}


def axioms_for(kind: str) -> list[AxiomId]:
    """Axioms a ``left``, ``right`` or ``full`` topology must satisfy."""
    return [a for a in ALL_AXIOMS if a.side in COLUMNS[kind]]


@dataclass
class LatticeInstance:
    leq: Callable[[Any, Any], bool]
    eq: Callable[[Any, Any], bool]
    zero: Any
    one: Any
    wedge: Callable[[Any, Any], Any]
    vee: Callable[[Any, Any], Any]
    # witness(x, y): some object certifying that x <= y fails, or None
    witness: Callable[[Any, Any], Any] | None = None
    name: str = ""


@dataclass(frozen=True)
class Violation:
    args: tuple
    detail: str
    lhs: Any = None
    rhs: Any = None
    witness: Any = None


@dataclass
class AxiomReport:
    axiom: AxiomId
    checked: int
    violations: list[Violation] = field(default_factory=list)
    sample_size: int = 0
    vacuous: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations


def _fail(L: LatticeInstance, args, detail, lhs, rhs, relation) -> Violation:
    wit = None
    if L.witness is not None:
        wit = L.witness(lhs, rhs)
        if wit is None and relation == "eq":
            wit = L.witness(rhs, lhs)
    return Violation(tuple(args), detail, lhs, rhs, wit)


def evaluate(L: LatticeInstance, axiom: AxiomId, args: Sequence) -> Violation | None:
    """Check one instance of ``axiom``; return the violation or None."""
    W, V, one, zero = L.wedge, L.vee, L.one, L.zero
    left = axiom.side is Side.LEFT
    fam = axiom.family

    def leq(lhs, rhs, text):
        return None if L.leq(lhs, rhs) else _fail(L, args, text, lhs, rhs, "leq")

    def eq(lhs, rhs, text):
        return None if L.eq(lhs, rhs) else _fail(L, args, text, lhs, rhs, "eq")

    if fam == 1:
        x, y = args
        return leq(W(x, y), x, "x^y <= x") if left else leq(W(x, y), y, "x^y <= y")
    if fam == 2:
        (x,) = args
        if left:
            return eq(W(x, one), x, "x^1 = x") or eq(W(x, zero), zero, "x^0 = 0")
        return eq(W(one, x), x, "1^x = x") or eq(W(zero, x), zero, "0^x = 0")
    if fam == 3:
        x, y, z = args
        return eq(W(W(x, y), z), W(x, W(y, z)), "(x^y)^z = x^(y^z)")
    if fam == 4:
        x, y, z = args
        if not L.leq(x, y):
            return None
        if left:
            return leq(W(z, x), W(z, y), "x<=y => z^x <= z^y")
        return leq(W(x, z), W(y, z), "x<=y => x^z <= y^z")
    if fam == 5:
        x, y = args
        return leq(x, V(x, y), "x <= xvy") if left else leq(y, V(x, y), "y <= xvy")
    if fam == 6:
        (x,) = args
        if left:
            return eq(V(x, one), one, "xv1 = 1") or eq(V(x, zero), x, "xv0 = x")
        return eq(V(one, x), one, "1vx = 1") or eq(V(zero, x), x, "0vx = x")
    if fam == 7:
        x, y, z = args
        return eq(V(V(x, y), z), V(x, V(y, z)), "(xvy)vz = xv(yvz)")
    if fam == 8:
        x, y, z = args
        if not L.leq(x, y):
            return None
        if left:
            return leq(V(x, z), V(y, z), "x<=y => xvz <= yvz")
        return leq(V(z, x), V(z, y), "x<=y => zvx <= zvy")
    if fam == 9:
        a, b = args
        if left:
            return leq(V(a, W(a, b)), W(V(a, a), b), "av(a^b) <= (ava)^b")
        return leq(V(a, W(b, a)), W(V(a, b), a), "av(b^a) <= (avb)^a")
    if fam == 10:
        x, cover = args
        parts = [W(x, lam) if left else W(lam, x) for lam in cover]
        joined = parts[0]
        for part in parts[1:]:
            joined = V(joined, part)
        text = "x = (x^l1)v...v(x^ln)" if left else "x = (l1^x)v...v(ln^x)"
        return eq(x, joined, text)
    raise ValueError(axiom)


def is_cover(L: LatticeInstance, cover: Sequence) -> bool:
    if not cover:
        return False
    joined = cover[0]
    for lam in cover[1:]:
        joined = L.vee(joined, lam)
    return L.eq(joined, L.one)


def is_idempotent(L: LatticeInstance, x) -> bool:
    return L.eq(L.wedge(x, x), x)


def _instances(L: LatticeInstance, axiom: AxiomId, sample: Sequence, covers: Sequence):
    fam = axiom.family
    if fam in (2, 6):
        return [(x,) for x in sample]
    if fam in (1, 5):
        return list(itertools.product(sample, repeat=2))
    if fam in (3, 4, 7, 8):
        return list(itertools.product(sample, repeat=3))
    if fam == 9:
        idem = [x for x in sample if is_idempotent(L, x)]
        return [(a, b) for a in idem for b in idem if L.leq(a, b)]
    return [(x, tuple(c)) for x in sample for c in covers]


def check_axiom(
    L: LatticeInstance,
    axiom: AxiomId,
    sample: Sequence,
    covers: Iterable[Sequence] = (),
) -> AxiomReport:
    """Instantiate ``axiom`` over ``sample`` (and ``covers`` for A10).

    A9 ranges over idempotent pairs ``a <= b`` drawn from the sample; the
    report is flagged ``vacuous`` when there are none.
    """
    covers = [tuple(c) for c in covers]
    if axiom.family == 10:
        for c in covers:
            if not is_cover(L, c):
                raise InvalidCover(f"{c} does not join to 1")
    instances = _instances(L, axiom, sample, covers)
    report = AxiomReport(axiom, len(instances), sample_size=len(sample))
    report.vacuous = not instances
    for args in instances:
        v = evaluate(L, axiom, args)
        if v is not None:
            report.violations.append(v)
    return report


def replay(L: LatticeInstance, report: AxiomReport) -> bool:
    """True iff every recorded violation is reproduced by a fresh evaluation."""
    return all(evaluate(L, report.axiom, v.args) is not None for v in report.violations)


def check_topology(
    L: LatticeInstance, kind: str, sample: Sequence, covers: Iterable[Sequence] = ()
) -> list[AxiomReport]:
    covers = list(covers)
    return [check_axiom(L, a, sample, covers) for a in axioms_for(kind)]


def is_contractible(L: LatticeInstance, x, pair_sample: Iterable[tuple]) -> bool:
    """Contraction identity over the sampled pairs; meaningful only relative to the sample."""
    if not is_idempotent(L, x):
        raise NotIdempotent(f"{x} is not idempotent")
    for l1, l2 in pair_sample:
        if L.leq(x, L.vee(l1, l2)):
            if not L.eq(x, L.vee(L.wedge(x, l1), L.wedge(x, l2))):
                return False
    return True


@dataclass(frozen=True)
class Leaf:
    value: Any


@dataclass(frozen=True)
class Meet:
    left: "OpWord"
    right: "OpWord"


@dataclass(frozen=True)
class Join:
    left: "OpWord"
    right: "OpWord"


OpWord = Union[Leaf, Meet, Join]


def eval_op_word(L: LatticeInstance, w: OpWord):
    if isinstance(w, Leaf):
        return w.value
    a, b = eval_op_word(L, w.left), eval_op_word(L, w.right)
    return L.wedge(a, b) if isinstance(w, Meet) else L.vee(a, b)


def powerset_lattice(base: Iterable) -> tuple[LatticeInstance, list[frozenset]]:
    """Subsets of ``base`` ordered by inclusion."""
    base = sorted(base)
    elements = [
        frozenset(c) for k in range(len(base) + 1) for c in itertools.combinations(base, k)
    ]
    L = LatticeInstance(
        leq=lambda x, y: x <= y,
        eq=lambda x, y: x == y,
        zero=frozenset(),
        one=frozenset(base),
        wedge=lambda x, y: x & y,
        vee=lambda x, y: x | y,
        witness=lambda x, y: next(iter(sorted(x - y)), None),
        name=f"powerset{base}",
    )
    return L, elements
