import dataclasses

import pytest

from nctop.errors import InvalidCover, NotIdempotent
from nctop.kernel import (
    ALL_AXIOMS,
    AxiomId,
    Join,
    Leaf,
    Meet,
    Side,
    axioms_for,
    check_axiom,
    check_topology,
    eval_op_word,
    is_contractible,
    is_cover,
    is_idempotent,
    powerset_lattice,
    replay,
)


@pytest.fixture
def powerset():
    return powerset_lattice({1, 2, 3})


def _covers(L, elements):
    return [(a, b) for a in elements for b in elements if is_cover(L, (a, b))]


def test_axiom_ids():
    assert len(ALL_AXIOMS) == 18
    assert str(AxiomId.parse("A4-left")) == "A4-left"
    assert AxiomId.parse("A3-middle").side is Side.MIDDLE
    with pytest.raises(ValueError):
        AxiomId(3, Side.LEFT)
    with pytest.raises(ValueError):
        AxiomId(11, Side.LEFT)
    assert len(axioms_for("left")) == len(axioms_for("right")) == 10
    assert axioms_for("full") == list(ALL_AXIOMS)


def test_powerset_passes_everything(powerset):
    L, elements = powerset
    for r in check_topology(L, "full", elements, _covers(L, elements)):
        assert r.passed, (str(r.axiom), r.violations[:1])
        assert r.checked > 0


def test_broken_lattice_has_replayable_violation(powerset):
    L, elements = powerset
    # swapping meet and join breaks the absorption-style axioms
    broken = dataclasses.replace(L, wedge=L.vee, vee=L.wedge)
    reports = [check_axiom(broken, a, elements) for a in ALL_AXIOMS if a.family != 10]
    failing = [r for r in reports if not r.passed]
    assert failing
    for r in failing:
        assert replay(broken, r)
        assert not replay(L, r) or r.axiom.family == 9


def test_a9_vacuous_when_nothing_idempotent(powerset):
    L, _ = powerset
    odd = dataclasses.replace(L, wedge=lambda x, y: x ^ y if x != y else frozenset({9}))
    r = check_axiom(odd, AxiomId(9, Side.LEFT), [frozenset({1})])
    assert r.vacuous and r.checked == 0 and r.passed


def test_invalid_cover_rejected(powerset):
    L, elements = powerset
    with pytest.raises(InvalidCover):
        check_axiom(L, AxiomId(10, Side.LEFT), elements, [(frozenset({1}),)])


def test_idempotence_and_contraction(powerset):
    L, elements = powerset
    assert all(is_idempotent(L, x) for x in elements)
    pairs = [(a, b) for a in elements for b in elements]
    assert all(is_contractible(L, x, pairs) for x in elements)
    xor = dataclasses.replace(L, wedge=lambda x, y: x ^ y)
    with pytest.raises(NotIdempotent):
        is_contractible(xor, frozenset({1}), pairs)


def test_eval_op_word(powerset):
    L, _ = powerset
    a, b, c = frozenset({1}), frozenset({1, 2}), frozenset({2})
    w = Join(Meet(Leaf(a), Leaf(b)), Leaf(c))
    assert eval_op_word(L, w) == frozenset({1, 2})
    assert eval_op_word(L, Meet(Leaf(b), Leaf(c))) == c
