"""Acceptance criteria at desk scale (p = 2, universe dim <= 3, words of length <= 2).

Each test records a sub-result; the terminal summary prints one pass/fail
line per criterion.
"""

import itertools
import time

import pytest

from nctop.errors import NonSplitFactor
from nctop.kernel import ALL_AXIOMS, AxiomId, Side, axioms_for, check_axiom, is_cover, is_idempotent, powerset_lattice
from nctop.monoid import (
    check_prop2,
    check_prop3,
    check_relation_semantics,
    monoid_eq,
    parse_monoid_word,
    relations_from_quiver,
    semantic_set,
    singleton_words,
)
from nctop.opens import Word, all_letters, as_element, as_lattice, equiv, member, one, wedge, word
from nctop.oracle import brute_force_sequences, extension_exists, fixture_simple_pairs
from nctop.quiver import FIXTURES
from nctop.rep import enumerate_universe, ext1_dim, jh_sequences, universe_slice

P = 2
MAX_DIM = 3
WORD_LEN = 2


def _required_failures(q, flavor, universe):
    lat = as_lattice(q, P, flavor, universe)
    sample, covers = lat.sample(WORD_LEN), lat.covers()
    kind = "left" if flavor == "l" else "right"
    out = []
    for ax in axioms_for(kind):
        r = check_axiom(lat, ax, sample, covers)
        if not r.passed:
            out.append((ax, r))
    return out


@pytest.mark.parametrize("name", ["A2", "K2", "N2", "L1"])
def test_c01_axiom_suite(name, universe, record):
    q = FIXTURES[name]()
    start = time.perf_counter()
    u = universe(q, MAX_DIM)
    failures = {fl: _required_failures(q, fl, u) for fl in ("l", "r")}
    elapsed = time.perf_counter() - start
    bad = [f"{fl}:{ax}x{len(r.violations)}" for fl, fs in failures.items() for ax, r in fs]
    ok = not bad and elapsed < 120
    record(1, name, ok, f"{elapsed:.0f}s" + (", " + " ".join(bad) if bad else ""))
    assert not bad, f"required-column violations on {name}: {bad}"
    assert elapsed < 120


def test_c02_padding_is_proper_yet_equivalent(a2, x_ind, universe, record):
    w = word("l", {"S2"}, {"S1"})
    padded = wedge(w, one(a2, P))
    slice_11 = [m for m, _ in universe_slice(a2, P, (1, 1))]
    raw_w = {m for m in slice_11 if member(m, w)}
    raw_padded = {m for m in slice_11 if member(m, padded)}
    witness_ok = x_ind in raw_w - raw_padded and x_ind.total_dim == len(w)
    same = equiv(padded, w, universe(a2, MAX_DIM))
    ok = raw_padded < raw_w and witness_ok and same
    record(2, "A2", ok, f"|raw w|={len(raw_w)}, |raw w^1|={len(raw_padded)}, equiv={same}")
    assert ok


def test_c03_noncommutative_on_a2(a2, x_ind, universe, record):
    assert ext1_dim(a2, "S2", "S1", P) == 0 and ext1_dim(a2, "S1", "S2", P) != 0
    u = universe(a2, MAX_DIM)
    x, y = word("l", {"S2"}, {"S1"}), word("l", {"S1"}, {"S2"})
    wit = u.counterexample(x, y) or u.counterexample(y, x)
    ok = not equiv(x, y, u) and wit == x_ind
    record(3, "A2", ok, f"witness {wit}")
    assert ok


def test_c04_scattered_flavor_fails(a2, x_ind, universe, record):
    lat = as_lattice(a2, P, "o", universe(a2, MAX_DIM))
    r = check_axiom(lat, AxiomId(2, Side.LEFT), lat.sample(WORD_LEN))
    x = as_element(word("o", {"S1"}))
    hit = [v for v in r.violations if v.args == (x,)]
    ok = bool(hit) and hit[0].witness == x_ind
    record(4, "A2/o", ok, f"{len(r.violations)} violations of x^1 = x, witness {hit[0].witness if hit else None}")
    assert ok


@pytest.mark.parametrize("name", ["A2", "K2"])
def test_c05_relation_semantics(name, record):
    q = FIXTURES[name]()
    checks = check_relation_semantics(relations_from_quiver(q), q, P)
    ok = bool(checks) and all(c.ok for c in checks)
    record(5, f"{name} relations", ok, f"{sum(c.ok for c in checks)}/{len(checks)}")
    assert ok


def test_c05_noncommuting_generators(a2, x_ind, record):
    r = relations_from_quiver(a2)
    v12, v21 = parse_monoid_word("R1R2"), parse_monoid_word("R2R1")
    big, small = semantic_set(v21, a2, P), semantic_set(v12, a2, P)
    ok = not monoid_eq(v12, v21, r) and small < big and x_ind in set(big.classes) - set(small.classes)
    record(5, "A2 R1R2 vs R2R1", ok)
    assert ok


@pytest.mark.parametrize("name", ["A2", "N2"])
@pytest.mark.parametrize("flavor", ["l", "r"])
def test_c06_prop2(name, flavor, universe, record):
    q = FIXTURES[name]()
    u = universe(q, MAX_DIM)
    bad = [str(w) for w in singleton_words(q, WORD_LEN, flavor) if not check_prop2(w, q, P, u).agree]
    record(6, f"{name}/{flavor}", not bad, " ".join(bad))
    assert not bad


@pytest.mark.parametrize("name", ["A2", "N2"])
@pytest.mark.parametrize("flavor", ["l", "r"])
def test_c07_prop3(name, flavor, universe, record):
    q = FIXTURES[name]()
    u = universe(q, MAX_DIM)
    words = singleton_words(q, WORD_LEN, flavor)
    bad = []
    for w, w2 in itertools.combinations(words, 2):
        rep = check_prop3(w, w2, q, P, u, star_len_bound=4)
        if not rep.agree:
            bad.append(rep)
    note = ""
    if bad:
        b = bad[0]
        note = (f"{len(bad)} disagreeing pairs, e.g. {b.w} vs {b.w2}: universe equiv={b.universe_equiv}, "
                f"monoid equiv={b.monoid_equiv} (word {''.join('R' + x for x in b.monoid_witness or ())})")
    record(7, f"{name}/{flavor}", not bad, note)
    assert not bad, note


@pytest.mark.parametrize("name", ["N2", "L1"])
def test_c08_commutative_case(name, universe, record):
    q = FIXTURES[name]()
    u = universe(q, MAX_DIM)
    letters = all_letters(q, P)
    bad = []
    for fl in ("l", "r"):
        for a, b in itertools.product(letters, repeat=2):
            if not equiv(Word((a, b), fl), Word((b, a), fl), u):
                bad.append(f"{fl}:{a}{b}")
        lat = as_lattice(q, P, fl, u)
        bad += [f"{fl}:non-idempotent {x}" for x in lat.sample(WORD_LEN) if not is_idempotent(lat, x)]
    record(8, name, not bad, " ".join(bad[:3]))
    assert not bad


@pytest.mark.parametrize("name", ["A2", "L1"])
def test_c09_jh_oracle(name, record):
    q = FIXTURES[name]()
    reps = enumerate_universe(q, P, MAX_DIM)
    mismatches = 0
    for m in reps:
        brute = brute_force_sequences(m)
        try:
            fast = jh_sequences(m)
        except NonSplitFactor:
            fast = frozenset()
        mismatches += fast != brute
    record(9, f"{name} jh", mismatches == 0, f"{len(reps)} reps, {mismatches} mismatches")
    assert mismatches == 0


@pytest.mark.parametrize("name", ["A2", "K2", "N2", "L1"])
def test_c09_ext_oracle(name, record):
    q = FIXTURES[name]()
    bad = [(s, t) for s, t in fixture_simple_pairs(q, P) if (ext1_dim(q, s, t, P) > 0) != extension_exists(q, s, t, P)]
    record(9, f"{name} ext", not bad, str(bad) if bad else "")
    assert not bad


def test_c10_powerset_kernel(record):
    L, elements = powerset_lattice({1, 2, 3})
    covers = [c for k in (1, 2) for c in itertools.combinations(elements, k) if is_cover(L, c)]
    failing = [str(a) for a in ALL_AXIOMS if not check_axiom(L, a, elements, covers).passed]
    record(10, "powerset {1,2,3}", not failing, " ".join(failing))
    assert not failing
