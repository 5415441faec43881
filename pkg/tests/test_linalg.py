import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nctop.errors import NotInvariant, NotPrime
from nctop.linalg import (
    FieldScalar,
    Matrix,
    gl_order,
    general_linear_group,
    inverse,
    kernel_basis,
    projective_points,
    quotient_action,
    rref,
)


def M(rows, p=2):
    return Matrix.from_rows(rows, p)


@st.composite
def matrices(draw, max_dim=5):
    p = draw(st.sampled_from([2, 3, 5]))
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, p)


def test_field_scalar_arithmetic():
    a, b = FieldScalar(3, 5), FieldScalar(4, 5)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert (a * a.inverse()).value == 1
    assert (b / a).value == 3
    with pytest.raises(NotPrime):
        FieldScalar(1, 4)
    with pytest.raises(ZeroDivisionError):
        FieldScalar(0, 7).inverse()


def test_rref_examples():
    z, rk, piv = rref(M([[0, 0], [0, 0]]))
    assert z == M([[0, 0], [0, 0]]) and rk == 0 and piv == []
    i, rk, piv = rref(M([[1, 0], [0, 1]]))
    assert i == M([[1, 0], [0, 1]]) and rk == 2 and piv == [0, 1]
    # by hand: subtract row 0 from row 1
    red, rk, piv = rref(M([[1, 1], [1, 1]]))
    assert red == M([[1, 1], [0, 0]]) and rk == 1 and piv == [0]


def _null_space_by_exhaustion(m):
    return {v for v in itertools.product(range(m.p), repeat=m.cols) if not any(m.apply(v))}


def test_kernel_examples():
    assert kernel_basis(M([[1, 0], [0, 1]])) == []
    assert kernel_basis(M([[0]])) == [(1,)]
    m = M([[1, 1], [0, 0]])
    assert _null_space_by_exhaustion(m) == {(0, 0), (1, 1)}
    assert kernel_basis(m) == [(1, 1)]


def test_quotient_action_examples():
    assert quotient_action(M([[1, 0], [0, 1]]), [(1, 0)]) == M([[1]])
    # e_2 -> e_1, which is zero modulo span{e_1}
    assert quotient_action(M([[0, 1], [0, 0]]), [(1, 0)]) == M([[0]])
    with pytest.raises(NotInvariant):
        quotient_action(M([[1, 0], [0, 1]]), [(1, 0)], [(0, 1)])


def test_quotient_action_shrinks_dimensions():
    m = Matrix.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 2]], 3)
    q = quotient_action(m, [(1, 0, 0)], [(1, 0, 0)])
    assert q.shape == (2, 2)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    _, rk, _ = rref(m)
    assert rk + len(kernel_basis(m)) == m.cols


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_kernel_vectors_are_killed(m):
    for v in kernel_basis(m):
        assert not any(m.apply(v))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    once = rref(m)[0]
    assert rref(once)[0] == once


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_determinism(m):
    twin = Matrix.from_rows([list(r) for r in m.data], m.p)
    assert rref(m) == rref(twin)
    assert kernel_basis(m) == kernel_basis(twin)


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=3))
def test_kernel_matches_exhaustion(m):
    span = {tuple([0] * m.cols)}
    for b in kernel_basis(m):
        span = {tuple((x + c * y) % m.p for x, y in zip(u, b)) for u in span for c in range(m.p)}
    assert span == _null_space_by_exhaustion(m)


def test_inverse_and_group_orders():
    for n, p in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        group = general_linear_group(n, p)
        assert len(group) == gl_order(n, p)
        for g, gi in group[:20]:
            assert g @ gi == Matrix.identity(n, p)
    with pytest.raises(ZeroDivisionError):
        inverse(M([[1, 1], [1, 1]]))


def test_projective_points_count():
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for p in (2, 3):
        assert len(projective_points(basis, p)) == (p**3 - 1) // (p - 1)
    assert projective_points([], 2) == []
