from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from vecprod import linalg as la
from vecprod.algebra import check_axioms
from vecprod.doubling import (
    MultiplicativeBase,
    construct_standard,
    double,
    find_multiplicative_base,
    is_mult_independent,
    pi_basis,
    pi_product,
    signs_agree_up_to_order,
    subsets,
    zero_algebra,
)
from vecprod.errors import BadDimension, EmptyList, NotAnAlgebra, NotIndependent, TooManyNorms, ZeroMu, ZeroNorm
from vecprod.fields import GF, QQ
from vecprod.forms import GramForm

F7 = GF(7)


def test_pi_product_examples(cross, octo_q):
    V, _ = cross, None
    e1, e2, e3 = V.basis()
    assert pi_product(V, [e2]) == e2
    assert pi_product(V, [e1, e2]) == e3
    with pytest.raises(EmptyList):
        pi_product(V, [])
    O, base = octo_q
    # mask 0b111 sits at index 6
    assert pi_product(O, base.vectors) == O.basis_vector(6)


def test_subsets_order():
    assert subsets(2) == [(0,), (1,), (0, 1)]
    assert len(subsets(3)) == 7 and subsets(3)[3] == (2,)


def test_independence_examples(cross):
    e1, e2, e3 = cross.basis()
    assert is_mult_independent(cross, [e1, e2])
    cert = is_mult_independent(cross, [e1, e2, e3])
    assert not cert and "not orthogonal" in cert.reason
    H = construct_standard(QQ, [1, -1])[0]
    iso = la.vec(QQ, [1, 1, 0])
    cert = is_mult_independent(H, [iso])
    assert not cert and cert.reason == "isotropic" and cert.failing == 0


def test_double_from_zero():
    D = double(zero_algebra(QQ), 5)
    assert D.dim == 1 and D.gram == GramForm.diagonal(QQ, [5])
    assert D.mul(D.basis_vector(0), D.basis_vector(0)) == (QQ(0),)


@pytest.mark.parametrize("F", [QQ, F7], ids=str)
@pytest.mark.parametrize("alpha,beta", [(1, 1), (2, 3), (-1, 5)])
def test_double_dim1_table(F, alpha, beta):
    W = double(zero_algebra(F), alpha)
    D = double(W, beta)
    e1, e, e1e = D.basis()
    assert D.gram == GramForm.diagonal(F, [alpha, beta, F(alpha) * beta])
    assert D.mul(e1, e) == e1e
    assert D.mul(e1, e1e) == la.scale(F(-alpha), e)
    assert D.mul(e, e1e) == la.scale(F(beta), e1)
    assert check_axioms(D).ok


def test_classical_cross(cross):
    i, j, k = cross.basis()
    assert cross.mul(i, j) == k
    assert cross.mul(i, k) == la.neg(j)
    assert cross.mul(j, k) == i


def test_double_errors(cross):
    with pytest.raises(ZeroMu):
        double(cross, 0)


def test_fifteen_dim_candidate_fails(octo_q):
    D = double(octo_q[0], 1)
    rep = check_axioms(D)
    assert D.dim == 15
    assert rep.antisymmetry_ok and rep.nondegenerate_ok and rep.d1_ok
    assert not rep.d2_ok and rep.count("d2") > 0


def test_construct_standard_examples():
    V, base = construct_standard(QQ, [])
    assert V.dim == 0 and len(base) == 0
    V, base = construct_standard(QQ, [1, 1, 1])
    assert V.dim == 7 and V.gram == GramForm.diagonal(QQ, [1] * 7)
    assert base.norms == (1, 1, 1)
    with pytest.raises(TooManyNorms, match="0, 1, 3 and 7"):
        construct_standard(QQ, [1, 1, 1, 1])
    with pytest.raises(ZeroNorm):
        construct_standard(F7, [1, 7])


def test_find_base_examples(cross):
    assert len(find_multiplicative_base(zero_algebra(QQ))) == 0
    e1, e2, _ = cross.basis()
    assert find_multiplicative_base(cross).vectors == (e1, e2)
    with pytest.raises(NotAnAlgebra):
        find_multiplicative_base(cross.with_entry(0, 1, 2, 2).with_entry(1, 0, 2, -2))
    with pytest.raises(BadDimension):
        find_multiplicative_base(double(construct_standard(QQ, [1, 1, 1])[0], 1))


def test_base_validation(cross):
    e1, e2, e3 = cross.basis()
    with pytest.raises(NotIndependent):
        MultiplicativeBase.of(cross, [e1, e2, e3])


NORM_CHOICES = [[], [1], [3], [1, 1], [2, -1], [1, 1, 1], [1, 2, 3], [2, 3, 5], [-1, -1, 3]]


@pytest.mark.parametrize("F", [QQ, F7], ids=str)
@pytest.mark.parametrize("norms", NORM_CHOICES, ids=str)
def test_standard_outputs(F, norms):
    V, base = construct_standard(F, norms)
    assert V.dim == 2 ** len(norms) - 1
    assert check_axioms(V).ok
    found = find_multiplicative_base(V)
    assert len(found) == len(norms) and is_mult_independent(V, found.vectors)
    assert found.generates() and base.generates()


def _norm_product(V, vectors):
    out = V.field.one
    for v in vectors:
        out = out * V.norm(v)
    return out


@pytest.mark.parametrize("F", [QQ, F7], ids=str)
@pytest.mark.parametrize("norms", [[1, 1], [2, 3], [1, 1, 1], [1, 2, 3], [-1, 2, 5]], ids=str)
def test_pi_basis_is_orthogonal(F, norms):
    V, base = construct_standard(F, norms)
    E = base.vectors
    P = pi_basis(V, E)
    for A, x in zip(subsets(len(E)), P):
        assert V.norm(x) == _norm_product(V, [E[i] for i in A]) != 0
    for x, y in combinations(P, 2):
        assert V.form(x, y) == 0
    # canonical basis index mask - 1 holds Pi(A) exactly
    assert P == V.basis()


def test_greedy_base_pi_basis(octo_q):
    V, _ = octo_q
    E = find_multiplicative_base(V).vectors
    P = pi_basis(V, E)
    assert la.rank(V.field, P, 7) == 7
    for x, y in combinations(P, 2):
        assert V.form(x, y) == 0


def test_sign_up_to_order(octo_q):
    V, base = octo_q
    for r in (1, 2, 3):
        for A in combinations(base.vectors, r):
            assert signs_agree_up_to_order(V, A)


def test_subset_heredity(octo_q):
    V, base = octo_q
    for r in (1, 2):
        for A in combinations(base.vectors, r):
            assert is_mult_independent(V, A)


vec7 = st.lists(st.integers(-2, 2), min_size=7, max_size=7)


@settings(max_examples=40, deadline=None)
@given(st.lists(vec7, min_size=1, max_size=4))
def test_independent_sets_are_small(vs):
    V = _OCTO()
    E = [la.vec(QQ, x) for x in vs]
    if is_mult_independent(V, E):
        assert len(E) <= 3
        assert la.rank(QQ, pi_basis(V, E), 7) == 2 ** len(E) - 1


_C = {}


def _OCTO():
    if "v" not in _C:
        _C["v"] = construct_standard(QQ, [1, 1, 1])[0]
    return _C["v"]
