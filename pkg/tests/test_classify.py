from fractions import Fraction
from itertools import product

import pytest

from vecprod import linalg as la
from vecprod.algebra import check_axioms
from vecprod.classify import (
    IsoStatus,
    Morphism,
    build_isomorphism,
    extend_base_morphism,
    obstruction_report,
    verify_morphism,
)
from vecprod.doubling import construct_standard, double, find_multiplicative_base, pi_basis, zero_algebra
from vecprod.errors import BadDimension, FieldMismatch, NormMismatch, NotAnAlgebra, NotIndependent
from vecprod.fields import GF, QQ, is_square
from vecprod.forms import GramForm, discriminant, Verdict, brute_force_isometry, equivalent_forms


def identity_morphism(V):
    return Morphism(V, V, la.identity(V.field, V.dim))


def test_identity_and_negation(cross):
    assert verify_morphism(identity_morphism(cross))
    neg = Morphism(cross, cross, la.mat(QQ, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]))
    chk = verify_morphism(neg)
    assert not chk
    assert {v.identity for v in chk.violations} == {"multiplicative"}


def test_cyclic_rotation(cross):
    e1, e2, e3 = cross.basis()
    base = find_multiplicative_base(cross)
    M = extend_base_morphism(base, cross, [e2, e3])
    assert M(e1) == e2 and M(e2) == e3 and M(e3) == e1
    assert verify_morphism(M)


def test_extend_identity_images(octo_q):
    V, base = octo_q
    M = extend_base_morphism(base, V, base.vectors)
    assert M.matrix == la.identity(QQ, 7)


def test_extend_dim1():
    V, base = construct_standard(QQ, [2])
    W = double(zero_algebra(QQ), 8)
    M = extend_base_morphism(base, W, [la.vec(QQ, [QQ(Fraction(1, 2))])])
    assert M.matrix == la.mat(QQ, [[QQ(Fraction(1, 2))]]) and verify_morphism(M)


def test_extend_errors(cross):
    e1, e2, e3 = cross.basis()
    base = find_multiplicative_base(cross)
    with pytest.raises(NormMismatch):
        extend_base_morphism(base, cross, [la.scale(QQ(2), e1), e2])
    with pytest.raises(NotIndependent):
        extend_base_morphism(base, cross, [e1, e1])
    with pytest.raises(FieldMismatch):
        extend_base_morphism(base, construct_standard(GF(7), [1, 1])[0], [e1, e2])


def test_extension_is_isometry_on_pi_basis():
    V, base = construct_standard(QQ, [1, 2, 3])
    W, wbase = construct_standard(QQ, [3, 1, 2])
    res = build_isomorphism(V, W)
    assert res.status is IsoStatus.ISOMORPHIC
    M = res.morphism
    for x in pi_basis(V, base.vectors):
        assert W.norm(M(x)) == V.norm(x)


def test_self_isomorphism(cross):
    res = build_isomorphism(cross, cross)
    assert res and verify_morphism(res.morphism)


def test_f7_example():
    F = GF(7)
    V, _ = construct_standard(F, [1, 1])
    W, _ = construct_standard(F, [2, 2])
    assert W.gram == GramForm.diagonal(F, [2, 2, 4])
    res = build_isomorphism(V, W)
    assert res.status is IsoStatus.ISOMORPHIC and verify_morphism(res.morphism)


def test_f5_disc_example():
    # diag(1,1,2) over F_5 carries no vector product: every 3-dim one has square discriminant
    F = GF(5)
    G1, G2 = GramForm.diagonal(F, [1, 1, 1]), GramForm.diagonal(F, [1, 1, 2])
    assert equivalent_forms(G1, G2).verdict is Verdict.NOT_EQUIVALENT
    for a, b in product(range(1, 5), repeat=2):
        V, _ = construct_standard(F, [a, b])
        assert is_square(discriminant(V.gram)) is not None
    cross5, _ = construct_standard(F, [1, 1])
    fake = type(cross5)(F, G2, cross5.structure)
    assert not check_axioms(fake)
    with pytest.raises(NotAnAlgebra):
        build_isomorphism(cross5, fake)


def test_q_examples():
    V, _ = construct_standard(QQ, [1, 2, 3])
    W, _ = construct_standard(QQ, [-1, -1, 1])
    res = build_isomorphism(V, W)
    assert res.status is IsoStatus.NOT_ISOMORPHIC
    X, _ = construct_standard(QQ, [1, 1])
    assert build_isomorphism(V, X).status is IsoStatus.NOT_ISOMORPHIC


def test_q_inconclusive():
    # diag(1,1,1) and diag(3,3,9) share every invariant we separate on
    V, _ = construct_standard(QQ, [1, 1])
    W, _ = construct_standard(QQ, [3, 3])
    res = build_isomorphism(V, W, height_bound=4)
    assert res.status is IsoStatus.INCONCLUSIVE and res.morphism is None


def _algebras(F, dim):
    units = [F(a) for a in range(1, F.p)]
    if dim == 1:
        return [construct_standard(F, [a])[0] for a in units]
    return [construct_standard(F, [a, b])[0] for a in units for b in units]


def _brute_exists(V, W):
    return brute_force_isometry(V.gram, W.gram) is not None


@pytest.mark.parametrize("dim", [1, 3])
def test_three_way_agreement_f3(dim):
    F = GF(3)
    algs = _algebras(F, dim)
    for V in algs:
        for W in algs:
            res = build_isomorphism(V, W)
            eq = equivalent_forms(V.gram, W.gram).verdict is Verdict.EQUIVALENT
            assert res.status is not IsoStatus.INCONCLUSIVE
            assert bool(res) == eq == _brute_exists(V, W)
            if res:
                assert verify_morphism(res.morphism)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("dim", [1, 3])
def test_two_way_agreement(p, dim):
    F = GF(p)
    algs = _algebras(F, dim)
    pairs = [(V, W) for V in algs for W in algs] if p == 5 else [(algs[0], W) for W in algs] + [(W, algs[-1]) for W in algs]
    for V, W in pairs:
        res = build_isomorphism(V, W)
        eq = equivalent_forms(V.gram, W.gram).verdict is Verdict.EQUIVALENT
        assert bool(res) == eq
        if res:
            assert verify_morphism(res.morphism)


def test_dim1_nonisomorphic_f7():
    F = GF(7)
    V, _ = construct_standard(F, [1])
    W, _ = construct_standard(F, [3])
    assert build_isomorphism(V, W).status is IsoStatus.NOT_ISOMORPHIC


def test_composition_of_isomorphisms():
    F = GF(7)
    U, _ = construct_standard(F, [1, 1, 1])
    V, _ = construct_standard(F, [2, 3, 5])
    W, _ = construct_standard(F, [3, 3, 1])
    f, g = build_isomorphism(U, V), build_isomorphism(V, W)
    assert f and g
    assert verify_morphism(g.morphism.compose(f.morphism))


def test_dimension_mismatch_is_not_isomorphic(cross, octo_q):
    assert build_isomorphism(cross, octo_q[0]).status is IsoStatus.NOT_ISOMORPHIC


def test_obstruction_report(octo_q):
    V, base = octo_q
    rep = obstruction_report(V)
    assert rep.doubled_dim == 15 and rep.d2_violations > 0
    assert rep.first_d2_violation is not None
    x = rep.bracketings["((vw)u)z"]
    assert not la.is_zero(x) and rep.bracketings["-((vw)u)z"] == la.neg(x)
    assert rep.contradiction and rep.complement_dim == 0
    assert len(rep.rejected_extensions) == 7 and rep.size4_independent_subsets == 0
    assert rep.demonstrated


def test_obstruction_needs_dim7(cross):
    with pytest.raises(BadDimension):
        obstruction_report(cross)
