import random

import pytest

from vecprod import linalg as la
from vecprod.doubling import construct_standard, zero_algebra
from vecprod.errors import NotAnAlgebra, NotComposition, ShapeError
from vecprod.fields import GF, QQ
from vecprod.forms import GramForm
from vecprod.hurwitz import UnitalCompositionAlgebra, check_composition, comp_multiply, hurwitz, imaginary_vpa

F7 = GF(7)


def lift(A, v):
    return (A.field.zero,) + tuple(v)


def test_ground_field():
    A = hurwitz(zero_algebra(QQ))
    assert A.dim == 1
    a, b = (QQ(3),), (QQ(-2),)
    assert comp_multiply(A, a, b) == (QQ(-6),)
    assert A.norm(a) == 9
    assert check_composition(A, sample_count=20)
    assert imaginary_vpa(A).dim == 0


def test_quaternion_products(cross):
    A = hurwitz(cross)
    e1, e2, e3 = (lift(A, v) for v in cross.basis())
    assert A.mul(e1, e2) == e3
    assert A.mul(e1, e1) == la.scale(QQ(-1), A.identity)
    one = A.identity
    assert A.mul(one, one) == one
    for x in (e1, e2, e3):
        assert A.mul(one, x) == x == A.mul(x, one)


def test_embedded_product_splits(cross):
    # uv = -<u,v> 1 + u x v
    A = hurwitz(cross)
    rng = random.Random(2)
    for _ in range(20):
        u = la.vec(QQ, [rng.randint(-3, 3) for _ in range(3)])
        v = la.vec(QQ, [rng.randint(-3, 3) for _ in range(3)])
        assert A.mul(lift(A, u), lift(A, v)) == (-cross.form(u, v),) + cross.mul(u, v)


def test_quaternions_over_f7():
    V, _ = construct_standard(F7, [1, 1])
    rep = check_composition(hurwitz(V), sample_count=50)
    assert rep.ok and rep.quadruples_checked == 4**4


def test_tampered_octonions(octo_q):
    A = hurwitz(octo_q[0])
    bad = A.with_entry(3, 5, 2, 2)
    rep = check_composition(bad, sample_count=10)
    assert not rep.ok
    assert rep.violations[0].identity == "composition_polarized"
    with pytest.raises(NotComposition):
        imaginary_vpa(bad)


def test_unit_law_enforced(cross):
    A = hurwitz(cross)
    with pytest.raises(ShapeError):
        A.with_entry(0, 1, 1, 2)
    with pytest.raises(ShapeError):
        # b1 is not a unit here: b1 b1 = b0
        t = [[la.vec(QQ, c) for c in row] for row in [[(1, 0), (0, 1)], [(0, 1), (1, 0)]]]
        UnitalCompositionAlgebra(QQ, GramForm.diagonal(QQ, [1, 1]), t, 1)


def test_hurwitz_rejects_non_algebra(cross):
    with pytest.raises(NotAnAlgebra):
        hurwitz(cross.with_entry(0, 1, 2, 2).with_entry(1, 0, 2, -2))


@pytest.mark.parametrize("F", [QQ, F7], ids=str)
@pytest.mark.parametrize("norms", [[], [1], [1, 1], [2, -3], [1, 1, 1], [1, 2, 3], [2, 3, 5]], ids=str)
def test_round_trip(F, norms):
    V, _ = construct_standard(F, norms)
    A = hurwitz(V)
    assert A.dim == V.dim + 1
    assert check_composition(A, sample_count=30, seed=len(norms))
    back = imaginary_vpa(A)
    assert back.gram == V.gram and back.structure == V.structure


def test_composition_on_split_form():
    # quaternions with an isotropic plane are still a composition algebra
    V, _ = construct_standard(QQ, [1, -1])
    assert check_composition(hurwitz(V), sample_count=50)
