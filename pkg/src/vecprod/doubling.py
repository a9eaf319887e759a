"""
Multiplicatively independent sets and the doubling step.

Doubling a vector product algebra W by an anisotropic scalar ``mu`` produces
the space ``W + k e + W e`` of dimension ``2 dim W + 1`` with Gram form
``G_W (+) (mu) (+) mu G_W``.  Writing ``a + l e + b e`` for an element with
``a, b`` in W and ``l`` a scalar, the product is

    (a1 + l1 e + b1 e)(a2 + l2 e + b2 e)
        =  [a1 a2 + mu (b2 b1 + l1 b2 - l2 b1)]
         + [<a2, b1> - <a1, b2>] e
         + [l2 a1 - l1 a2 + a2 b1 - a1 b2] e

This is what the identities ``u(vu) = N(u)v - <u,v>u`` and
``u(vw) = -(uv)w`` for orthogonal triples force inside any vector product
algebra containing W and a unit-free ``e`` orthogonal to W.  It yields honest
algebras for dim W in {0, 1, 3} and a failed 15-dimensional candidate for
dim W = 7.

The canonical basis of an algebra built from norms ``n_1, ..., n_m`` is
indexed by bitmasks: basis index ``mask - 1`` holds ``Pi(A)`` for the subset
A of base elements selected by ``mask``, multiplied in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import linalg as la
from .algebra import VectorProductAlgebra, check_axioms, subalgebra_closure
from .errors import BadDimension, EmptyList, NotAnAlgebra, NotIndependent, TooManyNorms, ZeroMu, ZeroNorm, DegenerateForm
from .fields import FieldSpec, Scalar
from .forms import GramForm, Subspace, find_anisotropic, is_nondegenerate, orthogonal_complement

VALID_DIMENSIONS = (0, 1, 3, 7)


def pi_product(V: VectorProductAlgebra, A: Sequence) -> tuple:
    """Left-nested product ``(...((a1 a2) a3)...) an``."""
    if not A:
        raise EmptyList("the product of an empty list is undefined")
    acc = tuple(A[0])
    for a in A[1:]:
        acc = V.mul(acc, a)
    return acc


@dataclass(frozen=True)
class Independence:
    ok: bool
    failing: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_mult_independent(V: VectorProductAlgebra, E: Sequence) -> Independence:
    """Every element anisotropic and orthogonal to the subalgebra generated by the rest."""
    E = [tuple(e) for e in E]
    for idx, e in enumerate(E):
        if not V.norm(e):
            return Independence(False, idx, "isotropic" if any(e) else "zero vector")
    for idx, e in enumerate(E):
        others = E[:idx] + E[idx + 1 :]
        U = subalgebra_closure(V, others)
        for b in U.basis:
            if V.form(e, b):
                return Independence(False, idx, "not orthogonal to the subalgebra generated by the others")
    return Independence(True)


@dataclass(frozen=True, eq=False)
class MultiplicativeBase:
    algebra: VectorProductAlgebra
    vectors: tuple
    norms: tuple

    def __post_init__(self):
        vectors = tuple(tuple(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        cert = is_mult_independent(self.algebra, vectors)
        if not cert:
            raise NotIndependent(f"element {cert.failing}: {cert.reason}")
        norms = tuple(self.algebra.norm(v) for v in vectors)
        if tuple(self.norms) != norms:
            raise ValueError("recorded norms do not match the vectors")
        object.__setattr__(self, "norms", norms)

    @classmethod
    def of(cls, V: VectorProductAlgebra, vectors: Sequence) -> MultiplicativeBase:
        vectors = [tuple(v) for v in vectors]
        return cls(V, tuple(vectors), tuple(V.norm(v) for v in vectors))

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def span(self) -> Subspace:
        return subalgebra_closure(self.algebra, self.vectors)

    def generates(self) -> bool:
        return self.span().dim == self.algebra.dim


def subsets(m: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of range(m), ascending, ordered by bitmask."""
    return [tuple(i for i in range(m) if mask >> i & 1) for mask in range(1, 2**m)]


def pi_basis(V: VectorProductAlgebra, E: Sequence) -> list[tuple]:
    """``Pi(A)`` for every nonempty subset A of E, in bitmask order."""
    return [pi_product(V, [E[i] for i in A]) for A in subsets(len(E))]


def _double_element(W: VectorProductAlgebra, mu: Scalar, x, y):
    a1, l1, b1 = x
    a2, l2, b2 = y
    f, m = W.form, W.mul
    w_part = la.add(m(a1, a2), la.scale(mu, la.add(m(b2, b1), la.sub(la.scale(l1, b2), la.scale(l2, b1)))))
    e_part = f(a2, b1) - f(a1, b2)
    we_part = la.add(la.sub(la.scale(l2, a1), la.scale(l1, a2)), la.sub(m(a2, b1), m(a1, b2)))
    return w_part + (e_part,) + we_part


def double(W: VectorProductAlgebra, mu) -> VectorProductAlgebra:
    """The (2d+1)-dimensional candidate on the basis ``[basis(W), e, basis(W) e]``."""
    F, d = W.field, W.dim
    mu = F(mu)
    if not mu:
        raise ZeroMu("the adjoined element must be anisotropic")
    if not is_nondegenerate(W.gram):
        raise DegenerateForm("cannot double an algebra with a degenerate form")
    zero, one = la.zero_vector(F, d), F.one

    def split(k):
        if k < d:
            return (W.basis_vector(k), F.zero, zero)
        if k == d:
            return (zero, one, zero)
        return (zero, F.zero, W.basis_vector(k - d - 1))

    n = 2 * d + 1
    parts = [split(k) for k in range(n)]
    table = [[_double_element(W, mu, parts[i], parts[j]) for j in range(n)] for i in range(n)]
    gram = W.gram.direct_sum(GramForm.diagonal(F, [mu])).direct_sum(W.gram.scaled(mu))
    return VectorProductAlgebra(F, gram, table)


def zero_algebra(field: FieldSpec) -> VectorProductAlgebra:
    return VectorProductAlgebra(field, GramForm(field, ()), ())


def construct_standard(field: FieldSpec, norms: Sequence) -> tuple[VectorProductAlgebra, MultiplicativeBase]:
    """Fold :func:`double` over ``norms``; returns the algebra and its defining base."""
    norms = [field(x) for x in norms]
    if len(norms) > 3:
        raise TooManyNorms(
            f"{len(norms)} norms would give dimension {2 ** len(norms) - 1}; "
            "vector product algebras only exist in dimensions 0, 1, 3 and 7"
        )
    for x in norms:
        if not x:
            raise ZeroNorm("base elements must be anisotropic")
    V = zero_algebra(field)
    for mu in norms:
        V = double(V, mu)
    base = [V.basis_vector(2**i - 1) for i in range(len(norms))]
    return V, MultiplicativeBase(V, tuple(base), tuple(norms))


def find_multiplicative_base(V: VectorProductAlgebra) -> MultiplicativeBase:
    """Greedy base: repeatedly adjoin the first anisotropic vector of the complement."""
    if V.dim not in VALID_DIMENSIONS:
        raise BadDimension(f"dimension {V.dim} is not one of {VALID_DIMENSIONS}")
    if not check_axioms(V):
        raise NotAnAlgebra("the axioms fail; no multiplicative base exists")
    E: list[tuple] = []
    span = Subspace.span(V.field, V.dim)
    while span.dim < V.dim:
        U = orthogonal_complement(V.gram, span)
        e = find_anisotropic(V.gram, U)
        # the complement of a non-degenerate subalgebra is non-degenerate
        assert e is not None
        E.append(e)
        span = subalgebra_closure(V, E)
    return MultiplicativeBase.of(V, E)


def signs_agree_up_to_order(V: VectorProductAlgebra, A: Sequence) -> bool:
    """True if every ordering of A gives Pi(A) up to sign."""
    ref = pi_product(V, A)
    for perm in permutations(A):
        x = pi_product(V, perm)
        if x != ref and x != la.neg(ref):
            return False
    return True
