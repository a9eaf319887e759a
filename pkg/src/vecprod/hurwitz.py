"""
Unital composition algebras and the passage to and from vector product algebras.

``hurwitz(V)`` is ``k x V`` with ``(a, v)(b, w) = (ab - <v,w>, aw + bv + vw)``
and form ``ab + <v,w>``; the unit is the first basis vector.
``imaginary_vpa(A)`` goes back: the orthogonal complement of the unit with the
product ``u x v = (uv - vu) / 2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg as la
from .algebra import VectorProductAlgebra, Violation, _sparse_table, _validate_table, bilinear_product, check_axioms
from .errors import (
    CommutatorEscapesComplement,
    DegenerateForm,
    DimensionMismatch,
    FieldMismatch,
    NotAnAlgebra,
    NotComposition,
    ShapeError,
)
from .fields import FieldSpec, Scalar
from .forms import GramForm, Subspace, eval_form, is_nondegenerate, orthogonal_complement


@dataclass(frozen=True, eq=False)
class UnitalCompositionAlgebra:
    field: FieldSpec
    gram: GramForm
    structure: tuple
    identity_index: int = 0
    _sparse: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        if self.gram.field != self.field:
            raise FieldMismatch(f"gram over {self.gram.field}, algebra over {self.field}")
        n = self.gram.dim
        if n == 0:
            raise ShapeError("a composition algebra is a non-zero space")
        if not 0 <= self.identity_index < n:
            raise ShapeError(f"identity_index {self.identity_index} out of range for dimension {n}")
        structure = tuple(tuple(tuple(cell) for cell in row) for row in self.structure)
        _validate_table(self.field, structure, n)
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "_sparse", _sparse_table(structure))
        if not is_nondegenerate(self.gram):
            raise DegenerateForm("the form of a composition algebra must be non-degenerate")
        one = self.identity
        for i in range(n):
            b = self.basis_vector(i)
            if self.mul(one, b) != b or self.mul(b, one) != b:
                raise ShapeError(f"basis vector {self.identity_index} is not a two-sided unit (fails on b{i})")

    @property
    def dim(self) -> int:
        return self.gram.dim

    @property
    def identity(self) -> tuple:
        return self.basis_vector(self.identity_index)

    def __eq__(self, other):
        if not isinstance(other, UnitalCompositionAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.gram == other.gram
            and self.structure == other.structure
            and self.identity_index == other.identity_index
        )

    __hash__ = None

    def basis_vector(self, i: int) -> tuple:
        return la.unit_vector(self.field, self.dim, i)

    def vector(self, xs) -> tuple:
        v = la.vec(self.field, xs)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for an algebra of dimension {self.dim}")
        return v

    def mul(self, x, y) -> tuple:
        return bilinear_product(self.field, self._sparse, x, y)

    def form(self, x, y) -> Scalar:
        return eval_form(self.gram, x, y)

    def norm(self, x) -> Scalar:
        return eval_form(self.gram, x, x)

    def with_entry(self, i: int, j: int, k: int, value) -> UnitalCompositionAlgebra:
        table = [[list(cell) for cell in row] for row in self.structure]
        table[i][j][k] = self.field(value)
        return UnitalCompositionAlgebra(self.field, self.gram, table, self.identity_index)


def comp_multiply(A: UnitalCompositionAlgebra, x, y) -> tuple:
    return A.mul(x, y)


def hurwitz(V: VectorProductAlgebra, check: bool = True) -> UnitalCompositionAlgebra:
    if check and not check_axioms(V):
        raise NotAnAlgebra("hurwitz() needs a vector product algebra")
    F, n = V.field, V.dim
    G = V.gram.entries
    dim = n + 1
    table = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        table[0][i] = la.unit_vector(F, dim, i)
        table[i][0] = la.unit_vector(F, dim, i)
    for i in range(n):
        for j in range(n):
            table[i + 1][j + 1] = (-G[i][j],) + V.structure[i][j]
    gram = GramForm.diagonal(F, [1]).direct_sum(V.gram)
    return UnitalCompositionAlgebra(F, gram, table, 0)


@dataclass
class CompositionReport:
    quadruples_checked: int = 0
    pairs_checked: int = 0
    random_pairs_checked: int = 0
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "quadruples_checked": self.quadruples_checked,
            "pairs_checked": self.pairs_checked,
            "random_pairs_checked": self.random_pairs_checked,
            "violations": [v.as_dict() for v in self.violations],
        }


def check_composition(A: UnitalCompositionAlgebra, sample_count: int = 100, seed: int = 0) -> CompositionReport:
    """Decide N(xy) = N(x)N(y) exactly.

    The complete test is the polarized identity

        <b_i b_j, b_x b_l> + <b_x b_j, b_i b_l> = 2 <b_i, b_x> <b_j, b_l>

    on all basis quadruples.  Basis pairs, sums of basis pairs and
    ``sample_count`` seeded random pairs are checked against the unpolarized
    law on top of that.
    """
    F, n = A.field, A.dim
    G = A.gram.entries
    rep = CompositionReport()
    products = [[A.mul(A.basis_vector(i), A.basis_vector(j)) for j in range(n)] for i in range(n)]
    gp = [[la.mat_vec(F, G, products[i][j]) for j in range(n)] for i in range(n)]
    ips = {}
    for i in range(n):
        for j in range(n):
            pij = products[i][j]
            for x in range(n):
                for l in range(n):
                    ips[i, j, x, l] = la.dot(F, pij, gp[x][l])
    for i in range(n):
        for x in range(n):
            for j in range(n):
                for l in range(n):
                    lhs = ips[i, j, x, l] + ips[x, j, i, l]
                    rhs = 2 * G[i][x] * G[j][l]
                    rep.quadruples_checked += 1
                    if lhs != rhs:
                        rep.violations.append(Violation("composition_polarized", (i, x, j, l), lhs, rhs))

    def law(x, y, tag, idx):
        lhs = A.norm(A.mul(x, y))
        rhs = A.norm(x) * A.norm(y)
        if lhs != rhs:
            rep.violations.append(Violation(tag, idx, lhs, rhs))

    basis = [A.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            law(basis[i], basis[j], "composition_basis", (i, j))
            rep.pairs_checked += 1
    sums = [(i, j, la.add(basis[i], basis[j])) for i in range(n) for j in range(i + 1, n)]
    for a, b, s in sums:
        for c, d, t in sums:
            law(s, t, "composition_sums", (a, b, c, d))
            rep.pairs_checked += 1
    rng = random.Random(seed)
    for k in range(sample_count):
        x = tuple(F.random(rng) for _ in range(n))
        y = tuple(F.random(rng) for _ in range(n))
        law(x, y, "composition_random", (k,))
        rep.random_pairs_checked += 1
    return rep


def imaginary_vpa(A: UnitalCompositionAlgebra, check: bool = True) -> VectorProductAlgebra:
    """The unit's orthogonal complement with the halved commutator product."""
    F = A.field
    if check and not check_composition(A, sample_count=0):
        raise NotComposition("the composition law fails")
    one = A.identity
    if not A.norm(one):
        raise DegenerateForm("the unit is isotropic")
    V = orthogonal_complement(A.gram, Subspace.span(F, A.dim, [one]))
    basis = V.basis
    n = len(basis)
    half = F.half
    table = []
    for u in basis:
        row = []
        for v in basis:
            c = la.scale(half, la.sub(A.mul(u, v), A.mul(v, u)))
            coords = la.solve_in_span(F, basis, c)
            if coords is None:
                raise CommutatorEscapesComplement("a commutator of imaginary elements has a unit component")
            row.append(coords)
        table.append(tuple(row))
    gram = A.gram.restrict(basis)
    out = VectorProductAlgebra(F, gram, tuple(table) if n else ())
    if check and not check_axioms(out):
        raise NotAnAlgebra("the imaginary part fails the vector product axioms")
    return out
