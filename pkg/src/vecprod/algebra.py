"""
Vector product algebras given by structure constants and a Gram form.

``structure[i][j][k]`` is the coefficient of ``b_k`` in ``b_i b_j``.  The
class does not insist on the axioms: :func:`check_axioms` decides them, so
failed candidates (such as the 15-dimensional double of a 7-dimensional
algebra) can be represented and inspected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg as la
from .errors import DimensionMismatch, FieldMismatch, ShapeError
from .fields import FieldSpec, Scalar
from .forms import GramForm, Subspace, eval_form, is_nondegenerate


def _sparse_table(structure) -> tuple:
    return tuple(
        tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row) for row in structure
    )


def _validate_table(field: FieldSpec, structure, n: int):
    if len(structure) != n:
        raise ShapeError(f"structure has {len(structure)} rows, expected {n}")
    for i, row in enumerate(structure):
        if len(row) != n:
            raise ShapeError(f"structure[{i}] has {len(row)} entries, expected {n}")
        for j, cell in enumerate(row):
            if len(cell) != n:
                raise ShapeError(f"structure[{i}][{j}] has length {len(cell)}, expected {n}")
            for c in cell:
                if not isinstance(c, Scalar) or c.field != field:
                    raise FieldMismatch(f"structure[{i}][{j}] holds {c!r}, not an element of {field}")


def bilinear_product(field: FieldSpec, sparse, u, v) -> tuple:
    n = len(sparse)
    if len(u) != n or len(v) != n:
        raise DimensionMismatch(f"vectors of length {len(u)}, {len(v)} for an algebra of dimension {n}")
    out = [field.zero] * n
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = sparse[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            c = ui * vj
            for k, s in row[j]:
                out[k] = out[k] + c * s
    return tuple(out)


@dataclass(frozen=True, eq=False)
class VectorProductAlgebra:
    field: FieldSpec
    gram: GramForm
    structure: tuple
    _sparse: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        if self.gram.field != self.field:
            raise FieldMismatch(f"gram over {self.gram.field}, algebra over {self.field}")
        structure = tuple(tuple(tuple(cell) for cell in row) for row in self.structure)
        _validate_table(self.field, structure, self.gram.dim)
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "_sparse", _sparse_table(structure))

    @classmethod
    def from_products(cls, gram: GramForm, products: dict) -> VectorProductAlgebra:
        """Build from ``{(i, j): vector}`` for i < j, filling in anti-symmetry."""
        F, n = gram.field, gram.dim
        table = [[la.zero_vector(F, n) for _ in range(n)] for _ in range(n)]
        for (i, j), v in products.items():
            v = la.vec(F, v)
            table[i][j] = v
            table[j][i] = la.neg(v)
        return cls(F, gram, tuple(tuple(r) for r in table))

    @property
    def dim(self) -> int:
        return self.gram.dim

    def __eq__(self, other):
        if not isinstance(other, VectorProductAlgebra):
            return NotImplemented
        return self.field == other.field and self.gram == other.gram and self.structure == other.structure

    __hash__ = None

    def basis_vector(self, i: int) -> tuple:
        return la.unit_vector(self.field, self.dim, i)

    def basis(self) -> list[tuple]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def vector(self, xs) -> tuple:
        v = la.vec(self.field, xs)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for an algebra of dimension {self.dim}")
        return v

    def mul(self, u, v) -> tuple:
        return bilinear_product(self.field, self._sparse, u, v)

    def form(self, u, v) -> Scalar:
        return eval_form(self.gram, u, v)

    def norm(self, u) -> Scalar:
        return eval_form(self.gram, u, u)

    def with_entry(self, i: int, j: int, k: int, value) -> VectorProductAlgebra:
        """Copy with a single structure constant replaced (used to build broken tables)."""
        table = [[list(cell) for cell in row] for row in self.structure]
        table[i][j][k] = self.field(value)
        return VectorProductAlgebra(self.field, self.gram, table)


def multiply(V: VectorProductAlgebra, u, v) -> tuple:
    """Bilinear extension of the structure constants."""
    return V.mul(u, v)


@dataclass
class Violation:
    identity: str
    indices: tuple
    lhs: object
    rhs: object

    def as_dict(self) -> dict:
        def enc(x):
            return [str(c) for c in x] if isinstance(x, tuple) else str(x)

        return {"identity": self.identity, "indices": list(self.indices), "lhs": enc(self.lhs), "rhs": enc(self.rhs)}


_ORDER = {"antisymmetry": 0, "nondegenerate": 1, "d1": 2, "d2": 3}


@dataclass
class AxiomReport:
    antisymmetry_ok: bool = True
    nondegenerate_ok: bool = True
    d1_ok: bool = True
    d2_ok: bool = True
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.antisymmetry_ok and self.nondegenerate_ok and self.d1_ok and self.d2_ok

    def __bool__(self):
        return self.ok

    def first(self, identity: str) -> Violation | None:
        return next((v for v in self.violations if v.identity == identity), None)

    def count(self, identity: str) -> int:
        return sum(v.identity == identity for v in self.violations)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "antisymmetry_ok": self.antisymmetry_ok,
            "nondegenerate_ok": self.nondegenerate_ok,
            "d1_ok": self.d1_ok,
            "d2_ok": self.d2_ok,
            "violations": [v.as_dict() for v in self.violations],
        }


def check_axioms(V: VectorProductAlgebra) -> AxiomReport:
    """Decide the vector product axioms exactly on basis tuples.

    The quadratic axiom is checked in its fully polarized form

        <b_i b_j, b_x b_l> + <b_x b_j, b_i b_l>
            = 2<b_i,b_x><b_j,b_l> - <b_i,b_j><b_x,b_l> - <b_i,b_l><b_x,b_j>

    which is 4-linear, so basis quadruples decide it; putting x = i, l = j
    gives back <uv,uv> = N(u)N(v) - <u,v>^2 (char != 2 is used to divide by 2).
    """
    F, n = V.field, V.dim
    S = V.structure
    G = V.gram.entries
    rep = AxiomReport()

    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if S[i][j][k] != -S[j][i][k]:
                    rep.antisymmetry_ok = False
                    rep.violations.append(Violation("antisymmetry", (i, j, k), S[i][j][k], -S[j][i][k]))

    if not is_nondegenerate(V.gram):
        rep.nondegenerate_ok = False
        rep.violations.append(Violation("nondegenerate", (), F.zero, "nonzero determinant"))

    # gp[i][j] = G (b_i b_j), so <b_i b_j, w> = gp[i][j] . w
    gp = [[la.mat_vec(F, G, S[i][j]) for j in range(n)] for i in range(n)]
    sparse = V._sparse

    def ip(i, j, x, l):
        # <b_i b_j, b_x b_l>
        total = F.zero
        g = gp[x][l]
        for k, c in sparse[i][j]:
            if g[k]:
                total = total + c * g[k]
        return total

    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = gp[i][j][k]
                # <b_i, b_j b_k> = (G b_i) . (b_j b_k) = sum_m G[i][m] S[j][k][m]
                rhs = F.zero
                for m, c in sparse[j][k]:
                    if G[i][m]:
                        rhs = rhs + G[i][m] * c
                if lhs != rhs:
                    rep.d1_ok = False
                    rep.violations.append(Violation("d1", (i, j, k), lhs, rhs))

    ips = {}
    for i in range(n):
        for j in range(n):
            for x in range(n):
                for l in range(n):
                    ips[i, j, x, l] = ip(i, j, x, l)
    for i in range(n):
        for x in range(n):
            for j in range(n):
                for l in range(n):
                    lhs = ips[i, j, x, l] + ips[x, j, i, l]
                    rhs = 2 * G[i][x] * G[j][l] - G[i][j] * G[x][l] - G[i][l] * G[x][j]
                    if lhs != rhs:
                        rep.d2_ok = False
                        rep.violations.append(Violation("d2", (i, x, j, l), lhs, rhs))

    rep.violations.sort(key=lambda v: (_ORDER[v.identity], v.indices))
    return rep


# ----------------------------------------------------------------------------
# consequences of the axioms on sample vectors


@dataclass
class IdentityCheck:
    identity: str
    sample: int
    holds: bool | None
    lhs: object = None
    rhs: object = None
    note: str = ""


@dataclass
class LemmaReport:
    checks: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds is not False for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.holds is False]

    def evaluated(self, identity: str) -> int:
        return sum(c.identity == identity and c.holds is not None for c in self.checks)

    def skipped(self, identity: str) -> int:
        return sum(c.identity == identity and c.holds is None for c in self.checks)


LEMMA_IDENTITIES = ("u_perp_uv", "products_gram", "u_vu", "orthogonal_triple")


def check_lemma_vm(V: VectorProductAlgebra, samples: Sequence[tuple]) -> LemmaReport:
    """Evaluate the standard consequences of the axioms on ``(u, v, w)`` samples.

    * ``u_perp_uv``:         <u, uv> = 0
    * ``products_gram``:     <uv, uw> = N(u)<v,w> - <u,v><u,w>
    * ``u_vu``:              u(vu) = N(u) v - <u,v> u
    * ``orthogonal_triple``: u(vw) = -(uv)w = (vu)w, only for pairwise orthogonal u, v, w
    """
    rep = LemmaReport()
    m, f = V.mul, V.form
    for s, (u, v, w) in enumerate(samples):
        uv, uw = m(u, v), m(u, w)
        nu = V.norm(u)

        lhs = f(u, uv)
        rep.checks.append(IdentityCheck("u_perp_uv", s, lhs == 0, lhs, V.field.zero))

        lhs = f(uv, uw)
        rhs = nu * f(v, w) - f(u, v) * f(u, w)
        rep.checks.append(IdentityCheck("products_gram", s, lhs == rhs, lhs, rhs))

        lhs = m(u, m(v, u))
        rhs = la.sub(la.scale(nu, v), la.scale(f(u, v), u))
        rep.checks.append(IdentityCheck("u_vu", s, lhs == rhs, lhs, rhs))

        if f(u, v) or f(u, w) or f(v, w):
            rep.checks.append(IdentityCheck("orthogonal_triple", s, None, note="not pairwise orthogonal"))
            continue
        a = m(u, m(v, w))
        b = la.neg(m(uv, w))
        c = m(m(v, u), w)
        rep.checks.append(IdentityCheck("orthogonal_triple", s, a == b == c, a, (b, c)))
    return rep


def random_vector(V: VectorProductAlgebra, rng: random.Random) -> tuple:
    return tuple(V.field.random(rng) for _ in range(V.dim))


def orthogonalize(V: VectorProductAlgebra, vectors: Sequence[tuple]) -> list[tuple]:
    """Gram-Schmidt without normalization; isotropic intermediate vectors are left as is."""
    out = []
    for x in vectors:
        for y in out:
            ny = V.norm(y)
            if ny:
                x = la.sub(x, la.scale(V.form(x, y) / ny, y))
        out.append(x)
    return out


def random_samples(V: VectorProductAlgebra, count: int, seed: int = 0, orthogonal: bool = False) -> list[tuple]:
    """Seeded random (u, v, w) triples; with ``orthogonal`` they are made pairwise orthogonal."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        t = [random_vector(V, rng) for _ in range(3)]
        if orthogonal:
            t = orthogonalize(V, t)
        out.append(tuple(t))
    return out


def subalgebra_closure(V: VectorProductAlgebra, S: Sequence) -> Subspace:
    """Smallest subspace containing S and closed under the product."""
    F, n = V.field, V.dim
    for s in S:
        if len(s) != n:
            raise DimensionMismatch(f"vector of length {len(s)} for an algebra of dimension {n}")
    U = Subspace.span(F, n, S)
    while True:
        basis = U.basis
        products = [V.mul(a, b) for a in basis for b in basis]
        W = Subspace.span(F, n, list(basis) + products)
        if W.dim == U.dim:
            return U
        U = W
