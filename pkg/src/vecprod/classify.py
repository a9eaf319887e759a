"""
Isomorphisms between vector product algebras and the dimension obstruction.

Two algebras are matched by growing multiplicative bases in tandem: an
anisotropic ``e`` is taken from the complement of the current subalgebra of
V and an ``f`` of the same norm is searched for in the complement of the
current subalgebra of W.  The base map then extends uniquely to an
isomorphism by sending ``Pi(A)`` to ``Pi(sigma(A))``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import linalg as la
from .algebra import VectorProductAlgebra, Violation, check_axioms, subalgebra_closure
from .doubling import (
    MultiplicativeBase,
    double,
    find_multiplicative_base,
    is_mult_independent,
    pi_basis,
)
from .errors import BadDimension, DimensionMismatch, FieldMismatch, NormMismatch, NotAnAlgebra, NotIndependent, VerificationFailed
from .forms import (
    DEFAULT_HEIGHT_BOUND,
    Subspace,
    Verdict,
    equivalent_forms,
    find_anisotropic,
    orthogonal_complement,
    represent_value,
)


@dataclass(frozen=True, eq=False)
class Morphism:
    """Linear map given by ``matrix`` (target.dim rows, source.dim columns)."""

    source: VectorProductAlgebra
    target: VectorProductAlgebra
    matrix: tuple

    def __post_init__(self):
        if len(self.matrix) != self.target.dim or any(len(r) != self.source.dim for r in self.matrix):
            raise DimensionMismatch(f"matrix must be {self.target.dim}x{self.source.dim}")

    def __call__(self, v) -> tuple:
        if not self.matrix:
            return ()
        return la.mat_vec(self.source.field, self.matrix, v)

    def compose(self, first: Morphism) -> Morphism:
        """``self`` after ``first``."""
        F = self.source.field
        cols = [self(first(b)) for b in first.source.basis()]
        return Morphism(first.source, self.target, la.columns_to_matrix(F, cols, self.target.dim))


@dataclass
class MorphismCheck:
    ok: bool
    violations: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_morphism(M: Morphism) -> MorphismCheck:
    """Exhaustive check of orthogonality and multiplicativity on basis pairs."""
    V, W = M.source, M.target
    images = [M(b) for b in V.basis()]
    out = []
    for i in range(V.dim):
        for j in range(V.dim):
            lhs = W.form(images[i], images[j])
            rhs = V.gram.entries[i][j]
            if lhs != rhs:
                out.append(Violation("orthogonal", (i, j), lhs, rhs))
    for i in range(V.dim):
        for j in range(V.dim):
            lhs = M(V.mul(V.basis_vector(i), V.basis_vector(j)))
            rhs = W.mul(images[i], images[j])
            if lhs != rhs:
                out.append(Violation("multiplicative", (i, j), lhs, rhs))
    return MorphismCheck(not out, out)


def extend_base_morphism(base: MultiplicativeBase, target: VectorProductAlgebra, images: Sequence) -> Morphism:
    """The unique morphism sending ``base[i]`` to ``images[i]``."""
    V = base.algebra
    F = V.field
    if target.field != F:
        raise FieldMismatch(f"source over {F}, target over {target.field}")
    images = [tuple(x) for x in images]
    if len(images) != len(base):
        raise DimensionMismatch(f"{len(base)} base elements but {len(images)} images")
    for i, (e, f) in enumerate(zip(base.vectors, images)):
        if len(f) != target.dim:
            raise DimensionMismatch(f"image {i} has length {len(f)}, target has dimension {target.dim}")
        if V.norm(e) != target.norm(f):
            raise NormMismatch(f"N(e{i}) = {V.norm(e)} but N(image) = {target.norm(f)}")
    cert = is_mult_independent(target, images)
    if not cert:
        raise NotIndependent(f"image {cert.failing}: {cert.reason}")
    if not base.generates():
        raise NotIndependent("the base does not generate the source algebra")
    if V.dim == 0:
        M = Morphism(V, target, tuple(() for _ in range(target.dim)))
    else:
        P = la.columns_to_matrix(F, pi_basis(V, base.vectors), V.dim)
        Q = la.columns_to_matrix(F, pi_basis(target, images), target.dim)
        M = Morphism(V, target, la.mat_mul(F, Q, la.inverse(F, P)))
    check = verify_morphism(M)
    if not check:
        raise VerificationFailed(f"extended map is not a morphism: {check.violations[0]}")
    return M


class IsoStatus(enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IsoResult:
    status: IsoStatus
    morphism: Morphism | None = None
    reason: str = ""

    def __bool__(self):
        return self.status is IsoStatus.ISOMORPHIC


def build_isomorphism(V: VectorProductAlgebra, W: VectorProductAlgebra, height_bound: int = DEFAULT_HEIGHT_BOUND) -> IsoResult:
    if V.field != W.field:
        raise FieldMismatch(f"algebras over {V.field} and {W.field}")
    for name, X in (("first", V), ("second", W)):
        if not check_axioms(X):
            raise NotAnAlgebra(f"the {name} algebra fails the vector product axioms")
    if V.dim != W.dim:
        return IsoResult(IsoStatus.NOT_ISOMORPHIC, reason=f"dimensions differ ({V.dim} vs {W.dim})")
    eq = equivalent_forms(V.gram, W.gram, height_bound)
    if eq.verdict is Verdict.NOT_EQUIVALENT:
        return IsoResult(IsoStatus.NOT_ISOMORPHIC, reason=f"bilinear forms are not equivalent: {eq.reason}")

    F, n = V.field, V.dim
    E: list[tuple] = []
    Fs: list[tuple] = []
    span_v = Subspace.span(F, n)
    span_w = Subspace.span(F, n)
    while span_v.dim < n:
        e = find_anisotropic(V.gram, orthogonal_complement(V.gram, span_v))
        f = represent_value(W.gram, orthogonal_complement(W.gram, span_w), V.norm(e), height_bound)
        if f is None:
            if F.is_finite:
                raise VerificationFailed("equivalent forms over F_p must admit a norm-matching element")
            return IsoResult(
                IsoStatus.INCONCLUSIVE,
                reason=f"no element of norm {V.norm(e)} with coordinates of height <= {height_bound}",
            )
        E.append(e)
        Fs.append(f)
        span_v = subalgebra_closure(V, E)
        span_w = subalgebra_closure(W, Fs)
    base = MultiplicativeBase.of(V, E)
    return IsoResult(IsoStatus.ISOMORPHIC, extend_base_morphism(base, W, Fs), "tandem bases matched")


# ----------------------------------------------------------------------------
# the dimension obstruction


@dataclass
class ObstructionReport:
    doubled_dim: int
    d2_violations: int
    first_d2_violation: Violation | None
    base: tuple
    doubler: tuple
    bracketings: dict
    contradiction: bool
    complement_dim: int
    rejected_extensions: list
    size4_independent_subsets: int

    @property
    def demonstrated(self) -> bool:
        return (
            self.d2_violations > 0
            and self.contradiction
            and self.complement_dim == 0
            and self.size4_independent_subsets == 0
        )


def obstruction_report(V: VectorProductAlgebra) -> ObstructionReport:
    """Show that a 7-dimensional algebra admits no fourth independent element.

    (a) the double by ``mu = 1`` fails the quadratic axiom;
    (b) with u, v, w a base of V and z the doubling element, the two ways of
        rewriting u(v(wz)) that hold in any vector product algebra end at
        x = -((vw)u)z and at ((vw)u)z, and x != 0 here, which forces the
        contradiction u(v(wz)) = 0 despite N(u(v(wz))) = N(u)N(v)N(w)N(z);
    (c) the complement of the subalgebra generated by a size-3 base is zero,
        so no basis vector extends it.
    """
    if V.dim != 7:
        raise BadDimension(f"the obstruction is shown for 7-dimensional algebras, got {V.dim}")
    if not check_axioms(V):
        raise NotAnAlgebra("the input fails the vector product axioms")
    F = V.field
    D = double(V, 1)
    rep = check_axioms(D)

    base = find_multiplicative_base(V)
    lift = lambda x: tuple(x) + la.zero_vector(F, 8)  # noqa: E731
    u, v, w = (lift(e) for e in base.vectors)
    z = la.unit_vector(F, 15, 7)
    m = D.mul
    vw_u_z = m(m(m(v, w), u), z)
    brackets = {
        "u(v(wz))": m(u, m(v, m(w, z))),
        "u((wv)z)": m(u, m(m(w, v), z)),
        "((wv)u)z": m(m(m(w, v), u), z),
        "-((vw)u)z": la.neg(vw_u_z),
        "(vu)(wz)": m(m(v, u), m(w, z)),
        "(w(vu))z": m(m(w, m(v, u)), z),
        "((vw)u)z": vw_u_z,
    }
    # an honest algebra would make both chains equal, forcing x = -x, i.e. x = 0
    direct = brackets["u(v(wz))"]
    contradiction = (
        not la.is_zero(vw_u_z)
        and brackets["-((vw)u)z"] != brackets["((vw)u)z"]
        and D.norm(direct) == V.norm(u[:7]) * V.norm(v[:7]) * V.norm(w[:7])
    )

    span = base.span()
    complement = orthogonal_complement(V.gram, span)
    rejected = []
    for k in range(V.dim):
        b = V.basis_vector(k)
        cert = is_mult_independent(V, list(base.vectors) + [b])
        if not cert:
            rejected.append((k, cert.reason))
    size4 = sum(1 for S in itertools.combinations(V.basis(), 4) if is_mult_independent(V, S))
    return ObstructionReport(
        doubled_dim=D.dim,
        d2_violations=rep.count("d2"),
        first_d2_violation=rep.first("d2"),
        base=base.vectors,
        doubler=z,
        bracketings=brackets,
        contradiction=contradiction,
        complement_dim=complement.dim,
        rejected_extensions=rejected,
        size4_independent_subsets=size4,
    )
