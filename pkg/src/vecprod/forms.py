"""
Symmetric bilinear forms given by Gram matrices.

Besides evaluation and polarization this module decides equivalence of
non-degenerate forms.  Over F_p (p odd) two forms are equivalent exactly
when they have the same dimension and their discriminants agree modulo
squares; a witness isometry is built column by column.  Over Q only a
bounded witness search is done, with dimension, discriminant square class
and signature used to certify inequivalence.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import linalg as la
from .errors import DegenerateForm, DimensionMismatch, FieldMismatch, NotSymmetric, OracleTooLarge, ZeroTarget
from .fields import FieldSpec, Scalar, is_square

DEFAULT_HEIGHT_BOUND = 20
# cap on candidate vectors tried by one bounded search over Q
SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class GramForm:
    field: FieldSpec
    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise DimensionMismatch(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not isinstance(x, Scalar) or x.field != self.field:
                    raise FieldMismatch(f"entry {x!r} is not an element of {self.field}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise NotSymmetric(f"gram[{i}][{j}] != gram[{j}][{i}]")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> GramForm:
        return cls(field, la.mat(field, rows))

    @classmethod
    def diagonal(cls, field: FieldSpec, values) -> GramForm:
        vals = [field(v) for v in values]
        n = len(vals)
        return cls(field, tuple(tuple(vals[i] if i == j else field.zero for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __call__(self, u, v) -> Scalar:
        return eval_form(self, u, v)

    def norm(self, u) -> Scalar:
        return eval_form(self, u, u)

    def restrict(self, vectors: Sequence) -> GramForm:
        """Gram matrix of the given vectors."""
        return GramForm(self.field, tuple(tuple(eval_form(self, a, b) for b in vectors) for a in vectors))

    def direct_sum(self, other: GramForm) -> GramForm:
        if other.field != self.field:
            raise FieldMismatch("orthogonal sum of forms over different fields")
        n, m, z = self.dim, other.dim, self.field.zero
        rows = [tuple(r) + (z,) * m for r in self.entries]
        rows += [(z,) * n + tuple(r) for r in other.entries]
        return GramForm(self.field, tuple(rows))

    def scaled(self, c: Scalar) -> GramForm:
        return GramForm(self.field, tuple(tuple(c * x for x in r) for r in self.entries))

    def is_diagonal(self) -> bool:
        return all(not self.entries[i][j] for i in range(self.dim) for j in range(self.dim) if i != j)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient``; the basis is kept in reduced echelon form."""

    field: FieldSpec
    ambient: int
    basis: tuple = ()

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient:
                raise DimensionMismatch(f"vector of length {len(b)} in ambient dimension {self.ambient}")
        R, _ = la.rref(self.field, self.basis, self.ambient)
        canonical = tuple(tuple(r) for r in R)
        object.__setattr__(self, "basis", canonical)

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, vectors=()) -> Subspace:
        return cls(field, ambient, tuple(tuple(v) for v in vectors))

    @classmethod
    def whole(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(field, n, la.identity(field, n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return la.solve_in_span(self.field, self.basis, tuple(v)) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)


def _check_len(G: GramForm, *vs):
    for v in vs:
        if len(v) != G.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for a form of dimension {G.dim}")


def eval_form(G: GramForm, u, v) -> Scalar:
    """Return u^T G v."""
    _check_len(G, u, v)
    total = G.field.zero
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = G.entries[i]
        for j, vj in enumerate(v):
            if vj and row[j]:
                total = total + ui * row[j] * vj
    return total


def polarize(n_uv: Scalar, n_u: Scalar, n_v: Scalar) -> Scalar:
    """Recover <u, v> from N(u + v), N(u) and N(v)."""
    return (n_uv - n_u - n_v) * n_uv.field.half


def discriminant(G: GramForm) -> Scalar:
    return la.det(G.field, G.entries)


def is_nondegenerate(G: GramForm) -> bool:
    return bool(discriminant(G))


def _find_anisotropic(G: GramForm, vectors: Sequence) -> tuple | None:
    """First anisotropic vector in scan order: the vectors, then pairwise sums.

    Returns ``(index_to_replace, vector)`` or None when the span is totally
    isotropic.
    """
    for i, v in enumerate(vectors):
        if eval_form(G, v, v):
            return i, v
    for i, j in itertools.combinations(range(len(vectors)), 2):
        # N(v_i + v_j) = 2<v_i, v_j> once both summands are isotropic
        if eval_form(G, vectors[i], vectors[j]):
            return i, la.add(vectors[i], vectors[j])
    return None


def find_anisotropic(G: GramForm, U: Subspace):
    """An anisotropic vector of U in the deterministic scan order, or None."""
    found = _find_anisotropic(G, U.basis)
    return None if found is None else found[1]


def _diagonal_basis(G: GramForm, vectors: Sequence) -> tuple[list, list]:
    """Orthogonal basis of span(vectors) (assumed independent) and its norms."""
    F = G.field
    remaining = [tuple(v) for v in vectors]
    out, diag = [], []
    while remaining:
        found = _find_anisotropic(G, remaining)
        if found is None:
            out.extend(remaining)
            diag.extend([F.zero] * len(remaining))
            break
        idx, v = found
        del remaining[idx]
        nv = eval_form(G, v, v)
        out.append(v)
        diag.append(nv)
        remaining = [la.sub(w, la.scale(eval_form(G, w, v) / nv, v)) for w in remaining]
    return out, diag


def diagonalize(G: GramForm) -> tuple[tuple, GramForm]:
    """Return ``(T, D)`` with T^T G T = D diagonal; the columns of T are the new basis."""
    F = G.field
    cols, diag = _diagonal_basis(G, la.identity(F, G.dim))
    T = la.columns_to_matrix(F, cols, G.dim)
    return T, GramForm.diagonal(F, diag)


def orthogonal_complement(G: GramForm, U: Subspace) -> Subspace:
    if not is_nondegenerate(G):
        raise DegenerateForm("orthogonal complements need a non-degenerate form")
    if U.ambient != G.dim:
        raise DimensionMismatch(f"subspace of F^{U.ambient} for a form of dimension {G.dim}")
    rows = [la.mat_vec(G.field, G.entries, u) for u in U.basis]
    return Subspace.span(G.field, G.dim, la.nullspace(G.field, rows, G.dim))


def signature(G: GramForm) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a diagonalization over Q."""
    if G.field.is_finite:
        raise ValueError("signature is only defined over Q")
    _, D = diagonalize(G)
    d = [D.entries[i][i].value for i in range(D.dim)]
    return sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d)


def same_square_class(a: Scalar, b: Scalar) -> bool:
    if not a or not b:
        return bool(a) == bool(b)
    return is_square(a / b) is not None


# ----------------------------------------------------------------------------
# representing values


def _rationals_of_height(h: int) -> list[Fraction]:
    """Nonzero rationals n/d in lowest terms with max(|n|, d) == h."""
    out = []
    for d in range(1, h + 1):
        for n in range(1, h + 1):
            if max(n, d) == h and gcd(n, d) == 1:
                out.append(Fraction(n, d))
                out.append(Fraction(-n, d))
    return out


def _solve_diagonal_fp(F: FieldSpec, d: list, t: Scalar) -> list | None:
    nz = [i for i, x in enumerate(d) if x]
    if not nz:
        return None
    y = [F.zero] * len(d)
    if len(nz) == 1:
        r = is_square(t / d[nz[0]])
        if r is None:
            return None
        y[nz[0]] = r
        return y
    i, j = nz[0], nz[1]
    for x in F.elements():
        r = is_square((t - d[i] * x * x) / d[j])
        if r is not None:
            y[i], y[j] = x, r
            return y
    return None


def _solve_diagonal_q(F: FieldSpec, d: list, t: Scalar, height_bound: int, max_support: int = 3) -> list | None:
    nz = [i for i, x in enumerate(d) if x]
    budget = SEARCH_BUDGET
    levels: list[list[Fraction]] = []
    for h in range(1, height_bound + 1):
        levels.append(_rationals_of_height(h))
        upto = [q for lvl in levels for q in lvl]
        for j in nz:
            others = [i for i in nz if i != j]
            for s in range(0, min(len(others), max_support) + 1):
                if s == 0 and h > 1:
                    continue
                for support in itertools.combinations(others, s):
                    for vals in itertools.product(upto, repeat=s):
                        # tuples entirely below height h were tried at an earlier level
                        if s and h > 1 and max(max(abs(q.numerator), q.denominator) for q in vals) < h:
                            continue
                        budget -= 1
                        if budget < 0:
                            return None
                        rest = t
                        for i, q in zip(support, vals):
                            rest = rest - d[i] * F(q) * F(q)
                        r = is_square(rest / d[j])
                        if r is not None:
                            y = [F.zero] * len(d)
                            for i, q in zip(support, vals):
                                y[i] = F(q)
                            y[j] = r
                            return y
    return None


def represent_value(G: GramForm, U: Subspace, t: Scalar, height_bound: int = DEFAULT_HEIGHT_BOUND):
    """A vector v in U with N(v) = t, or None.

    Over F_p the answer is exact.  Over Q, None only means no solution was
    found with free coordinates (in a diagonal basis of U) of height at most
    ``height_bound``.
    """
    F = G.field
    t = F(t)
    if not t:
        raise ZeroTarget("only nonzero values are searched for")
    if U.ambient != G.dim:
        raise DimensionMismatch(f"subspace of F^{U.ambient} for a form of dimension {G.dim}")
    basis, d = _diagonal_basis(G, U.basis)
    if F.is_finite:
        y = _solve_diagonal_fp(F, d, t)
    else:
        y = _solve_diagonal_q(F, d, t, height_bound)
    if y is None:
        return None
    v = la.zero_vector(F, G.dim)
    for c, b in zip(y, basis):
        if c:
            v = la.add(v, la.scale(c, b))
    assert eval_form(G, v, v) == t
    return v


# ----------------------------------------------------------------------------
# equivalence


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Equivalence:
    """Result of :func:`equivalent_forms`; ``witness`` satisfies T^T G2 T = G1."""

    verdict: Verdict
    witness: tuple | None = None
    reason: str = ""
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.verdict is Verdict.EQUIVALENT


def invariant_separation(G1: GramForm, G2: GramForm) -> str | None:
    """A reason why the forms cannot be equivalent, or None if the invariants agree."""
    if G1.dim != G2.dim:
        return f"dimensions differ ({G1.dim} vs {G2.dim})"
    d1, d2 = discriminant(G1), discriminant(G2)
    if not same_square_class(d1, d2):
        return f"discriminants {d1} and {d2} lie in different square classes"
    if not G1.field.is_finite:
        s1, s2 = signature(G1), signature(G2)
        if s1 != s2:
            return f"signatures differ ({s1[0]},{s1[1]}) vs ({s2[0]},{s2[1]})"
    return None


def build_isometry(G1: GramForm, G2: GramForm, height_bound: int = DEFAULT_HEIGHT_BOUND):
    """Try to build T with T^T G2 T = G1 by matching an orthogonal basis of G1."""
    F = G1.field
    n = G1.dim
    if n == 0:
        return ()
    T1, D1 = diagonalize(G1)
    images = []
    U = Subspace.whole(F, n)
    for i in range(n):
        w = represent_value(G2, U, D1.entries[i][i], height_bound)
        if w is None:
            return None
        images.append(w)
        U = orthogonal_complement(G2, Subspace.span(F, n, images))
    W = la.columns_to_matrix(F, images, n)
    T = la.mat_mul(F, W, la.inverse(F, T1))
    if la.mat_mul(F, la.mat_mul(F, la.transpose(T), G2.entries), T) != G1.entries:
        raise AssertionError("constructed isometry failed its own check")
    return T


def equivalent_forms(G1: GramForm, G2: GramForm, height_bound: int = DEFAULT_HEIGHT_BOUND) -> Equivalence:
    if G1.field != G2.field:
        raise FieldMismatch(f"forms over {G1.field} and {G2.field}")
    for G in (G1, G2):
        if not is_nondegenerate(G):
            raise DegenerateForm("equivalence is only decided for non-degenerate forms")
    if G1 == G2:
        return Equivalence(Verdict.EQUIVALENT, la.identity(G1.field, G1.dim), "identical forms")
    reason = invariant_separation(G1, G2)
    if reason is not None:
        return Equivalence(Verdict.NOT_EQUIVALENT, None, reason)
    T = build_isometry(G1, G2, height_bound)
    if T is not None:
        return Equivalence(Verdict.EQUIVALENT, T, "witness constructed")
    if G1.field.is_finite:
        raise AssertionError("matching invariants over F_p must yield a witness")
    return Equivalence(
        Verdict.INCONCLUSIVE, None, f"no witness with coordinates of height <= {height_bound}"
    )


def brute_force_isometry(G1: GramForm, G2: GramForm):
    """Exhaustive search for T with T^T G2 T = G1 over F_p, p <= 5, dim <= 3.

    Columns are assigned one at a time and every vector of F_p^n is tried for
    each column, so this enumerates all matrices with the required Gram
    matrix (all of which are invertible because G1 is).  Used as a test oracle.
    """
    F = G1.field
    if G2.field != F:
        raise FieldMismatch(f"forms over {F} and {G2.field}")
    if not F.is_finite or F.p > 5 or max(G1.dim, G2.dim) > 3:
        raise OracleTooLarge("brute force is limited to F_3/F_5 and dimension <= 3")
    if G1.dim != G2.dim:
        return None
    p, n = F.p, G1.dim
    g1 = [[x.value for x in r] for r in G1.entries]
    g2 = [[x.value for x in r] for r in G2.entries]
    # sparse vectors first, so the identity is found whenever it is a witness
    vectors = sorted(itertools.product(range(p), repeat=n), key=lambda v: (sum(x != 0 for x in v), v[::-1]))
    # G2 v for every v, so <u, v> is a single dot product
    gv = {v: tuple(sum(g2[i][j] * v[j] for j in range(n)) for i in range(n)) for v in vectors}
    norm = {v: sum(a * b for a, b in zip(v, gv[v])) % p for v in vectors}

    by_norm: dict[int, list] = {}
    for v in vectors:
        by_norm.setdefault(norm[v], []).append(v)

    def form(u, v):
        return sum(a * b for a, b in zip(u, gv[v])) % p

    def extend(cols):
        k = len(cols)
        if k == n:
            return cols
        for v in by_norm.get(g1[k][k], ()):
            if any(form(cols[i], v) != g1[i][k] for i in range(k)):
                continue
            found = extend(cols + [v])
            if found is not None:
                return found
        return None

    cols = extend([])
    if cols is None:
        return None
    return tuple(tuple(F(cols[j][i]) for j in range(n)) for i in range(n))
