"""Exact vector product algebras, their doubling, Hurwitz algebras and isomorphisms."""

from .algebra import VectorProductAlgebra, check_axioms, check_lemma_vm, multiply, subalgebra_closure
from .classify import build_isomorphism, extend_base_morphism, obstruction_report, verify_morphism
from .doubling import (
    MultiplicativeBase,
    construct_standard,
    double,
    find_multiplicative_base,
    is_mult_independent,
    pi_product,
)
from .fields import GF, QQ, FieldSpec, Scalar, is_square
from .forms import (
    GramForm,
    Subspace,
    brute_force_isometry,
    diagonalize,
    discriminant,
    equivalent_forms,
    eval_form,
    is_nondegenerate,
    orthogonal_complement,
    polarize,
    represent_value,
)
from .hurwitz import UnitalCompositionAlgebra, check_composition, comp_multiply, hurwitz, imaginary_vpa
from .io import emit_algebra, parse_algebra

__version__ = "0.1.0"
