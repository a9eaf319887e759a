"""Command line interface: ``vecprod <subcommand> ...``.

Exit codes: 0 success, 1 a check failed or the answer is negative,
2 usage / parse / IO errors, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import VectorProductAlgebra, check_axioms
from .classify import IsoStatus, build_isomorphism, obstruction_report
from .doubling import construct_standard, find_multiplicative_base
from .errors import VpaError
from .fields import QQ, GF, FieldSpec
from .forms import DEFAULT_HEIGHT_BOUND, Verdict, equivalent_forms
from .hurwitz import UnitalCompositionAlgebra, check_composition, hurwitz, imaginary_vpa
from .io import emit_algebra, load_algebra

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _field(text: str) -> FieldSpec:
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad modulus in {text!r}") from None
        try:
            return GF(p)
        except VpaError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError(f"field must be Q or Fp:<p>, got {text!r}")


def _csv(F: FieldSpec, text: str) -> list:
    text = text.strip()
    if not text:
        return []
    return [F.parse(s) for s in text.split(",")]


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _combination(v) -> str:
    """Render a coordinate vector as ``b1 - 2*b3``; basis labels are 1-based."""
    terms = []
    for k, c in enumerate(v):
        if not c:
            continue
        s = str(c)
        name = f"b{k + 1}"
        if s == "1":
            t = name
        elif s == "-1":
            t = "-" + name
        else:
            t = f"{s}*{name}"
        terms.append(t)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _height_bound(args) -> int:
    if args.height_bound is not None:
        return args.height_bound
    env = os.environ.get("VPA_HEIGHT_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"VPA_HEIGHT_BOUND must be an integer, got {env!r}") from None
    return DEFAULT_HEIGHT_BOUND


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vpa(path: str) -> VectorProductAlgebra:
    A = load_algebra(path)
    if not isinstance(A, VectorProductAlgebra):
        raise UsageError(f"{path} holds a composition algebra; a vector product algebra is required")
    return A


# ----------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    norms = _csv(args.field, args.base_norms)
    if len(norms) > 3:
        raise UsageError(
            f"{len(norms)} base norms requested: vector product algebras exist only in "
            "dimensions 0, 1, 3 and 7, so at most 3 base norms are allowed"
        )
    V, _ = construct_standard(args.field, norms)
    _write(emit_algebra(V), args.output)
    return EXIT_OK


def _axiom_lines(rep, limit: int) -> list[str]:
    def flag(ok):
        return "ok" if ok else "FAILED"

    lines = [
        f"antisymmetry: {flag(rep.antisymmetry_ok)}",
        f"non-degenerate form: {flag(rep.nondegenerate_ok)}",
        f"<uv,w> = <u,vw> on basis triples: {flag(rep.d1_ok)}",
        f"<uv,uv> = N(u)N(v) - <u,v>^2 (polarized, basis quadruples): {flag(rep.d2_ok)}",
    ]
    for v in rep.violations[:limit]:
        lines.append(f"  violation {v.identity} at {v.indices}: lhs={_show(v.lhs)} rhs={_show(v.rhs)}")
    if len(rep.violations) > limit:
        lines.append(f"  ... {len(rep.violations) - limit} more violations")
    return lines


def _show(x) -> str:
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        return " / ".join(_fmt_vec(y) for y in x)
    return _fmt_vec(x) if isinstance(x, tuple) else str(x)


def cmd_verify(args) -> int:
    A = load_algebra(args.file)
    if isinstance(A, UnitalCompositionAlgebra):
        comp = check_composition(A, sample_count=args.samples, seed=args.seed)
        try:
            axioms = check_axioms(imaginary_vpa(A, check=False))
        except VpaError:
            axioms = None
        ok = comp.ok and axioms is not None and axioms.ok
        if args.json:
            out = {
                "kind": "composition",
                "dim": A.dim,
                "field": str(A.field),
                "ok": ok,
                "composition": comp.as_dict(),
                "imaginary_axioms": axioms.as_dict() if axioms is not None else None,
            }
            print(json.dumps(out, sort_keys=False))
        else:
            print(f"unital composition algebra of dimension {A.dim} over {A.field}")
            print(
                f"N(xy) = N(x)N(y): {'ok' if comp.ok else 'FAILED'} "
                f"({comp.quadruples_checked} polarized quadruples, {comp.pairs_checked} basis pairs, "
                f"{comp.random_pairs_checked} random pairs)"
            )
            for v in comp.violations[: args.limit]:
                print(f"  violation {v.identity} at {v.indices}: lhs={v.lhs} rhs={v.rhs}")
            if axioms is None:
                print("imaginary part: commutators leave the complement of the unit")
            else:
                print("imaginary part as a vector product algebra:")
                print("\n".join("  " + line for line in _axiom_lines(axioms, args.limit)))
            print("result: " + ("PASS" if ok else "FAIL"))
        return EXIT_OK if ok else EXIT_FAIL

    rep = check_axioms(A)
    if args.json:
        out = {"kind": "vector_product", "dim": A.dim, "field": str(A.field)}
        out.update(rep.as_dict())
        print(json.dumps(out))
    else:
        print(f"vector product algebra candidate of dimension {A.dim} over {A.field}")
        print("\n".join(_axiom_lines(rep, args.limit)))
        print("result: " + ("PASS" if rep.ok else "FAIL"))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_multiply(args) -> int:
    A = load_algebra(args.file)
    u, v = A.vector(_csv(A.field, args.u)), A.vector(_csv(A.field, args.v))
    print(",".join(str(x) for x in A.mul(u, v)))
    return EXIT_OK


def cmd_table(args) -> int:
    A = load_algebra(args.file)
    n = A.dim
    if args.json:
        print(json.dumps([[[str(x) for x in cell] for cell in row] for row in A.structure]))
        return EXIT_OK
    cells = [[_combination(A.structure[i][j]) for j in range(n)] for i in range(n)]
    header = [""] + [f"b{j + 1}" for j in range(n)]
    rows = [header] + [[f"b{i + 1}"] + cells[i] for i in range(n)]
    widths = [max(len(r[c]) for r in rows) for c in range(n + 1)]
    for r in rows:
        print("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_hurwitz(args) -> int:
    A = load_algebra(args.file)
    if args.inverse:
        if not isinstance(A, UnitalCompositionAlgebra):
            raise UsageError("--inverse needs a composition algebra document (with identity_index)")
        out = imaginary_vpa(A)
    else:
        if not isinstance(A, VectorProductAlgebra):
            raise UsageError("hurwitz needs a vector product algebra document; use --inverse for the other direction")
        out = hurwitz(A)
    _write(emit_algebra(out), args.output)
    return EXIT_OK


def cmd_base(args) -> int:
    V = _vpa(args.file)
    rep = check_axioms(V)
    if not rep.ok:
        print(f"no multiplicative base: the axioms fail ({len(rep.violations)} violations)", file=sys.stderr)
        return EXIT_FAIL
    base = find_multiplicative_base(V)
    if args.json:
        print(json.dumps({
            "vectors": [[str(x) for x in e] for e in base.vectors],
            "norms": [str(x) for x in base.norms],
        }))
    else:
        print(f"multiplicative base of size {len(base)} (dimension {V.dim} = 2^{len(base)} - 1)")
        for k, (e, nm) in enumerate(zip(base.vectors, base.norms), 1):
            print(f"e{k} = {_fmt_vec(e)}  N = {nm}")
    return EXIT_OK


def _print_matrix(M):
    for row in M:
        print("  ".join(str(x) for x in row))


def cmd_iso(args) -> int:
    V, W = _vpa(args.file_a), _vpa(args.file_b)
    res = build_isomorphism(V, W, _height_bound(args))
    if res.status is IsoStatus.ISOMORPHIC:
        print("isomorphic")
        _print_matrix(res.morphism.matrix)
        return EXIT_OK
    if res.status is IsoStatus.NOT_ISOMORPHIC:
        print(f"not isomorphic: {res.reason}")
        return EXIT_FAIL
    print(f"inconclusive: {res.reason}")
    return EXIT_INCONCLUSIVE


def cmd_forms(args) -> int:
    A, B = load_algebra(args.file_a), load_algebra(args.file_b)
    res = equivalent_forms(A.gram, B.gram, _height_bound(args))
    if res.verdict is Verdict.EQUIVALENT:
        print("equivalent")
        _print_matrix(res.witness)
        return EXIT_OK
    if res.verdict is Verdict.NOT_EQUIVALENT:
        print(f"not equivalent: {res.reason}")
        return EXIT_FAIL
    print(f"inconclusive: {res.reason}")
    return EXIT_INCONCLUSIVE


def cmd_obstruct(args) -> int:
    V = _vpa(args.file)
    r = obstruction_report(V)
    print(f"(a) doubling gives a {r.doubled_dim}-dimensional candidate with {r.d2_violations} violations of <uv,uv> = N(u)N(v) - <u,v>^2")
    if r.first_d2_violation is not None:
        v = r.first_d2_violation
        print(f"    first witness at basis quadruple {v.indices}: lhs={v.lhs} rhs={v.rhs}")
    print("(b) u, v, w = multiplicative base of V, z = doubling element")
    for k, e in zip("uvw", r.base):
        print(f"    {k} = {_fmt_vec(e)}")
    width = max(len(k) for k in r.bracketings)
    for key, val in r.bracketings.items():
        print(f"    {key.ljust(width)} = {_combination(val)}")
    print("    chain 1: u(v(wz)) = u((wv)z) = ((wv)u)z = -((vw)u)z")
    print("    chain 2: u(v(wz)) = (vu)(wz) = (w(vu))z = ((vw)u)z")
    print(f"    both chains force u(v(wz)) = 0 while it is nonzero: {'yes' if r.contradiction else 'no'}")
    print(f"(c) complement of the subalgebra generated by the base: dimension {r.complement_dim}")
    print(f"    basis vectors rejected as a fourth independent element: {len(r.rejected_extensions)} of {V.dim}")
    print(f"    independent 4-subsets of the basis: {r.size4_independent_subsets}")
    print("result: " + ("obstruction demonstrated" if r.demonstrated else "NOT demonstrated"))
    return EXIT_OK if r.demonstrated else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vecprod", description="Exact vector product and composition algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the standard algebra from base norms")
    p.add_argument("--field", type=_field, default=QQ, help="Q or Fp:<p> (default Q)")
    p.add_argument("--base-norms", default="", help="comma separated norms, 0 to 3 of them")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the axioms (and the composition law for unital documents)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--samples", type=int, default=100, help="random pairs for the composition smoke test")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=20, help="violations shown in text mode")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multiply", help="multiply two vectors")
    p.add_argument("file")
    p.add_argument("--u", required=True, help="comma separated coordinates (use --u=-1,0,0 for a leading minus)")
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("table", help="print the basis multiplication table")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hurwitz", help="pass to the unital composition algebra (or back with --inverse)")
    p.add_argument("file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("base", help="find a multiplicative base")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_base)

    p = sub.add_parser("iso", help="decide isomorphism and print a morphism matrix")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--height-bound", type=int)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("forms", help="bilinear form tools")
    fsub = p.add_subparsers(dest="forms_command", required=True)
    q = fsub.add_parser("equiv", help="decide equivalence of the Gram forms of two documents")
    q.add_argument("file_a")
    q.add_argument("file_b")
    q.add_argument("--height-bound", type=int)
    q.set_defaults(func=cmd_forms)

    p = sub.add_parser("obstruct", help="show that a 7-dimensional algebra cannot be doubled again")
    p.add_argument("file")
    p.set_defaults(func=cmd_obstruct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, VpaError, OSError) as exc:
        print(f"vecprod {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
