"""Command-line surface: verification reports, kernels, quotients,
factorizations, decompositions and the built-in catalog.

Every command writes one canonical JSON report to stdout and a short text
summary to stderr.  Exit codes: 0 when every check passes, 1 on a
verification failure (the report carries the witness), 2 on malformed input.
"""

import argparse
import os
import sys

from . import serialize as sz
from .brace import (from_matched_pair, to_matched_pair, verify_hopf_brace,
                    verify_matched_pair, ybe_operator, braid_check)
from .errors import BraceError, ParseError
from .linalg import GF, QQ, Subspace
from .skew import catalog, linearize, set_solution, verify_skew_brace
from .structure import (abelianization, huq_commutator, is_abelian_object,
                        is_central_extension, torsion_sequence)
from .subobjects import (PointData, SubBrace, epi_mono_factorize, hkernel,
                         ideal_from_normal, quotient_by_ideal, smash_decompose,
                         verify_morphism)
from .zoo import extended_zoo, morphism_suite


# ------------------------------------------------------------- file loading


def _load_obj(path):
    return sz.load_file(path)


def _load_brace(path):
    """Load a brace file and enforce the format invariant that it verifies."""
    name, brace = sz.brace_from_obj(_load_obj(path), where=path)
    rep = verify_hopf_brace(brace)
    if not rep.ok:
        raise BraceVerificationError(path, rep)
    return name, brace


class BraceVerificationError(BraceError):
    """A loaded object failed verification; carries the report for the CLI."""

    def __init__(self, path, report):
        super().__init__("%s: verification failed: %s"
                         % (path, "; ".join(c.name for c in report.failures())))
        self.report = report


def _load_subspace(path, brace):
    space = sz.subspace_from_obj(_load_obj(path), where=path)
    if space.field != brace.field:
        raise ParseError("%s: subspace field does not match the brace" % path)
    if space.ambient_dim != brace.dim:
        raise ParseError("%s: subspace of k^%d cannot sit in a dimension-%d brace"
                         % (path, space.ambient_dim, brace.dim))
    return space


def _load_morphism(path):
    def loader(p):
        return _load_brace(p)
    name, mor, dom_name, cod_name = sz.load_morphism(path, brace_loader=loader)
    rep = verify_morphism(mor)
    if not rep.ok:
        raise BraceVerificationError(path, rep)
    return name, mor, dom_name, cod_name


def _field_spec(text):
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        tail = text[3:]
        if tail.isdigit():
            try:
                return GF(int(tail))
            except ValueError as e:
                raise ParseError("field spec %r: %s" % (text, e))
    raise ParseError('field spec %r: expected "Q" or "Fp:<prime>"' % text)


def _checks_obj(report):
    return sz.jsonable(report.as_obj())


# ---------------------------------------------------------------- commands


def cmd_verify(args):
    obj = _load_obj(args.file)
    kind = sz.kind_of(obj, where=args.file)
    if kind == "hopf_brace":
        name, brace = sz.brace_from_obj(obj, where=args.file)
        rep = verify_hopf_brace(brace)
        extra = {"dim": brace.dim, "field": sz.field_to_obj(brace.field)}
    elif kind == "skew_brace":
        s = sz.skew_from_obj(obj, where=args.file)
        name, rep = s.name, verify_skew_brace(s)
        extra = {"order": s.order}
    elif kind == "matched_pair":
        name, mp = sz.matched_from_obj(obj, where=args.file)
        rep = verify_matched_pair(mp)
        extra = {"dim": mp.bullet.dim}
    elif kind == "morphism":
        name, mor, dom_name, cod_name = _load_morphism(args.file)
        rep = verify_morphism(mor)
        extra = {"dom": dom_name, "cod": cod_name}
    else:
        raise ParseError("%s: a %s file has nothing to verify on its own"
                         % (args.file, kind))
    report = {"command": "verify", "file": args.file, "kind": kind, "name": name,
              "ok": rep.ok, "checks": _checks_obj(rep)}
    report.update(extra)
    summary = ["%s %s: %d checks, %s" % (kind, name, len(rep.checks),
                                         "all pass" if rep.ok else "FAIL")]
    for c in rep.failures():
        summary.append("  FAIL %s" % c.name)
    return report, summary, 0 if rep.ok else 1


def cmd_ybe(args):
    name, brace = _load_brace(args.file)
    op = ybe_operator(brace)
    holds = braid_check(op)
    report = {"command": "ybe", "file": args.file, "name": name,
              "dim": brace.dim, "operator_size": brace.dim ** 2,
              "braid_holds": holds, "ok": holds}
    if args.emit_matrix:
        report["matrix"] = sz.mat_to_obj(op.mat)
    summary = ["%s: braid relation %s on the %d^2-dimensional operator"
               % (name, "holds" if holds else "FAILS", brace.dim)]
    return report, summary, 0 if holds else 1


def cmd_kernel(args):
    name, mor, dom_name, cod_name = _load_morphism(args.morphism)
    ker = hkernel(mor)
    normal = ker.is_normal()
    report = {"command": "kernel", "morphism": args.morphism, "name": name,
              "dom": dom_name, "cod": cod_name, "kernel_dim": ker.dim,
              "kernel": sz.subspace_to_obj(ker.space),
              "is_sub_brace": ker.is_sub_brace, "is_normal": normal,
              "ok": ker.is_sub_brace and normal}
    summary = ["kernel of %s: dimension %d, %s" %
               (name, ker.dim, "normal" if normal else "NOT normal")]
    return report, summary, 0 if report["ok"] else 1


def cmd_quotient(args):
    name, brace = _load_brace(args.file)
    space = _load_subspace(args.normal_sub, brace)
    sub = SubBrace(brace, space)
    if not sub.is_sub_brace:
        raise BraceError("the given subspace is not a sub-brace")
    ideal = ideal_from_normal(sub)
    q, proj = quotient_by_ideal(brace, ideal)
    report = {"command": "quotient", "file": args.file, "name": name,
              "sub_dim": sub.dim, "ideal_dim": ideal.space.dim,
              "ideal": sz.subspace_to_obj(ideal.space),
              "quotient": sz.brace_to_obj(name + "_quotient", q),
              "projection": sz.mat_to_obj(proj.mat), "ok": True}
    summary = ["%s / (ideal of a dim-%d normal sub-brace): quotient dimension %d"
               % (name, sub.dim, q.dim)]
    return report, summary, 0


def cmd_factorize(args):
    name, mor, dom_name, cod_name = _load_morphism(args.morphism)
    p, i = epi_mono_factorize(mor)
    report = {"command": "factorize", "morphism": args.morphism, "name": name,
              "dom": dom_name, "cod": cod_name,
              "image_dim": p.cod.dim,
              "epi": sz.mat_to_obj(p.mat), "mono": sz.mat_to_obj(i.mat),
              "epi_surjective": p.is_surjective(), "mono_injective": i.is_injective(),
              "recomposes": (i.mat * p.mat) == mor.mat, "ok": True}
    summary = ["%s factors through a dimension-%d image" % (name, p.cod.dim)]
    return report, summary, 0


def cmd_decompose(args):
    name, brace = _load_brace(args.file)
    dec = torsion_sequence(brace)
    comps = [{"grouplike": sz.vec_to_obj(g), "dim": comp.dim}
             for g, comp in dec.components]
    report = {"command": "decompose", "file": args.file, "name": name,
              "torsion_dim": dec.torsion.dim, "free_dim": dec.free.dim,
              "is_skb": dec.is_skb, "components": comps,
              "projection": sz.mat_to_obj(dec.projection.mat),
              "section": sz.mat_to_obj(dec.section.mat),
              "exact": True, "ok": True}
    summary = ["%s: torsion dimension %d, group-like part dimension %d%s"
               % (name, dec.torsion.dim, dec.free.dim,
                  " (skew-brace object)" if dec.is_skb else "")]
    return report, summary, 0


def cmd_commutator(args):
    name, brace = _load_brace(args.file)
    subs = args.sub or []
    if len(subs) > 2:
        raise ParseError("at most two --sub files are accepted")
    full = Subspace.full(brace.field, brace.dim)
    spaces = [_load_subspace(p, brace) for p in subs]
    while len(spaces) < 2:
        spaces.append(full)
    bx, by = (SubBrace(brace, s) for s in spaces)
    for which, sub in (("first", bx), ("second", by)):
        if not sub.is_sub_brace:
            raise BraceError("the %s subspace is not a sub-brace" % which)
    res = huq_commutator(bx, by)
    report = {"command": "commutator", "file": args.file, "name": name,
              "x_dim": bx.dim, "y_dim": by.dim,
              "commutator_dim": res.commutator.dim,
              "commutator": sz.subspace_to_obj(res.commutator.space),
              "quotient_dim": res.quotient.dim,
              "projection": sz.mat_to_obj(res.projection.mat), "ok": True}
    summary = ["commutator in %s: dimension %d, quotient dimension %d"
               % (name, res.commutator.dim, res.quotient.dim)]
    return report, summary, 0


def cmd_abelianize(args):
    name, brace = _load_brace(args.file)
    q, proj, comm = abelianization(brace)
    central = is_central_extension(proj)
    report = {"command": "abelianize", "file": args.file, "name": name,
              "commutator_dim": comm.dim,
              "quotient": sz.brace_to_obj(name + "_ab", q),
              "projection": sz.mat_to_obj(proj.mat),
              "abelian": is_abelian_object(q), "central": central,
              "ok": True}
    summary = ["%s abelianizes to dimension %d (central projection: %s)"
               % (name, q.dim, central)]
    return report, summary, 0


def cmd_matched_pair(args):
    obj = _load_obj(args.file)
    kind = sz.kind_of(obj, where=args.file)
    if args.to:
        if kind != "hopf_brace":
            raise ParseError("%s: --to expects a brace file, got %s" % (args.file, kind))
        name, brace = sz.brace_from_obj(obj, where=args.file)
        rep = verify_hopf_brace(brace)
        if not rep.ok:
            raise BraceVerificationError(args.file, rep)
        mp = to_matched_pair(brace)
        mrep = verify_matched_pair(mp)
        if not mrep.ok:
            raise BraceVerificationError(args.file, mrep)
        report = sz.matched_to_obj(name, mp)
        summary = ["%s: emitted the matched pair of actions" % name]
    else:
        if kind != "matched_pair":
            raise ParseError("%s: --from expects a matched pair file, got %s"
                             % (args.file, kind))
        name, mp = sz.matched_from_obj(obj, where=args.file)
        brace = from_matched_pair(mp)
        report = sz.brace_to_obj(name, brace)
        summary = ["%s: rebuilt the Hopf brace from the matched pair" % name]
    return report, summary, 0


def cmd_skew_lift(args):
    s = sz.skew_from_obj(_load_obj(args.file), where=args.file)
    field = _field_spec(args.field)
    brace = linearize(s, field)
    report = sz.brace_to_obj(s.name or "lift", brace)
    summary = ["%s: lifted to a dimension-%d brace over %s"
               % (s.name, brace.dim, args.field)]
    return report, summary, 0


def cmd_skew_ybe(args):
    s = sz.skew_from_obj(_load_obj(args.file), where=args.file)
    sol = set_solution(s)
    braid = sol.braid_holds()
    bij = sol.bijective()
    table = {}
    for x in range(s.order):
        for y in range(s.order):
            table["%d,%d" % (x, y)] = list(sol.r(x, y))
    ok = braid and bij
    report = {"command": "skew-ybe", "file": args.file, "name": s.name,
              "order": s.order, "braid_holds": braid, "bijective": bij,
              "r": table, "ok": ok}
    summary = ["%s: set-theoretic solution on %d elements, braid relation %s"
               % (s.name, s.order, "holds" if braid else "FAILS")]
    return report, summary, 0 if ok else 1


def cmd_catalog(args):
    skews = catalog()
    braces = extended_zoo()
    entries = {
        "skew": [{"name": s.name, "order": s.order} for s in skews],
        "braces": [{"name": name, "dim": b.dim, "field": sz.field_to_obj(b.field)}
                   for name, b in braces],
        "morphisms": [{"name": e.name, "dom": e.dom_name, "cod": e.cod_name}
                      for e in morphism_suite()],
    }
    written = []
    if args.emit is not None:
        os.makedirs(args.emit, exist_ok=True)

        def emit(fname, obj):
            sz.save(os.path.join(args.emit, fname), obj)
            written.append(fname)

        for s in skews:
            emit("%s_skew.json" % s.name, sz.skew_to_obj(s))
        for name, b in braces:
            emit("%s.json" % name, sz.brace_to_obj(name, b))
        for e in morphism_suite():
            emit("%s_mor.json" % e.name,
                 sz.morphism_to_obj(e.name, e.mor, "%s.json" % e.dom_name,
                                    "%s.json" % e.cod_name))
    report = {"command": "catalog", "entries": entries, "written": written,
              "ok": True}
    summary = ["catalog: %d skew braces, %d braces, %d morphisms"
               % (len(skews), len(braces), len(entries["morphisms"]))]
    if written:
        summary.append("wrote %d files to %s" % (len(written), args.emit))
    return report, summary, 0


def cmd_points_decompose(args):
    pi_name, pi, pi_dom, pi_cod = _load_morphism(args.pi)
    gamma_name, gamma, gamma_dom, gamma_cod = _load_morphism(args.gamma)
    point = PointData(pi, gamma)
    kernel_dim = hkernel(pi).dim
    smash_dot, smash_bullet, iso_dot, iso_bullet = smash_decompose(point)
    checks = {
        "iso_dot_verified": verify_morphism(iso_dot).ok and iso_dot.is_iso(),
        "iso_bullet_verified": verify_morphism(iso_bullet).ok and iso_bullet.is_iso(),
        "smash_dot_verified": verify_hopf_brace(smash_dot).ok,
        "smash_bullet_verified": verify_hopf_brace(smash_bullet).ok,
    }
    ok = all(checks.values())
    report = {"command": "points-decompose", "pi": args.pi, "gamma": args.gamma,
              "total_dim": point.total.dim, "base_dim": point.base.dim,
              "kernel_dim": kernel_dim,
              "smash_dot": sz.brace_to_obj(pi_dom + "_smash_dot", smash_dot),
              "smash_bullet": sz.brace_to_obj(pi_dom + "_smash_bullet", smash_bullet),
              "iso_dot": sz.mat_to_obj(iso_dot.mat),
              "iso_bullet": sz.mat_to_obj(iso_bullet.mat),
              "ok": ok}
    report.update(checks)
    summary = ["point %s | %s: %s decomposes as kernel tensor base (%d = %d x %d)"
               % (pi_name, gamma_name, pi_dom, point.total.dim,
                  report["kernel_dim"], point.base.dim)]
    return report, summary, 0 if ok else 1


# ---------------------------------------------------------------- dispatch


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bracelab",
        description="Exact verification and decomposition of cocommutative "
                    "Hopf braces and skew braces.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="run the full axiom report on a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("ybe", help="braid relation for the derived Yang-Baxter operator")
    p.add_argument("file")
    p.add_argument("--emit-matrix", action="store_true")
    p.set_defaults(func=cmd_ybe)

    p = subs.add_parser("kernel", help="categorical kernel of a morphism")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=cmd_kernel)

    p = subs.add_parser("quotient", help="quotient a brace by a normal sub-brace")
    p.add_argument("file")
    p.add_argument("--normal-sub", required=True)
    p.set_defaults(func=cmd_quotient)

    p = subs.add_parser("factorize", help="epi-mono factorization of a morphism")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=cmd_factorize)

    p = subs.add_parser("decompose", help="torsion / group-like decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = subs.add_parser("commutator", help="Huq commutator of two normal sub-braces")
    p.add_argument("file")
    p.add_argument("--sub", action="append",
                   help="subspace file; repeat for the second argument "
                        "(defaults to the whole brace)")
    p.set_defaults(func=cmd_commutator)

    p = subs.add_parser("abelianize", help="quotient by the total commutator")
    p.add_argument("file")
    p.set_defaults(func=cmd_abelianize)

    p = subs.add_parser("matched-pair", help="convert between braces and matched pairs")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to", action="store_true",
                       help="brace file in, matched pair file out")
    group.add_argument("--from", dest="from_", action="store_true",
                       help="matched pair file in, brace file out")
    p.set_defaults(func=cmd_matched_pair)

    p = subs.add_parser("skew", help="skew brace commands")
    skew_subs = p.add_subparsers(dest="skew_command", required=True)
    q = skew_subs.add_parser("lift", help="linearize a skew brace over a field")
    q.add_argument("file")
    q.add_argument("--field", required=True, help='"Q" or "Fp:<prime>"')
    q.set_defaults(func=cmd_skew_lift)
    q = skew_subs.add_parser("ybe", help="set-theoretic solution and braid check")
    q.add_argument("file")
    q.set_defaults(func=cmd_skew_ybe)

    p = subs.add_parser("catalog", help="list built-in examples, optionally write them")
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=cmd_catalog)

    p = subs.add_parser("points", help="split epimorphism commands")
    point_subs = p.add_subparsers(dest="points_command", required=True)
    q = point_subs.add_parser("decompose", help="smash decomposition of a split projection")
    q.add_argument("--pi", required=True, help="projection morphism file")
    q.add_argument("--gamma", required=True, help="section morphism file")
    q.set_defaults(func=cmd_points_decompose)

    return parser


def _command_label(args):
    label = getattr(args, "command", None) or "bracelab"
    for attr in ("skew_command", "points_command"):
        tail = getattr(args, attr, None)
        if tail:
            label = "%s-%s" % (label, tail)
    return label


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, summary, code = args.func(args)
    except ParseError as e:
        report = {"command": _command_label(args), "ok": False, "error": str(e)}
        sys.stdout.write(sz.dumps(report))
        print("error: %s" % e, file=sys.stderr)
        return 2
    except BraceError as e:
        report = {"command": _command_label(args), "ok": False, "error": str(e)}
        rep = getattr(e, "report", None)
        if rep is not None:
            report["checks"] = _checks_obj(rep)
        sys.stdout.write(sz.dumps(report))
        print("verification failure: %s" % e, file=sys.stderr)
        return 1
    sys.stdout.write(sz.dumps(report))
    for line in summary:
        print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
