"""Command-line interface.

Report grammar (stdout): lines starting with '#' are metadata, result lines
are 'CHECK <id> PASS|FAIL', data lines are space-separated key tuples
('H <n> <dim>', 'REP <degree> <index> <entries>').  Reports are
byte-identical across runs for fixed inputs and --seed; timing goes to
stderr.  Exit status: 0 all checks passed, 1 some check failed, 2 bad input.
"""

import argparse
import random
import sys
import time

from . import cohomology
from .algebra import verify_axioms
from .algfile import AlgebraFileError, load_algebra
from .cochains import (MultContext, canonical_multiplication, circ,
                       delta_trias, diff_d, random_cochain, zero_cochain)
from .identities import run_identity_suite
from .params import enumerate_params, param_text
from .preoperadic import AXIOM_IDS, verify_system

KIND_NAMES = ("linear", "binary", "planar", "subsets", "signs")


class Report:
    def __init__(self):
        self.lines = []
        self.failed = False

    def meta(self, text):
        self.lines.append("# %s" % text)

    def data(self, *tokens):
        self.lines.append(" ".join(str(t) for t in tokens))

    def check(self, check_id, ok):
        self.lines.append("CHECK %s %s" % (check_id, "PASS" if ok else "FAIL"))
        if not ok:
            self.failed = True

    def emit(self, stream):
        for line in self.lines:
            print(line, file=stream)


def _load(path):
    try:
        return load_algebra(path)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return None
    except AlgebraFileError as exc:
        print("error: %s: %s" % (path, exc), file=sys.stderr)
        return None


def _context(alg, report):
    """MultContext, or None (recorded as a failed check) if pi o pi != 0."""
    try:
        return MultContext(alg)
    except ValueError:
        report.check("multiplication-square-zero", False)
        return None


def _describe(report, args, alg=None):
    report.meta("command: %s" % " ".join(args))
    if alg is not None:
        report.meta("algebra: type=%s field=%s dim=%d" %
                    (alg.type_tag, alg.field.name, alg.dim))


def cmd_verify_system(ns, report, argv):
    # the worker count affects scheduling only, never the report
    echo = []
    skip = False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--workers":
            skip = True
            continue
        if tok.startswith("--workers="):
            continue
        echo.append(tok)
    _describe(report, echo)
    sysrep = verify_system(ns.kind, ns.max_total, workers=ns.workers)
    report.meta("kind=%s max-total=%d checked=%d" %
                (ns.kind, ns.max_total, sysrep.checked))
    failed_axioms = {c.axiom for c in sysrep.counterexamples}
    for axiom in AXIOM_IDS:
        report.check("pre-operadic-%s" % axiom, axiom not in failed_axioms)
    for c in sysrep.counterexamples[:20]:
        report.data("COUNTEREXAMPLE", c.axiom, "outer=%s" % (c.outer,),
                    "inner=%s" % (c.inner,), "element=%s" % c.element,
                    "expected=%s" % c.expected, "actual=%s" % c.actual)


def cmd_verify_algebra(ns, report, argv):
    alg = _load(ns.file)
    if alg is None:
        return 2
    _describe(report, argv, alg)
    violations = verify_axioms(alg)
    report.check("algebra-axioms", not violations)
    for v in violations[:20]:
        report.data("VIOLATION", "axiom=%d" % v.index, "triple=%s" % (v.triple,),
                    '"%s"' % v.label)
    pi = canonical_multiplication(alg)
    pipi = circ(pi, pi)
    report.check("multiplication-square-zero", pipi.is_zero())
    if not pipi.is_zero():
        z = alg.field.zero
        bad = sorted({u for u, rows in enumerate(pipi.table)
                      for row in rows for c in row if c != z})
        elems = enumerate_params(alg.kind, 3)
        report.data("NONZERO-AT", " ".join(param_text(elems[u]) for u in bad))
    return None


def cmd_cohomology(ns, report, argv):
    alg = _load(ns.file)
    if alg is None:
        return 2
    _describe(report, argv, alg)
    report.meta("convention: H^1 = ker d^1 (there are no degree-0 cochains)")
    ctx = _context(alg, report)
    if ctx is None:
        return None
    engine = "rref" if alg.field.characteristic else "bareiss"
    summary = cohomology.cohomology_report(ctx, ns.max_degree, engine=engine)
    cross = cohomology.cohomology_dims(ctx, ns.max_degree, engine="rref")
    report.check("rank-engines-agree", summary.dims == cross)
    for n, dim in summary.dims:
        report.data("H", n, dim)
    for n, _ in summary.dims:
        for idx, cls in enumerate(summary.representatives[n], 1):
            entries = []
            for u_idx, tup, out, c in cls.representative.entries():
                e = enumerate_params(alg.kind, n)[u_idx]
                entries.append("(%s;%s->%s)=%s" % (
                    param_text(e), ",".join(alg.basis[b] for b in tup),
                    alg.basis[out], alg.field.to_text(c)))
            report.data("REP", n, idx, " ".join(entries) if entries else "0")
    if ns.dump_matrices:
        for n in range(1, ns.max_degree + 1):
            m = cohomology.matrix_of_d(ctx, n)
            report.meta("matrix of d^%d: %d x %d, %d entries"
                        % (n, m.nrows, m.ncols, len(m.entries)))
            for r, c, v in m.entries:
                report.data("MATRIX", n, r, c, alg.field.to_text(v))
    return None


def cmd_compare_differentials(ns, report, argv):
    alg = _load(ns.file)
    if alg is None:
        return 2
    _describe(report, argv, alg)
    if alg.type_tag != "trias":
        print("error: compare-differentials requires a trias algebra",
              file=sys.stderr)
        return 2
    ctx = _context(alg, report)
    if ctx is None:
        return None
    for n in range(1, ns.max_degree + 1):
        ok = True
        basis = zero_cochain(alg, n)
        for u_idx in range(len(basis.table)):
            for flat in range(len(basis.table[u_idx])):
                for out_idx in range(alg.dim):
                    basis.table[u_idx][flat][out_idx] = alg.field.one
                    lhs = diff_d(ctx, basis)
                    rhs = delta_trias(alg, basis)
                    basis.table[u_idx][flat][out_idx] = alg.field.zero
                    if (n + 1) % 2 == 1:
                        rhs = -rhs
                    if lhs != rhs:
                        ok = False
        report.check("d-matches-delta-degree-%d" % n, ok)
    return None


def cmd_gerstenhaber(ns, report, argv):
    alg = _load(ns.file)
    if alg is None:
        return 2
    _describe(report, argv, alg)
    ctx = _context(alg, report)
    if ctx is None:
        return None
    g = cohomology.check_g_algebra(ctx, ns.max_degree)
    for n in sorted(g.reps_per_degree):
        report.data("CLASSES", n, g.reps_per_degree[n])
    by_law = {}
    for c in g.checks:
        by_law.setdefault(c.law, []).append(c)
    for law in ("graded-commutativity", "bracket-derivation", "graded-jacobi"):
        checks = by_law.get(law, [])
        report.meta("%s: %d instances" % (law, len(checks)))
        report.check(law, all(c.passed for c in checks))
        for c in checks:
            if not c.passed:
                report.data("FAILED-AT", law, "degrees=%s" % (c.degrees,))
    return None


def cmd_identities(ns, report, argv):
    alg = _load(ns.file)
    if alg is None:
        return 2
    _describe(report, argv, alg)
    report.meta("samples=%d seed=%d" % (ns.samples, ns.seed))
    ctx = _context(alg, report)
    if ctx is None:
        return None
    rng = random.Random(ns.seed)
    results = run_identity_suite(ctx, rng, ns.samples, random_cochain)
    by_check = {}
    for r in results:
        by_check.setdefault(r.check, []).append(r)
    for check in sorted(by_check):
        rs = by_check[check]
        report.meta("%s: %d instances" % (check, len(rs)))
        report.check(check, all(r.passed for r in rs))
        for r in rs:
            if not r.passed:
                report.data("FAILED-AT", check, "pattern=%s" % (r.pattern,))
    return None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lodayops",
        description="verify and compute the operadic structure on "
                    "cochains of Loday algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-system",
                       help="exhaustively check the structure-function laws")
    p.add_argument("--kind", choices=KIND_NAMES, required=True)
    p.add_argument("--max-total", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(run=cmd_verify_system)

    p = sub.add_parser("verify-algebra",
                       help="check the defining axioms and pi o pi = 0")
    p.add_argument("file")
    p.set_defaults(run=cmd_verify_algebra)

    p = sub.add_parser("cohomology", help="dimensions and representatives")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--dump-matrices", action="store_true",
                   help="dump each differential as coordinate triplets")
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("compare-differentials",
                       help="entrywise check d = (-1)^(n+1) delta (trias)")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=3)
    p.set_defaults(run=cmd_compare_differentials)

    p = sub.add_parser("gerstenhaber",
                       help="check the induced laws on cohomology")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(run=cmd_gerstenhaber)

    p = sub.add_parser("identities",
                       help="randomised brace / homotopy identity suites")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_identities)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    report = Report()
    started = time.monotonic()
    status = ns.run(ns, report, argv)
    report.emit(sys.stdout)
    print("# elapsed %.2fs" % (time.monotonic() - started), file=sys.stderr)
    if status is not None:
        return status
    return 1 if report.failed else 0


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
