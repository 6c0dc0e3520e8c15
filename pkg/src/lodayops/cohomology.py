"""Exact cohomology of the cochain complex and the induced structure on it.

Cochains of degree n flatten to vectors of length |U_n| * d^(n+1) in the
order (parameter index, input tuple, output index); the differential then
becomes a sparse matrix per degree.  There are no cochains below degree 1,
so H^1 = ker d^1; every report states this convention.

Ranks over Q are computed with the fraction-free engine and can be
cross-checked against the independent RREF engine (and against F_p) via the
``engine`` argument; the two must agree before a dimension is trusted.
"""

from dataclasses import dataclass

from . import linalg
from .cochains import Cochain, diff_d, dot, bracket, zero_cochain
from .params import family_size

ENGINES = ("bareiss", "rref")


@dataclass(frozen=True)
class DifferentialMatrix:
    """Sparse matrix of d: C^n -> C^(n+1); entries sorted by (row, col)."""

    degree: int
    nrows: int
    ncols: int
    entries: tuple

    def dense_rows(self, field):
        rows = [[field.zero] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries:
            rows[r][c] = v
        return rows

    def column_maps(self):
        cols = {}
        for r, c, v in self.entries:
            cols.setdefault(c, {})[r] = v
        return cols

    def apply(self, vec, field):
        out = [field.zero] * self.nrows
        for r, c, v in self.entries:
            if vec[c] != field.zero:
                out[r] = field.add(out[r], field.mul(v, vec[c]))
        return out


def cochain_dim(alg, n):
    return family_size(alg.kind, n) * alg.dim ** (n + 1)


def cochain_to_vector(f):
    out = []
    for rows in f.table:
        for row in rows:
            out.extend(row)
    return out


def vector_to_cochain(alg, n, vec):
    d = alg.dim
    un = family_size(alg.kind, n)
    table = []
    pos = 0
    for _ in range(un):
        rows = []
        for _ in range(d ** n):
            rows.append(list(vec[pos:pos + d]))
            pos += d
        table.append(rows)
    return Cochain(alg, n, table)


def matrix_of_d(ctx, n):
    """Matrix of d on degree n, assembled column by column from basis cochains."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    cached = ctx.matrix_cache.get(n)
    if cached is not None:
        return cached
    alg = ctx.alg
    z = alg.field.zero
    ncols = cochain_dim(alg, n)
    nrows = cochain_dim(alg, n + 1)
    entries = []
    basis = zero_cochain(alg, n)
    col = 0
    for u_idx in range(len(basis.table)):
        for flat in range(len(basis.table[u_idx])):
            for out_idx in range(alg.dim):
                basis.table[u_idx][flat][out_idx] = alg.field.one
                image = diff_d(ctx, basis)
                basis.table[u_idx][flat][out_idx] = z
                row = 0
                for rows in image.table:
                    for rr in rows:
                        for v in rr:
                            if v != z:
                                entries.append((row, col, v))
                            row += 1
                col += 1
    entries.sort(key=lambda e: (e[0], e[1]))
    matrix = DifferentialMatrix(n, nrows, ncols, tuple(entries))
    ctx.matrix_cache[n] = matrix
    return matrix


def matrix_product_is_zero(a, b, field):
    """Whether the sparse product a*b vanishes (b maps into a's source)."""
    if a.ncols != b.nrows:
        raise ValueError("shape mismatch")
    a_cols = a.column_maps()
    b_cols = b.column_maps()
    for c, bcol in b_cols.items():
        acc = {}
        for mid, bv in bcol.items():
            for r, av in a_cols.get(mid, {}).items():
                acc[r] = field.add(acc.get(r, field.zero), field.mul(av, bv))
        if any(v != field.zero for v in acc.values()):
            return False
    return True


def matrix_rank(matrix, field, engine="bareiss"):
    if engine not in ENGINES:
        raise ValueError("unknown engine %r" % engine)
    rows = matrix.dense_rows(field)
    rows = [r for r in rows if any(v != field.zero for v in r)]
    if engine == "bareiss":
        if field.characteristic != 0:
            raise ValueError("the fraction-free engine runs over Q only")
        return linalg.rank_bareiss(rows)
    return linalg.rank_rref(rows, field)


def _default_engine(field):
    return "bareiss" if field.characteristic == 0 else "rref"


def cohomology_dims(ctx, max_degree, engine=None):
    """[(n, dim H^n)] for 1 <= n <= max_degree; H^1 = ker d^1."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    field = ctx.alg.field
    engine = engine or _default_engine(field)
    ranks = {}
    for n in range(1, max_degree + 1):
        ranks[n] = matrix_rank(matrix_of_d(ctx, n), field, engine)
    out = []
    for n in range(1, max_degree + 1):
        nullity = cochain_dim(ctx.alg, n) - ranks[n]
        boundary_rank = ranks[n - 1] if n > 1 else 0
        out.append((n, nullity - boundary_rank))
    return out


@dataclass(frozen=True)
class CohomologyClass:
    degree: int
    representative: Cochain


def _make_class(ctx, n, rep):
    if not diff_d(ctx, rep).is_zero():
        raise ValueError("representative is not a cocycle")
    return CohomologyClass(n, rep)


def cocycle_representatives(ctx, n):
    """Deterministic cocycle representatives of a basis of H^n."""
    alg = ctx.alg
    field = alg.field
    ncols = cochain_dim(alg, n)
    ker = linalg.kernel_basis(matrix_of_d(ctx, n).dense_rows(field), ncols, field)
    echelon = []
    if n > 1:
        below = matrix_of_d(ctx, n - 1)
        for _, col in sorted(below.column_maps().items()):
            vec = [field.zero] * ncols
            for r, v in col.items():
                vec[r] = v
            linalg.extend_independent(echelon, vec, field)
    reps = []
    for vec in ker:
        if linalg.extend_independent(echelon, vec, field):
            reps.append(_make_class(ctx, n, vector_to_cochain(alg, n, vec)))
    return reps


def coboundary_preimage(ctx, c):
    """Some b with d b = c when c is a coboundary, else None.

    Degree 1 has no incoming differential, so only c = 0 succeeds there;
    the witness returned in that case is the degree-1 zero cochain, standing
    in for the nonexistent degree-0 module.
    """
    field = ctx.alg.field
    n = c.degree
    if n < 2:
        if c.is_zero():
            return zero_cochain(ctx.alg, 1)
        return None
    matrix = matrix_of_d(ctx, n - 1)
    sol = linalg.solve(matrix.dense_rows(field), cochain_to_vector(c), field)
    if sol is None:
        return None
    return vector_to_cochain(ctx.alg, n - 1, sol)


def is_coboundary(ctx, c):
    if c.degree < 2:
        return c.is_zero()
    return coboundary_preimage(ctx, c) is not None


def induced_dot(ctx, a, b):
    """Dot product on cohomology classes: H^m x H^n -> H^(m+n)."""
    return _make_class(ctx, a.degree + b.degree,
                       dot(ctx, a.representative, b.representative))


def induced_bracket(ctx, a, b):
    """Bracket on cohomology classes: H^m x H^n -> H^(m+n-1)."""
    return _make_class(ctx, a.degree + b.degree - 1,
                       bracket(a.representative, b.representative))


@dataclass
class CohomologyReport:
    """Per-degree dimensions and representatives; H^1 = ker d^1."""

    max_degree: int
    dims: list
    representatives: dict


def cohomology_report(ctx, max_degree, engine=None):
    dims = cohomology_dims(ctx, max_degree, engine=engine)
    reps = {n: cocycle_representatives(ctx, n) for n, _ in dims}
    return CohomologyReport(max_degree, dims, reps)


def matrix_triplet_text(matrix):
    """Coordinate-triplet dump, one '<row> <col> <value>' line per entry."""
    return "\n".join("%d %d %s" % (r, c, v) for r, c, v in matrix.entries)


@dataclass(frozen=True)
class GCheck:
    law: str
    degrees: tuple
    passed: bool


@dataclass
class GAlgebraReport:
    max_degree: int
    checks: list
    reps_per_degree: dict

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def check_g_algebra(ctx, max_degree):
    """Verify, up to coboundary, that cohomology is a G-algebra:

    (1) x.y - (-1)^(deg x deg y) y.x is a coboundary;
    (2) [x, y.z] - [x,y].z - (-1)^(|x| deg y) y.[x,z] is a coboundary;
    (3) graded Jacobi for the bracket holds up to coboundary;

    over all representative pairs/triples of total degree <= max_degree.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be >= 2")
    reps = {}
    for n in range(1, max_degree):
        reps[n] = cocycle_representatives(ctx, n)
    checks = []

    def classes(total_max, count):
        degs = [n for n in reps if reps[n]]
        if count == 2:
            for p in degs:
                for q in degs:
                    if p + q <= total_max:
                        for a in reps[p]:
                            for b in reps[q]:
                                yield (a, b)
        else:
            for p in degs:
                for q in degs:
                    for r in degs:
                        if p + q + r <= total_max:
                            for a in reps[p]:
                                for b in reps[q]:
                                    for c in reps[r]:
                                        yield (a, b, c)

    for a, b in classes(max_degree, 2):
        x, y = a.representative, b.representative
        comm = dot(ctx, x, y)
        swapped = dot(ctx, y, x)
        if (x.degree * y.degree) % 2 == 0:
            comm = comm - swapped
        else:
            comm = comm + swapped
        checks.append(GCheck("graded-commutativity", (a.degree, b.degree),
                             is_coboundary(ctx, comm)))

    for a, b, c in classes(max_degree, 3):
        x, y, z = a.representative, b.representative, c.representative
        lhs = bracket(x, dot(ctx, y, z))
        lhs = lhs - dot(ctx, bracket(x, y), z)
        term = dot(ctx, y, bracket(x, z))
        if (x.shifted * y.degree) % 2 == 0:
            lhs = lhs - term
        else:
            lhs = lhs + term
        checks.append(GCheck("bracket-derivation",
                             (a.degree, b.degree, c.degree),
                             is_coboundary(ctx, lhs)))

        jac = bracket(x, bracket(y, z)) - bracket(bracket(x, y), z)
        term = bracket(y, bracket(x, z))
        if (x.shifted * y.shifted) % 2 == 0:
            jac = jac - term
        else:
            jac = jac + term
        checks.append(GCheck("graded-jacobi",
                             (a.degree, b.degree, c.degree),
                             is_coboundary(ctx, jac)))

    return GAlgebraReport(max_degree, checks,
                          {n: len(v) for n, v in reps.items()})
