"""Cochains and the operad structure on them.

A degree-n cochain over an algebra A of dimension d is a total map

    (element of U_n, n-tuple of basis indices)  ->  A,

stored as a dense table of |U_n| * d^n coefficient vectors.  The degree of a
cochain is n >= 1; its shifted degree is |x| = n - 1.  Composition gamma is
driven by the pre-operadic index tables; braces, the comp/bracket/dot
operations and the differential follow the graded sign conventions

    x{x_1,...,x_n} = sum over order-preserving substitutions, sign
                     (-1)^(sum |x_p| * i_p) with i_p the number of inputs
                     in front of x_p,
    x o y   = x{y},
    [x, y]  = x o y - (-1)^(|x||y|) y o x,
    x . y   = (-1)^(deg x) m{x, y},
    d x     = [m, x],

for a multiplication m (a degree-2 cochain with m o m = 0).
"""

from functools import lru_cache
from itertools import combinations, product

from .algebra import STAR_TYPES, multiply, star
from .params import enumerate_params, family_size
from .preoperadic import r_index_tables
from .trees import boundary_symbol, delete_leaf


class Cochain:
    __slots__ = ("alg", "degree", "table")

    def __init__(self, alg, degree, table):
        self.alg = alg
        self.degree = degree
        self.table = table

    @property
    def shifted(self):
        return self.degree - 1

    def value(self, u_idx, basis_tuple):
        d = self.alg.dim
        flat = 0
        for b in basis_tuple:
            flat = flat * d + b
        return self.table[u_idx][flat]

    def is_zero(self):
        z = self.alg.field.zero
        return all(c == z for rows in self.table for row in rows for c in row)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.alg == other.alg
                and self.degree == other.degree and self.table == other.table)

    def __add__(self, other):
        _same_complex(self, other)
        f = self.alg.field
        return Cochain(self.alg, self.degree, [
            [[f.add(a, b) for a, b in zip(ra, rb)]
             for ra, rb in zip(rowsa, rowsb)]
            for rowsa, rowsb in zip(self.table, other.table)])

    def __sub__(self, other):
        _same_complex(self, other)
        f = self.alg.field
        return Cochain(self.alg, self.degree, [
            [[f.sub(a, b) for a, b in zip(ra, rb)]
             for ra, rb in zip(rowsa, rowsb)]
            for rowsa, rowsb in zip(self.table, other.table)])

    def scaled(self, c):
        f = self.alg.field
        return Cochain(self.alg, self.degree, [
            [[f.mul(c, a) for a in row] for row in rows] for rows in self.table])

    def __neg__(self):
        return self.scaled(self.alg.field.neg(self.alg.field.one))

    def entries(self):
        """Yield (u_idx, input_tuple, out_idx, coeff) over nonzero cells."""
        d = self.alg.dim
        z = self.alg.field.zero
        n = self.degree
        for u_idx, rows in enumerate(self.table):
            for flat, row in enumerate(rows):
                tup = None
                for out, c in enumerate(row):
                    if c != z:
                        if tup is None:
                            tup = _unflatten(flat, d, n)
                        yield u_idx, tup, out, c

    def __repr__(self):
        return "Cochain(%s, degree=%d)" % (self.alg, self.degree)


def _same_algebra(a, b):
    if a.alg != b.alg:
        raise ValueError("cochains over different algebras")


def _same_complex(a, b):
    _same_algebra(a, b)
    if a.degree != b.degree:
        raise ValueError("cochains of different degrees")


def _unflatten(flat, d, n):
    out = [0] * n
    for t in range(n - 1, -1, -1):
        out[t] = flat % d
        flat //= d
    return tuple(out)


def zero_cochain(alg, n):
    if n < 1:
        raise ValueError("cochain degree must be >= 1")
    z = alg.field.zero
    un = family_size(alg.kind, n)
    return Cochain(alg, n, [[[z] * alg.dim for _ in range(alg.dim ** n)]
                            for _ in range(un)])


def basis_cochain(alg, n, u_idx, basis_tuple, out_idx):
    c = zero_cochain(alg, n)
    d = alg.dim
    flat = 0
    for b in basis_tuple:
        flat = flat * d + b
    c.table[u_idx][flat][out_idx] = alg.field.one
    return c


def cochain_from_function(alg, n, fn):
    """fn(param_element, basis_tuple) must return a coefficient vector."""
    c = zero_cochain(alg, n)
    for u_idx, e in enumerate(enumerate_params(alg.kind, n)):
        for flat, tup in enumerate(product(range(alg.dim), repeat=n)):
            c.table[u_idx][flat] = list(fn(e, tup))
    return c


def random_cochain(alg, n, rng, span=3):
    """Seeded random cochain with small integer coefficients."""
    f = alg.field
    c = zero_cochain(alg, n)
    for rows in c.table:
        for flat in range(len(rows)):
            rows[flat] = [f.from_fraction(rng.randint(-span, span))
                          for _ in range(alg.dim)]
    return c


def identity_cochain(alg):
    """The operad unit: value x at (r; x) for every r in U_1."""
    c = zero_cochain(alg, 1)
    one = alg.field.one
    for rows in c.table:
        for i in range(alg.dim):
            rows[i][i] = one
    return c


def canonical_multiplication(alg):
    """The type's multiplication cochain pi in degree 2.

    For didend/tridend/tricub the value is x*y for every parameter; for
    trias/dias the three/two weight-2 trees select the operation: extra leaf
    on the right edge -> left product, on the left edge -> right product,
    corolla -> middle product.
    """
    c = zero_cochain(alg, 2)
    if alg.type_tag in STAR_TYPES:
        cells = {}
        for i in range(alg.dim):
            for j in range(alg.dim):
                cells[(i, j)] = star(alg, alg.basis_vector(i), alg.basis_vector(j))
        for rows in c.table:
            for flat, (i, j) in enumerate(product(range(alg.dim), repeat=2)):
                rows[flat] = list(cells[(i, j)])
        return c
    for u_idx, e in enumerate(enumerate_params(alg.kind, 2)):
        parts = e.payload.children
        if len(parts) == 3:
            op = "middle"
        elif parts[0].is_leaf:
            op = "left"
        else:
            op = "right"
        for flat, (i, j) in enumerate(product(range(alg.dim), repeat=2)):
            c.table[u_idx][flat] = multiply(
                alg, op, alg.basis_vector(i), alg.basis_vector(j))
    return c


# -- composition -------------------------------------------------------------

@lru_cache(maxsize=None)
def _composition_data(kind, parts):
    """Index tables for gamma: groups output parameters by their R_0 image."""
    tables = r_index_tables(kind, parts)
    groups = {}
    for u_idx, (i0, islots) in enumerate(tables):
        groups.setdefault(i0, []).append((u_idx, islots))
    return groups


def gamma(f, gs):
    """Operadic composition gamma(f; g_1,...,g_k) of degree sum(deg g_i).

    The value at (r; x_1..x_N) is f at R_0(r) applied to the g_i evaluated
    at (R_i(r), i-th input block).  Assembly iterates the nonzero cells of f
    and of the g_i slices, so sparse factors compose cheaply.
    """
    gs = list(gs)
    if len(gs) != f.degree:
        raise ValueError("gamma needs exactly deg f arguments")
    for g in gs:
        if g.alg != f.alg:
            raise ValueError("cochains over different algebras")
    out = zero_cochain(f.alg, sum(g.degree for g in gs))
    _gamma_into(f, gs, out, False)
    return out


def _gamma_into(f, gs, out, negate):
    """Accumulate (+/-) gamma(f; gs) into out.table in place."""
    alg = f.alg
    d = alg.dim
    z = alg.field.zero
    fmul = alg.field.mul
    faccum = alg.field.sub if negate else alg.field.add
    parts = tuple(g.degree for g in gs)
    n_total = sum(parts)
    groups = _composition_data(alg.kind, parts)

    # Input-index place value of each slot within the composed table row.
    places = []
    acc = n_total
    for n_i in parts:
        acc -= n_i
        places.append(d ** acc)

    # slice_maps[t][islot] : out basis index -> [(flat contribution, coeff)]
    slice_maps = [dict() for _ in parts]

    def slot_options(t, islot):
        cache = slice_maps[t]
        got = cache.get(islot)
        if got is None:
            got = {}
            rows = gs[t].table[islot]
            place = places[t]
            for flat, row in enumerate(rows):
                for c_out, coeff in enumerate(row):
                    if coeff != z:
                        got.setdefault(c_out, []).append((flat * place, coeff))
            cache[islot] = got
        return got

    for u_idx, rows in enumerate(f.table):
        members = groups.get(u_idx)
        if not members:
            continue
        for flat, vec in enumerate(rows):
            if all(c == z for c in vec):
                continue
            ctuple = _unflatten(flat, d, f.degree)
            for out_u, islots in members:
                options = []
                ok = True
                for t in range(len(parts)):
                    opts = slot_options(t, islots[t]).get(ctuple[t])
                    if not opts:
                        ok = False
                        break
                    options.append(opts)
                if not ok:
                    continue
                target = out.table[out_u]
                for combo in product(*options):
                    pos = 0
                    coeff = None
                    for contrib, c in combo:
                        pos += contrib
                        coeff = c if coeff is None else fmul(coeff, c)
                    row = target[pos]
                    for o, a in enumerate(vec):
                        if a != z:
                            row[o] = faccum(row[o], fmul(coeff, a))


# -- braces and derived operations -------------------------------------------

def _brace_into(x, xs, out, negate):
    """Accumulate (+/-) x{x_1,...,x_n} into out (degree already fixed)."""
    n = len(xs)
    k = x.degree
    if n > k:
        return
    ident = identity_cochain(x.alg)
    shifts = [g.shifted for g in xs]
    degrees = [g.degree for g in xs]
    for slots in combinations(range(k), n):
        gs = [ident] * k
        eps = 0
        consumed = 0
        for p, s in enumerate(slots):
            gs[s] = xs[p]
            inputs_before = (s - p) + consumed
            eps += shifts[p] * inputs_before
            consumed += degrees[p]
        _gamma_into(x, gs, out, negate if eps % 2 == 0 else not negate)


def brace(x, xs):
    """x{x_1,...,x_n}: signed sum over all order-preserving substitutions.

    With n > deg x there is no substitution and the result is the zero
    cochain of the formal degree (sum deg x_p) + deg x - n.
    """
    xs = list(xs)
    if not xs:
        return x
    out = zero_cochain(x.alg, sum(g.degree for g in xs) + x.degree - len(xs))
    _brace_into(x, xs, out, False)
    return out


def circ(x, y):
    """The comp operation x o y = x{y}."""
    return brace(x, [y])


def bracket(x, y):
    """[x, y] = x o y - (-1)^(|x||y|) y o x, of degree deg x + deg y - 1."""
    _same_algebra(x, y)
    out = zero_cochain(x.alg, x.degree + y.degree - 1)
    _brace_into(x, [y], out, False)
    _brace_into(y, [x], out, (x.shifted * y.shifted) % 2 == 0)
    return out


class MultContext:
    """An algebra with its canonical multiplication pi and the unit cochain.

    Construction verifies pi o pi = 0 and fails otherwise, so holding a
    context certifies that the differential below squares to zero.
    """

    def __init__(self, alg):
        self.alg = alg
        self.pi = canonical_multiplication(alg)
        self.identity = identity_cochain(alg)
        self.matrix_cache = {}
        if not circ(self.pi, self.pi).is_zero():
            raise ValueError(
                "pi o pi != 0: the %s axioms fail for this algebra" % alg.type_tag)


def dot(ctx, x, y):
    """x . y = (-1)^(deg x) m{x, y}, of degree deg x + deg y."""
    if x.alg != ctx.alg or y.alg != ctx.alg:
        raise ValueError("cochains do not belong to this context")
    term = brace(ctx.pi, [x, y])
    return term if x.degree % 2 == 0 else -term


def diff_d(ctx, x):
    """d x = [m, x] = m o x - (-1)^(|x|) x o m, raising degree by one."""
    if x.alg != ctx.alg:
        raise ValueError("cochain does not belong to this context")
    return bracket(ctx.pi, x)


# -- the explicit differential for associative trialgebras --------------------

@lru_cache(maxsize=None)
def _delta_data(n):
    """For each tree of weight n+1: ((face index in T_n, op symbol) per position)."""
    from .params import encode, ParamElement
    faces = []
    for e in enumerate_params("planar", n + 1):
        t = e.payload
        row = []
        for i in range(n + 2):
            face = delete_leaf(t, i)
            face_idx = encode("planar", ParamElement("planar", n, face))
            row.append((face_idx, boundary_symbol(t, i)))
        faces.append(tuple(row))
    return tuple(faces)


def delta_trias(alg, f):
    """The deformation-style differential on trialgebra cochains:

        (delta f)(psi; a_1..a_{n+1}) =
              a_1 o_0 f(d_0 psi; a_2..a_{n+1})
            + sum_i (-1)^i f(d_i psi; a_1,..., a_i o_i a_{i+1}, ..., a_{n+1})
            + (-1)^(n+1) f(d_{n+1} psi; a_1..a_n) o_{n+1} a_{n+1}

    with the operation symbols o_i read off the tree psi.
    """
    if alg.type_tag != "trias":
        raise ValueError("the explicit differential is defined for trias only")
    n = f.degree
    d = alg.dim
    fld = alg.field
    z = fld.zero
    out = zero_cochain(alg, n + 1)
    data = _delta_data(n)
    for psi_idx, row_data in enumerate(data):
        rows = out.table[psi_idx]
        for flat, a in enumerate(product(range(d), repeat=n + 1)):
            acc = [z] * d
            for i in range(n + 2):
                face_idx, op = row_data[i]
                if i == 0:
                    v = f.value(face_idx, a[1:])
                    if all(c == z for c in v):
                        continue
                    w = multiply(alg, op, alg.basis_vector(a[0]), v)
                elif i == n + 1:
                    v = f.value(face_idx, a[:n])
                    if all(c == z for c in v):
                        continue
                    w = multiply(alg, op, v, alg.basis_vector(a[n]))
                else:
                    prod_vec = multiply(alg, op, alg.basis_vector(a[i - 1]),
                                        alg.basis_vector(a[i]))
                    w = [z] * d
                    for c_mid, coeff in enumerate(prod_vec):
                        if coeff == z:
                            continue
                        v = f.value(face_idx, a[:i - 1] + (c_mid,) + a[i + 1:])
                        for o, c in enumerate(v):
                            if c != z:
                                w[o] = fld.add(w[o], fld.mul(coeff, c))
                if i % 2 == 0:
                    acc = [fld.add(p, q) for p, q in zip(acc, w)]
                else:
                    acc = [fld.sub(p, q) for p, q in zip(acc, w)]
            rows[flat] = acc
    return out
