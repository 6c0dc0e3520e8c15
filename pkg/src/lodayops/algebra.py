"""Finite-dimensional Loday algebras given by structure constants.

Supported types and their binary operations:

    dias     ⊣ ⊢          (two associative products, three mixed laws)
    didend   ≺ ≻          (3 axioms; ≺+≻ is associative)
    trias    ⊣ ⊢ ⊥        (11 axioms)
    tridend  ≺ · ≻        (7 axioms; ≺+·+≻ is associative)
    tricub   ⊣ ⊢ ⊥        (9 axioms: all mixed associativity)

Structure constants are stored sparsely: tables[op][(i, j)] = {k: c} means
e_i op e_j = sum_k c e_k.  Axioms are evaluated on basis triples only, which
suffices by multilinearity.
"""

from dataclasses import dataclass

from .fields import QQ

TYPES = ("dias", "didend", "trias", "tridend", "tricub")

OPS = {
    "dias": ("left", "right"),
    "didend": ("left", "right"),
    "trias": ("left", "right", "middle"),
    "tridend": ("left", "middle", "right"),
    "tricub": ("left", "right", "middle"),
}

GLYPHS = {
    "dias": {"left": "⊣", "right": "⊢"},
    "didend": {"left": "≺", "right": "≻"},
    "trias": {"left": "⊣", "right": "⊢", "middle": "⊥"},
    "tridend": {"left": "≺", "middle": "·", "right": "≻"},
    "tricub": {"left": "⊣", "right": "⊢", "middle": "⊥"},
}

# The parameter family indexing each type's cochains.
PARAM_KIND = {
    "dias": "binary",
    "didend": "linear",
    "trias": "planar",
    "tridend": "subsets",
    "tricub": "signs",
}

# Types whose canonical multiplication is the sum of all operations.
STAR_TYPES = ("didend", "tridend", "tricub")


def _axioms():
    l, r, m = "left", "right", "middle"
    dias = [
        ([(l, l)], [(l, l)]),
        ([(l, l)], [(l, r)]),
        ([(r, l)], [(r, l)]),
        ([(l, r)], [(r, r)]),
        ([(r, r)], [(r, r)]),
    ]
    didend = [
        ([(l, l)], [(l, l), (l, r)]),
        ([(r, l)], [(r, l)]),
        ([(l, r), (r, r)], [(r, r)]),
    ]
    trias = dias + [
        ([(l, l)], [(l, m)]),
        ([(m, l)], [(m, l)]),
        ([(l, m)], [(m, r)]),
        ([(r, m)], [(r, m)]),
        ([(m, r)], [(r, r)]),
        ([(m, m)], [(m, m)]),
    ]
    tridend = [
        ([(l, l)], [(l, l), (l, m), (l, r)]),
        ([(r, l)], [(r, l)]),
        ([(l, r), (m, r), (r, r)], [(r, r)]),
        ([(r, m)], [(r, m)]),
        ([(l, m)], [(m, r)]),
        ([(m, l)], [(m, l)]),
        ([(m, m)], [(m, m)]),
    ]
    tricub = [([(o1, o2)], [(o1, o2)])
              for o1 in (l, r, m) for o2 in (l, r, m)]
    return {"dias": dias, "didend": didend, "trias": trias,
            "tridend": tridend, "tricub": tricub}


AXIOMS = _axioms()


def axiom_label(type_tag, index):
    """Human form of axiom <index> (1-based), e.g. '(x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)'."""
    g = GLYPHS[type_tag]
    lhs_terms, rhs_terms = AXIOMS[type_tag][index - 1]
    outer_l = {b for _, b in lhs_terms}
    outer_r = {c for c, _ in rhs_terms}
    assert len(outer_l) == 1 and len(outer_r) == 1
    inner_l = " + ".join("x %s y" % g[a] for a, _ in lhs_terms)
    inner_r = " + ".join("y %s z" % g[d] for _, d in rhs_terms)
    lhs = "(%s) %s z" % (inner_l, g[outer_l.pop()])
    rhs = "x %s (%s)" % (g[outer_r.pop()], inner_r)
    return "%s = %s" % (lhs, rhs)


class AlgebraSpec:
    """A Loday algebra of one of the five types over an exact field."""

    def __init__(self, type_tag, field, dim, basis=None, tables=None):
        if type_tag not in TYPES:
            raise ValueError("unknown algebra type %r" % type_tag)
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.type_tag = type_tag
        self.field = field
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else tuple(
            "e%d" % (i + 1) for i in range(dim))
        if len(self.basis) != dim:
            raise ValueError("basis has %d names for dimension %d"
                             % (len(self.basis), dim))
        self.ops = OPS[type_tag]
        self.tables = {}
        tables = tables or {}
        for op in self.ops:
            clean = {}
            for (i, j), row in tables.get(op, {}).items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise ValueError("basis index out of range in %s table" % op)
                out = {k: c for k, c in row.items() if c != field.zero}
                for k in out:
                    if not 0 <= k < dim:
                        raise ValueError("basis index out of range in %s table" % op)
                if out:
                    clean[(i, j)] = out
            self.tables[op] = clean
        for op in tables:
            if op not in self.ops:
                raise ValueError("operation %r does not belong to type %s"
                                 % (op, type_tag))

    @property
    def kind(self):
        return PARAM_KIND[self.type_tag]

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def __eq__(self, other):
        return (isinstance(other, AlgebraSpec)
                and self.type_tag == other.type_tag
                and self.field == other.field
                and self.dim == other.dim
                and self.basis == other.basis
                and self.tables == other.tables)

    def __repr__(self):
        return "AlgebraSpec(%s, %s, dim=%d)" % (
            self.type_tag, self.field.name, self.dim)


def multiply(alg, op, x, y):
    """Bilinear extension of the structure constants of one operation."""
    if op not in alg.ops:
        raise ValueError("operation %r does not belong to type %s"
                         % (op, alg.type_tag))
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError("element dimension mismatch")
    f = alg.field
    table = alg.tables[op]
    out = alg.zero_vector()
    for i, xi in enumerate(x):
        if xi == f.zero:
            continue
        for j, yj in enumerate(y):
            if yj == f.zero:
                continue
            row = table.get((i, j))
            if not row:
                continue
            scale = f.mul(xi, yj)
            for k, c in row.items():
                out[k] = f.add(out[k], f.mul(scale, c))
    return out


def star(alg, x, y):
    """Sum of all operations; defined for the types whose multiplication is it."""
    if alg.type_tag not in STAR_TYPES:
        raise ValueError("star is not defined for type %s" % alg.type_tag)
    f = alg.field
    out = alg.zero_vector()
    for op in alg.ops:
        v = multiply(alg, op, x, y)
        out = [f.add(a, b) for a, b in zip(out, v)]
    return out


@dataclass(frozen=True)
class AxiomViolation:
    index: int
    label: str
    triple: tuple
    left: tuple
    right: tuple


def _basis_product(alg, op, i, j):
    """Sparse row {k: c} of e_i op e_j."""
    return alg.tables[op].get((i, j), {})


def _nested_left(alg, op_a, op_b, i, j, k):
    """Sparse value of (e_i op_a e_j) op_b e_k."""
    f = alg.field
    out = {}
    for mid, c in _basis_product(alg, op_a, i, j).items():
        for target, c2 in _basis_product(alg, op_b, mid, k).items():
            out[target] = f.add(out.get(target, f.zero), f.mul(c, c2))
    return {t: c for t, c in out.items() if c != f.zero}


def _nested_right(alg, op_c, op_d, i, j, k):
    """Sparse value of e_i op_c (e_j op_d e_k)."""
    f = alg.field
    out = {}
    for mid, c in _basis_product(alg, op_d, j, k).items():
        for target, c2 in _basis_product(alg, op_c, i, mid).items():
            out[target] = f.add(out.get(target, f.zero), f.mul(c, c2))
    return {t: c for t, c in out.items() if c != f.zero}


def _sparse_sum(field, rows):
    out = {}
    for row in rows:
        for t, c in row.items():
            out[t] = field.add(out.get(t, field.zero), c)
    return {t: c for t, c in out.items() if c != field.zero}


def verify_axioms(alg):
    """Evaluate every defining axiom on every basis triple; [] means valid."""
    f = alg.field
    violations = []
    dim = alg.dim
    for a_idx, (lhs_terms, rhs_terms) in enumerate(AXIOMS[alg.type_tag], start=1):
        label = axiom_label(alg.type_tag, a_idx)
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs = _sparse_sum(f, [_nested_left(alg, a, b, i, j, k)
                                          for a, b in lhs_terms])
                    rhs = _sparse_sum(f, [_nested_right(alg, c, d, i, j, k)
                                          for c, d in rhs_terms])
                    if lhs != rhs:
                        left = alg.zero_vector()
                        right = alg.zero_vector()
                        for t, c in lhs.items():
                            left[t] = c
                        for t, c in rhs.items():
                            right[t] = c
                        violations.append(AxiomViolation(
                            a_idx, label, (i, j, k), tuple(left), tuple(right)))
    return violations


# -- fixture corpus ----------------------------------------------------------

# Operations carrying the associative product in the shipped valid fixtures;
# the remaining operations are zero.  These are the minimal assignments whose
# validity reduces to plain associativity.
_ACTIVE_OPS = {
    "dias": ("left", "right"),
    "didend": ("left",),
    "trias": ("left", "right", "middle"),
    "tridend": ("middle",),
    "tricub": ("left", "right", "middle"),
}


def _assoc_table(field, dim):
    """dim 1: the field product.  dim 2: K[t]/(t^2) with basis (e, t)."""
    one = field.one
    if dim == 1:
        return {(0, 0): {0: one}}
    if dim == 2:
        return {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}
    raise ValueError("product fixtures exist for dimensions 1 and 2 only")


def product_fixture(type_tag, dim=1, field=QQ):
    table = _assoc_table(field, dim)
    tables = {op: table for op in _ACTIVE_OPS[type_tag]}
    basis = ("e",) if dim == 1 else ("e", "t")
    return AlgebraSpec(type_tag, field, dim, basis, tables)


def zero_fixture(type_tag, dim=1, field=QQ):
    return AlgebraSpec(type_tag, field, dim, None, {})


def _suspension_layout(type_tag):
    ops = OPS[type_tag]
    names = ["x", "y", "z"]
    names += ["q_%s" % op for op in ops]
    names += ["p_%s" % op for op in ops]
    names += ["w", "u"]
    return ops, names


def _base_weights(type_tag):
    """Integer weights for the nested-product cells of the suspension fixture.

    Cells p[(c, d)] (value of x C (y D z)) all get weight 1; the weights of
    the q-cells (value of (x A y) B z) are then forced by the axioms.  A
    contradiction here would mean the axiom list itself is inconsistent.
    """
    ops = OPS[type_tag]
    p_w = {(c, d): 1 for c in ops for d in ops}
    q_w = {}
    for lhs_terms, rhs_terms in AXIOMS[type_tag]:
        target = sum(p_w[t] for t in rhs_terms)
        unassigned = [t for t in lhs_terms if t not in q_w]
        have = sum(q_w[t] for t in lhs_terms if t in q_w)
        if not unassigned:
            assert have == target, "axiom table inconsistent"
            continue
        for t in unassigned[:-1]:
            q_w[t] = 0
        q_w[unassigned[-1]] = target - have
    for a in ops:
        for b in ops:
            q_w.setdefault((a, b), 1)
    return q_w, p_w


def suspension_fixture(type_tag, field=QQ, bump=None):
    """A valid algebra on which each axiom acts through its own product cell.

    Basis: x, y, z; one q per operation holding x op y; one p per operation
    holding y op z; and w, u spanning the nested products.  With bump=None
    every axiom holds.  bump = ("q"|"p", (op_a, op_b)) adds u to that single
    nested-product cell, so exactly the axioms reading that cell fail.
    """
    ops, names = _suspension_layout(type_tag)
    dim = len(names)
    ix, iy, iz = 0, 1, 2
    iq = {op: 3 + t for t, op in enumerate(ops)}
    ip = {op: 3 + len(ops) + t for t, op in enumerate(ops)}
    iw, iu = dim - 2, dim - 1
    one = field.one
    q_w, p_w = _base_weights(type_tag)
    tables = {op: {} for op in ops}
    for op in ops:
        tables[op][(ix, iy)] = {iq[op]: one}
        tables[op][(iy, iz)] = {ip[op]: one}
    for a in ops:
        for b in ops:
            q_cell = {iw: field.from_fraction(q_w[(a, b)])}
            p_cell = {iw: field.from_fraction(p_w[(a, b)])}
            if bump == ("q", (a, b)):
                q_cell[iu] = one
            if bump == ("p", (a, b)):
                p_cell[iu] = one
            tables[b][(iq[a], iz)] = q_cell
            tables[a][(ix, ip[b])] = p_cell
    return AlgebraSpec(type_tag, field, dim, names, tables)


def mutation_bump(type_tag, index):
    """The nested-product cell read by axiom <index> and by no other axiom."""
    axioms = AXIOMS[type_tag]
    lhs_terms, rhs_terms = axioms[index - 1]
    for c, d in rhs_terms:
        uses = sum((c, d) in rhs for _, rhs in axioms)
        if uses == 1:
            return ("p", (c, d))
    for a, b in lhs_terms:
        uses = sum((a, b) in lhs for lhs, _ in axioms)
        if uses == 1:
            return ("q", (a, b))
    raise ValueError("axiom %d has no private product cell" % index)


def axiom_mutation(type_tag, index, field=QQ):
    """An algebra violating exactly axiom <index> (1-based)."""
    if not 1 <= index <= len(AXIOMS[type_tag]):
        raise ValueError("axiom index out of range")
    return suspension_fixture(type_tag, field, bump=mutation_bump(type_tag, index))
