"""Exact linear algebra over Q and F_p.

Two rank engines are implemented independently on purpose: agreement of
their results is part of the verification protocol, so they must not share
elimination code:

* ``rank_bareiss``: fraction-free (Bareiss) elimination on integer rows;
  rational input is scaled row-wise first.  Intermediate entries are minors
  of the input, so coefficient growth stays bounded at this scale.
* ``rref``: classical Gauss-Jordan reduction over a field object,
  also the workhorse for kernels, solving and representative choices.

All pivoting is first-nonzero and therefore deterministic.
"""

from fractions import Fraction


def clear_row_denominators(row):
    """Scale a row of Fractions by a positive integer to make it integral."""
    lcm = 1
    for a in row:
        den = Fraction(a).denominator
        lcm = lcm * den // _gcd(lcm, den)
    return [int(Fraction(a) * lcm) for a in row]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def rank_bareiss(rows):
    """Rank of a matrix given as integer (or Fraction) rows."""
    if not rows:
        return 0
    m = [clear_row_denominators(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        for r in range(row + 1, nrows):
            mr = m[r]
            factor = mr[col]
            base = m[row]
            if factor:
                for c in range(col, ncols):
                    mr[c] = (mr[c] * p - factor * base[c]) // prev
            else:
                for c in range(col, ncols):
                    if mr[c]:
                        mr[c] = mr[c] * p // prev
        prev = p
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def rref(rows, field):
    """Reduced row echelon form; returns (reduced rows, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != field.zero:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = field.inv(m[row][col])
        m[row] = [field.mul(inv, a) for a in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != field.zero:
                f = m[r][col]
                m[r] = [field.sub(a, field.mul(f, b))
                        for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m, pivots


def rank_rref(rows, field):
    return len(rref(rows, field)[1])


def kernel_basis(rows, ncols, field):
    """Basis of the null space of the matrix (rows act on column vectors)."""
    reduced, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [field.zero] * ncols
        vec[free] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(reduced[r][free])
        basis.append(vec)
    return basis


def solve(rows, rhs, field):
    """A solution x of M x = rhs (free variables set to zero), or None."""
    if not rows:
        return None if any(b != field.zero for b in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, field)
    # a pivot in the rhs column marks inconsistency
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][ncols]
    return x


def extend_independent(echelon, vec, field):
    """Reduce vec against a fully reduced echelon list (mutated, invariant
    maintained); return True and insert when vec enlarges the span."""
    v = list(vec)
    for lead, row in echelon:
        if v[lead] != field.zero:
            f = v[lead]
            v = [field.sub(a, field.mul(f, b)) for a, b in zip(v, row)]
    for i, a in enumerate(v):
        if a != field.zero:
            inv = field.inv(a)
            v = [field.mul(inv, b) for b in v]
            for idx, (lead, row) in enumerate(echelon):
                if row[i] != field.zero:
                    f = row[i]
                    echelon[idx] = (lead, [field.sub(p, field.mul(f, q))
                                           for p, q in zip(row, v)])
            echelon.append((i, v))
            echelon.sort(key=lambda t: t[0])
            return True
    return False
