"""Line-oriented definition files for algebras.

Grammar (see README for a complete example):

    # comment                      blank lines and '#' lines are ignored
    type = trias                   dias | didend | trias | tridend | tricub
    field = Q                      Q | Fp:<prime>
    dim = 2
    basis = e t                    optional; dim whitespace-separated names
    op left                        one block per operation, entries below
    1 1 1 1                        i j k coeff:  e_i op e_j += coeff * e_k
    1 2 2 1/2                      indices are 1-based, coeff is int or p/q

Omitted entries are zero; an omitted operation block is the zero map (a
warning is emitted on stderr).  Values may be quoted.
"""

import sys

from .algebra import OPS, TYPES, AlgebraSpec
from .fields import field_from_name, parse_scalar


class AlgebraFileError(ValueError):
    def __init__(self, line_no, message):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


def _unquote(v):
    v = v.strip()
    if len(v) >= 2 and v[0] == v[-1] and v[0] in "'\"":
        return v[1:-1]
    return v


def parse_algebra(text, warn=None):
    """Parse a definition document into an AlgebraSpec."""
    if warn is None:
        warn = lambda msg: print("warning: %s" % msg, file=sys.stderr)
    header = {}
    blocks = {}
    current_op = None
    header_lines = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("op ") or line == "op":
            name = _unquote(line[2:].strip())
            if not name:
                raise AlgebraFileError(line_no, "operation block without a name")
            if name in blocks:
                raise AlgebraFileError(line_no, "duplicate operation block %r" % name)
            blocks[name] = []
            current_op = name
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            if key in ("type", "field", "dim", "basis"):
                if key in header:
                    raise AlgebraFileError(line_no, "duplicate key %r" % key)
                header[key] = _unquote(value)
                header_lines[key] = line_no
                current_op = None
                continue
            raise AlgebraFileError(line_no, "unknown key %r" % key)
        if current_op is None:
            raise AlgebraFileError(line_no, "entry outside an operation block")
        blocks[current_op].append((line_no, line))

    for key in ("type", "field", "dim"):
        if key not in header:
            raise AlgebraFileError(0, "missing key %r" % key)
    type_tag = header["type"]
    if type_tag not in TYPES:
        raise AlgebraFileError(header_lines["type"],
                               "unknown algebra type %r" % type_tag)
    try:
        field = field_from_name(header["field"])
    except ValueError as exc:
        raise AlgebraFileError(header_lines["field"], str(exc)) from None
    if not header["dim"].isdigit() or int(header["dim"]) < 1:
        raise AlgebraFileError(header_lines["dim"],
                               "dim must be a positive integer")
    dim = int(header["dim"])
    basis = None
    if "basis" in header:
        basis = tuple(header["basis"].split())
        if len(basis) != dim:
            raise AlgebraFileError(header_lines["basis"],
                                   "basis lists %d names for dim %d"
                                   % (len(basis), dim))

    ops = OPS[type_tag]
    for name in blocks:
        if name not in ops:
            raise AlgebraFileError(0, "operation %r does not belong to type %s"
                                   % (name, type_tag))
    for op in ops:
        if op not in blocks:
            warn("operation %r not given; taking it to be zero" % op)

    tables = {op: {} for op in ops}
    for op, entries in blocks.items():
        for line_no, line in entries:
            fieldsplit = line.split()
            if len(fieldsplit) != 4:
                raise AlgebraFileError(
                    line_no, "entry needs 4 tokens (i j k coeff), got %d"
                    % len(fieldsplit))
            try:
                i, j, k = (int(tok) for tok in fieldsplit[:3])
            except ValueError:
                raise AlgebraFileError(line_no, "malformed basis index") from None
            if not all(1 <= t <= dim for t in (i, j, k)):
                raise AlgebraFileError(line_no, "basis index out of range 1..%d" % dim)
            try:
                coeff = parse_scalar(field, fieldsplit[3])
            except (ValueError, ZeroDivisionError) as exc:
                raise AlgebraFileError(line_no, str(exc)) from None
            cell = tables[op].setdefault((i - 1, j - 1), {})
            cell[k - 1] = field.add(cell.get(k - 1, field.zero), coeff)
    try:
        return AlgebraSpec(type_tag, field, dim, basis, tables)
    except ValueError as exc:
        raise AlgebraFileError(0, str(exc)) from None


def serialize_algebra(alg):
    """Canonical text form; parse(serialize(a)) == a."""
    lines = ["type = %s" % alg.type_tag,
             "field = %s" % alg.field.name,
             "dim = %d" % alg.dim,
             "basis = %s" % " ".join(alg.basis)]
    for op in alg.ops:
        lines.append("op %s" % op)
        for (i, j), row in sorted(alg.tables[op].items()):
            for k, c in sorted(row.items()):
                lines.append("%d %d %d %s" % (i + 1, j + 1, k + 1,
                                              alg.field.to_text(c)))
    return "\n".join(lines) + "\n"


def load_algebra(path, warn=None):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read(), warn=warn)
