"""Planar rooted trees whose internal vertices all have valence >= 2.

A tree of weight n has n+1 leaves, labelled 0..n from left to right.  The
bare leaf (weight 0) is representable (leaf deletion on the two-leaf tree
produces it) but is not a member of any parameter family.
"""

from functools import lru_cache
from itertools import product

LEFT = "left"
RIGHT = "right"
MIDDLE = "middle"


class PlanarTree:
    """Immutable planar tree; ``children == ()`` means a leaf."""

    __slots__ = ("children", "weight", "_key", "_hash")

    def __init__(self, children=()):
        children = tuple(children)
        if len(children) == 1:
            raise ValueError("internal vertex with a single child")
        for c in children:
            if not isinstance(c, PlanarTree):
                raise TypeError("children must be PlanarTree instances")
        object.__setattr__(self, "children", children)
        if children:
            w = len(children) - 1 + sum(c.weight for c in children)
        else:
            w = 0
        object.__setattr__(self, "weight", w)
        if children:
            key = (1,) + tuple(c._key for c in children)
        else:
            key = (0,)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("PlanarTree is immutable")

    @property
    def is_leaf(self):
        return not self.children

    def leaf_count(self):
        return self.weight + 1

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        return "PlanarTree(%s)" % tree_text(self)


LEAF = PlanarTree()


def tree_text(t):
    """Nested-parentheses form: the 3-corolla is ``(|,|,|)``."""
    if t.is_leaf:
        return "|"
    return "(" + ",".join(tree_text(c) for c in t.children) + ")"


def parse_tree(text):
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(text):
            raise ValueError("truncated tree text")
        if text[pos] == "|":
            pos += 1
            return LEAF
        if text[pos] != "(":
            raise ValueError("unexpected character %r in tree text" % text[pos])
        pos += 1
        children = [parse()]
        while pos < len(text) and text[pos] == ",":
            pos += 1
            children.append(parse())
        if pos >= len(text) or text[pos] != ")":
            raise ValueError("unbalanced tree text")
        pos += 1
        return PlanarTree(children)

    t = parse()
    if pos != len(text):
        raise ValueError("trailing characters in tree text")
    return t


def graft(parts):
    """Join k+1 >= 2 trees left to right under a new root vertex."""
    parts = tuple(parts)
    if len(parts) < 2:
        raise ValueError("grafting needs at least 2 trees")
    return PlanarTree(parts)


def decompose(t):
    """Inverse of graft: the unique list of subtrees under the lowest vertex."""
    if t.is_leaf:
        raise ValueError("a bare leaf does not decompose")
    return list(t.children)


def delete_leaf(t, i):
    """Remove leaf i (0 <= i <= weight); a vertex left with one child is spliced out."""
    if t.is_leaf:
        raise ValueError("cannot delete from a bare leaf")
    if not 0 <= i <= t.weight:
        raise ValueError("leaf index %d out of range for weight %d" % (i, t.weight))
    return _delete(t, i)


def _delete(node, i):
    offset = 0
    children = node.children
    for pos, c in enumerate(children):
        span = c.weight + 1
        if i < offset + span:
            if c.is_leaf:
                rest = children[:pos] + children[pos + 1:]
                if len(rest) == 1:
                    return rest[0]
                return PlanarTree(rest)
            replaced = _delete(c, i - offset)
            return PlanarTree(children[:pos] + (replaced,) + children[pos + 1:])
        offset += span
    raise AssertionError("unreachable: leaf index inside range")


def delete_leaves(t, labels):
    """Composite deletion; executed from right to left so original labels stay valid."""
    for i in sorted(labels, reverse=True):
        t = delete_leaf(t, i)
    return t


def leaf_orientation(t, i):
    """LEFT/RIGHT if leaf i is the extreme child of its vertex, else MIDDLE."""
    if t.is_leaf:
        raise ValueError("a bare leaf has no oriented leaves")
    if not 0 <= i <= t.weight:
        raise ValueError("leaf index %d out of range" % i)
    node = t
    while True:
        offset = 0
        for pos, c in enumerate(node.children):
            span = c.weight + 1
            if i < offset + span:
                if c.is_leaf:
                    if pos == 0:
                        return LEFT
                    if pos == len(node.children) - 1:
                        return RIGHT
                    return MIDDLE
                node, i = c, i - offset
                break
            offset += span


def boundary_symbol(t, i):
    """Operation symbol attached to position i of a tree, 0 <= i <= weight.

    The two boundary positions are classified by the grafting decomposition
    t = t_0 v ... v t_k; interior positions by the orientation of leaf i.
    """
    n1 = t.weight
    if not 0 <= i <= n1:
        raise ValueError("position %d out of range for weight %d" % (i, n1))
    parts = t.children
    k = len(parts) - 1
    if i == 0:
        w0 = parts[0].weight
        if w0 > 0:
            return RIGHT
        return LEFT if k == 1 else MIDDLE
    if i == n1:
        wk = parts[k].weight
        if wk > 0:
            return LEFT
        return RIGHT if k == 1 else MIDDLE
    return leaf_orientation(t, i)


def is_binary(t):
    if t.is_leaf:
        return True
    return len(t.children) == 2 and all(is_binary(c) for c in t.children)


@lru_cache(maxsize=None)
def _trees_with_leaves(leaves, binary):
    if leaves == 1:
        return (LEAF,)
    out = []
    max_parts = 2 if binary else leaves
    for nparts in range(2, max_parts + 1):
        for comp in _compositions(leaves, nparts):
            pools = [_trees_with_leaves(c, binary) for c in comp]
            for combo in product(*pools):
                out.append(PlanarTree(combo))
    out.sort(key=lambda t: t._key)
    return tuple(out)


@lru_cache(maxsize=None)
def _compositions(total, nparts):
    if nparts == 1:
        return ((total,),)
    out = []
    for first in range(1, total - nparts + 2):
        for rest in _compositions(total - first, nparts - 1):
            out.append((first,) + rest)
    return tuple(out)


def planar_trees(n):
    """All trees of weight n >= 1 in canonical order."""
    if n < 1:
        raise ValueError("weight must be >= 1")
    return _trees_with_leaves(n + 1, False)


def binary_trees(n):
    if n < 1:
        raise ValueError("weight must be >= 1")
    return _trees_with_leaves(n + 1, True)
