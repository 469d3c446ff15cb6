"""Planar binary trees, forests, and tree-pair elements of Thompson's group F.

Trees are encoded by their preorder bit string: ``1`` for an internal node
(a caret), ``0`` for a leaf, e.g. ``"10100"`` is the right comb with three
leaves.  A forest is a tuple of trees.  A group element is a *reduced* pair
``(tplus, tminus)`` of trees with the same number of leaves; the pair is
reduced when no leaf index carries a caret in both trees simultaneously
(such a common caret can be cancelled from both sides without changing the
element).

Multiplication follows the function-composition order: ``multiply(g, h)``
acts as ``g`` after ``h`` under the piecewise-linear action on [0, 1]
(``subgroups.apply``).  Generators satisfy ``x_n x_k = x_k x_{n+1}`` for
``k < n``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

LEAF_BITS = "0"

# ---------------------------------------------------------------------------
# bit-string core
# ---------------------------------------------------------------------------


def is_tree_bits(bits: str) -> bool:
    """True when ``bits`` is the preorder encoding of a binary tree."""
    pending = 1
    for b in bits:
        if pending == 0:
            return False
        pending += 1 if b == "1" else -1
    return pending == 0


def leaf_count(bits: str) -> int:
    return bits.count("0")


def split_bits(bits: str) -> tuple[str, str]:
    """Left and right subtree encodings of a caret."""
    if bits[0] != "1":
        raise ValueError("cannot split a leaf")
    pending, i = 1, 1
    while pending:
        pending += 1 if bits[i] == "1" else -1
        i += 1
    return bits[1:i], bits[i:]


@lru_cache(maxsize=None)
def all_tree_bits(n: int) -> tuple[str, ...]:
    """All trees with n leaves, in recursive left-split order (Catalan many)."""
    if n < 1:
        return ()
    if n == 1:
        return (LEAF_BITS,)
    out = []
    for k in range(1, n):
        for left in all_tree_bits(k):
            for right in all_tree_bits(n - k):
                out.append("1" + left + right)
    return tuple(out)


def sibling_leaf_indices(bits: str) -> frozenset[int]:
    """Leaf indices i such that leaves i and i+1 are children of one caret.

    These are the canonical cancellation spots: the pattern ``100`` in the
    preorder string.  Indices are 0-based.
    """
    out = []
    zeros = 0
    for j in range(len(bits)):
        if bits[j] == "0":
            zeros += 1
        elif bits.startswith("100", j):
            out.append(zeros)
    return frozenset(out)


def sibling_mask(bits: str) -> int:
    """sibling_leaf_indices packed into an int bitmask (bit i set for index i)."""
    mask = 0
    zeros = 0
    for j in range(len(bits)):
        if bits[j] == "0":
            zeros += 1
        elif bits.startswith("100", j):
            mask |= 1 << zeros
    return mask


def contract_at(bits: str, leaf_index: int) -> str:
    """Replace the caret over sibling leaves (leaf_index, leaf_index+1) by a leaf."""
    zeros = 0
    for j in range(len(bits)):
        if bits[j] == "0":
            zeros += 1
        elif bits.startswith("100", j) and zeros == leaf_index:
            return bits[:j] + "0" + bits[j + 3 :]
    raise ValueError(f"no caret over sibling leaves at index {leaf_index}")


def reduce_bits_pair(bp: str, bm: str) -> tuple[str, str]:
    """Cancel common carets until the pair is reduced."""
    while True:
        common = sibling_mask(bp) & sibling_mask(bm)
        if not common:
            return bp, bm
        i = (common & -common).bit_length() - 1  # lowest common sibling index
        bp = contract_at(bp, i)
        bm = contract_at(bm, i)


def attach(bits: str, subtrees: Sequence[str]) -> str:
    """Graft subtrees (in preorder leaf order) onto the leaves of ``bits``."""
    if len(subtrees) != leaf_count(bits):
        raise ValueError(
            f"need {leaf_count(bits)} subtrees for this tree, got {len(subtrees)}"
        )
    parts = []
    k = 0
    for b in bits:
        if b == "1":
            parts.append("1")
        else:
            parts.append(subtrees[k])
            k += 1
    return "".join(parts)


def leaf_addresses(bits: str) -> tuple[str, ...]:
    """Root-to-leaf 0/1 paths (0 = left) of all leaves, in preorder order."""
    out: list[str] = []
    stack = [""]
    for b in bits:
        addr = stack.pop()
        if b == "1":
            stack.append(addr + "1")
            stack.append(addr + "0")
        else:
            out.append(addr)
    return tuple(out)


def caret_addresses(bits: str) -> frozenset[str]:
    """Root-to-node paths of all carets."""
    out: list[str] = []
    stack = [""]
    for b in bits:
        addr = stack.pop()
        if b == "1":
            out.append(addr)
            stack.append(addr + "1")
            stack.append(addr + "0")
    return frozenset(out)


def tree_from_carets(carets: frozenset[str] | set[str]) -> str:
    """Rebuild the preorder encoding from a prefix-closed caret address set."""
    parts: list[str] = []
    stack = [""]
    while stack:
        addr = stack.pop()
        if addr in carets:
            parts.append("1")
            stack.append(addr + "1")
            stack.append(addr + "0")
        else:
            parts.append("0")
    return "".join(parts)


def reflect_bits(bits: str) -> str:
    """Left-right mirror image of the tree."""
    if bits == LEAF_BITS:
        return bits
    left, right = split_bits(bits)
    return "1" + reflect_bits(right) + reflect_bits(left)


# ---------------------------------------------------------------------------
# object layer
# ---------------------------------------------------------------------------


class Tree:
    """Immutable planar binary tree (preorder bit encoding)."""

    __slots__ = ("bits",)

    def __init__(self, bits: str = LEAF_BITS):
        if not is_tree_bits(bits):
            raise ValueError(f"invalid tree encoding {bits!r}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Tree is immutable")

    @classmethod
    def leaf(cls) -> "Tree":
        return _TREE_LEAF

    @classmethod
    def caret(cls, left: "Tree", right: "Tree") -> "Tree":
        return cls("1" + left.bits + right.bits)

    @classmethod
    def right_comb(cls, n: int) -> "Tree":
        """The n-leaf tree whose carets all hang off the rightmost branch."""
        if n < 1:
            raise ValueError("a tree has at least one leaf")
        return cls("10" * (n - 1) + "0")

    @classmethod
    def left_comb(cls, n: int) -> "Tree":
        if n < 1:
            raise ValueError("a tree has at least one leaf")
        return cls("1" * (n - 1) + "0" * n)

    @property
    def leaves(self) -> int:
        return leaf_count(self.bits)

    @property
    def carets(self) -> int:
        return self.leaves - 1

    def is_leaf(self) -> bool:
        return self.bits == LEAF_BITS

    def children(self) -> tuple["Tree", "Tree"]:
        left, right = split_bits(self.bits)
        return Tree(left), Tree(right)

    def reflect(self) -> "Tree":
        return Tree(reflect_bits(self.bits))

    def leaf_addresses(self) -> tuple[str, ...]:
        return leaf_addresses(self.bits)

    def caret_addresses(self) -> frozenset[str]:
        return caret_addresses(self.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"Tree({self.bits!r})"


_TREE_LEAF = Tree(LEAF_BITS)


class Forest:
    """A finite ordered list of trees."""

    __slots__ = ("trees",)

    def __init__(self, trees: Sequence[Tree]):
        object.__setattr__(self, "trees", tuple(trees))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Forest is immutable")

    @classmethod
    def trivial(cls, width: int) -> "Forest":
        return cls((_TREE_LEAF,) * width)

    @property
    def width(self) -> int:
        return len(self.trees)

    @property
    def leaves(self) -> int:
        return sum(t.leaves for t in self.trees)

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self):
        return hash(self.trees)

    def __repr__(self) -> str:
        return f"Forest([{', '.join(t.bits for t in self.trees)}])"


def compose(upper: Forest, lower: Forest) -> Forest:
    """Graft the trees of ``upper`` onto the leaves of ``lower``, tree by tree.

    Requires ``upper.width == lower.leaves``.  The result has the width of
    ``lower`` and the leaves of ``upper``.
    """
    if upper.width != lower.leaves:
        raise ValueError(
            f"composition mismatch: upper width {upper.width} != lower leaves "
            f"{lower.leaves}"
        )
    subs = [t.bits for t in upper.trees]
    out = []
    k = 0
    for t in lower.trees:
        m = t.leaves
        out.append(Tree(attach(t.bits, subs[k : k + m])))
        k += m
    return Forest(out)


def common_multiple(t: Tree, s: Tree) -> tuple[Forest, Forest]:
    """Forests (p, q) with ``compose(p, [t]) == compose(q, [s])``, minimally.

    The common refinement is the tree whose caret set is the union of the
    caret sets of t and s.
    """
    carets = t.caret_addresses() | s.caret_addresses()

    def complements(base: Tree) -> Forest:
        subs = []
        for addr in base.leaf_addresses():
            below = frozenset(
                c[len(addr) :] for c in carets if c.startswith(addr)
            )
            subs.append(Tree(tree_from_carets(below)))
        return Forest(subs)

    return complements(t), complements(s)


class ThompsonElement:
    """A reduced tree pair (tplus, tminus) with equal leaf counts."""

    __slots__ = ("tplus", "tminus")

    def __init__(self, tplus: Tree, tminus: Tree):
        if tplus.leaves != tminus.leaves:
            raise ValueError(
                f"tree pair leaf mismatch: {tplus.leaves} vs {tminus.leaves}"
            )
        bp, bm = reduce_bits_pair(tplus.bits, tminus.bits)
        object.__setattr__(self, "tplus", Tree(bp))
        object.__setattr__(self, "tminus", Tree(bm))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ThompsonElement is immutable")

    @classmethod
    def identity(cls) -> "ThompsonElement":
        return cls(_TREE_LEAF, _TREE_LEAF)

    @property
    def leaves(self) -> int:
        return self.tplus.leaves

    def is_identity(self) -> bool:
        return self.tplus.is_leaf()

    def inverse(self) -> "ThompsonElement":
        return ThompsonElement(self.tminus, self.tplus)

    def encode(self) -> str:
        return f"pair:{self.tplus.bits},{self.tminus.bits}"

    @classmethod
    def decode(cls, text: str) -> "ThompsonElement":
        if not text.startswith("pair:") or "," not in text:
            raise ValueError(f"bad element encoding {text!r}")
        bp, bm = text[5:].split(",", 1)
        return cls(Tree(bp), Tree(bm))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ThompsonElement)
            and self.tplus == other.tplus
            and self.tminus == other.tminus
        )

    def __hash__(self):
        return hash((self.tplus.bits, self.tminus.bits))

    def __repr__(self) -> str:
        return f"ThompsonElement({self.encode()})"

    def __mul__(self, other: "ThompsonElement") -> "ThompsonElement":
        return multiply(self, other)

    def __pow__(self, n: int) -> "ThompsonElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = ThompsonElement.identity()
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            base = multiply(base, base)
            n >>= 1
        return result


def generator(n: int) -> ThompsonElement:
    """The generator x_n; x_0 maps 1/2 to 1/4 under the PL action."""
    if n < 0:
        raise ValueError("generator index must be >= 0")
    prefix = "10" * n
    return ThompsonElement(Tree(prefix + "11000"), Tree(prefix + "10100"))


def multiply(g: ThompsonElement, h: ThompsonElement) -> ThompsonElement:
    """Group product g.h, acting as g after h."""
    p, q = common_multiple(g.tminus, h.tplus)
    top = compose(p, Forest([g.tplus])).trees[0]
    bot = compose(q, Forest([h.tminus])).trees[0]
    return ThompsonElement(top, bot)


def shift(g: ThompsonElement) -> ThompsonElement:
    """The shift endomorphism: hangs the pair under a fresh root caret.

    Sends x_n to x_{n+1}; the image acts trivially on [0, 1/2].
    """
    return ThompsonElement(
        Tree("10" + g.tplus.bits), Tree("10" + g.tminus.bits)
    )


def mirror(g: ThompsonElement) -> ThompsonElement:
    """The flip automorphism (left-right reflection of both trees).

    Under the PL action, mirror(g)(x) = 1 - g(1 - x); it sends x_0 to its
    inverse.
    """
    return ThompsonElement(g.tplus.reflect(), g.tminus.reflect())


def alpha_double(g: ThompsonElement) -> ThompsonElement:
    """Pair g with its mirror image on the two halves of [0, 1].

    The result acts like a squeezed copy of g on [0, 1/2] and of mirror(g)
    on [1/2, 1]; it is a fixed point of :func:`mirror`.
    """
    tp, tm = g.tplus.bits, g.tminus.bits
    return ThompsonElement(
        Tree("1" + tp + reflect_bits(tp)), Tree("1" + tm + reflect_bits(tm))
    )


def enumerate_elements(max_leaves: int) -> Iterator[ThompsonElement]:
    """All reduced nontrivial elements with at most ``max_leaves`` leaves.

    Deterministic order: leaf count ascending, then (tplus, tminus) in
    ``all_tree_bits`` order.  The identity (one leaf) is not produced; pairs
    of equal trees are never reduced, so every yielded element is nontrivial.
    """
    for n in range(2, max_leaves + 1):
        trees = all_tree_bits(n)
        masks = [sibling_mask(b) for b in trees]
        for i, bp in enumerate(trees):
            mp = masks[i]
            for j, bm in enumerate(trees):
                if not (mp & masks[j]):
                    yield ThompsonElement(Tree(bp), Tree(bm))
