"""Dyadic rationals, parity sets, and vacuum-stabilizer subgroups.

Elements act on [0, 1] by prefix rewriting: the leaf addresses of the two
trees are complete prefix codes, and ``g`` sends ``.u_i w`` to ``.v_i w``
where ``u_i`` runs over the leaves of the bottom tree and ``v_i`` over the
leaves of the top tree.  The set ``S`` collects the dyadics ``.a_1...a_n 1``
with evenly many ``a_i = 1``; its mirror ``sigma(S)`` asks for evenly many
zeros.  Stabilizing ``S`` is decided by a finite per-leaf parity criterion,
and coincides with two independent tests: bipartiteness of the element's
graph, and the vacuum coefficient being exactly 1 at the chromatic point
``t = 2``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, List, Tuple

from .forests import ThompsonElement, Tree, enumerate_elements, generator, multiply, tree_from_carets
from .scalars import Scalar, parse_scalar, scalar_str

__all__ = [
    "dyadic_word",
    "word_value",
    "sigma_dyadic",
    "in_S",
    "in_sigmaS",
    "prefix_map",
    "apply",
    "parity_criterion",
    "stabilizes",
    "element_c",
    "element_d",
    "zero_count",
    "jones_membership",
    "stabilizer_scan",
]


# ---------------------------------------------------------------------------
# dyadic words


def dyadic_word(t: Fraction | int) -> str:
    """Canonical bit word of a dyadic t in (0, 1); always ends in 1."""
    t = Fraction(t)
    if not 0 < t < 1:
        raise ValueError(f"{t} is not in (0, 1)")
    den = t.denominator
    if den & (den - 1):
        raise ValueError(f"{t} is not dyadic")
    k = den.bit_length() - 1
    return format(t.numerator, f"0{k}b")


def word_value(word: str) -> Fraction:
    """The dyadic .word as a fraction; trailing zeros are harmless."""
    if not word:
        return Fraction(0)
    return Fraction(int(word, 2), 1 << len(word))


def sigma_dyadic(t: Fraction) -> Fraction:
    """Complement every digit before the trailing 1; equals 1 - t + 2^-n."""
    word = dyadic_word(t)
    flipped = "".join("0" if c == "1" else "1" for c in word[:-1])
    return word_value(flipped + "1")


def in_S(t: Fraction) -> bool:
    """Evenly many ones before the trailing 1."""
    word = dyadic_word(t)
    return word[:-1].count("1") % 2 == 0


def in_sigmaS(t: Fraction) -> bool:
    """Evenly many zeros before the trailing 1."""
    word = dyadic_word(t)
    return word[:-1].count("0") % 2 == 0


def zero_count(t: Fraction) -> int:
    """Number of zero digits before the trailing 1."""
    return dyadic_word(t)[:-1].count("0")


# ---------------------------------------------------------------------------
# the prefix-rewriting action


def prefix_map(g: ThompsonElement) -> List[Tuple[str, str]]:
    """(domain, range) leaf-address pairs: bottom-tree leaf i maps to top leaf i."""
    return list(zip(g.tminus.leaf_addresses(), g.tplus.leaf_addresses()))


def apply(g: ThompsonElement, t: Fraction) -> Fraction:
    """Image of the dyadic ``t`` under ``g``.

    Pads t's word with zeros until a unique domain leaf is a prefix, then
    swaps that prefix for the matching range leaf.
    """
    word = dyadic_word(t)
    for u, v in prefix_map(g):
        if len(u) <= len(word):
            if word.startswith(u):
                return word_value(v + word[len(u):])
        elif u.startswith(word) and not u[len(word):].strip("0"):
            return word_value(v)
    raise AssertionError("complete prefix code failed to match")


def parity_criterion(pairs: Iterable[Tuple[str, str]], which: str = "S") -> bool:
    """Per-leaf parity test deciding gS = S (or g sigma(S) = sigma(S)).

    A pair (u, v) rewrites .u w to .v w, so the membership parity of every
    point in the leaf's interval is preserved exactly when u and v agree on
    the parity of their count of ones (zeros for the mirror set).
    """
    digit = {"S": "1", "sigmaS": "0"}.get(which)
    if digit is None:
        raise ValueError(f"unknown parity set {which!r}")
    return all(u.count(digit) % 2 == v.count(digit) % 2 for u, v in pairs)


def stabilizes(g: ThompsonElement, which: str = "S") -> bool:
    """Whether g maps the parity set onto itself."""
    return parity_criterion(prefix_map(g), which)


# ---------------------------------------------------------------------------
# witness elements


def element_c() -> ThompsonElement:
    """The 4-leaf witness rewriting .0a to .00a and .110a to .011a."""
    return multiply(generator(0), generator(1))


def element_d() -> ThompsonElement:
    """The 5-leaf witness stabilizing both parity sets.

    Its rewrite table is .0a -> .000a, .10a -> .0010a, .1100a -> .0011a,
    .1101a -> .01a, .111a -> .1a; iterating it drives every dyadic to 0.
    """
    top = Tree(tree_from_carets({"", "0", "00", "001"}))
    bottom = Tree(tree_from_carets({"", "1", "11", "110"}))
    return ThompsonElement(top, bottom)


# ---------------------------------------------------------------------------
# membership and scanning


def jones_membership(g: ThompsonElement, method: str = "parity") -> bool:
    """Vacuum-stabilizer membership at t = 2, by three independent routes.

    ``parity`` applies the leaf criterion for gS = S; ``bipartite`` 2-colours
    the element's graph; ``vacuum`` checks phi(g) = 1 exactly at the t = 2
    chromatic point.
    """
    if method == "parity":
        return stabilizes(g, "S")
    if method == "bipartite":
        from .graphpoly import is_bipartite, thompson_graph

        return is_bipartite(thompson_graph(g))
    if method == "vacuum":
        from .coeffs import VertexWeights, vacuum

        return vacuum(g, VertexWeights.chromatic(2)) == Scalar.rational(1)
    raise ValueError(f"unknown membership method {method!r}")


def _fixes_vacuum(g: ThompsonElement, t: Scalar, tol: float) -> bool:
    from .graphpoly import vacuum_via_chromatic

    value = vacuum_via_chromatic(g, t)
    if t.is_exact():
        return value == Scalar.rational(1)
    return abs(value.to_float() - 1.0) <= tol


def _scan_chunk(args: Tuple[List[str], str, float]) -> List[str]:
    encodes, t_text, tol = args
    t = parse_scalar(t_text)
    return [
        enc
        for enc in encodes
        if _fixes_vacuum(ThompsonElement.decode(enc), t, tol)
    ]


def stabilizer_scan(
    t: Scalar | int | Fraction | float,
    max_leaves: int,
    workers: int = 1,
    tol: float = 1e-9,
) -> List[ThompsonElement]:
    """All nontrivial reduced elements of at most ``max_leaves`` leaves fixed
    by the vacuum at chromatic parameter ``t``.

    Fixed means the chromatic value of the element's graph equals
    ``t (t-1)^{n-1}``, exactly for exact ``t`` and within ``tol`` otherwise.
    Output order follows the enumeration; ``workers`` only affects wall time.
    """
    t = Scalar.of(t)
    if t.is_exact() and t in (Scalar.rational(0), Scalar.rational(1)):
        raise ValueError("scan undefined at t in {0, 1}")
    elements = list(enumerate_elements(max_leaves))
    if workers <= 1:
        return [g for g in elements if _fixes_vacuum(g, t, tol)]
    encodes = [g.encode() for g in elements]
    step = max(1, (len(encodes) + 4 * workers - 1) // (4 * workers))
    chunks = [encodes[i : i + step] for i in range(0, len(encodes), step)]
    t_text = scalar_str(t)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_scan_chunk, [(c, t_text, tol) for c in chunks])
        hits = [enc for part in results for enc in part]
    return [ThompsonElement.decode(enc) for enc in hits]
