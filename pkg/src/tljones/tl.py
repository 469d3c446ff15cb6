"""Temperley-Lieb diagrams, their linear combinations, and the tree functor.

A planar (m, n) diagram is a non-crossing perfect matching of m points on a
bottom edge and n points on a top edge.  Points are numbered 1..m and 1..n
left to right; planarity is checked in the circular order bottom left-to-
right followed by top right-to-left.  Composition ``tl_compose(f, g)``
stacks ``f`` on top of ``g`` and reports how many closed loops were erased;
each loop is worth one factor of the loop parameter delta at the linear
level.

:class:`TLMorphism` is a finite linear combination of diagrams of one shape
with :class:`~tljones.scalars.Scalar` coefficients.  The tree functor sends
an n-leaf binary tree to a (1, 2n-1) morphism by replacing every caret with
the elementary vertex ``a*D1 + b*D2``, where D1 routes the input to the
leftmost output with a cup on the right and D2 routes it to the rightmost
output with a cup on the left.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .forests import Forest, Tree
from .scalars import Number, Scalar

Port = tuple[str, int]  # ("b", i) or ("t", j), 1-based


def _pos(port: Port, m: int, n: int) -> int:
    side, i = port
    if side == "b":
        if not 1 <= i <= m:
            raise ValueError(f"bottom index {i} out of range 1..{m}")
        return i - 1
    if side == "t":
        if not 1 <= i <= n:
            raise ValueError(f"top index {i} out of range 1..{n}")
        return m + (n - i)
    raise ValueError(f"bad port side {side!r}")


def _port(pos: int, m: int, n: int) -> Port:
    return ("b", pos + 1) if pos < m else ("t", n - (pos - m))


class TLDiagram:
    """A single planar (m, n) Temperley-Lieb diagram."""

    __slots__ = ("m", "n", "pairing")

    def __init__(self, m: int, n: int, pairing: tuple[int, ...]):
        if (m + n) % 2:
            raise ValueError(f"({m}, {n}) diagram needs an even point count")
        if len(pairing) != m + n:
            raise ValueError("pairing length must be m + n")
        for i, j in enumerate(pairing):
            if not 0 <= j < m + n or j == i or pairing[j] != i:
                raise ValueError("pairing is not a perfect matching")
        stack: list[int] = []
        for i, j in enumerate(pairing):
            if j > i:
                stack.append(i)
            elif not stack or stack.pop() != j:
                raise ValueError("pairing has crossing strands")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairing", tuple(pairing))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("TLDiagram is immutable")

    @classmethod
    def from_pairs(cls, m: int, n: int, pairs: Iterable[tuple[Port, Port]]) -> "TLDiagram":
        pairing = [-1] * (m + n)
        for p, q in pairs:
            i, j = _pos(p, m, n), _pos(q, m, n)
            pairing[i], pairing[j] = j, i
        if -1 in pairing:
            raise ValueError("pairs do not cover every boundary point")
        return cls(m, n, tuple(pairing))

    @classmethod
    def identity(cls, n: int) -> "TLDiagram":
        return cls.from_pairs(n, n, [(("b", i), ("t", i)) for i in range(1, n + 1)])

    @classmethod
    def cup(cls) -> "TLDiagram":
        """The (0, 2) diagram joining the two top points."""
        return cls.from_pairs(0, 2, [(("t", 1), ("t", 2))])

    @classmethod
    def cap(cls) -> "TLDiagram":
        """The (2, 0) diagram joining the two bottom points."""
        return cls.from_pairs(2, 0, [(("b", 1), ("b", 2))])

    def pairs(self) -> frozenset[frozenset[Port]]:
        seen = set()
        for i, j in enumerate(self.pairing):
            if j > i:
                seen.add(frozenset({_port(i, self.m, self.n), _port(j, self.m, self.n)}))
        return frozenset(seen)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TLDiagram)
            and (self.m, self.n, self.pairing) == (other.m, other.n, other.pairing)
        )

    def __hash__(self):
        return hash((self.m, self.n, self.pairing))

    def __repr__(self) -> str:
        body = ", ".join(
            "{}{}-{}{}".format(p[0], p[1], q[0], q[1])
            for p, q in (sorted(pair, key=lambda x: (x[0], x[1])) for pair in sorted(
                self.pairs(), key=lambda fs: sorted(fs)
            ))
        )
        return f"TLDiagram({self.m},{self.n}; {body})"


#: elementary (1, 3) diagrams of the caret vertex
D1 = TLDiagram.from_pairs(1, 3, [(("b", 1), ("t", 1)), (("t", 2), ("t", 3))])
D2 = TLDiagram.from_pairs(1, 3, [(("b", 1), ("t", 3)), (("t", 1), ("t", 2))])


def tl_compose(f: TLDiagram, g: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack ``f`` on top of ``g``; return the resulting diagram and loop count.

    Requires ``f.m == g.n`` (the interface).  The result is an
    ``(g.m, f.n)`` diagram.
    """
    if f.m != g.n:
        raise ValueError(f"interface mismatch: f has {f.m} bottom, g has {g.n} top")
    k = f.m

    def g_partner(pos: int) -> int:
        return g.pairing[pos]

    def f_partner(pos: int) -> int:
        return f.pairing[pos]

    # position spaces: g uses 0..g.m+k-1, f uses 0..k+f.n-1.
    # interface j (1..k) = g top j = f bottom j.
    def g_pos_of_interface(j: int) -> int:
        return g.m + (k - j)

    def f_pos_of_interface(j: int) -> int:
        return j - 1

    def interface_of_g_pos(pos: int) -> int | None:
        return k - (pos - g.m) if pos >= g.m else None

    def interface_of_f_pos(pos: int) -> int | None:
        return pos + 1 if pos < k else None

    visited_interface: set[int] = set()

    def walk(start_diag: str, start_pos: int) -> tuple[str, int]:
        """Follow the strand from a boundary point to its other boundary end."""
        diag, pos = start_diag, start_pos
        while True:
            pos = g_partner(pos) if diag == "g" else f_partner(pos)
            j = interface_of_g_pos(pos) if diag == "g" else interface_of_f_pos(pos)
            if j is None:
                return diag, pos
            visited_interface.add(j)
            diag, pos = ("f", f_pos_of_interface(j)) if diag == "g" else (
                "g",
                g_pos_of_interface(j),
            )

    m_out, n_out = g.m, f.n
    pairs: list[tuple[Port, Port]] = []
    done: set[tuple[str, int]] = set()
    boundary = [("g", i) for i in range(g.m)] + [
        ("f", k + off) for off in range(f.n)
    ]
    for diag, pos in boundary:
        if (diag, pos) in done:
            continue
        done.add((diag, pos))
        end_diag, end_pos = walk(diag, pos)
        done.add((end_diag, end_pos))

        def out_port(d: str, p: int) -> Port:
            if d == "g":
                return ("b", p + 1)
            return ("t", f.n - (p - k))

        pairs.append((out_port(diag, pos), out_port(end_diag, end_pos)))

    # interface points not on any boundary path sit on closed loops that
    # alternate g-arcs and f-arcs; walk each cycle once
    loops = 0
    for j in range(1, k + 1):
        if j in visited_interface:
            continue
        loops += 1
        cur, use_g = j, True
        while True:
            visited_interface.add(cur)
            if use_g:
                nxt = interface_of_g_pos(g_partner(g_pos_of_interface(cur)))
            else:
                nxt = interface_of_f_pos(f_partner(f_pos_of_interface(cur)))
            use_g = not use_g
            if nxt == j and use_g:
                break
            cur = nxt
    return TLDiagram.from_pairs(m_out, n_out, pairs), loops


def tl_dagger(f: TLDiagram) -> TLDiagram:
    """Vertical flip: bottom i becomes top i and vice versa."""
    flip = lambda p: ("t" if p[0] == "b" else "b", p[1])
    return TLDiagram.from_pairs(
        f.n, f.m, [(flip(p), flip(q)) for p, q in (tuple(pr) for pr in f.pairs())]
    )


def tl_tensor(f: TLDiagram, g: TLDiagram) -> TLDiagram:
    """Place ``g`` to the right of ``f``."""
    pairs: list[tuple[Port, Port]] = [tuple(pr) for pr in f.pairs()]
    for pr in g.pairs():
        (s1, i1), (s2, i2) = tuple(pr)
        off = lambda s, i: (s, i + (f.m if s == "b" else f.n))
        pairs.append((off(s1, i1), off(s2, i2)))
    return TLDiagram.from_pairs(f.m + g.m, f.n + g.n, pairs)


class TLMorphism:
    """A Scalar-linear combination of (m, n) diagrams."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping[TLDiagram, Scalar]):
        clean = {}
        for diag, coeff in terms.items():
            if (diag.m, diag.n) != (m, n):
                raise ValueError("all diagrams in a morphism must share the shape")
            if not coeff.is_zero():
                clean[diag] = coeff
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("TLMorphism is immutable")

    @classmethod
    def of(cls, diag: TLDiagram, coeff: Number = 1) -> "TLMorphism":
        return cls(diag.m, diag.n, {diag: Scalar.of(coeff)})

    @classmethod
    def identity(cls, n: int) -> "TLMorphism":
        return cls.of(TLDiagram.identity(n))

    def __add__(self, other: "TLMorphism") -> "TLMorphism":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch in morphism sum")
        terms = dict(self.terms)
        for diag, coeff in other.terms.items():
            acc = terms.get(diag)
            terms[diag] = coeff if acc is None else acc + coeff
        return TLMorphism(self.m, self.n, terms)

    def scale(self, factor: Number) -> "TLMorphism":
        s = Scalar.of(factor)
        return TLMorphism(
            self.m, self.n, {diag: coeff * s for diag, coeff in self.terms.items()}
        )

    def compose(self, other: "TLMorphism", delta: Number) -> "TLMorphism":
        """self after other, erasing loops at a factor of delta each."""
        d = Scalar.of(delta)
        out: dict[TLDiagram, Scalar] = {}
        for f, cf in self.terms.items():
            for g, cg in other.terms.items():
                diag, loops = tl_compose(f, g)
                coeff = cf * cg * d**loops
                acc = out.get(diag)
                out[diag] = coeff if acc is None else acc + coeff
        return TLMorphism(other.m, self.n, out)

    def dagger(self) -> "TLMorphism":
        """Antilinear adjoint: flip each diagram, conjugate each coefficient."""
        return TLMorphism(
            self.n, self.m, {tl_dagger(d): c.conj() for d, c in self.terms.items()}
        )

    def tensor(self, other: "TLMorphism") -> "TLMorphism":
        out: dict[TLDiagram, Scalar] = {}
        for f, cf in self.terms.items():
            for g, cg in other.terms.items():
                diag = tl_tensor(f, g)
                coeff = cf * cg
                acc = out.get(diag)
                out[diag] = coeff if acc is None else acc + coeff
        return TLMorphism(self.m + other.m, self.n + other.n, out)

    def as_scalar(self) -> Scalar:
        """Coefficient of the identity for a (1,1) or (0,0) morphism."""
        if (self.m, self.n) == (0, 0):
            return self.terms.get(TLDiagram(0, 0, ()), Scalar.rational(0))
        if (self.m, self.n) == (1, 1):
            return self.terms.get(TLDiagram.identity(1), Scalar.rational(0))
        raise ValueError("as_scalar needs a (0,0) or (1,1) morphism")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TLMorphism)
            and (self.m, self.n) == (other.m, other.n)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{d!r}" for d, c in self.terms.items()) or "0"
        return f"TLMorphism({self.m},{self.n}; {body})"


def vertex(a: Number, b: Number) -> TLMorphism:
    """The elementary caret morphism a*D1 + b*D2 : 1 strand -> 3 strands."""
    return TLMorphism(1, 3, {D1: Scalar.of(a), D2: Scalar.of(b)})


def normalization_value(a: Number, b: Number, delta: Number) -> Scalar:
    """Scalar of vertex(a,b)^dagger . vertex(a,b), computed diagrammatically.

    The vertex is normalized when this equals 1; then the vacuum coefficient
    of the identity element is 1 and coefficients are basis-independent.
    """
    v = vertex(a, b)
    return v.dagger().compose(v, delta).as_scalar()


def phi_tree(t: Tree, a: Number, b: Number, delta: Number) -> TLMorphism:
    """Tree functor: an n-leaf tree becomes a (1, 2n-1) morphism.

    A leaf is the single strand; a caret splits its strand with
    ``vertex(a, b)`` and the two subtrees act on the first and third output
    strands (leaf k of the tree ends up on strand 2k-1).
    """
    if t.is_leaf():
        return TLMorphism.identity(1)
    left, right = t.children()
    upper = (
        phi_tree(left, a, b, delta)
        .tensor(TLMorphism.identity(1))
        .tensor(phi_tree(right, a, b, delta))
    )
    return upper.compose(vertex(a, b), delta)


def phi_forest(f: Forest, a: Number, b: Number, delta: Number) -> TLMorphism:
    """Forest functor: trees side by side with one plain strand in between.

    A width-w, n-leaf forest becomes a (2w-1, 2n-1) morphism; composition of
    forests goes to composition of morphisms.
    """
    if f.width == 0:
        raise ValueError("empty forest has no morphism")
    out = phi_tree(f.trees[0], a, b, delta)
    for t in f.trees[1:]:
        out = out.tensor(TLMorphism.identity(1)).tensor(phi_tree(t, a, b, delta))
    return out


def enumerate_diagrams(m: int, n: int) -> Iterator[TLDiagram]:
    """All (m, n) diagrams; there are Catalan((m+n)/2) of them."""
    if (m + n) % 2:
        return
    for pairing in _matchings(m + n):
        yield TLDiagram(m, n, pairing)


@lru_cache(maxsize=None)
def _matchings(size: int) -> tuple[tuple[int, ...], ...]:
    """Non-crossing perfect matchings of positions 0..size-1 (as pairing maps)."""
    if size == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for cut in range(1, size, 2):
        for inner in _matchings(cut - 1):
            for outer in _matchings(size - cut - 1):
                pairing = [0] * size
                pairing[0], pairing[cut] = cut, 0
                for i, j in enumerate(inner):
                    pairing[1 + i] = 1 + j
                for i, j in enumerate(outer):
                    pairing[cut + 1 + i] = cut + 1 + j
                out.append(tuple(pairing))
    return tuple(out)
