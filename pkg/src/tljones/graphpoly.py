"""Graphs attached to tree pairs, and their chromatic/Tutte evaluations.

Every reduced tree pair ``g`` with ``n`` leaves yields a multigraph on the
vertices ``1..n``: each caret of either tree contributes the edge joining the
leftmost leaf of its left subtree to the leftmost leaf of its right subtree.
The vacuum coefficient of ``g`` factors through this graph; at the chromatic
weight choices it equals ``chi(Gamma)(t) / (t (t-1)^{n-1})``, and for general
weights it is a Tutte-polynomial evaluation.  A third, independent route sums
over cup-pattern choices at every caret and counts closed loops directly.

All polynomial arithmetic is exact integer arithmetic: univariate polynomials
are ascending coefficient tuples, bivariate ones are ``{(i, j): c}`` dicts.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .coeffs import VertexWeights, schedule_with_addresses
from .forests import ThompsonElement, Tree
from .scalars import Scalar, eval_poly

Poly = Tuple[int, ...]
BiPoly = Dict[Tuple[int, int], int]

__all__ = [
    "Graph",
    "thompson_graph",
    "tree_arcs",
    "chromatic",
    "chromatic_whitney",
    "chromatic_at",
    "tutte",
    "tutte_at",
    "is_bipartite",
    "vacuum_via_chromatic",
    "vacuum_via_tutte",
    "vacuum_via_state_sum",
    "state_sum_histogram",
    "choice_histogram",
    "state_sum_euler_check",
    "cone_identity_check",
    "cone_chromatic",
    "inequality_check",
    "clear_caches",
]


# ---------------------------------------------------------------------------
# graphs


class Graph:
    """A multigraph on vertices ``1..n`` with a sorted edge multiset.

    Edges are stored as ``(u, v)`` pairs with ``u <= v``; loops (``u == v``)
    are allowed since they arise under contraction.  Instances are immutable
    and hashable, so they double as memo keys.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = sorted((u, v) if u <= v else (v, u) for u, v in edges)
        for u, v in norm:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    def __setattr__(self, name, value):  # pragma: no cover - immutability
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"

    @property
    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def simple_edges(self) -> Tuple[Tuple[int, int], ...]:
        """Distinct non-loop edges."""
        return tuple(sorted({(u, v) for u, v in self.edges if u != v}))

    def delete(self, edge: Tuple[int, int]) -> "Graph":
        """Remove one copy of ``edge``."""
        edges = list(self.edges)
        edges.remove(edge)
        return Graph(self.n, edges)

    def contract(self, edge: Tuple[int, int]) -> "Graph":
        """Contract ``edge``: merge its endpoints, keeping all other edges.

        Parallel copies of the contracted edge become loops; vertices are
        relabelled to ``1..n-1``.
        """
        u, v = edge
        if u == v:
            raise ValueError("cannot contract a loop")
        edges = list(self.edges)
        edges.remove(edge)

        def relabel(x: int) -> int:
            if x == v:
                x = u
            return x if x < v else x - 1

        return Graph(self.n - 1, [(relabel(a), relabel(b)) for a, b in edges])

    def quotient(self, block: Sequence[int]) -> "Graph":
        """Identify all vertices in ``block`` to a single vertex.

        The edge multiset is kept; edges inside the block become loops.
        """
        block_set = set(block)
        if not block_set:
            return self
        rep = min(block_set)
        keep = [x for x in range(1, self.n + 1) if x == rep or x not in block_set]
        new_label = {x: i + 1 for i, x in enumerate(keep)}

        def relabel(x: int) -> int:
            return new_label[rep if x in block_set else x]

        return Graph(len(keep), [(relabel(a), relabel(b)) for a, b in self.edges])

    def components(self) -> int:
        """Number of connected components (isolated vertices included)."""
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.n
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count


def tree_arcs(tree: Tree) -> List[Tuple[int, int]]:
    """One arc per caret: leftmost leaf of its left vs right subtree (1-based)."""
    bits = tree.bits
    arcs: List[Tuple[int, int]] = []
    pos = 0
    leaf_no = 0

    def walk() -> int:
        nonlocal pos, leaf_no
        if bits[pos] == "0":
            pos += 1
            leaf_no += 1
            return leaf_no
        pos += 1
        left = walk()
        right = walk()
        arcs.append((left, right))
        return left

    walk()
    return arcs


def _arcs_by_address(tree: Tree) -> Dict[str, Tuple[int, int]]:
    """Map each caret address to its arc."""
    bits = tree.bits
    arcs: Dict[str, Tuple[int, int]] = {}
    pos = 0
    leaf_no = 0

    def walk(addr: str) -> int:
        nonlocal pos, leaf_no
        if bits[pos] == "0":
            pos += 1
            leaf_no += 1
            return leaf_no
        pos += 1
        left = walk(addr + "0")
        right = walk(addr + "1")
        arcs[addr] = (left, right)
        return left

    walk("")
    return arcs


def thompson_graph(g: ThompsonElement) -> Graph:
    """The edge multiset contributed by the carets of both trees of ``g``."""
    return Graph(g.leaves, tree_arcs(g.tplus) + tree_arcs(g.tminus))


def is_bipartite(graph: Graph) -> bool:
    """2-colourability; loops make a graph non-bipartite, parallels do not."""
    if graph.has_loop:
        return False
    adj: Dict[int, List[int]] = {v: [] for v in range(1, graph.n + 1)}
    for u, v in graph.simple_edges():
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * (graph.n + 1)
    for start in range(1, graph.n + 1):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


# ---------------------------------------------------------------------------
# integer polynomial helpers

_P_ZERO: Poly = ()
_P_ONE: Poly = (1,)


def _p_trim(p: List[int]) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _p_add(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _p_trim(out)


def _p_sub(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return _p_trim(out)


def _p_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return _P_ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _p_trim(out)


def _p_mono(k: int, c: int = 1) -> Poly:
    return (0,) * k + (c,)


@lru_cache(maxsize=None)
def _p_tm1_pow(k: int) -> Poly:
    """(t - 1)^k."""
    out = _P_ONE
    for _ in range(k):
        out = _p_mul(out, (-1, 1))
    return out


# ---------------------------------------------------------------------------
# chromatic polynomial

_CHROM_MEMO: Dict[Tuple[int, Tuple[Tuple[int, int], ...]], Poly] = {}


def _canonical(n: int, edges: Tuple[Tuple[int, int], ...]):
    """Relabel vertices by first appearance in the sorted edge list.

    Returns ``(touched, isolated, relabelled edges)``.  Not an isomorphism
    canonical form, just a deterministic compaction that makes memo keys
    independent of the vertex names left over from contractions.
    """
    label: Dict[int, int] = {}
    for u, v in edges:
        if u not in label:
            label[u] = len(label) + 1
        if v not in label:
            label[v] = len(label) + 1
    relab = tuple(
        sorted(
            (label[u], label[v]) if label[u] <= label[v] else (label[v], label[u])
            for u, v in edges
        )
    )
    return len(label), n - len(label), relab


def _forest_info(n_touched: int, edges: Tuple[Tuple[int, int], ...]):
    """(is_forest, components) for a simple edge set on ``n_touched`` vertices."""
    parent = list(range(n_touched + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n_touched
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False, 0
        parent[ru] = rv
        comps -= 1
    return True, comps


def _chrom(n: int, simple: Tuple[Tuple[int, int], ...]) -> Poly:
    n_core, iso, edges = _canonical(n, simple)
    key = (n_core, edges)
    poly = _CHROM_MEMO.get(key)
    if poly is None:
        if not edges:
            poly = _P_ONE
        else:
            is_forest, comps = _forest_info(n_core, edges)
            if is_forest:
                poly = _p_mul(_p_mono(comps), _p_tm1_pow(len(edges)))
            else:
                e = edges[0]
                deleted = tuple(x for x in edges if x != e)
                u, v = e
                merged = set()
                for a, b in deleted:
                    a = u if a == v else a
                    b = u if b == v else b
                    a, b = (a, b) if a <= b else (b, a)
                    a = a if a < v else a - 1
                    b = b if b < v else b - 1
                    if a != b:
                        merged.add((a, b))
                poly = _p_sub(
                    _chrom(n_core, deleted),
                    _chrom(n_core - 1, tuple(sorted(merged))),
                )
        _CHROM_MEMO[key] = poly
    if iso:
        poly = _p_mul(_p_mono(iso), poly)
    return poly


def chromatic(graph: Graph) -> Poly:
    """Chromatic polynomial as ascending integer coefficients.

    Parallel edges are collapsed first; any loop forces the zero polynomial.
    """
    if graph.has_loop:
        return _P_ZERO
    return _chrom(graph.n, graph.simple_edges())


def chromatic_whitney(graph: Graph) -> Poly:
    """Chromatic polynomial via the subset expansion over the edge multiset.

    Sums ``(-1)^{|S|} t^{k(S)}`` over all ``2^{|E|}`` edge subsets; intended
    as an independent check on small graphs.
    """
    edges = graph.edges
    if len(edges) > 20:
        raise ValueError("subset expansion limited to 20 edges")
    n = graph.n
    out = [0] * (n + 1)
    for mask in range(1 << len(edges)):
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        bits = 0
        m = mask
        idx = 0
        while m:
            if m & 1:
                bits += 1
                u, v = edges[idx]
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
            m >>= 1
            idx += 1
        out[comps] += -1 if bits & 1 else 1
    return _p_trim(out)


def chromatic_at(graph: Graph, t: Scalar) -> Scalar:
    """Evaluate the chromatic polynomial at ``t``."""
    return eval_poly(chromatic(graph), t)


# ---------------------------------------------------------------------------
# Tutte polynomial

_TUTTE_MEMO: Dict[Tuple[int, Tuple[Tuple[int, int], ...]], BiPoly] = {}


def _bp_add(p: BiPoly, q: BiPoly) -> BiPoly:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + c
        if not out[k]:
            del out[k]
    return out


def _bp_shift(p: BiPoly, dx: int, dy: int) -> BiPoly:
    return {(i + dx, j + dy): c for (i, j), c in p.items()}


def _is_bridge(n: int, edges: Tuple[Tuple[int, int], ...], e: Tuple[int, int]) -> bool:
    u, v = e
    adj: Dict[int, List[int]] = {}
    skipped = False
    for a, b in edges:
        if not skipped and (a, b) == e:
            skipped = True
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return False
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _tutte(n: int, multi: Tuple[Tuple[int, int], ...]) -> BiPoly:
    n_core, _iso, edges = _canonical(n, multi)
    if not edges:
        return {(0, 0): 1}
    key = (n_core, edges)
    poly = _TUTTE_MEMO.get(key)
    if poly is not None:
        return poly

    counts: Dict[Tuple[int, int], int] = {}
    for e in edges:
        counts[e] = counts.get(e, 0) + 1
    e = max(counts, key=lambda x: (counts[x], (-x[0], -x[1])))
    remaining = list(edges)
    remaining.remove(e)
    deleted = tuple(remaining)
    u, v = e
    if u == v:
        poly = _bp_shift(_tutte(n_core, deleted), 0, 1)
    else:
        contracted = []
        for a, b in deleted:
            a = u if a == v else a
            b = u if b == v else b
            a = a if a < v else a - 1
            b = b if b < v else b - 1
            contracted.append((a, b) if a <= b else (b, a))
        contracted_t = tuple(sorted(contracted))
        if counts[e] == 1 and _is_bridge(n_core, edges, e):
            poly = _bp_shift(_tutte(n_core - 1, contracted_t), 1, 0)
        else:
            poly = _bp_add(
                _tutte(n_core, deleted), _tutte(n_core - 1, contracted_t)
            )
    _TUTTE_MEMO[key] = poly
    return poly


def tutte(graph: Graph) -> BiPoly:
    """Tutte polynomial of the multigraph as a ``{(i, j): coeff}`` dict."""
    return _tutte(graph.n, graph.edges)


def tutte_at(graph: Graph, x: Scalar, y: Scalar) -> Scalar:
    """Evaluate the Tutte polynomial at ``(x, y)``."""
    poly = tutte(graph)
    xs: Dict[int, Scalar] = {0: Scalar.rational(1)}
    ys: Dict[int, Scalar] = {0: Scalar.rational(1)}
    for i, j in poly:
        if i not in xs:
            xs[i] = x ** i
        if j not in ys:
            ys[j] = y ** j
    total = Scalar.rational(0)
    for (i, j), c in sorted(poly.items()):
        total = total + xs[i] * ys[j] * Scalar.rational(c)
    return total


# ---------------------------------------------------------------------------
# vacuum coefficients through the graph


def vacuum_via_chromatic(g: ThompsonElement, t: Scalar | int | Fraction) -> Scalar:
    """Vacuum coefficient at the chromatic weights for parameter ``t``.

    Equals ``chi(Gamma(g))(t) / (t (t-1)^{n-1})``; exact whenever ``t`` is.
    """
    t = Scalar.of(t)
    n = g.leaves
    if n == 1:
        return Scalar.rational(1)
    numer = chromatic_at(thompson_graph(g), t)
    denom = t * (t - Scalar.rational(1)) ** (n - 1)
    if denom == Scalar.rational(0):
        raise ZeroDivisionError("chromatic normalisation vanishes at t in {0, 1}")
    return numer / denom


def vacuum_via_tutte(g: ThompsonElement, w: VertexWeights) -> Scalar:
    """Vacuum coefficient as a Tutte evaluation of the element's graph.

    Uses ``x = 1/(ab) - delta b/a - 1`` and ``y = delta b/a + 1``, for which
    ``x + y = 1/(ab)``; requires ``a b != 0``.
    """
    n = g.leaves
    if n == 1:
        return Scalar.rational(1)
    one = Scalar.rational(1)
    if w.is_exact():
        ab = w.ab
        ratio = w.ab / w.a2  # b / a
    else:
        ab = w.a * w.b
        ratio = w.b / w.a
    if ab == Scalar.rational(0) or ab.to_complex() == 0:
        raise ValueError("Tutte route requires a*b != 0")
    y = w.delta * ratio + one
    x = ab.inverse() - w.delta * ratio - one
    return tutte_at(thompson_graph(g), x, y) * ab ** (n - 1)


# ---------------------------------------------------------------------------
# state sum over cup patterns

_ENV_DISABLE = "TLJ_NO_NUMBA"


def _wiring(g: ThompsonElement) -> Tuple[np.ndarray, int, List[Tuple[int, int]]]:
    """Per-caret wiring rows, segment count, and aligned graph edges.

    Strand segments are numbered from 0 (the incoming root strand).  Row
    ``k`` lists, for caret ``k`` in processing order, the endpoints of the
    two arcs wired by its first cup pattern followed by the two arcs of its
    second: ``(a0, b0, c0, d0, a1, b1, c1, d1)``.  The returned edge list
    gives, in the same order, the graph edge contributed by that caret.
    """
    arcs_minus = _arcs_by_address(g.tminus)
    arcs_plus = _arcs_by_address(g.tplus)
    rows: List[Tuple[int, ...]] = []
    edges: List[Tuple[int, int]] = []
    strands = [0]
    next_id = 1
    for pos, addr in schedule_with_addresses(g.tminus.bits):
        i = pos - 1
        incoming = strands[i]
        s1, s2, s3 = next_id, next_id + 1, next_id + 2
        next_id += 3
        strands[i : i + 1] = [s1, s2, s3]
        rows.append((incoming, s1, s2, s3, incoming, s3, s1, s2))
        edges.append(arcs_minus[addr])
    for pos, addr in reversed(schedule_with_addresses(g.tplus.bits)):
        i = pos - 1
        c1, c2, c3 = strands[i : i + 3]
        out = next_id
        next_id += 1
        strands[i : i + 3] = [out]
        rows.append((c1, out, c2, c3, c3, out, c1, c2))
        edges.append(arcs_plus[addr])
    assert len(strands) == 1
    return np.array(rows, dtype=np.int64).reshape(-1, 8), next_id, edges


def _histogram_loop(rows, nb, nseg, hist):  # pragma: no cover - exercised via wrappers
    """Backtracking enumeration of all cup-pattern choices.

    Counts, for each (second-pattern choices among the first nb rows,
    second-pattern choices among the rest, closed loops) triple, how many
    choice vectors realise it.  Union-find with rollback; written in array
    style so the same body compiles under numba.
    """
    m = rows.shape[0]
    parent = np.arange(nseg)
    size = np.ones(nseg, dtype=np.int64)
    choice = np.full(m, -1, dtype=np.int64)
    # marks[k]: undo-stack depth on entering level k, i.e. before any of
    # level k's own unions; rolling back to it erases only this level.
    marks = np.zeros(m, dtype=np.int64)
    sb_acc = np.zeros(m + 1, dtype=np.int64)
    st_acc = np.zeros(m + 1, dtype=np.int64)
    loop_acc = np.zeros(m + 1, dtype=np.int64)
    undo_child = np.zeros(2 * m + 2, dtype=np.int64)
    undo_parent = np.zeros(2 * m + 2, dtype=np.int64)
    undo_top = 0
    k = 0
    while k >= 0:
        c = choice[k] + 1
        while undo_top > marks[k]:
            undo_top -= 1
            ch = undo_child[undo_top]
            pa = undo_parent[undo_top]
            parent[ch] = ch
            size[pa] -= size[ch]
        if c > 1:
            choice[k] = -1
            k -= 1
            continue
        choice[k] = c
        added = 0
        base = 4 * c
        for half in range(2):
            a = rows[k, base + 2 * half]
            b = rows[k, base + 2 * half + 1]
            ra = a
            while parent[ra] != ra:
                ra = parent[ra]
            rb = b
            while parent[rb] != rb:
                rb = parent[rb]
            if ra == rb:
                added += 1
            else:
                if size[ra] < size[rb]:
                    ra, rb = rb, ra
                parent[rb] = ra
                size[ra] += size[rb]
                undo_child[undo_top] = rb
                undo_parent[undo_top] = ra
                undo_top += 1
        if k < nb:
            sb_acc[k + 1] = sb_acc[k] + c
            st_acc[k + 1] = st_acc[k]
        else:
            sb_acc[k + 1] = sb_acc[k]
            st_acc[k + 1] = st_acc[k] + c
        loop_acc[k + 1] = loop_acc[k] + added
        if k + 1 == m:
            hist[sb_acc[m], st_acc[m], loop_acc[m]] += 1
        else:
            k += 1
            marks[k] = undo_top
    return hist


_hist_jit = None
if not os.environ.get(_ENV_DISABLE):
    try:
        from numba import njit

        _hist_jit = njit(cache=True)(_histogram_loop)
    except ImportError:  # pragma: no cover - numba is a hard dependency
        _hist_jit = None


@lru_cache(maxsize=4096)
def _histogram_bits(bp: str, bm: str) -> Dict[Tuple[int, int, int], int]:
    g = ThompsonElement(Tree(bp), Tree(bm))
    if g.leaves == 1:
        return {(0, 0, 0): 1}
    rows, nseg, _edges = _wiring(g)
    m = rows.shape[0]
    nb = m // 2
    hist = np.zeros((nb + 1, m - nb + 1, 2 * m + 2), dtype=np.int64)
    runner = _hist_jit if _hist_jit is not None else _histogram_loop
    runner(rows, nb, nseg, hist)
    out: Dict[Tuple[int, int, int], int] = {}
    for ks in range(hist.shape[0]):
        for kt in range(hist.shape[1]):
            for loops in range(hist.shape[2]):
                if hist[ks, kt, loops]:
                    out[(ks, kt, loops)] = int(hist[ks, kt, loops])
    return out


def choice_histogram(g: ThompsonElement) -> Dict[Tuple[int, int, int], int]:
    """Count choice vectors by (tminus second choices, tplus ditto, loops).

    The table is parameter-free; every evaluation point reuses it.
    """
    return dict(_histogram_bits(g.tplus.bits, g.tminus.bits))


def state_sum_histogram(g: ThompsonElement) -> Dict[Tuple[int, int], int]:
    """Count choice vectors by (second-pattern count, closed loops)."""
    out: Dict[Tuple[int, int], int] = {}
    for (ks, kt, loops), count in _histogram_bits(g.tplus.bits, g.tminus.bits).items():
        key = (ks + kt, loops)
        out[key] = out.get(key, 0) + count
    return out


def vacuum_via_state_sum(g: ThompsonElement, t: Scalar | int | Fraction) -> Scalar:
    """Vacuum coefficient at the chromatic weights via direct loop counting.

    Each choice vector contributes ``(-1)^s t^{(loops + n - 1 - s)/2}``,
    and the total is divided by ``(t - 1)^{n-1}``.
    """
    t = Scalar.of(t)
    n = g.leaves
    if n == 1:
        return Scalar.rational(1)
    total = Scalar.rational(0)
    for (s, loops), count in sorted(state_sum_histogram(g).items()):
        exp = loops + n - 1 - s
        if exp % 2:
            raise AssertionError("loop parity violated in state sum")
        term = t ** (exp // 2) * Scalar.rational(count)
        total = total + (-term if s % 2 else term)
    return total / (t - Scalar.rational(1)) ** (n - 1)


def clear_caches() -> None:
    """Drop the memoised polynomial and histogram tables.

    Long sweeps over many distinct graphs can grow the memo tables to
    hundreds of megabytes; call this to release them.
    """
    _CHROM_MEMO.clear()
    _TUTTE_MEMO.clear()
    _histogram_bits.cache_clear()


def state_sum_euler_check(g: ThompsonElement) -> bool:
    """Verify loops(S) = 2 k(S) + |S| - (n+1) for every choice vector.

    ``k(S)`` counts components of the spanning subgraph of the element's
    graph picked out by the second-pattern carets.  Exhaustive, so only
    sensible for small elements.
    """
    n = g.leaves
    if n == 1:
        return True
    m = 2 * (n - 1)
    if m > 16:
        raise ValueError("exhaustive check limited to 8 leaves")
    rows, nseg, edges = _wiring(g)

    def loop_count(mask: int) -> int:
        parent = list(range(nseg))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = 0
        for k in range(m):
            base = 4 * ((mask >> k) & 1)
            for half in range(2):
                ra = find(int(rows[k, base + 2 * half]))
                rb = find(int(rows[k, base + 2 * half + 1]))
                if ra == rb:
                    loops += 1
                else:
                    parent[ra] = rb
        return loops

    def graph_components(mask: int) -> int:
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for k in range(m):
            if (mask >> k) & 1:
                ru, rv = find(edges[k][0]), find(edges[k][1])
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        return comps

    for mask in range(1 << m):
        s = bin(mask).count("1")
        if loop_count(mask) != 2 * graph_components(mask) + s - (n + 1):
            return False
    return True


# ---------------------------------------------------------------------------
# cone identity and the vacuum inequality


def cone_chromatic(base: Graph, attach: Sequence[int]) -> Poly:
    """Chromatic polynomial of ``base`` plus an apex joined to ``attach``."""
    apex = base.n + 1
    return chromatic(
        Graph(apex, list(base.edges) + [(v, apex) for v in attach])
    )


def cone_identity_check(base: Graph, attach: Sequence[int]) -> bool:
    """Expand the cone's chromatic polynomial over quotients of ``base``.

    Checks that attaching an apex to the ``k`` vertices in ``attach`` gives
    ``(t - k) chi(base) + sum over subsets I of attach with |I| >= 2 of
    (-1)^{|I|} chi(base / I)``, where ``base / I`` identifies ``I`` to one
    vertex keeping the edge multiset (internal edges become loops).
    """
    attach = sorted(set(attach))
    k = len(attach)
    lhs = cone_chromatic(base, attach)
    rhs = _p_mul((-k, 1), chromatic(base))
    for mask in range(1 << k):
        if bin(mask).count("1") < 2:
            continue
        block = [attach[i] for i in range(k) if (mask >> i) & 1]
        term = chromatic(base.quotient(block))
        rhs = _p_add(rhs, term if bin(mask).count("1") % 2 == 0 else _p_sub(_P_ZERO, term))
    return lhs == rhs


def inequality_check(g: ThompsonElement, t: Scalar | int | Fraction) -> Dict[str, object]:
    """Compare |chi(Gamma(g))(t)| against t (t-1)^{n-1}.

    Returns the two sides, whether the bound holds, whether it is strict,
    and whether the graph (with parallels collapsed) is a tree.  Exact
    scalars compare exactly.
    """
    t = Scalar.of(t)
    n = g.leaves
    graph = thompson_graph(g)
    lhs = abs(chromatic_at(graph, t))
    rhs = t * (t - Scalar.rational(1)) ** (n - 1)
    simple = graph.simple_edges()
    is_tree = len(simple) == n - 1 and _forest_info(n, simple)[0]
    return {
        "lhs": lhs,
        "rhs": rhs,
        "holds": not (lhs > rhs),
        "strict": lhs < rhs,
        "is_tree": is_tree,
    }
