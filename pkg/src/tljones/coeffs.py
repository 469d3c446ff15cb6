"""Vacuum coefficients of tree-pair elements and their analytic structure.

The vacuum coefficient of an element g = (tplus, tminus) at vertex weights
(delta, a, b) is the scalar of ``phi(tplus)^dagger . phi(tminus)`` in the
Temperley-Lieb category.  Expanding every caret of tminus into a*D1 + b*D2
and every caret of tplus into the adjoint choices gives

    phi(g) = sum over choices  a^(n-1-ks) b^ks conj(a)^(n-1-kt) conj(b)^kt
             * delta^loops(choice),

where ks, kt count the b-type choices on the two trees.  The choice sum
depends only on g, not on the weights, so it is computed once per element
as an integer-weighted table over (ks, kt, loops) — :func:`pair_structure`
— and then evaluated at any weights, exactly or in floating point.
:func:`vacuum_reference` recomputes the same scalar through the generic
diagram algebra of :mod:`tljones.tl` and is used to cross-validate the
table construction.

Vertex weights live in :class:`VertexWeights`; the chromatic family
``VertexWeights.chromatic(t)`` keeps exact track of the even-degree
monomials a^2, b^2, ab in Q(sqrt(t)) even though a itself is a quartic
irrationality there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .forests import ThompsonElement, alpha_double, mirror, shift
from .scalars import Number, Scalar, sqrt_exact

# ---------------------------------------------------------------------------
# vertex weights
# ---------------------------------------------------------------------------


class VertexWeights:
    """Loop parameter delta and vertex coefficients (a, b), with exact extras.

    ``a2``, ``b2``, ``ab`` hold exact values of a*a, b*b, a*b when the pair
    is real and those products are exactly representable; they enable exact
    evaluation in cases (chromatic points, equal pairs at quadratic delta)
    where a itself is not a quadratic irrationality.  For complex weights
    they are None and evaluation goes through complex floats.
    """

    __slots__ = ("delta", "a", "b", "a2", "b2", "ab", "real", "chromatic_t")

    def __init__(
        self,
        delta: Number,
        a: Number,
        b: Number,
        *,
        a2: Scalar | None = None,
        b2: Scalar | None = None,
        ab: Scalar | None = None,
        chromatic_t: Scalar | None = None,
    ):
        delta, a, b = Scalar.of(delta), Scalar.of(a), Scalar.of(b)
        if delta.kind == "cplx" or delta.sign() <= 0:
            raise ValueError("loop parameter delta must be real and positive")
        real = a.kind != "cplx" and b.kind != "cplx"
        if real and a2 is None:
            a2, b2, ab = a * a, b * b, a * b
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "b2", b2)
        object.__setattr__(self, "ab", ab)
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "chromatic_t", chromatic_t)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("VertexWeights is immutable")

    # -- named families ----------------------------------------------------

    @classmethod
    def chromatic(cls, t: Number) -> "VertexWeights":
        """The weights with delta = sqrt(t), a = sqrt(delta/(delta^2-1)),
        b = -sqrt(1/(delta^3-delta)); then a*b = -1/(t-1).

        For exact t > 1 the products a^2 = delta/(t-1), b^2 = delta/(t(t-1))
        and ab are carried exactly in Q(sqrt(t)).
        """
        ts = Scalar.of(t)
        if ts.is_exact():
            if not ts > 1:
                raise ValueError("chromatic weights need t > 1")
            delta = sqrt_exact(ts)
            a2 = delta / (ts - 1)
            b2 = delta / (ts * (ts - 1))
            ab = Scalar.rational(-1) / (ts - 1)
            af = math.sqrt(a2.to_float())
            bf = ab.to_float() / af
            return cls(
                delta,
                Scalar.flt(af),
                Scalar.flt(bf),
                a2=a2,
                b2=b2,
                ab=ab,
                chromatic_t=ts,
            )
        tf = ts.to_float()
        if not tf > 1:
            raise ValueError("chromatic weights need t > 1")
        d = math.sqrt(tf)
        a = math.sqrt(d / (d * d - 1))
        b = -math.sqrt(1 / (d**3 - d))
        return cls(Scalar.flt(d), Scalar.flt(a), Scalar.flt(b), chromatic_t=ts)

    @classmethod
    def equal_pair(cls, delta: Number) -> "VertexWeights":
        """a = b = 1/sqrt(2(delta+1)), the symmetric normalized choice."""
        d = Scalar.of(delta)
        sq = (d + 1) * 2
        try:
            a = sqrt_exact(sq.inverse()) if sq.is_exact() else None
        except ValueError:
            a = None
        if a is None:
            af = Scalar.flt(1 / math.sqrt(sq.to_float()))
            if sq.is_exact():
                half = sq.inverse()
                return cls(d, af, af, a2=half, b2=half, ab=half)
            return cls(d, af, af)
        return cls(d, a, a)

    @classmethod
    def b_zero(cls, delta: Number) -> "VertexWeights":
        """b = 0, a = 1/sqrt(delta): every coefficient collapses to 1."""
        d = Scalar.of(delta)
        try:
            a = sqrt_exact(d.inverse()) if d.is_exact() else None
        except ValueError:
            a = None
        if a is None:
            return cls(
                d,
                Scalar.flt(1 / math.sqrt(d.to_float())),
                Scalar.rational(0),
                a2=d.inverse() if d.is_exact() else None,
                b2=Scalar.rational(0),
                ab=Scalar.rational(0),
            )
        return cls(d, a, Scalar.rational(0))

    @classmethod
    def ellipse(cls, delta: Number, theta: float) -> "VertexWeights":
        """A point on the ellipse of real normalized pairs, needs delta > 1.

        In rotated coordinates u = (a+b)/sqrt(2), w = (a-b)/sqrt(2) the
        normalization is u^2 (delta+1) + w^2 (delta-1) = 1, parametrized by
        u = cos(theta)/sqrt(delta+1), w = sin(theta)/sqrt(delta-1).
        """
        d = Scalar.of(delta)
        df = d.to_float()
        if not df > 1:
            raise ValueError("ellipse sampling needs delta > 1")
        u = math.cos(theta) / math.sqrt(df + 1)
        v = math.sin(theta) / math.sqrt(df - 1)
        rt2 = math.sqrt(2)
        return cls(d, Scalar.flt((u + v) / rt2), Scalar.flt((u - v) / rt2))

    @classmethod
    def kauffman(cls, n: int) -> "VertexWeights":
        """Kauffman-bracket style complex weights at delta = 2 cos(pi/n).

        With A = exp(i pi (n+1) / (2n)): delta = -A^2 - A^(-2) and
        a = A / sqrt(delta), b = conj(A) / sqrt(delta) are normalized.
        """
        if n < 3:
            raise ValueError("need n >= 3 for a positive loop parameter")
        delta = 2 * math.cos(math.pi / n)
        A = cmath.exp(1j * math.pi * (n + 1) / (2 * n))
        rt = math.sqrt(delta)
        return cls(Scalar.flt(delta), Scalar.cplx(A / rt), Scalar.cplx(A.conjugate() / rt))

    # -- derived quantities --------------------------------------------------

    def mod_a2(self) -> Scalar:
        """|a|^2, exact when available."""
        if self.real and self.a2 is not None:
            return self.a2
        return Scalar.flt(abs(self.a.to_complex()) ** 2)

    def mod_b2(self) -> Scalar:
        if self.real and self.b2 is not None:
            return self.b2
        return Scalar.flt(abs(self.b.to_complex()) ** 2)

    def is_exact(self) -> bool:
        return (
            self.real
            and self.delta.is_exact()
            and self.a2 is not None
            and self.a2.is_exact()
            and self.b2.is_exact()
            and self.ab.is_exact()
        )

    def normalization(self) -> Scalar:
        """delta(|a|^2 + |b|^2) + 2 Re(conj(a) b); must be 1 for a state."""
        if self.real and self.a2 is not None:
            return self.delta * (self.a2 + self.b2) + self.ab * 2
        a, b = self.a.to_complex(), self.b.to_complex()
        val = self.delta.to_float() * (abs(a) ** 2 + abs(b) ** 2)
        return Scalar.flt(val + 2 * (a.conjugate() * b).real)

    def is_normalized(self, tol: float = 1e-9) -> bool:
        norm = self.normalization()
        if norm.is_exact():
            return norm == 1
        return norm.close_to(1, tol)

    def swapped(self) -> "VertexWeights":
        """Weights with a and b exchanged (used by the mirror symmetry)."""
        if self.real and self.a2 is not None:
            return VertexWeights(
                self.delta, self.b, self.a, a2=self.b2, b2=self.a2, ab=self.ab
            )
        return VertexWeights(self.delta, self.b, self.a)

    def phased(self, z: complex) -> "VertexWeights":
        """Weights (za, zb) for a unimodular z; the vacuum must not change."""
        if abs(abs(z) - 1) > 1e-12:
            raise ValueError("phase must lie on the unit circle")
        return VertexWeights(
            self.delta,
            Scalar.cplx(z * self.a.to_complex()),
            Scalar.cplx(z * self.b.to_complex()),
        )

    def __repr__(self) -> str:
        return f"VertexWeights(delta={self.delta}, a={self.a}, b={self.b})"


# ---------------------------------------------------------------------------
# the parameter-free pair structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairStructure:
    """Integer table of an element's choice expansion.

    ``terms[(ks, kt, loops)]`` counts the caret-choice patterns with ks
    b-choices on tminus, kt b-choices on tplus, and the given number of
    closed loops.  The total count is 4^(leaves-1).
    """

    leaves: int
    terms: dict[tuple[int, int, int], int]

    def total_choices(self) -> int:
        return sum(self.terms.values())


def schedule_with_addresses(bits: str) -> list[tuple[int, str]]:
    """(strand position, caret address) pairs in cascade processing order.

    Carets are taken breadth-first; a caret at frontier index i, with
    ``done`` carets already attached on its level, grabs strand
    ``2 i + 1 + 2 done`` of the partial cascade.  Processing the reversed
    list detaches adjoint vertices in the matching order.
    """
    from .forests import caret_addresses

    carets = caret_addresses(bits)
    schedule: list[tuple[int, str]] = []
    frontier = [""]
    while True:
        expanded = False
        new_frontier: list[str] = []
        done = 0
        for i, node in enumerate(frontier):
            if node in carets:
                schedule.append((2 * i + 1 + 2 * done, node))
                done += 1
                new_frontier += [node + "0", node + "1"]
                expanded = True
            else:
                new_frontier.append(node)
        frontier = new_frontier
        if not expanded:
            return schedule


def caret_schedule(bits: str) -> list[int]:
    """Strand positions at which carets attach, level by level."""
    return [pos for pos, _ in schedule_with_addresses(bits)]


# coefficient keys are packed ints: (ks << 20) | (kt << 10) | loops
_KS = 1 << 20
_KT = 1 << 10


def _attach_vertex(states: dict, p: int) -> dict:
    """One bottom caret: every diagram branches into its D1 and D2 children."""
    out: dict[tuple, dict[int, int]] = {}
    for pr, coeffs in states.items():
        w = len(pr) - 1
        base = [0] * (w + 3)
        for q in range(w + 1):
            if q != p:
                fq = q if q < p else q + 2
                t = pr[q]
                base[fq] = t if t < p else t + 2
        r = pr[p]
        fr = r if r < p else r + 2

        d1 = list(base)
        d1[p], d1[fr] = fr, p
        d1[p + 1], d1[p + 2] = p + 2, p + 1
        key = tuple(d1)
        acc = out.get(key)
        if acc is None:
            out[key] = dict(coeffs)
        else:
            for k, v in coeffs.items():
                acc[k] = acc.get(k, 0) + v

        d2 = list(base)
        d2[p], d2[p + 1] = p + 1, p
        d2[p + 2], d2[fr] = fr, p + 2
        key = tuple(d2)
        acc = out.get(key)
        if acc is None:
            out[key] = {k + _KS: v for k, v in coeffs.items()}
        else:
            for k, v in coeffs.items():
                acc[k + _KS] = acc.get(k + _KS, 0) + v
    return out


def _detach_vertex(states: dict, p: int) -> dict:
    """One top (adjoint) caret: cap two of the strands p, p+1, p+2."""
    out: dict[tuple, dict[int, int]] = {}
    for pr, coeffs in states.items():
        w = len(pr) - 1
        trio = (p, p + 1, p + 2)
        base = [0] * (w - 1)
        for q in range(w + 1):
            if q not in trio and pr[q] not in trio:
                gq = q if q < p else q - 2
                t = pr[q]
                base[gq] = t if t < p else t - 2
        r0, r1, r2 = pr[p], pr[p + 1], pr[p + 2]

        def g(q: int) -> int:
            return q if q < p else q - 2

        # adjoint D1: through strand at p, cap on (p+1, p+2)
        if r1 == p + 2:
            partner, join, loop = g(r0), None, 1
        elif r0 == p + 1:
            partner, join, loop = g(r2), None, 0
        elif r0 == p + 2:
            partner, join, loop = g(r1), None, 0
        else:
            partner, join, loop = g(r0), (g(r1), g(r2)), 0
        d1 = list(base)
        d1[p], d1[partner] = partner, p
        if join is not None:
            d1[join[0]], d1[join[1]] = join[1], join[0]
        key = tuple(d1)
        shift_key = loop  # kt += 0, loops += loop
        acc = out.get(key)
        if acc is None:
            out[key] = {k + shift_key: v for k, v in coeffs.items()} if shift_key else dict(coeffs)
        else:
            for k, v in coeffs.items():
                acc[k + shift_key] = acc.get(k + shift_key, 0) + v

        # adjoint D2: cap on (p, p+1), through strand at p+2
        if r0 == p + 1:
            partner, join, loop = g(r2), None, 1
        elif r2 == p + 1:
            partner, join, loop = g(r0), None, 0
        elif r2 == p:
            partner, join, loop = g(r1), None, 0
        else:
            partner, join, loop = g(r2), (g(r0), g(r1)), 0
        d2 = list(base)
        d2[p], d2[partner] = partner, p
        if join is not None:
            d2[join[0]], d2[join[1]] = join[1], join[0]
        key = tuple(d2)
        shift_key = _KT + loop
        acc = out.get(key)
        if acc is None:
            out[key] = {k + shift_key: v for k, v in coeffs.items()}
        else:
            for k, v in coeffs.items():
                acc[k + shift_key] = acc.get(k + shift_key, 0) + v
    return out


@lru_cache(maxsize=1 << 16)
def _pair_structure_bits(bp: str, bm: str) -> PairStructure:
    n = bp.count("0")
    if n == 1:
        return PairStructure(1, {(0, 0, 0): 1})
    states: dict[tuple, dict[int, int]] = {(1, 0): {0: 1}}
    for p in caret_schedule(bm):
        states = _attach_vertex(states, p)
    for p in reversed(caret_schedule(bp)):
        states = _detach_vertex(states, p)
    if set(states) != {(1, 0)}:
        raise AssertionError("cascade did not close to a single through strand")
    packed = states[(1, 0)]
    terms = {}
    for key, count in packed.items():
        terms[(key >> 20, (key >> 10) & 1023, key & 1023)] = count
    return PairStructure(n, terms)


def pair_structure(g: ThompsonElement, method: str = "auto") -> PairStructure:
    """The weight-independent choice table of g (cached per element).

    ``method="auto"`` uses the compiled backtracking enumerator when numba
    is available (the tables agree; the cascade is kept as the independent
    reference route).  ``method="cascade"`` forces the pure-Python cascade.
    """
    if method == "auto":
        from . import graphpoly

        if graphpoly._hist_jit is not None:
            terms = graphpoly.choice_histogram(g)
            return PairStructure(g.leaves, dict(terms))
        method = "cascade"
    if method != "cascade":
        raise ValueError(f"unknown pair_structure method: {method!r}")
    return _pair_structure_bits(g.tplus.bits, g.tminus.bits)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _powers(base: Scalar, top: int) -> list[Scalar]:
    out = [Scalar.rational(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def evaluate_structure(ps: PairStructure, w: VertexWeights) -> Scalar:
    """Evaluate a pair structure at concrete weights.

    Real weights with exact squares are evaluated exactly; complex weights
    through complex floats; anything else through real floats.
    """
    n = ps.leaves
    if n == 1:
        return Scalar.rational(1)
    if w.real and w.a2 is not None and w.is_exact():
        max_loop = max(l for _, _, l in ps.terms)
        dpow = _powers(w.delta, max_loop)
        a2pow = _powers(w.a2, n - 1)
        b2pow = _powers(w.b2, n - 1)
        total = Scalar.rational(0)
        for (ks, kt, loops), count in ps.terms.items():
            beta = ks + kt
            alpha = 2 * (n - 1) - beta
            if beta % 2:
                term = a2pow[(alpha - 1) // 2] * b2pow[(beta - 1) // 2] * w.ab
            else:
                term = a2pow[alpha // 2] * b2pow[beta // 2]
            total = total + term * dpow[loops] * count
        return total
    if not w.real:
        a, b, d = w.a.to_complex(), w.b.to_complex(), w.delta.to_float()
        ac, bc = a.conjugate(), b.conjugate()
        total = 0j
        for (ks, kt, loops), count in ps.terms.items():
            total += (
                count
                * a ** (n - 1 - ks)
                * b**ks
                * ac ** (n - 1 - kt)
                * bc**kt
                * d**loops
            )
        return Scalar.cplx(total)
    a, b, d = w.a.to_float(), w.b.to_float(), w.delta.to_float()
    total = 0.0
    for (ks, kt, loops), count in ps.terms.items():
        total += count * a ** (2 * (n - 1) - ks - kt) * b ** (ks + kt) * d**loops
    return Scalar.flt(total)


def evaluate_structure_chromatic(ps: PairStructure, t: Number) -> Scalar:
    """Exact evaluation at the chromatic weights for exact t.

    Uses b/a = -1/delta: each term a^alpha b^beta delta^l equals
    (a^2)^(n-1) (-1)^beta delta^(l-beta), and (a^2)^(n-1) =
    (delta/(t-1))^(n-1), so everything stays inside Q(sqrt(t)).
    """
    ts = Scalar.of(t)
    if not ts.is_exact():
        raise ValueError("exact chromatic evaluation needs exact t")
    n = ps.leaves
    if n == 1:
        return Scalar.rational(1)
    even: dict[int, int] = {}
    odd: dict[int, int] = {}
    for (ks, kt, loops), count in ps.terms.items():
        beta = ks + kt
        e = loops - beta
        signed = -count if beta % 2 else count
        j, parity = e >> 1, e & 1  # e = 2j + parity with parity in {0, 1}, any sign
        bucket = odd if parity else even
        bucket[j] = bucket.get(j, 0) + signed
    delta = sqrt_exact(ts)
    total = Scalar.rational(0)
    for j, c in even.items():
        total = total + ts**j * c
    if odd:
        odd_total = Scalar.rational(0)
        for j, c in odd.items():
            odd_total = odd_total + ts**j * c
        total = total + delta * odd_total
    prefactor = (delta / (ts - 1)) ** (n - 1)
    return prefactor * total


def vacuum(g: ThompsonElement, w: VertexWeights, backend: str = "tl") -> Scalar:
    """The vacuum coefficient phi(g) at weights w.

    Backends: ``tl`` (choice-table evaluation, any weights), ``chromatic``,
    ``tutte`` and ``state-sum`` (graph-side routes, chromatic weights only),
    and ``reference`` (direct diagram algebra, small elements only).
    """
    if backend == "tl":
        ps = pair_structure(g)
        if w.chromatic_t is not None and w.chromatic_t.is_exact():
            return evaluate_structure_chromatic(ps, w.chromatic_t)
        return evaluate_structure(ps, w)
    if backend == "reference":
        return vacuum_reference(g, w)
    if backend in ("chromatic", "tutte", "state-sum"):
        from . import graphpoly

        if backend == "tutte":
            return graphpoly.vacuum_via_tutte(g, w)
        if w.chromatic_t is None:
            raise ValueError(f"backend {backend!r} needs chromatic weights")
        if backend == "chromatic":
            return graphpoly.vacuum_via_chromatic(g, w.chromatic_t)
        return graphpoly.vacuum_via_state_sum(g, w.chromatic_t)
    raise ValueError(f"unknown vacuum backend {backend!r}")


def vacuum_reference(g: ThompsonElement, w: VertexWeights) -> Scalar:
    """phi(g) through explicit diagram composition (exponential; tests only)."""
    from .tl import phi_tree

    if w.real and not (w.a.is_exact() and w.b.is_exact()):
        raise ValueError(
            "reference evaluation needs explicit a, b (exact or complex); "
            "chromatic weights evaluate via the tl backend"
        )
    top = phi_tree(g.tplus, w.a, w.b, w.delta)
    bot = phi_tree(g.tminus, w.a, w.b, w.delta)
    return top.dagger().compose(bot, w.delta).as_scalar()


# ---------------------------------------------------------------------------
# closed forms, decay, spectrum, symmetries
# ---------------------------------------------------------------------------


def closed_forms_x0(w: VertexWeights) -> dict[str, Scalar]:
    """Closed forms of the first three vacuum coefficients.

    Returns phi(x0), phi(x1 x0) = phi(x0)^2 and phi(x0 x1), in terms of
    delta and the moduli |a|^2, |b|^2.
    """
    d2 = w.delta * w.delta
    ma, mb = w.mod_a2(), w.mod_b2()
    f1 = 1 + ma * mb * (1 - d2)
    f2 = f1 * f1
    f3 = f2 + ma * ma * mb * (d2 - 1) ** 2 * (w.delta / (d2 - 1) - mb)
    return {"x0": f1, "x1x0": f2, "x0x1": f3}


def transfer_matrix(w: VertexWeights) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
    """The 2x2 matrix whose powers extend the comb vacuum coefficients."""
    a, b, d = w.a, w.b, w.delta
    ac, bc = a.conj(), b.conj()
    drive = b * d + a
    return (
        (bc * drive, ac),
        (b * bc * drive, a * ac * d + ac * b + a * bc),
    )


def decay_sequence(w: VertexWeights, kmax: int) -> list[Scalar]:
    """[phi(x0^0), phi(x0^1), ..., phi(x0^kmax)] via the transfer matrix.

    Real weights only (the matrix recursion is stated for the comb pairs
    with real coefficients).  With a = 0 the recursion degenerates and the
    values are computed directly instead.
    """
    if not w.real:
        raise ValueError("decay_sequence needs real weights")
    from .forests import generator

    x0 = generator(0)
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    values = [Scalar.rational(1)]
    if kmax == 0:
        return values
    d2 = vacuum(x0, w)
    values.append(d2)
    if kmax == 1:
        return values
    if w.a.is_zero():
        for k in range(2, kmax + 1):
            values.append(vacuum(x0**k, w))
        return values
    d3 = vacuum(x0**2, w)
    A = transfer_matrix(w)
    e2 = (d3 - A[0][0] * d2) / A[0][1]
    dk, ek = d2, e2
    for _ in range(2, kmax + 1):
        dk, ek = (
            A[0][0] * dk + A[0][1] * ek,
            A[1][0] * dk + A[1][1] * ek,
        )
        values.append(dk)
    return values


def spectral_check(w: VertexWeights) -> dict:
    """Eigenvalue data of the transfer matrix.

    Returns trace, determinant, the two roots, the spectral radius and a
    ``contracting`` flag (radius strictly below 1).  Exact inputs produce
    exact roots when the discriminant has an exact square root.
    """
    if not w.real:
        raise ValueError("spectral_check needs real weights")
    A = transfer_matrix(w)
    tr = A[0][0] + A[1][1]
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    disc = tr * tr - det * 4
    half = Scalar.rational(1, 2)
    roots: tuple[Scalar, Scalar]
    if disc.is_exact():
        try:
            rt = sqrt_exact(disc) if disc.sign() >= 0 else None
        except ValueError:
            rt = None
        if rt is None:
            if disc.sign() >= 0:
                rtf = Scalar.flt(math.sqrt(disc.to_float()))
                roots = ((tr + rtf) * half, (tr - rtf) * half)
            else:
                c = complex(tr.to_float() / 2)
                rr = cmath.sqrt(complex(disc.to_float())) / 2
                roots = (Scalar.cplx(c + rr), Scalar.cplx(c - rr))
        else:
            roots = ((tr + rt) * half, (tr - rt) * half)
    else:
        df = disc.to_float()
        if df >= 0:
            rtf = math.sqrt(df)
            roots = (Scalar.flt((tr.to_float() + rtf) / 2), Scalar.flt((tr.to_float() - rtf) / 2))
        else:
            c = tr.to_float() / 2
            rr = cmath.sqrt(df) / 2
            roots = (Scalar.cplx(c + rr), Scalar.cplx(c - rr))
    radius = max(abs(roots[0].to_complex()), abs(roots[1].to_complex()))
    return {
        "trace": tr,
        "det": det,
        "roots": roots,
        "spectral_radius": radius,
        "contracting": radius < 1.0 - 1e-15,
    }


def symmetry_suite(g: ThompsonElement, w: VertexWeights, tol: float = 1e-9) -> dict[str, bool]:
    """Check the five structural identities of the vacuum coefficient on g.

    mirror:   phi_{a,b}(mirror(g)) = phi_{b,a}(g)
    shift:    phi(shift(g)) = phi(g)
    doubling: phi(alpha_double(g)) = phi(g) phi(mirror(g))
    phase:    phi_{za,zb}(g) = phi_{a,b}(g) for |z| = 1
    inverse:  phi(g^{-1}) = conj(phi(g))
    """

    def eq(x: Scalar, y: Scalar) -> bool:
        if x.is_exact() and y.is_exact():
            return x == y
        return x.close_to(y, tol)

    phi_g = vacuum(g, w)
    z = cmath.exp(2j * math.pi * 0.3)
    return {
        "mirror": eq(vacuum(mirror(g), w), vacuum(g, w.swapped())),
        "shift": eq(vacuum(shift(g), w), phi_g),
        "doubling": eq(vacuum(alpha_double(g), w), phi_g * vacuum(mirror(g), w)),
        "phase": eq(vacuum(g, w.phased(z)), phi_g),
        "inverse": eq(vacuum(g.inverse(), w), phi_g.conj()),
    }


def kauffman_vacuum(g: ThompsonElement, n: int) -> Scalar:
    """phi(g) at the Kauffman-style complex weights for delta = 2 cos(pi/n)."""
    return vacuum(g, VertexWeights.kauffman(n))
