"""Exact scalar arithmetic over Q, real quadratic fields Q(sqrt(d)), and floats.

A :class:`Scalar` is an immutable number of one of four kinds:

* ``rat``   -- an exact rational (``fractions.Fraction`` payload),
* ``quad``  -- an exact element p + q*sqrt(d) of a real quadratic field,
  stored as ``(p, q, d)`` with rational p, q and squarefree integer d > 1,
* ``float`` -- a double,
* ``cplx``  -- a complex double.

Arithmetic promotes upward (rat -> quad -> float -> cplx).  Mixing two
different quadratic fields raises :class:`ScalarFieldError`: there is no
exact common field of degree 2, and silently demoting to floats would turn
an exact pipeline into an approximate one.  Callers who want that demotion
do it explicitly via :meth:`Scalar.to_float`.

Exact kinds support total ordering and exact sign computation, so
inequalities such as ``chi(tau**2) < 0`` can be decided without floating
point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Number = Union["Scalar", int, Fraction, float, complex]

_RANK = {"rat": 0, "quad": 1, "float": 2, "cplx": 3}


class ScalarFieldError(ValueError):
    """Raised when exact arithmetic would need to mix Q(sqrt(d)) and Q(sqrt(d'))."""


def _squarefree_decomp(n: int) -> tuple[int, int]:
    """Write n = s*s * d with d squarefree; return (s, d).  Requires n >= 1."""
    s, d, p = 1, 1, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * n


class Scalar:
    """Immutable number with exact rational / quadratic kinds and float fallbacks."""

    __slots__ = ("kind", "p", "q", "d", "x")

    def __init__(self, kind: str, p=None, q=None, d=None, x=None):
        # Internal constructor; use the classmethods below.
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", x)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, num: int | Fraction, den: int = 1) -> "Scalar":
        return cls("rat", p=Fraction(num, den))

    @classmethod
    def quadratic(cls, p: int | Fraction, q: int | Fraction, d: int) -> "Scalar":
        """Exact p + q*sqrt(d).  d is reduced to its squarefree part."""
        p, q = Fraction(p), Fraction(q)
        if d <= 0:
            raise ValueError(f"quadratic radicand must be positive, got {d}")
        s, d = _squarefree_decomp(d)
        q *= s
        if q == 0 or d == 1:
            return cls("rat", p=p + q)
        return cls("quad", p=p, q=q, d=d)

    @classmethod
    def flt(cls, x: float) -> "Scalar":
        return cls("float", x=float(x))

    @classmethod
    def cplx(cls, x: complex) -> "Scalar":
        return cls("cplx", x=complex(x))

    @classmethod
    def of(cls, v: Number) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        if isinstance(v, (int, Fraction)):
            return cls("rat", p=Fraction(v))
        if isinstance(v, float):
            return cls("float", x=v)
        if isinstance(v, complex):
            return cls("cplx", x=v)
        raise TypeError(f"cannot interpret {type(v).__name__} as Scalar")

    # -- conversions -------------------------------------------------------

    def is_exact(self) -> bool:
        return self.kind in ("rat", "quad")

    def to_float(self) -> float:
        if self.kind == "rat":
            return float(self.p)
        if self.kind == "quad":
            return float(self.p) + float(self.q) * math.sqrt(self.d)
        if self.kind == "float":
            return self.x
        raise TypeError("complex Scalar has no float value")

    def to_complex(self) -> complex:
        if self.kind == "cplx":
            return self.x
        return complex(self.to_float())

    # -- structure ---------------------------------------------------------

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.kind == "rat":
            return self.p == 0
        if self.kind == "quad":
            return False  # q != 0 by construction
        return abs(self.x) <= tol

    def sign(self) -> int:
        """Exact sign (-1, 0, 1).  Works for rat/quad/float, not complex."""
        if self.kind == "rat":
            return (self.p > 0) - (self.p < 0)
        if self.kind == "quad":
            p, q = self.p, self.q
            if p == 0:
                return 1 if q > 0 else -1
            if p > 0 and q > 0:
                return 1
            if p < 0 and q < 0:
                return -1
            # opposite signs: compare p*p with q*q*d
            lhs, rhs = p * p, q * q * self.d
            if p > 0:  # q < 0
                return (lhs > rhs) - (lhs < rhs)
            return (rhs > lhs) - (rhs < lhs)
        if self.kind == "float":
            return (self.x > 0) - (self.x < 0)
        raise TypeError("complex Scalar has no sign")

    def conj(self) -> "Scalar":
        """Complex conjugate (identity on the real kinds)."""
        if self.kind == "cplx":
            return Scalar("cplx", x=self.x.conjugate())
        return self

    def __abs__(self) -> "Scalar":
        if self.kind == "cplx":
            return Scalar("float", x=abs(self.x))
        if self.kind == "float":
            return Scalar("float", x=abs(self.x))
        return -self if self.sign() < 0 else self

    def close_to(self, other: Number, tol: float = 1e-9) -> bool:
        """Numeric closeness across kinds (complex magnitude of the difference)."""
        o = Scalar.of(other)
        return abs(self.to_complex() - o.to_complex()) <= tol

    # -- arithmetic --------------------------------------------------------

    def _promote(self, other: "Scalar") -> str:
        a, b = self.kind, other.kind
        if _RANK[a] < _RANK[b]:
            a, b = b, a
        if a == "quad" and b == "quad" and self.d != other.d:
            raise ScalarFieldError(
                f"cannot mix Q(sqrt({self.d})) and Q(sqrt({other.d})) exactly; "
                "convert one side with to_float() first"
            )
        return a

    def _quad_parts(self) -> tuple[Fraction, Fraction]:
        if self.kind == "rat":
            return self.p, Fraction(0)
        return self.p, self.q

    def __add__(self, other: Number) -> "Scalar":
        o = Scalar.of(other)
        k = self._promote(o)
        if k == "rat":
            return Scalar("rat", p=self.p + o.p)
        if k == "quad":
            (p1, q1), (p2, q2) = self._quad_parts(), o._quad_parts()
            d = self.d if self.kind == "quad" else o.d
            return Scalar.quadratic(p1 + p2, q1 + q2, d)
        if k == "float":
            return Scalar("float", x=self.to_float() + o.to_float())
        return Scalar("cplx", x=self.to_complex() + o.to_complex())

    def __radd__(self, other: Number) -> "Scalar":
        return Scalar.of(other).__add__(self)

    def __neg__(self) -> "Scalar":
        if self.kind == "rat":
            return Scalar("rat", p=-self.p)
        if self.kind == "quad":
            return Scalar("quad", p=-self.p, q=-self.q, d=self.d)
        return Scalar(self.kind, x=-self.x)

    def __sub__(self, other: Number) -> "Scalar":
        return self.__add__(-Scalar.of(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.of(other).__sub__(self)

    def __mul__(self, other: Number) -> "Scalar":
        o = Scalar.of(other)
        k = self._promote(o)
        if k == "rat":
            return Scalar("rat", p=self.p * o.p)
        if k == "quad":
            (p1, q1), (p2, q2) = self._quad_parts(), o._quad_parts()
            d = self.d if self.kind == "quad" else o.d
            return Scalar.quadratic(p1 * p2 + q1 * q2 * d, p1 * q2 + q1 * p2, d)
        if k == "float":
            return Scalar("float", x=self.to_float() * o.to_float())
        return Scalar("cplx", x=self.to_complex() * o.to_complex())

    def __rmul__(self, other: Number) -> "Scalar":
        return Scalar.of(other).__mul__(self)

    def inverse(self) -> "Scalar":
        if self.kind == "rat":
            if self.p == 0:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar("rat", p=1 / self.p)
        if self.kind == "quad":
            n = self.p * self.p - self.q * self.q * self.d  # nonzero: sqrt(d) irrational
            return Scalar.quadratic(self.p / n, -self.q / n, self.d)
        return Scalar(self.kind, x=1 / self.x)

    def __truediv__(self, other: Number) -> "Scalar":
        o = Scalar.of(other)
        self._promote(o)  # surface field mix-ups before inverting
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.of(other).__truediv__(self)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("Scalar exponents must be int")
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Scalar, int, Fraction, float, complex)):
            return NotImplemented
        o = Scalar.of(other)
        if self.kind == o.kind:
            if self.kind == "rat":
                return self.p == o.p
            if self.kind == "quad":
                return (self.p, self.q, self.d) == (o.p, o.q, o.d)
            return self.x == o.x
        if self.is_exact() and o.is_exact():
            return False  # normalized: rat never equals a genuine quad
        return False  # exact vs float: distinct; compare with close_to()

    def __hash__(self):
        if self.kind == "rat":
            return hash(self.p)
        if self.kind == "quad":
            return hash((self.p, self.q, self.d))
        return hash(self.x)

    def _cmp(self, other: Number) -> int:
        o = Scalar.of(other)
        k = self._promote(o)
        if k in ("rat", "quad"):
            return (self - o).sign()
        a, b = self.to_float(), o.to_float()
        return (a > b) - (a < b)

    def __lt__(self, other: Number) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Number) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self._cmp(other) >= 0

    # -- formatting --------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({scalar_str(self)})"

    def __str__(self) -> str:
        return scalar_str(self)


#: the golden ratio (1 + sqrt(5)) / 2, exactly
GOLDEN = Scalar.quadratic(Fraction(1, 2), Fraction(1, 2), 5)


def sqrt_exact(v: Number) -> Scalar:
    """Exact square root of a nonnegative rational or quadratic Scalar.

    For a rational p/q the result is rational or a pure surd in Q(sqrt(d))
    (e.g. sqrt(8) = 2*sqrt(2), sqrt(2/3) = (1/3)*sqrt(6)).  For a quad input
    the root is returned only when it lies in the *same* field Q(sqrt(d))
    (e.g. sqrt(golden + 1) = golden); otherwise ValueError is raised.
    """
    s = Scalar.of(v)
    if s.kind == "rat":
        if s.p < 0:
            raise ValueError(f"sqrt_exact of negative value {s}")
        if s.p == 0:
            return Scalar.rational(0)
        num, den = s.p.numerator, s.p.denominator
        root, sf = _squarefree_decomp(num * den)
        return Scalar.quadratic(0, Fraction(root, den), sf)
    if s.kind == "quad":
        if s.sign() < 0:
            raise ValueError(f"sqrt_exact of negative value {s}")
        # Solve (u + w*sqrt(d))^2 = p + q*sqrt(d):
        #   u^2 + w^2 d = p,  2 u w = q  ==>  u^2 is a root of
        #   z^2 - p z + q^2 d / 4 = 0, so u^2 = (p +- sqrt(p^2 - q^2 d)) / 2.
        p, q, d = s.p, s.q, s.d
        disc = p * p - q * q * d
        if disc >= 0:
            r = _rational_sqrt(disc)
            if r is not None:
                for u2 in ((p + r) / 2, (p - r) / 2):
                    if u2 > 0:
                        u = _rational_sqrt(u2)
                        if u is not None and u != 0:
                            return Scalar.quadratic(u, q / (2 * u), d)
        raise ValueError(f"sqrt_exact({s}) does not lie in Q(sqrt({d}))")
    raise ValueError("sqrt_exact requires an exact (rational or quadratic) input")


def _rational_sqrt(f: Fraction) -> Fraction | None:
    """sqrt(f) if it is rational, else None.  Requires f >= 0."""
    if f < 0:
        return None
    a = math.isqrt(f.numerator)
    b = math.isqrt(f.denominator)
    if a * a == f.numerator and b * b == f.denominator:
        return Fraction(a, b)
    return None


def eval_poly(coeffs: Iterable[Number], x: Number) -> Scalar:
    """Evaluate a polynomial with ascending coefficients at x (Horner)."""
    xs = Scalar.of(x)
    result = Scalar.rational(0)
    for c in reversed(list(coeffs)):
        result = result * xs + Scalar.of(c)
    return result


# -- parsing / printing -----------------------------------------------------

_INT_RE = re.compile(r"[+-]?\d+$")
_FRAC_RE = re.compile(r"([+-]?\d+)\s*/\s*(\d+)$")
_SQRT_RE = re.compile(r"sqrt\(\s*(\d+)\s*(?:/\s*(\d+)\s*)?\)$")
_QUAD_RE = re.compile(
    r"\(\s*([+-]?\d+)\s*([+-])\s*(?:(\d+)\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*\)"
    r"(?:\s*/\s*(\d+))?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal.

    Accepted forms: integers ``-3``, fractions ``2/3``, surds ``sqrt(2)`` and
    ``sqrt(5/2)``, quadratic values ``(1+2*sqrt(5))/3`` / ``(1-sqrt(2))``,
    the word ``golden``, and decimal floats ``4.7`` / ``1e-3``.  A leading
    ``-`` is allowed in front of any form.
    """
    t = text.strip()
    neg = False
    if t.startswith("-") and not _INT_RE.match(t) and not _FRAC_RE.match(t):
        # leave plain negative integers/fractions to their own parsers
        neg, t = True, t[1:].strip()
    s = _parse_unsigned(t)
    return -s if neg else s


def _parse_unsigned(t: str) -> Scalar:
    if t == "golden":
        return GOLDEN
    m = _QUAD_RE.match(t)
    if m:
        p, sgn, qs, d, r = m.groups()
        q = int(qs) if qs else 1
        if sgn == "-":
            q = -q
        den = int(r) if r else 1
        return Scalar.quadratic(Fraction(int(p), den), Fraction(q, den), int(d))
    m = _SQRT_RE.match(t)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        return sqrt_exact(Fraction(num, den))
    m = _FRAC_RE.match(t)
    if m:
        return Scalar.rational(int(m.group(1)), int(m.group(2)))
    if _INT_RE.match(t):
        return Scalar.rational(int(t))
    try:
        return Scalar.flt(float(t))
    except ValueError:
        raise ValueError(
            f"cannot parse scalar {t!r}; accepted forms: int, p/q, sqrt(p/q), "
            "(p+q*sqrt(d))/r, golden, or a decimal float"
        ) from None


def scalar_str(s: Scalar) -> str:
    """Canonical text for a Scalar; exact kinds round-trip through parse_scalar."""
    if s.kind == "rat":
        return str(s.p)
    if s.kind == "quad":
        r = math.lcm(s.p.denominator, s.q.denominator)
        p, q = int(s.p * r), int(s.q * r)
        if p == 0 and q == 1 and r == 1:
            return f"sqrt({s.d})"
        sgn = "+" if q >= 0 else "-"
        core = f"({p}{sgn}{abs(q)}*sqrt({s.d}))"
        return core if r == 1 else f"{core}/{r}"
    if s.kind == "float":
        return repr(s.x)
    return repr(s.x)
