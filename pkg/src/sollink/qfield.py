"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Elements are stored as a + b*w over Fraction coordinates, where w = (1+sqrt(d))/2
for d = 1 mod 4 and w = sqrt(d) otherwise, so integer coordinates are exactly the
ring of integers.  Everything here is exact; no floats are consulted for sign
tests, reduction, or enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError

Rat = int | Fraction


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    if d % 4 == 0:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


class FieldData:
    """A real quadratic field Q(sqrt(d)) together with its unit data.

    Attributes: d, disc, s0 = trace(w), n0 = norm(w), eps0 (fundamental unit),
    eps0_norm (+1 or -1), eps (totally positive fundamental unit).  Instances
    are immutable after construction and safe to share across threads.
    """

    def __init__(self, d: int):
        if not isinstance(d, int) or d <= 1:
            raise InputError(f"d must be an integer > 1, got {d!r}")
        if not is_squarefree(d):
            raise InputError(f"d must be squarefree, got {d}")
        self.d = d
        if d % 4 == 1:
            self.disc = d
            self.s0 = 1  # w + w' = 1
            self.n0 = (1 - d) // 4  # w * w'
        else:
            self.disc = 4 * d
            self.s0 = 0
            self.n0 = -d
        self.eps0 = fundamental_unit(self)
        self.eps0_norm = int(self.eps0.norm())
        self.eps = self.eps0 if self.eps0_norm == 1 else self.eps0 * self.eps0

    def element(self, a: Rat, b: Rat = 0) -> "QuadElem":
        return QuadElem(self, Fraction(a), Fraction(b))

    @property
    def one(self) -> "QuadElem":
        return self.element(1)

    @property
    def omega(self) -> "QuadElem":
        return self.element(0, 1)

    @property
    def sqrt_disc(self) -> "QuadElem":
        # sqrt(disc) = 2w - s0 in both discriminant cases
        return self.element(-self.s0, 2)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldData) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("FieldData", self.d))

    def __repr__(self) -> str:
        return f"FieldData(d={self.d})"


def make_field(d: int) -> FieldData:
    """Validate d (squarefree, > 1) and build the field with its unit data."""
    return FieldData(d)


@dataclass(frozen=True, eq=False)
class QuadElem:
    """a + b*w with exact rational coordinates."""

    field: FieldData
    a: Fraction
    b: Fraction

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # rational elements hash like their Fraction value, so x == r implies
        # hash(x) == hash(r)
        if self.b == 0:
            return hash(self.a)
        return hash((self.field.d, self.a, self.b))

    def _check(self, other: "QuadElem") -> None:
        if self.field != other.field:
            raise InputError("elements belong to different fields")

    def __add__(self, other):
        other = self._coerce(other)
        return QuadElem(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return QuadElem(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return QuadElem(self.field, -self.a, -self.b)

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.field, Fraction(other), Fraction(0))
        return NotImplemented  # type: ignore[return-value]

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # w^2 = -n0 + s0*w
        f = self.field
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        cross = b1 * b2
        return QuadElem(f, a1 * a2 - cross * f.n0, a1 * b2 + a2 * b1 + cross * f.s0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero element")
        num = self * other.conj()
        return QuadElem(self.field, num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "QuadElem":
        if not isinstance(k, int):
            raise TypeError("exponent must be int")
        base = self if k >= 0 else self.field.one / self
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "QuadElem":
        # w' = s0 - w
        return QuadElem(self.field, self.a + self.b * self.field.s0, -self.b)

    def norm(self) -> Fraction:
        f = self.field
        return self.a * self.a + self.a * self.b * f.s0 + self.b * self.b * f.n0

    def trace(self) -> Fraction:
        return 2 * self.a + self.b * self.field.s0

    def sqrt_coords(self) -> tuple[Fraction, Fraction]:
        """(p, q) with self = p + q*sqrt(d) under the embedding sqrt(d) > 0."""
        # w = (1 + sqrt(d))/2 when s0 = 1, w = sqrt(d) when s0 = 0
        if self.field.s0:
            return self.a + self.b / 2, self.b / 2
        return self.a, self.b

    def sign(self) -> int:
        """Exact sign under the real embedding with sqrt(d) > 0."""
        p, q = self.sqrt_coords()
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # mixed signs: compare p^2 against d*q^2
        lead = p * p - self.field.d * q * q
        s = 1 if lead > 0 else -1
        return s if p > 0 else -s

    def is_totally_positive(self) -> bool:
        return self.sign() > 0 and self.conj().sign() > 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def content(self) -> int:
        """gcd of the integer coordinates; element must be integral and nonzero."""
        if not self.is_integral():
            raise InputError("content requires an integral element")
        g = math.gcd(int(self.a), int(self.b))
        if g == 0:
            raise InputError("content of zero is undefined")
        return g

    def embed(self, conjugate: bool = False) -> float:
        """Float value under the chosen real embedding (for numerics only)."""
        f = self.field
        rt = math.sqrt(f.d)
        w = (f.s0 + rt) / 2 if f.d % 4 == 1 else rt
        if conjugate:
            w = f.s0 - w
        return float(self.a) + float(self.b) * w

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __str__(self) -> str:
        p, q = self.sqrt_coords()
        if q == 0:
            return str(p)
        if p == 0:
            return f"{q}*sqrt({self.field.d})"
        op = "+" if q > 0 else "-"
        return f"{p} {op} {abs(q)}*sqrt({self.field.d})"

    def __repr__(self) -> str:
        return f"QuadElem(d={self.field.d}, a={self.a}, b={self.b})"


def fundamental_unit(field: FieldData) -> QuadElem:
    """Smallest unit > 1 of the ring of integers, by continued fractions of w.

    Runs the standard (P, Q) recurrence for the quadratic irrational
    (P + sqrt(d))/Q starting at w and returns the first convergent p/q whose
    associated element (p - q*s0) + q*w has norm +-1.
    """
    d = field.d
    rt = math.isqrt(d)
    if d % 4 == 1:
        pp, qq = 1, 2
    else:
        pp, qq = 0, 1
    p_prev, p_cur = 0, 1  # p_{-2}, p_{-1}
    q_prev, q_cur = 1, 0  # q_{-2}, q_{-1}; first step yields p0 = a0, q0 = 1
    for _ in range(200000):
        a_k = (pp + rt) // qq
        p_prev, p_cur = p_cur, a_k * p_cur + p_prev
        q_prev, q_cur = q_cur, a_k * q_cur + q_prev
        u = field.element(p_cur - q_cur * field.s0, q_cur)
        if abs(u.norm()) == 1:
            if not u > 1:
                raise ConsistencyError(f"continued fraction produced unit {u} <= 1")
            return u
        pp = a_k * qq - pp
        qq_next, rem = divmod(d - pp * pp, qq)
        if rem:
            raise ConsistencyError("continued fraction state left Z (invalid d?)")
        qq = qq_next
    raise ConsistencyError(f"no unit found for d={d} within iteration bound")


@dataclass(frozen=True)
class NormClass:
    """Orbit of a totally positive integer of norm n under the totally
    positive units, tagged by its reduced representative."""

    rep: QuadElem
    n: Fraction


def reduce_totally_positive(field: FieldData, x: QuadElem) -> QuadElem:
    """Scale x by powers of eps into the half-open domain 1 <= x/x' < eps^2."""
    if not x.is_totally_positive():
        raise InputError("reduction requires a totally positive element")
    eps = field.eps
    eps_inv = eps.conj()  # norm(eps) = 1
    e2 = eps * eps
    while (x - x.conj()).sign() < 0:  # x/x' < 1
        x = x * eps
    while (e2 * x.conj() - x).sign() <= 0:  # x/x' >= eps^2
        x = x * eps_inv
    return x


def enumerate_norm_classes(field: FieldData, n: Rat) -> list[NormClass]:
    """All classes of totally positive integers of norm n, one reduced
    representative each, sorted by coordinates.

    A representative x = a + b*w in the domain has trace t and t^2 = disc*b^2 + 4n
    with 0 <= b <= sqrt(n*(Tr(eps^2) - 2)/disc), so a finite integer scan with a
    perfect-square test is exhaustive.
    """
    n = Fraction(n)
    if n <= 0:
        raise InputError(f"norm must be positive, got {n}")
    if n.denominator != 1:
        return []
    n = int(n)
    t2m2 = int((field.eps * field.eps).trace()) - 2
    b_max = math.isqrt(n * t2m2 // field.disc)
    e2 = field.eps * field.eps
    out = []
    for b in range(0, b_max + 1):
        t_sq = field.disc * b * b + 4 * n
        t = math.isqrt(t_sq)
        if t * t != t_sq:
            continue
        if (t - field.s0 * b) % 2:
            continue
        a = (t - field.s0 * b) // 2
        x = field.element(a, b)
        if not x.is_totally_positive():
            continue
        # domain: b >= 0 gives x >= x'; exclude ratio exactly eps^2
        if (e2 * x.conj() - x).sign() <= 0:
            continue
        out.append(NormClass(rep=x, n=Fraction(n)))
    out.sort(key=lambda c: (c.rep.a, c.rep.b))
    return out


def brute_force_norm_solutions(field: FieldData, n: Rat, bound: int) -> list[QuadElem]:
    """Every totally positive a + b*w with norm n and |a|, |b| <= bound.

    Unreduced box search; the oracle counterpart of enumerate_norm_classes.
    """
    n = Fraction(n)
    if n <= 0:
        raise InputError(f"norm must be positive, got {n}")
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x = field.element(a, b)
            if x.norm() == n and x.is_totally_positive():
                out.append(x)
    out.sort(key=lambda x: (x.a, x.b))
    return out
