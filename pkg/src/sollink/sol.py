"""Linking numbers of fiber circles in torus bundles with hyperbolic gluing.

The manifold is (R x T^2)/((s, w) ~ (s+1, f(w))) for f in SL(2,Z) with
|trace f| > 2.  A circle of integer class a in one fiber links a circle of
class b in another (or the same, pushed off in the positive s direction) by
<g a, b> with g = (f^{-1} - I)^{-1} and <x, y> = x1*y2 - x2*y1.  The cap
construction and its fiber-crossing count give an independent route to the
same number and are used as the test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .qfield import FieldData

Vec = tuple[int, int]
QVec = tuple[Fraction, Fraction]
Mat = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
IntMat = tuple[tuple[int, int], tuple[int, int]]


def _mat_vec(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _det2(u, v):
    """Oriented area pairing <u, v> = u1*v2 - u2*v1."""
    return u[0] * v[1] - u[1] * v[0]


def _primitive(v: Vec) -> tuple[Vec, int]:
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise InputError("zero class has no primitive direction")
    return (v[0] // g, v[1] // g), g


@dataclass(frozen=True)
class SolManifold:
    f: IntMat
    g: Mat  # (f^{-1} - I)^{-1}, exact rational
    n_det: int  # det(f^{-1} - I) = 2 - trace(f)


def make_sol(f) -> SolManifold:
    """Validate the gluing matrix (integer, det 1, |trace| > 2) and precompute
    g = (f^{-1} - I)^{-1} and N_det."""
    try:
        (a, b), (c, d) = f
    except (TypeError, ValueError):
        raise InputError(f"gluing must be a 2x2 matrix, got {f!r}") from None
    for entry in (a, b, c, d):
        if not isinstance(entry, int):
            raise InputError(f"gluing matrix must be integral, got entry {entry!r}")
    if a * d - b * c != 1:
        raise InputError(f"gluing matrix must have determinant 1, got {a * d - b * c}")
    tr = a + d
    if abs(tr) <= 2:
        raise InputError(f"gluing matrix must be hyperbolic (|trace| > 2), got trace {tr}")
    # f^{-1} = [[d, -b], [-c, a]]; h = f^{-1} - I
    h = ((d - 1, -b), (-c, a - 1))
    n_det = h[0][0] * h[1][1] - h[0][1] * h[1][0]
    if n_det != 2 - tr:
        raise ConsistencyError("determinant bookkeeping failed")
    g = (
        (Fraction(h[1][1], n_det), Fraction(-h[0][1], n_det)),
        (Fraction(-h[1][0], n_det), Fraction(h[0][0], n_det)),
    )
    return SolManifold(f=((a, b), (c, d)), g=g, n_det=n_det)


def glueing_from_unit(field: FieldData) -> SolManifold:
    """Gluing matrix of multiplication by eps' on the integer basis (1, w)."""
    eps_conj = field.eps.conj()
    c1 = eps_conj  # eps' * 1
    c2 = eps_conj * field.omega
    f = ((int(c1.a), int(c2.a)), (int(c1.b), int(c2.b)))
    return make_sol(f)


def link_fiber(m: SolManifold, a, b) -> Fraction:
    """Linking number of the class-a circle with the class-b circle, b pushed
    off in the positive s direction when the fibers coincide."""
    a = (int(a[0]), int(a[1]))
    b = (int(b[0]), int(b[1]))
    ga = _mat_vec(m.g, a)
    return Fraction(_det2(ga, b))


@dataclass(frozen=True)
class CapChain:
    """Weighted rational 2-chain with boundary a given fiber circle.

    Pieces: a parallelogram translating the offset circle to the origin
    (coefficient 1), a triangle (0, c2, f^{-1} c2) and a monodromy cylinder over
    gamma0, both with coefficient `weight` = 1/N_det, and `fiber_correction`
    copies of the full fiber torus killing the area-form period.
    """

    circle_class: Vec
    base_offset: QVec
    parallelogram: tuple[QVec, ...]  # vertex loop, empty for the zero class
    triangle: tuple[QVec, ...]  # (0, c2, f^{-1} c2), empty for the zero class
    monodromy_class: Vec
    weight: Fraction
    fiber_correction: Fraction


def _shoelace(vertices) -> Fraction:
    if len(vertices) < 3:
        return Fraction(0)
    total = Fraction(0)
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        total += v[0] * w[1] - v[1] * w[0]
    return total / 2


def build_cap(m: SolManifold, a, offset=(0, 0)) -> CapChain:
    """Rational 2-chain whose boundary is the class-a circle through `offset`,
    normalized to have zero area-form period."""
    a = (int(a[0]), int(a[1]))
    offset = (Fraction(offset[0]), Fraction(offset[1]))
    weight = Fraction(1, m.n_det)
    if a == (0, 0):
        return CapChain(
            circle_class=a,
            base_offset=offset,
            parallelogram=(),
            triangle=(),
            monodromy_class=(0, 0),
            weight=weight,
            fiber_correction=Fraction(0),
        )
    ga = _mat_vec(m.g, a)
    gamma0 = (ga[0] * m.n_det, ga[1] * m.n_det)
    if gamma0[0].denominator != 1 or gamma0[1].denominator != 1:
        raise ConsistencyError("N_det * g * a is not integral")
    gamma0 = (int(gamma0[0]), int(gamma0[1]))
    finv = ((m.f[1][1], -m.f[0][1]), (-m.f[1][0], m.f[0][0]))
    c2 = (Fraction(gamma0[0]), Fraction(gamma0[1]))
    d_vert = _mat_vec(finv, c2)
    zero = (Fraction(0), Fraction(0))
    # oriented so the boundary is (circle through offset) - (circle through 0)
    quad = (zero, offset, (offset[0] + a[0], offset[1] + a[1]), (Fraction(a[0]), Fraction(a[1])))
    tri = (zero, c2, d_vert)
    period = _shoelace(quad) + weight * _shoelace(tri)
    return CapChain(
        circle_class=a,
        base_offset=offset,
        parallelogram=quad,
        triangle=tri,
        monodromy_class=gamma0,
        weight=weight,
        fiber_correction=-period,
    )


def area_period(cap: CapChain) -> Fraction:
    """Total signed area-form period of the chain; the monodromy cylinder has
    no fiber-area component and the full fiber torus has period 1."""
    return _shoelace(cap.parallelogram) + cap.weight * _shoelace(cap.triangle) + cap.fiber_correction


def _add_edge(acc: dict, start: QVec, end: QVec, coeff: Fraction) -> None:
    vx, vy = end[0] - start[0], end[1] - start[1]
    if vx == 0 and vy == 0:
        return
    if (vx, vy) < (0, 0):
        start, (vx, vy), coeff = end, (-vx, -vy), -coeff
    if vx.denominator == 1 and vy.denominator == 1:
        cls, mult = _primitive((int(vx), int(vy)))
        key = ("geo", (start[0] % 1, start[1] % 1), cls)
        coeff = coeff * mult
    else:
        key = ("seg", (start[0] % 1, start[1] % 1), (vx, vy))
    acc[key] = acc.get(key, Fraction(0)) + coeff
    if acc[key] == 0:
        del acc[key]


def boundary_cycle(cap: CapChain) -> dict:
    """Formal boundary of the cap as closed fiber geodesics.

    Returns {(basepoint mod Z^2, primitive class): rational multiplicity}.
    Open polygon edges must cancel in pairs; leftovers raise ConsistencyError.
    """
    acc: dict = {}
    for poly, coeff in ((cap.parallelogram, Fraction(1)), (cap.triangle, cap.weight)):
        for i, v in enumerate(poly):
            _add_edge(acc, v, poly[(i + 1) % len(poly)], coeff)
    if cap.monodromy_class != (0, 0):
        # boundary of the cylinder: f^{-1} gamma0 - gamma0, both through 0
        g0 = cap.monodromy_class
        zero = (Fraction(0), Fraction(0))
        tri = cap.triangle
        d_vert = tri[2]  # f^{-1} gamma0, already computed for the triangle
        _add_edge(acc, zero, d_vert, cap.weight)
        _add_edge(acc, (Fraction(g0[0]), Fraction(g0[1])), zero, cap.weight)  # -gamma0
    leftovers = [k for k in acc if k[0] == "seg"]
    if leftovers:
        raise ConsistencyError(f"open boundary segments did not cancel: {leftovers}")
    return {(k[1], k[2]): v for k, v in acc.items()}


def expected_boundary(cap: CapChain) -> dict:
    """The boundary a correct cap must have: the input circle, once."""
    if cap.circle_class == (0, 0):
        return {}
    cls, mult = _primitive(cap.circle_class)
    coeff = Fraction(mult)
    if cls < (0, 0):
        cls, coeff = (-cls[0], -cls[1]), -coeff
    base = (cap.base_offset[0] % 1, cap.base_offset[1] % 1)
    return {(base, cls): coeff}


def crossing_parameters(u: Vec, v: Vec) -> list[Fraction]:
    """Parameters s in [0,1) where the primitive class-u geodesic through 0
    crosses the primitive class-v geodesic through 0."""
    det = _det2(u, v)
    if det == 0:
        return []
    return [Fraction(j, abs(det)) for j in range(abs(det))]


def cap_intersect(cap: CapChain, m: SolManifold, b, s_b) -> Fraction:
    """Signed count of the cap against a class-b circle in fiber s_b in (0,1).

    Only the monodromy cylinder meets interior fibers; its slice is the
    gamma0 geodesic, and each transverse crossing with the b geodesic
    contributes sgn(det).  Parallel classes contribute nothing (a generic
    translate is disjoint).
    """
    s_b = Fraction(s_b)
    if not 0 < s_b < 1:
        raise InputError(f"fiber parameter must lie in (0, 1), got {s_b}")
    if cap.weight * m.n_det != 1:
        raise InputError("cap was built for a different manifold")
    b = (int(b[0]), int(b[1]))
    if cap.monodromy_class == (0, 0) or b == (0, 0):
        return Fraction(0)
    u, cu = _primitive(cap.monodromy_class)
    v, cv = _primitive(b)
    det = _det2(u, v)
    if det == 0:
        return Fraction(0)
    sign = 1 if det > 0 else -1
    total = sign * len(crossing_parameters(u, v))
    return cap.weight * cu * cv * total
