"""Boundary circles of norm-n cycles and their pairwise linking numbers.

The boundary of the norm-n cycle family meets the cusp cross-section in one
circle family per class of totally positive integers of norm n.  The circle of
class mu runs min' = gcd-many times parallel along the line R*mu, and two
families link inside the Sol cross-section, where the gluing is multiplication
by the conjugate totally positive fundamental unit.  The symplectic form is
<x, y> = (x*y' - x'*y)/sqrt(disc), exact and rational on field elements.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .qfield import FieldData, NormClass, QuadElem, enumerate_norm_classes
from . import sol as _sol


def symplectic_pairing(x: QuadElem, y: QuadElem) -> Fraction:
    """<x, y> = (x*y' - x'*y)/sqrt(disc), the w-coordinate of x*y'."""
    if x.field != y.field:
        raise InputError("pairing requires elements of one field")
    return (x * y.conj()).b


def multiplicity(x: QuadElem) -> int:
    """min over nonzero lattice pairings |<lambda, x>| = gcd over a basis."""
    if not x.is_integral() or (x.a == 0 and x.b == 0):
        raise InputError("multiplicity requires a nonzero integral element")
    f = x.field
    p1 = symplectic_pairing(f.one, x)
    p2 = symplectic_pairing(f.omega, x)
    return math.gcd(int(p1), int(p2))


@dataclass(frozen=True)
class BoundaryComponent:
    """One circle family on the cusp cross-section: its class, how many
    parallel circles it carries, and the primitive totally positive direction
    of its fiber (equal fibers iff equal labels)."""

    cls: NormClass
    multiplicity: int
    fiber_label: QuadElem


def boundary_components(field: FieldData, n) -> list[BoundaryComponent]:
    """Boundary circle families of the norm-n cycle, one per reduced class."""
    out = []
    for cls in enumerate_norm_classes(field, n):
        mult = multiplicity(cls.rep)
        direction = field.element(cls.rep.a / mult, cls.rep.b / mult)
        if not (direction.is_integral() and direction.is_totally_positive()):
            raise ConsistencyError("primitive direction escaped the lattice")
        out.append(BoundaryComponent(cls=cls, multiplicity=mult, fiber_label=direction))
    return out


@dataclass(frozen=True)
class WLattice:
    """Rank-2 lattice with an integral bilinear form, given by its Gram matrix."""

    gram: tuple[tuple[int, int], tuple[int, int]]

    @classmethod
    def from_field(cls, field: FieldData) -> "WLattice":
        """Gram matrix of the trace pairing (x, y) = Tr(x*y') on basis (1, w)."""
        return cls(gram=((2, field.s0), (field.s0, 2 * field.n0)))


def _perp_from_gram(gram, x: tuple[int, int]) -> tuple[int, int]:
    gx = (gram[0][0] * x[0] + gram[0][1] * x[1], gram[1][0] * x[0] + gram[1][1] * x[1])
    cand = (-gx[1], gx[0])
    if cand == (0, 0):
        raise InputError("form is degenerate at x")
    g = math.gcd(cand[0], cand[1])
    cand = (cand[0] // g, cand[1] // g)
    orient = x[0] * cand[1] - x[1] * cand[0]
    if orient == 0:
        raise InputError("x is isotropic; its perp line is its own span")
    return cand if orient > 0 else (-cand[0], -cand[1])


def j_perp(field_or_lattice, x):
    """Primitive lattice vector orthogonal to x for the quadratic form,
    oriented so that (x, Jx) is a positive basis.

    Accepts a FieldData with a QuadElem (trace pairing on (1, w)) or a
    WLattice with integer coordinates.
    """
    if isinstance(field_or_lattice, FieldData):
        field = field_or_lattice
        if not isinstance(x, QuadElem) or x.field != field:
            raise InputError("expected an element of the given field")
        if not x.is_integral() or (x.a == 0 and x.b == 0):
            raise InputError("j_perp requires a nonzero integral element")
        lat = WLattice.from_field(field)
        coords = _perp_from_gram(lat.gram, (int(x.a), int(x.b)))
        return field.element(coords[0], coords[1])
    if isinstance(field_or_lattice, WLattice):
        x = (int(x[0]), int(x[1]))
        if x == (0, 0):
            raise InputError("j_perp requires a nonzero vector")
        return _perp_from_gram(field_or_lattice.gram, x)
    raise InputError(f"expected FieldData or WLattice, got {type(field_or_lattice)!r}")


def fiber_coords(x: QuadElem) -> tuple[int, int]:
    """Coordinates of a field element as a fiber homology class.

    The dictionary (a + b*w) -> (b, a) turns the symplectic pairing into the
    standard oriented-area pairing on Z^2, so sol.link_fiber applies verbatim
    to classes written this way (with the gluing conjugated by the same swap).
    """
    if not x.is_integral():
        raise InputError("fiber classes must be integral")
    return (int(x.b), int(x.a))


def _link_components(field: FieldData, comps_n, comps_m) -> Fraction:
    gm1 = field.eps - 1  # g acts on classes as division by (eps - 1)
    total = Fraction(0)
    for cn in comps_n:
        g_dir = cn.fiber_label / gm1
        for cm in comps_m:
            term = symplectic_pairing(g_dir, cm.fiber_label)
            total += 2 * cn.multiplicity * cm.multiplicity * term
    return total


def link_boundary(field: FieldData, n, m) -> Fraction:
    """Linking number of the norm-n and norm-m boundary families.

    Double sum of min'(mu) * min'(nu) * <g Jmu, Jnu> over component pairs,
    with J the primitive totally positive direction, g division by (eps - 1),
    and a global factor 2 for the two signs of each class.  Same-fiber pairs
    (proportional classes) inherit the positive push-off convention of
    sol.link_fiber.
    """
    return _link_components(field, boundary_components(field, n), boundary_components(field, m))


def link_boundary_closed(field: FieldData, n) -> Fraction:
    """Closed form for m = 1: sum over reduced classes mu of the w-coordinate
    of X = (mu + mu'*eps)/(eps - 1), i.e. 2*X/sqrt(disc).

    Each X must be a rational multiple of sqrt(disc); a nonzero trace raises
    ConsistencyError.
    """
    if not enumerate_norm_classes(field, 1):
        raise ConsistencyError("no norm-1 class; unit bookkeeping is broken")
    eps = field.eps
    total = Fraction(0)
    for cls in enumerate_norm_classes(field, n):
        x = (cls.rep + cls.rep.conj() * eps) / (eps - 1)
        if x.trace() != 0:
            raise ConsistencyError(f"closed-form term for {cls.rep!r} is not rational*sqrt(disc)")
        total += x.b
    return total


@dataclass(frozen=True)
class LinkTable:
    d: int
    nmax: int
    n_det: int
    entries: dict  # (n, m) -> Fraction


def thread_count() -> int:
    """Worker count from SOLLINK_THREADS (integer >= 1), default 1."""
    raw = os.environ.get("SOLLINK_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"SOLLINK_THREADS must be an integer >= 1, got {raw!r}") from None
    if value < 1:
        raise InputError(f"SOLLINK_THREADS must be an integer >= 1, got {raw!r}")
    return value


def link_table(field: FieldData, nmax: int, threads: int | None = None) -> LinkTable:
    """All pairwise boundary linking numbers for n, m <= nmax.

    Cells are pure and may be computed concurrently; results are merged by
    sorted key, so the table does not depend on the thread count.
    """
    if nmax < 1:
        raise InputError(f"nmax must be >= 1, got {nmax}")
    if threads is None:
        threads = thread_count()
    comps = {n: boundary_components(field, n) for n in range(1, nmax + 1)}
    keys = [(n, m) for n in range(1, nmax + 1) for m in range(1, nmax + 1)]

    def cell(key):
        return _link_components(field, comps[key[0]], comps[key[1]])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(cell, keys))
    else:
        values = [cell(k) for k in keys]
    entries = dict(sorted(zip(keys, values)))
    n_det = _sol.glueing_from_unit(field).n_det
    return LinkTable(d=field.d, nmax=nmax, n_det=n_det, entries=entries)
