"""Independent brute-force oracles used to validate the library.

Everything here avoids the library's own algorithms: units come from a
per-coefficient Pell scan (no continued fractions), so agreement is a real
cross-check.
"""

from __future__ import annotations

import math

_B_CAP = 10**6  # d=94 needs b = 221064; nothing below 100 needs more


def _disc_s0(d: int) -> tuple[int, int]:
    return (d, 1) if d % 4 == 1 else (4 * d, 0)


def _unit_coords(d: int, t: int, b: int) -> tuple[int, int]:
    """(a, b) coordinates on the (1, w) basis of the unit with trace t."""
    s0 = _disc_s0(d)[1]
    assert (t - s0 * b) % 2 == 0
    return ((t - s0 * b) // 2, b)


def pell_units(d: int) -> tuple[tuple[int, int, int], tuple[int, int]]:
    """((a, b, norm) of the smallest unit > 1, (a, b) of the smallest totally
    positive unit > 1), by scanning b = 1, 2, ... and solving
    t^2 = disc*b^2 +- 4 with a perfect-square test.

    Units u = (t + b*sqrt(disc))/2 > 1 are strictly increasing in b (and, at
    equal b, the -4 branch is the smaller), so the first hit is the minimal
    unit.  Minimality of the totally positive generator follows: any unit
    v > 1 equals u^k (else v*u^-k would be a unit strictly between 1 and u),
    and u^k is totally positive iff norm(u)^k = 1, so the smallest totally
    positive one is u itself when norm(u) = 1 and u^2 when norm(u) = -1.
    The square is computed here with plain integer arithmetic: u^2 has scan
    parameters T = disc*b^2 - 2, B = t*b.
    """
    disc, s0 = _disc_s0(d)
    for b in range(1, _B_CAP + 1):
        base = disc * b * b
        for norm, t_sq in ((-1, base - 4), (1, base + 4)):
            if t_sq < 0:
                continue
            t = math.isqrt(t_sq)
            if t * t != t_sq or (t - s0 * b) % 2:
                continue
            first = (*_unit_coords(d, t, b), norm)
            if norm == 1:
                return first, _unit_coords(d, t, b)
            return first, _unit_coords(d, disc * b * b - 2, t * b)
    raise RuntimeError(f"no unit with b <= {_B_CAP} for d={d}")
