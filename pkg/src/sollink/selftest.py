"""Randomized internal cross-checks, runnable from the CLI.

Every suite checks one identity two independent ways (algebraic formula vs
geometric count, closed form vs finite difference) and returns a verdict
triple; nothing here depends on stored expected values.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import sol
from .qfield import make_field
from .qseries import holomorphic_ratio_test
from .special_fn import (
    A_profile,
    Ap_profile,
    B_profile,
    Bp_profile,
    WPoint,
    beta_fn,
    beta_scaled,
    orbit_action,
    quad_form,
)

Verdict = tuple[str, bool, str]


def _random_hyperbolic(rng: random.Random) -> sol.SolManifold:
    """Random hyperbolic gluing as a short product of unit shears, rejecting
    small traces and large entries."""
    while True:
        m = ((1, 0), (0, 1))
        for i in range(rng.randint(2, 4)):
            x = rng.choice([-3, -2, -1, 1, 2, 3])
            shear = ((1, x), (0, 1)) if i % 2 == 0 else ((1, 0), (x, 1))
            m = (
                (m[0][0] * shear[0][0] + m[0][1] * shear[1][0], m[0][0] * shear[0][1] + m[0][1] * shear[1][1]),
                (m[1][0] * shear[0][0] + m[1][1] * shear[1][0], m[1][0] * shear[0][1] + m[1][1] * shear[1][1]),
            )
        tr = m[0][0] + m[1][1]
        if abs(tr) > 2 and max(abs(e) for row in m for e in row) <= 30:
            return sol.make_sol(m)


def _random_class(rng: random.Random, lo: int = -5, hi: int = 5) -> tuple[int, int]:
    while True:
        v = (rng.randint(lo, hi), rng.randint(lo, hi))
        if v != (0, 0):
            return v


def check_sol_oracle(rng: random.Random, trials: int = 100) -> Verdict:
    """link_fiber vs the cap construction's fiber-crossing count."""
    for _ in range(trials):
        m = _random_hyperbolic(rng)
        a, b = _random_class(rng), _random_class(rng)
        cap = sol.build_cap(m, a)
        direct = sol.link_fiber(m, a, b)
        counted = sol.cap_intersect(cap, m, b, Fraction(1, 3))
        if direct != counted:
            return ("sol-oracle", False, f"f={m.f} a={a} b={b}: {direct} != {counted}")
    return ("sol-oracle", True, f"{trials} random gluings agree exactly")


def check_sol_bilinear(rng: random.Random, trials: int = 60) -> Verdict:
    for _ in range(trials):
        m = _random_hyperbolic(rng)
        a, b, c = _random_class(rng), _random_class(rng), _random_class(rng)
        s = rng.randint(-4, 4)
        left = sol.link_fiber(m, (a[0] + s * c[0], a[1] + s * c[1]), b)
        right = sol.link_fiber(m, a, b) + s * sol.link_fiber(m, c, b)
        if left != right:
            return ("sol-bilinear", False, f"f={m.f} a={a} b={b} c={c} s={s}")
    return ("sol-bilinear", True, f"{trials} linearity probes agree exactly")


def check_sol_conjugation(rng: random.Random, trials: int = 60) -> Verdict:
    """Linking numbers only depend on the conjugacy class of the gluing."""
    for _ in range(trials):
        m = _random_hyperbolic(rng)
        h = _random_hyperbolic(rng).f  # any SL(2,Z) element works as h
        hinv = ((h[1][1], -h[0][1]), (-h[1][0], h[0][0]))
        f2 = tuple(
            tuple(sum(h[i][k] * m.f[k][l] for k in range(2)) for l in range(2)) for i in range(2)
        )
        f2 = tuple(
            tuple(sum(f2[i][k] * hinv[k][l] for k in range(2)) for l in range(2)) for i in range(2)
        )
        m2 = sol.make_sol(f2)
        a, b = _random_class(rng), _random_class(rng)
        ha = (h[0][0] * a[0] + h[0][1] * a[1], h[1][0] * a[0] + h[1][1] * a[1])
        hb = (h[0][0] * b[0] + h[0][1] * b[1], h[1][0] * b[0] + h[1][1] * b[1])
        if sol.link_fiber(m, a, b) != sol.link_fiber(m2, ha, hb):
            return ("sol-conjugation", False, f"f={m.f} h={h} a={a} b={b}")
    return ("sol-conjugation", True, f"{trials} conjugations agree exactly")


def check_sol_asymmetry(rng: random.Random, trials: int = 60) -> Verdict:
    """<g a, b> + <a, g b> = (tr f - 2) <g a, g b>."""
    for _ in range(trials):
        m = _random_hyperbolic(rng)
        a, b = _random_class(rng), _random_class(rng)
        ga = sol._mat_vec(m.g, a)
        gb = sol._mat_vec(m.g, b)
        tr = m.f[0][0] + m.f[1][1]
        left = sol._det2(ga, b) + sol._det2(a, gb)
        right = (tr - 2) * sol._det2(ga, gb)
        if left != right:
            return ("sol-asymmetry", False, f"f={m.f} a={a} b={b}: {left} != {right}")
    return ("sol-asymmetry", True, f"{trials} asymmetry probes agree exactly")


def check_caps(rng: random.Random, trials: int = 50) -> Verdict:
    """Caps close up: zero area-form period and exactly the input boundary."""
    for _ in range(trials):
        m = _random_hyperbolic(rng)
        a = _random_class(rng, -6, 6)
        offset = (Fraction(rng.randint(-3, 3), 4), Fraction(rng.randint(-3, 3), 4))
        cap = sol.build_cap(m, a, offset)
        if sol.area_period(cap) != 0:
            return ("caps", False, f"f={m.f} a={a}: nonzero area period")
        if sol.boundary_cycle(cap) != sol.expected_boundary(cap):
            return ("caps", False, f"f={m.f} a={a}: wrong boundary")
    return ("caps", True, f"{trials} random caps close exactly")


def _sample_point(rng: random.Random, off_cone: bool = False) -> WPoint:
    while True:
        x2 = rng.choice([-1, 1]) * rng.uniform(0.2, 1.5)
        x3 = rng.choice([-1, 1]) * rng.uniform(0.2, 1.2)
        if not off_cone or abs(abs(x2) - abs(x3)) >= 0.15:
            return WPoint(x2, x3)


def check_flow_derivative(rng: random.Random, trials: int = 50) -> Verdict:
    """-X23 B = A and -X23 B' = A' by central differences along the orbit."""
    h = 1e-4
    worst = 0.0
    for _ in range(trials):
        p = _sample_point(rng, off_cone=True)
        for fn, dfn in ((B_profile, A_profile), (Bp_profile, Ap_profile)):
            plus = fn(orbit_action(-h, p)).value
            minus = fn(orbit_action(h, p)).value
            lhs = -(plus - minus) / (2 * h)
            rhs = dfn(p).value
            err = abs(lhs - rhs) / max(abs(rhs), 1e-9)
            worst = max(worst, err)
            if err > 1e-5:
                return ("flow-derivative", False, f"p={p} {fn.__name__}: rel err {err:.2e}")
    return ("flow-derivative", True, f"max rel err {worst:.2e} over {trials} points")


def check_pde(rng: random.Random, trials: int = 50) -> Verdict:
    """(-1/4pi)(d22 - d33) F + pi (x,x) F = 2 F for F in {B, B'}."""
    h = 1e-3
    worst = 0.0
    for _ in range(trials):
        p = _sample_point(rng, off_cone=True)
        for fn in (B_profile, Bp_profile):
            f0 = fn(p).value
            d22 = (fn(WPoint(p.x2 + h, p.x3)).value - 2 * f0 + fn(WPoint(p.x2 - h, p.x3)).value) / (h * h)
            d33 = (fn(WPoint(p.x2, p.x3 + h)).value - 2 * f0 + fn(WPoint(p.x2, p.x3 - h)).value) / (h * h)
            lhs = -(d22 - d33) / (4 * math.pi) + math.pi * quad_form(p) * f0
            err = abs(lhs - 2 * f0) / max(abs(2 * f0), 1e-6)
            worst = max(worst, err)
            if err > 1e-3:
                return ("pde", False, f"p={p} {fn.__name__}: rel err {err:.2e}")
    return ("pde", True, f"max rel err {worst:.2e} over {trials} points")


def check_jump_cancellation(rng: random.Random, trials: int = 40) -> Verdict:
    """A + A' and B + B' extend continuously across x3 = 0.

    The one-sided limits of A and A' must cancel exactly; values a distance
    delta off the wall may differ by O(delta)."""
    delta = 1e-9
    for _ in range(trials):
        x2 = rng.choice([-1, 1]) * rng.uniform(0.2, 1.5)
        on = WPoint(x2, 0.0)
        lim_a, lim_ap = A_profile(on).limits, Ap_profile(on).limits
        if lim_a is None or lim_ap is None:
            return ("jump-cancellation", False, f"x2={x2}: missing one-sided limits")
        if lim_a[0] + lim_ap[0] != 0.0 or lim_a[1] + lim_ap[1] != 0.0:
            return ("jump-cancellation", False, f"x2={x2}: limits do not cancel")
        up, down = WPoint(x2, delta), WPoint(x2, -delta)
        a_gap = abs(
            (A_profile(up).value + Ap_profile(up).value)
            - (A_profile(down).value + Ap_profile(down).value)
        )
        b_gap = abs(
            (B_profile(up).value + Bp_profile(up).value)
            - (B_profile(down).value + Bp_profile(down).value)
        )
        if a_gap > 1e-8 or b_gap > 1e-10:
            return ("jump-cancellation", False, f"x2={x2}: gaps {a_gap:.2e}, {b_gap:.2e}")
    return ("jump-cancellation", True, f"{trials} crossings continuous")


def check_cone_continuity(rng: random.Random, trials: int = 40) -> Verdict:
    """B' vanishes continuously at the light cone."""
    delta = 1e-6
    for _ in range(trials):
        x2 = rng.choice([-1, 1]) * rng.uniform(0.3, 1.5)
        s3 = rng.choice([-1, 1])
        inside = WPoint(x2, s3 * (abs(x2) - delta))
        outside = WPoint(x2, s3 * (abs(x2) + delta))
        if abs(Bp_profile(inside).value) > 1e-6 or Bp_profile(outside).value != 0.0:
            return ("cone-continuity", False, f"x2={x2}")
    return ("cone-continuity", True, f"{trials} cone approaches continuous")


def check_beta(rng: random.Random) -> Verdict:
    """Value at 0, positivity/decay, and agreement of the two scaled branches."""
    if abs(beta_fn(0.0) - 1 / (8 * math.pi)) > 1e-15:
        return ("beta", False, "beta(0) != 1/(8 pi)")
    prev = beta_fn(0.0)
    for s in [0.1 * k for k in range(1, 60)]:
        cur = beta_fn(s)
        if not 0 < cur < prev:
            return ("beta", False, f"not strictly decreasing at s={s}")
        prev = cur
    for s in (29.5, 30.0, 30.5):
        direct = beta_fn(s) * math.exp(s)
        scaled = beta_scaled(s + 1e-9) if s >= 30 else beta_scaled(s)
        if abs(direct - scaled) / direct > 1e-7:
            return ("beta", False, f"branch mismatch at s={s}")
    return ("beta", True, "value at 0, monotone decay, branch agreement")


def check_orbit_invariance(rng: random.Random, trials: int = 40) -> Verdict:
    for _ in range(trials):
        p = _sample_point(rng)
        s = rng.uniform(-2, 2)
        if abs(quad_form(orbit_action(s, p)) - quad_form(p)) > 1e-10:
            return ("orbit-invariance", False, f"p={p} s={s}")
    return ("orbit-invariance", True, f"{trials} orbit moves preserve the form")


def check_ratio_quick(rng: random.Random) -> Verdict:
    """The min-series / linking-number ratio is constant across n."""
    report = holomorphic_ratio_test(make_field(5), nmax=10, k_range=60)
    if report.inconsistent:
        return ("ratio-quick", False, f"zero linking but nonzero series at n={report.inconsistent}")
    if report.spread > 1e-8:
        return ("ratio-quick", False, f"spread {report.spread:.2e}")
    return ("ratio-quick", True, f"spread {report.spread:.2e} over {len(report.ratios)} ratios")


_SUITES = (
    check_sol_oracle,
    check_sol_bilinear,
    check_sol_conjugation,
    check_sol_asymmetry,
    check_caps,
    check_flow_derivative,
    check_pde,
    check_jump_cancellation,
    check_cone_continuity,
    check_beta,
    check_orbit_invariance,
    check_ratio_quick,
)


def run_suites(seed: int = 0) -> list[Verdict]:
    rng = random.Random(seed)
    return [suite(rng) for suite in _SUITES]
