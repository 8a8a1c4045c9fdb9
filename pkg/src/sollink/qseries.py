"""Generating series built from the boundary linking numbers.

Three layers: exact rational q-expansions of the boundary linking pairing
(per fixed second index m), a float "minimum over the unit orbit" series whose
coefficients are proportional to the exact ones with one universal constant,
and a numeric two-part evaluator adding a non-holomorphic lattice sum to the
truncated holomorphic part.  Exact data stays in Fraction end to end; floats
appear only in the analytic layer.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .qfield import FieldData, enumerate_norm_classes
from .cycles import link_boundary
from .special_fn import beta_scaled


def _fraction_from_str(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational literal: {text!r}") from exc
    return value


@dataclass(frozen=True)
class QExpansion:
    """Exact rational q-expansion: coefficient of q^n for n = 1..nmax."""

    d: int
    m: int
    weight: int
    nmax: int
    coeffs: dict  # n -> Fraction, every n in 1..nmax present

    def coefficient(self, n: int) -> Fraction:
        if n not in self.coeffs:
            raise InputError(f"coefficient {n} is outside the stored range 1..{self.nmax}")
        return self.coeffs[n]

    def to_json(self) -> str:
        payload = {
            "d": self.d,
            "m": self.m,
            "weight": self.weight,
            "nmax": self.nmax,
            "coeffs": {str(n): str(self.coeffs[n]) for n in range(1, self.nmax + 1)},
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "QExpansion":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        try:
            d, m, weight, nmax = int(raw["d"]), int(raw["m"]), int(raw["weight"]), int(raw["nmax"])
            raw_coeffs = raw["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed q-expansion payload: {exc}") from exc
        coeffs = {}
        for n in range(1, nmax + 1):
            key = str(n)
            if key not in raw_coeffs:
                raise InputError(f"q-expansion is missing coefficient {n}")
            coeffs[n] = _fraction_from_str(raw_coeffs[key])
        return cls(d=d, m=m, weight=weight, nmax=nmax, coeffs=coeffs)

    def to_csv(self) -> str:
        lines = ["n,value,tail_estimate"]
        for n in range(1, self.nmax + 1):
            lines.append(f"{n},{self.coeffs[n]},0")
        return "\n".join(lines) + "\n"


def lk_qexpansion(field: FieldData, m: int, nmax: int) -> QExpansion:
    """Boundary linking numbers Lk(C_n, C_m) for n = 1..nmax as a weight-2
    rational q-expansion in the first index."""
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    if nmax < 1:
        raise InputError(f"nmax must be >= 1, got {nmax}")
    coeffs = {n: link_boundary(field, n, m) for n in range(1, nmax + 1)}
    return QExpansion(d=field.d, m=m, weight=2, nmax=nmax, coeffs=coeffs)


def min_series_coeff(field: FieldData, n: int, k_range: int) -> float:
    """Coefficient of q^n of the orbit-minimum series:

        (1/sqrt(2*disc)) * sum over classes mu of norm n, signs s = +-1,
        |k| <= k_range of min(|s mu eps^k|, |s mu' eps^-k|).

    Terms decay like eps^-|k|, so moderate k_range already gives full double
    precision.  Summation order is classes, then signs, then k ascending, so
    the float result is deterministic.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if k_range < 1:
        raise InputError(f"k_range must be >= 1, got {k_range}")
    log_eps = math.log(field.eps.embed())
    total = 0.0
    for cls in enumerate_norm_classes(field, n):
        log_mu = math.log(cls.rep.embed())
        log_mu_c = math.log(cls.rep.embed(conjugate=True))
        for _sign in (1, -1):
            for k in range(-k_range, k_range + 1):
                # min in log space; the min side never overflows
                total += math.exp(min(log_mu + k * log_eps, log_mu_c - k * log_eps))
    return total / math.sqrt(2 * field.disc)


@dataclass(frozen=True)
class RatioReport:
    """Per-n ratios of the orbit-minimum coefficient to the exact boundary
    linking number Lk(C_n, C_1), their spread, and the exceptional indices."""

    d: int
    k_range: int
    ratios: dict  # n -> float, for n with Lk != 0
    spread: float
    omitted: tuple  # n with Lk == 0 and min-coefficient ~ 0
    inconsistent: tuple  # n with Lk == 0 but min-coefficient clearly nonzero


def holomorphic_ratio_test(field: FieldData, nmax: int, k_range: int) -> RatioReport:
    """Measure min_series_coeff(n) / Lk(C_n, C_1) for n = 1..nmax.

    The ratio is one constant for every n (and every field); this function
    measures it rather than asserting a value.
    """
    if nmax < 1:
        raise InputError(f"nmax must be >= 1, got {nmax}")
    ratios = {}
    omitted, inconsistent = [], []
    for n in range(1, nmax + 1):
        lk = link_boundary(field, n, 1)
        mn = min_series_coeff(field, n, k_range)
        if lk == 0:
            (omitted if abs(mn) <= 1e-9 else inconsistent).append(n)
            continue
        ratios[n] = mn / float(lk)
    values = list(ratios.values())
    spread = max(values) - min(values) if len(values) > 1 else 0.0
    return RatioReport(
        d=field.d,
        k_range=k_range,
        ratios=ratios,
        spread=spread,
        omitted=tuple(omitted),
        inconsistent=tuple(inconsistent),
    )


@dataclass(frozen=True)
class WEvalParams:
    tau: complex
    k_range: int = 40
    box: int = 12
    n_cut: int = 20

    def __post_init__(self):
        if not (self.tau.imag > 0):
            raise InputError(f"tau must lie in the upper half plane, got {self.tau}")
        if self.k_range < 1:
            raise InputError(f"k_range must be >= 1, got {self.k_range}")
        if self.box < 1:
            raise InputError(f"box must be >= 1, got {self.box}")
        if self.n_cut < 1:
            raise InputError(f"n_cut must be >= 1, got {self.n_cut}")


@dataclass(frozen=True)
class WEvalReport:
    holomorphic: complex
    beta_part: complex
    holo_tail: float
    beta_tail: float

    @property
    def total(self) -> complex:
        return self.holomorphic + self.beta_part


def eval_W(field: FieldData, params: WEvalParams) -> WEvalReport:
    """Evaluate the completed series at tau: truncated holomorphic part from
    the orbit-minimum coefficients plus the non-holomorphic lattice sum

        -(sqrt(2)/sqrt(disc*v)) * sum over lattice a + b*w in the box of
            beta(pi*v*disc*b^2) * e^{2 pi i N(lambda) tau},

    each beta term rewritten as beta_scaled(s) * e^{-pi v (lambda^2+lambda'^2)}
    * e^{2 pi i N u}, whose real exponent is never positive.  Tail fields are
    heuristic upper estimates from the last ring of each truncation.
    """
    tau = params.tau
    u, v = tau.real, tau.imag
    q_abs = math.exp(-2 * math.pi * v)

    holo = 0.0j
    max_coeff = 0.0
    for n in range(1, params.n_cut + 1):
        c = min_series_coeff(field, n, params.k_range)
        max_coeff = max(max_coeff, abs(c))
        holo += c * cmath.exp(2j * math.pi * n * tau)
    # geometric tail with a factor-4 margin for slow coefficient growth
    holo_tail = 4 * max_coeff * q_abs ** (params.n_cut + 1) / (1 - q_abs) ** 2

    prefactor = -math.sqrt(2) / math.sqrt(field.disc * v)
    beta_sum = 0.0j
    shell_abs = 0.0
    box = params.box
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            lam = field.element(a, b)
            x, y = lam.embed(), lam.embed(conjugate=True)
            s = math.pi * v * field.disc * b * b
            mag = beta_scaled(s) * math.exp(-math.pi * v * (x * x + y * y))
            term = mag * cmath.exp(2j * math.pi * float(lam.norm()) * u)
            beta_sum += term
            if max(abs(a), abs(b)) == box:
                shell_abs += abs(mag)
    beta_tail = abs(prefactor) * 2 * shell_abs
    return WEvalReport(
        holomorphic=holo,
        beta_part=prefactor * beta_sum,
        holo_tail=holo_tail,
        beta_tail=beta_tail,
    )


@dataclass(frozen=True)
class InteriorTable:
    """Externally supplied interior intersection numbers against the norm-m
    cycle, indexed by n."""

    m: int
    entries: dict  # n -> Fraction
    provenance: str = ""

    def entry(self, n: int) -> Fraction:
        if n not in self.entries:
            raise InputError(f"interior table has no entry for n = {n}")
        return self.entries[n]

    def to_json(self) -> str:
        payload = {
            "m": self.m,
            "entries": {str(n): str(self.entries[n]) for n in sorted(self.entries)},
            "provenance": self.provenance,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "InteriorTable":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        if not isinstance(raw, dict) or "m" not in raw or "entries" not in raw:
            raise InputError("interior table needs keys 'm' and 'entries'")
        try:
            m = int(raw["m"])
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad m in interior table: {raw.get('m')!r}") from exc
        if m < 1:
            raise InputError(f"interior table m must be >= 1, got {m}")
        entries = {}
        for key, val in raw["entries"].items():
            try:
                n = int(key)
            except ValueError as exc:
                raise InputError(f"bad index in interior table: {key!r}") from exc
            entries[n] = _fraction_from_str(val)
        return cls(m=m, entries=entries, provenance=str(raw.get("provenance", "")))


def combine_interior(table: InteriorTable, field: FieldData, nmax: int) -> QExpansion:
    """Subtract the boundary linking correction from supplied interior numbers:
    coefficient(n) = interior(n, m) - Lk(C_n, C_m) for n = 1..nmax.

    Every n in range must be present in the table; all gaps are reported in
    one InputError.
    """
    if nmax < 1:
        raise InputError(f"nmax must be >= 1, got {nmax}")
    missing = [n for n in range(1, nmax + 1) if n not in table.entries]
    if missing:
        raise InputError(f"interior table is missing n = {', '.join(map(str, missing))}")
    coeffs = {n: table.entries[n] - link_boundary(field, n, table.m) for n in range(1, nmax + 1)}
    return QExpansion(d=field.d, m=table.m, weight=2, nmax=nmax, coeffs=coeffs)
