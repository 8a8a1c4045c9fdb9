"""Command-line front end.

Every subcommand prints a deterministic rendering of one library call: byte
identical across runs for identical flags (and seed).  Exit codes: 0 success,
1 computational inconsistency (a cross-check or exactness assertion failed),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import cycles, qseries, selftest, sol
from .errors import ConsistencyError, InputError
from .qfield import make_field


@dataclass(frozen=True)
class RunConfig:
    command: str
    d: int | None = None
    n: int | None = None
    m: int | None = None
    nmax: int | None = None
    k_range: int | None = None
    box: int | None = None
    n_cut: int | None = None
    tau: complex | None = None
    f: tuple | None = None
    a: tuple | None = None
    b: tuple | None = None
    interior: str | None = None
    seed: int = 0
    output: str | None = None
    format: str = "text"


def parse_tau(text: str) -> complex:
    """Parse 'RE+IMi' (also accepts 'IMi'); the imaginary part must be > 0."""
    try:
        value = complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"--tau must look like RE+IMi, got {text!r}") from None
    if not value.imag > 0:
        raise InputError(f"--tau must have positive imaginary part, got {text!r}")
    return value


def _parse_ints(text: str, count: int, flag: str) -> tuple:
    parts = text.split(",")
    if len(parts) != count:
        raise InputError(f"{flag} needs {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"{flag} needs integers, got {text!r}") from None


def _complex_str(z: complex) -> str:
    op = "+" if z.imag >= 0 else "-"
    return f"{z.real!r} {op} {abs(z.imag)!r}i"


_CSV_COMMANDS = {"qexp", "combine", "lk-table"}
_JSON_DEFAULT = {"qexp", "combine", "lk-table"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sollink",
        description="Exact linking numbers of fiber circles in Sol manifolds "
        "and of cycle boundaries over real quadratic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, *, d=False, needs=()):
        p = sub.add_parser(name, help=help_text)
        if d:
            p.add_argument("--d", type=int, required=True, help="squarefree field discriminant parameter")
        for flag, kw in needs:
            p.add_argument(flag, **kw)
        p.add_argument("--output", default=None, help="write output to this file instead of stdout")
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        return p

    cmd("field-info", "ring, discriminant, and unit data", d=True)
    cmd(
        "sol-link",
        "exact linking number of two fiber circles",
        needs=(
            ("--f", dict(required=True, help="gluing matrix a,b,c,d (row major)")),
            ("--a", dict(required=True, help="first circle class x,y")),
            ("--b", dict(required=True, help="second circle class u,v")),
        ),
    )
    cmd(
        "sol-cap",
        "cap chain for a fiber circle, with closure and oracle checks",
        needs=(
            ("--f", dict(required=True, help="gluing matrix a,b,c,d (row major)")),
            ("--a", dict(required=True, help="circle class x,y")),
        ),
    )
    cmd(
        "boundary",
        "boundary circle families of the norm-n cycle",
        d=True,
        needs=(("--n", dict(type=int, required=True, help="cycle norm index")),),
    )
    cmd(
        "lk-table",
        "all pairwise boundary linking numbers up to nmax",
        d=True,
        needs=(("--nmax", dict(type=int, required=True)),),
    )
    cmd(
        "qexp",
        "exact q-expansion of boundary linking numbers against a fixed m",
        d=True,
        needs=(
            ("--m", dict(type=int, default=1)),
            ("--nmax", dict(type=int, required=True)),
        ),
    )
    cmd(
        "w-eval",
        "numeric two-part evaluation of the completed series",
        d=True,
        needs=(
            ("--tau", dict(required=True, help="upper half plane point, RE+IMi")),
            ("--k-range", dict(type=int, default=60, dest="k_range")),
            ("--box", dict(type=int, default=40)),
            ("--n-cut", dict(type=int, default=20, dest="n_cut")),
        ),
    )
    cmd(
        "ratio-test",
        "min-series / linking-number ratios and their spread",
        d=True,
        needs=(
            ("--nmax", dict(type=int, required=True)),
            ("--k-range", dict(type=int, default=80, dest="k_range")),
        ),
    )
    cmd(
        "combine",
        "subtract boundary linking from supplied interior numbers",
        d=True,
        needs=(
            ("--interior", dict(required=True, help="interior table JSON file")),
            ("--nmax", dict(type=int, required=True)),
            ("--m", dict(type=int, default=None, help="must match the table's m if given")),
        ),
    )
    cmd(
        "self-test",
        "run all randomized cross-check suites",
        needs=(("--seed", dict(type=int, default=0)),),
    )
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = getattr(args, "format", None)
    if fmt is None:
        fmt = "json" if args.command in _JSON_DEFAULT else "text"
    if fmt == "csv" and args.command not in _CSV_COMMANDS:
        raise InputError(f"--format csv is not available for {args.command}")
    kwargs = dict(command=args.command, format=fmt, output=getattr(args, "output", None))
    for name in ("d", "n", "m", "nmax", "k_range", "box", "n_cut", "interior", "seed"):
        if hasattr(args, name):
            kwargs[name] = getattr(args, name)
    if hasattr(args, "tau"):
        kwargs["tau"] = parse_tau(args.tau)
    if hasattr(args, "f"):
        v = _parse_ints(args.f, 4, "--f")
        kwargs["f"] = ((v[0], v[1]), (v[2], v[3]))
    for name in ("a", "b"):
        if hasattr(args, name):
            kwargs[name] = _parse_ints(getattr(args, name), 2, f"--{name}")
    return RunConfig(**kwargs)


def _run_field_info(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    basis = "(1 + sqrt(d))/2" if field.d % 4 == 1 else "sqrt(d)"
    m = sol.glueing_from_unit(field)
    if config.format == "json":
        payload = {
            "d": field.d,
            "disc": field.disc,
            "omega": basis,
            "eps0": str(field.eps0),
            "eps0_norm": field.eps0_norm,
            "eps": str(field.eps),
            "eps_trace": str(field.eps.trace()),
            "n_det": m.n_det,
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [
        f"d: {field.d}",
        f"disc: {field.disc}",
        f"integer basis: 1, w = {basis}",
        f"fundamental unit: {field.eps0} (norm {field.eps0_norm})",
        f"totally positive unit: {field.eps}",
        f"unit trace: {field.eps.trace()}",
        f"gluing N_det: {m.n_det}",
    ]
    return 0, "\n".join(lines) + "\n"


def _run_sol_link(config: RunConfig) -> tuple[int, str]:
    m = sol.make_sol(config.f)
    value = sol.link_fiber(m, config.a, config.b)
    if config.format == "json":
        payload = {"f": list(config.f[0] + config.f[1]), "a": list(config.a), "b": list(config.b), "link": str(value)}
        return 0, json.dumps(payload, indent=2) + "\n"
    return 0, f"{value}\n"


_CAP_PROBES = ((1, 0), (0, 1), (1, 1), (2, 1), (1, -2))


def _run_sol_cap(config: RunConfig) -> tuple[int, str]:
    m = sol.make_sol(config.f)
    cap = sol.build_cap(m, config.a)
    period = sol.area_period(cap)
    if period != 0:
        raise ConsistencyError(f"cap area period is {period}, expected 0")
    if sol.boundary_cycle(cap) != sol.expected_boundary(cap):
        raise ConsistencyError("cap boundary does not match the requested circle")
    for probe in _CAP_PROBES:
        direct = sol.link_fiber(m, config.a, probe)
        counted = sol.cap_intersect(cap, m, probe, Fraction(1, 3))
        if direct != counted:
            raise ConsistencyError(f"oracle mismatch on probe {probe}: {direct} != {counted}")
    if config.format == "json":
        payload = {
            "f": list(config.f[0] + config.f[1]),
            "circle_class": list(cap.circle_class),
            "weight": str(cap.weight),
            "monodromy_class": list(cap.monodromy_class),
            "fiber_correction": str(cap.fiber_correction),
            "area_period": str(period),
            "boundary_check": "ok",
            "oracle_probes": f"{len(_CAP_PROBES)}/{len(_CAP_PROBES)} agree",
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [
        f"circle class: {cap.circle_class}",
        f"weight: {cap.weight}",
        f"monodromy class: {cap.monodromy_class}",
        f"fiber correction: {cap.fiber_correction}",
        f"area period: {period}",
        "boundary check: ok",
        f"oracle probes: {len(_CAP_PROBES)}/{len(_CAP_PROBES)} agree",
    ]
    return 0, "\n".join(lines) + "\n"


def _run_boundary(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    if config.n < 1:
        raise InputError(f"--n must be >= 1, got {config.n}")
    comps = cycles.boundary_components(field, config.n)
    if config.format == "json":
        payload = {
            "d": field.d,
            "n": config.n,
            "components": [
                {
                    "rep": str(c.cls.rep),
                    "coords": [str(c.cls.rep.a), str(c.cls.rep.b)],
                    "multiplicity": c.multiplicity,
                    "fiber": [str(c.fiber_label.a), str(c.fiber_label.b)],
                }
                for c in comps
            ],
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    if not comps:
        return 0, f"no norm-{config.n} classes\n"
    lines = [
        f"class {c.cls.rep}  multiplicity {c.multiplicity}  fiber ({c.fiber_label.a}, {c.fiber_label.b})"
        for c in comps
    ]
    return 0, "\n".join(lines) + "\n"


def _run_lk_table(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    table = cycles.link_table(field, config.nmax)
    if config.format == "csv":
        lines = ["n,m,value"]
        lines += [f"{n},{m},{v}" for (n, m), v in table.entries.items()]
        return 0, "\n".join(lines) + "\n"
    if config.format == "json":
        payload = {
            "d": table.d,
            "nmax": table.nmax,
            "n_det": table.n_det,
            "entries": {f"{n},{m}": str(v) for (n, m), v in table.entries.items()},
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [f"Lk(C{n}, C{m}) = {v}" for (n, m), v in table.entries.items()]
    return 0, "\n".join(lines) + "\n"


def _render_qexp(q: qseries.QExpansion, fmt: str) -> str:
    if fmt == "csv":
        return q.to_csv()
    if fmt == "json":
        return q.to_json()
    lines = [f"q^{n}: {q.coeffs[n]}" for n in range(1, q.nmax + 1)]
    return "\n".join(lines) + "\n"


def _run_qexp(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    q = qseries.lk_qexpansion(field, config.m, config.nmax)
    return 0, _render_qexp(q, config.format)


def _run_w_eval(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    params = qseries.WEvalParams(tau=config.tau, k_range=config.k_range, box=config.box, n_cut=config.n_cut)
    rep = qseries.eval_W(field, params)
    if config.format == "json":
        payload = {
            "d": field.d,
            "tau": _complex_str(config.tau),
            "holomorphic": {"re": rep.holomorphic.real, "im": rep.holomorphic.imag},
            "beta": {"re": rep.beta_part.real, "im": rep.beta_part.imag},
            "total": {"re": rep.total.real, "im": rep.total.imag},
            "holo_tail": rep.holo_tail,
            "beta_tail": rep.beta_tail,
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [
        f"tau: {_complex_str(config.tau)}",
        f"holomorphic: {_complex_str(rep.holomorphic)}",
        f"beta: {_complex_str(rep.beta_part)}",
        f"total: {_complex_str(rep.total)}",
        f"holo tail estimate: {rep.holo_tail!r}",
        f"beta tail estimate: {rep.beta_tail!r}",
    ]
    return 0, "\n".join(lines) + "\n"


def _run_ratio_test(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    report = qseries.holomorphic_ratio_test(field, config.nmax, config.k_range)
    if config.format == "json":
        payload = {
            "d": report.d,
            "k_range": report.k_range,
            "ratios": {str(n): report.ratios[n] for n in sorted(report.ratios)},
            "spread": report.spread,
            "omitted": list(report.omitted),
            "inconsistent": list(report.inconsistent),
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [f"n={n} ratio={report.ratios[n]!r}" for n in sorted(report.ratios)]
    lines.append(f"spread: {report.spread!r}")
    if report.omitted:
        lines.append(f"omitted (zero linking): {', '.join(map(str, report.omitted))}")
    if report.inconsistent:
        lines.append(f"INCONSISTENT (zero linking, nonzero series): {', '.join(map(str, report.inconsistent))}")
    code = 1 if report.inconsistent else 0
    return code, "\n".join(lines) + "\n"


def _run_combine(config: RunConfig) -> tuple[int, str]:
    field = make_field(config.d)
    try:
        with open(config.interior, encoding="utf-8") as fh:
            table = qseries.InteriorTable.from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read interior table: {exc}") from exc
    if config.m is not None and config.m != table.m:
        raise InputError(f"--m {config.m} does not match the table's m = {table.m}")
    q = qseries.combine_interior(table, field, config.nmax)
    return 0, _render_qexp(q, config.format)


def _run_self_test(config: RunConfig) -> tuple[int, str]:
    verdicts = selftest.run_suites(config.seed)
    lines = [f"{'ok  ' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in verdicts]
    failed = sum(1 for _, ok, _ in verdicts if not ok)
    lines.append(f"{len(verdicts) - failed}/{len(verdicts)} suites passed (seed {config.seed})")
    return (1 if failed else 0), "\n".join(lines) + "\n"


_DISPATCH = {
    "field-info": _run_field_info,
    "sol-link": _run_sol_link,
    "sol-cap": _run_sol_cap,
    "boundary": _run_boundary,
    "lk-table": _run_lk_table,
    "qexp": _run_qexp,
    "w-eval": _run_w_eval,
    "ratio-test": _run_ratio_test,
    "combine": _run_combine,
    "self-test": _run_self_test,
}


def dispatch(config: RunConfig) -> tuple[int, str]:
    """Run one validated command; returns (exit code, rendered output)."""
    return _DISPATCH[config.command](config)


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _config_from_args(args)
        code, text = dispatch(config)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
