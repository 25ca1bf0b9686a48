"""``stieltjes`` command line: eval, integrate, verify, table.

Exit status: 0 success, 2 usage error, 3 domain or singularity error,
4 verification failure (a check or an agreement delta above ``--tol``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_forms import gamma_k_at
from .errors import DomainError, StieltjesError
from .hurwitz import (
    MAX_STIELTJES_INDEX,
    EulerMaclaurinPlan,
    Method,
    RationalArg,
    stieltjes_oracle,
)
from .loglog import (
    Route,
    demonstration1_I2,
    integral_family_I,
    integral_family_J,
    integral_I_omega,
    integral_I_pq,
    integral_pole,
    integrand_family_I,
    integrand_family_J,
    integrand_I_omega,
    integrand_pole_real,
)
from .policy import PrecisionPolicy, get_policy
from .quadrature import LogLogIntegrand, loglog_quadrature
from .verify import ALIASES, CHECKS, run_checks

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4
EPS = sys.float_info.epsilon

FAMILIES = ("I_pq", "I_plus_minus", "I_plus_n_q", "I_minus_n_q", "J_family",
            "I_omega", "pole_simple", "pole_higher", "I2")

GAMMA_FIELDS = ("k", "a_num", "a_den", "method", "value", "err_estimate")
INTEGRAL_FIELDS = ("family", "k", "params", "method", "value", "err_estimate")
VERIFY_FIELDS = ("check", "cases", "max_dev", "tol", "status", "detail")


def fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


@dataclass
class Table:
    fields: tuple[str, ...]
    rows: list[dict] = field(default_factory=list)

    def render(self, kind: str) -> str:
        if kind == "json":
            return _render_json(self)
        lines = [",".join(self.fields)]
        for r in self.rows:
            lines.append(",".join(_csv_cell(fmt(r.get(f, ""))) for f in self.fields))
        return "\n".join(lines) + "\n"


def _csv_cell(s: str) -> str:
    if any(c in s for c in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def _json_scalar(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g") if math.isfinite(v) else "null"
    return json.dumps(v)


def _render_json(t: Table) -> str:
    # hand-rolled so floats carry exactly 17 significant digits
    objs = []
    for r in t.rows:
        body = ", ".join(f'"{f}": {_json_scalar(r[f])}' for f in t.fields if f in r)
        objs.append("  {" + body + "}")
    if not objs:
        return "[]\n"
    return "[\n" + ",\n".join(objs) + "\n]\n"


def parse_argument(text: str) -> RationalArg | float:
    """'j/m' parses as a rational, anything else as a decimal real."""
    if "/" in text:
        return RationalArg.parse(text)
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"cannot parse {text!r} as a real") from None


def parse_k_list(text: str) -> list[int]:
    try:
        ks = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks:
        raise argparse.ArgumentTypeError("empty k list")
    return ks


def _echo_arg(a: RationalArg | float) -> tuple[str, str]:
    if isinstance(a, RationalArg):
        return str(a.num), str(a.den)
    return fmt(a), "1"


def _closed_value(k: int, a: RationalArg | float) -> tuple[float, float]:
    if k > 2:
        raise DomainError(f"no closed form for k = {k}; use --method oracle")
    if isinstance(a, RationalArg):
        x = a.fraction
    elif float(a).is_integer() and a > 0:
        x = Fraction(int(a))
    elif k == 0:
        x = a
    else:
        raise DomainError("closed forms need a rational argument j/m")
    v = gamma_k_at(k, x)
    return v, 16 * EPS * max(1.0, abs(v))


def _gamma_rows(k: int, a, method: str, policy: PrecisionPolicy) -> tuple[list[dict], float]:
    a_num, a_den = _echo_arg(a)
    x = a.as_real if isinstance(a, RationalArg) else float(a)
    base = {"k": k, "a_num": a_num, "a_den": a_den}
    rows, vals = [], {}
    if method in ("closed", "both"):
        v, e = _closed_value(k, a)
        vals["closed"] = v
        rows.append(dict(base, method=Method.CLOSED_FORM.value, value=v, err_estimate=e))
    if method in ("oracle", "both"):
        if not 0 <= k <= MAX_STIELTJES_INDEX:
            raise DomainError(f"oracle supports 0 <= k <= {MAX_STIELTJES_INDEX}")
        sv = stieltjes_oracle(k, x, EulerMaclaurinPlan.from_policy(policy))
        vals["oracle"] = sv.value
        rows.append(dict(base, method=sv.method.value, value=sv.value,
                         err_estimate=sv.err_estimate))
    delta = 0.0
    if method == "both":
        delta = abs(vals["closed"] - vals["oracle"])
        for r in rows:
            r["delta"] = delta
    return rows, delta


def run_eval(args, policy: PrecisionPolicy) -> tuple[Table, float]:
    if args.a is None:
        raise _Usage("eval needs --a")
    a = parse_argument(args.a)
    ks = args.k or [1]
    fields = GAMMA_FIELDS + (("delta",) if args.method == "both" else ())
    table = Table(fields)
    worst = 0.0
    for k in ks:
        rows, d = _gamma_rows(k, a, args.method, policy)
        table.rows.extend(rows)
        worst = max(worst, d)
    return table, worst


def run_table(args, policy: PrecisionPolicy) -> tuple[Table, float]:
    if args.m_max is None or args.m_max < 2:
        raise _Usage("table needs --m-max >= 2")
    ks = args.k or [1]
    fields = GAMMA_FIELDS + (("delta",) if args.method == "both" else ())
    table = Table(fields)
    keyed = []
    worst = 0.0
    for m in range(2, args.m_max + 1):
        for j in range(1, m):
            for k in ks:
                rows, d = _gamma_rows(k, RationalArg(j, m), args.method, policy)
                worst = max(worst, d)
                keyed.extend(((m, j, k, i), r) for i, r in enumerate(rows))
    table.rows = [r for _, r in sorted(keyed, key=lambda t: t[0])]
    return table, worst


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"--family {args.family} needs " + ", ".join("--" + n.replace("_", "-")
                                                               for n in missing))


def _qexp(args) -> Fraction | float:
    if args.qexp is None:
        return 0
    return Fraction(args.qexp) if "/" in args.qexp else float(args.qexp)


def _integral_plan(args, policy):
    """(params label, closed routes {name: value}, quadrature thunk or None, k)."""
    fam, k = args.family, (args.k or [1])[0]
    if fam == "I_pq":
        _need(args, "p", "q")
        routes = {
            Route.STIELTJES.value: integral_I_pq(k, args.p, args.q, Route.STIELTJES, policy).value,
            Route.ROOTS.value: integral_I_pq(k, args.p, args.q, Route.ROOTS, policy).value,
        }
        quad = lambda: integral_I_pq(k, args.p, args.q, Route.QUADRATURE, policy).value
        return f"p={args.p};q={args.q}", routes, quad, k
    if fam == "I_plus_minus":
        _require_k1(k, fam)
        sign = args.sign or "plus"
        v = integral_family_I(3, 0, sign)
        den = [1, 1, 1] if sign == "plus" else [1, -1, 1]
        integrand = LogLogIntegrand.rational([1], den)
        return (f"sign={sign}", {"closed_form": v},
                lambda: loglog_quadrature(integrand, 1, policy), 1)
    if fam in ("I_plus_n_q", "I_minus_n_q"):
        _require_k1(k, fam)
        _need(args, "n")
        sign = "plus" if fam == "I_plus_n_q" else "minus"
        q = _qexp(args)
        v = integral_family_I(args.n, q, sign)
        integrand = integrand_family_I(args.n, float(q), sign)
        return (f"n={args.n};qexp={q}", {"closed_form": v},
                lambda: loglog_quadrature(integrand, 1, policy), 1)
    if fam == "J_family":
        _need(args, "p")
        q = _qexp(args)
        v = integral_family_J(args.p, q, k)
        integrand = integrand_family_J(args.p, float(q))
        return (f"p={args.p};qexp={q}", {"closed_form": v},
                lambda: loglog_quadrature(integrand, k, policy), k)
    if fam == "I_omega":
        _require_k1(k, fam)
        _need(args, "delta")
        v = integral_I_omega(args.delta)
        integrand = integrand_I_omega(args.delta)
        return (f"delta={fmt(args.delta)}", {"closed_form": v},
                lambda: loglog_quadrature(integrand, 1, policy), 1)
    if fam in ("pole_simple", "pole_higher"):
        _need(args, "a")
        try:
            a = complex(args.a.replace(" ", ""))
        except ValueError:
            raise DomainError(f"cannot parse pole location {args.a!r}") from None
        order = 0 if fam == "pole_simple" else (args.order if args.order is not None else 1)
        if fam == "pole_higher" and order < 1:
            raise DomainError("pole_higher needs --order >= 1")
        v = integral_pole(a, k, order, policy)
        quad = None
        if a.imag == 0 and a.real > 1:
            integrand = integrand_pole_real(a.real, order)
            quad = lambda: loglog_quadrature(integrand, k, policy)
        label = f"a={args.a};order={order}"
        return label, {"closed_form": v}, quad, k
    if fam == "I2":
        _require_k1(k, fam)
        d = demonstration1_I2(policy)
        routes = {"closed_form": d.value}
        for tag, f in zip("abc", d.closed_forms):
            routes[f"closed_form_{tag}"] = f
        integrand = LogLogIntegrand.rational([1], [1, 0, 1])
        return "", routes, lambda: loglog_quadrature(integrand, 1, policy), 1
    raise _Usage(f"unknown family {fam!r}")


def _require_k1(k, fam):
    if k != 1:
        raise DomainError(f"family {fam} is available for k = 1 only")


def _quad_error(args, policy, value: float) -> float:
    """Change in the quadrature value when the step is doubled."""
    coarse = policy.with_(quad_step=2 * policy.quad_step)
    return abs(value - _integral_plan(args, coarse)[2]())


def run_integrate(args, policy: PrecisionPolicy) -> tuple[Table, float]:
    if args.family is None:
        raise _Usage("integrate needs --family")
    params, routes, quad, k = _integral_plan(args, policy)
    values = {}
    has_imag = any(isinstance(v, complex) for v in routes.values())
    if args.method in ("closed", "both"):
        values.update(routes)
    if args.method in ("oracle", "both"):
        if quad is None:
            raise DomainError("no quadrature route for this pole location")
        values[Route.QUADRATURE.value] = quad()
    fields = INTEGRAL_FIELDS + (("imag",) if has_imag else ()) + (
        ("delta",) if len(values) > 1 else ())
    table = Table(fields)
    reals = [v.real if isinstance(v, complex) else v for v in values.values()]
    delta = max(reals) - min(reals) if len(reals) > 1 else 0.0
    for name in sorted(values):
        v = values[name]
        if name == Route.QUADRATURE.value:
            err = _quad_error(args, policy, v)
        else:
            err = 16 * EPS * max(1.0, abs(v))
        row = {"family": args.family, "k": k, "params": params, "method": name,
               "value": float(v.real), "err_estimate": err}
        if has_imag:
            row["imag"] = float(v.imag) if isinstance(v, complex) else 0.0
        if "delta" in fields:
            row["delta"] = delta
        table.rows.append(row)
    if args.family == "I2" and args.method != "oracle":
        spread = max(routes.values()) - min(routes.values())
        print(f"note: partial-fraction value and the three closed forms agree to {spread:.3e}",
              file=sys.stderr)
    return table, delta


def run_verify(args, policy: PrecisionPolicy) -> tuple[Table, bool]:
    results = run_checks(args.check, m_max=args.m_max, q_max=args.q_max, policy=policy,
                         tol=args.tol)
    table = Table(VERIFY_FIELDS)
    for r in results:
        table.rows.append({"check": r.name, "cases": r.cases, "max_dev": r.max_dev,
                           "tol": r.tol, "status": "pass" if r.passed else "FAIL",
                           "detail": r.detail})
    return table, all(r.passed for r in results)


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stieltjes", description="Stieltjes constants and log-log integrals.")
    p.add_argument("command", choices=("eval", "integrate", "verify", "table"))
    p.add_argument("--k", type=parse_k_list, help="index or comma list, e.g. 1,2")
    p.add_argument("--a", help="argument as j/m or a decimal; pole location for pole families")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--qexp", help="exponent q' as a decimal or j/m")
    p.add_argument("--delta", type=float)
    p.add_argument("--sign", choices=("plus", "minus"), help="sign for I_plus_minus")
    p.add_argument("--order", type=int, help="pole order m for pole_higher")
    p.add_argument("--m-max", dest="m_max", type=int)
    p.add_argument("--q-max", dest="q_max", type=int)
    p.add_argument("--method", choices=("oracle", "closed", "both"), default="closed")
    p.add_argument("--check", choices=tuple(CHECKS) + tuple(ALIASES) + ("all",), default="all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--tol", type=float)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        policy = get_policy()
    except DomainError as exc:
        print(f"stieltjes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    tol = args.tol if args.tol is not None else policy.agree_tol
    try:
        if args.command == "verify":
            table, ok = run_verify(args, policy)
            status = EXIT_OK if ok else EXIT_VERIFY
        else:
            runner = {"eval": run_eval, "integrate": run_integrate, "table": run_table}
            table, delta = runner[args.command](args, policy)
            status = EXIT_OK if delta <= tol else EXIT_VERIFY
            if status:
                print(f"stieltjes: agreement delta {delta:.3e} exceeds tolerance {tol:g}",
                      file=sys.stderr)
    except _Usage as exc:
        print(f"stieltjes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StieltjesError as exc:
        print(f"stieltjes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(table.render(args.format))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
