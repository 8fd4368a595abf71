"""Command-line interface: rules, sweeps, WCE studies, certificates, constants.

All output is machine-readable CSV (stdout or files); rendering is left to
the separate plots package.  Exit codes: 0 success, 1 numeric failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from hermquad.rules import GH, TRAP, MAX_GH_POINTS, apply_rule, gh_rule
from hermquad.spaces import Integrand
from hermquad.study import (
    corpus_by_label,
    default_n_grid,
    emit_csv,
    fit_rate,
    run_fig1,
    run_sweep,
)
from hermquad.trapezoid import DEFAULT_EPSILON, FixedAlpha, cutoff_T, trap_rule
from hermquad.wce import (
    S_alpha_tau,
    bump_certificate,
    explicit_lower_constant,
    gap_certificate,
    lower_bound_prefactor,
    trap_theory_constant,
    wce_series,
)


class UsageError(Exception):
    """Bad flag combination or out-of-range flag value (exit code 2)."""


def _writer(stream):
    return csv.writer(stream, lineterminator="\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def _pick_integrand(label: str) -> Integrand:
    members = corpus_by_label()
    if label not in members:
        known = ", ".join(sorted(members))
        raise UsageError(f"unknown integrand {label!r}; choose one of: {known}")
    return members[label]


def _build_rule(args):
    if args.rule == GH:
        if not 1 <= args.n <= MAX_GH_POINTS:
            raise UsageError(f"--n must lie in [1, {MAX_GH_POINTS}] for gh")
        return gh_rule(args.n)
    if args.n < 1:
        raise UsageError("--n must be >= 1 for trap")
    if args.T is not None:
        if args.T <= 0:
            raise UsageError("--T must be positive")
        return trap_rule(args.n, args.T)
    if args.alpha is None:
        raise UsageError("trap requires --T or --alpha (with optional --epsilon)")
    if args.n < 2:
        raise UsageError("--n must be >= 2 when T comes from --alpha")
    if args.alpha < 1:
        raise UsageError("--alpha must be >= 1")
    if not 0.0 < args.epsilon < 1.0:
        raise UsageError("--epsilon must lie in (0, 1)")
    return trap_rule(args.n, cutoff_T(args.n, args.alpha, args.epsilon))


def cmd_nodes(args) -> int:
    rule = _build_rule(args)
    w = _writer(sys.stdout)
    w.writerow(["j", "node", "weight"])
    for j, (x, wt) in enumerate(zip(rule.nodes, rule.weights)):
        w.writerow([j, _cell(float(x)), _cell(float(wt))])
    return 0


def cmd_integrate(args) -> int:
    f = _pick_integrand(args.f)
    rule = _build_rule(args)
    if rule.kind == TRAP:
        from hermquad.hermite import gaussian_weight

        value = apply_rule(rule, lambda x: f.fn(x) * gaussian_weight(x))
    else:
        value = apply_rule(rule, f)
    w = _writer(sys.stdout)
    w.writerow(["rule", "integrand", "n", "value", "exact", "abs_error"])
    err = "" if f.exact_integral is None else repr(abs(value - f.exact_integral))
    exact = "" if f.exact_integral is None else repr(f.exact_integral)
    w.writerow([rule.kind, f.label, rule.n, repr(value), exact, err])
    return 0


def cmd_sweep(args) -> int:
    f = _pick_integrand(args.f)
    kinds = (GH, TRAP) if args.rule == "both" else (args.rule,)
    if args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("need 2 <= n-min <= n-max")
    if not 0.0 < args.epsilon < 1.0:
        raise UsageError("--epsilon must lie in (0, 1)")
    grid = default_n_grid(args.n_min, args.n_max)
    records = run_sweep(
        kinds, f, grid, epsilon=args.epsilon, enforce_parity=not args.no_parity
    )
    if args.out:
        emit_csv(records, args.out)
    else:
        w = _writer(sys.stdout)
        w.writerow(["rule", "integrand", "n", "alpha", "epsilon", "T", "abs_error"])
        for r in records:
            w.writerow(
                [r.rule, r.integrand, r.n, r.alpha, _cell(r.epsilon), _cell(r.T), _cell(r.abs_error)]
            )
    if args.fit:
        w = _writer(sys.stdout)
        w.writerow(["rule", "integrand", "slope", "intercept", "r_squared", "n_min", "n_max"])
        for kind in kinds:
            ft = fit_rate([r for r in records if r.rule == kind])
            w.writerow(
                [ft.rule, ft.integrand, _cell(ft.slope), _cell(ft.intercept),
                 _cell(ft.r_squared), ft.n_range[0], ft.n_range[1]]
            )
    return 0


def cmd_wce(args) -> int:
    if args.alpha < 1:
        raise UsageError("--alpha must be >= 1")
    w = _writer(sys.stdout)
    w.writerow(["n", "alpha", "K", "wce", "tail_bound"])
    for n in args.n:
        if not 2 <= n <= MAX_GH_POINTS:
            raise UsageError(f"each --n must lie in [2, {MAX_GH_POINTS}]")
        K = args.K if args.K is not None else max(10_000, 8 * n)
        est = wce_series(gh_rule(n), args.alpha, K)
        w.writerow([n, args.alpha, K, _cell(est.value), _cell(est.tail_bound)])
    return 0


def cmd_lowerbound(args) -> int:
    if args.alpha < 1:
        raise UsageError("--alpha must be >= 1")
    w = _writer(sys.stdout)
    if args.mode == "bump":
        if args.n is None:
            raise UsageError("--mode bump requires --n")
        if not 2 <= args.n <= MAX_GH_POINTS:
            raise UsageError(f"--n must lie in [2, {MAX_GH_POINTS}]")
        cert = bump_certificate(gh_rule(args.n).nodes, args.alpha)
        w.writerow(["mode", "n", "alpha", "I_h", "norm_h", "ratio"])
        w.writerow(
            ["bump", args.n, args.alpha, _cell(cert.I_h), _cell(cert.norm_h), _cell(cert.ratio)]
        )
    else:
        if args.delta is None:
            raise UsageError("--mode gap requires --delta")
        if not 0.0 < args.delta <= 1.0:
            raise UsageError("--delta must lie in (0, 1]")
        value = gap_certificate(args.delta, args.alpha)
        w.writerow(["mode", "delta", "alpha", "ratio"])
        w.writerow(["gap", _cell(args.delta), args.alpha, _cell(value)])
    return 0


def cmd_constants(args) -> int:
    if args.alpha < 1:
        raise UsageError("--alpha must be >= 1")
    a = args.alpha
    w = _writer(sys.stdout)
    w.writerow(["name", "alpha", "tau", "value"])
    w.writerow(["explicit_lower_constant", a, "", _cell(explicit_lower_constant(a))])
    w.writerow(["lower_bound_prefactor", a, "", _cell(lower_bound_prefactor(a))])
    w.writerow(["trap_theory_constant", a, "", _cell(trap_theory_constant(a))])
    for tau in range(a + 1):
        w.writerow(["S_alpha_tau", a, tau, _cell(S_alpha_tau(a, tau))])
    return 0


def cmd_fig1(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    run_fig1(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermquad",
        description="Quadrature against the standard Gaussian measure: "
        "Gauss-Hermite and truncated trapezoidal rules, worst-case-error "
        "studies, and lower-bound certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(
            name, help=help_text, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )

    p = add("nodes", "print j,node,weight rows for a rule")
    p.add_argument("--rule", choices=[GH, TRAP], required=True, help="rule kind")
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--T", type=float, default=None, help="trap half-width (overrides --alpha)")
    p.add_argument("--alpha", type=int, default=None, help="smoothness for the trap cut-off")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="cut-off epsilon")
    p.set_defaults(func=cmd_nodes)

    p = add("integrate", "apply a rule to a corpus integrand")
    p.add_argument("--rule", choices=[GH, TRAP], required=True, help="rule kind")
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--f", required=True, help="corpus integrand label, e.g. '|x|^1' or 'x^4'")
    p.add_argument("--T", type=float, default=None, help="trap half-width (overrides --alpha)")
    p.add_argument("--alpha", type=int, default=None, help="smoothness for the trap cut-off (defaults to the integrand's)")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="cut-off epsilon")
    p.set_defaults(func=cmd_integrate)

    p = add("sweep", "convergence sweep over a geometric n grid")
    p.add_argument("--rule", choices=[GH, TRAP, "both"], default="both", help="rule family")
    p.add_argument("--f", required=True, help="corpus integrand label")
    p.add_argument("--n-min", type=int, default=16, help="grid start")
    p.add_argument("--n-max", type=int, default=2048, help="grid end")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="trap cut-off epsilon")
    p.add_argument(
        "--no-parity",
        action="store_true",
        help="disable the even-GH/odd-trap protocol (default: parity on)",
    )
    p.add_argument("--out", default=None, help="CSV file (default: stdout)")
    p.add_argument("--fit", action="store_true", help="also print the rate fit")
    p.set_defaults(func=cmd_sweep)

    p = add("wce", "Hermite-space worst-case error of Gauss-Hermite rules")
    p.add_argument("--n", type=int, nargs="+", required=True, help="rule sizes")
    p.add_argument("--alpha", type=int, required=True, help="smoothness")
    p.add_argument(
        "--K", type=int, default=None, help="series truncation (default: max(10000, 8n))"
    )
    p.set_defaults(func=cmd_wce)

    p = add("lowerbound", "bump/gap lower-bound certificates")
    p.add_argument("--mode", choices=["bump", "gap"], required=True, help="certificate type")
    p.add_argument("--alpha", type=int, required=True, help="smoothness")
    p.add_argument("--n", type=int, default=None, help="GH rule size (bump mode)")
    p.add_argument("--delta", type=float, default=None, help="gap width in (0,1] (gap mode)")
    p.set_defaults(func=cmd_lowerbound)

    p = add("constants", "theory constants for a given smoothness")
    p.add_argument("--alpha", type=int, required=True, help="smoothness")
    p.set_defaults(func=cmd_constants)

    p = add("fig1", "reproduce the |x|^p convergence-comparison CSV corpus")
    p.add_argument("--out", required=True, help="output directory for the four CSV files")
    p.set_defaults(func=cmd_fig1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on flag errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hermquad: usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, RuntimeError, OSError) as exc:
        print(f"hermquad: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
