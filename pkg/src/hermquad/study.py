"""Integrand corpus, convergence sweeps, log-log rate fits, and CSV emission."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from hermquad.hermite import gaussian_abs_moment
from hermquad.rules import GH, TRAP, apply_rule, gh_rule
from hermquad.spaces import Integrand
from hermquad.specfun import gaussian_moment
from hermquad.trapezoid import DEFAULT_EPSILON, FixedAlpha, integrate_gaussian

#: rows at or below this are double-precision saturation and are excluded
#: from rate fits (they would bias slopes toward 0)
ERROR_FLOOR = 1e-15

RECORD_HEADER = ["rule", "integrand", "n", "alpha", "epsilon", "T", "abs_error"]
FIT_HEADER = ["rule", "integrand", "slope", "intercept", "r_squared", "n_min", "n_max"]


@dataclass(frozen=True)
class ConvergenceRecord:
    rule: str
    integrand: str
    n: int
    alpha: int
    epsilon: float | None
    T: float | None
    abs_error: float


@dataclass(frozen=True)
class RateFit:
    """Least-squares slope of log10(error) against log10(n)."""

    slope: float
    intercept: float
    r_squared: float
    n_range: tuple[int, int]
    rule: str = ""
    integrand: str = ""


def _abs_power_deriv(p: int, tau: int):
    c = float(math.perm(p, tau))
    e = p - tau

    def d(x, c=c, e=e, tau=tau):
        x = np.asarray(x, dtype=float)
        return c * np.abs(x) ** e * np.sign(x) ** tau

    return d


def _abs_power(p: int) -> Integrand:
    return Integrand(
        fn=lambda x, p=p: np.abs(x) ** p,
        derivs=tuple(_abs_power_deriv(p, tau) for tau in range(1, p + 1)),
        alpha=p,
        exact_integral=gaussian_abs_moment(p),
        label=f"|x|^{p}",
        breakpoints=(0.0,),
    )


def _exp_member(t: float, label: str) -> Integrand:
    return Integrand(
        fn=lambda x, t=t: np.exp(t * x),
        derivs=tuple(
            (lambda x, t=t, tau=tau: t**tau * np.exp(t * x)) for tau in range(1, 5)
        ),
        alpha=2,
        exact_integral=math.exp(t * t / 2.0),
        label=label,
    )


def _pow_int(x, d: int):
    """x^d by repeated multiplication: exactly sign-antisymmetric for odd d,
    unlike vectorised pow, so symmetric rules cancel odd monomials to 0."""
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    for _ in range(d):
        out = out * x
    return out


def _monomial(d: int) -> Integrand:
    return Integrand(
        fn=lambda x, d=d: _pow_int(x, d),
        derivs=tuple(
            (lambda x, d=d, tau=tau: float(math.perm(d, tau)) * _pow_int(x, max(d - tau, 0)))
            for tau in range(1, 5)
        ),
        alpha=2,
        exact_integral=gaussian_moment(d),
        label=f"x^{d}",
    )


def corpus() -> list[Integrand]:
    """The convergence-study corpus: |x|^p for p in {1,3,5} (smoothness p,
    kink at 0), the exponentials exp(x/2), exp(x), and monomials x^0..x^8."""
    members = [_abs_power(p) for p in (1, 3, 5)]
    members.append(_exp_member(0.5, "exp(x/2)"))
    members.append(_exp_member(1.0, "exp(x)"))
    members.extend(_monomial(d) for d in range(9))
    return members


def corpus_by_label() -> dict[str, Integrand]:
    return {m.label: m for m in corpus()}


def coerce_parity(n: int, kind: str) -> int:
    """Default protocol: even n for Gauss-Hermite, odd for the trapezoid,
    so neither rule evaluates at the origin."""
    if kind == GH:
        return n if n % 2 == 0 else n + 1
    if n % 2 == 1:
        return n
    return n - 1 if n - 1 >= 3 else n + 1


def default_n_grid(n_min: int = 16, n_max: int = 2048) -> list[int]:
    """Geometric grid of ratio sqrt(2), before parity coercion."""
    vals = []
    k = 0
    while True:
        v = round(n_min * 2.0 ** (k / 2.0))
        if v > n_max:
            break
        vals.append(int(v))
        k += 1
    return vals


def run_sweep(
    kinds: str | Sequence[str],
    f: Integrand,
    ns: Sequence[int],
    *,
    epsilon: float = DEFAULT_EPSILON,
    enforce_parity: bool = True,
) -> list[ConvergenceRecord]:
    """One record per (rule, n): abs_error against the corpus closed form.

    The trapezoid draws T from FixedAlpha(f.alpha, epsilon).
    """
    if isinstance(kinds, str):
        kinds = (kinds,)
    if not ns:
        raise ValueError("ns must be non-empty")
    if f.exact_integral is None:
        raise ValueError(f"{f.label or 'integrand'} has no exact integral")
    records = []
    for kind in kinds:
        if kind not in (GH, TRAP):
            raise ValueError(f"unknown rule kind {kind!r}")
        used: set[int] = set()
        for n_raw in sorted(ns):
            n = coerce_parity(int(n_raw), kind) if enforce_parity else int(n_raw)
            if n < 2:
                raise ValueError("each n must be >= 2")
            if n in used:
                continue
            used.add(n)
            try:
                if kind == GH:
                    q = apply_rule(gh_rule(n), f)
                    eps_used, T_used = None, None
                else:
                    policy = FixedAlpha(f.alpha, epsilon)
                    q = integrate_gaussian(n, policy, f)
                    eps_used, T_used = epsilon, policy.cutoff(n)
            except Exception as exc:
                raise RuntimeError(f"sweep failed at ({kind}, n={n})") from exc
            records.append(
                ConvergenceRecord(
                    rule=kind,
                    integrand=f.label,
                    n=n,
                    alpha=f.alpha,
                    epsilon=eps_used,
                    T=T_used,
                    abs_error=abs(q - f.exact_integral),
                )
            )
    records.sort(key=lambda r: (r.rule, r.integrand, r.n))
    return records


def fit_rate(records: Iterable[ConvergenceRecord]) -> RateFit:
    """Simple regression on log10 n vs log10 error, floor rows excluded."""
    rows = [r for r in records if r.abs_error > ERROR_FLOOR]
    if len(rows) < 3:
        raise ValueError("need at least 3 rows above the error floor to fit")
    x = np.log10([r.n for r in rows])
    y = np.log10([r.abs_error for r in rows])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - float((resid**2).sum()) / ss_tot
    rules = {r.rule for r in rows}
    labels = {r.integrand for r in rows}
    return RateFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=min(max(r2, 0.0), 1.0),
        n_range=(min(r.n for r in rows), max(r.n for r in rows)),
        rule=rules.pop() if len(rules) == 1 else "",
        integrand=labels.pop() if len(labels) == 1 else "",
    )


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def _record_row(r: ConvergenceRecord) -> list[str]:
    return [_cell(v) for v in (r.rule, r.integrand, r.n, r.alpha, r.epsilon, r.T, r.abs_error)]


def _fit_row(f: RateFit) -> list[str]:
    return [
        _cell(v)
        for v in (f.rule, f.integrand, f.slope, f.intercept, f.r_squared, *f.n_range)
    ]


def emit_csv(rows: Sequence[ConvergenceRecord] | Sequence[RateFit], path) -> None:
    """UTF-8, LF, header row; floats as shortest round-trip decimals;
    deterministic (rule, integrand, n) order is the caller's sort order."""
    rows = list(rows)
    if rows and isinstance(rows[0], RateFit):
        header, to_row = FIT_HEADER, _fit_row
    else:
        header, to_row = RECORD_HEADER, _record_row
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(to_row(r) for r in rows)


def parse_records(path) -> list[ConvergenceRecord]:
    """Inverse of emit_csv for record files."""
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            out.append(
                ConvergenceRecord(
                    rule=row["rule"],
                    integrand=row["integrand"],
                    n=int(row["n"]),
                    alpha=int(row["alpha"]),
                    epsilon=float(row["epsilon"]) if row["epsilon"] else None,
                    T=float(row["T"]) if row["T"] else None,
                    abs_error=float(row["abs_error"]),
                )
            )
    return out


def fig1_outputs(out_dir) -> dict[str, Path]:
    out = Path(out_dir)
    paths = {f"p{p}": out / f"fig1_p{p}.csv" for p in (1, 3, 5)}
    paths["fits"] = out / "fig1_fits.csv"
    return paths


def run_fig1(out_dir) -> dict[str, Path]:
    """The three |x|^p sweeps plus their rule-wise rate fits, to CSV files."""
    paths = fig1_outputs(out_dir)
    members = corpus_by_label()
    grid = default_n_grid()
    fits: list[RateFit] = []
    for p in (1, 3, 5):
        f = members[f"|x|^{p}"]
        records = run_sweep((GH, TRAP), f, grid)
        emit_csv(records, paths[f"p{p}"])
        for kind in (GH, TRAP):
            fits.append(fit_rate([r for r in records if r.rule == kind]))
    emit_csv(fits, paths["fits"])
    return paths
