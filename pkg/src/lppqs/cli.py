"""Command-line front end: identity verification, bijection demos, CDFs, simulation.

Exit codes: 0 success, 1 mathematical failure (an identity or round trip
does not hold), 2 usage or budget errors.  Configuration precedence is
flags > LPPQS_* environment variables > built-in defaults.

All exact numbers print as rational strings ("15/16"); decimals appear only
in Monte Carlo statistics.  JSON and CSV output is byte-stable for a fixed
seed (timings are shown in text mode only).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from .characters import (
    LaurentPolynomial,
    bounded_schur_sum,
    box_partitions,
    character_jt,
    product_of_variables,
)
from .growth import apply_local, greene_oracle, grow_grid, invert_local
from .lpp import (
    EnumerationBudgetError,
    Filling,
    Geometry,
    bz_map,
    generating_series,
    lpp_time,
    p2l_map,
)
from .partitions import GTPattern, Partition, SpGTPattern
from .probability import (
    GeometricSpec,
    exact_cdf,
    factorization_report,
    sample_lpp,
)

_ENV_PREFIX = "LPPQS_"


def _env_default(name: str, fallback):
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return fallback
    return type(fallback)(raw) if fallback is not None else raw


# --- verification suites ------------------------------------------------------


def _theorem_instance(n: int, u: int, budget: int) -> dict:
    """Product identity plus the two route identities behind it at one size."""
    if u % 2:
        raise ValueError("the product identity needs even u")
    hlr = generating_series(Geometry("p2hlr", n), u, node_budget=budget)
    pr = generating_series(Geometry("p2pr", n), u, node_budget=budget)
    pl = generating_series(Geometry("p2l", n), u // 2, node_budget=budget)
    product = pr * pl
    sp_sum = LaurentPolynomial.zero(n)
    for lam in box_partitions(u, n):
        sp_sum = sp_sum + character_jt("symplectic", lam, n)
    checks = {
        "product": hlr == product,
        "half_pattern_series": hlr == product_of_variables(n, u) * sp_sum,
        "schur_series": pr == bounded_schur_sum(u, n, even_rows_only=False),
        "even_schur_series": pl == bounded_schur_sum(u, n, even_rows_only=True),
    }
    return {
        "n": n,
        "u": u,
        "checks": checks,
        "ok": all(checks.values()),
        "lhs": hlr.canonical_text(),
        "rhs": product.canonical_text(),
    }


def _okada_instance(n: int, u: int) -> dict:
    from .characters import okada_product

    lhs, rhs = okada_product(u, n)
    return {"n": n, "u": u, "ok": lhs == rhs}


def _stembridge_instance(n: int, u: int) -> dict:
    v = u // 2
    full = bounded_schur_sum(u, n, even_rows_only=False)
    even = bounded_schur_sum(u, n, even_rows_only=True)
    ok = full == product_of_variables(n, v) * character_jt(
        "odd_orthogonal", Partition([v] * n), n
    ) and even == product_of_variables(n, v) * character_jt(
        "symplectic", Partition([v] * n), n
    )
    return {"n": n, "u": u, "ok": ok}


def _greene_suite(trials: int, max_dim: int, seed: int) -> dict:
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        m = rng.randint(1, max_dim)
        n = rng.randint(1, max_dim)
        mat = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
        lam = grow_grid(mat, "row").corner()
        mu = grow_grid(mat, "col").corner()
        for k in range(1, min(m, n) + 1):
            if sum(lam[i] for i in range(k)) != greene_oracle(mat, k, "up_right"):
                failures += 1
            if sum(mu[i] for i in range(k)) != greene_oracle(mat, k, "down_right"):
                failures += 1
    return {"trials": trials, "max_dim": max_dim, "failures": failures, "ok": failures == 0}


def random_partition(rng: random.Random, max_len: int = 4, max_part: int = 6) -> Partition:
    parts = sorted(
        (rng.randint(0, max_part) for _ in range(rng.randint(0, max_len))), reverse=True
    )
    return Partition(parts)


def random_cover(rng: random.Random, kappa: Partition, slack: int = 4) -> Partition:
    """A random partition interlacing above kappa."""
    length = len(kappa) + rng.randint(0, 1)
    parts = []
    for i in range(length):
        lo = kappa[i]
        hi = kappa[i - 1] if i >= 1 else lo + rng.randint(0, slack)
        parts.append(rng.randint(lo, hi))
    return Partition(parts)


def random_filling(geometry: Geometry, rng: random.Random, max_entry: int = 2,
                   density: float = 0.4) -> Filling:
    weights = {
        sq: (rng.randint(1, max_entry) if rng.random() < density else 0)
        for sq in geometry.squares()
    }
    return Filling(geometry, weights)


def _roundtrip_suite(local_trials: int, map_trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    failures = 0
    for rule in ("row", "col"):
        for _ in range(local_trials):
            kappa = random_partition(rng)
            alpha = random_cover(rng, kappa)
            beta = random_cover(rng, kappa)
            g = rng.randint(0, 6)
            nu = apply_local(rule, alpha, beta, kappa, g)
            size_ok = kappa.size() + nu.size() == alpha.size() + beta.size() + g
            if not size_ok or invert_local(rule, alpha, beta, nu) != (kappa, g):
                failures += 1
    done = 0
    while done < map_trials:
        n = rng.randint(1, 3)
        f = random_filling(Geometry("p2hlr", n), rng)
        t = lpp_time(f)
        if t > 4:
            continue
        u = rng.randint(max(t, 1), 4)
        z = bz_map(f, u, "forward")
        bounds_ok = all(0 <= e <= u for row in z.rows for e in row)
        if not bounds_ok or bz_map(z, u, "inverse") != f:
            failures += 1
        done += 1
    for _ in range(map_trials):
        n = rng.randint(1, 4)
        f = random_filling(Geometry("p2l", n), rng, max_entry=3, density=0.5)
        z = p2l_map(f, "forward")
        sh = z.shape()
        ok = sh.has_even_rows() and sh[0] == 2 * lpp_time(f) and p2l_map(z, "inverse") == f
        if not ok:
            failures += 1
    return {
        "local_trials": local_trials,
        "map_trials": map_trials,
        "failures": failures,
        "ok": failures == 0,
    }


def cmd_verify(args) -> int:
    scopes = (
        ["theorem", "okada", "stembridge", "greene", "roundtrips"]
        if args.scope == "all"
        else [args.scope]
    )
    if args.u is not None and args.u < 0:
        print("error: --u must be non-negative", file=sys.stderr)
        return 2
    if args.scope in ("theorem", "stembridge") and args.u is not None and args.u % 2:
        print(f"error: --scope {args.scope} needs an even --u", file=sys.stderr)
        return 2
    results = []
    show_polys = args.n is not None and args.u is not None

    def run(scope, label, fn, *fargs):
        t0 = time.perf_counter()
        try:
            res = fn(*fargs)
        except EnumerationBudgetError:
            raise
        except ValueError as exc:
            res = {"ok": False, "error": str(exc)}
        res["seconds"] = round(time.perf_counter() - t0, 3)
        res["scope"] = scope
        res["label"] = label
        results.append(res)

    for scope in scopes:
        if scope == "theorem":
            instances = (
                [(args.n, args.u)]
                if show_polys
                else [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)]
            )
            for n, u in instances:
                run(scope, f"n={n} u={u}", _theorem_instance, n, u, args.node_budget)
        elif scope == "okada":
            instances = (
                [(args.n, args.u)]
                if show_polys
                else [(n, u) for n in (1, 2, 3) for u in range(0, 7)]
            )
            for n, u in instances:
                run(scope, f"n={n} u={u}", _okada_instance, n, u)
        elif scope == "stembridge":
            instances = (
                [(args.n, args.u)]
                if show_polys
                else [(n, u) for n in (1, 2, 3) for u in (0, 2, 4, 6)]
            )
            for n, u in instances:
                run(scope, f"n={n} u={u}", _stembridge_instance, n, u)
        elif scope == "greene":
            run(scope, f"trials={args.trials or 200}", _greene_suite,
                args.trials or 200, args.max_dim, args.seed)
        elif scope == "roundtrips":
            local = args.trials or 1000
            maps = max(1, (args.trials or 1000) // 2)
            run(scope, f"local={local} maps={maps}", _roundtrip_suite,
                local, maps, args.seed)

    all_ok = all(r["ok"] for r in results)
    if args.format == "json":
        out = {"results": results, "all_pass": all_ok}
        _emit(json.dumps(out, sort_keys=True), args.output)
    else:
        lines = []
        for r in results:
            status = "PASS" if r["ok"] else "FAIL"
            lines.append(f"[{r['scope']}] {r['label']}: {status} ({r['seconds']}s)")
            if show_polys and "lhs" in r:
                lines.append(f"  lhs = {r['lhs']}")
                lines.append(f"  rhs = {r['rhs']}")
        lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
        _emit("\n".join(lines), args.output)
    return 0 if all_ok else 1


# --- bijection driver ----------------------------------------------------------


def _pattern_to_text(z) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in z.rows) + "\n"


def _pattern_from_text(text: str, half: bool):
    rows = [[int(tok) for tok in line.split()] for line in text.strip().splitlines()]
    return SpGTPattern(rows) if half else GTPattern(rows)


def _partition_to_text(p: Partition) -> str:
    return " ".join(str(x) for x in p.parts) if p else "-"


def cmd_rsk(args) -> int:
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2

    forward = args.direction == "forward"
    try:
        if args.geometry in ("matrix-row", "matrix-col"):
            obj = [
                [int(tok) for tok in line.split()]
                for line in text.strip().splitlines()
            ]
        elif forward:
            obj = Filling.from_text(args.geometry, text)
        else:
            obj = _pattern_from_text(text, half=args.geometry == "p2hlr")
    except ValueError as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return 2
    if args.geometry == "p2hlr" and args.u is None:
        print("error: --u is required for p2hlr", file=sys.stderr)
        return 2

    try:
        if args.geometry in ("matrix-row", "matrix-col"):
            rule = "row" if args.geometry.endswith("row") else "col"
            grid = grow_grid(obj, rule)
            lines = [f"corner: {_partition_to_text(grid.corner())}"]
            lines.append("north: " + " | ".join(_partition_to_text(p) for p in grid.north_chain()))
            lines.append("east: " + " | ".join(_partition_to_text(p) for p in grid.east_chain()))
            _emit("\n".join(lines), args.output)
            return 0
        if args.geometry == "p2hlr":
            image = bz_map(obj, args.u, "forward" if forward else "inverse")
            if args.roundtrip:
                back = bz_map(image, args.u, "inverse" if forward else "forward")
                return 0 if back == obj else 1
        else:
            image = p2l_map(obj, "forward" if forward else "inverse")
            if args.roundtrip:
                back = p2l_map(image, "inverse" if forward else "forward")
                return 0 if back == obj else 1
        out = image.to_text() if isinstance(image, Filling) else _pattern_to_text(image)
        _emit(out.rstrip("\n"), args.output)
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


# --- probability drivers --------------------------------------------------------


def _parse_rational(text: str) -> Fraction:
    return Fraction(text)


def cmd_cdf(args) -> int:
    try:
        y = _parse_rational(args.y)
    except (ValueError, ZeroDivisionError):
        print(f"error: cannot parse --y {args.y!r} as a rational", file=sys.stderr)
        return 2
    if not 0 < y < 1:
        print("error: --y must lie strictly between 0 and 1", file=sys.stderr)
        return 2
    geo = Geometry(args.geometry, args.n)
    rows = []
    for u in range(0, args.u_max + 1):
        rows.append((u, exact_cdf(geo, u, y, node_budget=args.node_budget)))
    if args.format == "json":
        out = {
            "geometry": args.geometry,
            "n": args.n,
            "y": str(y),
            "cdf": [[u, str(p)] for u, p in rows],
        }
        _emit(json.dumps(out, sort_keys=True), args.output)
    elif args.format == "csv":
        lines = ["bound,prob"] + [f"{u},{p}" for u, p in rows]
        _emit("\n".join(lines), args.output)
    else:
        lines = [f"P(L <= {u}) = {p}" for u, p in rows]
        _emit("\n".join(lines), args.output)
    return 0


def cmd_simulate(args) -> int:
    if (args.q is None) == (args.y is None):
        print("error: give exactly one of --q or --y", file=sys.stderr)
        return 2
    y = float(args.y) if args.y is not None else float(args.q) ** 0.5
    if not 0 < y < 1:
        print("error: parameter must lie strictly between 0 and 1", file=sys.stderr)
        return 2

    if args.factorization:
        rep = factorization_report(
            args.n, y, "monte_carlo", n_samples=args.samples, seed=args.seed
        )
        if args.format == "csv":
            lines = ["field,value"] + [f"{k},{v}" for k, v in sorted(rep.items())]
            _emit("\n".join(lines), args.output)
        else:
            _emit(json.dumps(rep, sort_keys=True), args.output)
        return 0

    spec = GeometricSpec(y, Geometry(args.geometry, args.n), args.seed)
    report = sample_lpp(spec, args.samples)
    if args.format == "csv":
        _emit(report.to_csv().rstrip("\n"), args.output)
    elif args.format == "text":
        lines = [
            f"geometry {report.geometry} n={report.n} q={report.q} "
            f"seed={report.seed} samples={report.samples}",
            f"mean {report.mean:.6f} variance {report.variance:.6f}",
            f"normalized mean {report.normalized['mean']:.6f} "
            f"variance {report.normalized['variance']:.6f} "
            f"skewness {report.normalized['skewness']:.6f}",
            f"wall clock {report.wall_clock:.3f}s",
        ]
        _emit("\n".join(lines), args.output)
    else:
        _emit(report.to_json(), args.output)
    return 0


# --- plumbing -------------------------------------------------------------------


def _emit(text: str, output: str | None):
    if output and output != "-":
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lppqs",
        description="Exact identities and simulation for planar last passage percolation.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "json", "csv"],
        default=_env_default("FORMAT", "text"),
        help="output format (env LPPQS_FORMAT)",
    )
    common.add_argument(
        "--output", default=_env_default("OUTPUT", None), help="output file, '-' = stdout"
    )
    common.add_argument(
        "--node-budget",
        type=int,
        default=_env_default("NODE_BUDGET", 2_000_000),
        help="enumeration node budget (env LPPQS_NODE_BUDGET)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=_env_default("THREADS", 1),
        help="worker cap; accepted for interface stability, current suites are single-threaded",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run exact identity and round-trip suites")
    p.add_argument(
        "--scope",
        required=True,
        choices=["theorem", "okada", "stembridge", "greene", "roundtrips", "all"],
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-dim", type=int, default=5)
    p.add_argument("--seed", type=int, default=_env_default("SEED", 0))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rsk", parents=[common], help="apply a growth bijection to a filling file")
    p.add_argument(
        "--geometry",
        required=True,
        choices=["p2hlr", "p2l", "matrix-row", "matrix-col"],
    )
    p.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    p.add_argument("--u", type=int, default=None, help="bound for the p2hlr bijection")
    p.add_argument("--input", required=True, help="filling/pattern file, '-' = stdin")
    p.add_argument("--roundtrip", action="store_true",
                   help="apply forward then inverse and exit 0 iff identical")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("cdf", parents=[common], help="exact distribution table of the passage time")
    p.add_argument("--geometry", required=True, choices=["p2hlr", "p2pr", "p2l"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", required=True, help="rational like 1/2 (all x_i = y)")
    p.add_argument("--u-max", type=int, required=True)
    p.set_defaults(func=cmd_cdf)

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo for the passage time")
    p.add_argument("--geometry", choices=["p2hlr", "p2pr", "p2l"], default="p2hlr")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=float, default=None, help="geometric parameter (y = sqrt(q))")
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=_env_default("SEED", 0))
    p.add_argument("--factorization", action="store_true",
                   help="compare the three empirical laws instead of one run")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (EnumerationBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
