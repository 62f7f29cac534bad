"""Geometric-weight randomization: exact CDFs, sampling, and KPZ scaling.

Weights are independent geometric random variables, Prob(X = k) = (1-p) p^k,
with p the product of the square's row and column parameters at x_i = y:
p = y^2 off the reflecting diagonal and p = y on it (q := y^2).

Exact CDFs multiply the bounded generating series, specialized at y, by the
total normalization prod_squares (1 - p); everything stays rational.
Sampling is vectorized and fully deterministic: the stream of square s of a
geometry is Philox keyed by (seed, geometry_code * 2^48 + s), consumed in
sample order, and weights come from the closed-form inverse CDF
floor(log U / log p) with a guard at U = 0.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .lpp import KINDS, Filling, Geometry, generating_series

_GEOMETRY_CODE = {kind: idx + 1 for idx, kind in enumerate(KINDS)}
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GeometricSpec:
    """Geometric-weight model: y in (0, 1) is the common value of every x_i."""

    y: Fraction | float
    geometry: Geometry
    seed: int

    def __post_init__(self):
        if not 0 < self.y < 1:
            raise ValueError("y must lie strictly between 0 and 1")

    @property
    def q(self) -> Fraction | float:
        return self.y * self.y


@dataclass(frozen=True)
class ScalingConstants:
    """Law-of-large-numbers speed c1 and cube-root fluctuation scale c2."""

    c1: float
    c2: float


def scaling_constants(q: float) -> ScalingConstants:
    """c1 = 2 sqrt(q) / (1 - sqrt(q)), c2 = q^(1/6) (1 + sqrt(q))^(1/3) / (1 - sqrt(q))."""
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    r = math.sqrt(q)
    return ScalingConstants(
        c1=2 * r / (1 - r),
        c2=q ** (1 / 6) * (1 + r) ** (1 / 3) / (1 - r),
    )


def normalization_constant(geometry: Geometry, y: Fraction) -> Fraction:
    """Product of (1 - p) over all squares; p = y or y^2 per square."""
    total = Fraction(1)
    for (i, j) in geometry.squares():
        power = sum(geometry.variable_exponent(i, j))
        total *= 1 - Fraction(y) ** power
    return total


def exact_cdf(
    geometry: Geometry, bound: int, y: Fraction, node_budget: int = 2_000_000
) -> Fraction:
    """Prob(L <= bound) as an exact rational."""
    y = Fraction(y)
    if not 0 < y < 1:
        raise ValueError("y must lie strictly between 0 and 1")
    series = generating_series(geometry, bound, node_budget=node_budget)
    value = series.specialize([y] * geometry.n)
    return normalization_constant(geometry, y) * value


# --- sampling -----------------------------------------------------------------


def _square_stream(seed: int, kind: str, square_index: int) -> np.random.Generator:
    key = np.array(
        [seed & _MASK64, ((_GEOMETRY_CODE[kind] << 48) | square_index) & _MASK64],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))

_TINY = np.finfo(np.float64).tiny


def _geometric_draws(gen: np.random.Generator, p: float, count: int) -> np.ndarray:
    u = np.maximum(gen.random(count), _TINY)
    return np.floor(np.log(u) / math.log(p)).astype(np.int64)


def sample_passage_times(spec: GeometricSpec, n_samples: int) -> np.ndarray:
    """Vector of lpp times for i.i.d. geometric fillings of the geometry."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    geo = spec.geometry
    y = float(spec.y)
    terminals = set(geo.terminal_squares())
    best = None
    prev_row: dict[int, np.ndarray] = {}
    cur_row: dict[int, np.ndarray] = {}
    cur_j = None
    for s, (i, j) in enumerate(geo.squares()):
        if j != cur_j:
            prev_row, cur_row, cur_j = cur_row, {}, j
        p = y ** sum(geo.variable_exponent(i, j))
        w = _geometric_draws(_square_stream(spec.seed, geo.kind, s), p, n_samples)
        south = prev_row.get(i)
        west = cur_row.get(i - 1)
        if south is None and west is None:
            cur = w
        elif south is None:
            cur = west + w
        elif west is None:
            cur = south + w
        else:
            cur = np.maximum(south, west) + w
        cur_row[i] = cur
        if (i, j) in terminals:
            best = cur.copy() if best is None else np.maximum(best, cur)
    assert best is not None
    return best


def sample_filling(spec: GeometricSpec, sample_index: int, n_samples: int) -> Filling:
    """The sample_index-th filling of the stream (for demos and spot checks)."""
    geo = spec.geometry
    y = float(spec.y)
    weights = {}
    for s, (i, j) in enumerate(geo.squares()):
        p = y ** sum(geo.variable_exponent(i, j))
        draws = _geometric_draws(_square_stream(spec.seed, geo.kind, s), p, n_samples)
        weights[(i, j)] = int(draws[sample_index])
    return Filling(geo, weights)


def _moments(data: np.ndarray) -> tuple[float, float, float]:
    mean = float(np.mean(data))
    centered = data - mean
    var = float(np.mean(centered**2))
    if var == 0:
        return mean, 0.0, 0.0
    skew = float(np.mean(centered**3)) / var**1.5
    return mean, var, skew


@dataclass
class SimulationReport:
    """Empirical summary of one seeded run; serializes without the timing."""

    geometry: str
    n: int
    q: float
    seed: int
    samples: int
    cdf: list[tuple[int, float]]
    mean: float
    variance: float
    normalized: dict
    wall_clock: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "geometry": self.geometry,
            "n": self.n,
            "q": self.q,
            "seed": self.seed,
            "samples": self.samples,
            "cdf": [[int(v), p] for v, p in self.cdf],
            "mean": self.mean,
            "variance": self.variance,
            "normalized": self.normalized,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        lines = ["value,prob"]
        lines.extend(f"{v},{p!r}" for v, p in self.cdf)
        return "\n".join(lines) + "\n"

    def cdf_at(self, value: int) -> float:
        prob = 0.0
        for v, p in self.cdf:
            if v <= value:
                prob = p
            else:
                break
        return prob


def sample_lpp(spec: GeometricSpec, n_samples: int) -> SimulationReport:
    """Seeded Monte Carlo run; identical spec and n_samples reproduce bytes."""
    t0 = time.perf_counter()
    times = sample_passage_times(spec, n_samples)
    q = float(spec.q)
    consts = scaling_constants(q)
    n = spec.geometry.n
    stat = (times - consts.c1 * n) / (consts.c2 * n ** (1 / 3))
    counts = np.bincount(times)
    cum = np.cumsum(counts) / n_samples
    cdf = [(int(v), float(cum[v])) for v in range(len(counts))]
    mean, var, _ = _moments(times.astype(np.float64))
    nmean, nvar, nskew = _moments(stat)
    hist, edges = np.histogram(stat, bins=40)
    report = SimulationReport(
        geometry=spec.geometry.kind,
        n=n,
        q=q,
        seed=spec.seed,
        samples=n_samples,
        cdf=cdf,
        mean=mean,
        variance=var,
        normalized={
            "c1": consts.c1,
            "c2": consts.c2,
            "mean": nmean,
            "variance": nvar,
            "skewness": nskew,
            "histogram": {
                "edges": [float(e) for e in edges],
                "counts": [int(c) for c in hist],
            },
        },
    )
    report.wall_clock = time.perf_counter() - t0
    return report


# --- the product structure of the quarter-square law --------------------------


def factorization_report(
    n: int,
    y,
    mode: str,
    n_samples: int = 0,
    seed: int = 0,
    u_values: Sequence[int] | None = None,
) -> dict:
    """Check Prob(L_hlr <= u) = Prob(L_pr <= u) * Prob(L_l <= u/2).

    exact mode: rational equality at each even u (odd u is rejected: u/2 is
    not integral).  monte_carlo mode: three independent seeded runs and the
    sup distance between the empirical left side and the product of the
    right sides over even u.
    """
    if mode == "exact":
        ys = Fraction(y)
        if u_values is None:
            u_values = range(0, 9, 2)
        checks = []
        all_equal = True
        for u in u_values:
            if u % 2:
                raise ValueError(f"exact factorization is stated for even u, got {u}")
            lhs = exact_cdf(Geometry("p2hlr", n), u, ys)
            rhs = exact_cdf(Geometry("p2pr", n), u, ys) * exact_cdf(
                Geometry("p2l", n), u // 2, ys
            )
            equal = lhs == rhs
            all_equal = all_equal and equal
            checks.append(
                {"u": u, "lhs": str(lhs), "rhs": str(rhs), "equal": equal}
            )
        return {
            "mode": "exact",
            "n": n,
            "y": str(ys),
            "checks": checks,
            "all_equal": all_equal,
        }

    if mode == "monte_carlo":
        if n_samples < 1:
            raise ValueError("monte_carlo mode needs n_samples >= 1")
        reports = {
            kind: sample_lpp(GeometricSpec(y, Geometry(kind, n), seed), n_samples)
            for kind in KINDS
        }
        max_u = max(r.cdf[-1][0] for r in reports.values())
        sup = 0.0
        argmax = 0
        for u in range(0, max_u + 2, 2):
            lhs = reports["p2hlr"].cdf_at(u)
            rhs = reports["p2pr"].cdf_at(u) * reports["p2l"].cdf_at(u // 2)
            if abs(lhs - rhs) > sup:
                sup = abs(lhs - rhs)
                argmax = u
        return {
            "mode": "monte_carlo",
            "n": n,
            "q": float(y) ** 2,
            "samples": n_samples,
            "seed": seed,
            "sup_distance": sup,
            "sup_at": argmax,
        }

    raise ValueError(f"unknown mode {mode!r}")
