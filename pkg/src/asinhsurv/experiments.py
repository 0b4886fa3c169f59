"""Outlier-robustness study and pdf-comparison curves.

The study draws exponential samples, appends fixed outlier values, fits
the naive exponential, the Lomax and the generalised exponential to the
contaminated data, and measures each scale estimate against the mean of
the clean sample.  Single runs of such a study are noisy, so the headline
statistics are per-cell medians (with quartiles) over many seeded
replications.

Replication (size_index, r) draws from ``make_stream(base_seed,
size_index, r)``, so results are bit-identical for a given config and
seed no matter how the replications are scheduled; aggregation is
order-independent.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .distributions import Family, make_handle
from .errors import DomainError
from .fitting import FitOptions, FitResult, Sample, fit_all
from .rng import make_stream

__all__ = [
    "ExperimentConfig",
    "MethodFit",
    "ReplicationRow",
    "MethodCellStats",
    "CellSummary",
    "ExperimentReport",
    "run_robustness_study",
    "emit_curves",
    "CURVE_COLUMNS",
]


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid and seeds for the robustness study."""

    sample_sizes: tuple[int, ...] = (10, 100, 1000)
    outlier_values: tuple[float, ...] = (20.0, 10.0)
    true_tau: float = 1.0
    replications: int = 200
    base_seed: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sample_sizes", tuple(int(n) for n in self.sample_sizes))
        object.__setattr__(self, "outlier_values", tuple(float(v) for v in self.outlier_values))
        if not self.sample_sizes or min(self.sample_sizes) < 1:
            raise DomainError("sample sizes must be >= 1")
        if self.replications < 1:
            raise DomainError("replications must be >= 1")
        if not self.true_tau > 0.0 or math.isnan(self.true_tau):
            raise DomainError("true_tau must be > 0")


@dataclass(frozen=True)
class MethodFit:
    """One method's fit inside a replication."""

    neg_log_lik: float
    tau_hat: float
    nu_hat: float | None
    converged: bool
    at_nu_bound: bool

    @classmethod
    def from_result(cls, result: FitResult) -> "MethodFit":
        nu_hat = result.estimates.nu if result.family is not Family.EXPONENTIAL else None
        return cls(result.neg_log_lik, result.estimates.tau, nu_hat,
                   result.converged, result.at_nu_bound)


@dataclass(frozen=True)
class ReplicationRow:
    """One (sample size, outlier count, replication) cell entry."""

    n: int
    n_outliers: int
    replication: int
    clean_mean: float
    contaminated_mean: float
    exp: MethodFit
    lomax: MethodFit
    genexp: MethodFit
    error_ignore: float
    error_lomax: float
    error_genexp: float


@dataclass(frozen=True)
class MethodCellStats:
    neg_log_lik_median: float
    tau_hat_median: float
    nu_hat_median: float | None
    converged_rate: float
    at_nu_bound_rate: float


@dataclass(frozen=True)
class CellSummary:
    """Medians and quartiles over the replications of one grid cell."""

    n: int
    n_outliers: int
    replications: int
    error_ignore_median: float
    error_ignore_q1: float
    error_ignore_q3: float
    error_lomax_median: float
    error_lomax_q1: float
    error_lomax_q3: float
    error_genexp_median: float
    error_genexp_q1: float
    error_genexp_q3: float
    exp: MethodCellStats
    lomax: MethodCellStats
    genexp: MethodCellStats


_METHODS = ("exp", "lomax", "genexp")

REPLICATION_COLUMNS = (
    "n", "n_outliers", "replication", "clean_mean", "contaminated_mean",
    "error_ignore", "error_lomax", "error_genexp",
    "exp_neg_log_lik", "exp_tau_hat",
    "lomax_neg_log_lik", "lomax_tau_hat", "lomax_nu_hat", "lomax_converged", "lomax_at_nu_bound",
    "genexp_neg_log_lik", "genexp_tau_hat", "genexp_nu_hat", "genexp_converged",
    "genexp_at_nu_bound",
)

SUMMARY_COLUMNS = (
    "n", "n_outliers", "replications",
    "error_ignore_median", "error_ignore_q1", "error_ignore_q3",
    "error_lomax_median", "error_lomax_q1", "error_lomax_q3",
    "error_genexp_median", "error_genexp_q1", "error_genexp_q3",
    "exp_neg_log_lik_median", "exp_tau_hat_median",
    "lomax_neg_log_lik_median", "lomax_tau_hat_median", "lomax_nu_hat_median",
    "lomax_converged_rate", "lomax_at_nu_bound_rate",
    "genexp_neg_log_lik_median", "genexp_tau_hat_median", "genexp_nu_hat_median",
    "genexp_converged_rate", "genexp_at_nu_bound_rate",
)


@dataclass(frozen=True)
class ExperimentReport:
    """Full study output: config echo, per-cell summaries, raw replications."""

    config: ExperimentConfig
    cells: tuple[CellSummary, ...]
    replications: tuple[ReplicationRow, ...]

    def cell(self, n: int, n_outliers: int) -> CellSummary:
        for c in self.cells:
            if c.n == n and c.n_outliers == n_outliers:
                return c
        raise KeyError(f"no cell for n={n}, n_outliers={n_outliers}")

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "sample_sizes": list(self.config.sample_sizes),
                "outlier_values": list(self.config.outlier_values),
                "true_tau": self.config.true_tau,
                "replications": self.config.replications,
                "base_seed": self.config.base_seed,
            },
            "cells": [_plain(asdict(c)) for c in self.cells],
            "replications": [_plain(asdict(r)) for r in self.replications],
        }

    def replication_rows(self) -> list[tuple]:
        rows = []
        for r in self.replications:
            rows.append((
                r.n, r.n_outliers, r.replication, r.clean_mean, r.contaminated_mean,
                r.error_ignore, r.error_lomax, r.error_genexp,
                r.exp.neg_log_lik, r.exp.tau_hat,
                r.lomax.neg_log_lik, r.lomax.tau_hat, r.lomax.nu_hat,
                int(r.lomax.converged), int(r.lomax.at_nu_bound),
                r.genexp.neg_log_lik, r.genexp.tau_hat, r.genexp.nu_hat,
                int(r.genexp.converged), int(r.genexp.at_nu_bound),
            ))
        return rows

    def summary_rows(self) -> list[tuple]:
        rows = []
        for c in self.cells:
            rows.append((
                c.n, c.n_outliers, c.replications,
                c.error_ignore_median, c.error_ignore_q1, c.error_ignore_q3,
                c.error_lomax_median, c.error_lomax_q1, c.error_lomax_q3,
                c.error_genexp_median, c.error_genexp_q1, c.error_genexp_q3,
                c.exp.neg_log_lik_median, c.exp.tau_hat_median,
                c.lomax.neg_log_lik_median, c.lomax.tau_hat_median, c.lomax.nu_hat_median,
                c.lomax.converged_rate, c.lomax.at_nu_bound_rate,
                c.genexp.neg_log_lik_median, c.genexp.tau_hat_median, c.genexp.nu_hat_median,
                c.genexp.converged_rate, c.genexp.at_nu_bound_rate,
            ))
        return rows


def _plain(obj):
    """Recursively convert numpy scalars for JSON emission."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _cell_summary(n: int, k: int, rows: list[ReplicationRow]) -> CellSummary:
    def med(values):
        return float(np.median(values))

    def q(values, which):
        return float(np.quantile(values, which))

    errors = {name: np.array([getattr(r, f"error_{name}") for r in rows])
              for name in ("ignore", "lomax", "genexp")}
    stats = {}
    for method in _METHODS:
        fits = [getattr(r, method) for r in rows]
        nu_values = [f.nu_hat for f in fits if f.nu_hat is not None]
        stats[method] = MethodCellStats(
            neg_log_lik_median=med([f.neg_log_lik for f in fits]),
            tau_hat_median=med([f.tau_hat for f in fits]),
            nu_hat_median=med(nu_values) if nu_values else None,
            converged_rate=float(np.mean([f.converged for f in fits])),
            at_nu_bound_rate=float(np.mean([f.at_nu_bound for f in fits])),
        )
    return CellSummary(
        n=n, n_outliers=k, replications=len(rows),
        error_ignore_median=med(errors["ignore"]),
        error_ignore_q1=q(errors["ignore"], 0.25),
        error_ignore_q3=q(errors["ignore"], 0.75),
        error_lomax_median=med(errors["lomax"]),
        error_lomax_q1=q(errors["lomax"], 0.25),
        error_lomax_q3=q(errors["lomax"], 0.75),
        error_genexp_median=med(errors["genexp"]),
        error_genexp_q1=q(errors["genexp"], 0.25),
        error_genexp_q3=q(errors["genexp"], 0.75),
        exp=stats["exp"], lomax=stats["lomax"], genexp=stats["genexp"],
    )


def run_robustness_study(config: ExperimentConfig,
                         fit_options: FitOptions | None = None) -> ExperimentReport:
    """Run the full contamination grid and aggregate per-cell medians.

    Each replication reuses one clean sample across the outlier counts
    (outliers are appended as exact constants, in order), mirroring how the
    contaminated datasets relate to each other.  Fit failures surface as
    unconverged rows; they never abort the study.
    """
    opts = fit_options or FitOptions()
    outlier_prefix = [np.array(config.outlier_values[:k])
                      for k in range(len(config.outlier_values) + 1)]
    rows: list[ReplicationRow] = []
    for size_index, n in enumerate(config.sample_sizes):
        for rep in range(config.replications):
            rng = make_stream(config.base_seed, size_index, rep)
            clean = config.true_tau * rng.standard_exponential(n)
            clean_mean = float(np.mean(clean))
            for k, outliers in enumerate(outlier_prefix):
                data = np.concatenate([clean, outliers]) if k else clean
                results = {r.family: r for r in fit_all(Sample(data), opts)}
                exp_fit = MethodFit.from_result(results[Family.EXPONENTIAL])
                lomax_fit = MethodFit.from_result(results[Family.LOMAX])
                genexp_fit = MethodFit.from_result(results[Family.GEN_EXP])
                contaminated_mean = float(np.mean(data))
                rows.append(ReplicationRow(
                    n=n, n_outliers=k, replication=rep,
                    clean_mean=clean_mean, contaminated_mean=contaminated_mean,
                    exp=exp_fit, lomax=lomax_fit, genexp=genexp_fit,
                    error_ignore=abs(exp_fit.tau_hat - clean_mean),
                    error_lomax=abs(lomax_fit.tau_hat - clean_mean),
                    error_genexp=abs(genexp_fit.tau_hat - clean_mean),
                ))

    cells = []
    for n in config.sample_sizes:
        for k in range(len(config.outlier_values) + 1):
            cell_rows = [r for r in rows if r.n == n and r.n_outliers == k]
            cells.append(_cell_summary(n, k, cell_rows))
    return ExperimentReport(config=config, cells=tuple(cells), replications=tuple(rows))


CURVE_COLUMNS = ("x", "exp_pdf", "genexp_pdf", "lomax_pdf")

_PDF_FLOOR = 1e-320


def emit_curves(nu: float, x_max: float, points: int,
                log_scale: bool = False) -> list[tuple[float, float, float, float]]:
    """Tabulate the exponential, generalised-exponential and Lomax pdfs.

    Returns ``points`` rows (x, exp_pdf, genexp_pdf, lomax_pdf) on a
    uniform grid over [0, x_max].  With ``log_scale`` the pdf columns hold
    log10 values, clamped at the underflow floor.
    """
    if not nu > 0.0 or math.isnan(nu):
        raise DomainError("nu must be > 0")
    if int(points) < 2:
        raise DomainError("need at least 2 points")
    if not x_max > 0.0 or math.isnan(x_max):
        raise DomainError("x_max must be > 0")

    x = np.linspace(0.0, float(x_max), int(points))
    exp_pdf = np.exp(-x)
    genexp_pdf = make_handle(Family.GEN_EXP, nu=nu).pdf(x)
    lomax_pdf = make_handle(Family.LOMAX, nu=nu).pdf(x)
    columns = [exp_pdf, genexp_pdf, lomax_pdf]
    if log_scale:
        columns = [np.log10(np.maximum(col, _PDF_FLOOR)) for col in columns]
    return [tuple(float(v) for v in row) for row in zip(x, *columns)]
