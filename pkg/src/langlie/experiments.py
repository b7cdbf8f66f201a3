"""Scripted Monte Carlo experiments for the verification harness.

Each experiment is a pure function of (config, master seed): replicate r
draws from the substream seeded by [master_seed, r], aggregation folds in
replicate order, and every emitted byte is reproducible.  Statistical
verdicts carry Monte Carlo error bands; the exact checks (balance-index
new-value equivalence, coupling domination, the jump implication) admit
zero exceptions.

"Infinitely often" and "bounded" are not observable at desk scale; the
experiments use finite-N surrogates (window recurrence fractions,
threshold-crossing comparisons of running maxima) and label them as such
in their reports.  Regression floors were calibrated once by pilot runs
at the default seed and are frozen below.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import asdict, dataclass, field
import numpy as np

from . import kernels
from .errors import NonConvergenceError, SeparationError, ValidationError
from .estimation import fit_mle_xy
from .models import SensitivityModel, quantile
from .records import format_float, paths_table
from .walks import (
    ReflectedWalkParams,
    _check_domination,
    check_stochastic_dominance,
    endpoint_p_bound,
)

DEFAULT_SEED = 1962

# Frozen regression floors (pilot-calibrated at DEFAULT_SEED; see the
# per-experiment reports for the observed values, which sit far above).
TAU_WINDOW_FLOOR = 0.05
FINAL_QUARTER_TAU_FLOOR = 0.05
LATE_DEVIATION_FLOOR = 0.05

# Tolerances fixed by the acceptance contract.
MEDIAN_TOLERANCE = 0.05
IQR_RETENTION_FLOOR = 0.5
MLE_BIAS_TOLERANCE = 0.02
DKW_CONFIDENCE = 0.99
LEMMA3_RATIO_WINDOW = (8.0, 12.0)
LEMMA3_TV_TOLERANCE = 0.02


def replicate_rng(master_seed: int, r: int) -> np.random.Generator:
    """Independent substream for replicate r of a master-seeded run."""
    return np.random.default_rng([master_seed, r])


def new_value_flags(s: np.ndarray) -> np.ndarray:
    """True where the cumsum attains a value never seen before.

    Uses the running extrema: a unit-step walk revisits every level
    between its minimum and maximum, so a value is new exactly when it
    pushes past one of them.  This is an independent route to the same
    predicate the balance index encodes.
    """
    s = np.asarray(s)
    out = np.empty(s.shape[0], dtype=bool)
    if s.shape[0] == 0:
        return out
    out[0] = True
    if s.shape[0] > 1:
        hi = np.maximum.accumulate(s)[:-1]
        lo = np.minimum.accumulate(s)[:-1]
        out[1:] = (s[1:] > hi) | (s[1:] < lo)
    return out


@dataclass(frozen=True)
class Check:
    """One verdict: a statistic compared against a frozen bound."""

    name: str
    passed: bool
    value: float
    bound: float
    relation: str
    mc_se: float | None = None
    detail: str = ""


@dataclass
class ExperimentReport:
    name: str
    config: dict
    config_hash: str
    checks: list[Check] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    tables: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary_json(self) -> str:
        doc = {
            "experiment": self.name,
            "config": self.config,
            "config_hash": self.config_hash,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
            "stats": self.stats,
        }
        return json.dumps(doc, indent=2) + "\n"

    def write(self, out_dir: str) -> list[str]:
        """Write tables, summary, and manifest; returns the file list."""
        os.makedirs(out_dir, exist_ok=True)
        written: dict[str, str] = {}
        for fname, content in sorted(self.tables.items()):
            path = os.path.join(out_dir, fname)
            with open(path, "w") as f:
                f.write(content)
            written[fname] = hashlib.sha256(content.encode()).hexdigest()
        summary = self.summary_json()
        with open(os.path.join(out_dir, f"{self.name}_summary.json"), "w") as f:
            f.write(summary)
        written[f"{self.name}_summary.json"] = hashlib.sha256(
            summary.encode()).hexdigest()
        manifest = json.dumps({
            "experiment": self.name,
            "config_hash": self.config_hash,
            "files": [{"name": k, "sha256": v} for k, v in sorted(written.items())],
        }, indent=2) + "\n"
        with open(os.path.join(out_dir, f"{self.name}_manifest.json"), "w") as f:
            f.write(manifest)
        return sorted(written) + [f"{self.name}_manifest.json"]


def _config_dict(cfg) -> dict:
    return asdict(cfg)


def _config_hash(cfg) -> str:
    return hashlib.sha256(
        json.dumps(asdict(cfg), sort_keys=True).encode()).hexdigest()[:16]


def _frac_se(frac: float, n: int) -> float:
    return math.sqrt(max(frac * (1.0 - frac), 1e-12) / n)


@dataclass(frozen=True)
class BaseConfig:
    family: str = "probit"
    alpha: float = 3.333
    beta: float = 9.999
    a: float = -1.5
    b: float = 1.5
    master_seed: int = DEFAULT_SEED

    def model(self) -> SensitivityModel:
        return SensitivityModel(self.family, self.alpha, self.beta)

    def validate(self, q: float = 0.5) -> None:
        xi = quantile(self.model(), q)
        if not self.a < xi < self.b:
            raise ValidationError(
                f"the level-{q} quantile {xi} must lie inside ({self.a}, {self.b})")


# ---------------------------------------------------------------------------
# Sample paths with balance-index markers (the figure data)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FigurePathsConfig(BaseConfig):
    path_lengths: tuple[int, ...] = (50, 1000)
    replicates: int = 100

    def validate(self, q: float = 0.5) -> None:
        super().validate(q)
        if self.replicates < 1 or min(self.path_lengths) < 2:
            raise ValidationError("need replicates >= 1 and path lengths >= 2")


def experiment_figure_paths(cfg: FigurePathsConfig = FigurePathsConfig()) -> ExperimentReport:
    """Emit (n, X_n, S_n, tau_n, is_new) tables and check their invariants.

    Checks: the balance index is zero exactly on new cumsum values (zero
    exceptions), the tail medians of X_n sit on the true median, and
    zero-balance events keep occurring late in long paths.
    """
    cfg.validate()
    model = cfg.model()
    xi = quantile(model, 0.5)
    fam = kernels.family_code(cfg.family)
    report = ExperimentReport("figure_paths", _config_dict(cfg), _config_hash(cfg))

    exceptions = 0
    for N in cfg.path_lengths:
        rows = []
        tail_medians = np.empty(cfg.replicates)
        tail_tau_hits = 0
        for r in range(cfg.replicates):
            u = replicate_rng(cfg.master_seed, r).random(N)
            x, y, s, tau, _ = kernels.langlie_path(
                fam, cfg.alpha, cfg.beta, cfg.a, cfg.b, u)
            is_new = new_value_flags(s)
            exceptions += int(np.count_nonzero((tau == 0) != is_new))
            tail_medians[r] = np.median(x[N // 2:])
            tail_tau_hits += int(np.any(tau[3 * N // 4:] == 0))
            for n in range(N):
                rows.append((r, n + 1, float(x[n]), int(y[n]), int(s[n]),
                             int(tau[n]), int(is_new[n])))
        report.tables[f"figure_paths_n{N}.csv"] = paths_table(
            rows, ("replicate", "n", "x", "y", "s", "tau", "is_new"))
        mean_median = float(np.mean(tail_medians))
        report.stats[f"tail_median_mean_n{N}"] = mean_median
        report.stats[f"tail_median_se_n{N}"] = float(
            np.std(tail_medians) / math.sqrt(cfg.replicates))
        report.checks.append(Check(
            name=f"tail_median_within_tolerance_n{N}",
            passed=abs(mean_median - xi) <= MEDIAN_TOLERANCE,
            value=abs(mean_median - xi),
            bound=MEDIAN_TOLERANCE,
            relation="<=",
            mc_se=report.stats[f"tail_median_se_n{N}"],
            detail=f"|mean tail median - {format_float(xi)}|",
        ))
        if N >= 1000:
            frac = tail_tau_hits / cfg.replicates
            report.stats[f"final_quarter_tau_fraction_n{N}"] = frac
            report.checks.append(Check(
                name=f"final_quarter_tau_fraction_n{N}",
                passed=frac >= FINAL_QUARTER_TAU_FLOOR,
                value=frac,
                bound=FINAL_QUARTER_TAU_FLOOR,
                relation=">=",
                mc_se=_frac_se(frac, cfg.replicates),
                detail="fraction of paths with a zero balance index in the final quarter",
            ))
    report.checks.insert(0, Check(
        name="balance_index_zero_iff_new_value",
        passed=exceptions == 0,
        value=float(exceptions),
        bound=0.0,
        relation="==",
        detail="exact equivalence, all paths and indices",
    ))
    return report


# ---------------------------------------------------------------------------
# Recurrence of zero-balance events in late windows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TauRecurrenceConfig(BaseConfig):
    window_lengths: tuple[int, ...] = (200, 400, 800, 1600)
    replicates: int = 10_000

    def validate(self, q: float = 0.5) -> None:
        super().validate(q)
        if self.replicates < 1 or min(self.window_lengths) < 2:
            raise ValidationError("need replicates >= 1 and windows >= 2")


def experiment_tau_recurrence(cfg: TauRecurrenceConfig = TauRecurrenceConfig()) -> ExperimentReport:
    """Fraction of replicates with a zero balance index inside [N/2, N].

    A positive, non-vanishing fraction across doubling N supports the
    claim that zero-balance events never die out.  Since the balance
    index after n trials depends only on the first n outcomes, one long
    path per replicate serves every window.
    """
    cfg.validate()
    fam = kernels.family_code(cfg.family)
    report = ExperimentReport("tau_recurrence", _config_dict(cfg), _config_hash(cfg))
    n_max = max(cfg.window_lengths)
    hits = {N: 0 for N in cfg.window_lengths}
    for r in range(cfg.replicates):
        u = replicate_rng(cfg.master_seed, r).random(n_max)
        _, _, _, tau, _ = kernels.langlie_path(
            fam, cfg.alpha, cfg.beta, cfg.a, cfg.b, u)
        zero = tau == 0
        for N in cfg.window_lengths:
            if np.any(zero[N // 2 - 1: N]):  # trials N/2..N, 1-based
                hits[N] += 1
    rows = []
    for N in cfg.window_lengths:
        frac = hits[N] / cfg.replicates
        se = _frac_se(frac, cfg.replicates)
        report.stats[f"window_fraction_n{N}"] = frac
        report.stats[f"window_fraction_se_n{N}"] = se
        rows.append((N, frac, se))
        report.checks.append(Check(
            name=f"window_fraction_n{N}",
            passed=frac >= TAU_WINDOW_FLOOR,
            value=frac,
            bound=TAU_WINDOW_FLOOR,
            relation=">=",
            mc_se=se,
            detail=f"fraction of replicates with tau=0 somewhere in [{N // 2}, {N}]",
        ))
    report.tables["tau_recurrence.csv"] = paths_table(
        rows, ("window_end", "fraction_with_zero_tau", "mc_se"))
    return report


# ---------------------------------------------------------------------------
# The jump implication at zero-balance indices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JumpBoundConfig(BaseConfig):
    trials: int = 1600
    replicates: int = 10_000
    q: float = 0.5

    def validate(self, q: float | None = None) -> None:
        super().validate(self.q)
        if self.trials < 2 or self.replicates < 1:
            raise ValidationError("need trials >= 2 and replicates >= 1")


def experiment_jump_lower_bound(cfg: JumpBoundConfig = JumpBoundConfig()) -> ExperimentReport:
    """Whenever tau_n = 0 while X_n is within eps of the target quantile,
    the endpoint averaging must throw X_{n+1} further than eps away.

    With eps = min{(xi-a)/2, (b-xi)/2} / 2 this is an algebraic
    consequence of the design rule, so the check admits zero exceptions;
    the experiment also reports how often such jumps still happen in the
    late half of each path.
    """
    cfg.validate()
    model = cfg.model()
    xi = quantile(model, cfg.q)
    eps = min((xi - cfg.a) / 2.0, (cfg.b - xi) / 2.0) / 2.0
    fam = kernels.family_code(cfg.family)
    report = ExperimentReport("jump_lower_bound", _config_dict(cfg), _config_hash(cfg))

    exceptions = 0
    late_hits = 0
    late_counts = np.empty(cfg.replicates, dtype=np.int64)
    for r in range(cfg.replicates):
        u = replicate_rng(cfg.master_seed, r).random(cfg.trials)
        x, _, _, tau, x_next = kernels.langlie_path(
            fam, cfg.alpha, cfg.beta, cfg.a, cfg.b, u)
        nxt = np.empty(cfg.trials)
        nxt[:-1] = x[1:]
        nxt[-1] = x_next
        near = np.abs(x - xi) < eps
        thrown = np.abs(nxt - xi) > eps
        exceptions += int(np.count_nonzero((tau == 0) & near & ~thrown))
        late = thrown[cfg.trials // 2 - 1:]
        late_counts[r] = int(np.count_nonzero(late))
        late_hits += int(late_counts[r] > 0)
    late_frac = late_hits / cfg.replicates
    report.stats["epsilon"] = eps
    report.stats["quantile"] = xi
    report.stats["late_deviation_fraction"] = late_frac
    report.stats["late_deviation_mean_count"] = float(np.mean(late_counts))
    report.tables["jump_lower_bound.csv"] = paths_table(
        [(r, int(c)) for r, c in enumerate(late_counts)],
        ("replicate", "late_large_deviations"))
    report.checks.append(Check(
        name="jump_implication_exceptions",
        passed=exceptions == 0,
        value=float(exceptions),
        bound=0.0,
        relation="==",
        detail="(tau=0 and |X_n - xi| < eps) implies |X_{n+1} - xi| > eps",
    ))
    report.checks.append(Check(
        name="late_deviation_fraction",
        passed=late_frac >= LATE_DEVIATION_FLOOR,
        value=late_frac,
        bound=LATE_DEVIATION_FLOOR,
        relation=">=",
        mc_se=_frac_se(late_frac, cfg.replicates),
        detail=f"fraction of replicates with a late jump beyond eps={format_float(eps)}",
    ))
    return report


# ---------------------------------------------------------------------------
# Coupling, stochastic dominance, and boundedness ordering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CouplingConfig(BaseConfig):
    # Default model/bracket chosen so the certified lower bound p ~ 0.157
    # is far from degenerate (with very steep models p underflows toward 0
    # and the comparison walk collapses to 1,0,1,0,...).
    alpha: float = 0.0
    beta: float = 1.0
    a: float = -1.0
    b: float = 1.0
    trials: int = 10_000
    replicates: int = 10_000
    checkpoints: tuple[int, ...] = (1, 100, 1000, 10_000)
    max_levels: tuple[int, ...] = tuple(range(2, 11))
    confidence: float = DKW_CONFIDENCE
    p_override: float | None = None

    def validate(self, q: float = 0.5) -> None:
        super().validate(q)
        if max(self.checkpoints) > self.trials:
            raise ValidationError("checkpoints must not exceed the path length")
        if self.replicates < 2:
            raise ValidationError("need at least 2 replicates")


def experiment_coupling_and_dominance(cfg: CouplingConfig = CouplingConfig()) -> ExperimentReport:
    """Pathwise domination, running-max dominance, and boundedness ordering.

    Builds coupled (|cumsum|, reflected walk) pairs with the certified
    lower bound p (or an override, to demonstrate that breaches are
    caught -- a CouplingViolationError propagates).  Checks, in order:
    domination B_n <= A_n on every path; empirical-CDF consistency of
    Q_n <= P_n at each checkpoint; and the boundedness surrogate
    P(max A <= m) <= P(max B <= m) + band for each threshold m.
    """
    cfg.validate()
    model = cfg.model()
    p = cfg.p_override if cfg.p_override is not None else endpoint_p_bound(
        model, cfg.a, cfg.b)
    ReflectedWalkParams(p)
    fam = kernels.family_code(cfg.family)
    report = ExperimentReport("coupling_and_dominance", _config_dict(cfg),
                              _config_hash(cfg))
    report.stats["p"] = p

    cps = sorted(cfg.checkpoints)
    p_samples = {n: np.empty(cfg.replicates, dtype=np.int64) for n in cps}
    q_samples = {n: np.empty(cfg.replicates, dtype=np.int64) for n in cps}
    max_a = np.empty(cfg.replicates, dtype=np.int64)
    max_b = np.empty(cfg.replicates, dtype=np.int64)
    for r in range(cfg.replicates):
        u = replicate_rng(cfg.master_seed, r).random(cfg.trials)
        a_path, b_path, _, _ = kernels.coupled_langlie_pair(
            fam, cfg.alpha, cfg.beta, cfg.a, cfg.b, p, u)
        _check_domination(u, a_path, b_path)
        acc_a = np.maximum.accumulate(a_path)
        acc_b = np.maximum.accumulate(b_path)
        for n in cps:
            p_samples[n][r] = acc_a[n - 1]
            q_samples[n][r] = acc_b[n - 1]
        max_a[r] = acc_a[-1]
        max_b[r] = acc_b[-1]

    report.checks.append(Check(
        name="pathwise_domination",
        passed=True,  # a violation would have raised above
        value=0.0, bound=0.0, relation="==",
        detail=f"walk <= |cumsum| at every index, {cfg.replicates} paths of length {cfg.trials}",
    ))
    rows = []
    for n in cps:
        verdict = check_stochastic_dominance(
            p_samples[n], q_samples[n], cfg.confidence)
        rows.append((n, float(np.mean(p_samples[n])), float(np.mean(q_samples[n])),
                     verdict.max_gap, verdict.threshold, int(verdict.consistent)))
        report.checks.append(Check(
            name=f"dominance_consistent_n{n}",
            passed=verdict.consistent,
            value=verdict.max_gap,
            bound=verdict.threshold,
            relation="<=",
            detail=f"max ECDF gap at checkpoint {n} (confidence {cfg.confidence})",
        ))
    report.tables["dominance_checkpoints.csv"] = paths_table(
        rows, ("n", "mean_max_cumsum", "mean_max_walk", "max_ecdf_gap",
               "dkw_band", "consistent"))

    eps = math.log(1.0 / (1.0 - cfg.confidence)) / 2.0
    band = 2.0 * math.sqrt(eps / cfg.replicates)
    rows = []
    bounded_ok = True
    for m in cfg.max_levels:
        fa = float(np.mean(max_a <= m))
        fb = float(np.mean(max_b <= m))
        ok = fa <= fb + band
        bounded_ok = bounded_ok and ok
        rows.append((m, fa, fb, int(ok)))
    report.tables["boundedness_proxy.csv"] = paths_table(
        rows, ("m", "frac_max_cumsum_le_m", "frac_max_walk_le_m", "ordered"))
    report.checks.append(Check(
        name="boundedness_ordering",
        passed=bounded_ok,
        value=float(bounded_ok),
        bound=1.0,
        relation="==",
        mc_se=band,
        detail="P(max |cumsum| <= m) <= P(max walk <= m) + band for every m",
    ))
    return report


# ---------------------------------------------------------------------------
# Terminal-input dispersion: Langlie vs Robbins-Monro vs MLE
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EstimatorComparisonConfig(BaseConfig):
    trial_counts: tuple[int, ...] = (100, 1000, 10_000)
    replicates: int = 1000
    q: float = 0.5
    rm_scale: float | None = None  # default (b-a)/2, matching the bracket

    def validate(self, q: float | None = None) -> None:
        super().validate(self.q)
        if self.replicates < 2 or min(self.trial_counts) < 2:
            raise ValidationError("need replicates >= 2 and trial counts >= 2")
        if self.rm_scale is not None and not self.rm_scale > 0:
            raise ValidationError("rm_scale must be > 0")


def _iqr(v: np.ndarray) -> float:
    lo, hi = np.percentile(v, [25.0, 75.0])
    return float(hi - lo)


def experiment_estimator_comparison(
        cfg: EstimatorComparisonConfig = EstimatorComparisonConfig()) -> ExperimentReport:
    """Dispersion of three median estimators as the budget grows.

    The Robbins-Monro terminal input and the model fit tighten with more
    trials; the Langlie terminal input X_{N+1} does not, because endpoint
    jumps keep recurring.  Both design paths extend their shorter
    prefixes, so one simulation per replicate serves every trial count.
    MLE failures (separation, non-convergence) are counted, not fatal.
    """
    cfg.validate()
    model = cfg.model()
    xi = quantile(model, cfg.q)
    c = cfg.rm_scale if cfg.rm_scale is not None else (cfg.b - cfg.a) / 2.0
    fam = kernels.family_code(cfg.family)
    report = ExperimentReport("estimator_comparison", _config_dict(cfg),
                              _config_hash(cfg))
    report.stats["rm_scale"] = c
    report.stats["quantile"] = xi

    counts = sorted(cfg.trial_counts)
    n_max = counts[-1]
    lang = {n: np.empty(cfg.replicates) for n in counts}
    rm = {n: np.empty(cfg.replicates) for n in counts}
    mle = {n: np.full(cfg.replicates, np.nan) for n in counts}
    failures = {n: 0 for n in counts}
    x1 = (cfg.a + cfg.b) / 2.0
    for r in range(cfg.replicates):
        u = replicate_rng(cfg.master_seed, r).random(n_max)
        lx, ly, _, _, lnext = kernels.langlie_path(
            fam, cfg.alpha, cfg.beta, cfg.a, cfg.b, u)
        u_rm = replicate_rng(cfg.master_seed, cfg.replicates + r).random(n_max)
        rx, _ = kernels.rm_path(fam, cfg.alpha, cfg.beta, x1, c, u_rm)
        for n in counts:
            lang[n][r] = lnext if n == n_max else lx[n]
            rm[n][r] = rx[n]
            try:
                fit = fit_mle_xy(lx[:n], ly[:n], cfg.family,
                                 bracket=(cfg.a, cfg.b))
                mle[n][r] = fit.xi50_hat
            except (SeparationError, NonConvergenceError):
                failures[n] += 1

    rows = []
    for n in counts:
        ok = np.isfinite(mle[n])
        rows.append((n, _iqr(lang[n]), _iqr(rm[n]),
                     _iqr(mle[n][ok]) if ok.any() else math.nan,
                     float(np.median(mle[n][ok]) - xi) if ok.any() else math.nan,
                     failures[n]))
        report.stats[f"langlie_terminal_iqr_n{n}"] = rows[-1][1]
        report.stats[f"rm_terminal_iqr_n{n}"] = rows[-1][2]
        report.stats[f"mle_iqr_n{n}"] = rows[-1][3]
        report.stats[f"mle_median_bias_n{n}"] = rows[-1][4]
        report.stats[f"mle_failures_n{n}"] = failures[n]
    report.tables["estimator_comparison.csv"] = paths_table(
        rows, ("n", "langlie_terminal_iqr", "rm_terminal_iqr", "mle_iqr",
               "mle_median_bias", "mle_failures"))

    rm_iqrs = [report.stats[f"rm_terminal_iqr_n{n}"] for n in counts]
    report.checks.append(Check(
        name="rm_iqr_strictly_decreasing",
        passed=all(b < a for a, b in zip(rm_iqrs, rm_iqrs[1:])),
        value=min(a - b for a, b in zip(rm_iqrs, rm_iqrs[1:])),
        bound=0.0,
        relation=">",
        detail=f"IQR sequence {[format_float(v) for v in rm_iqrs]}",
    ))
    retention = (report.stats[f"langlie_terminal_iqr_n{counts[-1]}"]
                 / report.stats[f"langlie_terminal_iqr_n{counts[0]}"])
    report.stats["langlie_iqr_retention"] = retention
    report.checks.append(Check(
        name="langlie_iqr_retention",
        passed=retention >= IQR_RETENTION_FLOOR,
        value=retention,
        bound=IQR_RETENTION_FLOOR,
        relation=">=",
        detail=f"terminal-input IQR at n={counts[-1]} over n={counts[0]}",
    ))
    mid = counts[min(1, len(counts) - 1)]
    bias = abs(report.stats[f"mle_median_bias_n{mid}"])
    report.checks.append(Check(
        name=f"mle_median_bias_n{mid}",
        passed=bias <= MLE_BIAS_TOLERANCE,
        value=bias,
        bound=MLE_BIAS_TOLERANCE,
        relation="<=",
        detail="absolute median bias of the fitted median estimate",
    ))
    return report


EXPERIMENTS = {
    "figure-paths": (FigurePathsConfig, experiment_figure_paths),
    "tau-recurrence": (TauRecurrenceConfig, experiment_tau_recurrence),
    "jump-bound": (JumpBoundConfig, experiment_jump_lower_bound),
    "coupling-dominance": (CouplingConfig, experiment_coupling_and_dominance),
    "estimator-comparison": (EstimatorComparisonConfig, experiment_estimator_comparison),
}
