"""The STAR-magic-mutation engine.

One SMM gate runs repeat-until-success teleportation with TMR-prepared
resource states while the RUS angle stays below a threshold, cancelling
over-rotations with PCEC after every trial, and falls back to T-gate
synthesis from cultivated magic states once the angle reaches the
threshold.  This module provides:

* the analytic expectation calculator for the effective error rate, the
  RUS factor ``alpha = P_L / (theta_l * p_ph)`` and the expected clocks;
* a vectorized Monte-Carlo trajectory sampler cross-checking the analytics;
* an exact trajectory enumerator built on the channel-algebra oracle;
* the previous-generation ("fixed inverse-injection") RUS model used to
  calibrate the pass-rate coefficient c_1 against its published RUS factor.

Accounting convention: every executed trial leaves its post-cancellation
residual in the output state, including the trials a digital-branch
trajectory went through before switching, so

    P_L = sum_i 2^-i r(2^i theta_l)  +  2^-N (delta + p_m N_syn).

The truncated sum sum_{m<=N} 2^-m sum_{i<m} r_i that drops the digital
branch's analog residue underestimates the fixed-threshold RUS factor by
up to 2x and does not reproduce the published factor bands; the enumerator
and sampler estimate the same full-accounting quantity.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import pcec, tmr, zchan

MAX_THRESHOLD = math.pi / 8.0

#: Per-trial error rate of the [[4,1,1,2]]-injection fallback used by the
#: previous architecture generation (in units of p_ph).
INJECTION_TRIAL_COEFF = 2.0 / 15.0


def n_rus(theta_l: float, theta_th: float) -> int:
    """Number of analog RUS trials before the digital switch: ceil(log2 r)."""
    if not 0.0 < theta_l <= theta_th:
        raise ValueError(
            f"need 0 < theta_l <= theta_th, got theta_l={theta_l!r}, theta_th={theta_th!r}"
        )
    # snap ratios that are exact powers of two despite float rounding
    return max(0, math.ceil(math.log2(theta_th / theta_l) - 1e-12))


def switch_probability(theta_l: float, theta_th: float) -> float:
    """Probability of reaching the digital stage, 2^-n_rus."""
    return 2.0 ** (-n_rus(theta_l, theta_th))


def synthesis_budget(p_analog: float, n_rus_trials: int, p_m: float) -> tuple[float, int]:
    """Synthesis accuracy delta and T-count for the digital stage.

    delta = max(p_m, 0.1 * 2^N * p_analog), so the synthesis error stays
    below the other error sources; N_syn = ceil(3 log2(1/delta)).
    """
    if p_analog < 0.0 or p_m < 0.0:
        raise ValueError("p_analog and p_m must be non-negative")
    delta = max(p_m, 0.1 * 2.0 ** n_rus_trials * p_analog)
    if delta == 0.0:
        raise ValueError(
            "degenerate synthesis budget (p_m = 0 and p_analog = 0); "
            "pass an explicit delta override"
        )
    return delta, math.ceil(3.0 * math.log2(1.0 / delta))


@dataclass(frozen=True)
class SmmConfig:
    """Inputs of one SMM gate.

    Exactly one of ``theta_th`` (fixed threshold) or ``threshold_ratio``
    (theta_th = ratio * |theta_l|) must be given.  ``timing_mode``:

    * ``"pipelined"`` (default): state preparation is hidden behind ongoing
      computation (fast-block layout with dedicated prep patches); each
      teleportation costs ``gate_teleport_clocks``.
    * ``"latency"``: every preparation is paid serially (the two-patch
      setup); analog trials cost supply + teleport and each digital T-gate
      costs t_m / n_prep_patches + teleport.
    """

    theta_l: float
    tmr_params: tmr.TmrParams
    theta_th: float | None = None
    threshold_ratio: float | None = None
    p_m: float = 2e-9
    t_m: float = 10.0
    n_prep_patches: int = 2
    delta_override: float | None = None
    gate_teleport_clocks: float = 1.0
    include_higher_orders: bool = True
    timing_mode: str = "pipelined"
    pipeline_floor: float = 0.0

    def __post_init__(self) -> None:
        if (self.theta_th is None) == (self.threshold_ratio is None):
            raise ValueError("set exactly one of theta_th and threshold_ratio")
        if not math.isfinite(self.theta_l):
            raise ValueError("theta_l must be finite")
        th = self.resolved_threshold()
        if not 0.0 < th <= MAX_THRESHOLD + 1e-15:
            raise ValueError(f"theta_th must lie in (0, pi/8], got {th!r}")
        if self.theta_l != 0.0 and abs(self.theta_l) > th:
            raise ValueError(
                f"|theta_l|={abs(self.theta_l)!r} exceeds theta_th={th!r}; "
                "route the gate to pure synthesis instead"
            )
        if not 0.0 <= self.p_m <= 1e-3:
            raise ValueError(f"p_m must lie in [0, 1e-3], got {self.p_m!r}")
        if self.t_m < 1.0:
            raise ValueError(f"t_m must be >= 1 clock, got {self.t_m!r}")
        if self.n_prep_patches < 1:
            raise ValueError("n_prep_patches must be >= 1")
        if self.timing_mode not in ("pipelined", "latency"):
            raise ValueError(f"unknown timing_mode {self.timing_mode!r}")
        if self.delta_override is not None and not 0.0 <= self.delta_override < 1.0:
            raise ValueError("delta_override must lie in [0, 1)")

    def resolved_threshold(self) -> float:
        if self.theta_th is not None:
            return self.theta_th
        return self.threshold_ratio * abs(self.theta_l)


@dataclass(frozen=True)
class TrialRow:
    """Per-trial breakdown: i-th analog trial at angle 2^i * theta_l."""

    index: int
    theta_rus: float
    residual: float
    clocks: float


@dataclass(frozen=True)
class SmmReport:
    """Analytic outputs of one SMM gate."""

    config: SmmConfig
    n_rus: int
    p_switch: float
    p_analog: float
    delta: float
    n_syn: int
    p_l: float
    alpha_rus: float
    expected_clocks: float
    trials: tuple[TrialRow, ...]
    out_of_regime: bool


def _trial_residual(config: SmmConfig, theta_rus: float) -> float:
    model = tmr.output_model_for_logical(config.tmr_params, theta_rus)
    if config.include_higher_orders:
        return pcec.residual_rate(model)
    return pcec.leading_residual_rate(model)


def _trial_clocks(config: SmmConfig, theta_rus: float) -> float:
    if config.timing_mode == "pipelined":
        return config.gate_teleport_clocks
    params = config.tmr_params
    supply = tmr.supply_time(params, tmr.physical_angle_for(theta_rus, params.k))
    return max(supply, config.pipeline_floor) + config.gate_teleport_clocks


def _digital_clocks(config: SmmConfig, n_syn: int) -> float:
    if config.timing_mode == "pipelined":
        return n_syn * config.gate_teleport_clocks
    return n_syn * (config.t_m / config.n_prep_patches + config.gate_teleport_clocks)


def _identity_report(config: SmmConfig) -> SmmReport:
    return SmmReport(
        config=config, n_rus=0, p_switch=1.0, p_analog=0.0, delta=0.0,
        n_syn=0, p_l=0.0, alpha_rus=0.0, expected_clocks=0.0, trials=(),
        out_of_regime=False,
    )


def effective_error_rate(config: SmmConfig) -> SmmReport:
    """Analytic effective error rate, RUS factor and expected clocks.

    P_L = sum_i 2^-i r(2^i theta_l) + 2^-N (delta + p_m N_syn)

    with r the per-trial post-PCEC residual; 2^-i is the probability that
    trial i is executed at all.  theta_l = 0 yields the identity report and
    negative theta_l is folded by mirror symmetry.
    """
    if config.theta_l == 0.0:
        return _identity_report(config)
    theta_l = abs(config.theta_l)
    theta_th = config.resolved_threshold()
    n = n_rus(theta_l, theta_th)
    p_switch = 2.0 ** (-n)

    residuals = []
    trial_clocks = []
    for i in range(n):
        theta_rus = 2.0 ** i * theta_l
        residuals.append(_trial_residual(config, theta_rus))
        trial_clocks.append(_trial_clocks(config, theta_rus))

    # expected residual over all executed trials, digital branch included
    p_analog = sum(2.0 ** (-i) * r for i, r in enumerate(residuals))

    if config.delta_override is not None:
        delta = config.delta_override
        n_syn = math.ceil(3.0 * math.log2(1.0 / delta)) if delta > 0.0 else 0
    elif config.p_m == 0.0 and p_analog == 0.0:
        delta, n_syn = 0.0, 0
    else:
        delta, n_syn = synthesis_budget(p_analog, n, config.p_m)

    p_l = p_analog + p_switch * (delta + config.p_m * n_syn)
    p_ph = config.tmr_params.p_ph
    if p_ph > 0.0:
        alpha = p_l / (theta_l * p_ph)
    else:
        alpha = 0.0 if p_l == 0.0 else math.inf

    t_digital = _digital_clocks(config, n_syn)
    clocks = sum(2.0 ** (-i) * t for i, t in enumerate(trial_clocks))
    clocks += p_switch * t_digital

    k = config.tmr_params.k
    out_of_regime = p_ph > 0.0 and theta_l <= p_ph ** (k / 2.0)

    rows = tuple(
        TrialRow(index=i, theta_rus=2.0 ** i * theta_l, residual=r, clocks=t)
        for i, (r, t) in enumerate(zip(residuals, trial_clocks))
    )
    return SmmReport(
        config=config, n_rus=n, p_switch=p_switch, p_analog=p_analog,
        delta=delta, n_syn=n_syn, p_l=p_l, alpha_rus=alpha,
        expected_clocks=clocks, trials=rows, out_of_regime=out_of_regime,
    )


def expected_clocks(config: SmmConfig) -> float:
    """Expected wall-clock cost of one SMM gate, in clocks."""
    return effective_error_rate(config).expected_clocks


def synthesis_only_gate(
    delta: float,
    p_m: float = 2e-9,
    t_m: float = 10.0,
    n_prep_patches: int = 2,
    gate_teleport_clocks: float = 1.0,
) -> tuple[float, float]:
    """Error rate and clocks of the pure T-gate-synthesis comparator.

    Returns (P_L, clocks) = (delta + p_m*N_syn, N_syn*(t_m/n_prep + teleport)).
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    n_syn = math.ceil(3.0 * math.log2(1.0 / delta))
    p_l = delta + p_m * n_syn
    clocks = n_syn * (t_m / n_prep_patches + gate_teleport_clocks)
    return p_l, clocks


# ---------------------------------------------------------------------------
# Exact trajectory enumeration (channel-algebra route)
# ---------------------------------------------------------------------------

def enumerate_error_rate(config: SmmConfig) -> float:
    """Exact twirled-Z error of the SMM output under the P_L convention.

    Builds the exact per-trial composed channel canceller.noisy with the
    channel algebra and multiplies coherence factors across trials, so each
    success-at-m trajectory class is evaluated without perturbative
    truncation.  Differs from :func:`effective_error_rate` only by the
    O((sum qbar)^2) cross terms the analytic sum drops.
    """
    if config.theta_l == 0.0:
        return 0.0
    theta_l = abs(config.theta_l)
    n = n_rus(theta_l, config.resolved_threshold())
    zs = []
    for i in range(n):
        theta_rus = 2.0 ** i * theta_l
        model = tmr.output_model_for_logical(config.tmr_params, theta_rus)
        net = zchan.compose(pcec.build_canceller(model), pcec.build_noisy_channel(model))
        zs.append(zchan.coherence_factor(net, theta_rus))
    report = effective_error_rate(config)
    total = 0.0
    acc = 1.0 + 0.0j
    for m in range(1, n + 1):
        acc *= zs[m - 1]
        total += 2.0 ** (-m) * 0.5 * (1.0 - acc.real)
    # digital branch: all n analog trials plus the synthesis/magic flip
    p_dig = report.delta + config.p_m * report.n_syn
    total += 2.0 ** (-n) * 0.5 * (1.0 - (acc * (1.0 - 2.0 * p_dig)).real)
    return total


# ---------------------------------------------------------------------------
# Monte-Carlo trajectory sampler
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class McReport:
    """Empirical estimates with standard errors."""

    shots: int
    seed: int
    p_l_hat: float
    p_l_se: float
    clocks_hat: float
    clocks_se: float
    p_switch_hat: float
    p_switch_se: float


_MC_CHUNK = 1 << 17


def monte_carlo(config: SmmConfig, shots: int, seed: int) -> McReport:
    """Sample SMM trajectories and estimate P_L, clocks and p_switch.

    Each trial succeeds with probability 1/2; the over-rotation branch is
    sampled for the teleported gate and for the canceller (mirrored after
    failures), and the accumulated angle deviation is scored exactly as
    sin^2 at completion.  Digital-branch trajectories keep their analog
    deviation and fold in the synthesis/magic flip rate, matching the
    full-accounting P_L.

    The RNG is counter-based: Philox keyed by (seed, chunk index) with a
    fixed chunk size and a fixed draw order inside each chunk, so
    (seed, trajectory index) determines a trajectory regardless of how
    chunks are scheduled; results are bit-reproducible.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if config.theta_l == 0.0:
        return McReport(shots, seed, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0)

    theta_l = abs(config.theta_l)
    n = n_rus(theta_l, config.resolved_threshold())
    report = effective_error_rate(config)
    p_digital_flip = report.delta + config.p_m * report.n_syn

    # per-trial sampling tables
    cums, deltas, t_trials = [], [], []
    for i in range(n):
        theta_rus = 2.0 ** i * theta_l
        model = tmr.output_model_for_logical(config.tmr_params, theta_rus)
        qbar = np.array(model.branch_qbars)
        dl = np.array(model.branch_thetas) - theta_rus  # Delta_0 = 0
        edges = np.cumsum(qbar)
        edges[-1] = 1.0
        cums.append(edges)
        deltas.append(dl)
        t_trials.append(_trial_clocks(config, theta_rus))
    t_digital = _digital_clocks(config, report.n_syn)

    sum_x = sum_x2 = sum_t = sum_t2 = 0.0
    n_digital = 0
    done = 0
    chunk_index = 0
    while done < shots:
        size = min(_MC_CHUNK, shots - done)
        # one independent Philox stream per (seed, chunk) key pair
        key = np.array([seed & 0xFFFFFFFFFFFFFFFF, chunk_index], dtype=np.uint64)
        rng = np.random.Generator(np.random.Philox(key=key))
        err = np.zeros(size)
        clocks = np.zeros(size)
        alive = np.ones(size, dtype=bool)
        success_err = np.zeros(size)
        succeeded = np.zeros(size, dtype=bool)
        for i in range(n):
            u_coin = rng.random(size)
            u_gate = rng.random(size)
            u_canc = rng.random(size)
            j_gate = np.searchsorted(cums[i], u_gate, side="right")
            j_canc = np.searchsorted(cums[i], u_canc, side="right")
            step = deltas[i][j_gate] - deltas[i][j_canc]
            coin = u_coin < 0.5
            err = np.where(alive, err + np.where(coin, step, -step), err)
            clocks = np.where(alive, clocks + t_trials[i], clocks)
            newly = alive & coin
            success_err = np.where(newly, err, success_err)
            succeeded |= newly
            alive &= ~coin
        clocks = np.where(alive, clocks + t_digital, clocks)
        s2 = np.sin(np.where(succeeded, success_err, err)) ** 2
        # digital branch: Z-flip with rate p_dig on top of the analog deviation
        x = np.where(
            succeeded,
            s2,
            (1.0 - p_digital_flip) * s2 + p_digital_flip * (1.0 - s2),
        )
        sum_x += float(x.sum())
        sum_x2 += float((x * x).sum())
        sum_t += float(clocks.sum())
        sum_t2 += float((clocks * clocks).sum())
        n_digital += int(alive.sum())
        done += size
        chunk_index += 1

    mean_x = sum_x / shots
    var_x = max(sum_x2 / shots - mean_x ** 2, 0.0)
    mean_t = sum_t / shots
    var_t = max(sum_t2 / shots - mean_t ** 2, 0.0)
    p_sw = n_digital / shots
    return McReport(
        shots=shots,
        seed=seed,
        p_l_hat=mean_x,
        p_l_se=math.sqrt(var_x / shots),
        clocks_hat=mean_t,
        clocks_se=math.sqrt(var_t / shots),
        p_switch_hat=p_sw,
        p_switch_se=math.sqrt(p_sw * (1.0 - p_sw) / shots),
    )


# ---------------------------------------------------------------------------
# Previous-generation RUS model and pass-rate calibration
# ---------------------------------------------------------------------------

def _v2_params(k: int, p_ph: float, c1: float) -> tmr.TmrParams:
    # the earlier protocol cancels only the leading branch: j_max = 1
    return tmr.TmrParams(k=k, p_ph=p_ph, pass_coeffs=(c1,), j_max=1)


def v2_crossover_angle(k: int, p_ph: float, c1: float) -> float:
    """Logical angle where the TMR residual meets the injection error rate.

    Below the crossover the TMR + first-order-PCEC trial is the better
    gadget; above it the [[4,1,1,2]] injection (error (2/15) p_ph per
    trial) wins.  Greedy switching at the crossover is optimal because the
    residual increases monotonically with angle.
    """
    if p_ph <= 0.0:
        return tmr.MAX_THETA
    params = _v2_params(k, p_ph, c1)
    target = INJECTION_TRIAL_COEFF * p_ph

    def res(theta_l: float) -> float:
        return pcec.leading_residual_rate(tmr.output_model_for_logical(params, theta_l))

    hi = tmr.MAX_THETA
    if res(hi) <= target:
        return hi
    lo = 1e-9
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return mid
        if res(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def v2_rus_factor(
    theta_l: float,
    k: int,
    p_ph: float,
    c1: float,
    theta_switch: float | None = None,
) -> float:
    """RUS factor of the previous-generation gate (no digital stage).

    The RUS process runs to success: TMR trials with first-order PCEC while
    the doubling angle stays below the switch angle, injection-protocol
    trials afterwards.  alpha = P_L / (theta_l * p_ph) with
    P_L = sum_i 2^-i r(2^i theta_l).
    """
    if theta_l <= 0.0 or p_ph <= 0.0:
        raise ValueError("theta_l and p_ph must be positive")
    if theta_switch is None:
        theta_switch = v2_crossover_angle(k, p_ph, c1)
    params = _v2_params(k, p_ph, c1)
    i0 = 0 if theta_l >= theta_switch else math.ceil(
        math.log2(theta_switch / theta_l) - 1e-12
    )
    p_l = 0.0
    for i in range(i0):
        theta_rus = 2.0 ** i * theta_l
        model = tmr.output_model_for_logical(params, theta_rus)
        p_l += 2.0 ** (-i) * pcec.leading_residual_rate(model)
    p_l += 2.0 ** (1 - i0) * INJECTION_TRIAL_COEFF * p_ph
    return p_l / (theta_l * p_ph)


@functools.lru_cache(maxsize=None)
def calibrate_c1(
    k: int = 7,
    p_ph: float = 1e-3,
    target_alpha: float = 1.6,
    theta_l_anchor: float = 1e-5,
) -> float:
    """Fit c_1 so the previous-generation RUS factor matches its reference.

    The factor oscillates with log2(theta_l) (period one octave), so the
    calibration matches the octave average at the anchor scale.  Bisection
    on log(c_1) is safe: the averaged factor is monotone in c_1.
    """

    def averaged_alpha(c1: float) -> float:
        vals = [
            v2_rus_factor(theta_l_anchor * 2.0 ** (j / 16.0), k, p_ph, c1)
            for j in range(16)
        ]
        return sum(vals) / len(vals)

    lo, hi = math.log(1e-4), math.log(10.0)
    if averaged_alpha(math.exp(lo)) > target_alpha:
        raise ValueError("calibration target below the injection-only floor")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if averaged_alpha(math.exp(mid)) < target_alpha:
            lo = mid
        else:
            hi = mid
    return math.exp(0.5 * (lo + hi))
