"""Analytic output model of the transversal multi-rotation (TMR) protocol.

The protocol applies k physical-angle rotation factors along the logical Z
operator of a surface-code patch and post-selects on clean stabilizers.
This module provides the closed forms for its ideal success probability,
the logical angle, the error-branch angles theta_j, and the normalized
branch weights qbar_j, plus an expected supply-time model.

Pass rates are not simulated here: the order-j pass probability is modeled
as ``c_j * p_ph**j`` with user-supplied coefficients ``c_j`` (default 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_THETA = 0.25 * math.pi


@dataclass(frozen=True)
class TmrParams:
    """Static parameters of one TMR configuration.

    Attributes:
        k: number of transversal rotation factors (k = Theta(d); kept free).
        p_ph: physical error rate, in [0, 0.1].
        pass_coeffs: coefficients c_j of the order-j pass rate
            ``q_j_pass = c_j * p_ph**j`` for j = 1..j_max. Missing entries
            default to 1.0.
        j_max: highest error order retained; defaults to floor(k/2), the
            number of distinct branch pairs.
        prep_clock_constant: clocks consumed by one preparation attempt.
        pass_rate_floor: overall multiplicative pass factor applied to the
            ideal branch (absorbs q_0_pass); affects supply time only.
    """

    k: int
    p_ph: float
    pass_coeffs: tuple[float, ...] = ()
    j_max: int | None = None
    prep_clock_constant: float = 1.0
    pass_rate_floor: float = 1.0

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if not 0.0 <= self.p_ph <= 0.1:
            raise ValueError(f"p_ph must lie in [0, 0.1], got {self.p_ph!r}")
        jm = self.k // 2 if self.j_max is None else self.j_max
        if not 1 <= jm <= self.k:
            raise ValueError(f"j_max must lie in [1, k], got {jm}")
        object.__setattr__(self, "j_max", jm)
        coeffs = tuple(float(c) for c in self.pass_coeffs)
        if any(c < 0.0 for c in coeffs):
            raise ValueError("pass coefficients must be non-negative")
        if len(coeffs) < jm:
            coeffs = coeffs + (1.0,) * (jm - len(coeffs))
        object.__setattr__(self, "pass_coeffs", coeffs[:jm])
        if not 0.0 < self.pass_rate_floor <= 1.0:
            raise ValueError("pass_rate_floor must lie in (0, 1]")
        if self.prep_clock_constant <= 0.0:
            raise ValueError("prep_clock_constant must be positive")


@dataclass(frozen=True)
class TmrOutputModel:
    """Branch decomposition of one prepared resource state.

    ``branch_thetas[j]``/``branch_qbars[j]`` hold theta_j and qbar_j for
    j = 0..j_max; branch 0 is the target rotation (theta_0 = theta_l) and
    qbar sums to one.
    """

    params: TmrParams
    theta_phys: float
    theta_l: float
    p_ideal: float
    branch_thetas: tuple[float, ...]
    branch_qbars: tuple[float, ...]

    def error_weight(self) -> float:
        """Total weight on the non-target branches, sum_{j>=1} qbar_j."""
        return float(sum(self.branch_qbars[1:]))


def p_ideal(theta: float, k: int) -> float:
    """Ideal post-selection success probability sin^2k + cos^2k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    return math.sin(theta) ** (2 * k) + math.cos(theta) ** (2 * k)


def logical_angle(theta: float, k: int) -> float:
    """Logical angle arcsin(sin^k(theta) / sqrt(p_ideal)); ~ theta^k small."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 0.0 <= theta <= MAX_THETA:
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    return math.asin(math.sin(theta) ** k / math.sqrt(p_ideal(theta, k)))


def physical_angle_for(theta_l: float, k: int, max_steps: int = 200) -> float:
    """Invert :func:`logical_angle` by bisection on [0, pi/4].

    Valid because the logical angle is strictly monotone there.  The
    bracket collapses to float resolution in ~60 steps; hitting the step
    cap indicates a numerical problem and raises.
    """
    if not 0.0 <= theta_l <= MAX_THETA:
        raise ValueError(f"theta_l must lie in [0, pi/4], got {theta_l!r}")
    if theta_l == 0.0:
        return 0.0
    lo, hi = 0.0, MAX_THETA
    for _ in range(max_steps):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return mid
        if logical_angle(mid, k) < theta_l:
            lo = mid
        else:
            hi = mid
    raise ArithmeticError(
        f"bisection did not converge for theta_l={theta_l!r}, k={k}"
    )


def _u_abs(theta: float, k: int, j: int) -> float:
    """|u_j| = sin^j(theta) cos^(k-j)(theta)."""
    return math.sin(theta) ** j * math.cos(theta) ** (k - j)


def branch_angles(theta: float, k: int, j: int) -> float:
    """Angle theta_j of the order-j output branch.

    theta_j = (-1)^j arcsin(|u_{k-j}| / sqrt(|u_j|^2 + |u_{k-j}|^2)); j = 0
    reproduces the logical angle and j = 1 the leading error angle.
    """
    if not 0 <= j <= k:
        raise ValueError(f"j must lie in [0, k], got {j}")
    if not 0.0 < theta <= MAX_THETA:
        raise ValueError(f"theta must lie in (0, pi/4], got {theta!r}")
    ua = _u_abs(theta, k, j)
    ub = _u_abs(theta, k, k - j)
    mag = math.asin(ub / math.hypot(ua, ub))
    return mag if j % 2 == 0 else -mag


def leading_error_angle(theta: float, k: int) -> float:
    """The j = 1 branch angle from its dedicated closed form.

    -arcsin( sin^{k-2} / sqrt(sin^{2k-4} + cos^{2k-4}) ); kept separate from
    :func:`branch_angles` as a cross-check identity.
    """
    s, c = math.sin(theta), math.cos(theta)
    return -math.asin(s ** (k - 2) / math.sqrt(s ** (2 * k - 4) + c ** (2 * k - 4)))


def branch_weights(params: TmrParams, theta: float) -> TmrOutputModel:
    """Full branch table of the post-selected output state.

    q_0 = p_ideal * pass_rate_floor and, for j >= 1,
    q_j = C(k,j) (|u_j|^2 + |u_{k-j}|^2) c_j p_ph^j, halved at j = k/2 for
    even k where the pair is self-conjugate.  Returned weights are
    normalized (qbar_j = q_j / sum).
    """
    if not 0.0 < theta <= MAX_THETA:
        raise ValueError(f"theta must lie in (0, pi/4], got {theta!r}")
    k = params.k
    pid = p_ideal(theta, k)
    q = [pid * params.pass_rate_floor]
    thetas = [logical_angle(theta, k)]
    for j in range(1, params.j_max + 1):
        sample = math.comb(k, j) * (_u_abs(theta, k, j) ** 2 + _u_abs(theta, k, k - j) ** 2)
        if 2 * j == k:
            sample *= 0.5
        q.append(sample * params.pass_coeffs[j - 1] * params.p_ph ** j)
        thetas.append(branch_angles(theta, k, j))
    total = sum(q)
    if total <= 0.0:
        raise ValueError("all branch weights vanish; model is degenerate")
    return TmrOutputModel(
        params=params,
        theta_phys=theta,
        theta_l=thetas[0],
        p_ideal=pid,
        branch_thetas=tuple(thetas),
        branch_qbars=tuple(w / total for w in q),
    )


def output_model_for_logical(params: TmrParams, theta_l: float) -> TmrOutputModel:
    """Branch table for a target logical angle (inverts the angle map)."""
    return branch_weights(params, physical_angle_for(theta_l, params.k))


def supply_time(params: TmrParams, theta: float) -> float:
    """Expected clocks to produce one accepted resource state.

    Geometric-retry expectation: prep_clock_constant / (p_ideal * floor).
    """
    if not 0.0 <= theta <= MAX_THETA:
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    return params.prep_clock_constant / (p_ideal(theta, params.k) * params.pass_rate_floor)
