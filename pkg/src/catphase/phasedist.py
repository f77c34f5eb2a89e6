"""Analytic s-ordered phase distributions and their moments.

The phase-sum (plus) and phase-difference (minus) distributions are Fourier
cosine series

    P(phi) = (1/2pi) [1 + 2 sum_n c_n cos n(phi - phi_prime)],

with coefficients built from the scaled Bessel combinations of
:mod:`catphase.specfun`; the one-mode distributions add odd-index sine
terms.  Spectra are truncated once two consecutive coefficients drop below
``eps_tail`` (the decay is super-geometric, so a two-term test is safe
against even/odd alternation) and carry their construction context so
moments can recompute coefficients on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NoConvergenceError
from .quasiprob import _require_s_below_one
from .specfun import LogScaledValue, i_n_combo
from .states import QuasiBellState, normalization_constant

__all__ = [
    "TruncationPolicy",
    "FourierSpectrum",
    "OneModeSpectrum",
    "TrigMoments",
    "PhaseStats",
    "wrap_angle",
    "fourier_coefficient",
    "build_spectrum",
    "eval_phase_dist",
    "one_mode_coefficients",
    "eval_one_mode_dist",
    "trig_moments",
    "phase_mean_var",
]

_TWO_PI = 2.0 * math.pi
_LOG_MAX = 709.0


@dataclass(frozen=True)
class TruncationPolicy:
    """Stop once max(|c_n|, |c_(n-1)|) < eps_tail at some n >= n_min."""

    eps_tail: float = 1e-14
    n_min: int = 4
    n_max: int = 512

    def __post_init__(self) -> None:
        if not (self.eps_tail > 0.0 and math.isfinite(self.eps_tail)):
            raise ValueError(f"eps_tail must be positive, got {self.eps_tail!r}")
        if not (1 <= self.n_min <= self.n_max):
            raise ValueError(
                f"need 1 <= n_min <= n_max, got n_min={self.n_min!r}, n_max={self.n_max!r}"
            )


@dataclass(frozen=True)
class FourierSpectrum:
    """Truncated cosine spectrum of a phase-sum/difference distribution.

    ``coeffs[n-1]`` is c_n for n = 1..n_used; ``phi_prime`` is the reference
    phase phi_beta +/- phi_alpha reduced to [0, 2pi).  The construction
    context (state, s) is kept so higher coefficients can be recomputed on
    demand by :func:`trig_moments`.
    """

    branch: str
    phi_prime: float
    coeffs: np.ndarray
    n_used: int
    tail_bound: float
    state: QuasiBellState
    s: float


@dataclass(frozen=True)
class OneModeSpectrum:
    """Truncated cosine+sine spectrum of a one-mode phase distribution.

    ``cos_coeffs[n-1]`` and ``sin_coeffs[n-1]`` hold c_n and d_n for
    n = 1..n_used; d_n vanishes identically for even n.
    """

    mode: int
    phi_ref: float
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray
    n_used: int
    state: QuasiBellState
    s: float

    @property
    def c_even(self) -> np.ndarray:
        """Coefficients c_2, c_4, ..."""
        return self.cos_coeffs[1::2]

    @property
    def c_odd(self) -> np.ndarray:
        """Coefficients c_1, c_3, ..."""
        return self.cos_coeffs[0::2]

    @property
    def d_odd(self) -> np.ndarray:
        """Coefficients d_1, d_3, ..."""
        return self.sin_coeffs[0::2]


class TrigMoments(NamedTuple):
    mean_cos: float
    mean_sin: float
    var_cos: float
    var_sin: float


class PhaseStats(NamedTuple):
    mean: float
    variance: float


def wrap_angle(phi):
    """Reduce angles to (-pi, pi]."""
    phi = np.asarray(phi, dtype=float)
    out = np.mod(phi, _TWO_PI)
    out = np.where(out > math.pi, out - _TWO_PI, out)
    return out if out.ndim else float(out)


def _product(a: LogScaledValue, b: LogScaledValue) -> LogScaledValue:
    if a.sign == 0 or b.sign == 0:
        return LogScaledValue.zero()
    return LogScaledValue(a.sign * b.sign, a.log_mag + b.log_mag)


def _signed_exp_sum(terms: list[LogScaledValue], log_scale: float, context: str) -> float:
    """exp(log_scale) * sum(terms), exponentiating only fused exponents."""
    live = [t for t in terms if t.sign != 0]
    if not live:
        return 0.0
    peak = max(t.log_mag for t in live)
    acc = math.fsum(t.sign * math.exp(t.log_mag - peak) for t in live)
    if acc == 0.0:
        return 0.0
    total_log = peak + log_scale + math.log(abs(acc))
    if total_log > _LOG_MAX:
        raise OverflowError(
            f"{context}: fused exponent {total_log:.6g} exceeds the float range; "
            "the coefficient is astronomically large this close to s = 1"
        )
    return math.copysign(math.exp(total_log), acc)


def _branch_sign(branch: str) -> int:
    if branch == "plus":
        return 1
    if branch == "minus":
        return -1
    raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")


def fourier_coefficient(state: QuasiBellState, s: float, n: int, branch: str) -> float:
    """Coefficient c_n of the phase-sum (plus) or phase-difference (minus) series.

    c_n = N^2 (pi/2) [comb_plus(n, x_a) comb_plus(n, x_b)
          + (+-1)^n 2 Re(mu nu*) e^(-2(|alpha|^2+|beta|^2))
            comb_minus(n, x_a) comb_minus(n, x_b)]

    with x_a = |alpha|^2/(1-s), x_b = |beta|^2/(1-s).  The suppression factor
    e^(-2(...)) is fused with the log-scaled minus combinations before
    anything is exponentiated.
    """
    sign = _branch_sign(branch)
    s = _require_s_below_one(s)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"coefficient index n must be an integer >= 1, got {n!r}")

    x_a = abs(state.alpha) ** 2 / (1.0 - s)
    x_b = abs(state.beta) ** 2 / (1.0 - s)
    asq = state.amplitude_sq_sum
    gauss = _product(i_n_combo(n, x_a, "plus"), i_n_combo(n, x_b, "plus"))

    weight = (sign**n) * 2.0 * state.weight_overlap.real
    interf = LogScaledValue.from_value(weight)
    interf = _product(interf, i_n_combo(n, x_a, "minus"))
    interf = _product(interf, i_n_combo(n, x_b, "minus")).scaled(-2.0 * asq)

    log_scale = 2.0 * math.log(normalization_constant(state)) + math.log(0.5 * math.pi)
    return _signed_exp_sum(
        [gauss, interf], log_scale, f"c_{n}^({branch}) at s={s!r}"
    )


def build_spectrum(
    state: QuasiBellState,
    s: float,
    branch: str,
    policy: TruncationPolicy | None = None,
) -> FourierSpectrum:
    """Compute c_1..c_N until the two-term tail test passes.

    Raises NoConvergenceError if the tail is still above ``eps_tail`` at
    ``n_max``.
    """
    sign = _branch_sign(branch)
    s = _require_s_below_one(s)
    policy = policy or TruncationPolicy()

    phi_prime = math.atan2(state.beta.imag, state.beta.real) + sign * math.atan2(
        state.alpha.imag, state.alpha.real
    )
    phi_prime = phi_prime % _TWO_PI

    coeffs: list[float] = []
    for n in range(1, policy.n_max + 1):
        coeffs.append(fourier_coefficient(state, s, n, branch))
        if n >= max(policy.n_min, 2):
            tail = max(abs(coeffs[-1]), abs(coeffs[-2]))
            if tail < policy.eps_tail:
                return FourierSpectrum(
                    branch=branch,
                    phi_prime=phi_prime,
                    coeffs=np.asarray(coeffs),
                    n_used=n,
                    tail_bound=tail,
                    state=state,
                    s=s,
                )
    raise NoConvergenceError(
        f"spectrum tail still {max(abs(coeffs[-1]), abs(coeffs[-2])):.3e} "
        f"above eps_tail={policy.eps_tail:g} at n_max={policy.n_max}"
    )


def _clenshaw_cos(coeffs: np.ndarray, cos_delta: np.ndarray) -> np.ndarray:
    """sum_n coeffs[n-1] cos(n delta) by the Clenshaw recurrence."""
    b1 = np.zeros_like(cos_delta)
    b2 = np.zeros_like(cos_delta)
    for a in coeffs[::-1]:
        b1, b2 = a + 2.0 * cos_delta * b1 - b2, b1
    return b1 * cos_delta - b2


def _clenshaw_sin(coeffs: np.ndarray, cos_delta: np.ndarray, sin_delta: np.ndarray) -> np.ndarray:
    """sum_n coeffs[n-1] sin(n delta) by the Clenshaw recurrence."""
    b1 = np.zeros_like(cos_delta)
    b2 = np.zeros_like(cos_delta)
    for a in coeffs[::-1]:
        b1, b2 = a + 2.0 * cos_delta * b1 - b2, b1
    return b1 * sin_delta


def eval_phase_dist(spectrum: FourierSpectrum, phi):
    """Evaluate (1/2pi)[1 + 2 sum_n c_n cos n(phi - phi_prime)].

    ``phi`` may be any real scalar or array; the offset is reduced to
    (-pi, pi] and the series is summed without per-term trig calls.
    """
    delta = wrap_angle(np.asarray(phi, dtype=float) - spectrum.phi_prime)
    delta = np.asarray(delta, dtype=float)
    scalar = delta.ndim == 0
    total = _clenshaw_cos(spectrum.coeffs, np.cos(delta))
    out = (1.0 + 2.0 * total) / _TWO_PI
    return float(out) if scalar else out


def one_mode_coefficients(
    state: QuasiBellState,
    s: float,
    mode: int,
    policy: TruncationPolicy | None = None,
) -> OneModeSpectrum:
    """Cosine/sine coefficients of the one-mode phase distribution.

    Even cosine coefficients carry the interference term, odd cosine
    coefficients the weight imbalance |mu|^2 - |nu|^2, and odd sine
    coefficients Im(mu nu*); even sine terms are absent.  Truncation uses
    max(|c_n|, |d_n|).
    """
    s = _require_s_below_one(s)
    if mode not in (1, 2):
        raise DomainError(f"mode must be 1 or 2, got {mode!r}")
    policy = policy or TruncationPolicy()

    amp = state.alpha if mode == 1 else state.beta
    x_m = abs(amp) ** 2 / (1.0 - s)
    asq = state.amplitude_sq_sum
    phi_ref = math.atan2(amp.imag, amp.real) % _TWO_PI
    log_scale = 2.0 * math.log(normalization_constant(state)) + 0.5 * math.log(0.5 * math.pi)
    cross = state.weight_overlap
    imbalance = abs(state.mu) ** 2 - abs(state.nu) ** 2

    cos_coeffs: list[float] = []
    sin_coeffs: list[float] = []
    for n in range(1, policy.n_max + 1):
        plus_part = i_n_combo(n, x_m, "plus")
        minus_part = i_n_combo(n, x_m, "minus")
        if n % 2 == 0:
            interf = LogScaledValue.from_value(2.0 * cross.real)
            interf = _product(interf, minus_part).scaled(-2.0 * asq)
            c_n = _signed_exp_sum(
                [plus_part, interf], log_scale, f"one-mode c_{n} at s={s!r}"
            )
            d_n = 0.0
        else:
            c_n = _signed_exp_sum(
                [_product(LogScaledValue.from_value(imbalance), plus_part)],
                log_scale,
                f"one-mode c_{n} at s={s!r}",
            )
            d_term = LogScaledValue.from_value(2.0 * cross.imag)
            d_term = _product(d_term, minus_part).scaled(-2.0 * asq)
            d_n = _signed_exp_sum([d_term], log_scale, f"one-mode d_{n} at s={s!r}")
        cos_coeffs.append(c_n)
        sin_coeffs.append(d_n)
        if n >= max(policy.n_min, 2):
            tail = max(
                abs(cos_coeffs[-1]),
                abs(sin_coeffs[-1]),
                abs(cos_coeffs[-2]),
                abs(sin_coeffs[-2]),
            )
            if tail < policy.eps_tail:
                return OneModeSpectrum(
                    mode=mode,
                    phi_ref=phi_ref,
                    cos_coeffs=np.asarray(cos_coeffs),
                    sin_coeffs=np.asarray(sin_coeffs),
                    n_used=n,
                    state=state,
                    s=s,
                )
    raise NoConvergenceError(
        f"one-mode spectrum tail above eps_tail={policy.eps_tail:g} at n_max={policy.n_max}"
    )


def eval_one_mode_dist(spectrum: OneModeSpectrum, phi):
    """Evaluate the one-mode distribution at phi (scalar or array)."""
    delta = wrap_angle(np.asarray(phi, dtype=float) - spectrum.phi_ref)
    delta = np.asarray(delta, dtype=float)
    scalar = delta.ndim == 0
    cos_delta = np.cos(delta)
    sin_delta = np.sin(delta)
    total = _clenshaw_cos(spectrum.cos_coeffs, cos_delta) + _clenshaw_sin(
        spectrum.sin_coeffs, cos_delta, sin_delta
    )
    out = (1.0 + 2.0 * total) / _TWO_PI
    return float(out) if scalar else out


def _coefficient(spectrum: FourierSpectrum, k: int) -> float:
    if k <= spectrum.n_used:
        return float(spectrum.coeffs[k - 1])
    return fourier_coefficient(spectrum.state, spectrum.s, k, spectrum.branch)


def trig_moments(spectrum: FourierSpectrum, n: int) -> TrigMoments:
    """Central trigonometric moments of order n.

    <cos n(phi-phi')> = c_n and <sin n(phi-phi')> = 0; the variances need
    c_2n, which is recomputed on demand if it falls past the truncation.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"moment order must be an integer >= 1, got {n!r}")
    c_n = _coefficient(spectrum, n)
    c_2n = _coefficient(spectrum, 2 * n)
    return TrigMoments(
        mean_cos=c_n,
        mean_sin=0.0,
        var_cos=0.5 * (1.0 - 2.0 * c_n**2 + c_2n),
        var_sin=0.5 * (1.0 - c_2n),
    )


def phase_mean_var(spectrum: FourierSpectrum, phi0: float) -> PhaseStats:
    """Mean and variance of the phase over the window [phi0 - pi, phi0 + pi).

    mean = phi0 + 2 sum_n ((-1)^n / n) c_n sin n(phi0 - phi_prime)
    variance = pi^2/3 - (mean - phi0)^2
               + 4 sum_n ((-1)^n / n^2) c_n cos n(phi0 - phi_prime)
    """
    phi0 = float(phi0)
    if not math.isfinite(phi0):
        raise DomainError(f"window center must be finite, got {phi0!r}")
    n = np.arange(1, spectrum.n_used + 1)
    signs = np.where(n % 2 == 0, 1.0, -1.0)
    delta0 = phi0 - spectrum.phi_prime
    mean_shift = 2.0 * np.sum(signs / n * spectrum.coeffs * np.sin(n * delta0))
    variance = (
        math.pi**2 / 3.0
        - mean_shift**2
        + 4.0 * np.sum(signs / n**2 * spectrum.coeffs * np.cos(n * delta0))
    )
    return PhaseStats(mean=phi0 + float(mean_shift), variance=float(variance))
