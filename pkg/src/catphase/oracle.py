"""Independent numerical validation of the analytic formulas.

Two oracle families live here:

* brute-force quadrature marginalization of the symmetrized quasi-probability
  (Gauss-Legendre radially, uniform trapezoid angularly, which is spectrally
  accurate for the periodic integrands), checking normalization and the
  phase-distribution series, and
* a truncated-Fock-basis trace of the displacement operator, checking the
  closed-form characteristic function.

Node sums use NumPy's pairwise summation on fixed shapes, so results are
bit-stable across runs for a fixed spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import eval_genlaguerre, gammainc, gammaln

from .errors import CutoffTooSmallError, DomainError
from .quasiprob import _require_s_below_one, w, w_symmetrized
from .states import QuasiBellState, normalization_constant

__all__ = [
    "QuadratureSpec",
    "FockChiResult",
    "FOCK_BOUND_TOL",
    "quadrature_phase_dist",
    "quadrature_normalization",
    "quadrature_one_mode",
    "fock_chi_oracle",
]

_TWO_PI = 2.0 * math.pi

# A reported Fock truncation bound above this raises CutoffTooSmallError.
FOCK_BOUND_TOL = 1e-6


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts and radial cutoff for the quadrature oracles.

    The radial domain is [0, R] with R = max(|alpha|, |beta|)
    + radial_cutoff_sigma * sqrt((1-s)/2); the Gaussian envelope
    exp(-2 r^2/(1-s)) makes the neglected tail negligible at the default
    eight sigma.
    """

    n_radial: int = 40
    n_angular: int = 64
    radial_cutoff_sigma: float = 8.0

    def __post_init__(self) -> None:
        if self.n_radial < 16:
            raise ValueError(f"n_radial must be >= 16, got {self.n_radial!r}")
        if self.n_angular < 32:
            raise ValueError(f"n_angular must be >= 32, got {self.n_angular!r}")
        if not (self.radial_cutoff_sigma > 0.0):
            raise ValueError(
                f"radial_cutoff_sigma must be positive, got {self.radial_cutoff_sigma!r}"
            )


def _radial_rule(state: QuasiBellState, s: float, spec: QuadratureSpec):
    """Gauss-Legendre nodes and weights on [0, R]."""
    radius = max(abs(state.alpha), abs(state.beta)) + spec.radial_cutoff_sigma * math.sqrt(
        (1.0 - s) / 2.0
    )
    nodes, weights = leggauss(spec.n_radial)
    return 0.5 * radius * (nodes + 1.0), 0.5 * radius * weights


def _angular_rule(spec: QuadratureSpec):
    """Uniform angular nodes with the periodic trapezoid weight 2pi/n."""
    nodes = _TWO_PI * np.arange(spec.n_angular) / spec.n_angular
    return nodes, _TWO_PI / spec.n_angular


def quadrature_phase_dist(
    state: QuasiBellState,
    s: float,
    branch: str,
    phi,
    spec: QuadratureSpec | None = None,
):
    """Marginal phase-sum/difference density at phi, by direct quadrature.

    Integrates |gamma||delta| W_sym over both radii and the complementary
    angle (phi_minus for the plus branch and vice versa), with the fixed
    angle set to phi.  ``phi`` may be a scalar or a 1-D array.
    """
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    s = _require_s_below_one(s)
    spec = spec or QuadratureSpec()
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    scalar = np.ndim(phi) == 0

    r_nodes, r_weights = _radial_rule(state, s, spec)
    a_nodes, a_weight = _angular_rule(spec)

    fixed = phi_arr[:, None, None, None]
    other = a_nodes[None, :, None, None]
    r_g = r_nodes[None, None, :, None]
    r_d = r_nodes[None, None, None, :]
    if branch == "plus":
        values = w_symmetrized(state, r_g, r_d, fixed, other, s)
    else:
        values = w_symmetrized(state, r_g, r_d, other, fixed, s)
    integrand = r_g * r_d * values
    out = a_weight * np.einsum("pars,r,s->p", integrand, r_weights, r_weights)
    return float(out[0]) if scalar else out


def quadrature_normalization(
    state: QuasiBellState, s: float, spec: QuadratureSpec | None = None
) -> float:
    """Full four-variable quadrature of |gamma||delta| W_sym; expected 1.

    Evaluated in slabs over the gamma radius to bound memory.
    """
    s = _require_s_below_one(s)
    spec = spec or QuadratureSpec()
    r_nodes, r_weights = _radial_rule(state, s, spec)
    a_nodes, a_weight = _angular_rule(spec)

    r_d = r_nodes[:, None, None]
    plus = a_nodes[None, :, None]
    minus = a_nodes[None, None, :]
    slabs = []
    for r_g, w_g in zip(r_nodes, r_weights):
        values = w_symmetrized(state, r_g, r_d, plus, minus, s)
        inner = np.einsum("ras,r->", r_d * values, r_weights)
        slabs.append(w_g * r_g * float(inner))
    return a_weight**2 * math.fsum(slabs)


def quadrature_one_mode(
    state: QuasiBellState,
    s: float,
    mode: int,
    phi,
    spec: QuadratureSpec | None = None,
):
    """Marginal one-mode phase density at phi, by direct quadrature of W.

    Integrates the raw (unsymmetrized) W over the full complex plane of the
    other mode and over the mode's own radius, at fixed own angle phi.
    """
    if mode not in (1, 2):
        raise DomainError(f"mode must be 1 or 2, got {mode!r}")
    s = _require_s_below_one(s)
    spec = spec or QuadratureSpec()
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    scalar = np.ndim(phi) == 0

    r_nodes, r_weights = _radial_rule(state, s, spec)
    a_nodes, a_weight = _angular_rule(spec)

    own_angle = phi_arr[:, None, None, None]
    other_angle = a_nodes[None, :, None, None]
    r_own = r_nodes[None, None, :, None]
    r_other = r_nodes[None, None, None, :]
    own = r_own * np.exp(1j * own_angle)
    other = r_other * np.exp(1j * other_angle)
    if mode == 1:
        values = w(state, own, other, s)
    else:
        values = w(state, other, own, s)
    integrand = r_own * r_other * values
    out = a_weight * np.einsum("pars,r,s->p", integrand, r_weights, r_weights)
    return float(out[0]) if scalar else out


class FockChiResult(NamedTuple):
    """Characteristic-function value from the Fock trace, with error bound."""

    value: complex
    bound: float


def _coherent_vector(alpha: complex, n_cut: int) -> np.ndarray:
    """Number-basis coefficients of |alpha> up to n_cut."""
    coeffs = np.empty(n_cut + 1, dtype=complex)
    coeffs[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, n_cut + 1):
        coeffs[n] = coeffs[n - 1] * alpha / math.sqrt(n)
    return coeffs


def _displacement_matrix(xi: complex, n_cut: int) -> np.ndarray:
    """Number-basis matrix of the one-mode displacement operator D(xi).

    For m >= n:  D_mn = sqrt(n!/m!) xi^(m-n) e^(-|xi|^2/2) L_n^(m-n)(|xi|^2);
    the upper triangle follows from D(xi)^dagger = D(-xi).
    """
    dim = n_cut + 1
    if xi == 0:
        return np.eye(dim, dtype=complex)

    def lower(z: complex) -> np.ndarray:
        rows = np.arange(dim)[:, None]
        cols = np.arange(dim)[None, :]
        diff = np.maximum(rows - cols, 0)
        zsq = abs(z) ** 2
        log_mag = np.where(
            rows >= cols,
            0.5 * (gammaln(cols + 1.0) - gammaln(rows + 1.0))
            + diff * math.log(abs(z))
            - 0.5 * zsq,
            -np.inf,
        )
        return np.exp(log_mag) * eval_genlaguerre(cols, diff, zsq) * np.exp(
            1j * np.angle(z) * diff
        )

    low = lower(xi)
    upp = lower(-xi).conj().T
    np.fill_diagonal(upp, 0.0)
    return low + upp


def _poisson_tail(mean: float, n_cut: int) -> float:
    """P(N > n_cut) for N ~ Poisson(mean)."""
    return float(gammainc(n_cut + 1, mean))


def fock_chi_oracle(
    state: QuasiBellState, xi: complex, eta: complex, s: float, n_cut: int = 40
) -> FockChiResult:
    """Characteristic function via a truncated number-basis trace of rho D(xi, eta).

    The four pure-state overlap terms <+-alpha, +-beta| D |+-alpha, +-beta>
    are assembled from truncated coherent vectors and the exact number-basis
    displacement matrices, then multiplied by the s-ordering factor
    exp(s(|xi|^2+|eta|^2)/2).  A rigorous truncation bound (driven by the
    coherent tails beyond n_cut; take n_cut >= 4 max(|alpha|^2, |beta|^2) + 20
    for comfortable margins) is returned alongside and must stay below
    ``FOCK_BOUND_TOL``.
    """
    if not isinstance(n_cut, int) or isinstance(n_cut, bool) or n_cut < 1:
        raise DomainError(f"n_cut must be an integer >= 1, got {n_cut!r}")
    s = float(s)
    if not math.isfinite(s):
        raise DomainError(f"ordering parameter must be finite, got {s!r}")
    xi = complex(xi)
    eta = complex(eta)

    vec_a = np.column_stack(
        [_coherent_vector(state.alpha, n_cut), _coherent_vector(-state.alpha, n_cut)]
    )
    vec_b = np.column_stack(
        [_coherent_vector(state.beta, n_cut), _coherent_vector(-state.beta, n_cut)]
    )
    overlap_a = vec_a.conj().T @ _displacement_matrix(xi, n_cut) @ vec_a
    overlap_b = vec_b.conj().T @ _displacement_matrix(eta, n_cut) @ vec_b

    mu, nu = state.mu, state.nu
    weights = np.array(
        [
            [np.conj(mu) * mu, np.conj(mu) * nu],
            [np.conj(nu) * mu, np.conj(nu) * nu],
        ]
    )
    n2 = normalization_constant(state) ** 2
    prefactor = math.exp(0.5 * s * (abs(xi) ** 2 + abs(eta) ** 2))
    value = prefactor * n2 * complex(np.sum(weights * overlap_a * overlap_b))

    err_a = 2.0 * math.sqrt(_poisson_tail(abs(state.alpha) ** 2, n_cut))
    err_b = 2.0 * math.sqrt(_poisson_tail(abs(state.beta) ** 2, n_cut))
    per_term = err_a + err_b + err_a * err_b
    bound = prefactor * n2 * (abs(mu) + abs(nu)) ** 2 * per_term
    if bound > FOCK_BOUND_TOL:
        raise CutoffTooSmallError(
            f"Fock truncation bound {bound:.3e} exceeds {FOCK_BOUND_TOL:g} at "
            f"n_cut={n_cut}; increase the cutoff"
        )
    return FockChiResult(value=value, bound=bound)
