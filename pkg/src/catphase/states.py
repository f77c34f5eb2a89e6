"""Two-mode Schrödinger-cat states: construction, presets, normalization.

The central object is :class:`QuasiBellState`, the superposition

    mu |alpha, beta>  +  nu |-alpha, -beta>

of two-mode coherent states, with complex weights restricted by
|mu|^2 + |nu|^2 = 1.  All quantities downstream (characteristic function,
quasi-probability distributions, phase distributions) are parameterized by
this state.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import InitVar, dataclass

from .errors import NullStateError

__all__ = [
    "QuasiBellState",
    "PRESET_WEIGHTS",
    "make_preset",
    "normalization_constant",
    "validate_params",
    "validate",
    "params_from_descriptor",
    "state_from_descriptor",
    "state_to_descriptor",
]

# Tolerance for the |mu|^2 + |nu|^2 = 1 constraint at construction.
WEIGHT_NORM_TOL = 1e-12

# States whose squared norm falls at or below this are rejected as the
# zero vector (only the odd cat at alpha = beta = 0 and its immediate
# floating-point neighborhood can get here).
NULL_RADICAND_FLOOR = 1e-300

# The radicand 1 + 2 Re(mu nu*) exp(...) carries an absolute rounding error
# of a few ulps of its leading terms; computed values below that noise have
# no correct digits and are likewise treated as null.
_RADICAND_NOISE_ULPS = 16.0 * 2.220446049250313e-16


def _radicand_is_null(radicand: float, interference: float) -> bool:
    return radicand <= NULL_RADICAND_FLOOR or radicand < _RADICAND_NOISE_ULPS * (
        1.0 + 2.0 * abs(interference)
    )

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Superposition weights (mu, nu) of the named preset states.
PRESET_WEIGHTS = {
    "even_cat": (_INV_SQRT2 + 0j, _INV_SQRT2 + 0j),
    "odd_cat": (_INV_SQRT2 + 0j, -_INV_SQRT2 + 0j),
    "yurke_stoler_plus": (_INV_SQRT2 + 0j, _INV_SQRT2 * 1j),
    "yurke_stoler_minus": (_INV_SQRT2 + 0j, -_INV_SQRT2 * 1j),
}


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def validate_params(alpha: complex, beta: complex, mu: complex, nu: complex) -> list[str]:
    """Check the state invariants on raw parameters.

    Returns a list of human-readable diagnostics with measured residuals;
    an empty list means the parameters describe a valid state.  Nothing is
    raised here, so this can be used to inspect bad inputs.
    """
    diagnostics = []
    for name, z in (("alpha", alpha), ("beta", beta), ("mu", mu), ("nu", nu)):
        if not _finite(complex(z)):
            diagnostics.append(f"{name} is not finite: {z!r}")
    if diagnostics:
        return diagnostics

    alpha, beta, mu, nu = complex(alpha), complex(beta), complex(mu), complex(nu)
    weight_norm = abs(mu) ** 2 + abs(nu) ** 2
    if abs(weight_norm - 1.0) > WEIGHT_NORM_TOL:
        diagnostics.append(
            f"|mu|^2+|nu|^2 = {weight_norm!r} differs from 1 by "
            f"{abs(weight_norm - 1.0):.3e} (tolerance {WEIGHT_NORM_TOL:g})"
        )
    radicand, interference = _radicand(alpha, beta, mu, nu)
    if _radicand_is_null(radicand, interference):
        diagnostics.append(
            f"non-normalizable: 1 + 2 Re(mu nu*) exp(-2(|alpha|^2+|beta|^2)) = "
            f"{radicand!r} is null to working precision"
        )
    return diagnostics


def _radicand(alpha: complex, beta: complex, mu: complex, nu: complex) -> tuple[float, float]:
    """Squared norm 1 + 2 Re(mu nu*) exp(-2(...)) and its interference part."""
    asq = abs(alpha) ** 2 + abs(beta) ** 2
    interference = (mu * nu.conjugate()).real * math.exp(-2.0 * asq)
    return 1.0 + 2.0 * interference, interference


@dataclass(frozen=True)
class QuasiBellState:
    """Normalizable superposition mu|alpha,beta> + nu|-alpha,-beta>.

    Parameters
    ----------
    alpha, beta : complex
        Coherent amplitudes of mode 1 and mode 2.
    mu, nu : complex
        Superposition weights, |mu|^2 + |nu|^2 = 1 (within 1e-12).
    renormalize : bool, optional
        If True, rescale (mu, nu) onto the unit circle of weight norm
        instead of rejecting weights that miss it.

    Raises
    ------
    ValueError
        Non-finite parameters or weight norm off by more than the tolerance.
    NullStateError
        The superposition has zero norm (odd cat at alpha = beta = 0).

    Instances are immutable; all operations on them are pure functions.
    """

    alpha: complex
    beta: complex
    mu: complex
    nu: complex
    renormalize: InitVar[bool] = False

    def __post_init__(self, renormalize: bool) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "nu", complex(self.nu))
        if renormalize:
            norm = math.hypot(abs(self.mu), abs(self.nu))
            if norm == 0.0 or not math.isfinite(norm):
                raise ValueError("cannot renormalize weights with zero or non-finite norm")
            object.__setattr__(self, "mu", self.mu / norm)
            object.__setattr__(self, "nu", self.nu / norm)
        problems = validate_params(self.alpha, self.beta, self.mu, self.nu)
        if problems:
            if any("non-normalizable" in p for p in problems):
                raise NullStateError("; ".join(problems))
            raise ValueError("; ".join(problems))

    @property
    def weight_overlap(self) -> complex:
        """The product mu nu* controlling all interference terms."""
        return self.mu * self.nu.conjugate()

    @property
    def amplitude_sq_sum(self) -> float:
        """|alpha|^2 + |beta|^2."""
        return abs(self.alpha) ** 2 + abs(self.beta) ** 2


def normalization_constant(state: QuasiBellState) -> float:
    """Normalization constant N = {1 + 2 Re(mu nu*) exp[-2(|alpha|^2+|beta|^2)]}^(-1/2)."""
    radicand, interference = _radicand(state.alpha, state.beta, state.mu, state.nu)
    if _radicand_is_null(radicand, interference):
        raise NullStateError(
            f"state norm radicand {radicand!r} is null to working precision; "
            "the superposition is the zero vector"
        )
    return radicand ** -0.5


def make_preset(kind: str, alpha: complex, beta: complex) -> QuasiBellState:
    """Build one of the named preset states.

    ``kind`` is one of ``even_cat``, ``odd_cat``, ``yurke_stoler_plus``,
    ``yurke_stoler_minus``, i.e. weights (1, 1)/sqrt2, (1, -1)/sqrt2,
    (1, i)/sqrt2 and (1, -i)/sqrt2 respectively.
    """
    try:
        mu, nu = PRESET_WEIGHTS[kind]
    except KeyError:
        valid = ", ".join(sorted(PRESET_WEIGHTS))
        raise ValueError(f"unknown preset {kind!r}; expected one of: {valid}") from None
    return QuasiBellState(alpha=alpha, beta=beta, mu=mu, nu=nu)


def validate(state: QuasiBellState) -> list[str]:
    """Re-measure the invariants of an existing state (normally empty)."""
    return validate_params(state.alpha, state.beta, state.mu, state.nu)


def _complex_from_polar(entry: dict, key: str) -> complex:
    try:
        mag = float(entry["abs"])
        arg = float(entry["arg"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{key!r} must be an object with numeric 'abs' and 'arg'") from exc
    return cmath.rect(mag, arg)


def _complex_from_cartesian(entry: dict, key: str) -> complex:
    try:
        return complex(float(entry["re"]), float(entry["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{key!r} must be an object with numeric 're' and 'im'") from exc


def params_from_descriptor(descriptor: dict) -> tuple[complex, complex, complex, complex]:
    """Resolve a JSON descriptor to raw (alpha, beta, mu, nu) without validating."""
    if not isinstance(descriptor, dict):
        raise ValueError("state descriptor must be a JSON object")
    if "alpha" not in descriptor or "beta" not in descriptor:
        raise ValueError("state descriptor needs polar 'alpha' and 'beta' entries")
    alpha = _complex_from_polar(descriptor["alpha"], "alpha")
    beta = _complex_from_polar(descriptor["beta"], "beta")

    if "preset" in descriptor:
        if "mu" in descriptor or "nu" in descriptor:
            raise ValueError("give either 'preset' or explicit 'mu'/'nu', not both")
        kind = str(descriptor["preset"])
        if kind not in PRESET_WEIGHTS:
            valid = ", ".join(sorted(PRESET_WEIGHTS))
            raise ValueError(f"unknown preset {kind!r}; expected one of: {valid}")
        mu, nu = PRESET_WEIGHTS[kind]
    else:
        if "mu" not in descriptor or "nu" not in descriptor:
            raise ValueError("state descriptor needs 'preset' or both 'mu' and 'nu'")
        mu = _complex_from_cartesian(descriptor["mu"], "mu")
        nu = _complex_from_cartesian(descriptor["nu"], "nu")
    return alpha, beta, mu, nu


def state_from_descriptor(descriptor: dict) -> QuasiBellState:
    """Build a state from its JSON descriptor.

    The descriptor carries either ``{"preset": "<tag>"}`` or explicit weights
    ``{"mu": {"re":..,"im":..}, "nu": {...}}``, plus polar amplitudes
    ``{"alpha": {"abs":..,"arg":..}, "beta": {...}}`` (angles in radians).
    An optional ``"renormalize": true`` rescales explicit weights.
    """
    alpha, beta, mu, nu = params_from_descriptor(descriptor)
    return QuasiBellState(
        alpha=alpha,
        beta=beta,
        mu=mu,
        nu=nu,
        renormalize=bool(descriptor.get("renormalize", False)),
    )


def state_to_descriptor(state: QuasiBellState) -> dict:
    """Serialize a state to the explicit-weight descriptor form."""
    return {
        "alpha": {"abs": abs(state.alpha), "arg": cmath.phase(state.alpha)},
        "beta": {"abs": abs(state.beta), "arg": cmath.phase(state.beta)},
        "mu": {"re": state.mu.real, "im": state.mu.imag},
        "nu": {"re": state.nu.real, "im": state.nu.imag},
    }
