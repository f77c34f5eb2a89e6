import math

import pytest

from catphase import PRESET_WEIGHTS, QuasiBellState

PRESETS = tuple(sorted(PRESET_WEIGHTS))


def preset_state(kind: str, amp: float = 1.0) -> QuasiBellState:
    """Preset state with real amplitudes alpha = beta = amp."""
    mu, nu = PRESET_WEIGHTS[kind]
    return QuasiBellState(alpha=amp, beta=amp, mu=mu, nu=nu)


@pytest.fixture(params=PRESETS)
def any_preset(request) -> str:
    return request.param


TWO_PI = 2.0 * math.pi
