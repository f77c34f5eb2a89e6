"""Build two-mode cat states and inspect their normalization.

The states are superpositions  mu|alpha,beta> + nu|-alpha,-beta>  of
two-mode coherent states.  Because the two branches are not orthogonal,
the normalization constant N depends on Re(mu nu*) and on the coherent
amplitudes; it differs noticeably from 1 only while the amplitudes are
small.
"""

import numpy as np

from catphase import (
    NullStateError,
    QuasiBellState,
    make_preset,
    normalization_constant,
    validate_params,
)

print("Normalization constant vs amplitude, for each preset")
print(f"{'|alpha|':>8s}  {'even_cat':>10s}  {'odd_cat':>10s}  {'yurke_stoler':>12s}")
for amp in (0.0, 0.25, 0.5, 1.0, 2.0, 4.0):
    row = [f"{amp:8.2f}"]
    for preset in ("even_cat", "odd_cat", "yurke_stoler_plus"):
        try:
            n = normalization_constant(make_preset(preset, amp, amp))
            row.append(f"{n:10.6f}")
        except NullStateError:
            row.append(f"{'null':>10s}")
    print("  ".join(row[:3]) + f"  {row[3]:>12s}")

print()
print("The odd cat at alpha = beta = 0 is the zero vector:")
print(" ", validate_params(0.0, 0.0, 2**-0.5, -(2**-0.5))[0])

print()
print("Weights only enter through |mu|^2 - |nu|^2, Re(mu nu*), Im(mu nu*).")
print("A generic normalized weight pair works just as well as a preset:")
state = QuasiBellState(1.0, 0.5j, mu=0.8, nu=0.6j)
print(f"  mu = {state.mu}, nu = {state.nu}")
print(f"  N = {normalization_constant(state):.9f}")
print(f"  mu nu* = {state.mu * np.conj(state.nu)}")
