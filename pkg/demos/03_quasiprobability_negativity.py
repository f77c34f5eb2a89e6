"""Ordering dependence of the quasi-probability distribution.

For s <= -1 the distribution W(gamma, delta; s) is non-negative; for
-1 < s < 1 the interference terms of a cat state can push it negative.
The classic signature: for the odd cat, W at the phase-space origin is
exactly -4/pi^2 at s = 0, independent of the amplitude.
"""

import math

import numpy as np

from catphase import make_preset, w

state = make_preset("odd_cat", 1.0, 1.0)

print("W(0, 0; s) for the odd cat at |alpha| = |beta| = 1:")
for s in (-2.0, -1.0, -0.5, 0.0, 0.4):
    print(f"  s = {s:5.1f}:  {w(state, 0.0, 0.0, s):+.6f}")
print(f"  (-4/pi^2 = {-4 / math.pi**2:+.6f})")

# Scan a line gamma = delta = t (1 + i)/sqrt(2) through the origin.
ts = np.linspace(-2.0, 2.0, 9)
line = ts * (1.0 + 1.0j) / math.sqrt(2.0)
print("\nCut through the origin along gamma = delta = t (1+i)/sqrt(2):")
print(f"{'t':>6s} {'s = -1':>12s} {'s = 0':>12s} {'s = 0.4':>12s}")
for t, g in zip(ts, line):
    row = [w(state, g, g, s) for s in (-1.0, 0.0, 0.4)]
    print(f"{t:6.2f} {row[0]:12.6f} {row[1]:12.6f} {row[2]:12.6f}")

print("\nGrid minima over |gamma|, |delta| <= 3 (the s <= -1 rows stay non-negative):")
r = np.linspace(0, 3, 31)
ang = np.linspace(0, 2 * math.pi, 8, endpoint=False)
gamma = (r[:, None, None, None] * np.exp(1j * ang[None, None, :, None]))
delta = (r[None, :, None, None] * np.exp(1j * ang[None, None, None, :]))
for s in (-1.5, -1.0, -0.5, 0.0):
    print(f"  s = {s:5.1f}: min W = {np.min(w(state, gamma, delta, s)):+.6f}")
