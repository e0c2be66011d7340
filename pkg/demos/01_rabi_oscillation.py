"""A single photon sloshing between two coupled fiber cores.

Two fiber cores running side by side exchange light through their
evanescent overlap, so a photon launched into core 1 tunnels back and
forth exactly like a driven two-level atom: P1(t) = cos^2(t) in units
where the coupling energy is 1.  Full transfer happens at t = pi/2; the
half-transfer point t = pi/4 is where the swap-gate story starts.
"""

import numpy as np

from zenogate import rabi_curve

ts = np.linspace(0.0, 2 * np.pi, 17)
rows = rabi_curve(ts)

print("  t/pi     P1(sim)    cos^2(t)   |diff|")
for t, p1 in rows:
    exact = np.cos(t) ** 2
    print(f"  {t / np.pi:5.3f}   {p1:8.6f}   {exact:8.6f}   {abs(p1 - exact):.1e}")

print()
print("full transfer at t = pi/2:", f"P1 = {rabi_curve([np.pi / 2])[0][1]:.2e}")
print("half transfer at t = pi/4:", f"P1 = {rabi_curve([np.pi / 4])[0][1]:.6f}")
