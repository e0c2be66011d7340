"""Watching the photons keeps them apart: the Zeno error curve.

Interrupting the half-transfer evolution N times with "are two photons in
one core?" checks suppresses the bunching error as P_E = 1 - cos^(2N)(pi/2N)
~ pi^2/(4N).  Replacing the checks with continuous two-photon absorption of
decay time tau_d does very nearly the same thing once plotted against the
matched count N = t/(4 tau_d) -- no actual measurement needed, just a
nonlinear loss that only fires on double occupancy.
"""

import numpy as np

from zenogate import closed_form_error, error_curve

grid = [1, 2, 5, 10, 20, 50, 100]
discrete = dict(error_curve("discrete", grid))
absorption = dict(error_curve("absorption", [n for n in grid if n >= 5]))

print("   N    discrete P_E   closed form    absorption P_E")
for n in grid:
    closed = closed_form_error(n)
    right = f"{absorption[n]:12.6f}" if n in absorption else "           -"
    print(f" {n:4d}   {discrete[n]:12.6f}  {closed:12.6f}   {right}")

print()
print("large-N scaling: N * P_E ->", f"{1000 * closed_form_error(1000):.4f}",
      "(pi^2/4 =", f"{np.pi ** 2 / 4:.4f})")
