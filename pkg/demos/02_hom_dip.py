"""Why the bare half-transfer device fails on two photons.

Launch one photon into each core and the coincidence probability follows
P11(t) = cos^2(2t): at the half-transfer time t = pi/4 the photons are
never found one per core -- they always bunch into the same core.  This is
the coupled-core version of the Hong-Ou-Mandel dip, and it is exactly the
failure mode the Zeno protocols suppress.
"""

import numpy as np

from zenogate import StateVector, enumerate_basis, evolve_state, hom_curve
from zenogate.fock import coupling_hamiltonian

print("coincidence probability, one photon per core at t = 0")
print("  t/pi     P11(sim)   cos^2(2t)")
for t, p11 in hom_curve(np.linspace(0, np.pi / 4, 9)):
    print(f"  {t / np.pi:5.3f}   {p11:8.6f}   {np.cos(2 * t) ** 2:8.6f}")

# Where did the photons go at the dip?  Entirely into |2,0> and |0,2>.
basis = enumerate_basis(2, 2)
h = coupling_hamiltonian(1.0, basis)
psi = evolve_state(h, StateVector.basis_state(basis, (1, 1)), np.pi / 4)
print()
print("state at the dip (t = pi/4):")
for state, amp in zip(basis.states, psi.amplitudes):
    if abs(amp) > 1e-12:
        print(f"  {state}  amplitude {amp:+.4f}")
