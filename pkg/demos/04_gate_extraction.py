"""From protocol runs to a two-qubit gate, and on to controlled-Z.

Running the Zeno-protected half-transfer device on all four computational
inputs (photon present = 1) and adding a pi/4 phase per photon on each
output port assembles a square-root-of-swap carrying an extra i on |11>.
Squaring it gives a swap with a sign flip on |11>; physically crossing the
fibers afterwards cancels the swap and leaves a controlled-Z, which plus
single-photon rotations is universal.
"""

import numpy as np

from zenogate import ZenoProtocol, compose_controlled_z, extract_gate
from zenogate.gate import phased_sqrt_swap_matrix


def show(label, matrix):
    print(label)
    for row in matrix:
        print("   " + "  ".join(f"{v.real:+.3f}{v.imag:+.3f}i" for v in row))


for n in (1, 5, 50, 1000):
    report = extract_gate(ZenoProtocol.discrete(n))
    dist = np.max(np.abs(report.conditional_map - phased_sqrt_swap_matrix()))
    print(
        f"N = {n:5d}: success(|11>) = {1 - report.error_probability:.6f}, "
        f"fidelity = {report.fidelity_to_target:.6f}, "
        f"distance to target = {dist:.2e}"
    )

print()
report = extract_gate(ZenoProtocol.discrete(1000))
show("conditional map at N = 1000 (columns |00>, |01>, |10>, |11>):", report.conditional_map)
print()
show("swap o squared-gate = controlled-Z:", compose_controlled_z())
