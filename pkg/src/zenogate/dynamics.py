"""State propagation for the coupled-core system.

Three layers, all in hbar/eps time units:

* unitary Schroedinger evolution under a (time-independent) Hermitian
  Hamiltonian, exp(-i H t) |psi>;
* projective "no two photons in one core" measurements, which zero the
  doubly-occupied amplitudes and report the survival probability;
* density-matrix evolution with two-photon absorption, where the states
  holding two photons in one core lose population at 1/tau_d into an
  unmodeled quasi-continuum of excited atomic states.

The absorption channel decays each doubly-occupied *amplitude* at
1/(2 tau_d).  Matrix elements therefore decay at the sum of the amplitude
rates of their two indices: populations of absorbed states at 1/tau_d,
coherences between an absorbed and a surviving state at 1/(2 tau_d), and
the coherence between the two absorbed states at 1/tau_d.  That is the
unique local choice whose strong-absorption limit reproduces the discrete
measurement protocol with the matched measurement count N = t / (4 tau_d);
equivalently the equation of motion is

    drho/dt = -i (H_eff rho - rho H_eff^dag),   H_eff = H - (i/2) Gamma

with Gamma diagonal.  Absorbed population leaves the simulated space and is
tallied, never tracked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fock import FockBasis, is_hermitian, matrix_exponential


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over a :class:`FockBasis`."""

    basis: FockBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.basis.dim,):
            raise ValueError(f"expected {self.basis.dim} amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis_state(cls, basis: FockBasis, occupations: tuple[int, ...]) -> "StateVector":
        return cls(basis, basis.unit_vector(occupations))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probability(self, occupations: tuple[int, ...]) -> float:
        return float(abs(self.amplitudes[self.basis.index_of(occupations)]) ** 2)

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero state")
        return StateVector(self.basis, self.amplitudes / n)


def double_occupancy_indices(basis: FockBasis) -> tuple[int, ...]:
    """Indices of basis states with two or more photons in a single mode."""
    return tuple(i for i, s in enumerate(basis.states) if max(s.occupations) >= 2)


def evolve_state(h: np.ndarray, psi0: StateVector, t: float) -> StateVector:
    """exp(-i H t) |psi0> for Hermitian H (hbar = 1 in hbar/eps units)."""
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("evolve_state requires a Hermitian Hamiltonian")
    u = matrix_exponential(h, scale=-1j * t)
    return StateVector(psi0.basis, u @ psi0.amplitudes)


def project_no_double_occupancy(psi: StateVector) -> tuple[StateVector | None, float]:
    """Measure "no core holds two photons" and keep the negative outcome.

    Returns ``(survivor, success_probability)`` where the survivor is
    renormalized and the success probability is the squared norm of the raw
    survivor, so callers can reconstruct the unnormalized post-measurement
    state (needed for unconditional quantities) as sqrt(p) * survivor.
    Computed as 1 minus the leaked weight, which keeps the success exactly
    1.0 when no amplitude sits on a checked state.  A zero survivor is
    reported as ``(None, 0.0)`` rather than raising.
    """
    norm_sq = float(np.linalg.norm(psi.amplitudes) ** 2)
    if abs(norm_sq - 1.0) > 1e-6:
        raise ValueError("projection expects a normalized state")
    forbidden = list(double_occupancy_indices(psi.basis))
    p_fail = float(np.sum(np.abs(psi.amplitudes[forbidden]) ** 2))
    p_success = 1.0 - p_fail
    survivor_norm_sq = norm_sq - p_fail
    if p_success <= 0.0 or survivor_norm_sq <= 0.0:
        return None, 0.0
    survivor = psi.amplitudes.copy()
    survivor[forbidden] = 0.0
    return StateVector(psi.basis, survivor / np.sqrt(survivor_norm_sq)), p_success


@dataclass(frozen=True)
class AbsorptionChannel:
    """Two-photon absorption sink acting on the doubly-occupied states."""

    tau_d: float
    absorbed_indices: tuple[int, ...]

    def __post_init__(self):
        if not self.tau_d > 0:
            raise ValueError("tau_d must be positive")

    @classmethod
    def for_basis(cls, basis: FockBasis, tau_d: float) -> "AbsorptionChannel":
        return cls(tau_d=tau_d, absorbed_indices=double_occupancy_indices(basis))

    def rate_vector(self, dim: int) -> np.ndarray:
        """Per-state population decay rates (1/tau_d on absorbed states)."""
        rates = np.zeros(dim)
        if np.isfinite(self.tau_d):
            rates[list(self.absorbed_indices)] = 1.0 / self.tau_d
        return rates


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-tracked state; trace decreases only via absorption."""

    basis: FockBasis
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.basis.dim, self.basis.dim):
            raise ValueError(f"expected a {self.basis.dim}x{self.basis.dim} matrix")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def pure(cls, psi: StateVector) -> "DensityMatrix":
        return cls(psi.basis, np.outer(psi.amplitudes, psi.amplitudes.conj()))

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def population(self, occupations: tuple[int, ...]) -> float:
        i = self.basis.index_of(occupations)
        return float(np.real(self.matrix[i, i]))

    def validate(self, herm_tol: float = 1e-10, eig_tol: float = 1e-9) -> None:
        m = self.matrix
        if np.max(np.abs(m - m.conj().T)) > herm_tol:
            raise ValueError("density matrix is not Hermitian within tolerance")
        if np.min(np.linalg.eigvalsh(0.5 * (m + m.conj().T))) < -eig_tol:
            raise ValueError("density matrix has a negative eigenvalue beyond tolerance")
        if not -eig_tol <= self.trace() <= 1.0 + eig_tol:
            raise ValueError(f"trace {self.trace()} outside [0, 1]")


@dataclass(frozen=True)
class EvolutionRecord:
    """Sampled trajectory of an absorption run, for bookkeeping checks."""

    times: np.ndarray
    traces: np.ndarray
    absorbed: np.ndarray  # cumulative probability lost to the sink


def default_step(t: float, channel: AbsorptionChannel) -> float:
    """Fixed RK4 step: resolve the fastest decay rate by 10x.

    min(0.01, tau_d/10, t/1000); the tau_d term is dropped when the channel
    is disabled (tau_d = inf).
    """
    candidates = [0.01, t / 1000.0]
    if np.isfinite(channel.tau_d):
        candidates.append(channel.tau_d / 10.0)
    return min(candidates)


def evolve_density_matrix(
    h: np.ndarray,
    rho0: DensityMatrix,
    t: float,
    channel: AbsorptionChannel,
    dt: float | None = None,
    with_record: bool = False,
) -> DensityMatrix | tuple[DensityMatrix, EvolutionRecord]:
    """Integrate drho/dt = -i[H, rho] - D(rho) with fixed-step RK4.

    D applies rate 1/tau_d to absorbed-state populations and 1/(2 tau_d) to
    each absorbed amplitude index (see module docstring).  The cumulative
    absorbed probability is integrated alongside rho with the same RK4
    stages, so trace(rho) + absorbed stays at 1 to integrator accuracy.

    An explicit ``dt`` larger than min(0.01, tau_d/10) is rejected; the
    final state is checked for positivity to 1e-6 as an integrator
    diagnostic.
    """
    h = np.asarray(h, dtype=complex)
    rho0.validate()
    if t < 0:
        raise ValueError("duration must be nonnegative")

    limit = 0.01 if not np.isfinite(channel.tau_d) else min(0.01, channel.tau_d / 10.0)
    if dt is None:
        dt = default_step(t, channel) if t > 0 else limit
    elif dt > limit * (1 + 1e-12):
        raise ValueError(f"dt={dt} exceeds the stability limit min(0.01, tau_d/10)={limit}")

    rates = channel.rate_vector(rho0.basis.dim)
    # Elementwise decay table: entry (i, j) decays at (rates_i + rates_j)/2.
    decay = 0.5 * (rates[:, None] + rates[None, :])

    def rhs(rho):
        return -1j * (h @ rho - rho @ h) - decay * rho

    def absorbed_rate(rho):
        return float(np.real(np.sum(rates * np.diag(rho))))

    n_steps = max(1, int(np.ceil(t / dt))) if t > 0 else 0
    step = t / n_steps if n_steps else 0.0

    rho = rho0.matrix.copy()
    absorbed = 0.0
    times, traces, tallies = [0.0], [float(np.real(np.trace(rho)))], [0.0]
    for k in range(n_steps):
        k1 = rhs(rho)
        k2 = rhs(rho + 0.5 * step * k1)
        k3 = rhs(rho + 0.5 * step * k2)
        k4 = rhs(rho + step * k3)
        s1 = absorbed_rate(rho)
        s2 = absorbed_rate(rho + 0.5 * step * k1)
        s3 = absorbed_rate(rho + 0.5 * step * k2)
        s4 = absorbed_rate(rho + step * k3)
        rho = rho + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        absorbed += (step / 6.0) * (s1 + 2 * s2 + 2 * s3 + s4)
        if with_record:
            times.append((k + 1) * step)
            traces.append(float(np.real(np.trace(rho))))
            tallies.append(absorbed)

    result = DensityMatrix(rho0.basis, rho)
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    if min_eig < -1e-6:
        raise ValueError(f"integrator produced eigenvalue {min_eig} < -1e-6")
    if not with_record:
        return result
    record = EvolutionRecord(np.array(times), np.array(traces), np.array(tallies))
    return result, record


def absorption_propagator(h: np.ndarray, channel: AbsorptionChannel, t: float) -> np.ndarray:
    """exp(-i (H - i Gamma/2) t), the closed form behind the RK4 equation.

    For a pure initial state the master equation above is exactly
    rho(t) = V rho0 V^dag with this V, so the conditional (not-yet-absorbed)
    state stays pure; the propagator doubles as an independent oracle for
    the integrator and as the amplitude-level route used by gate extraction.
    """
    h = np.asarray(h, dtype=complex)
    gamma = channel.rate_vector(h.shape[0])
    h_eff = h - 0.5j * np.diag(gamma)
    return matrix_exponential(h_eff, scale=-1j * t)
