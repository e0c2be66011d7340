import numpy as np
import pytest

from zenogate.fock import (
    FockBasis,
    FockState,
    annihilation_matrix,
    coupling_hamiltonian,
    creation_matrix,
    enumerate_basis,
    matrix_exponential,
    number_operator,
)


def test_enumerate_basis_two_modes_two_photons():
    basis = enumerate_basis(2, 2)
    assert [s.occupations for s in basis.states] == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0),
    ]
    assert basis.dim == 6


def test_enumerate_basis_vacuum_only():
    basis = enumerate_basis(1, 0)
    assert [s.occupations for s in basis.states] == [(0,)]


def test_enumerate_basis_single_photon_cap():
    basis = enumerate_basis(2, 1)
    assert [s.occupations for s in basis.states] == [(0, 0), (0, 1), (1, 0)]


def test_enumeration_is_deterministic():
    a = enumerate_basis(2, 2)
    b = enumerate_basis(2, 2)
    assert a.states == b.states


def test_basis_rejects_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_basis(0, 2)
    with pytest.raises(ValueError):
        enumerate_basis(2, -1)
    with pytest.raises(ValueError):
        FockState((-1, 0))


def test_creation_matrix_single_quantum():
    basis = enumerate_basis(2, 2)
    a1d = creation_matrix(1, basis)
    assert a1d[basis.index_of((1, 0)), basis.index_of((0, 0))] == 1.0


def test_creation_matrix_bosonic_normalization():
    basis = enumerate_basis(2, 2)
    a1d = creation_matrix(1, basis)
    got = a1d[basis.index_of((2, 0)), basis.index_of((1, 0))]
    assert got == pytest.approx(np.sqrt(2), abs=1e-15)


def test_creation_matrix_truncation_gives_zero_column():
    basis = enumerate_basis(2, 2)
    a1d = creation_matrix(1, basis)
    assert np.all(a1d[:, basis.index_of((2, 0))] == 0.0)


def test_creation_matrix_rejects_bad_mode():
    basis = enumerate_basis(2, 2)
    with pytest.raises(ValueError):
        creation_matrix(0, basis)
    with pytest.raises(ValueError):
        creation_matrix(3, basis)


def test_coupling_single_photon_block():
    basis = enumerate_basis(2, 2)
    eps = 0.7
    h = coupling_hamiltonian(eps, basis)
    i01, i10 = basis.index_of((0, 1)), basis.index_of((1, 0))
    block = h[np.ix_([i10, i01], [i10, i01])]
    assert np.allclose(block, eps * np.array([[0, 1], [1, 0]]), atol=1e-15)


def test_coupling_two_photon_block():
    basis = enumerate_basis(2, 2)
    h = coupling_hamiltonian(1.0, basis)
    order = [basis.index_of(o) for o in ((1, 1), (2, 0), (0, 2))]
    block = h[np.ix_(order, order)]
    expected = np.sqrt(2) * np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    assert np.allclose(block, expected, atol=1e-15)


def test_coupling_zero_epsilon():
    basis = enumerate_basis(2, 2)
    assert np.all(coupling_hamiltonian(0.0, basis) == 0.0)


def test_coupling_commutes_with_total_number():
    basis = enumerate_basis(2, 2)
    h = coupling_hamiltonian(1.3, basis)
    n = number_operator(basis)
    assert np.max(np.abs(h @ n - n @ h)) < 1e-12


def test_coupling_is_hermitian():
    basis = enumerate_basis(2, 2)
    h = coupling_hamiltonian(2.1, basis)
    assert np.max(np.abs(h - h.conj().T)) < 1e-12


def test_annihilation_is_adjoint_of_creation():
    basis = enumerate_basis(2, 2)
    assert np.array_equal(annihilation_matrix(2, basis), creation_matrix(2, basis).conj().T)


def test_matrix_exponential_zero_scale_is_identity():
    m = np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex)
    assert np.allclose(matrix_exponential(m, 0.0), np.eye(2), atol=1e-15)


def test_matrix_exponential_single_photon_rotation():
    # exp(-i t sigma_x) on (1, 0) is (cos t, -i sin t) in hbar/eps units.
    h = np.array([[0, 1], [1, 0]], dtype=complex)
    for t in (0.3, 1.0, np.pi / 2):
        u = matrix_exponential(h, scale=-1j * t)
        psi = u @ np.array([1, 0], dtype=complex)
        expected = np.array([np.cos(t), -1j * np.sin(t)])
        assert np.max(np.abs(psi - expected)) < 1e-12


def test_matrix_exponential_diagonal():
    d = np.diag([1.0 + 2.0j, -0.5j, 3.0])
    expected = np.diag(np.exp(np.diag(d)))
    assert np.allclose(matrix_exponential(d), expected, rtol=1e-12)


def test_matrix_exponential_of_hermitian_is_unitary():
    rng = np.random.default_rng(7)
    m = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    h = 0.5 * (m + m.conj().T)
    u = matrix_exponential(h, scale=-1j * 0.8)
    assert np.max(np.abs(u.conj().T @ u - np.eye(6))) < 1e-10


def test_matrix_exponential_rejects_nonfinite():
    with pytest.raises(ValueError):
        matrix_exponential(np.array([[np.nan, 0], [0, 1]]))
