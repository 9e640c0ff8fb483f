import math

import numpy as np
import pytest

from bellforge.base import Interval
from bellforge.errors import DimensionMismatch, NotHermitian, ZeroVector
from bellforge.linalg import hermitian_eigenvalues
from bellforge.pauli import SIGMA_Z, family_S, family_T
from bellforge.polynomial import assemble, chsh_polynomial, t_polynomial
from bellforge.quantum import (
    DensityMatrix,
    analytic_spectrum_S,
    analytic_spectrum_T,
    band_scan,
    chi_curve_T,
    expectation,
    global_quantum_range,
    interference_split,
    mixed_curve_S,
    mixed_expectation,
    mixed_singlet_components,
    named_states,
    quantum_band,
    singlet_curve_S,
    singlet_curve_T,
    state_vector,
    theta_grid,
)

SQRT2 = math.sqrt(2)
R = 1 / SQRT2


def S(t):
    return assemble(chsh_polynomial(), family_S(), t)


def T(t):
    return assemble(t_polynomial(), family_T(), t)


def test_named_states():
    ns = named_states()
    np.testing.assert_array_equal(ns["singlet"], [0, R, -R, 0])
    np.testing.assert_array_equal(ns["chi"], [R, 0, 0, R])
    basis = np.array([ns[f"triplet_{k}"] for k in range(3)] + [ns["singlet"]])
    np.testing.assert_allclose(basis @ basis.conj().T, np.eye(4), atol=1e-15)


def test_singlet_is_the_low_eigenvector_of_T():
    ns = named_states()
    assert expectation(ns["singlet"], T(math.pi / 4)) == pytest.approx(-6 * SQRT2, abs=1e-12)
    for k in range(3):
        assert expectation(ns[f"triplet_{k}"], T(math.pi / 4)) == pytest.approx(2 * SQRT2, abs=1e-12)


def test_state_vector_normalises():
    np.testing.assert_allclose(state_vector([3, 4j]), [0.6, 0.8j])
    with pytest.raises(ZeroVector):
        state_vector([0, 0])


def test_quantum_band_S_closed_form(grid):
    for t in grid[::10]:
        r = 2 * math.sqrt(1 + math.sin(2 * t) ** 2)
        lo, hi = quantum_band(chsh_polynomial(), family_S(), t)
        assert lo == pytest.approx(-r, abs=1e-10) and hi == pytest.approx(r, abs=1e-10)
    assert quantum_band(chsh_polynomial(), family_S(), 0.0) == pytest.approx((-2, 2), abs=1e-12)


def test_quantum_band_T_at_pi_over_4():
    lo, hi = quantum_band(t_polynomial(), family_T(), math.pi / 4)
    assert lo == pytest.approx(-6 * SQRT2, abs=1e-10)
    assert hi == pytest.approx(2 * SQRT2, abs=1e-10)


def test_convex_weights_stay_in_band(rng):
    for t in (0.2, 1.1, 3.9):
        w = hermitian_eigenvalues(T(t))
        band = quantum_band(t_polynomial(), family_T(), t)
        for _ in range(50):
            mix = rng.dirichlet(np.ones(4))
            assert band.contains(float(mix @ w), slack=1e-12)


def test_global_ranges():
    s = global_quantum_range(chsh_polynomial(), family_S(), 721)
    t = global_quantum_range(t_polynomial(), family_T(), 721)
    assert s.lo == pytest.approx(-2 * SQRT2, abs=1e-6) and s.hi == pytest.approx(2 * SQRT2, abs=1e-6)
    assert t.lo == pytest.approx(-6 * SQRT2, abs=1e-6) and t.hi == pytest.approx(6 * SQRT2, abs=1e-6)
    assert global_quantum_range(chsh_polynomial(), family_S(), 2) == pytest.approx((-2, 2), abs=1e-12)
    with pytest.raises(ValueError):
        theta_grid(1)


def test_analytic_spectrum_examples():
    assert sorted(analytic_spectrum_S(math.pi / 4)) == pytest.approx([-2 * SQRT2, 0, 0, 2 * SQRT2], abs=1e-15)
    assert sorted(analytic_spectrum_T(math.pi / 4)) == pytest.approx([-6 * SQRT2] + [2 * SQRT2] * 3, abs=1e-14)
    assert sorted(analytic_spectrum_S(0.0)) == [-2, -2, 2, 2]


@pytest.mark.parametrize("which", ["S", "T"])
def test_analytic_matches_numeric_on_grid(which, grid):
    op, ref = (S, analytic_spectrum_S) if which == "S" else (T, analytic_spectrum_T)
    worst = max(np.max(np.abs(np.sort(ref(t)) - hermitian_eigenvalues(op(t)))) for t in grid)
    assert worst < 1e-9


def test_singlet_expectations():
    psi = named_states()["singlet"]
    assert expectation(psi, S(math.pi / 4)) == pytest.approx(-2 * SQRT2, abs=1e-12)
    assert expectation(psi, S(3 * math.pi / 4)) == pytest.approx(2 * SQRT2, abs=1e-12)
    assert expectation(psi, S(-math.pi / 4)) == pytest.approx(-2 * SQRT2, abs=1e-12)
    assert expectation(psi, T(math.pi / 4)) == pytest.approx(-6 * SQRT2, abs=1e-12)
    assert expectation(named_states()["chi"], T(0.0)) == pytest.approx(2.0, abs=1e-12)


def test_curves_pointwise(grid):
    ns = named_states()
    for t in grid:
        assert abs(expectation(ns["singlet"], S(t)) - singlet_curve_S(t)) < 1e-10
        assert abs(expectation(ns["singlet"], T(t)) - singlet_curve_T(t)) < 1e-10
        assert abs(expectation(ns["chi"], T(t)) - chi_curve_T(t)) < 1e-10


def test_curves_inside_bands(grid):
    for t in grid:
        band = quantum_band(t_polynomial(), family_T(), t)
        assert band.contains(singlet_curve_T(t), slack=1e-9)
        assert band.contains(chi_curve_T(t), slack=1e-9)


def test_curve_ranges(grid):
    g = np.array([chi_curve_T(t) for t in grid])
    f = np.array([singlet_curve_T(t) for t in grid])
    assert np.max(np.abs(g)) == pytest.approx(2 * SQRT2, abs=1e-6)
    assert np.all(np.abs(g) <= 6)
    assert f.max() == pytest.approx(6 * SQRT2, abs=1e-4)
    assert f.min() == pytest.approx(-6 * SQRT2, abs=1e-4)


def test_mixed_state(grid):
    rho = mixed_singlet_components()
    for t in (0.0, math.pi / 3, math.pi / 2):
        assert mixed_expectation(rho, S(t)) == pytest.approx(-2 * math.cos(t), abs=1e-10)
    assert all(abs(mixed_expectation(rho, S(t))) <= 2 for t in grid)
    assert all(abs(mixed_expectation(rho, S(t)) - mixed_curve_S(t)) < 1e-10 for t in grid)


def test_mixed_trivial_cases():
    zz = np.kron(SIGMA_Z, SIGMA_Z)
    assert mixed_expectation(DensityMatrix.pure([1, 0, 0, 0]), zz) == pytest.approx(1.0)
    assert mixed_expectation(DensityMatrix(np.eye(4) / 4), S(0.7)) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(DimensionMismatch):
        mixed_expectation(DensityMatrix(np.eye(4) / 4), SIGMA_Z)


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(4))
    with pytest.raises(ValueError):
        DensityMatrix(np.diag([1.5, -0.5, 0, 0]))
    rho = DensityMatrix.mixture([[0, 1, 0, 0], [0, 0, 1, 0]])
    np.testing.assert_allclose(rho.m, mixed_singlet_components().m)


def test_expectation_errors():
    with pytest.raises(DimensionMismatch):
        expectation([1, 0], S(0.0))
    with pytest.raises(NotHermitian):
        expectation([1, 0], np.array([[0, 1], [0, 0]]))


def test_interference_split_singlet(grid):
    psi1 = np.array([0, R, 0, 0])
    psi2 = np.array([0, 0, -R, 0])
    for t in grid[::20]:
        diag, cross = interference_split(psi1, psi2, S(t))
        assert diag == pytest.approx(-2 * math.cos(t), abs=1e-12)
        assert cross == pytest.approx(-2 * math.sin(2 * t) * math.sin(t), abs=1e-12)


def test_interference_split_no_cross_for_diagonal_operator():
    diag, cross = interference_split([1, 0, 0, 0], [0, 0, 0, 2], np.kron(SIGMA_Z, SIGMA_Z))
    assert cross == 0.0
    assert diag == pytest.approx(1.0)


def test_interference_split_sum_property(rng):
    for _ in range(50):
        p1 = rng.normal(size=4) + 1j * rng.normal(size=4)
        p2 = rng.normal(size=4) + 1j * rng.normal(size=4)
        m = T(rng.uniform(0, 6.3))
        diag, cross = interference_split(p1, p2, m)
        psi = (p1 + p2) / np.linalg.norm(p1 + p2)
        direct = float(np.real(psi.conj() @ m @ psi))
        assert abs(diag + cross - direct) < 1e-10


def test_interference_split_zero():
    with pytest.raises(ZeroVector):
        interference_split([1, 0, 0, 0], [-1, 0, 0, 0], S(0.0))


def test_band_scan_samples_are_consistent():
    samples = band_scan(t_polynomial(), family_T(), 9)
    assert len(samples) == 9
    for s in samples:
        assert isinstance(s.q, Interval)
        for v in s.expectations.values():
            assert s.q.contains(v, slack=1e-9)
