# Test eigenfunctions, normalization and coefficient sets
import numpy as np
import pytest
from scipy import integrate
import stepmom.wavefunction as swf
from stepmom.core import (
    HERMITIAN,
    PT,
    DomainError,
    NullEigenfunctionError,
    SingularRepresentationError,
    WellConfig,
)
from stepmom.spectrum import solve_spectrum

GRID = np.linspace(-1.0, 1.0, 10001)
TABLE_STATES = [
    (mode, mu0, n)
    for mode in (HERMITIAN, PT)
    for mu0 in (0.0, 0.1, 0.2, 0.3)
    for n in (1, 2, 3)
    if not (mode == PT and mu0 == 0.3 and n == 3)
]


def get_state(mode, mu0, n):
    return solve_spectrum(mode, mu0, n).states[n - 1]


def test_standard_ground_state():
    state = get_state(HERMITIAN, 0.0, 1)
    psi = swf.eigenfunction(state, HERMITIAN, 0.0, GRID)
    assert np.allclose(psi.values, np.cos(np.pi * GRID / 2), atol=1e-10)
    assert psi.meta["n"] == 1 and psi.meta["mode"] == HERMITIAN


@pytest.mark.parametrize("mode, mu0, n", TABLE_STATES)
def test_bound_state_properties(mode, mu0, n):
    state = get_state(mode, mu0, n)
    psi = swf.eigenfunction(state, mode, mu0, GRID)
    # Dirichlet walls
    assert abs(psi.values[0]) < 1e-10 and abs(psi.values[-1]) < 1e-10
    # Smooth junction at the step
    jump, slope_jump, max_slope = swf.branch_mismatch(state, mode, mu0)
    assert jump < 1e-8
    assert slope_jump < 1e-8 * max_slope
    # Unit norm, analytic and by quadrature
    dens = np.abs(psi.values) ** 2
    assert integrate.trapezoid(dens, x=GRID) == pytest.approx(1.0, abs=1e-6)
    assert swf.simpson_norm(state, mode) == pytest.approx(state.norm, rel=1e-9)


@pytest.mark.parametrize("mu0", [0.1, 0.2, 0.3])
def test_pt_symmetry(mu0):
    for state in solve_spectrum(PT, mu0, 3).states:
        vals = swf.eigenfunction(state, PT, mu0, GRID).values
        assert np.allclose(np.conj(vals[::-1]), vals, atol=1e-8)


@pytest.mark.parametrize("mu0", [0.1, 0.2, 0.3])
def test_weighted_orthogonality(mu0):
    states = solve_spectrum(HERMITIAN, mu0, 4).states
    for i, state_m in enumerate(states):
        for state_n in states[i + 1:]:
            assert abs(swf.overlap(state_m, state_n, HERMITIAN, mu0)) < 1e-8


def test_unweighted_overlap_nonzero():
    state_1, state_2 = solve_spectrum(HERMITIAN, 0.3, 2).states
    plain = swf.overlap(state_1, state_2, HERMITIAN, 0.3, weighted=False)
    assert abs(plain) > 1e-6


def test_standard_orthonormal():
    states = solve_spectrum(HERMITIAN, 0.0, 3).states
    assert swf.overlap(states[0], states[0], HERMITIAN, 0.0) == pytest.approx(1.0, abs=1e-10)
    assert abs(swf.overlap(states[0], states[2], HERMITIAN, 0.0)) < 1e-10


def test_density_moves_with_step():
    occupancy = [
        swf.region_occupancy(get_state(HERMITIAN, mu0, 1), HERMITIAN, mu0)
        for mu0 in (0.0, 0.1, 0.2, 0.3)
    ]
    assert occupancy[0] == pytest.approx(0.5, abs=1e-12)
    assert np.all(np.diff(occupancy) < 0)
    assert occupancy[3] == pytest.approx(0.376, abs=2e-3)


def test_region_occupancy_matches_samples():
    state = get_state(HERMITIAN, 0.2, 1)
    dens = swf.probability_density(state, HERMITIAN, 0.2, GRID)
    left = GRID <= 0
    numeric = integrate.trapezoid(dens.values[left], x=GRID[left])
    assert swf.region_occupancy(state, HERMITIAN, 0.2) == pytest.approx(numeric, abs=1e-6)


@pytest.mark.parametrize("mode, label", [(HERMITIAN, "probability"), (PT, "pseudo-probability")])
def test_density_label(mode, label):
    dens = swf.probability_density(get_state(mode, 0.1, 1), mode, 0.1, GRID)
    assert dens.meta["label"] == label
    assert np.all(dens.values >= 0)


def test_wider_well():
    well = WellConfig(half_width=2.0)
    state = get_state(PT, 0.2, 2)
    grid = np.linspace(-2.0, 2.0, 20001)
    psi = swf.eigenfunction(state, PT, 0.2, grid, well)
    assert integrate.trapezoid(np.abs(psi.values) ** 2, x=grid) == pytest.approx(1.0, abs=1e-6)


def test_grid_outside_well():
    state = get_state(HERMITIAN, 0.1, 1)
    with pytest.raises(DomainError):
        swf.eigenfunction(state, HERMITIAN, 0.1, np.linspace(-1.5, 1.0, 11))
    with pytest.raises(DomainError):
        swf.eigenfunction(state, HERMITIAN, 0.1, np.array([0.5, 0.0]))


def test_null_function():
    with pytest.raises(NullEigenfunctionError):
        swf.normalize(0.0, 0.0, HERMITIAN)


def test_sin_square_integral():
    assert float(swf.sin_square_integral(np.pi)) == pytest.approx(0.5)
    z = 1.3 + 0.4j
    v = np.linspace(0.0, 1.0, 20001)
    numeric = integrate.simpson(np.abs(np.sin(z * v)) ** 2, x=v)
    assert float(swf.sin_square_integral(z)) == pytest.approx(numeric, rel=1e-10)


@pytest.mark.parametrize("mode", [HERMITIAN, PT])
def test_branch_amplitudes_sign(mode):
    state = get_state(mode, 0.2, 2)
    amp_a, amp_c = swf.branch_amplitudes(state.kappa_l, state.kappa_bar_l, mode)
    assert amp_a.real >= 0
    if mode == PT:
        assert amp_c == pytest.approx(-np.conj(amp_a))


def test_momentum_eigenfunction():
    grid = np.linspace(-1.0, 1.0, 11)
    phi = swf.momentum_eigenfunction(0.0, 0.2, HERMITIAN, grid)
    assert np.allclose(phi.values, 1.0)
    phi = swf.momentum_eigenfunction(1.0, 0.0, HERMITIAN, grid)
    assert np.allclose(phi.values, np.exp(1j * grid))
    assert phi.meta["p"] == 1.0
    with pytest.raises(DomainError):
        swf.momentum_eigenfunction(1.0, 0.2, PT, grid)


def _momentum_error(points, p_val=1.0, mu0=0.2):
    grid = np.linspace(-1.0, 1.0, points)
    phi = swf.momentum_eigenfunction(p_val, mu0, HERMITIAN, grid)
    applied = swf.apply_momentum(phi, mu0, HERMITIAN)
    return np.max(np.abs(applied.values - p_val * phi.values))


def test_momentum_eigenvalue_convergence():
    coarse, fine = _momentum_error(1001), _momentum_error(2001)
    assert fine < coarse
    assert 3.6 <= coarse / fine <= 4.4


def test_apply_momentum_needs_points():
    phi = swf.momentum_eigenfunction(1.0, 0.2, HERMITIAN, np.array([-1.0, 0.5, 1.0]))
    with pytest.raises(DomainError):
        swf.apply_momentum(phi, 0.2, HERMITIAN)


@pytest.mark.parametrize("mode", [HERMITIAN, PT])
def test_coefficients_standard_well(mode):
    coefs = swf.coefficients(np.pi / 2, 0.0, mode)
    assert np.max(swf.coefficient_residuals(coefs, np.pi / 2, 0.0, mode)) < 1e-12
    with pytest.raises(SingularRepresentationError):
        swf.coefficients(np.pi / 2, 0.0, mode, "derivative")


@pytest.mark.parametrize("mode", [HERMITIAN, PT])
@pytest.mark.parametrize("mu0", [0.1, 0.2])
def test_coefficients_at_roots(mode, mu0):
    for state in solve_spectrum(mode, mu0, 2).states:
        coefs = swf.coefficients(state.eta, mu0, mode)
        assert np.max(swf.coefficient_residuals(coefs, state.eta, mu0, mode)) < 1e-8
        other = swf.coefficients(state.eta, mu0, mode, "value")
        assert other.c == pytest.approx(coefs.c, rel=1e-8)


def test_unknown_representation():
    with pytest.raises(DomainError):
        swf.coefficients(1.0, 0.1, HERMITIAN, "spline")
