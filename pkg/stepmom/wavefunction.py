#!/usr/bin/env python3
# coding: utf-8

"""Eigenfunctions

Bound state wave functions of the step momentum well, written in two-branch
form

    psi(x) = N A sin(kappa (x + l))        for -l <= x <= 0
    psi(x) = N C sin(kappa_bar (x - l))    for 0 < x <= l

which satisfies psi(-l) = psi(l) = 0 by construction. At a root of the
characteristic equation the amplitude pair (A, C) can be taken as
(sin(kappa_bar l), -sin(kappa l)) or, equivalently, from derivative
matching; the better conditioned pair is used. Normalization is analytic,
with composite Simpson quadrature available as a cross-check.

Also contains the plane wave eigenfunctions of the step momentum operator,
the exponential coefficient sets (b, c, d) of the boundary matching system and
a few diagnostics (branch mismatch at x = 0, region occupancy, overlaps).
"""

import collections
import numpy as np
from scipy import integrate
from stepmom.core import (
    HERMITIAN,
    PT,
    DEFAULT_WELL,
    DomainError,
    NullEigenfunctionError,
    SampledFunction,
    SingularRepresentationError,
    check_mode,
    check_mu0,
    check_well,
    two_segment_profile,
    wave_numbers,
)

CoefficientSet = collections.namedtuple("CoefficientSet", ["b", "c", "d"])
CoefficientSet.__doc__ = """Amplitude ratios B/A, C/A, D/A of the exponential
form psi = A exp(i kappa x) + B exp(-i kappa x) (x < 0),
C exp(i kappa_bar x) + D exp(-i kappa_bar x) (x > 0)."""

REPRESENTATIONS = ("auto", "derivative", "value")
# Denominators below this modulus make a coefficient formula singular
SINGULAR_TOL = 1e-8


def _check_grid(grid, well):
    """Return the grid as a float array, or raise DomainError."""
    grid = np.asarray(grid, dtype=float)
    l = well.half_width
    if grid.ndim != 1 or grid.size < 2:
        raise DomainError("Grid must be a one dimensional array of positions.")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("Grid must be strictly increasing.")
    if grid[0] < -l * (1 + 1e-12) or grid[-1] > l * (1 + 1e-12):
        raise DomainError("Grid must lie within the well [-{0}, {0}].".format(l))
    return grid


def _sinhc(x):
    """sinh(x) / x, equal to 1 at 0."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0, 1.0, x)
    return np.where(x == 0, 1.0, np.sinh(safe) / safe)


def sin_square_integral(z):
    """Integral of |sin(z v)|^2 for v in [0, 1], z complex.

    With z = s + it the integrand is (cosh(2tv) - cos(2sv)) / 2.

    Example
    -------
        >>> print(round(float(sin_square_integral(np.pi / 2)), 12))
        0.5
    """
    s, t = np.real(z), np.imag(z)
    # np.sinc(x) = sin(pi x) / (pi x)
    return 0.5 * (_sinhc(2 * t) - np.sinc(2 * s / np.pi))


def branch_amplitudes(kappa_l, kappa_bar_l, mode):
    """Amplitudes (A, C) of the two branches, before normalization.

    The value matching pair (sin(kappa_bar l), -sin(kappa l)) and the
    derivative matching pair (kappa_bar l cos(kappa_bar l),
    kappa l cos(kappa l)) describe the same function at a root. The latter is
    rescaled by the modulus of the wave numbers, multiplied by i in PT mode,
    and used whenever it is larger than the former. The sign is chosen so
    that A has a non-negative real part.

    Parameters
    ----------
    kappa_l : complex
        Wave number of the x < 0 branch times l.
    kappa_bar_l : complex
        Wave number of the x > 0 branch times l.
    mode : str
        "hermitian" or "pt".

    Returns
    -------
    tuple of complex :
        (A, C). In PT mode C = -conj(A).

    Example
    -------
        >>> amp_a, amp_c = branch_amplitudes(np.pi / 2, np.pi / 2, HERMITIAN)
        >>> print(amp_a.real, amp_c.real)
        1.0 -1.0
    """
    mode = check_mode(mode)
    a, b = complex(kappa_l), complex(kappa_bar_l)
    value_pair = np.array([np.sin(b), -np.sin(a)])
    deriv_pair = np.array([b * np.cos(b), a * np.cos(a)])
    scale = np.hypot(abs(a), abs(b))
    if scale > 0:
        deriv_pair = deriv_pair / scale
    if mode == PT:
        deriv_pair = 1j * deriv_pair
    if np.linalg.norm(deriv_pair) > np.linalg.norm(value_pair):
        amp_a, amp_c = deriv_pair
    else:
        amp_a, amp_c = value_pair
    if amp_a.real < 0 or (amp_a.real == 0 and amp_a.imag < 0):
        amp_a, amp_c = -amp_a, -amp_c
    return complex(amp_a), complex(amp_c)


def _raw_values(x, kappa_l, kappa_bar_l, amp_a, amp_c, l):
    """Unnormalized two-branch function; x = 0 takes the left branch."""
    x = np.asarray(x, dtype=float)
    left = amp_a * np.sin(kappa_l / l * (x + l))
    right = amp_c * np.sin(kappa_bar_l / l * (x - l))
    return np.where(x <= 0, left, right)


def _raw_derivative(x, kappa_l, kappa_bar_l, amp_a, amp_c, l):
    x = np.asarray(x, dtype=float)
    left = amp_a * kappa_l / l * np.cos(kappa_l / l * (x + l))
    right = amp_c * kappa_bar_l / l * np.cos(kappa_bar_l / l * (x - l))
    return np.where(x <= 0, left, right)


def raw_sup_norm(kappa_l, kappa_bar_l, mode, points=201):
    """Largest modulus of the unnormalized two-branch function on l = 1.

    Used to reject roots that only admit the null function.
    """
    amp_a, amp_c = branch_amplitudes(kappa_l, kappa_bar_l, mode)
    x = np.linspace(-1.0, 1.0, 2 * points - 1)
    return float(np.max(np.abs(_raw_values(x, kappa_l, kappa_bar_l, amp_a, amp_c, 1.0))))


def normalize(kappa_l, kappa_bar_l, mode):
    """Analytic normalization constant of the two-branch function.

    Parameters
    ----------
    kappa_l, kappa_bar_l : complex
        Dimensionless wave numbers of a root.
    mode : str
        "hermitian" or "pt".

    Returns
    -------
    float :
        N > 0 such that N * (A, C) from branch_amplitudes has unit norm on
        l = 1. On a well of half width l, the constant is N / sqrt(l).

    Raises
    ------
    NullEigenfunctionError :
        If the function vanishes identically.

    Example
    -------
        >>> print(round(normalize(np.pi / 2, np.pi / 2, HERMITIAN), 12))
        1.0
    """
    amp_a, amp_c = branch_amplitudes(kappa_l, kappa_bar_l, mode)
    total = abs(amp_a) ** 2 * sin_square_integral(kappa_l) + abs(
        amp_c
    ) ** 2 * sin_square_integral(kappa_bar_l)
    total = float(total)
    if not total > 0:
        raise NullEigenfunctionError("The eigenfunction vanishes identically.")
    return float(1 / np.sqrt(total))


def _state_values(state, mode, grid, well, derivative=False):
    l = well.half_width
    amp_a, amp_c = branch_amplitudes(state.kappa_l, state.kappa_bar_l, mode)
    scale = state.norm / np.sqrt(l)
    func = _raw_derivative if derivative else _raw_values
    return scale * func(grid, state.kappa_l, state.kappa_bar_l, amp_a, amp_c, l)


def eigenfunction(state, mode, mu0, grid, well=DEFAULT_WELL):
    """Sample a normalized bound state.

    Parameters
    ----------
    state : EigenState
        A state from stepmom.spectrum.solve_spectrum for (mode, mu0).
    mode : str
        "hermitian" or "pt".
    mu0 : float
        Step height.
    grid : numpy.ndarray
        Strictly increasing positions within [-l, l].
    well : WellConfig
        Well geometry.

    Returns
    -------
    SampledFunction :
        Complex samples of psi; meta holds mode, mu0, n, eta and
        energy_ratio.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    check_well(well)
    grid = _check_grid(grid, well)
    if not state.norm > 0:
        raise NullEigenfunctionError("State {} has no valid norm.".format(state.n))
    values = _state_values(state, mode, grid, well).astype(complex)
    meta = {
        "kind": "eigenfunction",
        "mode": mode,
        "mu0": mu0,
        "n": state.n,
        "eta": state.eta,
        "energy_ratio": state.energy_ratio,
    }
    return SampledFunction(grid=grid, values=values, meta=meta)


def probability_density(state, mode, mu0, grid, well=DEFAULT_WELL):
    """|psi|^2 of a normalized state.

    The meta "label" is "probability" for the Hermitian step and
    "pseudo-probability" for the PT step.
    """
    psi = eigenfunction(state, mode, mu0, grid, well)
    meta = dict(psi.meta)
    meta["kind"] = "density"
    meta["label"] = "probability" if psi.meta["mode"] == HERMITIAN else "pseudo-probability"
    return SampledFunction(grid=psi.grid, values=np.abs(psi.values) ** 2, meta=meta)


def simpson_norm(state, mode, well=DEFAULT_WELL, points=10001):
    """Normalization constant by composite Simpson quadrature.

    Integrates |psi|^2 of the unnormalized two-branch function separately on
    each half of the well, where it is smooth. The result uses the same
    convention as EigenState.norm and should match it closely.
    """
    mode = check_mode(mode)
    check_well(well)
    l = well.half_width
    amp_a, amp_c = branch_amplitudes(state.kappa_l, state.kappa_bar_l, mode)
    total = 0.0
    for start, end in ((-l, 0.0), (0.0, l)):
        x = np.linspace(start, end, points)
        if end > 0:
            # right branch at x = 0 as well
            vals = amp_c * np.sin(state.kappa_bar_l / l * (x - l))
        else:
            vals = amp_a * np.sin(state.kappa_l / l * (x + l))
        total += integrate.simpson(np.abs(vals) ** 2, x=x)
    if not total > 0:
        raise NullEigenfunctionError("The eigenfunction vanishes identically.")
    return float(1 / np.sqrt(total / l))


def branch_mismatch(state, mode, mu0, well=DEFAULT_WELL):
    """Jumps of psi and psi' across x = 0, from the branch formulas.

    Returns
    -------
    tuple of floats :
        (|psi(0-) - psi(0+)|, |psi'(0-) - psi'(0+)|, max |psi'| over the well)
    """
    mode = check_mode(mode)
    check_mu0(mu0, mode)
    l = well.half_width
    amp_a, amp_c = branch_amplitudes(state.kappa_l, state.kappa_bar_l, mode)
    scale = state.norm / np.sqrt(l)
    a, b = state.kappa_l, state.kappa_bar_l
    jump = scale * abs(amp_a * np.sin(a) + amp_c * np.sin(b))
    slope_jump = scale / l * abs(amp_a * a * np.cos(a) - amp_c * b * np.cos(b))
    x = np.linspace(-l, l, 2001)
    slopes = _state_values(state, mode, x, well, derivative=True)
    # x = 0 samples the left limit only
    max_slope = max(np.max(np.abs(slopes)), scale / l * abs(amp_c * b * np.cos(b)))
    return float(jump), float(slope_jump), float(max_slope)


def region_occupancy(state, mode, mu0):
    """Analytic weight of a normalized state on the left half, x < 0.

    Independent of the half width. Equals 0.5 for the standard well.
    """
    mode = check_mode(mode)
    check_mu0(mu0, mode)
    amp_a, _ = branch_amplitudes(state.kappa_l, state.kappa_bar_l, mode)
    return float(state.norm ** 2 * abs(amp_a) ** 2 * sin_square_integral(state.kappa_l))


def overlap(state_m, state_n, mode, mu0, well=DEFAULT_WELL, weighted=True, points=10001):
    """Inner product of two normalized states.

    Computes the integral of w conj(psi_m) psi_n, by Simpson quadrature on
    each half of the well. With weighted=True, w = (1 + mu(x))^-2, the weight
    in which eigenfunctions of distinct energies are orthogonal; otherwise
    w = 1.

    Returns
    -------
    complex :
        The overlap.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    total = 0j
    for seg in two_segment_profile(mode, mu0, well).segments:
        x = np.linspace(seg.start, seg.end, points)
        psi_m = _state_values(state_m, mode, x, well)
        psi_n = _state_values(state_n, mode, x, well)
        weight = 1 / seg.alpha ** 2 if weighted else 1.0
        total += weight * integrate.simpson(np.conj(psi_m) * psi_n, x=x)
    return complex(total)


def momentum_eigenfunction(p_val, mu0, mode, grid, hbar=1.0):
    """Plane wave eigenfunction of the Hermitian step momentum operator.

    exp(i p x / (hbar (1 + mu0))) for x < 0, 1 at x = 0 and
    exp(i p x / (hbar (1 - mu0))) for x > 0, with unit amplitude.

    Parameters
    ----------
    p_val : float
        Momentum eigenvalue.
    mu0 : float
        Step height in [0, 1).
    mode : str
        Must be "hermitian".
    grid : numpy.ndarray
        Strictly increasing positions.
    hbar : float
        Reduced Planck constant.

    Returns
    -------
    SampledFunction :
        Complex samples, meta holds the eigenvalue under "p".

    Example
    -------
        >>> phi = momentum_eigenfunction(0.0, 0.3, HERMITIAN, np.array([-1.0, 1.0]))
        >>> print(phi.values.real)
        [1. 1.]
    """
    mode = check_mode(mode)
    if mode != HERMITIAN:
        raise DomainError("Momentum eigenfunctions are defined for the Hermitian step.")
    mu0 = check_mu0(mu0, mode)
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or np.any(np.diff(grid) <= 0) or np.any(~np.isfinite(grid)):
        raise DomainError("Grid must be finite and strictly increasing.")
    p_val = float(p_val)
    left = np.exp(1j * p_val * grid / (hbar * (1 + mu0)))
    right = np.exp(1j * p_val * grid / (hbar * (1 - mu0)))
    values = np.where(grid < 0, left, np.where(grid > 0, right, 1.0 + 0j))
    meta = {"kind": "momentum", "mode": mode, "mu0": mu0, "p": p_val}
    return SampledFunction(grid=grid, values=values, meta=meta)


def apply_momentum(sampled, mu0, mode, hbar=1.0):
    """Apply the step momentum operator to samples by finite differences.

    On each half line the operator is -i hbar (1 + mu) d/dx with constant mu;
    derivatives use second order differences (numpy.gradient with
    edge_order=2) computed separately on x <= 0 and x > 0, so the result is
    second order accurate away from the step. The point x = 0 is assigned to
    the left half.

    Returns
    -------
    SampledFunction :
        The operator applied to the samples, on the same grid.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    step = mu0 if mode == HERMITIAN else 1j * mu0
    grid = np.asarray(sampled.grid, dtype=float)
    values = np.asarray(sampled.values, dtype=complex)
    result = np.empty_like(values)
    for mask, alpha in ((grid <= 0, 1 + step), (grid > 0, 1 - step)):
        if not np.any(mask):
            continue
        if np.count_nonzero(mask) < 3:
            raise DomainError("Each half of the grid needs at least 3 points.")
        deriv = np.gradient(values[mask], grid[mask], edge_order=2)
        result[mask] = -1j * hbar * alpha * deriv
    meta = dict(sampled.meta)
    meta["kind"] = "momentum_applied"
    return SampledFunction(grid=grid, values=result, meta=meta)


def coefficients(eta, mu0, mode, representation="auto"):
    """Exponential amplitude ratios (b, c, d) at a characteristic root.

    b = -exp(-2i kappa l) and d = -c exp(2i kappa_bar l). The ratio c comes
    from derivative matching,

        c = kappa cos(kappa l) / (kappa_bar cos(kappa_bar l))
            * exp(-i (kappa + kappa_bar) l),

    or from value matching,

        c = -sin(kappa l) / sin(kappa_bar l) * exp(-i (kappa + kappa_bar) l).

    Both agree at a root. "auto" picks the one with the larger denominator.

    Parameters
    ----------
    eta : float
        A root of the characteristic function of the mode.
    mu0 : float
        Step height.
    mode : str
        "hermitian" or "pt".
    representation : str
        "auto", "derivative" or "value".

    Returns
    -------
    CoefficientSet :
        The ratios B/A, C/A, D/A.

    Raises
    ------
    SingularRepresentationError :
        If the requested formula divides by a modulus below 1e-8. The sampled
        eigenfunctions never divide and remain available.

    Example
    -------
        >>> coefs = coefficients(np.pi / 2, 0.0, HERMITIAN)
        >>> print([round(v.real, 9) for v in coefs])
        [1.0, 1.0, 1.0]
    """
    if representation not in REPRESENTATIONS:
        raise DomainError(
            "Unknown representation: {0}. Valid choices are {1}.".format(
                representation, ", ".join(REPRESENTATIONS)
            )
        )
    a, b = wave_numbers(eta, mu0, mode)
    cos_b, sin_b = np.cos(b), np.sin(b)
    if representation == "auto":
        representation = "derivative" if abs(cos_b) >= abs(sin_b) else "value"
    phase = np.exp(-1j * (a + b))
    if representation == "derivative":
        if abs(cos_b) <= SINGULAR_TOL:
            raise SingularRepresentationError(
                "cos(kappa_bar l) vanishes at eta={}; use the value "
                "representation or the sampled eigenfunction.".format(eta)
            )
        c = a * np.cos(a) / (b * cos_b) * phase
    else:
        if abs(sin_b) <= SINGULAR_TOL:
            raise SingularRepresentationError(
                "sin(kappa_bar l) vanishes at eta={}; use the derivative "
                "representation or the sampled eigenfunction.".format(eta)
            )
        c = -np.sin(a) / sin_b * phase
    return CoefficientSet(
        b=complex(-np.exp(-2j * a)), c=complex(c), d=complex(-c * np.exp(2j * b))
    )


def coefficient_residuals(coeffs, eta, mu0, mode):
    """Absolute residuals of the four boundary matching equations.

    With A = 1: continuity of psi at 0, psi(-l) = 0, psi(l) = 0 and
    continuity of psi' at 0 (times l).

    Returns
    -------
    numpy.ndarray of float :
        Four residuals.
    """
    a, b = wave_numbers(eta, mu0, mode)
    res = [
        1 + coeffs.b - coeffs.c - coeffs.d,
        np.exp(-1j * a) + coeffs.b * np.exp(1j * a),
        coeffs.c * np.exp(1j * b) + coeffs.d * np.exp(-1j * b),
        a - a * coeffs.b - b * coeffs.c + b * coeffs.d,
    ]
    return np.abs(np.array(res))
