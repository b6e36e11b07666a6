#!/usr/bin/env python3
# coding: utf-8

"""Characteristic functions

Quantization conditions whose zeros in eta = lambda * l are the bound states
of the step momentum well. The same condition is available in several
equivalent forms:

    -closed forms for the Hermitian and the PT step
    -the matching function M = a sin(b) cos(a) + b sin(a) cos(b), with
     a = kappa l and b = kappa_bar l, from which all other forms follow
    -the 4x4 boundary matching determinant, equal to 4i M
    -its expanded trigonometric form, equal to 2M
    -a transfer matrix over an arbitrary number of segments

All functions are vectorized over eta. Only the zeros and the signs of these
functions matter; their scales differ by positive factors.
"""

import numpy as np
from stepmom.core import (
    HERMITIAN,
    PT,
    DEFAULT_WELL,
    DomainError,
    check_mode,
    check_mu0,
    check_profile,
    profile_eta_scale,
    two_segment_profile,
    _as_output,
)

HERMITIAN_CLOSED_FORM = "hermitian_closed_form"
PT_CLOSED_FORM = "pt_closed_form"
DETERMINANT_FORM = "determinant_form"
EXPANDED_FORM = "expanded_form"
TRANSFER_MATRIX_FORM = "transfer_matrix_form"
CHARACTERISTIC_KINDS = (
    HERMITIAN_CLOSED_FORM,
    PT_CLOSED_FORM,
    DETERMINANT_FORM,
    EXPANDED_FORM,
    TRANSFER_MATRIX_FORM,
)


def _finite_eta(eta):
    eta = np.asarray(eta, dtype=float)
    if np.any(~np.isfinite(eta)):
        raise DomainError("eta must be finite.")
    return eta


def _branch_numbers(eta, mu0, mode):
    """Wave numbers of both branches, without the eta > 0 restriction."""
    if mode == HERMITIAN:
        return eta / (1 + mu0) + 0j, eta / (1 - mu0) + 0j
    return eta * (1 - 1j * mu0), eta * (1 + 1j * mu0)


def hermitian_char(eta, mu0):
    """Quantization condition of the Hermitian step.

    (1 - mu0) sin(eta / (1 - mu0)) cos(eta / (1 + mu0))
    + (1 + mu0) cos(eta / (1 - mu0)) sin(eta / (1 + mu0))

    Parameters
    ----------
    eta : float or numpy.ndarray
        Dimensionless energy variable lambda * l.
    mu0 : float
        Step height in [0, 1).

    Returns
    -------
    float or numpy.ndarray :
        The condition, zero at every bound state and at eta = 0.

    Example
    -------
        >>> print(abs(hermitian_char(np.pi / 2, 0.0)) < 1e-15)
        True
    """
    mu0 = check_mu0(mu0, HERMITIAN)
    eta = _finite_eta(eta)
    left, right = 1 + mu0, 1 - mu0
    val = right * np.sin(eta / right) * np.cos(eta / left) + left * np.cos(
        eta / right
    ) * np.sin(eta / left)
    return _as_output(val)


def pt_char(eta, mu0):
    """Quantization condition of the PT step, sin(2 eta) + mu0 sinh(2 eta mu0).

    Example
    -------
        >>> print(pt_char(2.4, 1.0) > 0)
        True
    """
    mu0 = check_mu0(mu0, PT)
    eta = _finite_eta(eta)
    val = np.sin(2 * eta) + mu0 * np.sinh(2 * eta * mu0)
    return _as_output(val)


def closed_form_char(eta, mu0, mode):
    """Dispatch to the closed form matching the mode."""
    mode = check_mode(mode)
    if mode == HERMITIAN:
        return hermitian_char(eta, mu0)
    return pt_char(eta, mu0)


def matching_char(eta, mu0, mode):
    """Derivative mismatch of the two-branch solution at x = 0.

    Returns M = a sin(b) cos(a) + b sin(a) cos(b) with a = kappa l and
    b = kappa_bar l. It is real for both modes and relates to the closed forms
    by M = eta * hermitian_char / (1 - mu0^2) and M = eta * pt_char.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    eta = _finite_eta(eta)
    a, b = _branch_numbers(eta, mu0, mode)
    val = a * np.sin(b) * np.cos(a) + b * np.sin(a) * np.cos(b)
    return _as_output(np.real(val))


def expanded_char(eta, mu0, mode):
    """Expanded determinant condition.

    (b - a) sin(a - b) + (b + a) sin(a + b), with a = kappa l and
    b = kappa_bar l. Equal to twice the matching function.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    eta = _finite_eta(eta)
    a, b = _branch_numbers(eta, mu0, mode)
    val = (b - a) * np.sin(a - b) + (b + a) * np.sin(a + b)
    return _as_output(np.real(val))


def boundary_matrix(eta, mu0, mode):
    """The 4x4 homogeneous system for the amplitudes (A, B, C, D).

    Rows are continuity of psi at 0, psi(-l) = 0, psi(l) = 0 and continuity
    of psi' at 0 (multiplied by l). Stacked along the leading axes of eta.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    eta = _finite_eta(eta)
    a, b = _branch_numbers(eta, mu0, mode)
    ones = np.ones_like(a)
    zeros = np.zeros_like(a)
    rows = [
        [ones, ones, -ones, -ones],
        [np.exp(-1j * a), np.exp(1j * a), zeros, zeros],
        [zeros, zeros, np.exp(1j * b), np.exp(-1j * b)],
        [a, -a, -b, b],
    ]
    mat = np.array(rows, dtype=complex)
    # (4, 4, ...) -> (..., 4, 4)
    return np.moveaxis(mat, (0, 1), (-2, -1))


def determinant_char(eta, mu0, mode):
    """Boundary matching determinant, rescaled.

    The determinant of boundary_matrix equals 4i M. The returned value is
    det / (4i), multiplied by (1 - mu0^2) for the Hermitian step, so that its
    real part is eta times the closed form of the mode and its imaginary part
    vanishes up to roundoff for real eta.

    Returns
    -------
    complex or numpy.ndarray of complex :
        Rescaled determinant.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    det = np.linalg.det(boundary_matrix(eta, mu0, mode)) / 4j
    if mode == HERMITIAN:
        det = det * (1 - mu0 ** 2)
    return _as_output(det)


def segment_matrices(lam, segment):
    """Propagation matrices of (psi, psi') across one segment.

    Inside the segment psi'' + (lam / alpha)^2 psi = 0.
    """
    k = lam / segment.alpha
    d = segment.end - segment.start
    cos_kd = np.cos(k * d)
    sin_kd = np.sin(k * d)
    mat = np.array([[cos_kd, sin_kd / k], [-k * sin_kd, cos_kd]], dtype=complex)
    return np.moveaxis(mat, (0, 1), (-2, -1))


def transfer_matrix_char(lam, profile, well=DEFAULT_WELL):
    """Dirichlet condition at x = l for an N-segment profile.

    psi and psi' are continuous at every interface. Starting from
    (psi, psi') = (0, 1) at x = -l, the ordered product of segment matrices
    maps the state to x = l; its (0, 1) entry is psi(l), which vanishes
    exactly at the eigenvalues.

    Parameters
    ----------
    lam : float or numpy.ndarray
        Physical wave number sqrt(2 m E) / hbar, strictly positive.
    profile : StepProfile
        Segments covering [-l, l].
    well : WellConfig
        Well geometry.

    Returns
    -------
    complex or numpy.ndarray of complex :
        psi(l) for each lam.

    Example
    -------
        >>> from stepmom.core import single_segment_profile
        >>> val = transfer_matrix_char(np.pi / 2, single_segment_profile())
        >>> print(abs(val) < 1e-15)
        True
    """
    check_profile(profile, well)
    lam = np.asarray(lam, dtype=float)
    if np.any(~np.isfinite(lam)) or np.any(lam <= 0):
        raise DomainError("lambda must be finite and positive.")
    total = np.broadcast_to(np.eye(2, dtype=complex), lam.shape + (2, 2))
    for segment in profile.segments:
        total = np.matmul(segment_matrices(lam, segment), total)
    return _as_output(total[..., 0, 1])


def characteristic_function(mode, mu0, kind=None, well=DEFAULT_WELL):
    """Real valued function of eta for the root finder.

    Parameters
    ----------
    mode : str
        "hermitian" or "pt".
    mu0 : float
        Step height.
    kind : str or None
        One of CHARACTERISTIC_KINDS. Defaults to the closed form of the mode.
    well : WellConfig
        Only used by the transfer matrix form.

    Returns
    -------
    callable :
        f(eta) -> float or numpy.ndarray, sharing its zeros with the closed
        form of the mode.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    if kind is None:
        kind = HERMITIAN_CLOSED_FORM if mode == HERMITIAN else PT_CLOSED_FORM
    if kind not in CHARACTERISTIC_KINDS:
        raise DomainError("Unknown characteristic form: {}".format(kind))

    if kind == HERMITIAN_CLOSED_FORM:
        if mode != HERMITIAN:
            raise DomainError("The Hermitian closed form needs a real step.")
        return lambda eta: hermitian_char(eta, mu0)
    if kind == PT_CLOSED_FORM:
        if mode != PT:
            raise DomainError("The PT closed form needs an imaginary step.")
        return lambda eta: pt_char(eta, mu0)
    if kind == DETERMINANT_FORM:
        return lambda eta: np.real(determinant_char(eta, mu0, mode))
    if kind == EXPANDED_FORM:
        return lambda eta: expanded_char(eta, mu0, mode)

    profile = two_segment_profile(mode, mu0, well)
    scale = profile_eta_scale(mode, mu0) / well.half_width

    def tm_char(eta):
        return np.real(transfer_matrix_char(np.asarray(eta) * scale, profile, well))

    return tm_char
