#!/usr/bin/env python3
# coding: utf-8

"""Domain types and unit conventions

Value types shared by all stepmom modules, together with the dimensionless
reductions of the step momentum problem:

    -modes of the auxiliary step (Hermitian real step, PT imaginary step)
    -well geometry and the ground state scale E0 of the standard well
    -eigenstate records, root finder settings and sampled functions
    -energy ratios and complex wave numbers as functions of eta = lambda * l

Everything here is an immutable value or a pure function. Units default to
hbar = 2m = 1 and l = 1; public results are the ratios E/E0 and eta.
"""

import collections
import numpy as np

__all__ = [
    "HERMITIAN",
    "PT",
    "MODES",
    "DomainError",
    "SingularRepresentationError",
    "RootFindingError",
    "MissingStateError",
    "NullEigenfunctionError",
    "Segment",
    "StepProfile",
    "WellConfig",
    "EigenState",
    "RootConfig",
    "SampledFunction",
    "DEFAULT_WELL",
    "DEFAULT_ROOT_CONFIG",
    "check_mode",
    "check_mu0",
    "check_root_config",
    "check_profile",
    "ground_energy",
    "energy_ratio",
    "wave_numbers",
    "profile_eta_scale",
    "two_segment_profile",
    "single_segment_profile",
]

HERMITIAN = "hermitian"
PT = "pt"
MODES = (HERMITIAN, PT)


class DomainError(ValueError):
    """Raised when physical or numerical parameters are out of range."""


class SingularRepresentationError(ArithmeticError):
    """Raised when a coefficient formula divides by a vanishing quantity."""


class RootFindingError(RuntimeError):
    """Raised when a bracketed root could not be refined."""


class MissingStateError(LookupError):
    """Raised when a requested bound state does not exist."""


class NullEigenfunctionError(ArithmeticError):
    """Raised when a root only admits the identically zero wave function."""


Segment = collections.namedtuple("Segment", ["start", "end", "alpha"])
Segment.__doc__ = """Interval [start, end] of the well where the momentum
operator is -i hbar alpha d/dx, alpha = 1 + mu being complex in general."""

StepProfile = collections.namedtuple("StepProfile", ["mode", "mu0", "segments"])
StepProfile.__doc__ = """Piecewise auxiliary function mu(x) over [-l, l].

mode and mu0 describe the two-segment steps; segments is the ordered tuple of
Segment covering the well, used by the transfer matrix formulation. A general
profile may set mode and mu0 to None."""

WellConfig = collections.namedtuple(
    "WellConfig", ["half_width", "hbar", "mass"], defaults=[1.0, 1.0, 0.5]
)
WellConfig.__doc__ = """Infinite well on [-l, l]; units default to hbar = 2m = 1."""

EigenState = collections.namedtuple(
    "EigenState",
    ["n", "eta", "energy_ratio", "kappa_l", "kappa_bar_l", "norm"],
)
EigenState.__doc__ = """One bound state.

n is the 1-based state index, eta the root lambda * l, energy_ratio is E_n/E0,
kappa_l and kappa_bar_l the dimensionless wave numbers of the x < 0 and x > 0
branches and norm the real positive normalization constant for l = 1 (it
scales as l ** -0.5)."""

RootConfig = collections.namedtuple(
    "RootConfig",
    [
        "eta_min",
        "eta_max",
        "grid_step",
        "refine_tol",
        "max_refine_iters",
        "tangency_tol",
        "null_tol",
    ],
    defaults=[1e-6, 8 * np.pi, 1e-3, 1e-12, 100, 1e-8, 1e-12],
)
RootConfig.__doc__ = """Scan window, grid resolution, refinement tolerance and
root acceptance filters (tangency re-gridding threshold, null wave function
threshold)."""

SampledFunction = collections.namedtuple(
    "SampledFunction", ["grid", "values", "meta"]
)
SampledFunction.__doc__ = """Values of a function on a strictly increasing grid,
with a metadata dictionary (mode, mu0, state index or momentum eigenvalue)."""

DEFAULT_WELL = WellConfig()
DEFAULT_ROOT_CONFIG = RootConfig()


def check_mode(mode):
    """Return the normalized mode string or raise DomainError.

    Example
    -------
        >>> check_mode("PT")
        'pt'
    """
    try:
        norm_mode = mode.lower()
    except AttributeError:
        raise DomainError("Mode must be a string, got {!r}.".format(mode))
    if norm_mode not in MODES:
        raise DomainError(
            "Unknown mode: {0}. Valid modes are {1}.".format(
                mode, ", ".join(MODES)
            )
        )
    return norm_mode


def check_mu0(mu0, mode):
    """Validate the step height for a given mode.

    The Hermitian step must satisfy 0 <= mu0 < 1, otherwise the factor
    (1 - mu0) of the x > 0 kinetic term is not positive. The PT step only
    requires mu0 >= 0.

    Returns
    -------
    float :
        mu0 as a float.
    """
    mode = check_mode(mode)
    try:
        mu0 = float(mu0)
    except (TypeError, ValueError):
        raise DomainError("mu0 must be a real number, got {!r}.".format(mu0))
    if not np.isfinite(mu0) or mu0 < 0:
        raise DomainError("mu0 must be finite and non-negative.")
    if mode == HERMITIAN and mu0 >= 1:
        raise DomainError("Hermitian step height must be below 1.")
    return mu0


def check_root_config(cfg):
    """Raise DomainError if a RootConfig is inconsistent."""
    if not cfg.eta_min > 0:
        raise DomainError("eta_min must be positive.")
    if not cfg.eta_min < cfg.eta_max:
        raise DomainError("eta_min must be lower than eta_max.")
    if not cfg.grid_step > 0:
        raise DomainError("grid_step must be positive.")
    if not cfg.refine_tol > 0:
        raise DomainError("refine_tol must be positive.")
    if int(cfg.max_refine_iters) < 1:
        raise DomainError("max_refine_iters must be at least 1.")
    if cfg.tangency_tol < 0 or cfg.null_tol < 0:
        raise DomainError("Acceptance thresholds cannot be negative.")
    return cfg


def check_well(well):
    """Raise DomainError unless the well has positive width and units."""
    if not (well.half_width > 0 and well.hbar > 0 and well.mass > 0):
        raise DomainError("Well half width, hbar and mass must be positive.")
    return well


def check_profile(profile, well=DEFAULT_WELL):
    """Check that the segments of a profile partition [-l, l].

    Parameters
    ----------
    profile : StepProfile
        The profile to validate.
    well : WellConfig
        Well whose half width the segments must cover.

    Returns
    -------
    StepProfile :
        The profile, unchanged.
    """
    check_well(well)
    segments = profile.segments
    if not segments:
        raise DomainError("A step profile needs at least one segment.")
    l = well.half_width
    gap_tol = 1e-12 * l
    if abs(segments[0].start + l) > gap_tol or abs(segments[-1].end - l) > gap_tol:
        raise DomainError("Segments must span the whole well [-l, l].")
    for i, seg in enumerate(segments):
        if not seg.end > seg.start:
            raise DomainError("Segment {} has non-positive length.".format(i))
        if seg.alpha == 0:
            raise DomainError("Segment {} has a vanishing factor.".format(i))
        if i > 0 and abs(seg.start - segments[i - 1].end) > gap_tol:
            raise DomainError(
                "Segments {0} and {1} leave a gap or overlap.".format(i - 1, i)
            )
    return profile


def ground_energy(well=DEFAULT_WELL):
    """Ground state energy E0 = pi^2 hbar^2 / (8 m l^2) of the standard well.

    Example
    -------
        >>> print(round(ground_energy(WellConfig(1.0, 1.0, 0.5)), 6))
        2.467401
    """
    check_well(well)
    return np.pi ** 2 * well.hbar ** 2 / (8 * well.mass * well.half_width ** 2)


def _check_eta(eta):
    eta = np.asarray(eta, dtype=float)
    if np.any(~np.isfinite(eta)) or np.any(eta <= 0):
        raise DomainError("eta must be finite and positive.")
    return eta


def _as_output(arr):
    """Return python scalars for 0-d results, arrays otherwise."""
    if np.ndim(arr) == 0:
        return arr.item() if hasattr(arr, "item") else arr
    return arr


def energy_ratio(eta, mu0, mode):
    """Energy of a root in units of E0.

    Parameters
    ----------
    eta : float or numpy.ndarray
        Dimensionless root(s) eta = lambda * l, strictly positive.
    mu0 : float
        Step height.
    mode : str
        "hermitian" or "pt".

    Returns
    -------
    float or numpy.ndarray :
        (2 eta / pi)^2 for the Hermitian step, with an extra factor
        (1 + mu0^2)^2 for the PT step.

    Example
    -------
        >>> print(energy_ratio(np.pi / 2, 0.0, HERMITIAN))
        1.0
        >>> print(energy_ratio(np.pi, 0.0, PT))
        4.0
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    eta = _check_eta(eta)
    ratio = (2 * eta / np.pi) ** 2
    if mode == PT:
        ratio = ratio * (1 + mu0 ** 2) ** 2
    return _as_output(ratio)


def wave_numbers(eta, mu0, mode):
    """Dimensionless wave numbers (kappa l, kappa_bar l) of both branches.

    The Hermitian step gives real wave numbers eta / (1 + mu0) and
    eta / (1 - mu0). The PT step gives the conjugate pair
    eta (1 - i mu0), eta (1 + i mu0).

    Example
    -------
        >>> k, kb = wave_numbers(1.0, 0.5, HERMITIAN)
        >>> print(round(k.real, 6), round(kb.real, 6))
        0.666667 2.0
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    eta = _check_eta(eta)
    if mode == HERMITIAN:
        kappa_l = eta / (1 + mu0) + 0j
        kappa_bar_l = eta / (1 - mu0) + 0j
    else:
        kappa_l = eta * (1 - 1j * mu0)
        kappa_bar_l = eta * (1 + 1j * mu0)
    return _as_output(kappa_l), _as_output(kappa_bar_l)


def profile_eta_scale(mode, mu0):
    """Factor turning the mode's eta into the physical lambda * l.

    lambda = sqrt(2 m E) / hbar is the variable of the transfer matrix. The
    Hermitian eta already is lambda * l; the PT eta carries a 1 / (1 + mu0^2).
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    return 1.0 if mode == HERMITIAN else 1.0 + mu0 ** 2


def two_segment_profile(mode, mu0, well=DEFAULT_WELL):
    """The step profile of the infinite well: factor 1 + mu on each half.

    Example
    -------
        >>> prof = two_segment_profile(PT, 0.1)
        >>> [seg.alpha for seg in prof.segments]
        [(1+0.1j), (1-0.1j)]
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    check_well(well)
    l = well.half_width
    step = mu0 if mode == HERMITIAN else 1j * mu0
    segments = (Segment(-l, 0.0, 1 + step), Segment(0.0, l, 1 - step))
    return StepProfile(mode=mode, mu0=mu0, segments=segments)


def single_segment_profile(well=DEFAULT_WELL, alpha=1.0):
    """A uniform profile; alpha = 1 is the canonical momentum."""
    check_well(well)
    l = well.half_width
    profile = StepProfile(
        mode=None, mu0=None, segments=(Segment(-l, l, alpha),)
    )
    return check_profile(profile, well)
