#!/usr/bin/env python3
# coding: utf-8

"""Spectra

Bound state spectra of the step momentum well for both modes, energy tables
over several step heights, the characteristic curves behind them and the
critical PT step height above which no real energy state survives.

The Hermitian step has infinitely many bound states: the scan window is
doubled until enough roots are found. The PT step only has finitely many
real energy states, all below

    eta_cap = asinh(1 / mu0) / (2 mu0)

since beyond it mu0 sinh(2 eta mu0) > 1 >= |sin(2 eta)|. A request for more
states than exist yields a shorter spectrum, not an error.
"""

import collections
import numpy as np
import pandas as pd
from stepmom.log import logger
from stepmom.core import (
    HERMITIAN,
    PT,
    DEFAULT_ROOT_CONFIG,
    DEFAULT_WELL,
    DomainError,
    EigenState,
    SampledFunction,
    check_mode,
    check_mu0,
    check_profile,
    check_root_config,
    energy_ratio,
    wave_numbers,
)
from stepmom.characteristic import characteristic_function, transfer_matrix_char
from stepmom.rootfind import find_roots
from stepmom.wavefunction import normalize, raw_sup_norm

Spectrum = collections.namedtuple("Spectrum", ["mode", "mu0", "states", "cfg"])
Spectrum.__doc__ = """Bound states of one (mode, mu0), sorted by eta, with the
RootConfig used to find them."""

ProfileState = collections.namedtuple(
    "ProfileState", ["n", "lambda_l", "energy_ratio"]
)
ProfileState.__doc__ = """Bound state of a general segment profile: index,
physical wave number times l and E/E0."""

# Upper limit of any adaptive scan window, in eta
MAX_ETA = 4096.0
# Hermitian scan step as a fraction of 1 - mu0, the scale of the root spacing
HERMITIAN_STEP_FRACTION = 0.05


def _check_n_states(n_states):
    try:
        n_states = int(n_states)
    except (TypeError, ValueError):
        raise DomainError("Number of states must be an integer.")
    if n_states < 1:
        raise DomainError("Number of states must be at least 1.")
    return n_states


def pt_eta_cap(mu0):
    """Upper bound on the real roots of the PT characteristic function.

    Returns
    -------
    float :
        asinh(1 / mu0) / (2 mu0), infinite for mu0 = 0.

    Example
    -------
        >>> print(round(pt_eta_cap(0.3), 3))
        3.198
    """
    mu0 = check_mu0(mu0, PT)
    if mu0 == 0:
        return np.inf
    return float(np.arcsinh(1 / mu0) / (2 * mu0))


def _roots_up_to(f, cfg, n_wanted, ceiling):
    """Roots of f, doubling the window until n_wanted or the ceiling."""
    eta_max = min(cfg.eta_max, ceiling)
    while True:
        roots = find_roots(f, cfg._replace(eta_max=eta_max))
        if len(roots) >= n_wanted or eta_max >= ceiling:
            return roots, eta_max
        eta_max = min(2 * eta_max, ceiling)
        logger.debug("Extending scan window to eta_max=%g", eta_max)


def resolved_config(mode, mu0, n_states, cfg):
    """Scan settings fine enough to separate neighbouring roots.

    Hermitian roots are spaced by about pi (1 - mu0) when mu0 approaches 1,
    so the grid step is reduced to a twentieth of 1 - mu0 and the initial
    window to the span of n_states + 1 such spacings. Other cases return cfg
    unchanged.

    Example
    -------
        >>> cfg = resolved_config("hermitian", 0.9999, 5, DEFAULT_ROOT_CONFIG)
        >>> print(round(cfg.grid_step, 9))
        5e-06
        >>> resolved_config("pt", 0.3, 5, DEFAULT_ROOT_CONFIG).grid_step
        0.001
    """
    if mode != HERMITIAN:
        return cfg
    step = HERMITIAN_STEP_FRACTION * (1 - mu0)
    if step >= cfg.grid_step:
        return cfg
    window = max((n_states + 1) * np.pi * (1 - mu0), cfg.eta_min + step)
    logger.info(
        "Hermitian step mu0=%g: scanning with grid_step=%g up to eta=%g",
        mu0,
        step,
        min(cfg.eta_max, window),
    )
    return cfg._replace(grid_step=step, eta_max=min(cfg.eta_max, window))


def _build_states(roots, mode, mu0, cfg):
    states = []
    for rec in roots:
        kappa_l, kappa_bar_l = wave_numbers(rec.eta, mu0, mode)
        if raw_sup_norm(kappa_l, kappa_bar_l, mode) < cfg.null_tol:
            logger.debug("Dropping null root at eta=%g", rec.eta)
            continue
        states.append(
            EigenState(
                n=len(states) + 1,
                eta=rec.eta,
                energy_ratio=energy_ratio(rec.eta, mu0, mode),
                kappa_l=kappa_l,
                kappa_bar_l=kappa_bar_l,
                norm=normalize(kappa_l, kappa_bar_l, mode),
            )
        )
    return states


def solve_spectrum(mode, mu0, n_states, cfg=DEFAULT_ROOT_CONFIG):
    """Lowest bound states of the step momentum well.

    Parameters
    ----------
    mode : str
        "hermitian" or "pt".
    mu0 : float
        Step height.
    n_states : int
        Number of states requested, at least 1.
    cfg : RootConfig
        Root finder settings. eta_max is the initial scan window.

    Returns
    -------
    Spectrum :
        Up to n_states states. PT spectra may hold fewer: a warning is logged.

    Example
    -------
        >>> spec = solve_spectrum("hermitian", 0.0, 3)
        >>> [round(s.energy_ratio, 9) for s in spec.states]
        [1.0, 4.0, 9.0]
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    n_states = _check_n_states(n_states)
    check_root_config(cfg)
    cfg = resolved_config(mode, mu0, n_states, cfg)
    f = characteristic_function(mode, mu0)

    ceiling = MAX_ETA
    if mode == PT:
        ceiling = min(pt_eta_cap(mu0) + cfg.grid_step, MAX_ETA)
        if ceiling <= cfg.eta_min:
            logger.warning(
                "PT step mu0=%g leaves no room for real energy states.", mu0
            )
            return Spectrum(mode=mode, mu0=mu0, states=[], cfg=cfg)

    roots, eta_max = _roots_up_to(f, cfg, n_states, ceiling)
    states = _build_states(roots, mode, mu0, cfg)[:n_states]
    if len(states) < n_states:
        if mode == PT and eta_max < MAX_ETA:
            logger.warning(
                "PT step mu0=%g has only %d real energy state(s), %d requested.",
                mu0,
                len(states),
                n_states,
            )
        else:
            logger.warning(
                "Scan window capped at eta=%g: %d of %d states found.",
                eta_max,
                len(states),
                n_states,
            )
    return Spectrum(mode=mode, mu0=mu0, states=states, cfg=cfg)


def pt_root_count(mu0, cfg=DEFAULT_ROOT_CONFIG):
    """Number of real energy PT states.

    The whole window up to pt_eta_cap is scanned. For mu0 = 0 the count is
    infinite.
    """
    mu0 = check_mu0(mu0, PT)
    if mu0 == 0:
        return np.inf
    ceiling = pt_eta_cap(mu0) + cfg.grid_step
    if ceiling <= cfg.eta_min:
        return 0
    if ceiling > MAX_ETA:
        logger.warning("Counting PT roots for mu0=%g up to eta=%g only.", mu0, MAX_ETA)
        ceiling = MAX_ETA
    roots = find_roots(characteristic_function(PT, mu0), cfg._replace(eta_max=ceiling))
    return len(roots)


def critical_mu0(cfg=DEFAULT_ROOT_CONFIG, search_tol=1e-4):
    """Largest PT step height that still has a real energy state.

    Bisection on mu0 in [0, 1] of the predicate "pt_root_count(mu0) > 0",
    which holds at 0 and fails at 1.

    Parameters
    ----------
    cfg : RootConfig
        Root finder settings used for each count.
    search_tol : float
        Width of the final bisection interval.

    Returns
    -------
    float :
        The lower end of the final interval.
    """
    if not search_tol > 0:
        raise DomainError("search_tol must be positive.")
    check_root_config(cfg)
    low, high = 0.0, 1.0
    while high - low > search_tol:
        mid = 0.5 * (low + high)
        if pt_root_count(mid, cfg) > 0:
            low = mid
        else:
            high = mid
        logger.debug("Critical mu0 in [%.6f, %.6f]", low, high)
    return low


def table_rows(mode, mu0_list, n_states, cfg=DEFAULT_ROOT_CONFIG):
    """Energy ratios E_n/E0 for several step heights.

    Parameters
    ----------
    mode : str
        "hermitian" or "pt".
    mu0_list : list of floats
        Step heights, one column each.
    n_states : int
        Number of rows.
    cfg : RootConfig
        Root finder settings.

    Returns
    -------
    pandas.DataFrame :
        Index n = 1..n_states, one column per mu0. Absent states are NaN.

    Example
    -------
        >>> tab = table_rows("hermitian", [0.0], 5)
        >>> tab[0.0].round(6).tolist()
        [1.0, 4.0, 9.0, 16.0, 25.0]
    """
    n_states = _check_n_states(n_states)
    table = pd.DataFrame(
        index=pd.RangeIndex(1, n_states + 1, name="n"), dtype=float
    )
    for mu0 in mu0_list:
        spec = solve_spectrum(mode, mu0, n_states, cfg)
        column = np.full(n_states, np.nan)
        for state in spec.states:
            column[state.n - 1] = state.energy_ratio
        table[float(mu0)] = column
    table.columns.name = "mu0"
    return table


def characteristic_curve(mode, mu0, eta_grid, kind=None):
    """Samples of a characteristic function, for figure data.

    Returns
    -------
    SampledFunction :
        Real values on eta_grid; meta holds mode, mu0 and kind.
    """
    mode = check_mode(mode)
    mu0 = check_mu0(mu0, mode)
    grid = np.asarray(eta_grid, dtype=float)
    if grid.ndim != 1 or np.any(np.diff(grid) <= 0):
        raise DomainError("eta grid must be strictly increasing.")
    f = characteristic_function(mode, mu0, kind)
    values = np.asarray(f(grid), dtype=float)
    meta = {"kind": "characteristic", "mode": mode, "mu0": mu0}
    return SampledFunction(grid=grid, values=values, meta=meta)


def solve_profile_spectrum(profile, n_states, cfg=DEFAULT_ROOT_CONFIG, well=DEFAULT_WELL):
    """Bound states of an arbitrary segment profile from the transfer matrix.

    Roots are searched in x = lambda * l on the real axis. Profiles with
    complex factors are supported when their transfer function is real on
    that axis (such as the PT step); roots where it is not are dropped.

    Parameters
    ----------
    profile : StepProfile
        Segments covering the well.
    n_states : int
        Number of states requested.
    cfg : RootConfig
        Root finder settings, in units of lambda * l.
    well : WellConfig
        Well geometry.

    Returns
    -------
    list of ProfileState :
        States with E/E0 = (2 lambda l / pi)^2.

    Example
    -------
        >>> from stepmom.core import single_segment_profile
        >>> states = solve_profile_spectrum(single_segment_profile(), 2)
        >>> [round(s.energy_ratio, 9) for s in states]
        [1.0, 4.0]
    """
    check_profile(profile, well)
    n_states = _check_n_states(n_states)
    check_root_config(cfg)
    l = well.half_width

    def real_part(x):
        return np.real(transfer_matrix_char(np.asarray(x) / l, profile, well))

    roots, _ = _roots_up_to(real_part, cfg, n_states, MAX_ETA)
    states = []
    for rec in roots:
        value = transfer_matrix_char(rec.eta / l, profile, well)
        if abs(value.imag) > 1e-8 * l:
            logger.debug("Dropping complex root near lambda l=%g", rec.eta)
            continue
        lambda_l = rec.eta
        states.append(
            ProfileState(
                n=len(states) + 1,
                lambda_l=lambda_l,
                energy_ratio=(2 * lambda_l / np.pi) ** 2,
            )
        )
    if len(states) < n_states:
        logger.warning("Only %d of %d profile states found.", len(states), n_states)
    return states[:n_states]
