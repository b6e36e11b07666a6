#!/usr/bin/env python3
# coding: utf-8

"""Root finding

Locate every zero of a real characteristic function on a bounded window:
a uniform sign change scan produces brackets, which are then refined with
Brent's method (scipy.optimize.brentq). Near-tangent root pairs, where |f|
dips close to zero without changing sign on the coarse grid, are rescanned
locally on a grid 100 times finer.

All functions are deterministic: the same function and RootConfig always
give the same roots, in increasing order.
"""

import collections
import numpy as np
from scipy import optimize
from stepmom.log import logger
from stepmom.core import DomainError, RootFindingError, check_root_config

RootRecord = collections.namedtuple(
    "RootRecord", ["eta", "bracket", "residual", "iterations"]
)
RootRecord.__doc__ = """A refined root: position, the bracket it was refined
from, |f(eta)| and the number of refinement iterations."""

# Local refinement factor for near-tangent minima of |f|
TANGENCY_REGRID = 100
# Roots closer than this many refine_tol are merged
MERGE_FACTOR = 10


def evaluate(f, grid):
    """Evaluate f on a grid, vectorized when f supports it.

    Parameters
    ----------
    f : callable
        Real valued function of one variable.
    grid : numpy.ndarray of float
        Evaluation points.

    Returns
    -------
    numpy.ndarray of float :
        f(grid), same shape as grid.

    Example
    -------
        >>> evaluate(lambda x: 2 * x, np.array([0.0, 1.0]))
        array([0., 2.])
    """
    try:
        vals = np.asarray(f(grid), dtype=float)
        if vals.shape != grid.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in grid])
    if np.any(np.isnan(vals)):
        raise DomainError("Function is not defined over the whole scan window.")
    return vals


def _grid_brackets(grid, vals):
    """Sign change intervals and exact zeros of sampled values, in order."""
    signs = np.sign(vals)
    zeros = np.flatnonzero(signs == 0)
    changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    brackets = [(grid[i], grid[i]) for i in zeros]
    brackets += [(grid[i], grid[i + 1]) for i in changes]
    return sorted(brackets)


def scan_brackets(f, cfg):
    """Find the brackets of all zeros of f on [cfg.eta_min, cfg.eta_max].

    The window is sampled with a spacing of at most cfg.grid_step. Grid points
    where f is exactly zero are returned as degenerate brackets (a, a), and so
    is the upper end of the window when |f| there is a local minimum below
    cfg.tangency_tol times the largest |f| on the grid. Interior local minima
    below that threshold are rescanned on a grid 100 times finer.

    Parameters
    ----------
    f : callable
        Real valued function, finite over the window.
    cfg : RootConfig
        Scan window and thresholds.

    Returns
    -------
    list of tuples of floats :
        Disjoint brackets (a, b) with f(a) * f(b) < 0, or a == b, sorted.

    Example
    -------
        >>> from stepmom.core import RootConfig
        >>> cfg = RootConfig(eta_min=1e-6, eta_max=2 * np.pi)
        >>> len(scan_brackets(lambda x: np.sin(2 * x), cfg))
        4
    """
    check_root_config(cfg)
    n_points = int(np.ceil((cfg.eta_max - cfg.eta_min) / cfg.grid_step)) + 1
    grid = np.linspace(cfg.eta_min, cfg.eta_max, max(n_points, 2))
    vals = evaluate(f, grid)
    brackets = _grid_brackets(grid, vals)

    absv = np.abs(vals)
    finite = np.isfinite(absv)
    scale = np.max(absv[finite]) if np.any(finite) else 0.0
    threshold = cfg.tangency_tol * scale
    signs = np.sign(vals)

    # Interior minima of |f| without a sign change around them
    inner = np.arange(1, len(grid) - 1)
    is_min = (absv[1:-1] <= absv[:-2]) & (absv[1:-1] <= absv[2:])
    same_sign = (signs[:-2] == signs[1:-1]) & (signs[1:-1] == signs[2:])
    close = (absv[1:-1] < threshold) & (signs[1:-1] != 0)
    for i in inner[is_min & same_sign & close]:
        fine = np.linspace(grid[i - 1], grid[i + 1], 2 * TANGENCY_REGRID + 1)
        found = _grid_brackets(fine, evaluate(f, fine))
        logger.debug(
            "Near tangency at eta=%.6f, %d bracket(s) after regridding",
            grid[i],
            len(found),
        )
        brackets += found

    last = len(grid) - 1
    if signs[last] != 0 and absv[last] < threshold and absv[last] <= absv[last - 1]:
        brackets.append((grid[last], grid[last]))

    logger.debug(
        "Scanned %d points on [%g, %g]: %d bracket(s)",
        len(grid),
        cfg.eta_min,
        cfg.eta_max,
        len(brackets),
    )
    return sorted(set(brackets))


def refine(f, bracket, cfg):
    """Refine a bracketed root with Brent's method.

    Parameters
    ----------
    f : callable
        Real valued function.
    bracket : tuple of floats
        (a, b) with a sign change of f, or a degenerate bracket (a, a).
    cfg : RootConfig
        Uses refine_tol and max_refine_iters.

    Returns
    -------
    RootRecord :
        The refined root.

    Raises
    ------
    RootFindingError :
        When the bracket holds no sign change or Brent's method does not
        converge within cfg.max_refine_iters iterations.

    Example
    -------
        >>> from stepmom.core import RootConfig
        >>> rec = refine(lambda x: np.sin(2 * x), (1.5, 1.6), RootConfig())
        >>> print(abs(rec.eta - np.pi / 2) < 1e-11)
        True
    """
    low, high = float(bracket[0]), float(bracket[1])
    if low == high:
        return RootRecord(low, (low, high), abs(float(f(low))), 0)
    try:
        root, info = optimize.brentq(
            f,
            low,
            high,
            xtol=cfg.refine_tol,
            maxiter=int(cfg.max_refine_iters),
            full_output=True,
            disp=False,
        )
    except (RuntimeError, ValueError) as err:
        raise RootFindingError(
            "Could not refine root in [{0}, {1}]: {2}".format(low, high, err)
        )
    if not info.converged:
        raise RootFindingError(
            "Root in [{0}, {1}] did not converge after {2} iterations.".format(
                low, high, info.iterations
            )
        )
    root = float(root)
    return RootRecord(root, (low, high), abs(float(f(root))), info.iterations)


def find_roots(f, cfg):
    """All roots of f on the scan window, strictly increasing.

    Roots closer than 10 * cfg.refine_tol are merged into the first one.

    Example
    -------
        >>> from stepmom.core import RootConfig
        >>> cfg = RootConfig(eta_min=1e-6, eta_max=2 * np.pi)
        >>> roots = find_roots(lambda x: np.sin(2 * x), cfg)
        >>> [round(r.eta / np.pi, 9) for r in roots]
        [0.5, 1.0, 1.5, 2.0]
    """
    records = [refine(f, bracket, cfg) for bracket in scan_brackets(f, cfg)]
    records.sort(key=lambda rec: rec.eta)
    roots = []
    for rec in records:
        if roots and rec.eta - roots[-1].eta <= MERGE_FACTOR * cfg.refine_tol:
            continue
        roots.append(rec)
    return roots


def count_roots(f, cfg):
    """Number of distinct roots of f on the scan window."""
    return len(find_roots(f, cfg))
