#!/usr/bin/env python3
# coding: utf-8

"""Correspondence with the non-Hermitian square well

Znojil's square well with imaginary potential steps +-iZ has the wave number
kappa_z^2 = E_z - iZ, while the PT step momentum well has
kappa^2 = E_mu / (1 + i mu0)^2 (units hbar^2 = 2m = 1). Requiring equal wave
numbers ties the parameters together:

    E_z = (1 - mu0^2) / (1 + mu0^2)^2 E_mu
    Z   = 2 mu0 / (1 + mu0^2)^2 E_mu

and inversely mu0 = Z / (E_z + sqrt(E_z^2 + Z^2)),
E_mu = sqrt(E_z^2 + Z^2) (1 + mu0^2).
"""

import collections
import numpy as np
from stepmom.core import DomainError

ZnojilParams = collections.namedtuple("ZnojilParams", ["E_z", "Z", "E_mu", "mu0"])
ZnojilParams.__doc__ = """Matching parameter sets of the two wells: energy and
non-Hermiticity of the square well, energy and step height of the step
momentum well."""


def _positive(value, name):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError("{} must be a real number.".format(name))
    if not (np.isfinite(value) and value > 0):
        raise DomainError("{} must be finite and positive.".format(name))
    return value


def mu0_from_znojil(E_z, Z):
    """Step height matching a non-Hermitian square well.

    Evaluated as Z / (E_z + hypot(E_z, Z)), which has no cancellation for
    Z << E_z.

    Parameters
    ----------
    E_z : float
        Square well energy, >= 0.
    Z : float
        Non-Hermiticity strength, > 0.

    Returns
    -------
    float :
        mu0 in (0, 1].

    Example
    -------
        >>> print(round(mu0_from_znojil(1.0, 1.0), 8))
        0.41421356
    """
    Z = _positive(Z, "Z")
    try:
        E_z = float(E_z)
    except (TypeError, ValueError):
        raise DomainError("E_z must be a real number.")
    if not (np.isfinite(E_z) and E_z >= 0):
        raise DomainError("E_z must be finite and non-negative.")
    return float(Z / (E_z + np.hypot(E_z, Z)))


def znojil_from_mu0(mu0, E_mu):
    """Square well parameters (E_z, Z) matching a PT step.

    Example
    -------
        >>> E_z, Z = znojil_from_mu0(1.0, 2.0)
        >>> print(E_z, Z)
        0.0 1.0
    """
    mu0 = _positive(mu0, "mu0")
    E_mu = _positive(E_mu, "E_mu")
    denom = (1 + mu0 ** 2) ** 2
    return (1 - mu0 ** 2) / denom * E_mu, 2 * mu0 / denom * E_mu


def znojil_energy(E_z, Z):
    """Step momentum energy E_mu matching (E_z, Z)."""
    mu0 = mu0_from_znojil(E_z, Z)
    return float(np.hypot(E_z, Z) * (1 + mu0 ** 2))


def znojil_wave_number_sq(E_z, Z):
    """kappa_z^2 = E_z - iZ of the square well."""
    return complex(E_z, -Z)


def step_wave_number_sq(mu0, E_mu):
    """kappa^2 = E_mu / (1 + i mu0)^2 of the PT step well."""
    return complex(E_mu / (1 + 1j * mu0) ** 2)


def znojil_params(E_z=None, Z=None, mu0=None, E_mu=None):
    """Complete parameter set from either (E_z, Z) or (mu0, E_mu).

    Raises
    ------
    DomainError :
        Unless exactly one of the two pairs is fully given.

    Example
    -------
        >>> params = znojil_params(mu0=0.2, E_mu=1.0)
        >>> print(round(params.E_z, 6), round(params.Z, 6))
        0.887574 0.369822
    """
    square_pair = E_z is not None and Z is not None
    step_pair = mu0 is not None and E_mu is not None
    given = [v is not None for v in (E_z, Z, mu0, E_mu)]
    if square_pair == step_pair or sum(given) != 2:
        raise DomainError("Give either E_z and Z, or mu0 and E_mu.")
    if square_pair:
        mu0 = mu0_from_znojil(E_z, Z)
        return ZnojilParams(
            E_z=float(E_z), Z=float(Z), E_mu=znojil_energy(E_z, Z), mu0=mu0
        )
    E_z, Z = znojil_from_mu0(mu0, E_mu)
    return ZnojilParams(E_z=E_z, Z=Z, E_mu=float(E_mu), mu0=float(mu0))
