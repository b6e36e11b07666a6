#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""File formats

Tables, sampled functions and run manifests as CSV or JSON, the JSON root
finder configuration file, and the embedded reference energy tables.

CSV files have a header row, comma delimiters, LF line endings and 12
significant digits; absent states are written as "-". JSON files hold a
top-level object {"manifest": ..., "data": [...]} with absent values as null
and floats at full double precision.
"""

import datetime
import json
import os
from os.path import dirname, join
import numpy as np
import pandas as pd
from stepmom.log import logger
from stepmom.version import __version__
from stepmom.core import DEFAULT_ROOT_CONFIG, DomainError, RootConfig, check_root_config

CONFIG_ENV_VAR = "STEPMOM_CONFIG"
FLOAT_FORMAT = "%.12g"
ABSENT = "-"
REFERENCE_TABLE = join(dirname(__file__), "data", "reference_energies.tsv")


def parse_float_list(text):
    """Parse a comma separated list of floats.

    Example
    -------
        >>> parse_float_list("0,0.1, 0.2")
        [0.0, 0.1, 0.2]
    """
    try:
        return [float(val) for val in str(text).split(",") if val.strip()]
    except ValueError:
        raise DomainError("Invalid list of numbers: {}".format(text))


def parse_multiple_of_pi(text):
    """Parse a float, optionally written as a multiple of pi.

    Example
    -------
        >>> round(parse_multiple_of_pi("2pi"), 6)
        6.283185
        >>> parse_multiple_of_pi("1.5")
        1.5
    """
    text = str(text).strip().lower()
    try:
        if text.endswith("pi"):
            factor = text[:-2].rstrip("*")
            return (float(factor) if factor else 1.0) * np.pi
        return float(text)
    except ValueError:
        raise DomainError("Invalid number: {}".format(text))


def load_root_config(path=None, overrides=None, env=None):
    """Build a RootConfig from defaults, config files and explicit values.

    Later sources win: built-in defaults, the JSON file named by the
    STEPMOM_CONFIG environment variable, the JSON file at path, then the
    non-None entries of overrides.

    Parameters
    ----------
    path : str or None
        JSON file whose keys are RootConfig field names.
    overrides : dict or None
        Field values given on the command line.
    env : dict or None
        Environment, defaults to os.environ.

    Returns
    -------
    RootConfig :
        The validated configuration.

    Example
    -------
        >>> load_root_config(overrides={"grid_step": 0.01}, env={}).grid_step
        0.01
    """
    env = os.environ if env is None else env
    values = DEFAULT_ROOT_CONFIG._asdict()
    for source in (env.get(CONFIG_ENV_VAR), path):
        if source:
            values.update(_read_config_file(source))
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = _check_config_value(key, val)
    return check_root_config(RootConfig(**values))


def _read_config_file(path):
    try:
        with open(path) as handle:
            content = json.load(handle)
    except ValueError as err:
        raise DomainError("Config file {0} is not valid JSON: {1}".format(path, err))
    if not isinstance(content, dict):
        raise DomainError("Config file {} must hold a JSON object.".format(path))
    logger.debug("Loaded solver settings from %s", path)
    return {key: _check_config_value(key, val) for key, val in content.items()}


def _check_config_value(key, val):
    if key not in RootConfig._fields:
        raise DomainError(
            "Unknown config key: {0}. Valid keys are {1}.".format(
                key, ", ".join(RootConfig._fields)
            )
        )
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise DomainError("Config value for {} must be a number.".format(key))
    if key == "max_refine_iters":
        if int(val) != val:
            raise DomainError("max_refine_iters must be an integer.")
        return int(val)
    return float(val)


def build_manifest(command, params, cfg=None, outputs=None, timestamp=True):
    """Run description stored with every output.

    Parameters
    ----------
    command : str
        Subcommand name.
    params : dict
        Mode, step heights, state indices, grid description...
    cfg : RootConfig or None
        Root finder settings used.
    outputs : list of str or None
        Files written by the run.
    timestamp : bool
        Whether to add the UTC creation time. Manifests embedded in data
        files carry none, so those files are identical between runs.

    Returns
    -------
    dict :
        JSON serializable manifest.
    """
    manifest = {"command": command, "version": __version__}
    manifest.update(params)
    if cfg is not None:
        manifest["root_config"] = dict(cfg._asdict())
    manifest["outputs"] = list(outputs or [])
    if timestamp:
        manifest["timestamp"] = (
            datetime.datetime.now(datetime.timezone.utc).isoformat()
        )
    return manifest


def _json_ready(value):
    """Python scalar for a JSON value, None for NaN."""
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float) and np.isnan(value):
        return None
    return value


def frame_records(frame):
    """Rows of a DataFrame as dictionaries ready for json.dump."""
    return [
        {col: _json_ready(val) for col, val in zip(frame.columns, row)}
        for row in frame.itertuples(index=False, name=None)
    ]


def write_csv(frame, out):
    """Write a DataFrame as CSV to a path or an open file handle."""
    frame.to_csv(
        out,
        index=False,
        float_format=FLOAT_FORMAT,
        na_rep=ABSENT,
        lineterminator="\n",
    )


def write_json(frame, manifest, out):
    """Write {"manifest": manifest, "data": rows} to a path or file handle."""
    content = {"manifest": manifest, "data": frame_records(frame)}
    if hasattr(out, "write"):
        json.dump(content, out, indent=2, allow_nan=False)
        out.write("\n")
        return
    with open(out, "w") as handle:
        json.dump(content, handle, indent=2, allow_nan=False)
        handle.write("\n")


def manifest_path(out_path):
    """Path of the manifest sidecar of an output file."""
    return out_path + ".manifest.json"


def write_manifest(manifest, out_path):
    """Write the manifest sidecar next to out_path and return its path."""
    side = manifest_path(out_path)
    with open(side, "w") as handle:
        json.dump(manifest, handle, indent=2, allow_nan=False)
        handle.write("\n")
    return side


def spectra_frame(spectra, n_states):
    """Long format table of several spectra.

    Parameters
    ----------
    spectra : list of Spectrum
        Solved spectra.
    n_states : int
        Number of rows per spectrum; missing states get NaN eta and energy.

    Returns
    -------
    pandas.DataFrame :
        Columns mode, mu0, n, eta, energy_ratio.
    """
    rows = []
    for spec in spectra:
        found = {state.n: state for state in spec.states}
        for n in range(1, n_states + 1):
            state = found.get(n)
            rows.append(
                {
                    "mode": spec.mode,
                    "mu0": spec.mu0,
                    "n": n,
                    "eta": state.eta if state else np.nan,
                    "energy_ratio": state.energy_ratio if state else np.nan,
                }
            )
    return pd.DataFrame(rows, columns=["mode", "mu0", "n", "eta", "energy_ratio"])


def wavefunction_frame(psi):
    """Columns x, re_psi, im_psi, density of a sampled eigenfunction."""
    values = np.asarray(psi.values, dtype=complex)
    return pd.DataFrame(
        {
            "x": psi.grid,
            "re_psi": values.real,
            "im_psi": values.imag,
            "density": np.abs(values) ** 2,
        }
    )


def curves_frame(curves):
    """Long format mu0, eta, value table of characteristic curves."""
    frames = [
        pd.DataFrame(
            {"mu0": curve.meta["mu0"], "eta": curve.grid, "value": curve.values}
        )
        for curve in curves
    ]
    return pd.concat(frames, ignore_index=True)


def load_reference_table(path=REFERENCE_TABLE):
    """Load the reference energy ratios.

    Returns
    -------
    pandas.DataFrame :
        Columns table, mode, mu0, n, energy_ratio; absent states are NaN.

    Example
    -------
        >>> ref = load_reference_table()
        >>> sorted(ref.table.unique())
        ['tab1', 'tab2']
        >>> int(ref.energy_ratio.isna().sum())
        1
    """
    return pd.read_csv(path, sep="\t", na_values=[ABSENT])
