#!/usr/bin/env python3
# coding: utf-8

"""Abstract command classes for stepmom

This module contains all classes related to stepmom
commands:

    -spectrum (energy tables E_n/E0 for one or more step heights)
    -density (normalized eigenfunction and density of one state)
    -curve (characteristic function samples, figure data)
    -critical (PT step height above which no real state survives)
    -reproduce (reference tables and figure datasets, with a report)
    -znojil (parameter map to the non-Hermitian square well)

Note
----
Structure based on Rémy Greinhofer (rgreinho) tutorial on subcommands in
docopt : https://github.com/rgreinho/docopt-subcommands-example

Raises
------
NotImplementedError
    Will be raised if AbstractCommand is called for
    some reason instead of one of its children.
DomainError
    Will be raised for invalid options or physical parameters.
"""
import os
import sys
from os.path import dirname, join
from docopt import docopt
import numpy as np
import pandas as pd
from scipy import integrate
import stepmom.io as sio
import stepmom.spectrum as ssp
import stepmom.wavefunction as swf
import stepmom.zmap as szm
from stepmom.core import (
    HERMITIAN,
    PT,
    DomainError,
    MissingStateError,
    check_mode,
)
from stepmom.log import logger, set_file_handler, remove_file_handler

# Relative tolerance when comparing with the reference tables
REPRODUCE_TOL = 2e-3
FIGURE_MU0 = {
    "fig1": [0.0, 0.1, 0.2, 0.3, 0.4],
    "fig2": [0.0, 0.1, 0.2, 0.3],
    "fig3": [0.0, 0.1, 0.2, 0.3, 0.4],
    "fig4": [0.0, 0.1, 0.2, 0.3],
}
TARGETS = ("tab1", "tab2", "fig1", "fig2", "fig3", "fig4")


class AbstractCommand:
    """Abstract base command class

    Base class for the commands from which
    other stepmom commands derive.
    """

    def __init__(self, command_args, global_args):
        """Initialize the commands"""
        self.args = docopt(self.__doc__, argv=command_args)
        self.global_args = global_args

    def execute(self):
        """Execute the commands"""
        raise NotImplementedError

    def check_output_path(self, path, force=False):
        """Throws error if the output file exists. Create required file tree otherwise."""
        # Get complete output filename and prevent overwriting unless force is enabled
        if not force and os.path.exists(path):
            raise IOError("Output file already exists. Use --force to overwrite")
        if dirname(path):
            os.makedirs(dirname(path), exist_ok=True)

    def root_config(self):
        """Solver settings from --config and the tolerance flags."""
        overrides = {
            "grid_step": self._float_opt("--grid-step"),
            "refine_tol": self._float_opt("--refine-tol"),
            "eta_max": self._float_opt("--eta-max", pi_multiple=True),
        }
        return sio.load_root_config(self.args.get("--config"), overrides)

    def _float_opt(self, name, pi_multiple=False):
        val = self.args.get(name)
        if val is None:
            return None
        if pi_multiple:
            return sio.parse_multiple_of_pi(val)
        try:
            return float(val)
        except ValueError:
            raise DomainError("Invalid value for {0}: {1}".format(name, val))

    def _int_opt(self, name):
        try:
            return int(self.args[name])
        except ValueError:
            raise DomainError("{0} must be an integer, got {1}".format(name, self.args[name]))

    def write_output(self, frame, params, cfg=None):
        """Write a table to --out (or stdout) in the --format format.

        A file output gets a manifest sidecar with a timestamp; JSON output
        also embeds the manifest without it.
        """
        fmt = (self.args.get("--format") or "csv").lower()
        if fmt not in ("csv", "json"):
            raise DomainError("Unknown format: {}. Use csv or json.".format(fmt))
        out = self.args.get("--out")
        command = type(self).__name__.lower()
        outputs = [out] if out else []
        embedded = sio.build_manifest(command, params, cfg, outputs, timestamp=False)
        if out:
            self.check_output_path(out, force=self.args.get("--force"))
            if fmt == "csv":
                sio.write_csv(frame, out)
            else:
                sio.write_json(frame, embedded, out)
            side = sio.write_manifest(
                sio.build_manifest(command, params, cfg, outputs), out
            )
            logger.info("Results written to %s (manifest: %s)", out, side)
        elif fmt == "csv":
            sio.write_csv(frame, sys.stdout)
        else:
            sio.write_json(frame, embedded, sys.stdout)


class Spectrum(AbstractCommand):
    """Energy levels command

    Solve the step momentum well for one or more step heights and write the
    energy ratios E_n/E0 of the lowest states in long format (mode, mu0, n,
    eta, energy_ratio). States missing from a finite PT spectrum are written
    as "-" in CSV and null in JSON.

    usage:
        spectrum [--mode=STR] [--mu0=LIST] [--states=INT] [--format=STR]
                 [--config=FILE] [--grid-step=FLOAT] [--refine-tol=FLOAT]
                 [--eta-max=FLOAT] [--force] [--out=FILE]

    options:
        -m, --mode=STR           Step type, hermitian or pt [default: hermitian].
        -u, --mu0=LIST           Comma separated step heights [default: 0].
        -n, --states=INT         Number of states per step height [default: 3].
        -f, --format=STR         Output format, csv or json [default: csv].
        -c, --config=FILE        JSON file with root finder settings.
        -g, --grid-step=FLOAT    Root scan spacing in eta.
        -r, --refine-tol=FLOAT   Root refinement tolerance in eta.
        -e, --eta-max=FLOAT      Initial scan window, may be written as a
                                 multiple of pi such as 8pi.
        -F, --force              Overwrite existing output files.
        -o, --out=FILE           Output file. Defaults to the standard output.
    """

    def execute(self):
        mode = check_mode(self.args["--mode"])
        mu0_list = sio.parse_float_list(self.args["--mu0"])
        n_states = self._int_opt("--states")
        cfg = self.root_config()
        spectra = [ssp.solve_spectrum(mode, mu0, n_states, cfg) for mu0 in mu0_list]
        for spec in spectra:
            logger.info(
                "%s step, mu0=%g: %d state(s)", spec.mode, spec.mu0, len(spec.states)
            )
        frame = sio.spectra_frame(spectra, n_states)
        params = {"mode": mode, "mu0": mu0_list, "states": list(range(1, n_states + 1))}
        self.write_output(frame, params, cfg)


class Density(AbstractCommand):
    """Eigenfunction command

    Sample the normalized eigenfunction of one state on a uniform grid over
    the well and write x, re_psi, im_psi and density columns. For the PT step
    the density is the pseudo-probability |psi|^2.

    usage:
        density [--mode=STR] [--mu0=FLOAT] [--state=INT] [--grid=INT]
                [--format=STR] [--config=FILE] [--force] [--out=FILE]

    options:
        -m, --mode=STR           Step type, hermitian or pt [default: hermitian].
        -u, --mu0=FLOAT          Step height [default: 0].
        -n, --state=INT          State index, starting at 1 [default: 1].
        -p, --grid=INT           Number of grid points [default: 2001].
        -f, --format=STR         Output format, csv or json [default: csv].
        -c, --config=FILE        JSON file with root finder settings.
        -F, --force              Overwrite existing output files.
        -o, --out=FILE           Output file. Defaults to the standard output.
    """

    def execute(self):
        mode = check_mode(self.args["--mode"])
        mu0 = self._float_opt("--mu0")
        n = self._int_opt("--state")
        points = self._int_opt("--grid")
        if points < 3:
            raise DomainError("The grid needs at least 3 points.")
        cfg = self.root_config()
        state = find_state(mode, mu0, n, cfg)
        grid = np.linspace(-1.0, 1.0, points)
        psi = swf.eigenfunction(state, mode, mu0, grid)
        frame = sio.wavefunction_frame(psi)
        total = integrate.trapezoid(frame.density, x=frame.x)
        logger.info(
            "State %d at eta=%.10g: integral of |psi|^2 = %.8f, left half weight = %.6f",
            n,
            state.eta,
            total,
            swf.region_occupancy(state, mode, mu0),
        )
        params = {
            "mode": mode,
            "mu0": [mu0],
            "states": [n],
            "grid": {"start": -1.0, "stop": 1.0, "points": points},
            "label": "probability" if mode == HERMITIAN else "pseudo-probability",
        }
        self.write_output(frame, params, cfg)


class Curve(AbstractCommand):
    """Characteristic curve command

    Sample the characteristic function of the chosen step for each step
    height on a uniform eta grid starting at 0, in long format (mu0, eta,
    value). Its zeros are the bound states.

    usage:
        curve [--mode=STR] [--mu0=LIST] [--eta-max=FLOAT] [--points=INT]
              [--format=STR] [--force] [--out=FILE]

    options:
        -m, --mode=STR           Step type, hermitian or pt [default: hermitian].
        -u, --mu0=LIST           Comma separated step heights [default: 0].
        -e, --eta-max=FLOAT      End of the eta grid, may be written as a
                                 multiple of pi such as 3pi [default: 2pi].
        -p, --points=INT         Number of grid points [default: 1001].
        -f, --format=STR         Output format, csv or json [default: csv].
        -F, --force              Overwrite existing output files.
        -o, --out=FILE           Output file. Defaults to the standard output.
    """

    def execute(self):
        mode = check_mode(self.args["--mode"])
        mu0_list = sio.parse_float_list(self.args["--mu0"])
        eta_max = self._float_opt("--eta-max", pi_multiple=True)
        points = self._int_opt("--points")
        if not eta_max > 0 or points < 2:
            raise DomainError("Need a positive --eta-max and at least 2 points.")
        frame = characteristic_curves(mode, mu0_list, eta_max, points)
        params = {
            "mode": mode,
            "mu0": mu0_list,
            "grid": {"start": 0.0, "stop": eta_max, "points": points},
        }
        self.write_output(frame, params)


class Critical(AbstractCommand):
    """Critical step height command

    Print the largest PT step height mu0 for which at least one bound state
    with real energy exists, found by bisection.

    usage:
        critical [--tol=FLOAT] [--config=FILE] [--grid-step=FLOAT]
                 [--refine-tol=FLOAT]

    options:
        -t, --tol=FLOAT          Bisection tolerance on mu0 [default: 1e-4].
        -c, --config=FILE        JSON file with root finder settings.
        -g, --grid-step=FLOAT    Root scan spacing in eta.
        -r, --refine-tol=FLOAT   Root refinement tolerance in eta.
    """

    def execute(self):
        tol = self._float_opt("--tol")
        cfg = self.root_config()
        value = ssp.critical_mu0(cfg, tol)
        logger.info("No real energy PT state above mu0 = %.6f", value)
        print("{:.10g}".format(value))


class Reproduce(AbstractCommand):
    """Reproduction command

    Regenerate the reference energy tables (tab1: Hermitian step, tab2: PT
    step) and the figure datasets (fig1, fig3: characteristic curves; fig2,
    fig4: ground state densities) into a directory. Tables are compared
    entry by entry with the embedded reference values; the command fails if
    a relative deviation exceeds 2e-3 or a missing state does not match. A
    log of the run is kept in stepmom.log.

    usage:
        reproduce [--target=STR] [--outdir=DIR] [--config=FILE] [--force]

    options:
        -t, --target=STR         One of tab1, tab2, fig1, fig2, fig3, fig4
                                 or all [default: all].
        -o, --outdir=DIR         Output directory [default: stepmom_results].
        -c, --config=FILE        JSON file with root finder settings.
        -F, --force              Overwrite existing output files.
    """

    def execute(self):
        target = self.args["--target"].lower()
        if target != "all" and target not in TARGETS:
            raise DomainError(
                "Unknown target: {0}. Valid targets are {1}, all.".format(
                    target, ", ".join(TARGETS)
                )
            )
        targets = TARGETS if target == "all" else (target,)
        outdir = self.args["--outdir"]
        os.makedirs(outdir, exist_ok=True)
        set_file_handler(join(outdir, "stepmom.log"))
        try:
            cfg = self.root_config()
            failures = 0
            for name in targets:
                logger.info("Reproducing %s", name)
                if name in ("tab1", "tab2"):
                    failures += self.reproduce_table(name, outdir, cfg)
                else:
                    self.reproduce_figure(name, outdir, cfg)
            if failures:
                logger.error("%d reference entries not reproduced.", failures)
                return 1
            logger.info("All requested targets reproduced in %s", outdir)
        finally:
            remove_file_handler()
        return 0

    def _save(self, frame, path, params, cfg):
        self.check_output_path(path, force=self.args["--force"])
        sio.write_csv(frame, path)
        manifest = sio.build_manifest("reproduce", params, cfg, [path])
        sio.write_manifest(manifest, path)

    def reproduce_table(self, name, outdir, cfg):
        """Solve one reference table, write it with its report.

        Returns the number of failed entries.
        """
        ref = sio.load_reference_table()
        ref = ref[ref.table == name]
        mode = ref["mode"].iloc[0]
        mu0_list = sorted(ref.mu0.unique())
        n_states = int(ref.n.max())
        spectra = [ssp.solve_spectrum(mode, mu0, n_states, cfg) for mu0 in mu0_list]
        computed = sio.spectra_frame(spectra, n_states)
        params = {"target": name, "mode": mode, "mu0": mu0_list,
                  "states": list(range(1, n_states + 1))}
        self._save(computed, join(outdir, name + ".csv"), params, cfg)

        report = compare_with_reference(computed, ref)
        self._save(report, join(outdir, name + "_report.csv"), params, cfg)
        for row in report.itertuples():
            if row.status == "fail":
                logger.error(
                    "%s n=%d mu0=%g: computed %s, reference %s",
                    name, row.n, row.mu0, row.computed, row.reference,
                )
        return int((report.status == "fail").sum())

    def reproduce_figure(self, name, outdir, cfg):
        """Write the dataset behind one figure."""
        mu0_list = FIGURE_MU0[name]
        mode = HERMITIAN if name in ("fig1", "fig2") else PT
        path = join(outdir, name + ".csv")
        if name in ("fig1", "fig3"):
            eta_max, points = (3 * np.pi, 2001) if name == "fig1" else (4 * np.pi, 4001)
            frame = characteristic_curves(mode, mu0_list, eta_max, points)
            params = {"target": name, "mode": mode, "mu0": mu0_list,
                      "grid": {"start": 0.0, "stop": eta_max, "points": points}}
        else:
            frames = []
            grid = np.linspace(-1.0, 1.0, 2001)
            for mu0 in mu0_list:
                state = find_state(mode, mu0, 1, cfg)
                psi = swf.eigenfunction(state, mode, mu0, grid)
                sub = sio.wavefunction_frame(psi)
                sub.insert(0, "mu0", mu0)
                frames.append(sub)
                logger.info(
                    "%s mu0=%g: left half weight %.6f",
                    name, mu0, swf.region_occupancy(state, mode, mu0),
                )
            frame = pd.concat(frames, ignore_index=True)
            params = {"target": name, "mode": mode, "mu0": mu0_list, "states": [1],
                      "grid": {"start": -1.0, "stop": 1.0, "points": 2001}}
        self._save(frame, path, params, cfg)


class Znojil(AbstractCommand):
    """Square well correspondence command

    Map the parameters of the non-Hermitian square well (energy E_z, strength
    Z) to those of the PT step momentum well (step height mu0, energy E_mu)
    or the other way round, and print the complete parameter set. The map
    applied back to it is logged; steps above 1 have a negative square well
    energy and no map back.

    usage:
        znojil (--ez=FLOAT --z=FLOAT | --mu0=FLOAT --emu=FLOAT)

    options:
        --ez=FLOAT               Square well energy, >= 0.
        --z=FLOAT                Square well non-Hermiticity, > 0.
        --mu0=FLOAT              Step height, > 0.
        --emu=FLOAT              Step momentum well energy, > 0.
    """

    def execute(self):
        if self.args["--ez"] is not None:
            params = szm.znojil_params(
                E_z=self._float_opt("--ez"), Z=self._float_opt("--z")
            )
        else:
            params = szm.znojil_params(
                mu0=self._float_opt("--mu0"), E_mu=self._float_opt("--emu")
            )
        for key, val in params._asdict().items():
            print("{0:<5} {1:.12g}".format(key, val))
        back = round_trip(params, from_square_well=self.args["--ez"] is not None)
        if back is None:
            return
        for key, val in back._asdict().items():
            logger.info("Round trip %s = %.15g", key, val)


def round_trip(params, from_square_well):
    """Apply the map back to a full parameter set.

    Steps above 1 map to a negative square well energy, where the map back
    is not defined: None is returned and a warning logged.
    """
    if from_square_well:
        return szm.znojil_params(mu0=params.mu0, E_mu=params.E_mu)
    if params.E_z < 0:
        logger.warning(
            "E_z=%g is negative for mu0=%g > 1: no map back to the step well.",
            params.E_z,
            params.mu0,
        )
        return None
    return szm.znojil_params(E_z=params.E_z, Z=params.Z)


def find_state(mode, mu0, n, cfg):
    """State n of (mode, mu0), or MissingStateError naming the state count."""
    spec = ssp.solve_spectrum(mode, mu0, n, cfg)
    if len(spec.states) < n:
        raise MissingStateError(
            "State {0} does not exist: {1} step with mu0={2} has {3} real "
            "energy state(s).".format(n, mode, mu0, len(spec.states))
        )
    return spec.states[n - 1]


def characteristic_curves(mode, mu0_list, eta_max, points):
    """Long format samples of the characteristic function for several mu0."""
    grid = np.linspace(0.0, eta_max, points)
    curves = [ssp.characteristic_curve(mode, mu0, grid) for mu0 in mu0_list]
    return sio.curves_frame(curves)


def compare_with_reference(computed, ref):
    """Entry by entry comparison of a spectra table with reference values.

    Parameters
    ----------
    computed : pandas.DataFrame
        Output of stepmom.io.spectra_frame.
    ref : pandas.DataFrame
        Reference rows with mu0, n and energy_ratio (NaN when absent).

    Returns
    -------
    pandas.DataFrame :
        Columns mode, mu0, n, reference, computed, deviation, status with
        status in pass, fail, absent.
    """
    merged = pd.merge(
        ref[["mu0", "n", "energy_ratio"]].rename(columns={"energy_ratio": "reference"}),
        computed[["mode", "mu0", "n", "energy_ratio"]].rename(
            columns={"energy_ratio": "computed"}
        ),
        on=["mu0", "n"],
        how="left",
    )
    merged["deviation"] = (merged.computed - merged.reference).abs()
    ref_absent = merged.reference.isna()
    comp_absent = merged.computed.isna()
    within = merged.deviation <= REPRODUCE_TOL * merged.reference.abs()
    merged["status"] = np.where(
        ref_absent & comp_absent,
        "absent",
        np.where(~ref_absent & ~comp_absent & within, "pass", "fail"),
    )
    return merged[["mode", "mu0", "n", "reference", "computed", "deviation", "status"]]
