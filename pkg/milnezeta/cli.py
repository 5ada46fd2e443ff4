"""Command-line surface: plot-ready CSV for densities, the Milne grid and the checks.

    milnezeta density --eps-min 0.1 --eps-max 10 --steps 100 --out d.csv
    milnezeta milne-grid --out grid.csv
    milnezeta compare-zeros --t-max 100 --out report.csv
    milnezeta pinney-check --out gaps.csv
    milnezeta dynamics-demo --out trajectory.csv

Every command also takes --config FILE (YAML, one section per command) and
-v/--verbose.  Flags override the file.  Exit codes: 0 success, 1 computation
error, 2 usage error.
"""
import argparse
import logging
import sys
from contextlib import contextmanager

import numpy as np
import yaml
from pydantic import ValidationError

from .cache import ZeroTableCache
from .density import density_table, riemann_zero_density
from .dynamics import instantaneous_energy, integrate_ermakov_pair, invariant_drift, invariant_series
from .exceptions import MilneZetaError
from .milne import closed_form_gap, milne_density_curve, milne_grid
from .models import Command, CoulombParams, GridSpec, MilneGrid, PhaseState, RunConfig
from .zeros import count_comparison, empirical_density, load_zero_table, scan_zeros

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.12g'


def parse_yaml_config(file_path):
    with open(file_path, 'r') as file:
        config = yaml.safe_load(file)
    return config or {}


def _frame_bytes(frame) -> bytes:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n').encode('utf-8')


def write_grid(grid: MilneGrid, sink) -> int:
    """Long-format y,eps,n_M rows, eps-major then y, 12 significant digits."""
    payload = _frame_bytes(grid.to_frame())
    sink.write(payload)
    return len(payload)


@contextmanager
def _open_sink(path):
    if path == '-':
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, 'wb') as sink:
            yield sink


def _write_frame(frame, path) -> int:
    payload = _frame_bytes(frame)
    with _open_sink(path) as sink:
        sink.write(payload)
    logger.info("Wrote %d rows to %s", len(frame), path)
    return len(payload)


def _run_density(config: RunConfig):
    params = config.params
    eps = np.linspace(params.eps_min, params.eps_max, params.steps)
    frame = density_table(eps)
    if params.milne_y is not None:
        frame['n_M'] = milne_density_curve(params.milne_y, eps, params.k).values
    _write_frame(frame, config.out)


def _run_milne_grid(config: RunConfig):
    params = config.params
    spec = GridSpec(**params.model_dump(include=set(GridSpec.model_fields)))
    grid = milne_grid(spec, params.k)
    if grid.degenerate_eps:
        logger.warning("alpha degenerate at eps=%s", grid.degenerate_eps)
    with _open_sink(config.out) as sink:
        count = write_grid(grid, sink)
    logger.info("Wrote %d bytes of Milne grid to %s", count, config.out)


def _run_compare_zeros(config: RunConfig):
    params = config.params
    if params.table is not None:
        with open(params.table, 'rb') as source:
            table = load_zero_table(source)
    else:
        cache = ZeroTableCache(params.cache_dir) if params.cache_dir else None
        table = scan_zeros(params.t_max, params.grid_step, cache=cache)
    report = count_comparison(table, params.probes)
    worst = float(np.max(np.abs(report['difference'])))
    if worst > 1:
        logger.warning("smooth and tabulated counts differ by %.3f", worst)
    _write_frame(report, config.out)
    if params.density_out:
        curve = empirical_density(table, params.window)
        frame = curve.to_frame().rename(columns={'eps': 't', curve.kind.value: 'empirical'})
        frame['n_Z'] = np.atleast_1d(riemann_zero_density(frame['t'].to_numpy()))
        _write_frame(frame, params.density_out)


def _run_pinney_check(config: RunConfig):
    import pandas as pd
    params = config.params
    coulomb = CoulombParams(eps=params.eps, k=params.k)
    gaps = [
        closed_form_gap(coulomb, y0, params.y_end, params.q_const, params.tolerance)
        for y0 in params.y0s
    ]
    _write_frame(pd.DataFrame({'y0': params.y0s, 'max_relative_gap': gaps}), config.out)


def _run_dynamics_demo(config: RunConfig):
    import pandas as pd
    params = config.params
    coulomb = CoulombParams(eps=params.eps, k=params.k)
    q_const = params.k ** 2 if params.q_const is None else params.q_const
    grid = np.linspace(params.y_start, params.y_end, params.steps)
    pairs = integrate_ermakov_pair(
        PhaseState(y=params.y_start, q=params.q0, p=params.p0), params.rho0, params.drho0,
        coulomb, params.y_end, q_const, params.tolerance, y_eval=grid,
    )
    logger.info("Ermakov-Lewis invariant drift %.3e", invariant_drift(pairs, q_const))
    frame = pd.DataFrame({
        'y': [state.y for state, _ in pairs],
        'q': [state.q for state, _ in pairs],
        'p': [state.p for state, _ in pairs],
        'rho': [amp.rho for _, amp in pairs],
        'drho': [amp.drho for _, amp in pairs],
        'invariant': invariant_series(pairs, q_const),
        'energy': [instantaneous_energy(state, coulomb) for state, _ in pairs],
    })
    _write_frame(frame, config.out)


COMMANDS = {
    Command.DENSITY: _run_density,
    Command.MILNE_GRID: _run_milne_grid,
    Command.COMPARE_ZEROS: _run_compare_zeros,
    Command.PINNEY_CHECK: _run_pinney_check,
    Command.DYNAMICS_DEMO: _run_dynamics_demo,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help="YAML file with one section per command.")
    common.add_argument('--out', default='-', help="Output CSV path, '-' for stdout.")
    common.add_argument('-v', '--verbose', action='count', default=0, help="Increase verbosity (-v, -vv).")

    parser = argparse.ArgumentParser(prog='milnezeta', description="Zeta-zero density and Milne phase toolkit.")
    sub = parser.add_subparsers(dest='command', required=True)

    density = sub.add_parser(Command.DENSITY.value, parents=[common], help="n_Z, n_C and their gap.")
    density.add_argument('--eps-min', type=float)
    density.add_argument('--eps-max', type=float)
    density.add_argument('--steps', type=int)
    density.add_argument('--k', type=float)
    density.add_argument('--milne-y', type=float, help="Add an n_M column at this y.")

    grid = sub.add_parser(Command.MILNE_GRID.value, parents=[common], help="n_M over a (y, eps) grid.")
    grid.add_argument('--y-min', type=float)
    grid.add_argument('--y-max', type=float)
    grid.add_argument('--eps-min', type=float)
    grid.add_argument('--eps-max', type=float)
    grid.add_argument('--y-count', type=int)
    grid.add_argument('--eps-count', type=int)
    grid.add_argument('--k', type=float)

    compare = sub.add_parser(Command.COMPARE_ZEROS.value, parents=[common],
                             help="Smooth zero count against actual zeros.")
    compare.add_argument('--t-max', type=float)
    compare.add_argument('--grid-step', type=float)
    compare.add_argument('--window', type=float)
    compare.add_argument('--probes', type=float, nargs='+')
    compare.add_argument('--table', help="Zero table to ingest instead of scanning.")
    compare.add_argument('--cache-dir', help="Directory caching scanned tables.")
    compare.add_argument('--density-out', help="Also write t,empirical,n_Z here.")

    pinney = sub.add_parser(Command.PINNEY_CHECK.value, parents=[common],
                            help="Pinney trajectories against the closed form.")
    pinney.add_argument('--eps', type=float)
    pinney.add_argument('--k', type=float)
    pinney.add_argument('--y0', dest='y0s', type=float, nargs='+')
    pinney.add_argument('--y-end', type=float)
    pinney.add_argument('--q-const', type=float)
    pinney.add_argument('--tolerance', type=float)

    demo = sub.add_parser(Command.DYNAMICS_DEMO.value, parents=[common],
                          help="Canonical flow with its Ermakov-Lewis invariant.")
    demo.add_argument('--eps', type=float)
    demo.add_argument('--k', type=float)
    demo.add_argument('--q0', type=float)
    demo.add_argument('--p0', type=float)
    demo.add_argument('--rho0', type=float)
    demo.add_argument('--drho0', type=float)
    demo.add_argument('--y-start', type=float)
    demo.add_argument('--y-end', type=float)
    demo.add_argument('--steps', type=int)
    demo.add_argument('--q-const', type=float)
    demo.add_argument('--tolerance', type=float)
    return parser


_NOT_PARAMETERS = {'command', 'config', 'out', 'verbose'}


def load_run_config(args) -> RunConfig:
    values = {}
    if args.config:
        section = parse_yaml_config(args.config).get(args.command) or {}
        values.update({key.replace('-', '_'): value for key, value in section.items()})
    values.update({
        key: value for key, value in vars(args).items()
        if key not in _NOT_PARAMETERS and value is not None
    })
    return RunConfig.build(args.command, values, out=args.out)


def _configure_logging(verbosity):
    logging.basicConfig(
        level=max(logging.WARNING - 10 * verbosity, logging.DEBUG),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)
    try:
        config = load_run_config(args)
    except (ValidationError, OSError, yaml.YAMLError, AttributeError) as exc:
        print(f"milnezeta {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    try:
        COMMANDS[config.command](config)
    except MilneZetaError as exc:
        print(f"milnezeta {args.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"milnezeta {args.command}: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
