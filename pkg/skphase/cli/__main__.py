r""" Command line entry point, ``skphase <command> [options]``.

Exit codes: 0 on success, 1 on configuration errors, 2 on numerical failures (including failed verification
checks).
"""
import argparse
import logging
import sys

from skphase.base import ConfigurationError
from skphase.numeric import NumericalFailure, DegeneracyError
from skphase.profiles import PROFILES
from .commands import COMMANDS
from .config import FIELDS, build_config, parse_value

log = logging.getLogger('skphase.cli')

EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_NUMERICAL = 2

_HELP = {
    'omega0_si': 'angular transition frequency, rad/s',
    'gamma_ratio': 'free-space decay rate over transition frequency',
    'theta_rad': 'initial angle, rad',
    'alpha': 'polarization preset (isotropic, parallel, normal) or three comma separated weights',
    'z_m': 'distance to the plate for evolve and phase, m',
    'z0_m': 'reference distance of the sweep, m',
    'time_s': 'evolution time, s',
    'cycles': 'evolution time in cycles of the free precession',
    'beta_cm3': 'nonradiative coefficient, cm^3',
    'out_path': 'output file, standard output if omitted or -',
    'z_min': 'smallest grid distance, m',
    'z_max': 'largest grid distance, m',
    'points': 'number of grid points',
    'log_grid': 'logarithmic grid spacing (true/false)',
    'samples': 'rows of the analytic trajectory',
    'method': 'trajectory generator of evolve: analytic or rk4',
    'steps_per_cycle': 'Runge-Kutta steps per cycle',
    'n_jobs': 'worker threads of the sweep',
    'lamb_shift_policy': 'treatment of the Lamb shift',
    'perturbation': 'offset of the verification references (test hook)',
}


def _configure_logging(level):
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(message)s")
    logging.captureWarnings(True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='skphase', description='Geometric phase of an atom near a conducting '
                                                                 'plate.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='increase verbosity (-v, -vv)')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, help=command.__doc__.strip().splitlines()[0])
        sub.add_argument('-c', '--config', default=None, help='key = value configuration file')
        sub.add_argument('--profile', choices=sorted(PROFILES), default='sweep',
                         help='parameter set supplying the defaults (default: sweep)')
        sub.add_argument('--length-unit', dest='length_unit', choices=('um', 'mm'), default='um',
                         help='unit of the distances quoted by the profile (default: um)')
        for field in FIELDS:
            sub.add_argument('--' + field.replace('_', '-'), dest=field, default=None, metavar='VALUE',
                             help=_HELP[field])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(max(logging.WARNING - 10 * args.verbose, logging.DEBUG))
    try:
        overrides = {field: parse_value(field, getattr(args, field)) for field in FIELDS
                     if getattr(args, field) is not None}
        config = build_config(args.config, overrides, profile=PROFILES[args.profile](args.length_unit))
        command = COMMANDS[args.command]
        if config.out_path in (None, '-'):
            return command(config, sys.stdout)
        with open(config.out_path, 'w', newline='') as stream:
            code = command(config, stream)
        log.info('wrote %s', config.out_path)
        return code
    except (NumericalFailure, DegeneracyError) as e:
        log.error('numerical failure: %s', e)
        return EXIT_NUMERICAL
    except (ConfigurationError, ValueError, OSError) as e:
        log.error('configuration error: %s', e)
        return EXIT_CONFIGURATION


if __name__ == '__main__':
    sys.exit(main())
