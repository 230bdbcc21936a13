r""" Subcommands of the command line interface.

Every command takes a :class:`RunConfig <skphase.cli.config.RunConfig>` and a text stream, writes its
result to the stream and returns an exit code. Library exceptions are left to :func:`skphase.cli.__main__.main`,
which maps them to exit codes.
"""
import logging

import numpy as np

from skphase.base import ConfigurationError
from skphase.dissipator import Geometry, build_coeffs
from skphase.dynamics import TRAJECTORY_COLUMNS, evolve_numeric, trajectory_analytic
from skphase.phase import PhaseDifferenceSweep, gp_closed_form, gp_first_order, nonradiative_ratio
from skphase.spectral import mod_fx, mod_fz
from skphase.units import Q_, distance_to_u

__all__ = ['COMMANDS', 'MAX_STEPS', 'write_csv', 'cmd_modfuncs', 'cmd_evolve', 'cmd_phase', 'cmd_sweep',
           'cmd_verify']

log = logging.getLogger(__name__)

#: upper bound on the number of Runge-Kutta steps of a single evolve run
MAX_STEPS = 10_000_000

#: number format of all numeric output, round-trips double precision
FLOAT_FORMAT = '%.17g'


def write_csv(stream, header, table, metadata=()):
    r""" Writes a CSV table. Metadata pairs precede the column header as ``# name = value`` lines. """
    lines = [f'# {name} = {value}' for name, value in metadata] + [','.join(header)]
    np.savetxt(stream, np.atleast_2d(table), delimiter=',', header='\n'.join(lines), comments='',
               fmt=FLOAT_FORMAT)


def _geometry(config):
    return Geometry.from_distance(config.z_m, config.omega0_si)


def _coeffs(config):
    return build_coeffs(config.params, _geometry(config), policy=config.lamb_shift_policy)


def cmd_modfuncs(config, stream) -> int:
    """ Writes the modulation functions over the distance grid, columns ``z_m,u,fx,fz``. """
    z = config.z_grid
    if not np.all(np.isfinite(z)) or np.any(z <= 0):
        raise ConfigurationError(f'All grid distances have to be positive and finite, but got {z}.')
    u = distance_to_u(z, config.omega0_si)
    write_csv(stream, ('z_m', 'u', 'fx', 'fz'), np.column_stack([z, u, mod_fx(u), mod_fz(u)]))
    log.info('modulation functions on %d grid points, u in [%g, %g]', len(z), u[0], u[-1])
    return 0


def cmd_evolve(config, stream) -> int:
    """ Writes the atom state over the evolution time, columns :data:`skphase.dynamics.TRAJECTORY_COLUMNS`.

    ``method = analytic`` samples the closed-form solution on ``samples`` points, ``method = rk4`` writes every
    step of the Runge-Kutta integration with ``steps_per_cycle`` steps per cycle.
    """
    params, coeffs, phi_end = config.params, _coeffs(config), config.phi_end
    if config.method == 'analytic':
        phis = np.linspace(0., phi_end, max(config.samples, 2))
        traj = trajectory_analytic(phis, params, coeffs)
    else:
        steps = int(np.ceil(config.steps_per_cycle * phi_end / (2. * np.pi)))
        if steps > MAX_STEPS:
            raise ConfigurationError(f'The evolution needs {steps} integration steps, more than the limit of '
                                     f'{MAX_STEPS}. Reduce the evolution time or steps_per_cycle.')
        traj = evolve_numeric(params, coeffs, phi_end, max(steps, 10))
    log.info('%s trajectory with %d points up to phi=%g, a=%g, b=%g', config.method, len(traj), phi_end,
             coeffs.a, coeffs.b)
    write_csv(stream, TRAJECTORY_COLUMNS, traj.table())
    return 0


def cmd_phase(config, stream) -> int:
    r""" Writes the geometric phase at distance ``z_m`` as ``name = value`` lines.

    The first-order prediction is per cycle; it is scaled with the number of cycles for comparison.
    """
    params, geom = config.params, _geometry(config)
    coeffs = build_coeffs(params, geom, policy=config.lamb_shift_policy)
    phi_end = config.phi_end
    result = gp_closed_form(params, coeffs, phi_end)
    first_order = gp_first_order(params, geom)
    cycles = phi_end / (2. * np.pi)
    record = [
        ('total', result.total),
        ('geometric_part', result.geometric_part),
        ('environment_part', result.environment_part),
        ('first_order_environment_part', first_order.environment_part * cycles),
        ('cycles', cycles),
        ('u', geom.u),
        ('a', coeffs.a),
    ]
    if config.beta_cm3 is not None:
        record.append(('nonradiative_ratio', nonradiative_ratio(config.z_m, Q_(config.beta_cm3, 'cm**3'))))
    for name, value in record:
        stream.write(f'{name} = {FLOAT_FORMAT % value}\n')
    return 0


def cmd_sweep(config, stream) -> int:
    """ Writes the phase difference against ``z0_m`` over the distance grid, columns ``z_m,delta_rad``.

    The column header is preceded by the run parameters the curve depends on, the polarization weights among them.
    """
    params = config.params
    log.info('sweep of %d distances against z0=%g m, polarization %s', config.points, config.z0_m,
             tuple(params.alpha))
    sweep = PhaseDifferenceSweep(z0=config.z0_m, params=params, T=config.phi_end / config.omega0_si,
                                 n_jobs=config.n_jobs, policy=config.lamb_shift_policy)
    model = sweep.fit(config.z_grid).fetch_model()
    metadata = [
        ('alpha', ','.join(FLOAT_FORMAT % w for w in params.alpha)),
        ('omega0_si', FLOAT_FORMAT % params.omega0),
        ('gamma_ratio', FLOAT_FORMAT % params.gamma_ratio),
        ('theta_rad', FLOAT_FORMAT % params.theta),
        ('z0_m', FLOAT_FORMAT % config.z0_m),
        ('time_s', FLOAT_FORMAT % (config.phi_end / config.omega0_si)),
        ('lamb_shift_policy', config.lamb_shift_policy),
    ]
    write_csv(stream, ('z_m', 'delta_rad'), np.column_stack([model.z, model.delta]), metadata=metadata)
    return 0


def cmd_verify(config, stream) -> int:
    """ Runs the verification suite, see :func:`skphase.cli.verify.run_checks`. """
    from .verify import run_checks, write_report
    results = run_checks(config)
    write_report(stream, results)
    failed = [r.name for r in results if not r.passed]
    if failed:
        log.error('%d of %d checks failed: %s', len(failed), len(results), ', '.join(failed))
        return 2
    log.info('all %d checks passed', len(results))
    return 0


#: subcommand name to implementation
COMMANDS = {
    'modfuncs': cmd_modfuncs,
    'evolve': cmd_evolve,
    'phase': cmd_phase,
    'sweep': cmd_sweep,
    'verify': cmd_verify,
}
