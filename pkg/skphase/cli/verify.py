r""" Built-in verification suite.

Every check compares a library result with an independent reference and reports the residual against a
threshold. The ``perturbation`` setting of the run configuration offsets the reference values of the
dynamics and phase checks, so that a perturbed run has to fail.
"""
import itertools
import logging
import time

import numpy as np

from skphase.base import Model
from skphase.dissipator import AtomParams, DissipatorCoeffs, Geometry, build_coeffs
from skphase.dynamics import evolve_numeric, rho_analytic, trajectory_analytic
from skphase.phase import gp_closed_form, gp_first_order, gp_general, gp_integral, nonradiative_ratio, \
    optimal_theta
from skphase.spectral import U_SWITCH, fourier_modulation_oracle, mod_fx, mod_fz

__all__ = ['CheckResult', 'CHECKS', 'run_checks', 'write_report']

log = logging.getLogger(__name__)

TWO_PI = 2. * np.pi


class CheckResult(Model):
    """ Outcome of one verification check. """

    def __init__(self, name, residual, threshold):
        self.name = name
        self.residual = float(residual)
        self.threshold = float(threshold)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)

    def __str__(self):
        return f'{self.name:<32s} {self.residual:.6e} {self.threshold:.1e} {"PASS" if self.passed else "FAIL"}'


_REFERENCE_ATOM = AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=1.)


def _free_params(theta, gamma_ratio, alpha='isotropic'):
    return _REFERENCE_ATOM.replace(theta=theta, gamma_ratio=gamma_ratio, alpha=alpha)


def check_modulation_seam(config):
    # the closed formula is still accurate enough around the switch to compare with the series
    u = np.linspace(.5 * U_SWITCH, 2. * U_SWITCH, 61)
    from skphase.spectral.modulation import _fx_direct, _fx_series, _fz_direct, _fz_series
    return max(np.max(np.abs(_fx_series(u) - _fx_direct(u))), np.max(np.abs(_fz_series(u) - _fz_direct(u))))


def check_modulation_plate_limit(config):
    return max(abs(mod_fx(1e-6) - 1.), abs(mod_fz(1e-6) + 1.))


def check_modulation_far_field(config):
    u = np.array([1e7, 1e7 + .5, 1e7 + 1.])
    return max(np.max(np.abs(mod_fx(u))), np.max(np.abs(mod_fz(u))))


def check_normal_dipole_doubling(config):
    params = _free_params(.5 * np.pi, 1e-6, alpha='normal')
    near = build_coeffs(params, Geometry(u=1e-6))
    free = build_coeffs(params, Geometry.free())
    return abs(near.a / free.a - 2.)


def check_fourier_oracle(config):
    residuals = [abs(fourier_modulation_oracle(u, component) - f(u))
                 for u in (.5, 1., 3.) for component, f in (('x', mod_fx), ('z', mod_fz))]
    return max(residuals)


def _rk4_cycle(config):
    params = config.params
    coeffs = build_coeffs(params, Geometry.from_distance(config.z_m, config.omega0_si),
                          policy=config.lamb_shift_policy)
    return params, coeffs, evolve_numeric(params, coeffs, TWO_PI, 2000)


def check_rk4_vs_analytic(config):
    params, coeffs, traj = _rk4_cycle(config)
    residual = 0.
    for phi, state in traj:
        reference = rho_analytic(phi, params, coeffs).matrix
        reference[0, 0] += config.perturbation
        residual = max(residual, np.max(np.abs(state.matrix - reference)))
    return residual


def check_rk4_trace(config):
    _, _, traj = _rk4_cycle(config)
    return np.max(np.abs(traj.trace - 1.))


def _route_grid():
    return itertools.product((.3, .5 * np.pi, 2., np.pi), (1e-7, 1e-5), (.1, 1., 10., np.inf), (TWO_PI, 200 * np.pi))


def check_closed_form_vs_integral(config):
    residual = 0.
    for theta, gamma_ratio, u, phi_end in _route_grid():
        params = _free_params(theta, gamma_ratio)
        coeffs = build_coeffs(params, Geometry(u=u))
        closed = gp_closed_form(params, coeffs, phi_end).environment_part * (1. + config.perturbation)
        reference = gp_integral(params, coeffs, phi_end).environment_part
        residual = max(residual, abs(closed - reference) / max(abs(reference), np.finfo(float).tiny))
    return residual


def check_general_vs_integral(config):
    residual = 0.
    phis = np.linspace(0., TWO_PI, 10_001)
    for theta in (.3, .5 * np.pi, 2.):
        params = _free_params(theta, 1e-5)
        coeffs = build_coeffs(params, Geometry.free())
        general = gp_general(trajectory_analytic(phis, params, coeffs), coeffs)
        reference = gp_integral(params, coeffs, TWO_PI).total + config.perturbation
        residual = max(residual, abs(general - reference))
    return residual


def check_unitary_limit(config):
    residual = 0.
    phis = np.linspace(0., TWO_PI, 10_001)
    coeffs = DissipatorCoeffs(a=0., b=0.)
    for theta in (.3, 1., .5 * np.pi, 2., 2.8):
        params = _free_params(theta, 1e-6)
        general = gp_general(trajectory_analytic(phis, params, coeffs), coeffs)
        reference = -np.pi * (1. - np.cos(theta)) + config.perturbation
        residual = max(residual, abs(general - reference))
    return residual


def check_first_order_convergence(config):
    r""" Ratio of the scaled first-order residuals at :math:`\gamma_0/\omega_0 = 10^{-8}` and :math:`10^{-7}`. """
    def scaled_residual(gamma_ratio):
        # at theta = pi/2 the second-order term vanishes, use a generic angle
        params = _free_params(1., gamma_ratio)
        geom = Geometry.free()
        env = gp_closed_form(params, build_coeffs(params, geom), TWO_PI).environment_part
        env *= 1. + config.perturbation
        return abs(env - gp_first_order(params, geom).environment_part) / gamma_ratio

    return scaled_residual(1e-8) / scaled_residual(1e-7)


def check_optimal_theta_root(config):
    c = np.cos(optimal_theta())
    return abs(3. * c * c + 4. * c - 1.)


def check_optimal_theta_value(config):
    return abs(optimal_theta() - 1.354)


def check_nonradiative_ratio(config):
    return abs(nonradiative_ratio('1 um', '1e-18 cm**3') / 1e-6 - 1.)


#: name, check and threshold of every verification check
CHECKS = (
    ('modulation_series_seam', check_modulation_seam, 1e-9),
    ('modulation_plate_limit', check_modulation_plate_limit, 1e-10),
    ('modulation_far_field', check_modulation_far_field, 1e-5),
    ('normal_dipole_doubling', check_normal_dipole_doubling, 1e-10),
    ('fourier_oracle', check_fourier_oracle, 1e-4),
    ('rk4_vs_analytic', check_rk4_vs_analytic, 1e-8),
    ('rk4_trace', check_rk4_trace, 1e-10),
    ('closed_form_vs_integral', check_closed_form_vs_integral, 1e-10),
    ('general_vs_integral', check_general_vs_integral, 1e-6),
    ('unitary_limit', check_unitary_limit, 1e-6),
    ('first_order_convergence', check_first_order_convergence, 1. / 8.),
    ('optimal_theta_root', check_optimal_theta_root, 1e-10),
    ('optimal_theta_value', check_optimal_theta_value, 1e-3),
    ('nonradiative_ratio', check_nonradiative_ratio, 1e-12),
)


def run_checks(config, checks=CHECKS):
    r""" Runs the verification checks.

    Parameters
    ----------
    config : RunConfig
    checks : sequence of (str, callable, float), optional, default=CHECKS
        name, check taking the configuration and returning the residual, and threshold

    Returns
    -------
    results : list of CheckResult
    """
    results = []
    for name, check, threshold in checks:
        start = time.perf_counter()
        result = CheckResult(name, check(config), threshold)
        log.info('%s took %.2f s', name, time.perf_counter() - start)
        results.append(result)
    return results


def write_report(stream, results):
    for result in results:
        stream.write(f'{result}\n')
