r""" Run configuration of the command line interface.

A configuration is assembled from three layers, later ones override earlier ones:

1. the defaults of :func:`skphase.profiles.sweep_profile`,
2. an optional ``key = value`` file (``#`` starts a comment, blank lines are ignored, keys may be written in
   snake_case or kebab-case),
3. command line flags.

Dimensioned values may carry units (``z_m = 10 um``, ``time_s = 2 ms``, ``theta_rad = 60 deg``), they are parsed
with pint and converted to the unit in the field name. Bare numbers are taken to be in that unit.
"""
import logging
import numbers

import numpy as np

from skphase.base import Model, ConfigurationError
from skphase.dissipator.coefficients import LAMB_SHIFT_POLICIES
from skphase.dissipator.params import normalize_alpha
from skphase.profiles import sweep_profile
from skphase.units import Q_, time_to_phi

__all__ = ['RunConfig', 'FIELDS', 'METHODS', 'parse_value', 'read_config_file', 'build_config']

log = logging.getLogger(__name__)

#: trajectory generators of the evolve command
METHODS = ('analytic', 'rk4')


def _quantity(unit):
    def parse(text):
        text = str(text).strip()
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return float(Q_(text).to(unit).magnitude)
        except Exception as e:
            raise ConfigurationError(f'Cannot interpret "{text}" as a quantity in {unit}: {e}') from e
    parse.unit = unit
    return parse


def _number(text):
    try:
        return float(text)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f'Expected a number, but got "{text}".') from e


def _integer(text):
    value = _number(text)
    if value != int(value):
        raise ConfigurationError(f'Expected an integer, but got "{text}".')
    return int(value)


def _boolean(text):
    lowered = str(text).strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ConfigurationError(f'Expected a boolean, but got "{text}".')


def _alpha(text):
    text = str(text).strip()
    if ',' not in text:
        return text
    return tuple(_number(x) for x in text.split(','))


def _string(text):
    return str(text).strip()


#: parser of every configuration key
FIELDS = {
    'omega0_si': _quantity('rad/s'),
    'gamma_ratio': _number,
    'theta_rad': _quantity('rad'),
    'alpha': _alpha,
    'z_m': _quantity('m'),
    'z0_m': _quantity('m'),
    'time_s': _quantity('s'),
    'cycles': _number,
    'beta_cm3': _quantity('cm**3'),
    'out_path': _string,
    'z_min': _quantity('m'),
    'z_max': _quantity('m'),
    'points': _integer,
    'log_grid': _boolean,
    'samples': _integer,
    'method': _string,
    'steps_per_cycle': _integer,
    'n_jobs': _integer,
    'lamb_shift_policy': _string,
    'perturbation': _number,
}


def normalize_key(key) -> str:
    return key.strip().replace('-', '_')


def parse_value(key, text):
    """ Parses the textual value of a configuration key. """
    key = normalize_key(key)
    if key not in FIELDS:
        raise ConfigurationError(f'Unknown configuration key "{key}", supported are {sorted(FIELDS)}.')
    return FIELDS[key](text)


class RunConfig(Model):
    r""" All settings of a command line run, in SI units.

    Parameters
    ----------
    omega0_si : float
        angular transition frequency in rad/s
    gamma_ratio : float
        :math:`\gamma_0/\omega_0`
    theta_rad : float
        initial angle
    alpha : str or tuple of float
        polarization preset or weights; weights are renormalized with a warning if they do not sum to 1
    z_m : float
        distance of the atom for the evolve and phase commands
    z0_m : float
        reference distance of the sweep
    time_s : float or None
        evolution time; exactly one of time_s and cycles must be given
    cycles : float or None
        evolution time in units of :math:`2\pi/\omega_0`
    beta_cm3 : float or None
        nonradiative coefficient in cm^3, reported by the phase command if given
    out_path : str or None
        output file, standard output if None or '-'
    z_min, z_max : float
        bounds of the distance grid of the modfuncs and sweep commands
    points : int
        number of grid points
    log_grid : bool
        logarithmic grid spacing
    samples : int
        number of rows of the analytic trajectory export
    method : str
        trajectory generator of the evolve command, one of :data:`METHODS`
    steps_per_cycle : int
        Runge-Kutta steps per cycle
    n_jobs : int or None
        worker threads of the sweep
    lamb_shift_policy : str
        see :func:`skphase.dissipator.effective_omega`
    perturbation : float
        verification hook, offsets the reference values of the verify command
    """

    def __init__(self, omega0_si, gamma_ratio, theta_rad, alpha, z_m, z0_m, time_s=None, cycles=None,
                 beta_cm3=None, out_path=None, z_min=1e-6, z_max=1e-4, points=60, log_grid=True, samples=201,
                 method='analytic', steps_per_cycle=2000, n_jobs=None, lamb_shift_policy='bare',
                 perturbation=0.):
        self.omega0_si = omega0_si
        self.gamma_ratio = gamma_ratio
        self.theta_rad = theta_rad
        self.alpha = alpha
        self.z_m = z_m
        self.z0_m = z0_m
        self.time_s = time_s
        self.cycles = cycles
        self.beta_cm3 = beta_cm3
        self.out_path = out_path
        self.z_min = z_min
        self.z_max = z_max
        self.points = points
        self.log_grid = log_grid
        self.samples = samples
        self.method = method
        self.steps_per_cycle = steps_per_cycle
        self.n_jobs = n_jobs
        self.lamb_shift_policy = lamb_shift_policy
        self.perturbation = perturbation
        self._validate()

    def _validate(self):
        if (self.time_s is None) == (self.cycles is None):
            raise ConfigurationError('Exactly one of time_s and cycles has to be given, '
                                     f'but got time_s={self.time_s}, cycles={self.cycles}.')
        for name in ('omega0_si', 'gamma_ratio', 'z_m', 'z0_m', 'time_s', 'cycles', 'z_min', 'z_max'):
            value = getattr(self, name)
            if value is None:
                continue
            if not isinstance(value, numbers.Real) or not np.isfinite(value) or value <= 0:
                raise ConfigurationError(f'{name} has to be positive, but was {value}.')
        if self.beta_cm3 is not None and self.beta_cm3 < 0:
            raise ConfigurationError(f'beta_cm3 has to be non-negative, but was {self.beta_cm3}.')
        if self.z_max < self.z_min:
            raise ConfigurationError(f'Empty distance grid, z_max={self.z_max} < z_min={self.z_min}.')
        for name in ('points', 'samples', 'steps_per_cycle'):
            if getattr(self, name) < 1:
                raise ConfigurationError(f'{name} has to be at least 1, but was {getattr(self, name)}.')
        if self.n_jobs is not None and self.n_jobs < 1:
            raise ConfigurationError(f'n_jobs has to be at least 1, but was {self.n_jobs}.')
        if self.method not in METHODS:
            raise ConfigurationError(f'Unknown evolve method "{self.method}", supported are {METHODS}.')
        if self.lamb_shift_policy not in LAMB_SHIFT_POLICIES:
            raise ConfigurationError(f'Unknown Lamb shift policy "{self.lamb_shift_policy}", '
                                     f'supported are {LAMB_SHIFT_POLICIES}.')
        try:
            alpha = normalize_alpha(self.alpha)
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
        if not isinstance(self.alpha, str):
            self.alpha = tuple(float(x) for x in alpha)

    @classmethod
    def from_profile(cls, profile, **overrides) -> 'RunConfig':
        """ Configuration with the values of a :class:`skphase.profiles.PhaseProfile`. """
        values = dict(omega0_si=profile.omega0, gamma_ratio=profile.gamma_ratio, theta_rad=profile.theta,
                      alpha=profile.alpha, z_m=profile.z0, z0_m=profile.z0, time_s=profile.time_s,
                      z_min=profile.z_min, z_max=profile.z_max, points=profile.points, log_grid=profile.log_grid)
        values.update(overrides)
        return cls(**values)

    @property
    def params(self):
        from skphase.dissipator import AtomParams
        return AtomParams(omega0=self.omega0_si, gamma_ratio=self.gamma_ratio, theta=self.theta_rad,
                          alpha=self.alpha)

    @property
    def phi_end(self) -> float:
        if self.cycles is not None:
            return 2. * np.pi * self.cycles
        return time_to_phi(self.time_s, self.omega0_si)

    @property
    def z_grid(self) -> np.ndarray:
        if self.log_grid:
            return np.geomspace(self.z_min, self.z_max, self.points)
        return np.linspace(self.z_min, self.z_max, self.points)


def read_config_file(path) -> dict:
    """ Parses a ``key = value`` file into a mapping of normalized keys to parsed values. """
    values = {}
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigurationError(f'{path}:{lineno}: expected "key = value", got "{line}".')
            key, text = line.split('=', 1)
            try:
                values[normalize_key(key)] = parse_value(key, text)
            except ConfigurationError as e:
                raise ConfigurationError(f'{path}:{lineno}: {e}') from e
    return values


def build_config(path=None, overrides=None, profile=None) -> RunConfig:
    r""" Assembles the run configuration from profile defaults, an optional file and flag overrides.

    Parameters
    ----------
    path : str or None
        configuration file
    overrides : dict or None
        already parsed values, e.g. from command line flags; None values are ignored
    profile : PhaseProfile or None
        defaults, :func:`skphase.profiles.sweep_profile` if None
    """
    supplied = read_config_file(path) if path is not None else {}
    supplied.update({normalize_key(k): v for k, v in (overrides or {}).items() if v is not None})
    unknown = set(supplied) - set(FIELDS)
    if unknown:
        raise ConfigurationError(f'Unknown configuration keys {sorted(unknown)}.')
    if 'time_s' in supplied and 'cycles' in supplied:
        raise ConfigurationError('Exactly one of time_s and cycles has to be given, but got both.')
    if 'cycles' in supplied:
        supplied['time_s'] = None
    config = RunConfig.from_profile(profile if profile is not None else sweep_profile(), **supplied)
    log.debug('run configuration: %s', config)
    return config
