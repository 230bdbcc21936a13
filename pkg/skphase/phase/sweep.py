from concurrent.futures import ThreadPoolExecutor

import numpy as np

from skphase.base import Estimator, ConfigurationError
from skphase.dissipator import Geometry, build_coeffs
from skphase.units import time_to_phi
from skphase.util import to_si
from .result import SweepModel
from .routes import gp_closed_form, environment_difference

__all__ = ['environment_phase', 'phase_difference', 'sweep_z', 'PhaseDifferenceSweep']


def _positive(value, unit, name):
    value = to_si(value, unit)
    if not np.isfinite(value) or value <= 0:
        raise ValueError(f'{name} has to be positive and finite, but was {value} {unit}.')
    return value


def _coeffs(z, params, policy):
    return build_coeffs(params, Geometry.from_distance(z, params.omega0), policy=policy)


def environment_phase(z, params, phi_end, policy='bare') -> float:
    """ Environment part of the closed-form phase at distance z (meters) after phi_end. """
    return gp_closed_form(params, _coeffs(z, params, policy), phi_end).environment_part


def _delta(z, z0, params, phi_end, policy):
    if z == z0:
        return 0.
    return environment_difference(params, _coeffs(z0, params, policy), _coeffs(z, params, policy), phi_end)


def phase_difference(z, z0, params, T, policy='bare') -> float:
    r""" Phase difference :math:`\delta` between atoms at distances z0 and z from the plane.

    The unitary-limit parts are identical at both distances and cancel exactly; only the environment parts
    are subtracted, :math:`\delta = \gamma_{env}(z_0) - \gamma_{env}(z)`, which is non-negative when the
    atom at z is farther away. The subtraction is carried out before rounding to double precision.

    Parameters
    ----------
    z, z0 : float, str or Quantity
        distances to the plane, meters if bare numbers
    params : AtomParams
    T : float, str or Quantity
        evolution time, seconds if a bare number
    policy : str, optional, default='bare'
        Lamb shift policy

    Returns
    -------
    delta : float
        in radians
    """
    z = _positive(z, 'm', 'z')
    z0 = _positive(z0, 'm', 'z0')
    phi_end = time_to_phi(_positive(T, 's', 'T'), params.omega0)
    return _delta(z, z0, params, phi_end, policy)


class PhaseDifferenceSweep(Estimator):
    r""" Phase difference against a fixed reference distance over a grid of distances.

    Parameters
    ----------
    z0 : float, str or Quantity
        reference distance
    params : AtomParams
    T : float, str or Quantity
        evolution time
    n_jobs : int or None, optional, default=None
        number of threads, None or 1 evaluates serially. The result does not depend on it.
    policy : str, optional, default='bare'
        Lamb shift policy

    Examples
    --------
    >>> from skphase.dissipator import AtomParams
    >>> params = AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2)
    >>> model = PhaseDifferenceSweep(z0=1e-3, params=params, T=1e-3).fit(np.array([1e-3, 1e-2])).fetch_model()
    >>> float(model.delta[0]), bool(model.delta[1] > 0)
    (0.0, True)
    """

    def __init__(self, z0, params, T, n_jobs=None, policy='bare'):
        super(PhaseDifferenceSweep, self).__init__()
        self.z0 = z0
        self.params = params
        self.T = T
        self.n_jobs = n_jobs
        self.policy = policy

    @property
    def n_jobs(self):
        return self._n_jobs

    @n_jobs.setter
    def n_jobs(self, value):
        if value is not None and (int(value) != value or value < 1):
            raise ValueError(f'n_jobs has to be None or a positive integer, but was {value}.')
        self._n_jobs = None if value is None else int(value)

    def fit(self, data, **kwargs):
        r""" Evaluates the phase difference on a grid.

        Parameters
        ----------
        data : (n,) ndarray or list of float
            distances in meters

        Returns
        -------
        self : PhaseDifferenceSweep
        """
        grid = np.asarray(data, dtype=np.float64)
        if grid.ndim != 1 or len(grid) == 0:
            raise ConfigurationError(f'The distance grid has to be a non-empty 1D sequence, but had shape '
                                     f'{grid.shape}.')
        if not np.all(np.isfinite(grid)) or np.any(grid <= 0):
            raise ConfigurationError('All distances of the grid have to be positive and finite.')
        z0 = _positive(self.z0, 'm', 'z0')
        phi_end = time_to_phi(_positive(self.T, 's', 'T'), self.params.omega0)

        def delta(z):
            # the reference is re-evaluated per point, working precision values stay within one thread
            return _delta(float(z), z0, self.params, phi_end, self.policy)

        if self.n_jobs is None or self.n_jobs == 1:
            deltas = [delta(z) for z in grid]
        else:
            with ThreadPoolExecutor(max_workers=self.n_jobs) as executor:
                deltas = list(executor.map(delta, grid))
        self._model = SweepModel(z=grid, delta=np.array(deltas), z0=z0)
        return self


def sweep_z(z_grid, z0, params, T, n_jobs=None, policy='bare'):
    """ Rows (z, delta) over a grid of distances, see :class:`PhaseDifferenceSweep`. """
    model = PhaseDifferenceSweep(z0=z0, params=params, T=T, n_jobs=n_jobs, policy=policy) \
        .fit(np.asarray(z_grid, dtype=np.float64)).fetch_model()
    return model.rows
