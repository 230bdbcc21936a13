import numbers
import warnings

import numpy as np

from skphase.base import Model
from skphase.units import distance_to_u, u_to_distance

__all__ = ['AtomParams', 'Geometry', 'POLARIZATIONS', 'MAX_GAMMA_RATIO']

#: weak-coupling bound on the vacuum decay rate ratio
MAX_GAMMA_RATIO = 1e-2

#: relative squared dipole components (alpha_x, alpha_y, alpha_z)
POLARIZATIONS = {
    'isotropic': (1. / 3., 1. / 3., 1. / 3.),
    'parallel': (.5, .5, 0.),
    'normal': (0., 0., 1.),
}


def normalize_alpha(alpha, atol=1e-9):
    """ Resolves preset names and rescales polarization weights to unit sum, warning if that was necessary. """
    if isinstance(alpha, str):
        if alpha not in POLARIZATIONS:
            raise ValueError(f'Unknown polarization preset "{alpha}", supported are {sorted(POLARIZATIONS)}.')
        return np.array(POLARIZATIONS[alpha])
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (3,) or np.any(alpha < 0) or not np.all(np.isfinite(alpha)) or alpha.sum() == 0:
        raise ValueError(f'Polarization weights must be three non-negative numbers, but were {alpha}.')
    total = alpha.sum()
    if abs(total - 1.) > atol:
        warnings.warn(f'Polarization weights sum up to {total}, renormalizing to 1.', stacklevel=2)
        alpha = alpha / total
    return alpha


class AtomParams(Model):
    r""" Parameters of the two-level atom.

    Parameters
    ----------
    omega0 : float
        transition (angular) frequency in rad/s; only used to convert SI inputs.
    gamma_ratio : float
        spontaneous emission rate in free space over transition frequency, :math:`\gamma_0/\omega_0`.
    theta : float
        angle of the initial state :math:`\cos(\theta/2)|+\rangle + \sin(\theta/2)|-\rangle`, in [0, pi].
    alpha : array_like of 3 floats or str, optional, default='isotropic'
        relative squared dipole components :math:`|\langle -|r_i|+\rangle|^2 / |\langle -|r|+\rangle|^2`
        or the name of one of :data:`POLARIZATIONS`.
    """

    def __init__(self, omega0, gamma_ratio, theta, alpha='isotropic'):
        self.omega0 = omega0
        self.gamma_ratio = gamma_ratio
        self.theta = theta
        self.alpha = alpha

    @property
    def omega0(self) -> float:
        return self._omega0

    @omega0.setter
    def omega0(self, value):
        if not isinstance(value, numbers.Real) or not np.isfinite(value) or value <= 0:
            raise ValueError(f'omega0 has to be a positive finite frequency in rad/s, but was {value}.')
        self._omega0 = float(value)

    @property
    def gamma_ratio(self) -> float:
        return self._gamma_ratio

    @gamma_ratio.setter
    def gamma_ratio(self, value):
        if not isinstance(value, numbers.Real) or not 0 < value < MAX_GAMMA_RATIO:
            raise ValueError(f'gamma_ratio has to be in (0, {MAX_GAMMA_RATIO}) for weak coupling, '
                             f'but was {value}.')
        self._gamma_ratio = float(value)

    @property
    def theta(self) -> float:
        return self._theta

    @theta.setter
    def theta(self, value):
        if not isinstance(value, numbers.Real) or not 0 <= value <= np.pi:
            raise ValueError(f'theta has to be in [0, pi], but was {value}.')
        self._theta = float(value)

    @property
    def alpha(self) -> np.ndarray:
        return self._alpha

    @alpha.setter
    def alpha(self, value):
        alpha = normalize_alpha(value, atol=1e-9)
        if abs(alpha.sum() - 1.) > 1e-9:
            raise ValueError(f'Polarization weights must sum up to 1, but were {alpha}.')
        alpha.flags.writeable = False
        self._alpha = alpha


class Geometry(Model):
    r""" Position of the atom relative to the reflecting plane.

    Stored as the dimensionless distance :math:`u = 2\omega_0 z / c`; ``u = inf`` is free space.
    Use :meth:`from_distance` to construct from a length.
    """

    def __init__(self, u=np.inf):
        self.u = u

    @classmethod
    def from_distance(cls, z, omega0) -> 'Geometry':
        r""" Geometry at distance z (float in meters, string or pint quantity) for transition frequency omega0. """
        return cls(u=distance_to_u(z, omega0))

    @classmethod
    def free(cls) -> 'Geometry':
        return cls(u=np.inf)

    @property
    def u(self) -> float:
        return self._u

    @u.setter
    def u(self, value):
        if not isinstance(value, numbers.Real) or np.isnan(value) or value <= 0:
            raise ValueError(f'The distance to the plane has to be positive (u > 0 or inf for free space), '
                             f'but was u={value}.')
        self._u = float(value)

    @property
    def free_space(self) -> bool:
        return np.isinf(self._u)

    def distance(self, omega0) -> float:
        """ Distance to the plane in meters. """
        return u_to_distance(self._u, omega0)
