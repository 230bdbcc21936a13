import numbers

import numpy as np

from skphase.base import Model
from skphase.util import ensure_ndarray

__all__ = ['PhaseResult', 'SweepRow', 'SweepModel']


class PhaseResult(Model):
    r""" Geometric phase split into its unitary-limit part and the environment-induced correction.

    Parameters
    ----------
    geometric_part : float
        :math:`-\frac{\Omega}{2\omega_0}(1 - \cos\theta)\varphi`, i.e., :math:`-\pi(1-\cos\theta)` per cycle
    environment_part : float
        correction due to the coupling to the vacuum fluctuations, in radians
    """

    def __init__(self, geometric_part, environment_part):
        for name, value in (('geometric_part', geometric_part), ('environment_part', environment_part)):
            if not np.isfinite(value):
                raise ValueError(f'{name} has to be finite, but was {value}.')
        self._geometric_part = float(geometric_part)
        self._environment_part = float(environment_part)

    @property
    def geometric_part(self) -> float:
        return self._geometric_part

    @property
    def environment_part(self) -> float:
        return self._environment_part

    @property
    def total(self) -> float:
        return self._geometric_part + self._environment_part


class SweepRow(Model):
    """ Phase difference at one distance; z in meters, delta in radians. """

    def __init__(self, z, delta):
        if not isinstance(z, numbers.Real) or not np.isfinite(z) or z <= 0:
            raise ValueError(f'z has to be a positive finite distance, but was {z}.')
        if not np.isfinite(delta):
            raise ValueError(f'delta has to be finite, but was {delta}.')
        self.z = float(z)
        self.delta = float(delta)


class SweepModel(Model):
    r""" Phase differences :math:`\delta(z)` against a reference distance.

    Parameters
    ----------
    z : (n,) ndarray
        distances in meters, in the order they were requested
    delta : (n,) ndarray
        phase differences in radians
    z0 : float
        reference distance in meters
    """

    def __init__(self, z, delta, z0):
        z = ensure_ndarray(z, ndim=1, dtype=np.float64).copy()
        delta = ensure_ndarray(delta, ndim=1, dtype=np.float64).copy()
        if z.shape != delta.shape:
            raise ValueError(f'Got {len(z)} distances but {len(delta)} phase differences.')
        z.flags.writeable = False
        delta.flags.writeable = False
        self._z = z
        self._delta = delta
        self.z0 = float(z0)

    @property
    def z(self) -> np.ndarray:
        return self._z

    @property
    def delta(self) -> np.ndarray:
        return self._delta

    @property
    def rows(self):
        """ The sweep as list of :class:`SweepRow`. """
        return [SweepRow(z=float(z), delta=float(d)) for z, d in zip(self._z, self._delta)]

    def __len__(self):
        return len(self._z)
