r""" Boundary modulation functions of the spectral density.

In the dimensionless distance :math:`u = 2\lambda z / c`

.. math::

    f_x(u) = f_y(u) = \frac{3}{2u^3}\left[u \cos u + (u^2 - 1)\sin u\right], \qquad
    f_z(u) = \frac{3}{u^3}\left[u \cos u - \sin u\right].

Both brackets vanish like :math:`u^3`; below :data:`U_SWITCH` the functions are evaluated from their
Taylor series instead of the closed formula.
"""
import numbers

import numpy as np

from skphase.base import Model

__all__ = ['U_SWITCH', 'mod_fx', 'mod_fy', 'mod_fz', 'ModulationValues', 'modulation_values']

#: below this value of u the Taylor branch is used
U_SWITCH = 1e-2


def _check_u(u):
    arr = np.asarray(u, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise ValueError(f'Dimensionless distance u must be non-negative, but was {u}.')
    return arr


def _evaluate(u, series, direct):
    arr = _check_u(u)
    finite = np.isfinite(arr)
    small = arr < U_SWITCH
    # keep the direct branch away from 0 and inf, its values there are discarded anyway
    safe = np.where(small | ~finite, 1., arr)
    out = np.where(small, series(np.where(small, arr, 0.)), direct(safe))
    out = np.where(finite, out, 0.)
    if isinstance(u, numbers.Real) or np.ndim(u) == 0:
        return float(out)
    return out


def _fx_series(u):
    u2 = u * u
    return 1. - u2 / 5. + 3. * u2 * u2 / 280.


def _fx_direct(u):
    return 1.5 * (u * np.cos(u) + (u * u - 1.) * np.sin(u)) / u ** 3


def _fz_series(u):
    u2 = u * u
    return -1. + u2 / 10. - u2 * u2 / 280.


def _fz_direct(u):
    return 3. * (u * np.cos(u) - np.sin(u)) / u ** 3


def mod_fx(u):
    r""" Modulation of the tangential dipole components.

    Parameters
    ----------
    u : float or ndarray
        dimensionless distance :math:`2\lambda z/c`, ``np.inf`` for free space

    Returns
    -------
    fx : float or ndarray
        tends to 1 at the plane and to 0 far away from it.

    Examples
    --------
    >>> round(mod_fx(np.pi), 6)
    -0.151982
    """
    return _evaluate(u, _fx_series, _fx_direct)


#: the two tangential directions are equivalent
mod_fy = mod_fx


def mod_fz(u):
    r""" Modulation of the dipole component normal to the plane.

    Parameters
    ----------
    u : float or ndarray
        dimensionless distance :math:`2\lambda z/c`, ``np.inf`` for free space

    Returns
    -------
    fz : float or ndarray
        tends to -1 at the plane (the normal field doubles) and to 0 far away from it.

    Examples
    --------
    >>> round(mod_fz(np.pi), 6)
    -0.303964
    """
    return _evaluate(u, _fz_series, _fz_direct)


class ModulationValues(Model):
    """ The three modulation values at one distance; fy is fx by symmetry. """

    def __init__(self, fx, fz):
        self._fx = float(fx)
        self._fz = float(fz)

    @property
    def fx(self) -> float:
        return self._fx

    @property
    def fy(self) -> float:
        return self._fx

    @property
    def fz(self) -> float:
        return self._fz

    def as_array(self) -> np.ndarray:
        return np.array([self.fx, self.fy, self.fz])


def modulation_values(u) -> ModulationValues:
    return ModulationValues(fx=mod_fx(u), fz=mod_fz(u))
