import numbers

import numpy as np

from .modulation import mod_fx, mod_fz

__all__ = ['spectral_density']


def spectral_density(lam, geom, params):
    r""" Fourier transform of the field correlation function seen by the atom.

    .. math::

        \mathcal{G}(\lambda)/\omega_0 = \frac{\gamma_0}{\omega_0}\left(\frac{\lambda}{\omega_0}\right)^3
            \sum_i \alpha_i \left(1 - f_i(2\lambda z / c)\right) \theta(\lambda)

    Parameters
    ----------
    lam : float or ndarray
        frequency in units of :math:`\omega_0`
    geom : Geometry
        distance to the plane; its dimensionless distance is taken at :math:`\lambda = \omega_0`
        and rescaled with ``lam``
    params : AtomParams
        provides the coupling ``gamma_ratio`` and polarization weights ``alpha``

    Returns
    -------
    density : float or ndarray
        non-negative rate in units of :math:`\omega_0`, exactly zero for ``lam <= 0``.

    Examples
    --------
    The free-space density at the transition frequency is the vacuum decay rate:

    >>> from skphase.dissipator import AtomParams, Geometry
    >>> params = AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2)
    >>> spectral_density(1., Geometry.free(), params)
    1e-06
    """
    lam_arr = np.asarray(lam, dtype=float)
    positive = lam_arr > 0
    # u scales linearly with the frequency; inf stays inf (free space)
    u = np.where(positive, geom.u * np.where(positive, lam_arr, 1.), np.inf)
    fx, fz = mod_fx(u), mod_fz(u)
    ax, ay, az = params.alpha
    factor = ax * (1. - fx) + ay * (1. - fx) + az * (1. - fz)
    out = np.where(positive, params.gamma_ratio * lam_arr ** 3 * factor, 0.)
    if isinstance(lam, numbers.Real) or np.ndim(lam) == 0:
        return float(out)
    return out
