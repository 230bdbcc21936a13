import numpy as np
from scipy import constants
from scipy.optimize import brentq

from skphase.dissipator import Geometry, boundary_factor
from skphase.units import time_to_phi
from skphase.util import to_si

__all__ = ['envelope', 'optimal_theta', 'nonradiative_ratio', 'hydrogenic_gamma_ratio', 'linear_phase_difference']


def envelope(theta):
    r""" Angular dependence :math:`(2 + \cos\theta)\sin^2\theta` of the first-order correction. """
    return (2. + np.cos(theta)) * np.sin(theta) ** 2


def optimal_theta(xtol=1e-14) -> float:
    r""" Initial angle at which the first-order correction is largest.

    The derivative of :func:`envelope` vanishes in :math:`(0, \pi)` where :math:`3\cos^2\theta + 4\cos\theta - 1 = 0`,
    i.e., :math:`\cos\theta^* = (\sqrt{28} - 4)/6`.

    Examples
    --------
    >>> round(optimal_theta(), 3)
    1.354
    """
    return float(brentq(lambda theta: 3. * np.cos(theta) ** 2 + 4. * np.cos(theta) - 1., 0., .5 * np.pi,
                        xtol=xtol))


def nonradiative_ratio(z, beta) -> float:
    r""" Nonradiative over radiative decay rate :math:`\gamma_{non}/\gamma_0 = \beta z^{-3}` near an absorbing plate.

    Parameters
    ----------
    z : float, str or Quantity
        distance to the plate, meters if a bare number
    beta : float, str or Quantity
        material constant, cubic meters if a bare number

    Examples
    --------
    >>> round(nonradiative_ratio('1 um', '1e-18 cm**3'), 12)
    1e-06
    """
    z = to_si(z, 'm')
    beta = to_si(beta, 'm**3')
    if not z > 0:
        raise ValueError(f'The distance has to be positive, but was {z} m.')
    if beta < 0:
        raise ValueError(f'beta has to be non-negative, but was {beta} m^3.')
    return beta / z ** 3


def hydrogenic_gamma_ratio() -> float:
    r""" Order of magnitude of :math:`\gamma_0/\omega_0` for a hydrogen-like atom.

    With the dipole matrix element of the order of the Bohr radius and :math:`\omega_0` of the order of
    :math:`e^2 / (8\pi\epsilon_0 a_0 \hbar)`, the ratio is :math:`\alpha^3/3` in terms of the fine structure
    constant.
    """
    return constants.fine_structure ** 3 / 3.


def linear_phase_difference(z, z0, params, T) -> float:
    r""" Phase difference from the one-cycle first-order correction accumulated linearly over all cycles.

    .. math::

        \delta_{lin} = \frac{\omega_0 T}{2\pi}\, \pi^2 \frac{\gamma_0}{2\omega_0} (2 + \cos\theta)\sin^2\theta
            \left[\sum_i \alpha_i (1 - f_i)\big|_z - \sum_i \alpha_i (1 - f_i)\big|_{z_0}\right]

    This is the order-of-magnitude estimate for long evolution times. It ignores that the correction of later
    cycles grows with the decay of the excited population, see :func:`skphase.phase.phase_difference` for the
    exact value.

    Parameters
    ----------
    z, z0 : float, str or Quantity
        distances to the plane, meters if bare numbers
    params : AtomParams
    T : float, str or Quantity
        evolution time, seconds if a bare number

    Returns
    -------
    delta : float
        in radians

    Examples
    --------
    >>> from skphase.dissipator import AtomParams
    >>> params = AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2)
    >>> '%.1e' % linear_phase_difference('10 mm', '1 mm', params, '1 ms')
    '6.9e-04'
    """
    z, z0, T = to_si(z, 'm'), to_si(z0, 'm'), to_si(T, 's')
    if not (z > 0 and z0 > 0 and T > 0):
        raise ValueError(f'Distances and evolution time have to be positive, but got z={z} m, z0={z0} m, T={T} s.')
    cycles = time_to_phi(T, params.omega0) / (2. * np.pi)
    factor = boundary_factor(params.alpha, Geometry.from_distance(z, params.omega0)) \
        - boundary_factor(params.alpha, Geometry.from_distance(z0, params.omega0))
    return cycles * np.pi ** 2 * .5 * params.gamma_ratio * envelope(params.theta) * factor
