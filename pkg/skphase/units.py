r""" Unit handling at the SI boundary.

All kernels work in dimensionless variables: frequencies in units of :math:`\omega_0`, time as the
phase variable :math:`\varphi = \omega_0 \tau` and distances as :math:`u = 2\omega_0 z / c`.
"""
import numpy as np
import pint

ureg = pint.UnitRegistry()
Q_ = ureg.Quantity

# TODO: we need to do this for unpickling, but it will overwrite other apps default registry!
pint.set_application_registry(ureg)

del pint

#: speed of light in m/s
SPEED_OF_LIGHT = float(Q_(1., 'speed_of_light').to('m/s').magnitude)


def _si(value, unit):
    from skphase.util import to_si
    return to_si(value, unit)


def distance_to_u(z, omega0):
    r""" Dimensionless distance :math:`u = 2 \omega_0 z / c`.

    Parameters
    ----------
    z : float, ndarray, str or Quantity
        distance to the plane (SI meters if bare numbers). ``np.inf`` is free space.
    omega0 : float
        angular transition frequency in rad/s
    """
    if isinstance(z, np.ndarray):
        return 2. * omega0 * z / SPEED_OF_LIGHT
    return 2. * omega0 * _si(z, 'm') / SPEED_OF_LIGHT


def u_to_distance(u, omega0):
    """ Inverse of :func:`distance_to_u`, result in meters. """
    return u * SPEED_OF_LIGHT / (2. * omega0)


def time_to_phi(duration, omega0):
    r""" Phase variable :math:`\varphi = \omega_0 T`. """
    return omega0 * _si(duration, 's')


def phi_to_time(phi, omega0):
    """ Inverse of :func:`time_to_phi`, result in seconds. """
    return phi / omega0
