r""" Electric field two-point functions in the proper frame of the atom.

With the regulated separation :math:`x = c\Delta\tau - i\epsilon` and the image distance :math:`d = 2z`

.. math::

    \langle E_i E_i \rangle_0 = \frac{\hbar c}{\pi^2 \epsilon_0} \frac{1}{x^4}, \qquad
    \langle E_z E_z \rangle_b = \frac{\hbar c}{\pi^2 \epsilon_0} \frac{1}{(x^2 - d^2)^2}, \qquad
    \langle E_x E_x \rangle_b = \langle E_y E_y \rangle_b
        = -\frac{\hbar c}{\pi^2 \epsilon_0} \frac{x^2 + d^2}{(x^2 - d^2)^3}.

These are only used to cross-check the modulation functions numerically: the Fourier transform of the
boundary part over the free part at :math:`\lambda = \omega_0` is :math:`-f_i(2\omega_0 z/c)`.
"""
import numpy as np
from scipy import constants
from scipy.integrate import trapezoid
from scipy.signal.windows import tukey

__all__ = ['COMPONENTS', 'correlator_boundary', 'correlator_free', 'fourier_modulation_oracle']

COMPONENTS = ('x', 'y', 'z')

#: prefactor hbar c / (pi^2 epsilon_0) of the field correlators in SI units
PREFACTOR = constants.hbar * constants.c / (np.pi ** 2 * constants.epsilon_0)


def _check_component(component):
    if component not in COMPONENTS:
        raise ValueError(f'Unknown field component "{component}", supported are {COMPONENTS}.')


def _boundary_kernel(x, d, component):
    x2, d2 = x * x, d * d
    if component == 'z':
        return 1. / (x2 - d2) ** 2
    return -(x2 + d2) / (x2 - d2) ** 3


def _free_kernel(x):
    return 1. / x ** 4


def correlator_boundary(dtau, z, eps, component):
    r""" Boundary part of the proper-frame correlator :math:`\langle 0|E_i(\tau)E_i(\tau')|0\rangle`.

    Parameters
    ----------
    dtau : float or ndarray
        proper time difference :math:`\tau - \tau'` in seconds
    z : float
        distance to the plane in meters
    eps : float
        regulator length in meters, must be positive
    component : str
        one of 'x', 'y', 'z'

    Returns
    -------
    value : complex or ndarray of complex
        in units of V^2/m^2
    """
    _check_component(component)
    if not eps > 0:
        raise ValueError(f'The regulator eps must be positive, but was {eps}.')
    if not z > 0:
        raise ValueError(f'The distance z must be positive, but was {z}.')
    x = constants.c * np.asarray(dtau, dtype=float) - 1j * eps
    return PREFACTOR * _boundary_kernel(x, 2. * z, component)


def correlator_free(dtau, eps, component='x'):
    r""" Free-space proper-frame correlator, identical for the three components. """
    _check_component(component)
    if not eps > 0:
        raise ValueError(f'The regulator eps must be positive, but was {eps}.')
    x = constants.c * np.asarray(dtau, dtype=float) - 1j * eps
    return PREFACTOR * _free_kernel(x)


def fourier_modulation_oracle(u, component, eps=0.05, half_width=100., points_per_eps=8, taper=0.2):
    r""" Recovers the modulation function :math:`f_i(u)` from the numerical Fourier transform of the correlators.

    Works in dimensionless variables :math:`s = \omega_0 \Delta\tau`, :math:`\tilde\epsilon = \omega_0\epsilon/c`
    and :math:`u = 2\omega_0 z / c`. Both transforms are evaluated at :math:`\lambda = \omega_0` on the same
    Tukey-tapered window with the trapezoidal rule, so the regulator factor :math:`e^{-\tilde\epsilon}` cancels
    in the ratio.

    Parameters
    ----------
    u : float
        dimensionless distance, positive and finite
    component : str
        one of 'x', 'y', 'z'
    eps : float, optional, default=0.05
        dimensionless regulator
    half_width : float, optional, default=100
        the window is :math:`s \in [-W, W]`
    points_per_eps : int, optional, default=8
        grid resolution relative to the regulator, which sets the width of the peaks
    taper : float, optional, default=0.2
        fraction of the window that is tapered, see :func:`scipy.signal.windows.tukey`

    Returns
    -------
    f : float
        estimate of :math:`f_i(u)`
    """
    _check_component(component)
    if not eps > 0:
        raise ValueError(f'The regulator eps must be positive, but was {eps}.')
    if not 0 < u < np.inf:
        raise ValueError(f'The oracle needs a positive finite distance, but u was {u}.')
    if half_width <= 2 * u:
        raise ValueError(f'The window half width {half_width} must enclose the image poles at +-{u}.')
    n = int(np.ceil(2. * half_width * points_per_eps / eps)) + 1
    s = np.linspace(-half_width, half_width, n)
    weights = tukey(n, alpha=taper) * np.exp(1j * s)
    x = s - 1j * eps
    boundary = trapezoid(weights * _boundary_kernel(x, u, component), x=s)
    free = trapezoid(weights * _free_kernel(x), x=s)
    return float(-(boundary / free).real)
