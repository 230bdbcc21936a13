import numbers

import numpy as np

from skphase.base import Model, ConfigurationError
from skphase.spectral.density import spectral_density
from skphase.spectral.modulation import mod_fx, mod_fz

__all__ = ['DissipatorCoeffs', 'LAMB_SHIFT_POLICIES', 'boundary_factor', 'build_coeffs', 'effective_omega',
           'kossakowski_matrix']

#: supported treatments of the environment-induced level shift
LAMB_SHIFT_POLICIES = ('bare',)


class DissipatorCoeffs(Model):
    r""" Kossakowski scalars and effective level spacing, all in units of :math:`\omega_0`.

    Parameters
    ----------
    a : float
        :math:`A/\omega_0 = \frac{1}{4}[\mathcal{G}(\omega_0) + \mathcal{G}(-\omega_0)]/\omega_0`
    b : float
        :math:`B/\omega_0 = \frac{1}{4}[\mathcal{G}(\omega_0) - \mathcal{G}(-\omega_0)]/\omega_0`
    omega_eff : float, optional, default=1
        :math:`\Omega/\omega_0`
    """

    def __init__(self, a, b, omega_eff=1.):
        self.a = a
        self.b = b
        self.omega_eff = omega_eff

    @staticmethod
    def _check_rate(name, value):
        if not isinstance(value, numbers.Real) or not np.isfinite(value) or value < 0:
            raise ValueError(f'{name} has to be a non-negative finite number, but was {value}.')
        return float(value)

    @property
    def a(self) -> float:
        return self._a

    @a.setter
    def a(self, value):
        self._a = self._check_rate('a', value)

    @property
    def b(self) -> float:
        return self._b

    @b.setter
    def b(self, value):
        self._b = self._check_rate('b', value)

    @property
    def omega_eff(self) -> float:
        return self._omega_eff

    @omega_eff.setter
    def omega_eff(self, value):
        if not isinstance(value, numbers.Real) or not np.isfinite(value) or value <= 0:
            raise ValueError(f'omega_eff has to be positive, but was {value}.')
        self._omega_eff = float(value)

    @property
    def vacuum(self) -> bool:
        """ Whether the coefficients describe a zero temperature bath, i.e., a == b. """
        return self._a == self._b


def boundary_factor(alpha, geom) -> float:
    r""" Polarization-weighted boundary correction :math:`\sum_i \alpha_i (1 - f_i(u))`.

    Equals 1 in free space, 2 for a normal dipole at the plane and 0 for a tangential one.
    """
    ax, ay, az = alpha
    fx, fz = mod_fx(geom.u), mod_fz(geom.u)
    return float((ax + ay) * (1. - fx) + az * (1. - fz))


def effective_omega(params, geom, policy='bare') -> float:
    r""" Effective level spacing :math:`\Omega/\omega_0`.

    Lamb shift terms carry a factor :math:`\gamma_0/\omega_0` and only enter the phase at second order,
    the 'bare' policy drops them.

    Raises
    ------
    ConfigurationError
        if the policy is not one of :data:`LAMB_SHIFT_POLICIES`.
    """
    if policy not in LAMB_SHIFT_POLICIES:
        raise ConfigurationError(f'Unknown Lamb shift policy "{policy}", supported are {LAMB_SHIFT_POLICIES}.')
    return 1.


def build_coeffs(params, geom, policy='bare') -> DissipatorCoeffs:
    r""" Kossakowski coefficients for the atom in vacuum at the given distance to the plane.

    Parameters
    ----------
    params : AtomParams
    geom : Geometry
    policy : str, optional, default='bare'
        Lamb shift policy, see :func:`effective_omega`

    Returns
    -------
    coeffs : DissipatorCoeffs
        with :math:`a = b = \frac{\gamma_0}{4\omega_0}\sum_i\alpha_i(1 - f_i(u))`

    Examples
    --------
    >>> from skphase.dissipator import AtomParams, Geometry
    >>> coeffs = build_coeffs(AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=1.), Geometry.free())
    >>> coeffs.a, coeffs.b
    (2.5e-07, 2.5e-07)
    """
    omega_eff = effective_omega(params, geom, policy=policy)
    emission, absorption = spectral_density(1., geom, params), spectral_density(-1., geom, params)
    return DissipatorCoeffs(a=.25 * (emission + absorption), b=.25 * (emission - absorption), omega_eff=omega_eff)


def kossakowski_matrix(coeffs) -> np.ndarray:
    r""" The 3x3 Kossakowski matrix

    .. math::

        a_{ij} = A\delta_{ij} - iB\epsilon_{ijk}\delta_{k3} - A\delta_{i3}\delta_{j3}.

    Hermitian with eigenvalues :math:`\{0, A - B, A + B\}`.
    """
    a, b = coeffs.a, coeffs.b
    return np.array([[a, -1j * b, 0.],
                     [1j * b, a, 0.],
                     [0., 0., 0.]], dtype=complex)
