r""" Parameter sets of the two scenarios discussed for atom interferometry near a conducting plate.

The distances of both scenarios are quoted in micrometres. With :math:`u = 2\omega_0 z/c` in SI units the
boundary correction then scales as :math:`u^2 \sim 10^{-8}`. Read literally, the magnitude scenario gives
:math:`\delta \approx 8.5\cdot 10^{-5}` rad for 1 against 10 and :math:`1.7\cdot 10^{-6}` rad for the shift to
10.1, a little below the quoted :math:`\sim 10^{-3}` and :math:`\sim 10^{-5}` rad. Those quoted orders of
magnitude are what :func:`skphase.phase.linear_phase_difference` gives for the distances in millimetres; pass
``length_unit='mm'`` to get those. The exact phase difference in millimetres is much larger (about 85 rad),
the correction of later cycles grows with the decay of the excited population.
"""
import numpy as np

from skphase.base import Model
from skphase.dissipator import AtomParams
from skphase.units import Q_

__all__ = ['PhaseProfile', 'PROFILES', 'sweep_profile', 'magnitude_profile']


class PhaseProfile(Model):
    r""" Physical parameters of a phase difference experiment in SI units.

    Parameters
    ----------
    omega0 : float
        angular transition frequency in rad/s
    gamma_ratio : float
        :math:`\gamma_0/\omega_0`
    theta : float
        initial angle in radians
    alpha : str or array_like
        polarization preset name or weights
    z0 : float
        reference distance in meters
    z_min, z_max : float
        bounds of the distance grid in meters
    points : int
        number of grid points
    log_grid : bool
        logarithmic instead of linear spacing
    time_s : float
        evolution time in seconds
    """

    def __init__(self, omega0, gamma_ratio, theta, alpha, z0, z_min, z_max, points, log_grid, time_s):
        self.omega0 = omega0
        self.gamma_ratio = gamma_ratio
        self.theta = theta
        self.alpha = alpha
        self.z0 = z0
        self.z_min = z_min
        self.z_max = z_max
        self.points = points
        self.log_grid = log_grid
        self.time_s = time_s

    @property
    def params(self) -> AtomParams:
        return AtomParams(omega0=self.omega0, gamma_ratio=self.gamma_ratio, theta=self.theta, alpha=self.alpha)

    @property
    def z_grid(self) -> np.ndarray:
        if self.log_grid:
            grid = np.geomspace(self.z_min, self.z_max, self.points)
        else:
            grid = np.linspace(self.z_min, self.z_max, self.points)
        grid.flags.writeable = False
        return grid


def _meters(value, length_unit):
    return float(Q_(value, length_unit).to('m').magnitude)


def sweep_profile(length_unit='um') -> PhaseProfile:
    r""" Phase difference against :math:`z_0 = 1` over :math:`z \in [1, 100]` on a 60 point logarithmic grid.

    :math:`\omega_0 = 3\cdot 10^9` rad/s, :math:`\gamma_0/\omega_0 = 10^{-6}`, :math:`\theta = \pi/2`, isotropic
    polarization and an evolution time of 1 ms.

    Parameters
    ----------
    length_unit : str, optional, default='um'
        unit of the quoted distances
    """
    return PhaseProfile(omega0=3e9, gamma_ratio=1e-6, theta=.5 * np.pi, alpha='isotropic',
                        z0=_meters(1, length_unit), z_min=_meters(1, length_unit), z_max=_meters(100, length_unit),
                        points=60, log_grid=True, time_s=1e-3)


def magnitude_profile(length_unit='um') -> PhaseProfile:
    r""" Estimate of the attainable phase difference: trajectories at 1 and 10 with :math:`\omega_0 = 10^9` rad/s
    for 1 ms; the grid holds the far trajectory and its displacement to 10.1.

    Parameters
    ----------
    length_unit : str, optional, default='um'
        unit of the quoted distances
    """
    return PhaseProfile(omega0=1e9, gamma_ratio=1e-6, theta=.5 * np.pi, alpha='isotropic',
                        z0=_meters(1, length_unit), z_min=_meters(10, length_unit),
                        z_max=_meters(10.1, length_unit), points=2, log_grid=False, time_s=1e-3)


#: names of the shipped profiles
PROFILES = {'sweep': sweep_profile, 'magnitude': magnitude_profile}
