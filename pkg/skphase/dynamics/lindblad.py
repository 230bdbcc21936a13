r""" Brute-force integration of the Kossakowski-Lindblad master equation

.. math::

    \frac{d\rho}{d\varphi} = -i\left[\frac{\Omega}{2}\sigma_3, \rho\right]
        + \frac{1}{2}\sum_{i,j=1}^{3} a_{ij}\left(2\sigma_j\rho\sigma_i - \sigma_i\sigma_j\rho - \rho\sigma_i\sigma_j\right)

in the phase variable :math:`\varphi = \omega_0\tau`. Serves as an oracle for the closed-form solution and
accepts independent coefficients a and b.
"""
import numbers

import numpy as np

from skphase.base import Estimator
from skphase.dissipator.coefficients import kossakowski_matrix
from skphase.numeric import NumericalFailure, mdot
from .state import DensityMatrix2, Trajectory

__all__ = ['PAULI', 'lindblad_rhs', 'evolve_numeric', 'LindbladIntegrator', 'POSITIVITY_TOL']

#: Pauli matrices in the basis (|+>, |->)
PAULI = np.array([[[0., 1.], [1., 0.]],
                  [[0., -1j], [1j, 0.]],
                  [[1., 0.], [0., -1.]]], dtype=complex)
PAULI.flags.writeable = False

#: the numerical trajectory is rejected once an eigenvalue drops below minus this value
POSITIVITY_TOL = 1e-8


class _Generator(object):
    """ The right-hand side with all coefficient dependent operators precomputed. """

    def __init__(self, coeffs):
        self.kossakowski = kossakowski_matrix(coeffs)
        self.hamiltonian = .5 * coeffs.omega_eff * PAULI[2]
        self.anticommutator = np.einsum('ij,iab,jbc->ac', self.kossakowski, PAULI, PAULI)

    def __call__(self, rho):
        jumps = sum(self.kossakowski[i, j] * mdot(PAULI[j], rho, PAULI[i])
                    for i in range(3) for j in range(3) if self.kossakowski[i, j] != 0)
        dissipator = jumps - .5 * (self.anticommutator @ rho + rho @ self.anticommutator)
        return -1j * (self.hamiltonian @ rho - rho @ self.hamiltonian) + dissipator


def lindblad_rhs(state, params, coeffs) -> np.ndarray:
    r""" Time derivative :math:`d\rho/d\varphi` of a state.

    Parameters
    ----------
    state : DensityMatrix2 or (2, 2) ndarray
    params : AtomParams
        unused by the generator, kept for a uniform signature of the dynamics routines
    coeffs : DissipatorCoeffs
        a and b may differ

    Returns
    -------
    tangent : (2, 2) ndarray
        traceless and Hermitian
    """
    rho = state.matrix if isinstance(state, DensityMatrix2) else np.asarray(state, dtype=complex)
    return _Generator(coeffs)(rho)


def _check_positivity(rho, phi):
    ee, gg = rho[0, 0].real, rho[1, 1].real
    det = ee * gg - abs(rho[0, 1]) ** 2
    if ee < -POSITIVITY_TOL or gg < -POSITIVITY_TOL or det < -POSITIVITY_TOL:
        raise NumericalFailure(f'State left the positive cone at phi={phi}: ee={ee}, gg={gg}, det={det}.', phi=phi)


def evolve_numeric(params, coeffs, phi_end, steps) -> Trajectory:
    r""" Fixed-step classical Runge-Kutta integration from the pure initial state.

    The trace is not renormalized, its drift is a diagnostic of the integrator.

    Parameters
    ----------
    params : AtomParams
        provides the initial angle theta
    coeffs : DissipatorCoeffs
    phi_end : float
        final value of the phase variable, positive
    steps : int
        number of steps, at least 10

    Returns
    -------
    trajectory : Trajectory
        with ``steps + 1`` points

    Raises
    ------
    NumericalFailure
        if the state loses positivity by more than :data:`POSITIVITY_TOL`
    """
    if not isinstance(steps, numbers.Integral) or steps < 10:
        raise ValueError(f'Need at least 10 integration steps, but got {steps}.')
    if not phi_end > 0:
        raise ValueError(f'phi_end has to be positive, but was {phi_end}.')
    rhs = _Generator(coeffs)
    h = phi_end / steps
    phis = h * np.arange(steps + 1)
    phis[-1] = phi_end
    matrices = np.empty((steps + 1, 2, 2), dtype=complex)
    rho = DensityMatrix2.initial(params.theta).matrix
    matrices[0] = rho
    for n in range(steps):
        k1 = rhs(rho)
        k2 = rhs(rho + .5 * h * k1)
        k3 = rhs(rho + .5 * h * k2)
        k4 = rhs(rho + h * k3)
        rho = rho + h / 6. * (k1 + 2. * k2 + 2. * k3 + k4)
        _check_positivity(rho, phis[n + 1])
        matrices[n + 1] = rho
    return Trajectory(phis, matrices)


class LindbladIntegrator(Estimator):
    r""" Estimator wrapper around :func:`evolve_numeric`.

    Parameters
    ----------
    params : AtomParams
    phi_end : float
    steps : int

    Examples
    --------
    >>> from skphase.dissipator import AtomParams, DissipatorCoeffs
    >>> params = AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2)
    >>> traj = LindbladIntegrator(params, phi_end=2 * np.pi, steps=100).fit(DissipatorCoeffs(0., 0.)).fetch_model()
    >>> len(traj)
    101
    """

    def __init__(self, params, phi_end, steps):
        super(LindbladIntegrator, self).__init__()
        self.params = params
        self.phi_end = phi_end
        self.steps = steps

    def fit(self, data, **kwargs):
        r""" Integrates the master equation for the given coefficients.

        Parameters
        ----------
        data : DissipatorCoeffs

        Returns
        -------
        self : LindbladIntegrator
        """
        self._model = evolve_numeric(self.params, data, self.phi_end, self.steps)
        return self
