r""" Closed-form solution of the master equation for a vacuum bath (A = B).

.. math::

    \rho(\varphi) = \begin{pmatrix}
        e^{-4a\varphi}\cos^2\frac{\theta}{2} & \frac{1}{2}e^{-2a\varphi - i\Omega\varphi}\sin\theta \\
        \frac{1}{2}e^{-2a\varphi + i\Omega\varphi}\sin\theta & 1 - e^{-4a\varphi}\cos^2\frac{\theta}{2}
    \end{pmatrix}

with :math:`a = A/\omega_0` and :math:`\Omega` in units of :math:`\omega_0`.
"""
import numpy as np

from .state import DensityMatrix2, EigenDecomp, Trajectory
from skphase.util import ensure_ndarray

__all__ = ['rho_analytic', 'eigen_decompose', 'trajectory_analytic', 'eigen_arrays']


def _check_vacuum(coeffs):
    if not coeffs.vacuum:
        raise ValueError(f'The closed-form solution requires a vacuum bath (a == b), but a={coeffs.a}, '
                         f'b={coeffs.b}. Use the numerical integrator instead.')


def _check_phi(phi):
    if np.any(np.asarray(phi) < 0):
        raise ValueError(f'The phase variable must be non-negative, but was {phi}.')


def _entries(phis, theta, coeffs):
    decay = np.exp(-2. * coeffs.a * phis)
    ee = decay * decay * np.cos(.5 * theta) ** 2
    eg = .5 * decay * np.exp(-1j * coeffs.omega_eff * phis) * np.sin(theta)
    return ee, eg, 1. - ee


def rho_analytic(phi, params, coeffs) -> DensityMatrix2:
    r""" State of the atom at :math:`\varphi = \omega_0\tau`.

    Parameters
    ----------
    phi : float
        non-negative phase variable
    params : AtomParams
    coeffs : DissipatorCoeffs
        must satisfy a == b

    Returns
    -------
    state : DensityMatrix2

    Examples
    --------
    >>> from skphase.dissipator import AtomParams, DissipatorCoeffs
    >>> rho = rho_analytic(0., AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2), DissipatorCoeffs(0., 0.))
    >>> round(rho.purity, 12)
    1.0
    """
    _check_vacuum(coeffs)
    _check_phi(phi)
    ee, eg, gg = _entries(float(phi), params.theta, coeffs)
    return DensityMatrix2(ee=ee, eg=eg, gg=gg)


def trajectory_analytic(phis, params, coeffs) -> Trajectory:
    """ Closed-form states on a grid, see :func:`rho_analytic`. """
    _check_vacuum(coeffs)
    phis = ensure_ndarray(phis, ndim=1, dtype=np.float64)
    _check_phi(phis)
    ee, eg, gg = _entries(phis, params.theta, coeffs)
    matrices = np.empty((len(phis), 2, 2), dtype=complex)
    matrices[:, 0, 0] = ee
    matrices[:, 0, 1] = eg
    matrices[:, 1, 0] = np.conj(eg)
    matrices[:, 1, 1] = gg
    return Trajectory(phis, matrices)


def eigen_arrays(phis, theta, a):
    r""" Vectorized eigen-decomposition of the closed-form state.

    Returns ``(eta, rho3, theta_tau, degenerate)`` with :math:`\rho_3 = e^{-4a\varphi}(1 + \cos\theta) - 1`
    and :math:`\eta = \sqrt{\rho_3^2 + e^{-4a\varphi}\sin^2\theta}`. The mixing angle follows from
    :math:`\tan(\theta_\tau/2) = \sqrt{(\eta + \rho_3)/(\eta - \rho_3)}`; whichever of
    :math:`\eta \pm \rho_3` suffers from cancellation is evaluated as
    :math:`e^{-4a\varphi}\sin^2\theta / (\eta \mp \rho_3)`.
    At a maximally mixed state (only reachable for theta = 0) theta_tau is pi, its limit from earlier times.
    """
    phis = np.asarray(phis, dtype=float)
    w = np.exp(-4. * a * phis)
    rho3 = w * (1. + np.cos(theta)) - 1.
    off = w * np.sin(theta) ** 2
    eta = np.sqrt(rho3 * rho3 + off)
    # the initial state is pure, lambda_minus(0) vanishes exactly
    initial = phis == 0
    rho3 = np.where(initial, np.cos(theta), rho3)
    eta = np.where(initial, 1., eta)
    degenerate = eta == 0
    safe_eta = np.where(degenerate, 1., eta)
    upper = rho3 >= 0
    big = safe_eta + np.abs(rho3)
    small = off / big
    plus = np.where(upper, big, small)
    minus = np.where(upper, small, big)
    theta_tau = np.where(degenerate, np.pi, 2. * np.arctan2(np.sqrt(plus), np.sqrt(minus)))
    return eta, rho3, theta_tau, degenerate


def eigen_decompose(phi, params, coeffs) -> EigenDecomp:
    r""" Eigenvalues and mixing angle of the closed-form state at :math:`\varphi`.

    Only the :math:`\lambda_+` branch carries the phase of the initially pure state, :math:`\lambda_-(0) = 0`.
    """
    _check_vacuum(coeffs)
    _check_phi(phi)
    eta, rho3, theta_tau, degenerate = eigen_arrays(float(phi), params.theta, coeffs.a)
    eta = float(eta)
    return EigenDecomp(lambda_plus=.5 * (1. + eta), lambda_minus=.5 * (1. - eta), theta_tau=float(theta_tau),
                       eta=eta, rho3=float(rho3), precession=coeffs.omega_eff * float(phi),
                       degenerate=bool(degenerate))
