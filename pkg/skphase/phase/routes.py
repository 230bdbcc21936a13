r""" Four routes to the geometric phase of the initially pure atom.

With :math:`Q = 1 + \cos\theta` and :math:`w = e^{-4a\varphi}` the only contributing eigenvector is the one
of :math:`\lambda_+` and the phase reduces to

.. math::

    \gamma_g = -\Omega \int_0^{\varphi} \cos^2\frac{\theta_\tau}{2}\, d\varphi'
             = \underbrace{-\frac{\Omega}{2}(2 - Q)\varphi}_{\text{geometric part}} + \text{environment part}.

* :func:`gp_general` evaluates the mixed-state phase functional on any trajectory,
* :func:`gp_integral` integrates the environment part numerically,
* :func:`gp_closed_form` uses the antiderivative in high precision arithmetic,
* :func:`gp_first_order` is the expansion to first order in the coupling for one cycle.
"""
import threading

import numpy as np
from mpmath.ctx_mp import MPContext
from scipy.integrate import trapezoid

from skphase.dissipator.coefficients import boundary_factor
from skphase.dynamics.analytic import _check_vacuum
from skphase.numeric import NumericalFailure, DegeneracyError, eigh2x2, parallel_transport, integrate
from skphase.util import wrap_angle
from .result import PhaseResult

__all__ = ['gp_general', 'gp_integral', 'gp_closed_form', 'gp_first_order', 'geometric_part',
           'environment_difference', 'WORKING_DPS', 'MIN_TRAJECTORY_POINTS']

#: decimal digits of the closed-form evaluation
WORKING_DPS = 50

MIN_TRAJECTORY_POINTS = 100

_local = threading.local()


def _mp():
    # mpmath's global context is shared between threads, every thread gets its own
    ctx = getattr(_local, 'ctx', None)
    if ctx is None:
        ctx = MPContext()
        ctx.dps = WORKING_DPS
        _local.ctx = ctx
    return ctx


def _check_phi_end(phi_end):
    if not np.isfinite(phi_end) or phi_end <= 0:
        raise ValueError(f'phi_end has to be positive and finite, but was {phi_end}.')


def geometric_part(theta, omega_eff, phi_end) -> float:
    r""" The phase the isolated atom would acquire, :math:`-\frac{\Omega}{2}(1 - \cos\theta)\varphi`. """
    return -.5 * omega_eff * (1. - np.cos(theta)) * phi_end


def _special_case(theta, a, omega_eff, phi_end):
    r""" Exact values for the unitary limit and the two poles of the Bloch sphere, None otherwise. """
    geo = geometric_part(theta, omega_eff, phi_end)
    if a == 0 or np.cos(theta) == -1.:
        # no dissipation, or the ground state which is stationary
        return PhaseResult(geometric_part=geo, environment_part=0.)
    if theta == 0:
        # the excited state decays through the maximally mixed state at exp(4 a phi) = 2, before that the
        # lambda_+ eigenvector is |+> and contributes nothing
        crossing = np.log(2.) / (4. * a)
        return PhaseResult(geometric_part=geo, environment_part=-omega_eff * max(0., phi_end - crossing))
    return None


def _environment_mp(theta, a, omega_eff, phi_end):
    r""" Environment part in working precision, as an ``mpf`` of the calling thread's context. """
    mp = _mp()
    special = _special_case(theta, a, omega_eff, phi_end)
    if special is not None:
        return mp.mpf(special.environment_part)

    a = mp.mpf(a)
    phi = mp.mpf(phi_end)
    q = 1 + mp.cos(mp.mpf(theta))
    q2 = q * q
    w = mp.exp(-4 * a * phi)
    eps = -mp.expm1(-4 * a * phi)
    s_hat = mp.sqrt(1 - q2 * w * eps)

    x = 1 - q2 * w / 2
    if x >= 0:
        x_plus_s = x + s_hat
    else:
        x_plus_s = q2 * (4 - q2) / 4 * w * w / (s_hat - x)
    ratio_x = x_plus_s / ((4 - q2) / 2)

    t = q * (1 - 2 * w)
    if t > 0:
        p = (4 - q2) / (2 * s_hat + t)
    else:
        p = 2 * s_hat - t
    ratio_p = p / (2 + q)

    return mp.mpf(omega_eff) * (-(mp.log(ratio_x) + mp.log(ratio_p)) / (8 * a) - q * phi / 2)


def _to_float(value, what, phi_end):
    value = float(value)
    if not np.isfinite(value):
        raise NumericalFailure(f'Closed form did not produce a finite {what}.', phi=phi_end)
    return value


def gp_closed_form(params, coeffs, phi_end) -> PhaseResult:
    r""" Geometric phase from the antiderivative of the reduced integrand.

    .. math::

        F(\varphi) - F(0) = -\varphi - \frac{1}{8a}\left[\ln\frac{x + \hat S}{x_0 + \hat S_0}
            + \ln\frac{2\hat S - Q(1 - 2w)}{2 + Q}\right]

    with :math:`\hat S = \sqrt{1 - Q^2 w (1 - w)}` and :math:`x = 1 - Q^2 w / 2`. This is the antiderivative
    in terms of :math:`S(\varphi) = e^{4a\varphi}\hat S`, rescaled by :math:`e^{-4a\varphi}` so that nothing
    overflows. The logarithms cancel against :math:`-Q\varphi/2` to leading order in :math:`a`, the
    environment part is therefore evaluated with :data:`WORKING_DPS` decimal digits and rounded to double
    precision at the end.

    Parameters
    ----------
    params : AtomParams
    coeffs : DissipatorCoeffs
        vacuum coefficients, a == b
    phi_end : float
        final value of the phase variable

    Returns
    -------
    result : PhaseResult

    Raises
    ------
    NumericalFailure
        if the result is not finite
    """
    _check_vacuum(coeffs)
    _check_phi_end(phi_end)
    env = _environment_mp(params.theta, coeffs.a, coeffs.omega_eff, phi_end)
    return PhaseResult(geometric_part=geometric_part(params.theta, coeffs.omega_eff, phi_end),
                       environment_part=_to_float(env, f'value for a={coeffs.a}, theta={params.theta}', phi_end))


def environment_difference(params, reference, coeffs, phi_end) -> float:
    r""" Difference of the closed-form environment parts for two sets of coefficients.

    The subtraction happens in working precision, so the result keeps its relative accuracy even when both
    environment parts are many orders of magnitude larger than their difference.

    Parameters
    ----------
    params : AtomParams
    reference, coeffs : DissipatorCoeffs
        vacuum coefficients with equal ``omega_eff``
    phi_end : float

    Returns
    -------
    difference : float
        environment part for ``reference`` minus the one for ``coeffs``
    """
    _check_vacuum(reference)
    _check_vacuum(coeffs)
    _check_phi_end(phi_end)
    if reference.omega_eff != coeffs.omega_eff:
        raise ValueError('The unitary parts only cancel for equal effective level spacings, but got '
                         f'{reference.omega_eff} and {coeffs.omega_eff}.')
    first = _environment_mp(params.theta, reference.a, reference.omega_eff, phi_end)
    second = _environment_mp(params.theta, coeffs.a, coeffs.omega_eff, phi_end)
    return _to_float(first - second, 'phase difference', phi_end)


def _environment_integrand(theta, a):
    q = 1. + np.cos(theta)

    def integrand(phi):
        w = np.exp(-4. * a * phi)
        eps = -np.expm1(-4. * a * phi)
        s_hat = np.sqrt(np.maximum(1. - q * q * w * eps, 0.))
        return eps / (2. * s_hat) * ((q - 1.) * q * q * w / (1. + s_hat) - q)

    return integrand


def gp_integral(params, coeffs, phi_end, epsrel=1e-12) -> PhaseResult:
    r""" Geometric phase by adaptive quadrature.

    The integrand of the environment part,

    .. math::

        -\cos^2\frac{\theta_\tau}{2} + \frac{1 - \cos\theta}{2}
            = \frac{1 - w}{2\hat S}\left[\frac{(Q - 1)Q^2 w}{1 + \hat S} - Q\right],

    is written without cancellations and varies on the time scale :math:`1/a`, so long horizons are cheap.

    Parameters
    ----------
    params : AtomParams
    coeffs : DissipatorCoeffs
        vacuum coefficients, a == b
    phi_end : float
        final value of the phase variable
    epsrel : float, optional, default=1e-12
        relative tolerance of the quadrature

    Returns
    -------
    result : PhaseResult

    Raises
    ------
    NumericalFailure
        if the quadrature does not converge
    """
    _check_vacuum(coeffs)
    _check_phi_end(phi_end)
    special = _special_case(params.theta, coeffs.a, coeffs.omega_eff, phi_end)
    if special is not None:
        return special
    q = 1. + np.cos(params.theta)
    # the state passes closest to the maximally mixed one where rho3 = 0
    points = None
    if q > 1.:
        closest = np.log(q) / (4. * coeffs.a)
        if 0 < closest < phi_end:
            points = [closest]
    env = integrate(_environment_integrand(params.theta, coeffs.a), 0., phi_end, epsrel=epsrel, points=points)
    return PhaseResult(geometric_part=geometric_part(params.theta, coeffs.omega_eff, phi_end),
                       environment_part=coeffs.omega_eff * env)


def gp_first_order(params, geom) -> PhaseResult:
    r""" Geometric phase of one cycle to first order in :math:`\gamma_0/\omega_0`.

    .. math::

        \gamma_g \approx -\pi(1 - \cos\theta)
            - \pi^2 \frac{\gamma_0}{2\omega_0} \sum_i \alpha_i (1 - f_i) (2 + \cos\theta)\sin^2\theta

    Examples
    --------
    >>> from skphase.dissipator import AtomParams, Geometry
    >>> result = gp_first_order(AtomParams(omega0=1e9, gamma_ratio=1e-6, theta=np.pi / 2), Geometry.free())
    >>> round(result.environment_part / 1e-6, 6)
    -9.869604
    """
    theta = params.theta
    envelope = (2. + np.cos(theta)) * np.sin(theta) ** 2
    env = -np.pi ** 2 * .5 * params.gamma_ratio * boundary_factor(params.alpha, geom) * envelope
    return PhaseResult(geometric_part=-np.pi * (1. - np.cos(theta)), environment_part=env)


def _principal_value(phis, matrices, gap_tol, overlap_tol):
    evals, evecs = eigh2x2(matrices, gap_tol=gap_tol)
    vectors = evecs[:, :, 0]
    overlaps = np.abs(np.einsum('ki,ki->k', vectors[:-1].conj(), vectors[1:]))
    if np.any(overlaps < overlap_tol):
        k = int(np.argmin(overlaps))
        raise DegeneracyError(f'The lambda_+ eigenvector jumps between phi={phis[k]} and phi={phis[k + 1]} '
                              f'(overlap {overlaps[k]:.3e}), the eigenvalues cross.')
    transported = parallel_transport(vectors)
    derivative = np.gradient(transported, phis, axis=0)
    connection = trapezoid(np.einsum('ki,ki->k', transported.conj(), derivative), x=phis)
    weight = np.sqrt(evals[0, 0] * evals[-1, 0])
    value = weight * np.vdot(transported[0], transported[-1]) * np.exp(-connection)
    return float(np.angle(value)), vectors


def gp_general(traj, coeffs, gap_tol=1e-10, overlap_tol=.5, pure_tol=1e-10) -> float:
    r""" Mixed-state geometric phase of a nonunitary evolution, evaluated on a sampled trajectory.

    .. math::

        \gamma_g = \arg\left(\sum_k \sqrt{\lambda_k(0)\lambda_k(T)}\,\langle\phi_k(0)|\phi_k(T)\rangle\,
            e^{-\int_0^T \langle\phi_k|\dot\phi_k\rangle d\tau}\right)

    Each state is diagonalized, the eigenvector phases are fixed by parallel transport along the path and the
    connection integral uses centered differences and the trapezoidal rule. For an odd number of points the
    principal value is Richardson-extrapolated against the every-other-point sub-grid. Because the argument is
    only defined modulo :math:`2\pi`, the result is unwrapped to the branch closest to the reduced integral
    :math:`-\Omega\int|\langle -|\phi_+\rangle|^2 d\varphi`; the two agree only at whole cycles.

    Parameters
    ----------
    traj : Trajectory
        at least 100 points, starting in a pure state
    coeffs : DissipatorCoeffs
        provides the effective level spacing for unwrapping
    gap_tol : float, optional, default=1e-10
        smallest admissible eigenvalue gap
    overlap_tol : float, optional, default=0.5
        smallest admissible overlap of neighbouring eigenvectors before the path counts as crossing
    pure_tol : float, optional, default=1e-10
        tolerance on the smaller eigenvalue of the initial state

    Returns
    -------
    phase : float
        in radians

    Raises
    ------
    DegeneracyError
        if the eigenvalues cross along the trajectory
    ValueError
        if the trajectory is too short or does not start in a pure state
    """
    phis, matrices = traj.phis, traj.matrices
    n = len(phis)
    if n < MIN_TRAJECTORY_POINTS:
        raise ValueError(f'Need a trajectory with at least {MIN_TRAJECTORY_POINTS} points, but got {n}.')
    initial = matrices[0]
    lambda_minus = .5 * (initial[0, 0].real + initial[1, 1].real) \
        - np.hypot(.5 * (initial[0, 0].real - initial[1, 1].real), abs(initial[0, 1]))
    if abs(lambda_minus) > pure_tol:
        raise ValueError(f'The trajectory has to start in a pure state, but the smaller eigenvalue is '
                         f'{lambda_minus}.')

    value, vectors = _principal_value(phis, matrices, gap_tol, overlap_tol)
    if n % 2 == 1 and (n - 1) // 2 >= MIN_TRAJECTORY_POINTS:
        coarse, _ = _principal_value(phis[::2], matrices[::2], gap_tol, overlap_tol)
        value = value + wrap_angle(value - coarse) / 3.

    estimate = -coeffs.omega_eff * trapezoid(np.abs(vectors[:, 1]) ** 2, x=phis)
    return float(value + 2. * np.pi * np.round((estimate - value) / (2. * np.pi)))
