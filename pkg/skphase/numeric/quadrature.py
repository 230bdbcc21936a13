import warnings

import numpy as np
from scipy import integrate as _integrate

from . import NumericalFailure


def _simpson_richardson(func, a, b, epsrel, max_splits):
    r""" Composite Simpson rule with interval halving and a Richardson check.

    Simpson errors scale as :math:`h^4`, the extrapolated value is :math:`S_h + (S_h - S_{2h}) / 15`.
    """
    n = 64
    previous = None
    for _ in range(max_splits):
        x = np.linspace(a, b, n + 1)
        current = _integrate.simpson(func(x), x=x)
        if previous is not None:
            extrapolated = current + (current - previous) / 15.
            if abs(extrapolated - current) <= epsrel * max(abs(extrapolated), np.finfo(float).tiny):
                return extrapolated
        previous = current
        n *= 2
    raise NumericalFailure(f'Simpson/Richardson quadrature on [{a}, {b}] did not reach relative tolerance {epsrel}.')


def integrate(func, a, b, epsrel=1e-12, epsabs=0., limit=500, points=None, max_splits=16):
    r""" Adaptive quadrature of a smooth scalar integrand.

    Uses the Gauss-Kronrod rules of QUADPACK (:func:`scipy.integrate.quad`). If those do not report
    convergence, falls back to composite Simpson with a Richardson convergence check on a vectorised
    version of the integrand.

    Parameters
    ----------
    func : callable
        integrand, must accept scalars and ndarrays
    a, b : float
        integration bounds, a <= b
    epsrel : float, optional, default=1e-12
        relative tolerance
    epsabs : float, optional, default=0
        absolute tolerance
    limit : int, optional, default=500
        maximum number of adaptive subintervals
    points : sequence of float, optional
        break points of the integrand inside (a, b)
    max_splits : int, optional, default=16
        maximum number of interval halvings of the fallback

    Returns
    -------
    value : float

    Raises
    ------
    NumericalFailure
        if neither route converges.
    """
    if b < a:
        raise ValueError(f'Integration bounds must be ordered, but got a={a} > b={b}.')
    if a == b:
        return 0.
    # with full_output, quad appends a message to its result if QUADPACK reports a problem
    value, _, _, *message = _integrate.quad(func, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit,
                                            points=points, full_output=1)
    if not message and np.isfinite(value):
        return float(value)
    reason = message[0] if message else 'non-finite result'
    warnings.warn(f'Adaptive quadrature on [{a}, {b}] did not converge ({reason}), '
                  f'falling back to composite Simpson.', stacklevel=2)
    value = _simpson_richardson(func, a, b, max(epsrel, 1e-13), max_splits)
    if not np.isfinite(value):
        raise NumericalFailure(f'Quadrature on [{a}, {b}] produced a non-finite value.')
    return float(value)
