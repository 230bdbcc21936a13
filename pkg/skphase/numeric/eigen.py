import numpy as _np

__author__ = 'skphase'


class DegeneracyError(_np.linalg.LinAlgError):
    """Eigenvalues of a matrix path cross, the eigenvector branch is not defined."""
    pass


def eigh2x2(matrices, gap_tol=None):
    r""" Closed-form eigen-decomposition of (a batch of) 2x2 Hermitian matrices.

    We use the parametrization

    .. math::

        H = \begin{pmatrix} t + d & q \\ q^* & t - d \end{pmatrix}

    with eigenvalues :math:`t \pm r`, :math:`r = \sqrt{d^2 + |q|^2}`.

    Parameters
    ----------
    matrices : ndarray((..., 2, 2), dtype=complex)
        Hermitian matrices. Only the upper triangle and the diagonal are read.
    gap_tol : float or None, optional, default=None
        If given, raise :class:`DegeneracyError` if any gap :math:`2r` falls below this value.

    Returns
    -------
    (evals, evecs) : ndarray((..., 2)), ndarray((..., 2, 2))
        eigenvalues sorted by descending value and the matching normalized eigenvectors columnwise.
        The phase of the eigenvectors is arbitrary; see :func:`parallel_transport`.
    """
    matrices = _np.asarray(matrices, dtype=complex)
    p = matrices[..., 0, 0].real
    s = matrices[..., 1, 1].real
    q = matrices[..., 0, 1]

    t = 0.5 * (p + s)
    d = 0.5 * (p - s)
    r = _np.hypot(d, _np.abs(q))

    if gap_tol is not None and _np.any(2. * r < gap_tol):
        index = int(_np.argmin(r.ravel()))
        raise DegeneracyError(f'Eigenvalue gap {2. * r.ravel()[index]:.3e} below {gap_tol:.1e} at index {index}.')

    evals = _np.stack([t + r, t - r], axis=-1)

    # v+ = (r + d, q*) for d >= 0 and (q, r - d) otherwise, whichever is better conditioned
    upper = d >= 0
    v_top = _np.where(upper, r + d, q)
    v_bottom = _np.where(upper, _np.conj(q), r - d)
    norm = _np.sqrt(_np.abs(v_top) ** 2 + _np.abs(v_bottom) ** 2)
    # fully degenerate matrices: any basis is an eigenbasis
    degenerate = norm == 0
    norm = _np.where(degenerate, 1., norm)
    v_top = _np.where(degenerate, 1., v_top) / norm
    v_bottom = _np.where(degenerate, 0., v_bottom) / norm

    evecs = _np.empty(matrices.shape, dtype=complex)
    evecs[..., 0, 0] = v_top
    evecs[..., 1, 0] = v_bottom
    # orthogonal complement of (a, b) is (-b*, a*)
    evecs[..., 0, 1] = -_np.conj(v_bottom)
    evecs[..., 1, 1] = _np.conj(v_top)
    return evals, evecs


def parallel_transport(vectors):
    r""" Fixes the phase of a path of state vectors by maximizing the overlap with the previous point.

    Each vector :math:`v_k` is multiplied by :math:`e^{-i\alpha_k}`, with :math:`\alpha_k` the accumulated
    argument of the raw overlaps :math:`\langle v_{j-1} | v_j \rangle`, :math:`j \leq k`. Afterwards every
    overlap between neighbours is real and non-negative.

    Parameters
    ----------
    vectors : ndarray((n, d), dtype=complex)
        normalized vectors along the path

    Returns
    -------
    transported : ndarray((n, d), dtype=complex)
    """
    vectors = _np.asarray(vectors, dtype=complex)
    overlaps = _np.einsum('ki,ki->k', _np.conj(vectors[:-1]), vectors[1:])
    alpha = _np.concatenate([[0.], _np.cumsum(_np.angle(overlaps))])
    return vectors * _np.exp(-1j * alpha)[:, None]
