import numbers

import numpy as np

from skphase.base import Model
from skphase.util import ensure_ndarray

__all__ = ['DensityMatrix2', 'EigenDecomp', 'Trajectory', 'TRAJECTORY_COLUMNS']

#: column order of the trajectory export
TRAJECTORY_COLUMNS = ('phi', 'ee', 're_eg', 'im_eg', 'gg', 'purity')


class DensityMatrix2(Model):
    r""" Reduced state of the two-level atom in the basis :math:`(|+\rangle, |-\rangle)`.

    .. math::

        \rho = \begin{pmatrix} \rho_{ee} & \rho_{eg} \\ \rho_{eg}^* & \rho_{gg} \end{pmatrix}

    Parameters
    ----------
    ee : float
        excited state population
    eg : complex
        coherence, upper right entry
    gg : float
        ground state population
    """

    def __init__(self, ee, eg, gg):
        if not all(np.isfinite(x) for x in (ee, eg, gg)):
            raise ValueError(f'Density matrix entries must be finite, but were ee={ee}, eg={eg}, gg={gg}.')
        self._ee = float(np.real(ee))
        self._eg = complex(eg)
        self._gg = float(np.real(gg))

    @classmethod
    def initial(cls, theta) -> 'DensityMatrix2':
        r""" The pure state :math:`\cos(\theta/2)|+\rangle + \sin(\theta/2)|-\rangle`. """
        c, s = np.cos(.5 * theta), np.sin(.5 * theta)
        return cls(ee=c * c, eg=c * s, gg=s * s)

    @classmethod
    def from_matrix(cls, matrix) -> 'DensityMatrix2':
        matrix = ensure_ndarray(matrix, shape=(2, 2))
        return cls(ee=matrix[0, 0].real, eg=matrix[0, 1], gg=matrix[1, 1].real)

    @property
    def ee(self) -> float:
        return self._ee

    @property
    def eg(self) -> complex:
        return self._eg

    @property
    def gg(self) -> float:
        return self._gg

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self._ee, self._eg], [np.conj(self._eg), self._gg]], dtype=complex)

    @property
    def trace(self) -> float:
        return self._ee + self._gg

    @property
    def purity(self) -> float:
        r""" :math:`\mathrm{tr}\,\rho^2`, equal to 1 for pure states. """
        return self._ee ** 2 + self._gg ** 2 + 2. * abs(self._eg) ** 2

    @property
    def determinant(self) -> float:
        """ Product of the eigenvalues, non-negative for physical states. """
        return self._ee * self._gg - abs(self._eg) ** 2

    def is_physical(self, atol=1e-12) -> bool:
        return abs(self.trace - 1.) <= atol and self._ee >= -atol and self._gg >= -atol \
               and self.determinant >= -atol


class EigenDecomp(Model):
    r""" Spectral decomposition :math:`\rho = \lambda_+ P_+ + \lambda_- P_-` of the atom state.

    The eigenvectors are

    .. math::

        |\phi_+\rangle = \sin(\theta_\tau/2)|+\rangle + \cos(\theta_\tau/2)e^{i\Omega\tau}|-\rangle, \qquad
        |\phi_-\rangle = \cos(\theta_\tau/2)|+\rangle - \sin(\theta_\tau/2)e^{i\Omega\tau}|-\rangle.

    Parameters
    ----------
    lambda_plus, lambda_minus : float
        eigenvalues :math:`(1 \pm \eta)/2`
    theta_tau : float
        mixing angle in [0, pi]
    eta : float
        length of the Bloch vector
    rho3 : float
        population inversion :math:`\rho_{ee} - \rho_{gg}`
    precession : float, optional, default=0
        free precession angle :math:`\Omega\tau` carried by the ground state component of the eigenvectors
    degenerate : bool, optional, default=False
        whether the state is maximally mixed; theta_tau then holds the value by continuity from earlier times
    """

    def __init__(self, lambda_plus, lambda_minus, theta_tau, eta, rho3, precession=0., degenerate=False):
        self.lambda_plus = float(lambda_plus)
        self.lambda_minus = float(lambda_minus)
        self.theta_tau = float(theta_tau)
        self.eta = float(eta)
        self.rho3 = float(rho3)
        self.precession = float(precession)
        self.degenerate = bool(degenerate)

    @property
    def vector_plus(self) -> np.ndarray:
        half = .5 * self.theta_tau
        return np.array([np.sin(half), np.cos(half) * np.exp(1j * self.precession)])

    @property
    def vector_minus(self) -> np.ndarray:
        half = .5 * self.theta_tau
        return np.array([np.cos(half), -np.sin(half) * np.exp(1j * self.precession)])

    def reconstruct(self) -> np.ndarray:
        """ The density matrix assembled from eigenvalues and projectors. """
        vp, vm = self.vector_plus, self.vector_minus
        return self.lambda_plus * np.outer(vp, vp.conj()) + self.lambda_minus * np.outer(vm, vm.conj())


class Trajectory(Model):
    r""" Atom states on a grid of the phase variable :math:`\varphi = \omega_0\tau`.

    Parameters
    ----------
    phis : (n,) ndarray
        strictly increasing, starting at 0
    matrices : (n, 2, 2) ndarray of complex
        the density matrices

    Both arrays are stored read-only.
    """

    def __init__(self, phis, matrices):
        phis = ensure_ndarray(phis, ndim=1, dtype=np.float64).copy()
        matrices = ensure_ndarray(matrices, ndim=3, dtype=np.complex128).copy()
        if matrices.shape != (len(phis), 2, 2):
            raise ValueError(f'Expected {len(phis)} matrices of shape (2, 2), but got an array of shape '
                             f'{matrices.shape}.')
        if len(phis) == 0 or phis[0] != 0:
            raise ValueError('A trajectory has to start at phi = 0.')
        if np.any(np.diff(phis) <= 0):
            raise ValueError('The phi grid of a trajectory has to be strictly increasing.')
        phis.flags.writeable = False
        matrices.flags.writeable = False
        self._phis = phis
        self._matrices = matrices

    @property
    def phis(self) -> np.ndarray:
        return self._phis

    @property
    def matrices(self) -> np.ndarray:
        return self._matrices

    @property
    def ee(self) -> np.ndarray:
        return self._matrices[:, 0, 0].real

    @property
    def eg(self) -> np.ndarray:
        return self._matrices[:, 0, 1]

    @property
    def gg(self) -> np.ndarray:
        return self._matrices[:, 1, 1].real

    @property
    def purity(self) -> np.ndarray:
        return self.ee ** 2 + self.gg ** 2 + 2. * np.abs(self.eg) ** 2

    @property
    def trace(self) -> np.ndarray:
        return self.ee + self.gg

    @property
    def phi_end(self) -> float:
        return float(self._phis[-1])

    def __len__(self):
        return len(self._phis)

    def __getitem__(self, item):
        if not isinstance(item, numbers.Integral):
            raise TypeError(f'Trajectories are indexed by integers, got {type(item)}.')
        return float(self._phis[item]), DensityMatrix2.from_matrix(self._matrices[item])

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def table(self) -> np.ndarray:
        """ The trajectory as (n, 6) array with columns :data:`TRAJECTORY_COLUMNS`. """
        eg = self.eg
        return np.column_stack([self._phis, self.ee, eg.real, eg.imag, self.gg, self.purity])
