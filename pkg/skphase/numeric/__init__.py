import numpy as np


class NumericalFailure(ArithmeticError):
    """A numerical kernel could not deliver a result within its contract.

    Parameters
    ----------
    message : str
        description of the failure
    phi : float, optional
        dimensionless time at which the failure was detected, if any
    """

    def __init__(self, message, phi=None):
        super(NumericalFailure, self).__init__(message)
        self.phi = phi


def mdot(*args):
    """Computes a matrix product of multiple ndarrays

    Convenience for the operator sandwiches of the dissipator, ``mdot(s_j, rho, s_i)`` instead of
    ``s_j @ (rho @ s_i)``.

    Parameters
    ----------
    *args : an arbitrarily long list of ndarrays that must be compatible for multiplication,
        i.e. args[i].shape[-1] = args[i+1].shape[-2].
    """
    if len(args) < 1:
        raise ValueError('need at least one argument')
    x = args[0]
    for i, y in enumerate(args[1:]):
        try:
            x = np.matmul(x, y)
        except ValueError as ve:
            raise ValueError(f'argument {i} and {i+1} are not shape compatible:\n{ve}')
    return x


from .eigen import DegeneracyError, eigh2x2, parallel_transport
from .quadrature import integrate
