import numbers

import numpy as np


def ensure_ndarray(arr, shape: tuple = None, ndim: int = None, dtype=None, size=None, allow_None=False) -> [np.ndarray, None]:
    if allow_None and arr is None:
        return None
    if not isinstance(arr, np.ndarray):
        arr = np.asarray(arr, dtype=dtype)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"Shape of provided array was {arr.shape} != {shape}")
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"ndim of provided array was {arr.ndim} != {ndim}")
    if size is not None and np.size(arr) != size:
        raise ValueError(f"size of provided array was {np.size(arr)} != {size}")
    if dtype is not None and arr.dtype != dtype:
        arr = arr.astype(dtype)
    return arr


def to_si(value, unit: str) -> float:
    r""" Magnitude of a physical quantity in SI units.

    Parameters
    ----------
    value : float, str or pint Quantity
        Bare real numbers are taken to be in SI already. Strings such as ``'10 um'`` and
        quantities are converted with the package unit registry.
    unit : str
        the SI unit to convert to, e.g. ``'m'``, ``'s'`` or ``'m**3'``.

    Returns
    -------
    magnitude : float
    """
    if isinstance(value, numbers.Real):
        return float(value)
    from skphase.units import Q_
    return float(Q_(value).to(unit).magnitude)


def wrap_angle(angle):
    """ Maps angles to the principal interval (-pi, pi]. """
    wrapped = np.angle(np.exp(1j * np.asarray(angle)))
    return wrapped if np.ndim(wrapped) else float(wrapped)
