r"""
.. currentmodule: skphase.dissipator

.. autosummary::
    :toctree: generated/

    AtomParams
    Geometry
    DissipatorCoeffs
    build_coeffs
    kossakowski_matrix
    effective_omega
    boundary_factor
"""

from .params import AtomParams, Geometry, POLARIZATIONS, MAX_GAMMA_RATIO
from .coefficients import DissipatorCoeffs, LAMB_SHIFT_POLICIES, boundary_factor, build_coeffs, effective_omega, \
    kossakowski_matrix
