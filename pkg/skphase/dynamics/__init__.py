r"""
.. currentmodule: skphase.dynamics

.. autosummary::
    :toctree: generated/

    DensityMatrix2
    EigenDecomp
    Trajectory
    rho_analytic
    eigen_decompose
    trajectory_analytic
    lindblad_rhs
    evolve_numeric
    LindbladIntegrator
"""

from .state import DensityMatrix2, EigenDecomp, Trajectory, TRAJECTORY_COLUMNS
from .analytic import rho_analytic, eigen_decompose, trajectory_analytic
from .lindblad import lindblad_rhs, evolve_numeric, LindbladIntegrator
