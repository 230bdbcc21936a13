r"""
.. currentmodule: skphase.phase

.. autosummary::
    :toctree: generated/

    PhaseResult
    SweepRow
    SweepModel
    gp_general
    gp_integral
    gp_closed_form
    gp_first_order
    optimal_theta
    envelope
    nonradiative_ratio
    hydrogenic_gamma_ratio
    linear_phase_difference
    environment_difference
    phase_difference
    sweep_z
    PhaseDifferenceSweep
"""

from .result import PhaseResult, SweepRow, SweepModel
from .routes import gp_general, gp_integral, gp_closed_form, gp_first_order, geometric_part, environment_difference
from .estimates import envelope, optimal_theta, nonradiative_ratio, hydrogenic_gamma_ratio, linear_phase_difference
from .sweep import environment_phase, phase_difference, sweep_z, PhaseDifferenceSweep
