r"""
.. currentmodule: skphase.spectral

.. autosummary::
    :toctree: generated/

    mod_fx
    mod_fy
    mod_fz
    modulation_values
    ModulationValues
    spectral_density
    correlator_boundary
    correlator_free
    fourier_modulation_oracle
"""

from .modulation import U_SWITCH, mod_fx, mod_fy, mod_fz, modulation_values, ModulationValues
from .density import spectral_density
from .correlators import correlator_boundary, correlator_free, fourier_modulation_oracle
