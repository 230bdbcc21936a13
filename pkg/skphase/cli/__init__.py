r"""
.. currentmodule: skphase.cli

.. autosummary::
    :toctree: generated/

    RunConfig
    build_config
    read_config_file
    run_checks
"""

from .config import RunConfig, FIELDS, METHODS, build_config, read_config_file, parse_value
from .verify import CheckResult, CHECKS, run_checks
