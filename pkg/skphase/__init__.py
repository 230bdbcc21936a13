__version__ = '0.1.0'

from . import numeric
from . import spectral
from . import dissipator
from . import dynamics
from . import phase
