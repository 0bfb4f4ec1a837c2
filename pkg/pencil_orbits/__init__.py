from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.errors import PrecisionError, VerificationError

__version__ = '0.1.0'
