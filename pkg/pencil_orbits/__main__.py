from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys

from pencil_orbits.census.main import main

if __name__ == '__main__':
    sys.exit(main())
