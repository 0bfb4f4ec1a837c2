from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from os import path

RES_OUT_DIR = path.dirname(path.abspath(__file__))
