from ._g2oct import *  # noqa
