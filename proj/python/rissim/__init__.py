"""Phase synthesis, quantization analysis, and pattern simulation for
PIN-diode reconfigurable surfaces."""

from rissim._core import *  # noqa: F401,F403
from rissim._core import __version__  # noqa: F401
