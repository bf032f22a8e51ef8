"""Exact series and linear-algebra checks for loop space decompositions."""
from .series import TruncatedSeries, geometric_inverse, mul, shift
from .hilton_milnor import SpaceDescriptor, hm_index, verify_hm

__all__ = ["TruncatedSeries", "geometric_inverse", "mul", "shift", "SpaceDescriptor", "hm_index", "verify_hm"]
__version__ = "0.1.0"
