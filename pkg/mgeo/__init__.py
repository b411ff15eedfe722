"""
mgeo
mgeo: Birkhoff-James orthogonality and the geometry of finite-dimensional real normed spaces
"""

# Add imports here
from .main import run
from .spaces import space, builtin_space, eval_norm, sphere_point_2d, validate_norm, validate_gauge_convexity
from .orthogonality import directional_min, is_birkhoff, is_strongly_birkhoff, classify, orthogonal_companion_2d
from .calculations import calc

from ._version import __version__
