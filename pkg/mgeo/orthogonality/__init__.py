"""
Orthogonality

Minimization of :math:`\\lambda \\mapsto \\|x + \\lambda y\\|` and the orthogonality relations built on it.
"""

from .minimize import directional_min, golden_section, MinimizationResult
from .relations import (Relation, OrthogonalityVerdict, CompanionArc, is_birkhoff, is_strongly_birkhoff, classify,
                        residual, companion_arc_2d, orthogonal_companion_2d)
