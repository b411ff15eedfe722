"""
Geometry

Strict convexity, the segment and line bounds of B-orthogonal pairs, strongly orthonormal bases and, for planes,
conjugate diameters and Radon curves.
"""

from .convexity import (ConvexityVerdict, ConvexityReport, strict_convexity_probe, modulus_of_convexity,
                        strict_convexity_by_delta_two,
                        flat_segment_orthogonality_construction)
from .bounds import BoundsRecord, BoundsSurvey, segment_min, line_min, bounds_survey
from .basis import (Basis, BasisReport, max_coefficient, uniqueness_probe, strongly_orthonormal_direct,
                    strongly_orthonormal_criterion, basis_report)
from .planar import (Strength, DiameterPair, ConjugateSearch, find_conjugate_diameters, is_radon,
                     exhaustive_pair_scan, generalized_conjugate_check, conjugate_basis_crosscheck)
