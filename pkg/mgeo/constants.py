"""
Numerical constants shared across mgeo.

Tolerances are relative to the norm of the reference vector unless stated otherwise.
"""

import numpy as np

# Default value tolerance for orthogonality decisions
TOL = 1e-9

# Sublevel-set tolerance used to measure flat minimizer intervals
FLAT_TOL = 1e-9

# The core interval is measured at FLAT_TOL*CORE_TOL_RATIO
CORE_TOL_RATIO = 1e-3

# A third sublevel interval is measured at FLAT_TOL*WIDE_TOL_RATIO
WIDE_TOL_RATIO = 1e3

# A minimizer is isolated when the zero-tolerance extrapolation of the sublevel intervals is narrower than this
# fraction of the core interval
ISOLATION_RATIO = 0.6

# Width below which a core interval is a point regardless of the ratio test
ARG_TOL = 1e-6

# Absolute argument tolerance of golden-section shrinkage (normalized units)
SEARCH_XTOL = 1e-12

# Absolute argument tolerance of the bisection for sublevel-set boundaries (normalized units)
SUBLEVEL_XTOL = 1e-15

# Step of the one-sided difference quotients in the companion search
COMPANION_STEP = 1e-6

# Companion arcs narrower than this (radians) belong to smooth sphere points
SMOOTH_ARC_WIDTH = 1e-2

# Tolerance of the B-orthogonality precondition of the bound minimizers
PRECONDITION_TOL = 1e-7

# Slack allowed in the envelope inequalities checked at every probe
ENVELOPE_TOL = 1e-9

# Slack of the convexity check on the final golden-section bracket
CONVEXITY_SLACK = 1e-12

# Tolerance on unit length of basis vectors and survey inputs
UNIT_TOL = 1e-9

GAUGE_TABLE_SIZE = 4096
GAUGE_CHAIN_TOL = 1e-9
GAUGE_ANGLE_TOL = 1e-12

SURVEY_GRID = 720
SWEEP_ANGLES = 10000
CONJUGATE_GRID = 360
SVG_SAMPLES = 2048
SVG_VIEW = 1.6

# Dedupe distance for diameter pairs (radians, modulo pi)
DIAMETER_MERGE = 1e-4

TWO_PI = 2.0 * np.pi

REPORT_SCHEMA = "mgeo-report/1"

# Default evaluation budget of the coefficient and coefficient-box optimizers
OPTIMIZER_BUDGET = 20000

# Smallest accepted singular value of a basis matrix and unit tolerance of its rows
BASIS_COND_TOL = 1e-10
BASIS_UNIT_TOL = 1e-10
