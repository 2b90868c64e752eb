"""Geometric tolerances, stated once and used everywhere.

EPS is the point-coincidence / boundary tolerance; DET_EPS is the
determinant threshold below which two lines count as parallel.
"""

EPS = 1e-9
DET_EPS = 1e-12
