"""Exact certification of spectral-radius maximizers among connected
graphs with a fixed edge surplus.

The package decides, for order n and surplus e, which of the two extremal
threshold-graph families attains the maximum spectral radius, using only
exact integer/rational arithmetic for every certified statement, with an
independent floating-point oracle for cross-checks.
"""

from .graphs import (
    DenseGraph,
    EdgeParams,
    StepSequence,
    ThresholdGraph,
    adjacency,
    build_D,
    build_V,
    edge_params,
)
from .compare import classify, omega_value, psi_value
from .certify import Certificate, certify_all, certify_candidate, rho_of_threshold

__all__ = [
    "DenseGraph",
    "EdgeParams",
    "StepSequence",
    "ThresholdGraph",
    "adjacency",
    "build_D",
    "build_V",
    "edge_params",
    "classify",
    "omega_value",
    "psi_value",
    "Certificate",
    "certify_all",
    "certify_candidate",
    "rho_of_threshold",
]

__version__ = "0.1.0"
