"""Zero-divisor and comaximal graphs of finite function rings.

A finite discrete space ``X = {0..n-1}`` and an alphabet ``{0..a-1}`` give
the ring of functions ``X -> Z/aZ``.  Its nonzero non-units carry two
graphs: the zero-divisor graph (disjoint cozero sets) and the comaximal
graph (disjoint zero sets).  The package builds both, computes graph
invariants by brute force, evaluates closed-form predictions from zero sets
alone, and compares the two.
"""

from .cardinal import ALEPH0, CONTINUUM, TWO_TO_C, Cardinal, finite, noniso_certificate, power, verdict
from .errors import (
    AmbiguityError,
    InputError,
    ResourceError,
    UnsupportedCardinalError,
    UnsupportedDomainError,
    UnsupportedModeError,
    ZDGraphError,
)
from .graph import (
    ACYCLIC,
    NO_CYCLE,
    UNBOUNDED,
    Marker,
    SimpleGraph,
    diameter_radius,
    distance,
    distance_matrix,
    eccentricities,
    eccentricity,
    girth,
    is_complemented,
    metrics_report,
    smallest_cycle_through_pair,
    to_dot,
    triangulation_predicates,
)
from .isomorphism import degree_multiset, find_isomorphism, is_isomorphism
from .quotient import build_quotient, canonical_phi, lift_isomorphism
from .ring import GraphKind, ModelConfig, RingElement, build_graph, cozero_set, zero_set
from .verification import VerificationReport, iso_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "ALEPH0",
    "AmbiguityError",
    "CONTINUUM",
    "Cardinal",
    "GraphKind",
    "InputError",
    "Marker",
    "ModelConfig",
    "NO_CYCLE",
    "ResourceError",
    "RingElement",
    "SimpleGraph",
    "TWO_TO_C",
    "UNBOUNDED",
    "UnsupportedCardinalError",
    "UnsupportedDomainError",
    "UnsupportedModeError",
    "VerificationReport",
    "ZDGraphError",
    "build_graph",
    "build_quotient",
    "canonical_phi",
    "cozero_set",
    "degree_multiset",
    "diameter_radius",
    "distance",
    "distance_matrix",
    "eccentricities",
    "eccentricity",
    "find_isomorphism",
    "finite",
    "girth",
    "is_complemented",
    "is_isomorphism",
    "iso_report",
    "lift_isomorphism",
    "metrics_report",
    "noniso_certificate",
    "power",
    "run_suite",
    "smallest_cycle_through_pair",
    "to_dot",
    "triangulation_predicates",
    "verdict",
    "zero_set",
]
