"""Rank-k graphs: factorization calculus, periodicity, ideals, simplicity.

A graph is built from a colored skeleton and a table of commuting squares
(KGraph.build validates everything or refuses).  On top of the path
calculus sit the exact local periodicity decision, the vertex-set ideal
lattice, and bounded-scan analyses with re-validating certificates.
"""

from .analysis import (
    ZERO,
    AnalysisReport,
    GaugeInvarianceReport,
    RepElement,
    SimplicityVerdict,
    all_ideals_gauge_invariant,
    analyze,
    annihilates,
    is_simple,
    rep_apply,
    rep_apply_adjoint,
    sample_family,
    verify_annihilation,
)
from .degrees import Degree, add, join, leq, meet, ones, positive_part, subtract, unit, zero
from .documents import (
    canonical_json,
    dump_graph_document,
    graph_from_json,
    graph_to_json,
    load_graph_document,
    parse_graph_document,
)
from .errors import (
    CompositionError,
    ContractViolationError,
    DegreeError,
    DocumentError,
    InconclusiveError,
    KGraphError,
    LimitExceededError,
    RankMismatchError,
    ValidationError,
)
from .factorization import (
    KGraph,
    Path,
    SquareTable,
    all_paths_up_to,
    compose,
    degrees_up_to,
    extend_by_edge,
    factor,
    paths_from,
    paths_into,
    segment,
    validate_cubes,
    validate_squares,
)
from .fixtures import FIXTURE_NAMES, fixture, fixture_parts
from .ideals import (
    Cofinal,
    NotCofinal,
    cofinality_oracle,
    core_dimensions,
    enumerate_sat_her,
    is_cofinal,
    is_hereditary,
    is_saturated,
    quotient,
    sat_her_closure,
)
from .infinite import (
    EventuallyPeriodicPath,
    ep_compose,
    ep_equal,
    ep_samples,
    ep_samples_unique,
    ep_segment,
    ep_shift,
)
from .periodicity import (
    Aperiodic,
    AperiodicityWitness,
    AperiodicReport,
    Periodic,
    PeriodicityTuple,
    PeriodicReport,
    aperiodic_prefix,
    condition_b_oracle,
    default_bound,
    local_periodicity_at,
    periodicity_tuple,
    scan_aperiodicity,
)
from .skeleton import Edge, Skeleton, ValidationReport

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Aperiodic",
    "AperiodicReport",
    "AperiodicityWitness",
    "Cofinal",
    "CompositionError",
    "ContractViolationError",
    "Degree",
    "DegreeError",
    "DocumentError",
    "Edge",
    "EventuallyPeriodicPath",
    "FIXTURE_NAMES",
    "GaugeInvarianceReport",
    "InconclusiveError",
    "KGraph",
    "KGraphError",
    "LimitExceededError",
    "NotCofinal",
    "Path",
    "Periodic",
    "PeriodicReport",
    "PeriodicityTuple",
    "RankMismatchError",
    "RepElement",
    "SimplicityVerdict",
    "Skeleton",
    "SquareTable",
    "ValidationError",
    "ValidationReport",
    "ZERO",
    "add",
    "all_ideals_gauge_invariant",
    "all_paths_up_to",
    "analyze",
    "annihilates",
    "aperiodic_prefix",
    "canonical_json",
    "cofinality_oracle",
    "compose",
    "condition_b_oracle",
    "core_dimensions",
    "default_bound",
    "degrees_up_to",
    "dump_graph_document",
    "enumerate_sat_her",
    "ep_compose",
    "ep_equal",
    "ep_samples",
    "ep_samples_unique",
    "ep_segment",
    "ep_shift",
    "extend_by_edge",
    "factor",
    "fixture",
    "fixture_parts",
    "graph_from_json",
    "graph_to_json",
    "is_cofinal",
    "is_hereditary",
    "is_saturated",
    "is_simple",
    "join",
    "leq",
    "load_graph_document",
    "local_periodicity_at",
    "meet",
    "ones",
    "parse_graph_document",
    "paths_from",
    "paths_into",
    "periodicity_tuple",
    "positive_part",
    "quotient",
    "rep_apply",
    "rep_apply_adjoint",
    "sample_family",
    "sat_her_closure",
    "scan_aperiodicity",
    "segment",
    "subtract",
    "unit",
    "validate_cubes",
    "validate_squares",
    "verify_annihilation",
    "zero",
]
