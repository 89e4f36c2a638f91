"""Extensive-form games as sets of (player, situation, node, action, successor) quintuples."""

from .analysis import (
    RecallWitness,
    Separation,
    SeparationVerdict,
    UnionResult,
    check_no_absentmindedness,
    check_perfect_recall,
    quintuple_of_successor,
    separation,
    subgame,
    subroots,
    union_chain,
    union_family,
    union_pair,
    weakly_after,
)
from .axioms import (
    BLOCK_AXIOMS,
    AxiomId,
    AxiomReport,
    Violation,
    check_axiom,
    exit_steps,
    is_block,
    is_pentaform,
    pjw_equivalence,
    pwa_equivalence,
    validate,
)
from .errors import (
    AxiomViolationError,
    ChainError,
    CoordinateError,
    InvalidGameError,
    InvalidTreeError,
    NotASubrootError,
    NoUniqueRootError,
    PentaformError,
    PreconditionError,
    SchemaError,
    SeparationError,
    UnknownNodeError,
    UnknownSituationError,
)
from .game import (
    GmCondition,
    GmGame,
    PentaformGame,
    RoundTrip,
    RoundTripReport,
    equality_battery,
    has_information_set_situations,
    information_set_rewrite,
    pentaform_of,
    roundtrip_check,
    standardize,
    validate_gm,
    validate_pentaform_game,
)
from .io import Document, export_dot, load, parse, serialize
from .relation import (
    Quintuple,
    QuintupleSet,
    TupleRelation,
    action_set,
    components,
    decision_nodes,
    end_nodes,
    feasibility,
    info_set,
    node_set,
    nodes,
    predecessor_relation,
    project,
    root,
    situations,
    slice_of,
    slice_partition,
    start_nodes,
    successor_nodes,
)
from .tree import (
    OutTree,
    Precedence,
    RootedTree,
    orient_divergently,
    out_tree_of,
    precedence_pairs,
    precedes,
    runs,
    strictly_precedes,
    underlying_rooted,
    validate_edge_tree,
    weakly_precedes,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomId",
    "AxiomReport",
    "AxiomViolationError",
    "BLOCK_AXIOMS",
    "ChainError",
    "CoordinateError",
    "Document",
    "GmCondition",
    "GmGame",
    "InvalidGameError",
    "InvalidTreeError",
    "NoUniqueRootError",
    "NotASubrootError",
    "OutTree",
    "PentaformError",
    "PentaformGame",
    "Precedence",
    "PreconditionError",
    "Quintuple",
    "QuintupleSet",
    "RecallWitness",
    "RootedTree",
    "RoundTrip",
    "RoundTripReport",
    "SchemaError",
    "Separation",
    "SeparationError",
    "SeparationVerdict",
    "TupleRelation",
    "UnionResult",
    "UnknownNodeError",
    "UnknownSituationError",
    "Violation",
    "action_set",
    "check_axiom",
    "check_no_absentmindedness",
    "check_perfect_recall",
    "components",
    "decision_nodes",
    "end_nodes",
    "equality_battery",
    "exit_steps",
    "export_dot",
    "feasibility",
    "has_information_set_situations",
    "info_set",
    "information_set_rewrite",
    "is_block",
    "is_pentaform",
    "load",
    "node_set",
    "nodes",
    "orient_divergently",
    "out_tree_of",
    "parse",
    "pentaform_of",
    "pjw_equivalence",
    "precedence_pairs",
    "precedes",
    "predecessor_relation",
    "project",
    "pwa_equivalence",
    "quintuple_of_successor",
    "root",
    "roundtrip_check",
    "runs",
    "separation",
    "serialize",
    "situations",
    "slice_of",
    "slice_partition",
    "standardize",
    "start_nodes",
    "strictly_precedes",
    "subgame",
    "subroots",
    "successor_nodes",
    "underlying_rooted",
    "union_chain",
    "union_family",
    "union_pair",
    "validate",
    "validate_edge_tree",
    "validate_gm",
    "validate_pentaform_game",
    "weakly_after",
    "weakly_precedes",
]
