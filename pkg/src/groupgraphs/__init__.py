"""Power, enhanced power and commuting graphs of cyclic, dihedral and dicyclic groups."""

from .graphs import (
    LabeledGraph,
    Structure,
    StructureError,
    commuting_graph,
    enhanced_power_graph,
    evaluate,
    power_graph,
    structure_expr_for,
)
from .groups import (
    Family,
    FiniteGroup,
    GroupElement,
    cyclic,
    dicyclic,
    dihedral,
    generalized_quaternion,
    make_group,
    parse_group,
)
from .iso import IsoOutcome, check_witness, explicit_paper_map, find_isomorphism, fingerprint

__all__ = [
    "Family", "FiniteGroup", "GroupElement", "LabeledGraph", "Structure", "StructureError",
    "IsoOutcome", "check_witness", "commuting_graph", "cyclic", "dicyclic", "dihedral",
    "enhanced_power_graph", "evaluate", "explicit_paper_map", "find_isomorphism",
    "fingerprint", "generalized_quaternion", "make_group", "parse_group", "power_graph",
    "structure_expr_for",
]
