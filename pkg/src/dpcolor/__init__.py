"""DP-coloring (correspondence coloring) of planar graphs of diameter two.

The top level re-exports the pieces most scripts need::

    import dpcolor as dp
    g = dp.k5_minus_edge()
    m = dp.random_assignment(g, 4, seed=1)
    coloring, trace = dp.color_mp2(g, m)
"""

__version__ = "0.1.0"

from .cover import (CoverGraph, MatchingAssignment, build_cover, identity_assignment,
                    random_assignment, residual_list, validate_assignment)
from .errors import DPColorError, InternalConsistencyError, OutsideCatalog, Refusal
from .graph import (Graph, build_graph, complete_graph, cycle_graph, degree_stats,
                    diameter, is_maximal_planar, is_mp2, is_planar, k5_minus_edge,
                    octahedron, parse_edge_list)
from .mp2 import catalog, color_mp2, identify_catalog
from .pipeline import color_diam2, triangulate_diam2
from .solver import dp_chromatic_number_exact, dp_colorable_for_all, solve_exact, verify_coloring
from .transform import (color_path_ends, exploit_non_property_P, has_property_P,
                        straighten_tree)
