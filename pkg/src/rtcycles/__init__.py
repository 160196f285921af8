"""Monochromatic cycles in 2-edge-colored dense graphs.

Exact cycle-spectrum engine on bitset graphs, extremal colorings,
exhaustive coloring sweeps and classical-theorem oracles.
"""

from ._backend import BACKEND
from .constructions import (
    ColoredInstance,
    four_class_family,
    four_class_members,
    pentagon_blowup,
    tight_example,
)
from .cycles import (
    BudgetExceeded,
    CycleSpectrum,
    color_coding_has_cycle,
    extreme_cycles,
    find_cycle_at_least,
    find_cycle_of_length,
    has_cycle_of_length,
    has_path_of_order,
    longest_cycle,
    spectrum,
)
from .graphcore import (
    EdgeColor,
    FormatError,
    Graph,
    GraphError,
    TwoColoring,
    decode_graph6,
    emit_coloring,
    encode_graph6,
    is_bipartite,
    parse_coloring,
)
from .oracles import check_bollobas, check_bondy, check_erdos_gallai, sample_haggkvist
from .search import (
    KRange,
    SearchReport,
    Verdict,
    avoidance_search,
    count_odd_free_colorings,
    search_coloring_avoiding,
    verify_conjecture1,
    verify_conjecture2,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "ColoredInstance",
    "CycleSpectrum",
    "EdgeColor",
    "FormatError",
    "Graph",
    "GraphError",
    "KRange",
    "SearchReport",
    "TwoColoring",
    "Verdict",
    "avoidance_search",
    "check_bollobas",
    "check_bondy",
    "check_erdos_gallai",
    "color_coding_has_cycle",
    "count_odd_free_colorings",
    "decode_graph6",
    "emit_coloring",
    "encode_graph6",
    "extreme_cycles",
    "find_cycle_at_least",
    "find_cycle_of_length",
    "four_class_family",
    "four_class_members",
    "has_cycle_of_length",
    "has_path_of_order",
    "is_bipartite",
    "longest_cycle",
    "parse_coloring",
    "pentagon_blowup",
    "sample_haggkvist",
    "search_coloring_avoiding",
    "spectrum",
    "tight_example",
    "verify_conjecture1",
    "verify_conjecture2",
]
