"""Generate and compare Internet-like power-law topologies.

Two growth models (fitness Barabasi-Albert and interactive growth) are
measured on rich-club connectivity, triangle counts and giant-component
decay under node attack.
"""

from .generators import (
    FbaParams,
    IgParams,
    ParameterError,
    SeedGraphSpec,
    generate_fba,
    generate_ig,
)
from .graph import BuildStats, Graph, GraphBuilder, GraphError, build_graph, largest_component
from .io import IngestReport, ParseError, parse_edge_list, write_curve_csv, write_edge_list
from .metrics import (
    DegreeCcdf,
    MetricError,
    RichClubCurve,
    TriangleStats,
    degree_ccdf,
    fit_power_law_exponent,
    rank_nodes,
    rich_club_curve,
    triangle_coefficients,
    triangle_summary,
)
from .robustness import AttackCurve, AttackError, AttackStrategy, attack_curve
from .sampling import SumTree, sample_weighted

__version__ = "0.1.0"
