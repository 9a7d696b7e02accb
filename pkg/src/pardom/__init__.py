"""pardom: exact and heuristic solvers for partial domination in graphs.

A set S p-dominates a graph when its closed neighborhood reaches at least
a proportion p of the vertices.  The package computes the partial
domination number gamma_p, the classical domination number gamma, and the
maximum minimal variant Gamma_p; evaluates the known closed forms for
paths, cycles, complete multipartite graphs, grids and tori with
constructive witnesses; and audits the standard inequalities relating
these quantities on supplied or sampled graphs.
"""

from .audit import (
    AuditReport,
    CheckRecord,
    SamplingError,
    SplitMix64,
    audit_suite,
    check_big_gamma,
    check_ceiling_bound,
    check_half_bound,
    check_monotonicity,
    check_nordhaus_gaddum,
    nordhaus_gaddum_rhs,
    sample_connected_coconnected,
)
from .formulas import (
    FormulaConflict,
    FormulaResult,
    gamma_grid_goncalves,
    gamma_half_cycle,
    gamma_half_formula,
    gamma_half_grid,
    gamma_half_multipartite,
    gamma_half_path,
    gamma_half_torus,
    grid_ratio_report,
)
from .graph import (
    FAMILIES,
    FamilySpec,
    Graph,
    VertexSet,
    closed_neighborhood,
    complement,
    complete_multipartite_graph,
    cycle_graph,
    grid_graph,
    is_connected,
    make_family,
    parse_edge_list,
    parse_family,
    path_graph,
    spider_graph,
    to_edge_list,
    torus_graph,
)
from .solver import (
    BIG_GAMMA_MAX_N,
    ORACLE_MAX_N,
    CapacityError,
    Proportion,
    SolveResult,
    as_proportion,
    big_gamma_p_exact,
    coverage,
    gamma_exact,
    gamma_p_binary_search,
    gamma_p_exact,
    greedy_gamma_p,
    is_minimal_p_dominating,
    is_p_dominating,
    oracle_gamma_p,
    parse_proportion,
    t_dom_decision,
    threshold,
)

__version__ = "0.1.0"
