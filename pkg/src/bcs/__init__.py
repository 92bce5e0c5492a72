"""Exact solvers for the balanced connected subgraph problem on geometric
intersection graphs: polynomial algorithms for interval, circular-arc, and
permutation models, a color-coding FPT search for general graphs, hardness
reduction generators, and brute-force oracles that certify everything at
small scale.
"""

from .graph import (
    BLUE,
    RED,
    BicoloredGraph,
    Solution,
    empty_solution,
    induced_subgraph,
    is_balanced,
    is_connected,
    make_solution,
    validate_solution,
)
from .models import (
    CircularArcModel,
    IntervalModel,
    PermutationModel,
    PointSetModel,
    arcs_cover_circle,
    circular_arc_graph,
    compile_model,
    grid_graph,
    interval_graph,
    parse_model,
    permutation_graph,
    unit_disk_graph,
    unit_square_graph,
)
from .interval import Window, bcs_interval, bcs_window, candidate_window
from .circular import (
    ArcWindow,
    SplicedInstance,
    arc_window,
    bcs_case_a,
    bcs_case_b1,
    bcs_case_b2,
    bcs_circular_arc,
)
from .permutation import OrderedRange, bcs_permutation, bcs_range, ordered_range
from .steiner import (
    SteinerResult,
    select_steiners_interval,
    steiner_exact_oracle,
    steiner_permutation,
)
from .fpt import HashFamily, batch_procedure, build_hash_family, fill_table, k_bcs, max_bcs_fpt
from .oracle import (
    CapacityError,
    OracleBudget,
    bcs_oracle,
    dominating_set_oracle,
    k_bcs_oracle,
    rst_oracle,
)
from .reductions import (
    ReductionOutput,
    reduce_domset_to_outer_string,
    reduce_rst_to_complete_grid,
    reduce_rst_to_unit_disk,
    reduce_rst_to_unit_square,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
