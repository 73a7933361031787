"""Longest run subsequence solver suite.

Exact solvers (exhaustive oracle and subset dynamic programming), a
randomized algebraic detector over GF(2^64)[Z2^r], kernelization and
approximation, plus hardness-construction instance generators (independent
set on cubic graphs, OR-composition) and a benchmark harness.
"""

from .core import (
    EmptyInstance,
    IndexOutOfRange,
    Instance,
    LimitExceeded,
    LrsError,
    NonIncreasingIndices,
    OccIndex,
    ParseError,
    RepeatedRunSymbol,
    Solution,
    build_occ_index,
    format_solution,
    instance_from_tokens,
    instance_to_text,
    parse_instance,
    run_decompose,
    validate_solution,
)
from .gf2 import (
    DimensionMismatch,
    GroupVec,
    VarAssignment,
    draw_assignment,
    ga_add,
    ga_mul_var,
    ga_scale,
    ga_unit,
    ga_zero,
    gf_inv,
    gf_mul,
    gf_pow,
)
from .bench import (
    CSV_COLUMNS,
    SUITES,
    BenchRecord,
    records_to_csv,
    run_suite,
)
from .generators import GenSpec, ParameterError, gen_string
from .mld import (
    TrialReport,
    eval_root_fast,
    eval_root_reference,
    mld_decide,
    mld_solve_for_runs,
    mld_verdict_grid,
    trial_seeds_for,
)
from .reductions import (
    CompositionResult,
    CubicGraph,
    GraphTooLarge,
    HeterogeneousInstances,
    InvalidN,
    InvalidSolution,
    NotCubic,
    NotIndependent,
    OddVertexCount,
    ReductionMap,
    RejectionLimitExceeded,
    canonicalize,
    cross_compose,
    gen_random_cubic,
    graph_to_text,
    is_canonical,
    mis_bruteforce,
    misc_decode,
    misc_encode,
    misc_solution_from_is,
    parse_graph,
    roles_to_text,
)
from .solvers import (
    AlphabetTooLarge,
    InstanceTooLarge,
    Kernel,
    KernelOutcome,
    NoSolutionFound,
    ParameterOutOfRange,
    TrivialYes,
    approx_solve,
    kernelize,
    solve_bruteforce,
    solve_subset_dp,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
