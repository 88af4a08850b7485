"""Exact arithmetic for Collatz predecessor sets.

Gap-tuple codecs for runs of the Syracuse map, admissibility and
canonical windows, discrete-log solvers for the unique first gap,
ascending-run generators, and bounded enumeration of predecessor trees,
all in exact integer arithmetic and cross-checked against forward
iteration.
"""

from .caps import DEFAULT_EXP_CAP, capped, exponent_cap, set_exponent_cap
from .collatz import (
    DEFAULT_MAX_STEPS,
    Trajectory,
    h_children,
    j_val,
    syracuse,
    t_step,
    trajectory,
    u_children,
)
from .errors import (
    CapExceeded,
    CutoffReached,
    IndexOutOfRange,
    InvalidP,
    LevelMismatch,
    NotAdmissible,
    NotInGroup,
    OddInput,
    PatternLengthMismatch,
    SourceDivisibleBy3,
    SourceNotOnTrajectory,
    SyracuseError,
    TupleFormatError,
)
from .numtheory import (
    ExpClass,
    Residue,
    dlog2,
    dlog2_scan,
    group_order,
    pow2_mod,
    pow2_mod3,
    ratio_minus,
    ratio_plus,
)
from .solver import (
    Periodic12Result,
    SolveResult,
    TargetPair,
    ascending_all_ones,
    ascending_family,
    periodic_12_check,
    solve_constant_k,
    solve_v1,
    target_families,
)
from .tree import (
    EnumConfig,
    EnumTree,
    TreeNode,
    count_formula,
    enumerate_tree,
    iter_nodes,
    preimage_bfs,
    verify_tree,
)
from .tuples import (
    CanonicalTuple,
    SourcedTuple,
    VTuple,
    canonical_v1,
    canonicalize,
    decode,
    encode,
    format_vtuple,
    gap_modulus,
    is_admissible,
    parse_vtuple,
    shift,
    to_exponents,
)
from .verify import CheckResult, verify_suite

__version__ = "0.1.0"
