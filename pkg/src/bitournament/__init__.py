"""Score sequences of bitournaments (orientations of complete bipartite graphs)."""
from .characterize import (
    CheckReport,
    FeasiblePair,
    MoonRow,
    Witness,
    avery_check,
    corollary_symmetry,
    feasible,
    landau_check,
    moon_check,
    moon_table,
    trim_check,
)
from .errors import (
    BitournamentError,
    BoundMismatch,
    BudgetExceeded,
    Discrepancy,
    NotEnoughPositives,
    NotFeasible,
    NotRealizable,
    PositionNotPositive,
    SequenceError,
    SumMismatch,
    TrimFailed,
)
from .oracle import (
    CensusEntry,
    candidate_pairs,
    census_csv,
    cross_validate,
    enumerate_bitournaments,
    enumerate_digraphs,
    enumerate_tournaments,
)
from .realize import Bitournament, RealizationLog, realize, scores_of, to_dot
from .seqcore import (
    BoundedSeq,
    TrimStep,
    TrimTrace,
    conjugate,
    int_seq,
    normal_trim,
    normal_trim_positions,
    positive_count,
    replicate_scale,
    trim,
    trim_by_sequence,
)

__version__ = "0.1.0"
