"""Orders, scores and dominance functions on hesitant fuzzy elements."""

from .decision import EvaluationConfig, PreferenceMatrix, RankingReport, evaluate, preference_matrix
from .dominance import DominanceKind, KernelMatrix, dominance, kernel_matrix, kernel_r, kernel_s
from .errors import (
    ArityError,
    ConfigError,
    EmptyHFE,
    HesitantError,
    OracleBudgetError,
    ParseError,
    RangeError,
    SampleError,
    WitnessError,
)
from .grades import (
    EMPTY,
    THFE,
    IntervalUnionHFE,
    Piece,
    complement,
    grade,
    normalize,
    set_difference,
    set_intersection,
    set_union,
    strictly_below,
)
from .lattice import join0, meet0
from .orders import (
    OrderKind,
    compare,
    leq,
    leq_left,
    leq_list,
    leq_opt,
    leq_pes,
    leq_prod,
    leq_right,
    leq_symmetric,
    leq_symmetric_via_partition,
)
from .scores import ScoreKind, score

__version__ = "0.1.0"
