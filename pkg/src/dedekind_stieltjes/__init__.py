"""Stieltjes constants of the Dedekind zeta function of Q and quadratic fields.

Two independent routes are provided: a convolution of the Laurent data of
zeta(s) and L(s, chi_D) (precise, with error bounds), and a limit formula over
an exact ideal-count sieve (a few digits, demonstrative).
"""

from .errors import (
    BoundExceeded,
    ComputationError,
    DomainError,
    IndexTooLarge,
    InconsistentInvariants,
    NonFundamentalDiscriminant,
    NotQuadratic,
    OutOfRange,
    PoleAt1,
    PrecisionTooLow,
    ResidueMismatch,
    StieltjesError,
    TooFewCheckpoints,
    ValidationError,
)
from .field import FieldDescriptor, FieldInvariants, Splitting, kronecker, make_field, splitting_type
from .laurent import LaurentCoefficients, euler_kronecker, gamma_q_reference, laurent_coeffs
from .lfunc import (
    HurwitzStieltjesValue,
    LTaylorCoefficients,
    hurwitz_stieltjes,
    l_taylor_coeffs,
    residue_from_invariants,
    zeta_k_real,
)
from .sieve import (
    IdealCountTable,
    build_ideal_counts,
    build_ideal_counts_multiplicative,
    dump_table,
    ideal_count_prefix,
    load_table,
    log_moment_sum,
    log_moment_sums,
)
from .signscan import SignReport, parity_series_check, sign_table
from .stieltjes import LimitEstimate, gamma_limit

__version__ = "0.1.0"
