"""Exact negative-base (-beta) numeration for integer and quadratic Pisot bases."""
from .admissibility import AltOrdering, FactorScanner, Order, alt_compare, d_star_r, forbidden_factor_check, is_admissible
from .analysis import (
    Classification,
    HKBounds,
    Op,
    ScanReport,
    classify,
    conjugate_extremes,
    enumerate_z,
    fin_trivial,
    hk_bounds,
    scan_L,
)
from .arithmetic import ZeroIdentity, ZeroVariant, add, add_one_rewrite, mul, sub, zero_word
from .base import Base, Kind, QuadElem, conjugate, eval_word, format_value, parse_base, parse_value, qfloor
from .errors import (
    BudgetExceeded,
    ConstraintViolation,
    KZero,
    MalformedSpec,
    NegBetaError,
    NotClassA,
    NotEventuallyPeriodicWithinBudget,
    NotQuadratic,
    OutOfDomain,
    PatternNotMatched,
    UndecidableDigit,
)
from .expansion import Expansion, Status, canonicalize, expand, fractional_length, range_bracket
from .transform import OrbitState, Truncated, d_expansion, d_lb, left_end, right_end, t_step
from .words import DigitWord, PeriodicWord

__all__ = [name for name in dir() if not name.startswith("_")]
