"""qrr: exact and arbitrary-precision q-series computations with an
identity-verification harness.

The numeric layer runs on mpmath at a context-controlled precision; the
exact layer is a truncated power-series ring over the rationals plus exact
polynomial families; the harness (``qrr.harness``, CLI ``qrr``) re-verifies
every registered identity by evaluating both sides independently.
"""

from .context import QContext, powq, scaled_deviation, to_mp
from .errors import (AnnulusError, ConfigError, DomainError, EmptyDomainError,
                     ExponentError, NonConvergenceError, NotUnitError,
                     PoleError, QrrError, RatioTestError, SeriesMismatchError,
                     SingularDeltaError, SizeError, UnknownIdentityError,
                     UnsupportedModeError, ValuationError)
from .exactpoly import BivariatePoly, EisensteinRational, QPoly
from .formal import (FormalSeries, fs_finite_pochhammer, fs_from_qpower,
                     fs_pochhammer_infinite)
from .pochhammer import (QPow, inv_pochhammer, pochhammer_finite,
                         pochhammer_infinite, pochhammer_ratio, q_binomial)
from .summation import SumOutcome, sum_bilateral, sum_series

__all__ = [
    "QContext", "powq", "scaled_deviation", "to_mp",
    "QPow", "pochhammer_finite", "pochhammer_infinite", "inv_pochhammer",
    "pochhammer_ratio", "q_binomial",
    "SumOutcome", "sum_series", "sum_bilateral",
    "FormalSeries", "fs_from_qpower", "fs_pochhammer_infinite",
    "fs_finite_pochhammer",
    "QPoly", "BivariatePoly", "EisensteinRational",
    "QrrError", "PoleError", "NonConvergenceError", "RatioTestError",
    "DomainError", "AnnulusError", "SeriesMismatchError", "NotUnitError",
    "ExponentError", "ValuationError", "SingularDeltaError", "SizeError",
    "UnknownIdentityError", "UnsupportedModeError", "ConfigError",
    "EmptyDomainError",
]

__version__ = "0.1.0"
