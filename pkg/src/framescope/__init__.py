"""Frame multipliers in C^d: spectra, spectral radii, radius bounds and spectrum localization."""

__version__ = "0.1.0"

from .errors import ConvergenceError, DomainError, ScaleError, ShapeError  # noqa: E402
from .frames import (  # noqa: E402
    FrameBounds,
    FrameSystem,
    analysis_matrix,
    canonical_dual,
    canonical_tight,
    cross_gram,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    standard_basis,
    synthesis_matrix,
)
from .multipliers import (  # noqa: E402
    BoundsLedger,
    Symbol,
    banded_bound,
    bound_prop1,
    bound_thm1,
    bounds_ledger,
    multiplier_matrix,
    reduced_matrix,
    schur_bound,
    spectral_radius_eigen,
    spectral_radius_gelfand,
)
