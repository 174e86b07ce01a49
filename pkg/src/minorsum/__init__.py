"""Exact inertia, rank and definiteness of Hermitian matrices from
block-partition principal minor sums, with independent cross-checking
oracles and a classifier for 3x3 minor-sum positivity systems."""

from .errors import (
    InadmissiblePartitionError,
    InternalCheckError,
    MatrixParseError,
    MinorSumError,
    NotHermitianError,
    ScalarParseError,
    SingularLeadingBlockError,
    SizeLimitError,
    ZeroInteriorSigmaError,
)
from .scalars import GaussianRational, gaussian, parse_scalar, format_scalar
from .matrices import BlockPartition, HermitianMatrix, load_matrix, parse_matrix
from .minors import (
    DeltaSequence,
    SigmaSequence,
    delta_sequence,
    sigma_direct,
    sigma_index_sets,
    sigma_schur,
)
from .inertia import (
    CharPoly,
    Definiteness,
    Inertia,
    JacobiForm,
    admissible,
    char_poly_from_delta,
    classify_definiteness,
    inertia_from_sigma,
    jacobi_form,
    rank_from_sigma,
)
from .oracle import (
    DiagonalCongruenceResult,
    descartes_positive_roots_bound,
    faddeev_char_poly,
    lagrange_inertia,
    psd_all_minors,
)
from .criteria3 import (
    System3,
    Verdict,
    all_systems,
    canonicalize,
    catalog,
    classify_all,
    classify_system,
    evaluate,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "MinorSumError",
    "ScalarParseError",
    "MatrixParseError",
    "NotHermitianError",
    "SingularLeadingBlockError",
    "InadmissiblePartitionError",
    "ZeroInteriorSigmaError",
    "SizeLimitError",
    "InternalCheckError",
    "GaussianRational",
    "gaussian",
    "parse_scalar",
    "format_scalar",
    "HermitianMatrix",
    "BlockPartition",
    "parse_matrix",
    "load_matrix",
    "DeltaSequence",
    "SigmaSequence",
    "sigma_index_sets",
    "delta_sequence",
    "sigma_direct",
    "sigma_schur",
    "Inertia",
    "Definiteness",
    "JacobiForm",
    "CharPoly",
    "admissible",
    "inertia_from_sigma",
    "rank_from_sigma",
    "classify_definiteness",
    "jacobi_form",
    "char_poly_from_delta",
    "DiagonalCongruenceResult",
    "lagrange_inertia",
    "faddeev_char_poly",
    "psd_all_minors",
    "descartes_positive_roots_bound",
    "System3",
    "Verdict",
    "all_systems",
    "evaluate",
    "canonicalize",
    "catalog",
    "classify_system",
    "classify_all",
    "verify_witness",
]
