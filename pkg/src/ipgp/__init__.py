"""Exact independence polynomials of generalized Petersen graphs GP(n, k)."""

__version__ = "0.1.0"

from .graph import GPParams, Graph, ParamError, build_gp, validate_params  # noqa: E402
from .poly import IntPoly, PolyMatrix, mat_mul, mat_pow, mat_pow_trace, poly_add, poly_mul  # noqa: E402
from .transfer import (  # noqa: E402
    TransferMatrix, TransferState, build_transfer_matrix, enumerate_states,
    gp_polynomial, independence_polynomial, transition_allowed,
)
from .oracle import Census, census, census_to_poly, deletion_polynomial  # noqa: E402
from .roots import (  # noqa: E402
    RootFindingError, RootReport, SturmChain, classify_parity_instance,
    count_real_roots, find_roots,
)
from .analysis import (  # noqa: E402
    ConjectureRow, SequenceDiagnostics, diagnose_sequence, root_geometry, sweep_conjecture,
)
