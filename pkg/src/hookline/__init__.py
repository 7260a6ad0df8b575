"""Exact combinatorics of 321-avoiding involutions, lattice paths and hook decompositions."""

from .errors import (
    DomainError, HooklineError, NotFibonacci, ParseError, ResourceLimitExceeded, ShapeMismatch,
)
from .harness import VerificationReport, distribution, map_chain, verify
from .partitions import (
    BoxSpec, HookDecomposition, Partition, boundary_path, durfee_side, hook_decomposition,
    parse_partition, partition_from_boundary, partitions_with_hd, psi, psi_inverse,
)
from .paths import (
    LatticePath, classify, dyck_to_s321, enumerate_paths, match_steps, parse_path, peak_set,
    rho, rho_inverse, s321_to_dyck, xi, xi_inverse,
)
from .perm_core import (
    DescentProfile, PermClass, Permutation, avoids, descent_profile, enumerate_class,
    fibonacci_blocks, is_involution, left_to_right_minima, parse_permutation,
)
from .polynomials import QPoly, SubsetPoly, q_binomial
from .tableaux import (
    StandardTableau, involution_transpose, rs_correspondence, rs_inverse, tableau_descent_set,
    transpose,
)

__all__ = [
    "DomainError", "HooklineError", "NotFibonacci", "ParseError", "ResourceLimitExceeded",
    "ShapeMismatch", "VerificationReport", "distribution", "map_chain", "verify", "BoxSpec",
    "HookDecomposition", "Partition", "boundary_path", "durfee_side", "hook_decomposition",
    "parse_partition", "partition_from_boundary", "partitions_with_hd", "psi", "psi_inverse",
    "LatticePath", "classify", "dyck_to_s321", "enumerate_paths", "match_steps", "parse_path",
    "peak_set", "rho", "rho_inverse", "s321_to_dyck", "xi", "xi_inverse", "DescentProfile",
    "PermClass", "Permutation", "avoids", "descent_profile", "enumerate_class",
    "fibonacci_blocks", "is_involution", "left_to_right_minima", "parse_permutation", "QPoly",
    "SubsetPoly", "q_binomial", "StandardTableau", "involution_transpose", "rs_correspondence",
    "rs_inverse", "tableau_descent_set", "transpose",
]

__version__ = "0.1.0"
