"""Exact decompositions of the Hermitian K-theory of Grassmannians.

The package computes, over an unevaluated base, the formal splittings
of GW, L-theory, Witt and K-theory of Gr(k, n) at both determinant
twists, together with every piece of combinatorics those splittings
rest on: bounded Young diagram counts, Littlewood-Richardson
coefficients, Bott's algorithm for homogeneous bundle cohomology,
pairing parities, and the even-diagram / buffalo-check cross-checks
against the independent literature formulas.
"""

__version__ = "0.1.0"

from .bott import (BottOutcome, FullWeight, bott, bott_chain, bott_sequence,
                   cohomology_of_schur_bundle, dotted_action, ext_dimension,
                   rhom_schur, weyl_dimension)
from .decompose import (FormalDecomposition, SplitCheck, decompose,
                        gw_decompose, k_rank, l_decompose,
                        projective_space_gw, split_fibration_check,
                        w_decompose)
from .evendiagrams import (EvenDiagramClass, beta, boundary_segments,
                           buffalo_total, center_count, classify_even,
                           is_even_diagram, is_k_even, rho_invariant,
                           t_invariant, witt_via_even_diagrams)
from .lr import bar, dual_weight, lr_coefficient, lr_expand, pieri, tensor_decompose
from .pairing import PairingKind, classify_pairing, diagram_parity
from .verify import SUITES, VerifyReport, run_suite
from .young import (Frame, Partition, Permutation, as_partition, complement,
                    count_A, count_R, count_S, enumerate_frame, is_symmetric,
                    straightening_permutation, to_binary_path, transpose)

__all__ = [
    "BottOutcome", "EvenDiagramClass", "FormalDecomposition", "Frame",
    "FullWeight", "PairingKind", "Partition", "Permutation", "SplitCheck",
    "SUITES", "VerifyReport", "as_partition", "bar", "beta",
    "boundary_segments", "bott", "bott_chain", "bott_sequence",
    "buffalo_total", "center_count", "classify_even", "classify_pairing",
    "cohomology_of_schur_bundle", "complement", "count_A", "count_R",
    "count_S", "decompose", "diagram_parity", "dotted_action", "dual_weight",
    "enumerate_frame", "ext_dimension", "gw_decompose", "is_even_diagram",
    "is_k_even", "is_symmetric", "k_rank", "l_decompose", "lr_coefficient",
    "lr_expand", "pieri", "projective_space_gw", "rho_invariant", "rhom_schur",
    "run_suite", "split_fibration_check", "straightening_permutation",
    "t_invariant", "tensor_decompose", "to_binary_path", "transpose",
    "w_decompose", "weyl_dimension", "witt_via_even_diagrams",
]
