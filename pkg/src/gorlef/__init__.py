"""Exact tools for Lefschetz properties of Artinian Gorenstein algebras.

Everything runs over the rationals with fractions.Fraction: Hilbert
function classification, apolarity and catalecticants, higher Hessians,
Lefschetz certificates, point configurations in projective space, and a
constructive route from any admissible Hilbert function to an algebra
with the strong Lefschetz property.
"""

from .errors import (BadSubsetSizeError, DegreeOutOfRangeError,
                     DuplicateParameterError, GorlefError,
                     HessianRankMismatchError, NonSquareError,
                     NoWitnessFoundError, NotOSequenceError,
                     NotPlaneConfigError, NotSIError,
                     PreconditionViolatedError, RealizationMismatchError,
                     RingMismatchError, ShapeMismatchError,
                     TheoremTensionError, ZeroGeneratorError)
from .hvector import (HVector, binomial_expand, hbar, is_O_sequence,
                      is_SI, is_differentiable, macaulay_bound)
from .apolar import (LinearFormR, LinearFormS, Poly, RING_R, RING_S,
                     contract, contract_linear_power, monomials_of_degree,
                     power_of_linear)
from .linalg import Mat, det, nullspace, pivot_columns, pivot_rows, rank
from .gorenstein import (GorensteinAlgebra, SlpCertificate, catalecticant,
                         check_slp, check_wlp, hessian_at, hessian_det,
                         hilbert_function, multiplication_rank)
from .points import (OrderIdeal, PointSet, davis_hint, find_subset_on_curve,
                     gen_collinear, gen_distraction, gen_generic, gen_rnc,
                     gen_two_lines, has_collinear_triple, lex_order_ideal)
from .construct import (ConstructionResult, StructuredGenerator,
                        construct_slp_algebra, hess_coefficient_criterion,
                        hilbert_formula_check, structured_hessian_at,
                        structured_hessian_det)
from .theorems import (BlockPair, ConicReport, FamilyReport, PropReport,
                       TailReport, block_det_identity, make_tail_config,
                       verify_conic_slp, verify_corollary_families,
                       verify_prop_s_minus, verify_rnc_slp,
                       verify_tail_nonvanishing)

__version__ = "0.1.0"

__all__ = [
    "BadSubsetSizeError", "BlockPair", "ConicReport", "ConstructionResult",
    "DegreeOutOfRangeError", "DuplicateParameterError", "FamilyReport",
    "GorensteinAlgebra", "GorlefError", "HVector",
    "HessianRankMismatchError", "LinearFormR", "LinearFormS", "Mat",
    "NonSquareError", "NoWitnessFoundError", "NotOSequenceError",
    "NotPlaneConfigError", "NotSIError", "OrderIdeal", "PointSet", "Poly",
    "PreconditionViolatedError", "PropReport", "RING_R", "RING_S",
    "RealizationMismatchError", "RingMismatchError", "ShapeMismatchError",
    "SlpCertificate", "StructuredGenerator", "TailReport",
    "TheoremTensionError", "ZeroGeneratorError", "binomial_expand",
    "block_det_identity", "catalecticant", "check_slp", "check_wlp",
    "construct_slp_algebra", "contract", "contract_linear_power",
    "davis_hint", "det", "find_subset_on_curve", "gen_collinear",
    "gen_distraction", "gen_generic", "gen_rnc", "gen_two_lines",
    "has_collinear_triple", "hbar", "hess_coefficient_criterion",
    "hessian_at", "hessian_det", "hilbert_formula_check",
    "hilbert_function", "is_O_sequence", "is_SI", "is_differentiable",
    "lex_order_ideal", "macaulay_bound", "make_tail_config",
    "monomials_of_degree", "multiplication_rank", "nullspace",
    "pivot_columns", "pivot_rows", "power_of_linear", "rank",
    "structured_hessian_at", "structured_hessian_det", "verify_conic_slp",
    "verify_corollary_families", "verify_prop_s_minus", "verify_rnc_slp",
    "verify_tail_nonvanishing",
]
