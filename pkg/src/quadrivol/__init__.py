"""quadrivol: exact-arithmetic toolkit for projective involutions and the
base/harmonic decomposition of quadric systems through classical varieties.
"""

from .forms import (FormSpace, Monomial, MultiPoly, VarBlocks, apply_linear,
                    coeff_vector, monomial_basis, poly_from_coeff_vector,
                    poly_from_string, proportionality_scalar, substitute)
from .gallery import (CaseResult, ScrollInvolutionSpec, ci_case,
                      default_manifest, genus4_case, invariant_ci_curve,
                      quintic_case, rnc_case, run_gallery, scroll_case,
                      trigonal_case, veronese_case)
from .geom import (CIVariety, CanonicalModel, ParamVariety,
                   canonical_embedding_variety, canonical_ideal_piece,
                   canonical_model_quintic, canonical_model_trigonal,
                   ci_ideal_piece, ideal_piece, rational_normal_curve,
                   scroll, veronese)
from .invol import (DecompReport, Involution, QuadricClass,
                    check_param_invariance, classify_quadric,
                    decompose_system, from_base_spaces, from_matrix,
                    induced_on_forms)
from .joinf import (JoinReport, JoinVariety, join_variety,
                    slice_to_base_space, verify_base_count_identity)
from .qfield import (RatMatrix, Rational, Subspace, intersect, kernel, rank,
                     rat, rref, subspace_sum)

__version__ = "0.1.0"
