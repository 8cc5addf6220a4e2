"""Generalized moments of orthogonal polynomials on the unit circle.

The package computes the same quantities along independent routes --
direct inner products, three weighted lattice-path models, transfer- and
factored-matrix walks, family closed forms, and basis-expansion
coefficients -- so every result can be cross-checked against another
implementation of itself.
"""

__version__ = "0.1.0"

from .algebra import (ExactScalar, GaussianRational, LaurentPoly, NUMERIC,
                      SYMBOLIC, alpha, alpha_bar, conjugate, gauss,
                      render_scalar, t_root, values_close)
from .core import (VerblunskySequence, functional_eval, inner_product, kappa,
                   moment_oracle, moments_from_phis, phi, reverse)
from .errors import (EnumerationCapExceeded, ExactDivisionError,
                     PositivityViolation, UnsupportedFamily, ZeroVerblunsky)
from .families import (FAMILY_PARAMS, FamilySpec, closed_moment_nm,
                       closed_moment_nrs, geronimus_gf_moment, nrs_from_nm,
                       q_binomial, rising_factorial, verblunsky_of)
from .linearization import (expand_in_phi_basis, expand_in_phistar_basis,
                            phi_to_star_coeff, star_basis_change,
                            star_overlap_matrix, star_to_phi_coeff,
                            star_to_phi_coeff_negative, star_to_star_coeff)
from .matrices import (ScalarMatrix, build_U, cmv_walk_entry,
                       det_identity_check, toeplitz_det, u_power_entry)
from .paths import (LatticePath, enumerate_paths, moment_gmotzkin,
                    moment_lukasiewicz, moment_negative, moment_schroder,
                    path_weight, positivity_certificate)
