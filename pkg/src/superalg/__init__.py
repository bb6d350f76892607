"""Exact verification engine for a catalog of graded algebra families."""

from .core import (Fingerprint, GradedSubspace, GradedVector, Residual,
                   SuperAlgebra, change_basis, char_sequence, check_leibniz,
                   check_lie, derived_series, fingerprint, is_nilpotent,
                   is_solvable, lower_central_series, make_superalgebra,
                   nilindex, product, right_annihilator, right_mul_matrix,
                   sdf_dump, sdf_dumps, sdf_load, sdf_loads, subspace_product)
from .errors import (DegenerateSamplingError, InputError,
                     InternalInconsistencyError, NotNilpotentError,
                     SuperalgError, UnsupportedShapeError)
from .exactmath import (Polynomial, RatMatrix, format_rational,
                        nilpotent_jordan_type, parse_coefficient,
                        parse_rational, poly_eval, rref_rank_kernel)
from .families import (CORRECTED, FAMILY_IDS, VERBATIM, ErrataEntry,
                       FamilySpec, build, build_family, errata_for,
                       errata_ledger, family_info, list_families,
                       nilradical_spec, parameter_names)

__version__ = "1.0.0"
