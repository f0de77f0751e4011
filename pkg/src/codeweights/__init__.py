"""Generalized and extended weight enumerators of linear codes over finite fields."""

from .codes import (FamilyId, LinearCode, WeightVector, code_from_matrix, extend_code,
                    generalized_weight_distribution, subcode_support, support, weight,
                    weight_distribution)
from .enumerators import (EWETable, GWETable, ewe_by_interpolation, ewe_eval, ewe_from_gwe,
                          gwe_compute, gwe_from_ewe)
from .families import (rm1_code, rm1_ewe_formula, rm1_gwe_formula, simplex_code,
                       simplex_ewe_formula, simplex_gwe_formula)
from .gf import FieldElement, FieldSpec, extend_field, find_irreducible, make_field
from .linalg import MatrixGF, SubspaceHandle, enumerate_subspaces, nullspace, rref
from .qcombinatorics import (TPolynomial, falling_product, gaussian_binomial,
                             lagrange_interpolate)

__version__ = "0.1.0"
