"""Exact HOMFLY-PT / Harer-Zagier engine for braid closures.

Computes HOMFLY-PT polynomials through the R-matrix character expansion,
applies the Harer-Zagier transform, certifies or refutes factorisability,
produces factorised-form decompositions, and evaluates the twist-family
and ADE-quiver closed forms.
"""

from .braid import (BraidError, BraidWord, FamilyIndex, concat, family_braid,
                    full_twist, jm_twist, jm_twist_e, parse_braid, torus_braid)
from .decomp import (Bracket, Decomposition, DecompositionError, decompose,
                     decompose3, expand, hz_type)
from .families import (FamilyPrediction, FamilyReport, QuiverPoly, pretzel_braid,
                       predict_family, quiver_poly, torus_alexander,
                       torus_top_coeff, verify_family, z_en_closed_form)
from .homfly import (HomflyError, HomflyPoly, alexander, homfly, jones,
                     racah_from_jones, unlink_homfly)
from .hz import (ConditionReport, FactorCert, HZError, HZFunction,
                 check_fact_conditions, factorise, hz_char, hz_of_braid,
                 hz_summation_oracle, hz_transform, hz_via_characters, inverse_hz)
from .qring import (APoly, ExtScalar, LaurentPoly, RatFuncQ, ext_mul,
                    laurent_gcd, mirror_q, parse_laurent, qbracket, qint)
from .rmatrix import (RMatrixError, RMatrixSet, build_rmatrices, racah_coeff,
                      racah_table, twist_diag_exponents, twist_rep)
from .young import (SchurFn, YoungDiagram, YoungError, hook_diagrams,
                    partitions, schur_at_A, schur_star, weyl_dim)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
