"""Quiver algebra models of categorified projectors and the V_2 unknot.

Path algebra quotients for the worked block algebras, the transcribed
projector bimodule complexes with their d^2 = 0 checks, the corner algebra
of the six-vertex quiver with its standard modules and the minimal
resolution of the simple module L(1), and the small differential bigraded
algebra whose homology is compared against the knot homology series.
"""

from .algebra import (GradedQuotientAlgebra, build_algebra,
                      idempotent_subalgebra, SubAlgebraView)
from .complexes import (BimoduleComplex, gl2_algebra, gl3_algebra,
                        gl2_projector_complex, gl3_p3_complex,
                        gl3_p21_complex, gl3_p12_complex,
                        p12_printed_sign_discrepancies,
                        projector_complexes, euler_characteristic_vs_p2)
from .gl4 import (gl4_algebra, gl4_corner, standard_modules_gl4,
                  l1_resolution_report, ext_self_L1, poincare_vs_paper)
from .gor import gor_d, gor_d_squared_zero, gor_homology

__all__ = [
    "GradedQuotientAlgebra", "build_algebra", "idempotent_subalgebra",
    "SubAlgebraView", "BimoduleComplex", "gl2_algebra", "gl3_algebra",
    "gl2_projector_complex", "gl3_p3_complex", "gl3_p21_complex",
    "gl3_p12_complex", "p12_printed_sign_discrepancies",
    "projector_complexes", "euler_characteristic_vs_p2",
    "gl4_algebra", "gl4_corner", "standard_modules_gl4",
    "l1_resolution_report", "ext_self_L1", "poincare_vs_paper",
    "gor_d", "gor_d_squared_zero", "gor_homology",
]
