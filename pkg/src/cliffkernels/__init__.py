"""Exact-arithmetic Clifford analysis toolkit.

Dirac-operator calculus on polynomials with Clifford-algebra coefficients,
Fischer and spherical inner products, reproducing kernels for harmonic,
bihomogeneous-harmonic, monogenic and Hermitian-monogenic polynomial spaces,
and a verification suite that certifies every identity by exact computation.
"""

from .exactnum import GaussianRational, Rational, gaussian, pochhammer, rational
from .clifford import (Multivector, SpinorBasis, beta, spinor_basis, spinor_vacuum,
                       vector_dot, wedge, witt, witt_dagger)
from .cliffpoly import (CliffPoly, OperatorTag, SpherePairer, apply, fischer_inner,
                        fischer_pair, sphere_inner, sphere_pair)
from .verify import run_all, run_suite

__all__ = [
    "GaussianRational", "Rational", "gaussian", "pochhammer", "rational",
    "Multivector", "SpinorBasis", "beta", "spinor_basis", "spinor_vacuum",
    "vector_dot", "wedge", "witt", "witt_dagger",
    "CliffPoly", "OperatorTag", "SpherePairer", "apply", "fischer_inner",
    "fischer_pair", "sphere_inner", "sphere_pair",
    "run_all", "run_suite",
]
