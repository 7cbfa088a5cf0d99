"""Dirac-operator calculus on polynomials, and the two inner products.

The first-order operator sum_j e_j d_j factorizes the Laplacian; together
with multiplication by the vector variable it closes the osp(1|2)
anticommutation relation, and its Hermitian refinements close sl(1|2) with
the spin-Euler element beta on the right-hand side.  The Fischer pairing
(differentiate-and-evaluate) and the normalized spherical pairing are
proportional on equal-degree harmonics, which is what later turns operator
identities into reproducing kernels.
"""

from gmpy2 import mpq

from cliffkernels import CliffPoly, fischer_inner, sphere_inner
from cliffkernels.cliffpoly import hermitian_vector, vector_variable
from cliffkernels.exactnum import pochhammer
from cliffkernels.spaces import basis_H

m = 3
x = vector_variable(m)
print("dx applied to x      =", x.dirac_x())            # -m
P = CliffPoly.monomial(m, (2, 1, 0))
print("E(x1^2 x2)           =", P.euler())              # 3 x1^2 x2
print("{x, dx} on x1^2 x2   =", (P.dirac_x().vec_x() + P.vec_x().dirac_x()))

n = 2
z = hermitian_vector(n)
print("dz applied to z      =", z.dirac_z(), " (the spin-Euler element)")

print("\nFischer pairings:")
for k in range(4):
    Pk = CliffPoly.monomial(m, (k, 0, 0))
    print(f"  <x1^{k}, x1^{k}>_d =", fischer_inner(Pk, Pk))

print("\nSphere pairings (normalized):")
one = CliffPoly.one(m)
x1 = CliffPoly.monomial(m, (1, 0, 0))
print("  <1, 1>_S      =", sphere_inner(one, one))
print("  <x1, x1>_S    =", sphere_inner(x1, x1))

print("\nproportionality on harmonics, degree k = 2, m = 3:")
scale = 2 ** 2 * pochhammer(mpq(m, 2), 2)
for h in basis_H(m, 2)[:2]:
    print("  Fischer:", fischer_inner(h, h), "  2^k (m/2)_k * sphere:",
          sphere_inner(h, h) * scale)
