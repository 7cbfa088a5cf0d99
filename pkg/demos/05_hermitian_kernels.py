"""The bihomogeneous tower: Jacobi kernels and Hermitian monogenics.

The bidegree-(p,q) harmonics on the complex sphere are reproduced by a
single Jacobi polynomial in the angular variable; two conjugated
first-order operators on each side, normalized by a polynomial in the
spin-Euler element through Lagrange interpolation, give the reproducing
kernel of the spinor-valued Hermitian monogenics.  The staged trace of the
operator route is exposed so each intermediate can be compared to its
closed form.
"""

from cliffkernels.cliffpoly import SpherePairer, format_cliffpoly
from cliffkernels.clifford import format_multivector
from cliffkernels.kernels import (dirac1_closed, hermitian_kernel_closed,
                                  hermitian_kernel_operational,
                                  koornwinder_kernel, normalization_coefficients,
                                  normalization_dpq)
from cliffkernels.spaces import basis_H_pq, basis_M_pq

n, p, q = 2, 1, 1
K = koornwinder_kernel(p, q, n)
print(f"bidegree kernel ({p},{q}), n={n}:")
print(" ", format_cliffpoly(K.poly))
pair = SpherePairer(K.poly)
h = basis_H_pq(n, p, q)[0]
print("reproduces", format_cliffpoly(h), "->", format_cliffpoly(pair.pair(h)))

print("\nnormalization d_{1,1}(beta) for n=2:")
print(" ", format_multivector(normalization_dpq(1, 1, 2)))
coeffs, dropped = normalization_coefficients(1, 0, 2)
print("node weights at (p,q)=(1,0):", {j: str(c) for j, c in coeffs.items()},
      "dropped poles:", dropped)

Kt = hermitian_kernel_operational(p, q, n, trace=True)
print(f"\noperational Hermitian kernel ({p},{q}), n={n}: "
      f"{len(Kt.poly.terms)} terms, grades {sorted(Kt.poly.grades())}")
print("full closed form matches:",
      Kt.poly == hermitian_kernel_closed(p, q, n).poly)

staged = hermitian_kernel_operational(2, 1, n, trace=True)
print("staged trace at (2,1): stage 1 matches its closed form:",
      staged.trace["stages"][0] == dirac1_closed(2, 1, n))

pair = SpherePairer(Kt.poly)
for j in range(n + 1):
    base = basis_M_pq(n, p, q, j)
    if not base:
        print(f"sector j={j}: empty")
        continue
    ok = all(pair.pair(M) == M for M in base)
    kills = all(pair.pair(M.vec_z()).is_zero() for M in base)
    print(f"sector j={j}: dim {len(base)}, reproduced: {ok}, "
          f"annihilates z*monogenic: {kills}")
