"""The Jacobi and Gegenbauer layer: exact coefficients, exact recurrences.

Each verifier sweeps an identity family over a parameter grid and returns
the failing tuples; exact arithmetic means the expected failure list is
empty, not small.
"""

from gmpy2 import mpq

from cliffkernels.orthopoly import (gegenbauer, jacobi, verify_gegenbauer_relations,
                                    verify_jacobi_recurrences, verify_jacobi_special,
                                    zonal_gegenbauer_coeffs)

print("P_1^{1,0}(x)      =", jacobi(1, 1, 0).coeffs, " (i.e. (3x+1)/2)")
print("P_3^{1/2,3/2}(x)  =", jacobi(3, mpq(1, 2), mpq(3, 2)).coeffs)
print("C_3^1(t)          =", gegenbauer(3, 1).coeffs, " (8t^3 - 4t)")
print("degree -1 encodes 0:", jacobi(-1, 1, 1).coeffs)

print("\n((k+mu)/mu) C_k^mu survives mu -> 0 (twice the Chebyshev polynomial):")
for k in range(4):
    print(f"  k={k}:", zonal_gegenbauer_coeffs(k, 0))

checks, failures = verify_jacobi_recurrences(6, range(5), range(5))
print(f"\ncontiguous + derivative relations: {checks} checks, "
      f"{len(failures)} failures")

checks, failures = verify_jacobi_special(4, [2, 3, 4], 6)
print(f"parameter-lowering relations:      {checks} checks, "
      f"{len(failures)} failures")

checks, failures = verify_gegenbauer_relations(8, [mpq(1, 2), 1, mpq(3, 2), 2])
print(f"Gegenbauer relations:              {checks} checks, "
      f"{len(failures)} failures")
