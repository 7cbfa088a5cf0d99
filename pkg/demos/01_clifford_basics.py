"""A first walk through the exact Clifford algebra layer.

Generators square to -1 and anticommute; products of vectors split into a
scalar and a bivector part; the Witt elements of the Hermitian setting obey
Grassmann relations, and the spin-Euler element beta grades the spinor
sectors.  Everything below prints exact rationals, never floats.
"""

from cliffkernels import (Multivector, beta, spinor_basis, vector_dot, wedge,
                          witt, witt_dagger)

m = 4
e1 = Multivector.basis_vector(m, 1)
e2 = Multivector.basis_vector(m, 2)

print("e1 * e1            =", e1 * e1)
print("e1 e2 + e2 e1      =", e1 * e2 + e2 * e1)

x = e1 + e2
y = e2
print("x y                =", x * y)
print("x ^ y              =", wedge(x, y))
print("<x, y>             =", vector_dot(x, y))
print("(e1 e2)^dagger     =", (e1 * e2).conjugate())

n = 2
f1, f1d = witt(n, 1), witt_dagger(n, 1)
print("\nWitt pair inside Cl_4:")
print("f1                 =", f1)
print("f1^+               =", f1d)
print("f1 f1^+ + f1^+ f1  =", f1 * f1d + f1d * f1)
print("f1 f1              =", f1 * f1)

b = beta(n)
print("beta               =", b)
print("beta(beta-1)(beta-2) =", b * (b - 1) * (b - 2))

for j in range(n + 1):
    sb = spinor_basis(n, j)
    checks = all(b * v == v * j for v in sb.vectors)
    print(f"sector S^({j}): {len(sb.vectors)} basis spinors, "
          f"beta acts as {j}: {checks}")
