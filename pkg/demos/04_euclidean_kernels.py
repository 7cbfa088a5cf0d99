"""The zonal harmonic kernel and its monogenic refinement.

The degree-k harmonics are reproduced by a single Gegenbauer polynomial in
the spherical variable; applying one first-order operator on each side of
the degree-(k+1) kernel and scaling by -1/(m+2k)^2 lands exactly on the
two-Gegenbauer kernel of the monogenics.  Both routes are expanded to
explicit polynomials and compared coefficient by coefficient.
"""

from cliffkernels.cliffpoly import SpherePairer, format_cliffpoly
from cliffkernels.kernels import (monogenic_constant, monogenic_kernel_closed,
                                  monogenic_kernel_operational, zonal_harmonic)
from cliffkernels.spaces import basis_H, monogenic_generators

m, k = 3, 1
K = zonal_harmonic(k, m)
print(f"zonal kernel, k={k}, m={m}:")
print(" ", format_cliffpoly(K.poly))

pair = SpherePairer(K.poly)
h = basis_H(m, k)[0]
print("reproduction of", format_cliffpoly(h), "->", format_cliffpoly(pair.pair(h)))
g = basis_H(m, 2)[0]
print("cross degree ->", format_cliffpoly(pair.pair(g)))

print(f"\nmonogenic kernel, k={k}, m={m} (scalar + bivector):")
closed = monogenic_kernel_closed(k, m)
print(" ", format_cliffpoly(closed.poly))
operational = monogenic_kernel_operational(k, m)
print("operational route equals closed form:",
      closed.poly == operational.poly,
      f"(constant -1/(m+2k)^2 = {monogenic_constant(k, m)})")

pair = SpherePairer(closed.poly)
M = monogenic_generators(m, k)[0]
print("reproduces the monogenic", format_cliffpoly(M), "->",
      format_cliffpoly(pair.pair(M)))
print("annihilates the complement:",
      pair.pair(M.vec_x()).is_zero())
