"""The certification suites: every numbered identity as an executable check.

Each suite builds a list of coarse-grained checks (one per identity and
parameter tuple, sweeping bases or monomial grids internally), runs them
serially or on CK_WORKERS processes, and assembles a VerificationReport.
Checks are pure functions of picklable parameters, so the grid is
embarrassingly parallel; report order is fixed independently of scheduling.
"""

from __future__ import annotations

import os
import random
import time

from gmpy2 import mpq

from . import kernels, orthopoly, spaces
from .clifford import (Multivector, beta, lagrange_at_beta, spinor_basis, witt,
                       witt_dagger)
from .cliffpoly import (CliffPoly, SpherePairer, fischer_inner, fischer_pair,
                        monomial_exponents, sphere_inner,
                        verify_duality, verify_laplace_factorisations,
                        verify_superalgebra)
from .exactnum import GaussianRational, pochhammer
from .reports import CheckResult, VerificationReport

PASS = ("pass", "", "")


def _fail(residual, detail=""):
    return ("fail", str(residual), detail)


def _from_failures(nchecks, failures):
    if failures:
        first = failures[0]
        return ("fail", first.get("residual", ""),
                f"{len(failures)}/{nchecks} instances failed; first {first}")
    return ("pass", "", f"{nchecks} instances")


# -- suite: orthopoly --------------------------------------------------------------


def check_jacobi_recurrences(k_max, a_max, b_max):
    return _from_failures(*_swap(orthopoly.verify_jacobi_recurrences(
        k_max, range(a_max + 1), range(b_max + 1))))


def check_jacobi_special(q_max, n_values, p_max):
    return _from_failures(*_swap(orthopoly.verify_jacobi_special(
        q_max, list(n_values), p_max)))


def check_gegenbauer(k_max):
    mus = [mpq(1, 2), mpq(1), mpq(3, 2), mpq(2), mpq(5, 2)]
    return _from_failures(*_swap(orthopoly.verify_gegenbauer_relations(k_max, mus)))


def check_family_bridge(k_max):
    mus = [mpq(1, 2), mpq(1), mpq(3, 2), mpq(2)]
    return _from_failures(*_swap(orthopoly.verify_family_bridge(k_max, mus)))


def _swap(pair):
    checks, failures = pair
    return checks, failures


# -- suite: algebra ----------------------------------------------------------------


def check_clifford_relations(m):
    bad = []
    for j in range(1, m + 1):
        for k in range(1, m + 1):
            ej = Multivector.basis_vector(m, j)
            ek = Multivector.basis_vector(m, k)
            want = Multivector.scalar(m, -2 if j == k else 0)
            if ej * ek + ek * ej != want:
                bad.append((j, k))
    return _from_failures(m * m, [{"residual": str(t)} for t in bad])


def check_grassmann(n):
    m = 2 * n
    nchecks = 0
    bad = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            fj, fk = witt(n, j), witt(n, k)
            fjd, fkd = witt_dagger(n, j), witt_dagger(n, k)
            nchecks += 3
            if fj * fkd + fkd * fj != Multivector.scalar(m, 1 if j == k else 0):
                bad.append({"residual": f"grassmann {j},{k}"})
            if not (fj * fk + fk * fj).is_zero():
                bad.append({"residual": f"duality f {j},{k}"})
            if not (fjd * fkd + fkd * fjd).is_zero():
                bad.append({"residual": f"duality fdag {j},{k}"})
    return _from_failures(nchecks, bad)


def check_beta(n):
    m = 2 * n
    b = beta(n)
    bad = []
    prod = Multivector.scalar(m, 1)
    for j in range(n + 1):
        prod = prod * (b - Multivector.scalar(m, j))
    if not prod.is_zero():
        bad.append({"residual": "factorial property"})
    for j in range(1, n + 1):
        if b * witt(n, j) != witt(n, j) * (b - 1):
            bad.append({"residual": f"commutator f_{j}"})
        if b * witt_dagger(n, j) != witt_dagger(n, j) * (b + 1):
            bad.append({"residual": f"commutator fdag_{j}"})
    return _from_failures(2 * n + 1, bad)


def check_spinor_sectors(n, j):
    sb = spinor_basis(n, j)
    b = beta(n)
    bad = []
    for v in sb.vectors:
        if b * v != v * j:
            bad.append({"residual": f"eigenvalue on {sb.index_sets}"})
        for k in range(1, n + 1):
            w = witt(n, k) * v
            if not w.is_zero() and b * w != w * (j - 1):
                bad.append({"residual": f"f_{k} does not lower"})
    from ._linalg import independent
    if not independent([v.terms for v in sb.vectors]):
        bad.append({"residual": "dependent basis"})
    return _from_failures(len(sb.vectors) * (n + 1) + 1, bad)


def check_conjugation(m, trials):
    rng = random.Random(m * 1009 + 1)
    bad = []
    for _ in range(trials):
        x = _random_mv(m, rng)
        y = _random_mv(m, rng)
        if (x * y).conjugate() != y.conjugate() * x.conjugate():
            bad.append({"residual": "anti-automorphism"})
        if x.conjugate().conjugate() != x:
            bad.append({"residual": "involution"})
    return _from_failures(2 * trials, bad)


def check_grade1_products(m, trials):
    rng = random.Random(m * 733 + 5)
    bad = []
    for _ in range(trials):
        x = _random_mv(m, rng, grades={1})
        y = _random_mv(m, rng, grades={1})
        if (x * y).grades() - {0, 2}:
            bad.append({"residual": str((x * y).grades())})
    return _from_failures(trials, bad)


def _random_mv(m, rng, grades=None):
    mv = Multivector.zero(m)
    for _ in range(4):
        blade = rng.randrange(2 ** m)
        if grades is not None and blade.bit_count() not in grades:
            blade = (1 << rng.randrange(m))
        c = GaussianRational(mpq(rng.randint(-4, 4), rng.randint(1, 3)),
                             mpq(rng.randint(-4, 4), rng.randint(1, 3)))
        mv = mv + Multivector(m, {blade: c})
    return mv


# -- suite: operators ----------------------------------------------------------------


def check_osp12(m, deg_max):
    return _from_failures(*verify_superalgebra(deg_max, m=m))


def check_sl12(n, deg_max):
    return _from_failures(*verify_superalgebra(deg_max, n=n))


def check_laplace_euclidean(m, deg_max):
    return _from_failures(*verify_laplace_factorisations(deg_max, m=m))


def check_laplace_hermitian(n, deg_max):
    return _from_failures(*verify_laplace_factorisations(deg_max, n=n))


# -- suite: duality ------------------------------------------------------------------


def check_duality_euclidean(m, deg_max):
    return _from_failures(*verify_duality(deg_max, m=m))


def check_duality_hermitian(n, deg_max):
    return _from_failures(*verify_duality(deg_max, n=n))


def check_right_left_bridge(m, trials):
    """(P dx)^+ = -dx (P^+), the conjugation bridge of the two actions."""
    rng = random.Random(m * 41 + 3)
    bad = []
    for _ in range(trials):
        P = _random_poly(m, rng, deg=3)
        lhs = P.dirac_x(0, "right").conjugate()
        rhs = -(P.conjugate().dirac_x(0, "left"))
        if lhs != rhs:
            bad.append({"residual": "sign bridge"})
    return _from_failures(trials, bad)


def check_hermitian_bridge(n, trials):
    """(P du)^+ = dzdag(P^+) and (P dudag)^+ = dz(P^+) on one roster."""
    rng = random.Random(n * 97 + 11)
    bad = []
    for _ in range(trials):
        P = _random_poly(2 * n, rng, deg=3)
        if P.dirac_z(0, "right").conjugate() != P.conjugate().dirac_zdag(0, "left"):
            bad.append({"residual": "z-bridge"})
        if P.dirac_zdag(0, "right").conjugate() != P.conjugate().dirac_z(0, "left"):
            bad.append({"residual": "zdag-bridge"})
    return _from_failures(2 * trials, bad)


def _random_poly(m, rng, deg, nslots=1):
    out = CliffPoly.zero(m, nslots)
    for _ in range(5):
        e = [0] * (m * nslots)
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(m)] += 1
        out = out + CliffPoly.monomial(m, e, _random_mv(m, rng), nslots)
    return out


def check_proportionality(m, k):
    """2^k (m/2)_k <H,P>_S = <H,P>_d on the full harmonic x monomial grid,
    plus the Clifford-valued slot-order variant."""
    scale = GaussianRational(pochhammer(mpq(m, 2), k) * 2 ** k)
    bad = 0
    total = 0
    monos = [CliffPoly.monomial(m, e) for e in monomial_exponents(m, k)]
    rng = random.Random(m * 131 + k)
    for h in spaces.basis_H(m, k):
        for P in monos:
            total += 2
            if sphere_inner(h, P) * scale != fischer_inner(h, P):
                bad += 1
            if sphere_inner(P, h) * scale != fischer_inner(P, h):
                bad += 1
        # one Clifford-valued spot check per harmonic
        X = h.mv_left(_random_mv(m, rng))
        P = monos[rng.randrange(len(monos))].mv_left(_random_mv(m, rng))
        total += 1
        if sphere_inner(X, P) * scale != fischer_inner(X, P):
            bad += 1
    return _from_failures(total, [{"residual": "proportionality"}] * bad)


def check_cross_degree_zero(m, k, l):
    """Harmonics of different degrees: both pairings vanish."""
    bad = 0
    total = 0
    for h in spaces.basis_H(m, k):
        for g in spaces.basis_H(m, l):
            total += 2
            if not fischer_inner(h, g).is_zero():
                bad += 1
            if not sphere_inner(h, g).is_zero():
                bad += 1
    return _from_failures(total, [{"residual": "cross-degree"}] * bad)


def check_inner_conjugate_symmetry(m, trials):
    rng = random.Random(m * 61 + 17)
    bad = []
    for _ in range(trials):
        P = _random_poly(m, rng, deg=3)
        Q = _random_poly(m, rng, deg=3)
        if fischer_inner(P, Q).conjugate() != fischer_inner(Q, P):
            bad.append({"residual": "fischer symmetry"})
        if sphere_inner(P, Q).conjugate() != sphere_inner(Q, P):
            bad.append({"residual": "sphere symmetry"})
    return _from_failures(2 * trials, bad)


# -- suite: kernels-euclidean -----------------------------------------------------


def check_fischer_kernel_euclidean(m, k):
    """<x,y>^k / k! reproduces every degree-k polynomial in the Fischer sense."""
    from .exactnum import factorial
    ip = kernels._pairing_xy(m)
    Zk = CliffPoly.one(m, 2)
    for _ in range(k):
        Zk = Zk * ip
    Zk = Zk.scale(mpq(1, factorial(k)))
    bad = 0
    total = 0
    rng = random.Random(m * 17 + k)
    targets = [CliffPoly.monomial(m, e) for e in monomial_exponents(m, k)]
    targets.append(targets[rng.randrange(len(targets))].mv_left(_random_mv(m, rng)))
    for P in targets:
        total += 1
        if fischer_pair(Zk, P) != P:
            bad += 1
    # cross degree: vanishes against other homogeneity
    for l in range(k):
        for e in monomial_exponents(m, l):
            total += 1
            if not fischer_pair(Zk, CliffPoly.monomial(m, e)).is_zero():
                bad += 1
    return _from_failures(total, [{"residual": "fischer kernel"}] * bad)


def check_zonal_reproduction(m, k, l_max):
    P = SpherePairer(kernels.zonal_harmonic(k, m).poly)
    bad = 0
    total = 0
    for l in range(l_max + 1):
        for h in spaces.basis_H(m, l):
            total += 1
            want = h if l == k else CliffPoly.zero(m)
            if P.pair(h) != want:
                bad += 1
    return _from_failures(total, [{"residual": "zonal reproduction"}] * bad)


def check_zonal_harmonicity(m, k):
    K = kernels.zonal_harmonic(k, m).poly
    ok = K.laplacian(0).is_zero() and K.laplacian(1).is_zero()
    return PASS if ok else _fail("zonal kernel not harmonic")


def check_action2(m, k):
    """Operational route equals the two-Gegenbauer closed form."""
    a = kernels.monogenic_kernel_closed(k, m).poly
    b = kernels.monogenic_kernel_operational(k, m).poly
    return PASS if a == b else _fail((a - b).terms and "nonzero residual")


def check_monogenic_conjugation(m, k):
    """Conjugating the kernel fixes the scalar part and flips the bivector."""
    K = kernels.monogenic_kernel_closed(k, m).poly
    want = K.grade_select({0}) - K.grade_select({2})
    return PASS if K.conjugate() == want else _fail("conjugation mismatch")


def check_rep1(m, k, l):
    """Reproduction of the monogenic module generators; right multiples
    follow by right-linearity of the pairing, spot-checked."""
    pairer = SpherePairer(kernels.monogenic_kernel_closed(k, m).poly)
    bad = 0
    total = 0
    rng = random.Random(m * 23 + 5 * k + l)
    gens = spaces.monogenic_generators(m, l)
    for M in gens:
        total += 1
        want = M if l == k else CliffPoly.zero(m)
        if pairer.pair(M) != want:
            bad += 1
    X = _random_mv(m, rng)
    M = gens[rng.randrange(len(gens))]
    total += 1
    want = M.mv_right(X) if l == k else CliffPoly.zero(m)
    if pairer.pair(M.mv_right(X)) != want:
        bad += 1
    return _from_failures(total, [{"residual": "rep1"}] * bad)


def check_rep2(m, k, l):
    """The kernel annihilates the complementary summand x * monogenic."""
    pairer = SpherePairer(kernels.monogenic_kernel_closed(k, m).poly)
    bad = 0
    total = 0
    for M in spaces.monogenic_generators(m, l):
        total += 1
        if not pairer.pair(M.vec_x()).is_zero():
            bad += 1
    return _from_failures(total, [{"residual": "rep2"}] * bad)


# -- suite: kernels-hermitian -------------------------------------------------------


def check_fischer_kernel_hermitian(n, p, q):
    """<z,u>^p <u,z>^q / (2^{p+q} p! q!) reproduces the (p,q)-homogeneous
    polynomials in the Fischer sense and kills the other bidegrees."""
    from .exactnum import factorial
    A = kernels._blocks(n)["A"]
    B = kernels._blocks(n)["B"]
    Z = CliffPoly.one(2 * n, 2)
    for _ in range(p):
        Z = Z * A
    for _ in range(q):
        Z = Z * B
    Z = Z.scale(mpq(1, 2 ** (p + q) * factorial(p) * factorial(q)))
    bad = 0
    total = 0
    for s in range(3):
        for t in range(3):
            for (a, b) in spaces.bidegree_monomials(n, s, t):
                from .cliffpoly import complex_monomial
                P = complex_monomial(n, a, b)
                total += 1
                want = P if (s, t) == (p, q) else CliffPoly.zero(2 * n)
                if fischer_pair(Z, P) != want:
                    bad += 1
    return _from_failures(total, [{"residual": "bidegree fischer kernel"}] * bad)


def check_koornwinder_reproduction(n, p, q):
    pairer = SpherePairer(kernels.koornwinder_kernel(p, q, n).poly)
    bad = 0
    total = 0
    for s in range(3):
        for t in range(3):
            for h in spaces.basis_H_pq(n, s, t):
                total += 1
                want = h if (s, t) == (p, q) else CliffPoly.zero(2 * n)
                if pairer.pair(h) != want:
                    bad += 1
    return _from_failures(total, [{"residual": "koornwinder"}] * bad)


def check_koornwinder_symmetry(n, p, q):
    """K_{p,q}(z,u) = conj K_{q,p}(z,u) = K_{q,p}(u,z)."""
    a = kernels.koornwinder_kernel(p, q, n).poly
    b = kernels.koornwinder_kernel(q, p, n).poly
    ok = a == b.conj_coefficients() and a == b.swap_slots()
    return PASS if ok else _fail("hermitian symmetry")


def check_hermitian_trace(p, q, n):
    """Stages of the operational route against the three lemma-level forms."""
    s = kernels.hermitian_stages(p, q, n)
    bad = []
    if s[0] != kernels.dirac1_closed(p, q, n):
        bad.append({"residual": "stage 1"})
    if s[1] != kernels.dirac2_closed(p, q, n):
        bad.append({"residual": "stage 2"})
    if s[2] != kernels.dirac3_closed(p, q, n):
        bad.append({"residual": "stage 3"})
    if s[3] != kernels.hermitian_kernel_raw_closed(p, q, n):
        bad.append({"residual": "stage 4"})
    return _from_failures(4, bad)


def check_dirac4_equality(p, q, n):
    """Closed form (six-term theorem / edge lemmas / mirror) equals the
    four-operator route.  Compared before the normalization is applied:
    the theorem's two sides carry no d(beta), and the normalized variants
    agree iff these do (same left factor)."""
    a = kernels.hermitian_stages(p, q, n)[3]
    b = kernels.hermitian_kernel_raw_closed(p, q, n)
    return PASS if a == b else _fail("closed vs operational")


def check_order_independence(p, q, n):
    a = kernels.hermitian_stages(p, q, n)[3]
    b = kernels.hermitian_order_swapped(p, q, n)
    return PASS if a == b else _fail("operator order")


def check_h_monogenicity(p, q, n):
    K = kernels.hermitian_kernel_operational(p, q, n).poly
    ok = (K.dirac_z(0).is_zero() and K.dirac_zdag(0).is_zero()
          and K.laplacian(0).is_zero())
    return PASS if ok else _fail("kernel not h-monogenic")


def _degenerate_sector(p, q, j, n):
    return (q == 0 and j == n) or (p == 0 and j == 0)


_PAIRERS: dict = {}


def _hermitian_pairer(p, q, n) -> SpherePairer:
    """Per-process pairer cache: the moment rows over the kernel's first
    slot are shared by every rep3-rep6 check against the same kernel."""
    key = (p, q, n)
    pairer = _PAIRERS.get(key)
    if pairer is None:
        pairer = SpherePairer(kernels.hermitian_kernel_operational(p, q, n).poly)
        _PAIRERS[key] = pairer
    return pairer


def check_rep3(n, p, q, j):
    """Reproduction on the sector-(j) h-monogenics; on the two flagged pole
    sectors the operational kernel provably annihilates instead (the factor
    beta resp. n-beta kills the sector), which is asserted and reported."""
    pairer = _hermitian_pairer(p, q, n)
    degenerate = _degenerate_sector(p, q, j, n)
    bad = 0
    total = 0
    for (s, t) in [(s, t) for s in range(3) for t in range(3)]:
        base = spaces.basis_M_pq(n, s, t, j)
        for M in base:
            total += 1
            if (s, t) == (p, q) and not degenerate:
                want = M
            else:
                want = CliffPoly.zero(2 * n)
            if pairer.pair(M) != want:
                bad += 1
    status, residual, detail = _from_failures(total, [{"residual": "rep3"}] * bad)
    if degenerate and status == "pass":
        return ("degenerate", "",
                f"pole sector (j={j}): kernel annihilates, reproduction out of range; "
                f"{total} instances")
    return (status, residual, detail)


def check_rep_annihilation(n, p, q, which):
    """rep4/rep5/rep6: the kernel annihilates z M, z^+ M and the mixed
    embedding, over full sector bases."""
    pairer = _hermitian_pairer(p, q, n)
    bad = 0
    total = 0
    for s in range(3):
        for t in range(3):
            for j in range(n + 1):
                for M in spaces.basis_M_pq(n, s, t, j):
                    if which == "rep4":
                        T = M.vec_z()
                    elif which == "rep5":
                        T = M.vec_zdag()
                    else:
                        c1 = GaussianRational(s + j)
                        c2 = GaussianRational(-(n + t - j))
                        T = M.vec_zdag().vec_z().scale(c1) + \
                            M.vec_z().vec_zdag().scale(c2)
                    total += 1
                    if not pairer.pair(T).is_zero():
                        bad += 1
    return _from_failures(total, [{"residual": which}] * bad)


# -- suite: normalization -----------------------------------------------------------


def check_norm_identity(n, p, q):
    """(n+p+q+1)^2 (n-beta+q)(beta+p) d_{p,q}(beta) equals the sum of the
    Lagrange projectors over the kept nodes (all of them, hence 1, away
    from the flagged poles)."""
    m = 2 * n
    b = beta(n)
    d = kernels.normalization_dpq(p, q, n)
    _, dropped = kernels.normalization_coefficients(p, q, n)
    lhs = (Multivector.scalar(m, n + q) - b) * (b + Multivector.scalar(m, p)) * d
    lhs = lhs * GaussianRational((n + p + q + 1) ** 2)
    want = Multivector.scalar(m, 1)
    for j in dropped:
        want = want - lagrange_at_beta(n, j)
    if lhs != want:
        return _fail("normalization identity")
    detail = f"dropped pole nodes {list(dropped)}" if dropped else ""
    return ("pass", "", detail)


def check_lagrange(n):
    b = beta(n)
    m = 2 * n
    bad = []
    total = Multivector.zero(m)
    for j in range(n + 1):
        lj = lagrange_at_beta(n, j)
        total = total + lj
        if b * lj != lj * j:
            bad.append({"residual": f"eigen L_{j}"})
        # L_j(n - beta) = L_{n-j}(beta)
        shifted = Multivector.scalar(m, 1)
        for l in range(n + 1):
            if l == j:
                continue
            shifted = shifted * (Multivector.scalar(m, n - l) - b) \
                * GaussianRational(mpq(1, j - l))
        if shifted != lagrange_at_beta(n, n - j):
            bad.append({"residual": f"symmetry L_{j}"})
    if total != Multivector.scalar(m, 1):
        bad.append({"residual": "partition of unity"})
    return _from_failures(2 * (n + 1) + 1, bad)


# -- suite: decompositions ----------------------------------------------------------


def check_harmonic_tower(m, k):
    rng = random.Random(m * 7 + k)
    bad = []
    for _ in range(3):
        P = CliffPoly.zero(m)
        for e in monomial_exponents(m, k):
            if rng.random() < 0.5:
                P = P + CliffPoly.monomial(m, e, _random_mv(m, rng))
        if P.is_zero():
            P = CliffPoly.monomial(m, monomial_exponents(m, k)[0])
        parts = spaces.harmonic_components(P)
        recon = CliffPoly.zero(m)
        r2 = CliffPoly.zero(m)
        for jj in range(m):
            e = [0] * m
            e[jj] = 2
            r2 = r2 + CliffPoly.monomial(m, e)
        power = CliffPoly.one(m)
        for j, h in parts:
            if not h.laplacian().is_zero():
                bad.append({"residual": f"nonharmonic part {j}"})
            recon = recon + power * h
            power = power * r2
        if recon != P:
            bad.append({"residual": "reassembly"})
    return _from_failures(3 * (k // 2 + 2), bad)


def check_monogenic_split(m, k):
    rng = random.Random(m * 13 + k)
    bad = []
    for _ in range(3):
        hb = spaces.basis_H(m, k)
        H = CliffPoly.zero(m)
        for h in hb:
            if rng.random() < 0.6:
                H = H + h.mv_left(_random_mv(m, rng))
        if H.is_zero():
            H = hb[0]
        M, Mp = spaces.monogenic_split(H)
        if not M.dirac_x().is_zero():
            bad.append({"residual": "first part not monogenic"})
        if not Mp.dirac_x().is_zero():
            bad.append({"residual": "second part not monogenic"})
        if M + Mp.vec_x() != H:
            bad.append({"residual": "reassembly"})
    return _from_failures(9, bad)


def check_hermitian_decomposition(n, p, q, j):
    rng = random.Random(n * 29 + p * 7 + q * 3 + j)
    sb = spinor_basis(n, j)
    hb = spaces.basis_H_pq(n, p, q)
    bad = []
    H = CliffPoly.zero(2 * n)
    for h in hb:
        for v in sb.vectors:
            c = GaussianRational(mpq(rng.randint(-3, 3)), mpq(rng.randint(-3, 3)))
            if c:
                H = H + h.mv_left(v).scale(c)
    if H.is_zero() and hb:
        H = hb[0].mv_left(sb.vectors[0])
    if H.is_zero():
        return ("pass", "", "space empty")
    res = spaces.hermitian_components(H, n, p, q, j)
    recon = CliffPoly.zero(2 * n)
    for piece in res["pieces"].values():
        recon = recon + piece
    if recon != H:
        bad.append({"residual": "reassembly"})
    for name, F in res["factors"].items():
        if name == "monogenic" or F.is_zero():
            continue
        if not (F.dirac_z().is_zero() and F.dirac_zdag().is_zero()):
            bad.append({"residual": f"factor {name} not h-monogenic"})
    return _from_failures(5, bad)


def check_dimension_bookkeeping_euclidean(m, k_max):
    bad = []
    total = 0
    for k in range(k_max + 1):
        total += 2
        want = sum(spaces.dim_H_formula(m, k - 2 * jj) for jj in range(k // 2 + 1))
        if spaces.dim_P(m, k) != want:
            bad.append({"residual": f"P vs harmonic tower at k={k}"})
        lhs = len(spaces.basis_H(m, k)) * 2 ** m
        if lhs != spaces.dim_M(m, k) + spaces.dim_M(m, k - 1):
            bad.append({"residual": f"monogenic split dims at k={k}"})
    return _from_failures(total, bad)


def check_dimension_bookkeeping_hermitian(n, p, q):
    """Directness of the four-part split by exact ranks: the component
    images are independent and fill the sector harmonics.  The mixed
    embedding vanishes identically on the two flagged sectors (the vector
    variables annihilate the extreme spinor sectors), where only the image
    rank, not the source dimension, can enter the count."""
    from ._linalg import rank_of_columns
    bad = []
    degenerate_note = []
    lhs = len(spaces.basis_H_pq(n, p, q))
    if lhs != spaces.dim_H_pq_formula(n, p, q):
        bad.append({"residual": "harmonic dim formula"})
    from .exactnum import binomial
    total = 1 + (n + 1)
    for j in range(n + 1):
        dim_hj = lhs * binomial(n, j)
        columns = []
        rank_sum = 0
        parts = [("monogenic", spaces.basis_M_pq(n, p, q, j), lambda M: M)]
        if p >= 1 and j + 1 <= n:
            parts.append(("z", spaces.basis_M_pq(n, p - 1, q, j + 1),
                          lambda M: M.vec_z()))
        if q >= 1 and j - 1 >= 0:
            parts.append(("zdag", spaces.basis_M_pq(n, p, q - 1, j - 1),
                          lambda M: M.vec_zdag()))
        if p >= 1 and q >= 1:
            c1 = GaussianRational(p - 1 + j)
            c2 = GaussianRational(-(n + q - 1 - j))
            parts.append(("mixed", spaces.basis_M_pq(n, p - 1, q - 1, j),
                          lambda M: M.vec_zdag().vec_z().scale(c1)
                          + M.vec_z().vec_zdag().scale(c2)))
        for name, base, embed in parts:
            cols = [embed(M).terms for M in base]
            r = rank_of_columns(cols)
            rank_sum += r
            columns.extend(cols)
            if r < len(base):
                expected_drop = (name == "mixed"
                                 and ((p - 1 + j == 0) or (n + q - 1 - j == 0)))
                if expected_drop:
                    degenerate_note.append(f"j={j}: {name} embedding rank "
                                           f"{r} < {len(base)} (flagged sector)")
                else:
                    bad.append({"residual": f"j={j}: {name} embedding not injective"})
        union = rank_of_columns(columns)
        if not (union == rank_sum == dim_hj):
            bad.append({"residual":
                        f"j={j}: ranks {rank_sum}/{union} vs dim {dim_hj}"})
    status, residual, detail = _from_failures(total, bad)
    if status == "pass" and degenerate_note:
        return ("degenerate", "", "; ".join(degenerate_note))
    return (status, residual, detail)


# -- suite assembly -------------------------------------------------------------------

CHECKS = {name: fn for name, fn in list(globals().items())
          if name.startswith("check_")}


def _orthopoly_specs(grid):
    k = grid["k_max"]
    return [
        ("jacobi-recurrences", "Lemma JacRec1 (jacobi1)-(jacobi5)",
         "check_jacobi_recurrences",
         {"k_max": k, "a_max": grid["ab_max"], "b_max": grid["ab_max"]}),
        ("jacobi-special", "Lemma JacRec2 (jacobi6)-(jacobi8)",
         "check_jacobi_special",
         {"q_max": k, "n_values": grid["n_values"], "p_max": grid["p_max"]}),
        ("gegenbauer-relations", "eqs. (GegenRec)-(Gegen4)",
         "check_gegenbauer", {"k_max": grid["gegen_k_max"]}),
        ("gegenbauer-jacobi-bridge", "Gegenbauer as rescaled Jacobi",
         "check_family_bridge", {"k_max": grid["gegen_k_max"]}),
    ]


def _algebra_specs(grid):
    specs = []
    for m in range(1, grid["m_max"] + 1):
        specs.append((f"clifford-relations-m{m}", "Cl_m generator relations",
                      "check_clifford_relations", {"m": m}))
    for n in range(1, grid["n_max"] + 1):
        specs.append((f"grassmann-n{n}", "eq. (witt) Grassmann/duality",
                      "check_grassmann", {"n": n}))
        specs.append((f"beta-n{n}", "Lemma beta incl. eq. (betafactor)",
                      "check_beta", {"n": n}))
    for n in range(1, grid["spinor_n_max"] + 1):
        for j in range(n + 1):
            specs.append((f"spinor-sector-n{n}-j{j}", "beta eigenvalue on S^(j)",
                          "check_spinor_sectors", {"n": n, "j": j}))
    for m in range(2, grid["m_max"]):
        specs.append((f"conjugation-m{m}", "Clifford conjugation anti-automorphism",
                      "check_conjugation", {"m": m, "trials": 6}))
        specs.append((f"grade1-products-m{m}", "vector products live in grades {0,2}",
                      "check_grade1_products", {"m": m, "trials": 6}))
    return specs


def _operators_specs(grid):
    specs = []
    for m in range(2, grid["m_max"] + 1):
        specs.append((f"osp12-m{m}", "eq. (osp12)", "check_osp12",
                      {"m": m, "deg_max": grid["deg_max"]}))
        specs.append((f"laplace-euclidean-m{m}", "Laplace = -(Dirac)^2",
                      "check_laplace_euclidean", {"m": m, "deg_max": grid["deg_max"]}))
    for n in range(1, grid["n_max"] + 1):
        specs.append((f"sl12-n{n}", "eqs. (sl12a)/(sl12b)", "check_sl12",
                      {"n": n, "deg_max": grid["deg_max"]}))
        specs.append((f"laplace-hermitian-n{n}",
                      "Laplace via Wirtinger pairs; Euler split",
                      "check_laplace_hermitian", {"n": n, "deg_max": grid["deg_max"]}))
    return specs


def _duality_specs(grid):
    specs = []
    for m in range(2, grid["m_max"] + 1):
        specs.append((f"duality-euclidean-m{m}", "Lemma Duality1",
                      "check_duality_euclidean", {"m": m, "deg_max": grid["deg_max"]}))
        specs.append((f"right-left-bridge-m{m}", "conjugation bridge of the actions",
                      "check_right_left_bridge", {"m": m, "trials": 5}))
    for n in range(1, grid["n_max"] + 1):
        specs.append((f"duality-hermitian-n{n}", "Lemma FischerSphere2",
                      "check_duality_hermitian", {"n": n, "deg_max": grid["deg_max"]}))
        specs.append((f"hermitian-bridge-n{n}", "conjugation bridge, Hermitian",
                      "check_hermitian_bridge", {"n": n, "trials": 5}))
    for m in range(2, grid["m_max"] + 1):
        for k in range(grid["k_max"] + 1):
            specs.append((f"proportionality-m{m}-k{k}", "Thm FischerSphere1",
                          "check_proportionality", {"m": m, "k": k}))
        for k in range(grid["k_max"] + 1):
            for l in range(k):
                specs.append((f"cross-degree-m{m}-k{k}-l{l}",
                              "Thm FischerSphere1 (cross degree)",
                              "check_cross_degree_zero", {"m": m, "k": k, "l": l}))
        specs.append((f"inner-symmetry-m{m}", "pairing conjugate symmetry",
                      "check_inner_conjugate_symmetry", {"m": m, "trials": 4}))
    return specs


def _kernels_euclidean_specs(grid):
    specs = []
    for m in range(2, grid["fischer_m_max"] + 1):
        for k in range(grid["k_max"] + 1):
            specs.append((f"fischer-kernel-m{m}-k{k}",
                          "Z_k reproduces P_k (Fischer)",
                          "check_fischer_kernel_euclidean", {"m": m, "k": k}))
    for m in range(2, grid["m_max"] + 1):
        for k in range(grid["k_max"] + 1):
            specs.append((f"zonal-reproduction-m{m}-k{k}", "Thm harmkernel1",
                          "check_zonal_reproduction",
                          {"m": m, "k": k, "l_max": grid["k_max"]}))
            specs.append((f"zonal-harmonic-m{m}-k{k}", "harmonicity of the kernel",
                          "check_zonal_harmonicity", {"m": m, "k": k}))
    for m in grid["mono_m_values"]:
        for k in range(grid["k_max"] + 1):
            specs.append((f"action2-m{m}-k{k}",
                          "Thm action2 / Thm RepKernel1 (c_k route)",
                          "check_action2", {"m": m, "k": k}))
            specs.append((f"kernel-conjugation-m{m}-k{k}",
                          "Remark after Thm RepKernel1",
                          "check_monogenic_conjugation", {"m": m, "k": k}))
            for l in range(grid["k_max"] + 1):
                specs.append((f"rep1-m{m}-k{k}-l{l}", "Thm RepKernel1 (rep1)",
                              "check_rep1", {"m": m, "k": k, "l": l}))
            for l in range(grid["k_max"]):
                specs.append((f"rep2-m{m}-k{k}-l{l}", "Thm RepKernel1 (rep2)",
                              "check_rep2", {"m": m, "k": k, "l": l}))
    return specs


def _kernels_hermitian_specs(grid):
    specs = []
    for n in grid["n_values"]:
        for p in range(grid["pq_max"] + 1):
            for q in range(grid["pq_max"] + 1):
                specs.append((f"bidegree-fischer-n{n}-p{p}-q{q}",
                              "Z_pq reproduces P_st (Fischer)",
                              "check_fischer_kernel_hermitian",
                              {"n": n, "p": p, "q": q}))
                specs.append((f"koornwinder-n{n}-p{p}-q{q}", "Thm harmkernel2",
                              "check_koornwinder_reproduction",
                              {"n": n, "p": p, "q": q}))
                specs.append((f"koornwinder-symmetry-n{n}-p{p}-q{q}",
                              "Cor symm (Hermitian symmetry)",
                              "check_koornwinder_symmetry", {"n": n, "p": p, "q": q}))
    trace_cases = [tuple(c) for c in grid["trace_cases"]]
    for (p, q, n) in trace_cases:
        specs.append((f"hermitian-trace-p{p}-q{q}-n{n}",
                      "Lemmas Dirac1-Dirac3 + Thm Dirac4 (staged)",
                      "check_hermitian_trace", {"p": p, "q": q, "n": n}))
    for n in grid["n_values"]:
        for p in range(grid["dirac4_max"] + 1):
            for q in range(grid["dirac4_max"] + 1):
                if (p, q, n) in trace_cases:
                    continue  # stage 4 of the trace check is this equality
                anchor = ("Thm Dirac4" if p > q >= 1 else
                          "q=0 lemma" if q == 0 and p >= 1 else
                          "p=q lemma" if p == q else "Cor symm")
                specs.append((f"dirac4-n{n}-p{p}-q{q}",
                              f"{anchor} vs Thm RepKernel2 route",
                              "check_dirac4_equality", {"p": p, "q": q, "n": n}))
    for n in grid["n_values"]:
        for p in range(grid["pq_max"] + 1):
            for q in range(grid["pq_max"] + 1):
                specs.append((f"order-independence-n{n}-p{p}-q{q}",
                              "operator order freedom",
                              "check_order_independence", {"p": p, "q": q, "n": n}))
                specs.append((f"h-monogenic-n{n}-p{p}-q{q}",
                              "h-monogenicity of the kernel",
                              "check_h_monogenicity", {"p": p, "q": q, "n": n}))
                for j in range(n + 1):
                    specs.append((f"rep3-n{n}-p{p}-q{q}-j{j}",
                                  "Thm RepKernel2 (rep3)",
                                  "check_rep3", {"n": n, "p": p, "q": q, "j": j}))
                for which in ("rep4", "rep5", "rep6"):
                    specs.append((f"{which}-n{n}-p{p}-q{q}",
                                  f"Thm RepKernel2 ({which})",
                                  "check_rep_annihilation",
                                  {"n": n, "p": p, "q": q, "which": which}))
    return specs


def _normalization_specs(grid):
    specs = []
    for n in range(1, grid["n_max"] + 1):
        specs.append((f"lagrange-n{n}", "Lemma lagrange (L1)-(L3)",
                      "check_lagrange", {"n": n}))
        for p in range(grid["pq_max"] + 1):
            for q in range(grid["pq_max"] + 1):
                specs.append((f"norm-n{n}-p{p}-q{q}", "eq. (norm)",
                              "check_norm_identity", {"n": n, "p": p, "q": q}))
    return specs


def _decompositions_specs(grid):
    specs = []
    for m in range(2, grid["m_max"] + 1):
        for k in range(grid["k_max"] + 1):
            specs.append((f"harmonic-tower-m{m}-k{k}", "eq. (1) Fischer decomposition",
                          "check_harmonic_tower", {"m": m, "k": k}))
            specs.append((f"monogenic-split-m{m}-k{k}", "eq. (fischer2)",
                          "check_monogenic_split", {"m": m, "k": k}))
        specs.append((f"dims-euclidean-m{m}", "dimension bookkeeping",
                      "check_dimension_bookkeeping_euclidean",
                      {"m": m, "k_max": grid["k_max"]}))
    for n in grid["n_values"]:
        for p in range(grid["pq_max"] + 1):
            for q in range(grid["pq_max"] + 1):
                for j in range(n + 1):
                    specs.append((f"hermitian-decomposition-n{n}-p{p}-q{q}-j{j}",
                                  "Hermitian Fischer decomposition",
                                  "check_hermitian_decomposition",
                                  {"n": n, "p": p, "q": q, "j": j}))
                specs.append((f"dims-hermitian-n{n}-p{p}-q{q}",
                              "four-part dimension bookkeeping",
                              "check_dimension_bookkeeping_hermitian",
                              {"n": n, "p": p, "q": q}))
    return specs


DEFAULT_GRIDS = {
    "orthopoly": {"k_max": 6, "ab_max": 4, "n_values": [2, 3, 4], "p_max": 6,
                  "gegen_k_max": 8},
    "algebra": {"m_max": 6, "n_max": 4, "spinor_n_max": 3},
    "operators": {"m_max": 5, "n_max": 3, "deg_max": 4},
    "duality": {"m_max": 5, "n_max": 3, "deg_max": 3, "k_max": 4},
    "kernels-euclidean": {"m_max": 5, "fischer_m_max": 4, "k_max": 3,
                          "mono_m_values": [3, 4, 5]},
    "kernels-hermitian": {"n_values": [2, 3], "pq_max": 2, "dirac4_max": 3,
                          "trace_cases": [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 2, 3)]},
    "normalization": {"n_max": 4, "pq_max": 3},
    "decompositions": {"m_max": 4, "k_max": 4, "n_values": [2, 3], "pq_max": 2},
}

SUITE_BUILDERS = {
    "orthopoly": _orthopoly_specs,
    "algebra": _algebra_specs,
    "operators": _operators_specs,
    "duality": _duality_specs,
    "kernels-euclidean": _kernels_euclidean_specs,
    "kernels-hermitian": _kernels_hermitian_specs,
    "normalization": _normalization_specs,
    "decompositions": _decompositions_specs,
}

SUITE_ORDER = ["orthopoly", "algebra", "operators", "duality",
               "kernels-euclidean", "kernels-hermitian", "normalization",
               "decompositions"]


def _run_one(spec):
    check_id, anchor, fn, params = spec
    try:
        status, residual, detail = CHECKS[fn](**params)
    except Exception as exc:  # a crash is a failure, not a silent skip
        status, residual, detail = "fail", "", f"exception: {exc!r}"
    return CheckResult(check_id, anchor, params, status, residual, detail)


def _cost_estimate(spec) -> int:
    """Rough relative cost, used to schedule heavy checks first."""
    _, _, fn, params = spec
    n = params.get("n", 2)
    p = params.get("p", 0)
    q = params.get("q", 0)
    scale = 40 if n >= 3 else 1
    if fn in ("check_hermitian_trace", "check_dirac4_equality",
              "check_order_independence"):
        return (p + q + 2) ** 4 * scale
    if fn in ("check_rep3", "check_rep_annihilation", "check_h_monogenicity",
              "check_koornwinder_reproduction", "check_fischer_kernel_hermitian"):
        return (p + q + 1) ** 2 * scale
    if fn in ("check_hermitian_decomposition",
              "check_dimension_bookkeeping_hermitian"):
        return (p + q + 1) * n ** 2
    return 1


def _group_key(idx, spec):
    """Checks sharing a kernel pairer run in one task so its caches are hit
    regardless of scheduling."""
    _, _, fn, params = spec
    if fn in ("check_rep3", "check_rep_annihilation", "check_h_monogenicity"):
        return ("kernel", params["p"], params["q"], params["n"])
    return ("solo", idx)


def _run_group(group):
    return [(idx, _run_one(spec)) for idx, spec in group]


def run_suite(name: str, overrides: dict | None = None,
              workers: int | None = None) -> VerificationReport:
    if name not in SUITE_BUILDERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_ORDER}")
    grid = dict(DEFAULT_GRIDS[name])
    if overrides:
        for k, v in overrides.items():
            if k in grid and v is not None:
                grid[k] = v
    specs = SUITE_BUILDERS[name](grid)
    if workers is None:
        env = os.environ.get("CK_WORKERS")
        workers = int(env) if env else min(os.cpu_count() or 1, 4)
    t0 = time.perf_counter()
    if workers > 1 and len(specs) > 1:
        groups: dict = {}
        for idx, spec in enumerate(specs):
            groups.setdefault(_group_key(idx, spec), []).append((idx, spec))
        ordered = sorted(groups.values(),
                         key=lambda g: -sum(_cost_estimate(s) for _, s in g))
        import multiprocessing as mp
        with mp.get_context("fork").Pool(workers) as pool:
            chunks = pool.map(_run_group, ordered, chunksize=1)
        indexed = [pair for chunk in chunks for pair in chunk]
        indexed.sort(key=lambda t: t[0])
        results = [r for _, r in indexed]
    else:
        results = [_run_one(s) for s in specs]
    elapsed = time.perf_counter() - t0
    return VerificationReport(name, grid, results, elapsed)


def run_all(overrides: dict | None = None, workers: int | None = None):
    return [run_suite(name, overrides, workers) for name in SUITE_ORDER]
