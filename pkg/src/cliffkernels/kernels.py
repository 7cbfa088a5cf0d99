"""The four reproducing kernels and their normalizations.

Constructors for:
  * the zonal harmonic kernel (Gegenbauer in the spherical variable),
  * the bihomogeneous harmonic kernel (Jacobi in the angular variable),
  * the monogenic kernel, both closed-form (two Gegenbauers) and
    operational (two first-order operators applied to the harmonic kernel),
  * the Hermitian monogenic kernel, closed-form (six Jacobi terms weighted
    by polynomials in beta) and operational (four operators), with a trace
    mode exposing every intermediate stage,
plus the beta-valued normalization through Lagrange interpolation.

All radial/angular closed forms are expanded so that only squared norms and
the pairing polynomials appear: the parity structure of the Gegenbauer and
Jacobi coefficients guarantees the result is a polynomial, which is asserted
at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .clifford import Multivector, lagrange_at_beta, beta as beta_element
from .cliffpoly import CliffPoly, hermitian_vector, hermitian_vector_dagger
from .exactnum import GaussianRational
from .orthopoly import jacobi, kappa, pcompose_affine, zonal_gegenbauer_coeffs, gegenbauer

_KCACHE: dict = {}


def _kcached(key, build):
    hit = _KCACHE.get(key)
    if hit is None:
        hit = build()
        _KCACHE[key] = hit
    return hit


@dataclass
class KernelPoly:
    """A reproducing kernel as an explicit two-slot polynomial.

    bidegree records the homogeneity in each slot: Euclidean kernels carry
    (k, k), Hermitian ones ((p, q), (q, p)) (the second slot is conjugated).
    """

    kind: str
    params: dict
    poly: CliffPoly
    bidegree: dict
    trace: dict = field(default_factory=dict)

    def __post_init__(self):
        for slot, name in ((0, "first"), (1, "second")):
            want = self.bidegree[name]
            deg = want if isinstance(want, int) else sum(want)
            if self.poly.terms and self.poly.homogeneous_degree(slot) != deg:
                raise ValueError(f"kernel is not {deg}-homogeneous in slot {slot}")


# -- shared building blocks ------------------------------------------------------


def _pairing_xy(m: int) -> CliffPoly:
    """<x, y> as a two-slot polynomial."""
    out = CliffPoly.zero(m, 2)
    for i in range(m):
        out = out + CliffPoly.variable(m, i, 2, 0).mulx(m + i)
    return out


def _r2(m: int, slot: int) -> CliffPoly:
    out = CliffPoly.zero(m, 2)
    for i in range(m):
        c = slot * m + i
        out = out + CliffPoly.one(m, 2).mulx(c).mulx(c)
    return out


def _wedge_xy(m: int) -> CliffPoly:
    """x ^ y = sum_{i<j} (x_i y_j - x_j y_i) e_ij."""
    out = CliffPoly.zero(m, 2)
    for i in range(m):
        for j in range(i + 1, m):
            bl = Multivector.blade(m, [i + 1, j + 1])
            term = (CliffPoly.one(m, 2).mulx(i).mulx(m + j)
                    - CliffPoly.one(m, 2).mulx(j).mulx(m + i))
            out = out + term.mv_left(bl)
    return out


def _herm_A(n: int) -> CliffPoly:
    """<z, u> = sum_j z_j conj(u_j) on the paired roster."""
    m = 2 * n
    out = CliffPoly.zero(m, 2)
    one = CliffPoly.one(m, 2)
    for j in range(n):
        out = out + one.mul_z(j, 0).mul_zbar(j, 1)
    return out


def _powers(base: CliffPoly, top: int) -> list[CliffPoly]:
    out = [CliffPoly.one(base.m, base.nslots)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def _letter_powers(n: int, letter: str, top: int) -> list[CliffPoly]:
    """Cached powers of the four pairing polynomials."""
    key = ("pow", n, letter)
    chain = _KCACHE.get(key)
    if chain is None:
        chain = [CliffPoly.one(2 * n, 2)]
        _KCACHE[key] = chain
    base = _blocks(n)[letter]
    while len(chain) <= top:
        chain.append(chain[-1] * base)
    return chain


def _blocks(n: int):
    """Cached A, B, C, D and the vector/bivector structure polynomials."""

    def build():
        m = 2 * n
        A = _herm_A(n)
        B = A.conj_coefficients()
        C = _r2(m, 0)
        D = _r2(m, 1)
        vz = hermitian_vector(n, 2, 0)
        vzd = hermitian_vector_dagger(n, 2, 0)
        vu = hermitian_vector(n, 2, 1)
        vud = hermitian_vector_dagger(n, 2, 1)
        return {
            "A": A, "B": B, "C": C, "D": D,
            "vz": vz, "vzd": vzd, "vu": vu, "vud": vud,
            "zwzd": (vz * vzd).grade_select({2}),
            "uwud": (vu * vud).grade_select({2}),
            "zud": vz * vud,
            "zdu": vzd * vu,
            "four": vz * vzd * vu * vud,
        }

    return _kcached(("blocks", n), build)


def _jacobi_in_s(r: int, a, b) -> tuple:
    """Coefficients of P_r^{a,b}(2s - 1) in ascending powers of s."""
    if r < 0:
        return ()
    key = ("jac-s", r, a, b)
    hit = _KCACHE.get(key)
    if hit is None:
        hit = pcompose_affine(jacobi(r, a, b).coeffs, 2, -1)
        _KCACHE[key] = hit
    return hit


def _abcd_expand(n: int, s_coeffs, apow: int, cpow: int, dpow: int) -> CliffPoly:
    """sum_i s_coeffs[i] A^(apow+i) B^i C^(cpow-i) D^(dpow-i), polynomial."""
    top = max(len(s_coeffs) - 1, 0)
    Ap = _letter_powers(n, "A", apow + top)
    Bp = _letter_powers(n, "B", top)
    Cp = _letter_powers(n, "C", cpow)
    Dp = _letter_powers(n, "D", dpow)
    out = CliffPoly.zero(2 * n, 2)
    for i, c in enumerate(s_coeffs):
        if not c:
            continue
        if cpow - i < 0 or dpow - i < 0 or apow + i < 0:
            raise ValueError("angular expansion left the polynomial range")
        out = out + (Ap[apow + i] * Bp[i] * Cp[cpow - i] * Dp[dpow - i]).scale(c)
    return out


# -- harmonic kernels -----------------------------------------------------------


def zonal_harmonic(k: int, m: int) -> KernelPoly:
    """Reproducing kernel of the degree-k spherical harmonics.

    ((k+mu)/mu) |x|^k |y|^k C_k^mu(t) with mu = m/2 - 1, expanded so each
    power t^(k-2j) pairs with (|x||y|)^(2j); m = 2 works through the exact
    cancellation of mu in the coefficient ratio."""
    if m < 2 or k < 0:
        raise ValueError("zonal_harmonic needs m >= 2, k >= 0")

    def build():
        mu = mpq(m, 2) - 1
        tc = zonal_gegenbauer_coeffs(k, mu)
        ip = _powers(_pairing_xy(m), k)
        rr = _powers(_r2(m, 0) * _r2(m, 1), k // 2)
        out = CliffPoly.zero(m, 2)
        for d, c in enumerate(tc):
            if not c:
                continue
            if (k - d) % 2:
                raise ValueError("parity violation in the zonal expansion")
            out = out + (ip[d] * rr[(k - d) // 2]).scale(c)
        return KernelPoly("zonal", {"k": k, "m": m}, out,
                          {"first": k, "second": k})

    return _kcached(("zonal", k, m), build)


def koornwinder_kernel(p: int, q: int, n: int) -> KernelPoly:
    """Reproducing kernel of the bidegree-(p,q) harmonics on the complex
    sphere: kappa_{p,q} <z,u>^{p-q} C^q D^q P_q^{n-2,p-q}(2s-1), with the
    trace-normalising constant kappa_{p,q} = ((n-1+p+q)/(n-1)) C(n-2+p, p);
    p < q is the coefficientwise conjugate of (q, p)."""
    if n < 2 or p < 0 or q < 0:
        raise ValueError("koornwinder_kernel needs n >= 2, p, q >= 0")

    def build():
        if p < q:
            twin = koornwinder_kernel(q, p, n)
            return KernelPoly("koornwinder", {"p": p, "q": q, "n": n},
                              twin.poly.conj_coefficients(),
                              {"first": (p, q), "second": (q, p)})
        sc = _jacobi_in_s(q, n - 2, p - q)
        out = _abcd_expand(n, sc, p - q, q, q).scale(kappa(n, p, q))
        return KernelPoly("koornwinder", {"p": p, "q": q, "n": n}, out,
                          {"first": (p, q), "second": (q, p)})

    return _kcached(("koorn", p, q, n), build)


# -- monogenic kernel ------------------------------------------------------------


def monogenic_kernel_closed(k: int, m: int) -> KernelPoly:
    """((2mu+k)/(2mu)) |x|^k |y|^k C_k^mu(t) + (x^y) (|x||y|)^{k-1} C_{k-1}^{mu+1}(t)."""
    if m < 3 or k < 0:
        raise ValueError("monogenic kernel needs m >= 3, k >= 0")

    def build():
        mu = mpq(m, 2) - 1
        ip = _powers(_pairing_xy(m), k)
        rr = _powers(_r2(m, 0) * _r2(m, 1), k // 2)
        out = CliffPoly.zero(m, 2)
        if k == 0:
            out = out + CliffPoly.one(m, 2)
        else:
            scalar_c = gegenbauer(k, mu).coeffs
            for d, c in enumerate(scalar_c):
                if not c:
                    continue
                out = out + (ip[d] * rr[(k - d) // 2]).scale(c * (2 * mu + k) / (2 * mu))
            biv_c = gegenbauer(k - 1, mu + 1).coeffs
            wxy = _wedge_xy(m)
            for d, c in enumerate(biv_c):
                if not c:
                    continue
                out = out + (wxy * ip[d] * rr[(k - 1 - d) // 2]).scale(c)
        kp = KernelPoly("monogenic-closed", {"k": k, "m": m}, out,
                        {"first": k, "second": k})
        if kp.poly.grades() - {0, 2}:
            raise AssertionError("monogenic kernel left grades {0, 2}")
        return kp

    return _kcached(("mono-closed", k, m), build)


def monogenic_kernel_operational(k: int, m: int) -> KernelPoly:
    """-(m+2k)^{-2} dx K_{k+1} dy: the two-operator route; equals the closed
    form exactly (verified in the suites)."""
    if m < 3 or k < 0:
        raise ValueError("monogenic kernel needs m >= 3, k >= 0")

    def build():
        K = zonal_harmonic(k + 1, m).poly
        out = K.dirac_x(0, "left").dirac_x(1, "right").scale(mpq(-1, (m + 2 * k) ** 2))
        return KernelPoly("monogenic-operational", {"k": k, "m": m}, out,
                          {"first": k, "second": k})

    return _kcached(("mono-op", k, m), build)


def monogenic_constant(k: int, m: int):
    """The scalar tying the operator route to the closed form."""
    return mpq(-1, (m + 2 * k) ** 2)


# -- Hermitian kernel: normalization ----------------------------------------------


def normalization_coefficients(p: int, q: int, n: int):
    """Node weights of d_{p,q}(beta) and the dropped pole nodes.

    d^{(j)} = (n+p+q+1)^{-2} (n-j+q)^{-1} (j+p)^{-1}; the nodes where a
    factor vanishes (j = n with q = 0, j = 0 with p = 0) are dropped: on
    those spinor sectors the operational kernel has no range, which the
    reproduction reports flag explicitly."""
    coeffs = {}
    dropped = []
    for j in range(n + 1):
        if n - j + q == 0 or j + p == 0:
            dropped.append(j)
            continue
        coeffs[j] = mpq(1, (n + p + q + 1) ** 2 * (n - j + q) * (j + p))
    return coeffs, tuple(dropped)


def normalization_dpq(p: int, q: int, n: int) -> Multivector:
    """d_{p,q}(beta) = sum_j d^{(j)} L_j(beta) as an explicit multivector."""
    if n < 1 or p < 0 or q < 0:
        raise ValueError("normalization needs n >= 1, p, q >= 0")

    def build():
        coeffs, _ = normalization_coefficients(p, q, n)
        out = Multivector.zero(2 * n)
        for j, c in coeffs.items():
            out = out + lagrange_at_beta(n, j) * GaussianRational(c)
        return out

    return _kcached(("dpq", p, q, n), build)


# -- Hermitian kernel: operational route -------------------------------------------


def hermitian_stages(p: int, q: int, n: int) -> list[CliffPoly]:
    """The four intermediate polynomials of dz^+ dz K_{p+1,q+1} du^+ du.

    Stage 1 is dz K, stage 2 is dz^+ dz K, stage 3 applies du^+ from the
    right, stage 4 also du; the three lemma-level closed forms below match
    stages 1-3 and the six-term theorem matches stage 4.  Not cached: the
    intermediates dwarf the final kernel."""
    K = koornwinder_kernel(p + 1, q + 1, n).poly
    s1 = K.dirac_z(0, "left")
    s2 = s1.dirac_zdag(0, "left")
    s3 = s2.dirac_zdag(1, "right")
    s4 = s3.dirac_z(1, "right")
    return [s1, s2, s3, s4]


def hermitian_kernel_operational(p: int, q: int, n: int, trace: bool = False) -> KernelPoly:
    """d_{p,q}(beta) dz^+ dz K_{p+1,q+1} du^+ du, fully expanded."""
    if n < 2 or p < 0 or q < 0:
        raise ValueError("hermitian kernel needs n >= 2, p, q >= 0")
    if trace:
        stages = hermitian_stages(p, q, n)
        out = stages[3].mv_left(normalization_dpq(p, q, n))
    else:
        stages = None
        out = _kcached(("herm-op", p, q, n), lambda: hermitian_stages(p, q, n)[3]
                       .mv_left(normalization_dpq(p, q, n)))
    kp = KernelPoly("hermitian-operational", {"p": p, "q": q, "n": n}, out,
                    {"first": (p, q), "second": (q, p)},
                    trace={"stages": stages} if trace else {})
    _check_hermitian_grades(kp, p, q, n)
    return kp


def _check_hermitian_grades(kp: KernelPoly, p: int, q: int, n: int):
    """The four-operator result lives in grades {0, 2, 4} (asserted where it
    is built); the beta-polynomial normalization then mixes in higher even
    grades once 2n > 4, so the normalized kernel is only even-graded."""
    grades = kp.poly.grades()
    allowed = set(range(0, 2 * n + 1, 2))
    if grades - allowed:
        raise AssertionError("hermitian kernel left the even grades")


def hermitian_order_swapped(p: int, q: int, n: int) -> CliffPoly:
    """dz dz^+ K_{p+1,q+1} du du^+ (the other operator order; equal on
    harmonics)."""
    K = koornwinder_kernel(p + 1, q + 1, n).poly
    return K.dirac_zdag(0, "left").dirac_z(0, "left") \
            .dirac_z(1, "right").dirac_zdag(1, "right")


# -- Hermitian kernel: closed forms -------------------------------------------------


def _mv_scalar(n: int, x) -> Multivector:
    return Multivector.scalar(2 * n, x)


def _beta_plus(n: int, c: int) -> Multivector:
    return beta_element(n) + _mv_scalar(n, c)


def _n_minus_beta_plus(n: int, c: int) -> Multivector:
    return _mv_scalar(n, n + c) - beta_element(n)


def dirac1_closed(p: int, q: int, n: int) -> CliffPoly:
    """Stage-1 closed form: the vector-valued result of one operator.

    kappa_{p+1,q+1} (p+1) [ u^+ A^{p-q-1} C^{q+1} D^{q+1} P_{q+1}^{n-1,p-q-1}
                          - z^+ A^{p-q}  C^q      D^{q+1} P_q^{n-1,p-q} ]
    (valid for p > q >= 0; the first term needs p - q - 1 >= 0)."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, q + 1) * (p + 1)
    t1 = _abcd_expand(n, _jacobi_in_s(q + 1, n - 1, p - q - 1), p - q - 1, q + 1, q + 1)
    t2 = _abcd_expand(n, _jacobi_in_s(q, n - 1, p - q), p - q, q, q + 1)
    out = bl["vud"] * t1 - bl["vzd"] * t2
    return out.scale(pref)


def dirac2_closed(p: int, q: int, n: int) -> CliffPoly:
    """Stage-2 closed form: scalar + bivector parts after two operators."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, q + 1) * (p + 1)
    out = (bl["vz"] * bl["vzd"]) * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q), p - q, q - 1, q + 1).scale(p)
    out = out + (bl["vu"] * bl["vud"]) * _abcd_expand(
        n, _jacobi_in_s(q, n, p - q), p - q, q, q).scale(n + p)
    out = out - (bl["vz"] * bl["vud"]) * _abcd_expand(
        n, _jacobi_in_s(q, n, p - q - 1), p - q - 1, q, q + 1).scale(p)
    out = out - (bl["vu"] * bl["vzd"]) * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q + 1), p - q + 1, q - 1, q).scale(n + p)
    out = out - _abcd_expand(
        n, _jacobi_in_s(q, n - 1, p - q), p - q, q, q + 1).mv_left(
        _n_minus_beta_plus(n, 0))
    return out.scale(pref)


def dirac3_closed(p: int, q: int, n: int) -> CliffPoly:
    """Stage-3 closed form: the three-term vector-valued expression."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, q + 1) * (p + 1) * (n + p + q + 1)
    out = bl["vu"].mv_left(_beta_plus(n, p)) * _abcd_expand(
        n, _jacobi_in_s(q, n - 1, p - q), p - q, q, q)
    out = out - (bl["vz"] * bl["vud"] * bl["vu"]) * _abcd_expand(
        n, _jacobi_in_s(q, n, p - q - 1), p - q - 1, q, q).scale(p)
    out = out + (bl["vz"] * bl["vzd"] * bl["vu"]) * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q), p - q, q - 1, q).scale(p)
    return out.scale(pref)


def _dirac4_general(p: int, q: int, n: int) -> CliffPoly:
    """Six-term closed form of the four-operator action, p > q >= 1."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, q + 1) * (p + 1) * (n + p + q + 1)
    bp = _beta_plus(n, p)
    out = _abcd_expand(n, _jacobi_in_s(q, n - 1, p - q), p - q, q, q).mv_left(
        bp * _n_minus_beta_plus(n, q))
    out = out - (bl["zwzd"] * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q), p - q, q - 1, q)).mv_left(bp).scale(p)
    out = out - (bl["uwud"] * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q), p - q, q, q - 1)).mv_left(bp).scale(p)
    out = out - (bl["zdu"] * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q + 1), p - q + 1, q - 1, q - 1)).mv_left(
        bp).scale(n + p)
    out = out - (bl["zud"] * _abcd_expand(
        n, _jacobi_in_s(q, n, p - q - 1), p - q - 1, q, q)).mv_left(
        _n_minus_beta_plus(n, q)).scale(p)
    out = out + (bl["four"] * _abcd_expand(
        n, _jacobi_in_s(q - 1, n, p - q), p - q, q - 1, q - 1)).scale(
        p * (n + p + q))
    return out.scale(pref)


def _dirac4_qzero(p: int, n: int) -> CliffPoly:
    """Closed form at q = 0, p >= 1: the two-term expression behind the
    left factor n - beta."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, 1) * (p + 1) * (n + p + 1)
    Ap = _powers(bl["A"], p)
    inner = Ap[p].mv_left(_beta_plus(n, p)) - (bl["zud"] * Ap[p - 1]).scale(p)
    return inner.mv_left(_n_minus_beta_plus(n, 0)).scale(pref)


def _dirac4_diagonal(p: int, n: int) -> CliffPoly:
    """Closed form at p = q: six terms with both pairing polynomials."""
    bl = _blocks(n)
    pref = kappa(n, p + 1, p + 1) * (p + 1) * (n + 2 * p + 1)
    bp = _beta_plus(n, p)
    out = _abcd_expand(n, _jacobi_in_s(p, n - 1, 0), 0, p, p).mv_left(
        bp * _n_minus_beta_plus(n, p))
    if p >= 1:
        out = out - (bl["zwzd"] * _abcd_expand(
            n, _jacobi_in_s(p - 1, n, 0), 0, p - 1, p)).mv_left(bp).scale(p)
        out = out - (bl["uwud"] * _abcd_expand(
            n, _jacobi_in_s(p - 1, n, 0), 0, p, p - 1)).mv_left(bp).scale(p)
        out = out - (bl["A"] * bl["zdu"] * _abcd_expand(
            n, _jacobi_in_s(p - 1, n, 1), 0, p - 1, p - 1)).mv_left(bp).scale(n + p)
        out = out - (bl["B"] * bl["zud"] * _abcd_expand(
            n, _jacobi_in_s(p - 1, n, 1), 0, p - 1, p - 1)).mv_left(
            _n_minus_beta_plus(n, p)).scale(n + p)
        out = out + (bl["four"] * _abcd_expand(
            n, _jacobi_in_s(p - 1, n, 0), 0, p - 1, p - 1)).scale(
            p * (n + 2 * p))
    return out.scale(pref)


def hermitian_kernel_raw_closed(p: int, q: int, n: int) -> CliffPoly:
    """The unnormalised four-operator result from its case-split closed form."""

    def build():
        if p > q >= 1:
            out = _dirac4_general(p, q, n)
        elif q == 0 and p >= 1:
            out = _dirac4_qzero(p, n)
        elif p == q:
            out = _dirac4_diagonal(p, n)
        else:
            # p < q: swap the slots of the mirror kernel and reverse the blades
            out = hermitian_kernel_raw_closed(q, p, n).swap_slots().pure_reverse()
        if out.grades() - {0, 2, 4}:
            raise AssertionError("four-operator action left grades {0, 2, 4}")
        return out

    return _kcached(("rawclosed", p, q, n), build)


def hermitian_kernel_closed(p: int, q: int, n: int) -> KernelPoly:
    """The reproducing kernel of the bidegree-(p,q) spherical Hermitian
    monogenics: the case-split closed form, normalised by d_{p,q}(beta)."""
    if n < 2 or p < 0 or q < 0:
        raise ValueError("hermitian kernel needs n >= 2, p, q >= 0")
    out = hermitian_kernel_raw_closed(p, q, n).mv_left(normalization_dpq(p, q, n))
    kp = KernelPoly("hermitian-closed", {"p": p, "q": q, "n": n}, out,
                    {"first": (p, q), "second": (q, p)})
    _check_hermitian_grades(kp, p, q, n)
    return kp
