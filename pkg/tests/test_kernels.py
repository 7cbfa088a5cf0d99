import pytest
from gmpy2 import mpq

from cliffkernels.clifford import Multivector, beta, lagrange_at_beta
from cliffkernels.cliffpoly import CliffPoly, SpherePairer
from cliffkernels.exactnum import GaussianRational
from cliffkernels.kernels import (KernelPoly, _pairing_xy, _wedge_xy, dirac1_closed,
                                  dirac2_closed, dirac3_closed,
                                  hermitian_kernel_closed,
                                  hermitian_kernel_operational,
                                  hermitian_kernel_raw_closed,
                                  hermitian_order_swapped, hermitian_stages,
                                  koornwinder_kernel, monogenic_constant,
                                  monogenic_kernel_closed,
                                  monogenic_kernel_operational,
                                  normalization_coefficients, normalization_dpq,
                                  zonal_harmonic)
from cliffkernels.spaces import basis_H, basis_H_pq, basis_M_pq


def test_zonal_small():
    assert zonal_harmonic(0, 3).poly == CliffPoly.one(3, 2)
    for m in (2, 3, 4, 5):
        assert zonal_harmonic(1, m).poly == _pairing_xy(m).scale(m)


def test_zonal_bihomogeneous_and_harmonic():
    for m in (2, 3, 4):
        for k in range(4):
            K = zonal_harmonic(k, m)
            assert K.poly.homogeneous_degree(0) == k
            assert K.poly.homogeneous_degree(1) == k
            assert K.poly.laplacian(0).is_zero()
            assert K.poly.grades() <= {0}


def test_zonal_trace_is_dimension():
    # summing <K_k(., y), h_i being an orthonormal-free reproduction> is
    # equivalent to: the kernel pairs to dim H_k against itself on the
    # diagonal; cheap proxy: reproduction over the full basis
    m, k = 3, 2
    pair = SpherePairer(zonal_harmonic(k, m).poly)
    for h in basis_H(m, k):
        assert pair.pair(h) == h


def test_koornwinder_small():
    n = 2
    assert koornwinder_kernel(0, 0, n).poly == CliffPoly.one(4, 2)
    # bidegree (1,0) kernel is n<z,u>: the trace normalisation makes the
    # constant n, the dimension of the (1,0) harmonics
    from cliffkernels.kernels import _blocks
    for n in (2, 3):
        K = koornwinder_kernel(1, 0, n)
        assert K.poly == _blocks(n)["A"].scale(n)


def test_koornwinder_symmetry():
    for n in (2, 3):
        for (p, q) in [(1, 0), (2, 1), (2, 0)]:
            a = koornwinder_kernel(p, q, n).poly
            b = koornwinder_kernel(q, p, n).poly
            assert a == b.conj_coefficients()
            assert a == b.swap_slots()


def test_koornwinder_reproduction_spot():
    n = 2
    pair = SpherePairer(koornwinder_kernel(1, 1, n).poly)
    for h in basis_H_pq(n, 1, 1):
        assert pair.pair(h) == h
    for h in basis_H_pq(n, 1, 0):
        assert pair.pair(h).is_zero()


def test_monogenic_closed_small():
    for m in (3, 4):
        assert monogenic_kernel_closed(0, m).poly == CliffPoly.one(m, 2)
        want = _pairing_xy(m).scale(m - 1) + _wedge_xy(m)
        assert monogenic_kernel_closed(1, m).poly == want


def test_monogenic_operational_equals_closed():
    for m in (3, 4):
        for k in range(3):
            assert (monogenic_kernel_operational(k, m).poly
                    == monogenic_kernel_closed(k, m).poly)
    assert monogenic_constant(1, 4) == mpq(-1, 36)


def test_monogenic_grade_support():
    for m in (3, 4):
        for k in range(3):
            assert monogenic_kernel_closed(k, m).poly.grades() <= {0, 2}


def test_monogenic_kernel_is_monogenic():
    for m in (3, 4):
        for k in range(3):
            K = monogenic_kernel_closed(k, m).poly
            assert K.dirac_x(0, "left").is_zero()


def test_hermitian_stages_match_lemmas():
    p, q, n = 2, 1, 2
    s = hermitian_stages(p, q, n)
    assert s[0] == dirac1_closed(p, q, n)
    assert s[1] == dirac2_closed(p, q, n)
    assert s[2] == dirac3_closed(p, q, n)
    assert s[3] == hermitian_kernel_raw_closed(p, q, n)


def test_hermitian_edge_cases_match():
    for n in (2, 3):
        for (p, q) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 2)]:
            a = hermitian_kernel_operational(p, q, n).poly
            b = hermitian_kernel_closed(p, q, n).poly
            assert a == b, (n, p, q)


def test_hermitian_kernel_h_monogenic():
    for (p, q, n) in [(1, 0, 2), (1, 1, 2), (2, 1, 2)]:
        K = hermitian_kernel_operational(p, q, n).poly
        assert K.dirac_z(0).is_zero()
        assert K.dirac_zdag(0).is_zero()
        assert K.laplacian(0).is_zero() and K.laplacian(1).is_zero()


def test_order_independence():
    for (p, q, n) in [(1, 0, 2), (1, 1, 2), (2, 1, 2)]:
        assert hermitian_stages(p, q, n)[3] == hermitian_order_swapped(p, q, n)


def test_mirror_symmetry():
    # the p < q closed form is the slot-swapped blade-reversal of its mirror
    n = 2
    a = hermitian_kernel_raw_closed(1, 2, n)
    b = hermitian_kernel_raw_closed(2, 1, n).swap_slots().pure_reverse()
    assert a == b


def test_grade_support_hermitian():
    for (p, q, n) in [(1, 1, 2), (2, 1, 2), (2, 2, 2)]:
        assert hermitian_kernel_operational(p, q, n).poly.grades() <= {0, 2, 4}


def test_normalization_identity():
    for n in (1, 2, 3, 4):
        b = beta(n)
        for p in (1, 2, 3):
            for q in (1, 2, 3):
                d = normalization_dpq(p, q, n)
                lhs = (Multivector.scalar(2 * n, n + q) - b) \
                    * (b + Multivector.scalar(2 * n, p)) * d
                lhs = lhs * GaussianRational((n + p + q + 1) ** 2)
                assert lhs == Multivector.scalar(2 * n, 1)


def test_normalization_dropped_nodes():
    coeffs, dropped = normalization_coefficients(2, 0, 3)
    assert dropped == (3,)
    coeffs, dropped = normalization_coefficients(0, 2, 3)
    assert dropped == (0,)
    coeffs, dropped = normalization_coefficients(0, 0, 2)
    assert set(dropped) == {0, 2}
    coeffs, dropped = normalization_coefficients(1, 1, 3)
    assert dropped == ()
    assert coeffs[1] == mpq(1, 36 * 3 * 2)


def test_lagrange_partition():
    for n in (1, 2, 3):
        total = Multivector.zero(2 * n)
        for j in range(n + 1):
            total = total + lagrange_at_beta(n, j)
        assert total == Multivector.scalar(2 * n, 1)


def test_kernel_validation():
    with pytest.raises(ValueError):
        zonal_harmonic(1, 1)
    with pytest.raises(ValueError):
        monogenic_kernel_closed(0, 2)
    with pytest.raises(ValueError):
        koornwinder_kernel(1, 0, 1)
    with pytest.raises(ValueError):
        KernelPoly("bogus", {}, CliffPoly.monomial(3, (1, 0, 0, 0, 0, 0), nslots=2),
                   {"first": 2, "second": 0})
