from gmpy2 import mpq

from cliffkernels.exactnum import binomial
from cliffkernels.orthopoly import (OrthoPoly, gegenbauer, jacobi, kappa, pder,
                                    peval, pscale, psub, verify_family_bridge,
                                    verify_gegenbauer_relations,
                                    verify_jacobi_recurrences,
                                    verify_jacobi_special,
                                    zonal_gegenbauer_coeffs)


def test_jacobi_constructors():
    assert jacobi(0, 2, 3).coeffs == (mpq(1),)
    # expansion oracle by hand: 2 + (3/2)(x-1) = (3x+1)/2
    assert jacobi(1, 1, 0).coeffs == (mpq(1, 2), mpq(3, 2))
    z = jacobi(-1, 1, 1)
    assert z.degree == -1 and z.coeffs == ()
    assert jacobi(4, mpq(1, 2), mpq(3, 2)).degree == 4


def test_jacobi_value_at_one():
    # P_k(1) = C(k+a, k)
    for k in range(6):
        for a in range(4):
            assert peval(jacobi(k, a, 1).coeffs, 1) == binomial(k + a, k)


def test_jacobi_parameter_domain():
    import pytest
    with pytest.raises(ValueError):
        jacobi(2, -1, 0)
    with pytest.raises(ValueError):
        gegenbauer(2, mpq(-1, 2))


def test_gegenbauer_constructors():
    assert gegenbauer(0, mpq(7, 2)).coeffs == (mpq(1),)
    assert gegenbauer(1, mpq(5, 2)).coeffs == (mpq(0), mpq(5))
    # brute-force series expansion oracle
    assert gegenbauer(3, 1).coeffs == (mpq(0), mpq(-4), mpq(0), mpq(8))
    assert gegenbauer(-1, 1).degree == -1


def test_degree_bookkeeping():
    for k in range(7):
        assert jacobi(k, 1, 2).degree == k
        assert len(jacobi(k, 1, 2).coeffs) == k + 1


def test_zonal_ratio_chebyshev_limit():
    # at mu = 0 the ratio collapses to twice the Chebyshev polynomial
    assert zonal_gegenbauer_coeffs(0, 0) == (mpq(1),)
    assert zonal_gegenbauer_coeffs(1, 0) == (mpq(0), mpq(2))
    assert zonal_gegenbauer_coeffs(3, 0) == (mpq(0), mpq(-6), mpq(0), mpq(8))
    # and for mu > 0 it is just ((k+mu)/mu) C_k^mu
    for k in range(6):
        for mu in (mpq(1, 2), 1, mpq(3, 2)):
            want = pscale(gegenbauer(k, mu).coeffs, (k + mu) / mu)
            assert zonal_gegenbauer_coeffs(k, mu) == want


def test_jacobi_recurrences_sweep():
    checks, failures = verify_jacobi_recurrences(6, range(5), range(5))
    assert failures == []
    assert checks > 0


def test_jacobi_recurrence_halfinteger_params():
    checks, failures = verify_jacobi_recurrences(
        4, [mpq(1, 2), mpq(3, 2)], [mpq(-1, 2), mpq(5, 2)])
    assert failures == []


def test_jacobi_derivative_example():
    assert psub(pder(jacobi(2, 1, 1).coeffs),
                pscale(jacobi(1, 2, 2).coeffs, mpq(5, 2))) == ()


def test_jacobi_special_sweep():
    checks, failures = verify_jacobi_special(4, [2, 3, 4], 6)
    assert failures == []


def test_jacobi8_q0_binomial_identity():
    # at q = 0 the expansion reduces to a pure binomial identity
    for n in (2, 3, 4):
        for p in range(1, 7):
            assert binomial(n - 1 + p, p) == kappa(n, p, 0)


def test_gegenbauer_sweep():
    checks, failures = verify_gegenbauer_relations(
        8, [mpq(1, 2), 1, mpq(3, 2), 2, mpq(5, 2)])
    assert failures == []


def test_gegen4_example():
    # k=2, mu=1: 2 C_2 - t C_2' = -2 C_0^2
    c2 = gegenbauer(2, 1).coeffs
    assert c2 == (mpq(-1), mpq(0), mpq(4))
    lhs = psub(pscale(c2, 2), (mpq(0), mpq(0), mpq(8)))
    assert lhs == (mpq(-2),)


def test_family_bridge():
    checks, failures = verify_family_bridge(8, [mpq(1, 2), 1, mpq(3, 2), 2])
    assert failures == []


def test_zero_poly_invariants():
    import pytest
    with pytest.raises(ValueError):
        OrthoPoly(("jacobi", mpq(1), mpq(1)), 2, (mpq(1), mpq(0), mpq(0)))
    with pytest.raises(ValueError):
        OrthoPoly(("jacobi", mpq(1), mpq(1)), -1, (mpq(1),))
