import random

import pytest
from gmpy2 import mpq

from cliffkernels.clifford import Multivector, beta
from cliffkernels.cliffpoly import (CliffPoly, OperatorTag, apply, complex_monomial,
                                    fischer_inner, fischer_pair, format_cliffpoly,
                                    hermitian_vector, monomial_exponents,
                                    parse_cliffpoly, sphere_inner, sphere_pair,
                                    vector_variable, verify_duality,
                                    verify_laplace_factorisations,
                                    verify_superalgebra)
from cliffkernels.exactnum import GaussianRational, factorial


def mono(m, *exps, coef=1):
    return CliffPoly.monomial(m, exps, coef)


def test_euler_is_degree():
    P = mono(3, 2, 1, 0)
    assert P.euler() == P.scale(3)
    assert apply(OperatorTag.EulerE, P) == P.scale(3)


def test_dirac_on_vector_variable():
    # dx applied to the vector variable gives -m
    for m in (2, 3, 5):
        x = vector_variable(m)
        assert x.dirac_x() == CliffPoly.scalar_poly(m, -m)


def test_dirac_z_on_hermitian_vector():
    for n in (1, 2, 3):
        z = hermitian_vector(n)
        assert z.dirac_z() == CliffPoly.monomial(2 * n, (0,) * (2 * n), beta(n))


def test_laplacian_examples():
    P = mono(3, 2, 0, 0) + mono(3, 0, 2, 0)
    assert P.laplacian() == CliffPoly.scalar_poly(3, 4)
    Q = mono(3, 2, 0, 0) - mono(3, 0, 2, 0)
    assert Q.laplacian().is_zero()


def test_laplace_factorisation_random():
    rng = random.Random(2)
    for m in (2, 3, 5):
        for _ in range(5):
            P = CliffPoly.zero(m)
            for e in monomial_exponents(m, rng.randint(0, 4)):
                if rng.random() < 0.4:
                    P = P + CliffPoly.monomial(m, e, rng.randint(-3, 3))
            assert P.laplacian() == -(P.dirac_x().dirac_x())


def test_apply_errors():
    P = mono(3, 1, 0, 0)
    with pytest.raises(ValueError):
        apply(OperatorTag.EulerEz, P)  # odd dimension
    with pytest.raises(ValueError):
        apply(OperatorTag.VecX, P, side="right")
    with pytest.raises(ValueError):
        apply(OperatorTag.EulerE, P, side="sideways")
    P4 = mono(4, 1, 0, 0, 0)
    assert apply(OperatorTag.DiracZ, P4, side="right") is not None


def test_bidegree():
    n = 2
    P = complex_monomial(n, (1, 0), (0, 1))
    assert P.bidegree() == (1, 1)
    assert P.euler_z() == P.scale(1)
    assert P.euler_zbar() == P.scale(1)
    Q = complex_monomial(n, (2, 0), (0, 0))
    assert Q.bidegree() == (2, 0)


def test_euler_split():
    n = 2
    for e in monomial_exponents(2 * n, 3):
        P = CliffPoly.monomial(2 * n, e)
        assert P.euler_z() + P.euler_zbar() == P.euler()


def test_monomial_counts():
    from cliffkernels.exactnum import binomial
    for m in (2, 3, 4):
        for k in range(5):
            assert len(monomial_exponents(m, k)) == binomial(m + k - 1, k)


def test_bidegree_direct_sum_count():
    # P_k splits into the bidegree pieces
    from cliffkernels.spaces import bidegree_monomials, dim_P
    n = 2
    for k in range(4):
        total = sum(len(bidegree_monomials(n, p, k - p)) for p in range(k + 1))
        assert total == dim_P(2 * n, k)


def test_fischer_monomial_norm():
    for k in range(5):
        P = mono(3, k, 0, 0)
        assert fischer_inner(P, P) == Multivector.scalar(3, factorial(k))


def test_fischer_cross_degree_zero():
    rng = random.Random(4)
    for _ in range(5):
        k, l = rng.randint(0, 3), rng.randint(0, 3)
        if k == l:
            l += 1
        P = CliffPoly.monomial(3, random.choice(monomial_exponents(3, k)))
        Q = CliffPoly.monomial(3, random.choice(monomial_exponents(3, l)))
        assert fischer_inner(P, Q).is_zero()


def test_fischer_kernel_reproduces():
    # <x,y>^k/k! against random degree-k polynomials
    from cliffkernels.kernels import _pairing_xy
    rng = random.Random(9)
    for m in (2, 3, 4):
        for k in range(4):
            Z = CliffPoly.one(m, 2)
            for _ in range(k):
                Z = Z * _pairing_xy(m)
            Z = Z.scale(mpq(1, factorial(k)))
            P = CliffPoly.zero(m)
            for e in monomial_exponents(m, k):
                P = P + CliffPoly.monomial(m, e, rng.randint(-3, 3))
            assert fischer_pair(Z, P) == P


def test_sphere_moments():
    one = CliffPoly.one(3)
    assert sphere_inner(one, one) == Multivector.scalar(3, 1)
    x1 = mono(3, 1, 0, 0)
    assert sphere_inner(x1, x1) == Multivector.scalar(3, mpq(1, 3))
    # odd moments vanish
    assert sphere_inner(one, x1).is_zero()
    x14 = mono(3, 4, 0, 0)
    assert sphere_inner(one, x14) == Multivector.scalar(3, mpq(1, 5))


def test_sphere_pair_matches_sphere_inner():
    # pairing a two-slot kernel equals slotwise inner products
    from cliffkernels.kernels import zonal_harmonic
    m, k = 3, 2
    K = zonal_harmonic(k, m).poly
    from cliffkernels.spaces import basis_H
    for h in basis_H(m, k):
        got = sphere_pair(K, h)
        assert got == h


def test_inner_conjugate_symmetry():
    rng = random.Random(12)
    m = 3
    for _ in range(5):
        P = CliffPoly.zero(m)
        Q = CliffPoly.zero(m)
        for e in monomial_exponents(m, 2):
            P = P + CliffPoly.monomial(m, e, GaussianRational(rng.randint(-2, 2),
                                                              rng.randint(-2, 2)))
            Q = Q + CliffPoly.monomial(m, e, GaussianRational(rng.randint(-2, 2),
                                                              rng.randint(-2, 2)))
        assert fischer_inner(P, Q).conjugate() == fischer_inner(Q, P)
        assert sphere_inner(P, Q).conjugate() == sphere_inner(Q, P)


def test_right_left_dirac_bridge_sign():
    # (P dx)^+ = -dx (P^+)
    P = mono(4, 1, 0, 0, 0, coef=Multivector.blade(4, [1, 2]))
    assert P.dirac_x(0, "right").conjugate() == -(P.conjugate().dirac_x(0, "left"))


def test_superalgebra_sweeps():
    checks, failures = verify_superalgebra(4, m=3, n=2)
    assert failures == [] and checks > 0
    checks, failures = verify_laplace_factorisations(4, n=2)
    assert failures == []
    checks, failures = verify_duality(3, m=3, n=2)
    assert failures == []


def test_mv_left_right_order():
    e1 = Multivector.basis_vector(3, 1)
    e2 = Multivector.basis_vector(3, 2)
    P = mono(3, 1, 0, 0, coef=e1)
    assert P.mv_left(e2).coefficient((1, 0, 0)) == e2 * e1
    assert P.mv_right(e2).coefficient((1, 0, 0)) == e1 * e2


def test_swap_and_reverse():
    K = CliffPoly.monomial(3, (1, 0, 0, 0, 2, 0), Multivector.blade(3, [1, 2]),
                           nslots=2)
    S = K.swap_slots()
    assert S.coefficient((0, 2, 0, 1, 0, 0)) == Multivector.blade(3, [1, 2])
    assert S.swap_slots() == K
    assert K.pure_reverse().pure_reverse() == K
    # reversal flips the bivector sign but does not conjugate scalars
    C = CliffPoly.monomial(3, (1, 0, 0), Multivector.blade(3, [1, 2], GaussianRational(0, 1)))
    assert C.pure_reverse() == -C


def test_format_parse_roundtrip_pair():
    rng = random.Random(3)
    for _ in range(6):
        P = CliffPoly.zero(3, 2)
        for _ in range(4):
            e = [rng.randint(0, 2) for _ in range(6)]
            c = GaussianRational(mpq(rng.randint(-4, 4), rng.randint(1, 3)),
                                 mpq(rng.randint(-4, 4), rng.randint(1, 3)))
            blade = rng.randrange(8)
            P = P + CliffPoly.monomial(3, e, Multivector(3, {blade: c}), nslots=2)
        assert parse_cliffpoly(format_cliffpoly(P), 3, 2) == P


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_cliffpoly("x9", 3)
    with pytest.raises(ValueError):
        parse_cliffpoly("y1", 3)  # pair variable on single roster
    with pytest.raises(ValueError):
        parse_cliffpoly("1*e9", 3)


def test_roster_mismatch():
    with pytest.raises(ValueError):
        mono(3, 1, 0, 0) * CliffPoly.one(4)
    with pytest.raises(ValueError):
        fischer_inner(CliffPoly.one(3, 2), CliffPoly.one(3, 2))
