import random

from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from cliffkernels.clifford import (Multivector, beta, blade_mul, format_multivector,
                                   lagrange_at_beta, parse_multivector, spinor_basis,
                                   spinor_vacuum, vector_dot, wedge, witt, witt_dagger)
from cliffkernels.exactnum import GaussianRational


def naive_blade_mul(a: int, b: int):
    """Sort-based oracle for the blade product sign."""
    seq = [i for i in range(16) if a & (1 << i)] + [i for i in range(16) if b & (1 << i)]
    sign = 1
    # bubble sort, counting transpositions
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
    # contract adjacent equal generators with e^2 = -1
    out = []
    for g in seq:
        if out and out[-1] == g:
            out.pop()
            sign = -sign
        else:
            out.append(g)
    mask = 0
    for g in out:
        mask |= 1 << g
    return sign, mask


@given(st.integers(0, 63), st.integers(0, 63))
def test_blade_product_against_oracle(a, b):
    assert blade_mul(a, b) == naive_blade_mul(a, b)


def random_mv(m, rng, grades=None):
    mv = Multivector.zero(m)
    for _ in range(4):
        blade = rng.randrange(2 ** m)
        if grades is not None and blade.bit_count() not in grades:
            continue
        c = GaussianRational(mpq(rng.randint(-4, 4), rng.randint(1, 3)),
                             mpq(rng.randint(-4, 4), rng.randint(1, 3)))
        mv = mv + Multivector(m, {blade: c})
    return mv


def test_generator_relations():
    for m in range(1, 7):
        for j in range(1, m + 1):
            for k in range(1, m + 1):
                ej = Multivector.basis_vector(m, j)
                ek = Multivector.basis_vector(m, k)
                want = Multivector.scalar(m, -2 if j == k else 0)
                assert ej * ek + ek * ej == want


def test_unit_and_associativity():
    rng = random.Random(7)
    for m in (2, 3, 5):
        one = Multivector.scalar(m, 1)
        for _ in range(5):
            x, y, z = (random_mv(m, rng) for _ in range(3))
            assert one * x == x and x * one == x
            assert (x * y) * z == x * (y * z)


def test_conjugation_antiautomorphism():
    rng = random.Random(3)
    for m in (2, 3, 4, 5):
        for _ in range(6):
            x, y = random_mv(m, rng), random_mv(m, rng)
            assert (x * y).conjugate() == y.conjugate() * x.conjugate()
            assert x.conjugate().conjugate() == x


def test_conjugation_examples():
    m = 3
    e1 = Multivector.basis_vector(m, 1)
    assert e1.conjugate() == -e1
    e12 = Multivector.blade(m, [1, 2])
    assert e12.conjugate() == -e12
    i_scalar = Multivector.scalar(m, GaussianRational(0, 1))
    assert i_scalar.conjugate() == Multivector.scalar(m, GaussianRational(0, -1))


def test_vector_product_split():
    m = 3
    e1 = Multivector.basis_vector(m, 1)
    e2 = Multivector.basis_vector(m, 2)
    x = e1 + e2
    y = e2
    assert x * y == wedge(x, y) - Multivector.scalar(m, vector_dot(x, y))
    assert wedge(e1, e1).is_zero()
    assert vector_dot(e1, e2) == GaussianRational(0)
    assert vector_dot(x, y) == GaussianRational(1)
    assert (e1 * e2) == Multivector.blade(m, [1, 2])
    assert (e2 * e1) == -Multivector.blade(m, [1, 2])


def test_grade1_products_stay_in_grades_0_2():
    rng = random.Random(11)
    for m in (3, 4, 5):
        for _ in range(5):
            x = random_mv(m, rng, grades={1})
            y = random_mv(m, rng, grades={1})
            assert (x * y).grades() <= {0, 2}


def test_witt_relations():
    for n in range(1, 5):
        m = 2 * n
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                fj, fk = witt(n, j), witt(n, k)
                fjd, fkd = witt_dagger(n, j), witt_dagger(n, k)
                assert fj * fkd + fkd * fj == Multivector.scalar(m, 1 if j == k else 0)
                assert (fj * fk + fk * fj).is_zero()
                assert (fjd * fkd + fkd * fjd).is_zero()
        assert witt(n, 1).conjugate() == witt_dagger(n, 1)


def test_beta_properties():
    for n in range(1, 5):
        b = beta(n)
        prod = Multivector.scalar(2 * n, 1)
        for j in range(n + 1):
            prod = prod * (b - Multivector.scalar(2 * n, j))
        assert prod.is_zero()
        for j in range(1, n + 1):
            f, fd = witt(n, j), witt_dagger(n, j)
            assert b * f == f * (b - 1)
            assert b * fd == fd * (b + 1)


def test_spinor_basis():
    from cliffkernels.exactnum import binomial
    for n in (1, 2, 3):
        b = beta(n)
        vac = spinor_vacuum(n)
        assert vac * vac == vac
        for j in range(n + 1):
            sb = spinor_basis(n, j)
            assert len(sb.vectors) == binomial(n, j)
            for v in sb.vectors:
                assert b * v == v * j
            # f_k lowers the sector by one
            lower = spinor_basis(n, j - 1).vectors if j else []
            for v in sb.vectors:
                for k in range(1, n + 1):
                    w = witt(n, k) * v
                    if w.is_zero():
                        continue
                    assert b * w == w * (j - 1)
            # independence
            from cliffkernels._linalg import independent
            assert independent([v.terms for v in sb.vectors])


def test_spinor_vacuum_n1_explicit():
    vac = spinor_vacuum(1)
    half = GaussianRational(mpq(1, 2))
    want = Multivector(2, {0: half, 0b11: GaussianRational(0, mpq(-1, 2))})
    assert vac == want


def test_lagrange_at_beta():
    for n in (1, 2, 3, 4):
        b = beta(n)
        total = Multivector.zero(2 * n)
        for j in range(n + 1):
            lj = lagrange_at_beta(n, j)
            total = total + lj
            assert b * lj == lj * j
        assert total == Multivector.scalar(2 * n, 1)
        # symmetry L_j(n - beta) = L_{n-j}(beta)
        for j in range(n + 1):
            shifted = _lagrange_at(n, j, Multivector.scalar(2 * n, n) - b)
            assert shifted == lagrange_at_beta(n, n - j)


def _lagrange_at(n, j, x):
    out = Multivector.scalar(x.m, 1)
    for l in range(n + 1):
        if l == j:
            continue
        out = out * (x - Multivector.scalar(x.m, l)) * GaussianRational(mpq(1, j - l))
    return out


def test_dimension_mismatch_raises():
    import pytest
    with pytest.raises(ValueError):
        Multivector.scalar(2, 1) * Multivector.scalar(3, 1)


def test_format_parse_roundtrip():
    rng = random.Random(5)
    for m in (2, 4, 6):
        for _ in range(8):
            mv = random_mv(m, rng)
            assert parse_multivector(format_multivector(mv), m) == mv
    assert parse_multivector("1/2*e13", 4) == Multivector.blade(4, [1, 3], mpq(1, 2))
    assert parse_multivector("0", 3).is_zero()
