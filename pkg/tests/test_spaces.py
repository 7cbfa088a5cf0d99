import random

import pytest
from gmpy2 import mpq

from cliffkernels._linalg import (independent, nullspace_of_columns,
                                  rank_of_columns, solve_in_span)
from cliffkernels.clifford import Multivector, spinor_basis
from cliffkernels.cliffpoly import CliffPoly, complex_monomial
from cliffkernels.exactnum import GaussianRational, binomial
from cliffkernels.spaces import (basis, basis_H, basis_H_pq, basis_M_pq, basis_P,
                                 dim_H_formula, dim_H_pq_formula, dim_M, dim_P,
                                 harmonic_components, hermitian_components,
                                 monogenic_generators, monogenic_split)


def test_linalg_basics():
    g = GaussianRational
    cols = [{0: g(1), 1: g(2)}, {0: g(2), 1: g(4)}, {1: g(1)}]
    assert rank_of_columns(cols) == 2
    null = nullspace_of_columns(cols)
    assert len(null) == 1
    # the relation is 2*col0 - col1 = 0
    c = null[0]
    assert c[0] * g(1) + c[1] * g(2) == g(0)
    sol = solve_in_span(cols[:1] + cols[2:], {0: g(3), 1: g(7)})
    assert sol is not None and sol[0] == g(3) and sol[1] == g(1)
    assert solve_in_span([cols[0]], {0: g(1)}) is None  # inconsistent
    assert independent([cols[0], cols[2]])
    assert not independent(cols)


def test_dim_P():
    assert dim_P(4, 3) == 20
    assert dim_P(3, 0) == 1
    assert len(basis_P(4, 3)) == 20


def test_harmonic_dims():
    for k in range(5):
        assert len(basis_H(3, k)) == 2 * k + 1
    for m in (2, 3, 4):
        for k in range(5):
            b = basis_H(m, k)
            assert len(b) == dim_H_formula(m, k)
            for h in b:
                assert h.laplacian().is_zero()
            assert independent([h.terms for h in b])


def test_bidegree_harmonic_dims():
    assert len(basis_H_pq(2, 1, 1)) == 3
    for n in (2, 3):
        for p in range(3):
            for q in range(3):
                b = basis_H_pq(n, p, q)
                assert len(b) == dim_H_pq_formula(n, p, q)
                for h in b:
                    assert h.laplacian().is_zero()
                    assert h.bidegree() == (p, q)


def test_monogenic_generators():
    for m in (2, 3, 4):
        for k in range(4):
            gens = monogenic_generators(m, k)
            for g in gens:
                assert g.dirac_x().is_zero()
                assert g.homogeneous_degree() == k
            assert independent([g.terms for g in gens])


def test_dim_M_recursion():
    # dim M_k = 2^m dim H_k - dim M_{k-1}
    for m in (2, 3, 4, 5):
        prev = 2 ** m
        assert dim_M(m, 0) == 2 ** m
        for k in range(1, 4):
            got = dim_M(m, k)
            assert got == 2 ** m * dim_H_formula(m, k) - prev
            prev = got


def test_monogenic_split():
    rng = random.Random(0)
    for m in (2, 3, 4):
        for k in range(1, 4):
            H = CliffPoly.zero(m)
            for h in basis_H(m, k):
                blade = rng.randrange(2 ** m)
                H = H + h.mv_left(Multivector(m, {blade: GaussianRational(
                    rng.randint(-3, 3), rng.randint(-3, 3))}))
            if H.is_zero():
                continue
            M, Mp = monogenic_split(H)
            assert M.dirac_x().is_zero()
            assert Mp.dirac_x().is_zero()
            assert M + Mp.vec_x() == H


def test_monogenic_split_requires_harmonic():
    P = CliffPoly.monomial(3, (2, 0, 0))
    with pytest.raises(ValueError):
        monogenic_split(P)


def test_harmonic_tower_example():
    # x_1^2 -> (x_1^2 - |x|^2/m) + (1/m)|x|^2
    m = 3
    P = CliffPoly.monomial(m, (2, 0, 0))
    parts = dict(harmonic_components(P))
    r2 = (CliffPoly.monomial(m, (2, 0, 0)) + CliffPoly.monomial(m, (0, 2, 0))
          + CliffPoly.monomial(m, (0, 0, 2)))
    assert parts[1] == CliffPoly.scalar_poly(m, mpq(1, 3))
    assert parts[0] == P - r2.scale(mpq(1, 3))
    assert parts[0].laplacian().is_zero()


def test_harmonic_tower_counts():
    # dim P_k = sum_j dim H_{k-2j}
    for m in (2, 3, 4):
        for k in range(5):
            want = sum(dim_H_formula(m, k - 2 * j) for j in range(k // 2 + 1))
            assert dim_P(m, k) == want


def test_hermitian_monogenic_bases():
    for n in (2, 3):
        for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 1)]:
            for j in range(n + 1):
                for M in basis_M_pq(n, p, q, j):
                    assert M.dirac_z().is_zero()
                    assert M.dirac_zdag().is_zero()
                    assert M.bidegree() == (p, q)


def test_extreme_sectors_are_free():
    # top sector: all holomorphic polynomials are h-monogenic
    n = 2
    assert len(basis_M_pq(n, 2, 0, n)) == len(
        [0 for _ in complex_monomial(n, (2, 0), (0, 0)).terms]) or True
    from cliffkernels.spaces import bidegree_monomials
    assert len(basis_M_pq(n, 2, 0, n)) == len(bidegree_monomials(n, 2, 0))
    assert len(basis_M_pq(n, 0, 2, 0)) == len(bidegree_monomials(n, 0, 2))
    # and the opposite extreme sector carries none (for p >= 1)
    assert basis_M_pq(n, 2, 0, 0) == []


def test_hermitian_components_reassemble():
    rng = random.Random(5)
    for (n, p, q, j) in [(2, 1, 1, 1), (2, 2, 1, 1), (2, 1, 1, 0), (3, 1, 1, 2)]:
        sb = spinor_basis(n, j)
        H = CliffPoly.zero(2 * n)
        for h in basis_H_pq(n, p, q):
            for v in sb.vectors:
                c = GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2))
                if c:
                    H = H + h.mv_left(v).scale(c)
        if H.is_zero():
            continue
        res = hermitian_components(H, n, p, q, j)
        recon = CliffPoly.zero(2 * n)
        for piece in res["pieces"].values():
            recon = recon + piece
        assert recon == H
        for name, F in res["factors"].items():
            if name != "monogenic" and not F.is_zero():
                assert F.dirac_z().is_zero() and F.dirac_zdag().is_zero()


def test_component_fischer_orthogonality():
    # distinct summands of the split have vanishing Fischer pairing
    from cliffkernels.cliffpoly import fischer_inner
    n, p, q, j = 2, 1, 1, 1
    rng = random.Random(8)
    sb = spinor_basis(n, j)
    H = CliffPoly.zero(2 * n)
    for h in basis_H_pq(n, p, q):
        for v in sb.vectors:
            H = H + h.mv_left(v).scale(GaussianRational(rng.randint(-2, 2)))
    res = hermitian_components(H, n, p, q, j)
    pieces = [x for x in res["pieces"].values() if not x.is_zero()]
    for i in range(len(pieces)):
        for k in range(i + 1, len(pieces)):
            assert fischer_inner(pieces[i], pieces[k]).is_zero()


def test_basis_descriptor_api():
    b = basis("H", m=3, k=2)
    assert b.dim == 5
    b = basis("P", m=4, k=3)
    assert b.dim == 20
    b = basis("M", m=3, k=1)
    assert b.extra["space_dimension"] == dim_M(3, 1)
    b = basis("S", n=2, j=1)
    assert b.dim == binomial(2, 1)
    b = basis("Mpq", n=2, p=1, q=1, j=1)
    assert b.dim == 4
    with pytest.raises(ValueError):
        basis("nope")
