"""Exact bases and decompositions of the polynomial null-solution spaces.

Spaces handled: homogeneous polynomials, harmonics (real and bihomogeneous),
monogenics (null-solutions of the Euclidean first-order operator) and
spinor-valued Hermitian monogenics.  Bases come from exact null-spaces of
the defining operator on the monomial lattice; no floating point, every
dimension is an exact rank.

The Euclidean monogenics form a right module over the algebra, so the
reproduction-grade basis returned here is a right-module generator set
obtained from an explicit projector; its right multiples span the full
space and everything tested against it extends right-linearly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from gmpy2 import mpq

from ._linalg import independent, nullspace_of_columns, rank_of_columns, solve_in_span
from .clifford import Multivector, spinor_basis, witt, witt_dagger
from .cliffpoly import CliffPoly, complex_monomial, monomial_exponents
from .exactnum import GaussianRational, binomial


@dataclass
class PolySpaceBasis:
    """An exact basis of one of the named spaces.

    elements are linearly independent (verified by exact rank at build
    time); extra carries side facts such as the full right-module dimension
    when elements generate a module rather than span the space directly."""

    descriptor: dict
    elements: list
    dim: int
    extra: dict = field(default_factory=dict)


_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def _cached(key, build):
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    value = build()
    with _CACHE_LOCK:
        return _CACHE.setdefault(key, value)


# -- dimensions ----------------------------------------------------------------


def dim_P(m: int, k: int) -> int:
    return binomial(m + k - 1, k) if k >= 0 else 0


def dim_H_formula(m: int, k: int) -> int:
    return dim_P(m, k) - dim_P(m, k - 2) if k >= 0 else 0


def dim_P_pq(n: int, p: int, q: int) -> int:
    if p < 0 or q < 0:
        return 0
    return binomial(n + p - 1, p) * binomial(n + q - 1, q)


def dim_H_pq_formula(n: int, p: int, q: int) -> int:
    if p < 0 or q < 0:
        return 0
    return dim_P_pq(n, p, q) - dim_P_pq(n, p - 1, q - 1)


# -- scalar harmonics ------------------------------------------------------------


def basis_P(m: int, k: int) -> list:
    return [CliffPoly.monomial(m, e) for e in monomial_exponents(m, k)]


def basis_H(m: int, k: int) -> list:
    """Exact null-space of the Laplacian on the degree-k monomials."""

    def build():
        monos = monomial_exponents(m, k)
        columns = []
        for e in monos:
            col = {}
            for j in range(m):
                if e[j] >= 2:
                    e2 = list(e)
                    e2[j] -= 2
                    key = tuple(e2)
                    c = GaussianRational(e[j] * (e[j] - 1))
                    col[key] = col.get(key, GaussianRational(0)) + c
            columns.append({k2: v for k2, v in col.items() if v})
        combos = nullspace_of_columns(columns)
        out = []
        for vec in combos:
            h = CliffPoly.zero(m)
            for c, e in zip(vec, monos):
                if c:
                    h = h + CliffPoly.monomial(m, e, c)
            out.append(h)
        assert len(out) == dim_H_formula(m, k)
        return out

    return _cached(("H", m, k), build)


# -- bihomogeneous harmonics -------------------------------------------------------


def bidegree_monomials(n: int, p: int, q: int) -> list:
    return [(a, b) for a in monomial_exponents(n, p) for b in monomial_exponents(n, q)]


def basis_H_pq(n: int, p: int, q: int) -> list:
    """Null-space of the Laplacian on the bidegree-(p,q) complex monomials.

    The Laplacian acts on z^a zbar^b as 4 sum_j a_j b_j z^{a-d_j} zbar^{b-d_j},
    so the constraint matrix lives on the complex-monomial lattice and only
    the resulting combinations are expanded into real coordinates."""

    def build():
        monos = bidegree_monomials(n, p, q)
        columns = []
        for a, b in monos:
            col = {}
            for j in range(n):
                if a[j] and b[j]:
                    a2 = list(a)
                    b2 = list(b)
                    a2[j] -= 1
                    b2[j] -= 1
                    col[(tuple(a2), tuple(b2))] = GaussianRational(4 * a[j] * b[j])
            columns.append(col)
        combos = nullspace_of_columns(columns)
        out = []
        for vec in combos:
            h = CliffPoly.zero(2 * n)
            for c, (a, b) in zip(vec, monos):
                if c:
                    h = h + complex_monomial(n, a, b).scale(c)
            out.append(h)
        assert len(out) == dim_H_pq_formula(n, p, q)
        return out

    return _cached(("Hpq", n, p, q), build)


# -- spinor-valued Hermitian monogenics ----------------------------------------------


def basis_M_pq(n: int, p: int, q: int, j: int) -> list:
    """Exact null-space of both Hermitian first-order operators on the
    S^(j)-valued bidegree-(p,q) polynomials."""
    if p < 0 or q < 0 or j < 0 or j > n:
        return []

    def build():
        sb = spinor_basis(n, j)
        monos = bidegree_monomials(n, p, q)
        fdag = [witt_dagger(n, l + 1) for l in range(n)]
        f = [witt(n, l + 1) for l in range(n)]
        up = [[fdag[l] * v for l in range(n)] for v in sb.vectors]
        down = [[f[l] * v for l in range(n)] for v in sb.vectors]
        columns = []
        for a, b in monos:
            for i in range(len(sb.vectors)):
                col: dict = {}
                for l in range(n):
                    if a[l]:
                        a2 = list(a)
                        a2[l] -= 1
                        for blade, c in up[i][l].terms.items():
                            key = ("z", tuple(a2), b, blade)
                            prev = col.get(key)
                            tot = c * a[l] if prev is None else prev + c * a[l]
                            if tot:
                                col[key] = tot
                            elif key in col:
                                del col[key]
                    if b[l]:
                        b2 = list(b)
                        b2[l] -= 1
                        for blade, c in down[i][l].terms.items():
                            key = ("zd", a, tuple(b2), blade)
                            prev = col.get(key)
                            tot = c * b[l] if prev is None else prev + c * b[l]
                            if tot:
                                col[key] = tot
                            elif key in col:
                                del col[key]
                columns.append(col)
        combos = nullspace_of_columns(columns)
        out = []
        for vec in combos:
            P = CliffPoly.zero(2 * n)
            for idx, c in enumerate(vec):
                if not c:
                    continue
                a, b = monos[idx // len(sb.vectors)]
                v = sb.vectors[idx % len(sb.vectors)]
                P = P + complex_monomial(n, a, b).mv_left(v).scale(c)
            out.append(P)
        for P in out:
            assert P.dirac_z().is_zero() and P.dirac_zdag().is_zero()
        return out

    return _cached(("Mpq", n, p, q, j), build)


def dim_M_pq(n: int, p: int, q: int, j: int) -> int:
    return len(basis_M_pq(n, p, q, j))


# -- Euclidean monogenics -----------------------------------------------------------


def monogenic_split(H: CliffPoly):
    """Split a Clifford-valued harmonic into monogenic + vector * monogenic.

    Uses the projector that the anticommutation relation of the vector
    variable and the first-order operator provides:
    M' = -dH/(m+2k-2), M = H - x M'.  Both parts are exactly annihilated.
    """
    k = H.homogeneous_degree()
    if k is None:
        raise ValueError("monogenic_split needs a homogeneous input")
    if not H.laplacian().is_zero():
        raise ValueError("monogenic_split needs a harmonic input")
    m = H.m
    if k == 0:
        return H, CliffPoly.zero(m)
    mprime = H.dirac_x().scale(mpq(-1, m + 2 * k - 2))
    mpart = H - mprime.vec_x()
    assert mpart.dirac_x().is_zero() and mprime.dirac_x().is_zero()
    return mpart, mprime


def monogenic_generators(m: int, k: int) -> list:
    """Right-module generator basis of the degree-k monogenics.

    Projections of the scalar harmonics; linearly independent (exact rank),
    and their right multiples by the 2^m blades span the whole space."""

    def build():
        if k == 0:
            return [CliffPoly.one(m)]
        gens = []
        for h in basis_H(m, k):
            mpart, _ = monogenic_split(h)
            gens.append(mpart)
        assert independent([g.terms for g in gens])
        return gens

    return _cached(("Mgen", m, k), build)


def spinor_column(m: int) -> list[Multivector]:
    """Basis of a minimal left ideal of Cl_m (complex), used to compute
    ranks of left-multiplication operators on a single spinor column."""

    def build():
        if m % 2 == 0:
            n = m // 2
            cols = []
            for j in range(n + 1):
                cols.extend(spinor_basis(n, j).vectors)
            return cols
        # odd m: cut the vacuum of the first 2n generators by the central
        # idempotent (1 + iota)/2, iota the (possibly i-scaled) pseudoscalar
        n = (m - 1) // 2
        vac = Multivector.scalar(m, 1)
        for jj in range(1, n + 1):
            half = GaussianRational(mpq(1, 2))
            mih = GaussianRational(0, mpq(-1, 2))
            fj = Multivector(m, {1 << (jj - 1): half, 1 << (n + jj - 1): mih})
            fjd = Multivector(m, {1 << (jj - 1): -half, 1 << (n + jj - 1): mih})
            vac = vac * (fj * fjd)
        omega = Multivector.blade(m, range(1, m + 1))
        if (omega * omega).scalar_part() == GaussianRational(1):
            iota = omega
        else:
            iota = omega * GaussianRational(0, 1)
        assert (iota * iota) == Multivector.scalar(m, 1)
        eps = vac * (Multivector.scalar(m, 1) + iota) * GaussianRational(mpq(1, 2))
        cols = [eps]
        from itertools import combinations

        for size in range(1, n + 1):
            for subset in combinations(range(1, n + 1), size):
                v = eps
                for a in reversed(subset):
                    half = GaussianRational(mpq(1, 2))
                    mih = GaussianRational(0, mpq(-1, 2))
                    fad = Multivector(m, {1 << (a - 1): -half, 1 << (n + a - 1): mih})
                    v = fad * v
                cols.append(v)
        assert independent([c.terms for c in cols])
        return cols

    return _cached(("column", m), build)


def dim_M(m: int, k: int) -> int:
    """Vector-space dimension of the degree-k monogenics with full Clifford
    values, via the exact rank of the defining operator on one spinor column."""
    if k < 0:
        return 0

    def build():
        cols_mv = spinor_column(m)
        width = len(cols_mv)
        monos = monomial_exponents(m, k)
        ev = [Multivector.basis_vector(m, jj + 1) for jj in range(m)]
        actions = [[ev[jj] * w for jj in range(m)] for w in cols_mv]
        columns = []
        for e in monos:
            for i in range(width):
                col: dict = {}
                for jj in range(m):
                    if not e[jj]:
                        continue
                    e2 = list(e)
                    e2[jj] -= 1
                    for blade, c in actions[i][jj].terms.items():
                        key = (tuple(e2), blade)
                        prev = col.get(key)
                        tot = c * e[jj] if prev is None else prev + c * e[jj]
                        if tot:
                            col[key] = tot
                        elif key in col:
                            del col[key]
                columns.append(col)
        nullity = len(columns) - rank_of_columns(columns)
        return (2 ** m // width) * nullity

    return _cached(("dimM", m, k), build)


# -- decompositions ------------------------------------------------------------------


def harmonic_components(P: CliffPoly) -> list:
    """The harmonic tower of a homogeneous polynomial: parts H_{k-2j} with
    P = sum_j |x|^(2j) H_{k-2j}, solved exactly through the triangular
    action of the Laplacian on |x|^(2j) H."""
    k = P.homogeneous_degree()
    if k is None:
        raise ValueError("harmonic_components needs a homogeneous input")
    m = P.m
    cmax = k // 2
    # Laplacian powers of P
    lap = [P]
    for _ in range(cmax):
        lap.append(lap[-1].laplacian())
    r2 = CliffPoly.zero(m)
    for jj in range(m):
        r2 = r2 + CliffPoly.monomial(m, tuple(2 if t == jj else 0 for t in range(m)))

    def dfac(i: int, j: int, l: int):
        # Delta^i (|x|^2j H_l) = dfac * |x|^(2(j-i)) H_l
        out = mpq(1)
        for r in range(i):
            out *= 2 * (j - r) * (2 * (j - r) + 2 * l + m - 2)
        return out

    parts: dict[int, CliffPoly] = {}
    for i in range(cmax, -1, -1):
        l = k - 2 * i
        rest = lap[i]
        for j in range(i + 1, cmax + 1):
            coef = dfac(i, j, k - 2 * j)
            if not coef:
                continue
            piece = parts[j]
            for _ in range(j - i):
                piece = piece * r2
            rest = rest - piece.scale(coef)
        parts[i] = rest.scale(1 / dfac(i, i, l))
    out = []
    recon = CliffPoly.zero(m)
    power = CliffPoly.one(m)
    for j in range(cmax + 1):
        h = parts[j]
        assert h.laplacian().is_zero()
        out.append((j, h))
        recon = recon + power * h
        power = power * r2
    assert recon == P
    return out


def hermitian_components(H: CliffPoly, n: int, p: int, q: int, j: int) -> dict:
    """Four-part refinement of an S^(j)-valued bidegree-(p,q) harmonic.

    The harmonic is split over exact bases of the four Hermitian-monogenic
    summands; the mixed fourth embedding uses the ratio forced by
    harmonicity, (p-1+j) z z^+ - (n+q-1-j) z^+ z, which never degenerates.
    Returns the embedded pieces (summing to H) and the monogenic factors.
    """
    if H.laplacian().is_zero() is False:
        raise ValueError("input is not harmonic")
    pieces = {}
    factors = {}
    columns = []
    owners = []

    def add_space(name, base, embed):
        for M in base:
            columns.append(embed(M).terms)
            owners.append((name, M, embed))

    add_space("monogenic", basis_M_pq(n, p, q, j), lambda M: M)
    if p >= 1 and j + 1 <= n:
        add_space("z-part", basis_M_pq(n, p - 1, q, j + 1), lambda M: M.vec_z())
    if q >= 1 and j - 1 >= 0:
        add_space("zdag-part", basis_M_pq(n, p, q - 1, j - 1), lambda M: M.vec_zdag())
    c1 = GaussianRational(p - 1 + j)
    c2 = GaussianRational(-(n + q - 1 - j))
    if p >= 1 and q >= 1:
        add_space("mixed-part", basis_M_pq(n, p - 1, q - 1, j),
                  lambda M: M.vec_zdag().vec_z().scale(c1)
                  + M.vec_z().vec_zdag().scale(c2))
    sol = solve_in_span(columns, H.terms)
    if sol is None:
        raise ValueError("harmonic does not decompose: basis incomplete")
    recon = CliffPoly.zero(2 * n)
    for c, (name, M, embed) in zip(sol, owners):
        if not c:
            continue
        emb = embed(M).scale(c)
        pieces[name] = pieces.get(name, CliffPoly.zero(2 * n)) + emb
        factors.setdefault(name, CliffPoly.zero(2 * n))
        factors[name] = factors[name] + M.scale(c)
        recon = recon + emb
    assert recon == H
    return {
        "pieces": pieces,
        "factors": factors,
        "mixed_ratio": (c1, c2),
    }


def fischer_decompose_euclidean(P: CliffPoly, mode: str = "harmonic"):
    """Front door for the two Euclidean splittings.

    mode="harmonic": the tower P = sum |x|^(2j) H_{k-2j}, returned as
    (j, part) pairs; mode="monogenic": the split of a Clifford-valued
    harmonic into monogenic + vector * monogenic."""
    if mode == "harmonic":
        return harmonic_components(P)
    if mode == "monogenic":
        return monogenic_split(P)
    raise ValueError(f"unknown mode {mode!r}")


def fischer_decompose_hermitian(H: CliffPoly, n: int, p: int, q: int, j: int) -> dict:
    return hermitian_components(H, n, p, q, j)


# -- descriptor front door ------------------------------------------------------------


def basis(space: str, **params) -> PolySpaceBasis:
    """Descriptor-driven basis constructor used by the command line.

    space: "P" (m, k) | "H" (m, k) | "M" (m, k) | "Ppq"/"Hpq" (n, p, q) |
    "Mpq" (n, p, q, j) | "S" (n, j).
    """
    d = {"space": space, **params}
    if space == "P":
        els = basis_P(params["m"], params["k"])
        return PolySpaceBasis(d, els, len(els))
    if space == "H":
        els = basis_H(params["m"], params["k"])
        return PolySpaceBasis(d, els, len(els))
    if space == "M":
        m, k = params["m"], params["k"]
        els = monogenic_generators(m, k)
        return PolySpaceBasis(d, els, len(els), extra={
            "right_module": True,
            "space_dimension": dim_M(m, k),
        })
    if space == "Ppq":
        n = params["n"]
        els = [complex_monomial(n, a, b)
               for a, b in bidegree_monomials(n, params["p"], params["q"])]
        return PolySpaceBasis(d, els, len(els))
    if space == "Hpq":
        els = basis_H_pq(params["n"], params["p"], params["q"])
        return PolySpaceBasis(d, els, len(els))
    if space == "Mpq":
        els = basis_M_pq(params["n"], params["p"], params["q"], params["j"])
        return PolySpaceBasis(d, els, len(els))
    if space == "S":
        sb = spinor_basis(params["n"], params["j"])
        els = [CliffPoly.monomial(2 * sb.n, (0,) * (2 * sb.n), v) for v in sb.vectors]
        return PolySpaceBasis(d, els, len(els))
    raise ValueError(f"unknown space {space!r}")
