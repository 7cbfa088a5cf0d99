"""Polynomials in real coordinates with Clifford-algebra coefficients.

A CliffPoly is a finitely supported map from monomials to multivectors of
Cl_m; coefficients sit on the left of the monomial.  Polynomials live over
one coordinate vector (x) or a pair (x, y) for kernels.  The complex
variables z_j = x_j + i x_{n+j} of the Hermitian setting (m = 2n) and their
Wirtinger derivatives are derived linear combinations of the real ones, so
there is a single monomial lattice and the factorisation of the Laplacian
through the Dirac operator is structural.

Storage is flat for speed: one dict entry per (monomial, blade) pair, the
key packing the exponent vector (5 bits per coordinate) above 8 blade bits.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations_with_replacement

from gmpy2 import mpq

from .clifford import (Multivector, _conj_sign, _reverse_sign, blade_mul,
                       blade_table, witt, witt_dagger)
from .exactnum import GR_ONE, GaussianRational, parse_gaussian, pochhammer

EXP_BITS = 5
EXP_MASK = (1 << EXP_BITS) - 1
BLADE_BITS = 8
BLADE_MASK = (1 << BLADE_BITS) - 1
MAX_EXP = EXP_MASK - 1  # keep one bit of headroom for exponent addition


def pack_exps(exps) -> int:
    packed = 0
    for i, e in enumerate(exps):
        if e:
            if e > MAX_EXP:
                raise ValueError(f"exponent {e} too large")
            packed |= e << (EXP_BITS * i)
    return packed


def unpack_exps(packed: int, ncoords: int) -> tuple:
    return tuple((packed >> (EXP_BITS * i)) & EXP_MASK for i in range(ncoords))


def packed_degree(packed: int) -> int:
    d = 0
    while packed:
        d += packed & EXP_MASK
        packed >>= EXP_BITS
    return d


def _parity_mask(ncoords: int) -> int:
    mask = 0
    for i in range(ncoords):
        mask |= 1 << (EXP_BITS * i)
    return mask


def _finalize(acc: dict) -> dict:
    """Turn raw [re, im] accumulators into GaussianRational terms, dropping zeros."""
    raw = GaussianRational.__new__
    GR = GaussianRational
    terms = {}
    for k, (re, im) in acc.items():
        if re or im:
            g = raw(GR)
            g.re = re
            g.im = im
            terms[k] = g
    return terms


_OPS_CACHE: dict = {}


def _group_ops(raw):
    """Group (coord, blade, re, im) entries by coordinate into the fused
    table format ((shift, 1<<shift, ((blade<<8, blade, re, im), ...)), ...)."""
    by_coord: dict[int, list] = {}
    for coord, blade, lr, li in raw:
        by_coord.setdefault(coord, []).append((blade << 8, blade, lr, li))
    out = []
    for coord in sorted(by_coord):
        shift = BLADE_BITS + EXP_BITS * coord
        out.append((shift, 1 << shift, tuple(by_coord[coord])))
    return tuple(out)


def _ops_dirac_x(m: int, slot: int):
    """Operator table of sum_j e_j d_{x_j}."""
    key = ("x", m, slot)
    ops = _OPS_CACHE.get(key)
    if ops is None:
        one_r = mpq(1)
        zero = mpq(0)
        raw = [(slot * m + j, 1 << j, one_r, zero) for j in range(m)]
        _OPS_CACHE[key] = ops = _group_ops(raw)
    return ops


def _ops_dirac_z(n: int, slot: int, dag: bool):
    """Tables of sum_j f_j^+ d_{z_j} (or sum_j f_j dbar_{z_j})."""
    key = ("z", n, slot, dag)
    ops = _OPS_CACHE.get(key)
    if ops is None:
        raw = []
        base = slot * 2 * n
        for j in range(n):
            mv = witt(n, j + 1) if dag else witt_dagger(n, j + 1)
            im_fac = mpq(1, 2) if dag else mpq(-1, 2)
            for blade, c in mv.terms.items():
                # d_{z_j} = (d_{x_j} - i d_{x_{n+j}})/2; conjugated for dag
                raw.append((base + j, blade, c.re / 2, c.im / 2))
                raw.append((base + n + j, blade, -c.im * im_fac, c.re * im_fac))
        _OPS_CACHE[key] = ops = _group_ops(raw)
    return ops


def _ops_vec_z(n: int, slot: int, dag: bool):
    """Tables of z = sum_j f_j z_j (or z^+ = sum_j f_j^+ zbar_j)."""
    key = ("vz", n, slot, dag)
    ops = _OPS_CACHE.get(key)
    if ops is None:
        raw = []
        base = slot * 2 * n
        for j in range(n):
            mv = witt_dagger(n, j + 1) if dag else witt(n, j + 1)
            im_fac = mpq(-1) if dag else mpq(1)
            for blade, c in mv.terms.items():
                # z_j = x_j + i x_{n+j}; zbar_j conjugated
                raw.append((base + j, blade, c.re, c.im))
                raw.append((base + n + j, blade, -c.im * im_fac, c.re * im_fac))
        _OPS_CACHE[key] = ops = _group_ops(raw)
    return ops


class CliffPoly:
    """Multivector-coefficient polynomial over one or two coordinate vectors."""

    __slots__ = ("m", "nslots", "terms")

    def __init__(self, m: int, nslots: int = 1, terms=None):
        if m > 8:
            raise ValueError("supported dimensions stop at m = 8")
        self.m = m
        self.nslots = nslots
        self.terms: dict[int, GaussianRational] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, m: int, nslots: int = 1) -> "CliffPoly":
        return cls(m, nslots)

    @classmethod
    def one(cls, m: int, nslots: int = 1) -> "CliffPoly":
        return cls(m, nslots, {0: GR_ONE})

    @classmethod
    def scalar_poly(cls, m: int, c, nslots: int = 1) -> "CliffPoly":
        c = c if isinstance(c, GaussianRational) else GaussianRational(c)
        return cls(m, nslots, {0: c} if c else {})

    @classmethod
    def variable(cls, m: int, coord: int, nslots: int = 1, slot: int = 0) -> "CliffPoly":
        """The coordinate monomial x_{coord+1} (or y for slot 1)."""
        c = coord + slot * m
        return cls(m, nslots, {(1 << (EXP_BITS * c)) << BLADE_BITS: GR_ONE})

    @classmethod
    def monomial(cls, m: int, exps, coef=None, nslots: int = 1) -> "CliffPoly":
        """exps runs over all m*nslots coordinates; coef is a Multivector,
        GaussianRational or anything GaussianRational accepts."""
        packed = pack_exps(exps) << BLADE_BITS
        if coef is None:
            coef = GR_ONE
        if isinstance(coef, Multivector):
            return cls(m, nslots, {packed | b: c for b, c in coef.terms.items()})
        if not isinstance(coef, GaussianRational):
            coef = GaussianRational(coef)
        return cls(m, nslots, {packed: coef} if coef else {})

    def copy(self) -> "CliffPoly":
        out = CliffPoly.__new__(CliffPoly)
        out.m = self.m
        out.nslots = self.nslots
        out.terms = dict(self.terms)
        return out

    def _empty(self) -> "CliffPoly":
        out = CliffPoly.__new__(CliffPoly)
        out.m = self.m
        out.nslots = self.nslots
        out.terms = {}
        return out

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "CliffPoly"):
        if self.m != other.m or self.nslots != other.nslots:
            raise ValueError("variable roster mismatch")

    def __add__(self, other):
        if not isinstance(other, CliffPoly):
            other = CliffPoly.scalar_poly(self.m, other, self.nslots)
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            prev = out.get(key)
            tot = c if prev is None else prev + c
            if tot:
                out[key] = tot
            elif key in out:
                del out[key]
        p = self._empty()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = self._empty()
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, CliffPoly):
            other = CliffPoly.scalar_poly(self.m, other, self.nslots)
        return self + (-other)

    def __rsub__(self, other):
        return CliffPoly.scalar_poly(self.m, other, self.nslots) - self

    def scale(self, c) -> "CliffPoly":
        if not isinstance(c, GaussianRational):
            c = GaussianRational(c)
        if not c:
            return self._empty()
        p = self._empty()
        p.terms = {k: v * c for k, v in self.terms.items()}
        return p

    def __mul__(self, other):
        """Polynomial product; self's coefficients multiply from the left."""
        if not isinstance(other, CliffPoly):
            return self.scale(other)
        self._check(other)
        acc: dict[int, list] = {}
        get = acc.get
        table = blade_table()
        oterms = list(other.terms.items())
        for ka, ca in self.terms.items():
            ea = (ka >> BLADE_BITS) << BLADE_BITS
            ba8 = (ka & BLADE_MASK) << 8
            ar = ca.re
            ai = ca.im
            if ai:
                for kb, cb in oterms:
                    sign, blade = table[ba8 | (kb & BLADE_MASK)]
                    key = (ea + (kb & ~BLADE_MASK)) | blade
                    br = cb.re
                    bi = cb.im
                    tr = ar * br - ai * bi
                    ti = ar * bi + ai * br
                    if sign < 0:
                        tr = -tr
                        ti = -ti
                    slot = get(key)
                    if slot is None:
                        acc[key] = [tr, ti]
                    else:
                        slot[0] += tr
                        slot[1] += ti
            else:
                for kb, cb in oterms:
                    sign, blade = table[ba8 | (kb & BLADE_MASK)]
                    key = (ea + (kb & ~BLADE_MASK)) | blade
                    tr = ar * cb.re
                    ti = ar * cb.im
                    if sign < 0:
                        tr = -tr
                        ti = -ti
                    slot = get(key)
                    if slot is None:
                        acc[key] = [tr, ti]
                    else:
                        slot[0] += tr
                        slot[1] += ti
        p = self._empty()
        p.terms = _finalize(acc)
        return p

    def __rmul__(self, other):
        if isinstance(other, CliffPoly):
            return NotImplemented
        return self.scale(other)

    def mv_left(self, x: Multivector) -> "CliffPoly":
        """Multiply every coefficient by the constant multivector x from the left."""
        return self._mv_mul(x, left=True)

    def mv_right(self, x: Multivector) -> "CliffPoly":
        return self._mv_mul(x, left=False)

    def _mv_mul(self, x: Multivector, left: bool) -> "CliffPoly":
        acc: dict[int, list] = {}
        get = acc.get
        table = blade_table()
        for bx, cx in x.terms.items():
            xr = cx.re
            xi = cx.im
            bx8 = bx << 8
            for key, c in self.terms.items():
                kb = key & BLADE_MASK
                sign, blade = table[(bx8 | kb) if left else ((kb << 8) | bx)]
                k2 = (key ^ kb) | blade
                cr = c.re
                ci = c.im
                tr = xr * cr - xi * ci
                ti = xr * ci + xi * cr
                if sign < 0:
                    tr = -tr
                    ti = -ti
                slot = get(k2)
                if slot is None:
                    acc[k2] = [tr, ti]
                else:
                    slot[0] += tr
                    slot[1] += ti
        p = self._empty()
        p.terms = _finalize(acc)
        return p

    def __eq__(self, other):
        if not isinstance(other, CliffPoly):
            return NotImplemented
        return (self.m, self.nslots, self.terms) == (other.m, other.nslots, other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.m, self.nslots, frozenset(self.terms.items())))

    # -- calculus on real coordinates --------------------------------------

    def ddx(self, coord: int) -> "CliffPoly":
        """Partial derivative by the real coordinate (global index)."""
        shift = BLADE_BITS + EXP_BITS * coord
        acc: dict[int, GaussianRational] = {}
        one = 1 << shift
        for key, c in self.terms.items():
            e = (key >> shift) & EXP_MASK
            if not e:
                continue
            k2 = key - one
            v = c * e
            prev = acc.get(k2)
            acc[k2] = v if prev is None else prev + v
        p = self._empty()
        p.terms = {k: v for k, v in acc.items() if v}
        return p

    def mulx(self, coord: int) -> "CliffPoly":
        shift = BLADE_BITS + EXP_BITS * coord
        one = 1 << shift
        p = self._empty()
        p.terms = {key + one: c for key, c in self.terms.items()}
        return p

    def euler(self, slot: int = 0) -> "CliffPoly":
        """sum_j x_j d_j over the coordinates of one slot (degree operator)."""
        lo = self.m * slot
        hi = lo + self.m
        acc: dict[int, GaussianRational] = {}
        for key, c in self.terms.items():
            packed = key >> (BLADE_BITS + EXP_BITS * lo)
            d = 0
            for _ in range(lo, hi):
                d += packed & EXP_MASK
                packed >>= EXP_BITS
            if d:
                acc[key] = c * d
        p = self._empty()
        p.terms = acc
        return p

    def slot_degree(self, key: int, slot: int) -> int:
        packed = key >> (BLADE_BITS + EXP_BITS * self.m * slot)
        d = 0
        for _ in range(self.m):
            d += packed & EXP_MASK
            packed >>= EXP_BITS
        return d

    def max_degree(self, slot: int = 0) -> int:
        return max((self.slot_degree(k, slot) for k in self.terms), default=0)

    def homogeneous_degree(self, slot: int = 0):
        """Common slot degree of every term, or None."""
        deg = None
        for key in self.terms:
            d = self.slot_degree(key, slot)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def _dirac_apply(self, ops, left: bool) -> "CliffPoly":
        """Fused first-order operator sum_c sum_b lam_{c,b} e_b d_c (left) or
        the mirrored right action; ops are grouped per coordinate."""
        acc: dict[int, list] = {}
        get = acc.get
        table = blade_table()
        for key, c in self.terms.items():
            kb = key & BLADE_MASK
            kb8 = kb << 8
            base = key ^ kb
            cr = c.re
            ci = c.im
            for shift, one, entries in ops:
                e = (key >> shift) & EXP_MASK
                if not e:
                    continue
                nbase = base - one
                for b8, b, lr, li in entries:
                    sign, blade = table[(b8 | kb) if left else (kb8 | b)]
                    if li:
                        tr = (lr * cr - li * ci) * e
                        ti = (lr * ci + li * cr) * e
                    else:
                        tr = lr * cr * e
                        ti = lr * ci * e
                    if sign < 0:
                        tr = -tr
                        ti = -ti
                    k2 = nbase | blade
                    slot2 = get(k2)
                    if slot2 is None:
                        acc[k2] = [tr, ti]
                    else:
                        slot2[0] += tr
                        slot2[1] += ti
        p = self._empty()
        p.terms = _finalize(acc)
        return p

    def _vec_apply(self, ops) -> "CliffPoly":
        """Fused left multiplication by a vector variable sum lam e_b x_c."""
        acc: dict[int, list] = {}
        get = acc.get
        table = blade_table()
        for key, c in self.terms.items():
            kb = key & BLADE_MASK
            base = key ^ kb
            cr = c.re
            ci = c.im
            for shift, one, entries in ops:
                nbase = base + one
                for b8, b, lr, li in entries:
                    sign, blade = table[b8 | kb]
                    if li:
                        tr = lr * cr - li * ci
                        ti = lr * ci + li * cr
                    else:
                        tr = lr * cr
                        ti = lr * ci
                    if sign < 0:
                        tr = -tr
                        ti = -ti
                    k2 = nbase | blade
                    slot2 = get(k2)
                    if slot2 is None:
                        acc[k2] = [tr, ti]
                    else:
                        slot2[0] += tr
                        slot2[1] += ti
        p = self._empty()
        p.terms = _finalize(acc)
        return p

    def dirac_x(self, slot: int = 0, side: str = "left") -> "CliffPoly":
        """The Euclidean first-order operator sum_j e_j d_j (left) or its
        right action sum_j (d_j P) e_j."""
        return self._dirac_apply(_ops_dirac_x(self.m, slot), side == "left")

    def vec_x(self, slot: int = 0) -> "CliffPoly":
        """Left multiplication by the vector variable sum_j e_j x_j."""
        return self._vec_apply(_ops_dirac_x(self.m, slot))

    def laplacian(self, slot: int = 0) -> "CliffPoly":
        acc: dict[int, list] = {}
        get = acc.get
        base = BLADE_BITS + EXP_BITS * self.m * slot
        m = self.m
        for key, c in self.terms.items():
            for j in range(m):
                shift = base + EXP_BITS * j
                e = (key >> shift) & EXP_MASK
                if e < 2:
                    continue
                f = e * (e - 1)
                k2 = key - (2 << shift)
                slot2 = get(k2)
                if slot2 is None:
                    acc[k2] = [c.re * f, c.im * f]
                else:
                    slot2[0] += c.re * f
                    slot2[1] += c.im * f
        p = self._empty()
        p.terms = _finalize(acc)
        return p

    # -- complex coordinates (m = 2n) ---------------------------------------

    def _n(self) -> int:
        if self.m % 2:
            raise ValueError("complex structure needs even dimension")
        return self.m // 2

    def ddz(self, j: int, slot: int = 0) -> "CliffPoly":
        """Wirtinger derivative (d_{x_j} - i d_{x_{n+j}})/2, j in 0..n-1."""
        n = self._n()
        base = self.m * slot
        half = GaussianRational(mpq(1, 2))
        mih = GaussianRational(0, mpq(-1, 2))
        return self.ddx(base + j).scale(half) + self.ddx(base + n + j).scale(mih)

    def ddzbar(self, j: int, slot: int = 0) -> "CliffPoly":
        n = self._n()
        base = self.m * slot
        half = GaussianRational(mpq(1, 2))
        ih = GaussianRational(0, mpq(1, 2))
        return self.ddx(base + j).scale(half) + self.ddx(base + n + j).scale(ih)

    def mul_z(self, j: int, slot: int = 0) -> "CliffPoly":
        """Multiply by the complex coordinate z_j = x_j + i x_{n+j}."""
        n = self._n()
        base = self.m * slot
        return self.mulx(base + j) + self.mulx(base + n + j).scale(GaussianRational(0, 1))

    def mul_zbar(self, j: int, slot: int = 0) -> "CliffPoly":
        n = self._n()
        base = self.m * slot
        return self.mulx(base + j) + self.mulx(base + n + j).scale(GaussianRational(0, -1))

    def euler_z(self, slot: int = 0) -> "CliffPoly":
        n = self._n()
        out = self._empty()
        for j in range(n):
            out = out + self.ddz(j, slot).mul_z(j, slot)
        return out

    def euler_zbar(self, slot: int = 0) -> "CliffPoly":
        n = self._n()
        out = self._empty()
        for j in range(n):
            out = out + self.ddzbar(j, slot).mul_zbar(j, slot)
        return out

    def dirac_z(self, slot: int = 0, side: str = "left") -> "CliffPoly":
        """sum_j f_j^+ d_{z_j} from the left, or sum_j (d_{z_j} P) f_j^+."""
        return self._dirac_apply(_ops_dirac_z(self._n(), slot, dag=False),
                                 side == "left")

    def dirac_zdag(self, slot: int = 0, side: str = "left") -> "CliffPoly":
        """sum_j f_j dbar_{z_j} from the left, or sum_j (dbar_{z_j} P) f_j."""
        return self._dirac_apply(_ops_dirac_z(self._n(), slot, dag=True),
                                 side == "left")

    def vec_z(self, slot: int = 0) -> "CliffPoly":
        """Left multiplication by z = sum_j f_j z_j."""
        return self._vec_apply(_ops_vec_z(self._n(), slot, dag=False))

    def vec_zdag(self, slot: int = 0) -> "CliffPoly":
        """Left multiplication by z^+ = sum_j f_j^+ zbar_j."""
        return self._vec_apply(_ops_vec_z(self._n(), slot, dag=True))

    def bidegree(self, slot: int = 0):
        """(p, q) if the poly is a joint eigenvector of both complex Euler
        operators, else None."""
        if not self.terms:
            return None
        k = self.homogeneous_degree(slot)
        if k is None:
            return None
        ez = self.euler_z(slot)
        for p in range(k + 1):
            if ez == self.scale(p):
                return (p, k - p)
        return None

    # -- involutions, grades, slots ------------------------------------------

    def conjugate(self) -> "CliffPoly":
        """Clifford conjugation of every coefficient (monomials are real)."""
        p = self._empty()
        p.terms = {
            k: (c.conjugate() if _conj_sign((k & BLADE_MASK).bit_count()) > 0
                else -c.conjugate())
            for k, c in self.terms.items()
        }
        return p

    def pure_reverse(self) -> "CliffPoly":
        """Blade reversion without complex conjugation of coefficients."""
        p = self._empty()
        p.terms = {
            k: (c if _reverse_sign((k & BLADE_MASK).bit_count()) > 0 else -c)
            for k, c in self.terms.items()
        }
        return p

    def conj_coefficients(self) -> "CliffPoly":
        """Plain complex conjugation of the coefficients, blades untouched."""
        p = self._empty()
        p.terms = {k: c.conjugate() for k, c in self.terms.items()}
        return p

    def grade_select(self, grades) -> "CliffPoly":
        grades = set(grades)
        p = self._empty()
        p.terms = {k: c for k, c in self.terms.items()
                   if (k & BLADE_MASK).bit_count() in grades}
        return p

    def grades(self) -> set[int]:
        return {(k & BLADE_MASK).bit_count() for k in self.terms}

    def swap_slots(self) -> "CliffPoly":
        if self.nslots != 2:
            raise ValueError("swap_slots needs a paired roster")
        w = EXP_BITS * self.m
        lo = (1 << w) - 1
        out = self._empty()
        for key, c in self.terms.items():
            blade = key & BLADE_MASK
            packed = key >> BLADE_BITS
            packed = ((packed & lo) << w) | (packed >> w)
            out.terms[(packed << BLADE_BITS) | blade] = c
        return out

    def pair_to_single(self, slot: int = 1) -> "CliffPoly":
        """Forget the empty slot of a pair poly supported on one slot."""
        if self.nslots != 2:
            raise ValueError("pair_to_single needs a paired roster")
        w = EXP_BITS * self.m
        lo = (1 << w) - 1
        out = CliffPoly(self.m, 1)
        for key, c in self.terms.items():
            blade = key & BLADE_MASK
            packed = key >> BLADE_BITS
            keep = (packed >> w) if slot == 1 else (packed & lo)
            drop = (packed & lo) if slot == 1 else (packed >> w)
            if drop:
                raise ValueError("poly is not supported on a single slot")
            out.terms[(keep << BLADE_BITS) | blade] = c
        return out

    def single_to_pair(self, slot: int = 0) -> "CliffPoly":
        if self.nslots != 1:
            raise ValueError("single_to_pair needs a single roster")
        w = EXP_BITS * self.m
        out = CliffPoly(self.m, 2)
        for key, c in self.terms.items():
            blade = key & BLADE_MASK
            packed = key >> BLADE_BITS
            if slot == 1:
                packed <<= w
            out.terms[(packed << BLADE_BITS) | blade] = c
        return out

    # -- coefficient access ----------------------------------------------

    def coefficient(self, exps) -> Multivector:
        packed = pack_exps(exps) << BLADE_BITS
        mv = Multivector.zero(self.m)
        for key, c in self.terms.items():
            if key & ~BLADE_MASK == packed:
                mv.terms[key & BLADE_MASK] = c
        return mv

    def iter_terms(self):
        """Yield (exponent tuple, blade bitset, coefficient), deterministic:
        graded-lex monomials, then blade index."""
        ncoords = self.m * self.nslots
        items = [(unpack_exps(k >> BLADE_BITS, ncoords), k & BLADE_MASK, c)
                 for k, c in self.terms.items()]
        items.sort(key=lambda t: (sum(t[0]), t[0], t[1]))
        return items

    def __repr__(self):
        return f"CliffPoly(m={self.m}, slots={self.nslots}: {format_cliffpoly(self)})"

    def __str__(self):
        return format_cliffpoly(self)


# -- named operator tags ------------------------------------------------------


class OperatorTag(Enum):
    EulerE = "EulerE"
    EulerEz = "EulerEz"
    EulerEzbar = "EulerEzbar"
    DiracX_left = "DiracX_left"
    DiracX_right = "DiracX_right"
    DiracZ = "DiracZ"
    DiracZdag = "DiracZdag"
    VecX = "VecX"
    VecZ = "VecZ"
    VecZdag = "VecZdag"
    Laplace = "Laplace"


_HERMITIAN_TAGS = {OperatorTag.EulerEz, OperatorTag.EulerEzbar, OperatorTag.DiracZ,
                   OperatorTag.DiracZdag, OperatorTag.VecZ, OperatorTag.VecZdag}


def apply(op: OperatorTag, P: CliffPoly, side: str = "left", slot: int = 0) -> CliffPoly:
    """Apply one of the named linear operators to P.

    side="right" is only meaningful for the Dirac tags; the Hermitian tags
    need even ambient dimension.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    if op in _HERMITIAN_TAGS and P.m % 2:
        raise ValueError(f"{op.value} needs even dimension")
    dirac = {OperatorTag.DiracX_left, OperatorTag.DiracX_right,
             OperatorTag.DiracZ, OperatorTag.DiracZdag}
    if side == "right" and op not in dirac:
        raise ValueError(f"side=right undefined for {op.value}")
    if op is OperatorTag.EulerE:
        return P.euler(slot)
    if op is OperatorTag.EulerEz:
        return P.euler_z(slot)
    if op is OperatorTag.EulerEzbar:
        return P.euler_zbar(slot)
    if op is OperatorTag.DiracX_left:
        return P.dirac_x(slot, "left")
    if op is OperatorTag.DiracX_right:
        return P.dirac_x(slot, "right")
    if op is OperatorTag.DiracZ:
        return P.dirac_z(slot, side)
    if op is OperatorTag.DiracZdag:
        return P.dirac_zdag(slot, side)
    if op is OperatorTag.VecX:
        return P.vec_x(slot)
    if op is OperatorTag.VecZ:
        return P.vec_z(slot)
    if op is OperatorTag.VecZdag:
        return P.vec_zdag(slot)
    if op is OperatorTag.Laplace:
        return P.laplacian(slot)
    raise ValueError(f"unknown operator {op!r}")


# -- monomial families --------------------------------------------------------


def monomial_exponents(m: int, k: int) -> list[tuple]:
    """All exponent vectors of total degree k in m variables."""
    out = []
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out)


def complex_monomial(n: int, a, b, nslots: int = 1, slot: int = 0) -> CliffPoly:
    """z^a zbar^b expanded into the real coordinates of C^n = R^{2n}."""
    out = CliffPoly.one(2 * n, nslots)
    for j in range(n):
        for _ in range(a[j]):
            out = out.mul_z(j, slot)
        for _ in range(b[j]):
            out = out.mul_zbar(j, slot)
    return out


def bidegree_exponent_pairs(n: int, p: int, q: int) -> list[tuple[tuple, tuple]]:
    return [(a, b) for a in monomial_exponents(n, p) for b in monomial_exponents(n, q)]


def vector_variable(m: int, nslots: int = 1, slot: int = 0) -> CliffPoly:
    """The Clifford vector sum_j e_j x_j as a polynomial."""
    out = CliffPoly.zero(m, nslots)
    for j in range(m):
        out = out + CliffPoly.variable(m, j, nslots, slot).mv_left(
            Multivector.basis_vector(m, j + 1))
    return out


def hermitian_vector(n: int, nslots: int = 1, slot: int = 0) -> CliffPoly:
    """z = sum_j f_j z_j."""
    return _herm_vec(n, nslots, slot, dag=False)


def hermitian_vector_dagger(n: int, nslots: int = 1, slot: int = 0) -> CliffPoly:
    """z^+ = sum_j f_j^+ zbar_j."""
    return _herm_vec(n, nslots, slot, dag=True)


def _herm_vec(n: int, nslots: int, slot: int, dag: bool) -> CliffPoly:
    out = CliffPoly.zero(2 * n, nslots)
    one = CliffPoly.one(2 * n, nslots)
    for j in range(n):
        mono = one.mul_zbar(j, slot) if dag else one.mul_z(j, slot)
        f = witt_dagger(n, j + 1) if dag else witt(n, j + 1)
        out = out + mono.mv_left(f)
    return out


# -- inner products -----------------------------------------------------------

_FACT_CACHE: dict[int, int] = {}


def _packed_factorial(packed: int) -> int:
    hit = _FACT_CACHE.get(packed)
    if hit is not None:
        return hit
    out = 1
    p = packed
    while p:
        e = p & EXP_MASK
        if e > 1:
            f = 1
            for i in range(2, e + 1):
                f *= i
            out *= f
        p >>= EXP_BITS
    _FACT_CACHE[packed] = out
    return out


def fischer_inner(P: CliffPoly, Q: CliffPoly) -> Multivector:
    """[P(d)^+ Q]_{x=0}: conjugate-linear in P, exact.

    Coefficientwise this is sum_alpha alpha! P_alpha^+ Q_alpha.
    """
    P._check(Q)
    if P.nslots != 1:
        raise ValueError("fischer_inner needs single-roster arguments")
    by_exp: dict[int, list] = {}
    for key, c in Q.terms.items():
        by_exp.setdefault(key >> BLADE_BITS, []).append((key & BLADE_MASK, c))
    acc: dict[int, GaussianRational] = {}
    for key, c in P.terms.items():
        exp = key >> BLADE_BITS
        mates = by_exp.get(exp)
        if not mates:
            continue
        bp = key & BLADE_MASK
        cp = c.conjugate()
        if _conj_sign(bp.bit_count()) < 0:
            cp = -cp
        fact = _packed_factorial(exp)
        for bq, cq in mates:
            sign, blade = blade_mul(bp, bq)
            v = cp * cq * fact
            if sign < 0:
                v = -v
            prev = acc.get(blade)
            tot = v if prev is None else prev + v
            if tot:
                acc[blade] = tot
            elif blade in acc:
                del acc[blade]
    return Multivector(P.m, acc)


_MOMENT_CACHE: dict[tuple[int, int], mpq] = {}


def sphere_moment(packed: int, m: int):
    """Normalised average of the monomial x^alpha over the unit sphere:
    zero unless every exponent is even, else prod (1/2)_{a_i/2} / (m/2)_{|a|/2}."""
    key = (packed, m)
    hit = _MOMENT_CACHE.get(key)
    if hit is not None:
        return hit
    num = mpq(1)
    half = mpq(1, 2)
    total = 0
    p = packed
    while p:
        e = p & EXP_MASK
        if e & 1:
            _MOMENT_CACHE[key] = mpq(0)
            return _MOMENT_CACHE[key]
        if e:
            num *= pochhammer(half, e >> 1)
            total += e >> 1
        p >>= EXP_BITS
    out = num / pochhammer(mpq(m, 2), total)
    _MOMENT_CACHE[key] = out
    return out


def sphere_inner(P: CliffPoly, Q: CliffPoly) -> Multivector:
    """Normalised spherical pairing (1/omega) int P^+ Q, via exact moments."""
    P._check(Q)
    if P.nslots != 1:
        raise ValueError("sphere_inner needs single-roster arguments")
    parity = _parity_mask(P.m)
    by_par: dict[int, list] = {}
    for key, c in Q.terms.items():
        by_par.setdefault((key >> BLADE_BITS) & parity, []).append(key)
    acc: dict[int, GaussianRational] = {}
    m = P.m
    for key, c in P.terms.items():
        exp = key >> BLADE_BITS
        mates = by_par.get(exp & parity)
        if not mates:
            continue
        bp = key & BLADE_MASK
        cp = c.conjugate()
        if _conj_sign(bp.bit_count()) < 0:
            cp = -cp
        for kq in mates:
            mom = sphere_moment(exp + (kq >> BLADE_BITS), m)
            if not mom:
                continue
            sign, blade = blade_mul(bp, kq & BLADE_MASK)
            v = cp * Q.terms[kq] * mom
            if sign < 0:
                v = -v
            prev = acc.get(blade)
            tot = v if prev is None else prev + v
            if tot:
                acc[blade] = tot
            elif blade in acc:
                del acc[blade]
    return Multivector(P.m, acc)


def fischer_pair(K: CliffPoly, Q: CliffPoly) -> CliffPoly:
    """<K(., y), Q>_d: pair the first slot of a two-slot kernel against a
    single-roster polynomial; the result lives on a single roster (the
    second slot renamed)."""
    if K.nslots != 2 or Q.nslots != 1 or K.m != Q.m:
        raise ValueError("fischer_pair needs a pair kernel and a single-roster poly")
    w = EXP_BITS * K.m
    lo = (1 << w) - 1
    by_exp: dict[int, list] = {}
    for key, c in Q.terms.items():
        by_exp.setdefault(key >> BLADE_BITS, []).append((key & BLADE_MASK, c))
    acc: dict[int, GaussianRational] = {}
    for key, c in K.terms.items():
        packed = key >> BLADE_BITS
        alpha = packed & lo
        mates = by_exp.get(alpha)
        if not mates:
            continue
        gamma = packed >> w
        bk = key & BLADE_MASK
        ck = c.conjugate()
        if _conj_sign(bk.bit_count()) < 0:
            ck = -ck
        fact = _packed_factorial(alpha)
        for bq, cq in mates:
            sign, blade = blade_mul(bk, bq)
            v = ck * cq * fact
            if sign < 0:
                v = -v
            k2 = (gamma << BLADE_BITS) | blade
            prev = acc.get(k2)
            tot = v if prev is None else prev + v
            if tot:
                acc[k2] = tot
            elif k2 in acc:
                del acc[k2]
    out = CliffPoly(K.m, 1)
    out.terms = acc
    return out


class SpherePairer:
    """Repeated spherical pairings against a fixed two-slot kernel.

    The moment contraction over the kernel's first slot is cached per
    first-slot exponent, so sweeping a whole space basis against one kernel
    costs one contraction per distinct monomial instead of per element.
    """

    def __init__(self, K: CliffPoly):
        if K.nslots != 2:
            raise ValueError("SpherePairer needs a two-slot kernel")
        self.m = K.m
        self._w = EXP_BITS * K.m
        self._parity = _parity_mask(K.m)
        lo = (1 << self._w) - 1
        by_par: dict[int, list] = {}
        for key, c in K.terms.items():
            packed = key >> BLADE_BITS
            alpha = packed & lo
            bk = key & BLADE_MASK
            ck = c.conjugate()
            if _conj_sign(bk.bit_count()) < 0:
                ck = -ck
            by_par.setdefault(alpha & self._parity, []).append(
                (alpha, ((packed >> self._w) << BLADE_BITS) | bk, ck))
        self._by_par = by_par
        self._rows: dict[int, dict[int, GaussianRational]] = {}

    def _row(self, beta: int) -> dict[int, GaussianRational]:
        row = self._rows.get(beta)
        if row is not None:
            return row
        row = {}
        m = self.m
        for alpha, gkey, ck in self._by_par.get(beta & self._parity, ()):
            mom = sphere_moment(alpha + beta, m)
            if not mom:
                continue
            v = ck * mom
            prev = row.get(gkey)
            row[gkey] = v if prev is None else prev + v
        self._rows[beta] = row
        return row

    def pair(self, Q: CliffPoly) -> CliffPoly:
        """<K(., y), Q>_S as a single-roster polynomial in the second slot."""
        if Q.nslots != 1 or Q.m != self.m:
            raise ValueError("roster mismatch")
        acc: dict[int, list] = {}
        get = acc.get
        table = blade_table()
        for key, cq in Q.terms.items():
            bq = key & BLADE_MASK
            qr = cq.re
            qi = cq.im
            for gkey, ck in self._row(key >> BLADE_BITS).items():
                gb = gkey & BLADE_MASK
                sign, blade = table[(gb << 8) | bq]
                tr = ck.re * qr - ck.im * qi
                ti = ck.re * qi + ck.im * qr
                if sign < 0:
                    tr = -tr
                    ti = -ti
                k2 = (gkey ^ gb) | blade
                slot = get(k2)
                if slot is None:
                    acc[k2] = [tr, ti]
                else:
                    slot[0] += tr
                    slot[1] += ti
        out = CliffPoly(self.m, 1)
        out.terms = _finalize(acc)
        return out


def sphere_pair(K: CliffPoly, Q: CliffPoly) -> CliffPoly:
    return SpherePairer(K).pair(Q)


# -- identity sweeps ----------------------------------------------------------


def _mono_polys_upto(m: int, deg_max: int, nslots: int = 1):
    for k in range(deg_max + 1):
        for e in monomial_exponents(m, k):
            if nslots == 2:
                e = e + (0,) * m
            yield e, CliffPoly.monomial(m, e if nslots == 1 else e, nslots=nslots)


def verify_superalgebra(deg_max: int, m: int | None = None, n: int | None = None):
    """Anticommutator relations of the generating operator pairs on every
    monomial: {x, dx} = -2(E + m/2) and the two Hermitian refinements
    {z, dz} = E_z + beta, {z^+, dz^+} = E_zbar + n - beta."""
    checks = 0
    failures = []
    if m is not None:
        for e, P in _mono_polys_upto(m, deg_max):
            lhs = P.dirac_x().vec_x() + P.vec_x().dirac_x()
            rhs = (P.euler() + P.scale(mpq(m, 2))).scale(-2)
            checks += 1
            if lhs != rhs:
                failures.append({"identity": "osp12", "params": {"m": m, "mono": e},
                                 "residual": format_cliffpoly(lhs - rhs)})
    if n is not None:
        from .clifford import beta as beta_mv
        b = beta_mv(n)
        for e, P in _mono_polys_upto(2 * n, deg_max):
            lhs = P.dirac_z().vec_z() + P.vec_z().dirac_z()
            rhs = P.euler_z() + P.mv_left(b)
            checks += 1
            if lhs != rhs:
                failures.append({"identity": "sl12a", "params": {"n": n, "mono": e},
                                 "residual": format_cliffpoly(lhs - rhs)})
            lhs = P.dirac_zdag().vec_zdag() + P.vec_zdag().dirac_zdag()
            rhs = P.euler_zbar() + P.scale(n) - P.mv_left(b)
            checks += 1
            if lhs != rhs:
                failures.append({"identity": "sl12b", "params": {"n": n, "mono": e},
                                 "residual": format_cliffpoly(lhs - rhs)})
    return checks, failures


def verify_laplace_factorisations(deg_max: int, m: int | None = None,
                                  n: int | None = None):
    """Laplacian = -(dx)^2; and for m = 2n also 4 sum_j d_j dbar_j and
    4{dz, dz^+}; plus E_z + E_zbar = E."""
    checks = 0
    failures = []
    if m is not None:
        for e, P in _mono_polys_upto(m, deg_max):
            checks += 1
            if P.laplacian() != -(P.dirac_x().dirac_x()):
                failures.append({"identity": "laplace-dirac", "params": {"m": m, "mono": e},
                                 "residual": ""})
    if n is not None:
        for e, P in _mono_polys_upto(2 * n, deg_max):
            lap = P.laplacian()
            four = CliffPoly.zero(2 * n)
            for j in range(n):
                four = four + P.ddzbar(j).ddz(j)
            checks += 1
            if lap != four.scale(4):
                failures.append({"identity": "laplace-wirtinger",
                                 "params": {"n": n, "mono": e}, "residual": ""})
            anti = P.dirac_z().dirac_zdag() + P.dirac_zdag().dirac_z()
            checks += 1
            if lap != anti.scale(4):
                failures.append({"identity": "laplace-hermitian-dirac",
                                 "params": {"n": n, "mono": e}, "residual": ""})
            checks += 1
            if P.euler_z() + P.euler_zbar() != P.euler():
                failures.append({"identity": "euler-split",
                                 "params": {"n": n, "mono": e}, "residual": ""})
    return checks, failures


def verify_duality(deg_max: int, m: int | None = None, n: int | None = None):
    """Fischer adjunctions: <dx P, Q> = -<P, x Q>, and the four Hermitian
    relations 2<dz P, Q> = <P, z Q> etc., on all monomial pairs."""
    checks = 0
    failures = []

    def sweep(dim, pairs):
        nonlocal checks
        for d in range(deg_max):
            Ps = [CliffPoly.monomial(dim, e) for e in monomial_exponents(dim, d + 1)]
            Qs = [CliffPoly.monomial(dim, e) for e in monomial_exponents(dim, d)]
            for P in Ps:
                for Q in Qs:
                    for name, lhs, rhs in pairs(P, Q):
                        checks += 1
                        if lhs != rhs:
                            failures.append({
                                "identity": name,
                                "params": {"dim": dim, "deg": d},
                                "residual": str(lhs - rhs)})

    if m is not None:
        def eu_pairs(P, Q):
            yield ("duality-euclidean",
                   fischer_inner(P.dirac_x(), Q), -fischer_inner(P, Q.vec_x()))
        sweep(m, eu_pairs)
    if n is not None:
        def h_pairs(P, Q):
            yield ("duality-z", fischer_inner(P.dirac_z(), Q) * 2,
                   fischer_inner(P, Q.vec_z()))
            yield ("duality-zdag", fischer_inner(P.dirac_zdag(), Q) * 2,
                   fischer_inner(P, Q.vec_zdag()))
            yield ("duality-z-rev", fischer_inner(P.vec_z(), Q),
                   fischer_inner(P, Q.dirac_z()) * 2)
            yield ("duality-zdag-rev", fischer_inner(P.vec_zdag(), Q),
                   fischer_inner(P, Q.dirac_zdag()) * 2)
        sweep(2 * n, h_pairs)
    return checks, failures


# -- text format ---------------------------------------------------------------


def format_cliffpoly(P: CliffPoly) -> str:
    """Terms "coef*e{A}*x1^a1*...*y1^b1*...", graded-lex monomials then blade."""
    if not P.terms:
        return "0"
    parts = []
    for exps, blade, c in P.iter_terms():
        ctext = str(c)
        if c.im:
            ctext = f"({ctext})"
        piece = [ctext]
        if blade:
            idx = "".join(str(i + 1) for i in range(P.m) if blade & (1 << i))
            piece.append(f"e{idx}")
        for i, e in enumerate(exps):
            if not e:
                continue
            name = f"x{i + 1}" if i < P.m else f"y{i - P.m + 1}"
            piece.append(name if e == 1 else f"{name}^{e}")
        parts.append("*".join(piece))
    return " + ".join(parts)


def parse_cliffpoly(text: str, m: int, nslots: int = 1) -> CliffPoly:
    """Inverse of format_cliffpoly."""
    from .clifford import _split_top_level

    s = text.strip()
    out = CliffPoly.zero(m, nslots)
    if s in ("", "0"):
        return out
    ncoords = m * nslots
    for piece in _split_top_level(s):
        piece = piece.strip()
        if not piece:
            continue
        factors = _split_factors(piece)
        coef = GR_ONE
        blade = 0
        exps = [0] * ncoords
        seen_coef = False
        for f in factors:
            if f.startswith("e") and len(f) > 1 and f[1:].isdigit():
                for ch in f[1:]:
                    i = int(ch)
                    if not 1 <= i <= m:
                        raise ValueError(f"blade index {i} out of range")
                    blade |= 1 << (i - 1)
            elif f[0] in "xy" and len(f) > 1 and (f[1:].split("^")[0]).isdigit():
                name, _, power = f.partition("^")
                idx = int(name[1:]) - 1
                if name[0] == "y":
                    if nslots != 2:
                        raise ValueError("y variables need a paired roster")
                    idx += m
                if not 0 <= idx < ncoords:
                    raise ValueError(f"variable {name} out of range")
                exps[idx] += int(power) if power else 1
            else:
                if seen_coef:
                    raise ValueError(f"two scalars in term {piece!r}")
                coef = parse_gaussian(f)
                seen_coef = True
        out = out + CliffPoly.monomial(m, exps, Multivector(m, {blade: coef}), nslots)
    return out


def _split_factors(term: str) -> list[str]:
    # complex scalars are always parenthesised, so a depth-0 "*" separates factors
    parts = []
    depth = 0
    cur = []
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    parts.append("".join(cur))
    return [p for p in parts if p]
