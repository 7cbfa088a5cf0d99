"""The Clifford algebra Cl_m over Gaussian rationals, plus its Hermitian layer.

Basis blades are bitsets over {1..m} packed into ints: bit i-1 set means e_i
is a factor.  Generators square to -1 and anticommute.  The Witt elements
f_j, f_j^+, the element beta = sum f_j^+ f_j and the spinor spaces S^(j)
(minimal left ideal model) all live here as ordinary multivectors of Cl_2n
with complex coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .exactnum import GR_ONE, GaussianRational, binomial, parse_gaussian

# blade product table, shared by every dimension (m <= 8): sign and result
# bitset depend only on the two bitsets (all generators square to -1);
# indexed by (a << 8) | b for speed
_BLADE_TABLE: list | None = None


def _blade_mul_direct(a: int, b: int) -> tuple[int, int]:
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if (swaps + (a & b).bit_count()) & 1 else 1
    return (sign, a ^ b)


def blade_table() -> list:
    """The full 256 x 256 blade product table, built on first use."""
    global _BLADE_TABLE
    if _BLADE_TABLE is None:
        _BLADE_TABLE = [_blade_mul_direct(k >> 8, k & 255) for k in range(1 << 16)]
    return _BLADE_TABLE


def blade_mul(a: int, b: int) -> tuple[int, int]:
    """Product of basis blades: returns (sign, result bitset).

    Sign counts the transpositions needed to interleave the two sorted index
    lists, then one extra -1 for every repeated generator (e_i^2 = -1).
    """
    if a < 256 and b < 256:
        return blade_table()[(a << 8) | b]
    return _blade_mul_direct(a, b)


def _conj_sign(grade: int) -> int:
    return -1 if (grade * (grade + 1) // 2) & 1 else 1


def _reverse_sign(grade: int) -> int:
    return -1 if (grade * (grade - 1) // 2) & 1 else 1


class Multivector:
    """Finitely supported map from blades of Cl_m to GaussianRational."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        self.terms: dict[int, GaussianRational] = {}
        if terms:
            for blade, c in terms.items() if isinstance(terms, dict) else terms:
                if not isinstance(c, GaussianRational):
                    c = GaussianRational(c)
                if c:
                    prev = self.terms.get(blade)
                    tot = c if prev is None else prev + c
                    if tot:
                        self.terms[blade] = tot
                    elif blade in self.terms:
                        del self.terms[blade]

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls(m)

    @classmethod
    def scalar(cls, m: int, c) -> "Multivector":
        return cls(m, {0: c if isinstance(c, GaussianRational) else GaussianRational(c)})

    @classmethod
    def basis_vector(cls, m: int, j: int) -> "Multivector":
        if not 1 <= j <= m:
            raise ValueError(f"e_{j} not in Cl_{m}")
        return cls(m, {1 << (j - 1): GR_ONE})

    @classmethod
    def blade(cls, m: int, indices, coef=1) -> "Multivector":
        mask = 0
        for i in indices:
            if not 1 <= i <= m:
                raise ValueError(f"index {i} out of range for Cl_{m}")
            if mask & (1 << (i - 1)):
                raise ValueError("repeated index in blade")
            mask |= 1 << (i - 1)
        if not isinstance(coef, GaussianRational):
            coef = GaussianRational(coef)
        return cls(m, {mask: coef})

    @classmethod
    def vector(cls, m: int, coeffs) -> "Multivector":
        """Grade-1 element sum_j coeffs[j] e_{j+1}."""
        return cls(m, {1 << j: GaussianRational(c) for j, c in enumerate(coeffs)})

    def copy(self) -> "Multivector":
        out = Multivector.__new__(Multivector)
        out.m = self.m
        out.terms = dict(self.terms)
        return out

    # -- ring operations -----------------------------------------------

    def _check(self, other: "Multivector"):
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: Cl_{self.m} vs Cl_{other.m}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.m, other)
        self._check(other)
        out = dict(self.terms)
        for blade, c in other.terms.items():
            prev = out.get(blade)
            tot = c if prev is None else prev + c
            if tot:
                out[blade] = tot
            elif blade in out:
                del out[blade]
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = out
        return mv

    __radd__ = __add__

    def __neg__(self):
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = {b: -c for b, c in self.terms.items()}
        return mv

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return Multivector.scalar(self.m, other) - self

    def __mul__(self, other):
        """Geometric product (or coefficient scaling for scalars)."""
        if not isinstance(other, Multivector):
            c = other if isinstance(other, GaussianRational) else GaussianRational(other)
            if not c:
                return Multivector.zero(self.m)
            mv = Multivector.__new__(Multivector)
            mv.m = self.m
            mv.terms = {b: v * c for b, v in self.terms.items()}
            return mv
        self._check(other)
        acc: dict[int, GaussianRational] = {}
        table = blade_table()
        for a, ca in self.terms.items():
            a8 = a << 8
            for b, cb in other.terms.items():
                sign, blade = table[a8 | b]
                c = ca * cb
                if sign < 0:
                    c = -c
                prev = acc.get(blade)
                tot = c if prev is None else prev + c
                if tot:
                    acc[blade] = tot
                elif blade in acc:
                    del acc[blade]
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = acc
        return mv

    def __rmul__(self, other):
        # scalar * mv only; mv * mv handled by __mul__
        if isinstance(other, Multivector):
            return NotImplemented
        return self * other

    def __pow__(self, k: int):
        out = Multivector.scalar(self.m, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            if isinstance(other, (int, GaussianRational, type(mpq()))):
                other = Multivector.scalar(self.m, other)
            else:
                return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- involutions and grades ------------------------------------------

    def conjugate(self) -> "Multivector":
        """Clifford conjugation (dagger): e_j -> -e_j, anti-automorphism,
        complex conjugation on coefficients."""
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = {
            b: c.conjugate() if _conj_sign(b.bit_count()) > 0 else -c.conjugate()
            for b, c in self.terms.items()
        }
        return mv

    def pure_reverse(self) -> "Multivector":
        """Reversion of blade factors only; coefficients untouched."""
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = {
            b: c if _reverse_sign(b.bit_count()) > 0 else -c
            for b, c in self.terms.items()
        }
        return mv

    def grade(self, j: int) -> "Multivector":
        mv = Multivector.__new__(Multivector)
        mv.m = self.m
        mv.terms = {b: c for b, c in self.terms.items() if b.bit_count() == j}
        return mv

    def grades(self) -> set[int]:
        return {b.bit_count() for b in self.terms}

    def scalar_part(self) -> GaussianRational:
        return self.terms.get(0, GaussianRational(0))

    def __repr__(self):
        return f"Multivector(Cl_{self.m}: {format_multivector(self)})"

    def __str__(self):
        return format_multivector(self)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Outer product: the grade-(j+k) parts of the products of the
    grade-j and grade-k components."""
    a._check(b)
    acc: dict[int, GaussianRational] = {}
    for ba, ca in a.terms.items():
        ga = ba.bit_count()
        for bb, cb in b.terms.items():
            if ba & bb:
                continue  # repeated generator never survives in the wedge
            sign, blade = blade_mul(ba, bb)
            if blade.bit_count() != ga + bb.bit_count():
                continue
            c = ca * cb
            if sign < 0:
                c = -c
            prev = acc.get(blade)
            tot = c if prev is None else prev + c
            if tot:
                acc[blade] = tot
            elif blade in acc:
                del acc[blade]
    return Multivector(a.m, acc)


def vector_dot(x: Multivector, y: Multivector) -> GaussianRational:
    """Euclidean pairing of two grade-1 elements, via x y = x^y - <x,y>."""
    if x.grades() - {1} or y.grades() - {1}:
        raise ValueError("vector_dot needs grade-1 arguments")
    return -(x * y).scalar_part()


# -- Hermitian layer ------------------------------------------------------


def witt(n: int, j: int) -> Multivector:
    """f_j = (e_j - i e_{n+j})/2 inside Cl_2n."""
    if not 1 <= j <= n:
        raise ValueError(f"witt index {j} out of range for n={n}")
    half = GaussianRational(mpq(1, 2))
    mihalf = GaussianRational(0, mpq(-1, 2))
    return Multivector(2 * n, {1 << (j - 1): half, 1 << (n + j - 1): mihalf})


def witt_dagger(n: int, j: int) -> Multivector:
    """f_j^+ = -(e_j + i e_{n+j})/2 inside Cl_2n."""
    if not 1 <= j <= n:
        raise ValueError(f"witt index {j} out of range for n={n}")
    mhalf = GaussianRational(mpq(-1, 2))
    mihalf = GaussianRational(0, mpq(-1, 2))
    return Multivector(2 * n, {1 << (j - 1): mhalf, 1 << (n + j - 1): mihalf})


def beta(n: int) -> Multivector:
    """The spin-Euler element sum_j f_j^+ f_j of Cl_2n."""
    if n < 1:
        raise ValueError("beta needs n >= 1")
    out = Multivector.zero(2 * n)
    for j in range(1, n + 1):
        out = out + witt_dagger(n, j) * witt(n, j)
    return out


def spinor_vacuum(n: int) -> Multivector:
    """The primitive idempotent I = f_1 f_1^+ ... f_n f_n^+."""
    out = Multivector.scalar(2 * n, 1)
    for j in range(1, n + 1):
        out = out * (witt(n, j) * witt_dagger(n, j))
    return out


@dataclass
class SpinorBasis:
    """Ordered basis {f_A^+ I : |A| = j} of the spinor sector S^(j) in Cl_2n."""

    n: int
    j: int
    vectors: list[Multivector]
    index_sets: list[tuple[int, ...]]


def spinor_basis(n: int, j: int) -> SpinorBasis:
    if not 0 <= j <= n:
        raise ValueError(f"spinor sector j={j} out of range for n={n}")
    vac = spinor_vacuum(n)
    vectors = []
    sets = []
    for subset in _subsets_of_size(n, j):
        v = vac
        for a in reversed(subset):
            v = witt_dagger(n, a) * v
        vectors.append(v)
        sets.append(subset)
    assert len(vectors) == binomial(n, j)
    return SpinorBasis(n, j, vectors, sets)


def _subsets_of_size(n: int, j: int):
    from itertools import combinations

    return [tuple(c) for c in combinations(range(1, n + 1), j)]


def mv_poly_eval(coeffs, x: Multivector) -> Multivector:
    """Evaluate a polynomial with rational coefficients (ascending) at a
    multivector argument."""
    out = Multivector.zero(x.m)
    for c in reversed(list(coeffs)):
        out = out * x + Multivector.scalar(x.m, c)
    return out


def lagrange_at_beta(n: int, j: int) -> Multivector:
    """L_j(beta) for the interpolation nodes 0..n."""
    b = beta(n)
    out = Multivector.scalar(2 * n, 1)
    for l in range(n + 1):
        if l == j:
            continue
        out = out * (b - Multivector.scalar(2 * n, l)) * GaussianRational(mpq(1, j - l))
    return out


# -- text format -----------------------------------------------------------

_BLADE_RE = re.compile(r"^e(\d+)$")


def format_multivector(mv: Multivector) -> str:
    """Signed sum of "coef*e{indices}" terms, graded then lexicographic.

    Complex coefficients are parenthesised; the scalar blade prints as the
    bare coefficient.  Index digits are single characters (needs m <= 9).
    """
    if not mv.terms:
        return "0"
    items = sorted(mv.terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))
    parts = []
    for blade, c in items:
        ctext = str(c)
        if c.im:
            ctext = f"({ctext})"
        if blade == 0:
            parts.append(ctext)
        else:
            idx = "".join(str(i + 1) for i in range(mv.m) if blade & (1 << i))
            parts.append(f"{ctext}*e{idx}")
    return " + ".join(parts)


def parse_multivector(text: str, m: int) -> Multivector:
    """Inverse of format_multivector."""
    s = text.strip()
    if s in ("0", ""):
        return Multivector.zero(m)
    acc = Multivector.zero(m)
    for piece in _split_top_level(s):
        piece = piece.strip()
        if not piece:
            continue
        blade = 0
        coef_text = piece
        if "*e" in piece:
            coef_text, blade_text = piece.rsplit("*e", 1)
            if not blade_text.isdigit():
                raise ValueError(f"bad blade in term {piece!r}")
            for ch in blade_text:
                i = int(ch)
                if not 1 <= i <= m:
                    raise ValueError(f"index {i} out of range for Cl_{m}")
                if blade & (1 << (i - 1)):
                    raise ValueError(f"repeated index in {piece!r}")
                blade |= 1 << (i - 1)
        elif piece.startswith("e") and piece[1:].isdigit():
            coef_text = "1"
            for ch in piece[1:]:
                blade |= 1 << (int(ch) - 1)
        c = parse_gaussian(coef_text)
        acc = acc + Multivector(m, {blade: c})
    return acc


def _split_top_level(s: str) -> list[str]:
    """Split on " + " separators, keeping parenthesised scalars intact."""
    parts = []
    depth = 0
    cur = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and s.startswith(" + ", i):
            parts.append("".join(cur))
            cur = []
            i += 3
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts
