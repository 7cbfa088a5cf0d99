"""Exact Jacobi and Gegenbauer polynomials and their recurrence verifiers.

Polynomials are coefficient tuples of rationals in ascending powers; the
degree -1 polynomial (empty tuple) is the zero polynomial, which makes the
recurrences below valid verbatim at the formal k = -1 / q = -1 edge.
All gamma-function ratios are evaluated as Pochhammer products, so every
coefficient stays rational (also for half-integer parameters).
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .exactnum import binomial, factorial, pochhammer


# -- raw coefficient arithmetic (ascending powers, zero == empty tuple) ----


def ptrim(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def padd(a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return ptrim(out)


def pneg(a) -> tuple:
    return tuple(-x for x in a)


def psub(a, b) -> tuple:
    return padd(a, pneg(b))


def pscale(a, s) -> tuple:
    s = mpq(s)
    if not s:
        return ()
    return tuple(x * s for x in a)


def pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim(out)


def pder(a) -> tuple:
    return ptrim([i * x for i, x in enumerate(a)][1:])


def pcompose_affine(a, u, v) -> tuple:
    """Coefficients of p(u*x + v)."""
    out: tuple = ()
    lin = (mpq(v), mpq(u))
    power: tuple = (mpq(1),)
    for c in a:
        out = padd(out, pscale(power, c))
        power = pmul(power, lin)
    return out


def peval(a, x):
    x = mpq(x)
    acc = mpq(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class OrthoPoly:
    """A classical orthogonal polynomial with its family tag.

    family is ("jacobi", a, b) or ("gegenbauer", mu); degree -1 encodes the
    zero polynomial.
    """

    family: tuple
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree >= 0 and (not self.coeffs or not self.coeffs[-1]):
            raise ValueError("leading coefficient must be nonzero for degree >= 0")
        if self.degree < 0 and self.coeffs:
            raise ValueError("degree -1 means the zero polynomial")

    def __call__(self, x):
        return peval(self.coeffs, x)

    def derivative_coeffs(self) -> tuple:
        return pder(self.coeffs)


def jacobi(k: int, a, b) -> OrthoPoly:
    """Jacobi polynomial P_k^{a,b}, exact; k <= -1 gives 0."""
    a = mpq(a)
    b = mpq(b)
    if a <= -1 or b <= -1:
        raise ValueError("jacobi needs a > -1 and b > -1")
    if k < 0:
        return OrthoPoly(("jacobi", a, b), -1, ())
    return OrthoPoly(("jacobi", a, b), k, ptrim(_jacobi_coeffs(k, a, b)))


def _jacobi_coeffs(k: int, a, b) -> list:
    # (1/k!) sum_j C(k,j) (a+j+1)_{k-j} (a+b+k+1)_j ((x-1)/2)^j
    out = [mpq(0)] * (k + 1)
    inv_kfact = mpq(1, factorial(k))
    for j in range(k + 1):
        cj = inv_kfact * binomial(k, j) * pochhammer(a + j + 1, k - j) \
            * pochhammer(a + b + k + 1, j) / mpq(2 ** j)
        # expand (x-1)^j
        for i in range(j + 1):
            sgn = -1 if (j - i) & 1 else 1
            out[i] += sgn * cj * binomial(j, i)
    return out


def gegenbauer(k: int, mu) -> OrthoPoly:
    """Gegenbauer polynomial C_k^mu, exact; k <= -1 gives 0."""
    mu = mpq(mu)
    if 2 * mu <= -1:
        raise ValueError("gegenbauer needs mu > -1/2")
    if k < 0:
        return OrthoPoly(("gegenbauer", mu), -1, ())
    out = [mpq(0)] * (k + 1)
    for j in range(k // 2 + 1):
        sgn = -1 if j & 1 else 1
        out[k - 2 * j] = sgn * pochhammer(mu, k - j) \
            / (factorial(j) * factorial(k - 2 * j)) * mpq(2 ** (k - 2 * j))
    coeffs = ptrim(out)
    if not coeffs:  # mu = 0 collapses every positive degree
        return OrthoPoly(("gegenbauer", mu), -1, ())
    return OrthoPoly(("gegenbauer", mu), k, coeffs)


def zonal_gegenbauer_coeffs(k: int, mu) -> tuple:
    """Coefficients of ((k+mu)/mu) C_k^mu with the mu cancelled exactly.

    The ratio (mu)_{k-j}/mu = (mu+1)_{k-j-1} removes the pole, so mu = 0
    (dimension two) evaluates to twice the Chebyshev polynomial.
    """
    mu = mpq(mu)
    if k == 0:
        return (mpq(1),)
    out = [mpq(0)] * (k + 1)
    for j in range(k // 2 + 1):
        sgn = -1 if j & 1 else 1
        out[k - 2 * j] = sgn * (k + mu) * pochhammer(mu + 1, k - j - 1) \
            / (factorial(j) * factorial(k - 2 * j)) * mpq(2 ** (k - 2 * j))
    return ptrim(out)


def _jc(k: int, a, b) -> tuple:
    """Coefficient tuple of P_k^{a,b} (0 for k < 0)."""
    if k < 0:
        return ()
    return jacobi(k, a, b).coeffs


def _gc(k: int, mu) -> tuple:
    if k < 0:
        return ()
    return gegenbauer(k, mu).coeffs


# -- identity verifiers -----------------------------------------------------

_X = (mpq(0), mpq(1))
_ONE_PLUS_X = (mpq(1), mpq(1))
_ONE_MINUS_X = (mpq(1), mpq(-1))


def _record(failures, identity, params, residual):
    failures.append({
        "identity": identity,
        "params": dict(params),
        "residual": "0" if not residual else str(list(map(str, residual))),
    })


def verify_jacobi_recurrences(k_max: int, a_values, b_values):
    """Check the five contiguous/derivative Jacobi relations exactly.

    Returns (number of checks, failure list).  The k = -1 edge is included
    for the three relations that hold there formally.  The expansion
    relation over lower-degree polynomials is only checked for integer a
    (its gamma ratios are rational only then).
    """
    checks = 0
    failures = []
    for a in map(mpq, a_values):
        for b in map(mpq, b_values):
            for k in range(-1, k_max + 1):
                prm = {"k": k, "a": str(a), "b": str(b)}
                # jacobi1
                r = psub(psub(_jc(k + 1, a + 1, b), _jc(k + 1, a, b + 1)),
                         _jc(k, a + 1, b + 1))
                checks += 1
                if r:
                    _record(failures, "jacobi1", prm, r)
                # jacobi2
                lhs = padd(pmul(_ONE_MINUS_X, _jc(k, a + 1, b)),
                           pmul(_ONE_PLUS_X, _jc(k, a, b + 1)))
                r = psub(lhs, pscale(_jc(k, a, b), 2))
                checks += 1
                if r:
                    _record(failures, "jacobi2", prm, r)
                # jacobi3
                lhs = padd(pscale(_jc(k + 1, a, b + 1), k + a + b + 2),
                           pscale(_jc(k, a, b + 1), k + a + 1))
                r = psub(lhs, pscale(_jc(k + 1, a, b), 2 * k + a + b + 3))
                checks += 1
                if r:
                    _record(failures, "jacobi3", prm, r)
                if k >= 0:
                    # jacobi5
                    r = psub(pder(_jc(k, a, b)),
                             pscale(_jc(k - 1, a + 1, b + 1),
                                    mpq(k + a + b + 1, 2)))
                    checks += 1
                    if r:
                        _record(failures, "jacobi5", prm, r)
                if k >= 0 and a.denominator == 1 and a >= 0:
                    # jacobi4: P_k^{a+1,b} expanded over P_j^{a,b}
                    pref = 1 / pochhammer(k + b + 1, int(a) + 1)
                    rhs: tuple = ()
                    for j in range(k + 1):
                        cj = (2 * j + a + b + 1) * pochhammer(j + b + 1, int(a))
                        rhs = padd(rhs, pscale(_jc(j, a, b), cj))
                    r = psub(_jc(k, a + 1, b), pscale(rhs, pref))
                    checks += 1
                    if r:
                        _record(failures, "jacobi4", prm, r)
    return checks, failures


def kappa(n: int, p: int, q: int):
    """(n-1+p+q)/(n-1) * C(n-2+p, p): the expansion weights of the
    lower-parameter Jacobi sum, and the sharp constant of the bihomogeneous
    harmonic kernel."""
    return mpq(n - 1 + p + q, n - 1) * binomial(n - 2 + p, p)


def verify_jacobi_special(q_max: int, n_values, p_max: int):
    """Check the three special-case relations (derivative pair and the
    parameter-lowering expansion) for n >= 2, p > q, with q = -1 formal."""
    checks = 0
    failures = []
    for n in n_values:
        if n < 2:
            raise ValueError("special relations need n >= 2")
        for p in range(0, p_max + 1):
            for q in range(-1, min(q_max, p - 1) + 1):
                prm = {"n": n, "p": p, "q": q}
                pq1 = _jc(q + 1, n - 2, p - q)
                dpq1 = pder(pq1)
                # jacobi6: (p-q) P + 2s P' = (p+1) P_{q+1}^{n-1,p-q-1}
                lhs = padd(pscale(pq1, p - q), pmul(_ONE_PLUS_X, dpq1))
                r = psub(lhs, pscale(_jc(q + 1, n - 1, p - q - 1), p + 1))
                checks += 1
                if r:
                    _record(failures, "jacobi6", prm, r)
                # jacobi7: (q+1) P - 2s P' = -(p+1) P_q^{n-1,p-q}
                lhs = psub(pscale(pq1, q + 1), pmul(_ONE_PLUS_X, dpq1))
                r = padd(lhs, pscale(_jc(q, n - 1, p - q), p + 1))
                checks += 1
                if r:
                    _record(failures, "jacobi7", prm, r)
                if q >= 0:
                    # jacobi8: C(n-1+p,p) P_q^{n-1,p-q} = sum_j kappa P_{q-j}^{n-2,p-q}
                    rhs: tuple = ()
                    for j in range(q + 1):
                        rhs = padd(rhs, pscale(_jc(q - j, n - 2, p - q),
                                               kappa(n, p - j, q - j)))
                    r = psub(pscale(_jc(q, n - 1, p - q), binomial(n - 1 + p, p)),
                             rhs)
                    checks += 1
                    if r:
                        _record(failures, "jacobi8", prm, r)
    return checks, failures


def verify_gegenbauer_relations(k_max: int, mu_values):
    """Check the recurrence, the two parameter-shift relations and the two
    derivative relations of the Gegenbauer family, exactly."""
    checks = 0
    failures = []
    for mu in map(mpq, mu_values):
        if 2 * mu <= -1:
            raise ValueError("gegenbauer relations need mu > -1/2")
        for k in range(0, k_max + 1):
            prm = {"k": k, "mu": str(mu)}
            ck = _gc(k, mu)
            dck = pder(ck)
            # recurrence: k C_k = 2(k+mu-1) t C_{k-1} - (k+2mu-2) C_{k-2}
            rhs = psub(pscale(pmul(_X, _gc(k - 1, mu)), 2 * (k + mu - 1)),
                       pscale(_gc(k - 2, mu), k + 2 * mu - 2))
            r = psub(pscale(ck, k), rhs)
            checks += 1
            if r:
                _record(failures, "GegenRec", prm, r)
            # shift 1: (k+mu) C_k = mu (C_k^{mu+1} - C_{k-2}^{mu+1})
            rhs = pscale(psub(_gc(k, mu + 1), _gc(k - 2, mu + 1)), mu)
            r = psub(pscale(ck, k + mu), rhs)
            checks += 1
            if r:
                _record(failures, "Gegen1", prm, r)
            # shift 2: 4mu(mu+k+1)(1-t^2) C_k^{mu+1}
            #          = (k+2mu)(k+2mu+1) C_k - (k+1)(k+2) C_{k+2}
            one_minus_t2 = (mpq(1), mpq(0), mpq(-1))
            lhs = pscale(pmul(one_minus_t2, _gc(k, mu + 1)),
                         4 * mu * (mu + k + 1))
            rhs = psub(pscale(ck, (k + 2 * mu) * (k + 2 * mu + 1)),
                       pscale(_gc(k + 2, mu), (k + 1) * (k + 2)))
            r = psub(lhs, rhs)
            checks += 1
            if r:
                _record(failures, "Gegen2", prm, r)
            # derivative: C_k' = 2 mu C_{k-1}^{mu+1}
            r = psub(dck, pscale(_gc(k - 1, mu + 1), 2 * mu))
            checks += 1
            if r:
                _record(failures, "Gegen3", prm, r)
            # Euler-type: k C_k - t C_k' = -2 mu C_{k-2}^{mu+1}
            lhs = psub(pscale(ck, k), pmul(_X, dck))
            r = padd(lhs, pscale(_gc(k - 2, mu + 1), 2 * mu))
            checks += 1
            if r:
                _record(failures, "Gegen4", prm, r)
    return checks, failures


def verify_family_bridge(k_max: int, mu_values):
    """Gegenbauer as a rescaled symmetric Jacobi polynomial, exactly."""
    checks = 0
    failures = []
    for mu in map(mpq, mu_values):
        for k in range(0, k_max + 1):
            scale = pochhammer(2 * mu, k) / pochhammer(mu + mpq(1, 2), k)
            r = psub(_gc(k, mu), pscale(_jc(k, mu - mpq(1, 2), mu - mpq(1, 2)), scale))
            checks += 1
            if r:
                _record(failures, "family-bridge", {"k": k, "mu": str(mu)}, r)
    return checks, failures
