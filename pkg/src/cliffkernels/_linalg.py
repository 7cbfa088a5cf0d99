"""Exact sparse linear algebra over GaussianRational.

Vectors are sparse dicts {coordinate key: coefficient}.  Plain Gaussian
elimination with exact division; no pivoting heuristics are needed because
nothing is rounded."""

from __future__ import annotations

from .exactnum import GaussianRational

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def _axpy(row: dict, factor, other: dict):
    """row -= factor * other, in place."""
    for k, v in other.items():
        prev = row.get(k)
        tot = (-factor * v) if prev is None else prev - factor * v
        if tot:
            row[k] = tot
        elif k in row:
            del row[k]


def _eliminate(rows, nunknowns: int):
    """Row-reduce equations over unknowns 0..nunknowns-1.

    Keys >= nunknowns (the right-hand side) ride along but never pivot.
    Returns (pivots, leftovers): pivots maps the leading unknown to its
    normalized row; leftovers are fully reduced rows with no unknowns left
    (nonempty ones witness inconsistency of an augmented system)."""
    pivots: dict[int, dict] = {}
    leftovers = []
    for eq in rows:
        row = dict(eq)
        while True:
            lead = None
            for k in row:
                if k < nunknowns and (lead is None or k < lead):
                    lead = k
            if lead is None:
                if row:
                    leftovers.append(row)
                break
            piv = pivots.get(lead)
            if piv is None:
                inv = row[lead]
                pivots[lead] = {k: v / inv for k, v in row.items()}
                break
            _axpy(row, row[lead], piv)
    # back-substitute to reduced form: a pivot row only holds unknowns >= its
    # lead, so one decreasing pass clears every cross-pivot entry
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for k in [k for k in row if k != lead and k in pivots]:
            _axpy(row, row[k], pivots[k])
    return pivots, leftovers


def _equations_from_columns(columns, extra=None, nunknowns=None):
    """Transpose sparse columns into equation rows, one per coordinate key.

    extra maps coordinate keys of a right-hand side to the sentinel column
    index nunknowns."""
    eqs: dict = {}
    for i, col in enumerate(columns):
        for key, c in col.items():
            eqs.setdefault(key, {})[i] = c
    if extra is not None:
        for key, c in extra.items():
            if c:
                eqs.setdefault(key, {})[nunknowns] = c
    return [eqs[k] for k in sorted(eqs, key=repr)]


def rank_of_columns(columns) -> int:
    """Exact rank of the matrix whose columns are the given sparse dicts."""
    pivots, _ = _eliminate(_equations_from_columns(columns), len(columns))
    return len(pivots)


def nullspace_of_columns(columns) -> list[list[GaussianRational]]:
    """Basis of {c : sum_i c_i col_i = 0}, as dense coefficient lists."""
    ncols = len(columns)
    pivots, _ = _eliminate(_equations_from_columns(columns), ncols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [_ZERO] * ncols
        vec[free] = _ONE
        for p, row in pivots.items():
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def solve_in_span(columns, target):
    """Coefficients c with sum_i c_i col_i = target, or None.

    Free coefficients are set to zero; the result is verified exactly before
    being returned."""
    ncols = len(columns)
    rows = _equations_from_columns(columns, extra=target, nunknowns=ncols)
    pivots, leftovers = _eliminate(rows, ncols)
    if any(left.get(ncols) for left in leftovers):
        return None
    sol = [_ZERO] * ncols
    for p, row in pivots.items():
        # normalized row: x_p + sum_{free} a x_free = rhs  (free -> 0)
        rhs = row.get(ncols)
        if rhs:
            sol[p] = rhs
    # the free coefficients of dependent columns were zeroed, which can break
    # equality; verify and reject rather than return a wrong combination
    residual: dict = {}
    for i, col in enumerate(columns):
        ci = sol[i]
        if not ci:
            continue
        for key, c in col.items():
            prev = residual.get(key)
            tot = ci * c if prev is None else prev + ci * c
            if tot:
                residual[key] = tot
            elif key in residual:
                del residual[key]
    for key, c in target.items():
        prev = residual.get(key)
        tot = -c if prev is None else prev - c
        if tot:
            residual[key] = tot
        elif key in residual:
            del residual[key]
    return None if residual else sol


def independent(columns) -> bool:
    return rank_of_columns(columns) == len(columns)
