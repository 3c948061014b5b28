"""Graded dimensions of D(A, mu) by direct exact linear algebra.

This is deliberately independent of the incremental basis construction: for
each degree d the membership conditions are expressed as linear constraints on
the 2(d+1) unknown coefficients of a derivation, and the dimension of the
solution space is computed by exact elimination (fraction-free over Q,
modular over F_p).  Divisibility of a homogeneous polynomial h by
``(x + c*y)^k`` is read off from its expansion in the variables
``u = x + c*y, v = y``: the coefficients of u^0, ..., u^(k-1) must vanish, and
they are integer-binomial combinations of the coefficients of h.
"""

from __future__ import annotations

import math

from .arrangement import Multiarrangement


def _constraint_rows(arrangement: Multiarrangement, d: int):
    """Rows of the linear system cutting out D(A, mu)_d inside K^(2(d+1)).

    Unknowns are ordered f_0..f_d, g_0..g_d where f_j is the coefficient of
    x^j y^(d-j) in f (and likewise for g).
    """
    p = arrangement.field.characteristic
    rows = []
    for form, mult in arrangement.items():
        ax, c = form.ax.value, form.ay.value
        for k in range(min(mult, d + 1)):
            row = [0] * (2 * (d + 1))
            if not ax:
                # form is y; theta(y) = g and the u^k coefficient is g_(d-k)
                row[(d + 1) + (d - k)] = 1
            else:
                # u^k coefficient of h: sum_j C(j, k) * (-c)^(j-k) * h_j,
                # with h_j = f_j + c * g_j
                t = 1
                for j in range(k, d + 1):
                    w = math.comb(j, k) * t
                    if p:
                        w %= p
                        row[j] = w
                        row[(d + 1) + j] = w * c % p
                    else:
                        row[j] = w
                        row[(d + 1) + j] = w * c
                    t = t * (-c) % p if p else t * (-c)
            rows.append(row)
    return rows


def _rank_rational(rows) -> int:
    """Rank over Q via denominator clearing and Bareiss fraction-free elimination."""
    mat = []
    for row in rows:
        lcm_den = 1
        for v in row:
            lcm_den = math.lcm(lcm_den, int(v.denominator))
        mat.append([int(v.numerator) * (lcm_den // int(v.denominator)) for v in row])
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        piv_row = mat[rank]
        piv = piv_row[col]
        for i in range(rank + 1, len(mat)):
            row = mat[i]
            factor = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * piv - factor * piv_row[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank_mod_p(rows, p: int) -> int:
    """Rank over F_p by ordinary row reduction."""
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        piv_row = [v * inv % p for v in mat[rank]]
        mat[rank] = piv_row
        for i in range(rank + 1, len(mat)):
            factor = mat[i][col] % p
            if factor:
                mat[i] = [(v - factor * w) % p for v, w in zip(mat[i], piv_row)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def dim_degree(arrangement: Multiarrangement, d: int) -> int:
    """dim of the degree-d graded piece of D(A, mu)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    rows = _constraint_rows(arrangement, d)
    if not rows:
        return 2 * (d + 1)
    p = arrangement.field.characteristic
    rank = _rank_mod_p(rows, p) if p else _rank_rational(rows)
    return 2 * (d + 1) - rank


def dimension_table(arrangement: Multiarrangement) -> list[int]:
    """Graded dimensions for d = 0, ..., |mu|."""
    return [dim_degree(arrangement, d) for d in range(arrangement.total + 1)]


def exponents_by_oracle(arrangement: Multiarrangement) -> tuple[int, int]:
    """Exponents read off the graded dimensions alone, largest first.

    The smaller exponent is the first degree with a nonzero piece; the larger
    is the first degree whose dimension exceeds what multiples of the first
    generator alone can provide.  A mismatch with |mu| would contradict
    freeness and raises RuntimeError.
    """
    total = arrangement.total
    e1 = None
    for d in range(total + 1):
        if dim_degree(arrangement, d) > 0:
            e1 = d
            break
    if e1 is None:
        raise RuntimeError("no nonzero graded piece up to |mu|; this should be impossible")
    e2 = None
    for d in range(e1, total + 1):
        if dim_degree(arrangement, d) > d - e1 + 1:
            e2 = d
            break
    if e2 is None:
        raise RuntimeError("second exponent not found up to |mu|; this should be impossible")
    if e1 + e2 != total:
        raise RuntimeError(
            f"oracle exponents {e1} + {e2} != |mu| = {total}; freeness violated"
        )
    return (e2, e1)
