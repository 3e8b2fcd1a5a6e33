"""Lattice algorithms: LLL reduction, exact SVP enumeration, brute oracle.

Bases are tuples of rows of mpmath floats (see embedding.LatticeBasis).
shortest_vector is exact: LLL preprocessing followed by Fincke-Pohst
enumeration with pruning disabled.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import mpmath

from .embedding import LatticeBasis, norm_sq
from .errors import BoundTooLarge, PrecisionExhausted, RankTooLarge


@dataclass(frozen=True)
class SvpResult:
    min_sq: object         # mpf squared Euclidean minimum
    witness: tuple         # integer coefficients w.r.t. the input basis
    certified_rel_err: object


def _gso(rows, n):
    """Gram-Schmidt: returns (mu, b_star_sq) for the given rows."""
    k = len(rows)
    mu = [[mpmath.mpf(0)] * k for _ in range(k)]
    star = [list(r) for r in rows]
    bsq = [mpmath.mpf(0)] * k
    for i in range(k):
        for j in range(i):
            if bsq[j] == 0:
                raise PrecisionExhausted("zero Gram-Schmidt norm")
            mu[i][j] = mpmath.fsum(rows[i][t] * star[j][t] for t in range(n)) / bsq[j]
            for t in range(n):
                star[i][t] -= mu[i][j] * star[j][t]
        bsq[i] = mpmath.fsum(c * c for c in star[i])
        mu[i][i] = mpmath.mpf(1)
    return mu, bsq


def lll_reduce(B, delta=0.99):
    """delta-LLL-reduced basis of the same lattice; transform is recorded."""
    rows, U = _lll_rows(B.rows, delta, B.precision_bits)
    return LatticeBasis(rows=rows, precision_bits=B.precision_bits,
                        source=B.source)


def _lll_rows(rows_in, delta, prec):
    """LLL on row vectors.  Returns (reduced rows, integer transform U) with
    reduced = U * original."""
    with mpmath.workprec(prec):
        rows = [list(r) for r in rows_in]
        k = len(rows)
        n = len(rows[0])
        U = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
        deltam = mpmath.mpf(delta)

        mu, bsq = _gso(rows, n)

        def size_reduce(i, j):
            r = int(mpmath.nint(mu[i][j]))
            if r:
                for t in range(n):
                    rows[i][t] -= r * rows[j][t]
                for t in range(k):
                    U[i][t] -= r * U[j][t]
                for t in range(j + 1):
                    mu[i][t] -= r * mu[j][t]

        i = 1
        guard = 0
        while i < k:
            guard += 1
            if guard > 10000 * k * k:
                raise PrecisionExhausted("LLL failed to terminate")
            for j in range(i - 1, -1, -1):
                size_reduce(i, j)
            if bsq[i] >= (deltam - mu[i][i - 1] ** 2) * bsq[i - 1]:
                i += 1
            else:
                rows[i], rows[i - 1] = rows[i - 1], rows[i]
                U[i], U[i - 1] = U[i - 1], U[i]
                mu, bsq = _gso(rows, n)
                i = max(i - 1, 1)
        return tuple(tuple(r) for r in rows), tuple(tuple(r) for r in U)


def shortest_vector(B, delta=0.99):
    """Exact shortest nonzero vector via LLL + unpruned Fincke-Pohst."""
    k = B.rank
    if k > 16:
        raise RankTooLarge(f"rank {k} exceeds the enumeration scope")
    prec = B.precision_bits
    with mpmath.workprec(prec):
        rows, U = _lll_rows(B.rows, delta, prec)
        n = len(rows[0])
        mu, bsq = _gso(rows, n)
        if any(b <= 0 for b in bsq):
            raise PrecisionExhausted("degenerate Gram-Schmidt norms")

        # initial radius: best single reduced basis vector
        best_sq = min(norm_sq(r, prec) for r in rows)
        best_coeff = None
        for idx, r in enumerate(rows):
            if norm_sq(r, prec) == best_sq:
                best_coeff = tuple(1 if t == idx else 0 for t in range(k))
                break

        # enumeration bound slightly above best_sq so ties/exact hits survive
        eps = mpmath.mpf(2) ** (-(prec // 2))
        coeffs = [0] * k
        center = [mpmath.mpf(0)] * k
        partial = [mpmath.mpf(0)] * (k + 1)

        def recurse(level, bound):
            nonlocal best_sq, best_coeff
            # bound is remaining squared budget at this level
            c = -mpmath.fsum(coeffs[j] * mu[j][level] for j in range(level + 1, k))
            limit = mpmath.sqrt(bound / bsq[level]) if bound > 0 else mpmath.mpf(0)
            lo = int(mpmath.ceil(c - limit - eps))
            hi = int(mpmath.floor(c + limit + eps))
            for x in range(lo, hi + 1):
                coeffs[level] = x
                contrib = (x - c) ** 2 * bsq[level]
                rem = bound - contrib
                if rem < -eps * bound:
                    continue
                if level == 0:
                    if any(coeffs):
                        v_sq = _coeff_norm_sq(coeffs, rows, n)
                        if v_sq < best_sq and v_sq > eps:
                            best_sq = v_sq
                            best_coeff = tuple(coeffs)
                else:
                    recurse(level - 1, rem)
            coeffs[level] = 0

        recurse(k - 1, best_sq * (1 + eps))

        # map coefficients through U back to the input basis
        witness = tuple(
            sum(best_coeff[i] * U[i][j] for i in range(k)) for j in range(k))
        # recompute from the original basis for the reported value
        min_sq = _coeff_norm_sq(witness, B.rows, n)
        rel_err = mpmath.mpf(2) ** (-(prec // 4))
    return SvpResult(min_sq=min_sq, witness=witness, certified_rel_err=rel_err)


def _coeff_norm_sq(coeffs, rows, n):
    vec = [mpmath.fsum(coeffs[i] * rows[i][t] for i in range(len(rows)))
           for t in range(n)]
    return mpmath.fsum(c * c for c in vec)


def brute_force_min(B, coeff_bound):
    """Minimum squared length over all nonzero coefficient vectors with
    entries in [-coeff_bound, coeff_bound].  Independent test oracle."""
    k = B.rank
    if k > 6:
        raise RankTooLarge(f"oracle supports rank <= 6, got {k}")
    if coeff_bound > 10:
        raise BoundTooLarge("coeff_bound must be <= 10")
    n = len(B.rows[0])
    with mpmath.workprec(B.precision_bits):
        best = None
        for coeffs in product(range(-coeff_bound, coeff_bound + 1), repeat=k):
            if not any(coeffs):
                continue
            v_sq = _coeff_norm_sq(coeffs, B.rows, n)
            if best is None or v_sq < best:
                best = v_sq
    return best
