"""Density bounds for concatenated packings and explicit tiny instances.

The finite-level report gives the certified lower bound on log2 of the
center density of the packing built from n copies of the embedded ideal
power tower concatenated with best-known codes.  The asymptotic report
evaluates the density-exponent lower bound of the GV-code family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .codes import ceil_ratio_snapped, entropy_clamped, max_levels, required_distances, best_dimension
from .embedding import embedding_context, lattice_basis, working_precision
from .errors import DeterminantMismatch, PrecisionExhausted, ScaleTooLarge
from .idealarith import alphabet_set, ideal_mul, unit_ideal
from .lattice import shortest_vector
from .numfield import FieldElement, element_product


@dataclass(frozen=True)
class PackingReport:
    poly: str
    m: int
    abs_disc: int
    p: int
    generator: str
    q: int
    n: int
    levels: int
    min_sqs: tuple          # floats for reporting; see log2_center_density
    required_d: tuple
    code_dims: tuple
    dimension: int
    log2_center_density: float
    log2_density: float
    notes: str

    def recompute_log2_center_density(self):
        """Re-evaluate the center-density formula from the stored fields."""
        return _log2_center_density(self.m, self.n, self.levels, self.q,
                                    self.abs_disc, self.min_sqs[-1],
                                    sum(self.code_dims))


@dataclass(frozen=True)
class AsymptoticReport:
    l_max: int
    lambda_lower: float
    trace: tuple            # (level, lambda) checkpoints


def log2_ball_volume(N):
    """log2 of the unit-ball volume in R^N, via exact log-gamma."""
    with mpmath.extraprec(64):
        half = mpmath.mpf(N) / 2
        return (half * mpmath.log(mpmath.pi) - mpmath.loggamma(half + 1)) / mpmath.log(2)


def log2_ball_volume_stirling(N):
    """Stirling form of log2 V_N, kept as a cross-check only."""
    with mpmath.extraprec(64):
        Nf = mpmath.mpf(N)
        ln2 = mpmath.log(2)
        return (-Nf / 2 * mpmath.log(Nf / (2 * mpmath.pi * mpmath.e))
                - mpmath.log(Nf * mpmath.pi) / 2) / ln2


def _log2_center_density(m, n, levels, q, abs_disc, min_sq_top, dim_sum):
    with mpmath.workprec(256):
        ln2 = mpmath.log(2)
        log2_de = mpmath.log(mpmath.mpf(min_sq_top)) / (2 * ln2)
        val = (m * n * log2_de - m * n - n * levels * mpmath.log(q) / ln2
               - mpmath.mpf(n) / 2 * mpmath.log(abs_disc) / ln2
               + mpmath.log(q) / ln2 * dim_sum)
        return float(val)


class MinSqTower:
    """Squared minima of tau(p^i) for i = 0..l, computed incrementally.

    Precision follows the level: entries of the HNF grow like q^(i/m), so
    each level uses max(192, ceil((2i/m) log2 q) + 96) bits, quantized in
    256-bit steps to make the embedding-context cache effective.
    """

    def __init__(self, K, P, assert_corridor=True):
        self.K = K
        self.P = P
        self.assert_corridor = assert_corridor
        self._ideal = unit_ideal(K)
        self._level = 0
        self._contexts = {}
        self.min_sqs = []
        self.rel_errs = []
        self._advance_to(0)

    def _context(self, prec):
        if prec not in self._contexts:
            self._contexts[prec] = embedding_context(self.K, prec)
        return self._contexts[prec]

    def _quantized_precision(self):
        # HNF entries can reach N(p^i) itself (skewed bases for residue
        # degree 1); cancellation amplifies determinant rounding by the
        # entry magnitude, so the 2^(-prec/4) check needs prec >= (4/3) of
        # the norm's bit length.  Quantize in 256-bit steps so the
        # embedding-context cache stays effective.
        nbits = self._ideal.norm.bit_length()
        needed = max(working_precision(self.K.m, self.P.q, self._level),
                     (4 * nbits) // 3 + 96)
        if needed <= 192:
            return 192
        return 192 + 256 * ((needed - 192 + 255) // 256)

    def _advance_to(self, level):
        while self._level < level or not self.min_sqs:
            if self.min_sqs:
                self._ideal = ideal_mul(self._ideal, self.P.hnf)
                self._level += 1
            prec = self._quantized_precision()
            last_exc = None
            for _ in range(4):
                try:
                    ctx = self._context(prec)
                    B = lattice_basis(ctx, self._ideal)
                    sv = shortest_vector(B)
                    break
                except (DeterminantMismatch, PrecisionExhausted) as exc:
                    last_exc = exc
                    prec *= 2
            else:
                raise PrecisionExhausted(str(last_exc))
            if self.assert_corridor:
                _assert_corridor(self.K, self._ideal.norm, sv)
            self.min_sqs.append(sv.min_sq)
            self.rel_errs.append(sv.certified_rel_err)

    def up_to(self, level):
        self._advance_to(level)
        return self.min_sqs[:level + 1]


def _assert_corridor(K, ideal_norm, sv):
    """Lemma bound m*N^(2/m) <= min_sq <= m*(N*sqrt|D|)^(2/m) (Minkowski)."""
    m = K.m
    with mpmath.extraprec(64):
        nval = mpmath.mpf(ideal_norm)
        lower = m * nval ** (mpmath.mpf(2) / m)
        upper = m * (nval * mpmath.sqrt(K.abs_disc)) ** (mpmath.mpf(2) / m)
        tol = mpmath.mpf(2) ** -40 * upper
        if not (lower - tol <= sv.min_sq <= upper + tol):
            raise PrecisionExhausted(
                f"minimum {sv.min_sq} escapes the certified corridor "
                f"[{lower}, {upper}]")


def finite_density_report(K, P, n, table):
    """Center-density lower bound for the packing in dimension m*n."""
    m, q = K.m, P.q
    levels = max_levels(m, q, n)
    tower = MinSqTower(K, P)
    min_sqs = tower.up_to(levels)
    if levels == 0:
        # no code satisfies the level bound; report the bare lattice L_0^n
        log2_delta = _log2_center_density(m, n, 0, q, K.abs_disc,
                                          min_sqs[0], 0)
        return _build_report(K, P, n, 0, min_sqs, (), (), log2_delta,
                             notes="no concatenation: n below q^(2/m)")
    req = tuple(required_distances(min_sqs, rel_err=max(tower.rel_errs)))
    dims = tuple(best_dimension(table, q, n, d) for d in req)
    log2_delta = _log2_center_density(m, n, levels, q, K.abs_disc,
                                      min_sqs[-1], sum(dims))
    return _build_report(K, P, n, levels, min_sqs, req, dims, log2_delta,
                         notes="code dimensions from ingested table")


def _build_report(K, P, n, levels, min_sqs, req, dims, log2_delta, notes):
    m, q = K.m, P.q
    with mpmath.workprec(256):
        ln2 = mpmath.log(2)
        # density form: (d_E/2)^(mn) V_mn / (q^l sqrt|D|)^n * prod M_i
        log2_de = mpmath.log(mpmath.mpf(min_sqs[-1])) / (2 * ln2)
        log2_density = float(
            m * n * (log2_de - 1) + log2_ball_volume(m * n)
            - n * (levels * mpmath.log(q) + mpmath.log(K.abs_disc) / 2) / ln2
            + mpmath.log(q) / ln2 * sum(dims))
    return PackingReport(
        poly=str(K.f), m=m, abs_disc=K.abs_disc, p=P.p,
        generator=str(P.g), q=q, n=n, levels=levels,
        min_sqs=tuple(float(v) for v in min_sqs),
        required_d=tuple(req), code_dims=tuple(dims),
        dimension=m * n,
        log2_center_density=log2_delta,
        log2_density=log2_density,
        notes=notes)


def _ceil_nth_root(value, m):
    """Exact ceil(value^(1/m)) for a positive integer value."""
    r = int(round(value ** (1.0 / m))) if value < 2 ** 50 else _int_nth_root(value, m)
    while r ** m < value:
        r += 1
    while r > 1 and (r - 1) ** m >= value:
        r -= 1
    return r if r ** m >= value else r + 1


def _int_nth_root(value, m):
    r = 1 << ((value.bit_length() + m - 1) // m)
    while True:
        nr = ((m - 1) * r + value // r ** (m - 1)) // m
        if nr >= r:
            return r
        r = nr


def asymptotic_lambda(K, P, l_max, checkpoints=(100, 200, 400, 1000)):
    """Lower bound on the asymptotic density exponent of the GV family."""
    if l_max < 10:
        raise ValueError("l_max must be >= 10")
    m, q = K.m, P.q
    tower = MinSqTower(K, P)
    min_sqs = tower.up_to(l_max)
    trace = []
    # For ramified towers lambda(level) oscillates with period e; report the
    # minimum over one trailing period so the bound holds for every residue.
    period = max(P.e, 1)
    for level in sorted(set(c for c in checkpoints if c <= l_max) | {l_max}):
        lam = min(_lambda_at(K, P, min_sqs, tower.rel_errs, lv)
                  for lv in range(max(10, level - period + 1), level + 1))
        trace.append((level, lam))
    lam = trace[-1][1]
    return AsymptoticReport(l_max=l_max, lambda_lower=lam, trace=tuple(trace))


def _lambda_at(K, P, min_sqs, rel_errs, level):
    m, q = K.m, P.q
    n_l = _ceil_nth_root(q ** (2 * level) * K.abs_disc, m)
    prec = max(256, working_precision(m, q, level))
    with mpmath.workprec(prec):
        top = min_sqs[level]
        hsum = mpmath.mpf(0)
        plotkin_num = n_l * (q - 1)  # exact: rho >= (q-1)/q iff g*q >= n*(q-1)
        for i in range(level):
            # plain ceiling: the ratios grow like q^(2(level-i)/m), so a
            # guarded ceiling is unattainable and a +-1 slip is negligible
            g = int(mpmath.ceil(top / min_sqs[i]))
            if g * q >= plotkin_num:
                hsum += 1
            else:
                rho = mpmath.mpf(g) / n_l
                hsum += entropy_clamped(q, rho)
        ln2 = mpmath.log(2)
        lam = (-1 - mpmath.log(K.abs_disc) / (2 * m * ln2)
               - mpmath.log(mpmath.mpf(m) / (2 * mpmath.pi * mpmath.e)) / (2 * ln2)
               + mpmath.log(top) / (2 * ln2)
               - mpmath.log(mpmath.mpf(n_l)) / (2 * ln2)
               - mpmath.log(q) / (m * ln2) * hsum)
        return float(lam)


# ---------------------------------------------------------------------------
# explicit tiny-instance enumeration (m <= 2)
# ---------------------------------------------------------------------------

def _exact_inner(K, x, y):
    """<tau(x), tau(y)> as an exact rational; valid for m <= 2."""
    if K.t == 0:
        # totally real: sum over embeddings of x*y = Tr(x*y)
        return _trace(K, element_product(K, x, y))
    if K.s == 0 and K.m == 2:
        # imaginary quadratic: conj(alpha) = -u - alpha for f = x^2 + ux + v
        u = K.f.coefficients[1]
        ybar = FieldElement((y.coords[0] - u * y.coords[1], -y.coords[1]))
        return _trace(K, element_product(K, x, ybar))
    raise ScaleTooLarge("exact inner products implemented for m <= 2 only")


def _trace(K, x):
    """Trace over Q of x, from power sums of the defining polynomial roots."""
    m = K.m
    coeffs = K.f.coefficients
    # Newton power sums s_j = Tr(alpha^j)
    power_sums = [Fraction(m)]
    e = [Fraction((-1) ** j * coeffs[m - j]) for j in range(m + 1)]  # e_j
    for j in range(1, m):
        acc = Fraction(0)
        for i in range(1, j):
            acc += (-1) ** (i - 1) * e[i] * power_sums[j - i]
        acc += (-1) ** (j - 1) * e[j] * j
        power_sums.append(acc)
    return sum(Fraction(c) * power_sums[i] for i, c in enumerate(x.coords))


def exact_norm_sq(K, x):
    """||tau(x)||^2 as an exact rational; valid for m <= 2."""
    return _exact_inner(K, x, x)


def enumerate_packing_points(K, P, codes, levels, n, radius_sq,
                             max_points=10 ** 5):
    """All concatenated points within the given squared radius.

    ``codes`` is a sequence of ``levels`` DemoCode objects, one per level.
    Points are exact coordinate tuples in O_K^n (flat, m*n ints).  Only tiny
    scales are supported: m <= 2, n <= 4, levels <= 2.
    """
    m = K.m
    if m > 2 or n > 4 or levels > 2:
        raise ScaleTooLarge("enumerator supports m <= 2, n <= 4, levels <= 2")
    if len(codes) != levels:
        raise ValueError("need one code per level")
    alphabets = [alphabet_set(P, i) for i in range(levels)]
    top = unit_ideal(K)
    for _ in range(levels):
        top = ideal_mul(top, P.hnf)

    radius_sq = Fraction(radius_sq)

    # Lattice points are shared across codewords, so enumerate them out to
    # radius + (largest possible shift): ||lp|| <= r + s implies
    # ||lp||^2 <= 2(r^2 + s^2), which stays exact in rational arithmetic.
    max_shift_sq = Fraction(0)
    if levels:
        per_level = [max(exact_norm_sq(K, e) for e in alph.elements)
                     for alph in alphabets]
        # (sum of norms)^2 <= levels * sum of squared norms
        max_shift_sq = len(per_level) * sum(per_level)
    lattice_pts = _short_ideal_points(K, top,
                                      2 * (radius_sq + max_shift_sq))

    codeword_sets = [c.codewords() for c in codes]

    points = set()
    def add_point(coord_elems):
        flat = tuple(c for e in coord_elems for c in e.int_coords())
        points.add(flat)
        if len(points) > max_points:
            raise ScaleTooLarge("point budget exceeded")

    from itertools import product as iproduct
    for combo in iproduct(*codeword_sets):
        # per-coordinate shift element
        shift = []
        for j in range(n):
            e = FieldElement((0,) * m)
            for i in range(levels):
                e = e + alphabets[i].elements[combo[i][j]]
            shift.append(e)
        # per-coordinate candidates: shift + lattice point, within budget
        cand = []
        ok = True
        for j in range(n):
            cj = [(shift[j] + lp, exact_norm_sq(K, shift[j] + lp))
                  for lp in lattice_pts]
            cj = [(e, ns) for e, ns in cj if ns <= radius_sq]
            if not cj:
                ok = False
                break
            cand.append(cj)
        if not ok:
            continue
        _product_prune(cand, radius_sq, [], add_point)
    return sorted(points)


def _product_prune(cand, budget, prefix, emit):
    if not cand:
        emit([e for e, _ in prefix])
        return
    for e, ns in cand[0]:
        if ns <= budget:
            _product_prune(cand[1:], budget - ns, prefix + [(e, ns)], emit)


def _short_ideal_points(K, I, radius_sq):
    """All elements of the ideal with exact ||tau||^2 <= radius_sq (m = 2).

    The coefficient box is certified from the inverse Gram matrix of the
    embedded HNF basis, so no lattice point inside the ball is missed.
    """
    from itertools import product as iproduct
    from math import isqrt
    m = K.m
    basis_elems = [FieldElement(row) for row in I.basis]
    G = [[_exact_inner(K, basis_elems[i], basis_elems[j]) for j in range(m)]
         for i in range(m)]
    if m != 2:
        raise ScaleTooLarge("point enumeration supports m = 2 only")
    a, b, d = G[0][0], G[0][1], G[1][1]
    det = a * d - b * b
    bounds = []
    for inv_ii in (d / det, a / det):
        val = radius_sq * inv_ii
        bounds.append(isqrt(val.numerator // val.denominator) + 1)
    if max(bounds) > 10 ** 4:
        raise ScaleTooLarge("radius too large for point enumeration")
    pts = []
    for coeffs in iproduct(*(range(-bd, bd + 1) for bd in bounds)):
        e = FieldElement(tuple(
            sum(coeffs[i] * I.basis[i][j] for i in range(m))
            for j in range(m)))
        if exact_norm_sq(K, e) <= radius_sq:
            pts.append(e)
    return pts


def verify_min_distance(K, n, points):
    """Exact pairwise minimum squared distance; +inf sentinel for < 2 points."""
    if len(points) > 10 ** 5:
        raise ScaleTooLarge("too many points")
    if len(points) < 2:
        return None
    m = K.m
    pts = list(points)
    assert len(set(pts)) == len(pts), "duplicate points after dedup"
    # precompute the exact Gram matrix of the power basis per coordinate
    basis = [FieldElement(tuple(1 if j == i else 0 for j in range(m)))
             for i in range(m)]
    G = [[_exact_inner(K, basis[i], basis[j]) for j in range(m)]
         for i in range(m)]
    best = None
    for a in range(len(pts)):
        pa = pts[a]
        for b in range(a + 1, len(pts)):
            pb = pts[b]
            total = Fraction(0)
            for blk in range(n):
                off = blk * m
                z = [pa[off + i] - pb[off + i] for i in range(m)]
                for i in range(m):
                    if z[i]:
                        for j in range(m):
                            if z[j]:
                                total += z[i] * z[j] * G[i][j]
            if best is None or total < best:
                best = total
    return best
