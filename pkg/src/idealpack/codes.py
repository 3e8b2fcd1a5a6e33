"""Coding-theoretic side: entropy/GV formulas, required distances,
level-count bound, best-known-code tables, and small demo codes.

Code-table file format: UTF-8 text, one record per line,
``q n k d # provenance``; comment lines start with '#'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import gfpoly
from .errors import (AmbiguousCeiling, DomainError, MissingEntry, ParseError,
                     Unsupported)


@dataclass(frozen=True)
class CodeSpec:
    q: int
    n: int
    k: int
    d: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n and 1 <= self.d <= self.n):
            raise ValueError(f"invalid code parameters {self}")
        if self.k > self.n - self.d + 1:
            raise ValueError(f"Singleton bound violated: {self}")


@dataclass(frozen=True)
class CodeTable:
    entries: dict      # (q, n) -> sorted list of (d, k)
    provenance: dict   # (q, n, d) -> source string


# ---------------------------------------------------------------------------
# entropy and GV bound
# ---------------------------------------------------------------------------

def _to_mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def entropy(q, rho):
    """q-ary entropy H_q(rho) for rho in (0,1), at the ambient precision."""
    if q < 2:
        raise DomainError("q must be >= 2")
    rho = _to_mpf(rho)
    if not 0 < rho < 1:
        raise DomainError(f"rho must lie in (0,1), got {rho}")
    logq = mpmath.log(q)
    return (rho * mpmath.log(q - 1) - rho * mpmath.log(rho)
            - (1 - rho) * mpmath.log(1 - rho)) / logq


def entropy_clamped(q, rho):
    """H'_q: equals H_q below (q-1)/q and 1 on [(q-1)/q, 1]."""
    if isinstance(rho, Fraction):
        if rho >= Fraction(q - 1, q):
            return mpmath.mpf(1)
        return entropy(q, rho)
    rho = mpmath.mpf(rho)
    if rho >= mpmath.mpf(q - 1) / q:
        return mpmath.mpf(1)
    return entropy(q, rho)


def gv_rate(q, rho):
    """Asymptotic Gilbert-Varshamov rate 1 - H_q(rho)."""
    rho = _to_mpf(rho)
    if not 0 < rho < mpmath.mpf(q - 1) / q:
        raise DomainError(f"rho must lie in (0, (q-1)/q), got {rho}")
    return 1 - entropy(q, rho)


# ---------------------------------------------------------------------------
# level count and required distances
# ---------------------------------------------------------------------------

def max_levels(m, q, n):
    """floor((m/2) * log_q(n)), by exact integer comparison n^m >= q^(2l)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    nm = n ** m
    level = 0
    power = 1  # q^(2*level)
    q2 = q * q
    while power * q2 <= nm:
        power *= q2
        level += 1
    return level


def ceil_ratio(num, den, rel_err):
    """ceil(num/den) for certified positive mpf values.

    rel_err bounds the relative error of each operand.  Raises
    AmbiguousCeiling when the certified interval straddles an integer.
    """
    with mpmath.extraprec(64):
        ratio = num / den
        spread = 3 * rel_err * ratio
        lo = mpmath.ceil(ratio - spread)
        hi = mpmath.ceil(ratio + spread)
        if lo != hi:
            raise AmbiguousCeiling(
                f"ratio {ratio} ambiguous within +-{spread}")
        return int(lo)


def ceil_ratio_snapped(num, den, rel_err, snap_rel=mpmath.mpf(2) ** -64):
    """ceil_ratio variant that snaps to an integer the ratio is provably
    within snap_rel of; used where the true ratio can be exactly integral
    (e.g. principal prime ideals, where minima scale exactly)."""
    try:
        return ceil_ratio(num, den, rel_err)
    except AmbiguousCeiling:
        with mpmath.extraprec(64):
            ratio = num / den
            nearest = mpmath.nint(ratio)
            if abs(ratio - nearest) <= snap_rel * ratio:
                return int(nearest)
            raise


def required_distances(min_sqs, rel_err=mpmath.mpf(2) ** -48):
    """d_i = ceil(min_sq(L_l) / min_sq(L_i)) for i = 0..l-1."""
    if any(v <= 0 for v in min_sqs):
        raise ValueError("squared minima must be positive")
    top = min_sqs[-1]
    return [ceil_ratio_snapped(top, v, rel_err) for v in min_sqs[:-1]]


# ---------------------------------------------------------------------------
# code tables
# ---------------------------------------------------------------------------

def load_code_table(source):
    """Parse the documented text format into a validated CodeTable.

    ``source`` is a str, bytes, or iterable of lines.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.decode("utf-8") if isinstance(ln, bytes) else ln
                 for ln in source]
    entries = {}
    provenance = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body, _, comment = line.partition("#")
        parts = body.split()
        if len(parts) != 4:
            raise ParseError(f"expected 'q n k d', got {body!r}", lineno)
        try:
            q, n, k, d = (int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        try:
            CodeSpec(q=q, n=n, k=k, d=d)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        entries.setdefault((q, n), []).append((d, k))
        provenance[(q, n, d)] = comment.strip()
    for key, rows in entries.items():
        rows.sort()
        for (d1, k1), (d2, k2) in zip(rows, rows[1:]):
            if d1 == d2:
                raise ParseError(f"duplicate entry (q={key[0]}, n={key[1]}, d={d1})")
            if k2 > k1:
                raise ParseError(
                    f"table not monotone at (q={key[0]}, n={key[1]}): "
                    f"k={k2} at d={d2} exceeds k={k1} at d={d1}")
    return CodeTable(entries=entries, provenance=provenance)


def best_dimension(table, q, n, d):
    """Largest recorded k with distance >= d; d=1 is the full space [n,n,1]."""
    if d <= 1:
        return n
    best = None
    for dd, kk in table.entries.get((q, n), []):
        if dd >= d and (best is None or kk > best):
            best = kk
    if best is None:
        raise MissingEntry(q, n, d)
    return best


# ---------------------------------------------------------------------------
# finite fields and demo codes
# ---------------------------------------------------------------------------

class GF:
    """Arithmetic in F_q = F_p[y]/(modulus), elements encoded as ints in
    [0, q) via base-p digits of the polynomial coefficients.

    The modulus is the lexicographically smallest monic irreducible of the
    required degree, so encodings are stable across platforms.
    """

    def __init__(self, p, deg=1):
        self.p = p
        self.deg = deg
        self.q = p ** deg
        self.modulus = self._find_modulus(p, deg) if deg > 1 else (0, 1)

    @staticmethod
    def _find_modulus(p, deg):
        # iterate monic polynomials by lexicographic coefficient order
        for idx in range(p ** deg):
            coeffs = []
            v = idx
            for _ in range(deg):
                coeffs.append(v % p)
                v //= p
            poly = tuple(coeffs) + (1,)
            if gfpoly.is_irreducible(poly, p):
                return poly
        raise RuntimeError("no irreducible modulus found")  # unreachable

    def _decode(self, a):
        digits = []
        v = a
        for _ in range(self.deg):
            digits.append(v % self.p)
            v //= self.p
        return gfpoly.trim(digits)

    def _encode(self, poly):
        out = 0
        for c in reversed(poly):
            out = out * self.p + c
        return out

    def add(self, a, b):
        if self.deg == 1:
            return (a + b) % self.p
        return self._encode(gfpoly.gf_add(self._decode(a), self._decode(b), self.p))

    def neg(self, a):
        if self.deg == 1:
            return (-a) % self.p
        return self._encode(tuple((-c) % self.p for c in self._decode(a)))

    def mul(self, a, b):
        if self.deg == 1:
            return (a * b) % self.p
        prod = gfpoly.gf_mul(self._decode(a), self._decode(b), self.p)
        return self._encode(gfpoly.gf_mod(prod, self.modulus, self.p))

    def pow(self, a, e):
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def elements(self):
        return range(self.q)


@dataclass(frozen=True)
class DemoCode:
    """Linear code with explicit generator matrix over F_q (symbols as ints)."""

    field: GF
    n: int
    k: int
    d: int
    generator: tuple  # k rows of n symbols

    def codewords(self):
        """All q^k codewords (exhaustive; intended for tiny parameters)."""
        gf = self.field
        words = [tuple([0] * self.n)]
        for row in self.generator:
            new = []
            for w in words:
                for c in range(gf.q):
                    if c == 0:
                        new.append(w)
                    else:
                        new.append(tuple(gf.add(w[j], gf.mul(c, row[j]))
                                         for j in range(self.n)))
            words = new
        return words


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            deg = 0
            while q % p == 0 and q > 1:
                q //= p
                deg += 1
            if q != 1:
                raise Unsupported("alphabet size must be a prime power")
            return p, deg
    raise Unsupported("alphabet size must be >= 2")


def demo_code(q, n, k):
    """Reed-Solomon when n <= q (d = n-k+1); repetition code when k = 1."""
    if not 1 <= k <= n:
        raise Unsupported("need 1 <= k <= n")
    p, deg = _factor_prime_power(q)
    gf = GF(p, deg)
    if n <= q:
        points = list(gf.elements())[:n]
        rows = []
        for i in range(k):
            rows.append(tuple(gf.pow(x, i) for x in points))
        return DemoCode(field=gf, n=n, k=k, d=n - k + 1, generator=tuple(rows))
    if k == 1:
        return DemoCode(field=gf, n=n, k=1, d=n,
                        generator=((1,) * n,))
    raise Unsupported(f"no demo construction for q={q}, n={n}, k={k}")
