"""Number fields K = Q[x]/(f) with ring of integers Z[alpha].

Elements are coordinate vectors over the power basis 1, alpha, ...,
alpha^(m-1) with exact rational entries.  Field definitions are certified:
irreducibility via a rational-root test plus a mod-p certificate, the
signature via Sturm sequences, and maximality of Z[alpha] via Dedekind's
criterion at every prime whose square divides disc(f).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import gfpoly
from .errors import (DimensionMismatch, IrreducibilityUnknown, NotMaximal,
                     NotMonic, PrecisionExhausted, Reducible)


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficients constant-term first)
# ---------------------------------------------------------------------------

def poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_derivative(a):
    return poly_trim([i * c for i, c in enumerate(a)][1:])


def poly_eval(a, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def sylvester_resultant(a, b):
    """Resultant of two polynomials with exact (int or Fraction) coefficients.

    Computed as the determinant of the Sylvester matrix by fraction-free
    Bareiss elimination after clearing denominators.
    """
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return 0
    n, k = len(a) - 1, len(b) - 1
    if n == 0:
        return a[0] ** k
    if k == 0:
        return b[0] ** n
    da = 1
    for c in a:
        if isinstance(c, Fraction):
            da = da * c.denominator // _gcd(da, c.denominator)
    db = 1
    for c in b:
        if isinstance(c, Fraction):
            db = db * c.denominator // _gcd(db, c.denominator)
    ai = [int(c * da) for c in a]
    bi = [int(c * db) for c in b]
    size = n + k
    mat = []
    for i in range(k):
        row = [0] * size
        for j, c in enumerate(reversed(ai)):
            row[i + j] = c
        mat.append(row)
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(bi)):
            row[i + j] = c
        mat.append(row)
    det = _bareiss_det(mat)
    return Fraction(det, da ** k * db ** n)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _bareiss_det(mat):
    """Fraction-free determinant of a square integer matrix (destructive)."""
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def sturm_real_root_count(f):
    """Number of distinct real roots of a squarefree integer polynomial."""
    chain = [poly_trim(f), poly_derivative(f)]
    while len(chain[-1]) > 1:
        rem = _poly_neg_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(rem)
    def sign_at_inf(poly, positive):
        if not poly:
            return 0
        lead = poly[-1]
        deg = len(poly) - 1
        s = 1 if lead > 0 else -1
        if not positive and deg % 2 == 1:
            s = -s
        return s
    def changes(positive):
        signs = [sign_at_inf(p, positive) for p in chain if p]
        count = 0
        for i in range(1, len(signs)):
            if signs[i] != signs[i - 1]:
                count += 1
        return count
    return changes(False) - changes(True)


def _poly_neg_rem(a, b):
    """-(a mod b) over Q, rescaled to primitive integer coefficients."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    da, db = len(a) - 1, len(b) - 1
    while da >= db:
        c = a[-1] / b[-1]
        for j in range(db + 1):
            a[da - db + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
        da = len(a) - 1
        if not a:
            return ()
    rem = [-c for c in a]
    denom = 1
    for c in rem:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ints = [int(c * denom) for c in rem]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    return poly_trim(ints)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients constant term first."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           poly_trim(tuple(int(c) for c in self.coefficients)))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x):
        return poly_eval(self.coefficients, x)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        return " + ".join(reversed(terms)).replace("+ -", "- ") or "0"

    @classmethod
    def parse(cls, text):
        """Comma-separated integer coefficient list, constant term first."""
        return cls(tuple(int(t.strip()) for t in text.split(",")))


@dataclass(frozen=True)
class NumberField:
    f: IntPolynomial
    m: int
    s: int
    t: int
    disc: int
    maximality_certificate: tuple  # primes where Dedekind's criterion passed
    # reduction of x^(m+j) mod f for j = 0..m-2, as integer coordinate rows
    _reduction_rows: tuple = field(repr=False, default=())

    @property
    def abs_disc(self):
        return abs(self.disc)

    def reduce_poly(self, coeffs):
        """Reduce a coefficient sequence (length <= 2m-1) modulo f."""
        m = self.m
        out = list(coeffs[:m]) + [0] * (m - min(m, len(coeffs)))
        for j in range(m, len(coeffs)):
            c = coeffs[j]
            if c:
                row = self._reduction_rows[j - m]
                for i in range(m):
                    out[i] += c * row[i]
        return tuple(out)


@dataclass(frozen=True)
class FieldElement:
    """Element of K as coordinates over the power basis; exact arithmetic."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coords",
            tuple(c if isinstance(c, int) else Fraction(c) for c in self.coords))

    @property
    def is_integral(self):
        return all(isinstance(c, int) or c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def int_coords(self):
        if not self.is_integral:
            raise ValueError("element is not integral")
        return tuple(int(c) for c in self.coords)

    def __add__(self, other):
        return FieldElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return FieldElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return FieldElement(tuple(-a for a in self.coords))


def element_from_int(K, value):
    return FieldElement((value,) + (0,) * (K.m - 1))


def element_from_poly(K, coeffs):
    """Element h(alpha) for a coefficient list of any length (reduced mod f)."""
    reduced = K.reduce_poly(list(coeffs) + [0] * max(0, K.m - len(coeffs)))
    return FieldElement(reduced)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def define_field(f, allow_unproven_irreducibility=False):
    """Construct a certified number field K = Q[x]/(f) with O_K = Z[alpha]."""
    if isinstance(f, (tuple, list)):
        f = IntPolynomial(tuple(f))
    if not f.is_monic:
        raise NotMonic(f"defining polynomial must be monic: {f}")
    if f.degree < 2:
        raise NotMonic(f"degree must be >= 2, got {f.degree}")
    m = f.degree
    coeffs = f.coefficients

    res = sylvester_resultant(coeffs, poly_derivative(coeffs))
    disc = int(res) * (-1) ** (m * (m - 1) // 2)
    if disc == 0:
        raise Reducible("polynomial is not squarefree")

    _check_irreducible(coeffs, allow_unproven_irreducibility)

    s = sturm_real_root_count(coeffs)
    t = (m - s) // 2
    assert m == s + 2 * t

    certified = []
    for p in _squared_prime_divisors(abs(disc)):
        if not _dedekind_p_maximal(coeffs, p):
            raise NotMaximal(p)
        certified.append(p)

    reduction_rows = _power_reduction_rows(coeffs, m)
    return NumberField(f=f, m=m, s=s, t=t, disc=disc,
                       maximality_certificate=tuple(certified),
                       _reduction_rows=reduction_rows)


def _power_reduction_rows(coeffs, m):
    """Integer coordinate rows of x^(m+j) mod f for j = 0..m-2."""
    rows = []
    # x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    cur = [-c for c in coeffs[:m]]
    rows.append(tuple(cur))
    for _ in range(m - 2):
        nxt = [0] + cur[:m - 1]
        lead = cur[m - 1]
        if lead:
            for i in range(m):
                nxt[i] += lead * rows[0][i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _check_irreducible(coeffs, allow_override):
    m = len(coeffs) - 1
    # rational roots of a monic integer polynomial are integer divisors of c_0
    c0 = coeffs[0]
    if c0 == 0:
        raise Reducible("x divides the polynomial")
    for r in _divisors(abs(c0)):
        for cand in (r, -r):
            if poly_eval(coeffs, cand) == 0:
                raise Reducible(f"rational root {cand}")
    if m <= 3:
        return  # degree 2 or 3 without rational roots is irreducible
    disc_f = abs(int(sylvester_resultant(coeffs, poly_derivative(coeffs))))
    for p in _primes_upto(100):
        if disc_f % p == 0:
            continue
        if gfpoly.is_irreducible(gfpoly.from_int_poly(coeffs, p), p):
            return
    if not allow_override:
        raise IrreducibilityUnknown(
            "no mod-p irreducibility certificate found for p <= 100; "
            "pass allow_unproven_irreducibility=True to override")


def _dedekind_p_maximal(coeffs, p):
    """Dedekind's criterion: is Z[alpha] maximal at p?"""
    fbar = gfpoly.from_int_poly(coeffs, p)
    factors = gfpoly.factor(fbar, p, seed=0)
    gbar = (1,)
    for fac, _ in factors:
        gbar = gfpoly.gf_mul(gbar, fac, p)
    hbar = gfpoly.gf_divmod(fbar, gbar, p)[0]
    g = _lift(gbar, p)
    h = _lift(hbar, p)
    gh = poly_mul(g, h)
    width = max(len(gh), len(coeffs))
    diff = [( (gh[i] if i < len(gh) else 0) - (coeffs[i] if i < len(coeffs) else 0))
            for i in range(width)]
    assert all(d % p == 0 for d in diff)
    fpoly = gfpoly.from_int_poly([d // p for d in diff], p)
    gcd1 = gfpoly.gf_gcd(fpoly, gbar, p)
    gcd2 = gfpoly.gf_gcd(gcd1, hbar, p)
    return len(gcd2) == 1


def _lift(a, p):
    return poly_trim([c % p for c in a])


def element_product(K, a, b):
    """Product in K, reduced modulo the defining polynomial."""
    if len(a.coords) != K.m or len(b.coords) != K.m:
        raise DimensionMismatch(
            f"expected coordinate length {K.m}")
    prod = poly_mul(a.coords, b.coords)
    return FieldElement(K.reduce_poly(prod))


def element_norm(K, a):
    """Norm_{K/Q}(a) as an exact rational, via resultant(f, a(x))."""
    if len(a.coords) != K.m:
        raise DimensionMismatch(f"expected coordinate length {K.m}")
    if a.is_zero:
        return Fraction(0)
    res = sylvester_resultant(K.f.coefficients, poly_trim(a.coords))
    return Fraction(res)


def complex_roots(K, precision_bits=192):
    """All m roots of f at the requested precision, deterministically ordered.

    Real roots come first in ascending order, then one representative per
    complex-conjugate pair (positive imaginary part), ordered by ascending
    real part.  Each root is certified by a residual check.
    """
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    coeffs = K.f.coefficients
    with mpmath.workprec(precision_bits + 64):
        # mpmath wants leading coefficient first
        poly = [mpmath.mpf(c) for c in reversed(coeffs)]
        try:
            roots = mpmath.polyroots(poly, maxsteps=200,
                                     extraprec=precision_bits // 2 + 60)
        except mpmath.libmp.NoConvergence as exc:
            raise PrecisionExhausted(str(exc)) from exc
        roots = [mpmath.mpc(r) for r in roots]
        coeff_sum = sum(abs(c) for c in coeffs)
        tol = mpmath.mpf(2) ** (-(precision_bits // 2)) * (1 + coeff_sum)
        reals = []
        complexes = []
        for r in roots:
            if abs(r.imag) < tol:
                reals.append(r.real)
            elif r.imag > 0:
                complexes.append(r)
        if len(reals) != K.s or len(complexes) != K.t:
            raise PrecisionExhausted(
                f"root classification found ({len(reals)},{len(complexes)}), "
                f"expected ({K.s},{K.t})")
        # Newton polish so residuals certify at the requested precision
        dcoeffs = poly_derivative(coeffs)
        def polish(z):
            for _ in range(4):
                z = z - poly_eval(coeffs, z) / poly_eval(dcoeffs, z)
            return z
        reals = sorted(polish(r) for r in reals)
        complexes = sorted((polish(c) for c in complexes),
                           key=lambda z: (z.real, z.imag))
        for r in reals + complexes:
            if abs(poly_eval(coeffs, r)) > tol:
                raise PrecisionExhausted("root residual too large")
    return tuple(reals), tuple(complexes)


# ---------------------------------------------------------------------------
# small integer helpers
# ---------------------------------------------------------------------------

def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            for j in range(i * i, n + 1, i):
                sieve[j] = False
    return [i for i, ok in enumerate(sieve) if ok]


def _squared_prime_divisors(n):
    """Primes p with p^2 | n."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e >= 2:
                out.append(d)
        d += 1
    return out
