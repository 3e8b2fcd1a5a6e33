"""Integral ideals of O_K = Z[alpha] in Hermite normal form.

Ideals are m x m upper-triangular integer matrices whose rows are Z-basis
coordinates over the power basis.  Prime decomposition uses Dedekind's
factorization theorem, valid at every prime because fields are certified
monogenic on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gfpoly
from .errors import DegenerateLevel, NotIntegral, NotPrime, ZeroIdeal
from .numfield import (FieldElement, IntPolynomial, NumberField,
                       element_from_poly, element_product, poly_trim)


@dataclass(frozen=True)
class IdealHNF:
    field_ref: NumberField
    basis: tuple  # m rows of m ints, upper-triangular HNF

    @property
    def norm(self):
        n = 1
        for i in range(len(self.basis)):
            n *= self.basis[i][i]
        return n

    def basis_elements(self):
        return [FieldElement(row) for row in self.basis]


@dataclass(frozen=True)
class PrimeIdealFactor:
    p: int
    g: IntPolynomial  # lift of an irreducible factor of f mod p
    e: int            # ramification index
    f_deg: int        # residue degree
    q: int            # absolute norm p^f_deg
    hnf: IdealHNF


@dataclass(frozen=True)
class AlphabetSet:
    level: int
    elements: tuple  # q FieldElements, elements[0] == 0


# ---------------------------------------------------------------------------
# HNF machinery
# ---------------------------------------------------------------------------

def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf_rows(rows, m, det_bound=None):
    """Row HNF of the Z-module spanned by integer rows.

    Upper triangular, positive diagonal, entries above each pivot reduced
    into [0, pivot).  When det_bound is given (a known multiple of the
    module determinant), rows det_bound*e_i are adjoined and intermediate
    entries are reduced modulo det_bound to cap growth.
    """
    work = [list(r) for r in rows if any(r)]
    if det_bound is not None:
        work = [[c % det_bound for c in r] for r in work]
        for i in range(m):
            row = [0] * m
            row[i] = det_bound
            work.append(row)
    pivots = []
    for col in range(m):
        # collect rows with nonzero entry in this column
        cand = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not cand:
            raise ZeroIdeal(f"module has rank < {m}")
        piv = cand[0]
        for r in cand[1:]:
            g, u, v = _xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [u * piv[j] + v * r[j] for j in range(m)]
            new_r = [a * r[j] - b * piv[j] for j in range(m)]
            if det_bound is not None:
                new_r = [c % det_bound for c in new_r]
            piv, r2 = new_piv, new_r
            if any(r2):
                rest.append(r2)
        if piv[col] < 0:
            piv = [-c for c in piv]
        pivots.append(piv)
        work = rest
    # reduce entries above each pivot; ascending column order so that a
    # reduction never disturbs an already-reduced earlier column
    for i in range(m):
        for j in range(i):
            c = pivots[j][i] // pivots[i][i]
            if c:
                for k in range(m):
                    pivots[j][k] -= c * pivots[i][k]
    return tuple(tuple(r) for r in pivots)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def hnf_from_generators(K, p, g):
    """HNF of the Z-module generated by {p*alpha^j} and {g*alpha^j}."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if not g.is_integral:
        raise NotIntegral("generator must be integral")
    m = K.m
    if g.is_zero and p == 0:
        raise ZeroIdeal("both generators zero")
    rows = []
    for j in range(m):
        row = [0] * m
        row[j] = p
        rows.append(row)
    cur = g
    alpha = element_from_poly(K, (0, 1))
    for _ in range(m):
        rows.append(list(cur.int_coords()))
        cur = element_product(K, cur, alpha)
    return IdealHNF(K, hnf_rows(rows, m, det_bound=p ** m))


def unit_ideal(K):
    m = K.m
    basis = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
    return IdealHNF(K, basis)


def principal_ideal(K, g):
    """HNF of the principal ideal (g) for integral g."""
    if not g.is_integral:
        raise NotIntegral("generator must be integral")
    if g.is_zero:
        raise ZeroIdeal("zero generator")
    m = K.m
    rows = []
    cur = g
    alpha = element_from_poly(K, (0, 1))
    from .numfield import element_norm
    bound = abs(int(element_norm(K, g)))
    for _ in range(m):
        rows.append(list(cur.int_coords()))
        cur = element_product(K, cur, alpha)
    return IdealHNF(K, hnf_rows(rows, m, det_bound=bound))


def ideal_mul(I, J):
    """Product ideal, via HNF of all pairwise basis-element products."""
    K = I.field_ref
    m = K.m
    bound = I.norm * J.norm
    rows = []
    for a in I.basis:
        ea = FieldElement(a)
        for b in J.basis:
            rows.append(list(element_product(K, ea, FieldElement(b)).int_coords()))
    return IdealHNF(K, hnf_rows(rows, m, det_bound=bound))


def ideal_power(I, k):
    if k < 0:
        raise ValueError("k must be >= 0")
    result = unit_ideal(I.field_ref)
    base = I
    while k:
        if k & 1:
            result = ideal_mul(result, base)
        base = ideal_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def ideal_norm(I):
    return I.norm


def contains(I, x):
    """Membership test by back-substitution against the triangular HNF."""
    if not x.is_integral:
        raise NotIntegral("membership is defined for integral elements")
    m = I.field_ref.m
    rem = list(x.int_coords())
    for col in range(m):
        piv = I.basis[col][col]
        if rem[col] % piv != 0:
            return False
        c = rem[col] // piv
        if c:
            for k in range(m):
                rem[k] -= c * I.basis[col][k]
    return all(c == 0 for c in rem)


def factor_prime(K, p, seed=0):
    """Complete factorization (p)*O_K = prod p_i^e_i via Dedekind's theorem."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    fbar = gfpoly.from_int_poly(K.f.coefficients, p)
    factors = gfpoly.factor(fbar, p, seed=seed)
    out = []
    for gbar, e in factors:
        g_coeffs = tuple(c % p for c in gbar)
        f_deg = len(gbar) - 1
        g_elem = element_from_poly(K, g_coeffs)
        hnf = hnf_from_generators(K, p, g_elem)
        q = p ** f_deg
        assert hnf.norm == q, (hnf.norm, q)
        out.append(PrimeIdealFactor(p=p, g=IntPolynomial(g_coeffs), e=e,
                                    f_deg=f_deg, q=q, hnf=hnf))
    out.sort(key=lambda P: (P.f_deg, P.g.coefficients))
    assert sum(P.e * P.f_deg for P in out) == K.m
    return out


def alphabet_set(P, i):
    """The q coset representatives S_i of p^i / p^(i+1), scaled into p^i.

    Takes pi_i = first HNF basis row of p^i escaping p^(i+1), and multiplies
    it by the residue representatives h(alpha), deg h < f_deg, coefficients
    in [0, p).  The zero slot is always element 0.
    """
    if i < 0:
        raise ValueError("level must be >= 0")
    K = P.hnf.field_ref
    Pi = ideal_power(P.hnf, i)
    Pi1 = ideal_mul(Pi, P.hnf)
    pi = None
    for row in Pi.basis:
        if not contains(Pi1, FieldElement(row)):
            pi = FieldElement(row)
            break
    if pi is None:
        raise DegenerateLevel(f"no basis row of p^{i} escapes p^{i+1}")
    elements = []
    for idx in range(P.q):
        digits = []
        v = idx
        for _ in range(P.f_deg):
            digits.append(v % P.p)
            v //= P.p
        r = element_from_poly(K, digits)
        elements.append(element_product(K, pi, r))
    assert elements[0].is_zero
    return AlphabetSet(level=i, elements=tuple(elements))


def select_prime_factor(K, p, index=0, generators=None, seed=0):
    """CLI-facing selector: by deterministic index or explicit generators."""
    factors = factor_prime(K, p, seed=seed)
    if generators is not None:
        g = element_from_poly(K, generators)
        matches = [P for P in factors if contains(P.hnf, g)]
        if not matches:
            raise NotPrime(f"no prime factor of {p} contains the given generator")
        # the generator pins down a unique factor unless it lies in several
        matches.sort(key=lambda P: P.q)
        return matches[0]
    if index >= len(factors):
        raise NotPrime(f"prime {p} has only {len(factors)} factors")
    return factors[index]
