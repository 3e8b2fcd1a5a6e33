"""Polynomial arithmetic and factorization over prime fields GF(p).

Polynomials are tuples of ints in [0, p), constant term first, with no
trailing zeros; () is the zero polynomial.  All functions are pure; the
randomized equal-degree splitting draws from an explicitly passed
random.Random so factorizations are reproducible.
"""

from __future__ import annotations

import random


def trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def gf_add(a, b, p):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append((x + y) % p)
    return trim(out)


def gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append((x - y) % p)
    return trim(out)


def gf_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return (), trim(a)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = (a[db + k] * inv_lead) % p
        quot[k] = c
        if c:
            for j in range(db + 1):
                a[j + k] = (a[j + k] - c * b[j]) % p
    return trim(quot), trim(a)


def gf_mod(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_gcd(a, b, p):
    while b:
        a, b = b, gf_mod(a, b, p)
    if a:
        # normalize to monic
        inv = pow(a[-1], p - 2, p)
        a = tuple((c * inv) % p for c in a)
    return a


def gf_pow_mod(a, e, mod, p):
    result = (1,)
    a = gf_mod(a, mod, p)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, a, p), mod, p)
        a = gf_mod(gf_mul(a, a, p), mod, p)
        e >>= 1
    return result


def gf_monic(a, p):
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def gf_derivative(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def from_int_poly(coeffs, p):
    """Reduce integer coefficients (constant first) modulo p."""
    return trim([c % p for c in coeffs])


def is_irreducible(f, p):
    """Rabin irreducibility test for monic f over GF(p)."""
    f = gf_monic(f, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    # x^(p^n) == x mod f
    h = x
    for _ in range(n):
        h = gf_pow_mod(h, p, f, p)
    if gf_sub(h, x, p):
        return False
    for r in _prime_divisors(n):
        h = x
        for _ in range(n // r):
            h = gf_pow_mod(h, p, f, p)
        if len(gf_gcd(gf_sub(h, x, p), f, p)) > 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_decomposition(f, p):
    """Char-p squarefree decomposition: list of (squarefree factor, mult).

    Factors are pairwise coprime and their powers multiply back to monic f.
    """
    f = gf_monic(f, p)
    if len(f) <= 1:
        return []
    df = gf_derivative(f, p)
    if not df:
        # f(x) = g(x)^p since f(x) = g(x^p) over the prime field
        g = trim([f[i] for i in range(0, len(f), p)])
        return [(fac, mult * p) for fac, mult in squarefree_decomposition(g, p)]
    out = []
    c = gf_gcd(f, df, p)
    w = gf_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gf_gcd(w, c, p)
        z = gf_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = gf_divmod(c, y, p)[0]
        i += 1
    # what is left of c collects the factors with multiplicity divisible by p
    out.extend(squarefree_decomposition(c, p))
    return out


def distinct_degree(f, p):
    """Split squarefree monic f into products of irreducibles of equal degree.

    Returns list of (product, degree).
    """
    out = []
    h = (0, 1)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, f, p)
        g = gf_gcd(gf_sub(h, (0, 1), p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = gf_divmod(f, g, p)[0]
            h = gf_mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree_factor(f, d, p, rng: random.Random):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        h = trim([rng.randrange(p) for _ in range(n)])
        if len(h) <= 1:
            continue
        g = gf_gcd(h, f, p)
        if len(g) > 1:
            split = g
        elif p == 2:
            # trace map over GF(2^d)
            t = h
            acc = h
            for _ in range(d - 1):
                t = gf_mod(gf_mul(t, t, p), f, p)
                acc = gf_add(acc, t, p)
            split = gf_gcd(acc, f, p)
        else:
            e = (p ** d - 1) // 2
            t = gf_pow_mod(h, e, f, p)
            split = gf_gcd(gf_sub(t, (1,), p), f, p)
        if 1 < len(split) < len(f):
            rest = gf_divmod(f, split, p)[0]
            return (equal_degree_factor(split, d, p, rng)
                    + equal_degree_factor(rest, d, p, rng))


def factor(f, p, seed=0):
    """Full factorization of monic f over GF(p).

    Returns a sorted list of (irreducible_factor, multiplicity); sorting is by
    (degree, coefficient tuple) so the output is stable regardless of the
    random choices made during equal-degree splitting.
    """
    rng = random.Random(seed)
    f = gf_monic(f, p)
    out = []
    for sqf, mult in squarefree_decomposition(f, p):
        for prod, d in distinct_degree(sqf, p):
            for irr in equal_degree_factor(prod, d, p, rng):
                out.append((gf_monic(irr, p), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out
