"""Canonical (Minkowski) embedding of K into R^m at configurable precision.

A field element x maps to (rho_1(x),...,rho_s(x), sqrt2*Re sigma_1(x),
sqrt2*Im sigma_1(x), ...), so squared lengths equal the sum of |sigma(x)|^2
over all m embeddings.  All reals are mpmath arbitrary-precision binary
floats; no machine doubles enter results-bearing paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import DeterminantMismatch, DimensionMismatch
from .numfield import complex_roots, poly_eval


@dataclass(frozen=True)
class EmbeddingContext:
    field_ref: object
    precision_bits: int
    real_roots: tuple
    complex_reps: tuple  # positive-imaginary representative per pair
    sqrt2: object


@dataclass(frozen=True)
class LatticeBasis:
    rows: tuple            # m rows of m mpf entries
    precision_bits: int
    source: object         # IdealHNF identity, or None for ad-hoc bases

    @property
    def rank(self):
        return len(self.rows)


def working_precision(m, q=None, level=None):
    """Default precision: max(192, ceil((2*level/m)*log2(q)) + 96) bits."""
    if q is None or level is None:
        return 192
    return max(192, math.ceil((2 * level / m) * math.log2(q)) + 96)


def embedding_context(K, precision_bits=192):
    reals, comps = complex_roots(K, precision_bits)
    with mpmath.workprec(precision_bits):
        s2 = mpmath.sqrt(mpmath.mpf(2))
    return EmbeddingContext(field_ref=K, precision_bits=precision_bits,
                            real_roots=reals, complex_reps=comps, sqrt2=s2)


def embed_element(ctx, x):
    """tau(x) as a length-m vector of mpf at the context's precision."""
    coords = x.coords if hasattr(x, "coords") else tuple(x)
    K = ctx.field_ref
    if len(coords) != K.m:
        raise DimensionMismatch(f"expected {K.m} coordinates")
    with mpmath.workprec(ctx.precision_bits):
        out = []
        for r in ctx.real_roots:
            out.append(mpmath.mpf(poly_eval(coords, r)))
        for z in ctx.complex_reps:
            v = poly_eval(coords, z)
            out.append(ctx.sqrt2 * v.real)
            out.append(ctx.sqrt2 * v.imag)
    return tuple(out)


def norm_sq(vec, precision_bits):
    with mpmath.workprec(precision_bits):
        return mpmath.fsum(c * c for c in vec)


def lattice_basis(ctx, I, check_determinant=True):
    """Embed the HNF basis rows of an ideal; verify the determinant law."""
    K = ctx.field_ref
    rows = tuple(embed_element(ctx, row) for row in I.basis)
    B = LatticeBasis(rows=rows, precision_bits=ctx.precision_bits, source=I)
    if check_determinant:
        with mpmath.workprec(ctx.precision_bits):
            expected = mpmath.mpf(I.norm) * mpmath.sqrt(mpmath.mpf(K.abs_disc))
            det = abs(mpmath.det(mpmath.matrix([list(r) for r in rows])))
            tol = mpmath.mpf(2) ** (-(ctx.precision_bits // 4))
            if abs(det - expected) > tol * expected:
                raise DeterminantMismatch(
                    f"|det|={det} vs N(I)*sqrt|D|={expected} at "
                    f"{ctx.precision_bits} bits")
    return B
