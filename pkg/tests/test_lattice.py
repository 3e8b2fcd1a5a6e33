import mpmath
import pytest

from idealpack.embedding import (LatticeBasis, embedding_context,
                                 lattice_basis)
from idealpack.errors import BoundTooLarge, RankTooLarge
from idealpack.idealarith import ideal_power, select_prime_factor
from idealpack.lattice import brute_force_min, lll_reduce, shortest_vector
from idealpack.numfield import define_field


def _mpf_rows(rows, prec=192):
    with mpmath.workprec(prec):
        return tuple(tuple(mpmath.mpf(c) for c in r) for r in rows)


def test_shortest_vector_known_lattices():
    # Z^2: minimum 1; scaled/skewed bases of known lattices
    B = LatticeBasis(rows=_mpf_rows(((1, 0), (0, 1))), precision_bits=192,
                     source=None)
    sv = shortest_vector(B)
    assert abs(sv.min_sq - 1) < 1e-30

    # hexagonal-like basis (2,0),(1,2): minimum is 4 (vector (1,2) vs (2,0))
    B = LatticeBasis(rows=_mpf_rows(((2, 0), (1, 2))), precision_bits=192,
                     source=None)
    sv = shortest_vector(B)
    assert abs(sv.min_sq - 4) < 1e-30


def test_skewed_basis_reduces():
    # badly conditioned basis of Z^2 must still find the unit vector
    B = LatticeBasis(rows=_mpf_rows(((1, 0), (1000001, 1))),
                     precision_bits=192, source=None)
    sv = shortest_vector(B)
    assert abs(sv.min_sq - 1) < 1e-30
    R = lll_reduce(B)
    lengths = [max(abs(c) for c in row) for row in R.rows]
    assert all(v <= 2 for v in lengths)


def test_oracle_agreement_on_ideal_lattices():
    for coeffs, p in [((1, 1, -1, -1, 1), 3), ((-1, -2, 1, 1), 2),
                      ((-1, 0, 1, 1), 5)]:
        K = define_field(coeffs)
        P = select_prime_factor(K, p)
        ctx = embedding_context(K, 192)
        for i in (1, 2, 3):
            B = lattice_basis(ctx, ideal_power(P.hnf, i))
            sv = shortest_vector(B)
            bf = brute_force_min(B, 8)
            assert abs(sv.min_sq - bf) <= sv.certified_rel_err * bf


def test_witness_reproduces_minimum():
    K = define_field((1, 1, -1, -1, 1))
    P = select_prime_factor(K, 3)
    ctx = embedding_context(K, 192)
    B = lattice_basis(ctx, P.hnf)
    sv = shortest_vector(B)
    with mpmath.workprec(192):
        vec = [mpmath.fsum(sv.witness[i] * B.rows[i][t] for i in range(4))
               for t in range(4)]
        recomputed = mpmath.fsum(c * c for c in vec)
    assert recomputed == sv.min_sq
    assert any(sv.witness)


def test_scope_limits():
    rows = _mpf_rows(tuple(tuple(1 if i == j else 0 for j in range(17))
                           for i in range(17)))
    B = LatticeBasis(rows=rows, precision_bits=192, source=None)
    with pytest.raises(RankTooLarge):
        shortest_vector(B)
    small = LatticeBasis(rows=_mpf_rows(((1, 0), (0, 1))),
                         precision_bits=192, source=None)
    with pytest.raises(BoundTooLarge):
        brute_force_min(small, 11)
    seven = LatticeBasis(
        rows=_mpf_rows(tuple(tuple(1 if i == j else 0 for j in range(7))
                             for i in range(7))),
        precision_bits=192, source=None)
    with pytest.raises(RankTooLarge):
        brute_force_min(seven, 2)
