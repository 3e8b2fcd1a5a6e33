from fractions import Fraction

import mpmath
import pytest

from idealpack import errors
from idealpack.codes import (CodeSpec, best_dimension, ceil_ratio,
                             ceil_ratio_snapped, demo_code, entropy,
                             entropy_clamped, gv_rate, load_code_table,
                             max_levels, required_distances)

SAMPLE = """\
# sample snapshot
9 64 25 27  # src-a
9 64 49 9   # src-b
9 64 61 3
"""


def test_entropy_endpoints_and_symmetry():
    with mpmath.workprec(128):
        for q in (2, 3, 5, 7, 8, 9):
            v = entropy(q, Fraction(q - 1, q))
            assert abs(v - 1) < mpmath.mpf(10) ** -30
        # binary entropy is symmetric about 1/2
        assert abs(entropy(2, Fraction(1, 4)) -
                   entropy(2, Fraction(3, 4))) < mpmath.mpf(10) ** -30
    with pytest.raises(errors.DomainError):
        entropy(3, 0)
    with pytest.raises(errors.DomainError):
        entropy(3, 1)


def test_entropy_clamped():
    with mpmath.workprec(128):
        assert entropy_clamped(5, Fraction(9, 10)) == 1
        assert entropy_clamped(5, 1) == 1
        assert entropy_clamped(5, Fraction(1, 10)) == entropy(5, Fraction(1, 10))


def test_gv_rate_monotone():
    with mpmath.workprec(96):
        prev = None
        for i in range(1, 1000):
            rho = Fraction(i, 1000) * Fraction(8, 9)  # stay inside (0,(q-1)/q)
            r = gv_rate(9, rho)
            if prev is not None:
                assert r < prev
            prev = r


def test_max_levels_exact_boundary():
    # l = floor((m/2) log_q n) via exact integer comparison
    assert max_levels(4, 9, 64) == 3
    assert max_levels(4, 9, 80) == 3
    assert max_levels(4, 9, 81) == 4
    assert max_levels(3, 8, 85) == 3
    assert max_levels(2, 4, 3) == 0
    with pytest.raises(ValueError):
        max_levels(2, 3, 1)


def test_ceil_ratio_guard():
    with mpmath.workprec(192):
        a = mpmath.mpf(27)
        b = mpmath.mpf(4)
        assert ceil_ratio(a, b, mpmath.mpf(2) ** -64) == 7
        # interval straddling an integer must refuse
        with pytest.raises(errors.AmbiguousCeiling):
            ceil_ratio(mpmath.mpf(8) * (1 + mpmath.mpf(2) ** -50),
                       mpmath.mpf(2), mpmath.mpf(2) ** -40)
        # the snapped variant accepts provably-near-integer ratios
        assert ceil_ratio_snapped(mpmath.mpf(8) * (1 + mpmath.mpf(2) ** -70),
                                  mpmath.mpf(2), mpmath.mpf(2) ** -68) == 4


def test_required_distances():
    with mpmath.workprec(192):
        mins = [mpmath.mpf(v) for v in (4, 12, 36, 108)]
        assert required_distances(mins) == [27, 9, 3]


def test_load_code_table():
    table = load_code_table(SAMPLE)
    assert best_dimension(table, 9, 64, 27) == 25
    assert best_dimension(table, 9, 64, 9) == 49
    assert best_dimension(table, 9, 64, 5) == 49   # next distance up
    assert best_dimension(table, 9, 64, 1) == 64   # full space
    assert table.provenance[(9, 64, 27)] == "src-a"
    with pytest.raises(errors.MissingEntry):
        best_dimension(table, 9, 64, 64)
    with pytest.raises(errors.MissingEntry):
        best_dimension(table, 7, 64, 3)


def test_table_validation():
    with pytest.raises(errors.ParseError) as exc:
        load_code_table("9 64 25\n")
    assert exc.value.line_number == 1
    with pytest.raises(errors.ParseError):
        load_code_table("9 64 70 3\n")          # k > n
    with pytest.raises(errors.ParseError):
        load_code_table("9 64 60 10\n")         # Singleton violation
    with pytest.raises(errors.ParseError):
        load_code_table("9 64 25 27\n9 64 30 27\n")   # duplicate distance
    with pytest.raises(errors.ParseError):
        load_code_table("9 64 20 9\n9 64 30 27\n")    # not monotone


def test_codespec_singleton():
    CodeSpec(q=9, n=64, k=25, d=27)
    with pytest.raises(ValueError):
        CodeSpec(q=9, n=64, k=40, d=27)


def test_demo_codes():
    # Reed-Solomon over F_9: distances meet Singleton with equality
    c = demo_code(9, 8, 3)
    assert (c.n, c.k, c.d) == (8, 3, 6)
    words = c.codewords()
    assert len(words) == 9 ** 3 == len(set(words))
    # verify the claimed distance exhaustively on a smaller code
    c = demo_code(5, 4, 2)
    words = c.codewords()
    nonzero = [w for w in words if any(w)]
    assert min(sum(1 for s in w if s) for w in nonzero) == c.d == 3
    # repetition fallback when n > q
    c = demo_code(2, 5, 1)
    assert c.d == 5 and len(c.codewords()) == 2
    with pytest.raises(errors.Unsupported):
        demo_code(6, 4, 2)   # alphabet not a prime power
    with pytest.raises(errors.Unsupported):
        demo_code(2, 5, 3)   # no construction available
