import pytest

from idealpack import gfpoly


def test_arithmetic_round_trip():
    p = 7
    a = (3, 0, 1)        # x^2 + 3
    b = (2, 5)           # 5x + 2
    q, r = gfpoly.gf_divmod(gfpoly.gf_mul(a, b, p), b, p)
    assert q == a and r == ()


def test_factor_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    cases = [((1, 1, -1, -1, 1), 3), ((1, 1, -1, -1, 1), 7),
             ((-1, -2, 1, 1), 7), ((1, 0, 0, 1, 0, 0, 1), 3),
             ((-1, 0, 1, 1), 5), ((6, 0, 0, 0, 0, 0, 0, 1), 7)]
    for coeffs, p in cases:
        ours = gfpoly.factor(gfpoly.from_int_poly(coeffs, p), p, seed=0)
        expr = sympy.Poly(sum(c * x**i for i, c in enumerate(coeffs)),
                          x, modulus=p, symmetric=False)
        theirs = expr.factor_list()[1]
        assert sum(e for _, e in ours) == sum(e for _, e in theirs)
        # compare the multiset of (degree, multiplicity)
        assert sorted((len(f) - 1, e) for f, e in ours) == \
            sorted((g.degree(), e) for g, e in theirs)
        # product of our factors reproduces the input (monic case)
        prod = (1,)
        for f, e in ours:
            for _ in range(e):
                prod = gfpoly.gf_mul(prod, f, p)
        assert prod == gfpoly.from_int_poly(coeffs, p)


def test_irreducibility():
    assert gfpoly.is_irreducible((1, 1, 0, 0, 1), 2)      # x^4+x+1
    assert not gfpoly.is_irreducible((1, 0, 0, 0, 1), 2)  # x^4+1
    assert gfpoly.is_irreducible((2, 1), 5)


def test_squarefree_decomposition_pth_powers():
    # x^9 + 2 = (x + 2)^9 over F_3 exercises the Frobenius branch
    f = gfpoly.from_int_poly((2,) + (0,) * 8 + (1,), 3)
    parts = gfpoly.squarefree_decomposition(f, 3)
    assert parts == [((2, 1), 9)]


def test_factor_deterministic():
    f = gfpoly.from_int_poly((1, 1, -1, -1, 1), 11)
    assert gfpoly.factor(f, 11, seed=0) == gfpoly.factor(f, 11, seed=0)
