from fractions import Fraction

import pytest

import pylacunary as lac


def test_factor_behind_a_huge_gap():
    f = lac.Polynomial("(x + y + 1)^2 * (x^1000000000 + y + 3) * x^4")
    out = lac.factor(f, 2)
    assert out.x_multiplicity == 4
    assert out.y_multiplicity == 0
    assert [(str(p), e, c) for p, e, c in out.factors] == [("y + x + 1", 2, "general")]
    assert out.untested == []
    assert not out.heuristic
    assert out.delta > 0
    assert '"mult":2' in out.to_json()


def test_polynomial_round_trip():
    f = lac.Polynomial("3/2*x^5*y - 2")
    assert f.terms() == [(Fraction(-2), 0, 0), (Fraction(3, 2), 5, 1)]
    assert lac.Polynomial.from_json(f.to_json()) == f
    assert f.total_degree() == 6
    assert (f * lac.Polynomial("2")).num_terms() == 2
    with pytest.raises(ValueError):
        lac.Polynomial("x +")


def test_big_exponents_are_python_ints():
    e = 2**200
    f = lac.Polynomial(f"x^{e} + y + 1")
    assert f.terms()[1] == (Fraction(1), e, 0)
    pieces = lac.decompose(f, 10, 10)
    assert [(g, d) for g, d, _ in pieces] == [(0, 0), (e, 0)]


def test_binomial_and_univariate():
    f = lac.Polynomial("(x^5 - y^5) * (x^100000000 + y^3 + 1)")
    classes = sorted(c for _, _, c in lac.binomial_factors(f, 4))
    assert classes == ["cyclotomic", "cyclotomic"]
    var, zmult, factors, untested = lac.univariate_factors(lac.Polynomial("(x - 2)*(x^1000000 + x + 1)"), 1)
    assert (var, zmult, untested) == ("x", 0, [])
    assert [(str(p), e, cyc) for p, e, cyc in factors] == [("x - 2", 1, False)]


def test_divisibility_and_bounds():
    f = lac.Polynomial("(2*x - y + 3) * (x^1000000000 + y^1000000000 + 5)")
    assert lac.test_linear(f, 2, -1, 3)
    assert not lac.test_linear(f, 1, 1, 1)
    assert lac.divides(f, lac.Polynomial("2*x - y + 3"))
    assert lac.gap_length(lac.Polynomial("x + y + 1"), 1) == 461671
    rational, absolute = lac.factor_count_bounds(f)
    assert int(rational) < int(absolute)


def test_dense_limit_is_reported():
    f = lac.Polynomial("(x + y + 1) * (x^30 + y^29 + 3)")
    out = lac.factor(f, 1, dense_limit=20)
    assert out.untested
