import random
from fractions import Fraction

import pytest

from kleinhilb.series import (
    LaurentPoly2,
    RatFun1,
    RatFun2,
    expand,
    expand1,
    expansion_defect_min_ell,
    modz_series,
    ratfun1_equal,
    ratfun_equal,
    specialize_antidiagonal,
)


def lp(terms):
    return LaurentPoly2(terms)


def test_laurent_mul():
    f = lp({(0, 0): 1, (1, 0): 1})
    g = lp({(0, 0): 1, (-1, 1): 2})
    h = f * g
    assert h.terms == {(0, 0): 1, (1, 0): 1, (-1, 1): 2, (0, 1): 2}


def test_ratfun_equal_cancels_common_factor():
    # 1/(1-q) and (1+q)/(1-q^2) agree as rational functions
    f = RatFun2(lp({(0, 0): 1}), ((1, 0),))
    g = RatFun2(lp({(0, 0): 1, (1, 0): 1}), ((2, 0),))
    assert ratfun_equal(f, g)
    h = RatFun2(lp({(0, 0): 1}), ((0, 1),))
    assert not ratfun_equal(f, h)


def test_ratfun_add():
    # 1/(1-q) + q/(1-q) = (1+q)/(1-q)
    f = RatFun2(lp({(0, 0): 1}), ((1, 0),))
    g = RatFun2(lp({(1, 0): 1}), ((1, 0),))
    s = f + g
    assert ratfun_equal(s, RatFun2(lp({(0, 0): 1, (1, 0): 1}), ((1, 0),)))


def test_expand_geometric():
    f = RatFun2(lp({(0, 0): 1}), ((1, 0),))
    ts = expand(f, (1, 0), 3)
    assert ts.coefficients == {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}


def test_expand_flips_negative_direction_factor():
    # 1/(1 - q^{-1} t) with ell = (3,1): factor has ell = -2, so the
    # expansion runs through -q t^{-1}/(1 - q t^{-1})
    f = RatFun2(lp({(0, 0): 1}), ((-1, 1),))
    ts = expand(f, (3, 1), 4)
    assert ts.coefficients == {(1, -1): -1, (2, -2): -1}


def test_expand_flip_is_involutive():
    # the two presentations of the same rational function expand identically
    rng = random.Random(7)
    for _ in range(20):
        r = rng.randint(-3, 3)
        s = rng.randint(-3, 3)
        ell = (5, 1)
        if 5 * r + s == 0:
            continue
        num = lp({(rng.randint(-2, 2), rng.randint(-2, 2)): Fraction(rng.randint(1, 5))})
        f = RatFun2(num, ((r, s),))
        # flipped presentation: num * (-q^{-r} t^{-s}) over (1 - q^{-r} t^{-s})
        num2 = num * lp({(-r, -s): -1})
        g = RatFun2(num2, ((-r, -s),))
        assert ratfun_equal(f, g)
        assert expand(f, ell, 8).coefficients == expand(g, ell, 8).coefficients


def test_expand_zero_direction_factor_is_error():
    f = RatFun2(lp({(0, 0): 1}), ((1, -1),))
    with pytest.raises(ValueError):
        expand(f, (1, 1), 4)


def test_expand_defect_bound():
    # expand(f) * denominator - numerator only has terms beyond the
    # guaranteed window
    f = RatFun2(lp({(1, -1): 1, (0, 0): 2}), ((1, 0), (-1, 1), (0, 2)))
    level = 9
    ts = expand(f, (3, 1), level)
    dmin, defect_min = expansion_defect_min_ell(f, ts, (3, 1))
    assert defect_min is None or defect_min > level + dmin


def test_specialize_antidiagonal():
    f = RatFun2(lp({(2, 3): 1, (3, 2): -1}), ((1, -1), (0, 2)))
    g = specialize_antidiagonal(f)
    assert g.numerator == {-1: 1, 1: -1}
    assert tuple(sorted(g.denominator)) == (-2, 2)


def test_specialize_collapsing_factor_is_error():
    f = RatFun2(lp({(0, 0): 1}), ((1, 1),))
    with pytest.raises(ValueError):
        specialize_antidiagonal(f)


def test_ratfun1_equal_and_expand():
    f = RatFun1({0: Fraction(2), 3: Fraction(1)}, (3,))
    g = RatFun1({0: Fraction(2), 3: Fraction(3), 6: Fraction(3)}, (3, 3))
    # (2+s^3)/(1-s^3) == (2+3s^3+3s^6)/(1-s^3)^2 fails; fix g
    assert not ratfun1_equal(f, g)
    g2 = RatFun1({0: Fraction(2), 3: Fraction(-1), 6: Fraction(-1)}, (3, 3))
    # (2+s^3)(1-s^3) = 2 - s^3 - s^6
    assert ratfun1_equal(f, g2)
    coeffs = expand1(f, 9)
    assert coeffs == {0: 2, 3: 3, 6: 3, 9: 3}


def test_expand1_flips_negative_exponent_factor():
    # 1/(1 - s^{-2}) = -s^2/(1 - s^2)
    f = RatFun1({0: Fraction(1)}, (-2,))
    assert expand1(f, 6) == {2: -1, 4: -1, 6: -1}


def test_modz_series_values():
    f = modz_series(3, (1, 0))
    assert f.numerator == {0: 2, 3: 1}
    assert f.denominator == (3,)
    g = modz_series(3, (0, 0))
    assert expand1(g, 0)[0] == 3
    h = modz_series(2, (1,))
    assert h.numerator == {0: 1, 2: 1}


def test_modz_series_rejects_negative_entries():
    with pytest.raises(ValueError):
        modz_series(3, (-1, 0))
