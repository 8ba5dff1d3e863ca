import random

import pytest

from kleinhilb.series import (
    LaurentPoly2,
    expand,
    modz_series,
    ratfun1_equal,
    ratfun_equal,
    specialize_antidiagonal,
)
from kleinhilb.toric import (
    build_fan,
    chart_generator,
    divisor_spec,
    enumerate_sections,
    localization_series,
    localization_terms,
    multiply_section_sets,
    sections_multiplicative,
    weight,
)


def brute_sections(n, a, box):
    """Independent oracle: scan a padded (u1, u2) rectangle directly."""
    rmax, smax = box
    out = set()
    for u1 in range(0, rmax + 1):
        for u2 in range(-(rmax + a[n] + 1), smax + 1):
            if u1 + n * u2 > smax:
                continue
            if all(u1 + j * u2 >= -a[j] for j in range(n + 1)):
                out.add((u1, u2))
    return out


def test_build_fan_small():
    fan = build_fan(2)
    assert fan.rays == [(1, 0), (1, 1), (1, 2)]
    assert fan.cones == [(0, 1), (1, 2)]
    assert fan.dual_generators(0) == ((1, -1), (0, 1))
    fan5 = build_fan(5)
    assert len(fan5.rays) == 6 and len(fan5.cones) == 5


def test_fan_smoothness():
    for n in range(2, 8):
        fan = build_fan(n)
        for (i, j) in fan.cones:
            (a, b), (c, d) = fan.rays[i], fan.rays[j]
            assert a * d - b * c == 1


def test_divisor_spec_values():
    assert divisor_spec(3, (1, 0)).a == (0, 0, 0, 1)
    assert divisor_spec(3, (0, 0)).a == (0, 0, 0, 0)
    assert divisor_spec(2, (1,)).a == (0, 0, 1)
    assert divisor_spec(3, (1, 1)).a == (0, 0, 1, 3)


def test_divisor_spec_matches_boundary_divisor_expansion():
    # oracle: expand sum_i b_i D(i) with D(i) = sum_{j=0}^{i-1} (i-j) D_{n-j}
    rng = random.Random(3)
    for n in range(2, 7):
        for _ in range(10):
            b = [rng.randint(0, 4) for _ in range(n - 1)]
            coeffs = [0] * (n + 1)
            for i in range(1, n):
                for j in range(0, i):
                    coeffs[n - j] += b[i - 1] * (i - j)
            assert divisor_spec(n, b).a == tuple(coeffs)


def test_divisor_map_injective_modulo_relations():
    # a(b) in span{(1,..,1),(0,1,..,n)} forces b = 0
    rng = random.Random(5)
    for n in range(2, 6):
        for _ in range(20):
            b = [rng.randint(-3, 3) for _ in range(n - 1)]
            if all(x == 0 for x in b):
                continue
            a = divisor_spec(n, b).a
            lam, mu = a[0], a[1] - a[0]
            assert any(a[k] != lam + mu * k for k in range(n + 1))


def test_chart_generator_values():
    assert chart_generator(divisor_spec(2, (1,)), 1) == (1, -1)
    assert chart_generator(divisor_spec(3, (1, 1)), 2) == (3, -2)
    for n in (2, 3, 4):
        spec = divisor_spec(n, tuple(range(1, n)))
        assert chart_generator(spec, 0) == (0, 0)


def test_chart_generator_closed_forms_agree():
    rng = random.Random(11)
    for n in range(2, 7):
        for _ in range(10):
            b = [rng.randint(-2, 3) for _ in range(n - 1)]
            spec = divisor_spec(n, b)
            a = spec.a
            for i in range(n):
                m1, m2 = chart_generator(spec, i)
                assert m1 == i * a[i + 1] - (i + 1) * a[i]
                assert m2 == a[i] - a[i + 1]


def test_enumerate_sections_trivial_divisor():
    ss = enumerate_sections(divisor_spec(2, (0,)), (2, 2))
    assert set(ss.monomials) == {(0, 0), (1, 0), (2, -1), (0, 1), (2, 0)}


def test_enumerate_sections_against_brute_oracle():
    rng = random.Random(17)
    for n in (2, 3, 4, 5):
        for _ in range(8):
            b = [rng.randint(0, 2) for _ in range(n - 1)]
            spec = divisor_spec(n, b)
            box = (rng.randint(3, 9), rng.randint(3, 9))
            ss = enumerate_sections(spec, box)
            assert set(ss.monomials) == brute_sections(n, spec.a, box)


def test_enumerate_sections_rejects_negative_b():
    with pytest.raises(ValueError):
        enumerate_sections(divisor_spec(2, (-1,)), (4, 4))


def test_sections_lie_in_shifted_chart_monoid():
    # u - m_i must be a nonnegative combination of the dual cone generators,
    # which for chart i comes down to the two ray inequalities at i, i+1
    rng = random.Random(23)
    for n in (2, 3, 4):
        for _ in range(6):
            b = [rng.randint(0, 2) for _ in range(n - 1)]
            spec = divisor_spec(n, b)
            ss = enumerate_sections(spec, (7, 7))
            for i in range(n):
                m1, m2 = chart_generator(spec, i)
                for (u1, u2) in ss.monomials:
                    x = (u1 - m1) + i * (u2 - m2)
                    y = (u1 - m1) + (i + 1) * (u2 - m2)
                    assert x >= 0 and y >= 0


def test_weight_map():
    assert weight(2, (1, 0)) == (1, 1)
    assert weight(3, (2, -1)) == (2, -1)
    assert weight(3, (0, 1)) == (0, 3)


def test_multiply_section_sets_and_multiplicativity():
    b = divisor_spec(2, (1,))
    ss = enumerate_sections(b, (3, 4))
    prod = multiply_section_sets(ss, ss)
    assert prod.box == (6, 8)
    assert (2, -2) in set(prod.monomials)  # (1,-1)+(1,-1)
    assert sections_multiplicative(b, b, (4, 4))
    c = divisor_spec(2, (2,))
    assert sections_multiplicative(b, c, (5, 5))


def test_localization_terms_numerators():
    spec = divisor_spec(2, (1,))
    terms = localization_terms(spec)
    assert terms[1].numerator.terms == {(1, -1): 1}
    assert terms[0].numerator.terms == {(0, 0): 1}
    # denominators carry the dual cone weights
    assert terms[0].denominator == ((0, 2), (1, -1))


def test_localization_series_assembles_term_sum():
    for n, b in [(2, (0,)), (2, (1,)), (3, (1, 0)), (3, (2, 1))]:
        spec = divisor_spec(n, b)
        total = localization_series(spec)
        acc = None
        for t in localization_terms(spec):
            acc = t if acc is None else acc + t
        assert ratfun_equal(total, acc)


def test_localization_expansion_counts_sections_smoke():
    for n, b in [(2, (0,)), (2, (1,)), (3, (1, 1))]:
        spec = divisor_spec(n, b)
        level = 12
        ell = (n + 1, 1)
        ts = expand(localization_series(spec), ell, level)
        ss = enumerate_sections(spec, (level, level))
        got = {w: 1 for w in ((u1, u1 + n * u2) for (u1, u2) in ss.monomials)
               if ell[0] * w[0] + ell[1] * w[1] <= level}
        expected = {m: c for m, c in ts.coefficients.items()}
        assert got == expected


def test_antidiagonal_of_modz_multiplied_series_is_exact_modz():
    # (1 - t^n) * H specialized antidiagonally equals the closed one-variable
    # form: exact rational function identity, no truncation
    for n, b in [(2, (0,)), (2, (2,)), (3, (1, 0)), (3, (1, 1)), (4, (1, 0, 2))]:
        spec = divisor_spec(n, b)
        h = localization_series(spec)
        hbar = h.mul_poly(LaurentPoly2({(0, 0): 1, (0, n): -1}))
        lhs = specialize_antidiagonal(hbar)
        assert ratfun1_equal(lhs, modz_series(n, b))
