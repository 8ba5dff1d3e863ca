"""Toric side: the cyclic-quotient resolution, its divisors, and sections.

The surface is the minimal resolution of C^2/(Z/n) in type A.  Its fan in
N = Z^2 has rays v_i = (1, i) for 0 <= i <= n; chart index i (0-based,
0 <= i <= n-1) refers to the cone spanned by (v_i, v_{i+1}).  Monomials
x^{u1} z^{u2} are lattice points u = (u1, u2) of the dual M = Z^2, and the
torus weight of x^{u1} z^{u2} is (r, s) = (u1, u1 + n*u2): r counts the
first character, s the second, matching x = uv and z = v^n downstairs.

A divisor is presented by an integer vector b of length n-1; the chosen
representative has support coefficients a_0, ..., a_n on the boundary
divisors (a_0 = a_1 = 0 always), and global sections are the lattice
points u with u1 + j*u2 >= -a_j for every 0 <= j <= n.
"""

from .series import LaurentPoly2, RatFun2


class Fan:
    """Fan of the resolution: rays, maximal cones, and dual cone data."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.rays = [(1, i) for i in range(n + 1)]
        self.cones = [(i, i + 1) for i in range(n)]
        for (i, j) in self.cones:
            (a, b), (c, d) = self.rays[i], self.rays[j]
            assert a * d - b * c == 1, "cone is not smooth"

    def dual_generators(self, i):
        """Generators of the dual cone of chart i, as (x, z)-exponent pairs.

        Chart i is the cone on (v_i, v_{i+1}); its coordinate ring is
        C[x^{i+1} z^{-1}, x^{-i} z].
        """
        if not 0 <= i < self.n:
            raise ValueError("chart index out of range")
        return ((i + 1, -1), (-i, 1))


def build_fan(n):
    return Fan(n)


def weight(n, u):
    """Torus weight (r, s) of the monomial x^{u1} z^{u2}."""
    u1, u2 = u
    return (u1, u1 + n * u2)


class DivisorSpec:
    """Divisor data: the vector b and the derived support coefficients a."""

    def __init__(self, n, b, a):
        self.n = n
        self.b = tuple(b)
        self.a = tuple(a)

    @property
    def degree_shift(self):
        """a_n = sum j*b_j, the x-power that shifts sections into gr-land."""
        return self.a[self.n]


def divisor_spec(n, b):
    b = tuple(int(x) for x in b)
    if len(b) != n - 1:
        raise ValueError("b must have length n-1")
    a = []
    for k in range(n + 1):
        a.append(sum((j + k - n) * b[j - 1] for j in range(n + 1 - k, n)))
    assert a[0] == 0 and a[1] == 0
    assert a[n] == sum(j * b[j - 1] for j in range(1, n))
    return DivisorSpec(n, b, a)


def chart_generator(spec, i):
    """Exponents (m1, m2) of the section generating the divisor on chart i.

    Chart index is 0-based (cone on v_i, v_{i+1}).  Two closed forms exist
    and must agree; both are evaluated.
    """
    n = spec.n
    if not 0 <= i < n:
        raise ValueError("chart index out of range")
    b = spec.b
    m1 = sum((n - j) * b[j - 1] for j in range(n - i, n))
    m2 = -sum(b[j - 1] for j in range(n - i, n))
    a = spec.a
    assert m1 == i * a[i + 1] - (i + 1) * a[i]
    assert m2 == a[i] - a[i + 1]
    return (m1, m2)


class SectionSet:
    """Finite window of a section space: monomials within a weight box."""

    def __init__(self, n, b, box, monomials):
        self.n = n
        self.b = tuple(b)
        self.box = (int(box[0]), int(box[1]))
        self.monomials = tuple(sorted(monomials))

    def weights(self):
        return {weight(self.n, u) for u in self.monomials}

    def __contains__(self, u):
        return tuple(u) in set(self.monomials)


def enumerate_sections(spec, box):
    """All section monomials with weight r <= box[0], s <= box[1].

    Finiteness: r = u1 >= -a_0 = 0 and s = u1 + n*u2 >= -a_n, so the box
    truncates a set that is bounded below in both weight coordinates.
    """
    n = spec.n
    if any(x < 0 for x in spec.b):
        raise ValueError("sections require nonnegative b")
    rmax, smax = int(box[0]), int(box[1])
    a = spec.a
    out = []
    for u1 in range(0, rmax + 1):
        # s = u1 + n*u2 runs over the residue class of u1 mod n
        s_lo = -a[n]
        rem = (u1 - s_lo) % n
        s = s_lo + rem
        while s <= smax:
            u2 = (s - u1) // n
            if all(u1 + j * u2 >= -a[j] for j in range(n + 1)):
                out.append((u1, u2))
            s += n
    return SectionSet(n, spec.b, (rmax, smax), out)


def multiply_section_sets(first, second):
    """Exponent-sum of two section windows; box bounds add."""
    if first.n != second.n:
        raise ValueError("mismatched n")
    prods = {(a1 + b1, a2 + b2)
             for (a1, a2) in first.monomials for (b1, b2) in second.monomials}
    b = tuple(x + y for x, y in zip(first.b, second.b))
    box = (first.box[0] + second.box[0], first.box[1] + second.box[1])
    return SectionSet(first.n, b, box, prods)


def sections_multiplicative(spec_b, spec_c, box):
    """Surjectivity of multiplication onto sections of the sum, at truncation.

    Within box, every section of b+c must be a product of sections of b and
    of c.  The factor windows are enlarged so that the comparison box is
    reliable: a product weight (r, s) with r <= rmax, s <= smax only needs
    factors with r' <= rmax and s' <= smax + degree_shift(other side).
    """
    n = spec_b.n
    rmax, smax = int(box[0]), int(box[1])
    fb, fc = spec_b.degree_shift, spec_c.degree_shift
    first = enumerate_sections(spec_b, (rmax, smax + fc))
    second = enumerate_sections(spec_c, (rmax, smax + fb))
    spec_sum = divisor_spec(n, [x + y for x, y in zip(spec_b.b, spec_c.b)])
    target = enumerate_sections(spec_sum, (rmax, smax))
    prod = multiply_section_sets(first, second)
    in_box = {u for u in prod.monomials
              if u[0] <= rmax and u[0] + n * u[1] <= smax}
    return in_box == set(target.monomials)


def localization_terms(spec):
    """Per-fixed-point terms of the equivariant section count.

    The term of chart i is q^r t^s / prod_g (1 - q^{rg} t^{sg}), where
    (r, s) is the weight of the chart generator of the divisor and g runs
    over the two dual cone generators of the chart.
    """
    n = spec.n
    if any(x < 0 for x in spec.b):
        raise ValueError("series requires nonnegative b")
    fan = build_fan(n)
    terms = []
    for i in range(n):
        num = LaurentPoly2.monomial(*weight(n, chart_generator(spec, i)))
        den = [weight(n, g) for g in fan.dual_generators(i)]
        terms.append(RatFun2(num, den))
    return terms


def localization_series(spec):
    """Fixed-point sum assembled over the common denominator.

    All 2n dual-cone weights are kept as denominator factors; the numerator
    cross-multiplies each term by the factors of the other charts.
    """
    terms = localization_terms(spec)
    all_factors = []
    for t in terms:
        all_factors.extend(t.denominator)
    num = LaurentPoly2()
    for t in terms:
        part = t.numerator
        others = list(all_factors)
        for f in t.denominator:
            others.remove(f)
        for f in others:
            part = part * LaurentPoly2({(0, 0): 1, f: -1})
        num = num + part
    return RatFun2(num, all_factors)
