"""Exact Laurent polynomials and factored rational functions.

Two-variable objects live in variables (q, t); a monomial is keyed by its
exponent pair (r, s).  Rational functions are kept factored: a Laurent
numerator over a multiset of denominator factors (1 - q^r t^s).  Equality
is always decided by exact cross-multiplication, never by expansion.

Truncated expansion is taken along a direction functional
ell(r, s) = c_r * r + c_s * s.  A factor whose monomial has negative
ell-value is first rewritten through the exact flip

    1/(1 - m) = -m^{-1} / (1 - m^{-1}),

after which every factor monomial points strictly into the half-space
ell > 0 and geometric truncation at ell <= level is safe.  A factor with
ell-value zero admits no expansion in that direction and is an error.
"""

from fractions import Fraction


class LaurentPoly2:
    """Laurent polynomial in q, t: dict {(r, s): Fraction}, zeros dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[m] = c

    @staticmethod
    def monomial(r, s, coeff=1):
        return LaurentPoly2({(r, s): coeff})

    @staticmethod
    def one():
        return LaurentPoly2({(0, 0): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return LaurentPoly2(out)

    def __neg__(self):
        return LaurentPoly2({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (r1, s1), c1 in self.terms.items():
            for (r2, s2), c2 in other.terms.items():
                m = (r1 + r2, s1 + s2)
                v = out.get(m, Fraction(0)) + c1 * c2
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return LaurentPoly2(out)


def factor_poly(factor):
    """(r, s) -> the Laurent polynomial 1 - q^r t^s."""
    r, s = factor
    if (r, s) == (0, 0):
        raise ValueError("factor (1 - q^0 t^0) is zero")
    return LaurentPoly2({(0, 0): 1, (r, s): -1})


class RatFun2:
    """Factored rational function: numerator / prod (1 - q^r t^s)."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        self.numerator = numerator
        self.denominator = tuple(sorted((int(r), int(s)) for r, s in denominator))
        for f in self.denominator:
            if f == (0, 0):
                raise ValueError("zero denominator factor")

    def denominator_poly(self):
        p = LaurentPoly2.one()
        for f in self.denominator:
            p = p * factor_poly(f)
        return p

    def __add__(self, other):
        # no cancellation: cross-multiply onto the concatenated denominator
        num = (self.numerator * other.denominator_poly()
               + other.numerator * self.denominator_poly())
        return RatFun2(num, self.denominator + other.denominator)

    def mul_poly(self, poly):
        return RatFun2(self.numerator * poly, self.denominator)


def ratfun_equal(f, g):
    """Exact equality of rational functions by cross-multiplication."""
    return (f.numerator * g.denominator_poly()) == (g.numerator * f.denominator_poly())


class TruncatedSeries2:
    """Expansion of a RatFun2: exact coefficients on {ell(r,s) <= level}."""

    __slots__ = ("ell", "level", "coefficients")

    def __init__(self, ell, level, coefficients):
        self.ell = tuple(ell)
        self.level = level
        self.coefficients = {m: c for m, c in coefficients.items() if c != 0}

    def coefficient(self, r, s):
        return self.coefficients.get((r, s), Fraction(0))


def _ell_value(ell, m):
    return ell[0] * m[0] + ell[1] * m[1]


def expand(f, ell, level):
    """Truncated Laurent expansion of f in the ell-direction.

    Every monomial of the true expansion with ell-value <= level appears
    with its exact coefficient; nothing below that line is guaranteed.
    """
    num = dict(f.numerator.terms)
    factors = []
    for (r, s) in f.denominator:
        v = _ell_value(ell, (r, s))
        if v == 0:
            raise ValueError(f"factor (1 - q^{r} t^{s}) is flat for ell={ell}")
        if v < 0:
            # flip: 1/(1-m) = -m^{-1}/(1-m^{-1})
            num = {(mr - r, ms - s): -c for (mr, ms), c in num.items()}
            factors.append((-r, -s))
        else:
            factors.append((r, s))
    acc = {m: c for m, c in num.items() if _ell_value(ell, m) <= level}
    for (r, s) in factors:
        if not acc:
            break
        v = _ell_value(ell, (r, s))
        lo = min(_ell_value(ell, m) for m in acc)
        kmax = (level - lo) // v
        out = {}
        for (mr, ms), c in acc.items():
            base = _ell_value(ell, (mr, ms))
            k = 0
            while base + k * v <= level and k <= kmax:
                m = (mr + k * r, ms + k * s)
                w = out.get(m, Fraction(0)) + c
                if w == 0:
                    out.pop(m, None)
                else:
                    out[m] = w
                k += 1
        acc = out
    return TruncatedSeries2(ell, level, acc)


def expansion_defect_min_ell(f, ts, ell):
    """Self-check data for expand: (min ell over denominator-product support,
    min ell over the support of ts*denominator - numerator, or None).

    Soundness of the truncation means the defect lives strictly above
    level + dmin.
    """
    den = f.denominator_poly()
    dmin = min(_ell_value(ell, m) for m in den.terms)
    tspoly = LaurentPoly2(ts.coefficients)
    defect = tspoly * den - f.numerator
    if defect.is_zero():
        return dmin, None
    return dmin, min(_ell_value(ell, m) for m in defect.terms)


class RatFun1:
    """One-variable analogue: numerator dict {e: Fraction} / prod (1 - s^a)."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        self.numerator = {int(e): Fraction(c) for e, c in numerator.items() if c != 0}
        self.denominator = tuple(sorted(int(a) for a in denominator))
        if any(a == 0 for a in self.denominator):
            raise ValueError("zero denominator factor")

    def denominator_poly(self):
        p = {0: Fraction(1)}
        for a in self.denominator:
            p = _poly1_mul(p, {0: Fraction(1), a: Fraction(-1)})
        return p

    def __add__(self, other):
        num = _poly1_add(
            _poly1_mul(self.numerator, other.denominator_poly()),
            _poly1_mul(other.numerator, self.denominator_poly()),
        )
        return RatFun1(num, self.denominator + other.denominator)

    def mul_monomial(self, shift, coeff=1):
        return RatFun1({e + shift: c * coeff for e, c in self.numerator.items()},
                       self.denominator)


def _poly1_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            v = out.get(e1 + e2, Fraction(0)) + c1 * c2
            if v == 0:
                out.pop(e1 + e2, None)
            else:
                out[e1 + e2] = v
    return out


def _poly1_add(p, q):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, Fraction(0)) + c
        if v == 0:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def ratfun1_equal(f, g):
    return _poly1_mul(f.numerator, g.denominator_poly()) == \
        _poly1_mul(g.numerator, f.denominator_poly())


def expand1(f, level):
    """Exact coefficients of f's expansion (increasing s) up to s^level."""
    num = dict(f.numerator)
    factors = []
    for a in f.denominator:
        if a < 0:
            num = {e - a: -c for e, c in num.items()}
            factors.append(-a)
        else:
            factors.append(a)
    acc = {e: c for e, c in num.items() if e <= level}
    for a in factors:
        if not acc:
            break
        out = {}
        for e, c in acc.items():
            k = 0
            while e + k * a <= level:
                v = out.get(e + k * a, Fraction(0)) + c
                if v == 0:
                    out.pop(e + k * a, None)
                else:
                    out[e + k * a] = v
                k += 1
        acc = out
    return acc


def specialize_antidiagonal(f):
    """q -> s, t -> s^{-1}: the pair (r, s) collapses to s-degree r - s."""
    num = {}
    for (r, s), c in f.numerator.terms.items():
        e = r - s
        v = num.get(e, Fraction(0)) + c
        if v == 0:
            num.pop(e, None)
        else:
            num[e] = v
    den = []
    for (r, s) in f.denominator:
        a = r - s
        if a == 0:
            raise ValueError(f"factor (1 - q^{r} t^{s}) collapses to zero")
        den.append(a)
    return RatFun1(num, den)


def modz_series(n, b):
    """Closed one-variable series of a section space modulo z-multiplication.

    b is the nonnegative integer vector indexing the divisor; the result is
    (sum_{i=0}^{n-1} s^{n * sum_{j=n-i}^{n-1} b_j}) / (1 - s^n).
    """
    b = tuple(int(x) for x in b)
    if len(b) != n - 1:
        raise ValueError("b must have length n-1")
    if any(x < 0 for x in b):
        raise ValueError("b entries must be nonnegative")
    num = {}
    for i in range(n):
        e = n * sum(b[j - 1] for j in range(n - i, n))
        num[e] = num.get(e, Fraction(0)) + 1
    return RatFun1(num, (n,))
