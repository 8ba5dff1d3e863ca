"""Crossed product of the Laurent-localized Weyl algebra with a cyclic group.

Elements live in the algebra generated by y (invertible), the derivative
generator, and idempotents e_0, ..., e_{n-1}; the unique normal form is a
sum of monomials y^a d^b e_i with a in Z, b >= 0.  The rewriting rules are

    d^b y^c = sum_k  C(b, k) * c(c-1)...(c-k+1) * y^{c-k} d^{b-k}
    e_i y   = y e_{i-1},      e_i d = d e_{i+1},      e_i e_j = delta e_i,

the first valid for every integer c via the falling factorial.  The
deformed generator attached to a parameter vector k is
d_k = d - y^{-1} sum_i k_i e_i; the Euler element is y d.

Windowed spans: every graded piece handled here sits on a single
idempotent column with y-exponent pinned to (degree + order), so a
homogeneous element is just a vector of coefficients indexed by its
d-exponent, and exact row reduction per degree does the rest.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import RowSpace
from .rootmorita import k_entry, translation


@dataclass(frozen=True)
class ParamVector:
    n: int
    k: tuple

    def entry(self, j):
        return k_entry(self.n, self.k, j)

    def shift(self, p):
        w = translation(self.n, p)
        return ParamVector(self.n, tuple(x + y for x, y in zip(self.k, w)))

    def shift_by(self, vec):
        return ParamVector(self.n, tuple(x + y for x, y in zip(self.k, vec)))


def param(n, k):
    k = tuple(Fraction(x) for x in k)
    if len(k) != n - 1:
        raise ValueError("k must have length n-1")
    return ParamVector(n, k)


class CrossedElement:
    """Normal form dict {(a, b, i): Fraction} for sum c y^a d^b e_i."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for (a, b, i), c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if b < 0 or not 0 <= i < n:
                    raise ValueError("bad normal form key")
                self.terms[(a, b, i)] = c

    # constructors
    @staticmethod
    def zero(n):
        return CrossedElement(n)

    @staticmethod
    def one(n):
        return CrossedElement(n, {(0, 0, i): 1 for i in range(n)})

    @staticmethod
    def idempotent(n, i):
        return CrossedElement(n, {(0, 0, i % n): 1})

    @staticmethod
    def y_power(n, a):
        return CrossedElement(n, {(a, 0, i): 1 for i in range(n)})

    @staticmethod
    def derivative(n):
        return CrossedElement(n, {(0, 1, i): 1 for i in range(n)})

    @staticmethod
    def monomial(n, a, b, i, coeff=1):
        return CrossedElement(n, {(a, b, i): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, CrossedElement) and self.n == other.n
                and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, Fraction(0)) + c
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
        return CrossedElement(self.n, out)

    def __neg__(self):
        return CrossedElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def _scale(self, c):
        c = Fraction(c)
        return CrossedElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CrossedElement):
            return self._scale(other)
        n = self.n
        out = {}
        for (a1, b1, i1), c1 in self.terms.items():
            for (a2, b2, i2), c2 in other.terms.items():
                if (i1 - a2 + b2 - i2) % n != 0:
                    continue
                coef = c1 * c2
                ff = 1  # falling factorial a2 (a2-1) ... , k factors
                for k in range(0, b1 + 1):
                    if k > 0:
                        ff *= (a2 - (k - 1))
                        if ff == 0:
                            break
                    key = (a1 + a2 - k, b1 + b2 - k, i2)
                    v = out.get(key, Fraction(0)) + coef * math.comb(b1, k) * ff
                    if v == 0:
                        out.pop(key, None)
                    else:
                        out[key] = v
        return CrossedElement(n, out)

    def __rmul__(self, other):
        # scalar on the left
        return self._scale(other)

    def __pow__(self, m):
        if m < 0:
            raise ValueError("no inverses here")
        acc = CrossedElement.one(self.n)
        for _ in range(m):
            acc = acc * self
        return acc

    def degrees(self):
        return {a - b for (a, b, _) in self.terms}

    def degree(self):
        degs = self.degrees()
        assert len(degs) == 1, "element is not homogeneous"
        return next(iter(degs))

    def order(self):
        if not self.terms:
            return None
        return max(b for (_, b, _) in self.terms)

    def __repr__(self):
        bits = []
        for (a, b, i), c in sorted(self.terms.items()):
            bits.append(f"{c}*y^{a}d^{b}e{i}")
        return " + ".join(bits) if bits else "0"


def deformed_generator(par):
    """d_k = d - y^{-1} sum_{i=1}^{n-1} k_i e_i."""
    n = par.n
    terms = {(0, 1, i): Fraction(1) for i in range(n)}
    for i in range(1, n):
        c = par.entry(i)
        if c != 0:
            terms[(-1, 0, i)] = -c
    return CrossedElement(n, terms)


def euler_element(n):
    return CrossedElement(n, {(1, 1, i): 1 for i in range(n)})


def left_idem(x, j):
    """e_j * x without forming the product: keep terms with i = j - a + b."""
    n = x.n
    return CrossedElement(
        n, {(a, b, i): c for (a, b, i), c in x.terms.items()
            if (j - a + b - i) % n == 0})


def _idem_scalar_sum(n, values):
    """sum_j values[j] e_j as an element."""
    return CrossedElement(n, {(0, 0, j): values[j] for j in range(n)})


# ---------------------------------------------------------------------------
# identity checks


def verify_ty(par, p):
    """Both product factorizations of d_k^p y^p and y^p d_k^p, globally and
    per idempotent.  Returns [(name, ok), ...]."""
    n = par.n
    if not 1 <= p <= n:
        raise ValueError("p out of range")
    d = deformed_generator(par)
    y = CrossedElement.y_power(n, 1)
    th = euler_element(n)
    lhs1 = d ** p * y ** p
    rhs1 = CrossedElement.one(n)
    for i in range(1, p + 1):
        shift = _idem_scalar_sum(n, [par.entry(i + j) for j in range(n)])
        rhs1 = rhs1 * (th + CrossedElement.one(n) * i - shift)
    lhs2 = y ** p * d ** p
    rhs2 = CrossedElement.one(n)
    for i in range(0, p):
        shift = _idem_scalar_sum(n, [par.entry(j - i) for j in range(n)])
        rhs2 = rhs2 * (th - CrossedElement.one(n) * i - shift)
    checks = [("raise", lhs1 == rhs1), ("lower", lhs2 == rhs2)]
    for j in range(n):
        scal1 = CrossedElement.one(n)
        for i in range(1, p + 1):
            scal1 = scal1 * (th + CrossedElement.one(n) * (i - par.entry(i + j)))
        checks.append((f"raise_e{j}", left_idem(lhs1, j) == left_idem(scal1, j)))
        scal2 = CrossedElement.one(n)
        for i in range(0, p):
            scal2 = scal2 * (th - CrossedElement.one(n) * (i + par.entry(j - i)))
        checks.append((f"lower_e{j}", left_idem(lhs2, j) == left_idem(scal2, j)))
    return checks


def check_transfer_identity(par, p):
    """y^p e d_k^n = e_p d_{k'}^n y^p with k' = k + w_p."""
    n = par.n
    y = CrossedElement.y_power(n, 1)
    lhs = y ** p * left_idem(deformed_generator(par) ** n, 0)
    par2 = par.shift(p)
    rhs = left_idem(deformed_generator(par2) ** n, p) * y ** p
    return lhs == rhs


def check_conjugation_identity(par, p):
    """y^p e d_k^n y^{-p} = e_p d_{k'}^n."""
    n = par.n
    y = CrossedElement.y_power(n, 1)
    yinv = CrossedElement.y_power(n, -1)
    lhs = y ** p * left_idem(deformed_generator(par) ** n, 0) * yinv ** p
    rhs = left_idem(deformed_generator(par.shift(p)) ** n, p)
    return lhs == rhs


def check_53_kappa(par, p):
    """y^p e (y d_k) = e_p (y d_{k'} - kappa) y^p; returns (ok, kappa)."""
    n = par.n
    y = CrossedElement.y_power(n, 1)
    lhs = y ** p * left_idem(y * deformed_generator(par), 0)
    outer = left_idem(y * deformed_generator(par.shift(p)), p) * y ** p
    delta = outer - lhs
    # delta must be kappa * e_p y^p = kappa * y^p e_0
    key = (p, 0, 0)
    if delta.is_zero():
        return (not delta.terms, Fraction(0))
    if set(delta.terms) != {key}:
        return (False, None)
    return (True, delta.terms[key])


def check_switch_identity(par, p, q):
    """Two step orders give the same product, and both match the closed form.

    e d_{k3}^q y^q d_{k1}^p y^p = e d_{k3}^p y^p d_{k2}^q y^q with
    k1 = k + w_p, k2 = k + w_q, k3 = k + w_p + w_q; the common value is
    e prod_{i<=min}(th + i - 2n - k_i) prod_{i<=max}(th + i - n - k_i).
    """
    n = par.n
    y = CrossedElement.y_power(n, 1)
    k1 = par.shift(p)
    k2 = par.shift(q)
    k3 = k1.shift(q)
    assert k3 == k2.shift(p)
    d1 = deformed_generator(k1)
    d2 = deformed_generator(k2)
    d3 = deformed_generator(k3)
    lhs = left_idem(d3 ** q * y ** q * d1 ** p * y ** p, 0)
    rhs = left_idem(d3 ** p * y ** p * d2 ** q * y ** q, 0)
    th = euler_element(n)
    common = CrossedElement.one(n)
    for i in range(1, min(p, q) + 1):
        common = common * (th + CrossedElement.one(n) * (i - 2 * n - par.entry(i)))
    for i in range(1, max(p, q) + 1):
        common = common * (th + CrossedElement.one(n) * (i - n - par.entry(i)))
    common = left_idem(common, 0)
    return (lhs == rhs, lhs == common and rhs == common)


# ---------------------------------------------------------------------------
# windowed spans


class WindowSpace:
    """Reduced per-degree bases of a graded span within (degree, order) bounds.

    Every inserted element must be homogeneous and supported on a single
    idempotent column; its vector is {d-exponent: coefficient}.  Columns are
    reduced highest order first, so rows with pivot order <= N span exactly
    the intersection with filtration level N.
    """

    def __init__(self, n, deg_lo, deg_hi, order_bound, column_idem=0):
        self.n = n
        self.deg_lo = deg_lo
        self.deg_hi = deg_hi
        self.order_bound = order_bound
        self.column_idem = column_idem
        self.spaces = {}

    def _vectorize(self, x):
        m = x.degree()
        vec = {}
        for (a, b, i), c in x.terms.items():
            assert i == self.column_idem, "unexpected idempotent column"
            assert a - b == m
            vec[b] = c
        return m, vec

    def fits(self, x):
        if x.is_zero():
            return False
        degs = x.degrees()
        if len(degs) != 1:
            return False
        m = next(iter(degs))
        return self.deg_lo <= m <= self.deg_hi and x.order() <= self.order_bound

    def insert(self, x):
        m, vec = self._vectorize(x)
        space = self.spaces.setdefault(m, RowSpace(column_key=lambda b: -b))
        return space.insert(vec)

    def contains(self, x):
        if x.is_zero():
            return True
        m, vec = self._vectorize(x)
        if m not in self.spaces:
            return False
        return self.spaces[m].contains(vec)

    def dim(self, m, order_bound=None):
        if m not in self.spaces:
            return 0
        if order_bound is None:
            return self.spaces[m].rank
        return sum(1 for piv in self.spaces[m].pivots if piv <= order_bound)

    def degrees(self):
        return sorted(self.spaces)

    def _element(self, m, row):
        return CrossedElement(
            self.n, {(m + b, b, self.column_idem): c for b, c in row.items()})

    def basis_elements(self, order_bound=None):
        out = []
        for m in self.degrees():
            space = self.spaces[m]
            for row, piv in zip(space.rows, space.pivots):
                if order_bound is None or piv <= order_bound:
                    out.append(self._element(m, row))
        return out

    def gr_orders(self, m, order_bound=None):
        if m not in self.spaces:
            return set()
        return {piv for piv in self.spaces[m].pivots
                if order_bound is None or piv <= order_bound}

    def gr_monomials(self, order_bound=None):
        """Symbols of the window as (u-exponent, v-exponent) pairs."""
        out = set()
        for m in self.degrees():
            for j in self.gr_orders(m, order_bound):
                assert m + j >= 0, "symbol escapes the polynomial quadrant"
                out.add((m + j, j))
        return out


def closed_span(n, seeds, multipliers, deg_lo, deg_hi, order_bound, column_idem=0):
    """Span of the left module generated by seeds inside the window."""
    ws = WindowSpace(n, deg_lo, deg_hi, order_bound, column_idem)
    queue = []
    for s in seeds:
        if ws.fits(s) and ws.insert(s):
            queue.append(s)
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for mlt in multipliers:
            y = mlt * x
            if ws.fits(y) and ws.insert(y):
                queue.append(y)
    return ws


def spherical_multipliers(par):
    n = par.n
    d = deformed_generator(par)
    return [CrossedElement.y_power(n, n),
            CrossedElement.y_power(n, 1) * d,
            d ** n]


def _restrict(padded, deg_lo, deg_hi, order_bound, column_idem=0):
    ws = WindowSpace(padded.n, deg_lo, deg_hi, order_bound, column_idem)
    for x in padded.basis_elements(order_bound=order_bound):
        if ws.fits(x):
            ws.insert(x)
    return ws


def spherical_window(par, deg_lo, deg_hi, order_bound, pad_ord=None):
    """Window of the spherical subalgebra at parameter k, identity seed e."""
    n = par.n
    if pad_ord is None:
        pad_ord = n
    padded = closed_span(
        n, [CrossedElement.idempotent(n, 0)], spherical_multipliers(par),
        deg_lo - (order_bound + 2 * n), deg_hi + n, order_bound + pad_ord)
    return _restrict(padded, deg_lo, deg_hi, order_bound)


@dataclass
class BimoduleHandle:
    source: ParamVector
    target: ParamVector
    p: int
    gen_inner: CrossedElement   # e d_{k'}^p y^p, degree 0
    gen_outer: CrossedElement   # e y^n, degree n


def basic_bimodule(par, p):
    """Handle for the one-step bimodule from parameter k to k + w_p."""
    n = par.n
    target = par.shift(p)
    y = CrossedElement.y_power(n, 1)
    gen_inner = left_idem(deformed_generator(target) ** p * y ** p, 0)
    gen_outer = left_idem(CrossedElement.y_power(n, n), 0)
    assert gen_inner.degree() == 0 and gen_outer.degree() == n
    return BimoduleHandle(par, target, p, gen_inner, gen_outer)


def bimodule_window(base, steps, deg_lo, deg_hi, order_bound, pad_ord=None):
    """Window of the composed bimodule along the given step sequence.

    steps are applied to the base parameter left to right; the element
    space is the product of the one-step spaces, rightmost factor first.
    An empty step list gives the spherical window of the base.
    """
    n = base.n
    if pad_ord is None:
        pad_ord = n
    if not steps:
        return spherical_window(base, deg_lo, deg_hi, order_bound, pad_ord)
    depth = len(steps)
    lo = deg_lo - (order_bound + 2 * n) * depth
    hi = deg_hi + n * (depth + 1)
    bound = order_bound + pad_ord
    current = None
    par = base
    for p in steps:
        handle = basic_bimodule(par, p)
        par = handle.target
        if current is None:
            seeds = [handle.gen_inner, handle.gen_outer]
        else:
            seeds = []
            for x in current.basis_elements():
                seeds.append(handle.gen_inner * x)
                seeds.append(handle.gen_outer * x)
        current = closed_span(n, seeds, spherical_multipliers(par), lo, hi, bound)
    return _restrict(current, deg_lo, deg_hi, order_bound)


def translated_spans_agree(par, p, deg_lo, deg_hi, order_bound):
    """y^p (e H_k e) = e_p H_{k'} e_p y^p as windowed spans."""
    n = par.n
    y = CrossedElement.y_power(n, 1)
    left = WindowSpace(n, deg_lo, deg_hi, order_bound)
    sph = spherical_window(par, deg_lo - p, deg_hi - p, order_bound)
    for x in sph.basis_elements():
        z = y ** p * x
        if left.fits(z):
            left.insert(z)
    par2 = par.shift(p)
    right = WindowSpace(n, deg_lo, deg_hi, order_bound)
    padded = closed_span(
        n, [CrossedElement.idempotent(n, p)], spherical_multipliers(par2),
        deg_lo - p - (order_bound + 2 * n), deg_hi + n, order_bound + n,
        column_idem=p)
    ep = CrossedElement.idempotent(n, p)
    for x in padded.basis_elements():
        z = (ep * x) * y ** p
        if right.fits(z):
            right.insert(z)
    if {m: left.dim(m) for m in left.degrees()} != \
            {m: right.dim(m) for m in right.degrees()}:
        return False
    return (all(right.contains(x) for x in left.basis_elements())
            and all(left.contains(x) for x in right.basis_elements()))


def quotient_dims_mod_dn(space, source, degrees, order_bound):
    """Per-degree dimensions of (window) / (window * e d_source^n).

    Returns (dims, included): included reports whether every product
    actually reduced into the window span, the honesty condition for the
    quotient to be meaningful at this truncation.
    """
    n = space.n
    dn = left_idem(deformed_generator(source) ** n, 0)
    dims = {}
    included = True
    for m in degrees:
        vdim = space.dim(m, order_bound=order_bound)
        sub = RowSpace(column_key=lambda b: -b)
        if m + n in space.spaces:
            rs = space.spaces[m + n]
            for row, piv in zip(rs.rows, rs.pivots):
                if piv > order_bound - n:
                    continue
                x = space._element(m + n, row) * dn
                if not space.contains(x):
                    included = False
                if not x.is_zero():
                    vec = {b: c for (a, b, i), c in x.terms.items()}
                    sub.insert(vec)
        dims[m] = vdim - sub.rank
    return dims, included


# ---------------------------------------------------------------------------
# associated graded symbols


def gr_symbol(x):
    """Top-order part of x as symbol dict {(u-exp, v-exp, idem): coeff}."""
    if x.is_zero():
        return {}
    top = x.order()
    return {(a, b, i): c for (a, b, i), c in x.terms.items() if b == top}


def symbol_mul(n, s1, s2):
    """Product in the symbol algebra (no lower-order corrections)."""
    out = {}
    for (a1, b1, i1), c1 in s1.items():
        for (a2, b2, i2), c2 in s2.items():
            if (i1 - a2 + b2 - i2) % n != 0:
                continue
            key = (a1 + a2, b1 + b2, i2)
            v = out.get(key, Fraction(0)) + c1 * c2
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out
