"""Type A root combinatorics for the deformation parameter.

The parameter is a rational vector k = (k_1, ..., k_{n-1}); indices are
read cyclically with k_0 = k_n = 0.  Everything here is elementary exact
arithmetic: dominance of k against the integrality root subsystem, the
translation vectors that index basic bimodule steps, coprimality
certificates for the two Morita conditions, and the dictionaries to the
spherical presentation (Hodges form) and to the commutator normalization
(Crawley-Boevey and Holland form).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .polys import p_add, p_ext_gcd, p_from_roots, p_mul


def _as_k(n, k):
    k = tuple(Fraction(x) for x in k)
    if len(k) != n - 1:
        raise ValueError("k must have length n-1")
    return k


def k_entry(n, k, j):
    """Cyclic lookup: k_j for any integer j, with k_0 = 0."""
    j = j % n
    return Fraction(0) if j == 0 else k[j - 1]


def rho(n):
    """Half-sum vector (n-1, n-2, ..., 1) used throughout."""
    return tuple(Fraction(n - i) for i in range(1, n))


def spherical_offsets(n, k):
    """a_i = (n - i + k_i)/n for i = 1..n-1, together with a_n = 0."""
    k = _as_k(n, k)
    a = tuple((Fraction(n - i) + k[i - 1]) / n for i in range(1, n)) + (Fraction(0),)
    return a


@dataclass
class DominanceReport:
    n: int
    k: tuple
    dominant: bool
    culprits: list = field(default_factory=list)
    checked: int = 0


def is_dominant(n, k):
    """Strict positivity of (k + rho, alpha) over the integrality subsystem.

    alpha runs over positive roots v_i - v_j (i < j <= n); alpha belongs to
    the subsystem iff (a, alpha) is an integer for the offsets a.  Boundary
    cases (pairing exactly 0) count as non-dominant.
    """
    k = _as_k(n, k)
    a = spherical_offsets(n, k)
    kr = [k_entry(n, k, i) + (n - i) for i in range(1, n + 1)]  # (k+rho)_i, last is 0
    culprits = []
    checked = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pa = a[i - 1] - a[j - 1]
            if pa.denominator != 1:
                continue
            checked += 1
            val = kr[i - 1] - kr[j - 1]
            if val <= 0:
                culprits.append((i, j, val))
    return DominanceReport(n, k, not culprits, culprits, checked)


def translation(n, p):
    """w_p: n in the first p slots of Z^{n-1}, the basic parameter shift."""
    if not 1 <= p <= n - 1:
        raise ValueError("p out of range")
    return tuple(n if i <= p else 0 for i in range(1, n))


def translation_sum(n, b):
    """F(b) = sum_j b_j w_j; component i is n * sum_{j >= i} b_j."""
    b = tuple(int(x) for x in b)
    if len(b) != n - 1:
        raise ValueError("b must have length n-1")
    return tuple(n * sum(b[j - 1] for j in range(i, n)) for i in range(1, n))


def shifted_parameter(n, k, b):
    k = _as_k(n, k)
    return tuple(x + y for x, y in zip(k, translation_sum(n, b)))


@dataclass
class MoritaCondition:
    ok: bool
    g: list
    h: list
    left_set: set
    right_set: set
    certificate: tuple = None   # (alpha, beta) Bezout pair when ok
    witness: tuple = None       # (i, j, colliding value) when not ok


def _condition(n, k, p, shift):
    """Coprimality of prod_{i<=p}(x + i - n - k_i) against the j > p factors,
    with the second factor family shifted by `shift` in its offsets."""
    k = _as_k(n, k)
    left = {(i, Fraction(i) - k_entry(n, k, i)) for i in range(1, p + 1)}
    right = {(j, Fraction(j + shift) - k_entry(n, k, j)) for j in range(p + 1, n + 1)}
    g = p_from_roots([Fraction(n) + k_entry(n, k, i) - i for i in range(1, p + 1)])
    h = p_from_roots([Fraction(n) + k_entry(n, k, j) - j - shift for j in range(p + 1, n + 1)])
    left_vals = {v for (_, v) in left}
    right_vals = {v for (_, v) in right}
    d, alpha, beta = p_ext_gcd(g, h)
    coprime = (d == [Fraction(1)])
    assert coprime == (not (left_vals & right_vals)), "gcd disagrees with set check"
    if coprime:
        assert p_add(p_mul(alpha, g), p_mul(beta, h)) == [Fraction(1)]
        return MoritaCondition(True, g, h, left_vals, right_vals,
                               certificate=(alpha, beta))
    common = min(left_vals & right_vals)
    i = min(i for (i, v) in left if v == common)
    j = min(j for (j, v) in right if v == common)
    return MoritaCondition(False, g, h, left_vals, right_vals, witness=(i, j, common))


@dataclass
class MoritaCertificate:
    n: int
    k: tuple
    p: int
    condition1: MoritaCondition
    condition2: MoritaCondition
    dominant: DominanceReport


def morita_certificate(n, k, p):
    """Both coprimality conditions for the step-p bimodule pair.

    Condition 1 compares {i - k_i : i <= p} with {j - k_j : j > p};
    condition 2 compares {i - k_i : i <= p} with {j + n - k_j : j > p}.
    Each is certified by an exact Bezout pair or refuted by a collision.
    """
    if not 1 <= p <= n - 1:
        raise ValueError("p out of range")
    k = _as_k(n, k)
    return MoritaCertificate(
        n, k, p,
        condition1=_condition(n, k, p, 0),
        condition2=_condition(n, k, p, n),
        dominant=is_dominant(n, k),
    )


@dataclass
class HodgesData:
    n: int
    k: tuple
    a: tuple      # offsets a_1..a_n (a_n = 0)
    v: list       # monic polynomial with roots a_1..a_n
    lam: tuple    # commutator weights lambda_0..lambda_{n-1}, trace 1


def hodges_data(n, k):
    k = _as_k(n, k)
    a = spherical_offsets(n, k)
    for i in range(1, n):
        assert n * a[i - 1] == k[i - 1] + (n - i)
    lam = tuple(Fraction(1, n) + k_entry(n, k, j) - k_entry(n, k, j + 1)
                for j in range(n))
    assert sum(lam) == 1
    return HodgesData(n, k, a, p_from_roots(a), lam)


def cbh_roundtrip(n, lam):
    """Recover the unique k (with k_0 = 0) from trace-one commutator weights."""
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != n:
        raise ValueError("lambda must have length n")
    if sum(lam) != 1:
        raise ValueError("lambda must have trace 1")
    k = []
    cur = Fraction(0)
    for j in range(n - 1):
        cur = cur + Fraction(1, n) - lam[j]
        k.append(cur)
    # wrap-around consistency is exactly the trace condition
    assert cur + Fraction(1, n) - lam[n - 1] == 0
    return tuple(k)


def dot_action(n, perm, k):
    """Shifted permutation action s . k = s(k + rho) - rho.

    perm is a tuple of images (perm[i-1] = s(i)) of the indices 1..n-1;
    s(x)_i = x_{s^{-1}(i)}.
    """
    k = _as_k(n, k)
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(1, n)):
        raise ValueError("perm must be a permutation of 1..n-1")
    inv = [0] * (n - 1)
    for i, img in enumerate(perm, start=1):
        inv[img - 1] = i
    r = rho(n)
    x = [k[i] + r[i] for i in range(n - 1)]
    return tuple(x[inv[i] - 1] - r[i] for i in range(n - 1))
