"""Dense one-variable polynomials over Fraction: just enough for Bezout
certificates.  Coefficients are lists, lowest degree first, normalized so
the last entry is nonzero (the zero polynomial is [])."""

from fractions import Fraction


def p_norm(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def p_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return p_norm(out)


def p_scale(p, c):
    c = Fraction(c)
    return p_norm([x * c for x in p])


def p_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return p_norm(out)


def p_divmod(p, q):
    q = p_norm(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = p_norm(p)
    quo = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while r and len(r) >= len(q):
        c = r[-1] / q[-1]
        d = len(r) - len(q)
        quo[d] = c
        r = p_add(r, p_scale([Fraction(0)] * d + q, -c))
    return p_norm(quo), r


def p_ext_gcd(p, q):
    """Monic gcd d with the Bezout pair (a, b): a*p + b*q = d."""
    r0, r1 = p_norm(p), p_norm(q)
    a0, a1 = [Fraction(1)], []
    b0, b1 = [], [Fraction(1)]
    while r1:
        quo, rem = p_divmod(r0, r1)
        r0, r1 = r1, rem
        a0, a1 = a1, p_add(a0, p_scale(p_mul(quo, a1), -1))
        b0, b1 = b1, p_add(b0, p_scale(p_mul(quo, b1), -1))
    if r0:
        lead = r0[-1]
        r0, a0, b0 = p_scale(r0, 1 / lead), p_scale(a0, 1 / lead), p_scale(b0, 1 / lead)
    return r0, a0, b0


def p_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def p_from_roots(roots):
    out = [Fraction(1)]
    for r in roots:
        out = p_mul(out, [-Fraction(r), Fraction(1)])
    return out
