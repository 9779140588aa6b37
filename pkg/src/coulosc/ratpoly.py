"""Dense univariate polynomial arithmetic over exact rationals.

A polynomial is a list of ``Fraction`` coefficients in ascending powers with
trailing zeros stripped; the zero polynomial is the empty list.  Everything
here is exact: no floating point enters until a caller asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Poly = list[Fraction]

#: isolating intervals are refined below this width
REFINE_WIDTH = Fraction(1, 10**30)


def trim(p):
    """Strip trailing zero coefficients."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, s):
    if s == 0:
        return []
    return [c * s for c in p]


def shift(p, k):
    """Multiply by x**k."""
    if not p:
        return []
    return [Fraction(0)] * k + list(p)


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def evaluate(p, x):
    acc = Fraction(0) if isinstance(x, Fraction) or isinstance(x, int) else 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_poly(p, q):
    """Exact polynomial long division; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq, lc = degree(q), q[-1]
    while len(r) >= len(q) and trim(r):
        r = trim(r)
        if len(r) < len(q):
            break
        k = degree(r) - dq
        f = r[-1] / lc
        quot[k] = f
        for i, c in enumerate(q):
            r[i + k] -= f * c
        r = r[:-1]
    return trim(quot), trim(r)


def rem(p, q):
    return divmod_poly(p, q)[1]


def monic(p):
    if not p:
        return []
    return [c / p[-1] for c in p]


def gcd(p, q):
    a, b = trim(p), trim(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def squarefree_part(p):
    if degree(p) < 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return divmod_poly(p, g)[0]


def sturm_sequence(p):
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        seq.append(neg(rem(seq[-2], seq[-1])))
    return seq[:-1]


def sign_variations(seq, x):
    signs = []
    for f in seq:
        v = evaluate(f, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    return sign_variations(seq, a) - sign_variations(seq, b)


def root_bound(p):
    """Cauchy bound: every real root lies in (-B, B)."""
    lc = p[-1]
    b = 1 + max(abs(c / lc) for c in p[:-1]) if len(p) > 1 else Fraction(1)
    return Fraction(b)


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def rational_roots(p):
    """All rational roots of p, without multiplicity."""
    p = trim(p)
    if degree(p) < 1:
        return []
    # clear denominators to an integer polynomial
    den = 1
    for c in p:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    ip = [int(c * den) for c in p]
    k = 0
    while ip[k] == 0:
        k += 1
    roots = [Fraction(0)] if k else []
    lead, trail = ip[-1], ip[k]
    for num in _divisors(trail):
        for d in _divisors(lead):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                if evaluate(p, cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def root_multiplicity(p, r):
    m = 0
    while evaluate(p, r) == 0:
        p = divmod_poly(p, [-r, Fraction(1)])[0]
        m += 1
        if not p:
            break
    return m


@dataclass(frozen=True)
class IsolatedRoot:
    """One real root: exact rational value, or a refined isolating interval."""

    low: Fraction
    high: Fraction
    value: Fraction | None
    multiplicity: int

    @property
    def is_rational(self):
        return self.value is not None

    def midpoint(self):
        return self.value if self.value is not None else (self.low + self.high) / 2

    def __float__(self):
        return float(self.midpoint())


def isolate_positive_roots(p):
    """All real roots of p in (0, inf), ascending, with multiplicities.

    Rational roots come back exact; the rest as bisection-refined isolating
    intervals of width below ``REFINE_WIDTH``.
    """
    p = trim(p)
    if degree(p) < 1:
        return []
    sqf = squarefree_part(p)
    found = []
    for r in rational_roots(sqf):
        if r > 0:
            found.append(IsolatedRoot(r, r, r, root_multiplicity(p, r)))
        sqf = divmod_poly(sqf, [-r, Fraction(1)])[0]
    # remaining irrational roots via Sturm counts and bisection
    if degree(sqf) >= 1:
        seq = sturm_sequence(sqf)
        bound = root_bound(sqf)
        stack = [(Fraction(0), bound)]
        while stack:
            a, b = stack.pop()
            n = count_roots(seq, a, b)
            if n == 0:
                continue
            if n == 1:
                lo, hi = _refine(sqf, seq, a, b)
                found.append(IsolatedRoot(lo, hi, None, _interval_multiplicity(p, sqf, lo, hi)))
            else:
                mid = (a + b) / 2
                # rational roots were deflated; a midpoint hit is still possible
                while evaluate(sqf, mid) == 0:
                    mid = (a + mid) / 2
                stack.append((a, mid))
                stack.append((mid, b))
    found.sort(key=lambda r: r.midpoint())
    return found


def _refine(sqf, seq, a, b):
    """Shrink an isolating interval below REFINE_WIDTH by sign bisection."""
    # move to an interval with a strict sign change at the endpoints
    while evaluate(sqf, a) == 0 or evaluate(sqf, b) == 0 or \
            (evaluate(sqf, a) > 0) == (evaluate(sqf, b) > 0):
        mid = (a + b) / 2
        if count_roots(seq, a, mid) == 1:
            b = mid
        else:
            a = mid
        if b - a < REFINE_WIDTH:
            return a, b
    fa = evaluate(sqf, a)
    while b - a >= REFINE_WIDTH:
        mid = (a + b) / 2
        fm = evaluate(sqf, mid)
        if fm == 0:
            eps = (b - a) / 4
            a, b = mid - eps, mid + eps
            fa = evaluate(sqf, a)
            continue
        if (fa > 0) == (fm > 0):
            a, fa = mid, fm
        else:
            b = mid
    return a, b


def _interval_multiplicity(p, sqf, lo, hi):
    """Multiplicity in p of the single sqf-root inside [lo, hi].

    The root has multiplicity m iff it is a common root of p, p', ...,
    p^(m-1); membership is checked on the isolating interval via Sturm
    counts of gcd(p^(j), sqf).
    """
    m = 0
    q = trim(p)
    while degree(q) >= 0:
        g = gcd(q, sqf)
        if degree(g) < 1:
            break
        if count_roots(sturm_sequence(g), lo, hi) == 0:
            break
        m += 1
        q = derivative(q)
    return max(m, 1)
