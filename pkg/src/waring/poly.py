"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients in ascending degree, ``[c0, c1, ...]``.
The zero polynomial is ``[]``. Coefficients may be any exact field elements
supporting ``+ - * /`` and comparison with ``0`` (``Fraction`` or
``CyclotomicNumber``). All functions return trimmed lists.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

Poly = List[Any]

_ONE = Fraction(1)


def _recip(c):
    # Fraction(1) / int stays exact; Fraction / CyclotomicNumber defers to __rtruediv__.
    return _ONE / c


def trim(p: Sequence) -> Poly:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    """Degree of ``p``; ``-1`` for the zero polynomial."""
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p: Sequence, c) -> Poly:
    return trim([c * a for a in p])


def mul(p: Sequence, q: Sequence) -> Poly:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out: Poly = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p: Sequence, q: Sequence) -> Tuple[Poly, Poly]:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    inv_lead = _recip(q[-1])
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], r
    quot: Poly = [0] * (len(r) - dq)
    while r and len(r) - 1 >= dq:
        shift = len(r) - 1 - dq
        c = r[-1] * inv_lead
        quot[shift] = c
        for i, b in enumerate(q):
            r[i + shift] = r[i + shift] - c * b
        r.pop()
        r = trim(r)
    return trim(quot), r


def monic(p: Sequence) -> Poly:
    p = trim(p)
    if not p:
        return []
    inv = _recip(p[-1])
    return [a * inv for a in p]


def gcd(p: Sequence, q: Sequence) -> Poly:
    """Monic gcd by the Euclidean algorithm (``[]`` if both are zero)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def ext_gcd(p: Sequence, q: Sequence) -> Tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*p + v*q == g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quot, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quot, s1))
        t0, t1 = t1, sub(t0, mul(quot, t1))
    if not r0:
        return [], [], []
    inv = _recip(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p: Sequence) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: Sequence) -> Poly:
    """``p / gcd(p, p')`` made monic (characteristic zero)."""
    p = trim(p)
    if len(p) <= 1:
        return monic(p) if p else []
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def squarefree_decomposition(p: Sequence) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: monic square-free factors with their multiplicities.

    Constant factors are dropped, so the product of ``f**m`` equals ``monic(p)``.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    out: List[Tuple[Poly, int]] = []
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        if degree(a) > 0:
            out.append((a, i))
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = sub(c, derivative(b))
        i += 1
    return out
