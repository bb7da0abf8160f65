"""Dense univariate polynomial helpers over exact rationals.

A polynomial is a tuple of Fractions, lowest degree first, with no trailing
zero coefficients; the zero polynomial is the empty tuple.  Root isolation
uses Sturm chains on the square-free part, so multiple roots are located
once and exact rational roots are reported exactly.
"""

from __future__ import annotations

from fractions import Fraction

Poly = tuple[Fraction, ...]


def poly(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly(
        [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    )


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if is_zero(p) or is_zero(q):
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def scale(p: Poly, c) -> Poly:
    return poly([a * Fraction(c) for a in p])


def eval_at(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return poly([i * c for i, c in enumerate(p)][1:])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if is_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(rem) >= len(q) and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(q):
            break
        shift = len(rem) - len(q)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        rem.pop()
    return poly(quo), poly(rem)


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while not is_zero(b):
        _, r = divmod_poly(a, b)
        a, b = b, r
    if is_zero(a):
        return ()
    return scale(a, Fraction(1) / a[-1])  # monic


def square_free_part(p: Poly) -> Poly:
    """p with every root's multiplicity reduced to one."""
    if degree(p) <= 0:
        return p
    g = gcd_poly(p, derivative(p))
    if degree(g) <= 0:
        return p
    q, _ = divmod_poly(p, g)
    return q


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while not is_zero(chain[-1]) and degree(chain[-1]) > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if is_zero(r):
            break
        chain.append(neg(r))
    return [c for c in chain if not is_zero(c)]


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = eval_at(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]; requires p(a) != 0."""
    return _variations(chain, a) - _variations(chain, b)


def isolate_roots(
    p: Poly, lo: Fraction, hi: Fraction
) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Locate every distinct real root of p in the closed interval [lo, hi].

    Returns (exact_roots, brackets): rational roots found exactly, plus one
    (a, b) bracket per remaining root with a strict sign change of the
    square-free part and exactly one root inside.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if is_zero(p):
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = square_free_part(p)
    if degree(q) <= 0:
        return [], []
    chain = sturm_chain(q)
    exact: list[Fraction] = []
    brackets: list[tuple[Fraction, Fraction]] = []

    def shrink_above(point: Fraction, limit: Fraction) -> Fraction:
        # A point x in (point, limit] with q(x) != 0 and no root in (point, x].
        step = (limit - point) / 2
        x = point + step
        while eval_at(q, x) == 0 or count_roots_halfopen(chain, point, x) > 0:
            step /= 2
            x = point + step
        return x

    def shrink_below(point: Fraction, limit: Fraction) -> Fraction:
        step = (point - limit) / 2
        x = point - step
        while eval_at(q, x) == 0 or count_roots_halfopen(chain, x, point) > 1:
            step /= 2
            x = point - step
        return x

    a, b = lo, hi
    if eval_at(q, a) == 0:
        exact.append(a)
        a = shrink_above(a, b)
    if eval_at(q, b) == 0:
        exact.append(b)
        b = shrink_below(b, a)
    if a >= b:
        return sorted(exact), brackets

    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        n = count_roots_halfopen(chain, x, y)
        if n == 0:
            continue
        if n == 1:
            vx, vy = eval_at(q, x), eval_at(q, y)
            if vx * vy < 0:
                brackets.append((x, y))
                continue
            # The single root sits at y itself.
            exact.append(y)
            continue
        mid = (x + y) / 2
        if eval_at(q, mid) == 0:
            exact.append(mid)
            stack.append((x, shrink_below(mid, x)))
            stack.append((shrink_above(mid, y), y))
        else:
            stack.append((x, mid))
            stack.append((mid, y))
    exact.sort()
    brackets.sort()
    return exact, brackets
