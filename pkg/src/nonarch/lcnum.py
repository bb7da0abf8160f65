"""Exact arithmetic on a truncated non-Archimedean series field.

A value is a finite formal series  sum_k c_k * eps^k  with integer exponents
and exact rational coefficients, where eps is a fixed positive infinitesimal.
Only ``window`` exponent slots above the leading (least) exponent are
retained; whenever arithmetic discards a term the result is marked inexact.
The field is totally ordered lexicographically, so eps is smaller than every
positive rational and 1/eps larger than every rational: the Archimedean
property fails by construction.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    DivisionByZero,
    IndeterminateOrder,
    InfiniteOperand,
    ParseError,
    ZeroOperand,
)

DEFAULT_WINDOW = 16

Rational = Fraction | int


class Ordering(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class Tag(Enum):
    ZERO = "ZERO"
    INFINITESIMAL = "INFINITESIMAL"
    APPRECIABLE = "APPRECIABLE"
    INFINITE = "INFINITE"


@dataclass(frozen=True)
class Classification:
    """Order-of-magnitude tag plus Leibniz's assignable/inassignable split."""

    tag: Tag
    assignable: bool


@dataclass(frozen=True)
class LCNumber:
    """Truncated series in eps: sorted (exponent, coefficient) pairs.

    ``terms`` is strictly increasing in exponent with no zero coefficients;
    zero is the empty tuple.  ``exact`` records that no truncation occurred
    while producing this value.  Use the module constructors (const, eps,
    monomial, from_terms) rather than instantiating directly.
    """

    terms: tuple[tuple[int, Fraction], ...]
    window: int = DEFAULT_WINDOW
    exact: bool = True

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> Fraction:
        for e, c in self.terms:
            if e == exponent:
                return c
            if e > exponent:
                break
        return Fraction(0)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        flag = "" if self.exact else ", inexact"
        return f"LCNumber({render(self)}, window={self.window}{flag})"

    # Operator sugar; the module-level functions are the primary API.
    def __add__(self, other):
        return add(self, _coerce(other, self.window))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, neg(_coerce(other, self.window)))

    def __rsub__(self, other):
        return add(_coerce(other, self.window), neg(self))

    def __mul__(self, other):
        return mul(self, _coerce(other, self.window))

    __rmul__ = __mul__

    def __neg__(self):
        return neg(self)

    def __truediv__(self, other):
        return mul(self, inv(_coerce(other, self.window)))

    def __rtruediv__(self, other):
        return mul(_coerce(other, self.window), inv(self))

    def __lt__(self, other):
        return compare(self, _coerce(other, self.window)) is Ordering.LT

    def __le__(self, other):
        return compare(self, _coerce(other, self.window)) is not Ordering.GT

    def __gt__(self, other):
        return compare(self, _coerce(other, self.window)) is Ordering.GT

    def __ge__(self, other):
        return compare(self, _coerce(other, self.window)) is not Ordering.LT


def _coerce(value, window: int) -> LCNumber:
    if isinstance(value, LCNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return const(value, window)
    raise TypeError(f"cannot interpret {value!r} as an LCNumber")


def from_terms(
    mapping, window: int = DEFAULT_WINDOW, exact: bool = True
) -> LCNumber:
    """Normalize an exponent->coefficient mapping into an LCNumber.

    Zero coefficients are dropped; terms more than ``window`` slots above the
    leading exponent are truncated and clear the exact flag.
    """
    items = {int(e): Fraction(c) for e, c in dict(mapping).items() if c != 0}
    if not items:
        return LCNumber((), window, exact)
    lam = min(items)
    kept = tuple(sorted((e, c) for e, c in items.items() if e <= lam + window))
    if len(kept) != len(items):
        exact = False
    return LCNumber(kept, window, exact)


def const(q: Rational, window: int = DEFAULT_WINDOW) -> LCNumber:
    return from_terms({0: Fraction(q)}, window)


def zero(window: int = DEFAULT_WINDOW) -> LCNumber:
    return LCNumber((), window, True)


def one(window: int = DEFAULT_WINDOW) -> LCNumber:
    return const(1, window)


def eps(window: int = DEFAULT_WINDOW) -> LCNumber:
    """The distinguished positive infinitesimal."""
    return monomial(1, 1, window)


def infinite(window: int = DEFAULT_WINDOW) -> LCNumber:
    """1/eps, the distinguished infinite value (an infinite index)."""
    return monomial(-1, 1, window)


def monomial(exponent: int, coeff: Rational, window: int = DEFAULT_WINDOW) -> LCNumber:
    return from_terms({exponent: Fraction(coeff)}, window)


def add(a: LCNumber, b: LCNumber) -> LCNumber:
    """Exact sum of retained terms, re-truncated above the new leading exponent."""
    window = min(a.window, b.window)
    merged: dict[int, Fraction] = dict(a.terms)
    for e, c in b.terms:
        merged[e] = merged.get(e, Fraction(0)) + c
    return from_terms(merged, window, a.exact and b.exact)


def neg(a: LCNumber) -> LCNumber:
    return LCNumber(tuple((e, -c) for e, c in a.terms), a.window, a.exact)


def sub(a: LCNumber, b: LCNumber) -> LCNumber:
    return add(a, neg(b))


def mul(a: LCNumber, b: LCNumber) -> LCNumber:
    """Cauchy product, truncated to the window above the product's leading exponent."""
    window = min(a.window, b.window)
    if a.is_zero or b.is_zero:
        exactly_zero = (a.is_zero and a.exact) or (b.is_zero and b.exact)
        return LCNumber((), window, exactly_zero)
    lam = a.terms[0][0] + b.terms[0][0]
    limit = lam + window
    out: dict[int, Fraction] = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = ea + eb
            if e > limit:
                break  # b.terms sorted: later products only get larger
            out[e] = out.get(e, Fraction(0)) + ca * cb
    dropped = a.terms[-1][0] + b.terms[-1][0] > limit
    return from_terms(out, window, a.exact and b.exact and not dropped)


def inv(a: LCNumber) -> LCNumber:
    """Multiplicative inverse via the geometric series around the leading term.

    Exact only for monomials; any other inverse is an infinite series and is
    truncated at the window.
    """
    if a.is_zero:
        raise DivisionByZero("cannot invert zero")
    lam, lead = a.terms[0]
    seed = monomial(-lam, Fraction(1) / lead, a.window)
    if len(a.terms) == 1:
        return LCNumber(seed.terms, a.window, a.exact)
    # a * seed = 1 + u with u infinitesimal relative to 1, so
    # 1/a = seed * (1 - u + u^2 - ...); u^(window+1) falls outside the window.
    u = sub(mul(a, seed), one(a.window))
    total = one(a.window)
    power = one(a.window)
    for _ in range(a.window):
        power = mul(power, neg(u))
        if power.is_zero:
            break
        total = add(total, power)
    result = mul(seed, total)
    return LCNumber(result.terms, result.window, False)


def compare(a: LCNumber, b: LCNumber) -> Ordering:
    """Lexicographic total order: sign of the leading coefficient of a - b.

    Raises IndeterminateOrder when the difference truncates to zero without
    being exact: the retained windows cannot distinguish the operands.
    """
    d = sub(a, b)
    if d.is_zero:
        if d.exact:
            return Ordering.EQ
        raise IndeterminateOrder(
            "difference truncates to zero but is inexact; order unknown at this window"
        )
    return Ordering.GT if d.terms[0][1] > 0 else Ordering.LT


def classify(a: LCNumber) -> Classification:
    """Tag by leading exponent; assignable means an ordinary rational quantity."""
    if a.is_zero:
        return Classification(Tag.ZERO, True)
    lam = a.terms[0][0]
    if lam > 0:
        return Classification(Tag.INFINITESIMAL, False)
    if lam < 0:
        return Classification(Tag.INFINITE, False)
    has_eps_part = len(a.terms) > 1
    return Classification(Tag.APPRECIABLE, not has_eps_part)


def standard_part(a: LCNumber) -> Fraction:
    """The rational infinitely close to a finite value (its exponent-0 coefficient)."""
    if not a.is_zero and a.terms[0][0] < 0:
        raise InfiniteOperand(f"no standard part: {render(a)} is infinite")
    return a.coefficient(0)


def leading_term(a: LCNumber) -> tuple[int, Fraction]:
    if a.is_zero:
        raise ZeroOperand("zero has no leading term")
    return a.terms[0]


def with_exact(a: LCNumber, exact: bool) -> LCNumber:
    return LCNumber(a.terms, a.window, exact)


# ---------------------------------------------------------------------------
# Text format: coefficient*eps^k terms, leading exponent first, e.g.
# "3 + 5*eps + 2*eps^2".  parse() accepts the same grammar.

def _term_str(e: int, c: Fraction) -> str:
    if e == 0:
        return str(c)
    body = "eps" if e == 1 else f"eps^{e}"
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def render(a: LCNumber) -> str:
    if a.is_zero:
        return "0"
    out = _term_str(*a.terms[0])
    for e, c in a.terms[1:]:
        piece = _term_str(e, c)
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


_LC_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+/\d+|\d+\.\d+|\d+)|(?P<eps>eps)|(?P<op>[-+*^]))"
)


def _tokenize_lc(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _LC_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "eps":
            tokens.append(("eps", "eps", m.start("eps")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


def parse(text: str, window: int = DEFAULT_WINDOW) -> LCNumber:
    """Parse the textual series format back into an LCNumber."""
    tokens = _tokenize_lc(text)
    if not tokens:
        raise ParseError("empty series text", 0)
    terms: dict[int, Fraction] = {}
    i = 0
    n = len(tokens)

    def expect_int(at: int) -> tuple[int, int]:
        j = at
        sign = 1
        if j < n and tokens[j][:2] == ("op", "-"):
            sign = -1
            j += 1
        if j >= n or tokens[j][0] != "num" or not tokens[j][1].isdigit():
            pos = tokens[j][2] if j < n else len(text)
            raise ParseError("expected integer exponent after '^'", pos)
        return sign * int(tokens[j][1]), j + 1

    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign", tokens[-1][2])
        coeff = Fraction(1)
        exponent = 0
        if tokens[i][0] == "num":
            coeff = Fraction(tokens[i][1])
            i += 1
            if i < n and tokens[i][:2] == ("op", "*"):
                i += 1
                if i >= n or tokens[i][0] != "eps":
                    pos = tokens[i][2] if i < n else len(text)
                    raise ParseError("expected 'eps' after '*'", pos)
        if i < n and tokens[i][0] == "eps":
            exponent = 1
            i += 1
            if i < n and tokens[i][:2] == ("op", "^"):
                exponent, i = expect_int(i + 1)
        value = sign * coeff
        terms[exponent] = terms.get(exponent, Fraction(0)) + value
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise ParseError(f"unexpected token {tokens[i][1]!r}", tokens[i][2])
    return from_terms(terms, window)
