"""Exact arithmetic in a real quadratic field Q(sqrt d).

Every coordinate in the package is a :class:`QuadraticNumber` ``a + b*sqrt(d)``
with rational ``a`` and ``b``.  Comparisons and :func:`floor` never touch
floating point; they reduce to integer comparisons of squares.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import ContextMismatchError, DomainError, ParseError

Rational = Union[int, Fraction]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree, for ``n > 0``."""
    if n <= 0:
        raise DomainError(f"squarefree_decompose needs a positive integer, got {n}")
    s, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    return s, d * n


def is_squarefree(n: int) -> bool:
    return n > 0 and squarefree_decompose(n)[0] == 1


@dataclass(frozen=True)
class FieldContext:
    """The radicand ``d`` of Q(sqrt d); ``d >= 2`` and squarefree."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2 or not is_squarefree(self.d):
            raise DomainError(f"radicand must be a squarefree integer >= 2, got {self.d!r}")

    def __call__(self, a: Rational = 0, b: Rational = 0) -> QuadraticNumber:
        return QuadraticNumber(a, b, self)

    @property
    def sqrt(self) -> QuadraticNumber:
        return QuadraticNumber(0, 1, self)


@lru_cache(maxsize=None)
def field(d: int) -> FieldContext:
    """Cached :class:`FieldContext` for radicand ``d``."""
    return FieldContext(d)


def _sign_int(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for integers, ``d`` squarefree >= 2."""
    if b == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0 or (a > 0) == (b > 0):
        return sb
    # opposite signs: the larger square wins; equality is impossible for b != 0
    return -sb if a * a > b * b * d else sb


def _floor_int(A: int, B: int, D: int, d: int) -> int:
    """Floor of ``(A + B*sqrt d) / D`` for integers with ``D > 0``.

    ``B*sqrt d`` lies strictly between consecutive integers ``N`` and ``N + 1``
    when ``B != 0``, and no multiple of ``D`` fits strictly inside, so the
    floor is ``(A + N) // D``.
    """
    if B == 0:
        return A // D
    m = math.isqrt(B * B * d)
    return (A + m) // D if B > 0 else (A - m - 1) // D


class QuadraticNumber:
    """Immutable element ``a + b*sqrt(d)`` of a fixed real quadratic field.

    Plain ``int`` and ``Fraction`` operands are embedded with ``b = 0``.
    Two quadratic numbers from different fields cannot be combined.
    """

    __slots__ = ("_a", "_b", "_ctx")

    def __init__(self, a: Rational, b: Rational, context: FieldContext):
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._ctx = context

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def context(self) -> FieldContext:
        return self._ctx

    @property
    def d(self) -> int:
        return self._ctx.d

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._a.denominator == 1

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self._a, -self._b, self._ctx)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._ctx.d

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            if other._ctx != self._ctx:
                raise ContextMismatchError(
                    f"cannot combine Q(sqrt {self.d}) with Q(sqrt {other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self._ctx)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self._a + o._a, self._b + o._b, self._ctx)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self._a, -self._b, self._ctx)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self._a - o._a, self._b - o._b, self._ctx)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return QuadraticNumber(
            a1 * a2 + b1 * b2 * self._ctx.d, a1 * b2 + a2 * b1, self._ctx
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            # norm vanishes only at zero since d is not a square
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self._a / n, -self._b / n, self._ctx)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- order ----------------------------------------------------------
    def sign(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        # clear denominators; positive scaling keeps the sign
        return _sign_int(
            a.numerator * b.denominator, b.numerator * a.denominator, self._ctx.d
        )

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadraticNumber with {type(other).__name__}")
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self._ctx == other._ctx and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._ctx.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- integer rounding -----------------------------------------------
    def floor(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return math.floor(a)
        # bracket b*sqrt(d) between consecutive multiples of 1/den via isqrt
        m = math.isqrt(b.numerator * b.numerator * self._ctx.d)
        approx = m if b > 0 else -m - 1
        n = math.floor(a + Fraction(approx, b.denominator))
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -(-self).floor()

    __floor__ = floor
    __ceil__ = ceil

    def __float__(self):
        # display only; predicates never call this
        return float(self._a) + float(self._b) * math.sqrt(self._ctx.d)

    # -- text -----------------------------------------------------------
    def __repr__(self):
        return f"QuadraticNumber({format_number(self)!r})"

    def __str__(self):
        return format_number(self)


def sign(x: QuadraticNumber | Rational) -> int:
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def floor(x: QuadraticNumber | Rational) -> int:
    return math.floor(x)


def ceil(x: QuadraticNumber | Rational) -> int:
    return math.ceil(x)


def common_form(x: QuadraticNumber) -> tuple[int, int, int]:
    """Integers ``(A, B, D)`` with ``x == (A + B*sqrt d) / D`` and ``D > 0``."""
    D = x.a.denominator * x.b.denominator // math.gcd(x.a.denominator, x.b.denominator)
    return x.a.numerator * (D // x.a.denominator), x.b.numerator * (D // x.b.denominator), D


# -- literal grammar --------------------------------------------------------
_RAT = r"-?\d+(?:/\d+)?"
_QNUM_RE = re.compile(rf"^\s*({_RAT})(?:\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*s(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    t = text.strip()
    if not re.fullmatch(_RAT, t):
        raise ParseError(f"malformed rational {text!r}")
    if "/" in t:
        p, q = t.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(t))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_number(text: str, context: FieldContext | None = None) -> QuadraticNumber:
    """Parse ``RAT`` or ``RAT(+|-)RAT*s<d>``, e.g. ``5/2+1/2*s5``.

    A purely rational literal needs ``context``; an irrational literal must
    agree with it when one is given.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a coordinate literal string, got {text!r}")
    m = _QNUM_RE.match(text)
    if not m:
        raise ParseError(f"malformed coordinate literal {text!r}")
    a = parse_rational(m.group(1))
    if m.group(2) is None:
        if context is None:
            raise ParseError(f"rational literal {text!r} needs a field context")
        return QuadraticNumber(a, 0, context)
    b = parse_rational(m.group(3))
    if m.group(2) == "-":
        b = -b
    d = int(m.group(4))
    try:
        ctx = field(d)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    if context is not None and ctx != context:
        raise ContextMismatchError(f"literal {text!r} is not in Q(sqrt {context.d})")
    return QuadraticNumber(a, b, ctx)


def format_number(x: QuadraticNumber) -> str:
    """Inverse of :func:`parse_number`; rationals print without the radical."""
    if x.b == 0:
        return format_rational(x.a)
    op = "+" if x.b > 0 else "-"
    return f"{format_rational(x.a)}{op}{format_rational(abs(x.b))}*s{x.d}"
