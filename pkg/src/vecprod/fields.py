"""
Exact ground fields: the rationals and prime fields F_p with p odd.

Every :class:`Scalar` remembers the :class:`FieldSpec` it lives in and
arithmetic between different fields raises :class:`FieldMismatch`.  Plain
Python ``int`` operands are accepted and mapped into the field of the other
operand, which keeps expressions like ``2 * x`` or ``x == 0`` readable.

>>> F7 = GF(7)
>>> F7(3) * F7(5)
Scalar('1', F_7)
>>> QQ("1/2") + QQ("1/3")
Scalar('5/6', Q)
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import BadScalar, CharTwoRejected, DivisionByZero, FieldMismatch, NotPrime


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for moderate n (up to ~10**12)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Identity of a ground field: ``kind`` is ``"Q"`` or ``"Fp"``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise NotPrime(f"modulus must be an integer, got {self.p!r}")
            if self.p == 2:
                raise CharTwoRejected("characteristic 2 is not supported")
            if not is_prime(self.p):
                raise NotPrime(f"{self.p} is not a prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"F_{self.p}"

    def __call__(self, x) -> Scalar:
        """Map an int, Fraction, string or Scalar of this field into the field."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x!r} is not an element of {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            raise BadScalar("booleans are not field elements")
        if self.kind == "Q":
            if isinstance(x, (int, Fraction)):
                return Scalar(self, Fraction(x))
            raise BadScalar(f"cannot convert {x!r} to a rational")
        if isinstance(x, int):
            return Scalar(self, x % self.p)
        if isinstance(x, Fraction):
            return Scalar(self, x.numerator % self.p) / Scalar(self, x.denominator % self.p)
        raise BadScalar(f"cannot convert {x!r} to an element of {self}")

    def parse(self, text: str) -> Scalar:
        """Parse the canonical text encoding (``"a"``/``"a/b"`` or a residue)."""
        if not isinstance(text, str):
            raise BadScalar(f"scalar must be a string, got {text!r}")
        s = text.strip()
        if self.kind == "Q":
            num, sep, den = s.partition("/")
            try:
                n = int(num)
                d = int(den) if sep else 1
            except ValueError:
                raise BadScalar(f"not a rational: {text!r}") from None
            if d == 0:
                raise BadScalar(f"zero denominator in {text!r}")
            return Scalar(self, Fraction(n, d))
        try:
            n = int(s)
        except ValueError:
            raise BadScalar(f"not a residue: {text!r}") from None
        return Scalar(self, n % self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def half(self) -> Scalar:
        # over F_p this is (p + 1) / 2
        return self(1) / self(2)

    def elements(self) -> Iterator[Scalar]:
        if not self.is_finite:
            raise ValueError("the rationals cannot be enumerated")
        for r in range(self.p):
            yield Scalar(self, r)

    def random(self, rng: random.Random, height: int = 5) -> Scalar:
        """A random element; over Q, numerator in [-height, height], denominator in [1, height]."""
        if self.is_finite:
            return Scalar(self, rng.randrange(self.p))
        return Scalar(self, Fraction(rng.randint(-height, height), rng.randint(1, height)))


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


class Scalar:
    """An immutable element of a :class:`FieldSpec` in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        # value must already be canonical: Fraction for Q, residue in [0, p) for F_p
        self.field = field
        self.value = value

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def _make(self, v) -> Scalar:
        if self.field.kind == "Fp":
            v %= self.field.p
        return Scalar(self.field, v)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inverse(self) -> Scalar:
        if not self.value:
            raise DivisionByZero(f"{self} has no inverse in {self.field}")
        if self.field.kind == "Q":
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.kind == "Fp":
            return Scalar(self.field, pow(self.value, n, self.field.p))
        return Scalar(self.field, self.value**n)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({str(self)!r}, {self.field})"

    def is_square(self) -> Scalar | None:
        return is_square(self)


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def is_square(a: Scalar) -> Scalar | None:
    """Return a square root of ``a`` if it has one, else ``None``.

    Over F_p the smaller of the two roots ``r, p - r`` is returned so results
    are reproducible.
    """
    field = a.field
    if not a.value:
        return field.zero
    if field.kind == "Fp":
        p = field.p
        if pow(a.value, (p - 1) // 2, p) != 1:
            return None
        r = _tonelli_shanks(a.value, p)
        return Scalar(field, min(r, p - r))
    q = a.value
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Scalar(field, Fraction(rn, rd))
    return None
