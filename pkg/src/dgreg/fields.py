"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are ``fractions.Fraction`` values over Q and canonical integer
representatives ``0..p-1`` over F_p.  A :class:`FieldSpec` carries the
arithmetic so that matrices and coefficient tables never silently mix
scalars from different ground fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(TypeError):
    """Values from different ground fields were combined."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: Q when ``p == 0``, otherwise F_p for a prime p < 2**31."""

    p: int = 0

    def __post_init__(self):
        if self.p and (not 2 <= self.p < 2**31 or not _is_prime(self.p)):
            raise ValueError(f"modulus {self.p} is not a prime below 2**31")

    # -- basics -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return "Q" if self.p == 0 else f"F{self.p}"

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, x):
        """Bring an int or Fraction into this field.

        Over F_p a fraction a/b maps to a * b^-1 mod p; a denominator
        divisible by p is rejected.
        """
        if self.p == 0:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise FieldMismatchError(f"cannot coerce {x!r} into Q")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatchError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise FieldMismatchError(f"cannot coerce {x!r} into F_{self.p}")

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / a if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def sign(self, n: int):
        """The field element (-1)**n."""
        return self.one() if n % 2 == 0 else self.neg(self.one())

    # -- text ----------------------------------------------------------

    def format(self, a) -> str:
        """Canonical text form: lowest-terms p/q over Q, 0..p-1 over F_p."""
        return str(a)

    def parse(self, text: str):
        """Parse an integer or p/q literal into this field."""
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar literal {text!r}") from exc
        return self.coerce(value)


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
