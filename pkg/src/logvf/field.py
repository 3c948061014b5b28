"""Exact scalar arithmetic over the rationals and over prime finite fields.

Rational values are backed by ``gmpy2.mpq`` when available and by
``fractions.Fraction`` otherwise.  A rational that happens to be an integer is
stored as a plain ``int`` so that the frequent all-integer coefficient chains
stay in fast native arithmetic.  Prime-field residues are plain ``int`` values
reduced into ``[0, p)``.

The "raw" values described above are what the polynomial layer stores
internally; :class:`FieldElement` is the public scalar wrapper.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rational = Fraction


class FieldKind(enum.Enum):
    RATIONALS = "rationals"
    PRIME = "prime"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _shrink(v):
    """Collapse an integral rational to a plain int; leave others alone."""
    return int(v) if v.denominator == 1 else v


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or a prime field F_p (characteristic p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def kind(self) -> FieldKind:
        return FieldKind.PRIME if self.characteristic else FieldKind.RATIONALS

    def __str__(self):
        return f"F_{self.characteristic}" if self.characteristic else "Q"

    # ------------------------------------------------------------------
    # element construction
    # ------------------------------------------------------------------

    def element(self, x) -> "FieldElement":
        """Build a field element from an int, Fraction, string or FieldElement."""
        return FieldElement(self, x)

    def from_integer(self, n: int) -> "FieldElement":
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValueError(f"expected an integer, got {type(n).__name__}")
        return FieldElement(self, n)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement._wrap(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement._wrap(self, 1)

    # ------------------------------------------------------------------
    # raw-value kernels (internal to the package)
    # ------------------------------------------------------------------

    def coerce(self, x):
        """Convert ``x`` to a raw backend scalar.

        Accepts ints, Fractions (and gmpy2 rationals), numeric strings such as
        ``"2/3"`` or ``"-5"``, and FieldElements of this same field.  Floats
        are rejected to keep every computation exact.
        """
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("operand belongs to a different field")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        elif isinstance(x, float):
            raise ValueError("floats are not exact; pass an int, Fraction or string")
        if isinstance(x, str):
            try:
                x = Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"cannot parse {x!r} as a rational number") from exc
        p = self.characteristic
        if p:
            if isinstance(x, int):
                return x % p
            try:
                num, den = x.numerator, x.denominator
            except AttributeError:
                raise ValueError(f"cannot interpret {x!r} as a field element") from None
            den = int(den) % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes modulo {p}")
            return int(num) * pow(den, -1, p) % p
        if isinstance(x, int):
            return x
        try:
            num, den = x.numerator, x.denominator
        except AttributeError:
            raise ValueError(f"cannot interpret {x!r} as a field element") from None
        return _shrink(_rational(int(num), int(den)))

    def add_raw(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub_raw(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul_raw(self, a, b):
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg_raw(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def div_raw(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero field element")
        p = self.characteristic
        if p:
            return a * pow(b, -1, p) % p
        return _shrink(_rational(a) / b)

    def inv_raw(self, a):
        return self.div_raw(1, a)

    def pow_raw(self, a, n: int):
        p = self.characteristic
        if p:
            return pow(a, n, p)
        if n < 0:
            if not a:
                raise ZeroDivisionError("zero has no negative powers")
            return _shrink(_rational(a) ** n)
        return a**n


RATIONALS = Field(0)


class FieldElement:
    """An immutable exact scalar drawn from a specific :class:`Field`."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = field.coerce(value)

    @classmethod
    def _wrap(cls, field: Field, raw) -> "FieldElement":
        """Wrap an already-coerced raw value without re-checking it."""
        el = object.__new__(cls)
        el.field = field
        el.value = raw
        return el

    # ------------------------------------------------------------------

    def _other_raw(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement._wrap(self.field, self.field.add_raw(self.value, self._other_raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement._wrap(self.field, self.field.sub_raw(self.value, self._other_raw(other)))

    def __rsub__(self, other):
        return FieldElement._wrap(self.field, self.field.sub_raw(self._other_raw(other), self.value))

    def __mul__(self, other):
        return FieldElement._wrap(self.field, self.field.mul_raw(self.value, self._other_raw(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement._wrap(self.field, self.field.div_raw(self.value, self._other_raw(other)))

    def __rtruediv__(self, other):
        return FieldElement._wrap(self.field, self.field.div_raw(self._other_raw(other), self.value))

    def __neg__(self):
        return FieldElement._wrap(self.field, self.field.neg_raw(self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        return FieldElement._wrap(self.field, self.field.pow_raw(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement._wrap(self.field, self.field.inv_raw(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, float):
            return NotImplemented
        try:
            return self.value == self.field.coerce(other)
        except (ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FieldElement({self.value}, {self.field})"
