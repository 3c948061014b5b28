"""Homogeneous polynomial derivations ``f*dx + g*dy`` of K[x, y].

A derivation is determined by its two coefficient polynomials, which must be
homogeneous of the same degree (the zero polynomial adapts its degree tag to
its partner).  Membership in the module D(A, mu) of a weighted arrangement
means that for every hyperplane the form's mu-th power divides the value the
derivation takes on that form.
"""

from __future__ import annotations

import math

from .arrangement import LinearForm, Multiarrangement
from .field import Field, _rational, _shrink
from .poly import HomogPoly, InexactDivisionError


class Derivation:
    """A nonzero homogeneous derivation with coefficient polynomials ``f`` and ``g``.

    ``f`` multiplies d/dx and ``g`` multiplies d/dy.
    """

    __slots__ = ("f", "g")

    def __init__(self, f: HomogPoly, g: HomogPoly):
        if f.field != g.field:
            raise ValueError("coefficient polynomials live over different fields")
        fz, gz = f.is_zero(), g.is_zero()
        if fz and gz:
            raise ValueError("the zero derivation is not allowed")
        if fz:
            f = HomogPoly.zero(f.field, g.degree)
        elif gz:
            g = HomogPoly.zero(g.field, f.degree)
        elif f.degree != g.degree:
            raise ValueError(f"coefficient degrees differ: {f.degree} vs {g.degree}")
        self.f = f
        self.g = g

    @property
    def field(self) -> Field:
        return self.f.field

    @property
    def degree(self) -> int:
        return self.f.degree

    @classmethod
    def partial_x(cls, field: Field) -> "Derivation":
        return cls(HomogPoly.constant(field, 1), HomogPoly.zero(field, 0))

    @classmethod
    def partial_y(cls, field: Field) -> "Derivation":
        return cls(HomogPoly.zero(field, 0), HomogPoly.constant(field, 1))

    @classmethod
    def euler(cls, field: Field) -> "Derivation":
        """The Euler derivation x*dx + y*dy."""
        return cls(HomogPoly.monomial(field, 1, 1), HomogPoly.monomial(field, 1, 0))

    # ------------------------------------------------------------------

    def apply(self, form: LinearForm) -> HomogPoly:
        """The polynomial ``theta(alpha) = ax*f + ay*g`` for a linear form alpha."""
        if form.field != self.field:
            raise ValueError("form belongs to a different field")
        return self.f.scale(form.ax.value) + self.g.scale(form.ay.value)

    def is_member(self, arrangement: Multiarrangement) -> bool:
        """Whether this derivation lies in D(A, mu) for the given arrangement."""
        if arrangement.field != self.field:
            raise ValueError("arrangement lives over a different field")
        for form, mult in arrangement.items():
            h = self.apply(form)
            for _ in range(mult):
                h, r = h._div_linear(form)
                if r:
                    return False
        return True

    def times_linear(self, form: LinearForm) -> "Derivation":
        return Derivation(self.f.times_linear(form), self.g.times_linear(form))

    def scale(self, c) -> "Derivation":
        return Derivation(self.f.scale(c), self.g.scale(c))

    def plus_scaled(self, q: HomogPoly, other: "Derivation") -> "Derivation":
        """The derivation ``self + q * other``; degrees must line up exactly."""
        if q.field != self.field or other.field != self.field:
            raise ValueError("operands belong to different fields")
        if self.degree != q.degree + other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} != {q.degree} + {other.degree}"
            )
        nf = self.f + q * other.f
        ng = self.g + q * other.g
        if nf.is_zero() and ng.is_zero():
            raise ValueError("the combination is the zero derivation")
        return Derivation(nf, ng)

    def primitive(self):
        """Rescale over Q so all coefficients are coprime integers.

        The sign is fixed by making the trailing nonzero coefficient (the
        highest power of x in g, falling back to f) positive.  Returns
        ``(reduced, factor)`` with ``reduced == factor * self``; the factor is
        a raw rational scalar.  Over a finite field this is the identity with
        factor 1.
        """
        if self.field.characteristic:
            return self, 1
        values = [c for c in self.f.coeffs + self.g.coeffs if c]
        lcm_den = 1
        for v in values:
            lcm_den = math.lcm(lcm_den, int(v.denominator))
        scaled = [int(v.numerator) * (lcm_den // int(v.denominator)) for v in values]
        gcd_num = 0
        for s in scaled:
            gcd_num = math.gcd(gcd_num, s)
            if gcd_num == 1 and lcm_den == 1:
                break
        sign = -1 if scaled[-1] < 0 else 1
        if lcm_den == 1 and gcd_num == 1 and sign == 1:
            return self, 1
        factor = _shrink(_rational(sign * lcm_den, gcd_num))
        it = iter(scaled)
        new_f = tuple(0 if not c else sign * (next(it) // gcd_num) for c in self.f.coeffs)
        new_g = tuple(0 if not c else sign * (next(it) // gcd_num) for c in self.g.coeffs)
        reduced = Derivation.__new__(Derivation)
        reduced.f = HomogPoly._raw(self.field, self.f.degree, new_f)
        reduced.g = HomogPoly._raw(self.field, self.g.degree, new_g)
        return reduced, factor

    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def __str__(self):
        return f"({self.f}) dx + ({self.g}) dy"

    def __repr__(self):
        return f"Derivation({self})"

    def to_text(self) -> str:
        """Compact exact text form ``f;g`` using the polynomial text format."""
        return f"{self.f.to_text()};{self.g.to_text()}"

    @classmethod
    def from_text(cls, field: Field, text: str) -> "Derivation":
        parts = text.split(";")
        if len(parts) != 2:
            raise ValueError("derivation text must be 'f;g'")
        return cls(
            HomogPoly.from_text(field, parts[0]), HomogPoly.from_text(field, parts[1])
        )


def saito_determinant(theta1: Derivation, theta2: Derivation) -> HomogPoly:
    """The coefficient determinant ``f1*g2 - f2*g1`` (may be the zero polynomial)."""
    if theta1.field != theta2.field:
        raise ValueError("derivations live over different fields")
    return theta1.f * theta2.g - theta2.f * theta1.g
