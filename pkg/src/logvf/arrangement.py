"""Normalized linear forms and weighted central line arrangements in the plane.

A hyperplane through the origin of K^2 is the kernel of a linear form
``a*x + b*y``; the form is stored scaled so its first nonzero coefficient is
one, which makes equal kernels compare equal.  A multiarrangement assigns a
positive integer multiplicity to each of finitely many distinct hyperplanes.
"""

from __future__ import annotations

from .field import Field, FieldElement


class LinearForm:
    """A nonzero linear form ``ax*x + ay*y``, normalized to leading coefficient 1.

    Normalization scales the pair so that ``ax == 1`` when ``ax != 0`` and
    ``(ax, ay) == (0, 1)`` otherwise; two forms with the same kernel are
    therefore identical objects in the ``==`` sense.
    """

    __slots__ = ("field", "ax", "ay")

    def __init__(self, field: Field, ax, ay):
        a = field.coerce(ax)
        b = field.coerce(ay)
        if not a and not b:
            raise ValueError("the zero form does not define a hyperplane")
        if a:
            b = field.div_raw(b, a)
            a = 1
        else:
            b = 1
        self.field = field
        self.ax = FieldElement._wrap(field, a)
        self.ay = FieldElement._wrap(field, b)

    def coefficients(self) -> tuple[FieldElement, FieldElement]:
        return (self.ax, self.ay)

    def point_raw(self):
        """A raw point (ay, -ax) spanning the kernel of the form."""
        return (self.ay.value, self.field.neg_raw(self.ax.value))

    def sort_key(self):
        """Key for the canonical ordering of forms (y sorts before x + c*y)."""
        return (self.ax.value, self.ay.value)

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return (
            self.field == other.field
            and self.ax.value == other.ax.value
            and self.ay.value == other.ay.value
        )

    def __hash__(self):
        return hash((self.field, self.ax.value, self.ay.value))

    def __str__(self):
        a, b = self.ax.value, self.ay.value
        if not a:
            return "y"
        if not b:
            return "x"
        if b == 1:
            return "x + y"
        if b == -1:
            return "x - y"
        if b < 0:
            return f"x - {-b}*y"
        return f"x + {b}*y"

    def __repr__(self):
        return f"LinearForm({self} over {self.field})"


class Multiarrangement:
    """Distinct hyperplanes through the origin with positive multiplicities.

    Immutable by convention; the update methods return new instances.  All
    iteration is in the canonical sorted order of the normalized forms, so a
    given arrangement always presents its hyperplanes the same way.
    """

    __slots__ = ("field", "_mult", "_forms")

    def __init__(self, field: Field, multiplicities=None):
        mult: dict[LinearForm, int] = {}
        pairs = []
        if multiplicities is None:
            pass
        elif hasattr(multiplicities, "items"):
            pairs = list(multiplicities.items())
        else:
            pairs = list(multiplicities)
        for form, m in pairs:
            if not isinstance(form, LinearForm):
                raise ValueError(f"expected a LinearForm, got {type(form).__name__}")
            if form.field != field:
                raise ValueError("form belongs to a different field")
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity of {form} must be a positive integer, got {m!r}")
            if form in mult:
                raise ValueError(f"duplicate hyperplane {form}")
            mult[form] = m
        self.field = field
        self._mult = mult
        self._forms = tuple(sorted(mult, key=LinearForm.sort_key))

    def forms(self) -> tuple[LinearForm, ...]:
        """The hyperplanes in canonical order."""
        return self._forms

    def items(self) -> tuple[tuple[LinearForm, int], ...]:
        return tuple((f, self._mult[f]) for f in self._forms)

    def multiplicity(self, form: LinearForm) -> int:
        """Multiplicity of the given hyperplane, 0 if it is not present."""
        return self._mult.get(form, 0)

    @property
    def total(self) -> int:
        """The sum of all multiplicities, written |mu|."""
        return sum(self._mult.values())

    def incremented(self, form: LinearForm) -> "Multiarrangement":
        """A copy with the multiplicity of ``form`` raised by one."""
        if form.field != self.field:
            raise ValueError("form belongs to a different field")
        new = dict(self._mult)
        new[form] = new.get(form, 0) + 1
        return Multiarrangement(self.field, new)

    def decremented(self, form: LinearForm) -> "Multiarrangement":
        """A copy with the multiplicity of ``form`` lowered by one.

        The hyperplane disappears when its multiplicity reaches zero.
        Lowering an absent hyperplane is an error.
        """
        m = self._mult.get(form)
        if m is None:
            raise ValueError(f"hyperplane {form} is not in the arrangement")
        new = dict(self._mult)
        if m == 1:
            del new[form]
        else:
            new[form] = m - 1
        return Multiarrangement(self.field, new)

    def __le__(self, other):
        if not isinstance(other, Multiarrangement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("arrangements live over different fields")
        return all(m <= other.multiplicity(f) for f, m in self._mult.items())

    def __eq__(self, other):
        if not isinstance(other, Multiarrangement):
            return NotImplemented
        return self.field == other.field and self._mult == other._mult

    def __hash__(self):
        return hash((self.field, self.items()))

    def __len__(self):
        return len(self._mult)

    def __contains__(self, form):
        return form in self._mult

    def __iter__(self):
        return iter(self._forms)

    def __str__(self):
        if not self._mult:
            return "{}"
        inner = ", ".join(f"{f}: {self._mult[f]}" for f in self._forms)
        return "{" + inner + "}"

    def __repr__(self):
        return f"Multiarrangement({self} over {self.field})"


def all_hyperplanes(field: Field) -> list[LinearForm]:
    """Every hyperplane of F_p^2 in canonical order: y, then x + c*y for c in F_p."""
    p = field.characteristic
    if not p:
        raise ValueError("the rationals have infinitely many hyperplanes")
    return [LinearForm(field, 0, 1)] + [LinearForm(field, 1, c) for c in range(p)]
