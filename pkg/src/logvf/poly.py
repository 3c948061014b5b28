"""Dense homogeneous bivariate polynomials with exact coefficient arithmetic.

Coefficients are stored densely as raw field scalars indexed by the exponent
of x: entry ``j`` holds the coefficient of ``x^j * y^(degree - j)``.  The zero
polynomial is representable at every degree (all entries zero); it keeps its
degree tag for bookkeeping but compares equal to zero of any degree.

Division by powers of a linear form is synthetic division against the
normalized form, which has leading coefficient one and therefore needs no
scalar divisions at all.
"""

from __future__ import annotations

from .arrangement import LinearForm
from .field import Field, FieldElement


class InexactDivisionError(ArithmeticError):
    """Division by a power of a linear form left a nonzero remainder."""


class HomogPoly:
    """A homogeneous polynomial in x and y over a fixed field."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, coefficients, degree: int | None = None):
        coeffs = tuple(field.coerce(c) for c in coefficients)
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}")
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, field: Field, degree: int, coeffs: tuple) -> "HomogPoly":
        """Assemble from already-coerced raw coefficients (internal fast path)."""
        p = object.__new__(cls)
        p.field = field
        p.degree = degree
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls, field: Field, degree: int = 0) -> "HomogPoly":
        return cls._raw(field, degree, (0,) * (degree + 1))

    @classmethod
    def constant(cls, field: Field, c) -> "HomogPoly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, degree: int, x_power: int, coefficient=1) -> "HomogPoly":
        """The monomial ``coefficient * x^x_power * y^(degree - x_power)``."""
        if not 0 <= x_power <= degree:
            raise ValueError(f"x power {x_power} outside 0..{degree}")
        c = field.coerce(coefficient)
        coeffs = [0] * (degree + 1)
        coeffs[x_power] = c
        return cls._raw(field, degree, tuple(coeffs))

    @classmethod
    def linear(cls, form: LinearForm) -> "HomogPoly":
        """The degree-1 polynomial equal to the given linear form."""
        return cls._raw(form.field, 1, (form.ay.value, form.ax.value))

    # ------------------------------------------------------------------
    # predicates and equality
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.field != other.field:
            return False
        if self.is_zero():
            return other.is_zero()
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_zero():
            return hash((self.field, "zero"))
        return hash((self.field, self.degree, self.coeffs))

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def _check_field(self, other):
        if self.field != other.field:
            raise ValueError("operands belong to different fields")

    def __add__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check_field(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        p = self.field.characteristic
        if p:
            coeffs = tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        else:
            coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return HomogPoly._raw(self.field, self.degree, coeffs)

    def __neg__(self):
        p = self.field.characteristic
        if p:
            coeffs = tuple((-a) % p for a in self.coeffs)
        else:
            coeffs = tuple(-a for a in self.coeffs)
        return HomogPoly._raw(self.field, self.degree, coeffs)

    def __sub__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            self._check_field(other)
            a, b = self.coeffs, other.coeffs
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
            p = self.field.characteristic
            if p:
                out = [c % p for c in out]
            return HomogPoly._raw(self.field, self.degree + other.degree, tuple(out))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "HomogPoly":
        """Multiply every coefficient by the scalar ``c``."""
        raw = self.field.coerce(c)
        if raw == 1:
            return self
        p = self.field.characteristic
        if not raw:
            return HomogPoly.zero(self.field, self.degree)
        if p:
            coeffs = tuple(a * raw % p for a in self.coeffs)
        else:
            coeffs = tuple(a * raw for a in self.coeffs)
        return HomogPoly._raw(self.field, self.degree, coeffs)

    def times_linear(self, form: LinearForm) -> "HomogPoly":
        """Multiply by a linear form (one synthetic convolution pass)."""
        if form.field != self.field:
            raise ValueError("form belongs to a different field")
        a, b = form.ax.value, form.ay.value
        src = self.coeffs
        n = len(src)
        out = [0] * (n + 1)
        p = self.field.characteristic
        if p:
            for j in range(n):
                s = src[j]
                if s:
                    out[j] = (out[j] + b * s) % p
                    out[j + 1] = (out[j + 1] + a * s) % p
        else:
            for j in range(n):
                s = src[j]
                if s:
                    out[j] = out[j] + b * s
                    out[j + 1] = out[j + 1] + a * s
        return HomogPoly._raw(self.field, self.degree + 1, tuple(out))

    # ------------------------------------------------------------------
    # evaluation and division by linear forms
    # ------------------------------------------------------------------

    def eval_raw(self, a, b):
        """Evaluate at the raw point (a, b); returns a raw scalar."""
        cs = self.coeffs
        r = cs[-1]
        p = self.field.characteristic
        bp = 1
        if p:
            for j in range(self.degree - 1, -1, -1):
                bp = bp * b % p
                r = (r * a + cs[j] * bp) % p
        else:
            for j in range(self.degree - 1, -1, -1):
                bp = bp * b
                r = r * a + cs[j] * bp
        return r

    def eval(self, x_value, y_value) -> FieldElement:
        """Evaluate at a point; arguments may be ints, Fractions or FieldElements."""
        a = self.field.coerce(x_value)
        b = self.field.coerce(y_value)
        return FieldElement._wrap(self.field, self.eval_raw(a, b))

    def is_divisible_by(self, form: LinearForm) -> bool:
        """Whether the linear form divides this polynomial.

        A homogeneous polynomial is divisible by a linear form exactly when it
        vanishes at a nonzero point of the form's kernel, so this is a single
        evaluation rather than a division.
        """
        if form.field != self.field:
            raise ValueError("form belongs to a different field")
        return not self.eval_raw(*form.point_raw())

    def _div_linear(self, form: LinearForm):
        """One synthetic division step: returns (quotient, raw remainder scalar).

        The remainder of dividing a homogeneous polynomial of degree d by a
        linear form is a single monomial; only its scalar is returned.
        """
        d = self.degree
        if self.is_zero():
            return HomogPoly.zero(self.field, max(d - 1, 0)), 0
        if d == 0:
            return HomogPoly.zero(self.field, 0), self.coeffs[0]
        cs = self.coeffs
        a, b = form.ax.value, form.ay.value
        p = self.field.characteristic
        if not a:
            # form is y: x^j y^(d-j) = y * (x^j y^(d-1-j)) for j < d
            return HomogPoly._raw(self.field, d - 1, cs[:d]), cs[d]
        # a == 1 after normalization: peel (x + b*y) off from the top
        q = [0] * d
        q[d - 1] = cs[d]
        if p:
            for j in range(d - 1, 0, -1):
                q[j - 1] = (cs[j] - b * q[j]) % p
            r = (cs[0] - b * q[0]) % p
        else:
            for j in range(d - 1, 0, -1):
                q[j - 1] = cs[j] - b * q[j]
            r = cs[0] - b * q[0]
        return HomogPoly._raw(self.field, d - 1, tuple(q)), r

    def div_linear_power(self, form: LinearForm, power: int) -> "HomogPoly":
        """Divide exactly by ``form ** power``.

        Raises :class:`InexactDivisionError` if any of the ``power`` successive
        synthetic divisions leaves a remainder.
        """
        if form.field != self.field:
            raise ValueError("form belongs to a different field")
        if power < 0:
            raise ValueError("power must be nonnegative")
        q = self
        for _ in range(power):
            q, r = q._div_linear(form)
            if r:
                raise InexactDivisionError(f"({form})^{power} does not divide {self}")
        return q

    # ------------------------------------------------------------------
    # rendering and round-trip text form
    # ------------------------------------------------------------------

    @staticmethod
    def _monomial_str(j: int, k: int) -> str:
        parts = []
        if j == 1:
            parts.append("x")
        elif j > 1:
            parts.append(f"x^{j}")
        if k == 1:
            parts.append("y")
        elif k > 1:
            parts.append(f"y^{k}")
        return "*".join(parts)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            negative = c < 0
            mag = -c if negative else c
            mono = self._monomial_str(j, self.degree - j)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            terms.append(("- " if negative else "+ ") + body)
        first = terms[0]
        out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
        for t in terms[1:]:
            out += " " + t
        return out

    def __repr__(self):
        return f"HomogPoly({self} over {self.field})"

    def to_text(self) -> str:
        """Compact exact text form ``degree:c0,c1,...,cd`` (cj multiplies x^j y^(d-j))."""
        return f"{self.degree}:" + ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, field: Field, text: str) -> "HomogPoly":
        """Parse the :meth:`to_text` format."""
        head, sep, tail = text.partition(":")
        if not sep:
            raise ValueError(f"missing ':' in polynomial text {text!r}")
        try:
            degree = int(head)
        except ValueError:
            raise ValueError(f"bad degree {head!r} in polynomial text") from None
        parts = tail.split(",")
        if len(parts) != degree + 1:
            raise ValueError(f"degree {degree} needs {degree + 1} coefficients, got {len(parts)}")
        return cls(field, [s.strip() for s in parts], degree)
