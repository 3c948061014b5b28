"""Construction and verification of homogeneous bases for D(A, mu).

In two variables D(A, mu) is always free of rank 2, so a basis is a pair of
derivations.  ``update_basis`` turns a basis for one arrangement into a basis
for the arrangement with a single multiplicity raised by one; ``build_basis``
iterates that step from the empty arrangement, whose basis is (d/dx, d/dy).
Correctness of a claimed pair is decided by Saito's criterion.
"""

from __future__ import annotations

import enum

from .arrangement import LinearForm, Multiarrangement
from .derivation import Derivation, saito_determinant
from .poly import HomogPoly


class Branch(enum.Enum):
    """Which case an update step lands in (see :func:`update_basis`)."""

    G_VANISHING = "g-vanishing"
    F_VANISHING = "f-vanishing"
    GENERIC = "generic"


class BasisPair:
    """An ordered pair of derivations, higher degree first (ties keep input order)."""

    __slots__ = ("theta1", "theta2")

    def __init__(self, theta1: Derivation, theta2: Derivation):
        if theta1.field != theta2.field:
            raise ValueError("derivations live over different fields")
        if theta1.degree < theta2.degree:
            theta1, theta2 = theta2, theta1
        self.theta1 = theta1
        self.theta2 = theta2

    @property
    def field(self):
        return self.theta1.field

    def degrees(self) -> tuple[int, int]:
        """The pair of coefficient degrees, largest first."""
        return (self.theta1.degree, self.theta2.degree)

    def determinant(self) -> HomogPoly:
        return saito_determinant(self.theta1, self.theta2)

    def __iter__(self):
        return iter((self.theta1, self.theta2))

    def __eq__(self, other):
        if not isinstance(other, BasisPair):
            return NotImplemented
        return self.theta1 == other.theta1 and self.theta2 == other.theta2

    def __hash__(self):
        return hash((self.theta1, self.theta2))

    def __str__(self):
        return f"[{self.theta1}, {self.theta2}]"

    def __repr__(self):
        return f"BasisPair({self})"


def verify_basis(pair: BasisPair, arrangement: Multiarrangement) -> bool:
    """Saito's criterion: membership, independence, and degree sum |mu|.

    Two derivations whose coefficient determinant is nonzero are independent
    over the polynomial ring; if both lie in D(A, mu) and their degrees add up
    to the total multiplicity, they form a homogeneous basis.
    """
    if pair.field != arrangement.field:
        raise ValueError("pair and arrangement live over different fields")
    if sum(pair.degrees()) != arrangement.total:
        return False
    if pair.determinant().is_zero():
        return False
    return pair.theta1.is_member(arrangement) and pair.theta2.is_member(arrangement)


def _step(theta1, theta2, form, mult, f_quot=None, g_quot=None):
    """One multiplicity-raising update; the engine behind the public operations.

    Arguments satisfy: (theta1, theta2) is a basis of D(A, mu) where ker(form)
    has multiplicity ``mult``.  Returns ``(theta1', theta2', branch, f', g')``
    where the primed pair is a basis once that multiplicity is mult + 1.

    ``f_quot``/``g_quot``, when supplied, must equal theta_i(form) divided by
    form^mult; the returned ``f'``/``g'`` are the same quotients for the
    updated pair at multiplicity mult + 1, so a caller ramping up one
    hyperplane can avoid recomputing them from scratch.  Every incremental
    division below is remainder-checked, so a violated precondition surfaces
    as InexactDivisionError rather than a wrong answer.
    """
    if theta1.degree < theta2.degree:
        theta1, theta2 = theta2, theta1
        f_quot, g_quot = g_quot, f_quot
    field = theta1.field
    rational = field.characteristic == 0
    if g_quot is None:
        g_quot = theta2.apply(form).div_linear_power(form, mult)
    px, py = form.point_raw()
    g_val = g_quot.eval_raw(px, py)

    if not g_val:
        # form^(mult+1) already divides theta2(form): multiply theta1 instead
        new1 = theta1.times_linear(form)
        factor1 = 1
        if rational:
            new1, factor1 = new1.primitive()
        if f_quot is not None and factor1 != 1:
            f_quot = f_quot.scale(factor1)
        g_quot = g_quot.div_linear_power(form, 1)
        return new1, theta2, Branch.G_VANISHING, f_quot, g_quot

    if f_quot is None:
        f_quot = theta1.apply(form).div_linear_power(form, mult)
    f_val = f_quot.eval_raw(px, py)

    if not f_val:
        # form^(mult+1) already divides theta1(form): multiply theta2 instead
        new2 = theta2.times_linear(form)
        factor2 = 1
        if rational:
            new2, factor2 = new2.primitive()
        if factor2 != 1:
            g_quot = g_quot.scale(factor2)
        f_quot = f_quot.div_linear_power(form, 1)
        return theta1, new2, Branch.F_VANISHING, f_quot, g_quot

    # generic case: clear the obstruction with theta1 + q*theta2, q as below
    d = theta1.degree - theta2.degree
    ax, ay = form.ax.value, form.ay.value
    if not ax:
        # form is y, kernel point (1, 0): q needs only its x^d coefficient
        q_top = field.div_raw(field.neg_raw(f_val), g_val)
        q = HomogPoly._raw(field, d, (0,) * d + (q_top,))
    else:
        # q = q0*y^d + x^d + x^(d-1)*y + ... + x*y^(d-1) with q0 chosen so
        # that (f + q*g)(point) = 0
        neg_ax = field.neg_raw(ax)
        q0 = field.div_raw(
            field.neg_raw(f_val), field.mul_raw(g_val, field.pow_raw(neg_ax, d))
        )
        ratio = field.div_raw(ay, neg_ax)
        power = 1
        for _ in range(d):
            power = field.mul_raw(power, ratio)
            q0 = field.sub_raw(q0, power)
        q = HomogPoly._raw(field, d, (q0,) + (1,) * d)

    new1 = theta1.plus_scaled(q, theta2)
    factor1 = 1
    if rational:
        new1, factor1 = new1.primitive()
    new2 = theta2.times_linear(form)
    factor2 = 1
    if rational:
        new2, factor2 = new2.primitive()
    f_quot = (f_quot + q * g_quot).div_linear_power(form, 1)
    if factor1 != 1:
        f_quot = f_quot.scale(factor1)
    if factor2 != 1:
        g_quot = g_quot.scale(factor2)
    return new1, new2, Branch.GENERIC, f_quot, g_quot


def update_basis(pair: BasisPair, form: LinearForm, mult: int) -> BasisPair:
    """Update a basis when the multiplicity of ``ker(form)`` rises by one.

    ``pair`` must be a basis of D(A, mu) for an arrangement in which the
    hyperplane of ``form`` currently has multiplicity ``mult`` (0 if absent);
    the result is a basis after raising that multiplicity to mult + 1.  The
    precondition is trusted, not re-verified, but a violation that breaks an
    exact division raises InexactDivisionError.
    """
    if form.field != pair.field:
        raise ValueError("form and pair live over different fields")
    if mult < 0:
        raise ValueError("multiplicity must be nonnegative")
    theta1, theta2, _, _, _ = _step(pair.theta1, pair.theta2, form, mult)
    return BasisPair(theta1, theta2)


def _run_chain(arrangement: Multiarrangement, observer=None):
    """Fold :func:`_step` from (d/dx, d/dy) up to the full arrangement.

    Hyperplanes are consumed in canonical order, each one ramped from
    multiplicity 0 to its target, which keeps the construction deterministic.
    ``observer(form, mult, branch, degrees_before, degrees_after)`` is invoked
    after every step when supplied.
    """
    field = arrangement.field
    theta1 = Derivation.partial_x(field)
    theta2 = Derivation.partial_y(field)
    for form in arrangement.forms():
        f_quot = g_quot = None
        for mult in range(arrangement.multiplicity(form)):
            before = (theta1.degree, theta2.degree)
            theta1, theta2, branch, f_quot, g_quot = _step(
                theta1, theta2, form, mult, f_quot, g_quot
            )
            if observer is not None:
                observer(form, mult, branch, before, (theta1.degree, theta2.degree))
    return BasisPair(theta1, theta2)


def build_basis(arrangement: Multiarrangement) -> BasisPair:
    """A homogeneous basis of D(A, mu), built one multiplicity at a time."""
    return _run_chain(arrangement)


def exponents(arrangement: Multiarrangement) -> tuple[int, int]:
    """The exponents of the arrangement: basis degrees, largest first."""
    return build_basis(arrangement).degrees()
