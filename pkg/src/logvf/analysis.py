"""Consequences of the update step: traces, closed forms, and experiments.

This module packages the higher-level results that sit on top of the basis
construction: step-by-step traces of how the exponent gap evolves, generic
forms that rebalance a gap of one, the closed-form exponents of unbalanced
arrangements, Frobenius-power bases over prime fields, and a bulk experiment
classifying when a four-line arrangement has exponent difference two.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .arrangement import LinearForm, Multiarrangement, all_hyperplanes
from .basis import BasisPair, Branch, _run_chain, exponents, verify_basis
from .derivation import Derivation
from .field import Field
from .poly import HomogPoly


# ----------------------------------------------------------------------
# step traces
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class StepTrace:
    """One multiplicity-raising step on the way up to a target arrangement."""

    index: int
    form: LinearForm
    multiplicity: int
    branch: Branch
    degrees_before: tuple[int, int]
    degrees_after: tuple[int, int]

    @property
    def diff_before(self) -> int:
        return abs(self.degrees_before[0] - self.degrees_before[1])

    @property
    def diff_after(self) -> int:
        return abs(self.degrees_after[0] - self.degrees_after[1])

    def __str__(self):
        return (
            f"step {self.index}: form {self.form}, multiplicity "
            f"{self.multiplicity} -> {self.multiplicity + 1}, branch "
            f"{self.branch.value}, degrees {self.degrees_before} -> "
            f"{self.degrees_after}, diff {self.diff_before} -> {self.diff_after}"
        )


def trace_chain(arrangement: Multiarrangement):
    """Build a basis while recording every step; returns (pair, traces)."""
    traces: list[StepTrace] = []

    def observer(form, mult, branch, before, after):
        traces.append(
            StepTrace(
                index=len(traces) + 1,
                form=form,
                multiplicity=mult,
                branch=branch,
                degrees_before=tuple(sorted(before, reverse=True)),
                degrees_after=tuple(sorted(after, reverse=True)),
            )
        )

    pair = _run_chain(arrangement, observer)
    return pair, traces


# ----------------------------------------------------------------------
# generic forms and balanced growth
# ----------------------------------------------------------------------


class NoGenericFormError(Exception):
    """No linear form avoids the divisibility obstruction for theta2.

    This happens exactly when theta2 is a polynomial multiple of the Euler
    derivation, since then every linear form alpha divides theta2(alpha).
    """


def _avoids_obstruction(theta2: Derivation, form: LinearForm) -> bool:
    """True when form does not divide theta2(form)."""
    return bool(theta2.apply(form).eval_raw(*form.point_raw()))


def _ladder():
    """0, 1, -1, 2, -2, ... candidate coefficients for generic forms."""
    yield 0
    c = 1
    while True:
        yield c
        yield -c
        c += 1


def find_generic_form(theta2: Derivation, exclude=()) -> LinearForm:
    """A linear form alpha, not in ``exclude``, with alpha not dividing theta2(alpha).

    Adding such a form to the arrangement sends the update step through its
    generic branch, which lowers the exponent difference when theta2 is the
    smaller-degree member of a basis.  The candidates y, x, x + y, x - y,
    x + 2y, ... are scanned in order, so the result is deterministic; the
    value theta2(x + c*y) at the kernel point is a nonzero polynomial in c of
    degree at most deg(theta2) + 1 unless theta2 is an Euler multiple, which
    bounds the search.
    """
    field = theta2.field
    excluded = set(exclude)
    p = field.characteristic
    if p:
        for form in [LinearForm(field, 0, 1)] + [
            LinearForm(field, 1, c) for c in range(p)
        ]:
            if form not in excluded and _avoids_obstruction(theta2, form):
                return form
        raise NoGenericFormError(
            "every hyperplane over the field is excluded or obstructed"
        )
    y_form = LinearForm(field, 0, 1)
    if y_form not in excluded and _avoids_obstruction(theta2, y_form):
        return y_form
    tested = 0
    for c in _ladder():
        form = LinearForm(field, 1, c)
        if form in excluded:
            continue
        if _avoids_obstruction(theta2, form):
            return form
        tested += 1
        if tested > theta2.degree + 1:
            break
    raise NoGenericFormError(
        "theta2 is a multiple of the Euler derivation; every form is obstructed"
    )


def unbalanced_exponents(arrangement: Multiarrangement):
    """Closed-form exponents when one multiplicity dominates, else None.

    If some hyperplane H has 2*mu(H) >= |mu|, the exponents are exactly
    (mu(H), |mu| - mu(H)): once the dominant multiplicity reaches half the
    total, every further increase of it goes to a single basis member.
    """
    total = arrangement.total
    for form, mult in arrangement.items():
        if 2 * mult >= total:
            return (mult, total - mult)
    return None


# ----------------------------------------------------------------------
# Frobenius-power bases over prime fields
# ----------------------------------------------------------------------


def frobenius_derivation(p: int, i: int) -> Derivation:
    """The derivation x^(p^i) dx + y^(p^i) dy over F_p.

    Raising to the p^i-th power is additive in characteristic p, so applying
    this derivation to a*x + b*y gives a*x^(p^i) + b*y^(p^i) = (a*x + b*y)^(p^i):
    every hyperplane automatically divides the value to the p^i-th power.
    """
    if i < 0:
        raise ValueError("the power index must be nonnegative")
    field = Field(p)
    q = p**i
    return Derivation(
        HomogPoly.monomial(field, q, q), HomogPoly.monomial(field, q, 0)
    )


def frobenius_arrangement(p: int, i: int, shifts=None) -> Multiarrangement:
    """All p + 1 hyperplanes of F_p^2 with multiplicities p^i + shift(H).

    ``shifts`` maps hyperplanes to integers in [0, p^(i+1) - p^i]; missing
    hyperplanes get shift 0.
    """
    field = Field(p)
    if i < 0:
        raise ValueError("the power index must be nonnegative")
    q = p**i
    max_shift = p ** (i + 1) - q
    shifts = dict(shifts or {})
    hyperplanes = all_hyperplanes(field)
    valid = set(hyperplanes)
    for form, j in shifts.items():
        if form not in valid:
            raise ValueError(f"{form!r} is not a hyperplane over F_{p}")
        if isinstance(j, bool) or not isinstance(j, int) or not 0 <= j <= max_shift:
            raise ValueError(
                f"shift for {form} must be an integer in [0, {max_shift}], got {j!r}"
            )
    return Multiarrangement(
        field, {h: q + shifts.get(h, 0) for h in hyperplanes}
    )


def frobenius_basis(p: int, i: int, shifts=None) -> BasisPair:
    """A verified basis for the shifted constant-multiplicity arrangement.

    The pair is (prod_H alpha_H^shift(H)) * theta_(p^i) together with
    theta_(p^(i+1)), where theta_q = x^q dx + y^q dy; with no shifts this is
    the basis for constant multiplicity p^i on all p + 1 hyperplanes.  The
    result is checked against Saito's criterion before being returned.
    """
    arrangement = frobenius_arrangement(p, i, shifts)
    field = arrangement.field
    shifts = dict(shifts or {})
    theta1 = frobenius_derivation(p, i)
    for form in all_hyperplanes(field):
        for _ in range(shifts.get(form, 0)):
            theta1 = theta1.times_linear(form)
    theta2 = frobenius_derivation(p, i + 1)
    pair = BasisPair(theta1, theta2)
    if not verify_basis(pair, arrangement):
        raise RuntimeError(
            "Frobenius-power pair failed Saito verification; this should be impossible"
        )
    return pair


# ----------------------------------------------------------------------
# the four-line parity classification experiment
# ----------------------------------------------------------------------

_EXPERIMENT_COEFFS = ((1, 1), (1, -1), (1, 0), (0, 1))  # x+y, x-y, x, y


def _four_line_arrangement(mu: tuple[int, int, int, int]) -> Multiarrangement:
    field = Field(0)
    return Multiarrangement(
        field,
        {
            LinearForm(field, a, b): m
            for (a, b), m in zip(_EXPERIMENT_COEFFS, mu)
        },
    )


def _tuple_exponents(mu: tuple[int, int, int, int]) -> tuple[int, int]:
    return exponents(_four_line_arrangement(mu))


@lru_cache(maxsize=None)
def _odd_pair_with_gap(a: int, b: int, offset: int, span: int) -> bool:
    """Whether b = 2k+1 and a = 2k+1 + offset + 4h for integers k >= 0, |h| <= span.

    The shift h is allowed to be negative, so for even ``offset`` the relation
    is symmetric in a and b modulo 4.
    """
    for k in range(b // 2 + 1):
        if 2 * k + 1 != b:
            continue
        for h in range(-span, span + 1):
            if a == 2 * k + 1 + offset + 4 * h:
                return True
    return False


def predicted_difference_two(mu: tuple[int, int, int, int], span: int = 16) -> bool:
    """The parity classification of exponent difference 2 for four lines.

    For multiplicities (m1, m2, m3, m4) on x+y, x-y, x, y with no dominant
    hyperplane, the exponent difference is 2 exactly when one of the pairs
    {m1, m2} or {m3, m4} is two odd numbers differing by 2 mod 4 while the
    other pair is twice-equal even, or two odd numbers differing by 0 mod 4
    while the other pair is twice-equal odd.  ``span`` bounds the integer
    search for the mod-4 shift.
    """
    m1, m2, m3, m4 = mu

    def odd_gap2(a, b):
        return _odd_pair_with_gap(a, b, 2, span)

    def odd_gap0(a, b):
        return _odd_pair_with_gap(a, b, 0, span)

    return (
        (odd_gap2(m1, m2) and m3 == m4 and m3 % 2 == 0)
        or (odd_gap2(m3, m4) and m1 == m2 and m1 % 2 == 0)
        or (odd_gap0(m1, m2) and m3 == m4 and m3 % 2 == 1)
        or (odd_gap0(m3, m4) and m1 == m2 and m1 % 2 == 1)
    )


@dataclass(frozen=True)
class ExperimentRow:
    """Computed and predicted behaviour of one multiplicity tuple."""

    mu: tuple[int, int, int, int]
    total: int
    d1: int
    d2: int
    difference: int
    predicted_two: bool
    hypothesis_ok: bool

    @property
    def agrees(self):
        """True/False when the hypothesis holds, None when it is vacuous."""
        if not self.hypothesis_ok:
            return None
        return (self.difference == 2) == self.predicted_two


@dataclass(frozen=True)
class PropositionReport:
    """All rows of the four-line experiment over a multiplicity range."""

    lo: int
    hi: int
    rows: tuple[ExperimentRow, ...]

    @property
    def tuple_count(self) -> int:
        return len(self.rows)

    @property
    def disagreements(self) -> tuple[ExperimentRow, ...]:
        return tuple(r for r in self.rows if r.agrees is False)

    def summary(self) -> str:
        return f"{self.tuple_count} tuples, {len(self.disagreements)} disagreements"

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["mu1", "mu2", "mu3", "mu4", "total", "d1", "d2", "d", "predicted_d2", "agrees"]
            )
            for r in self.rows:
                agrees = "" if r.agrees is None else ("true" if r.agrees else "false")
                writer.writerow(
                    [
                        *r.mu,
                        r.total,
                        r.d1,
                        r.d2,
                        r.difference,
                        "true" if r.predicted_two else "false",
                        agrees,
                    ]
                )


def proposition_experiment(lo: int = 20, hi: int = 30, jobs: int = 1) -> PropositionReport:
    """Exponent differences of all four-line arrangements with mu in [lo, hi]^4.

    Each multiplicity tuple for the lines x+y, x-y, x, y is run through the
    basis construction and its exponent difference is compared with the parity
    classification.  Tuples where some hyperplane carries at least half the
    total weight fall outside the classification's hypothesis and are reported
    with ``agrees`` empty.
    """
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    tuples = list(product(range(lo, hi + 1), repeat=4))
    if jobs == 1:
        results = map(_tuple_exponents, tuples)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_tuple_exponents, tuples, chunksize=64)
    span = max(4, hi - lo)
    rows = []
    for mu, (d1, d2) in zip(tuples, results):
        total = sum(mu)
        rows.append(
            ExperimentRow(
                mu=mu,
                total=total,
                d1=d1,
                d2=d2,
                difference=d1 - d2,
                predicted_two=predicted_difference_two(mu, span),
                hypothesis_ok=all(2 * m < total for m in mu),
            )
        )
    if jobs > 1:
        pool.shutdown()
    return PropositionReport(lo=lo, hi=hi, rows=tuple(rows))
