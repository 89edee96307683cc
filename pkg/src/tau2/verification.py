"""Cross-checks between the recursion route and the closed-form route.

Every identity the two routes must satisfy is evaluated in exact rational
arithmetic: residuals of the three recursions (on correlators, on normalized
values, and on their differences), cross-path equality of all values,
symmetry, and the strict window bounds.  The residuals are evaluated on the
closed-form values on purpose: the recursion route satisfies its own
recursion by construction, so only the closed form makes the residual an
informative check.

Checks never abort mid-scan.  They return a :class:`CheckReport` whose
failure list pinpoints every offending (g, k) locus in deterministic (g, k)
order; an empty list means the check passed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .closedform import a_closed, b_domain_max, b_value, two_point_closed
from .combinatorics import binomial, double_factorial_odd, rational_str
from .recursion import TwoPointTable, build_table, one_point_at

__all__ = [
    "CheckFailure",
    "CheckReport",
    "residual_rec_tau",
    "residual_rec_a",
    "residual_rec_b",
    "cross_validate",
    "check_symmetry",
    "check_bounds",
    "check_residual_tau",
    "check_residual_a",
    "check_residual_b",
]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class CheckFailure:
    """One violated identity: the locus and both sides of the comparison."""

    g: int
    k: int
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exact check over a genus range.

    ``passed`` holds exactly when ``failures`` is empty; ``checked`` counts
    the comparisons performed.
    """

    check_name: str
    g_range: tuple[int, int]
    failures: tuple[CheckFailure, ...]
    checked: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "check": self.check_name,
            "g_max": self.g_range[1],
            "passed": self.passed,
            "failures": [
                {
                    "g": f.g,
                    "k": f.k,
                    "expected": rational_str(f.expected),
                    "actual": rational_str(f.actual),
                }
                for f in self.failures
            ],
        }


def _require_g_max(g_max: int, minimum: int = 1) -> None:
    if g_max < minimum:
        raise ValueError(f"g_max must be >= {minimum}, got {g_max}")


def _gamma(g: int) -> Fraction:
    # shared coefficient of the genus g-1 bracket in both normalized recursions
    return Fraction(4 * g, (6 * g - 1) * (6 * g - 3) * (6 * g - 5))


def residual_rec_tau(
    g: int, k: int, backend: Callable[[int, int], Fraction] | None = None
) -> Fraction:
    """LHS - RHS of the correlator recursion at step (g, k), g >= 2.

    Step k relates entry (g, k+1) to entry (g, k), four genus g-1 entries and
    a one-point product; valid for 0 <= k <= 3g-2.  Two-point values come
    from ``backend`` (default: the closed form), with indices outside
    0..3g-1 evaluating to 0.  An exact 0 result means the backend satisfies
    the recursion at this locus.
    """
    if g < 2:
        raise ValueError(f"recursion steps need genus g >= 2, got {g}")
    if not 0 <= k <= 3 * g - 2:
        raise ValueError(f"step index must be in 0..{3 * g - 2} at genus {g}, got {k}")
    src = backend if backend is not None else two_point_closed

    def tp(gg: int, kk: int) -> Fraction:
        if kk < 0 or kk > 3 * gg - 1:
            return ZERO
        return src(gg, kk)

    lhs = (2 * k + 3) * tp(g, k + 1)
    rhs = (
        (2 * g - 3 - 2 * k) * tp(g, k)
        + Fraction(1, 6)
        * (tp(g - 1, k - 3) + 3 * tp(g - 1, k - 2) + 3 * tp(g - 1, k - 1) + tp(g - 1, k))
        + one_point_at(k - 1) * one_point_at(3 * g - 3 - k)
    )
    return lhs - rhs


def _a_at(g: int, k: int) -> Fraction:
    """a(g, k) extended by 0 outside 0..3g-1 (vanishing correlator)."""
    if k < 0 or k > 3 * g - 1:
        return ZERO
    return a_closed(g, k)


def residual_rec_a(g: int, k: int) -> Fraction:
    """LHS - RHS of the normalized recursion at step (g, k), g >= 2:

        (6g-1-2k) a(g,k+1) = (2g-3-2k) a(g,k)
            + 4g/((6g-1)(6g-3)(6g-5)) * [  (2k+1)(2k-1)(2k-3)        a(g-1,k-3)
                                         + 3(2k+1)(2k-1)(6g-1-2k)    a(g-1,k-2)
                                         + 3(2k+1)(6g-1-2k)(6g-3-2k) a(g-1,k-1)
                                         + (6g-1-2k)(6g-3-2k)(6g-5-2k) a(g-1,k) ]
            + C(g,j) (2k+1)!!(6g-1-2k)!!/(6g-1)!!   if k = 3j-1, else 0

    evaluated on closed-form values, with out-of-range a(g-1, .) equal to 0
    on both sides of the row (the underlying correlators vanish there).
    Valid for 0 <= k <= 3g-2.
    """
    if g < 2:
        raise ValueError(f"recursion steps need genus g >= 2, got {g}")
    if not 0 <= k <= 3 * g - 2:
        raise ValueError(f"step index must be in 0..{3 * g - 2} at genus {g}, got {k}")
    lhs = (6 * g - 1 - 2 * k) * a_closed(g, k + 1)
    bracket = (
        (2 * k + 1) * (2 * k - 1) * (2 * k - 3) * _a_at(g - 1, k - 3)
        + 3 * (2 * k + 1) * (2 * k - 1) * (6 * g - 1 - 2 * k) * _a_at(g - 1, k - 2)
        + 3 * (2 * k + 1) * (6 * g - 1 - 2 * k) * (6 * g - 3 - 2 * k) * _a_at(g - 1, k - 1)
        + (6 * g - 1 - 2 * k) * (6 * g - 3 - 2 * k) * (6 * g - 5 - 2 * k) * _a_at(g - 1, k)
    )
    if k % 3 == 2:
        j = (k + 1) // 3
        inhom = binomial(g, j) * Fraction(
            double_factorial_odd(2 * k + 1) * double_factorial_odd(6 * g - 1 - 2 * k),
            double_factorial_odd(6 * g - 1),
        )
    else:
        inhom = ZERO
    rhs = (2 * g - 3 - 2 * k) * a_closed(g, k) + _gamma(g) * bracket + inhom
    return lhs - rhs


def _b_at(g: int, k: int) -> Fraction:
    """Difference a(g, k+1) - a(g, k) extended to every integer k.

    Since a(g, .) vanishes outside 0..3g-1, the differences are 0 for
    k <= -2 and k > 3g-2, equal 1 at k = -1 (that is a(g,0) - 0), follow the
    closed-form branch values on the first half, and continue antisymmetric
    about the middle of the row on the second half.
    """
    if k <= -2 or k > 3 * g - 2:
        return ZERO
    if k == -1:
        return ONE
    if k <= b_domain_max(g):
        return b_value(g, k)
    if 2 * k == 3 * g - 2:
        return ZERO
    return -b_value(g, 3 * g - 2 - k)


def residual_rec_b(g: int, k: int) -> Fraction:
    """LHS - RHS of the difference recursion at step (g, k), g >= 2:

        (6g-3-2k) b(g,k+1) = (2g-3-2k) b(g,k)
            + 4g/((6g-1)(6g-3)(6g-5)) * [  (2k+1)(2k-1)(2k-3)        b(g-1,k-3)
                                         + 3(2k+1)(2k-1)(6g-3-2k)    b(g-1,k-2)
                                         + 3(2k+1)(6g-3-2k)(6g-5-2k) b(g-1,k-1)
                                         + (6g-3-2k)(6g-5-2k)(6g-7-2k) b(g-1,k) ]
            + C(g,j) (2k+3)!!(6g-3-2k)!!/(6g-1)!!   if k = 3j-2
            - C(g,j) (2k+1)!!(6g-1-2k)!!/(6g-1)!!   if k = 3j-1
            + 0                                      if k = 3j

    evaluated on closed-form difference values, with b(g-1, .) extended per
    :func:`_b_at`: in particular b(g-1, -1) = 1, not 0, since it is the
    difference a(g-1, 0) - a(g-1, -1) of a unit and a vanishing value.
    Valid while both k and k+1 lie in the difference formula's domain.
    """
    if g < 2:
        raise ValueError(f"recursion steps need genus g >= 2, got {g}")
    top = b_domain_max(g) - 1
    if not 0 <= k <= top:
        raise ValueError(f"step index must be in 0..{top} at genus {g}, got {k}")
    lhs = (6 * g - 3 - 2 * k) * b_value(g, k + 1)
    bracket = (
        (2 * k + 1) * (2 * k - 1) * (2 * k - 3) * _b_at(g - 1, k - 3)
        + 3 * (2 * k + 1) * (2 * k - 1) * (6 * g - 3 - 2 * k) * _b_at(g - 1, k - 2)
        + 3 * (2 * k + 1) * (6 * g - 3 - 2 * k) * (6 * g - 5 - 2 * k) * _b_at(g - 1, k - 1)
        + (6 * g - 3 - 2 * k) * (6 * g - 5 - 2 * k) * (6 * g - 7 - 2 * k) * _b_at(g - 1, k)
    )
    r = k % 3
    if r == 1:
        j = (k + 2) // 3
        inhom = binomial(g, j) * Fraction(
            double_factorial_odd(2 * k + 3) * double_factorial_odd(6 * g - 3 - 2 * k),
            double_factorial_odd(6 * g - 1),
        )
    elif r == 2:
        j = (k + 1) // 3
        inhom = -binomial(g, j) * Fraction(
            double_factorial_odd(2 * k + 1) * double_factorial_odd(6 * g - 1 - 2 * k),
            double_factorial_odd(6 * g - 1),
        )
    else:
        inhom = ZERO
    rhs = (2 * g - 3 - 2 * k) * b_value(g, k) + _gamma(g) * bracket + inhom
    return lhs - rhs


def cross_validate(g_max: int, table: TwoPointTable | None = None) -> CheckReport:
    """Compare the closed form against the recursion for every (g, k), g <= g_max.

    Builds the recursive table if one is not supplied.  Failures record the
    recursive value as expected and the closed-form value as actual.
    """
    _require_g_max(g_max)
    if table is None or table.max_genus_complete < g_max:
        table = build_table(g_max)
    failures = []
    checked = 0
    for g in range(1, g_max + 1):
        row = table.row(g)
        for k, recursive in enumerate(row):
            closed = two_point_closed(g, k)
            checked += 1
            if closed != recursive:
                failures.append(CheckFailure(g, k, recursive, closed))
    return CheckReport("cross", (1, g_max), tuple(failures), checked)


def check_symmetry(g_max: int, table: TwoPointTable | None = None) -> CheckReport:
    """Assert table(g, k) = table(g, 3g-1-k) on the recursive path, g <= g_max."""
    _require_g_max(g_max)
    if table is None or table.max_genus_complete < g_max:
        table = build_table(g_max)
    failures = []
    checked = 0
    for g in range(1, g_max + 1):
        row = table.row(g)
        for k in range((3 * g - 1) // 2 + 1):
            mirror = row[3 * g - 1 - k]
            checked += 1
            if row[k] != mirror:
                failures.append(CheckFailure(g, k, mirror, row[k]))
    return CheckReport("symmetry", (1, g_max), tuple(failures), checked)


def check_bounds(g_max: int) -> CheckReport:
    """Assert the strict window (6g-3)/(6g-1) < a(g, k) < 1 for 2 <= k <= 3g-3.

    Scans genera 2..g_max (empty, hence passing, for g_max = 1).
    """
    _require_g_max(g_max)
    failures = []
    checked = 0
    for g in range(2, g_max + 1):
        lower = Fraction(6 * g - 3, 6 * g - 1)
        for k in range(2, 3 * g - 2):
            a = a_closed(g, k)
            checked += 1
            if not a > lower:
                failures.append(CheckFailure(g, k, lower, a))
            elif not a < 1:
                failures.append(CheckFailure(g, k, ONE, a))
    return CheckReport("bounds", (2, g_max), tuple(failures), checked)


def _residual_scan(name, g_max, loci, residual) -> CheckReport:
    failures = []
    checked = 0
    for g in range(2, g_max + 1):
        for k in loci(g):
            value = residual(g, k)
            checked += 1
            if value != 0:
                failures.append(CheckFailure(g, k, ZERO, value))
    return CheckReport(name, (2, g_max), tuple(failures), checked)


def check_residual_tau(g_max: int) -> CheckReport:
    """Residual of the correlator recursion over its full domain, g <= g_max."""
    _require_g_max(g_max)
    return _residual_scan(
        "residual-tau", g_max, lambda g: range(3 * g - 1), residual_rec_tau
    )


def check_residual_a(g_max: int) -> CheckReport:
    """Residual of the normalized recursion over its full domain, g <= g_max."""
    _require_g_max(g_max)
    return _residual_scan(
        "residual-a", g_max, lambda g: range(3 * g - 1), residual_rec_a
    )


def check_residual_b(g_max: int) -> CheckReport:
    """Residual of the difference recursion over its full domain, g <= g_max."""
    _require_g_max(g_max)
    return _residual_scan(
        "residual-b", g_max, lambda g: range(b_domain_max(g)), residual_rec_b
    )
