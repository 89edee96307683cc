"""Two-point correlator table built by the genus recursion.

The two-point correlators <tau_k tau_{3g-1-k}> of 2D topological gravity are
computed genus by genus.  Genus 1 is seeded from the string and dilaton
equations applied to <tau_1> = 1/24; every genus g >= 2 row is then filled
left to right in k: entry (g, k) is obtained from entry (g, k-1), four entries
of the genus g-1 row, and a product of one-point correlators (see
:func:`_step`).  The row is always computed over the full range k = 0..3g-1,
never by mirroring, so the k <-> 3g-1-k symmetry of the result stays an
independent consistency check.

Tables serialize to a line-oriented UTF-8 text format (header
``tau2-table v1``, then one ``g<TAB>k<TAB>p/q`` line per entry, sorted) used
as an on-disk cache; loading re-validates all invariants before trusting the
file.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Iterator, Sequence

from .combinatorics import multinomial, parse_rational, rational_str

__all__ = [
    "one_point",
    "one_point_at",
    "genus0_npoint",
    "genus1_seed",
    "genus_row",
    "two_point_recursive",
    "build_table",
    "TwoPointTable",
    "TableValidationError",
    "TABLE_HEADER",
]

ZERO = Fraction(0)
_SIXTH = Fraction(1, 6)

TABLE_HEADER = "tau2-table v1"


def one_point(g: int) -> Fraction:
    """One-point correlator <tau_{3g-2}> = 1/(24^g g!) for genus g >= 1."""
    if g < 1:
        raise ValueError(f"one-point correlator needs genus g >= 1, got {g}")
    return Fraction(1, 24**g * factorial(g))


def one_point_at(d: int) -> Fraction:
    """One-point correlator <tau_d> for an arbitrary integer index d.

    Nonzero only when d = 3g-2 for some genus g >= 1; any other index,
    negative ones included, gives exact 0.
    """
    if d < 1 or (d + 2) % 3:
        return ZERO
    return one_point((d + 2) // 3)


def genus0_npoint(ds: Sequence[int]) -> Fraction:
    """Genus-0 correlator <tau_{d_1} ... tau_{d_n}> = (n-3)!/(d_1! ... d_n!).

    Needs n >= 3 insertions.  Returns exact 0 when any index is negative or
    the dimension constraint sum(d_i) = n-3 fails.
    """
    n = len(ds)
    if n < 3:
        raise ValueError(f"genus-0 correlators need at least 3 insertions, got {n}")
    if any(d < 0 for d in ds) or sum(ds) != n - 3:
        return ZERO
    return Fraction(multinomial(ds))


def genus1_seed() -> dict[tuple[int, int], Fraction]:
    """Seed row {(1, 0): 1/24, (1, 1): 1/24}.

    (1, 0) is <tau_0 tau_2> = <tau_1> by the string equation; (1, 1) is
    <tau_1 tau_1> = (2g-2+n) <tau_1> = <tau_1> by the dilaton equation.
    The genus recursion itself is only applied from genus 2 on: at genus 1 it
    would involve an unstable genus-0 two-point symbol whose value is not
    fixed by the vanishing conventions, so the row is seeded instead.
    """
    v = Fraction(1, 24)
    return {(1, 0): v, (1, 1): v}


def _step(g: int, k: int, prev_value: Fraction, row_below: Sequence[Fraction]) -> Fraction:
    """Solve the genus recursion for entry (g, k), with g >= 2 and k >= 1:

        (2k+1) <tau_k tau_{3g-1-k}> =
              (2g-1-2k) <tau_{k-1} tau_{3g-k}>
            + 1/6 (T(k-4) + 3 T(k-3) + 3 T(k-2) + T(k-1))
            + <tau_{k-2}> <tau_{3g-2-k}>

    where T(i) is the genus g-1 entry with first index i (0 outside the row)
    and prev_value is the already computed entry (g, k-1).
    """

    def below(i: int) -> Fraction:
        return row_below[i] if 0 <= i < len(row_below) else ZERO

    rhs = (
        (2 * g - 1 - 2 * k) * prev_value
        + _SIXTH * (below(k - 4) + 3 * below(k - 3) + 3 * below(k - 2) + below(k - 1))
        + one_point_at(k - 2) * one_point_at(3 * g - 2 - k)
    )
    return rhs / (2 * k + 1)


def genus_row(g: int, row_below: Sequence[Fraction] | None = None) -> tuple[Fraction, ...]:
    """Full row (<tau_0 tau_{3g-1}>, ..., <tau_{3g-1} tau_0>) for one genus.

    Genus 1 returns the seed row; for g >= 2 the complete genus g-1 row is
    required.  Entry 0 is the string-equation endpoint one_point(g).
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if g == 1:
        seed = genus1_seed()
        # k=2 is the same unordered correlator <tau_0 tau_2> as k=0
        return (seed[(1, 0)], seed[(1, 1)], seed[(1, 0)])
    if row_below is None or len(row_below) != 3 * (g - 1):
        raise ValueError(f"genus {g} row needs the complete genus {g - 1} row")
    row = [one_point(g)]
    for k in range(1, 3 * g):
        row.append(_step(g, k, row[-1], row_below))
    return tuple(row)


def two_point_recursive(g: int, k: int, table: "TwoPointTable | None" = None) -> Fraction:
    """<tau_k tau_{3g-1-k}> computed by the genus recursion.

    For g >= 2 the table must be complete through genus g-1 (genus 1 needs no
    table).  If the table already holds genus g the stored value is returned;
    otherwise the genus-g row is advanced from k = 0 without mutating the
    table.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if not 0 <= k <= 3 * g - 1:
        raise ValueError(f"k must be in 0..{3 * g - 1} at genus {g}, got {k}")
    if g == 1:
        return genus_row(1)[k]
    if table is None or table.max_genus_complete < g - 1:
        have = 0 if table is None else table.max_genus_complete
        raise ValueError(
            f"recursion at genus {g} needs a table complete through genus {g - 1}, "
            f"have {have}"
        )
    if table.max_genus_complete >= g:
        return table.value(g, k)
    row_below = table.row(g - 1)
    value = one_point(g)
    for kk in range(1, k + 1):
        value = _step(g, kk, value, row_below)
    return value


def build_table(g_max: int) -> "TwoPointTable":
    """Complete two-point table for every genus 1..g_max.  Deterministic."""
    if g_max < 1:
        raise ValueError(f"g_max must be >= 1, got {g_max}")
    rows: dict[int, tuple[Fraction, ...]] = {}
    row: tuple[Fraction, ...] | None = None
    for g in range(1, g_max + 1):
        row = genus_row(g, row)
        rows[g] = row
    return TwoPointTable(rows)


class TableValidationError(ValueError):
    """A serialized two-point table failed format or invariant checks."""


class TwoPointTable:
    """Immutable map (g, k) -> <tau_k tau_{3g-1-k}>, complete per genus.

    Completeness is tracked per whole genus: genera form a contiguous block
    1..max_genus_complete and each carries its full k = 0..3g-1 row.  Values
    already published never change; extending a table means building a new
    one.  Concurrent reads are safe.
    """

    def __init__(self, rows: dict[int, Sequence[Fraction]]):
        genera = sorted(rows)
        if genera != list(range(1, len(genera) + 1)):
            raise ValueError("table genera must be contiguous starting at 1")
        for g in genera:
            if len(rows[g]) != 3 * g:
                raise ValueError(f"genus {g} row must have {3 * g} entries")
        self._rows = {g: tuple(rows[g]) for g in genera}

    @property
    def max_genus_complete(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def row(self, g: int) -> tuple[Fraction, ...]:
        if g not in self._rows:
            raise KeyError(f"genus {g} not in table (complete through {self.max_genus_complete})")
        return self._rows[g]

    def value(self, g: int, k: int) -> Fraction:
        row = self.row(g)
        if not 0 <= k <= 3 * g - 1:
            raise ValueError(f"k must be in 0..{3 * g - 1} at genus {g}, got {k}")
        return row[k]

    def value_or_zero(self, g: int, k: int) -> Fraction:
        """Stored value, or exact 0 for any index outside the table."""
        if g < 1 or g > self.max_genus_complete or k < 0 or k > 3 * g - 1:
            return ZERO
        return self._rows[g][k]

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """All ((g, k), value) pairs sorted by (g, k)."""
        for g in range(1, self.max_genus_complete + 1):
            for k, v in enumerate(self._rows[g]):
                yield (g, k), v

    def validate(self) -> None:
        """Check positivity, symmetry, and both endpoint identities.

        Raises :class:`TableValidationError` at the first violated invariant;
        a table that passes is fit to serve as a trusted cache.
        """
        for g in range(1, self.max_genus_complete + 1):
            row = self._rows[g]
            anchor = one_point(g)
            if row[0] != anchor:
                raise TableValidationError(
                    f"genus {g}: string endpoint is {rational_str(row[0])}, "
                    f"expected {rational_str(anchor)}"
                )
            if row[1] != (2 * g - 1) * anchor:
                raise TableValidationError(
                    f"genus {g}: dilaton endpoint is {rational_str(row[1])}, "
                    f"expected {rational_str((2 * g - 1) * anchor)}"
                )
            for k, v in enumerate(row):
                if v <= 0:
                    raise TableValidationError(f"({g},{k}): non-positive value {rational_str(v)}")
                if v != row[3 * g - 1 - k]:
                    raise TableValidationError(
                        f"({g},{k}): symmetry broken, {rational_str(v)} != "
                        f"{rational_str(row[3 * g - 1 - k])}"
                    )

    def serialize(self) -> str:
        lines = [TABLE_HEADER]
        for (g, k), v in self.items():
            lines.append(f"{g}\t{k}\t{rational_str(v)}")
        return "\n".join(lines) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.serialize(), encoding="utf-8")

    @classmethod
    def deserialize(cls, text: str) -> "TwoPointTable":
        """Parse and fully validate a serialized table.

        Strict: canonical rationals only, entries sorted by (g, k), contiguous
        complete genera, and all semantic invariants of :meth:`validate`.
        """
        lines = text.splitlines()
        if not lines or lines[0] != TABLE_HEADER:
            raise TableValidationError(f"missing or unknown header (expected {TABLE_HEADER!r})")
        rows: dict[int, dict[int, Fraction]] = {}
        last = (0, 0)
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split("\t")
            if len(parts) != 3:
                raise TableValidationError(f"line {lineno}: expected 'g<TAB>k<TAB>value'")
            try:
                g, k = int(parts[0]), int(parts[1])
                v = parse_rational(parts[2])
            except ValueError as exc:
                raise TableValidationError(f"line {lineno}: {exc}") from exc
            if g < 1 or not 0 <= k <= 3 * g - 1:
                raise TableValidationError(f"line {lineno}: index ({g},{k}) out of range")
            if (g, k) <= last:
                raise TableValidationError(f"line {lineno}: entries not sorted by (g, k)")
            last = (g, k)
            rows.setdefault(g, {})[k] = v
        genera = sorted(rows)
        if genera != list(range(1, len(genera) + 1)):
            raise TableValidationError("genera are not a contiguous block starting at 1")
        full: dict[int, tuple[Fraction, ...]] = {}
        for g in genera:
            if sorted(rows[g]) != list(range(3 * g)):
                raise TableValidationError(f"genus {g}: row incomplete")
            full[g] = tuple(rows[g][k] for k in range(3 * g))
        table = cls(full)
        table.validate()
        return table

    @classmethod
    def load(cls, path: str | Path) -> "TwoPointTable":
        return cls.deserialize(Path(path).read_text(encoding="utf-8"))
