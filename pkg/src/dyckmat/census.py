"""Closed-form cardinalities, the published table, and enumeration cross-checks."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass

from .errors import ResourceLimitError
from .setgen import DEFAULT_SET_LIMIT, SetSpec, enumerate_set
from .words import catalan, check_width

# Published values, m -> n -> printed entry.  Scientific entries are kept as
# (two-digit mantissa, exponent of the leading digit): 6.2*10^3 -> (62, 3).
PUBLISHED: dict[tuple[int, int], int | tuple[int, int]] = {}
_ROWS = {
    2: [1, 2, 6, 8, 21, 26, 67],
    3: [2, 4, 54, 104, 630, 1040, (62, 3)],
    4: [4, 8, 486, 1352, (19, 4), (41, 4), (59, 5)],
    5: [8, 16, 4374, (17, 4), (57, 5), (16, 6), (55, 7)],
    6: [16, 32, (39, 4), (22, 5), (17, 7), (66, 7), (52, 9)],
    7: [32, 64, (35, 5), (30, 6), (51, 8), (27, 9), (49, 11)],
    8: [64, 128, (31, 6), (38, 7), (15, 10), (11, 11), (46, 13)],
    9: [128, 256, (28, 7), (50, 8), (46, 11), (42, 12), (43, 15)],
    10: [256, 512, (26, 8), (65, 9), (14, 13), (17, 14), (41, 17)],
}
for _m, _vals in _ROWS.items():
    for _n, _v in zip(range(4, 11), _vals):
        PUBLISHED[(_m, _n)] = _v

# Published n=5 column reads 2^(m-1); construction and formula give 4^(m-2)*2.
KNOWN_TABLE_ERRATA = frozenset((m, 5) for m in range(3, 11))


class Agreement(enum.Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    UNCHECKED = "unchecked"

    def __str__(self) -> str:
        return self.value


def cardinality_even(m: int, n: int, max_bits: int | None = None) -> int:
    if m < 2 or n < 4 or n % 2:
        raise ValueError(f"even cardinality needs m >= 2 and even n >= 4, got ({m}, {n})")
    big, small = catalan(n // 2), catalan((n - 2) // 2)
    middle = (big - 1) + (3 * small - 3) + small
    last = (big - 1) + (2 * small - 2)
    return check_width(middle ** (m - 2) * last, max_bits)


def cardinality_odd(m: int, n: int, max_bits: int | None = None) -> int:
    # The last factor uses C_{(n-1)/2}; C_{(n-2)/2} is not defined for odd n.
    if m < 2 or n < 5 or n % 2 == 0:
        raise ValueError(f"odd cardinality needs m >= 2 and odd n >= 5, got ({m}, {n})")
    c = catalan((n - 1) // 2)
    middle = (2 * c - 2) + c
    last = 2 * c - 2
    return check_width(middle ** (m - 2) * last, max_bits)


def cardinality(m: int, n: int, max_bits: int | None = None) -> int:
    if n % 2 == 0:
        return cardinality_even(m, n, max_bits)
    return cardinality_odd(m, n, max_bits)


def in_domain(m: int, n: int) -> bool:
    return m >= 2 and (n >= 4 if n % 2 == 0 else n >= 5)


def two_digit_forms(value: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Truncated and half-up rounded (mantissa, exponent) with two significant digits."""
    if value < 10:
        raise ValueError("two-digit forms need value >= 10")
    exp = len(str(value)) - 1
    unit = 10 ** (exp - 1)
    truncated = (value // unit, exp)
    mant = (2 * value + unit) // (2 * unit)
    rounded = (mant // 10, exp + 1) if mant == 100 else (mant, exp)
    return truncated, rounded


def table_agreement(value: int, printed: int | tuple[int, int]) -> str | None:
    """How ``value`` reproduces a printed entry: "exact", "truncated", "rounded" or None.

    The published table is not consistent about its scientific entries; some
    are truncated to two digits and some rounded, so either form counts.
    """
    if isinstance(printed, int):
        return "exact" if value == printed else None
    truncated, rounded = two_digit_forms(value)
    if printed == truncated:
        return "truncated"
    if printed == rounded:
        return "rounded"
    return None


def format_printed(printed: int | tuple[int, int] | None) -> str:
    if printed is None:
        return ""
    if isinstance(printed, int):
        return str(printed)
    mant, exp = printed
    return f"{mant // 10}.{mant % 10}e{exp}"


def format_sci(value: int) -> str:
    if value < 10**4:
        return str(value)
    return format_printed(two_digit_forms(value)[1])


@dataclass
class CountReport:
    m: int
    n: int
    formula_value: int | None
    enumerated_value: int | None = None
    table_value: int | tuple[int, int] | None = None
    agrees: Agreement = Agreement.UNCHECKED
    table_match: str | None = None
    note: str = ""

    @property
    def documented(self) -> bool:
        """True unless the report carries a discrepancy not in the errata list."""
        if self.agrees is Agreement.MISMATCH:
            return False
        if self.table_value is not None and self.formula_value is not None and self.table_match is None:
            return (self.m, self.n) in KNOWN_TABLE_ERRATA
        return True

    def as_row(self) -> dict[str, str]:
        return {
            "m": str(self.m),
            "n": str(self.n),
            "formula": "overflow" if self.formula_value is None else str(self.formula_value),
            "enumerated": "" if self.enumerated_value is None else str(self.enumerated_value),
            "table": format_printed(self.table_value),
            "agrees": str(self.agrees),
        }


def _annotate_table(report: CountReport) -> None:
    printed = PUBLISHED.get((report.m, report.n))
    report.table_value = printed
    if printed is None or report.formula_value is None:
        return
    report.table_match = table_agreement(report.formula_value, printed)
    if report.table_match is None:
        if (report.m, report.n) in KNOWN_TABLE_ERRATA:
            report.note = (
                f"published {format_printed(printed)} disagrees with formula {report.formula_value}; "
                "enumeration sides with the formula"
                if report.agrees is Agreement.MATCH
                else f"published {format_printed(printed)} disagrees with formula {report.formula_value}"
            )
        else:
            report.note = f"undocumented table mismatch: published {format_printed(printed)}"


def cross_check(spec: SetSpec, limit: int = DEFAULT_SET_LIMIT) -> CountReport:
    """Compare the closed form against a full enumeration of the set."""
    report = CountReport(spec.m, spec.n, cardinality(spec.m, spec.n))
    try:
        seen = set()
        for a in enumerate_set(spec, limit=limit):
            seen.add(a.rows)
        report.enumerated_value = len(seen)
    except ResourceLimitError:
        report.enumerated_value = None
    if report.enumerated_value is not None:
        report.agrees = (
            Agreement.MATCH if report.enumerated_value == report.formula_value else Agreement.MISMATCH
        )
    _annotate_table(report)
    return report


def emit_table(
    m_max: int, n_max: int, max_bits: int | None = None, enumerate_limit: int = 0
) -> list[CountReport]:
    """Formula grid for 2 <= m <= m_max and 4 <= n <= n_max.

    Cells whose set has at most ``enumerate_limit`` members are also counted
    by enumeration (default anchors).  Overflowing cells get ``formula_value``
    None instead of aborting the grid.
    """
    if m_max < 2 or n_max < 4:
        raise ValueError("need m_max >= 2 and n_max >= 4")
    cells = []
    for m in range(2, m_max + 1):
        for n in range(4, n_max + 1):
            if not in_domain(m, n):
                continue
            try:
                value = cardinality(m, n, max_bits)
            except OverflowError:
                cells.append(CountReport(m, n, None, note="overflow"))
                continue
            if enumerate_limit and value <= enumerate_limit:
                report = cross_check(SetSpec.default(m, n), limit=enumerate_limit)
            else:
                report = CountReport(m, n, value)
                _annotate_table(report)
            cells.append(report)
    return cells


def render_text(cells: list[CountReport]) -> str:
    ms = sorted({c.m for c in cells})
    ns = sorted({c.n for c in cells})
    by = {(c.m, c.n): c for c in cells}

    def cell(m: int, n: int) -> str:
        c = by.get((m, n))
        if c is None:
            return "-"
        if c.formula_value is None:
            return "overflow"
        mark = "" if c.documented and (c.table_value is None or c.table_match) else "*"
        return format_sci(c.formula_value) + mark

    header = ["m\\n"] + [str(n) for n in ns]
    body = [[str(m)] + [cell(m, n) for n in ns] for m in ms]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(s.rjust(w) for s, w in zip(r, widths)) for r in [header] + body]
    notes = [f"* ({c.m},{c.n}): {c.note}" for c in cells if c.note and c.note != "overflow"]
    return "\n".join(lines + notes) + "\n"


def render_csv(cells: list[CountReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["m", "n", "formula", "enumerated", "table", "agrees"], lineterminator="\n")
    writer.writeheader()
    for c in cells:
        writer.writerow(c.as_row())
    return buf.getvalue()


def compare_orientations(m: int, n: int) -> tuple[int | None, int | None]:
    """(|L(m x n)|, |L(n x m)|) by formula; None marks an out-of-domain orientation."""
    if not in_domain(m, n) and not in_domain(n, m):
        raise ValueError(f"neither ({m}, {n}) nor ({n}, {m}) is a valid size")
    return (
        cardinality(m, n) if in_domain(m, n) else None,
        cardinality(n, m) if in_domain(n, m) else None,
    )


__all__ = [
    "Agreement",
    "CountReport",
    "KNOWN_TABLE_ERRATA",
    "PUBLISHED",
    "cardinality",
    "cardinality_even",
    "cardinality_odd",
    "compare_orientations",
    "cross_check",
    "emit_table",
    "render_csv",
    "render_text",
    "table_agreement",
    "two_digit_forms",
]
