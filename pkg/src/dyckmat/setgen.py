"""Construction of the matrix sets L(m x n) from Dyck words.

Every matrix of a set shares a fixed first row built from a type-alpha Dyck
word.  The remaining rows are drawn from a small family of row types:

even n (first row ``1u0``, u a Dyck word of length n-2)
    T1 ``x``   x Dyck of length n, x != first row
    T2 ``11w`` w Dyck of length n-2, w != u
    T3 ``w00`` w != u
    T4 ``01w`` w != u
    T5 ``0w0`` any w
    middle rows use T1-T5, the last row T1-T3.

odd n (first row ``1v``, v a type-alpha Dyck word of length n-1)
    T6 ``1w``  w Dyck of length n-1, w != v
    T7 ``w0``  w != v
    T8 ``0w``  any w
    middle rows use T6-T8, the last row T6-T7.

The row-type exclusion for odd n compares against v (length n-1), the only
length-consistent reading.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .words import DEFAULT_DYCK_LIMIT, check_bits, enumerate_dyck, is_dyck, is_type_alpha

DEFAULT_SET_LIMIT = 10**6


class RowKind(enum.Enum):
    ALPHA = "Alpha"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


EVEN_MIDDLE = (RowKind.T1, RowKind.T2, RowKind.T3, RowKind.T4, RowKind.T5)
EVEN_LAST = (RowKind.T1, RowKind.T2, RowKind.T3)
ODD_MIDDLE = (RowKind.T6, RowKind.T7, RowKind.T8)
ODD_LAST = (RowKind.T6, RowKind.T7)


@dataclass(frozen=True)
class SetSpec:
    """Parameters fixing one concrete set L(m x n).

    ``anchor`` is u (even n, length n-2, first row ``1u0``) or v (odd n,
    type-alpha of length n-1, first row ``1v``).  Pass ``strict=False`` to
    accept an anchor that is not a Dyck word; classification then still works
    and is useful for probing first rows that fall outside the construction.
    """

    m: int
    n: int
    anchor: str
    strict: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        check_bits(self.anchor, "anchor")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.n % 2 == 0:
            if self.n < 4:
                raise ValueError(f"even n must be >= 4, got {self.n}")
            if len(self.anchor) != self.n - 2:
                raise ValueError(f"even n={self.n} needs an anchor of length {self.n - 2}")
            if self.strict and not is_dyck(self.anchor):
                raise ValueError(f"anchor {self.anchor!r} is not a Dyck word")
        else:
            if self.n < 5:
                raise ValueError(f"odd n must be >= 5, got {self.n}")
            if len(self.anchor) != self.n - 1:
                raise ValueError(f"odd n={self.n} needs an anchor of length {self.n - 1}")
            if self.strict and not is_type_alpha(self.anchor):
                raise ValueError(f"anchor {self.anchor!r} is not a type-alpha Dyck word")

    @classmethod
    def default(cls, m: int, n: int) -> "SetSpec":
        """Anchor ``1^k 0^k`` of the right length for the parity of n."""
        k = (n - 2) // 2 if n % 2 == 0 else (n - 1) // 2
        return cls(m, n, "1" * k + "0" * k)

    @classmethod
    def from_first_row(cls, m: int, n: int, first_row: str, strict: bool = True) -> "SetSpec":
        check_bits(first_row, "first row")
        if len(first_row) != n:
            raise ValueError(f"first row must have length {n}")
        if n % 2 == 0:
            if not (first_row.startswith("1") and first_row.endswith("0")):
                raise ValueError(f"even first row must have the form 1u0: {first_row!r}")
            return cls(m, n, first_row[1:-1], strict=strict)
        if not first_row.startswith("1"):
            raise ValueError(f"odd first row must have the form 1v: {first_row!r}")
        return cls(m, n, first_row[1:], strict=strict)

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"

    @property
    def middle_kinds(self) -> tuple[RowKind, ...]:
        return EVEN_MIDDLE if self.n % 2 == 0 else ODD_MIDDLE

    @property
    def last_kinds(self) -> tuple[RowKind, ...]:
        return EVEN_LAST if self.n % 2 == 0 else ODD_LAST

    def with_m(self, m: int) -> "SetSpec":
        return SetSpec(m, self.n, self.anchor, strict=self.strict)


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[str, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a matrix needs at least one row")
        for r in rows:
            check_bits(r, "matrix row")
        if len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("matrix rows must be non-empty and of equal length")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, i: int) -> str:
        return self.rows[i]

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(tuple("".join(col) for col in zip(*self.rows)))

    def to_text(self) -> str:
        return "".join(r + "\n" for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        return cls(tuple(line.strip() for line in text.splitlines() if line.strip()))

    def __str__(self) -> str:
        return self.to_text()


def parse_matrices(text: str) -> list[BinaryMatrix]:
    """Parse matrices written in text form and separated by blank lines."""
    out, block = [], []
    for line in text.splitlines():
        line = line.strip()
        if line:
            block.append(line)
        elif block:
            out.append(BinaryMatrix(tuple(block)))
            block = []
    if block:
        out.append(BinaryMatrix(tuple(block)))
    return out


def matrix_to_json(a: BinaryMatrix, spec: SetSpec) -> str:
    return json.dumps(
        {"m": a.m, "n": a.n, "parity": spec.parity, "anchor": spec.anchor, "rows": list(a.rows)}
    )


def anchor_row(spec: SetSpec) -> str:
    if spec.n % 2 == 0:
        return "1" + spec.anchor + "0"
    return "1" + spec.anchor


def classify_row(row: str, spec: SetSpec) -> RowKind:
    """Row type of ``row``; the lowest-numbered type wins if several match."""
    check_bits(row, "row")
    if len(row) != spec.n:
        raise ValueError(f"row length {len(row)} does not match n={spec.n}")
    if row == anchor_row(spec):
        return RowKind.ALPHA
    base = spec.anchor
    if spec.n % 2 == 0:
        if is_dyck(row):
            return RowKind.T1
        if row[:2] == "11" and is_dyck(row[2:]) and row[2:] != base:
            return RowKind.T2
        if row[-2:] == "00" and is_dyck(row[:-2]) and row[:-2] != base:
            return RowKind.T3
        if row[:2] == "01" and is_dyck(row[2:]) and row[2:] != base:
            return RowKind.T4
        if row[0] == "0" and row[-1] == "0" and is_dyck(row[1:-1]):
            return RowKind.T5
    else:
        if row[0] == "1" and is_dyck(row[1:]) and row[1:] != base:
            return RowKind.T6
        if row[-1] == "0" and is_dyck(row[:-1]) and row[:-1] != base:
            return RowKind.T7
        if row[0] == "0" and is_dyck(row[1:]):
            return RowKind.T8
    return RowKind.OTHER


def rows_of_kind(kind: RowKind, spec: SetSpec, limit: int = DEFAULT_DYCK_LIMIT) -> list[str]:
    """Generate every row matching the pattern of ``kind``, in Dyck enumeration order."""
    n, base = spec.n, spec.anchor
    if kind is RowKind.ALPHA:
        return [anchor_row(spec)]
    if spec.n % 2 == 0:
        if kind is RowKind.T1:
            first = anchor_row(spec)
            return [w for w in enumerate_dyck(n, limit) if w != first]
        inner = enumerate_dyck(n - 2, limit)
        if kind is RowKind.T2:
            return ["11" + w for w in inner if w != base]
        if kind is RowKind.T3:
            return [w + "00" for w in inner if w != base]
        if kind is RowKind.T4:
            return ["01" + w for w in inner if w != base]
        if kind is RowKind.T5:
            return ["0" + w + "0" for w in inner]
    else:
        inner = enumerate_dyck(n - 1, limit)
        if kind is RowKind.T6:
            return ["1" + w for w in inner if w != base]
        if kind is RowKind.T7:
            return [w + "0" for w in inner if w != base]
        if kind is RowKind.T8:
            return ["0" + w for w in inner]
    return []


def _choices(kinds: Iterable[RowKind], spec: SetSpec, limit: int) -> list[str]:
    out: dict[str, None] = {}
    for kind in kinds:
        for row in rows_of_kind(kind, spec, limit):
            out.setdefault(row, None)
    return list(out)


def middle_row_choices(spec: SetSpec, limit: int = DEFAULT_DYCK_LIMIT) -> list[str]:
    return _choices(spec.middle_kinds, spec, limit)


def last_row_choices(spec: SetSpec, limit: int = DEFAULT_DYCK_LIMIT) -> list[str]:
    return _choices(spec.last_kinds, spec, limit)


def set_size(spec: SetSpec) -> int:
    """Cardinality of the set from the choice-list lengths (no enumeration)."""
    return len(middle_row_choices(spec)) ** (spec.m - 2) * len(last_row_choices(spec))


def enumerate_set(spec: SetSpec, limit: int = DEFAULT_SET_LIMIT) -> Iterator[BinaryMatrix]:
    """Yield every matrix of the set once, big-endian over rows 2..m."""
    size = set_size(spec)
    if size > limit:
        raise ResourceLimitError(f"set has {size} matrices, limit is {limit}")
    first = anchor_row(spec)
    middle = middle_row_choices(spec)
    last = last_row_choices(spec)
    for mids in itertools.product(middle, repeat=spec.m - 2):
        for tail in last:
            yield BinaryMatrix((first, *mids, tail))


def _radices(spec: SetSpec) -> tuple[list[str], list[str]]:
    return middle_row_choices(spec), last_row_choices(spec)


def unrank(spec: SetSpec, index: int) -> BinaryMatrix:
    middle, last = _radices(spec)
    size = len(middle) ** (spec.m - 2) * len(last)
    if not 0 <= index < size:
        raise ValueError(f"index {index} out of range for a set of size {size}")
    index, t = divmod(index, len(last))
    rows = [last[t]]
    for _ in range(spec.m - 2):
        index, d = divmod(index, len(middle))
        rows.append(middle[d])
    rows.append(anchor_row(spec))
    return BinaryMatrix(tuple(reversed(rows)))


def rank(a: BinaryMatrix, spec: SetSpec) -> int:
    if not validate_member(a, spec):
        raise ValueError("matrix is not a member of the set")
    middle, last = _radices(spec)
    pos_mid = {r: i for i, r in enumerate(middle)}
    index = 0
    for row in a.rows[1:-1]:
        index = index * len(middle) + pos_mid[row]
    return index * len(last) + last.index(a.rows[-1])


@dataclass(frozen=True)
class Membership:
    ok: bool
    row: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_member(a: BinaryMatrix, spec: SetSpec) -> Membership:
    """Check membership; on failure report the first offending row (1-based) and rule."""
    if (a.m, a.n) != (spec.m, spec.n):
        raise ValueError(f"matrix is {a.m}x{a.n}, spec is {spec.m}x{spec.n}")
    first = anchor_row(spec)
    if a.rows[0] != first:
        return Membership(False, 1, f"first row must be {first}")
    for i, row in enumerate(a.rows[1:], start=2):
        kind = classify_row(row, spec)
        if kind is RowKind.ALPHA:
            return Membership(False, i, "first row repeated")
        allowed = spec.last_kinds if i == spec.m else spec.middle_kinds
        if kind not in allowed:
            if kind is RowKind.OTHER:
                return Membership(False, i, "row matches no allowed type")
            where = "last row" if i == spec.m else "middle row"
            return Membership(False, i, f"type {kind.value[1:]} forbidden in {where}")
    return Membership(True)
