"""Rigid-translation overlap between equal-size binary matrices.

Offsets follow one convention throughout: ``(dr, dc)`` moves B down ``dr``
rows and right ``dc`` columns relative to A, so cell ``(i, j)`` of A lies
over cell ``(i - dr, j - dc)`` of B.  Two matrices overlap at an offset when
every cell of the control window (the intersection of the two footprints)
carries equal entries.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .setgen import BinaryMatrix


class Offset(NamedTuple):
    dr: int
    dc: int


VERTICAL = "vertical"
HORIZONTAL = "horizontal"
CORNER = "corner"
EQUAL = "equal"


@dataclass(frozen=True)
class OverlapWitness:
    offset: Offset
    window_rows: int
    window_cols: int

    @property
    def kind(self) -> str:
        dr, dc = self.offset
        if dr == 0 and dc == 0:
            return EQUAL
        if dc == 0:
            return VERTICAL
        if dr == 0:
            return HORIZONTAL
        return CORNER

    @classmethod
    def at(cls, offset: tuple[int, int], m: int, n: int) -> "OverlapWitness":
        dr, dc = offset
        return cls(Offset(dr, dc), m - abs(dr), n - abs(dc))


def offsets(m: int, n: int) -> Iterator[Offset]:
    """All offsets with a non-empty window, row-major ascending."""
    for dr in range(-(m - 1), m):
        for dc in range(-(n - 1), n):
            yield Offset(dr, dc)


def window_cells(m: int, n: int, off: tuple[int, int]) -> int:
    return (m - abs(off[0])) * (n - abs(off[1]))


def comparison_budget(m: int, n: int) -> int:
    """Total number of cell comparisons for one ordered pair over all nonzero offsets."""
    return sum(window_cells(m, n, o) for o in offsets(m, n)) - m * n


def _check_dims(a: BinaryMatrix, b: BinaryMatrix) -> None:
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError(f"dimension mismatch: {a.m}x{a.n} vs {b.m}x{b.n}")


def overlap_at(a: BinaryMatrix, b: BinaryMatrix, off: tuple[int, int]) -> bool:
    _check_dims(a, b)
    dr, dc = off
    m, n = a.m, a.n
    if not (abs(dr) < m and abs(dc) < n):
        raise ValueError(f"offset {off} out of range for {m}x{n}")
    for i in range(max(0, dr), min(m, m + dr)):
        for j in range(max(0, dc), min(n, n + dc)):
            if a.rows[i][j] != b.rows[i - dr][j - dc]:
                return False
    return True


def matrices_non_overlapping(
    a: BinaryMatrix, b: BinaryMatrix, self_check: bool | None = None
) -> OverlapWitness | None:
    """First overlap witness in row-major offset order, or None.

    ``self_check`` defaults to ``a == b``.  For a self check the trivial
    ``(0, 0)`` superposition is skipped; for two inputs that are supposed to
    be distinct it is tested like any other offset and reported as an
    ``equal`` witness when the matrices coincide.
    """
    _check_dims(a, b)
    if self_check is None:
        self_check = a == b
    for off in offsets(a.m, a.n):
        if self_check and off == (0, 0):
            continue
        if overlap_at(a, b, off):
            return OverlapWitness.at(off, a.m, a.n)
    return None


def overlap_witnesses(a: BinaryMatrix, b: BinaryMatrix, self_check: bool | None = None) -> list[OverlapWitness]:
    _check_dims(a, b)
    if self_check is None:
        self_check = a == b
    return [
        OverlapWitness.at(off, a.m, a.n)
        for off in offsets(a.m, a.n)
        if not (self_check and off == (0, 0)) and overlap_at(a, b, off)
    ]


@dataclass(frozen=True)
class Violation:
    a: int
    b: int
    witness: OverlapWitness


@dataclass
class VerifyReport:
    passed: bool
    checked_pairs: int
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "checked_pairs": self.checked_pairs,
            "violations": [
                {"a": v.a, "b": v.b, "dr": v.witness.offset.dr, "dc": v.witness.offset.dc, "kind": v.witness.kind}
                for v in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _dims(matrices: Sequence[BinaryMatrix]) -> tuple[int, int]:
    if not matrices:
        return 0, 0
    m, n = matrices[0].m, matrices[0].n
    for x in matrices:
        if (x.m, x.n) != (m, n):
            raise ValueError(f"dimension mismatch: {x.m}x{x.n} vs {m}x{n}")
    return m, n


def _pack(a: BinaryMatrix) -> int:
    # row-major, top-left cell is the most significant bit
    return int("".join(a.rows), 2)


def _window_mask(m: int, n: int, r0: int, c0: int, h: int, w: int) -> int:
    row = ((1 << w) - 1) << (n - c0 - w)
    mask = 0
    for i in range(r0, r0 + h):
        mask |= row << ((m - 1 - i) * n)
    return mask


def verify_set(matrices: Sequence[BinaryMatrix], fail_fast: bool = False) -> VerifyReport:
    """Check self non-overlap of every matrix and non-overlap of every pair.

    Each offset is handled as a hash join: the window of every matrix taken as
    A is looked up among the windows the matrices present as B.  A matrix is
    packed into one integer so that a window is a mask and a translation is a
    shift.  For each flagged
    pair only the first witness in row-major offset order is kept, so the
    report matches what ``matrices_non_overlapping`` returns pair by pair.
    Violations are sorted by (a, b) with self checks appearing as ``a == b``.
    """
    matrices = list(matrices)
    m, n = _dims(matrices)
    count = len(matrices)
    checked = count * (count + 1) // 2
    if count == 0:
        return VerifyReport(True, 0)
    packed = [_pack(x) for x in matrices]
    best: dict[tuple[int, int], Offset] = {}
    for off in offsets(m, n):
        dr, dc = off
        h, w = m - abs(dr), n - abs(dc)
        a_mask = _window_mask(m, n, max(0, dr), max(0, dc), h, w)
        b_mask = _window_mask(m, n, max(0, -dr), max(0, -dc), h, w)
        # cell (i, j) of A sits over cell (i - dr, j - dc) of B: a uniform bit shift
        shift = dr * n + dc
        index: dict[int, list[int]] = defaultdict(list)
        for j, bits in enumerate(packed):
            key = bits & b_mask
            index[key >> shift if shift >= 0 else key << -shift].append(j)
        for i, bits in enumerate(packed):
            for j in index.get(bits & a_mask, ()):
                if i == j and off == (0, 0):
                    continue
                # a pair (i, j) at off is the pair (j, i) at -off
                key, o = ((i, j), off) if i <= j else ((j, i), Offset(-dr, -dc))
                if key not in best or o < best[key]:
                    best[key] = o
        if fail_fast and best:
            break
    violations = [Violation(a, b, OverlapWitness.at(o, m, n)) for (a, b), o in sorted(best.items())]
    if fail_fast:
        violations = violations[:1]
    return VerifyReport(not violations, checked, violations)


def verify_set_pairwise(matrices: Sequence[BinaryMatrix], fail_fast: bool = False) -> VerifyReport:
    """Reference implementation of :func:`verify_set` by direct pair scanning."""
    matrices = list(matrices)
    _dims(matrices)
    count = len(matrices)
    violations = []
    for i in range(count):
        for j in range(i, count):
            w = matrices_non_overlapping(matrices[i], matrices[j], self_check=(i == j))
            if w is not None:
                violations.append(Violation(i, j, w))
                if fail_fast:
                    return VerifyReport(False, count * (count + 1) // 2, violations)
    return VerifyReport(not violations, count * (count + 1) // 2, violations)
