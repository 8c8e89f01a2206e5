"""Enlarging a set L(m x n) by one extra matrix Z.

A string x of length n is a usable extension row when it falls outside every
row type of the construction, differs from the first row, and shares no
prefix/suffix border with the first row.  Stacking the first row above m-1
copies of x gives a matrix Z that is non-overlapping with the whole set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceLimitError
from .overlap import VerifyReport, matrices_non_overlapping, verify_set
from .setgen import DEFAULT_SET_LIMIT, BinaryMatrix, RowKind, SetSpec, anchor_row, classify_row, enumerate_set
from .words import check_bits, enumerate_dyck, is_type_alpha, strings_overlap

DEFAULT_SCAN_LIMIT = 24


@dataclass(frozen=True)
class ExpansionCandidate:
    x: str
    kind: RowKind
    nonoverlap_ok: bool

    @property
    def valid(self) -> bool:
        return self.kind is RowKind.OTHER and self.nonoverlap_ok


def _descending(n: int, limit: int) -> Iterator[str]:
    if n > limit:
        raise ResourceLimitError(f"exhaustive scan of length {n} exceeds limit {limit}")
    for value in range((1 << n) - 1, -1, -1):
        yield format(value, f"0{n}b")


def candidate(spec: SetSpec, x: str) -> ExpansionCandidate:
    check_bits(x, "x")
    first = anchor_row(spec)
    return ExpansionCandidate(x, classify_row(x, spec), strings_overlap(x, first) is None)


def check_expansion_string(spec: SetSpec, x: str) -> None:
    """Raise ValueError naming the first property x fails."""
    check_bits(x, "x")
    if len(x) != spec.n:
        raise ValueError(f"x must have length {spec.n}, got {len(x)}")
    first = anchor_row(spec)
    if x == first:
        raise ValueError("x equals the first row")
    kind = classify_row(x, spec)
    if kind is not RowKind.OTHER:
        raise ValueError(f"property 1 violated: x is a {kind} row")
    ov = strings_overlap(x, first)
    if ov is not None:
        raise ValueError(f"property 2 violated: x and the first row overlap ({ov.direction}, k={ov.k})")


def find_expansion_strings(spec: SetSpec, limit: int = DEFAULT_SCAN_LIMIT) -> list[str]:
    first = anchor_row(spec)
    return [
        x
        for x in _descending(spec.n, limit)
        if x != first and classify_row(x, spec) is RowKind.OTHER and strings_overlap(x, first) is None
    ]


def find_compatible_rows(spec: SetSpec, limit: int = DEFAULT_SCAN_LIMIT) -> list[tuple[str, RowKind]]:
    """Every string of length n other than the first row that is non-overlapping with it."""
    first = anchor_row(spec)
    return [
        (s, classify_row(s, spec))
        for s in _descending(spec.n, limit)
        if s != first and strings_overlap(s, first) is None
    ]


def build_z(spec: SetSpec, x: str) -> BinaryMatrix:
    check_expansion_string(spec, x)
    return BinaryMatrix((anchor_row(spec),) + (x,) * (spec.m - 1))


def verify_expansion(spec: SetSpec, x: str, limit: int = DEFAULT_SET_LIMIT) -> VerifyReport:
    """Run the set verifier over L(m x n) with Z appended as the last member."""
    z = build_z(spec, x)
    members = list(enumerate_set(spec, limit=limit))
    return verify_set(members + [z])


def z_is_self_non_overlapping(spec: SetSpec, x: str) -> bool:
    z = build_z(spec, x)
    return matrices_non_overlapping(z, z) is None


def sweep_anchors(n: int, limit: int = DEFAULT_SCAN_LIMIT) -> list[tuple[str, int]]:
    """For each admissible first row of length n, the number of usable x strings.

    Anchors are all Dyck words of length n-2 (even n) or all type-alpha words
    of length n-1 (odd n).
    """
    if n % 2 == 0:
        anchors = enumerate_dyck(n - 2)
    else:
        anchors = [v for v in enumerate_dyck(n - 1) if is_type_alpha(v)]
    out = []
    for a in anchors:
        spec = SetSpec(2, n, a)
        out.append((anchor_row(spec), len(find_expansion_strings(spec, limit))))
    return out
