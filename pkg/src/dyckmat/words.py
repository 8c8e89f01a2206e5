"""Dyck words, Catalan numbers and one-dimensional prefix/suffix overlap.

Bit strings are plain ``str`` objects over ``"0"``/``"1"``; the leftmost
character is position 1.  A ``1`` is an up step, a ``0`` a down step.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal

from .errors import ResourceLimitError

DEFAULT_DYCK_LIMIT = 32

PREFIX_X_SUFFIX_Y = "prefix_x_suffix_y"
PREFIX_Y_SUFFIX_X = "prefix_y_suffix_x"


def check_bits(s: str, name: str = "bit string") -> str:
    if not isinstance(s, str) or any(c not in "01" for c in s):
        raise ValueError(f"{name} must contain only '0' and '1': {s!r}")
    return s


def catalan(k: int, max_bits: int | None = None) -> int:
    """Return the k-th Catalan number, ``binom(2k, k) / (k + 1)``, exactly.

    ``max_bits`` emulates a fixed integer width: if the result does not fit in
    that many bits an ``OverflowError`` is raised.
    """
    if k < 0:
        raise ValueError(f"catalan index must be non-negative, got {k}")
    value = comb(2 * k, k) // (k + 1)
    check_width(value, max_bits)
    return value


def check_width(value: int, max_bits: int | None) -> int:
    if max_bits is not None and value.bit_length() > max_bits:
        raise OverflowError(f"value needs {value.bit_length()} bits, limit is {max_bits}")
    return value


def is_dyck(s: str) -> bool:
    if not s or len(s) % 2:
        return False
    height = 0
    for c in s:
        if c == "1":
            height += 1
        elif c == "0":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def is_type_alpha(s: str) -> bool:
    """Dyck word whose path returns to height zero only at its last step."""
    if not is_dyck(s):
        return False
    height = 0
    for c in s[:-1]:
        height += 1 if c == "1" else -1
        if height == 0:
            return False
    return True


def type_alpha_from(u: str) -> str:
    if not is_dyck(u):
        raise ValueError(f"not a Dyck word: {u!r}")
    return "1" + u + "0"


def iter_dyck(length: int, limit: int = DEFAULT_DYCK_LIMIT) -> Iterator[str]:
    """Yield the Dyck words of ``length`` in descending binary order."""
    if length <= 0 or length % 2:
        raise ValueError(f"Dyck word length must be even and positive, got {length}")
    if length > limit:
        raise ResourceLimitError(f"Dyck length {length} exceeds limit {limit}")
    half = length // 2

    def walk(prefix: list[str], ones: int, zeros: int) -> Iterator[str]:
        if zeros == half:
            yield "".join(prefix)
            return
        if ones < half:
            prefix.append("1")
            yield from walk(prefix, ones + 1, zeros)
            prefix.pop()
        if zeros < ones:
            prefix.append("0")
            yield from walk(prefix, ones, zeros + 1)
            prefix.pop()

    yield from walk([], 0, 0)


def enumerate_dyck(length: int, limit: int = DEFAULT_DYCK_LIMIT) -> list[str]:
    return list(iter_dyck(length, limit))


@dataclass(frozen=True)
class Overlap:
    """A length-``k`` border shared by two strings.

    ``direction`` says which side supplies the prefix: with
    ``"prefix_x_suffix_y"`` the first ``k`` symbols of x equal the last ``k``
    symbols of y.
    """

    k: int
    direction: Literal["prefix_x_suffix_y", "prefix_y_suffix_x"]


def strings_overlap(x: str, y: str) -> Overlap | None:
    """Smallest proper prefix/suffix match between x and y, in either direction.

    Returns ``None`` when x and y are non-overlapping strings.
    """
    if not x or not y:
        raise ValueError("strings_overlap needs non-empty strings")
    for k in range(1, min(len(x), len(y))):
        if x[:k] == y[-k:]:
            return Overlap(k, PREFIX_X_SUFFIX_Y)
        if y[:k] == x[-k:]:
            return Overlap(k, PREFIX_Y_SUFFIX_X)
    return None


def is_self_non_overlapping(x: str) -> bool:
    return strings_overlap(x, x) is None
