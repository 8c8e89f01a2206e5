import pytest

from dyckmat.errors import ResourceLimitError
from dyckmat.expand import (
    build_z,
    candidate,
    check_expansion_string,
    find_compatible_rows,
    find_expansion_strings,
    sweep_anchors,
    verify_expansion,
    z_is_self_non_overlapping,
)
from dyckmat.overlap import matrices_non_overlapping
from dyckmat.setgen import BinaryMatrix, RowKind, SetSpec, anchor_row, classify_row

from oracles import all_strings, brute_borders

SPEC8 = SetSpec(3, 8, "101010")


def test_all_ones_prefix_string_is_found():
    xs = find_expansion_strings(SPEC8)
    assert "11111100" in xs
    assert anchor_row(SPEC8) not in xs
    assert xs == sorted(xs, reverse=True)


def test_border_blocks_extension_string():
    spec = SetSpec.from_first_row(3, 8, "11100010", strict=False)
    assert "11111100" not in find_expansion_strings(spec)
    with pytest.raises(ValueError, match="property 2"):
        build_z(spec, "11111100")


@pytest.mark.parametrize("spec", [SPEC8, SetSpec(2, 6, "1100"), SetSpec(2, 7, "111000"), SetSpec(2, 7, "110100")], ids=str)
def test_expansion_strings_against_scan(spec):
    first = anchor_row(spec)
    expected = [
        x
        for x in sorted(all_strings(spec.n), reverse=True)
        if x != first and classify_row(x, spec) is RowKind.OTHER and not brute_borders(x, first)
    ]
    xs = find_expansion_strings(spec)
    assert xs == expected
    compat = {s for s, kind in find_compatible_rows(spec) if kind is RowKind.OTHER}
    assert set(xs) == compat
    for x in xs:
        assert x.startswith("1") and x.endswith("0")
        assert candidate(spec, x).valid


def test_build_z():
    z = build_z(SPEC8.with_m(5), "11111100")
    assert z.rows == ("11010100",) + ("11111100",) * 4
    assert build_z(SPEC8.with_m(2), "11111100").rows == ("11010100", "11111100")
    with pytest.raises(ValueError, match="first row"):
        build_z(SPEC8.with_m(4), "11010100")
    with pytest.raises(ValueError, match="property 1"):
        build_z(SPEC8, "10101010")
    with pytest.raises(ValueError):
        build_z(SPEC8, "1111110")


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_z_self_non_overlapping(m):
    spec = SPEC8.with_m(m)
    for x in find_expansion_strings(spec):
        assert z_is_self_non_overlapping(spec, x)


@pytest.mark.parametrize("m", [3, 4])
def test_verify_expansion(m):
    report = verify_expansion(SPEC8.with_m(m), "11111100")
    assert report.passed


def test_verify_expansion_preconditions():
    with pytest.raises(ValueError, match="first row"):
        verify_expansion(SPEC8, "11010100")
    spec = SetSpec(3, 6, "1100")
    with pytest.raises(ValueError, match="property 2"):
        verify_expansion(spec, "000000")


def test_every_candidate_expands_small_sets():
    for spec in [SetSpec(3, 8, "101010"), SetSpec(3, 8, "111000"), SetSpec(3, 7, "111000"), SetSpec(3, 6, "1100")]:
        for x in find_expansion_strings(spec):
            assert verify_expansion(spec, x).passed, (spec, x)


def test_compatible_rows_family():
    spec = SetSpec(2, 8, "111000")
    rows = dict(find_compatible_rows(spec))
    assert "11111010" in rows
    assert all(s.startswith("1") for s in rows)
    first = anchor_row(spec)
    assert rows == {s: classify_row(s, spec) for s in all_strings(8) if s != first and not brute_borders(s, first)}


def test_compatible_rows_n4():
    assert find_compatible_rows(SetSpec(2, 4, "10")) == [("1010", RowKind.T1)]


def test_scan_guard():
    with pytest.raises(ResourceLimitError):
        find_expansion_strings(SPEC8, limit=6)


def test_sweep_anchors():
    sweep = dict(sweep_anchors(6))
    assert sweep == {"111000": 3, "110100": 0}
    # an anchor with no usable x at all: the extension is not always available
    spec = SetSpec(3, 6, "1010")
    assert find_expansion_strings(spec) == []
    check_expansion_string(SetSpec(2, 6, "1100"), find_expansion_strings(SetSpec(2, 6, "1100"))[0])


def test_added_z_really_extends_the_set():
    z = build_z(SPEC8, "11111100")
    assert matrices_non_overlapping(z, z) is None
    assert isinstance(z, BinaryMatrix)
