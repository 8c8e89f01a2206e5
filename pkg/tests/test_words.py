import pytest
from hypothesis import given, strategies as st

from dyckmat.errors import ResourceLimitError
from dyckmat.words import (
    catalan,
    enumerate_dyck,
    is_dyck,
    is_self_non_overlapping,
    is_type_alpha,
    strings_overlap,
    type_alpha_from,
)

from oracles import all_strings, brute_borders, brute_dyck, brute_is_dyck, catalan_recurrence

bits = st.text(alphabet="01", min_size=1, max_size=16)


@pytest.mark.parametrize("k, expected", [(0, 1), (2, 2), (4, 14)])
def test_catalan_examples(k, expected):
    assert catalan(k) == expected


def test_catalan_matches_recurrence():
    for k in range(40):
        assert catalan(k) == catalan_recurrence(k)


def test_catalan_overflow_guard():
    assert catalan(33, max_bits=64) == catalan(33)
    with pytest.raises(OverflowError):
        catalan(40, max_bits=64)
    with pytest.raises(ValueError):
        catalan(-1)


@pytest.mark.parametrize("s, expected", [("10", True), ("11001100", True), ("0110", False), ("", False), ("1", False)])
def test_is_dyck_examples(s, expected):
    assert is_dyck(s) is expected


def test_is_dyck_exhaustive():
    for n in range(0, 13):
        for s in all_strings(n):
            assert is_dyck(s) == brute_is_dyck(s), s


@pytest.mark.parametrize("s, expected", [("11100100", True), ("11110000", True), ("10101010", False), ("10", True)])
def test_is_type_alpha_examples(s, expected):
    assert is_type_alpha(s) is expected


@pytest.mark.parametrize("u, v", [("10", "1100"), ("110010", "11100100"), ("111000", "11110000")])
def test_type_alpha_from(u, v):
    assert type_alpha_from(u) == v
    assert is_type_alpha(v)


def test_type_alpha_from_rejects_non_dyck():
    with pytest.raises(ValueError):
        type_alpha_from("01")


def test_enumerate_dyck_small():
    assert enumerate_dyck(2) == ["10"]
    assert enumerate_dyck(4) == ["1100", "1010"]
    assert len(enumerate_dyck(8)) == 14


@pytest.mark.parametrize("length", range(2, 17, 2))
def test_enumerate_dyck_against_filter(length):
    got = enumerate_dyck(length)
    assert got == brute_dyck(length)
    assert len(got) == catalan(length // 2)


@pytest.mark.parametrize("length", [0, 3, -2])
def test_enumerate_dyck_bad_length(length):
    with pytest.raises(ValueError):
        enumerate_dyck(length)


def test_enumerate_dyck_guard():
    with pytest.raises(ResourceLimitError):
        enumerate_dyck(34)
    assert len(enumerate_dyck(6, limit=6)) == 5


def test_type_alpha_words_are_self_non_overlapping():
    for n in range(1, 13):
        for s in all_strings(n):
            if is_type_alpha(s):
                assert is_dyck(s)
                assert is_self_non_overlapping(s)


def test_type_alpha_from_every_dyck_word():
    for length in range(2, 13, 2):
        for u in enumerate_dyck(length):
            assert is_type_alpha(type_alpha_from(u))


def test_dyck_suffixes_lean_down():
    for length in range(2, 13, 2):
        for v in enumerate_dyck(length):
            for i in range(1, len(v)):
                d = v[i:]
                assert d.count("1") <= d.count("0")


def test_strings_overlap_examples():
    assert strings_overlap("11010100", "11111100") is None
    ov = strings_overlap("11100010", "11111100")
    assert ov is not None and ov.k == 5 and ov.direction == "prefix_x_suffix_y"
    assert strings_overlap("10", "10") is None


def test_strings_overlap_rejects_empty():
    with pytest.raises(ValueError):
        strings_overlap("", "1")


@pytest.mark.parametrize("s, expected", [("11100100", True), ("1010", False), ("1100", True)])
def test_self_non_overlapping_examples(s, expected):
    assert is_self_non_overlapping(s) is expected


@given(bits, bits)
def test_strings_overlap_matches_brute_force(x, y):
    ks = brute_borders(x, y)
    ov = strings_overlap(x, y)
    if not ks:
        assert ov is None
    else:
        assert ov is not None and ov.k == min(ks)
        if ov.direction == "prefix_x_suffix_y":
            assert x[: ov.k] == y[-ov.k :]
        else:
            assert y[: ov.k] == x[-ov.k :]


@given(bits, bits)
def test_strings_overlap_symmetric(x, y):
    assert (strings_overlap(x, y) is None) == (strings_overlap(y, x) is None)
