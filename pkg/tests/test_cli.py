import json

import pytest

from dyckmat.cli import run
from dyckmat.setgen import SetSpec, enumerate_set, parse_matrices


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = call(capsys, "count", "--m", "3", "--n", "6")
    assert code == 0
    assert out.splitlines()[0] == "54"


def test_count_json_n5(capsys):
    code, out, _ = call(capsys, "count", "--m", "3", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["formula"], data["enumerated"], data["table"], data["agrees"]) == (8, 8, "4", "match")


def test_verify(capsys):
    code, out, err = call(capsys, "verify", "--m", "3", "--n", "7")
    assert code == 0
    assert out.startswith("pass")
    assert "verified 104" in err


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--m", "3", "--n", "6", "--format", "json")
    assert json.loads(out) == {"pass": True, "checked_pairs": 1485, "violations": []}


def test_build_single(capsys):
    assert call(capsys, "build", "--m", "2", "--n", "4") == (0, "1100\n1010\n", "")
    code, out, _ = call(capsys, "build", "--m", "3", "--n", "6", "--index", "53")
    assert out == list(enumerate_set(SetSpec(3, 6, "1100")))[-1].to_text()


def test_build_stream_round_trip(capsys):
    code, out, _ = call(capsys, "build", "--m", "3", "--n", "7")
    assert code == 0
    assert parse_matrices(out) == list(enumerate_set(SetSpec.default(3, 7)))
    assert "\n\n\n" not in out


def test_build_deterministic(capsys):
    first = call(capsys, "build", "--m", "3", "--n", "6", "--format", "json")
    second = call(capsys, "build", "--m", "3", "--n", "6", "--format", "json")
    assert first == second
    rows = [json.loads(line) for line in first[1].splitlines()]
    assert len(rows) == 54 and rows[0]["parity"] == "even"


def test_build_by_columns(capsys):
    code, out, _ = call(capsys, "build", "--m", "2", "--n", "4", "--by-columns")
    assert out == "11\n10\n01\n00\n"


def test_table(capsys):
    code, out, _ = call(capsys, "table", "--m-max", "10", "--n-max", "10", "--format", "csv")
    assert code == 0
    assert "10,10,408411188822524672,,4.1e17,unchecked" in out


def test_expand_search_and_verify(capsys):
    code, out, _ = call(capsys, "expand", "--m", "3", "--n", "8", "--anchor", "101010", "--search")
    assert code == 0 and "11111100" in out.split()
    code, out, _ = call(capsys, "expand", "--m", "3", "--n", "8", "--anchor", "101010", "--x", "11111100")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = call(capsys, "expand", "--n", "8", "--first-row", "11100010")
    assert "11111100" not in out.split()


def test_rows(capsys):
    code, out, _ = call(capsys, "rows", "--n", "8", "--anchor", "111000")
    assert "11111010 Other" in out.splitlines()


def test_dyck(capsys):
    assert call(capsys, "dyck", "--len", "4") == (0, "1100\n1010\n", "")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "--m", "3"], 2),
        (["build", "--m", "3", "--n", "6", "--anchor", "0110"], 2),
        (["build", "--m", "3", "--n", "6", "--index", "54"], 2),
        (["verify", "--m", "9", "--n", "9"], 3),
        (["dyck", "--len", "40"], 3),
        (["bogus"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code
    assert len(err.strip().splitlines()) == 1
