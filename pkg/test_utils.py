import pytest

from utils import format_digits, parse_digits


def test_format_digits():
    assert format_digits((0, 0, 1, 0)) == "0010"
    assert format_digits((1, 0, 11, 3)) == "1,0,11,3"
    assert format_digits((0, 1), sep=" ") == "0 1"
    assert format_digits(()) == ""


def test_parse_digits():
    assert parse_digits("0010010") == (0, 0, 1, 0, 0, 1, 0)
    assert parse_digits("1,0,11,3") == (1, 0, 11, 3)
    assert parse_digits("0 1 2", sep=" ") == (0, 1, 2)
    assert parse_digits("") == ()


@pytest.mark.parametrize("text", ["01a", "1,,2", "-1"])
def test_parse_digits_errors(text):
    with pytest.raises(ValueError, match="Invalid digit word"):
        parse_digits(text)
