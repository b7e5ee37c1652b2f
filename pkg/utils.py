import os

from datatypes import DigitWord

_systems_base_dir = os.path.dirname(os.path.abspath(__file__))


def set_systems_base_dir(dir: str) -> None:
    global _systems_base_dir
    _systems_base_dir = dir


def get_systems_dir() -> str:
    """Get the directory holding the bundled substitution configs.

    Returns:
        str: The path to the systems directory.
    """
    return os.path.join(_systems_base_dir, "systems")


def get_catalogue_file_path() -> str:
    return os.path.join(get_systems_dir(), "catalogue.json")


def get_substitution_file_path(name: str) -> str:
    return os.path.join(get_systems_dir(), f"{name}.txt")


def format_digits(word: DigitWord, sep: str | None = None) -> str:
    """
    Render a digit word as text.

    Digits are juxtaposed when all of them are below 10 and comma-separated
    otherwise, unless an explicit separator is given.

    Args:
        word: The digits to render
        sep: Optional separator forced between digits

    Returns:
        The textual form, e.g. "0010010" or "1,0,11,3"
    """
    if sep is None:
        sep = "" if all(d <= 9 for d in word) else ","
    return sep.join(str(d) for d in word)


def parse_digits(text: str, sep: str | None = None) -> DigitWord:
    """Parse a digit word written juxtaposed ("0102") or separated ("0,1,0,11")."""
    text = text.strip()
    if not text:
        return ()
    if sep:
        parts = text.split(sep)
    elif "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        digits = tuple(int(part.strip()) for part in parts)
    except ValueError:
        raise ValueError(f"Invalid digit word: {text!r}")
    if any(d < 0 for d in digits):
        raise ValueError(f"Invalid digit word: {text!r}")
    return digits
