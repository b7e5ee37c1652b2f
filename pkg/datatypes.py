from dataclasses import dataclass, field
from typing import Final, TypedDict

Letter = str
Word = tuple[Letter, ...]
DigitWord = tuple[int, ...]

# Letters may not contain '-', so the start state never collides with a letter.
START: Final[str] = "-start-"


class CatalogueEntry(TypedDict):
    """A named periodic point of the bundled catalogue."""

    substitution: str
    seed: str
    description: str


@dataclass(frozen=True)
class Seed:
    left: Letter
    right: Letter

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"


@dataclass(frozen=True)
class AdmissibleSequence:
    """Pairs (m_i, a_i) listed from i = k-1 down to 0, anchored at letter x.

    m_{k-1} a_{k-1} is a prefix of the image of the anchor, and m_{i-1} a_{i-1}
    is a prefix of the image of a_i.
    """

    anchor: Letter
    entries: tuple[tuple[Word, Letter], ...]

    @property
    def digits(self) -> DigitWord:
        return tuple(len(prefix) for prefix, _ in self.entries)

    @property
    def letter(self) -> Letter:
        """The last letter a_0, or the anchor for the empty sequence."""
        if not self.entries:
            return self.anchor
        return self.entries[-1][1]


@dataclass(frozen=True)
class NeutralWords:
    w_min: DigitWord
    w_max: DigitWord


@dataclass(frozen=True)
class RepMatrix:
    rows: tuple[DigitWord, ...]

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def columns(self) -> tuple[DigitWord, ...]:
        """Column-major view: one d-tuple per position."""
        return tuple(zip(*self.rows))


@dataclass
class CheckResult:
    name: str = ""
    points: int = 0
    properties: int = 3
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures
