"""Two-sided periodic points: seeds, minimal periods and explicit expansion."""

from dataclasses import dataclass
from math import lcm

from datatypes import Letter, Seed, Word
from substitution import Substitution, iterate


@dataclass(frozen=True)
class PeriodicPoint:
    substitution: Substitution
    seed: Seed
    period: int

    @property
    def right(self) -> Letter:
        """u_0"""
        return self.seed.right

    @property
    def left(self) -> Letter:
        """u_{-1}"""
        return self.seed.left

    def __str__(self) -> str:
        return f"{self.seed} (period {self.period})"


def _cycle_length(step: dict[Letter, Letter], letter: Letter) -> int | None:
    """Length of the cycle of `letter` under the map `step`, or None if it lies on no cycle."""
    current = step[letter]
    for length in range(1, len(step) + 1):
        if current == letter:
            return length
        current = step[current]
    return None


def first_letter_cycles(s: Substitution) -> dict[Letter, int]:
    step = {letter: s.first_letter(letter) for letter in s.letters}
    cycles = {letter: _cycle_length(step, letter) for letter in s.letters}
    return {letter: length for letter, length in cycles.items() if length is not None}


def last_letter_cycles(s: Substitution) -> dict[Letter, int]:
    step = {letter: s.last_letter(letter) for letter in s.letters}
    cycles = {letter: _cycle_length(step, letter) for letter in s.letters}
    return {letter: length for letter, length in cycles.items() if length is not None}


def enumerate_seeds(s: Substitution) -> list[tuple[Seed, int]]:
    """All growing seeds b|a of two-sided periodic points with their minimal periods.

    Sorted by letter ids, left letter first.
    """
    rights = {a: n for a, n in first_letter_cycles(s).items() if a in s.growing}
    lefts = {b: n for b, n in last_letter_cycles(s).items() if b in s.growing}
    return [
        (Seed(left=b, right=a), lcm(lefts[b], rights[a]))
        for b in sorted(lefts)
        for a in sorted(rights)
    ]


def parse_seed(text: str) -> Seed:
    left, sep, right = text.partition("|")
    if not sep or not left.strip() or not right.strip():
        raise ValueError(f"Invalid seed {text!r}, expected 'LEFT|RIGHT'")
    return Seed(left=left.strip(), right=right.strip())


def make_periodic_point(s: Substitution, seed: str | Seed) -> PeriodicPoint:
    """Validate a seed and attach its minimal period.

    Args:
        s: The substitution
        seed: Seed text such as "b|a", or a Seed

    Returns:
        PeriodicPoint: the two-sided periodic point with growing seed

    Raises:
        ValueError: unknown seed letters, a seed not fixed by any power of the substitution,
            or a seed letter that is not growing
    """
    if isinstance(seed, str):
        seed = parse_seed(seed)
    for letter in (seed.left, seed.right):
        if letter not in s.images:
            raise ValueError(f"unknown letter {letter!r} in seed {seed}")

    right_cycle = first_letter_cycles(s).get(seed.right)
    if right_cycle is None:
        raise ValueError(f"seed {seed} is not periodic: {seed.right!r} is not the first letter of any η^p({seed.right})")
    left_cycle = last_letter_cycles(s).get(seed.left)
    if left_cycle is None:
        raise ValueError(f"seed {seed} is not periodic: {seed.left!r} is not the last letter of any η^p({seed.left})")
    for letter in (seed.left, seed.right):
        if letter not in s.growing:
            raise ValueError(f"seed {seed} is not growing: letter {letter!r} has bounded images")
    return PeriodicPoint(substitution=s, seed=seed, period=lcm(left_cycle, right_cycle))


def expand_segment(pp: PeriodicPoint, n_lo: int, n_hi: int) -> Word:
    """u_{n_lo} ... u_{n_hi - 1} obtained by iterating η^p on both seed letters."""
    assert n_lo <= n_hi, "segment bounds must be ordered"
    s, p = pp.substitution, pp.period
    segment: list[Letter] = []
    if n_lo < 0:
        left: Word = (pp.left,)
        while len(left) < -n_lo:
            left = iterate(s, left, p)
        segment.extend(left[len(left) + n_lo : len(left) + min(n_hi, 0)])
    if n_hi > 0:
        right: Word = (pp.right,)
        while len(right) < n_hi:
            right = iterate(s, right, p)
        segment.extend(right[max(n_lo, 0) : n_hi])
    return tuple(segment)
