"""
Substitutions on finite alphabets: parsing, images, iterated image lengths and growing letters.

Lengths |η^k(a)| are never computed by materializing η^k(a). Each level is one product of the
incidence matrix with the previous length vector, kept as numpy object arrays so entries stay
Python integers of arbitrary precision.
"""

import threading
from bisect import bisect_right
from collections.abc import Iterable, Mapping

import networkx as nx
import numpy as np

from datatypes import Letter, Word

FORBIDDEN_LETTER_CHARS = "|->,#"


def check_letter_id(letter: str) -> None:
    if not letter or any(ch.isspace() or ch in FORBIDDEN_LETTER_CHARS for ch in letter):
        raise ValueError(f"Invalid letter id {letter!r}: letters are nonempty and avoid whitespace and '{FORBIDDEN_LETTER_CHARS}'")


class Substitution:
    """A substitution η with nonempty images and at least one growing letter."""

    def __init__(self, images: Mapping[Letter, Iterable[Letter]]) -> None:
        self.images: dict[Letter, Word] = {letter: tuple(image) for letter, image in images.items()}
        self.letters: tuple[Letter, ...] = tuple(self.images)
        if not self.letters:
            raise ValueError("Empty alphabet: a substitution needs at least one rule")
        for letter, image in self.images.items():
            check_letter_id(letter)
            if not image:
                raise ValueError(f"empty image for letter {letter!r}")
            for c in image:
                if c not in self.images:
                    raise ValueError(f"unknown letter {c!r} in image of {letter!r}")
        self._index = {letter: i for i, letter in enumerate(self.letters)}
        self._matrix = np.zeros((len(self.letters), len(self.letters)), dtype=object)
        for letter, image in self.images.items():
            for c in image:
                self._matrix[self._index[letter], self._index[c]] += 1
        self._lengths: list[np.ndarray] = [np.ones(len(self.letters), dtype=object)]
        self._lock = threading.Lock()
        self.growing: frozenset[Letter] = self._find_growing_letters()
        if not self.growing:
            raise ValueError("no growing letter: every iterated image stays bounded")

    def __repr__(self) -> str:
        rules = ", ".join(f"{letter}->{''.join(image)}" for letter, image in self.images.items())
        return f"Substitution({rules})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(tuple(self.images.items()))

    def __getstate__(self) -> dict:
        # worker processes rebuild the lock and the length cache
        state = self.__dict__.copy()
        del state["_lock"]
        state["_lengths"] = self._lengths[:1]
        return state

    def __setstate__(self, state: dict) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    @property
    def max_digit(self) -> int:
        """Largest digit of D = {0, ..., max |η(c)| - 1}."""
        return max(len(image) for image in self.images.values()) - 1

    def _grow_to(self, k: int) -> None:
        if k < len(self._lengths):
            return
        with self._lock:
            while len(self._lengths) <= k:
                self._lengths.append(self._matrix.dot(self._lengths[-1]))

    def length(self, letter: Letter, k: int) -> int:
        """|η^k(letter)|."""
        assert k >= 0, "iterate count must be nonnegative"
        self._grow_to(k)
        return int(self._lengths[k][self._index[letter]])

    def word_length(self, word: Iterable[Letter], k: int) -> int:
        """|η^k(word)|, the sum of the letter lengths at level k."""
        assert k >= 0, "iterate count must be nonnegative"
        self._grow_to(k)
        vector = self._lengths[k]
        return sum((int(vector[self._index[c]]) for c in word), 0)

    def level_of(self, letter: Letter, n: int, step: int = 1) -> int:
        """Smallest l >= 0 with n < |η^(step*l)(letter)|.

        Args:
            letter: A growing letter
            n: The position that has to fit inside the image
            step: Levels are multiples of step (the period of a periodic point)

        Returns:
            int: the level count l
        """
        if self.length(letter, 0) > n:
            return 0
        if letter not in self.growing:
            raise ValueError(f"letter {letter!r} is not growing")
        hi = 1
        while self.length(letter, step * hi) <= n:
            hi *= 2
        return bisect_right(range(hi + 1), n, key=lambda level: self.length(letter, step * level))

    def _find_growing_letters(self) -> frozenset[Letter]:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.letters)
        graph.add_edges_from((letter, c) for letter, image in self.images.items() for c in image)

        on_cycle: set[Letter] = set()
        for component in nx.strongly_connected_components(graph):
            if len(component) > 1:
                on_cycle |= component
            else:
                (letter,) = component
                if graph.has_edge(letter, letter):
                    on_cycle.add(letter)
        # a cycle letter whose images stay length 1 for |A| steps is a singleton chain forever
        expanding = {c for c in on_cycle if self.length(c, len(self.letters)) >= 2}

        return frozenset(
            letter for letter in self.letters if letter in expanding or expanding & nx.descendants(graph, letter)
        )

    def incidence_matrix(self) -> np.ndarray:
        return self._matrix.copy()

    def first_letter(self, letter: Letter) -> Letter:
        return self.images[letter][0]

    def last_letter(self, letter: Letter) -> Letter:
        return self.images[letter][-1]


def _split_image(text: str, declared: set[str]) -> Word:
    image: list[Letter] = []
    for token in text.split():
        if token in declared:
            image.append(token)
        elif all(ch in declared for ch in token):
            image.extend(token)
        else:
            raise ValueError(f"unknown letter in image token {token!r}")
    return tuple(image)


def parse_substitution(text: str) -> Substitution:
    """Parse a substitution config: one `LETTER -> IMAGE` rule per line.

    Multi-character letters are whitespace-separated in images, single-character letters may be
    juxtaposed (`a -> ab`). `#` starts a comment and blank lines are ignored.

    Args:
        text: The config text

    Returns:
        Substitution: the validated substitution

    Raises:
        ValueError: on a malformed rule, empty image, unknown letter, duplicate rule or when no
            letter is growing.
    """
    rules: list[tuple[str, str]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ValueError(f"line {line_number}: malformed rule {raw_line.strip()!r}, expected 'LETTER -> IMAGE'")
        left, right = line.split("->", 1)
        letter = left.strip()
        check_letter_id(letter)
        if any(letter == seen for seen, _ in rules):
            raise ValueError(f"line {line_number}: duplicate rule for letter {letter!r}")
        rules.append((letter, right))

    declared = {letter for letter, _ in rules}
    images: dict[Letter, Word] = {}
    for letter, right in rules:
        if not right.strip():
            raise ValueError(f"empty image for letter {letter!r}")
        images[letter] = _split_image(right, declared)
    return Substitution(images)


def apply(s: Substitution, word: Iterable[Letter]) -> Word:
    """η(word): concatenation of the images."""
    return tuple(c for letter in word for c in s.images[letter])


def iterate(s: Substitution, word: Iterable[Letter], k: int) -> Word:
    """η^k(word), materialized."""
    result = tuple(word)
    for _ in range(k):
        result = apply(s, result)
    return result


def image_length(s: Substitution, letter: Letter, k: int) -> int:
    return s.length(letter, k)


def growing_letters(s: Substitution) -> frozenset[Letter]:
    return s.growing


def incidence_matrix(s: Substitution) -> np.ndarray:
    """Matrix M with M[i, j] the number of occurrences of letter j in the image of letter i.

    Rows and columns follow the rule order of the config.
    """
    return s.incidence_matrix()
