"""
The deterministic finite automaton with output of a periodic point.

States are the letters plus a start state. From a letter c, digit i leads to η(c)[i]; from the
start state, 0 leads to u_0 and 1 leads to u_{-1}. Every letter state outputs itself.
"""

import functools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

import graphviz

from datatypes import START, DigitWord, Letter
from numeration import is_canonical, order_key, rep
from periodic import PeriodicPoint
from substitution import Substitution


@dataclass(frozen=True, eq=False)
class Dfao:
    states: tuple[str, ...]
    transitions: Mapping[tuple[str, int], Letter]
    initial: str = START

    def edges(self, state: str) -> list[tuple[int, Letter]]:
        """Outgoing (digit, target) pairs of a state, digits ascending."""
        return sorted((digit, target) for (source, digit), target in self.transitions.items() if source == state)


def _letter_transitions(s: Substitution) -> dict[tuple[str, int], Letter]:
    return {(letter, i): target for letter, image in s.images.items() for i, target in enumerate(image)}


def build_letter_dfao(s: Substitution, x: Letter) -> Dfao:
    """The automaton of the substitution started in letter x, without start state."""
    return Dfao(states=s.letters, transitions=_letter_transitions(s), initial=x)


@functools.lru_cache(maxsize=64)
def build_dfao(pp: PeriodicPoint) -> Dfao:
    transitions = {(START, 0): pp.right, (START, 1): pp.left}
    transitions.update(_letter_transitions(pp.substitution))
    return Dfao(states=(START,) + pp.substitution.letters, transitions=transitions)


def evaluate(dfao: Dfao, word: DigitWord, state: str | None = None) -> Letter:
    """Output of the automaton after reading word from state (the initial state by default).

    Raises:
        ValueError: on the empty word from the start state, or a digit without transition
    """
    if state is None:
        state = dfao.initial
    if state == START and not word:
        raise ValueError("empty word has no output from the start state")
    for digit in word:
        target = dfao.transitions.get((state, digit))
        if target is None:
            raise ValueError(f"no transition from state {state!r} on digit {digit}")
        state = target
    return state


def letter_at(pp: PeriodicPoint, n: int) -> Letter:
    """u_n, the output of the automaton on rep(n)."""
    return evaluate(build_dfao(pp), rep(pp, n))


def _paths(dfao: Dfao, state: str, length: int) -> Iterator[DigitWord]:
    if length == 0:
        yield ()
        return
    for digit, target in dfao.edges(state):
        for rest in _paths(dfao, target, length - 1):
            yield (digit,) + rest


def enumerate_language(dfao: Dfao, length: int, state: str | None = None) -> list[DigitWord]:
    """All accepted words of exactly the given length, in lexicographic order."""
    if state is None:
        state = dfao.initial
    if state == START and length == 0:
        return []
    return list(_paths(dfao, state, length))


def canonical_words(pp: PeriodicPoint, length: int) -> list[DigitWord]:
    """Accepted words of the given length outside the two neutral cones, sorted by the numeration order."""
    if length < 1 or (length - 1) % pp.period:
        return []
    words = [w for w in enumerate_language(build_dfao(pp), length) if is_canonical(pp, w)]
    return sorted(words, key=order_key)


def export_dot(dfao: Dfao, name: str = "dfao") -> str:
    """DOT source of the automaton, byte-stable for equal automata."""
    dot = graphviz.Digraph(name=name, node_attr={"shape": "box"})
    for state in dfao.states:
        if state == START:
            dot.node(state, label="start", shape="plaintext")
        else:
            dot.node(state)
    for state in dfao.states:
        for digit, target in dfao.edges(state):
            dot.edge(state, target, label=str(digit))
    return dot.source
