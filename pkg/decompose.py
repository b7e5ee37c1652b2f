"""
Admissible-sequence decomposition of positions.

A position 0 <= n < |η^k(x)| descends the tree of η^k(x) one level at a time: at level j the
image of the current letter is scanned for the letter whose η^j-expansion covers n. The
digits are the indices chosen along the way.
"""

from collections.abc import Iterator

from datatypes import AdmissibleSequence, DigitWord, Letter, NeutralWords, Word
from periodic import PeriodicPoint
from substitution import Substitution, iterate


def _descend(s: Substitution, k: int, x: Letter, n: int) -> Iterator[tuple[int, Word, Letter]]:
    if not 0 <= n < s.length(x, k):
        raise ValueError(f"position {n} out of range for η^{k}({x}) of length {s.length(x, k)}")
    current = x
    for j in range(k - 1, -1, -1):
        image = s.images[current]
        offset = 0
        for i, c in enumerate(image):
            size = s.length(c, j)
            if n < offset + size:
                break
            offset += size
        else:
            raise AssertionError(f"descent fell off the image of {current!r} at level {j}")
        n -= offset
        current = image[i]
        yield i, image[:i], current
    assert n == 0, "descent must end on a single letter"


def tail(s: Substitution, p: int, x: Letter, n: int) -> DigitWord:
    """Digit word of length p of the unique x-admissible sequence of position n.

    Args:
        s: The substitution
        p: Number of levels
        x: The anchor letter
        n: Position with 0 <= n < |η^p(x)|

    Returns:
        DigitWord: |m_{p-1}|, ..., |m_0|
    """
    return tuple(i for i, _, _ in _descend(s, p, x, n))


def decompose(s: Substitution, k: int, x: Letter, n: int) -> AdmissibleSequence:
    """The x-admissible sequence (m_i, a_i), i = k-1 ... 0, whose expansion is the length-n prefix of η^k(x)."""
    return AdmissibleSequence(anchor=x, entries=tuple((prefix, letter) for _, prefix, letter in _descend(s, k, x, n)))


def locate(pp: PeriodicPoint, n: int) -> tuple[int, Letter, int]:
    """Level k, anchor letter and residual position of n in its side of the periodic point.

    Nonnegative n lies in η^k(u_0) at position n. Negative n lies in η^k(u_{-1}) at position
    n + |η^k(u_{-1})|. k is the smallest multiple of the period that fits, so 0 and -1 sit at
    level 0.
    """
    s, p = pp.substitution, pp.period
    if n >= 0:
        k = p * s.level_of(pp.right, n, p)
        return k, pp.right, n
    k = p * s.level_of(pp.left, -n - 1, p)
    return k, pp.left, n + s.length(pp.left, k)


def quotient_remainder(pp: PeriodicPoint, n: int) -> tuple[int, int]:
    """The quotient q and remainder r of n: dropping the p lowest digits of rep(n) gives rep(q).

    Raises:
        ValueError: for n in {-1, 0}, which have no quotient
    """
    if n in (-1, 0):
        raise ValueError(f"position {n} has no quotient, it is a seed position")
    s, p = pp.substitution, pp.period
    k, anchor, residual = locate(pp, n)
    entries = decompose(s, k, anchor, residual).entries
    high, low = entries[: k - p], entries[k - p :]
    # entries run from level k-1 down to 0
    r = sum(s.word_length(prefix, p - 1 - t) for t, (prefix, _) in enumerate(low))
    q = sum(s.word_length(prefix, k - p - 1 - t) for t, (prefix, _) in enumerate(high))
    if n < 0:
        q -= s.length(anchor, k - p)
    return q, r


def letter_by_division(pp: PeriodicPoint, n: int) -> Letter:
    """u_n from the recurrence u_n = η^p(u_q)[r], unwinding quotients down to the seed."""
    remainders: list[int] = []
    while n not in (-1, 0):
        n, r = quotient_remainder(pp, n)
        remainders.append(r)
    letter = pp.right if n == 0 else pp.left
    for r in reversed(remainders):
        letter = iterate(pp.substitution, (letter,), pp.period)[r]
    return letter


def lemma_bound_holds(s: Substitution, seq: AdmissibleSequence) -> bool:
    """Check Σ_{j<=i} |η^j(m_j)| < |η^i(m_i a_i)| for every level i of an admissible sequence."""
    total = 0
    k = len(seq.entries)
    for i, (prefix, letter) in zip(range(k), reversed(seq.entries)):
        total += s.word_length(prefix, i)
        if not total < s.word_length(prefix + (letter,), i):
            return False
    return True


def is_admissible(s: Substitution, seq: AdmissibleSequence) -> bool:
    """x-admissibility: each m_{i-1} a_{i-1} is a prefix of η(a_i), and m_{k-1} a_{k-1} of η(x)."""
    parent = seq.anchor
    for prefix, letter in seq.entries:
        image = s.images[parent]
        if image[: len(prefix) + 1] != prefix + (letter,):
            return False
        parent = letter
    return True


def neutral_blocks(pp: PeriodicPoint) -> NeutralWords:
    """W_min = tail of 0 at u_0 and W_max = tail of the last position of η^p(u_{-1}) at u_{-1}."""
    s, p = pp.substitution, pp.period
    return NeutralWords(
        w_min=tail(s, p, pp.right, 0),
        w_max=tail(s, p, pp.left, s.length(pp.left, p) - 1),
    )
