"""Neutral words, padding and the numeration of integer vectors."""

from collections.abc import Sequence

from datatypes import DigitWord, NeutralWords, RepMatrix
from decompose import neutral_blocks
from numeration import rep, val
from periodic import PeriodicPoint


def neutral_words(pp: PeriodicPoint) -> NeutralWords:
    """W_min and W_max: length-p blocks that can be inserted after the sign digit without changing the value."""
    return neutral_blocks(pp)


def pad(pp: PeriodicPoint, w: DigitWord, t: int) -> DigitWord:
    """Pad w to length t with neutral blocks after the sign digit.

    Args:
        pp: The periodic point
        w: A representation, starting with its sign digit
        t: Target length, t >= |w| and t = 1 mod p

    Returns:
        DigitWord: the padded word, same value as w
    """
    if not w or w[0] not in (0, 1):
        raise ValueError("only words starting with a sign digit can be padded")
    if t < len(w):
        raise ValueError(f"target length {t} is shorter than the word of length {len(w)}")
    if (t - 1) % pp.period:
        raise ValueError(f"length class: target length {t} is not 1 mod period {pp.period}")
    neutral = neutral_blocks(pp)
    block = neutral.w_min if w[0] == 0 else neutral.w_max
    count, extra = divmod(t - len(w), pp.period)
    if extra:
        raise ValueError(f"length class: |w| = {len(w)} is not 1 mod period {pp.period}")
    return (w[0],) + block * count + tuple(w[1:])


def unpad(pp: PeriodicPoint, w: DigitWord) -> DigitWord:
    """Strip neutral blocks after the sign digit until the word is canonical."""
    neutral = neutral_blocks(pp)
    block = neutral.w_min if w[0] == 0 else neutral.w_max
    p = pp.period
    while len(w) > 1 and tuple(w[1 : 1 + p]) == block:
        w = (w[0],) + tuple(w[1 + p :])
    return tuple(w)


def _check_compatible(pps: Sequence[PeriodicPoint]) -> None:
    if not pps:
        raise ValueError("at least one periodic point is needed")
    first = pps[0]
    for pp in pps[1:]:
        if pp.substitution != first.substitution:
            raise ValueError("mismatched substitutions: all coordinates must share one substitution")
        if pp.period != first.period:
            raise ValueError(f"mismatched periods {first.period} and {pp.period}")


def rep_zd(pps: Sequence[PeriodicPoint], ns: Sequence[int]) -> RepMatrix:
    """Representation of an integer vector: each coordinate padded to the longest representation."""
    _check_compatible(pps)
    if len(pps) != len(ns):
        raise ValueError(f"mismatched dimensions: {len(pps)} periodic points for {len(ns)} integers")
    words = [rep(pp, n) for pp, n in zip(pps, ns)]
    t = max(len(w) for w in words)
    return RepMatrix(rows=tuple(pad(pp, w, t) for pp, w in zip(pps, words)))


def val_zd(pps: Sequence[PeriodicPoint], m: RepMatrix) -> list[int]:
    _check_compatible(pps)
    if len(pps) != len(m.rows):
        raise ValueError(f"mismatched dimensions: {len(pps)} periodic points for {len(m.rows)} rows")
    if len({len(row) for row in m.rows}) > 1:
        raise ValueError("mismatched row lengths")
    return [val(pp, row) for pp, row in zip(pps, m.rows)]
