"""
Signed representations of integers read off a two-sided periodic point.

rep(n) is a sign digit (0 for n >= 0, 1 for n < 0) followed by the tail of n at the smallest
level k = p*l that holds it, k counted from u_0 on the right side and from u_{-1} on the left
side. val walks the digits back through the images and sums the skipped lengths.
"""

import logging

from datatypes import DigitWord, Letter
from decompose import locate, neutral_blocks, tail
from periodic import PeriodicPoint
from substitution import Substitution

logger = logging.getLogger(__name__)


def rep(pp: PeriodicPoint, n: int) -> DigitWord:
    """Canonical representation of n in the numeration of pp.

    Args:
        pp: The periodic point
        n: Any integer

    Returns:
        DigitWord: sign digit followed by a multiple of the period many digits
    """
    k, anchor, residual = locate(pp, n)
    logger.debug("rep(%d): level %d at %s, residual %d", n, k, anchor, residual)
    sign = 0 if n >= 0 else 1
    return (sign,) + tail(pp.substitution, k, anchor, residual)


def _walk(s: Substitution, state: Letter, digits: DigitWord) -> tuple[int, Letter]:
    """Sum of |η^(k-1-t)(prefix before digit t)| along the path of digits from state."""
    k = len(digits)
    total = 0
    for t, d in enumerate(digits):
        image = s.images[state]
        if not 0 <= d < len(image):
            raise ValueError(f"no transition from state {state!r} on digit {d}")
        total += s.word_length(image[:d], k - 1 - t)
        state = image[d]
    return total, state


def val(pp: PeriodicPoint, w: DigitWord) -> int:
    """The integer represented by w, canonical or padded with neutral blocks.

    Raises:
        ValueError: empty word, sign digit other than 0 or 1, length not 1 mod the period,
            or a digit without transition in the automaton
    """
    if not w:
        raise ValueError("empty word has no value")
    sign, digits = w[0], tuple(w[1:])
    if sign not in (0, 1):
        raise ValueError(f"no transition from start on digit {sign}")
    if len(digits) % pp.period:
        raise ValueError(f"length class: |w| = {len(w)} is not 1 mod period {pp.period}")
    s = pp.substitution
    if sign == 0:
        total, _ = _walk(s, pp.right, digits)
        return total
    total, _ = _walk(s, pp.left, digits)
    return total - s.length(pp.left, len(digits))


def is_canonical(pp: PeriodicPoint, w: DigitWord) -> bool:
    """True iff w = rep(n) for some integer n."""
    if not w or w[0] not in (0, 1) or (len(w) - 1) % pp.period:
        return False
    if any(not isinstance(d, int) or d < 0 for d in w):
        return False
    anchor = pp.right if w[0] == 0 else pp.left
    try:
        _walk(pp.substitution, anchor, tuple(w[1:]))
    except ValueError:
        return False
    neutral = neutral_blocks(pp)
    block = tuple(w[1 : 1 + pp.period])
    if len(w) > 1:
        if w[0] == 0 and block == neutral.w_min:
            return False
        if w[0] == 1 and block == neutral.w_max:
            return False
    return True


def radix_key(w: DigitWord) -> tuple[int, DigitWord]:
    """Shorter words first, lexicographic among equal lengths."""
    return len(w), tuple(w)


def reverse_radix_key(w: DigitWord) -> tuple[int, DigitWord]:
    """Longer words first, lexicographic among equal lengths."""
    return -len(w), tuple(w)


def order_key(w: DigitWord) -> tuple[int, tuple[int, DigitWord]]:
    """Sort key of the total order: 1-words in reverse-radix order before 0-words in radix order."""
    if not w:
        raise ValueError("empty word cannot be ordered")
    if w[0] == 1:
        return 0, reverse_radix_key(w)
    if w[0] == 0:
        return 1, radix_key(w)
    raise ValueError(f"first digit {w[0]} is not a sign digit")


def cmp(wa: DigitWord, wb: DigitWord) -> int:
    """-1, 0 or 1 as wa precedes, equals or follows wb."""
    ka, kb = order_key(wa), order_key(wb)
    return (ka > kb) - (ka < kb)


def _check_fixed_letter(s: Substitution, a: Letter) -> None:
    if a not in s.images:
        raise ValueError(f"unknown letter {a!r}")
    if s.first_letter(a) != a:
        raise ValueError(f"letter {a!r} is not periodic: η({a}) does not start with {a}")
    if a not in s.growing:
        raise ValueError(f"letter {a!r} is not growing")


def rep_natural(s: Substitution, a: Letter, n: int) -> DigitWord:
    """Representation of n >= 0 along the one-sided fixed point starting with a, without sign digit.

    The most significant digit is nonzero, and 0 is represented by the empty word.
    """
    _check_fixed_letter(s, a)
    if n < 0:
        raise ValueError(f"position {n} out of range for a one-sided fixed point")
    return tail(s, s.level_of(a, n), a, n)


def val_natural(s: Substitution, a: Letter, w: DigitWord) -> int:
    _check_fixed_letter(s, a)
    total, _ = _walk(s, a, tuple(w))
    return total
