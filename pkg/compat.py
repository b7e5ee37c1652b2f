"""
Reference two's complement and Fibonacci complement systems.

Both are built from plain integer arithmetic, independently of substitutions, so they can be
compared against the representations of the corresponding periodic points.
"""

import threading

from datatypes import DigitWord


class FibonacciNumbers:
    """Memoized F_0 = 1, F_1 = 2, F_n = F_{n-1} + F_{n-2}."""

    def __init__(self) -> None:
        self._values: list[int] = [1, 2]
        self._lock = threading.Lock()

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(f"Fibonacci index {i} is negative")
        if i >= len(self._values):
            with self._lock:
                while len(self._values) <= i:
                    self._values.append(self._values[-1] + self._values[-2])
        return self._values[i]

    def upto(self, n: int) -> list[int]:
        """F_0, F_1, ... up to the largest value <= n."""
        values = []
        i = 0
        while self[i] <= n:
            values.append(self[i])
            i += 1
        return values


fib = FibonacciNumbers()


def _check_binary(w: DigitWord) -> None:
    if not w:
        raise ValueError("empty word has no value")
    if any(d not in (0, 1) for d in w):
        raise ValueError(f"non-binary digit in {w}")


def val_2c(w: DigitWord) -> int:
    """Two's complement value: the leading digit weighs -2^(k-1)."""
    _check_binary(w)
    k = len(w)
    digits = w[::-1]
    return sum(d << i for i, d in enumerate(digits)) - (digits[-1] << k)


def rep_2c(n: int) -> DigitWord:
    """Shortest two's complement word of n, with a single sign digit."""
    if n == 0:
        return (0,)
    if n > 0:
        return (0,) + tuple(int(bit) for bit in format(n, "b"))
    if n == -1:
        return (1,)
    width = (-n - 1).bit_length()
    return (1,) + tuple(int(bit) for bit in format(n + (1 << width), f"0{width}b"))


def val_fc(w: DigitWord) -> int:
    """Fibonacci complement value: Σ w_i F_i - w_{k-1} F_k, w_0 being the rightmost digit."""
    _check_binary(w)
    k = len(w)
    digits = w[::-1]
    return sum(fib[i] for i, d in enumerate(digits) if d) - (fib[k] if digits[-1] else 0)


def zeckendorf(n: int) -> DigitWord:
    """Greedy Zeckendorf digits of n >= 0 on F_0 = 1, F_1 = 2, ..., most significant first.

    0 is the empty word.
    """
    if n < 0:
        raise ValueError(f"Zeckendorf representation of negative {n}")
    code: list[int] = []
    for f in reversed(fib.upto(n)):
        if f <= n:
            code.append(1)
            n -= f
        else:
            code.append(0)
    return tuple(code)


def rep_fc(n: int) -> DigitWord:
    """The odd-length word with value n avoiding the factor 11 and the prefixes 000 and 101."""
    if n >= 0:
        z = zeckendorf(n)
        w = (0,) + z
        # odd length, padded with 00
        return (0, 0) + z if len(w) % 2 == 0 else w
    if n == -1:
        return (1,)
    # 1v of odd length k is worth -F_{k-2} + val(v), and v starts with two zeros
    k = 3
    while -fib[k - 2] > n:
        k += 2
    z = zeckendorf(n + fib[k - 2])
    assert len(z) <= k - 3, "remainder must leave the two digits after the sign digit at zero"
    return (1,) + (0,) * (k - 1 - len(z)) + z


def is_canonical_2c(w: DigitWord) -> bool:
    return bool(w) and w[:2] not in ((0, 0), (1, 1))


def is_canonical_fc(w: DigitWord) -> bool:
    if not w or len(w) % 2 == 0:
        return False
    if any(w[i] == w[i + 1] == 1 for i in range(len(w) - 1)):
        return False
    return w[:3] not in ((0, 0, 0), (1, 0, 1))
