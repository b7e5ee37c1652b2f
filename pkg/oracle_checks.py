"""
Oracle sweep of a periodic point over [-M, M].

Three properties per integer n: the automaton letter on rep(n) equals the letter of the
explicitly expanded word, val(rep(n)) = n, and rep(n) precedes rep(n + 1) in the numeration
order (checked up to n = M - 1).
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from automaton import build_dfao, evaluate
from datatypes import CheckResult
from numeration import cmp, rep, val
from periodic import PeriodicPoint, expand_segment
from utils import format_digits

logger = logging.getLogger(__name__)

PROPERTIES = 3
MAX_REPORTED_FAILURES = 20


def _check_range(pp: PeriodicPoint, lo: int, hi: int, last: int) -> list[str]:
    """Failures for n in [lo, hi); the order is checked against n + 1 while n < last."""
    failures: list[str] = []
    segment = expand_segment(pp, lo, hi)
    dfao = build_dfao(pp)
    following = rep(pp, lo)
    for n in range(lo, hi):
        w = following
        word = format_digits(w)
        try:
            letter = evaluate(dfao, w)
        except ValueError as e:
            failures.append(f"letter at {n}: automaton rejects {word}: {e}")
        else:
            if letter != segment[n - lo]:
                failures.append(f"letter at {n}: automaton gives {letter} on {word}, expansion gives {segment[n - lo]}")
        try:
            value = val(pp, w)
        except ValueError as e:
            failures.append(f"value of {word}: {e}")
        else:
            if value != n:
                failures.append(f"round trip at {n}: val({word}) = {value}")
        if n < last:
            following = rep(pp, n + 1)
            if cmp(w, following) >= 0:
                failures.append(f"order at {n}: {word} does not precede {format_digits(following)}")
    logger.debug("checked [%d, %d): %d failures", lo, hi, len(failures))
    return failures


def _shards(lo: int, hi: int, count: int) -> list[tuple[int, int]]:
    size = max(1, -(-(hi - lo) // count))
    return [(start, min(start + size, hi)) for start in range(lo, hi, size)]


def check_point(pp: PeriodicPoint, radius: int, name: str = "", workers: int = 1) -> CheckResult:
    """
    Run the oracle sweep over [-radius, radius].

    Args:
        pp: The periodic point
        radius: The sweep covers 2 * radius + 1 integers
        name: Label used in the result
        workers: Number of processes; 1 runs in this process

    Returns:
        CheckResult: failure messages, empty when every property holds
    """
    if radius < 0:
        raise ValueError(f"out of range: radius {radius} is negative")
    lo, hi = -radius, radius + 1
    result = CheckResult(name=name or str(pp), points=hi - lo, properties=PROPERTIES)
    if workers <= 1:
        result.failures = _check_range(pp, lo, hi, radius)
        return result

    shards = _shards(lo, hi, workers)
    logger.info("checking %s over %d shards", result.name, len(shards))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_check_range, pp, start, stop, radius) for start, stop in shards]
        for future in futures:
            result.failures.extend(future.result())
    return result


def format_result(result: CheckResult) -> str:
    if result.ok:
        return f"OK ({result.properties} properties × {result.points} points)"
    lines = [f"FAIL ({len(result.failures)} failures in {result.properties} properties × {result.points} points)"]
    lines += result.failures[:MAX_REPORTED_FAILURES]
    return "\n".join(lines)
