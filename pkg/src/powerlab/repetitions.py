"""Exact fractional-repetition detection on binary words.

The exponent of a factor is its length divided by one of its periods, as an
exact rational.  A threshold "7/3" (weak) forbids factors of exponent >= 7/3;
"7/3+" (strict) forbids factors of exponent strictly above 7/3.  All
arithmetic is integer or `fractions.Fraction`; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .words import Word, WordError

__all__ = [
    "Threshold",
    "PowerOccurrence",
    "FreenessChecker",
    "max_exponent",
    "max_exponent_occurrence",
    "max_exponent_oracle",
    "is_power_free",
    "is_overlap_free",
    "find_occurrences",
    "freeness_step",
    "SEVEN_THIRDS",
    "SEVEN_THIRDS_PLUS",
    "OVERLAP_THRESHOLD",
]

# Words at or below this length are checked by the plain per-period scan;
# longer words go through the vectorized incremental checker.
_SMALL_SCAN_LIMIT = 1024

# Above this length is_overlap_free defers to the strict-2 threshold check
# (the equivalence is a tested invariant at small lengths).
_OVERLAP_DIRECT_LIMIT = 512


@dataclass(frozen=True)
class Threshold:
    """An exponent threshold with a strictness mode.

    Weak (``strict=False``) forbids factors of exponent >= ``bound``;
    strict (``strict=True``) forbids exponent > ``bound`` only, so a factor
    of exponent exactly ``bound`` is permitted.  Text form: ``"7/3"`` for
    weak, ``"7/3+"`` for strict; plain integers allowed (``"2+"``).
    """

    bound: Fraction
    strict: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.bound, Fraction):
            object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound <= 1:
            raise ValueError(
                f"threshold {self.bound} <= 1 would forbid every nonempty word"
            )

    @classmethod
    def parse(cls, text: str) -> "Threshold":
        """Parse "p/q", "p/q+", "p", or "p+"."""
        body = text.strip()
        strict = body.endswith("+")
        if strict:
            body = body[:-1]
        try:
            if "/" in body:
                num_text, den_text = body.split("/")
                bound = Fraction(int(num_text), int(den_text))
            else:
                bound = Fraction(int(body))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad threshold {text!r}: {exc}") from None
        return cls(bound, strict)

    @property
    def numerator(self) -> int:
        return self.bound.numerator

    @property
    def denominator(self) -> int:
        return self.bound.denominator

    def violated_by(self, exponent: Fraction) -> bool:
        """Whether a factor of the given exponent breaks this threshold."""
        return exponent > self.bound if self.strict else exponent >= self.bound

    def min_violation_length(self, period: int) -> int:
        """Shortest factor length at which `period` yields a forbidden exponent."""
        if period < 1:
            raise ValueError("period must be positive")
        num, den = self.bound.numerator, self.bound.denominator
        if self.strict:
            return (num * period) // den + 1
        return -((-num * period) // den)  # ceil(num*period/den)

    def __str__(self) -> str:
        return f"{self.bound}+" if self.strict else str(self.bound)


SEVEN_THIRDS = Threshold(Fraction(7, 3))
SEVEN_THIRDS_PLUS = Threshold(Fraction(7, 3), strict=True)
OVERLAP_THRESHOLD = Threshold(Fraction(2), strict=True)


@dataclass(frozen=True, order=True)
class PowerOccurrence:
    """A located repetition: the factor w[start : start+length] has the period."""

    start: int
    period: int
    length: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.period < 1 or self.length < self.period:
            raise ValueError(
                f"bad occurrence start={self.start} period={self.period} "
                f"length={self.length}"
            )

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def to_json(self) -> dict:
        return {
            "start": self.start,
            "period": self.period,
            "length": self.length,
            "exponent": str(self.exponent),
        }


def _period_match_runs(w: str, period: int) -> Iterator[tuple[int, int]]:
    """Maximal runs of agreement w[i] == w[i+period], as (start, match_count).

    A run (s, m) means the factor w[s : s+m+period] is periodic with the
    given period and extends no further on either side.
    """
    n = len(w)
    i = 0
    limit = n - period
    while i < limit:
        if w[i] == w[i + period]:
            j = i + 1
            while j < limit and w[j] == w[j + period]:
                j += 1
            yield i, j - i
            i = j + 1
        else:
            i += 1


def _period_match_runs_np(w: str, period: int) -> Iterator[tuple[int, int]]:
    """Same as _period_match_runs, vectorized for long words."""
    arr = np.frombuffer(w.encode("ascii"), dtype=np.uint8)
    eq = arr[period:] == arr[:-period]
    padded = np.concatenate(([False], eq, [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    for s, e in zip(edges[0::2], edges[1::2]):
        yield int(s), int(e - s)


def max_exponent_occurrence(w: str) -> PowerOccurrence:
    """The occurrence achieving the maximum exponent over all factors and periods.

    Ties are broken by smallest start, then smallest period.  Every nonempty
    word has exponent at least 1 (witnessed by its first letter with period 1).
    """
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no exponent")
    best_start, best_period, best_len = 0, 1, 1  # exponent 1 fallback
    runs = _period_match_runs_np if n > _SMALL_SCAN_LIMIT else _period_match_runs
    for p in range(1, n):
        for start, m in runs(w, p):
            length = m + p
            # compare length/p with best_len/best_period by cross-multiplication
            lhs = length * best_period
            rhs = best_len * p
            if lhs > rhs or (lhs == rhs and (start, p) < (best_start, best_period)):
                best_start, best_period, best_len = start, p, length
    return PowerOccurrence(best_start, best_period, best_len)


def max_exponent(w: str) -> Fraction:
    """Maximum of length/period over all factors of w and all their periods."""
    return max_exponent_occurrence(w).exponent


def max_exponent_oracle(w: str) -> Fraction:
    """Brute-force maximum exponent, for cross-checking.

    Walks every (start, period) pair and extends the factor symbol by symbol;
    deliberately shares no code with `max_exponent`.  Intended for short
    words and randomized agreement tests.
    """
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no exponent")
    best_len, best_period = 1, 1
    for start in range(n):
        for period in range(1, n - start + 1):
            j = start
            while j + period < n and w[j] == w[j + period]:
                j += 1
            length = j - start + period
            if length * best_period > best_len * period:
                best_len, best_period = length, period
    return Fraction(best_len, best_period)


def find_occurrences(w: str, threshold: Threshold) -> list[PowerOccurrence]:
    """All threshold-violating repetitions, one per maximal periodic factor.

    For each period only maximal runs are reported (extendable on neither
    side); the list is empty exactly when the word is threshold-free.
    Sorted by start, then period.
    """
    n = len(w)
    out: list[PowerOccurrence] = []
    runs = _period_match_runs_np if n > _SMALL_SCAN_LIMIT else _period_match_runs
    for p in range(1, n):
        need = threshold.min_violation_length(p) - p
        if need + p > n:
            break
        for start, m in runs(w, p):
            if m >= need:
                out.append(PowerOccurrence(start, p, m + p))
    out.sort()
    return out


def _scan_free(w: str, threshold: Threshold) -> bool:
    n = len(w)
    for p in range(1, n):
        need = threshold.min_violation_length(p) - p
        if need + p > n:
            break
        run = 0
        for i in range(n - p):
            if w[i] == w[i + p]:
                run += 1
                if run >= need:
                    return False
            else:
                run = 0
    return True


def is_power_free(w: str, threshold: Threshold) -> bool:
    """True iff no factor of w has a forbidden exponent.

    Equivalent to comparing `max_exponent` against the bound (< for weak,
    <= for strict); the empty word is free for every threshold.
    """
    n = len(w)
    if n < threshold.min_violation_length(1):
        return True
    if n <= _SMALL_SCAN_LIMIT:
        return _scan_free(w, threshold)
    checker = FreenessChecker(threshold, n)
    return checker.feed(w)


def is_overlap_free(w: str) -> bool:
    """True iff w has no factor of the form a x a x a (a letter, x a word).

    Checked directly from that shape on short words; equals
    ``is_power_free(w, Threshold.parse("2+"))``, which long words defer to.
    """
    n = len(w)
    if n > _OVERLAP_DIRECT_LIMIT:
        return is_power_free(w, OVERLAP_THRESHOLD)
    for s in range(n):
        for m in range((n - s - 3) // 2 + 1):
            if (
                w[s] == w[s + m + 1] == w[s + 2 * m + 2]
                and w[s + 1 : s + m + 1] == w[s + m + 2 : s + 2 * m + 2]
            ):
                return False
    return True


def _violation_pairs(threshold: Threshold, max_length: int) -> list[tuple[int, int]]:
    """(period, minimal violating length) for every period usable at max_length."""
    pairs = []
    p = 1
    while True:
        lmin = threshold.min_violation_length(p)
        if lmin > max_length:
            return pairs
        pairs.append((p, lmin))
        p += 1


def _extension_free(buf, end: int, pairs: list[tuple[int, int]]) -> bool:
    """Whether no forbidden repetition ends at position end-1 of buf[:end].

    Assumes buf[:end-1] is already free, so only suffixes need checking.
    """
    for p, lmin in pairs:
        if lmin > end:
            return True
        s = end - lmin
        if buf[s : end - p] == buf[s + p : end]:
            return False
    return True


def freeness_step(w: str, symbol: str, threshold: Threshold) -> bool:
    """Whether appending `symbol` to a threshold-free word keeps it free.

    Examines only repetitions ending at the new final position, so the
    caller must guarantee w itself is free.
    """
    if symbol not in ("0", "1"):
        raise WordError(f"invalid symbol {symbol!r}")
    x = w + symbol
    n = len(x)
    return _extension_free(x, n, _violation_pairs(threshold, n))


class FreenessChecker:
    """Incremental threshold checker: feed symbols left to right.

    Maintains, for every period p, the length of the longest p-periodic
    suffix of the word so far; a violation is flagged the moment any such
    suffix reaches the threshold's minimal violating length.  Integer
    arithmetic throughout, vectorized over periods.
    """

    def __init__(self, threshold: Threshold, max_length: int):
        if max_length < 1:
            raise ValueError("max_length must be positive")
        self.threshold = threshold
        self.max_length = max_length
        # Largest period that can ever violate within max_length symbols.
        pcap = 0
        while threshold.min_violation_length(pcap + 1) <= max_length:
            pcap += 1
        self._pcap = pcap
        self._buf = np.empty(max_length, dtype=np.uint8)
        # _matches[p] = number of consecutive positions j < i with
        # buf[j] == buf[j+p], counted back from the current end.
        self._matches = np.zeros(pcap + 1, dtype=np.int64)
        self._need = np.empty(pcap + 1, dtype=np.int64)
        for p in range(1, pcap + 1):
            self._need[p] = threshold.min_violation_length(p) - p
        self._n = 0
        self.witness: Optional[PowerOccurrence] = None

    @property
    def free(self) -> bool:
        return self.witness is None

    @property
    def length(self) -> int:
        return self._n

    def push(self, symbol: str) -> bool:
        """Append one symbol; returns False once a violation exists."""
        if self.witness is not None:
            return False
        code = ord(symbol)
        if code not in (48, 49):
            raise WordError(f"invalid symbol {symbol!r}")
        if self._n >= self.max_length:
            raise ValueError("checker fed beyond its declared max_length")
        i = self._n
        buf = self._buf
        buf[i] = code
        self._n = i + 1
        pl = min(i, self._pcap)
        if pl >= 1:
            m = self._matches[1 : pl + 1]
            m += 1
            m *= buf[i - pl : i][::-1] == code
            bad = m >= self._need[1 : pl + 1]
            if bad.any():
                p = int(np.flatnonzero(bad)[0]) + 1
                run = int(m[p - 1])
                self.witness = PowerOccurrence(i + 1 - run - p, p, run + p)
                return False
        return True

    def feed(self, text: str) -> bool:
        """Push a whole string; stops at the first violation."""
        for ch in text:
            if not self.push(ch):
                return False
        return True
