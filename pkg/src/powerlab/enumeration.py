"""Exhaustive generation of power-free binary words by pruned search.

The search tree of threshold-free prefixes is tiny for bounds at or below
7/3 (word counts grow polynomially), so depth-first traversal with an
incremental last-position check enumerates even length-52 censuses in
seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .repetitions import Threshold, _extension_free, _violation_pairs
from .words import Word

__all__ = [
    "EnumerationQuery",
    "enumerate_words",
    "count_words",
    "all_words_with_property",
    "DEFAULT_EXHAUSTIVE_CEILING",
]

DEFAULT_EXHAUSTIVE_CEILING = 24


@dataclass(frozen=True)
class EnumerationQuery:
    """What to enumerate: a length, a threshold, and optional word filters.

    `prefix`/`suffix` require the word to start/end with the given word;
    `forbidden_prefix`/`forbidden_suffix` exclude exact starts/ends (the
    filters used by the length-6 census of words avoiding boundary 11).
    `first_symbol` pins position 0, the usual complement-symmetry
    reduction.
    """

    length: int
    threshold: Threshold
    prefix: Optional[Word] = None
    suffix: Optional[Word] = None
    forbidden_prefix: Optional[Word] = None
    forbidden_suffix: Optional[Word] = None
    first_symbol: Optional[str] = None

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        for name in ("prefix", "suffix", "forbidden_prefix", "forbidden_suffix"):
            value = getattr(self, name)
            if value is not None:
                word = Word(value)
                object.__setattr__(self, name, word)
                if len(word) > self.length:
                    raise ValueError(
                        f"{name} longer than the requested length "
                        f"({len(word)} > {self.length})"
                    )
        if self.first_symbol is not None:
            if self.first_symbol not in ("0", "1"):
                raise ValueError(f"first_symbol must be '0' or '1'")
            if self.length < 1:
                raise ValueError("first_symbol requires length >= 1")


def enumerate_words(query: EnumerationQuery) -> Iterator[Word]:
    """All threshold-free words matching the query, in lexicographic order."""
    n = query.length
    if n == 0:
        yield Word("")
        return
    pairs = _violation_pairs(query.threshold, n)
    buf = bytearray(n)
    forced: list[Optional[int]] = [None] * n
    if query.first_symbol is not None:
        forced[0] = ord(query.first_symbol)
    if query.prefix is not None:
        for i, ch in enumerate(query.prefix):
            code = ord(ch)
            if forced[i] is not None and forced[i] != code:
                return
            forced[i] = code
    fp = query.forbidden_prefix.encode("ascii") if query.forbidden_prefix else None
    fs = query.forbidden_suffix.encode("ascii") if query.forbidden_suffix else None
    suffix = query.suffix.encode("ascii") if query.suffix else None

    def walk(depth: int) -> Iterator[Word]:
        want = forced[depth]
        for code in (48, 49) if want is None else (want,):
            buf[depth] = code
            end = depth + 1
            if not _extension_free(buf, end, pairs):
                continue
            if fp is not None and end == len(fp) and buf[:end] == fp:
                continue
            if end == n:
                if suffix is not None and not buf.endswith(suffix):
                    continue
                if fs is not None and buf[n - len(fs) :] == fs:
                    continue
                yield Word(buf.decode("ascii"))
            else:
                yield from walk(end)

    yield from walk(0)


def count_words(lengths: Iterable[int], threshold: Threshold) -> dict[int, int]:
    """Number of threshold-free words at each requested length.

    One traversal of the prefix tree up to the largest length serves every
    requested size (freeness is prefix-closed).
    """
    wanted = sorted(set(lengths))
    if not wanted:
        return {}
    if wanted[0] < 0:
        raise ValueError("lengths must be non-negative")
    nmax = wanted[-1]
    counts = [0] * (nmax + 1)
    counts[0] = 1
    if nmax >= 1:
        pairs = _violation_pairs(threshold, nmax)
        buf = bytearray(nmax)

        def walk(depth: int) -> None:
            end = depth + 1
            for code in (48, 49):
                buf[depth] = code
                if _extension_free(buf, end, pairs):
                    counts[end] += 1
                    if end < nmax:
                        walk(end)

        walk(0)
    return {n: counts[n] for n in wanted}


def all_words_with_property(
    length: int,
    predicate: Callable[[Word], bool],
    ceiling: int = DEFAULT_EXHAUSTIVE_CEILING,
) -> list[Word]:
    """Every length-n binary word satisfying the predicate, in lexicographic order.

    Plain brute force over all 2**length words, so lengths above the
    ceiling are rejected.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > ceiling:
        raise ValueError(
            f"length {length} exceeds the exhaustive-search ceiling {ceiling}"
        )
    out = []
    for value in range(1 << length):
        w = Word(format(value, f"0{length}b")) if length else Word("")
        if predicate(w):
            out.append(w)
    return out
