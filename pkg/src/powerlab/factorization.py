"""Decomposing power-free words around images of the doubling morphism.

Every word free below a threshold in (2, 7/3] splits as u * MU(y) * v with
u, v drawn from {empty, 0, 1, 00, 11} and y free for the same threshold.
Iterating the split on y yields a decomposition tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .morphisms import MU
from .repetitions import Threshold, is_power_free
from .words import Word, EMPTY

__all__ = [
    "ADMISSIBLE_AFFIXES",
    "MuFactorization",
    "DecompositionTower",
    "inverse_mu",
    "factorize",
    "decomposition_tower",
]

ADMISSIBLE_AFFIXES = (EMPTY, Word("0"), Word("1"), Word("00"), Word("11"))

_BLOCKS = {"01": "0", "10": "1"}


def inverse_mu(w: str) -> Optional[Word]:
    """The preimage of w under MU, or None if w is not in MU's image.

    w must have even length and consist of blocks 01 / 10.
    """
    n = len(w)
    if n % 2:
        return None
    out = []
    for i in range(0, n, 2):
        sym = _BLOCKS.get(w[i : i + 2])
        if sym is None:
            return None
        out.append(sym)
    return Word("".join(out))


@dataclass(frozen=True)
class MuFactorization:
    """One admissible split w = u * MU(y) * v."""

    u: Word
    y: Word
    v: Word

    def reconstruct(self) -> Word:
        return Word(self.u + MU(self.y) + self.v)

    def to_json(self) -> dict:
        return {"u": str(self.u), "y": str(self.y), "v": str(self.v)}


def _check_threshold_range(threshold: Threshold) -> None:
    if not Fraction(2) < threshold.bound <= Fraction(7, 3):
        raise ValueError(
            f"factorization requires a threshold bound in (2, 7/3], got {threshold}"
        )


def factorize(w: str, threshold: Threshold) -> list[MuFactorization]:
    """All splits u * MU(y) * v of w with admissible affixes and free core.

    w must itself be threshold-free and the bound must lie in (2, 7/3].
    Results are ordered by (|u|, |v|); the first entry is the canonical
    choice.  Non-emptiness is guaranteed whenever threshold-freeness
    implies weak-7/3-freeness (weak bounds up to 7/3, strict below 7/3);
    at exactly strict 7/3 a free word may admit no split.
    """
    _check_threshold_range(threshold)
    word = Word(w)
    if not is_power_free(word, threshold):
        raise ValueError(f"word is not {threshold}-power-free")
    n = len(word)
    out = []
    for u in ADMISSIBLE_AFFIXES:
        if not word.startswith(u):
            continue
        for v in ADMISSIBLE_AFFIXES:
            if len(u) + len(v) > n or not word.endswith(v):
                continue
            y = inverse_mu(word[len(u) : n - len(v)])
            if y is not None and is_power_free(y, threshold):
                out.append(MuFactorization(u, y, v))
    out.sort(key=lambda f: (len(f.u), len(f.v)))
    return out


@dataclass(frozen=True)
class DecompositionTower:
    """Nested factorization: source = u0 MU(u1) MU^2(u2) ... MU^d(core) ... MU(v1) v0."""

    levels: tuple[tuple[Word, Word], ...]
    core: Word

    @property
    def depth(self) -> int:
        return len(self.levels)

    def reconstruct(self) -> Word:
        x = self.core
        for u, v in reversed(self.levels):
            x = Word(u + MU(x) + v)
        return x

    def to_json(self) -> dict:
        return {
            "levels": [{"u": str(u), "v": str(v)} for u, v in self.levels],
            "core": str(self.core),
        }


def decomposition_tower(
    w: str, threshold: Threshold, min_core: int = 7
) -> DecompositionTower:
    """Repeatedly strip canonical factorizations until the core is short.

    Stripping stops once the core length falls below max(min_core, 2), or
    when no strictly shrinking factorization exists.  The default floor of
    7 keeps every core long enough to factorize again; callers may lower
    it to peel all the way down.  Each level's core stays threshold-free,
    and core lengths obey |next| >= (|previous| - 4) / 2.
    """
    _check_threshold_range(threshold)
    floor = max(min_core, 2)
    core = Word(w)
    if not is_power_free(core, threshold):
        raise ValueError(f"word is not {threshold}-power-free")
    levels: list[tuple[Word, Word]] = []
    while len(core) >= floor:
        splits = factorize(core, threshold)
        if not splits:
            break
        first = splits[0]
        if len(first.y) >= len(core):
            break
        levels.append((first.u, first.v))
        core = first.y
    return DecompositionTower(tuple(levels), core)
