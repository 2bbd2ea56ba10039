"""Binary morphisms: application, composition, iteration, and recognition.

A morphism is determined by the images of 0 and 1 and extends to words by
concatenation.  The module exports the doubling morphism MU (0 -> 01,
1 -> 10), the letter swap E, the identity, and the 19-uniform morphism H19
whose fixed point from 0 stays below exponent 7/3 everywhere except at
exactly 7/3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .words import Word

__all__ = [
    "Morphism",
    "MorphismForm",
    "classify_form",
    "thue_morse_direct",
    "parse_morphism",
    "MU",
    "E",
    "IDENTITY",
    "H19",
]


@dataclass(frozen=True)
class Morphism:
    """A binary morphism given by its two letter images."""

    image0: Word
    image1: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "image0", Word(self.image0))
        object.__setattr__(self, "image1", Word(self.image1))

    @cached_property
    def _table(self) -> dict[int, str]:
        return {48: str(self.image0), 49: str(self.image1)}

    @property
    def is_erasing(self) -> bool:
        return not self.image0 or not self.image1

    @property
    def is_uniform(self) -> bool:
        return len(self.image0) == len(self.image1)

    def image(self, symbol: str) -> Word:
        if symbol == "0":
            return self.image0
        if symbol == "1":
            return self.image1
        raise ValueError(f"invalid symbol {symbol!r}")

    def __call__(self, w: str) -> Word:
        """Apply to a word: concatenation of per-symbol images."""
        return Word(str.translate(w, self._table))

    def compose(self, inner: "Morphism") -> "Morphism":
        """The morphism mapping a to self(inner(a))."""
        return Morphism(self(inner.image0), self(inner.image1))

    def power(self, k: int) -> "Morphism":
        """k-fold self-composition; power(0) is the identity."""
        if k < 0:
            raise ValueError("negative power")
        acc = IDENTITY
        for _ in range(k):
            acc = self.compose(acc)
        return acc

    def is_prolongable(self, symbol: str) -> bool:
        """Whether the image of `symbol` starts with it and has length >= 2.

        The length requirement makes iteration from the symbol strictly
        grow, so the fixed point is infinite; h(a) = a alone is reported
        as not prolongable.
        """
        img = self.image(symbol)
        return len(img) >= 2 and img[0] == symbol

    def fixed_point_prefix(self, symbol: str, n: int) -> Word:
        """First n symbols of the infinite word obtained by iterating from `symbol`.

        Generated by repeatedly expanding a growing buffer, so memory stays
        linear in n.  Requires a non-erasing morphism prolongable on the
        symbol.
        """
        if n < 1:
            raise ValueError("prefix length must be positive")
        if self.is_erasing:
            raise ValueError("morphism is erasing; iteration is undefined")
        if not self.is_prolongable(symbol):
            raise ValueError(
                f"morphism is not prolongable on {symbol!r}: "
                f"image {self.image(symbol)!r} must have length >= 2 "
                f"and start with {symbol!r}"
            )
        s = symbol
        while len(s) < n:
            s = str.translate(s, self._table)
        return Word(s[:n])

    def to_text(self) -> str:
        return f"0->{self.image0};1->{self.image1}"

    def to_json(self) -> dict:
        return {"image0": str(self.image0), "image1": str(self.image1)}

    def __str__(self) -> str:
        return self.to_text()


MU = Morphism(Word("01"), Word("10"))
E = Morphism(Word("1"), Word("0"))
IDENTITY = Morphism(Word("0"), Word("1"))

# 19-uniform; its fixed point from 0 has maximal exponent exactly 7/3.
H19 = Morphism(
    Word("0110100110110010110"),
    Word("1001011001001101001"),
)


@dataclass(frozen=True)
class MorphismForm:
    """Result of recognizing a morphism as mu^k, E o mu^k, or neither."""

    kind: str  # "mu-power" | "e-mu-power" | "other"
    k: Optional[int] = None

    @classmethod
    def mu_power(cls, k: int) -> "MorphismForm":
        return cls("mu-power", k)

    @classmethod
    def e_mu_power(cls, k: int) -> "MorphismForm":
        return cls("e-mu-power", k)

    @classmethod
    def other(cls) -> "MorphismForm":
        return cls("other")

    def __str__(self) -> str:
        if self.kind == "mu-power":
            return f"MuPower({self.k})"
        if self.kind == "e-mu-power":
            return f"EComposeMuPower({self.k})"
        return "Other"


def classify_form(h: Morphism) -> MorphismForm:
    """Recognize h as MU**k or E.compose(MU**k) by exact image comparison.

    The image lengths decide the only possible k (2**k), so no search is
    involved.
    """
    length = len(h.image0)
    if length == 0 or len(h.image1) != length or length & (length - 1):
        return MorphismForm.other()
    k = length.bit_length() - 1
    img0, img1 = "0", "1"
    for _ in range(k):
        img0, img1 = MU(img0), MU(img1)
    if (h.image0, h.image1) == (img0, img1):
        return MorphismForm.mu_power(k)
    if (h.image0, h.image1) == (img1, img0):
        return MorphismForm.e_mu_power(k)
    return MorphismForm.other()


def thue_morse_direct(n: int) -> Word:
    """Length-n prefix of the Thue-Morse word via popcount parity.

    Symbol i is the parity of the number of ones in the binary expansion
    of i; independent of the morphism-iteration generator, for
    cross-checking.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    return Word("".join("01"[i.bit_count() & 1] for i in range(n)))


_ASSIGNMENT = re.compile(r"^([01])->([01]*)$")

_NAMED = {
    "mu": MU,
    "e": E,
    "E": E,
    "id": IDENTITY,
    "identity": IDENTITY,
    "h-seebold19": H19,
}


def parse_morphism(text: str) -> Morphism:
    """Parse "0->word;1->word" (spaces tolerated) or a named constant.

    Names: mu, E, id / identity, h-seebold19.  Empty images are accepted
    (erasing morphisms are representable; iteration rejects them).
    """
    name = text.strip()
    if name in _NAMED:
        return _NAMED[name]
    compact = text.replace(" ", "").replace("\t", "")
    images: dict[str, str] = {}
    for part in compact.split(";"):
        m = _ASSIGNMENT.match(part)
        if not m:
            raise ValueError(
                f"bad morphism {text!r}: expected \"0->word;1->word\" "
                f"or one of {sorted(set(_NAMED) - {'E'})}"
            )
        sym, img = m.group(1), m.group(2)
        if sym in images:
            raise ValueError(f"bad morphism {text!r}: image of {sym} given twice")
        images[sym] = img
    if set(images) != {"0", "1"}:
        raise ValueError(f"bad morphism {text!r}: images of both 0 and 1 required")
    return Morphism(Word(images["0"]), Word(images["1"]))
