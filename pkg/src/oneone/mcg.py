"""Pure mapping class group of the twice-punctured torus.

Elements are words in the right-hand Dehn twists about alpha, beta, gamma
(letters ``a``, ``b``, ``g``).  The action on the loop generators is given
by the substitutions in ``twist_map``; a word acts by composition with its
rightmost factor applied first, the only order that reproduces the worked
``psi(beta)`` words (e.g. ``a^2 g a^-4`` sends ``b`` to
``(a^2 g a^-1)^4 a^2 b``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold

from .words import ALPHA, ALPHA_HAT, BETA, GAMMA, Word, WordError, parse_word, substitute

TWISTS = ("a", "b", "g")


class MCGWord(Word):
    """Word in the twists ``a``, ``b``, ``g`` (adjacent equal twists merged)."""

    __slots__ = ()

    def __init__(self, syllables=()):
        super().__init__(syllables)
        for t, _ in self.syllables:
            if t not in TWISTS:
                raise WordError(f"unknown Dehn twist {t!r}")

    @classmethod
    def parse(cls, text: str) -> "MCGWord":
        return cls(parse_word(text, r"[abg]").syllables)


@dataclass(frozen=True)
class SL2Matrix:
    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det != 1:
            raise ValueError(f"determinant {self.det} != 1")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, o: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def as_rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))


IDENTITY = SL2Matrix(1, 0, 0, 1)


def twist_map(twist: str, e: int) -> dict[str, Word]:
    """Images of the loop generators under ``d_twist ** e``."""
    a, b, g = Word.letter(ALPHA), Word.letter(BETA), Word.letter(GAMMA)
    if twist == "a":
        return {ALPHA: a, BETA: Word.letter(ALPHA, e) * b, GAMMA: Word.letter(ALPHA, e) * g}
    if twist == "b":
        return {ALPHA: Word.letter(BETA, -e) * a, BETA: b, GAMMA: g}
    if twist == "g":
        return {ALPHA: a * Word.letter(GAMMA, -e), BETA: b, GAMMA: g}
    raise WordError(f"unknown Dehn twist {twist!r}")


def _check_alphabet(w: Word) -> None:
    if ALPHA_HAT in w.generators():
        raise WordError("the mapping class action is defined on a, b, g only")


def apply_twist(twist: str, e: int, w: Word) -> Word:
    _check_alphabet(w)
    if e == 0:
        return w
    return substitute(w, twist_map(twist, e))


def apply_mcg(psi: MCGWord, w: Word) -> Word:
    _check_alphabet(w)
    for t, e in reversed(psi.syllables):
        w = substitute(w, twist_map(t, e))
    return w


def twist_matrix(twist: str, e: int = 1) -> SL2Matrix:
    if twist == "a":
        return SL2Matrix(1, 0, e, 1)
    if twist in ("b", "g"):
        return SL2Matrix(1, -e, 0, 1)
    raise WordError(f"unknown Dehn twist {twist!r}")


def omega(psi: MCGWord) -> SL2Matrix:
    """Action on H1 of the closed torus in the ordered basis (beta, alpha)."""
    return _fold(lambda m, f: m @ twist_matrix(*f), psi.syllables, IDENTITY)


def torus_knot_mcg(k: int, h: int, sign: int) -> MCGWord:
    """``d_a^(sign*h) d_g^-k d_b^(1+k) d_a``, the torus knot t(k, hk - sign)."""
    if k < 1 or h < 1:
        raise ValueError("h and k must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return MCGWord([("a", sign * h), ("g", -k), ("b", 1 + k), ("a", 1)])
