"""Free-group words in reduced syllable form.

A word is a tuple of ``(generator, exponent)`` syllables.  Generators may be
any hashable, orderable label; the loop generators of the twice-punctured
torus use the one-letter names below, cyclic presentations use the integers
``1..n``.
"""

from __future__ import annotations

import re
from typing import Callable, Hashable, Iterable, Mapping

ALPHA = "a"
BETA = "b"
GAMMA = "g"
ALPHA_HAT = "A"

PI1_LETTERS = (ALPHA, BETA, GAMMA, ALPHA_HAT)


class WordError(ValueError):
    """Malformed word or generator map."""


class ParseError(WordError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


def _push(stack: list, gen: Hashable, exp: int) -> None:
    if exp == 0:
        return
    if stack and stack[-1][0] == gen:
        total = stack[-1][1] + exp
        if total:
            stack[-1] = (gen, total)
        else:
            stack.pop()
    else:
        stack.append((gen, exp))


class Word:
    """Immutable freely reduced word.

    The constructor reduces eagerly, so ``Word([("a", 1), ("a", -1)])`` is
    the identity.
    """

    __slots__ = ("_syl", "_hash")

    def __init__(self, syllables: Iterable[tuple[Hashable, int]] = ()):
        stack: list = []
        for gen, exp in syllables:
            _push(stack, gen, int(exp))
        self._syl = tuple(stack)
        self._hash = None

    @classmethod
    def _trusted(cls, syllables: tuple) -> "Word":
        w = cls.__new__(cls)
        w._syl = syllables
        w._hash = None
        return w

    @classmethod
    def letter(cls, gen: Hashable, exp: int = 1) -> "Word":
        return cls([(gen, exp)])

    @property
    def syllables(self) -> tuple[tuple[Hashable, int], ...]:
        return self._syl

    def generators(self) -> set:
        return {g for g, _ in self._syl}

    def letters(self) -> list[tuple[Hashable, int]]:
        """Expand into signed letters ``(gen, +-1)``."""
        out = []
        for g, e in self._syl:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self._syl)

    def __bool__(self) -> bool:
        return bool(self._syl)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._syl == other._syl

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._syl)
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        stack = list(self._syl)
        for g, e in other._syl:
            _push(stack, g, e)
        return type(self)._trusted(tuple(stack))

    def __invert__(self) -> "Word":
        return type(self)._trusted(tuple((g, -e) for g, e in reversed(self._syl)))

    def inverse(self) -> "Word":
        return ~self

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        if n == 0 or not self._syl:
            return type(self)._trusted(())
        if len(self._syl) == 1:
            g, e = self._syl[0]
            return type(self)._trusted(((g, e * n),))
        stack: list = []
        for _ in range(n):
            for g, e in self._syl:
                _push(stack, g, e)
        return type(self)._trusted(tuple(stack))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_word(self) or '1'!r})"


def reduce(raw: Iterable[tuple[Hashable, int]]) -> Word:
    """Freely reduce a sequence of ``(generator, exponent)`` pairs."""
    return Word(raw)


def substitute(w: Word, images: Mapping[Hashable, Word]) -> Word:
    """Image of ``w`` under the free-group homomorphism ``g -> images[g]``."""
    stack: list = []
    for g, e in w.syllables:
        try:
            img = images[g]
        except KeyError:
            raise WordError(f"generator map has no image for {g!r}") from None
        part = img ** e
        for h, f in part.syllables:
            _push(stack, h, f)
    return Word._trusted(tuple(stack))


def erase(w: Word, gen: Hashable) -> Word:
    return Word((g, e) for g, e in w.syllables if g != gen)


def exponent_sum(w: Word, gen: Hashable) -> int:
    return sum(e for g, e in w.syllables if g == gen)


def cyclic_rotate(w: Word, k: int) -> Word:
    """Conjugate ``w`` so that it starts at syllable ``k``."""
    syl = w.syllables
    if not syl:
        return w
    if not 0 <= k < len(syl):
        raise WordError(f"syllable index {k} out of range for length {len(syl)}")
    return Word(syl[k:] + syl[:k])


def cyclically_reduce(w: Word) -> Word:
    """Shortest cyclic conjugate obtained by cancelling or merging at the seam."""
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        g, e0 = syl[0]
        _, e1 = syl[-1]
        middle = syl[1:-1]
        syl = ([(g, e0 + e1)] if e0 + e1 else []) + middle
        syl = list(Word(syl).syllables)
    return Word._trusted(tuple(syl))


def cyclic_conjugates(w: Word) -> list[Word]:
    """All letter-level cyclic permutations of the cyclic reduction of ``w``."""
    c = cyclically_reduce(w)
    letters = c.letters()
    if not letters:
        return [c]
    seen = []
    found = set()
    for i in range(len(letters)):
        r = Word(letters[i:] + letters[:i])
        if r not in found:
            found.add(r)
            seen.append(r)
    return seen


# --- text syntax ---------------------------------------------------------

_WS = re.compile(r"\s*")
_EXP = re.compile(r"\^\s*(\(\s*[+-]?\d+\s*\)|[+-]?\d+)")


def parse_word(
    text: str,
    letter_pattern: str = r"[abgA]",
    convert: Callable[[str], Hashable] = str,
) -> Word:
    """Parse ``a^2 g a^-1`` style text, with optional ``( ... )^k`` groups.

    Zero exponents are rejected; errors carry a 1-based column.
    """
    letter_re = re.compile(letter_pattern)
    pos = 0

    def skip() -> None:
        nonlocal pos
        pos = _WS.match(text, pos).end()

    def exponent() -> int:
        nonlocal pos
        m = _EXP.match(text, pos)
        if not m:
            return 1
        pos = m.end()
        return int(m.group(1).strip("() "))

    def sequence(depth: int) -> Word:
        nonlocal pos
        acc = Word()
        while True:
            skip()
            if pos >= len(text):
                if depth:
                    raise ParseError("unclosed '('", pos + 1)
                return acc
            start = pos
            ch = text[pos]
            if ch == ")":
                if not depth:
                    raise ParseError("unbalanced ')'", pos + 1)
                pos += 1
                return acc
            if ch == "(":
                pos += 1
                atom = sequence(depth + 1)
            else:
                m = letter_re.match(text, pos)
                if not m:
                    raise ParseError(f"unexpected character {ch!r}", pos + 1)
                pos = m.end()
                atom = Word.letter(convert(m.group(0)))
            skip()
            e = exponent()
            if e == 0:
                raise ParseError("zero exponent", start + 1)
            acc = acc * atom ** e

    return sequence(0)


def format_word(w: Word, name: Callable[[Hashable], str] = str) -> str:
    """Render as ``a^2 g a^-1``; the identity renders as the empty string."""
    parts = []
    for g, e in w.syllables:
        parts.append(name(g) if e == 1 else f"{name(g)}^{e}")
    return " ".join(parts)

