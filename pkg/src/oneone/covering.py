"""Strongly-cyclic branched coverings and their cyclic presentations.

An n-fold strongly-cyclic covering of ``K`` is fixed by the image ``x`` of
alpha in ``Z_n`` (gamma, the meridian class, always maps to 1).  It exists
iff ``p*x + q'' = 0 (mod n)`` is solvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclicpres import CyclicPresentation
from .knot import ConsistencyError, OneOneKnot
from .words import ALPHA, ALPHA_HAT, GAMMA, Word, cyclic_rotate, exponent_sum, substitute


class EmptyRelatorError(ValueError):
    """The relator is trivial, so ``G_n`` is free of rank ``n``."""


class DegenerateRelatorError(ValueError):
    """The relator is a pure power of gamma."""


@dataclass(frozen=True)
class Monodromy:
    n: int
    x: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 0 <= self.x < self.n:
            raise ValueError(f"x must lie in [0, {self.n})")


@dataclass(frozen=True)
class SyllableDecomposition:
    """``A^e1 g^d1 ... A^es g^ds``; only ``ds`` may be zero."""

    pairs: tuple[tuple[int, int], ...]

    def indices(self, n: int) -> list[int]:
        out, acc = [], 0
        for _, delta in self.pairs:
            out.append(acc % n + 1)
            acc += delta
        return out


def covering_monodromies(k: OneOneKnot, n: int) -> list[Monodromy]:
    if n < 2:
        raise ValueError("n must be at least 2")
    d = gcd(k.p, n)
    if k.q_dblprime % d:
        return []
    m = n // d
    x0 = (-(k.q_dblprime // d) * pow(k.p // d, -1, m)) % m if m > 1 else 0
    return [Monodromy(n, x0 + j * m) for j in range(d)]


def rbar(k: OneOneKnot, m: Monodromy) -> Word:
    """Relator rewritten in ``A = a g^-x`` and ``g``."""
    if (k.p * m.x + k.q_dblprime) % m.n:
        raise ConsistencyError(f"x={m.x} is not a monodromy of this knot for n={m.n}")
    images = {ALPHA: Word([(ALPHA_HAT, 1), (GAMMA, m.x)]), GAMMA: Word.letter(GAMMA)}
    return substitute(k.relator, images)


def decompose(r: Word, n: int) -> SyllableDecomposition:
    if not r:
        raise EmptyRelatorError("empty relator: free presentation")
    first = next((i for i, (g, _) in enumerate(r.syllables) if g == ALPHA_HAT), None)
    if first is None:
        raise DegenerateRelatorError(f"relator {r!r} involves gamma only")
    r = cyclic_rotate(r, first)
    syl = r.syllables
    pairs = []
    i = 0
    while i < len(syl):
        g, eps = syl[i]
        if g != ALPHA_HAT:
            raise ValueError(f"unexpected generator {g!r} in relator")
        delta = 0
        if i + 1 < len(syl):
            g2, delta = syl[i + 1]
            if g2 != GAMMA:
                raise ValueError(f"unexpected generator {g2!r} in relator")
        pairs.append((eps, delta))
        i += 2
    if sum(d for _, d in pairs) % n:
        raise ConsistencyError(f"gamma exponent sum of {r!r} is not divisible by {n}")
    return SyllableDecomposition(tuple(pairs))


def cyclic_word(k: OneOneKnot, m: Monodromy, leading_gamma_offset: bool = False) -> CyclicPresentation:
    """Word ``w`` of the cyclic presentation of the covering fixed by ``m``.

    By default the relator is rotated to start with an ``A`` syllable and the
    first index is 1.  With ``leading_gamma_offset`` a leading ``g^d`` is
    instead read as a start index of ``1 + d``; the two results differ by
    the shift ``theta^d``.
    """
    r = rbar(k, m)
    try:
        dec = decompose(r, m.n)
    except EmptyRelatorError:
        return CyclicPresentation(m.n, Word())
    offset = 0
    if leading_gamma_offset and r.syllables[0][0] == GAMMA:
        offset = r.syllables[0][1]
    idx = dec.indices(m.n)
    return CyclicPresentation.from_indices(
        m.n, [(i + offset, e) for i, (e, _) in zip(idx, dec.pairs)]
    )


def coverings(k: OneOneKnot, n: int) -> list[tuple[Monodromy, CyclicPresentation]]:
    return [(m, cyclic_word(k, m)) for m in covering_monodromies(k, n)]


def gamma_balance(k: OneOneKnot, m: Monodromy) -> int:
    return exponent_sum(rbar(k, m), GAMMA) % m.n
