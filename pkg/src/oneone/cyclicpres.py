"""Cyclically presented groups ``G_n(w)``.

The relators are ``w, theta(w), ..., theta^(n-1)(w)`` where the shift
``theta`` sends ``x_i`` to ``x_(i+1)``, subscripts mod ``n``.  Words are
:class:`~oneone.words.Word` objects over the integer generators ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .intlinalg import AbelianGroup, IntMatrix, circulant
from .words import Word, cyclic_conjugates, cyclically_reduce, exponent_sum, format_word, parse_word


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    w: Word

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        bad = [i for i in self.w.generators() if not (isinstance(i, int) and 1 <= i <= self.n)]
        if bad:
            raise ValueError(f"generator indices {sorted(bad)} outside 1..{self.n}")

    @classmethod
    def from_indices(cls, n: int, letters: Iterable[tuple[int, int]]) -> "CyclicPresentation":
        """Build from ``(index, exponent)`` pairs; indices taken mod ``n`` into ``[1, n]``."""
        if n < 1:
            raise ValueError("n must be positive")
        return cls(n, Word(((i - 1) % n + 1, e) for i, e in letters))

    @classmethod
    def parse(cls, text: str, n: int) -> "CyclicPresentation":
        w = parse_word(text, r"x\d+", lambda s: int(s[1:]))
        return cls.from_indices(n, w.syllables)

    def relators(self) -> list[Word]:
        return [theta_shift(self, s).w for s in range(self.n)]

    def __str__(self) -> str:
        return format_cyclic_word(self.w)


def format_cyclic_word(w: Word) -> str:
    return format_word(w, lambda i: f"x{i}")


def theta_shift(p: CyclicPresentation, s: int) -> CyclicPresentation:
    n = p.n
    return CyclicPresentation(n, Word(((i - 1 + s) % n + 1, e) for i, e in p.w.syllables))


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial ``c[0] + c[1] t + ...``."""

    coeffs: tuple[int, ...]

    def trimmed(self) -> tuple[int, ...]:
        """Coefficients with leading and trailing zeros removed."""
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        return tuple(c[i:])

    @property
    def degree(self) -> int:
        """Degree of the Laurent-normalized polynomial (span of nonzero terms); -1 for zero."""
        return len(self.trimmed()) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"


def polynomial(p: CyclicPresentation) -> IntPoly:
    """``f_w(t) = sum a_i t^(i-1)`` with ``a_i`` the exponent sum of ``x_i``."""
    return IntPoly(tuple(exponent_sum(p.w, i) for i in range(1, p.n + 1)))


def relation_matrix(p: CyclicPresentation) -> IntMatrix:
    """Row ``k`` is the exponent-sum vector of ``theta^k(w)``."""
    return circulant(polynomial(p).coeffs)


def abelianization(p: CyclicPresentation) -> AbelianGroup:
    return AbelianGroup.cokernel(relation_matrix(p))


def _relabel(p: CyclicPresentation, u: int, s: int) -> Word:
    n = p.n
    return Word(((u * (i - 1) + s) % n + 1, e) for i, e in p.w.syllables)


def find_shift(
    p1: CyclicPresentation,
    p2: CyclicPresentation,
    cyclic: bool = True,
    invert: bool = False,
    relabel: bool = False,
) -> int | None:
    """Smallest ``s`` with ``theta^s(w1) ~ w2``, or ``None``.

    With ``cyclic`` the comparison is up to cyclic reduction and cyclic
    permutation (conjugate relators); ``invert`` also admits ``w2^-1``;
    ``relabel`` widens ``theta^s`` to the affine maps ``i -> u*i + s`` with
    ``u`` a unit mod ``n`` (the unit 1 is tried first).
    """
    if p1.n != p2.n:
        raise ValueError(f"presentations have different n ({p1.n} vs {p2.n})")
    n = p1.n
    targets = [p2.w] + ([~p2.w] if invert else [])
    if cyclic:
        pool = set()
        for t in targets:
            pool.update(cyclic_conjugates(t))
    else:
        pool = set(targets)
    units = [u for u in range(1, n + 1) if gcd(u, n) == 1] if relabel else [1]
    for u in units:
        for s in range(n):
            cand = _relabel(p1, u, s)
            if cyclic:
                if cyclically_reduce(cand) in pool:
                    return s
            elif cand in pool:
                return s
    return None


def equivalent_up_to_shift(p1: CyclicPresentation, p2: CyclicPresentation, **flags) -> bool:
    return find_shift(p1, p2, **flags) is not None


def equal_up_to_units(f: IntPoly | Sequence[int], g: IntPoly | Sequence[int]) -> bool:
    """True iff ``f = +-t^j g`` in ``Z[t, t^-1]``."""
    a = f.trimmed() if isinstance(f, IntPoly) else IntPoly(tuple(f)).trimmed()
    b = g.trimmed() if isinstance(g, IntPoly) else IntPoly(tuple(g)).trimmed()
    return a == b or a == tuple(-x for x in b)


def unit_equivalent_up_to_shift(p: CyclicPresentation, g: IntPoly | Sequence[int]) -> int | None:
    """Smallest ``s`` with ``f`` of ``theta^s(w)`` equal to ``g`` up to units, else ``None``.

    A shift multiplies ``f_w`` by ``t^s`` modulo ``t^n - 1``, so this is unit
    equivalence in ``Z[t]/(t^n - 1)`` made concrete.
    """
    for s in range(p.n):
        if equal_up_to_units(polynomial(theta_shift(p, s)), g):
            return s
    return None
