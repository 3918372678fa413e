"""Closed-form families used as fixtures and cross-checks.

Torus knots ``t(k, hk +- 1)``, their closed-form cyclic words, the classical
torus-knot Alexander polynomial, and the named cyclically presented groups
(Fibonacci, Sieradski, fractional Fibonacci).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from .cyclicpres import CyclicPresentation, IntPoly
from .mcg import MCGWord, torus_knot_mcg


@dataclass(frozen=True)
class TorusParams:
    """``sign=+1`` selects ``t(k, hk+1)``, ``sign=-1`` selects ``t(k, hk-1)``."""

    k: int
    h: int
    sign: int = 1

    def __post_init__(self):
        if self.k < 1 or self.h < 1:
            raise ValueError("h and k must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def knot_type(self) -> tuple[int, int]:
        return (self.k, self.h * self.k + self.sign)

    @property
    def is_trivial(self) -> bool:
        return min(self.knot_type) <= 1

    def psi(self) -> MCGWord:
        # t(k, hk -+ 1) comes from d_a^(+-h), so the twist sign is opposite
        return torus_knot_mcg(self.k, self.h, -self.sign)

    def alexander(self) -> IntPoly:
        if self.is_trivial:
            return IntPoly((1,))
        return torus_alexander(*self.knot_type)


def _prod(lo: int, hi: int) -> Iterator[tuple[int, int]]:
    """Index/sign pairs for ``prod_{j=lo}^{hi}``.

    ``hi == lo - 1`` is the empty product; a range running further backwards
    is read as the inverse of ``prod_{j=hi+1}^{lo-1}``.
    """
    if hi >= lo - 1:
        for j in range(lo, hi + 1):
            yield j, 1
    else:
        for j in range(lo - 1, hi, -1):
            yield j, -1


def torus_word_formula(tp: TorusParams, n: int) -> CyclicPresentation:
    """Closed-form word of the n-fold cyclic covering of ``t(k, hk +- 1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    k, h = tp.k, tp.h
    letters: list[tuple[int, int]] = []
    if tp.sign > 0:
        for j, s in _prod(0, h * (k - 1)):
            letters.append((1 - j * k, s))
        for i, si in _prod(0, k - 2):
            inner = [(2 + i - (h * (k - 1 - i) + 1 - l) * k, -sl) for l, sl in _prod(1, h)]
            letters.extend(inner if si > 0 else [(x, -e) for x, e in reversed(inner)])
    else:
        for j, s in _prod(1, h * (k - 1) - 1):
            letters.append((1 + j * k, -s))
        for i, si in _prod(0, k - 2):
            inner = [(2 + i + (h * (k - 1 - i) - 1 - l) * k, sl) for l, sl in _prod(0, h - 1)]
            letters.extend(inner if si > 0 else [(x, -e) for x, e in reversed(inner)])
    return CyclicPresentation.from_indices(n, letters)


def torus_word_unsimplified(tp: TorusParams, n: int) -> CyclicPresentation:
    """Word for ``t(k, hk+1)`` before cancelling the first and last ``h`` letters."""
    if tp.sign < 0:
        raise ValueError("only the t(k, hk+1) family has an unsimplified closed form")
    if n < 2:
        raise ValueError("n must be at least 2")
    k, h = tp.k, tp.h
    letters = [(1 - j * k, 1) for j in range(h * k + 1)]
    for i in range(k):
        letters.extend((2 + i - (h * (k - i) - l) * k, -1) for l in range(h))
    return CyclicPresentation.from_indices(n, letters)


# --- integer polynomials -------------------------------------------------


def _pmul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _pdivmod(f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic (up to sign) integer polynomial."""
    f = list(f)
    lead = g[-1]
    if abs(lead) != 1:
        raise ValueError("divisor must have leading coefficient +-1")
    q = [0] * max(len(f) - len(g) + 1, 1)
    for i in range(len(f) - len(g), -1, -1):
        c = f[i + len(g) - 1] * lead
        q[i] = c
        for j, b in enumerate(g):
            f[i + j] -= c * b
    return q, f[: len(g) - 1]


def _tpow_minus_one(m: int) -> list[int]:
    return [-1] + [0] * (m - 1) + [1]


def torus_alexander(a: int, b: int) -> IntPoly:
    """``(t^ab - 1)(t - 1) / ((t^a - 1)(t^b - 1))``."""
    if a < 2 or b < 2:
        raise ValueError("torus knot parameters must be at least 2")
    if gcd(a, b) != 1:
        raise ValueError(f"t({a},{b}) is not a knot: gcd = {gcd(a, b)}")
    num = _pmul(_tpow_minus_one(a * b), _tpow_minus_one(1))
    den = _pmul(_tpow_minus_one(a), _tpow_minus_one(b))
    q, rem = _pdivmod(num, den)
    if any(rem):
        raise ArithmeticError("non-zero remainder")
    return IntPoly(tuple(q))


# --- named presentations -------------------------------------------------


def fibonacci(n: int) -> CyclicPresentation:
    """``F(2n) = G_n(x1^-1 x2^2 x3^-1 x2)``."""
    return CyclicPresentation.from_indices(n, [(1, -1), (2, 2), (3, -1), (2, 1)])


def sieradski(n: int) -> CyclicPresentation:
    return CyclicPresentation.from_indices(n, [(1, 1), (3, 1), (2, -1)])


def fractional_fibonacci(n: int, l: int, k: int) -> CyclicPresentation:
    """``G_n((x1^-l x2^l)^k x2 (x3^-l x2^l)^k)``."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be positive")
    letters = [(1, -l), (2, l)] * k + [(2, 1)] + [(3, -l), (2, l)] * k
    return CyclicPresentation.from_indices(n, letters)


@dataclass(frozen=True)
class NamedPresentation:
    name: str
    pattern: str
    build: Callable[..., CyclicPresentation]


def named_presentations() -> tuple[NamedPresentation, ...]:
    return (
        NamedPresentation("fibonacci", "G_n(x1^-1 x2^2 x3^-1 x2)", fibonacci),
        NamedPresentation("sieradski", "G_n(x1 x3 x2^-1)", sieradski),
        NamedPresentation(
            "fractional_fibonacci", "G_n((x1^-l x2^l)^k x2 (x3^-l x2^l)^k)", fractional_fibonacci
        ),
    )
