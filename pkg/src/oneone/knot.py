"""Invariants of the (1,1)-knot determined by a mapping class."""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import AbelianGroup, IntMatrix
from .mcg import MCGWord, apply_mcg, omega
from .words import ALPHA, BETA, GAMMA, Word, erase, exponent_sum


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class OneOneKnot:
    psi: MCGWord
    psi_beta: Word
    relator: Word
    p: int
    q_prime: int
    q_dblprime: int

    @property
    def lens_p(self) -> int:
        return abs(self.p)

    @property
    def lens_q(self) -> int:
        return self.q_prime + self.q_dblprime

    @property
    def lens_q_normalized(self) -> int | None:
        """``q`` reduced into ``[0, |p|)``; ``None`` when ``p == 0``."""
        return self.lens_q % self.lens_p if self.lens_p else None

    @property
    def ambient(self) -> str:
        if self.p == 0:
            return "S^1 x S^2"
        if self.lens_p == 1:
            return "S^3"
        return f"L({self.lens_p},{self.lens_q_normalized})"


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple[Word, ...]


def analyze(psi: MCGWord) -> OneOneKnot:
    psi_beta = apply_mcg(psi, Word.letter(BETA))
    k = OneOneKnot(
        psi=psi,
        psi_beta=psi_beta,
        relator=erase(psi_beta, BETA),
        p=exponent_sum(psi_beta, ALPHA),
        q_prime=exponent_sum(psi_beta, BETA),
        q_dblprime=exponent_sum(psi_beta, GAMMA),
    )
    m = omega(psi)
    if m.m21 != k.p or m.m11 != k.q_prime + k.q_dblprime:
        raise ConsistencyError(f"homology of psi(b) disagrees with Omega(psi) = {m.as_rows()}")
    return k


def knot_group(k: OneOneKnot) -> Presentation:
    """``<a, g | r(a, g)>``; no relator when ``r`` is trivial."""
    return Presentation((ALPHA, GAMMA), (k.relator,) if k.relator else ())


def complement_homology(k: OneOneKnot) -> AbelianGroup:
    return AbelianGroup.cokernel(IntMatrix.from_rows([[k.p, k.q_dblprime]]))
