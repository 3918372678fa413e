"""Strongly-cyclic branched coverings of (1,1)-knots and their cyclic presentations."""

from .covering import Monodromy, covering_monodromies, cyclic_word, decompose, rbar
from .cyclicpres import CyclicPresentation, IntPoly, abelianization, polynomial, theta_shift
from .intlinalg import AbelianGroup, IntMatrix, smith_normal_form
from .knot import OneOneKnot, analyze, complement_homology, knot_group
from .mcg import MCGWord, apply_mcg, omega, torus_knot_mcg
from .words import Word, parse_word

__all__ = [
    "AbelianGroup", "CyclicPresentation", "IntMatrix", "IntPoly", "MCGWord", "Monodromy",
    "OneOneKnot", "Word", "abelianization", "analyze", "apply_mcg", "complement_homology",
    "covering_monodromies", "cyclic_word", "decompose", "knot_group", "omega", "parse_word",
    "polynomial", "rbar", "smith_normal_form", "theta_shift", "torus_knot_mcg",
]
