"""Strongly-cyclic coverings of two (1,1)-knots in lens spaces.

    python scripts/lens_space_examples.py [--max-n 8]
"""

import argparse

from oneone.covering import covering_monodromies, cyclic_word
from oneone.cyclicpres import abelianization
from oneone.knot import analyze, complement_homology
from oneone.mcg import MCGWord

KNOTS = {"L(6,5) knot": "a^2 g a^-4", "L(4,1) knot": "a^-2 g^-2 a^-2"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    for label, text in KNOTS.items():
        k = analyze(MCGWord.parse(text))
        print(f"{label}: psi = {text}  p={k.p} q'={k.q_prime} q''={k.q_dblprime}  "
              f"{k.ambient}  H1(complement) = {complement_homology(k)}")
        for n in range(2, args.max_n + 1):
            ms = covering_monodromies(k, n)
            if not ms:
                print(f"  n={n}: none")
                continue
            for m in ms:
                w = cyclic_word(k, m, leading_gamma_offset=True)
                print(f"  n={n} x={m.x}: G_n({w})  H1 = {abelianization(w)}")


if __name__ == "__main__":
    main()
