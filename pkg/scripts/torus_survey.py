"""Survey of cyclic coverings of torus knots t(k, hk +- 1).

For each knot and n, compares the pipeline word with the closed form and
f_w with the Alexander polynomial, and reports H1 of the covering.

    python scripts/torus_survey.py --max-hk 3 --max-n 12
"""

import argparse

from oneone.catalog import TorusParams, torus_word_formula
from oneone.covering import covering_monodromies, cyclic_word
from oneone.cyclicpres import abelianization, find_shift, unit_equivalent_up_to_shift
from oneone.knot import analyze


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-hk", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()
    mismatches = 0
    print(f"{'knot':>10} {'n':>3}  {'closed':>6} {'alex':>5}  H1")
    for k in range(1, args.max_hk + 1):
        for h in range(1, args.max_hk + 1):
            for sign in (1, -1):
                tp = TorusParams(k, h, sign)
                kn = analyze(tp.psi())
                delta = tp.alexander()
                for n in range(2, args.max_n + 1):
                    (m,) = covering_monodromies(kn, n)
                    w = cyclic_word(kn, m)
                    closed = find_shift(w, torus_word_formula(tp, n)) is not None
                    alex = "-" if n <= delta.degree else (
                        "ok" if unit_equivalent_up_to_shift(w, delta) is not None else "FAIL")
                    mismatches += (not closed) + (alex == "FAIL")
                    a, b = tp.knot_type
                    print(f"{f't({a},{b})':>10} {n:>3}  {'ok' if closed else 'FAIL':>6} {alex:>5}  "
                          f"{abelianization(w)}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
