"""Command-line front end.

    python -m oneone present "a^-2 g^-2 a^-2" --n 4 --all-monodromies
    python -m oneone cover "a^2 g a^-4" --n 6 --json

Exit status: 0 success, 2 parse or domain error, 3 when no strongly-cyclic
covering exists for any requested ``n``.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Sequence

from .catalog import TorusParams, torus_word_formula
from .covering import Monodromy, covering_monodromies, cyclic_word
from .cyclicpres import abelianization, format_cyclic_word, polynomial
from .knot import OneOneKnot, analyze, complement_homology
from .mcg import MCGWord
from .words import WordError, format_word

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_NO_COVERING = 0, 2, 3

SUBCOMMANDS = ("analyze", "cover", "present", "homology", "poly", "torus")


class UsageError(ValueError):
    pass


def parse_mcg(text: str) -> MCGWord:
    return MCGWord.parse(text)


def parse_n_values(specs: Sequence[str] | None) -> list[int]:
    """``["4", "6-8"]`` -> ``[4, 6, 7, 8]``."""
    out: set[int] = set()
    for spec in specs or ():
        for part in spec.split(","):
            part = part.strip()
            try:
                if "-" in part[1:]:
                    lo, hi = part.split("-", 1) if part[0] != "-" else (part, part)
                    out.update(range(int(lo), int(hi) + 1))
                else:
                    out.add(int(part))
            except ValueError:
                raise UsageError(f"bad --n value {part!r}") from None
    if any(n < 2 for n in out):
        raise UsageError("--n values must be at least 2")
    return sorted(out)


def _monodromy_entry(k: OneOneKnot, m: Monodromy) -> dict:
    cp = cyclic_word(k, m)
    return {
        "x": m.x,
        "word": format_cyclic_word(cp.w),
        "f_w": list(polynomial(cp).coeffs),
        "h1": abelianization(cp).to_json(),
    }


def build_report(
    text: str,
    ns: Sequence[int] = (),
    monodromy: int | None = None,
    all_monodromies: bool = True,
) -> dict:
    psi = parse_mcg(text)
    k = analyze(psi)
    coverings = []
    for n in ns:
        ms = covering_monodromies(k, n)
        if monodromy is not None:
            if not 0 <= monodromy < n or monodromy not in {m.x for m in ms}:
                raise UsageError(f"x={monodromy} is not a strongly-cyclic monodromy for n={n}")
            ms = [m for m in ms if m.x == monodromy]
        elif not all_monodromies:
            ms = ms[:1]
        coverings.append({
            "n": n,
            "exists": bool(covering_monodromies(k, n)),
            "count": len(covering_monodromies(k, n)),
            "gcd": gcd(k.p, n),
            "monodromies": [_monodromy_entry(k, m) for m in ms],
        })
    return {
        "schema": SCHEMA,
        "input": text,
        "psi": format_word(psi),
        "psi_beta": format_word(k.psi_beta),
        "relator": format_word(k.relator),
        "p": k.p,
        "q_prime": k.q_prime,
        "q_dblprime": k.q_dblprime,
        "q_raw": k.lens_q,
        "q_normalized": k.lens_q_normalized,
        "ambient": k.ambient,
        "h1_complement": complement_homology(k).to_json(),
        "coverings": coverings,
    }


def _group(h: dict) -> str:
    parts = ["Z"] * h["rank"] + [f"Z_{t}" for t in h["torsion"]]
    return " + ".join(parts) if parts else "0"


def _poly(c: Sequence[int]) -> str:
    from .cyclicpres import IntPoly

    return str(IntPoly(tuple(c)))


def render_text(report: dict, command: str) -> str:
    r = report
    lines = [
        f"psi        : {r['psi'] or '1'}",
        f"psi(b)     : {r['psi_beta'] or '1'}",
        f"relator    : {r['relator'] or '1'}",
        f"p q' q''   : {r['p']} {r['q_prime']} {r['q_dblprime']}",
        f"lens space : |p|={abs(r['p'])} q={r['q_raw']}"
        + (f" (= {r['q_normalized']} mod {abs(r['p'])})" if r["q_normalized"] is not None else "")
        + f"  ambient {r['ambient']}",
        f"H1(complement) : {_group(r['h1_complement'])}",
    ]
    for cov in r["coverings"]:
        n = cov["n"]
        if not cov["exists"]:
            lines.append(
                f"n={n}: no strongly-cyclic covering (gcd {cov['gcd']} ∤ {r['q_dblprime']})"
            )
            continue
        xs = ", ".join(str(m["x"]) for m in cov["monodromies"])
        lines.append(f"n={n}: {cov['count']} strongly-cyclic covering(s); x in {{{xs}}}")
        if command == "cover":
            continue
        for m in cov["monodromies"]:
            row = [f"  x={m['x']}"]
            if command in ("present", "torus", "analyze"):
                row.append(f"w = {m['word'] or '1'}")
            if command in ("poly", "present", "torus"):
                row.append(f"f_w = {_poly(m['f_w'])}")
            if command in ("homology", "present", "torus"):
                row.append(f"H1 = {_group(m['h1'])}")
            lines.append("  ".join(row))
    if "torus" in r:
        t = r["torus"]
        a, b = t["knot"]
        lines.append(f"torus knot t({a},{b}); Alexander polynomial {_poly(t['alexander'])}")
        for n, w in t["formula_words"].items():
            lines.append(f"  closed form n={n}: {w or '1'}")
    return "\n".join(lines)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oneone", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_word: bool = True) -> None:
        if need_word:
            p.add_argument("word", help='mapping class word, e.g. "a^2 g a^-4"')
        p.add_argument("--n", action="append", metavar="N", help="sheet count(s): 4, 2-8, 3,5")
        p.add_argument("--monodromy", type=int, metavar="X", help="image of alpha in Z_n")
        p.add_argument("--all-monodromies", action="store_true")
        p.add_argument("--json", action="store_true", help="emit the JSON report")

    for name in SUBCOMMANDS[:-1]:
        common(sub.add_parser(name))
    t = sub.add_parser("torus", help="torus knot t(k, hk + sign)")
    common(t, need_word=False)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--h", type=int, required=True)
    t.add_argument("--sign", default="+", choices=["+", "-", "1", "-1"])
    return ap


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        ns = parse_n_values(args.n)
        if args.command in ("cover", "present", "homology", "poly") and not ns:
            raise UsageError(f"{args.command} needs --n")
        if args.monodromy is not None and args.all_monodromies:
            raise UsageError("--monodromy and --all-monodromies are exclusive")
        if args.command == "torus":
            tp = TorusParams(args.k, args.h, -1 if args.sign in ("-", "-1") else 1)
            text = format_word(tp.psi())
        else:
            tp, text = None, args.word
        all_ms = args.all_monodromies or args.command in ("cover", "analyze")
        report = build_report(text, ns, args.monodromy, all_ms)
        if tp is not None:
            report["torus"] = {
                "k": tp.k,
                "h": tp.h,
                "sign": tp.sign,
                "knot": list(tp.knot_type),
                "alexander": list(tp.alexander().coeffs),
                "formula_words": {
                    n: format_cyclic_word(torus_word_formula(tp, n).w) for n in ns
                },
            }
    except (WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        out.write(render_text(report, args.command) + "\n")
    covs = report["coverings"]
    if covs and not any(c["exists"] for c in covs):
        return EXIT_NO_COVERING
    return EXIT_OK


def main() -> None:
    sys.exit(run())
