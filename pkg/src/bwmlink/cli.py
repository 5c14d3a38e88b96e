"""Command-line surface: invariants from braid words, verification suites
and Bratteli diagram emission.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Timing goes to stderr so stdout is byte-for-byte deterministic.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import bratteli as yb
from .braid import (BraidParseError, BraidWord, component_count, conjugate,
                    exponent_sum, parse_braid, stabilize)
from .closed_forms import parity_check, symmetry_check, torus2_invariant
from .laurent import (LaurentPoly1, LocalizedPoly, QFraction,
                      Specialization, specialize)
from .skein import SkeinEngine

DEPTH_CAP = 8

MARKOV_CORPUS = [
    "B1:", "B2:", "B2: 1", "B2: 1 1", "B2: 1 1 1", "B2: -1 -1",
    "B2: 1 -1 1 -1", "B2: 1^5", "B3: 1 -2", "B3: 1 2", "B3: 1 1 2 2",
    "B3: -1 2 -1 2", "B3: 1 2 1 2 1 2", "B3: 1 -2 1 -2", "B3: 2 2 1 -2 1",
    "B4: 1 2 3", "B4: 1 -2 3 -2", "B4: 1 2 2 3 3 1", "B4: -1 -2 -3 -1 -2 -3",
    "B4: 1 2 3 3 2 1",
]

BRAID_RELATION_CORPUS = [
    "B3: 1 2 1", "B3: 1 2 1 1", "B3: 1 2 1 -2", "B3: 2 1 2 1 2 1",
    "B4: 1 2 1 3", "B4: 2 3 2", "B4: 2 3 2 -1", "B4: 1 2 1 2 1",
    "B3: -1 1 2 1", "B4: 3 1 2 1 3",
]


def _parse_spec(text: str) -> Specialization:
    try:
        kind, n_text = text.split(":")
        n = int(n_text)
        if kind == "osp":
            return Specialization.osp(n)
        if kind == "so":
            return Specialization.so(n)
    except (ValueError, TypeError):
        pass
    raise argparse.ArgumentTypeError(
        f"bad specialization {text!r}; expected osp:<n> or so:<n>")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split("..")
        lo, hi = int(lo_text), int(hi_text)
        if lo <= hi:
            return lo, hi
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"bad range {text!r}; expected lo..hi")


def _value_json(value):
    if isinstance(value, LocalizedPoly):
        return {"num": value.num.to_triples(), "den_power": value.k,
                "variables": ["r", "s"]}
    if isinstance(value, LaurentPoly1):
        return {"terms": value.to_pairs(), "variables": ["q"]}
    if isinstance(value, QFraction):
        return {"num": value.num.to_pairs(), "den": value.den.to_pairs(),
                "variables": ["q"]}
    raise TypeError(f"unexpected value type {type(value).__name__}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariant(args) -> int:
    try:
        word = parse_braid(args.braid)
    except BraidParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    engine = SkeinEngine()
    started = time.perf_counter()
    value = engine.kauffman_polynomial(word)
    if args.spec is not None:
        value = specialize(value, args.spec)
    elapsed = time.perf_counter() - started
    meta = {
        "braid": word.word_text(),
        "strands": word.strands,
        "exponent_sum": exponent_sum(word),
        "components": component_count(word),
        "crossings": len(word),
    }
    if args.format == "json":
        doc = {"schema": 1, "command": "invariant", **meta,
               "spec": args.spec.label() if args.spec else None,
               "value": _value_json(value)}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{k}: {v}" for k, v in meta.items()]
        name = f"value[{args.spec.label()}](q)" if args.spec else "F(r,s)"
        lines.append(f"{name} = {value}")
        _emit("\n".join(lines) + "\n", args.out)
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_torus(args) -> int:
    m = args.m
    engine = SkeinEngine()
    closed = torus2_invariant(m)
    word = BraidWord(2, ((1, 1 if m > 0 else -1),) * abs(m))
    skein = engine.kauffman_polynomial(word)
    match = closed == skein
    symmetric = symmetry_check(m)
    if args.format == "json":
        doc = {"schema": 1, "command": "torus", "m": m,
               "closed_form": _value_json(closed),
               "skein": _value_json(skein),
               "match": match, "symmetry": symmetric}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join([
            f"m: {m}",
            f"closed_form = {closed}",
            f"skein       = {skein}",
            f"match: {'yes' if match else 'NO'}",
            f"symmetry((r,s) -> (-r,-s)): {'yes' if symmetric else 'NO'}",
        ]) + "\n", args.out)
    return 0 if (match and symmetric) else 1


def cmd_bratteli(args) -> int:
    if args.depth > DEPTH_CAP:
        print(f"error: depth {args.depth} over cap {DEPTH_CAP}", file=sys.stderr)
        return 2
    if args.spec is None:
        graph = yb.generic_bratteli(args.depth)
        kind = "generic"
    else:
        graph = yb.truncated_bratteli(args.spec, args.depth)
        kind = args.spec.label()
    if args.format == "dot":
        _emit(yb.bratteli_dot(graph, title=kind), args.out)
    elif args.format == "json":
        _emit(yb.bratteli_json(graph, kind), args.out)
    else:
        lines = [f"kind: {kind}", f"depth: {graph.depth}"]
        for k, level in enumerate(graph.levels):
            row = " ".join(
                f"{yb.shape_label(s)}:{graph.path_count(s, k)}" for s in level)
            lines.append(f"level {k}: {row}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _verify_oracle(args, report):
    engine = SkeinEngine()
    lo, hi = args.m_range
    for m in range(lo, hi + 1):
        word = BraidWord(2, ((1, 1 if m > 0 else -1),) * abs(m))
        ok = engine.kauffman_polynomial(word) == torus2_invariant(m)
        report(f"oracle m={m}", ok)


def _verify_parity(args, report):
    for m in range(1, args.max_m + 1):
        report(f"parity m={m}", parity_check(m))


def _verify_symmetry(args, report):
    lo, hi = args.m_range
    for m in range(lo, hi + 1):
        report(f"symmetry m={m}", symmetry_check(m))


def _verify_sumrule(args, report):
    for f in range(0, args.max_f + 1):
        report(f"sumrule f={f}", yb.sum_rule_check(f))


def _verify_omega(args, report):
    expected = 1
    for f in range(1, args.max_f + 1):
        expected *= 2 * f - 1
        report(f"omega f={f}", yb.path_pair_count(f) == expected)


def _verify_lemma2(args, report):
    for size in range(0, args.max_size + 1):
        for shape in yb.young_level(size):
            for n in range(1, args.max_n + 1):
                ok = yb.specialized_weights_equal(shape, n)
                report(f"lemma2 shape={yb.shape_label(shape)} n={n}", ok)
    rng = random.Random(args.seed)
    for case in range(args.random_signs):
        size = rng.randint(1, 8)
        shape = rng.choice(yb.young_level(size))
        report(f"sign-identity case={case} shape={yb.shape_label(shape)}",
               yb.sign_identity_check(shape))


def _verify_markov(args, report):
    engine = SkeinEngine()
    for text in MARKOV_CORPUS[: args.words]:
        word = parse_braid(text)
        base = engine.kauffman_polynomial(word)
        ok = True
        for g in range(1, word.strands):
            for sign in (1, -1):
                mover = BraidWord(word.strands, ((g, sign),))
                if engine.kauffman_polynomial(conjugate(word, mover)) != base:
                    ok = False
        for sign in (1, -1):
            if engine.kauffman_polynomial(stabilize(word, sign)) != base:
                ok = False
        report(f"markov word={text!r}", ok)
    for text in BRAID_RELATION_CORPUS[: args.words]:
        word = parse_braid(text)
        base = engine.kauffman_polynomial(word)
        ok = True
        rewrites = 0
        letters = word.letters
        for p in range(len(letters) - 2):
            (i1, e1), (i2, e2), (i3, e3) = letters[p:p + 3]
            if i1 == i3 and i2 == i1 + 1 and e1 == e2 == e3 == 1:
                swapped = (letters[:p] + ((i2, 1), (i1, 1), (i2, 1))
                           + letters[p + 3:])
                rewrites += 1
                if engine.kauffman_polynomial(BraidWord(word.strands, swapped)) != base:
                    ok = False
        report(f"braid-relation word={text!r}", ok and rewrites > 0)


_SUITES = {
    "markov": _verify_markov,
    "parity": _verify_parity,
    "symmetry": _verify_symmetry,
    "sumrule": _verify_sumrule,
    "lemma2": _verify_lemma2,
    "omega": _verify_omega,
    "oracle": _verify_oracle,
}


def cmd_verify(args) -> int:
    results: list[tuple[str, bool]] = []
    _SUITES[args.suite](args, lambda case, ok: results.append((case, ok)))
    results.sort()
    lines = [f"{'PASS' if ok else 'FAIL'} {case}" for case, ok in results]
    failures = sum(1 for _, ok in results if not ok)
    lines.append(f"total: {len(results)} failures: {failures}")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwmlink",
        description="Two-variable Kauffman invariants of braid closures, "
                    "their one-variable specializations and the supporting "
                    "verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariant", help="invariant of a braid closure")
    p_inv.add_argument("--braid", required=True, help="word, e.g. 'B2: 1^3'")
    p_inv.add_argument("--spec", type=_parse_spec, default=None,
                       help="specialization osp:<n> or so:<n>")
    p_inv.add_argument("--format", choices=("text", "json"), default="text")
    p_inv.add_argument("--out", default=None)
    p_inv.set_defaults(func=cmd_invariant)

    p_torus = sub.add_parser("torus", help="two-strand torus closure checks")
    p_torus.add_argument("--m", type=int, required=True)
    p_torus.add_argument("--format", choices=("text", "json"), default="text")
    p_torus.add_argument("--out", default=None)
    p_torus.set_defaults(func=cmd_torus)

    p_brat = sub.add_parser("bratteli", help="emit a (truncated) level graph")
    p_brat.add_argument("--spec", type=_parse_spec, default=None)
    p_brat.add_argument("--depth", type=int, default=4)
    p_brat.add_argument("--format", choices=("text", "json", "dot"),
                        default="text")
    p_brat.add_argument("--out", default=None)
    p_brat.set_defaults(func=cmd_bratteli)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(_SUITES))
    p_ver.add_argument("--m", dest="m_range", type=_parse_range,
                       default=(-6, 8), help="range lo..hi")
    p_ver.add_argument("--max-m", type=int, default=10)
    p_ver.add_argument("--max-f", type=int, default=5)
    p_ver.add_argument("--max-size", type=int, default=6)
    p_ver.add_argument("--max-n", type=int, default=3)
    p_ver.add_argument("--words", type=int, default=20)
    p_ver.add_argument("--random-signs", type=int, default=50)
    p_ver.add_argument("--seed", type=int, default=20260809)
    p_ver.add_argument("--out", default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # join "--m -6..8" so argparse does not read the range as an option
    joined: list[str] = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg == "--m" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            joined.append(f"--m={argv[i + 1]}")
            skip = True
        else:
            joined.append(arg)
    parser = build_parser()
    try:
        args = parser.parse_args(joined)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
