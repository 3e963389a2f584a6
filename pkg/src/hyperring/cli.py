"""Command-line front end.

Exit codes: 0 success, 1 counterexample or failed ``--assert``, 2 invalid input.
All JSON goes out in canonical form (sorted keys, compact separators).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import classify as cl
from .catalog import builtin_catalog
from .construct import gamma_star, matrix_ring, product_ring, quotient_ring, zn_template
from .harness import (
    MODES, format_counterexamples, format_table, report_json, run_theorem_suite,
    vacuous_assertions,
)
from .hypercore import (
    FiniteHyperring, HyperringError, from_json, label, parse_label, ring_flags,
)
from .ideals import (
    Hyperideal, colon_mask, d_set_mask, ideal, ideal_masks, is_c_hyperideal,
    maximal_masks, prime_masks, radical_mask,
)

CLASS_CHOICES = cl.CLASS_NAMES


class UsageError(Exception):
    pass


def canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def emit(doc, path: Optional[str] = None) -> None:
    text = canonical(doc)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def load_ring(path: str) -> FiniteHyperring:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    return from_json(doc)


def parse_ideal(ring: FiniteHyperring, text: str, flag: str = "--ideal") -> Hyperideal:
    try:
        m = parse_label(text)
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated indices, got {text!r}") from None
    if m >> ring.n or m == 0:
        raise UsageError(f"{flag}: indices must lie in 0..{ring.n - 1}")
    return ideal(ring, m)


def parse_ints(text: str, flag: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


# -- subcommands -------------------------------------------------------------------

def cmd_validate(args) -> int:
    ring = load_ring(args.file)
    if args.emit:
        emit(ring.to_json(), None if args.emit == "-" else args.emit)
        return 0
    flags = ring_flags(ring)
    print(f"{ring.name}: valid multiplicative hyperring, n={ring.n}")
    print(f"identities={{{label(ring.identities)}}} units={{{label(ring.units)}}} "
          f"scalar_identities={{{label(ring.scalar_identities)}}}")
    print(f"strongly_distributive={flags.strongly_distributive} local={flags.local} "
          f"reduced={flags.reduced} hyperfield={flags.hyperfield}")
    return 0


def cmd_classify(args) -> int:
    ring = load_ring(args.file)
    if args.ideal:
        targets = [parse_ideal(ring, args.ideal)]
    else:
        targets = [Hyperideal(ring, m) for m in ideal_masks(ring) if m != ring.full]
    reports = []
    for t in targets:
        if not t.proper:
            raise UsageError("--ideal: classification needs a proper hyperideal")
        reports.append(cl.classify(t).to_json())
    emit(reports[0] if args.ideal else reports)
    if args.assert_class:
        failed = [r["ideal"] for r in reports if not r[args.assert_class]]
        if failed:
            print(f"assertion {args.assert_class} fails for: {'; '.join(failed)}", file=sys.stderr)
            return 1
    return 0


def cmd_ideals(args) -> int:
    ring = load_ring(args.file)
    primes, maximal = set(prime_masks(ring)), set(maximal_masks(ring))
    out = [{
        "ideal": label(m),
        "proper": m != ring.full,
        "is_c_hyperideal": bool(is_c_hyperideal(Hyperideal(ring, m))),
        "prime": m in primes,
        "maximal": m in maximal,
    } for m in ideal_masks(ring)]
    emit({"ring": ring.name, "ideals": out})
    return 0


def cmd_radical(args) -> int:
    ring = load_ring(args.file)
    i = parse_ideal(ring, args.ideal)
    emit({
        "ideal": i.label(),
        "radical": label(radical_mask(ring, i.members)),
        "d_set": label(d_set_mask(ring, i.members)),
        "is_c_hyperideal": bool(is_c_hyperideal(i)),
    })
    return 0


def cmd_colon(args) -> int:
    ring = load_ring(args.file)
    i = parse_ideal(ring, args.ideal)
    by = parse_ints(args.by, "--by")
    if not by or any(not 0 <= b < ring.n for b in by):
        raise UsageError(f"--by: indices must lie in 0..{ring.n - 1}")
    by_mask = sum(1 << b for b in set(by))
    emit({"ideal": i.label(), "by": label(by_mask), "colon": label(colon_mask(ring, i.members, by_mask))})
    return 0


def cmd_gamma(args) -> int:
    ring = load_ring(args.file)
    fq = gamma_star(ring)
    emit({
        "ring": ring.name,
        "classes": [label(c) for c in fq.classes],
        "projection": list(fq.projection),
        "add": [list(r) for r in fq.class_add],
        "mul": [list(r) for r in fq.class_mul],
    })
    return 0


def cmd_template(args) -> int:
    if args.kind == "zn":
        if args.n is None or args.A is None:
            raise UsageError("template zn needs --n and --A")
        if args.n < 1:
            raise UsageError("--n must be positive")
        A = parse_ints(args.A, "--A")
        if not A:
            raise UsageError("--A: at least one multiplier is required")
        ring = zn_template(args.n, A)
    elif args.kind == "product":
        if len(args.inputs) != 2:
            raise UsageError("template product needs two input files")
        ring = product_ring(load_ring(args.inputs[0]), load_ring(args.inputs[1]))
    elif args.kind == "quotient":
        if len(args.inputs) != 1 or not args.ideal:
            raise UsageError("template quotient needs one input file and --ideal")
        base = load_ring(args.inputs[0])
        ring = quotient_ring(base, parse_ideal(base, args.ideal)).ring
    else:
        if len(args.inputs) != 1:
            raise UsageError("template matrix needs one input file")
        ring = matrix_ring(load_ring(args.inputs[0]))
    emit(ring.to_json(), args.output)
    return 0


def cmd_theorems(args) -> int:
    catalog = builtin_catalog()
    only = [t.strip() for t in args.only.split(",") if t.strip()] if args.only else None
    try:
        verdicts = run_theorem_suite(catalog, only, args.mode, args.include_identity_free)
    except KeyError as exc:
        raise UsageError(f"--only: {exc.args[0]}") from None
    print(f"mode={args.mode} rings={len(catalog)}")
    print(format_table(verdicts))
    vac = vacuous_assertions(verdicts)
    print("vacuous checks: " + (", ".join(vac) if vac else "none"))
    bad = format_counterexamples(verdicts)
    print("counterexamples:" + ("\n" + bad if bad else " none"))
    if args.json:
        emit(report_json(verdicts, args.mode, catalog, args.include_identity_free), args.json)
    return 1 if any(v.outcome == "counterexample" for v in verdicts) else 0


# -- parser -----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperring", description="Finite multiplicative hyperrings and absorbing hyperideals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the hyperring axioms")
    s.add_argument("file")
    s.add_argument("--emit", metavar="PATH", help="write the canonical JSON ('-' for stdout)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", help="classify one hyperideal (or all proper ones)")
    s.add_argument("file")
    s.add_argument("--ideal")
    s.add_argument("--assert", dest="assert_class", choices=CLASS_CHOICES,
                   help="exit 1 unless the class holds")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("ideals", help="enumerate hyperideals")
    s.add_argument("file")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("radical", help="prime radical and D-set of a hyperideal")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("colon", help="colon (I : a) or (I : S)")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--by", required=True, help="an element or comma list")
    s.set_defaults(func=cmd_colon)

    s = sub.add_parser("gamma", help="fundamental quotient by γ*")
    s.add_argument("file")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("template", help="emit a constructed hyperring as JSON")
    s.add_argument("kind", choices=("zn", "product", "quotient", "matrix"))
    s.add_argument("inputs", nargs="*", help="input ring file(s) for product/quotient/matrix")
    s.add_argument("--n", type=int)
    s.add_argument("--A")
    s.add_argument("--ideal")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_template)

    s = sub.add_parser("theorems", help="run the theorem suite over the built-in catalog")
    s.add_argument("--catalog", default="default", choices=("default",))
    s.add_argument("--only", help="comma list of assertion ids or families")
    s.add_argument("--mode", default="c-only", choices=MODES)
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--include-identity-free", action="store_true",
                   help="also check rings without an identity")
    s.set_defaults(func=cmd_theorems)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HyperringError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def run_cli(argv: Sequence[str]) -> int:
    """``main`` that also converts argparse exits into return codes."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
