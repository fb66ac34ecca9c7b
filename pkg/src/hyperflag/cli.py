"""Command-line front end: ``hyperflag {classify,oracle,count,sweep,roundtrip}``.

Exit status is 0 on success, 1 on invalid input and 2 when two independent
computations disagree (classifier vs ideal oracle, count vs formula).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify_section, good_primes, summary_sentence, verdict
from .exactalg import CharacteristicError, parse_field
from .flagcount import count_hyperplane_section, sweep_verify
from .multipoly.oracle import oracle_classify
from .sections import (
    ParseError,
    ZeroSectionError,
    hyperplane_to_section,
    parse_hyperplane,
    parse_section,
    section_to_hyperplane,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
DEFAULT_SEED = 42
DEFAULT_SAMPLE = 1000


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hyperflag", description="Hyperplane sections of P(T_P2) and their zero schemes.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, needs_input=True):
        if needs_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--section", help='three linear forms, e.g. "X, 2Y, 3Z"')
            src.add_argument("--hyperplane", help="eight coordinates in the basis E11-E33, E22-E33, E12, ...")
        p.add_argument("--field", default="Q", help="Q or a prime p >= 5 (default Q)")
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report here instead of stdout")

    common(sub.add_parser("classify", help="zero-scheme type and surface verdict"))
    p = sub.add_parser("oracle", help="type from Groebner basis and point counts")
    common(p)
    p.add_argument("--d-max", type=int, default=5, help="last degree of the Hilbert function (>= 5)")
    common(sub.add_parser("count", help="points of the hyperplane section over GF(p)"))
    p = sub.add_parser("sweep", help="classifier, oracle and count over many sections")
    common(p, needs_input=False)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true", help="every section class (p = 5 or 7)")
    how.add_argument("--sample", type=int, help=f"number of seeded random classes (default {DEFAULT_SAMPLE})")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(sub.add_parser("roundtrip", help="section <-> P^7 coordinates"))
    return ap


def _field(args, finite=False):
    try:
        F = parse_field(args.field)
    except (ValueError, CharacteristicError) as exc:
        raise InputError(str(exc)) from None
    if finite and not F.is_finite:
        raise InputError(f"{args.command} needs a finite field; pass --field p")
    return F


def _section(args, F):
    try:
        if args.section is not None:
            A = parse_section(args.section, F)
        else:
            A = hyperplane_to_section(parse_hyperplane(args.hyperplane, F))
        return A.require_nonzero()
    except (ParseError, ZeroSectionError, ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def _base(args, A):
    return {"command": args.command, "field": A.field.name, "section": A.render(),
            "hyperplane": section_to_hyperplane(A).normalized().fmt()}


def cmd_classify(args):
    F = _field(args)
    A = _section(args, F)
    r = classify_section(A)
    v = verdict(r)
    data = {**_base(args, A), **r.to_dict(), "verdict": v.to_dict()}
    lines = [summary_sentence(r), f"section: {A.render()}", f"zero scheme: {r.type.description}"]
    for pt in data["points"]:
        lines.append(f"  point {pt['point']} multiplicity {pt['multiplicity']}")
    for o in data["galois_orbits"]:
        lines.append(f"  conjugate points {o['point']} with t a root of {o['minimal_polynomial']}")
        if "conjugates" in o:
            lines.append(f"    over {o['field']}: " + ", ".join(o["conjugates"]))
    if data["line"]:
        lines.append(f"  line {data['line']} = 0")
    if data["embedded_point"]:
        lines.append(f"  embedded point {data['embedded_point']}")
    for c in v.components:
        lines.append(f"{c.name}: degree {c.degree}, {c.description}")
    return EXIT_OK, data, lines


def cmd_oracle(args):
    F = _field(args)
    A = _section(args, F)
    if args.d_max < 5:
        raise InputError("--d-max must be at least 5")
    expected = classify_section(A).type.letter
    primes = good_primes(A) if not F.is_finite else [F.p]
    reports = [oracle_classify(A, p, args.d_max) for p in primes]
    agree = all(rep.deduced_type == expected for rep in reports)
    data = {**_base(args, A), "classifier_type": expected, "agree": agree,
            "reports": [rep.to_dict() for rep in reports]}
    lines = [f"classifier: type {expected}"]
    for rep in reports:
        counts = ", ".join(f"N{k}={v}" for k, v in sorted(rep.point_counts.items()))
        lines.append(f"p={rep.p}: type {rep.deduced_type}; hf {rep.hf}; "
                     f"line {rep.line_factor.fmt() if rep.line_factor is not None else 'none'}; {counts}")
        lines.append("  basis: " + ", ".join(g.fmt() for g in rep.gb))
    lines.append("agreement" if agree else "MISMATCH")
    return (EXIT_OK if agree else EXIT_MISMATCH), data, lines


def cmd_count(args):
    F = _field(args, finite=True)
    A = _section(args, F)
    rep = count_hyperplane_section(A, F.p)
    data = {**_base(args, A), **rep.to_dict()}
    lines = [f"flags over GF({rep.q}): {rep.total_flag}",
             f"points on the section: {rep.section_count}",
             f"reduced zero locus N: {rep.reduced_zero_count}",
             f"q^2+q+1+q*N = {rep.predicted}: {'match' if rep.match else 'MISMATCH'}"]
    return (EXIT_OK if rep.match else EXIT_MISMATCH), data, lines


def cmd_sweep(args):
    F = _field(args, finite=True)
    if args.exhaustive:
        if F.p not in (5, 7):
            raise InputError("--exhaustive is limited to p = 5 or 7")
        sample = "exhaustive"
    else:
        sample = args.sample if args.sample is not None else DEFAULT_SAMPLE
        if sample <= 0:
            raise InputError("--sample must be positive")
    try:
        summary = sweep_verify(F.p, sample, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = {"command": "sweep", "field": F.name, **summary.to_dict()}
    lines = [f"classes: {summary.classes} ({summary.mode})",
             "tallies: " + ", ".join(f"{k}={v}" for k, v in summary.tallies.items()),
             f"oracle agreements: {summary.oracle_agreements}",
             f"count identity matches: {summary.count_matches}",
             f"failures: {len(summary.failures)}",
             f"elapsed: {summary.elapsed:.1f} s"]
    for rec in summary.failures[:20]:
        lines.append(f"  {rec['section']}: {rec['reason']}")
    return (EXIT_OK if not summary.failures else EXIT_MISMATCH), data, lines


def cmd_roundtrip(args):
    F = _field(args)
    A = _section(args, F)
    h = section_to_hyperplane(A)
    back = hyperplane_to_section(h)
    again = section_to_hyperplane(back)
    ok = back.same_section(A) and again.coords == h.coords
    data = {**_base(args, A), "trace_zero": back.render(), "ok": ok}
    lines = [f"section: {A.render()}", f"hyperplane: {h.normalized().fmt()}",
             f"back: {back.render()}", "round trip ok" if ok else "round trip FAILED"]
    return (EXIT_OK if ok else EXIT_MISMATCH), data, lines


COMMANDS = {"classify": cmd_classify, "oracle": cmd_oracle, "count": cmd_count,
            "sweep": cmd_sweep, "roundtrip": cmd_roundtrip}


def dump_json(data) -> str:
    """Canonical form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, data, lines = COMMANDS[args.command](args)
    except (InputError, CharacteristicError) as exc:
        print(f"hyperflag: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dump_json(data) if args.output == "json" else "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
