"""Command-line front end.

Exit status: 0 on success, 1 when the input is well formed but violates a
domain rule (invalid collection, index out of range, inconsistent case data),
2 for malformed files or flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .collection import CollectionError, classify_strength, load_collection, parse_collection, validate
from .functorcalc import Case, GeometricInput, RankInput, grg, pn_condition1_check, rank_fr, rank_twist
from .gvs import GradedDim, sym_power
from .induce import enumerate_labels, equivariant_ext, sequence_length, verify_sequence
from .symrep import partitions
from .twistgroup import action_matrix, commutation_check, rank_certificate


class DomainError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _fmt_partition(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_partitions(args) -> None:
    parts = partitions(args.number)
    text = "\n".join([str(len(parts))] + [_fmt_partition(p) for p in parts])
    _emit(args, {"n": args.number, "count": len(parts), "partitions": [list(p) for p in parts]}, text)


def cmd_seq_length(args) -> None:
    if args.k < 1 or args.n < 1:
        raise DomainError("need k >= 1 and n >= 1")
    value = sequence_length(args.k, args.n)
    _emit(args, {"k": args.k, "n": args.n, "length": value}, str(value))


def _load(args):
    return load_collection(args.collection)


def cmd_check_collection(args) -> int:
    with open(args.collection, encoding="utf-8") as fh:
        c = parse_collection(json.load(fh))
    report = validate(c)
    payload = report.to_json()
    lines = [f"k = {c.k}", "valid" if report.ok else "INVALID"]
    if report.ok:
        strength = classify_strength(c)
        payload["strength"] = strength.value
        lines.append(f"strength: {strength.value}")
    for v in report.violations:
        lines.append(f"  {v.kind} at ({v.i},{v.j})" + (f" degree {v.degree}: expected {v.expected}, got {v.actual}" if v.degree is not None else ""))
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_induce(args) -> None:
    base = _load(args)
    ic = enumerate_labels(base.k, args.n, base)
    report = verify_sequence(ic, method="oracle" if args.oracle else "character")
    payload = {"k": base.k, "n": args.n, "labels": [l.to_json() for l in ic.labels], "verification": report.to_json()}
    lines = [f"{len(ic)} objects (k={base.k}, n={args.n})"]
    lines += [f"{i:4d}  {label}" for i, label in enumerate(ic.labels)]
    lines.append("exceptional sequence: " + ("yes" if report.ok else f"NO ({len(report.failures)} failures)"))
    for f in report.failures:
        lines.append(f"  pair ({f.i},{f.j}) degree {f.degree}: expected {f.expected}, got {f.actual}")
    if report.strength:
        lines.append(f"strength: {report.strength.value}")
    lines.append(f"fullness: {report.fullness}")
    _emit(args, payload, "\n".join(lines))


def cmd_equi_ext(args) -> None:
    base = _load(args)
    ic = enumerate_labels(base.k, args.n, base)
    for idx in (args.i, args.j):
        if not 0 <= idx < len(ic):
            raise DomainError(f"label index {idx} outside 0..{len(ic) - 1}")
    a, b = ic[args.i], ic[args.j]
    ext = equivariant_ext(a, b, base, args.twist_omega, "oracle" if args.oracle else "character")
    payload = {"from": a.to_json(), "to": b.to_json(), "twist_omega": args.twist_omega, "ext": ext.to_json()}
    _emit(args, payload, f"Ext^*({a}, {b}{' ⊗ ω' if args.twist_omega else ''}) = {ext}")


def cmd_functor_classify(args) -> None:
    case = Case(args.case)
    try:
        if case is Case.TRIVIAL:
            g = GeometricInput.trivial(args.n, args.d)
        else:
            g = GeometricInput.calabi_yau(args.d, args.n)
            if g.case is not case:
                raise ValueError(f"{args.case} needs {'even' if case is Case.EVEN_CY else 'odd'} d")
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    kernel, cls = grg(g)
    payload = {
        "case": case.value,
        "n": g.n,
        "d": g.d,
        "class": cls.to_json(),
        "kernel": kernel.to_json() if kernel is not None else None,
        "pn_condition1": pn_condition1_check(kernel, g.n, g.d),
    }
    text = f"{cls}; G^RG = {kernel}" if kernel is not None else f"{cls}; G^RG not determined"
    _emit(args, payload, text)


def cmd_ranks(args) -> None:
    try:
        r = RankInput(args.chi, args.n)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    payload = {"chi": r.chi, "n": r.n, "rank_FR": rank_fr(r), "rank_T": rank_twist(r)}
    _emit(args, payload, f"rk FR(k(ξ)) = {rank_fr(r)}\nrk T(k(ξ)) = {rank_twist(r)}")


def cmd_twist_rank(args) -> None:
    if args.n < 2:
        raise DomainError("n must be at least 2")
    cert = rank_certificate(args.n)
    am = action_matrix(args.n)
    commute = commutation_check(args.n)
    payload = {"commute": commute, "action_matrix": am.to_json(), **cert.to_json()}
    width = max(len(r) for r in am.rows)
    lines = [" " * width + "  " + "  ".join(am.cols)]
    for name, row in zip(am.rows, am.entries):
        lines.append(name.ljust(width) + "  " + "  ".join(str(x).rjust(len(c)) for x, c in zip(row, am.cols)))
    lines += [
        f"generators commute: {'yes' if commute else 'no'}",
        f"rank = {cert.rank} of {cert.columns} generators; integer kernel trivial: {'yes' if cert.kernel_trivial else 'no'}",
        f"certificate minor {list(cert.minor_rows)} has determinant {cert.minor_det}",
    ]
    if cert.discrepancy:
        lines.append("NOTE: " + cert.note)
    _emit(args, payload, "\n".join(lines))


def cmd_sym_power(args) -> None:
    try:
        a = GradedDim.from_json(json.loads(args.dims))
    except json.JSONDecodeError as exc:
        raise ValueError(f"--dims is not JSON: {exc}") from None
    if args.k < 0:
        raise DomainError("k must be non-negative")
    s = sym_power(a, args.k)
    _emit(args, {"input": a.to_json(), "k": args.k, "sym_power": s.to_json()}, f"S^{args.k}({a}) = {s}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="hilbexc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list partitions of N")
    p.add_argument("number", type=int)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("seq-length", parents=[common], help="length ℓ(k, n) of the induced sequence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_seq_length)

    p = sub.add_parser("check-collection", parents=[common], help="validate a collection file")
    p.add_argument("--collection", required=True)
    p.set_defaults(func=cmd_check_collection)

    p = sub.add_parser("induce", parents=[common], help="induced collection on the n-th power, verified")
    p.add_argument("--collection", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use the brute-force Ext path")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("equi-ext", parents=[common], help="equivariant Ext between two induced objects")
    p.add_argument("--collection", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True, help="index of the source label")
    p.add_argument("--j", type=int, required=True, help="index of the target label")
    p.add_argument("--twist-omega", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_equi_ext)

    p = sub.add_parser("functor-classify", parents=[common], help="G^R G for the truncated ideal functor")
    p.add_argument("--case", choices=["even-cy", "odd-cy", "trivial"], required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_functor_classify)

    p = sub.add_parser("ranks", parents=[common], help="ranks of FR(k(ξ)) and T(k(ξ))")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("twist-rank", parents=[common], help="rank of the twist group action")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_twist_rank)

    p = sub.add_parser("sym-power", parents=[common], help="graded symmetric power")
    p.add_argument("--dims", required=True, help='graded dimension, e.g. \'{"0":1,"-2":1}\'')
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_sym_power)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.func(args)
    except (CollectionError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, OSError, KeyError, TypeError) as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return 2
    return status or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
