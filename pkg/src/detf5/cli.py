"""Command-line interface.

Subcommands: gen (write a random instance), gb (run the signature-based
Groebner computation), compare (row-count/speedup table), verify
(prediction-vs-computation report).

Exit codes: 0 success, 2 parse/shape error, 3 internal invariant violation,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import PolyParseError, format_poly
from .determinantal import crit_gb, max_minors_sig_gb
from .hilbert import (
    MODES,
    SPEEDUP_HEADER,
    degree_bound_crit,
    degree_bound_minors,
    speedup_table,
)
from .instances import (
    InstanceFormatError,
    InstanceSpec,
    random_crit_instance,
    random_minors_instance,
    read_instance,
    write_instance,
)
from .sig_gb import lazard_gb
from .verify import verify_instance

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_MISMATCH = 4

REFERENCE_SHAPES = [(4, 3, 6, 3), (5, 3, 7, 3)]  # (n, p, q, d0)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="detf5",
        description="Groebner bases for maximal-minor and critical-point "
        "ideals via signature-based matrix-F5 with syzygy-criterion row "
        "elimination, plus Hilbert-series row-count estimators.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write a random instance file")
    g.add_argument("--kind", choices=["minors", "crit"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, help="columns (minors instances)")
    g.add_argument("--d0", type=int, required=True)
    g.add_argument("--prime", type=int, default=65521)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", required=True)

    b = sub.add_parser("gb", help="compute a Groebner basis of an instance")
    b.add_argument("instance")
    b.add_argument("--degree-bound", type=int, default=None)
    b.add_argument("--oracle", action="store_true", help="diff against the criterion-free run")
    b.add_argument("--output", default=None, help="basis file (default: stdout)")
    b.add_argument("--stats", default=None, help="JSON-lines stats sidecar")

    c = sub.add_parser("compare", help="emit the row-count comparison CSV")
    c.add_argument("--shapes", default=None, help="semicolon list n,p,q,d0;...")
    c.add_argument("--sweep-n", default=None, help="lo:hi inclusive (q = n+p-1)")
    c.add_argument("--sweep-d0", default=None, help="lo:hi inclusive")
    c.add_argument("--p", type=int, default=3, help="p for sweeps")
    c.add_argument("--output", default=None)

    v = sub.add_parser("verify", help="predicted-vs-computed rank and |H| report")
    v.add_argument("instance")
    v.add_argument("--degree-bound", type=int, default=None)
    v.add_argument(
        "--mode",
        choices=list(MODES),
        default=None,
        help="gate the exit code on one jacobian entry-degree convention "
        "(default: pass when either convention matches all ranks)",
    )
    v.add_argument("--output", default=None)
    return ap


def _write_or_print(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        print(text)


def _cmd_gen(args) -> int:
    if args.kind == "minors":
        if args.q is None:
            print("gen --kind minors requires --q", file=sys.stderr)
            return EXIT_PARSE
        spec = InstanceSpec(args.n, args.p, args.q, args.d0, args.prime, args.seed)
        inst = random_minors_instance(spec)
    else:
        spec = InstanceSpec(args.n, args.p, max(args.p, args.n), args.d0, args.prime, args.seed)
        inst = random_crit_instance(spec)
    write_instance(inst, args.output)
    return EXIT_OK


def _run_gb(inst, D):
    if inst.kind == "matrix":
        return max_minors_sig_gb(inst.matrix, D)
    return crit_gb(inst.F, inst.g, D)


def _oracle_gb(inst, D):
    if inst.kind == "matrix":
        from .determinantal import minors

        gens = minors(inst.matrix, inst.p)
        return lazard_gb(gens, D, degrees=[inst.p * inst.d0] * len(gens))
    from .determinantal import CritSystem, minors

    sysm = CritSystem.build(inst.g, inst.F)
    minor_deg = (inst.p + 1) * sysm.jac.entry_degree
    gens = list(inst.F) + minors(sysm.jac, inst.p + 1)
    return lazard_gb(gens, D, degrees=[inst.d0] * inst.p + [minor_deg] * (len(gens) - inst.p))


def _cmd_gb(args) -> int:
    inst = read_instance(args.instance)
    D = args.degree_bound
    if D is None:
        D = (
            degree_bound_minors(inst.n, inst.p, inst.d0)
            if inst.kind == "matrix"
            else degree_bound_crit(inst.n, inst.p, inst.d0)
        )
    result = _run_gb(inst, D)
    basis_lines = [format_poly(el.as_poly()) for el in result.elements()]
    _write_or_print("\n".join(basis_lines), args.output)
    stats_path = args.stats or (args.output + ".stats.jsonl" if args.output else None)
    if stats_path:
        with open(stats_path, "w") as fh:
            for st in result.stats:
                fh.write(
                    json.dumps(
                        {
                            "d": st.degree,
                            "rows_built": st.rows_built,
                            "rows_skipped": st.rows_skipped_by_crit,
                            "zero_reductions": st.rows_reduced_to_zero,
                            "rank": st.rank,
                        }
                    )
                    + "\n"
                )
    if args.oracle:
        oracle = _oracle_gb(inst, D)
        diff = result.lm_set() ^ oracle.lm_set()
        if diff:
            print(f"oracle mismatch: {len(diff)} leading monomials differ", file=sys.stderr)
            return EXIT_MISMATCH
        print("oracle check: leading-monomial sets identical", file=sys.stderr)
    return EXIT_OK


def _parse_range(txt: str) -> range:
    lo, hi = txt.split(":")
    return range(int(lo), int(hi) + 1)


def _cmd_compare(args) -> int:
    shapes = []
    if args.shapes:
        for part in args.shapes.split(";"):
            n, p, q, d0 = (int(x) for x in part.split(","))
            shapes.append((n, p, q, d0))
    if args.sweep_n or args.sweep_d0:
        ns = _parse_range(args.sweep_n) if args.sweep_n else [4]
        d0s = _parse_range(args.sweep_d0) if args.sweep_d0 else [3]
        for n in ns:
            for d0 in d0s:
                shapes.append((n, args.p, n + args.p - 1, d0))
    if not shapes:
        shapes = REFERENCE_SHAPES
    lines = [SPEEDUP_HEADER] + speedup_table(shapes)
    _write_or_print("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = read_instance(args.instance)
    report = verify_instance(inst, args.degree_bound, mode=args.mode)
    _write_or_print(report.text(), args.output)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.cmd == "gen":
            return _cmd_gen(args)
        if args.cmd == "gb":
            return _cmd_gb(args)
        if args.cmd == "compare":
            return _cmd_compare(args)
        return _cmd_verify(args)
    except (InstanceFormatError, PolyParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
