"""Command-line frontend: generation, determinants, identity verification,
reductions, sequences, functional-equation checks, and benchmarks.

JSON outputs carry a top-level {"version": "1", "config": {...}, "report":
{...}} envelope; the seed and trial count in effect are always echoed in the
config.  Exit code 0 means zero failures, 1 means a verification failure, 2 a
usage error.  SPIRALDET_SEED provides a default seed; an explicit --seed wins.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import statistics
import sys
import time
from fractions import Fraction

from . import closed_forms, determinant_engine, funceq, sequences, spiral_builder
from .exponent_algebra import LaurentPoly, evaluate, to_records, to_string
from .spiral_builder import Family

_FAMILIES = {f.value: f for f in Family}


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SPIRALDET_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 0


def _random_generalized_spec(n: int, seed: int) -> spiral_builder.SpiralSpec:
    """Reproducible generalized-family spec with random monomial increments."""
    import random

    rng = random.Random(f"gen:{seed}")
    counts = spiral_builder.step_counts(n)

    def monomials(count):
        return tuple(tuple(2 * rng.randint(-2, 2) for _ in range(5)) for _ in range(count))

    return spiral_builder.SpiralSpec(
        n, Family.GENERALIZED_BRACKET,
        up_increments=monomials(counts["up"]),
        down_increments=monomials(counts["down"]))


def _build_family_matrix(family: Family, n: int, seed: int):
    if family is Family.ADDITIVE:
        return spiral_builder.build_additive(n)
    if family is Family.QPOWER:
        return spiral_builder.build_qpower(n)
    if family is Family.BRACKET:
        return spiral_builder.build_bracket(n)
    return spiral_builder.build_generalized_bracket(_random_generalized_spec(n, seed))


def _matrix_text(matrix) -> str:
    return "\n".join(
        "  ".join(str(c) if isinstance(c, spiral_builder.LinearForm) else
                  (to_string(c) if isinstance(c, LaurentPoly) else str(c))
                  for c in row)
        for row in matrix) + "\n"


def _cmd_gen(args, seed: int):
    family = _FAMILIES[args.family]
    matrix = _build_family_matrix(family, args.n, seed)
    config = {"command": "gen", "family": args.family, "n": args.n,
              "seed": seed, "trials": 0, "format": args.format}
    if args.format == "latex":
        return config, spiral_builder.matrix_to_latex(matrix) + "\n", 0
    if args.format == "text":
        return config, _matrix_text(matrix), 0
    report = spiral_builder.matrix_to_json_dict(matrix, family, args.n)
    return config, report, 0


def _cmd_det(args, seed: int):
    family = _FAMILIES[args.family]
    matrix = _build_family_matrix(family, args.n, seed)
    if family is Family.ADDITIVE:
        matrix = [[form.to_poly() for form in row] for row in matrix]
    det = determinant_engine.det_cofactor(matrix)
    config = {"command": "det", "family": args.family, "n": args.n,
              "seed": seed, "trials": 0, "format": args.format}
    if args.format == "text":
        return config, to_string(det) + "\n", 0
    return config, {"determinant": to_records(det), "string": to_string(det)}, 0


def _theorem_formula(theorem: int, n: int) -> LaurentPoly:
    table = {
        1: (closed_forms.thm1_even, closed_forms.thm1_odd),
        2: (closed_forms.thm2_even, closed_forms.thm2_odd),
        3: (closed_forms.thm3_even, closed_forms.thm3_odd),
    }
    even, odd = table[theorem]
    return even(n // 2) if n % 2 == 0 else odd(n // 2)


def _theorem_matrix(theorem: int, n: int):
    if theorem == 1:
        return [[form.to_poly() for form in row] for row in spiral_builder.build_additive(n)]
    if theorem == 2:
        return spiral_builder.build_qpower(n)
    return spiral_builder.build_bracket_xx(n)


def _cmd_verify(args, seed: int):
    checks = []
    failures = 0
    for n in range(1, args.n_max + 1):
        formula = _theorem_formula(args.theorem, n)
        matrix = _theorem_matrix(args.theorem, n)
        if n <= determinant_engine.COFACTOR_SIZE_GUARD:
            ok = determinant_engine.det_cofactor(matrix) == formula
            checks.append({"n": n, "mode": "symbolic", "match": ok})
        else:
            rep = determinant_engine.verify_identity(
                lambda pt, m=matrix: determinant_engine.numeric_matrix(m, pt),
                formula, args.trials, seed)
            ok = rep.failures == 0
            checks.append({"n": n, "mode": "randomized", "match": ok,
                           "trials": rep.trials, "failures": rep.failures})
        failures += 0 if ok else 1
    config = {"command": "verify", "theorem": args.theorem, "n_max": args.n_max,
              "seed": seed, "trials": args.trials, "format": args.format}
    report = {"checks": checks, "failures": failures}
    if args.format == "text":
        lines = [f"theorem {args.theorem} n={c['n']} [{c['mode']}]: "
                 f"{'ok' if c['match'] else 'MISMATCH'}" for c in checks]
        return config, "\n".join(lines) + "\n", (1 if failures else 0)
    return config, report, (1 if failures else 0)


def _cmd_reduce(args, seed: int):
    reports = {
        parity: closed_forms.verify_reduction(parity, args.n, args.trials, seed)
        for parity in ("odd", "even")
    }
    failures = sum(rep.failures for rep in reports.values())
    config = {"command": "reduce", "n": args.n, "seed": seed,
              "trials": args.trials, "format": args.format}
    report = {parity: rep.to_json_dict() for parity, rep in reports.items()}
    if args.format == "text":
        lines = [f"reduction {parity} n={args.n}: "
                 f"{rep.failures}/{rep.trials} failures"
                 for parity, rep in reports.items()]
        return config, "\n".join(lines) + "\n", (1 if failures else 0)
    return config, report, (1 if failures else 0)


def _cmd_seq(args, seed: int):
    spec = sequences.SequenceSpec(sequences.SequenceId(args.seq))
    config = {"command": "seq", "seq": args.seq, "n_max": args.n_max,
              "seed": seed, "trials": args.n_max, "format": args.format}
    if args.format == "csv":
        csv_text = sequences.sequence_csv(spec, args.n_max)
        failures = csv_text.count(",false")
        return config, csv_text, (1 if failures else 0)
    rep = sequences.verify_sequence(spec, args.n_max)
    if args.format == "text":
        return config, f"{args.seq}: {rep.failures}/{rep.trials} failures\n", \
            (1 if rep.failures else 0)
    return config, rep.to_json_dict(), (1 if rep.failures else 0)


def _cmd_funceq(args, seed: int):
    spec = funceq.FamilySpec(funceq.FamilyKind.POWER_SYMMETRIC,
                             alpha=args.alpha, imaginary=args.imaginary)
    relations = [args.relation] if args.relation else list(funceq.RELATIONS)
    reports = [funceq.check_relation(spec, rel, args.trials, seed) for rel in relations]
    failures = sum(1 for rep in reports if rep.max_residual > args.tolerance)
    config = {"command": "funceq", "alpha": args.alpha, "imaginary": args.imaginary,
              "tolerance": args.tolerance, "seed": seed, "trials": args.trials,
              "format": args.format}
    report = {"relations": [rep.to_json_dict() for rep in reports], "failures": failures}
    if args.format == "text":
        lines = [f"{rep.relation}: max residual {rep.max_residual:.3e}" for rep in reports]
        return config, "\n".join(lines) + "\n", (1 if failures else 0)
    return config, report, (1 if failures else 0)


def _cmd_bench(args, seed: int):
    rows = []
    failures = 0
    for n in range(1, args.n_max + 1):
        point = determinant_engine.sample_point(seed, n)
        matrix = spiral_builder.specialize_additive(n, point)
        formula = _theorem_formula(1, n)
        methods = {"bareiss": lambda: determinant_engine.det_bareiss_rational(matrix),
                   "formula": lambda: evaluate(formula, point)}
        if n <= determinant_engine.COFACTOR_SIZE_GUARD:
            methods["cofactor"] = lambda: determinant_engine.det_cofactor(matrix)
        results = {}
        for name, fn in methods.items():
            times = []
            for _ in range(max(1, args.trials)):
                t0 = time.perf_counter_ns()
                value = fn()
                times.append(time.perf_counter_ns() - t0)
            results[name] = (int(statistics.median(times)), Fraction(value))
        values = {v for _, v in results.values()}
        if len(values) != 1:
            failures += 1
        for name, (median_ns, value) in sorted(results.items()):
            digest = hashlib.sha256(str(value).encode()).hexdigest()[:16]
            rows.append(f"{n},{name},{median_ns},{digest}")
    config = {"command": "bench", "n_max": args.n_max, "seed": seed,
              "trials": args.trials, "format": args.format}
    csv_text = "n,method,median_ns,result_hash\n" + "\n".join(rows) + "\n"
    if args.format == "json":
        report = {"csv": csv_text, "failures": failures}
        return config, report, (1 if failures else 0)
    return config, csv_text, (1 if failures else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiraldet",
        description="Spiral-matrix determinant identities, verified in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format="json"):
        p.add_argument("--seed", type=int, default=None,
                       help="RNG seed (default: $SPIRALDET_SEED or 0)")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", type=str, default=None, help="write output to a file")

    p = sub.add_parser("gen", help="emit a spiral matrix")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--family", choices=sorted(_FAMILIES), default="additive")
    common(p, ("json", "latex", "text"))

    p = sub.add_parser("det", help="symbolic determinant of a spiral matrix")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--family", choices=sorted(_FAMILIES), default="additive")
    common(p, ("json", "text"))

    p = sub.add_parser("verify", help="check a determinant formula against the matrices")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--trials", type=int, default=20,
                   help="random trials per size beyond the symbolic guard")
    common(p, ("json", "text"))

    p = sub.add_parser("reduce", help="check the size-reduction relations")
    p.add_argument("--n", type=int, default=1, help="reduction index")
    p.add_argument("--trials", type=int, default=50)
    common(p, ("json", "text"))

    p = sub.add_parser("seq", help="verify integer-sequence specializations")
    p.add_argument("--seq", choices=[s.value for s in sequences.SequenceId],
                   default="inward")
    p.add_argument("--n-max", type=int, default=8)
    common(p, ("json", "csv", "text"))

    p = sub.add_parser("funceq", help="check the functional-equation relations")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--imaginary", action="store_true",
                   help="treat --alpha as the imaginary magnitude t")
    p.add_argument("--relation", choices=funceq.RELATIONS, default=None,
                   help="single relation (default: all)")
    p.add_argument("--trials", type=int, default=1000, help="sample count")
    p.add_argument("--tolerance", type=float, default=1e-9)
    common(p, ("json", "text"))

    p = sub.add_parser("bench", help="time the determinant engines against each other")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=3, help="timing repeats per method")
    common(p, ("csv", "json"), default_format="csv")

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "det": _cmd_det,
    "verify": _cmd_verify,
    "reduce": _cmd_reduce,
    "seq": _cmd_seq,
    "funceq": _cmd_funceq,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = _resolve_seed(args)
    try:
        config, report, exit_code = _HANDLERS[args.command](args, seed)
    except (determinant_engine.SizeGuardError, spiral_builder.LengthMismatchError,
            ValueError) as exc:
        parser.error(str(exc))
    if isinstance(report, str):
        output = report
    else:
        output = json.dumps({"version": "1", "config": config, "report": report},
                            indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
