"""Command-line front end: ``gorlab analyze | reduce | generate | verify``."""

from __future__ import annotations

import argparse
import os
import sys
from datetime import datetime, timezone

from . import families
from .classify import classify
from .fields import Field, FieldError
from .linalg import CapacityError
from .numsgp import NumericalSemigroup, SemigroupError, artinian_reduction, classify_ns
from .specio import SpecError, dump_document, parse_spec, print_spec, spec_from_algebra, write_text
from .verifier import SuiteConfig, replay, report_to_dict, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _timestamp() -> str:
    return "generated: " + datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> list:
    return [x for x in text.replace(" ", "").split(",") if x]


def _field(char: int, degree: int = 1) -> Field:
    try:
        return Field(char, degree)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out):
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _default_seed() -> int:
    raw = os.environ.get("GORLAB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"GORLAB_SEED must be an integer, got {raw!r}") from None


# -- analyze ------------------------------------------------------------------------------------------------
def _subspace_rows(alg, sub):
    f = alg.field
    return [{alg.labels[i]: f.format_scalar(v[i]) for i in range(alg.dim) if v[i] != 0} for v in sub.basis]


def artinian_report(spec, alg, rec, certificates: bool) -> dict:
    out = {
        "dim": rec.dim,
        "edim": rec.edim,
        "type": rec.type,
        "residue": rec.residue,
        "gorenstein": rec.gorenstein,
        "nearly_gorenstein": rec.nearly_gorenstein,
        "weakly_almost_gorenstein": rec.weakly_almost_gorenstein,
        "sv_almost_gorenstein": rec.sv_almost_gorenstein,
        "soc_quotient_gorenstein": rec.soc_quotient_gorenstein,
        "max_ideal_self_dual": rec.max_ideal_self_dual,
        "wag_by_field": dict(rec.wag_by_field),
        "trace_ideal": _subspace_rows(alg, rec.trace_ideal),
    }
    if certificates and rec.wag_ideal is not None:
        f = alg.field
        out["certificates"] = {
            "wag_ideal": _subspace_rows(alg, rec.wag_ideal),
            # w in the dual basis of the algebra basis
            "wag_element_w": {alg.labels[i] + "*": f.format_scalar(rec.wag_element_w[i])
                              for i in range(alg.dim) if rec.wag_element_w[i] != 0},
        }
    if rec.notes:
        out["notes"] = list(rec.notes)
    return {"schema": "gorlab/1", "kind": "classification_report", "spec": spec.to_dict(), "record": out}


def semigroup_report(spec, s: NumericalSemigroup, rec, certificates: bool) -> dict:
    tr = rec.trace
    out = {
        "generators": list(s.generators),
        "multiplicity": s.multiplicity,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "type": s.type,
        "pseudo_frobenius": list(s.pseudo_frobenius),
        "residue": rec.residue,
        "gorenstein": rec.gorenstein,
        "nearly_gorenstein": rec.nearly_gorenstein,
        "almost_gorenstein": rec.almost_gorenstein,
        "trace_head": tr.generators(),
        "trace_tail_start": tr.tail_start,
        "crosschecks": dict(rec.crosschecks),
    }
    return {"schema": "gorlab/1", "kind": "semigroup_report", "spec": spec.to_dict(), "record": out}


def cmd_analyze(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        spec = parse_spec(fh.read())
    obj = spec.build()
    if isinstance(obj, NumericalSemigroup):
        fld = spec.field if spec.field.is_finite else Field(2)
        rec = classify_ns(obj, fld)
        doc = semigroup_report(spec, obj, rec, args.certificates)
    else:
        rec = classify(obj, extension_degrees=tuple(args.extension_degrees), seed=args.seed, sv=not args.no_sv)
        doc = artinian_report(spec, obj, rec, args.certificates)
    _emit(dump_document(doc, _timestamp()), args.out)
    return EXIT_OK


# -- reduce -------------------------------------------------------------------------------------------------
def cmd_reduce(args) -> int:
    try:
        s = NumericalSemigroup(args.semigroup)
    except SemigroupError as exc:
        raise UsageError(str(exc)) from None
    if args.element not in s:
        raise UsageError(f"{args.element} is not in the semigroup generated by {s.generators}")
    if args.element <= 0:
        raise UsageError("the reduction element must be positive")
    alg = artinian_reduction(s, args.element, _field(args.field))
    label = f"<{','.join(map(str, s.generators))}> / (t^{args.element})"
    spec = spec_from_algebra(alg, label, {"semigroup": list(s.generators), "element": args.element})
    _emit(print_spec(spec), args.out)
    return EXIT_OK


# -- generate -----------------------------------------------------------------------------------------------
def _generate_specs(args) -> list:
    fld = _field(args.field)
    fam = args.family
    if fam in ("ci", "c5"):
        if not args.vars or not args.ci:
            raise UsageError(f"--family {fam} needs --vars and --ci")
        if len(args.vars) != len(args.ci):
            raise UsageError("--vars and --ci must have the same length")
        if fam == "ci":
            return [families.gen_ci(args.vars, args.ci, fld)]
        return families.gen_c5(args.vars, args.ci, args.seed, args.count, fld)
    if fam.startswith("e51"):
        if not args.ci or len(args.ci) != 3:
            raise UsageError("--family e51a/b/c needs --ci a,b,c")
        return [families.gen_e51(*args.ci, fam[-1], fld)]
    if fam == "l57":
        return [families.gen_l57(args.n, args.p, fld)]
    if fam == "random_monomial":
        return [families.gen_random_monomial(args.seed + k, args.nvars, args.maxdeg, fld, args.max_dim)
                for k in range(args.count)]
    gens = families.gen_random_semigroup(args.seed, args.max_embdim, args.max_gen, args.count)
    from .specio import AlgebraSpec
    return [AlgebraSpec("numerical_semigroup", fld, generators=g, provenance={"family": "random_semigroup",
                                                                              "seed": args.seed})
            for g in gens]


def cmd_generate(args) -> int:
    try:
        specs = _generate_specs(args)
    except families.FamilyError as exc:
        raise UsageError(str(exc)) from None
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for k, spec in enumerate(specs):
            write_text(os.path.join(args.out_dir, f"{args.family}_{k:03d}.yaml"), print_spec(spec))
    else:
        sys.stdout.write("---\n".join(print_spec(s) for s in specs))
    return EXIT_OK


# -- verify -------------------------------------------------------------------------------------------------
def cmd_verify(args) -> int:
    if args.replay:
        import yaml
        with open(args.replay, encoding="utf-8") as fh:
            payload = yaml.safe_load(fh)
        if isinstance(payload, dict) and "replay" in payload:
            payload = payload["replay"]
        if not isinstance(payload, dict) or "check_id" not in payload or "spec" not in payload:
            raise UsageError("replay file must hold a fail payload with check_id and spec")
        res = replay(payload)
        doc = {"schema": "gorlab/1", "kind": "replay_result", "check_id": res.check_id,
               "instance_id": res.instance_id, "verdict": res.verdict}
        if res.reason:
            doc["reason"] = res.reason
        _emit(dump_document(doc, _timestamp()), args.out)
        return EXIT_FAIL if res.verdict == "fail" else EXIT_OK
    cfg = SuiteConfig(seed=args.seed, suites=(args.suite,))
    if args.field:
        cfg.fields = tuple(args.field)
    if args.max_dim is not None:
        cfg.max_dim = args.max_dim
        cfg.homological_max_dim = min(cfg.homological_max_dim, args.max_dim)
    if args.random_count is not None:
        cfg.random_count = args.random_count
    if args.semigroup_count is not None:
        cfg.semigroup_count = args.semigroup_count
    for p in cfg.fields:
        _field(p)
    report = run_suite(cfg, jobs=args.jobs)
    _emit(dump_document(report_to_dict(report, timings=args.timings), _timestamp()), args.out)
    tally = report.summary["total"]
    print(" ".join(f"{k}={v}" for k, v in tally.items()), file=sys.stderr)
    return EXIT_FAIL if report.failed else EXIT_OK


# -- parser -------------------------------------------------------------------------------------------------
def build_parser(seed: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gorlab", description="Trace ideals, residues and Gorenstein-type "
                                "classification of artinian algebras and numerical semigroup rings.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify the algebra or semigroup in a spec file")
    a.add_argument("path")
    a.add_argument("--certificates", action="store_true", help="include WAG certificates")
    a.add_argument("--extension-degrees", type=_int_list, default=[1], help="e.g. 1,2,3")
    a.add_argument("--no-sv", action="store_true", help="skip the ideal enumeration")
    a.add_argument("--seed", type=int, default=seed)
    a.add_argument("-o", "--out")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reduce", help="structure constants of R/(t^c) for a semigroup ring R")
    r.add_argument("--semigroup", type=_int_list, required=True, help="generators, e.g. 3,7,8")
    r.add_argument("-c", "--element", type=int, required=True)
    r.add_argument("--field", type=int, default=2)
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_reduce)

    g = sub.add_parser("generate", help="write spec files for a family")
    g.add_argument("--family", choices=families.FAMILY_KINDS, required=True)
    g.add_argument("--vars", type=_str_list)
    g.add_argument("--ci", type=_int_list, help="exponents of the complete intersection")
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--p", type=int, default=2)
    g.add_argument("--nvars", type=int, default=2)
    g.add_argument("--maxdeg", type=int, default=4)
    g.add_argument("--max-dim", type=int, default=12)
    g.add_argument("--max-embdim", type=int, default=4)
    g.add_argument("--max-gen", type=int, default=13)
    g.add_argument("--count", type=int, default=8)
    g.add_argument("--field", type=int, default=2)
    g.add_argument("--seed", type=int, default=seed)
    g.add_argument("--out-dir")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run the theorem-check suite")
    v.add_argument("--suite", choices=("all", "pinned", "generated", "artinian", "semigroup"), default="all")
    v.add_argument("--seed", type=int, default=seed)
    v.add_argument("--field", type=int, action="append", help="repeatable prime characteristic")
    v.add_argument("--max-dim", type=int)
    v.add_argument("--random-count", type=int)
    v.add_argument("--semigroup-count", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="add per-check wall times to the report")
    v.add_argument("--replay", help="rerun one failed check from its payload file")
    v.add_argument("-o", "--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        seed = _default_seed()
    except UsageError as exc:
        print(f"gorlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(seed)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"gorlab: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError) as exc:
        print(f"gorlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"gorlab: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
