"""Command-line entry point: ``cherednik <command> ...``.

Exit codes: 0 every check passed, 1 a check failed, 2 usage or parameter
error, 3 inconclusive. Verdicts (isomorphic or not, irreducible or not) are
data and do not by themselves change the exit code.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .algebra import AlgebraParams, format_element
from .analysis import (central_character, check_intertwiner_maps, eigenspaces,
                       exhaustive_invariant_search, is_irreducible,
                       verify_relations)
from .errors import BudgetExceeded, CherednikError, Inconclusive, NotScalar
from .field import make_field
from .iso import criterion_iso, find_intertwiner
from .parser import parse, parse_scalar
from .reps import (FAMILIES, FAMILY_PARAMS, Representation, RepSpec,
                   admissible_families, build_rep, sample_spec)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
PARAM_FLAGS = ("theta", "c", "a", "b", "beta", "mu", "d")


class UsageError(Exception):
    pass


# -- argument handling ----------------------------------------------------------

def _add_algebra(sp, need_family=False):
    sp.add_argument("--p", type=int, help="odd prime characteristic")
    sp.add_argument("--m", type=int, default=1, help="field degree over F_p")
    sp.add_argument("--t", help="t (0 or 1 for representations)")
    sp.add_argument("--k", help="k as an integer or [c0,c1,...]")
    if need_family:
        sp.add_argument("--family", choices=FAMILIES)
        for name in PARAM_FLAGS:
            sp.add_argument(f"--{name}")
        sp.add_argument("--input", help="representation or spec JSON instead of flags")


def _add_output(sp):
    sp.add_argument("--format", choices=("json", "tsv"), default=None)
    sp.add_argument("--output", help="write the report here instead of stdout")
    sp.add_argument("--seed", type=int, default=0)


def build_parser():
    ap = argparse.ArgumentParser(prog="cherednik",
                                 description="Representations of rank-1 trigonometric Cherednik algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("build", "construct a representation and write its JSON"),
        ("verify", "check the defining relations"),
        ("central", "scalars of the central elements"),
        ("eigen", "y-eigenspace dimensions"),
        ("irreducible", "randomized irreducibility test"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        _add_algebra(sp, need_family=True)
        _add_output(sp)
        if name == "irreducible":
            sp.add_argument("--budget", type=int, default=64)
            sp.add_argument("--exhaustive", action="store_true",
                            help="also run the exhaustive oracle when in budget")
        if name == "verify":
            sp.add_argument("--intertwiners", action="store_true",
                            help="also check the A and B maps (t = 1)")
    sp = sub.add_parser("iso", help="decide whether two representations are isomorphic")
    sp.add_argument("first", help="JSON file or inline spec FAMILY:name=value:...")
    sp.add_argument("second")
    sp.add_argument("--p", type=int)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--t")
    sp.add_argument("--k")
    _add_output(sp)
    sp = sub.add_parser("normal-form", help="PBW normal form of an expression")
    _add_algebra(sp)
    sp.add_argument("expression")
    _add_output(sp)
    sp = sub.add_parser("classify", help="census of every admissible family")
    _add_algebra(sp)
    sp.add_argument("--samples", type=int, default=3, help="parameter tuples per family")
    _add_output(sp)
    return ap


def _params(args):
    if args.p is None or args.t is None or args.k is None:
        raise UsageError("--p, --t and --k are required unless the input carries them")
    ctx = make_field(args.p, args.m)
    return AlgebraParams(ctx, parse_scalar(args.t, ctx), parse_scalar(args.k, ctx))


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _rep_from_json(obj):
    if "mats" in obj:
        return Representation.from_json(obj)
    return build_rep(RepSpec.from_json(obj.get("spec", obj)))


def _rep_from_flags(args):
    if getattr(args, "input", None):
        return _rep_from_json(_load_json(args.input))
    if not args.family:
        raise UsageError("give --family with its parameters, or --input")
    params = _params(args)
    names = FAMILY_PARAMS[args.family]
    given = {n: getattr(args, n) for n in PARAM_FLAGS if getattr(args, n) is not None}
    missing = [n for n in names if n not in given]
    extra = [n for n in given if n not in names]
    if missing or extra:
        raise UsageError(f"{args.family} takes --{' --'.join(names)}"
                         + (f"; missing {missing}" if missing else "")
                         + (f"; unexpected {extra}" if extra else ""))
    values = {n: parse_scalar(given[n], params.ctx) for n in names}
    return build_rep(RepSpec.make(params, args.family, **values))


def _inline_spec(text, args):
    if Path(text).exists():
        return _rep_from_json(_load_json(text))
    family, *pairs = text.split(":")
    if family not in FAMILY_PARAMS:
        raise UsageError(f"unknown family in {text!r}")
    params = _params(args)
    values = {}
    for pair in pairs:
        name, _, val = pair.partition("=")
        values[name.strip()] = parse_scalar(val, params.ctx)
    return build_rep(RepSpec.make(params, family, **values))


# -- reports --------------------------------------------------------------------

def _rows_tsv(rows):
    lines = []
    for r in rows:
        detail = r.get("detail", r.get("witness", ""))
        if not isinstance(detail, str):
            detail = json.dumps(detail, sort_keys=True)
        lines.append(f"{r['name']}\t{r['status']}\t{detail}")
    return "\n".join(lines)


def _emit(args, payload, rows=None):
    if args.format == "tsv" and rows is not None:
        text = _rows_tsv(rows)
    elif isinstance(payload, str) and args.format != "json":
        text = payload
    else:
        text = json.dumps(payload, indent=2, ensure_ascii=False)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def cmd_build(args):
    rep = _rep_from_flags(args)
    _emit(args, rep.to_json())
    return EXIT_OK


def cmd_verify(args):
    rep = _rep_from_flags(args)
    results = verify_relations(rep)
    if args.intertwiners:
        results += check_intertwiner_maps(rep)
    rows = [r.to_json() for r in results]
    _emit(args, {"spec": rep.spec.describe(), "checks": rows}, rows)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_central(args):
    rep = _rep_from_flags(args)
    try:
        cc = central_character(rep)
    except NotScalar as exc:
        row = {"name": "central character", "status": "fail", "detail": str(exc)}
        _emit(args, {"spec": rep.spec.describe(), "checks": [row]}, [row])
        return EXIT_FAIL
    rows = [{"name": n, "status": "pass", "detail": repr(c)} for n, _, c in cc.assignments]
    _emit(args, {"spec": rep.spec.describe(), "central": cc.to_json()}, rows)
    return EXIT_OK


def cmd_eigen(args):
    rep = _rep_from_flags(args)
    reports = eigenspaces(rep)
    rows = [{"name": f"y = {r.eigenvalue!r}", "status": "pass",
             "detail": f"eigDim={r.eig_dim} genDim={r.gen_dim}"} for r in reports]
    total = sum(r.gen_dim for r in reports)
    ok = total == rep.dim
    rows.append({"name": "generalized dimensions sum to dim", "status": "pass" if ok else "fail",
                 "detail": f"{total} of {rep.dim}"})
    _emit(args, {"spec": rep.spec.describe(), "eigenspaces": [r.to_json() for r in reports],
                 "complete": ok}, rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_irreducible(args):
    rep = _rep_from_flags(args)
    verdict = is_irreducible(rep, seed=args.seed, budget=args.budget)
    out = {"spec": rep.spec.describe(), "norton": verdict.to_json()}
    rows = [{"name": "norton", "status": "pass",
             "detail": "irreducible" if verdict.irreducible else "reducible"}]
    code = EXIT_OK
    if args.exhaustive:
        try:
            ex = exhaustive_invariant_search(rep)
            out["exhaustive"] = ex.to_json()
            agree = ex.irreducible == verdict.irreducible
            rows.append({"name": "exhaustive agrees", "status": "pass" if agree else "fail",
                         "detail": "irreducible" if ex.irreducible else "reducible"})
            code = EXIT_OK if agree else EXIT_FAIL
        except BudgetExceeded as exc:
            out["exhaustive"] = {"skipped": str(exc)}
    _emit(args, out, rows)
    return code


def cmd_iso(args):
    r1, r2 = _inline_spec(args.first, args), _inline_spec(args.second, args)
    oracle = find_intertwiner(r1, r2, seed=args.seed)
    out = {"first": r1.spec.describe(), "second": r2.spec.describe(),
           "verdict": "isomorphic" if oracle.isomorphic else "non-isomorphic",
           "oracle": oracle.to_json()}
    rows = [{"name": "oracle", "status": "pass", "detail": out["verdict"]}]
    code = EXIT_OK
    if not (r1.spec.synthetic or r2.spec.synthetic):
        crit = criterion_iso(r1.spec, r2.spec)
        out["criterion"] = crit.to_json()
        agree = crit.isomorphic == oracle.isomorphic
        rows.append({"name": "criterion agrees", "status": "pass" if agree else "fail",
                     "detail": crit.criterion})
        code = EXIT_OK if agree else EXIT_FAIL
    _emit(args, out, rows)
    return code


def cmd_normal_form(args):
    params = _params(args)
    elem = parse(args.expression, params)
    text = format_element(elem)
    if args.format == "json":
        _emit(args, {"input": args.expression, "normal_form": text, "terms": elem.to_json()})
    elif args.format == "tsv":
        _emit(args, None, [{"name": args.expression, "status": "pass", "detail": text}])
    else:
        _emit(args, text)
    return EXIT_OK


def cmd_classify(args):
    params = _params(args)
    rng = random.Random(args.seed)
    entries, code = [], EXIT_OK
    for family in admissible_families(params):
        specs = {}
        for _ in range(args.samples):
            spec = sample_spec(params, family, rng)
            if spec is not None:
                specs[spec.key()] = spec
        for key in sorted(specs):
            spec = specs[key]
            rep = build_rep(spec)
            relations_ok = all(r.passed for r in verify_relations(rep))
            try:
                irr = is_irreducible(rep, seed=args.seed).irreducible
            except Inconclusive:
                irr = None
                code = max(code, EXIT_INCONCLUSIVE)
            cc = central_character(rep).to_json()
            if not relations_ok or irr is False:
                code = EXIT_FAIL
            entries.append({"family": family, "spec": spec.describe(), "dim": rep.dim,
                            "relations": relations_ok, "irreducible": irr, "central": cc})
    rows = [{"name": e["spec"], "status": "pass" if e["relations"] and e["irreducible"] else "fail",
             "detail": f"dim={e['dim']} central={json.dumps(e['central'])}"} for e in entries]
    _emit(args, {"params": params.to_json(), "census": entries}, rows)
    return code


COMMANDS = {
    "build": cmd_build, "verify": cmd_verify, "central": cmd_central, "eigen": cmd_eigen,
    "irreducible": cmd_irreducible, "iso": cmd_iso, "normal-form": cmd_normal_form,
    "classify": cmd_classify,
}


def run_command(argv):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (UsageError, CherednikError, ValueError, SyntaxError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
