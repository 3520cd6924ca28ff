"""Command-line entry point: ``grrskit <command> [options]``.

Exit codes are 0 when every check passes, 1 when a check fails and 2 for
usage errors such as unknown families or pairs.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .autofix import analyze, enumerate_test_automorphisms, fixed_roots, identity_automorphism
from .catalog import FamilyError, build_family, catalog_selftest, drop_root, family_instances
from .exact import fmt
from .grrs import check_axioms
from .pairs import PairError, pair_automorphism, pair_grrs, parse_pair
from .restrict import (AutobijectionFailure, NotIwasawaSystem, default_fixed_system,
                       iwasawa_positive_system, positive_system, restrict, restricted_checks,
                       satake_diagram)
from .superalg import SuperalgebraError, build_algebra, build_involution, iwasawa_check
from .svparams import FrameMismatch, NonUniformImaginarySdim, check_deformed_axioms, sv_parameters
from .tables import expected_iwasawa, expected_sv

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _families(args) -> list[str]:
    try:
        out = family_instances(args.family, args.max)
        for f in out:
            build_family(f)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    if not out:
        raise UsageError(f"no valid instances of {args.family!r} up to rank {args.max}")
    return out


def _pair(args):
    try:
        return parse_pair(args.pair, delta=getattr(args, "delta", False))
    except PairError as exc:
        raise UsageError(str(exc)) from None


def _root_pair(args):
    desc = _pair(args)
    g = pair_grrs(desc)
    try:
        theta = pair_automorphism(desc, g)
    except PairError as exc:
        raise UsageError(str(exc)) from None
    return desc, g, theta


# -- commands ----------------------------------------------------------------

def cmd_axioms(args) -> int:
    rows, ok = [], True
    for fam in _families(args):
        g = build_family(fam)
        if args.mutate == "drop-root":
            for i in range(len(g.roots)):
                rep = check_axioms(drop_root(g, i))
                failed = rep.failed()
                ok &= rep.passed
                wit = rep[failed[0]].witness if failed else None
                rows.append({"family": fam, "dropped": g.label(g.roots[i]), "passed": rep.passed,
                             "failed_axioms": failed, "witness": _jsonable(wit)})
            continue
        rep = check_axioms(g)
        st = catalog_selftest(fam)
        ok &= rep.passed and st.passed
        rows.append({"family": fam, "passed": rep.passed and st.passed,
                     "failed_axioms": rep.failed(),
                     "selftest": {k: bool(v) for k, v in st.entries.items()}})
    lines = []
    for r in rows:
        head = r["family"] + (f" without {r['dropped']}" if "dropped" in r else "")
        detail = "" if r["passed"] else f"  failed axioms {r['failed_axioms']}"
        if not r["passed"] and "selftest" in r:
            detail += "  " + ", ".join(k for k, v in r["selftest"].items() if not v)
        if r.get("witness") is not None:
            detail += f"  witness {r['witness']}"
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {head}{detail}")
    _emit(args, {"results": rows, "passed": ok}, "\n".join(lines))
    return PASS if ok else FAIL


def cmd_selftest(args) -> int:
    rows, ok = [], True
    for fam in _families(args):
        st = catalog_selftest(fam)
        ok &= st.passed
        rows.append({"family": fam, "passed": st.passed,
                     "entries": {k: bool(v) for k, v in st.entries.items()},
                     "notes": _jsonable(st.notes)})
    text = "\n".join(f"{'PASS' if r['passed'] else 'FAIL'} {r['family']}" for r in rows)
    _emit(args, {"results": rows, "passed": ok}, text)
    return PASS if ok else FAIL


def cmd_trichotomy(args) -> int:
    hist, rows, ok = Counter(), [], True
    for fam in _families(args):
        g = build_family(fam)
        if args.identity_only:
            autos = [identity_automorphism(g)]
        else:
            autos = enumerate_test_automorphisms(g, budget=args.budget)
        for a in autos:
            an = analyze(a)
            hist[an.tag] += 1
            ok &= an.passed
            if not an.passed or args.json:
                rows.append({"family": fam, "automorphism": a.label, "tag": an.tag,
                             "passed": an.passed})
    text = [f"{tag}: {n}" for tag, n in sorted(hist.items())]
    text.append(f"instances: {sum(hist.values())}  failures: {sum(1 for r in rows if not r['passed'])}")
    _emit(args, {"histogram": dict(sorted(hist.items())), "instances": sum(hist.values()),
                 "results": rows, "passed": ok}, "\n".join(text))
    return PASS if ok else FAIL


def cmd_restrict(args) -> int:
    desc, g, theta = _root_pair(args)
    rrs = restrict(g, theta)
    checks = restricted_checks(rrs)
    ok = all(checks.values())
    lines = [f"{desc.text}: dim a* = {rrs.dimension}"]
    for c, e in sorted(rrs.entries.items()):
        kind = "real" if e.real else "imag"
        lines.append(f"  {rrs.label(c):<28} {kind}  dim {e.dim}  sdim {e.sdim}")
    lines += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
    _emit(args, {**rrs.to_json(), "checks": checks, "passed": ok}, "\n".join(lines))
    return PASS if ok else FAIL


def cmd_iwasawa(args) -> int:
    desc = _pair(args)
    try:
        alg = build_algebra(desc.family if desc.row != "p" else f"gl({desc.params['n']}|{desc.params['n']})")
        inv = build_involution(alg, desc)
    except SuperalgebraError as exc:
        raise UsageError(str(exc)) from None
    rep = iwasawa_check(alg, inv)
    ok = True
    out = rep.to_json()
    if args.expect_table:
        want = expected_iwasawa(desc)
        got = rep.iwasawa_theta
        out["expected"] = want
        ok = got == want
        if desc.row != "p":
            out["disjunction"] = rep.iwasawa_theta or rep.iwasawa_delta_theta
            ok &= out["disjunction"]
    dims = ", ".join(f"{k}={v}" for k, v in rep.dims.items())
    text = [f"{desc}", f"  dims: {dims}",
            f"  iwasawa_theta={str(rep.iwasawa_theta).lower()}"
            f" iwasawa_delta_theta={str(rep.iwasawa_delta_theta).lower()}",
            f"  theta on c(a)_1: {rep.theta_on_ca1}"]
    if args.expect_table:
        text.append(f"{'PASS' if ok else 'FAIL'} table expects {str(out['expected']).lower()}")
    _emit(args, out, "\n".join(text))
    return PASS if ok else FAIL


def cmd_satake(args) -> int:
    desc, g, theta = _root_pair(args)
    rrs = restrict(g, theta)
    if args.seed == "coords":
        pos_bar = positive_system(rrs.roots)
        pos_s = positive_system([g.roots[i] for i in fixed_roots(theta)])
    else:
        pos_bar, pos_s = None, default_fixed_system(g, theta)
    try:
        pos = iwasawa_positive_system(g, theta, rrs, pos_bar, pos_s)
        dia = satake_diagram(g, theta, pos)
    except (NotIwasawaSystem, AutobijectionFailure) as exc:
        _emit(args, {"error": str(exc), "passed": False}, f"FAIL {exc}")
        return FAIL
    if args.dot:
        print(dia.to_dot())
    else:
        _emit(args, dia.to_json(), dia.to_text())
    return PASS


def cmd_sv(args) -> int:
    desc, g, theta = _root_pair(args)
    rrs = restrict(g, theta)
    try:
        p = sv_parameters(rrs)
    except (FrameMismatch, NonUniformImaginarySdim) as exc:
        _emit(args, {"error": type(exc).__name__, "message": str(exc), "passed": False},
              f"FAIL {type(exc).__name__}: {exc}")
        return FAIL
    checks = check_deformed_axioms(rrs, p)
    ok = all(checks.values())
    out = {**p.to_json(), "checks": checks}
    names = ("t", "p", "q", "r", "s")
    text = ["  ".join(f"{k}={fmt(v)}" for k, v in zip(names, p.as_tuple())) + f"  l={p.ell}"]
    text += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
    if args.expect_table:
        want = expected_sv(desc)
        if want is None:
            text.append("FAIL no table row for this pair")
            ok = False
        else:
            match = tuple(want[k] for k in names) == p.as_tuple()
            out["expected"] = {k: fmt(v) for k, v in want.items()}
            ok &= match
            text.append(f"{'PASS' if match else 'FAIL'} table expects "
                        + "  ".join(f"{k}={fmt(want[k])}" for k in names))
    out["passed"] = ok
    _emit(args, out, "\n".join(text))
    return PASS if ok else FAIL


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    try:
        return fmt(x)
    except (TypeError, ValueError):
        return str(x)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grrskit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    def family(p, default):
        p.add_argument("--family", default=default, help="family or template, e.g. 'B(m,n)'")
        p.add_argument("--max", type=int, default=2, help="largest m, n in templates")

    p = common(sub.add_parser("axioms", help="GRRS axioms and catalog self-test"))
    family(p, "all")
    p.add_argument("--mutate", choices=["drop-root"], help="delete each root in turn")
    p.set_defaults(func=cmd_axioms)

    p = common(sub.add_parser("selftest", help="catalog self-test"))
    family(p, "all")
    p.set_defaults(func=cmd_selftest)

    p = common(sub.add_parser("trichotomy", help="fixed-set classification sweep"))
    family(p, "all")
    p.add_argument("--budget", type=int, default=2, help="reflection word length")
    p.add_argument("--identity-only", action="store_true")
    p.set_defaults(func=cmd_trichotomy)

    for name, func, hlp in (("restrict", cmd_restrict, "restricted root system"),
                            ("iwasawa", cmd_iwasawa, "Iwasawa decomposition check"),
                            ("satake", cmd_satake, "Satake diagram"),
                            ("sv", cmd_sv, "deformation parameters")):
        p = common(sub.add_parser(name, help=hlp))
        p.add_argument("--pair", required=True, help="e.g. 'gl(3|2):gl(1|2)xgl(2|0)'")
        p.add_argument("--delta", action="store_true", help="use delta*theta")
        if name in ("iwasawa", "sv"):
            p.add_argument("--expect-table", action="store_true",
                           help="compare against the embedded table")
        if name == "satake":
            p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
            p.add_argument("--seed", choices=["lex", "coords"], default="lex",
                           help="order used for the default positive systems")
        p.set_defaults(func=func)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
