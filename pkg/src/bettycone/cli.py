"""Command-line interface: ``bettycone <command> ...``.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or I/O errors.
"""

import argparse
import json
import sys

from . import cone2, diagram, realize2, trigraded
from .errors import BettyConeError, NotInConeError, RealizationFailedError
from .multipoly import LaurentPoly, frac_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj, out):
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


class _UsageError(Exception):
    pass


def cmd_rays(args, out):
    rays = cone2.extremal_rays(args.e1, args.e2)
    if args.json:
        _dump({"e1": args.e1, "e2": args.e2, "p": rays[0].p, "q": rays[0].q, "m": rays[0].m,
               "rays": [{
                   "index": k,
                   "ideal": [list(pt) for pt in r.T],
                   "label": r.label(),
                   "lambda": list(r.partitions[0]),
                   "mu": list(r.partitions[1]),
                   "A": r.A.to_json(),
                   "B": r.B.to_json(),
                   "diagram": r.diagram.to_json(),
               } for k, r in enumerate(rays)]}, out)
        return EXIT_OK
    r0 = rays[0]
    out.write(f"type (e1, e2) = ({args.e1}, {args.e2}): p={r0.p} q={r0.q} m={r0.m}, "
              f"{len(rays)} ray class(es)\n")
    for k, r in enumerate(rays):
        lam, mu = r.partitions
        tag = f"  [{r.label()}]" if r.label() else ""
        out.write(f"\nray {k}: T = {r.T}{tag}\n")
        out.write(f"  lambda = {lam}  mu = {mu}\n")
        out.write(f"  A_T(t^m) = {r.A}\n  B_T(t^m) = {r.B}\n")
        for line in str(r.diagram).splitlines():
            out.write(f"  {line}\n")
    return EXIT_OK


def cmd_decompose(args, out):
    data = _load_json(args.pair)
    try:
        A = LaurentPoly.from_json(data["A"])
        B = LaurentPoly.from_json(data["B"])
    except KeyError as exc:
        raise _UsageError(f"pair file needs keys 'A' and 'B': missing {exc}") from exc
    p, q, m = cone2.type_parameters(args.e1, args.e2)
    try:
        dec = cone2.decompose(A, B, p, q, m)
    except NotInConeError as exc:
        out.write(f"not in cone: {exc}\n")
        return EXIT_FAIL
    ok = dec.resum() == (A, B)
    if args.json:
        doc = dec.to_json()
        doc["resum_ok"] = ok
        _dump(doc, out)
    else:
        out.write(f"p={p} q={q} m={m}, {len(dec.terms)} term(s)\n")
        for t in dec.terms:
            out.write(f"  gamma={frac_str(t.gamma)}  shift={t.shift}  T={t.T}\n")
        out.write(f"re-summation: {'OK' if ok else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def check_diagram(D):
    """Verdicts for a diagram as an ordered dict of name -> (passed, detail)."""
    verdicts = {}
    viol = diagram.hk_check(D)
    verdicts["hk"] = (not viol, [[k, list(f), frac_str(s)] for k, f, s in viol])
    verdicts["nonnegative"] = (D.is_nonnegative(), None)
    pt = diagram.pure_type(D) if D else None
    verdicts["pure"] = (pt is not None, None if pt is None else {"d": list(pt.d), "e": list(pt.e)})
    if D.nvars == 2 and D.length == 2 and pt is not None:
        triple = diagram.betti_polynomials(D)
        verdicts["linear_relations"] = (diagram.membership_L2(triple, *pt.e), None)
    if D.nvars == 3 and D.is_nonnegative():
        obs = {k: trigraded.collapse_obstruction(D, k) for k in (1, 2, 3)}
        verdicts["collapse"] = (not any(obs.values()),
                                {str(k): [list(a) for a in v] for k, v in obs.items() if v})
    return verdicts


def cmd_check(args, out):
    D = diagram.BettiDiagram.from_json(_load_json(args.diagram))
    verdicts = check_diagram(D)
    if args.json:
        _dump({k: {"pass": ok, "detail": detail} for k, (ok, detail) in verdicts.items()}, out)
    else:
        for name, (ok, detail) in verdicts.items():
            extra = f"  {detail}" if detail else ""
            out.write(f"{name}: {'PASS' if ok else 'FAIL'}{extra}\n")
    return EXIT_OK if all(ok for ok, _ in verdicts.values()) else EXIT_FAIL


def _select_ideal(rays, key):
    if key in ("max", "equivariant"):
        return next(r for r in rays if r.T.points == cone2.region_points(r.p, r.q))
    if key in ("empty", "min"):
        return rays[0]
    try:
        return rays[int(key)]
    except (ValueError, IndexError) as exc:
        raise _UsageError(f"--ideal must be an index 0..{len(rays) - 1}, 'max' or 'empty'") from exc


def cmd_realize(args, out):
    rays = cone2.extremal_rays(args.e1, args.e2)
    ray = _select_ideal(rays, args.ideal)
    try:
        cert = realize2.realize(ray.triple, seed=args.seed, max_retries=args.max_retries)
    except RealizationFailedError as exc:
        out.write(f"realization failed ({exc.failed_check}): {exc}\n")
        return EXIT_FAIL
    doc = cert.to_json()
    doc["requested_seed"] = args.seed
    doc["ideal"] = [list(pt) for pt in ray.T]
    if args.out:
        try:
            with open(args.out, "w") as fh:
                _dump(doc, fh)
        except OSError as exc:
            raise _UsageError(f"cannot write {args.out}: {exc}") from exc
    if args.json:
        _dump(doc, out)
        return EXIT_OK
    out.write(f"ideal T = {ray.T}  seed = {args.seed} (used {cert.seed}, {cert.attempts} attempt(s))\n")
    out.write("\nalpha: F1 -> F0\n" + cert.alpha.grid() + "\n")
    out.write("\nbeta: F2 -> F1\n" + cert.beta.grid() + "\n\n")
    for name, value in cert.checks.items():
        if isinstance(value, realize2.MinorWitness):
            out.write(f"{name}: columns {list(value.columns)} minor = "
                      f"{frac_str(value.scalar)} x^{value.monomial[0]} y^{value.monomial[1]}\n")
        else:
            out.write(f"{name}: {str(value).lower()}\n")
    return EXIT_OK


def cmd_equivariant(args, out):
    try:
        e = tuple(int(x) for x in args.e.split(","))
    except ValueError as exc:
        raise _UsageError("--e must be a comma-separated list of integers") from exc
    D = trigraded.equivariant_diagram(e)
    if args.json:
        _dump(D.to_json(), out)
        return EXIT_OK
    shapes = trigraded.equivariant_shapes(e)
    out.write(f"equivariant resolution of type e = {e}\n")
    for h, (shape, line) in enumerate(zip(shapes, str(D).splitlines())):
        out.write(f"  shape {shape}  rank {D.rank(h)}  {line}\n")
    ok = not diagram.hk_check(D)
    out.write(f"hk: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def trigraded_results():
    cand = trigraded.diagram_report(trigraded.hk_only_candidate())
    alpha = trigraded.diagram_report(trigraded.example_alpha())
    fired = [(a, k) for k, degs in cand["obstructions"].items() for a in degs]
    reproduced = (
        cand["nonnegative"] and not cand["hk_violations"]
        and any(a[:2] == (3, 1) and k == 3 for a, k in fired)
        and alpha["nonnegative"] and not alpha["hk_violations"]
        and not any(alpha["obstructions"].values()))
    return cand, alpha, fired, reproduced


def cmd_trigraded_demo(args, out):
    cand, alpha, fired, reproduced = trigraded_results()
    dirs = {1: "x", 2: "y", 3: "z"}
    if args.json:
        _dump({
            "candidate": {"nonnegative": cand["nonnegative"], "hk": not cand["hk_violations"],
                          "obstructions": [{"deg": list(a), "direction": k} for a, k in fired]},
            "alpha": {"nonnegative": alpha["nonnegative"], "hk": not alpha["hk_violations"],
                      "obstructions": [{"deg": list(a), "direction": k}
                                       for k, v in alpha["obstructions"].items() for a in v]},
            "reproduced": reproduced}, out)
    else:
        def pf(flag):
            return "PASS" if flag else "FAIL"
        out.write("type (1,2,1), beta = equivariant diagram\n")
        out.write(f"candidate [(2,1,0)+(0,2,1)+(1,0,2)-(1,1,1)]beta: "
                  f"nonneg {pf(cand['nonnegative'])} / HK {pf(not cand['hk_violations'])}\n")
        for a, k in fired:
            out.write(f"candidate: obstruction at {a} dir {dirs[k]}\n")
        a_obs = [(a, k) for k, v in alpha["obstructions"].items() for a in v]
        out.write(f"alpha [six twists - (1,1,1)]beta: nonneg {pf(alpha['nonnegative'])} / "
                  f"HK {pf(not alpha['hk_violations'])}\n")
        out.write("alpha: no obstruction\n" if not a_obs else
                  "".join(f"alpha: obstruction at {a} dir {dirs[k]}\n" for a, k in a_obs))
        out.write(f"claims reproduced: {'yes' if reproduced else 'NO'}\n")
    return EXIT_OK if reproduced else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="bettycone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_type(p):
        p.add_argument("--e1", type=int, required=True)
        p.add_argument("--e2", type=int, required=True)

    p = sub.add_parser("rays", help="list extremal ray classes for (e1, e2)")
    add_type(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("decompose", help="decompose a pair (A, B) into rays")
    p.add_argument("--pair", required=True, help='JSON file {"A": poly, "B": poly}')
    add_type(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="HK / purity / nonnegativity verdicts for a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="construct and certify a resolution of a ray")
    add_type(p)
    p.add_argument("--ideal", default="max", help="index, 'max' or 'empty'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=5)
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("equivariant", help="equivariant pure diagram of a difference vector")
    p.add_argument("--e", required=True, help='e.g. "1,2,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser("trigraded-demo", help="three-variable cone example report")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trigraded_demo)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "e1", 1) < 1 or getattr(args, "e2", 1) < 1:
        parser.error("--e1 and --e2 must be positive")
    try:
        return args.func(args, out)
    except _UsageError as exc:
        sys.stderr.write(f"bettycone: {exc}\n")
        return EXIT_USAGE
    except BettyConeError as exc:
        sys.stderr.write(f"bettycone: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
