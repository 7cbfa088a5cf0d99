"""Command-line front end: verify, kernel, dims, decompose.

All numeric input and output is exact (fractions and a+b*i scalars);
`verify` exits nonzero iff any check fails, so CI can gate on the full
identity certification.  CK_WORKERS (or --workers) spreads a suite's
checks over processes; report order does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels, spaces
from .cliffpoly import CliffPoly, format_cliffpoly, parse_cliffpoly
from .reports import VerificationReport
from .verify import SUITE_ORDER, run_suite


def _grid_overrides(args) -> dict:
    out = {}
    if args.n is not None:
        out["n_values"] = [args.n]
        out["n_max"] = args.n
        out["spinor_n_max"] = args.n
    if args.m is not None:
        out["m_max"] = args.m
        out["fischer_m_max"] = args.m
        out["mono_m_values"] = [args.m]
    if args.kmax is not None:
        out["k_max"] = args.kmax
        out["gegen_k_max"] = args.kmax
    if args.pmax is not None or args.qmax is not None:
        out["pq_max"] = max(args.pmax or 0, args.qmax or 0)
    if args.pmax is not None:
        out["p_max"] = args.pmax
        out["dirac4_max"] = args.pmax
    if args.degmax is not None:
        out["deg_max"] = args.degmax
    return out


def _cmd_verify(args) -> int:
    suites = SUITE_ORDER if args.suite == "all" else [args.suite]
    overrides = _grid_overrides(args)
    reports: list[VerificationReport] = []
    for name in suites:
        rep = run_suite(name, overrides, args.workers)
        reports.append(rep)
        if args.format == "text":
            print(rep.render_text(verbose=args.verbose))
    if args.format == "json":
        print(json.dumps([json.loads(r.to_json()) for r in reports], indent=2,
                         sort_keys=True))
    ok = all(r.passed for r in reports)
    if args.format == "text":
        total = sum(len(r.checks) for r in reports)
        fails = sum(len(r.failures()) for r in reports)
        secs = sum(r.elapsed for r in reports)
        print(f"TOTAL: {total} checks, {fails} failures, {secs:.2f}s "
              f"-> {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _kernel_object(args):
    kind = args.kind
    if kind == "zonal":
        _need(args, "k", "m")
        return kernels.zonal_harmonic(args.k, args.m)
    if kind == "koornwinder":
        _need(args, "p", "q", "n")
        return kernels.koornwinder_kernel(args.p, args.q, args.n)
    if kind == "monogenic":
        _need(args, "k", "m")
        if args.route == "operational":
            return kernels.monogenic_kernel_operational(args.k, args.m)
        return kernels.monogenic_kernel_closed(args.k, args.m)
    if kind == "hermitian":
        _need(args, "p", "q", "n")
        if args.route == "operational" or args.trace:
            return kernels.hermitian_kernel_operational(args.p, args.q, args.n,
                                                        trace=args.trace)
        return kernels.hermitian_kernel_closed(args.p, args.q, args.n)
    raise ValueError(kind)


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise SystemExit(f"kernel {args.kind} needs {' '.join(missing)}")


def _poly_json(P: CliffPoly) -> list:
    out = []
    for exps, blade, c in P.iter_terms():
        idx = "".join(str(i + 1) for i in range(P.m) if blade & (1 << i))
        mono = []
        for i, e in enumerate(exps):
            if e:
                name = f"x{i + 1}" if i < P.m else f"y{i - P.m + 1}"
                mono.append(name if e == 1 else f"{name}^{e}")
        out.append({"blade": f"e{idx}" if idx else "",
                    "monomial": "*".join(mono),
                    "coef": str(c)})
    return out


def _cmd_kernel(args) -> int:
    kp = _kernel_object(args)
    if args.format == "json":
        doc = {"kind": kp.kind, "params": kp.params,
               "bidegree": {k: list(v) if isinstance(v, tuple) else v
                            for k, v in kp.bidegree.items()},
               "terms": _poly_json(kp.poly)}
        if args.trace and kp.trace:
            doc["trace"] = {f"stage{i + 1}": _poly_json(s)
                            for i, s in enumerate(kp.trace["stages"])}
        print(json.dumps(doc, indent=2))
    else:
        print(format_cliffpoly(kp.poly))
        if args.trace and kp.trace:
            for i, s in enumerate(kp.trace["stages"]):
                print(f"stage {i + 1}: {format_cliffpoly(s)}")
    return 0


def _cmd_dims(args) -> int:
    space = args.space
    if space in ("P", "H", "M"):
        _need(args, "m", "k")
        b = spaces.basis(space, m=args.m, k=args.k)
    elif space in ("Ppq", "Hpq"):
        _need(args, "n", "p", "q")
        b = spaces.basis(space, n=args.n, p=args.p, q=args.q)
    elif space == "Mpq":
        _need(args, "n", "p", "q", "j")
        b = spaces.basis(space, n=args.n, p=args.p, q=args.q, j=args.j)
    elif space == "S":
        _need(args, "n", "j")
        b = spaces.basis(space, n=args.n, j=args.j)
    else:
        raise SystemExit(f"unknown space {space}")
    doc = {"space": space, "params": {k: v for k, v in b.descriptor.items()
                                      if k != "space"},
           "dim": b.extra.get("space_dimension", b.dim)}
    if b.extra.get("right_module"):
        doc["module_generators"] = b.dim
        doc["note"] = ("elements generate the space as a right module over "
                       "the full algebra")
    if args.elements:
        doc["elements"] = [format_cliffpoly(e) for e in b.elements]
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"dim {space}{doc['params']} = {doc['dim']}")
        if "module_generators" in doc:
            print(f"  ({doc['module_generators']} right-module generators)")
        if args.elements:
            for e in doc["elements"]:
                print(f"  {e}")
    return 0


def _read_poly(args, m, nslots=1) -> CliffPoly:
    text = args.poly
    if text is None and args.file:
        with open(args.file) as fh:
            text = fh.read()
    if text is None:
        text = sys.stdin.read()
    try:
        return parse_cliffpoly(text.strip(), m, nslots)
    except ValueError as exc:
        raise SystemExit(f"parse error: {exc}")


def _cmd_decompose(args) -> int:
    if args.mode == "hermitian":
        _need_any(args, "n", "p", "q", "j")
        P = _read_poly(args, 2 * args.n)
        res = spaces.hermitian_components(P, args.n, args.p, args.q, args.j)
        doc = {"mode": "hermitian",
               "params": {"n": args.n, "p": args.p, "q": args.q, "j": args.j},
               "mixed_ratio": [str(c) for c in res["mixed_ratio"]],
               "pieces": {k: format_cliffpoly(v) for k, v in res["pieces"].items()},
               "factors": {k: format_cliffpoly(v) for k, v in res["factors"].items()}}
    elif args.mode == "monogenic":
        _need_any(args, "m")
        P = _read_poly(args, args.m)
        mpart, mprime = spaces.monogenic_split(P)
        doc = {"mode": "monogenic", "params": {"m": args.m},
               "pieces": {"monogenic": format_cliffpoly(mpart),
                          "vector-part-factor": format_cliffpoly(mprime)}}
    else:
        _need_any(args, "m")
        P = _read_poly(args, args.m)
        parts = spaces.harmonic_components(P)
        doc = {"mode": "harmonic", "params": {"m": args.m},
               "pieces": {f"|x|^{2 * j} * H_{P.homogeneous_degree() - 2 * j}":
                          format_cliffpoly(h) for j, h in parts}}
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"decomposition ({doc['mode']}):")
        for name, text in doc["pieces"].items():
            print(f"  {name}: {text}")
        if "factors" in doc:
            for name, text in doc["factors"].items():
                print(f"  factor {name}: {text}")
    return 0


def _need_any(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x, None) is None]
    if missing:
        raise SystemExit(f"decompose --mode {args.mode} needs {' '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cliffkernels",
        description="exact verification of the Dirac-operator kernel identities")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a certification suite")
    v.add_argument("--suite", default="all", choices=["all"] + SUITE_ORDER)
    v.add_argument("--format", default="text", choices=["text", "json"])
    v.add_argument("--workers", type=int, default=None,
                   help="process count (default: CK_WORKERS, else up to 4 cores)")
    v.add_argument("--verbose", action="store_true",
                   help="print every check, not only failures")
    for flag in ("--n", "--m", "--kmax", "--pmax", "--qmax", "--degmax"):
        v.add_argument(flag, type=int, default=None)
    v.set_defaults(fn=_cmd_verify)

    k = sub.add_parser("kernel", help="print a reproducing kernel exactly")
    k.add_argument("kind", choices=["zonal", "koornwinder", "monogenic", "hermitian"])
    for flag in ("--k", "--m", "--p", "--q", "--n"):
        k.add_argument(flag, type=int, default=None)
    k.add_argument("--route", default="closed", choices=["closed", "operational"])
    k.add_argument("--trace", action="store_true",
                   help="also print the staged operator intermediates (hermitian)")
    k.add_argument("--format", default="text", choices=["text", "json"])
    k.set_defaults(fn=_cmd_kernel)

    d = sub.add_parser("dims", help="exact dimension of a polynomial space")
    d.add_argument("--space", required=True,
                   choices=["P", "H", "M", "Ppq", "Hpq", "Mpq", "S"])
    for flag in ("--m", "--k", "--n", "--p", "--q", "--j"):
        d.add_argument(flag, type=int, default=None)
    d.add_argument("--elements", action="store_true")
    d.add_argument("--format", default="text", choices=["text", "json"])
    d.set_defaults(fn=_cmd_dims)

    dec = sub.add_parser("decompose", help="split a polynomial exactly")
    dec.add_argument("--mode", default="harmonic",
                     choices=["harmonic", "monogenic", "hermitian"])
    dec.add_argument("--poly", help="polynomial in the text format")
    dec.add_argument("--file", help="file containing the polynomial")
    for flag in ("--m", "--n", "--p", "--q", "--j"):
        dec.add_argument(flag, type=int, default=None)
    dec.add_argument("--format", default="text", choices=["text", "json"])
    dec.set_defaults(fn=_cmd_decompose)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
