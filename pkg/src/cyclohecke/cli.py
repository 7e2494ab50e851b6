"""Command line: parameter checks, verification runs, dumps and dimension queries.

Exit codes: 0 success, 1 a check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .exactfield import SemisimplicityError, check_semisimple, default_params, make_params
from .gprn import GrpnLayer
from .seminormal import DESK_BOUND_ENV, MUTATIONS, DeskBoundExceeded, SeminormalForm
from .verify import SCHEMA_VERSION, brute_force_center_dims, dim_audit, resolve_scope, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DUMP_KINDS = ("gamma", "basis", "idempotents", "twisted-center", "dims")


class InputError(Exception):
    pass


def _add_point(sp):
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", help='Hecke parameter as "a/b" (default 2)')
    sp.add_argument("--Q", nargs="+", metavar="A/B", help="the d cyclotomic parameters")
    sp.add_argument("--bound", type=int, help="desk bound on r^n n! for oracle checks")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--output", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclohecke", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="show and validate a parameter point")
    _add_point(sp)
    sp.add_argument("--check", action="store_true", help="exit 2 unless the point is semisimple")

    sp = sub.add_parser("verify", help="run the property suite")
    _add_point(sp)
    sp.add_argument("--scope", help="comma separated check names")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--mutation", choices=MUTATIONS, help="inject a known fault")

    sp = sub.add_parser("dump", help="write computed tables")
    _add_point(sp)
    sp.add_argument("--what", choices=DUMP_KINDS, required=True)

    sp = sub.add_parser("dims", help="dimension audit and twisted centre dimensions")
    _add_point(sp)
    return ap


def _params(args):
    if args.bound is not None:
        os.environ[DESK_BOUND_ENV] = str(args.bound)
    try:
        if args.q is None and args.Q is None:
            params = default_params(args.r, args.p, args.n)
        else:
            base = default_params(args.r, args.p, args.n) if (args.q is None or args.Q is None) else None
            q = args.q if args.q is not None else base.q
            Q = args.Q if args.Q is not None else base.Q
            params = make_params(args.r, args.p, args.n, q, Q)
    except (ValueError, ZeroDivisionError, SemisimplicityError) as exc:
        raise InputError(str(exc))
    ok = check_semisimple(params)
    if not ok:
        raise InputError("semisimplicity product vanishes at factor: %s" % ok.witness)
    return params


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _blocks(sf, x) -> dict:
    return {
        lam.label(): [[str(v) for v in row] for row in m]
        for lam, m in x.blocks.items()
        if any(v for row in m for v in row)
    }


# ---------------------------------------------------------------------------


def cmd_params(args) -> int:
    try:
        params = _params(args)
    except InputError as exc:
        print("invalid parameters: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    rec = {"schema_version": SCHEMA_VERSION, "params": params.to_json(), "semisimple": True}
    if args.format == "csv":
        _emit(args, _csv(["key", "value"], [(k, json.dumps(v)) for k, v in sorted(params.to_json().items())]))
    else:
        _emit(args, _json(rec))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        params = _params(args)
        scope = resolve_scope(args.scope.split(",")) if args.scope else None
        report = run_suite(args.r, args.p, args.n, params, scope, args.mutation, args.jobs)
    except (InputError, DeskBoundExceeded, ValueError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    _emit(args, report.to_csv() if args.format == "csv" else report.dumps())
    for c in report.failures():
        print("FAILED %s: %s" % (c.name, json.dumps(c.counterexample, sort_keys=True)), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _dump_gamma(sf, fmt):
    if fmt == "csv":
        rows = [(lam.label(), t.label(), str(sf.gamma(t))) for lam in sf.shapes for t in sf.std[lam]]
        return _csv(["shape", "tableau", "gamma"], rows)
    shapes = [
        {
            "shape": lam.to_json(),
            "label": lam.label(),
            "gamma": [{"tableau": t.to_json(), "label": t.label(), "value": str(sf.gamma(t))} for t in sf.std[lam]],
        }
        for lam in sf.shapes
    ]
    return {"shapes": shapes}


def _dump_basis(layer, fmt):
    basis = layer.basis()
    if fmt == "csv":
        rows = [
            (e.shape.label(), e.s.label(), e.t.label(), e.k, u.label(), v.label(), str(c))
            for e in basis.elements
            for (u, v), c in e.terms.items()
        ]
        return _csv(["shape", "s", "t", "k", "u", "v", "coefficient"], rows)
    elems = [
        {
            "shape": e.shape.label(),
            "s": e.s.label(),
            "t": e.t.label(),
            "k": e.k,
            "terms": [[u.label(), v.label(), str(c)] for (u, v), c in e.terms.items()],
        }
        for e in basis.elements
    ]
    return {"count": len(elems), "elements": elems}


def _dump_idempotents(layer, fmt):
    ids = layer.central_idempotents()
    if fmt == "csv":
        rows = []
        for lam, k, F in ids:
            for blk, m in _blocks(layer.sf, F).items():
                for i, row in enumerate(m):
                    for j, v in enumerate(row):
                        if v != "0":
                            rows.append((lam.label(), k, blk, i, j, v))
        return _csv(["shape", "k", "block", "row", "col", "value"], rows)
    return {"count": len(ids), "idempotents": [
        {"shape": lam.label(), "k": k, "blocks": _blocks(layer.sf, F)} for lam, k, F in ids
    ]}


def _dump_twisted(layer, fmt):
    per_k = {k: layer.twisted_center(k) for k in range(layer.p)}
    if fmt == "csv":
        rows = []
        for k, zs in per_k.items():
            for lam, z in zs:
                for blk, m in _blocks(layer.sf, z).items():
                    for i, row in enumerate(m):
                        for j, v in enumerate(row):
                            if v != "0":
                                rows.append((k, lam.label(), blk, i, j, v))
        return _csv(["k", "shape", "block", "row", "col", "value"], rows)
    return {"twisted_center": {
        str(k): [{"shape": lam.label(), "blocks": _blocks(layer.sf, z)} for lam, z in zs] for k, zs in per_k.items()
    }}


def _dims_record(params) -> dict:
    rec = dim_audit(params.r, params.p, params.n)
    rec["twisted_center_dims"] = {str(k): v for k, v in brute_force_center_dims(
        params.r, params.p, params.n, params).items()}
    return rec


def cmd_dump(args) -> int:
    try:
        params = _params(args)
    except InputError as exc:
        print("invalid parameters: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    sf = SeminormalForm(params)
    layer = GrpnLayer(sf)
    if args.what == "gamma":
        out = _dump_gamma(sf, args.format)
    elif args.what == "basis":
        out = _dump_basis(layer, args.format)
    elif args.what == "idempotents":
        out = _dump_idempotents(layer, args.format)
    elif args.what == "twisted-center":
        out = _dump_twisted(layer, args.format)
    else:
        rec = _dims_record(params)
        out = _csv(["key", "value"], [(k, json.dumps(v, sort_keys=True)) for k, v in sorted(rec.items())]) \
            if args.format == "csv" else rec
    if isinstance(out, dict):
        out = _json(dict(out, schema_version=SCHEMA_VERSION, params=params.to_json(), what=args.what))
    _emit(args, out)
    return EXIT_OK


def cmd_dims(args) -> int:
    try:
        params = _params(args)
    except InputError as exc:
        print("invalid parameters: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    rec = _dims_record(params)
    ok = rec["hecke_dim_ok"] and rec["subalgebra_dim_ok"]
    if args.format == "csv":
        _emit(args, _csv(["key", "value"], [(k, json.dumps(v, sort_keys=True)) for k, v in sorted(rec.items())]))
    else:
        _emit(args, _json(dict(rec, schema_version=SCHEMA_VERSION)))
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"params": cmd_params, "verify": cmd_verify, "dump": cmd_dump, "dims": cmd_dims}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get(DESK_BOUND_ENV)
    try:
        return COMMANDS[args.command](args)
    finally:
        # --bound applies to this invocation only
        if saved is None:
            os.environ.pop(DESK_BOUND_ENV, None)
        else:
            os.environ[DESK_BOUND_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
