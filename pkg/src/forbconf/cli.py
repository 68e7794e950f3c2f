"""``forbconf`` command line.

Every command prints one JSON object to stdout::

    {"command": [...argv...], "status": "ok" | "error", "payload": ..., "millis": int}

Exit code 0 on success, 1 when the answer is a domain "no" (``check`` found
no embedding, a verifier returned false), 2 on any error.  Error payloads
are ``{"code": ..., "message": ...}``.

Payload keys per subcommand:

    check           {rows, cols}  or the string "none"
    forb            {forb, witness_file, nodes, millis}
    xvalue          {x, prediction_exponent, certificates, conjectural, known_counterexample}
    classify        {class, certificate}
    turan           {m, graph, ex}
    construct       {name, shape, matrix, out}
    decompose       {row, B, C, D}
    verify q9-structure   {classes}
    verify bucket         {lhs, rhs, holds}
    verify ysystem        {total, bound, holds}
    verify extendgraph    {m, forb, ex, holds}
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import catalog, growth, structure
from .containment import has_config
from .errors import DomainError, ForbConfError, ParseError
from .graphs import ex_exact, load_graph
from .matrix import BinMatrix, read_matrix, write_matrix
from .products import predicted_growth, x_report
from .search import decompose, forb_exact


class UsageError(ForbConfError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_matrix(token: str) -> BinMatrix:
    """A catalog name, or a path to a file in the text matrix format."""
    if Path(token).is_file():
        return read_matrix(token)
    return catalog.parse_name(token)


def split_family(text: str) -> list[str]:
    """Split a comma list, gluing bare integers back onto the previous item.

    ``"zeros:2,2,J:2,2"`` gives ``["zeros:2,2", "J:2,2"]``.
    """
    out: list[str] = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            raise ParseError(f"empty item in family list {text!r}")
        if tok.isdigit() and out and ":" in out[-1]:
            out[-1] += "," + tok
        else:
            out.append(tok)
    return out


def load_family(text: str) -> list[BinMatrix]:
    return [load_matrix(t) for t in split_family(text)]


def matrix_json(A: BinMatrix) -> dict:
    return {"shape": [A.rows, A.ncols], "rows": A.row_strings()}


# --- subcommands ------------------------------------------------------------
# Each returns (payload, exit_code).


def cmd_check(args):
    emb = has_config(load_matrix(args.target), load_matrix(args.pattern))
    if emb is None:
        return "none", 1
    return emb.to_json(), 0


def cmd_forb(args):
    family = load_family(args.family)
    result = forb_exact(args.m, family, workers=args.workers, symmetry=args.symmetry)
    witness_file = None
    if args.emit_witness:
        write_matrix(result.witness, args.emit_witness)
        witness_file = str(args.emit_witness)
    payload = result.to_json()
    return {"forb": payload["forb"], "witness_file": witness_file,
            "nodes": payload["nodes"], "millis": payload["millis"]}, 0


def cmd_xvalue(args):
    family = load_family(args.family)
    report = x_report(family, args.max_p)
    if report.x is None:
        return {"x": None, "prediction_exponent": None, "certificates": report.certificates(),
                "conjectural": True, "known_counterexample": None}, 0
    pred = predicted_growth(family, x=report.x)
    payload = pred.to_json()
    payload["certificates"] = report.certificates()
    return payload, 0


def _all_q(family: list[BinMatrix]) -> bool:
    try:
        growth.q_indices(family)
    except DomainError:
        return False
    return True


def cmd_classify(args):
    family = load_family(args.family)
    mode = args.mode
    if mode == "auto":
        ones3 = catalog.ones(3)
        if _all_q(family):
            mode = "q"
        elif len(family) == 2 and any(F == ones3 for F in family):
            mode = "ones3"
        else:
            mode = "constant"
    if mode == "q":
        gc = growth.family_growth(family)
    elif mode == "ones3":
        rest = [F for F in family if F != catalog.ones(3)]
        if len(rest) != 1:
            raise DomainError("ones3 mode expects the family {ones:3, F}")
        gc = growth.classify_ones3_family(rest[0])
    else:
        gc = growth.classify_constant(family)
    return gc.to_json(), 0


def cmd_turan(args):
    H = load_graph(args.graph)
    return {"m": args.m, "graph": {"n": H.vertex_count, "edges": [list(e) for e in H.edges]},
            "ex": ex_exact(args.m, H)}, 0


def cmd_construct(args):
    if args.constant:
        try:
            params = [int(x) for x in args.constant.split(",")]
        except ValueError as exc:
            raise ParseError("--constant expects m,k,l,p,q") from exc
        if len(params) != 5:
            raise ParseError("--constant expects m,k,l,p,q")
        A = catalog.make_constant_construction(*params)
        name = "constant:" + args.constant
    elif args.name:
        A = catalog.parse_name(args.name)
        name = args.name
    else:
        raise UsageError("construct needs --name or --constant")
    if args.out:
        write_matrix(A, args.out)
    return {"name": name, "shape": [A.rows, A.ncols], "matrix": A.row_strings(),
            "out": str(args.out) if args.out else None}, 0


def cmd_decompose(args):
    d = decompose(load_matrix(args.input), args.row)
    return {"row": d.row, "B": matrix_json(d.B), "C": matrix_json(d.C), "D": matrix_json(d.D)}, 0


def cmd_verify(args):
    if args.what == "q9-structure":
        classes = structure.q9_decompose(load_matrix(args.input))
        return {"classes": [c.to_json() for c in classes]}, 0
    if args.what == "bucket":
        r = structure.bucket_inequality(load_matrix(args.input), args.k, args.l, args.p, args.q)
        return {"lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}, 0 if r.holds else 1
    if args.what == "ysystem":
        try:
            data = json.loads(Path(args.input).read_text())
        except (OSError, ValueError) as exc:
            raise ParseError(f"cannot read set system: {exc}") from exc
        if isinstance(data, list):
            data = {"sets": data}
        sets = data.get("sets")
        if not isinstance(sets, list):
            raise ParseError('set system JSON needs a "sets" list')
        m = args.m if args.m is not None else data.get("m")
        if m is None:
            m = max((max(s) for s in sets if s), default=1)
        r = structure.y_system_bound(structure.YSystem.of(sets), int(m))
        return {"total": r.total, "bound": r.bound, "holds": r.holds}, 0 if r.holds else 1
    if args.what == "extendgraph":
        r = growth.verify_extendgraph(args.m, load_graph(args.graph))
        return {"m": r.m, "forb": r.forb, "ex": r.ex, "holds": r.holds}, 0 if r.holds else 1
    raise UsageError(f"unknown verifier {args.what!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="forbconf", description="Forbidden configurations in (0,1)-matrices.")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("check", help="find an embedding of PATTERN in TARGET")
    s.add_argument("--target", required=True)
    s.add_argument("--pattern", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("forb", help="exact forb(m, family)")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--family", required=True)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--symmetry", action="store_true", help="use row-permutation symmetry at the root")
    s.add_argument("--emit-witness", type=Path, default=None)
    s.set_defaults(func=cmd_forb)

    s = sub.add_parser("xvalue", help="the product exponent X of a family")
    s.add_argument("--family", required=True)
    s.add_argument("--max-p", type=int, default=4)
    s.set_defaults(func=cmd_xvalue)

    s = sub.add_parser("classify", help="growth class of a family")
    s.add_argument("--family", required=True)
    s.add_argument("--mode", choices=["auto", "constant", "q", "ones3"], default="auto")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("turan", help="exact ex(m, H)")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_turan)

    s = sub.add_parser("construct", help="build a named matrix")
    s.add_argument("--name")
    s.add_argument("--constant", help="m,k,l,p,q for the 0_{k,l}/J_{p,q} avoiding construction")
    s.add_argument("--out", type=Path, default=None)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("decompose", help="split A at a row into B, C, D")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("-r", "--row", type=int, required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", help="structural checks")
    vsub = s.add_subparsers(dest="what", parser_class=_Parser)
    vsub.required = True
    v = vsub.add_parser("q9-structure")
    v.add_argument("--in", dest="input", required=True)
    v = vsub.add_parser("bucket")
    v.add_argument("--in", dest="input", required=True)
    for flag in ("k", "l", "p", "q"):
        v.add_argument(f"-{flag}", type=int, required=True)
    v = vsub.add_parser("ysystem")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("-m", type=int, default=None)
    v = vsub.add_parser("extendgraph")
    v.add_argument("-m", type=int, required=True)
    v.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_verify)
    return p


def execute(argv: list[str]) -> tuple[dict, int]:
    """Run one command; returns the result object and the exit code."""
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        payload, code = args.func(args)
        status = "ok"
    except ForbConfError as exc:
        payload, code, status = {"code": exc.code, "message": str(exc)}, 2, "error"
    except OSError as exc:
        payload, code, status = {"code": "io", "message": str(exc)}, 2, "error"
    millis = int((time.perf_counter() - start) * 1000)
    return {"command": list(argv), "status": status, "payload": payload, "millis": millis}, code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result, code = execute(argv)
    if result["status"] == "error":
        print(f"forbconf: {result['payload']['message']}", file=sys.stderr)
    print(json.dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
