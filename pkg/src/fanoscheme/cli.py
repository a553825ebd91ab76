"""Command line front end: ``fanoscheme <command> ...``.

Exit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded,
4 input invariant violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .classify import FAMILIES, TriState, classify, format_ks, render_table
from .errors import DomainError, EmptySchemeError, InvariantError, ResourceError
from .params import FanoParams
from .patterns import DEFAULT_CELL_CAP, count_fixed_points, fixed_orbits
from .schubert import compression_degree, f1_degree, gr_degree
from .symalg import DET, PERM, dumps_plane, loads_plane, plane_in_scheme
from .tangent import CompressedPlane, tangent_dim, witness_det, witness_perm

SCHEMA = "fanoscheme/1"
TABLE_N_MAX = 12

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


class UsageError(DomainError):
    pass


def _json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _bool(x: bool) -> str:
    return "true" if x else "false"


# -- commands -----------------------------------------------------------------------


def cmd_classify(args) -> str:
    p = FanoParams(args.m, args.n, args.r, args.k)
    try:
        verdicts = classify(p, args.family)
    except EmptySchemeError:
        if args.format == "json":
            return _json({"command": "classify", "family": args.family, "params": _params(p), "verdict": "empty"})
        if args.format == "csv":
            return _csv(["property", "verdict", "theorem_tag", "witness_s"], [["scheme", "empty", "", ""]])
        return "empty\n"
    if args.format == "json":
        return _json(
            {
                "command": "classify",
                "family": args.family,
                "params": _params(p),
                **{name: v.as_dict() for name, v in verdicts.items()},
            }
        )
    rows = []
    for name, v in verdicts.items():
        value = _bool(v.value) if isinstance(v.value, bool) else str(v.value)
        rows.append([name, value, v.theorem_tag, "" if v.s is None else v.s])
    if args.format == "csv":
        return _csv(["property", "verdict", "theorem_tag", "witness_s"], rows)
    return "".join(f"{name}: {value} [{tag}]\n" for name, value, tag, _ in rows)


def _params(p: FanoParams) -> dict:
    return {"m": p.m, "n": p.n, "r": p.r, "k": p.k}


def cmd_table(args) -> str:
    if not 2 <= args.n_min <= args.n_max <= TABLE_N_MAX:
        raise UsageError(f"need 2 <= n_min <= n_max <= {TABLE_N_MAX}")
    rows = render_table(args.family, range(args.n_min, args.n_max + 1))
    if args.format == "json":
        return _json(
            {
                "command": "table",
                "family": args.family,
                "rows": [
                    {
                        "n": row.n,
                        "nonempty_max_k": row.nonempty_max_k,
                        "singular_max_k": row.singular_max_k,
                        "connected_max_k": row.connected_prefix,
                        "connected_extra": row.connected_extra,
                        "disconnected": row.disconnected,
                        "unknown": row.ks_with(TriState.UNKNOWN),
                    }
                    for row in rows
                ],
            }
        )
    if args.format == "csv":
        out = []
        for row in rows:
            for k, cell in enumerate(row.connected_cells, start=1):
                singular = row.singular_max_k is not None and k <= row.singular_max_k
                connected = "?" if cell is TriState.UNKNOWN else str(cell)
                out.append([args.family, row.n, k, _bool(singular), connected])
        return _csv(["family", "n", "k", "singular", "connected"], out)
    return _table_text(args.family, rows)


def _table_text(family: str, rows) -> str:
    dash = lambda x: "--" if x is None else str(x)  # noqa: E731
    connected_label = "Connected iff k <=" if family == DET else "Connected if k <="
    lines = [
        ["n"] + [str(row.n) for row in rows],
        ["Non-empty iff k <="] + [str(row.nonempty_max_k) for row in rows],
        ["Singular iff k <="] + [dash(row.singular_max_k) for row in rows],
        [connected_label] + [dash(row.connected_prefix) for row in rows],
        ["or k ="] + [format_ks(row.connected_extra) for row in rows],
    ]
    if family == PERM:
        lines.append(["Disconnected if k ="] + [format_ks(row.disconnected) for row in rows])
    unknown = [row.ks_with(TriState.UNKNOWN) for row in rows]
    if any(unknown):
        lines.append(["? at k ="] + [format_ks(ks) for ks in unknown])
    widths = [max(len(line[i]) for line in lines) for i in range(len(lines[0]))]
    out = []
    for line in lines:
        cells = [line[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(line[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def cmd_fixed_points(args) -> str:
    p = FanoParams(args.m, args.n, args.r, args.k)
    if args.orbits:
        orbits = fixed_orbits(p, args.cap)
        count = sum(orbits.values())
    else:
        orbits = None
        count = count_fixed_points(p, args.cap)
    if args.format == "json":
        payload = {"command": "fixed-points", "params": _params(p), "count": count}
        if orbits is not None:
            payload["orbits"] = [{"representative": str(rep), "size": size} for rep, size in orbits.items()]
        return _json(payload)
    if args.format == "csv":
        if orbits is None:
            return _csv(["count"], [[count]])
        return _csv(["representative", "size"], [[str(rep), size] for rep, size in orbits.items()])
    out = [f"fixed points: {count}"]
    if orbits is not None:
        out.append(f"orbits: {len(orbits)}")
        out.extend(f"  {rep}  {size}" for rep, size in orbits.items())
    return "\n".join(out) + "\n"


def _read_plane(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return loads_plane(text)


def cmd_tangent(args) -> str:
    if args.make_witness is not None:
        m, n, r, k, s = args.make_witness
        build = witness_det if args.family == DET else witness_perm
        text = dumps_plane(build(m, n, r, k, s).matrix)
        if args.output:
            Path(args.output).write_text(text)
            return ""
        return text
    if args.file is None or args.r is None or args.s is None:
        raise UsageError("tangent needs FILE, --r and --s (or --make-witness)")
    M = _read_plane(args.file)
    P = CompressedPlane.of(M, args.r, args.s)
    report = tangent_dim(P, args.family)
    fmt = args.format or "json"
    if fmt == "json":
        return _json({"command": "tangent", "family": args.family, "s": args.s, **report.as_dict()})
    eqs, unknowns = report.system_size
    if fmt == "csv":
        return _csv(["a_dim", "tangent_dim", "equations", "unknowns"], [[report.a_dim, report.tangent_dim, eqs, unknowns]])
    return f"a_dim: {report.a_dim}\ntangent_dim: {report.tangent_dim}\nsystem: {eqs} equations, {unknowns} unknowns\n"


def cmd_degree(args) -> str:
    if args.mode == "f1":
        _need(args, "n")
        value = f1_degree(args.n)
    elif args.mode == "grassmannian":
        _need(args, "a", "b")
        value = gr_degree(args.a, args.b)
    else:
        _need(args, "m", "n", "r", "s")
        value = compression_degree(args.m, args.n, args.r, args.s)
    if args.format == "json":
        return _json({"command": "degree", "mode": args.mode, "degree": value})
    if args.format == "csv":
        return _csv(["degree"], [[value]])
    return f"{value}\n"


def _need(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"degree {args.mode} needs {', '.join(missing)}")


def cmd_membership(args) -> str:
    M = _read_plane(args.file)
    inside = plane_in_scheme(M, args.r, args.family)
    if args.format == "json":
        return _json({"command": "membership", "family": args.family, "r": args.r, "member": inside})
    if args.format == "csv":
        return _csv(["member"], [[_bool(inside)]])
    return _bool(inside) + "\n"


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=None)
    common.add_argument("--cap", type=int, default=DEFAULT_CELL_CAP, help="enumeration limit in matrix cells")

    parser = argparse.ArgumentParser(
        prog="fanoscheme",
        description="Invariants of Fano schemes of determinantal and permanental loci.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="smooth / irreducible / connected verdicts")
    p.add_argument("family", choices=FAMILIES)
    for name in "mnrk":
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", parents=[common], help="summary table for r = m = n")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fixed-points", parents=[common], help="torus fixed point census")
    for name in "mnrk":
        p.add_argument(name, type=int)
    p.add_argument("--orbits", action="store_true", help="group fixed points into row/column permutation orbits")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("tangent", parents=[common], help="tangent space dimension at a plane")
    p.add_argument("file", nargs="?")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--family", choices=FAMILIES, default=DET)
    p.add_argument(
        "--make-witness", nargs=5, type=int, metavar=("M", "N", "R", "K", "S"),
        help="write the witness plane for these parameters instead of reading FILE",
    )
    p.add_argument("-o", "--output", help="where --make-witness writes (default stdout)")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("degree", parents=[common], help="exact degrees")
    p.add_argument("mode", choices=("f1", "grassmannian", "compression"))
    for name in ("n", "a", "b", "m", "r", "s"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("membership", parents=[common], help="does a plane lie on the r x r locus")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--family", choices=FAMILIES, default=DET)
    p.set_defaults(func=cmd_membership)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.format is None and args.command != "tangent":
        args.format = "text"
    try:
        out = args.func(args)
    except ResourceError as exc:
        print(f"fanoscheme: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantError as exc:
        print(f"fanoscheme: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except DomainError as exc:
        print(f"fanoscheme: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
