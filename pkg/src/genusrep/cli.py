"""Command-line front end.

Subcommands: validate, construct, verify, graph-check, sweep, levelset.
Exit codes: 0 ok, 1 parse/schema, 2 parameter range, 3 construction
constraint, 4 verification failure, 5 empty geometry. The environment
variable GENUSREP_TOL overrides the default residual tolerance.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import levelset, repfile, reps
from .errors import (
    ConstraintError,
    EmptyIsosurfaceError,
    ExistenceError,
    GenusRepError,
    ParameterRangeError,
    SchemaError,
)
from .graphs import forbidden_check, graph_of
from .surface import SurfaceParams, alpha_upper_bound, check_M_bounds, check_p_zero, max_G

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PARAM_RANGE = 2
EXIT_CONSTRAINT = 3
EXIT_VERIFY = 4
EXIT_EMPTY_GEOMETRY = 5

DEFAULT_TOL = 1e-9


def _default_tol() -> float:
    raw = os.environ.get("GENUSREP_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError as exc:
        raise SchemaError(f"GENUSREP_TOL is not a number: {raw!r}") from exc


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the exit-code contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _values_list(spec: str, grid: int | None) -> list[float]:
    """Parse a sweep axis: 'a,b,c' is an explicit list, 'lo:hi' a uniform
    grid of --grid points."""
    try:
        if ":" in spec:
            lo_s, _, hi_s = spec.partition(":")
            lo, hi = float(lo_s), float(hi_s)
            n = grid if grid is not None else 11
            if n < 2:
                raise SchemaError("--grid must be >= 2 for a range sweep")
            return [lo + (hi - lo) * i / (n - 1) for i in range(n)]
        return [float(tok) for tok in spec.split(",") if tok]
    except ValueError as exc:
        raise SchemaError(f"bad value list {spec!r}: {exc}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="genusrep",
                     description="Matrix representations of genus-g surface algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, with_hbar=True, hbar_default=None):
        p.add_argument("--g", type=int, required=True, help="genus (integer >= 1)")
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--c", type=float, required=True)
        if with_hbar:
            p.add_argument("--hbar", type=float, default=hbar_default)

    p_val = sub.add_parser("validate",
                           help="check parameter ranges and the defining sign inequalities")
    add_params(p_val, hbar_default=1.0)

    p_con = sub.add_parser("construct", help="construct a representation")
    p_con.add_argument("type", choices=["1d", "typeI", "typeII", "3d"])
    add_params(p_con)
    p_con.add_argument("--x", type=float, help="sample point (1d)")
    p_con.add_argument("--x-hat", type=float, help="branch point (typeII; optional for 3d)")
    p_con.add_argument("--theta", type=float, default=0.0)
    p_con.add_argument("--theta2", type=float, default=0.0, help="second phase (3d)")
    p_con.add_argument("--y-sign", type=int, choices=[1, -1], default=1)
    p_con.add_argument("--root-index", type=int, default=0, help="branch selection (typeI)")
    p_con.add_argument("--tol", type=float, default=None)
    p_con.add_argument("--out", type=Path, default=None)

    p_ver = sub.add_parser("verify", help="verify a representation file")
    p_ver.add_argument("file", type=Path)
    p_ver.add_argument("--tol", type=float, default=None)

    p_gc = sub.add_parser("graph-check", help="run the graph exclusion rules")
    p_gc.add_argument("file", type=Path, nargs="?",
                      help="representation file (graph of its Y)")
    p_gc.add_argument("--adjacency", type=str, default=None,
                      help="graph JSON: inline literal or a file path")

    p_sw = sub.add_parser("sweep", help="sweep constructions over a parameter axis")
    p_sw.add_argument("type", choices=["1d", "typeI", "typeII", "3d"])
    add_params(p_sw, with_hbar=False)
    p_sw.add_argument("--hbar", type=str, default=None,
                      help="values 'a,b,c' or range 'lo:hi' (typeI, 1d)")
    p_sw.add_argument("--x", type=str, default=None, help="sample points (1d)")
    p_sw.add_argument("--x-hat", type=str, default=None, help="branch points (typeII, 3d)")
    p_sw.add_argument("--grid", type=int, default=None, help="points for range specs")
    p_sw.add_argument("--out", type=Path, default=None)

    p_ls = sub.add_parser("levelset", help="export the level-set surface mesh")
    add_params(p_ls, hbar_default=1.0)
    p_ls.add_argument("--bounds", type=str, default=None,
                      help="box 'x0:x1,y0:y1,z0:z1' (default auto)")
    p_ls.add_argument("--resolution", type=int, default=96)
    p_ls.add_argument("--out", type=Path, required=True)
    p_ls.add_argument("--format", choices=["obj", "csv"], default=None)

    return parser


# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    m = max_G(args.g)
    bound = alpha_upper_bound(args.g, args.c)
    print(f"M = {m!r}")
    print(f"alpha range: (0, {bound!r})")
    mb = check_M_bounds(args.g)
    print(f"M >= (2g-1)!/g = {mb.bound_ratio}: {mb.ratio_ok}")
    print(f"M >= (g!)^2 = {mb.bound_square}: {mb.square_ok}")
    try:
        params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=args.hbar)
    except ParameterRangeError as exc:
        print(f"invalid: {exc}")
        return EXIT_PARAM_RANGE
    pz = check_p_zero(params)
    print(f"p(0) = {pz.p0!r}")
    print(f"p(0) + 3*sqrt(c) = {pz.margin_plus!r} > 0: {pz.plus_ok}")
    print(f"p(0) - sqrt(c) = {pz.margin_minus!r} < 0: {pz.minus_ok}")
    print("valid")
    return EXIT_OK


def _construct_one(args):
    if args.type == "1d":
        if args.x is None or args.hbar is None:
            raise SchemaError("construct 1d requires --x and --hbar")
        params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=args.hbar)
        return reps.one_dim_rep(params, args.x)
    if args.type == "typeI":
        if args.hbar is None:
            raise SchemaError("construct typeI requires --hbar")
        params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=args.hbar)
        return reps.construct_type_I(params, theta=args.theta, root_index=args.root_index)
    if args.type == "typeII":
        if args.x_hat is None:
            raise SchemaError("construct typeII requires --x-hat")
        if args.hbar is not None:
            print("warning: --hbar is derived for typeII; ignoring the given value",
                  file=sys.stderr)
        _, rep = reps.construct_type_II(args.g, args.alpha, args.c, args.x_hat,
                                        theta=args.theta, y_sign=args.y_sign)
        return rep
    if args.hbar is not None:
        print("warning: --hbar is derived for 3d; ignoring the given value", file=sys.stderr)
    _, rep = reps.construct_3d_string(args.g, args.alpha, args.c, theta1=args.theta,
                                      theta2=args.theta2, x_hat=args.x_hat)
    return rep


def cmd_construct(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    rep = _construct_one(args)
    res = rep.residuals()
    rel = res.relative
    print(f"residuals (relative): xy={rel[0]:.3e} yz={rel[1]:.3e} zx={rel[2]:.3e}",
          file=sys.stderr)
    if args.out is not None:
        with open(args.out, "w") as fp:
            repfile.save_rep(rep, fp)
    else:
        repfile.save_rep(rep, sys.stdout)
    return EXIT_OK if res.within(tol) else EXIT_VERIFY


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    with open(args.file) as fp:
        rep = repfile.load_rep(fp)
    res = rep.residuals()
    rel = res.relative
    print(f"res_xy_rel = {rel[0]:.6e}")
    print(f"res_yz_rel = {rel[1]:.6e}")
    print(f"res_zx_rel = {rel[2]:.6e}")
    print(f"degenerate = {reps.is_degenerate(rep)}")
    verdict = forbidden_check(graph_of(rep.Y))
    detail = f" ({verdict.rule}: {verdict.detail})" if verdict.forbidden else ""
    print(f"graph = {verdict.status}{detail}")
    cls = reps.classify(rep)
    print(f"kind = {cls.kind.value}")
    print(f"irreducibility = {cls.irreducibility}")
    return EXIT_OK if res.within(tol) else EXIT_VERIFY


def cmd_graph_check(args) -> int:
    if (args.adjacency is None) == (args.file is None):
        raise SchemaError("provide exactly one of: a representation file, or --adjacency")
    if args.adjacency is not None:
        text = args.adjacency
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid adjacency JSON: {exc}") from exc
        graph = repfile.graph_from_dict(data)
    else:
        with open(args.file) as fp:
            graph = graph_of(repfile.load_rep(fp).Y)
    verdict = forbidden_check(graph)
    if verdict.forbidden:
        print(f"Forbidden rule={verdict.rule} witness={verdict.witness} ({verdict.detail})")
    else:
        print("NotExcluded")
    return EXIT_OK


_SWEEP_COLUMNS = ["type", "g", "alpha", "c", "hbar", "x_hat", "y", "abs_z",
                  "res_xy", "res_yz", "res_zx", "success", "reason"]


def _sweep_rows(args):
    axis_flag, axis_name = {
        "typeI": ("hbar", "--hbar"),
        "typeII": ("x_hat", "--x-hat"),
        "3d": ("x_hat", "--x-hat"),
        "1d": ("x", "--x"),
    }[args.type]
    spec = getattr(args, axis_flag)
    if spec is None:
        if args.type == "3d":
            values = [None]  # default branch point g-1
        else:
            raise SchemaError(f"sweep {args.type} requires {axis_name}")
    else:
        values = _values_list(spec, args.grid)
    if args.type == "1d" and args.hbar is None:
        raise SchemaError("sweep 1d requires --hbar with a single value")

    for value in values:
        row = {col: "" for col in _SWEEP_COLUMNS}
        row.update(type=args.type, g=args.g, alpha=repr(args.alpha), c=repr(args.c))
        if value is not None:
            row[axis_flag if axis_flag != "x" else "x_hat"] = repr(value)
        try:
            if args.type == "typeI":
                params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=value)
                rep = reps.construct_type_I(params)
                row.update(x_hat=repr(rep.meta.x_hat), y="0.0",
                           abs_z=repr(float(abs(rep.Y[0, 1]))))
            elif args.type == "typeII":
                hbar, rep = reps.construct_type_II(args.g, args.alpha, args.c, value)
                row.update(hbar=repr(hbar), y=repr(float(rep.Y[0, 0].real)),
                           abs_z=repr(float(abs(rep.Y[0, 1]))))
            elif args.type == "3d":
                hbar, rep = reps.construct_3d_string(args.g, args.alpha, args.c,
                                                     x_hat=value)
                row.update(hbar=repr(hbar), x_hat=repr(rep.meta.x_hat),
                           abs_z=repr(float(abs(rep.Y[0, 1]))))
            else:
                hbar = _values_list(args.hbar, None)
                if len(hbar) != 1:
                    raise SchemaError("sweep 1d requires --hbar with a single value")
                params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=hbar[0])
                rep = reps.one_dim_rep(params, value)
                row.update(hbar=repr(hbar[0]), y=repr(float(rep.Y[0, 0].real)))
            rel = rep.residuals().relative
            row.update(res_xy=f"{rel[0]:.3e}", res_yz=f"{rel[1]:.3e}",
                       res_zx=f"{rel[2]:.3e}", success="true")
        except (ConstraintError, ExistenceError, ParameterRangeError) as exc:
            reason = exc.inequality if isinstance(exc, ConstraintError) else str(exc)
            row.update(success="false", reason=reason)
        yield row


def cmd_sweep(args) -> int:
    rows = list(_sweep_rows(args))
    out = open(args.out, "w", newline="") if args.out is not None else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=_SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out is not None:
            out.close()
    return EXIT_OK


def _parse_bounds(spec: str) -> levelset.Bounds:
    parts = spec.split(",")
    if len(parts) != 3:
        raise SchemaError("bounds must be 'x0:x1,y0:y1,z0:z1'")
    out = []
    for part in parts:
        lo_s, sep, hi_s = part.partition(":")
        if not sep:
            raise SchemaError("bounds must be 'x0:x1,y0:y1,z0:z1'")
        try:
            lo, hi = float(lo_s), float(hi_s)
        except ValueError as exc:
            raise SchemaError(f"bad bounds interval {part!r}") from exc
        if not lo < hi:
            raise SchemaError(f"empty bounds interval {part!r}")
        out.append((lo, hi))
    return tuple(out)


def cmd_levelset(args) -> int:
    if args.resolution < 8:
        raise SchemaError(f"resolution must be >= 8, got {args.resolution}")
    params = SurfaceParams(g=args.g, alpha=args.alpha, c=args.c, hbar=args.hbar)
    bounds = _parse_bounds(args.bounds) if args.bounds else None
    verts, faces, report = levelset.levelset_mesh(params, args.resolution, bounds)
    fmt = args.format or ("csv" if args.out.suffix.lower() == ".csv" else "obj")
    with open(args.out, "w") as fp:
        if fmt == "obj":
            levelset.write_obj(fp, verts, faces)
        else:
            levelset.write_csv(fp, verts, faces)
    chi = report.euler_characteristic
    genus = report.genus
    print(f"vertices = {report.n_vertices}")
    print(f"edges = {report.n_edges}")
    print(f"faces = {report.n_faces}")
    print(f"euler_characteristic = {chi}")
    print(f"genus = {genus if genus != int(genus) else int(genus)}")
    return EXIT_OK


_DISPATCH = {
    "validate": cmd_validate,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "graph-check": cmd_graph_check,
    "sweep": cmd_sweep,
    "levelset": cmd_levelset,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (SchemaError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM_RANGE
    except ConstraintError as exc:
        print(f"error: constraint violated: {exc.inequality}: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except ExistenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except EmptyIsosurfaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_GEOMETRY
    except GenusRepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
