"""Command-line interface.

Exit codes: 0 success, 1 verification failure or claim mismatch, 2 usage or
parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bounds, coverage, formats, ilp_export, solver, verifier
from .board import BoardSpec
from .errors import InvalidArgument, ParseError, QueendomError, ResourceLimit, UnsupportedBoard
from .known import KNOWN

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(QueendomError):
    pass


def _emit(args, human: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _limits(args) -> solver.Limits:
    return solver.Limits(time=args.time_limit, threads=args.threads)


def _parse_cell(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot read cell {text!r}; expected e.g. 0,0,2") from None


def _parse_cells(text: str) -> list[tuple[int, ...]]:
    return [_parse_cell(t) for t in text.replace(";", " ").split()]


def _fmt_cells(cells) -> str:
    return ", ".join("(" + ",".join(str(t) for t in c) + ")" for c in cells)


def cmd_bounds(args) -> int:
    rep = bounds.bounds_report(args.n, _limits(args), cache_path=args.cache)
    n = args.n
    lines = [f"volume bound      ceil(n^3/(13n-12)) = {rep.volume_lb}"]
    if rep.projection_lb is not None:
        lines.append(f"projection bound  gamma(Q2_{n}) = {rep.projection_lb} ({rep.gamma2_source})")
        lines.append(f"lifting bound     n * gamma(Q2_{n}) = {rep.lifting_ub}")
        lines.append(f"{rep.best_lb} <= gamma(Q3_{n}) <= {rep.best_ub}")
    else:
        lines.append("2D value unavailable under the given limits; volume bound only")
        lines.append(f"{rep.best_lb} <= gamma(Q3_{n})")
    lines.append(f"asymptotic constants: lower 1/13 ~ {bounds.LOWER_CONSTANT:.3f}, "
                 f"upper 69/133 ~ {bounds.UPPER_CONSTANT:.3f} (times n^2)")
    _emit(args, "\n".join(lines), {
        "n": rep.n, "volume_lb": rep.volume_lb, "projection_lb": rep.projection_lb,
        "lifting_ub": rep.lifting_ub, "best_lb": rep.best_lb, "best_ub": rep.best_ub,
        "gamma2_source": rep.gamma2_source,
    })
    return EXIT_OK


def cmd_coverage(args) -> int:
    spec = BoardSpec(3, args.n)
    if args.cell is not None:
        q = _parse_cell(args.cell)
        rep = coverage.kappa_exact(spec, q)
        form = coverage.kappa_formula(spec, q)
        kind = "upper bound" if form.is_bound else "closed form"
        lines = [f"queen {_fmt_cells([q])}: {rep.ptype.value}",
                 f"kappa = {rep.kappa}",
                 f"{kind}: {form.value}"]
        if form.offsets is not None:
            o = form.offsets
            lines.append(f"face offsets a={o.a} b={o.b} c={o.c} d={o.d} M={o.M} f={o.f}")
        lines += [f"  {u}: {k}" for u, k in rep.per_direction.items()]
        _emit(args, "\n".join(lines), {
            "queen": list(q), "ptype": rep.ptype.value, "kappa": rep.kappa,
            "formula": form.value, "formula_is_bound": form.is_bound,
            "per_direction": [[list(u), k] for u, k in rep.per_direction.items()],
        })
        return EXIT_OK

    s = coverage.strata_summary(spec)
    lines = [f"n = {s.n}, m = {s.m}, |core| = {s.m ** 3}"]
    for t in coverage.PositionType:
        cells = s.argmax[t]
        lines.append(f"{t.value:<9} max kappa = {s.maxima[t]:>4}  "
                     f"({len(cells)} {'cell' if len(cells) == 1 else 'cells'}, e.g. {_fmt_cells(cells[:1])})")
    lines.append("cells covering the whole core: " + (_fmt_cells(s.full_core) or "none"))
    lines.append("separation " + ("holds" if s.separated else "FAILS") + ": "
                 + " / ".join(str(v) for v in s.chain))
    _emit(args, "\n".join(lines), {
        "n": s.n, "m": s.m,
        "maxima": {t.value: s.maxima[t] for t in coverage.PositionType},
        "argmax": {t.value: [list(c) for c in s.argmax[t]] for t in coverage.PositionType},
        "full_core": [list(c) for c in s.full_core],
        "chain": list(s.chain), "separated": s.separated,
    })
    return EXIT_OK if s.separated else EXIT_FAIL


def _solve(spec: BoardSpec, args) -> solver.SolveResult:
    if spec.dim == 3 and spec.n == 7:
        return solver.attempt_n7(_limits(args), use_symmetry=not args.no_symmetry)
    return solver.solve_exact(spec, _limits(args), use_symmetry=not args.no_symmetry)


def _result_payload(spec: BoardSpec, res: solver.SolveResult) -> dict:
    return {
        "dim": spec.dim, "n": spec.n, "status": res.status, "value": res.value,
        "lower_bound": res.lower_bound, "witness": [list(c) for c in res.witness],
        "nodes": res.nodes_explored,
    }


def cmd_solve(args) -> int:
    spec = BoardSpec(args.dim, args.n)
    res = _solve(spec, args)
    if res.status == solver.OPTIMAL:
        head = f"gamma(Q{spec.dim}_{spec.n}) = {res.value} (optimal)"
    else:
        head = f"{res.lower_bound} <= gamma(Q{spec.dim}_{spec.n}) <= {res.value} (limit reached)"
    lines = [head, f"witness: {_fmt_cells(res.witness)}",
             f"nodes: {res.nodes_explored}, time: {res.wall_time:.1f}s"]
    if res.certificate is not None and args.out:
        _write(args.out, formats.dump_certificate(res.certificate))
        lines.append(f"certificate written to {args.out}")
    if args.solution:
        _write(args.solution, formats.dump_solution(spec, res.witness, {"size": res.value}))
        lines.append(f"solution written to {args.solution}")
    _emit(args, "\n".join(lines), _result_payload(spec, res))
    return EXIT_OK if res.status == solver.OPTIMAL else EXIT_LIMIT


def cmd_verify(args) -> int:
    if args.file:
        text = Path(args.file).read_text()
        obj = formats._parse_json(text)
        if isinstance(obj, dict) and obj.get("format") == formats.CERTIFICATE_FORMAT:
            return _verify_certificate(args, formats.load_certificate(text))
        spec, cells, claims = formats.load_solution(text)
        if args.n is not None and args.n != spec.n:
            raise UsageError(f"file is for n={spec.n}, not n={args.n}")
    elif args.cells is not None:
        if args.n is None:
            raise UsageError("n is required with --cells")
        spec = BoardSpec(args.dim, args.n)
        cells, claims = [spec.check(c) for c in _parse_cells(args.cells)], {}
    else:
        raise UsageError("give --file or --cells")
    out = verifier.is_dominating(spec, cells)
    claim_ok = claims.get("size", len(set(cells))) == len(set(cells))
    if out.ok:
        human = f"ok: {len(set(cells))} queens dominate all {out.checked_cells} cells"
    else:
        human = f"FAIL: first undominated cell {_fmt_cells([out.first_uncovered])}"
    if not claim_ok:
        human += f"\nclaimed size {claims['size']} does not match {len(set(cells))} queens"
    _emit(args, human, {
        "ok": out.ok and claim_ok, "dominating": out.ok,
        "first_uncovered": list(out.first_uncovered) if out.first_uncovered else None,
        "checked_cells": out.checked_cells,
    })
    return EXIT_OK if out.ok and claim_ok else EXIT_FAIL


def _verify_certificate(args, cert) -> int:
    spec = BoardSpec(cert.dim, cert.n)
    ok = verifier.check_certificate(cert, spec)
    human = (f"certificate ok: gamma(Q{spec.dim}_{spec.n}) = {cert.k}" if ok
             else "certificate REJECTED")
    _emit(args, human, {"ok": ok, "n": cert.n, "k": cert.k})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certify(args) -> int:
    spec = BoardSpec(args.dim, args.n)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    use_symmetry = not args.no_symmetry
    dec = solver.certify_infeasible(spec, args.k - 1, _limits(args), use_symmetry)
    if dec.status == solver.LIMIT:
        print(f"limit reached after {len(dec.subproblems)} subproblems", file=sys.stderr)
        return EXIT_LIMIT
    if dec.status == solver.FEASIBLE:
        _emit(args, f"{args.k - 1} queens suffice: {_fmt_cells(dec.witness)}",
              {"ok": False, "witness": [list(c) for c in dec.witness]})
        return EXIT_FAIL
    found = solver.certify_infeasible(spec, args.k, _limits(args), use_symmetry)
    if found.status != solver.FEASIBLE:
        _emit(args, f"no dominating set of size {args.k} found ({found.status})",
              {"ok": False, "status": found.status})
        return EXIT_LIMIT if found.status == solver.LIMIT else EXIT_FAIL
    cert = solver.OptimalityCertificate(spec.n, args.k, sorted(found.witness), args.k - 1,
                                        dec.subproblems, dec.symmetry_used)
    text = formats.dump_certificate(cert)
    if args.out:
        _write(args.out, text)
        _emit(args, f"certificate for gamma = {args.k} written to {args.out}",
              formats.certificate_to_dict(cert))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export(args) -> int:
    spec = BoardSpec(args.dim, args.n)
    _write(args.out, ilp_export.export_lp(spec, symmetry=args.symmetry, budget=args.budget))
    return EXIT_OK


def cmd_import(args) -> int:
    spec = BoardSpec(args.dim, args.n)
    text = Path(args.file).read_text()
    if text.lstrip().startswith("{"):
        file_spec, cells, _ = formats.load_solution(text)
        if file_spec != spec:
            raise UsageError(f"file is for dim={file_spec.dim} n={file_spec.n}")
    else:
        cells = ilp_export.import_solution(spec, ilp_export.parse_assignment(text))
    out = verifier.is_dominating(spec, cells)
    _write(args.out, formats.dump_solution(spec, cells, {"size": len(cells)}))
    if args.out:
        print(f"{len(cells)} queens, dominating: {out.ok}")
    return EXIT_OK if out.ok else EXIT_FAIL


def cmd_table(args) -> int:
    rows, payload, all_ok = [], [], True
    for n in range(1, args.max_n + 1):
        spec = BoardSpec(3, n)
        res = _solve(spec, args)
        known = KNOWN.get(n)
        if res.status == solver.OPTIMAL:
            ok = (known is None or (known.exact and known.lower == res.value))
            ok = ok and verifier.check_certificate(res.certificate, spec)
            value, status = str(res.value), "Exact"
        else:
            # only consistency is checkable for an open row
            ok = known is not None and res.lower_bound <= known.upper and res.value >= known.lower
            ok = ok and verifier.is_dominating(spec, res.witness).ok
            value, status = f"{res.lower_bound}-{res.value}", "Open"
        all_ok &= ok
        mark = "ok" if ok else "MISMATCH"
        rows.append(f"{n:>2}  {value:>6}  {status:<5}  {mark:<8}  {_fmt_cells(res.witness)}")
        payload.append({"n": n, "status": res.status, "lower": res.lower_bound,
                        "upper": res.value, "matches_known": ok,
                        "witness": [list(c) for c in res.witness]})
    _emit(args, " n   gamma  stat.  check     example placement\n" + "\n".join(rows),
          {"rows": payload})
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, choices=(2, 3), default=3)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--out", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="queendom",
                                description="Domination numbers of 3D queen graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="volume/projection/lifting bounds")
    s.add_argument("n", type=int)
    s.add_argument("--cache", default=None, help="JSON cache of solved 2D values")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("coverage", parents=[common], help="core coverage by position type")
    s.add_argument("n", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--cell", default=None, help="x,y,z")
    g.add_argument("--strata", action="store_true")
    s.set_defaults(func=cmd_coverage)

    s = sub.add_parser("solve", parents=[common], help="exact solve with certificate")
    s.add_argument("n", type=int)
    s.add_argument("--no-symmetry", action="store_true")
    s.add_argument("--solution", default=None, help="write the witness as a solution file")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="check a placement or certificate")
    s.add_argument("n", type=int, nargs="?")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--file", default=None)
    g.add_argument("--cells", default=None, help='e.g. "1,0,3 1,1,0"')
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("certify", parents=[common], help="certify gamma = k")
    s.add_argument("n", type=int)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--no-symmetry", action="store_true")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("export-lp", parents=[common], help="write the ILP in LP format")
    s.add_argument("n", type=int)
    s.add_argument("--symmetry", action="store_true")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("import-solution", parents=[common],
                       help="read an external solver's assignment")
    s.add_argument("n", type=int)
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_import)

    s = sub.add_parser("table", parents=[common], help="recompute the known-values table")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--no-symmetry", action="store_true")
    s.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, UsageError, InvalidArgument, UnsupportedBoard, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
