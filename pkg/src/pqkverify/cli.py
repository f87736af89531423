"""Command-line interface: ``pqkverify <command> ...``.

Exit codes: 0 success (or every reproduction check passing), 1 a failing
check or an I/O error, 2 a usage error.  Rationals print as num/den.  When
PQKVERIFY_OUTPUT_DIR is set, ``reproduce`` also writes its report there.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .exact.affine import ParamAffine, rat_str

OUTPUT_ENV = "PQKVERIFY_OUTPUT_DIR"


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        from .reproduce import serialize

        print(json.dumps(serialize(obj), indent=2))
    else:
        print(text if text is not None else obj)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _affine_dict(form: ParamAffine) -> dict[str, str]:
    return form.as_dict()


# -- commands -------------------------------------------------------------------


def cmd_indices(a) -> int:
    from .index import index_form

    if a.p < 0 or a.q < 0 or a.n < 1:
        raise UsageError("need n >= 1 and p, q >= 0")
    form = index_form(a.p, a.q, a.n)
    coeffs = {form.poly.ring.monomial_str(m): c for m, c in sorted(form.poly.items())}
    _emit(coeffs, a.json, str(form.poly))
    return 0


def _assumptions(items) -> dict[str, str]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"assumption must look like name=value: {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_solve(a) -> int:
    from .index import solve_fundamental

    assume = _assumptions(a.assume)
    unknown = set(assume) - {"b2"}
    if unknown or assume.get("b2", "0") != "0":
        raise UsageError("only the assumption b2=0 is supported")
    sol = solve_fundamental(a.n, "b2" in assume)
    body = {
        "values": {k: v.as_dict() for k, v in sol.values.items()},
        "free": list(sol.free),
        "conditions": [c.as_dict() for c in sol.conditions],
    }
    lines = [f"{k} = {v}" for k, v in sol.values.items()]
    lines += [f"free: {', '.join(sol.free) or 'none'}"] + [f"condition: {c} = 0" for c in sol.conditions]
    _emit(body, a.json, "\n".join(lines))
    return 0


def cmd_hilbert(a) -> int:
    from .hilbert import solve_f_values

    data = solve_f_values(a.n)
    fix = {} if a.ahat is None else {"A": ParamAffine(a.ahat)}
    vals = {q: v.substitute(fix) for q, v in data.values.items()}
    _emit({q: v.as_dict() for q, v in vals.items()}, a.json, "\n".join(f"f({q}) = {v}" for q, v in vals.items()))
    return 0


def cmd_bounds(a) -> int:
    from .hilbert import ahat_bounds

    b = ahat_bounds(a.d)
    lo, hi = b.decimal(a.digits)
    body = {"lower": b.lower, "upper": b.upper, "lower_decimal": lo, "upper_decimal": hi, "combination": b.combination.as_dict()}
    _emit(body, a.json, f"{rat_str(b.lower)} < A-hat < {rat_str(b.upper)}\n{lo} < A-hat < {hi}\nv-free combination: {b.combination} > 0")
    return 0


def cmd_pairs(a) -> int:
    from .hilbert import admissible_pairs, congruences

    grouped: dict[int, list[int]] = {}
    for d, v in admissible_pairs(a.ahat):
        grouped.setdefault(d, []).append(v)
    cong = congruences(a.ahat)
    text = [f"conditions: {' and '.join(map(str, cong.conditions))}"]
    text += [f"d = {d}: v in {vs}" for d, vs in grouped.items()]
    _emit({"conditions": [str(c) for c in cong.conditions], "pairs": grouped}, a.json, "\n".join(text))
    return 0


def _table(headers: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines)


def cmd_groups(a) -> int:
    from . import lie

    fmt = a.format
    if a.action == "enumerate":
        mod = None if a.mod is None else tuple(a.mod)
        found: dict[int, list[str]] = {}
        for g in lie.enumerate_groups(a.max_rank, a.dim_lo, a.dim_hi, mod, not a.no_torus):
            found.setdefault(g.dim, []).append(g.name)
        rows = [[d, ", ".join(names)] for d, names in sorted(found.items())]
        return _show(found, fmt, _table(["dim", "groups"], rows))
    if a.action == "mod":
        res = lie.dims_mod(a.m, a.max_n)
        return _show(res, fmt, _table(["type", f"dim mod {a.m}"], sorted(res.items())))
    if a.action == "maxdim":
        out, rows = {}, []
        for r in range(1, a.max_rank + 1):
            d, groups = lie.max_dim_per_rank(r)
            out[r] = {"dim": d, "groups": [g.name for g in groups]}
            rows.append([r, d, ", ".join(g.name for g in groups)])
        return _show(out, fmt, _table(["rank", "max dim", "groups"], rows))
    if a.action == "threshold":
        out, rows = {}, []
        for n in range(a.n_lo, a.n_hi + 1):
            t = lie.threshold_detail(n)
            out[n] = {"value": t.value, "rule": t.rule, "groups": [g.name for g in t.groups]}
            rows.append([n, t.value, ", ".join(g.name for g in t.groups) or t.rule])
        return _show(out, fmt, _table(["n", "threshold", "realised by"], rows))
    if a.action == "survivors":
        res = [g.name for g in lie.survivors_above_threshold(a.n)]
        return _show(res, fmt, "\n".join(res))
    if a.action == "identify":
        m = lie.identify_wolf(a.n, a.dim)
        body = {"space": m.space, "threshold": m.threshold, "above_threshold": m.above_threshold, "identified": m.identified}
        return _show(body, fmt, f"{m.space or 'no Wolf space'} (threshold {m.threshold}, identified: {m.identified})")
    if a.action == "obstruct":
        v = lie.embedding_obstructed(a.g, a.h, a.depth)
        body = {"status": v.status, "chain": [str(x) for x in v.chain], "missing": list(v.missing)}
        return _show(body, fmt, str(v))
    raise UsageError(f"unknown groups action {a.action}")


def _show(obj, fmt: str, md: str) -> int:
    if fmt == "json":
        _emit(obj, True)
    else:
        print(md)
    return 0


def cmd_betti(a) -> int:
    from .betti import min_euler, relation_form

    if a.action == "relation":
        form = relation_form(a.n, a.b2_zero)
        _emit(form.as_dict(), a.json, f"{form} = 0")
        return 0
    chi, bv = min_euler(a.b4_min, a.K)
    _emit({"chi": chi, "betti": list(bv.even)}, a.json, f"chi = {chi} at even Betti numbers {list(bv.even)}")
    return 0


def cmd_dim16(a) -> int:
    from .special import dim16_search

    rep = dim16_search()
    body = {
        "hits": [[x, d] for x, d in rep.hits],
        "branches": [{"betti": list(b.betti), "rejected": b.rejected, "reason": b.reason} for b in rep.branches],
        "surviving": [list(t) for t in rep.surviving],
    }
    lines = [f"integral hits (x, d): {[(x, str(d)) for x, d in rep.hits]}"]
    lines += [f"branch {b.betti}: {'rejected, ' + b.reason if b.rejected else 'survives'}" for b in rep.branches]
    lines.append(f"surviving (d, v, b4, b6, b8): {[tuple(int(x) for x in t) for t in rep.surviving]}")
    _emit(body, a.json, "\n".join(lines))
    return 0


def cmd_dim20(a) -> int:
    from .special import dim20_b4_1

    rep = dim20_b4_1(a.n)
    b = rep.unique
    body = {"unique": None if b is None else b.values, "branches": len(rep.branches)}
    _emit(body, a.json, "no unique integral branch" if b is None else ", ".join(f"{k} = {v}" for k, v in b.values.items()))
    return 0


def cmd_dim24(a) -> int:
    from .special import dim24_b4_1

    rep = dim24_b4_1(sweep=not a.no_sweep)
    body = {
        "rational_d": rep.rational_d(),
        "septic": str(rep.septic_printed_variable),
        "roots": [r.value for r in rep.roots],
        "d_coeffs": rep.d_coeffs,
        "integral_conjugates": rep.integral_conjugates(),
    }
    lines = [f"rational branches: d in {[str(d) for d in rep.rational_d()]}",
             f"septic in y = 1 - x: {rep.septic_printed_variable}",
             "roots: " + ", ".join(f"{r.value:.10g}" for r in rep.roots),
             f"integral conjugates of d: {rep.integral_conjugates() or 'none'}"]
    if rep.sweep is not None:
        s = rep.sweep
        body["sweep"] = {"combinations": s.combinations, "min_distance": s.min_distance, "argmin": list(s.argmin)}
        lines.append(f"sweep: {s.combinations} combinations, min distance {s.min_distance:.3e} at {s.argmin}")
    _emit(body, a.json, "\n".join(lines))
    return 0


def cmd_reproduce(a) -> int:
    from .reproduce import reproduce_all

    report = reproduce_all(a.only)
    if a.only and not report.records:
        raise UsageError(f"no check matches {a.only}")
    render = {"json": report.to_json, "md": report.to_markdown, "csv": report.to_csv}[a.format]
    text = render(a.timings)
    sys.stdout.write(text)
    out_dir = os.environ.get(OUTPUT_ENV)
    if out_dir:
        try:
            path = Path(out_dir)
            path.mkdir(parents=True, exist_ok=True)
            (path / f"report.{a.format}").write_text(text)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 1
    return 0 if report.ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pqkverify", description="Exact characteristic-number computations for positive quaternion Kaehler manifolds.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    def json_flag(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = add("indices", cmd_indices, "index i^{p,q} as a linear form in characteristic numbers")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    json_flag(sp)

    sp = add("solve", cmd_solve, "solve the fundamental index system")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--assume", action="append", metavar="b2=0")
    json_flag(sp)

    sp = add("hilbert", cmd_hilbert, "values of the Hilbert polynomial")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--ahat", type=_rational, default=None, metavar="R")
    json_flag(sp)

    sp = add("bounds", cmd_bounds, "bounds on the A-hat genus")
    sp.add_argument("--d", type=int, default=0)
    sp.add_argument("--digits", type=int, default=10)
    json_flag(sp)

    sp = add("pairs", cmd_pairs, "admissible (d, v) pairs")
    sp.add_argument("--ahat", type=_rational, default=Fraction(0), metavar="R")
    json_flag(sp)

    sp = add("groups", cmd_groups, "compact Lie group catalog and embedding checks")
    gs = sp.add_subparsers(dest="action", required=True)
    for name in ("enumerate", "mod", "maxdim", "threshold", "survivors", "identify", "obstruct"):
        g = gs.add_parser(name)
        g.add_argument("--format", choices=("text", "json", "md"), default="text")
        if name == "enumerate":
            g.add_argument("--max-rank", type=int, default=5)
            g.add_argument("--dim-lo", type=int, default=15)
            g.add_argument("--dim-hi", type=int, default=36)
            g.add_argument("--mod", type=int, nargs=2, metavar=("R", "M"), default=None)
            g.add_argument("--no-torus", action="store_true")
        elif name == "mod":
            g.add_argument("--m", type=int, default=7)
            g.add_argument("--max-n", type=int, default=5)
        elif name == "maxdim":
            g.add_argument("--max-rank", type=int, default=12)
        elif name == "threshold":
            g.add_argument("--n-lo", type=int, default=3)
            g.add_argument("--n-hi", type=int, default=29)
        elif name == "survivors":
            g.add_argument("--n", type=int, required=True)
        elif name == "identify":
            g.add_argument("--n", type=int, required=True)
            g.add_argument("--dim", type=int, required=True)
        else:
            g.add_argument("g")
            g.add_argument("h")
            g.add_argument("--depth", type=int, default=10)

    sp = add("betti", cmd_betti, "Betti number relation and Euler characteristic search")
    bs = sp.add_subparsers(dest="action", required=True)
    r = bs.add_parser("relation")
    r.add_argument("--n", type=int, default=5)
    r.add_argument("--b2-zero", action="store_true")
    json_flag(r)
    m = bs.add_parser("mineuler")
    m.add_argument("--b4-min", type=int, required=True)
    m.add_argument("--K", type=int, default=50)
    json_flag(m)

    sp = add("dim16", cmd_dim16, "c2 = x u search in dimension 16")
    json_flag(sp)
    sp = add("dim20", cmd_dim20, "b4 = 1 in dimension 20 (n = 4 gives dimension 16)")
    sp.add_argument("--n", type=int, default=5)
    json_flag(sp)
    sp = add("dim24", cmd_dim24, "b4 = 1 in dimension 24")
    sp.add_argument("--no-sweep", action="store_true")
    json_flag(sp)

    sp = add("reproduce", cmd_reproduce, "recompute every printed reference value")
    sp.add_argument("--only", action="append", metavar="ID", help="check id or id prefix (repeatable)")
    sp.add_argument("--format", choices=("json", "md", "csv"), default="json")
    sp.add_argument("--timings", action="store_true", help="include elapsed seconds (not deterministic)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
