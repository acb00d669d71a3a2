"""Command-line interface: JSON instances in, tables/records/reports out.

Subcommands: info, sigmas, bidegrees, generators, slice, scroll, oracle,
check, random.  Instance files are JSON:

    {"field": {"type": "prime", "p": 32003},
     "n": 3,
     "col_degrees": [2, 7],
     "phi_rows": [["x0^2", "x1^7"], ["x0*x1", "0"], ["x1^2", "x0^7"]]}

The environment variable REES_FIELD_P overrides the prime for prime-type
fields (and for `random`).  `--json` switches every subcommand to
machine-readable output.  Exit codes: 0 success, 1 validation error,
2 internal failure.
"""
from __future__ import annotations

import argparse
import json
import os
import random as _random
import sys

from . import combinat, generators, gradedlin, oracle, syzygy, tower
from .field import DEFAULT_PRIME, PrimeField, field_from_json, field_to_json
from .ring import parse_poly, ring_R


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 (validation) on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="rees", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true",
                   help="machine-readable JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_cmd(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("file", help="instance JSON file")
        return c

    instance_cmd("info", "column degrees, signed minors, height check")

    c = instance_cmd("sigmas", "embedding twists at one level")
    c.add_argument("-m", type=int, required=True, help="level (1..n-1)")

    instance_cmd("bidegrees", "minimal-generator bidegree table (two twists)")

    c = instance_cmd("generators", "certified generator records")
    c.add_argument("-m", type=int, default=None,
                   help="level (default: every level up to n-2)")

    c = instance_cmd("slice", "generators of one x-degree slice (n = 3)")
    c.add_argument("--xdeg", type=int, required=True, help="x-degree i")
    c.add_argument("--trim", action="store_true",
                   help="greedily remove redundant records")

    c = instance_cmd("scroll", "scroll matrix and its 2x2 minors at a level")
    c.add_argument("-m", type=int, required=True, help="level (1..n-1)")

    c = instance_cmd("oracle", "Groebner-side report on the saturated ideal")
    c.add_argument("--max-x", type=int, required=True)
    c.add_argument("--max-t", type=int, required=True)
    c.add_argument("--what", choices=("hilbert", "mingens", "membership"),
                   default="mingens")

    c = instance_cmd("check", "cross-validation report")
    c.add_argument("--seeds", type=int, default=0,
                   help="also check this many random same-shape instances")

    c = sub.add_parser("random", help="generate a random height-two instance")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--degrees", required=True,
                   help="comma-separated nondecreasing column degrees")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--out", default=None, help="write instance here")
    return p


# -- instance I/O ------------------------------------------------------------

def _field_with_override(descr: dict | None):
    env = os.environ.get("REES_FIELD_P")
    if descr is None:
        descr = {"type": "prime", "p": DEFAULT_PRIME}
    field = field_from_json(descr)
    if env is not None and getattr(field, "modulus", None) is not None:
        field = PrimeField(int(env))
    return field


def load_instance(path: str) -> tower.PresentationInput:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError("instance file must be a JSON object")
    for k in ("n", "col_degrees", "phi_rows"):
        if k not in raw:
            raise ValueError(f"instance file is missing {k!r}")
    field = _field_with_override(raw.get("field"))
    n = raw["n"]
    rows = raw["phi_rows"]
    if len(rows) != n:
        raise ValueError("phi_rows must have exactly n rows")
    base = ring_R(field)
    parsed = tuple(tuple(parse_poly(e, base) for e in row) for row in rows)
    return tower.load_presentation(field, raw["col_degrees"], parsed)


def instance_to_json(inp: tower.PresentationInput) -> dict:
    return {
        "field": field_to_json(inp.field),
        "n": inp.n,
        "col_degrees": list(inp.col_degrees),
        "phi_rows": [[str(e) for e in row] for row in inp.phi.rows],
    }


def random_instance(n: int, col_degrees, seed: int, field) -> tower.PresentationInput:
    """Rejection-sample a height-two instance; deterministic per seed."""
    if n < 3:
        raise ValueError("need n >= 3")
    col_degrees = tuple(int(d) for d in col_degrees)
    if len(col_degrees) != n - 1:
        raise ValueError("need exactly n-1 column degrees")
    if any(d < 1 for d in col_degrees):
        raise ValueError("column degrees must be >= 1")
    if any(col_degrees[i] > col_degrees[i + 1] for i in range(n - 2)):
        raise ValueError("column degrees must be nondecreasing")
    p = field.modulus
    if p is None:
        raise ValueError("random instances are generated over a prime field")
    rng = _random.Random(seed)
    base = ring_R(field)
    for _ in range(1000):
        rows = []
        for _i in range(n):
            row = []
            for d in col_degrees:
                terms = {}
                for a in range(d + 1):
                    c = rng.randrange(p)
                    if c:
                        terms[(d - a, a)] = c
                row.append(base.from_terms(terms))
            rows.append(tuple(row))
        try:
            return tower.load_presentation(field, col_degrees, tuple(rows))
        except ValueError:
            continue
    raise ValueError("no height-two instance found in 1000 draws "
                     "(degenerate parameters)")


# -- output helpers ----------------------------------------------------------

def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _record_lines(records) -> list:
    out = []
    for rec in records:
        alpha = "" if rec.alpha is None else f" alpha={tuple(rec.alpha)}"
        flag = "ok" if rec.certificate_ok else "FAILED"
        out.append(f"  ({rec.bidegree[0]},{rec.bidegree[1]}) "
                   f"[{rec.provenance}]{alpha} certificate={flag}")
        out.append(f"    {rec.poly}")
    return out


# -- subcommands -------------------------------------------------------------

def _cmd_info(args) -> int:
    inp = load_instance(args.file)
    lines = [f"n = {inp.n}, column degrees = {list(inp.col_degrees)}",
             f"field: {field_to_json(inp.field)}",
             "signed maximal minors (row-deletion order):"]
    lines += [f"  f{i + 1} = {f}" for i, f in enumerate(inp.minors)]
    lines.append("height check: ok (unit gcd)")
    _emit(args, "\n".join(lines), {
        "n": inp.n,
        "col_degrees": list(inp.col_degrees),
        "field": field_to_json(inp.field),
        "minors": [str(f) for f in inp.minors],
        "height_two": True,
    })
    return 0


def _cmd_sigmas(args) -> int:
    inp = load_instance(args.file)
    inv = syzygy.sigma_invariants(inp.phi, args.m)
    text = (f"m = {args.m}: sigma = {list(inv.sigma)}, "
            f"r = {inv.r} positive, s = {inv.s}")
    _emit(args, text, {"m": args.m, "sigma": list(inv.sigma),
                       "r": inv.r, "s": inv.s})
    return 0


def _cmd_bidegrees(args) -> int:
    inp = load_instance(args.file)
    inv = syzygy.sigma_invariants(inp.phi, inp.n - 2)
    table = combinat.bidegree_table(inp.col_degrees, inv.sigma)
    _emit(args, table.render(), {
        "sigma": list(inv.sigma),
        "x_separator": table.x_separator,
        "marks": [[x, t, c] for x, t, c in table.marks()],
    })
    return 0


def _cmd_generators(args) -> int:
    inp = load_instance(args.file)
    if args.m is not None:
        levels = [args.m]
    else:
        levels = list(range(1, inp.n - 1))
    text_lines = []
    payload = {"levels": []}
    for m in levels:
        records = generators.tower_generators(inp, m)
        text_lines.append(f"level m = {m}: {len(records)} records")
        text_lines += _record_lines(records)
        payload["levels"].append({
            "m": m, "records": [rec.as_dict() for rec in records]})
    _emit(args, "\n".join(text_lines), payload)
    return 0


def _cmd_slice(args) -> int:
    inp = load_instance(args.file)
    records = generators.slice_generators(inp, args.xdeg)
    total = len(records)
    if args.trim:
        records = generators.trim_slice(records, args.xdeg)
    text_lines = [f"x-degree {args.xdeg}: {len(records)} records"
                  + (f" (trimmed from {total})" if args.trim else "")]
    text_lines += _record_lines(records)
    _emit(args, "\n".join(text_lines), {
        "xdeg": args.xdeg,
        "trimmed": bool(args.trim),
        "records": [rec.as_dict() for rec in records],
    })
    return 0


def _cmd_scroll(args) -> int:
    inp = load_instance(args.file)
    level = tower.build_level(inp, args.m)
    pres = syzygy.scroll_matrix(level.sigma, inp.field)
    top, bottom = pres.gamma
    text_lines = [
        f"m = {args.m}: sigma = {list(level.sigma.sigma)}",
        "coordinates: " + " ".join(pres.coord_names),
        "matrix:",
        "  [ " + "  ".join(str(e) for e in top) + " ]",
        "  [ " + "  ".join(str(e) for e in bottom) + " ]",
        f"{len(pres.minors)} minors:",
    ]
    text_lines += [f"  {mnr}" for mnr in pres.minors]
    _emit(args, "\n".join(text_lines), {
        "m": args.m,
        "sigma": list(level.sigma.sigma),
        "coordinates": list(pres.coord_names),
        "gamma": [[str(e) for e in top], [str(e) for e in bottom]],
        "minors": [str(mnr) for mnr in pres.minors],
    })
    return 0


def _cmd_oracle(args) -> int:
    inp = load_instance(args.file)
    if args.max_x < 0 or args.max_t < 0:
        raise ValueError("window bounds must be nonnegative")
    K = oracle.saturated_ideal(inp)
    window = ((0, args.max_x), (0, args.max_t))
    if args.what == "hilbert":
        dims = oracle.bigraded_hilbert(K, window)
        lines = [f"ideal piece dimensions (x up to {args.max_x}, "
                 f"T up to {args.max_t}):"]
        for (i, j), dim in sorted(dims.items()):
            if dim:
                lines.append(f"  ({i},{j}): {dim}")
        _emit(args, "\n".join(lines),
              {"what": "hilbert",
               "dims": [[i, j, dim] for (i, j), dim in sorted(dims.items())]})
    elif args.what == "mingens":
        table = oracle.minimal_generator_bidegrees(
            K, window, x_separator=inp.col_degrees[-2] - 1
            if inp.n >= 3 else None)
        _emit(args, table.render(),
              {"what": "mingens",
               "x_separator": table.x_separator,
               "marks": [[x, t, c] for x, t, c in table.marks()]})
    else:
        rows = []
        for m in range(1, inp.n - 1):
            for rec in generators.tower_generators(inp, m):
                nf = oracle.normal_form(rec.poly, K)
                rows.append((m, rec, nf.is_zero()))
        lines = [f"membership of {len(rows)} records in the saturated ideal:"]
        for m, rec, ok in rows:
            alpha = "" if rec.alpha is None else f" alpha={tuple(rec.alpha)}"
            lines.append(f"  m={m} ({rec.bidegree[0]},{rec.bidegree[1]}) "
                         f"[{rec.provenance}]{alpha}: "
                         + ("member" if ok else "NOT A MEMBER"))
        _emit(args, "\n".join(lines),
              {"what": "membership",
               "records": [{"m": m, **rec.as_dict(),
                            "normal_form_zero": ok}
                           for m, rec, ok in rows]})
        if not all(ok for _, _, ok in rows):
            return 2
    return 0


def _check_one(inp: tower.PresentationInput) -> list:
    """Run every cross-check on one instance; list of (label, ok, note)."""
    results = []
    n, d = inp.n, inp.col_degrees

    ok = True
    for m in range(1, n):
        inv = syzygy.sigma_invariants(inp.phi, m)
        ok = ok and sum(inv.sigma) == sum(d[:m]) and inv.s == n - m
    results.append(("twist bookkeeping (sum and count)", ok, ""))

    levels = {m: tower.build_level(inp, m) for m in range(1, n)}
    ok = True
    for m, level in levels.items():
        for i, si in enumerate(level.sigma.sigma):
            deg = d[m - 1] - 1 + si
            mult = []
            for pj in level.mult_scalars[i]:
                if pj.is_zero():
                    continue
                shift = deg - pj.xdeg()
                if shift < 0:
                    continue
                for mono in gradedlin.piece_basis(inp.base, shift):
                    mult.append(mono * pj)
            ok = ok and (gradedlin.span_dim(mult, inp.base, deg)
                         == gradedlin.piece_dim(inp.base, deg))
    results.append(("multiplication scalars reach every form "
                    "(surjectivity degree)", ok, ""))

    all_records = []
    ok = True
    for m in range(1, n - 1):
        recs = generators.tower_generators(inp, m)
        all_records.extend(recs)
        ok = ok and all(r.certificate_ok for r in recs)
    results.append(("substitution certificates", ok, ""))

    ok = True
    for m, level in levels.items():
        lo = max(d[m - 1] - 1, 0)
        for i, j, got, want in tower.check_truncation_equality(
                level, range(lo, lo + 2), 2):
            ok = ok and got == want
    results.append(("truncation equality window", ok, ""))

    if n == 3:
        level = levels[1]
        d1 = d[0]
        H = tower.hull_quotient_hilbert(level)
        ok = all(H(i) == d1 - i - 1 for i in range(-1, d1))
        results.append(("hull quotient Hilbert values", ok, ""))
        scroll = level.scroll
        ok = gradedlin.piece_dim(scroll, -1, 2) == 3 * d1
        prods = []
        S = inp.sring
        for k in range(n):
            img = level.subst(S.var(f"T{k + 1}"))
            for nu in gradedlin.piece_basis(scroll, -1, 1):
                prods.append(img * nu)
        ok = ok and gradedlin.span_dim(prods, scroll, -1, 2) == 3 * d1
        results.append(("linear forms fill the (-1,2) piece", ok, ""))
        ok = True
        for i in range(-1, d1):
            for j in range(5):
                want = (i + 1) * (j + 1) + d1 * (j * (j + 1) // 2)
                ok = ok and gradedlin.piece_dim(scroll, i, j) == want
        results.append(("free hull Hilbert function", ok, ""))

    K = oracle.saturated_ideal(inp)
    ok = all(oracle.normal_form(r.poly, K).is_zero() for r in all_records)
    results.append(("oracle normal forms of all records", ok, ""))

    ok = all(tower.evaluation_membership(inp, r.poly) for r in all_records)
    results.append(("evaluation membership of all records", ok, ""))
    return results


def _cmd_check(args) -> int:
    inp = load_instance(args.file)
    reports = [("instance", _check_one(inp))]
    for seed in range(args.seeds):
        twin = random_instance(inp.n, inp.col_degrees, seed, inp.field)
        reports.append((f"seed {seed}", _check_one(twin)))
    lines = []
    payload = []
    grand = True
    for name, results in reports:
        lines.append(f"{name}:")
        for label, ok, note in results:
            grand = grand and ok
            mark = "PASS" if ok else "FAIL"
            suffix = f" ({note})" if note else ""
            lines.append(f"  {mark}  {label}{suffix}")
        payload.append({"name": name,
                        "checks": [{"label": label, "ok": ok, "note": note}
                                   for label, ok, note in results]})
    lines.append("all checks passed" if grand else "CHECKS FAILED")
    _emit(args, "\n".join(lines), {"reports": payload, "ok": grand})
    return 0 if grand else 2


def _cmd_random(args) -> int:
    degrees = [int(tok) for tok in args.degrees.split(",") if tok != ""]
    field = _field_with_override(None)
    inp = random_instance(args.n, degrees, args.seed, field)
    text = json.dumps(instance_to_json(inp), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        if not args.json:
            print(f"wrote {args.out}")
        else:
            print(json.dumps({"written": args.out}, indent=2, sort_keys=True))
    else:
        print(text)
    return 0


_HANDLERS = {
    "info": _cmd_info,
    "sigmas": _cmd_sigmas,
    "bidegrees": _cmd_bidegrees,
    "generators": _cmd_generators,
    "slice": _cmd_slice,
    "scroll": _cmd_scroll,
    "oracle": _cmd_oracle,
    "check": _cmd_check,
    "random": _cmd_random,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - map anything else to exit 2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
