"""Command-line front end.

Every command prints one report (JSON, CSV or text) to stdout that embeds the
full run configuration.  Exit codes: 0 success, 1 a verification failed,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

SCHEMA = 1


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


def max_deg() -> int:
    return _env_int("FMZV_MAX_DEG", 4)


def max_n() -> int:
    return _env_int("FMZV_MAX_N", 64)


@dataclass
class RunConfig:
    mode: str
    command: str
    params: dict = field(default_factory=dict)
    format: str = "json"
    seed: int = 0
    jobs: int = 1

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        skip = {"mode", "command", "format", "seed", "jobs", "func"}
        params = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
        return cls(args.mode, getattr(args, "command", None) or args.mode, params,
                   args.format, args.seed, args.jobs)


# --- argument parsing helpers ----------------------------------------------

def parse_ints(text: str, what: str = "index") -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}")


def parse_char0_signs(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "1", "+1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise UsageError(f"signs are + or - separated by commas, got {tok!r}")
    return tuple(out)


def _signs_or_ones(args, r: int, charp: bool) -> tuple[int, ...]:
    if args.signs is None:
        return (1,) * r
    signs = parse_ints(args.signs, "signs") if charp else parse_char0_signs(args.signs)
    if len(signs) != r:
        raise UsageError(f"got {len(signs)} signs for an index of depth {r}")
    return signs


def field_params(args) -> tuple[int, int, tuple | None]:
    prime_poly = parse_ints(args.prime_poly, "prime-poly") if args.prime_poly else None
    if args.q is not None:
        q = args.q
        p = next((d for d in range(2, q + 1) if q % d == 0), None)
        if p is None:
            raise UsageError(f"--q {q} is not a prime power")
        e, x = 0, q
        while x % p == 0:
            x //= p
            e += 1
        if x != 1:
            raise UsageError(f"--q {q} is not a prime power")
        if args.p is not None and args.p != p:
            raise UsageError(f"--p {args.p} disagrees with --q {q}")
        if args.q_exp is not None and args.q_exp != e:
            raise UsageError(f"--q-exp {args.q_exp} disagrees with --q {q}")
        return p, e, prime_poly
    if args.p is None:
        raise UsageError("give the field with --q, or with --p (and optionally --q-exp)")
    return args.p, args.q_exp or 1, prime_poly


def _ctx(params):
    from .charp import field_ctx

    p, e, prime_poly = params
    try:
        return field_ctx(p, e, prime_poly)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_deg(d: int, flag: str) -> int:
    if d < 1:
        raise UsageError(f"{flag} must be >= 1")
    if d > max_deg():
        raise UsageError(f"{flag} {d} exceeds FMZV_MAX_DEG={max_deg()}")
    return d


def _check_n(n: int, flag: str = "--n") -> int:
    if n < 0:
        raise UsageError(f"{flag} must be >= 0")
    if n > max_n():
        raise UsageError(f"{flag} {n} exceeds FMZV_MAX_N={max_n()}")
    return n


def _pmap(fn, units, jobs: int):
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, units))
    return [fn(u) for u in units]


def _plist(poly) -> list:
    return list(poly.coeffs)


# --- char 0 commands ----------------------------------------------------------

def cmd_char0_stirling(args):
    from .char0 import stirling

    n_max = _check_n(args.n)
    rows = []
    for n in range(n_max + 1) if args.m is None else [n_max]:
        for m in range(n + 1) if args.m is None else [args.m]:
            rows.append({"n": n, "m": m, "value": stirling(args.kind, n, m, max(64, n_max))})
    return True, rows, {}


def cmd_char0_mpbn(args):
    from .char0 import ampbn_series

    s = parse_ints(args.index)
    eps = _signs_or_ones(args, len(s), False)
    n = _check_n(args.n)
    B, C = ampbn_series(s, eps, n)
    rows = [{"n": k, "B": str(B[k]), "C": str(C[k])} for k in range(n + 1)]
    return True, rows, {"B": [str(x) for x in B], "C": [str(x) for x in C]}


def cmd_char0_genfun(args):
    from .char0 import genfun_dual_check

    if args.r < 1:
        raise UsageError("--r must be >= 1")
    sign_sets = [_signs_or_ones(args, args.r, False)] if args.signs else list(product((1, -1), repeat=args.r))
    rows = []
    for eps in sign_sets:
        rep = genfun_dual_check(args.r, eps, _check_n(args.x_order, "--x-order"),
                                (_check_n(args.y_order, "--y-order"),) * args.r, args.lower)
        rows.append(rep.to_dict() | {"ok": rep.ok})
    return all(r["ok"] for r in rows), rows, {}


def cmd_char0_fmzv(args):
    from .char0 import fmzv_component
    from .residue import is_prime, primes_between

    s = parse_ints(args.index)
    eps = _signs_or_ones(args, len(s), False)
    if args.prime is not None:
        if not is_prime(args.prime):
            raise UsageError(f"--prime {args.prime} is not prime")
        primes = [args.prime]
    else:
        primes = primes_between(args.l_min, args.l_max)
    rows = [{"prime": l, "value": fmzv_component(s, eps, l).value} for l in primes]
    return True, rows, {}


def _char0_verify_unit(unit):
    from .char0 import verify_0result

    s, eps, rp, l = unit
    rep = verify_0result(s, eps, rp, l)
    return rep.to_dict()


def cmd_char0_verify(args):
    from .residue import primes_between

    if args.suite == "stirling":
        from .suites import _run_3

        rows = []
        for l in primes_between(2, args.l_max):
            for key, status, detail in _run_3(l):
                rows.append({"case": json.dumps(list(key)), "status": status})
        return all(r["status"] == "pass" for r in rows), rows, {}
    primes = [l for l in primes_between(max(3, args.l_min), args.l_max)]
    if args.index is not None:
        s = parse_ints(args.index)
        grids = [(s, _signs_or_ones(args, len(s), False))]
    else:
        grids = [(s, eps) for r in (1, 2) for s in product((1, 2, 3), repeat=r)
                 for eps in product((1, -1), repeat=r)]
    units = [(s, eps, rp, l) for s, eps in grids for rp in range(args.r_prime_max + 1)
             for l in primes if l - rp - 2 >= 0]
    rows = _pmap(_char0_verify_unit, units, args.jobs)
    ok = all(r["holds"] or r["exceptional"] for r in rows)
    return ok, rows, {"exceptional": sum(r["exceptional"] for r in rows)}


# --- char p commands ---------------------------------------------------------

def cmd_charp_constants(args):
    from .charp import carlitz_constants

    ctx = _ctx(field_params(args))
    K = carlitz_constants(ctx)
    n = _check_n(args.n)
    rows = []
    for k in range(n + 1):
        rows.append({
            "n": k,
            "bracket": _plist(K.bracket(k)) if k else None,
            "D": _plist(K.D(k)),
            "L": _plist(K.L(k)),
            "Gamma_n_plus_1": _plist(K.Gamma(k + 1)),
        })
    return True, rows, {"field": ctx.describe()}


def cmd_charp_at(args):
    from .charp import at_identity_check, at_poly

    ctx = _ctx(field_params(args))
    n = _check_n(args.n)
    rows = [at_poly(s, ctx).to_dict() for s in range(1, n + 2)]
    ok = True
    if args.check_d is not None:
        for s in range(1, n + 2):
            for d in range(args.check_d + 1):
                rep = at_identity_check(s, d, ctx)
                rows.append({"identity_n": s, "d": d, "ok": rep.ok})
                ok = ok and rep.ok
    return ok, rows, {"field": ctx.describe()}


def cmd_charp_stirling_c(args):
    from .charp import stirling_carlitz

    ctx = _ctx(field_params(args))
    n = _check_n(args.n)
    m = _check_n(args.m if args.m is not None else n, "--m")
    T = stirling_carlitz(n, m, ctx)
    rows = [{"n": a, "m": b, **T(a, b).to_dict()} for a in range(n + 1) for b in range(m + 1)]
    return True, rows, {"field": ctx.describe()}


def cmd_charp_mpbcn(args):
    from .charp import ampbcn_closed, ampbcn_series, gamma_root

    ctx = _ctx(field_params(args))
    s = parse_ints(args.index)
    n = _check_n(args.n)
    if args.gamma is not None:
        gamma = parse_ints(args.gamma, "gamma")
    else:
        gamma = tuple(gamma_root(e, ctx) for e in _signs_or_ones(args, len(s), True))
    j = parse_ints(args.j, "j") if args.j is not None else (0,) * len(s)
    rows = []
    ok = True
    series = ampbcn_series(s, gamma, j, n, ctx) if args.method in ("series", "both") else None
    for k in range(n + 1):
        row = {"n": k}
        if series is not None:
            row["series"] = series[k].value.to_dict()
        if args.method in ("closed", "both"):
            row["closed"] = ampbcn_closed(s, gamma, j, k, ctx).value.to_dict()
        if args.method == "both":
            row["agree"] = row["series"] == row["closed"]
            ok = ok and row["agree"]
        rows.append(row)
    return ok, rows, {"field": ctx.describe(), "gamma": list(gamma), "j": list(j)}


def cmd_charp_fmzv(args):
    from .charp import QuotCtx, fmzv_p_component, monic_irreducibles

    ctx = _ctx(field_params(args))
    s = parse_ints(args.index)
    eps = _signs_or_ones(args, len(s), True)
    rows = []
    for d in range(1, _check_deg(args.deg_max, "--deg-max") + 1):
        for P in monic_irreducibles(ctx.Fq, d):
            rows.append({"P": _plist(P), "value": _plist(fmzv_p_component(s, eps, QuotCtx(P, ctx.Fq)))})
    return True, rows, {"field": ctx.describe()}


def _charp_verify_unit(unit):
    from .charp import Poly, verify_famzv_mcpl, verify_famzv_mpbcn

    params, suite, coeffs, s, eps, rp = unit
    ctx = _ctx(params)
    P = Poly(ctx.Fq, coeffs)
    if suite == "famzv-mcpl":
        rep = verify_famzv_mcpl(s, eps, P, ctx)
    else:
        rep = verify_famzv_mpbcn(s, eps, rp, P, ctx)
    return {"index": list(s), "signs": list(eps), "r_prime": rp, **rep.to_dict()}


def cmd_charp_verify(args):
    from .charp import monic_irreducibles

    params = field_params(args)
    ctx = _ctx(params)
    deg = _check_deg(args.deg_max, "--deg-max")
    if args.index is not None:
        s = parse_ints(args.index)
        grids = [(s, _signs_or_ones(args, len(s), True))]
    else:
        grids = [(s, eps) for r in (1, 2) for s in product((1, 2), repeat=r)
                 for eps in product(range(1, ctx.q), repeat=r)]
    rps = [None] if args.suite == "famzv-mcpl" else list(range(args.r_prime_max + 1))
    Ps = [P.coeffs for d in range(1, deg + 1) for P in monic_irreducibles(ctx.Fq, d)]
    units = [(params, args.suite, c, s, eps, rp) for s, eps in grids for rp in rps for c in Ps]
    rows = _pmap(_charp_verify_unit, units, args.jobs)
    rows.sort(key=lambda r: (len(r["P"]), r["P"], len(r["index"]), r["index"], r["signs"], r["r_prime"] or 0))
    ok = all(r["ok"] or r["excluded"] for r in rows)
    return ok, rows, {"field": ctx.describe(), "excluded": sum(1 for r in rows if r["excluded"])}


def cmd_charp_reduce(args):
    from .charp import verify_reduction

    ctx = _ctx(field_params(args))
    s = parse_ints(args.index)
    eps = _signs_or_ones(args, len(s), True)
    rep = verify_reduction(s, eps, _check_deg(args.check_deg, "--check-deg"), ctx)
    rows = [r.to_dict() for r in rep.rows]
    return rep.ok, rows, {"field": ctx.describe(), "combination": rep.combination.to_dict(),
                          "pretty": str(rep.combination)}


def cmd_selftest(args):
    from .suites import SUITES, run_all

    crit = parse_ints(args.criteria, "criteria") if args.criteria else None
    if crit and any(c not in SUITES for c in crit):
        raise UsageError(f"criteria must be among {sorted(SUITES)}")
    results = run_all(crit, args.seed, args.jobs)
    rows = [r.to_dict() for r in results]
    return all(r.ok for r in results), rows, {}


# --- parser and output ---------------------------------------------------------

def _add_common(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled grids")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")


def _add_field(p):
    p.add_argument("--q", type=int, help="field size q (a prime power)")
    p.add_argument("--p", type=int, help="characteristic")
    p.add_argument("--q-exp", type=int, help="q = p^q_exp")
    p.add_argument("--prime-poly", help="defining polynomial of F_q over F_p, coefficients low to high")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fmzv", description=__doc__.splitlines()[0])
    modes = ap.add_subparsers(dest="mode", required=True)

    c0 = modes.add_parser("char0", help="characteristic-zero computations").add_subparsers(dest="command", required=True)
    p = c0.add_parser("stirling", help="Stirling numbers")
    p.add_argument("--kind", choices=("first", "second"), default="second")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_char0_stirling)
    p = c0.add_parser("mpbn", help="alternating multiple poly-Bernoulli numbers B_n, C_n")
    p.add_argument("--index", required=True)
    p.add_argument("--signs")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_char0_mpbn)
    p = c0.add_parser("genfun-check", help="generating-function duality")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--signs")
    p.add_argument("--x-order", type=int, default=6)
    p.add_argument("--y-order", type=int, default=3)
    p.add_argument("--lower", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=cmd_char0_genfun)
    p = c0.add_parser("fmzv", help="finite multiple zeta value components mod l")
    p.add_argument("--index", required=True)
    p.add_argument("--signs")
    p.add_argument("--prime", type=int)
    p.add_argument("--l-min", type=int, default=3)
    p.add_argument("--l-max", type=int, default=31)
    p.set_defaults(func=cmd_char0_fmzv)
    p = c0.add_parser("verify", help="congruence sweeps over primes")
    p.add_argument("--suite", choices=("0result", "stirling"), default="0result")
    p.add_argument("--index")
    p.add_argument("--signs")
    p.add_argument("--r-prime-max", type=int, default=2)
    p.add_argument("--l-min", type=int, default=5)
    p.add_argument("--l-max", type=int, default=31)
    p.set_defaults(func=cmd_char0_verify)
    for sp in c0.choices.values():
        _add_common(sp)

    cp = modes.add_parser("charp", help="characteristic-p computations").add_subparsers(dest="command", required=True)
    p = cp.add_parser("constants", help="[n], D_n, L_n and Carlitz factorials")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_charp_constants)
    p = cp.add_parser("at", help="Anderson-Thakur polynomials H_0..H_n")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--check-d", type=int, help="also check the power-sum identity for d <= this")
    p.set_defaults(func=cmd_charp_at)
    p = cp.add_parser("stirling-c", help="Stirling-Carlitz numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_charp_stirling_c)
    p = cp.add_parser("mpbcn", help="alternating multiple poly-Bernoulli-Carlitz numbers")
    p.add_argument("--index", required=True)
    p.add_argument("--gamma", help="twist labels in F_{q'}; default: first roots of --signs")
    p.add_argument("--signs")
    p.add_argument("--j", help="coefficient selector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "series", "both"), default="both")
    p.set_defaults(func=cmd_charp_mpbcn)
    p = cp.add_parser("fmzv", help="per-P finite multiple zeta value components")
    p.add_argument("--index", required=True)
    p.add_argument("--signs")
    p.add_argument("--deg-max", type=int, default=3)
    p.set_defaults(func=cmd_charp_fmzv)
    p = cp.add_parser("verify", help="per-P congruence sweeps")
    p.add_argument("--suite", choices=("famzv-mcpl", "famzv-mpbcn"), required=True)
    p.add_argument("--deg-max", type=int, default=3)
    p.add_argument("--index")
    p.add_argument("--signs")
    p.add_argument("--r-prime-max", type=int, default=1)
    p.set_defaults(func=cmd_charp_verify)
    p = cp.add_parser("reduce", help="rewrite an integer index through positive ones")
    p.add_argument("--index", required=True)
    p.add_argument("--signs")
    p.add_argument("--check-deg", type=int, default=3)
    p.set_defaults(func=cmd_charp_reduce)
    for sp in cp.choices.values():
        _add_field(sp)
        _add_common(sp)

    p = modes.add_parser("selftest", help="run the acceptance suites")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    p.set_defaults(func=cmd_selftest)
    _add_common(p)
    return ap


def _cell(v):
    return v if isinstance(v, (int, str, bool)) or v is None else json.dumps(v, ensure_ascii=False)


def render(cfg: RunConfig, ok: bool, rows: list, extra: dict) -> str:
    if cfg.format == "json":
        doc = {"schema": SCHEMA, "config": asdict(cfg), "ok": ok, **extra, "rows": rows}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        buf.write("# " + json.dumps({"schema": SCHEMA, "config": asdict(cfg), "ok": ok, **extra},
                                    ensure_ascii=False) + "\n")
        cols = []
        for r in rows:
            cols.extend(k for k in r if k not in cols)
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
        return buf.getvalue()
    lines = [f"config: {json.dumps(asdict(cfg), ensure_ascii=False)}"]
    lines += [f"{k}: {_cell(v)}" for k, v in extra.items()]
    if cfg.command == "selftest":
        for r in rows:
            lines.append(f"criterion {r['criterion']} {r['name']}: {'PASS' if r['ok'] else 'FAIL'} "
                         f"({r['checks']} checks, {r['failed']} failed, {len(r['excluded'])} excluded)")
    else:
        lines += ["  ".join(f"{k}={_cell(v)}" for k, v in r.items()) for r in rows]
    lines.append("ok" if ok else "FAILED")
    return "\n".join(lines) + "\n"


def _first_failure(rows: list):
    for r in rows:
        if r.get("ok") is False or r.get("holds") is False and not r.get("exceptional"):
            return r.get("first_failure") or r
        if r.get("status") == "fail" or r.get("agree") is False:
            return r
    return None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        cfg = RunConfig.from_args(args)
        ok, rows, extra = args.func(args)
    except UsageError as exc:
        print(f"fmzv: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"fmzv: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(cfg, ok, rows, extra))
    if not ok:
        bad = _first_failure(rows)
        print(f"first counterexample: {json.dumps(bad, ensure_ascii=False)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
