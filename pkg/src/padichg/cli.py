"""Command-line front end: ``padichg <subcommand> [flags]``.

Exit codes: 0 on success, 1 when a domain gate rejects the input, 2 on a
parse or usage error.  JSON output is deterministic (sorted keys, no
timestamps) and echoes every resolved parameter.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .core import PadicScalar, parse_rational
from .errors import DomainError

WORKERS_ENV = "PADICHG_WORKERS"


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}") from exc


def _rationals(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(t) for t in text.split(",") if t.strip())


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def _int_list(text: str, p: int) -> list[int]:
    if text == "all":
        return list(range(2, p))
    try:
        return sorted({int(t) for t in text.split(",")})
    except ValueError as exc:
        raise UsageError(f"cannot parse integer list {text!r}") from exc


def _scalar(x) -> dict:
    return x.to_record()


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _fan_out(fn, items):
    """Map fn over items, in parallel when a worker count is configured.
    Results come back in input order."""
    n = _workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# subcommand bodies: each returns (resolved params, result payload)


def cmd_polylog(args):
    from .special import polylog
    from .special.polylog import limit_level

    _need(args, "r", "x")
    x = _rational(args.x)
    value = polylog(args.r, x, args.prec, p=args.p, method=args.method)
    params = {"r": args.r, "x": str(x), "p": args.p, "prec": args.prec, "method": args.method}
    if args.method == "limit":
        params["level"] = limit_level(args.prec, args.p)
    return params, _scalar(value)


def cmd_digamma(args):
    args.r = 0
    return cmd_polygamma(args)


def cmd_polygamma(args):
    from .special import polygamma
    from .special.digamma import gamma_level, psi_level

    _need(args, "r", "z")
    z = _rational(args.z)
    value = polygamma(args.r, z, args.prec, p=args.p)
    params = {
        "r": args.r,
        "z": str(z),
        "p": args.p,
        "prec": args.prec,
        "partial_sum_level": psi_level(args.prec, args.p),
    }
    if args.r == 0:
        params["gamma_level"] = gamma_level(args.prec, args.p)
    return params, _scalar(value)


def cmd_eulergamma(args):
    from .special import euler_gamma
    from .special.digamma import gamma_level

    value = euler_gamma(args.p, args.prec)
    return {"p": args.p, "prec": args.prec, "level": gamma_level(args.prec, args.p)}, _scalar(value)


def cmd_lp(args):
    from .special import choose_auxiliary_n, kubota_leopoldt

    _need(args, "r")
    params = {"r": args.r, "p": args.p, "prec": args.prec, "route": args.route}
    if args.route == "A":
        N = args.N if args.N is not None else choose_auxiliary_n(args.r, args.p)[0]
        params["N"] = N
        value = kubota_leopoldt(args.r, args.p, args.prec, route="A", N=N)
    else:
        value = kubota_leopoldt(args.r, args.p, args.prec, route="B")
    return params, _scalar(value)


def cmd_dwork(args):
    from .hypergeo import HGParams, dwork_eval
    from .hypergeo.evaluate import series_level

    _need(args, "a", "at")
    a = _rationals(args.a)
    at = _rational(args.at)
    HGParams(a, args.p)
    n = args.n if args.n is not None else series_level(args.prec, args.p)
    value = dwork_eval(a, at, args.prec, args.p, n=n)
    params = {"a": [str(x) for x in a], "at": str(at), "p": args.p, "prec": args.prec, "truncation_exponent": n}
    return params, _scalar(value)


def _hg_params(args):
    from .hypergeo import HGParams
    from .hypergeo.params import parse_twist

    a = _rationals(args.a)
    try:
        c = parse_twist(args.c, args.p)
    except DomainError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return HGParams(a, args.p, c)


def cmd_logtype(args):
    from .hypergeo import logtype_eval
    from .hypergeo.evaluate import series_level

    _need(args, "a", "at")
    hp = _hg_params(args)
    at = _rational(args.at)
    n = args.n if args.n is not None else series_level(args.prec, args.p, hp.weak)
    value = logtype_eval(hp, at, args.prec, n=n)
    params = hp.describe()
    params.update({"at": str(at), "prec": args.prec, "truncation_exponent": n, "twist_input": args.c})
    return params, _scalar(value)


def cmd_congruence(args):
    from .hypergeo import congruence_report

    _need(args, "a", "n")
    hp = _hg_params(args)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    D = args.degree if args.degree is not None else args.p**args.n + 25
    if D < args.p**args.n:
        raise UsageError("--degree must be at least p^n")
    logtype, dwork = congruence_report(hp, args.n, D)
    params = hp.describe()
    params.update({"n": args.n, "degree": D})
    result = {"logtype": logtype.to_record(), "dwork": dwork.to_record(), "pass": logtype.passed and dwork.passed}
    return params, result


def cmd_gauss1(args):
    from .hypergeo import gauss_mod_p

    _need(args, "a")
    a = _rationals(args.a)
    if len(a) != 2:
        raise UsageError("gauss1 takes exactly two parameters: --a a,b")
    from .hypergeo import HGParams

    HGParams(a, args.p)
    chk = gauss_mod_p(a[0], a[1], args.p)
    params = {"a": [str(x) for x in a], "p": args.p}
    result = {
        "a0": chk.a0,
        "b0": chk.b0,
        "truncated_sum_mod_p": chk.truncated_sum,
        "factorial_formula_mod_p": chk.predicted,
        "agree": chk.agree,
    }
    return params, result


def _legendre_one(job):
    from .curves import verify_dwork_unit_root
    from .errors import NotOrdinary

    p, a, K = job
    try:
        return verify_dwork_unit_root(p, a, K).to_record()
    except NotOrdinary as exc:
        return {"p": p, "a": a, "prec": K, "verdict": "not_ordinary", "reason": str(exc)}


def cmd_unitroot_legendre(args):
    _need(args, "a")
    values = _int_list(args.a, args.p)
    if len(values) == 1:
        from .curves import verify_dwork_unit_root

        rec = verify_dwork_unit_root(args.p, values[0], args.prec).to_record()
        return {"p": args.p, "a": values[0], "prec": args.prec}, rec
    recs = _fan_out(_legendre_one, [(args.p, a, args.prec) for a in values])
    return {"p": args.p, "a": values, "prec": args.prec}, recs


def _hg_one(job):
    from .curves import HGCurveSpec, verify_hg_unit_roots
    from .errors import NotOrdinary

    N, M, p, t0, K, partial = job
    spec = HGCurveSpec(N, M, p, t0)
    try:
        return verify_hg_unit_roots(spec, K, require_ordinary=not partial).to_record()
    except NotOrdinary as exc:
        return {"spec": {"N": N, "M": M, "p": p, "t0": spec.t0}, "verdict": "not_ordinary", "reason": str(exc)}


def cmd_unitroot_hg(args):
    _need(args, "N", "M", "t0")
    values = _int_list(args.t0, args.p)
    params = {"N": args.N, "M": args.M, "p": args.p, "prec": args.prec, "partial": args.partial}
    if len(values) == 1:
        from .curves import HGCurveSpec, verify_hg_unit_roots

        spec = HGCurveSpec(args.N, args.M, args.p, values[0])
        params["t0"] = spec.t0
        return params, verify_hg_unit_roots(spec, args.prec, require_ordinary=not args.partial).to_record()
    params["t0"] = values
    jobs = [(args.N, args.M, args.p, t, args.prec, args.partial) for t in values]
    return params, _fan_out(_hg_one, jobs)


def cmd_conjecture_lhs(args):
    from .curves import FAMILIES, conjecture_lhs

    params = {"family": args.family, "p": args.p, "prec": args.prec}
    if args.family == "fermat":
        _need(args, "i", "N", "j", "M")
        value = conjecture_lhs("fermat", None, args.p, args.prec, i=args.i, N=args.N, j=args.j, M=args.M)
        params.update({"i": args.i, "N": args.N, "j": args.j, "M": args.M, "twist": "1"})
    else:
        _need(args, "a")
        if args.family not in FAMILIES:
            raise UsageError(f"unknown family {args.family!r}")
        a = _rational(args.a)
        value = conjecture_lhs(args.family, a, args.p, args.prec)
        params.update({"a": str(a), "twist": f"{a}^(1-p)"})
    return params, _scalar(value)


def cmd_nonvanishing(args):
    from .curves import nonvanishing

    _need(args, "N", "M")
    nmax = args.n if args.n is not None else 3
    recs = nonvanishing(args.N, args.M, args.p, nmax)
    return {"N": args.N, "M": args.M, "p": args.p, "nmax": nmax}, [r.to_record() for r in recs]


COMMANDS = {
    "polylog": (cmd_polylog, "p-adic polylogarithm ln_r(x)"),
    "digamma": (cmd_digamma, "p-adic digamma psi_p(z)"),
    "polygamma": (cmd_polygamma, "p-adic polygamma psi_p^(r)(z)"),
    "eulergamma": (cmd_eulergamma, "p-adic Euler constant gamma_p"),
    "lp": (cmd_lp, "Kubota-Leopoldt value L_p(r, omega^(1-r))"),
    "dwork": (cmd_dwork, "Dwork's F^Dw_a at a point"),
    "logtype": (cmd_logtype, "logarithmic-type F^(sigma)_a at a point"),
    "congruence": (cmd_congruence, "check the logarithmic-type and Dwork congruences"),
    "gauss1": (cmd_gauss1, "[F_{a,b}(1)]_{<p} mod p against the factorial formula"),
    "unitroot-legendre": (cmd_unitroot_legendre, "Legendre unit root: point count vs F^Dw"),
    "unitroot-hg": (cmd_unitroot_hg, "hypergeometric curve unit roots: point count vs series"),
    "conjecture-lhs": (cmd_conjecture_lhs, "(1 - p/alpha) F^(sigma_a)(a) for an elliptic family"),
    "nonvanishing": (cmd_nonvanishing, "G_{i/N,j/M}(1)_{<p^n} mod p^n for admissible (i, j)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="padichg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--p", type=int, required=True, help="prime")
        sp.add_argument("--prec", type=int, default=5, help="output precision K (digits)")
        sp.add_argument("--format", choices=("json", "plain"), default="json")
        sp.set_defaults(subparser=sp)
        if name in ("polylog", "polygamma", "lp"):
            sp.add_argument("--r", type=int)
        if name == "polylog":
            sp.add_argument("--x")
            sp.add_argument("--method", choices=("auto", "limit"), default="auto")
        if name in ("digamma", "polygamma"):
            sp.add_argument("--z")
        if name == "lp":
            sp.add_argument("--route", choices=("A", "B"), default="A")
            sp.add_argument("--N", type=int, help="auxiliary N for route A")
        if name in ("dwork", "logtype", "congruence", "gauss1"):
            sp.add_argument("--a", help="comma-separated rationals")
        if name in ("logtype", "congruence"):
            sp.add_argument("--c", default="1", help="twist: a rational or 'a^{1-p}'")
        if name in ("dwork", "logtype"):
            sp.add_argument("--at", help="evaluation point (rational)")
            sp.add_argument("--n", type=int, help="truncation exponent override")
        if name == "congruence":
            sp.add_argument("--n", type=int)
            sp.add_argument("--degree", type=int)
        if name == "unitroot-legendre":
            sp.add_argument("--a", help="residue, comma list, or 'all'")
        if name == "unitroot-hg":
            sp.add_argument("--N", type=int)
            sp.add_argument("--M", type=int)
            sp.add_argument("--t0", help="residue, comma list, or 'all'")
            sp.add_argument("--partial", action="store_true", help="compare the slope-0 part of non-ordinary fibers")
        if name == "conjecture-lhs":
            sp.add_argument("--family", default="legendre", help="legendre, 1/6,5/6, 1/3,2/3, 1/4,3/4 or fermat")
            sp.add_argument("--a")
            for flag in ("--i", "--N", "--j", "--M"):
                sp.add_argument(flag, type=int)
        if name == "nonvanishing":
            sp.add_argument("--N", type=int)
            sp.add_argument("--M", type=int)
            sp.add_argument("--n", type=int, help="largest n (default 3)")
    return parser


def _plain(value) -> str:
    if isinstance(value, dict) and "coeffs" in value and "prec" in value:
        p, prec = value["p"], value["prec"]
        if value.get("f", 1) != 1:
            return f"coeffs {' '.join(value['coeffs'])} (mod {p}^{prec})"
        x = PadicScalar.from_record(value)
        digits = " ".join(str(d) for d in x.base_p_digits())
        prefix = f"{p}^-{x.shift} * " if x.shift else ""
        return f"{prefix}{digits} (mod {p}^{prec})"
    if isinstance(value, dict):
        return "\n".join(f"{k}: {_plain_inline(v)}" for k, v in sorted(value.items()))
    if isinstance(value, list):
        return "\n---\n".join(_plain(v) for v in value)
    return str(value)


def _plain_inline(v) -> str:
    if isinstance(v, dict) and "coeffs" in v and "prec" in v:
        return _plain(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _validate_common(args):
    from .core.fpoly import prime_factors

    if args.p < 2 or prime_factors(args.p) != [args.p]:
        raise UsageError(f"--p must be a prime, got {args.p}")
    if args.prec < 1:
        raise UsageError("--prec must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fn = COMMANDS[args.command][0]
    try:
        _validate_common(args)
        params, result = fn(args)
    except UsageError as exc:
        args.subparser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        out = {"command": args.command, "params": params, "result": result}
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(_plain(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
