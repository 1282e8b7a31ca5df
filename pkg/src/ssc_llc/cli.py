"""Command-line workbench.

    ssc-llc llc '{"family": "SO_odd", "n_or_N": 2, "a_exp": 1, "zeta": -1}' --q 3
    ssc-llc gamma PARAMS --tau '{"j": 1, "uniformizer_value": {"order": 2, "exponent": 1}}' --q 3
    ssc-llc verify all --q 3
    ssc-llc enumerate SO_even --n 2 --q 3
    ssc-llc fdc SO_odd --n 3 --q 5
    ssc-llc tame classify --q 3 --d 2 --j 2 --value -1
    ssc-llc iwahori check --family SO_odd --n 2 --p 2

Exit codes: 0 success, 1 an identity failed, 2 usage error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .catalog import GLSSCParams, SOEvenParams, SOOddParams, enumerate_ssc
from .characters import LocalField, TameCharacter
from .fdc import solve_constraints
from .gamma import ConsistencyError, gamma_ak_raw
from .laurent import LaurentRat, ShapeError
from .llc import DecompositionError, family_gamma, gamma_gl, llc
from .scalars import ScalarExt
from .verify import SUITES, prime_power

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# configuration and parsing


def _prime_power(q: int) -> tuple[int, int]:
    try:
        return prime_power(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field_from(args) -> LocalField:
    if args.q is not None:
        p, f = _prime_power(args.q)
        if args.p is not None and args.p != p:
            raise UsageError(f"--p {args.p} disagrees with --q {args.q}")
    elif args.p is not None:
        p, f = args.p, args.f
        if _prime_power(p) != (p, 1):
            raise UsageError(f"--p must be prime, got {p}")
    else:
        raise UsageError("give --q or --p/--f")
    bound = max(8, args.zeta_order, args.tau_order)
    return LocalField(p, f, args.D, bound)


def _load_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _sign(value) -> int:
    if isinstance(value, dict):
        angle = Fraction(value["exponent"], value["order"]) % 1
        if angle == 0:
            return 1
        if angle == Fraction(1, 2):
            return -1
        raise UsageError(f"expected +-1, got {value}")
    if value in (1, -1):
        return int(value)
    raise UsageError(f"expected +-1, got {value!r}")


def _angle(value) -> Fraction:
    if isinstance(value, dict):
        return Fraction(value["exponent"], value["order"]) % 1
    if value in (1, -1):
        return Fraction(0) if value == 1 else Fraction(1, 2)
    return Fraction(str(value)) % 1


def parse_params(F: LocalField, data) -> GLSSCParams | SOOddParams | SOEvenParams:
    if not isinstance(data, dict):
        raise UsageError("params must be a JSON object")
    try:
        family = data["family"]
        n = int(data["n_or_N"])
        a_exp = int(data.get("a_exp", 0))
        if family == "GL":
            return GLSSCParams(F.q, n, int(data.get("omega_j", 0)), a_exp, _angle(data.get("zeta", 1)))
        if family == "SO_odd":
            return SOOddParams(F.q, n, a_exp, _sign(data.get("zeta", 1)))
        if family == "SO_even":
            return SOEvenParams(F.q, n, _sign(data.get("xi", 1)), int(data.get("kappa", 0)), a_exp,
                                _sign(data.get("zeta", 1)))
    except KeyError as exc:
        raise UsageError(f"missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}")


def parse_tau(F: LocalField, data) -> TameCharacter:
    if not isinstance(data, dict):
        raise UsageError("tau must be a JSON object")
    value = data.get("uniformizer_value", {"order": 1, "exponent": 0})
    return F.char(int(data.get("j", 0)), _angle(value))


# ---------------------------------------------------------------------------
# rendering


def render_monomial(F: LocalField, gam: LaurentRat) -> str:
    """c q^{h/2 - m s} with c of absolute value 1, when gam is a monomial."""
    try:
        mono = gam.to_monomial()
    except ShapeError:
        return gam.pretty()
    c, m = mono.coeff, mono.xpow
    norm = (c * c.conj()).rational_value()
    h = 0
    while norm >= F.q:
        norm /= F.q
        h += 1
    while norm < 1:
        norm *= F.q
        h -= 1
    if norm != 1:
        return gam.pretty()
    unit = c / _q_half(F, h)
    exponent = _exponent_text(Fraction(h, 2), m)
    return f"({unit!r}) q^{{{exponent}}}"


def _q_half(F: LocalField, h: int) -> ScalarExt:
    from .scalars import q_power

    return q_power(F.cfg, h)


def _exponent_text(const: Fraction, m: int) -> str:
    s_part = "" if m == 0 else ("-s" if m == 1 else ("s" if m == -1 else f"{-m}s"))
    if const == 0:
        return s_part or "0"
    if s_part and not s_part.startswith("-"):
        s_part = "+" + s_part
    return f"{const}{s_part}"


def strip_timings(obj):
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj


def emit(obj, fmt: str, pretty_lines: list[str] | None = None) -> None:
    if fmt == "pretty" and pretty_lines is not None:
        print("\n".join(pretty_lines))
        return
    if fmt == "pretty":
        print(json.dumps(obj, indent=2, sort_keys=True, default=str))
        return
    print(json.dumps(obj, sort_keys=True, default=str))


# ---------------------------------------------------------------------------
# commands


def cmd_llc(args) -> int:
    F = _field_from(args)
    g = parse_params(F, _load_json(args.params))
    if isinstance(g, GLSSCParams):
        raise UsageError("llc takes SO_odd or SO_even parameters")
    dec = llc(F, g)
    out = dec.to_json()
    lines = [f"{dec.family} n={dec.n} q={F.q}: packet size {out['packet_size']}, Swan {out['swan_total']}"]
    for c in out["constituents"]:
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in c.items()))
    emit(out, args.format, lines)
    return EXIT_OK


def cmd_gamma(args) -> int:
    F = _field_from(args)
    g = parse_params(F, _load_json(args.params))
    tau = parse_tau(F, _load_json(args.tau))
    if isinstance(g, GLSSCParams):
        try:
            gam = gamma_gl(F, g, tau).to_rat()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        gam = family_gamma(F, g, tau)
    out = {"params": g.to_json(), "tau": tau.to_json(), "gamma": gam.to_json(), "pretty": render_monomial(F, gam)}
    if isinstance(g, SOEvenParams):
        out["raw_route_agrees"] = gamma_ak_raw(F, g, tau) == gam
        if not out["raw_route_agrees"]:
            emit(out, args.format)
            return EXIT_FAIL
    emit(out, args.format, [f"gamma(s, pi x tau, psi) = {out['pretty']}"])
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    if args.q is None:
        if args.p is None:
            raise UsageError("give --q or --p/--f")
        q = args.p**args.f
    else:
        q = args.q
    started = time.perf_counter()
    report = verify.run(args.suite, q, tau_order=args.tau_order, D=args.D, seed=args.seed,
                        precision=args.precision, compare=args.compare, trials=args.trials)
    elapsed = time.perf_counter() - started
    if args.time_budget is not None:
        report["within_budget"] = elapsed <= args.time_budget
    if not args.timings:
        report = strip_timings(report)
    if args.brief:
        report = _brief(report)
    emit(report, args.format)
    ok = report["ok"] and report.get("within_budget", True)
    return EXIT_OK if ok else EXIT_FAIL


def _brief(report: dict) -> dict:
    if "parts" in report:
        return {**report, "parts": [_brief(p) for p in report["parts"]]}
    return {k: v for k, v in report.items() if k != "instances"}


def cmd_enumerate(args) -> int:
    F = _field_from(args)
    params = enumerate_ssc(F, args.family, args.n, args.zeta_order)
    for g in params:
        line = {"params": g.to_json()}
        if args.family != "GL":
            line["llc"] = llc(F, g).to_json()
        print(json.dumps(line, sort_keys=True))
    return EXIT_OK


def cmd_fdc(args) -> int:
    if args.q is None:
        raise UsageError("fdc needs --q")
    report = solve_constraints(args.family, args.n, args.q)
    sols = report.solutions
    out = {
        "family": args.family, "n": args.n, "q": args.q,
        "r": sols[0].r if len(sols) == 1 else None,
        "artin": sols[0].artin if len(sols) == 1 else None,
        **report.to_json(),
    }
    emit(out, args.format)
    return EXIT_OK if len(sols) == 1 else EXIT_FAIL


def cmd_tame(args) -> int:
    from .tame import TameInducedRep, classify_tame, sym_ext_L

    if args.q is None:
        raise UsageError("tame classify needs --q")
    _prime_power(args.q)
    value = Fraction(0) if args.value == 1 else Fraction(1, 2)
    out = classify_tame(args.q, args.d, args.j, value)
    if out["self_dual"]:
        p, f = _prime_power(args.q)
        F = LocalField(p, f, max(args.D, args.d), 8)
        factors = sym_ext_L(F, TameInducedRep(args.q, args.d, args.j, value))
        out["L"] = {k: v.to_json() for k, v in factors.items()}
    emit(out, args.format)
    return EXIT_OK


def cmd_iwahori(args) -> int:
    from .iwahori import DEFAULT_SEED, run_suite

    if args.p is None:
        raise UsageError("iwahori check needs --p")
    seed = DEFAULT_SEED if args.seed is None else args.seed
    report = run_suite(args.family, args.n, args.p, args.f, seed=seed, trials=args.trials,
                       precision=args.precision, compare=args.compare)
    emit(report, args.format)
    return EXIT_OK if report["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--f", type=int, default=1)
    common.add_argument("--q", type=int)
    common.add_argument("--D", type=int, default=2, help="largest unramified degree in scalar fields")
    common.add_argument("--zeta-order", type=int, default=8)
    common.add_argument("--tau-order", type=int, default=8)
    common.add_argument("--precision", type=int, default=8)
    common.add_argument("--compare", type=int, default=6)
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=("json", "pretty"), default="json")

    parser = argparse.ArgumentParser(prog="ssc-llc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("llc", parents=[common], help="L-parameter of an SO simple supercuspidal")
    p.add_argument("params", help="params JSON, @file or - for stdin")
    p.set_defaults(func=cmd_llc)

    p = sub.add_parser("gamma", parents=[common], help="twisted gamma factor")
    p.add_argument("params")
    p.add_argument("--tau", required=True, help='{"j": .., "uniformizer_value": {"order": .., "exponent": ..}}')
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--time-budget", type=_seconds)
    p.add_argument("--timings", action="store_true", help="keep wall-clock fields in the report")
    p.add_argument("--brief", action="store_true", help="omit per-instance records")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="one JSON line per class")
    p.add_argument("family", choices=("GL", "SO_odd", "SO_even"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fdc", parents=[common], help="formal-degree constraint search")
    p.add_argument("family", choices=("SO_odd", "SO_even"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_fdc)

    tame = sub.add_parser("tame", help="tame induced representations")
    tsub = tame.add_subparsers(dest="action", required=True)
    p = tsub.add_parser("classify", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--value", type=int, choices=(1, -1), default=1, help="chi(pi)")
    p.set_defaults(func=cmd_tame)

    iw = sub.add_parser("iwahori", help="Iwahori subgroup checks")
    isub = iw.add_subparsers(dest="action", required=True)
    p = isub.add_parser("check", parents=[common])
    p.add_argument("--family", choices=("GL", "SO_odd", "SO_even"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_iwahori)
    return parser


def _seconds(text: str) -> float:
    return float(text[:-1] if text.endswith("s") else text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "compare", 0) > getattr(args, "precision", 8):
        print("error: --compare exceeds --precision", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecompositionError, ConsistencyError, AssertionError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
