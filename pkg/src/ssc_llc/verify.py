"""Verification suites behind `verify`: each returns a JSON-ready report with
every identity instance it checked and an overall `ok`."""

from __future__ import annotations

import os
import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor

from .catalog import enumerate_ssc
from .characters import LocalField
from .fdc import artin_consistency, expected, solve_constraints
from .gamma import ConsistencyError, gamma_lift_quotient
from .llc import DecompositionError, appendix_consistency, det_and_type_check, llc, verify_gamma_product
from .local_factors import tate_gamma

SUITES = ("gauss", "gamma-product", "thm-ak", "fdc", "appendix-a3", "iwahori", "all")


def prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f, m = 0, q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                break
            return p, f
    raise ValueError(f"{q} is not a prime power")


def threads() -> int:
    raw = os.environ.get("LLC_WORKBENCH_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _field(q: int, D: int = 2, root_bound: int = 8) -> LocalField:
    p, f = prime_power(q)
    return LocalField(p, f, D, root_bound)


def _summary(name: str, q, instances: list[dict], started: float, **extra) -> dict:
    failures = [i for i in instances if not i["ok"]]
    return {
        "suite": name, "q": q, "checked": len(instances), "failed": len(failures),
        "instances": instances, "seconds": round(time.perf_counter() - started, 3),
        "ok": not failures, **extra,
    }


# ---------------------------------------------------------------------------


def suite_gauss(q: int, D: int = 2) -> dict:
    """|G|^2 = q^d and G(eta) G(eta^-1) = eta(-1) q^d for nontrivial eta, d <= D;
    the Hasse-Davenport product relation for p odd; Frobenius invariance for p = 2."""
    started = time.perf_counter()
    F = _field(q, D)
    out = []
    for d in range(1, D + 1):
        order = q**d - 1
        qd = F.cfg.scalar(q**d)
        field = F.extension(d).field
        minus_one = field.log[field.neg(1)] if q % 2 else 0
        for j in range(1, order):
            G = F.gauss_sum(j, d)
            out.append({"law": "norm", "d": d, "j": j, "ok": G * G.conj() == qd})
            sign = F.cfg.root(F.mult_angle(j, field.exp[minus_one], d))
            out.append({"law": "reflection", "d": d, "j": j,
                        "ok": G * F.gauss_sum(order - j, d) == sign * qd})
    if F.p != 2:
        tau2 = F.char(F.legendre_j)
        four = F.integer(4)
        for j in range(q - 1):
            tau = F.char(j)
            lhs = F.gauss_sum(tau.inverse() * tau2.inverse()) * F.gauss_sum(tau.inverse())
            rhs = F.gauss_sum(tau.inverse() ** 2) * F.gauss_sum(tau2.inverse()) * F.root(tau.at(four))
            out.append({"law": "hasse_davenport", "j": j, "ok": lhs == rhs})
    else:
        for j in range(q - 1):
            tau = F.char(j)
            out.append({"law": "frobenius", "j": j,
                        "ok": F.gauss_sum(tau.inverse() ** 2) == F.gauss_sum(tau.inverse())})
    if q in (3, 5):
        for tau in F.tame_characters(4):
            lhs = tate_gamma(F, tau) * tate_gamma(F, tau.inverse()).substitute(F.cfg.scalar(Fraction(1, q)), -1)
            out.append({"law": "tate_symmetry", "tau": tau.to_json(),
                        "ok": lhs == lhs.const(F.root(tau.at(F.minus_one)))})
    return _summary("gauss", q, out, started)


def _gamma_product_one(args) -> list[dict]:
    q, D, tau_order, g = args
    F = _field(q, D)
    res = verify_gamma_product(F, g, tau_order)
    det = det_and_type_check(F, llc(F, g))
    return [{"params": res["params"], "taus": res["checked"], "failures": res["failures"][:3],
             "det_and_type": det["checks"], "ok": res["ok"] and det["ok"]}]


def _run_grid(fn, tasks: list) -> list[dict]:
    workers = threads()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(fn, tasks))
    else:
        chunks = [fn(t) for t in tasks]
    return [item for chunk in chunks for item in chunk]


def suite_gamma_product(q: int, ns=(2, 3), tau_order: int = 8, D: int = 2) -> dict:
    started = time.perf_counter()
    F = _field(q, D)
    tasks, counts = [], {}
    for family in ("SO_odd", "SO_even"):
        for n in ns:
            params = enumerate_ssc(F, family, n)
            counts[f"{family}_{n}"] = len(params)
            tasks += [(q, D, tau_order, g) for g in params]
    return _summary("gamma-product", q, _run_grid(_gamma_product_one, tasks), started, classes=counts)


def _thm_ak_one(args) -> list[dict]:
    q, D, tau_order, g = args
    F = _field(q, D)
    cases: dict[int, int] = {}
    failures = []
    for tau in F.tame_characters(tau_order):
        try:
            _, case = gamma_lift_quotient(F, g, tau)
            cases[case] = cases.get(case, 0) + 1
        except ConsistencyError as exc:
            failures.append({"tau": tau.to_json(), "error": str(exc)})
    return [{"params": g.to_json(), "cases": {str(k): v for k, v in sorted(cases.items())},
             "failures": failures[:3], "ok": not failures}]


def suite_thm_ak(q: int, ns=(2, 3), tau_order: int = 8, D: int = 2) -> dict:
    started = time.perf_counter()
    F = _field(q, D)
    tasks = [(q, D, tau_order, g) for n in ns for g in enumerate_ssc(F, "SO_even", n)]
    instances = _run_grid(_thm_ak_one, tasks)
    totals: dict[str, int] = {}
    for inst in instances:
        for k, v in inst["cases"].items():
            totals[k] = totals.get(k, 0) + v
    return _summary("thm-ak", q, instances, started, case_counts=totals)


def suite_fdc(qs=(2, 3, 4, 5, 7, 9), max_n: int = 6) -> dict:
    started = time.perf_counter()
    out = []
    for q in qs:
        for family in ("SO_odd", "SO_even"):
            for n in range(2 if family == "SO_even" else 1, max_n + 1):
                report = solve_constraints(family, n, q)
                found = [(s.r, s.artin, s.poles) for s in report.solutions]
                r, artin = expected(family, n, q)
                ok = found == [(r, artin, ())] and artin_consistency(family, n, artin, 1)
                out.append({"family": family, "n": n, "q": q, "solutions": [list(map(_jsonable, s)) for s in found],
                            "expected": [r, artin], "nodes": report.nodes, "ok": ok})
    return _summary("fdc", list(qs), out, started)


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def suite_appendix(q: int, ns=(2, 3), D: int = 2) -> dict:
    started = time.perf_counter()
    F = _field(q, D)
    if F.p == 2:
        return _summary("appendix-a3", q, [], started, skipped="needs p odd")
    out = []
    for n in ns:
        for g in enumerate_ssc(F, "SO_even", n):
            try:
                ok = appendix_consistency(F, g)
            except DecompositionError as exc:
                out.append({"params": g.to_json(), "error": str(exc), "ok": False})
                continue
            out.append({"params": g.to_json(), "ok": ok})
    return _summary("appendix-a3", q, out, started)


IWAHORI_CONFIGS = (("GL", 3), ("SO_odd", 2), ("SO_even", 2), ("SO_even", 3))


def suite_iwahori(q: int, seed: int | None = None, trials: int = 200, precision: int = 8,
                  compare: int = 6, configs=IWAHORI_CONFIGS) -> dict:
    from .iwahori import DEFAULT_SEED, element_orders, run_suite

    started = time.perf_counter()
    p, f = prime_power(q)
    seed = DEFAULT_SEED if seed is None else seed
    out = []
    for family, n in configs:
        rep = run_suite(family, n, p, f, seed=seed, trials=trials, precision=precision,
                        compare=compare, with_orders=False)
        out.append({"family": family, "n": n, "claims": {k: v["ok"] for k, v in rep["claims"].items()},
                    "findings": {k: rep[k] for k in ("bt_degeneracy", "incomplete_quotient") if k in rep},
                    "ok": rep["ok"]})
    orders = element_orders(4)
    out.append({"element_orders": orders["checks"], "ok": orders["ok"]})
    return _summary("iwahori", q, out, started, seed=seed, trials=trials, precision=precision, compare=compare)


def run(suite: str, q: int, **options) -> dict:
    if suite not in SUITES:
        raise KeyError(suite)
    tau_order = options.get("tau_order", 8)
    D = options.get("D", 2)
    if suite == "gauss":
        return suite_gauss(q, D)
    if suite == "gamma-product":
        return suite_gamma_product(q, tau_order=tau_order, D=D)
    if suite == "thm-ak":
        return suite_thm_ak(q, tau_order=tau_order, D=D)
    if suite == "fdc":
        return suite_fdc((q,))
    if suite == "appendix-a3":
        return suite_appendix(q, D=D)
    if suite == "iwahori":
        return suite_iwahori(q, seed=options.get("seed"), precision=options.get("precision", 8),
                             compare=options.get("compare", 6), trials=options.get("trials", 200))
    started = time.perf_counter()
    parts = [run(name, q, **options) for name in SUITES[:-1]]
    return {"suite": "all", "q": q, "parts": parts, "seconds": round(time.perf_counter() - started, 3),
            "ok": all(part["ok"] for part in parts)}
