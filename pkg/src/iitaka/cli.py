"""Command-line front end.

Exit codes: 0 when every expectation in the report holds ("reproduced"),
1 when one fails ("refuted"), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import claims, kernels
from .baskets import (Basket, BasketError, basket_sigma, chi_mK, k_dot_c2,
                      lambda_from_basket, satisfies_e3)
from .bounds import FiberType, ReproductionError, fiber_bound
from .enumeration import (SearchError, SearchResult, SearchWindow, brute_force_oracle,
                          search_window, verify_result)
from .moduli import ModuliError, dega_lower_bound, hurwitz_min_positive
from .rational import format_rational, parse_rational
from .report import RENDERERS, Report

EXIT = {"reproduced": 0, "refuted": 1, "error": 2}
FIBER_ALIASES = {
    "k3": FiberType.K3,
    "enriques": FiberType.ENRIQUES,
    "abelian": FiberType.ABELIAN_NON_ISOTRIVIAL,
    "abelian-isotrivial": FiberType.ABELIAN_ISOTRIVIAL,
    "bielliptic": FiberType.BIELLIPTIC_NON_ISOTRIVIAL,
    "bielliptic-isotrivial": FiberType.BIELLIPTIC_ISOTRIVIAL,
    "nonrational": FiberType.NON_RATIONAL_BASE,
}


class UsageError(Exception):
    pass


def _check(name: str, expected: Any, observed: Any, ok: bool | None = None) -> dict[str, Any]:
    return {"check": name, "expected": expected, "observed": observed,
            "ok": (expected == observed) if ok is None else ok}


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _chi_list(values: list[str] | None) -> list[int] | None:
    if not values:
        return None
    out = []
    for v in values:
        for part in v.split(","):
            part = part.strip()
            if part:
                try:
                    out.append(int(part))
                except ValueError:
                    raise UsageError(f"--chi expects integers, got {part!r}") from None
    return out


def _window_from_args(args: argparse.Namespace) -> SearchWindow:
    if args.lambda_gt is not None:
        threshold, comparison = args.lambda_gt, "strict"
    else:
        threshold, comparison = args.lambda_ge, "closed"
    chis = _chi_list(args.chi)
    if chis is not None and not args.allow_any_chi:
        allowed = SearchWindow.for_fiber(args.fiber, 1).chi_X_values
        bad = sorted(set(chis) - set(allowed))
        if bad:
            raise UsageError(f"chi values {bad} outside {list(allowed)} for {args.fiber}; "
                             "pass --allow-any-chi to override")
    return SearchWindow.for_fiber(args.fiber, threshold, comparison, chis)


# -- cache -------------------------------------------------------------------

def window_key(window: SearchWindow) -> str:
    blob = json.dumps(window.describe(), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def _load_cached(cache: Path, window: SearchWindow) -> tuple[list[SearchResult], dict] | None:
    path = cache / f"{window_key(window)}.json"
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data.get("window") != window.describe():
            return None
        results = []
        for row in data["results"]:
            basket = Basket.parse(row["basket"], chi_X=int(row["chi_X"]))
            result = SearchResult(basket, parse_rational(row["sigma"]),
                                  parse_rational(row["lambda"]))
            if not verify_result(result, window):
                return None
            results.append(result)
        return results, data.get("stats", {})
    except (ValueError, KeyError, TypeError):
        return None


def _store_cached(cache: Path, window: SearchWindow, results: list[SearchResult],
                  stats: dict) -> None:
    cache.mkdir(parents=True, exist_ok=True)
    data = {"window": window.describe(), "results": [r.to_dict() for r in results],
            "stats": stats}
    (cache / f"{window_key(window)}.json").write_text(json.dumps(data, indent=2) + "\n")


# -- commands ----------------------------------------------------------------

def cmd_search(args: argparse.Namespace) -> tuple[dict, Any, list]:
    window = _window_from_args(args)
    cache_state = "off"
    cached = _load_cached(Path(args.cache), window) if args.cache else None
    if cached is not None:
        results, stats = cached
        cache_state = "hit"
    else:
        run = search_window(window, jobs=args.jobs)
        results = run.results
        stats = {"nodes": run.nodes, "window_hits": run.window_hits,
                 "per_chi": {str(k): v for k, v in run.per_chi.items()}}
        if args.cache:
            _store_cached(Path(args.cache), window, results, stats)
            cache_state = "miss"

    checks = [_check("every result re-verifies", True,
                     all(verify_result(r, window) for r in results))]
    fiber = args.fiber.lower()
    claimed = claims.LAMBDA_MAX[fiber]
    if window.comparison == "strict" and window.threshold >= claimed:
        checks.append(_check(f"no basket with lambda > {format_rational(window.threshold)}",
                             0, len(results)))
    if (fiber == "k3" and window.threshold <= claimed
            and claims.EXTREMAL_K3_CHI in window.chi_X_values
            and (window.comparison == "closed" or window.threshold < claimed)):
        found = any(r.basket.format() == claims.EXTREMAL_K3_BASKET
                    and r.chi_X == claims.EXTREMAL_K3_CHI for r in results)
        checks.append(_check("extremal basket present", True, found))

    inputs = {"fiber": fiber, **window.describe()}
    payload = {
        "window": window.describe(),
        "count": len(results),
        "results": [r.to_dict() for r in results],
        "stats": stats,
        "cache": cache_state,
        "kernel_backend": kernels.BACKEND,
    }
    return inputs, payload, checks


def cmd_verify(args: argparse.Namespace) -> tuple[dict, Any, list]:
    basket = Basket.parse(args.basket, chi_X=args.chi)
    sigma = basket_sigma(basket)
    period = basket.period
    excess = sigma - 24 * basket.chi_X
    lam = None
    if excess > 0:
        lam = lambda_from_basket(basket, args.chi_f)
    e3 = satisfies_e3(basket)
    table = [{"m": m, "chi_mK": format_rational(chi_mK(basket, m))}
             for m in range(1, period + 2)]
    checks = [
        _check("sigma - 24 chi > 0", True, excess > 0),
        _check("e3 holds for all m > 1", True, e3),
    ]
    if lam is not None:
        checks.append(_check("lambda * K.c2 = 12 chi_F", True,
                             lam * k_dot_c2(basket) == 12 * args.chi_f))
    inputs = {"basket": basket.format(), "chi_X": args.chi, "chi_F": args.chi_f}
    payload = {
        "basket": basket.format(),
        "sigma": format_rational(sigma),
        "k_dot_c2": format_rational(k_dot_c2(basket)),
        "lambda": None if lam is None else format_rational(lam),
        "e3": e3,
        "period": period,
        "horizon": period + 1,
        "chi_mK": table,
    }
    return inputs, payload, checks


def _witness_matches(witness, expected: dict) -> bool:
    return (witness is not None and witness.b == expected["b"] and witness.u == expected["u"]
            and witness.denoms == tuple(expected["denoms"])
            and (witness.alpha, witness.beta, witness.gamma)
            == (expected["alpha"], expected["beta"], expected["gamma"]))


def cmd_min_dega(args: argparse.Namespace) -> tuple[dict, Any, list]:
    if args.hurwitz:
        sig = hurwitz_min_positive(args.order_cap, args.count_cap)
        inputs = {"hurwitz": True, "order_cap": args.order_cap, "count_cap": args.count_cap}
        payload = {"overall": format_rational(sig.delta), "signature": sig.to_dict()}
        checks = [
            _check("minimal delta", format_rational(claims.HURWITZ["delta"]),
                   format_rational(sig.delta)),
            _check("minimal signature", list(claims.HURWITZ["orders"]), list(sig.orders)),
        ]
        return inputs, payload, checks

    overall, cases = dega_lower_bound(args.fiber)
    claim = claims.DEGA[args.fiber]
    witness = cases[-1].witness
    checks = [_check("overall bound", format_rational(claim["overall"]),
                     format_rational(overall))]
    checks.append(_check("extreme point", claim["witness"],
                         witness.to_dict() if witness else None,
                         ok=_witness_matches(witness, claim["witness"])))
    by_label = {c.case_label: c.bound for c in cases}
    for label, value in claim["cases"].items():
        checks.append(_check(f"case {label}", format_rational(value),
                             format_rational(by_label[label]) if label in by_label else None))
    inputs = {"fiber": args.fiber}
    payload = {
        "overall": format_rational(overall),
        "lambda_bound": format_rational(1 / overall),
        "cases": [c.to_dict() for c in cases],
        "witness": witness.to_dict() if witness else None,
        "kernel_backend": kernels.BACKEND,
    }
    return inputs, payload, checks


def cmd_bounds(args: argparse.Namespace) -> tuple[dict, Any, list]:
    if args.fiber is None:
        fibers = list(FiberType)
    else:
        key = args.fiber.lower()
        try:
            fibers = [FIBER_ALIASES[key] if key in FIBER_ALIASES else FiberType.parse(key)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    certificates, checks = [], []
    for ft in fibers:
        try:
            cert = fiber_bound(ft, jobs=args.jobs)
        except ReproductionError as exc:
            checks.append(_check(f"{ft.tag} certificate", "computed", str(exc), ok=False))
            continue
        row = cert.to_dict()
        claimed_m, claimed_d = claims.THEOREM[ft.tag]
        ok = cert.m_min == claimed_m and cert.divisibility == claimed_d
        row["status"] = "reproduced" if ok else "refuted"
        certificates.append(row)
        checks.append(_check(f"{ft.tag} m_min", [claimed_m, claimed_d],
                             [cert.m_min, cert.divisibility]))
    inputs = {"fiber": args.fiber}
    return inputs, {"certificates": certificates}, checks


def cmd_oracle(args: argparse.Namespace) -> tuple[dict, Any, list]:
    window = _window_from_args(args)
    brute = brute_force_oracle(window, args.r_cap, args.count_cap)
    pruned = search_window(window, jobs=args.jobs).results
    capped = [r for r in pruned
              if r.basket.size <= args.count_cap
              and all(e.r <= args.r_cap for e in r.basket.entries)]
    same = [r.to_dict() for r in capped] == [r.to_dict() for r in brute]
    checks = [_check("pruned search equals brute force within caps", True, same)]
    inputs = {"fiber": args.fiber, **window.describe(), "r_cap": args.r_cap,
              "count_cap": args.count_cap}
    payload = {"pruned_within_caps": len(capped), "pruned_total": len(pruned),
               "brute_force": len(brute), "results": [r.to_dict() for r in brute]}
    return inputs, payload, checks


# -- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--emit", choices=sorted(RENDERERS), default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")


def _window_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fiber", required=True, type=str.lower, choices=["k3", "enriques"])
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda-gt", type=_rational_arg, metavar="N")
    g.add_argument("--lambda-ge", type=_rational_arg, metavar="N")
    p.add_argument("--chi", action="append", metavar="CHI",
                   help="chi(O_X) values (repeatable or comma separated)")
    p.add_argument("--allow-any-chi", action="store_true",
                   help="permit chi(O_X) values outside the fiber's range")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iitaka",
        description="Exact searches behind effective Iitaka-fibration bounds "
                    "for threefolds of Kodaira dimension one.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="enumerate baskets in a lambda window")
    _window_args(p)
    p.add_argument("--cache", metavar="DIR", help="reuse verified results from DIR")
    _common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-basket", help="evaluate one basket")
    p.add_argument("--basket", required=True, help='e.g. "2,1x8;3,1x6;7,1;7,2;7,3"')
    p.add_argument("--chi", type=int, required=True, help="chi(O_X)")
    p.add_argument("--chi-f", type=int, required=True, choices=[1, 2], help="chi(O_F)")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("min-dega", help="minimize the reduced deg A expression")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--fiber", type=str.lower, choices=["abelian", "bielliptic"])
    g.add_argument("--hurwitz", action="store_true", help="orbifold delta minimum instead")
    p.add_argument("--order-cap", type=int, default=84)
    p.add_argument("--count-cap", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_min_dega)

    p = sub.add_parser("bounds", help="assemble the pluricanonical bounds")
    p.add_argument("--fiber", help="one fiber type, e.g. k3, enriques, abelian, "
                                   "bielliptic, BiellipticIsotrivial, nonrational")
    _common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", help="cross-check the pruned search by brute force")
    _window_args(p)
    p.add_argument("--r-cap", type=int, default=6)
    p.add_argument("--count-cap", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def _write(report: Report, emit: str, out: str | None) -> None:
    text = RENDERERS[emit](report)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> tuple[int, Report | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    handler: Callable = args.func
    start = time.perf_counter()
    try:
        inputs, payload, checks = handler(args)
    except (UsageError, BasketError, SearchError, ModuliError, ValueError) as exc:
        print(f"iitaka {args.command}: error: {exc}", file=sys.stderr)
        return EXIT["error"], None
    elapsed = int(round((time.perf_counter() - start) * 1000))
    status = "reproduced" if all(c["ok"] for c in checks) else "refuted"
    if isinstance(payload, dict):
        payload = {**payload, "checks": checks}
    report = Report(args.command, inputs, payload, status, elapsed)
    _write(report, args.emit, args.out)
    return EXIT[status], report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
