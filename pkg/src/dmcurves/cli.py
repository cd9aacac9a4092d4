"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (or a failing corpus entry),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bounds import defect_report
from .classify import classify_counts, genus2_jacobian_classify
from .curves import DEFAULT_BUDGET, count_points, load_curve, validate_model
from .errors import DomainError
from .ff import make_field
from .intpoly import IntPoly, is_q_weil
from .search import (
    DEFAULT_MAX_Q,
    corpus_verify,
    genus2_dm_search,
    ihara_candidate_scan,
    is_prime_power,
    scan_csv,
)
from .zeta import lpoly_from_counts, zeta_report


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=None)


def _text(obj, indent: str = "") -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: " + ", ".join(str(x) for x in v))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


# ------------------------------------------------------------- commands


def cmd_count(a) -> dict:
    e = load_curve(a.curve)
    if e.model is None:
        raise UsageError(f"{a.curve} has no model to count")
    n = count_points(e.model, e.field, a.ext, a.budget)
    return {"name": e.name, "q": e.field.q, "k": a.ext, "count": n}


def cmd_lpoly(a) -> dict:
    e = load_curve(a.curve)
    if e.model is None:
        raise UsageError(f"{a.curve} has no model")
    validate_model(e.model, e.field, max_degree=1, budget=a.budget)
    counts = [count_points(e.model, e.field, k, a.budget) for k in range(1, e.genus + 1)]
    L = lpoly_from_counts(e.field.q, e.genus, counts)
    out = {"name": e.name, "q": e.field.q, "g": e.genus, "counts": counts}
    out.update(zeta_report(L))
    return out


def cmd_bounds(a) -> dict:
    if a.n2 is not None and a.n1 is None:
        raise UsageError("--n2 needs --n1")
    n1 = a.n1 if a.n1 is not None else a.q + 1
    rep = defect_report(a.q, a.g, n1, a.n2, a.tau).to_json()
    if a.n1 is None:
        for k in ("N1", "dm_upper_N2", "dm_lower_N2"):
            rep.pop(k, None)
    return rep


def cmd_classify(a) -> dict:
    return classify_counts(a.q, a.g, a.n1, a.n2).to_json()


def cmd_weilcheck(a) -> dict:
    try:
        f = IntPoly(int(s) for s in a.poly.split(",") if s.strip())
    except ValueError as exc:
        raise UsageError(f"bad polynomial {a.poly!r}") from exc
    if f.degree < 0 or f.degree % 2:
        raise UsageError(f"degree {f.degree} is odd; q-Weil polynomials have even degree")
    if f.lead() != 1:
        raise UsageError("polynomial must be monic")
    ok, cert = is_q_weil(f, a.q)
    return {"poly": f.to_json(), "q": a.q, "q_weil": ok, "certificate": cert}


def cmd_genus2(a) -> dict:
    make_field(a.p)  # prime check
    return genus2_jacobian_classify(a.p, a.n, a.a).to_json()


def cmd_scan(a) -> dict:
    qs = [q for q in range(2, a.qmax + 1) if is_prime_power(q)]
    cands = ihara_candidate_scan(a.gmax, qs)
    return {"csv": scan_csv(cands), "candidates": [c.__dict__ for c in cands]}


def cmd_search(a) -> dict:
    F = make_field(a.p, a.n)
    hits = genus2_dm_search(F, a.max_q)
    return {"q": F.q, "hits": len(hits), "models": [h.to_json() for h in hits]}


def cmd_verify(a) -> dict:
    reports = corpus_verify(a.corpus, a.budget)
    entries = [r.to_json() for r in reports]
    return {"passed": sum(r.status == "pass" for r in reports), "total": len(reports), "entries": entries}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="enumeration budget (points)")

    ap = argparse.ArgumentParser(prog="dmcurves", description="Point counts, L-polynomials and DM-curve predicates.", parents=[common])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "count points over F_{q^k}")
    p.add_argument("--curve", required=True)
    p.add_argument("--ext", type=int, default=1)

    p = add("lpoly", cmd_lpoly, "L-polynomial from exhaustive counts")
    p.add_argument("--curve", required=True)

    p = add("bounds", cmd_bounds, "Weil, Ihara and DM bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--tau", type=int)

    p = add("classify", cmd_classify, "DM / DS / Ihara / Weil flags from counts")
    for flag in ("--q", "--g", "--n1", "--n2"):
        p.add_argument(flag, type=int, required=True)

    p = add("weilcheck", cmd_weilcheck, "exact q-Weil test")
    p.add_argument("--poly", required=True, help='coefficients "c0,c1,...", low degree first')
    p.add_argument("--q", type=int, required=True)

    p = add("genus2", cmd_genus2, "genus-2 DM Jacobian decision for (T^2+aT+q)^2")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a", type=int, required=True)

    p = add("scan", cmd_scan, "square-discriminant Ihara couples")
    p.add_argument("--gmax", type=int, default=18)
    p.add_argument("--qmax", type=int, default=49)

    p = add("search", cmd_search, "genus-2 DM model search")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q)

    p = add("verify", cmd_verify, "re-check a curve corpus")
    p.add_argument("--corpus", default=None, help="corpus JSON (default: shipped corpus)")
    return ap


def _check(a) -> None:
    for name in ("q", "g", "p", "n", "ext", "gmax", "qmax", "budget"):
        v = getattr(a, name, None)
        if v is not None and v < 1:
            raise UsageError(f"--{name} must be positive")
    if a.cmd in ("bounds", "classify") and not is_prime_power(a.q):
        raise UsageError(f"--q {a.q} is not a prime power")


def _render(a, out: dict) -> str:
    if a.json:
        return _dump(out)
    if a.cmd == "scan":
        return out["csv"].rstrip("\n")
    if a.cmd == "search":
        lines = [f"q: {out['q']}", f"hits: {out['hits']}"]
        lines += [f"  {_dump(m)}" for m in out["models"]]
        return "\n".join(lines)
    if a.cmd == "verify":
        lines = [f"{e['status']:5} {e['name']} lpoly={e['lpoly']}" + ("" if not e["diffs"] else "  " + "; ".join(e["diffs"])) for e in out["entries"]]
        lines.append(f"passed {out['passed']}/{out['total']}")
        return "\n".join(lines)
    return _text(out)


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    a.json = getattr(a, "json", False)
    a.budget = getattr(a, "budget", DEFAULT_BUDGET)
    try:
        _check(a)
        out = a.func(a)
    except UsageError as exc:
        print(f"dmcurves {a.cmd}: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(_dump(err) if a.json else f"{err['error']}: {err['message']}", file=sys.stderr)
        return 1
    print(_render(a, out))
    if a.cmd == "verify" and out["passed"] != out["total"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
