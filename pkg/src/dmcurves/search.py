"""Enumeration harnesses: the Ihara square-discriminant scan, the genus-2 DM
model search and regression over a curve corpus."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .bounds import dm_defect, dm_lower_N2, dm_upper_N2, ihara_bound
from .classify import ClassificationVerdict, classify_counts
from .curves import (
    DEFAULT_BUDGET,
    CurveEntry,
    Hyperelliptic,
    count_points,
    enumeration_size,
    load_corpus,
    model_to_json,
    validate_model,
)
from .errors import BudgetExceeded, DomainError
from .ff import FieldDesc, extend
from .kernels.tables import field_tables
from .zeta import lpoly_from_counts

# ------------------------------------------------------------ Ihara scan

CONFIRMED = "confirmed-curve"
DISCARDED = "discarded-by-bound"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class IharaCandidate:
    g: int
    q: int
    D: int
    sqrtD: int
    N_star: int
    in_range: bool
    status: str = UNKNOWN

    def to_row(self) -> list:
        return [self.g, self.q, self.D, self.sqrtD, self.N_star, self.status]


def is_prime_power(q: int) -> bool:
    from .ff import _prime_factors

    return q >= 2 and len(_prime_factors(q)) == 1


def _in_range(g: int, q: int) -> bool:
    # (q - sqrt q)/2 <= g  <=>  q - 2g <= sqrt q
    t = q - 2 * g
    return t <= 0 or t * t <= q


def corpus_status_map(entries: Iterable[CurveEntry] | None = None, discarded: Iterable[dict] | None = None) -> dict:
    status: dict[tuple[int, int], str] = {}
    if entries is None or discarded is None:
        entries, discarded = load_corpus(), load_discarded()
    for row in discarded:
        status[(int(row["g"]), int(row["q"]))] = DISCARDED
    for e in entries:
        if e.expect.get("ihara_max"):
            status[(e.genus, e.field.q)] = CONFIRMED
    return status


def ihara_candidate_scan(g_max: int, q_list: Sequence[int], status: dict | None = None) -> list[IharaCandidate]:
    """Couples (g, q) with (8q+1)g^2 + 4qg(q-1) a square, N* integral and
    (q - sqrt q)/2 <= g."""
    if g_max < 1 or not q_list:
        raise ValueError("need g_max >= 1 and a nonempty q list")
    status = corpus_status_map() if status is None else status
    out = []
    for q in sorted(set(q_list)):
        for g in range(1, g_max + 1):
            D, root, _ = ihara_bound(q, g)
            if root is None or (root - g) % 2 or not _in_range(g, q):
                continue
            out.append(IharaCandidate(g, q, D, root, q + 1 + (root - g) // 2, True, status.get((g, q), UNKNOWN)))
    out.sort(key=lambda c: (c.g, c.q))
    return out


def scan_csv(cands: Sequence[IharaCandidate]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g", "q", "D", "sqrtD", "N_star", "status"])
    for c in cands:
        w.writerow(c.to_row())
    return buf.getvalue()


# ------------------------------------------------------ genus-2 search

DEFAULT_MAX_Q = 16


@dataclass
class SearchHit:
    model: Hyperelliptic
    counts: tuple[int, int]
    delta: int
    verdict: ClassificationVerdict

    def key(self) -> str:
        return json.dumps(model_to_json(self.model), sort_keys=True)

    def to_json(self) -> dict:
        return {
            "model": model_to_json(self.model),
            "n1": self.counts[0],
            "n2": self.counts[1],
            "delta": self.delta,
            "two_alpha": self.verdict.dm_two_alpha,
            "genus2_cases": self.verdict.genus2_cases,
        }


def _codes(F: FieldDesc, pred=lambda c: True) -> list[int]:
    return [c for c in range(F.q) if pred(c)]


def _families(F: FieldDesc) -> list[list[list[int]]]:
    """Coefficient choices (h_0..h_3, f_0..f_6) covering every genus-2 curve."""
    q, p = F.q, F.p
    tab = field_tables(F)
    every = _codes(F)
    one, zero = [1], [0]
    if p != 2:
        nonsq = next(c for c in range(1, q) if tab.chi[c] == -1)
        fams = []
        # degree 5, monic; x -> x - f_4/5 clears f_4 when p != 5
        f4 = zero if p != 5 else every
        fams.append([zero] * 4 + [every, every, every, every, f4, one, zero])
        # degree 6, leading coefficient in {1, non-square}; p != 3 clears f_5
        f5 = zero if p != 3 else every
        fams.append([zero] * 4 + [every] * 5 + [f5, [1, nonsq]])
        return fams
    if q == 2:
        return [[every] * 4 + [every] * 7]
    trace_one = next(c for c in range(1, q) if tab.trace[c] == 1)
    return [[every, every, every, one] + [every, every, every, zero, zero, zero, [0, trace_one]]]


def _family_size(fams) -> int:
    return sum(int(np.prod([len(c) for c in fam])) for fam in fams)


def genus2_dm_search(F: FieldDesc, max_q: int = DEFAULT_MAX_Q) -> list[SearchHit]:
    """Every model in a normalised family of genus-2 curves over F with
    DM-defect zero.  Models are not reduced up to isomorphism."""
    if F.q > max_q:
        raise BudgetExceeded(F.q, max_q)
    K, emb = extend(F, 2)
    t1, t2 = field_tables(F), field_tables(K)
    embed = emb.code_table()
    four1 = F.element(4).encode() if F.p != 2 else 0
    four2 = K.element(4).encode() if F.p != 2 else 0
    hits: dict[str, SearchHit] = {}
    for fam in _families(F):
        for codes, n1, n2 in kernels.genus2_scan(t1, t2, embed, fam, 2, four1, four2):
            h = tuple(F.decode(c).coeffs for c in codes[:4])
            f = tuple(F.decode(c).coeffs for c in codes[4:])
            M = Hyperelliptic(_trim(f), _trim(h), 2)
            try:
                validate_model(M, F)
            except DomainError:
                continue
            delta = dm_defect(F.q, 2, n1, n2)
            hit = SearchHit(M, (n1, n2), delta, classify_counts(F.q, 2, n1, n2))
            hits[hit.key()] = hit
    return [hits[k] for k in sorted(hits)]


def _trim(cs):
    cs = list(cs)
    while cs and not any(cs[-1]):
        cs.pop()
    return tuple(c if any(c) else (0,) for c in cs)


# ------------------------------------------------------- corpus verify


def load_discarded(path: str | Path | None = None) -> list[dict]:
    from importlib import resources

    if path is None:
        text = resources.files("dmcurves").joinpath("data/corpus.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    return list(data.get("ihara_discarded", [])) if isinstance(data, dict) else []


@dataclass
class EntryReport:
    name: str
    status: str = "pass"  # pass | fail | error
    counts: dict[int, dict] = field(default_factory=dict)
    delta: int | None = None
    verdict: dict | None = None
    lpoly: str = "n/a"
    diffs: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "delta": self.delta,
            "verdict": self.verdict,
            "lpoly": self.lpoly,
            "diffs": self.diffs,
            "skipped": self.skipped,
        }


def verify_entry(e: CurveEntry, budget: int = DEFAULT_BUDGET) -> EntryReport:
    rep = EntryReport(e.name)
    q, g = e.field.q, e.genus
    computed: dict[int, int] = {}
    try:
        if e.model is not None:
            validate_model(e.model, e.field, max_degree=1, budget=budget)
            for k in sorted(e.declared_counts):
                if enumeration_size(e.model, q, k) > budget:
                    rep.skipped.append(f"N_{k}: budget")
                    continue
                computed[k] = count_points(e.model, e.field, k, budget)
        for k, declared in sorted(e.declared_counts.items()):
            got = computed.get(k)
            rep.counts[k] = {"declared": declared, "computed": got}
            if got is not None and got != declared:
                rep.diffs.append(f"N_{k}: declared {declared}, computed {got}")
        known = {**e.declared_counts, **computed}
        if 1 in known and 2 in known:
            N1, N2 = known[1], known[2]
            rep.delta = dm_defect(q, g, N1, N2)
            v = classify_counts(q, g, N1, N2)
            rep.verdict = v.to_json()
            for flag, want in e.expect.items():
                got = rep.verdict.get(flag)
                if got != want:
                    rep.diffs.append(f"{flag}: expected {want}, got {got}")
            if g >= 2 and not dm_lower_N2(q, g, N1) <= N2 <= dm_upper_N2(q, g, N1):
                rep.diffs.append("N_2 outside the parity bounds")
        rep.lpoly = _verify_lpoly(e, computed, budget, rep)
    except DomainError as exc:
        rep.status = "error"
        rep.diffs.append(f"{type(exc).__name__}: {exc}")
        return rep
    if rep.diffs:
        rep.status = "fail"
    return rep


def _verify_lpoly(e: CurveEntry, computed: dict[int, int], budget: int, rep: EntryReport) -> str:
    q, g = e.field.q, e.genus
    if e.model is None:
        return "n/a"
    counts = []
    for k in range(1, g + 1):
        if k in computed:
            counts.append(computed[k])
        elif enumeration_size(e.model, q, k) <= budget:
            counts.append(count_points(e.model, e.field, k, budget))
        else:
            return "skipped: budget"
    L = lpoly_from_counts(q, g, counts)
    if e.declared_lpoly is not None and L.poly != e.declared_lpoly:
        rep.diffs.append(f"L: declared {e.declared_lpoly}, computed {L.poly}")
        return "mismatch"
    return "verified"


def corpus_verify(corpus: str | Path | Sequence[CurveEntry] | None = None, budget: int = DEFAULT_BUDGET) -> list[EntryReport]:
    if corpus is None or isinstance(corpus, (str, Path)):
        entries = load_corpus(corpus)
    else:
        entries = list(corpus)
    return [verify_entry(e, budget) for e in entries]


__all__ = [
    "IharaCandidate",
    "SearchHit",
    "EntryReport",
    "corpus_status_map",
    "corpus_verify",
    "genus2_dm_search",
    "ihara_candidate_scan",
    "is_prime_power",
    "load_discarded",
    "scan_csv",
    "verify_entry",
]
