"""Explicit curve models and exhaustive point counting over F_{q^k}.

Three presentations are supported:

``Hyperelliptic``
    y^2 + h(x) y = f(x).  Points at infinity are those of the smooth model in
    weighted projective space P(1, g+1, 1): the solutions v of
    v^2 + h_{g+1} v = f_{2g+2}.  For h = 0 this is 1 point when deg f is odd
    and 2 or 0 when deg f is even, by squareness of the leading coefficient.
``SmoothPlane``
    A homogeneous F(x, y, z); projective zeros are counted.
``ArtinSchreierLike``
    An affine equation lhs(y) = rhs(x, y) whose smooth model is not computed;
    the caller declares how many points lie over infinity for each k.

Coefficients are stored field-agnostically as polynomial-basis vectors over
F_p and are resolved against the base field when counting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Sequence, Union

from . import kernels
from .errors import (
    BudgetExceeded,
    InvalidModel,
    NotSquarefree,
    SingularPointFound,
)
from .ff import (
    FieldDesc,
    FieldElement,
    extend,
    fq_add,
    fq_deriv,
    fq_gcd,
    fq_mul,
    fq_poly,
    fq_scale,
    make_field,
)
from .intpoly import IntPoly
from .kernels.tables import field_tables

DEFAULT_BUDGET = 20_000_000
DEFAULT_SMOOTHNESS_DEGREE = 6

Coeff = tuple[int, ...]  # polynomial-basis vector over F_p, low-to-high


def _coeff_vec(c) -> Coeff:
    if isinstance(c, int):
        return (c,)
    return tuple(int(x) for x in c)


@dataclass(frozen=True)
class Hyperelliptic:
    f: tuple[Coeff, ...]
    h: tuple[Coeff, ...] = ()
    genus: int = 0
    kind: str = field(default="hyperelliptic", init=False)

    def polys(self, F: FieldDesc):
        return fq_poly(F, self.f), fq_poly(F, self.h)


@dataclass(frozen=True)
class SmoothPlane:
    terms: tuple[tuple[Coeff, int, int, int], ...]
    genus: int = 0
    kind: str = field(default="plane", init=False)

    @property
    def degree(self) -> int:
        return self.terms[0][1] + self.terms[0][2] + self.terms[0][3]


@dataclass(frozen=True)
class ArtinSchreierLike:
    lhs: tuple[tuple[Coeff, int], ...]
    rhs: tuple[tuple[Coeff, int, int], ...]
    infinity: tuple[tuple[int, int], ...] = ()
    infinity_default: int | None = None
    genus: int = 0
    kind: str = field(default="artin_schreier", init=False)

    def points_at_infinity(self, k: int) -> int:
        table = dict(self.infinity)
        if k in table:
            return table[k]
        if self.infinity_default is None:
            raise InvalidModel(f"no declared points at infinity for k={k}")
        return self.infinity_default


CurveModel = Union[Hyperelliptic, SmoothPlane, ArtinSchreierLike]


@dataclass(frozen=True)
class PointCounts:
    q: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """N_k, 1-based."""
        return self.counts[k - 1]

    def __len__(self):
        return len(self.counts)


@dataclass
class ValidationReport:
    kind: str
    ok: bool
    smooth_up_to: int | None = None
    checks: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"kind": self.kind, "ok": self.ok, "smooth_up_to": self.smooth_up_to, "checks": self.checks}


# ------------------------------------------------------------ helpers ----


def _resolve(F: FieldDesc, c: Coeff) -> FieldElement:
    return F.element(list(c))


def _four(K: FieldDesc) -> int:
    return K.element(4).encode() if K.p != 2 else 0


def _solutions_quadratic(tab, hv: int, fv: int) -> int:
    """Number of v in the field with v^2 + hv v = fv (encodings)."""
    if tab.p == 2:
        if hv == 0:
            return 1
        if fv == 0:
            return 2
        t = tab.mul(fv, tab.pow(hv, tab.q - 3))  # fv / hv^2
        return 2 - 2 * int(tab.trace[t])
    disc = tab.add(tab.mul(hv, hv), tab.mul(tab.field.element(4).encode(), fv))
    return 1 + int(tab.chi[disc])


def _hyperelliptic_genus_ok(M: Hyperelliptic, F: FieldDesc) -> None:
    f, h = M.polys(F)
    g = M.genus
    df, dh = len(f) - 1, len(h) - 1
    if g < 1:
        raise InvalidModel("declared genus must be positive")
    if F.p == 2 and not h:
        raise InvalidModel("h = 0 is not allowed in characteristic 2")
    if dh > g + 1 or df > 2 * g + 2:
        raise InvalidModel(f"degrees (deg h={dh}, deg f={df}) too large for genus {g}")
    if not h and g != (df - 1) // 2:
        raise InvalidModel(f"declared genus {g} but deg f = {df} gives genus {(df - 1) // 2}")
    if max(2 * dh, df) < 2 * g + 1:
        raise InvalidModel(f"degrees too small for genus {g}")


def enumeration_size(M: CurveModel, q: int, k: int) -> int:
    Q = q**k
    if isinstance(M, Hyperelliptic):
        return Q
    return Q * Q + Q + 1


def _check_budget(M: CurveModel, F: FieldDesc, k: int, budget: int) -> None:
    need = enumeration_size(M, F.q, k)
    if need > budget:
        raise BudgetExceeded(need, budget)


# ------------------------------------------------------------ counting ----


def count_points(M: CurveModel, F: FieldDesc, k: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """N_k = #X(F_{q^k}) by exhaustive enumeration."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_budget(M, F, k, budget)
    K, emb = extend(F, k)
    tab = field_tables(K)

    def code(c: Coeff) -> int:
        return emb(_resolve(F, c)).encode()

    if isinstance(M, Hyperelliptic):
        _hyperelliptic_genus_ok(M, F)
        g = M.genus
        fc = [code(c) for c in M.f]
        hc = [code(c) for c in M.h]
        affine = kernels.hyperelliptic_affine(tab, hc, fc, _four(K))
        h_top = hc[g + 1] if len(hc) > g + 1 else 0
        f_top = fc[2 * g + 2] if len(fc) > 2 * g + 2 else 0
        return affine + _solutions_quadratic(tab, h_top, f_top)

    if isinstance(M, SmoothPlane):
        coeffs = [code(c) for c, *_ in M.terms]
        affine = kernels.plane_affine(tab, coeffs, [t[1] for t in M.terms], [t[2] for t in M.terms])
        # z = 0: points (x : 1 : 0) and (1 : 0 : 0)
        line = [0] * (M.degree + 1)
        corner = 0
        for c, (_, i, j, kz) in zip(coeffs, M.terms):
            if kz == 0:
                line[i] = tab.add(line[i], c)
                if j == 0:
                    corner = tab.add(corner, c)
        at_inf = int((kernels.poly_values(tab, line) == 0).sum())
        return affine + at_inf + (1 if corner == 0 else 0)

    if isinstance(M, ArtinSchreierLike):
        coeffs, ex, ey = _as_terms(M, F, emb)
        affine = kernels.plane_affine(tab, coeffs, ex, ey)
        return affine + M.points_at_infinity(k)

    raise InvalidModel(f"unknown model {type(M).__name__}")


def _as_terms(M: ArtinSchreierLike, F: FieldDesc, emb):
    """lhs - rhs as merged (coeff code, i, j) terms over the extension."""
    acc: dict[tuple[int, int], FieldElement] = {}
    for c, j in M.lhs:
        key = (0, j)
        acc[key] = acc.get(key, F.zero()) + _resolve(F, c)
    for c, i, j in M.rhs:
        key = (i, j)
        acc[key] = acc.get(key, F.zero()) - _resolve(F, c)
    items = sorted((k, v) for k, v in acc.items() if not v.is_zero())
    return [emb(v).encode() for _, v in items], [k[0] for k, _ in items], [k[1] for k, _ in items]


def count_profile(M: CurveModel, F: FieldDesc, m: int, budget: int = DEFAULT_BUDGET) -> PointCounts:
    counts = tuple(count_points(M, F, k, budget) for k in range(1, m + 1))
    if m >= 2 and counts[0] > counts[1]:
        raise InvalidModel(f"N_1 = {counts[0]} > N_2 = {counts[1]}")
    return PointCounts(F.q, counts)


# ---------------------------------------------------------- validation ----


def validate_model(
    M: CurveModel,
    F: FieldDesc,
    max_degree: int = DEFAULT_SMOOTHNESS_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> ValidationReport:
    if isinstance(M, Hyperelliptic):
        return _validate_hyperelliptic(M, F)
    if isinstance(M, SmoothPlane):
        return _validate_plane(M, F, max_degree, budget)
    if isinstance(M, ArtinSchreierLike):
        for k in range(1, 3):
            M.points_at_infinity(k)
        return ValidationReport("artin_schreier", True, None, ["points at infinity declared by caller"])
    raise InvalidModel(f"unknown model {type(M).__name__}")


def _validate_hyperelliptic(M: Hyperelliptic, F: FieldDesc) -> ValidationReport:
    _hyperelliptic_genus_ok(M, F)
    f, h = M.polys(F)
    g = M.genus
    checks = [f"genus {g} consistent with degrees"]
    if F.p != 2:
        # y^2 + h y = f  <=>  (y + h/2)^2 = f + h^2/4
        disc = fq_add(fq_scale(f, F.element(4)), fq_mul(h, h))
        if len(fq_gcd(disc, fq_deriv(disc))) != 1:
            raise NotSquarefree("h^2 + 4f is not squarefree")
        checks.append("h^2 + 4f squarefree")
    else:
        # affine singularities sit over roots of h with h'^2 f = f'^2
        dh, df = fq_deriv(h), fq_deriv(f)
        crit = fq_add(fq_mul(fq_mul(dh, dh), f), fq_mul(df, df))
        if len(fq_gcd(h, crit)) != 1:
            raise NotSquarefree("affine model is singular over a root of h")
        get = lambda p, i: p[i] if i < len(p) else F.zero()  # noqa: E731
        H0, H1 = get(h, g + 1), get(h, g)
        F0, F1 = get(f, 2 * g + 2), get(f, 2 * g + 1)
        if H0.is_zero() and H1 * H1 * F0 == F1 * F1:
            raise NotSquarefree("model is singular at infinity")
        checks.append("nonsingular: gcd(h, h'^2 f + f'^2) = 1 and smooth at infinity")
    return ValidationReport("hyperelliptic", True, None, checks)


def _plane_partials(M: SmoothPlane, F: FieldDesc):
    out = []
    for axis in range(3):
        terms = []
        for c, *e in M.terms:
            if e[axis] % F.p:
                ne = list(e)
                ne[axis] -= 1
                terms.append((_resolve(F, c) * e[axis], *ne))
        out.append(terms)
    return out


def _validate_plane(M: SmoothPlane, F: FieldDesc, max_degree: int, budget: int) -> ValidationReport:
    d = M.degree
    if any(i + j + k != d for _, i, j, k in M.terms):
        raise InvalidModel("plane model is not homogeneous")
    if M.genus != (d - 1) * (d - 2) // 2:
        raise InvalidModel(f"declared genus {M.genus} but degree {d} gives {(d - 1) * (d - 2) // 2}")
    base = [(_resolve(F, c), i, j, k) for c, i, j, k in M.terms]
    polys = [base] + _plane_partials(M, F)
    checked = 0
    for k in range(1, max_degree + 1):
        if F.q ** (2 * k) + F.q**k + 1 > budget:
            break
        K, emb = extend(F, k)
        tab = field_tables(K)
        enc = [[(emb(c).encode(), i, j, kz) for c, i, j, kz in poly] for poly in polys]
        affine = [([t[0] for t in p], [t[1] for t in p], [t[2] for t in p]) for p in enc]
        hit = kernels.plane_common_zero(tab, affine)
        if hit is not None:
            raise SingularPointFound(k, (K.decode(hit[0]), K.decode(hit[1]), K.one()))
        # z = 0 line: (x : 1 : 0) and (1 : 0 : 0)
        line_polys = []
        corner_zero = True
        for p in enc:
            line = [0] * (d + 1)
            corner = 0
            for c, i, j, kz in p:
                if kz == 0:
                    line[i] = tab.add(line[i], c)
                    if j == 0:
                        corner = tab.add(corner, c)
            line_polys.append(line)
            corner_zero &= corner == 0
        common = None
        for line in line_polys:
            z = kernels.poly_values(tab, line) == 0
            common = z if common is None else common & z
        if common.any():
            x = int(common.nonzero()[0][0])
            raise SingularPointFound(k, (K.decode(x), K.one(), K.zero()))
        if corner_zero:
            raise SingularPointFound(k, (K.one(), K.zero(), K.zero()))
        checked = k
    return ValidationReport("plane", True, checked, [f"no singular point over F_(q^k), k <= {checked}"])


# ---------------------------------------------------------- corpus I/O ----


def _parse_coeff(c: Any, gen: Sequence[int] | None, F: FieldDesc | None) -> Coeff:
    if isinstance(c, str) and c.startswith("g^"):
        if gen is None or F is None:
            raise InvalidModel("coefficient uses g^k but no generator given")
        return (F.element(list(gen)) ** int(c[2:])).coeffs
    return _coeff_vec(c)


def model_from_json(d: Mapping, genus: int, F: FieldDesc | None = None, infinity: Mapping | None = None) -> CurveModel:
    kind = d["type"]
    gen = d.get("generator")
    pc = lambda c: _parse_coeff(c, gen, F)  # noqa: E731
    if kind == "hyperelliptic":
        return Hyperelliptic(tuple(pc(c) for c in d["f"]), tuple(pc(c) for c in d.get("h", [])), genus)
    if kind == "plane":
        return SmoothPlane(tuple((pc(c), int(i), int(j), int(k)) for c, i, j, k in d["terms"]), genus)
    if kind == "artin_schreier":
        inf = dict(infinity or {})
        default = inf.pop("default", None)
        return ArtinSchreierLike(
            tuple((pc(c), int(j)) for c, j in d["lhs"]),
            tuple((pc(c), int(i), int(j)) for c, i, j in d["rhs"]),
            tuple(sorted((int(k), int(v)) for k, v in inf.items())),
            None if default is None else int(default),
            genus,
        )
    raise InvalidModel(f"unknown model type {kind!r}")


def _coeff_json(c: Coeff):
    return c[0] if len(c) == 1 else list(c)


def model_to_json(M: CurveModel) -> dict:
    if isinstance(M, Hyperelliptic):
        return {"type": "hyperelliptic", "f": [_coeff_json(c) for c in M.f], "h": [_coeff_json(c) for c in M.h]}
    if isinstance(M, SmoothPlane):
        return {"type": "plane", "terms": [[_coeff_json(c), i, j, k] for c, i, j, k in M.terms]}
    return {
        "type": "artin_schreier",
        "lhs": [[_coeff_json(c), j] for c, j in M.lhs],
        "rhs": [[_coeff_json(c), i, j] for c, i, j in M.rhs],
    }


@dataclass
class CurveEntry:
    name: str
    field: FieldDesc
    genus: int
    model: CurveModel | None
    declared_counts: dict[int, int]
    declared_lpoly: IntPoly | None = None
    infinity: dict | None = None
    expect: dict = field(default_factory=dict)
    notes: str = ""

    @classmethod
    def from_json(cls, d: Mapping) -> CurveEntry:
        F = FieldDesc.from_json(d["field"])
        genus = int(d["declared_genus"])
        model = None
        if d.get("model"):
            model = model_from_json(d["model"], genus, F, d.get("infinity"))
        lp = d.get("declared_lpoly")
        return cls(
            name=d["name"],
            field=F,
            genus=genus,
            model=model,
            declared_counts={int(k): int(v) for k, v in d.get("declared_counts", {}).items()},
            declared_lpoly=IntPoly.from_json(lp) if lp else None,
            infinity=d.get("infinity"),
            expect=dict(d.get("expect", {})),
            notes=d.get("notes", ""),
        )

    def to_json(self) -> dict:
        out: dict = {
            "name": self.name,
            "field": self.field.to_json(),
            "declared_genus": self.genus,
            "model": model_to_json(self.model) if self.model else None,
            "declared_counts": {str(k): v for k, v in sorted(self.declared_counts.items())},
        }
        if self.declared_lpoly is not None:
            out["declared_lpoly"] = self.declared_lpoly.to_json()
        if self.infinity is not None:
            out["infinity"] = self.infinity
        if self.expect:
            out["expect"] = self.expect
        if self.notes:
            out["notes"] = self.notes
        return out


def load_corpus(path: str | Path | None = None) -> list[CurveEntry]:
    if path is None:
        text = resources.files("dmcurves").joinpath("data/corpus.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("curves", [data])
    return [CurveEntry.from_json(d) for d in data]


def load_curve(path: str | Path) -> CurveEntry:
    """A single-curve file uses the corpus entry schema (or a one-entry corpus)."""
    entries = load_corpus(path)
    if len(entries) != 1:
        raise InvalidModel(f"{path} holds {len(entries)} curves, expected one")
    return entries[0]


__all__ = [
    "ArtinSchreierLike",
    "CurveEntry",
    "CurveModel",
    "Hyperelliptic",
    "PointCounts",
    "SmoothPlane",
    "ValidationReport",
    "count_points",
    "count_profile",
    "enumeration_size",
    "load_corpus",
    "load_curve",
    "make_field",
    "model_from_json",
    "model_to_json",
    "validate_model",
]
