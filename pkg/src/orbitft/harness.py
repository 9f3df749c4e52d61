"""Stability scans of the expansion routes and report I/O."""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import math
from dataclasses import dataclass

from .errors import DomainError, QuadratureError, SeriesConvergenceError
from .momentum import default_representation, expansion_ft_terms, ft_closed_form, FtRepresentation
from .oracle import QuadratureConfig, ft_numeric
from .orbitals import Basis, Family, OrbitalModel, expand

log = logging.getLogger(__name__)

TINY = 1e-300
MAX_SCAN_N = 60
ORACLE_N_LIMIT = 12
ORACLE_CONFIG = QuadratureConfig(rel_tol=1e-12)

ROW_FIELDS = ("family", "n", "l", "p", "route", "value_re", "value_im",
              "rel_err_vs_oracle", "digits_lost")


class Route(enum.Enum):
    SLATER_EXPANSION = "slater_expansion"
    BFUNCTION_EXPANSION = "bfunction_expansion"
    CLOSED_FORM = "closed_form"


ROUTE_ORDER = {r: i for i, r in enumerate(Route)}


def digits_lost(terms) -> float:
    """log10(sum |t| / |sum t|), clamped at zero; exact cancellation is guarded by TINY."""
    terms = [complex(t) for t in terms]
    if not terms:
        raise DomainError("digits_lost needs at least one term")
    magnitude = math.fsum(abs(t) for t in terms)
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    if magnitude == 0:
        return 0.0
    return max(0.0, math.log10(magnitude / max(abs(total), TINY)))


@dataclass(frozen=True)
class StabilityRow:
    family: str
    n: int
    l: int
    p: float
    route: str
    value: complex
    rel_err_vs_oracle: float
    digits_lost: float

    def as_record(self) -> dict:
        return {"family": self.family, "n": self.n, "l": self.l, "p": self.p, "route": self.route,
                "value_re": self.value.real, "value_im": self.value.imag,
                "rel_err_vs_oracle": self.rel_err_vs_oracle, "digits_lost": self.digits_lost}

    @classmethod
    def from_record(cls, rec: dict) -> "StabilityRow":
        return cls(str(rec["family"]), int(rec["n"]), int(rec["l"]), _num(rec["p"]), str(rec["route"]),
                   complex(_num(rec["value_re"]), _num(rec["value_im"])),
                   _num(rec["rel_err_vs_oracle"]), _num(rec["digits_lost"]))


@dataclass(frozen=True)
class ScanConfig:
    """Scan grid.

    ``p_list`` entries are multiples of the orbital's decay constant beta
    (Z/n for hydrogen) unless ``p_relative`` is false, in which case they
    are absolute momenta in inverse Bohr.
    """

    family: Family = Family.HYDROGEN
    n_range: tuple[int, int] = (1, 30)
    l_list: tuple[int, ...] = (0,)
    exponent: float = 1.0
    p_list: tuple[float, ...] = (0.8,)
    routes: tuple[Route, ...] = tuple(Route)
    output_format: str = "csv"
    p_relative: bool = True
    k: float | None = None
    slater_rep: FtRepresentation = FtRepresentation.STF_GEGENBAUER

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "routes", tuple(Route(r) for r in self.routes))
        object.__setattr__(self, "slater_rep", FtRepresentation(self.slater_rep))
        lo, hi = self.n_range
        if not (1 <= lo <= hi):
            raise DomainError("n_range must be a nonempty range starting at n >= 1")
        if hi > MAX_SCAN_N:
            raise DomainError(f"n_range maximum must be <= {MAX_SCAN_N}")
        if not self.l_list or not self.p_list or not self.routes:
            raise DomainError("l_list, p_list and routes must be nonempty")
        if self.output_format not in ("csv", "json"):
            raise DomainError("output format must be csv or json")
        if self.family not in (Family.HYDROGEN, Family.STURMIAN, Family.LAMBDA, Family.GUSEINOV):
            raise DomainError("scans need a family with both expansions")

    @classmethod
    def from_dict(cls, d: dict) -> "ScanConfig":
        known = {"family", "n_range", "l_list", "exponent", "p_list", "routes", "output_format",
                 "p_relative", "k", "slater_rep"}
        unknown = set(d) - known
        if unknown:
            raise DomainError(f"unknown scan keys: {sorted(unknown)}")
        kw = dict(d)
        for key in ("n_range", "l_list", "p_list", "routes"):
            if key in kw:
                kw[key] = tuple(kw[key])
        return cls(**kw)


def _num(x) -> float:
    if x is None or x == "":
        return math.nan
    return float(x)


def _rel_err(value: complex, ref: complex) -> float:
    return abs(value - ref) / max(abs(ref), TINY)


def _reference(model: OrbitalModel, p: float) -> complex:
    """Two-tier reference: quadrature up to n = 12, Gegenbauer-type closed form above."""
    if model.n <= ORACLE_N_LIMIT:
        return ft_numeric(model, p, ORACLE_CONFIG)
    return ft_closed_form(model, p, default_representation(model))


def _scan_point(cfg: ScanConfig, n: int, l: int, p_factor: float) -> list[StabilityRow]:
    model = OrbitalModel.make(cfg.family, n, l, 0, cfg.exponent, k=cfg.k)
    p = p_factor * model.beta if cfg.p_relative else p_factor
    rows = []
    try:
        ref = _reference(model, p)
    except (DomainError, QuadratureError, SeriesConvergenceError) as exc:
        log.warning("reference failed at n=%d l=%d p=%g: %s", n, l, p, exc)
        ref = complex(math.nan, math.nan)
    for route in sorted(cfg.routes, key=ROUTE_ORDER.get):
        try:
            if route is Route.CLOSED_FORM:
                value = ft_closed_form(model, p)
                lost = 0.0
            else:
                basis = Basis.SLATER if route is Route.SLATER_EXPANSION else Basis.BFUNCTION
                terms = expansion_ft_terms(expand(model, basis), p, cfg.slater_rep)
                value = 0j
                for t in terms:
                    value += t
                lost = digits_lost(terms)
            err = _rel_err(value, ref)
        except (DomainError, QuadratureError, SeriesConvergenceError) as exc:
            log.warning("%s failed at n=%d l=%d p=%g: %s", route.value, n, l, p, exc)
            value, err, lost = complex(math.nan, math.nan), math.nan, math.nan
        rows.append(StabilityRow(cfg.family.value, n, l, p, route.value, value, err, lost))
    return rows


def run_stability_scan(cfg: ScanConfig) -> list[StabilityRow]:
    """Evaluate every route at every grid point; ordered by (n, l, p, route)."""
    rows = []
    lo, hi = cfg.n_range
    for n in range(lo, hi + 1):
        for l in sorted(cfg.l_list):
            if l > n - 1:
                continue
            for pf in sorted(cfg.p_list):
                rows.extend(_scan_point(cfg, n, l, pf))
    return rows


def slope(xs, ys) -> float:
    """Least-squares slope of ys against xs."""
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    return math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx


# -- reports -----------------------------------------------------------------

def fmt_real(x: float) -> str:
    return format(x, ".17g")


class _Real(str):
    pass


def _prepare(o):
    """Tag finite floats for 17-digit output; NaN and infinities become None."""
    if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
        return o
    if isinstance(o, float):
        return _Real(fmt_real(o)) if math.isfinite(o) else None
    if isinstance(o, complex):
        return {"re": _prepare(o.real), "im": _prepare(o.imag)}
    if isinstance(o, dict):
        return {k: _prepare(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_prepare(v) for v in o]
    return o


def dumps(obj, **kw) -> str:
    """JSON text with every real written to 17 significant digits."""
    reals = []

    def tag(o):
        if isinstance(o, _Real):
            reals.append(str(o))
            return f"\x00{len(reals) - 1}\x00"
        if isinstance(o, dict):
            return {k: tag(v) for k, v in o.items()}
        if isinstance(o, list):
            return [tag(v) for v in o]
        return o

    text = json.dumps(tag(_prepare(obj)), **kw)
    for i, r in enumerate(reals):
        text = text.replace(f'"\\u0000{i}\\u0000"', r, 1)
    return text


def rows_to_json(rows) -> str:
    return dumps([r.as_record() for r in rows], indent=1)


def rows_from_json(text: str) -> list[StabilityRow]:
    return [StabilityRow.from_record(rec) for rec in json.loads(text)]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(ROW_FIELDS)
    for r in rows:
        rec = r.as_record()
        w.writerow([fmt_real(v) if isinstance(v, float) else v for v in (rec[f] for f in ROW_FIELDS)])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[StabilityRow]:
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if tuple(reader.fieldnames or ()) != ROW_FIELDS:
        raise DomainError("unexpected CSV header")
    return [StabilityRow.from_record(rec) for rec in reader]


def write_report(rows, path: str, fmt: str | None = None) -> str:
    fmt = fmt or ("json" if str(path).endswith(".json") else "csv")
    text = rows_to_json(rows) if fmt == "json" else rows_to_csv(rows)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return fmt


def read_report(path: str) -> list[StabilityRow]:
    with open(path, newline="") as fh:
        text = fh.read()
    return rows_from_json(text) if str(path).endswith(".json") else rows_from_csv(text)
