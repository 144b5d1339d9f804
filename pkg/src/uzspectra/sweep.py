"""Sweep configuration, task runners and output writers.

A sweep is described by one JSON document::

    {
      "task": "family-sweep",
      "rep": {"dim": 5, "z": 0.0},
      "family": {"mu_plus": -1.0, "mu_minus": 1.0},
      "grids": {"nu": [-3.0, 3.0, 601]},
      "output": {"path": "fig1.csv", "format": "csv"}
    }

Any leaf can be overridden with ``dotted.path=value``. Grid points are
evaluated concurrently; rows are assembled in grid order so identical
configs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from contextlib import suppress
from dataclasses import dataclass, field
from itertools import product
from math import isfinite
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    Final,
    List,
    Literal,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
from numpy.typing import NDArray

from .config import Tolerances
from .errors import ConfigError, GridPointError, UzSpectraError
from .hints import HintCoerce, parse_leaf
from .linalg import ComplexMatrix, sort_spectrum
from .qdot import QdotParams, QdotSpectrum, comparison_rows, sweep_compare
from .report import Check, Report, check
from .reps import (
    GeneratorTriple,
    RepSpec,
    boson_realisation,
    build_deformed_generators,
    casimir_value,
    pt_transform,
    triple_document,
    verify_casimir,
    verify_commutation,
    verify_hopf_axioms,
)
from .similarity import verify_adjoint_identities
from .spectra import (
    FamilyParams,
    Phase,
    PolyHamiltonianSpec,
    SpectrumResult,
    analytic_spectrum_family,
    analytic_spectrum_polynomial,
    baseline_spec,
    build_family_H,
    build_polynomial_H,
    classify_phase_and_scan,
    cos_spec,
    limit_hamiltonian_family,
    numeric_spectrum,
    phase_from_discriminant,
    sin_spec,
)

logger: logging.Logger = logging.getLogger(__name__)

Task = Literal["repgen", "verify", "family-sweep", "ep-scan", "poly-sweep",
               "qdot-sweep"]
TASKS: Final[Tuple[str, ...]] = ("repgen", "verify", "family-sweep",
                                 "ep-scan", "poly-sweep", "qdot-sweep")

GRID_SYMBOLS: Final[Dict[str, Tuple[str, ...]]] = {
    "repgen": (),
    "verify": (),
    "family-sweep": ("nu", "mu_0", "mu_plus", "mu_minus", "z"),
    "ep-scan": ("nu", "mu_0", "mu_plus", "mu_minus"),
    "poly-sweep": ("z", "lam", "mu_minus"),
    "qdot-sweep": ("eps", ),
}
MAX_GRIDS: Final[Dict[str, int]] = {
    "family-sweep": 2,
    "ep-scan": 1,
    "poly-sweep": 2,
    "qdot-sweep": 1,
}
QDOT_HEADER: Final[Tuple[str, ...]] = ("eps", "level", "exact", "approx",
                                       "deviation")

Point = Tuple[Tuple[str, float], ...]


@dataclass(frozen=True)
class GridSpec:
    """``count`` evenly spaced values from ``start`` to ``stop``."""

    start: float
    stop: float
    count: int = 1

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ConfigError(f"count must be >= 1, got {self.count}")
        if not (isfinite(self.start) and isfinite(self.stop)):
            raise ConfigError("start and stop must be finite")

    def values(self) -> Tuple[float, ...]:
        if self.count == 1:
            return (self.start, )
        return tuple(
            float(v) for v in np.linspace(self.start, self.stop, self.count))


@dataclass(frozen=True)
class RepBlock:
    """Representation parameters; ``beta`` defaults to the irrep value."""

    dim: int = 2
    beta: Optional[float] = None
    z: float = 0.0
    realisation: Literal["matrix", "boson"] = "matrix"

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ConfigError(f"must be >= 1, got {self.dim}", path="dim")

    def spec(self, z: Optional[float] = None,
             dim: Optional[int] = None) -> RepSpec:
        d: int = self.dim if dim is None else dim
        return RepSpec(z=self.z if z is None else z,
                       beta=float(1 - d) if self.beta is None else self.beta,
                       dim=d)

    def triple(self, z: Optional[float] = None,
               dim: Optional[int] = None) -> GeneratorTriple:
        spec: RepSpec = self.spec(z, dim)
        if self.realisation == "boson":
            return boson_realisation(spec)
        return build_deformed_generators(spec)


@dataclass(frozen=True)
class FamilyBlock:
    """Couplings of ``mu- J- + mu+ [J0, J+] + mu0 J0``.

    A ``nu`` grid sets ``mu_0 = nu * mu_minus``, the ``h+-(mu, nu)``
    parametrisation.
    """

    mu_plus: float = -1.0
    mu_minus: float = 1.0
    mu_0: float = 0.0
    g: Optional[Tuple[float, ...]] = None
    matrix: Literal["full", "limit"] = "full"
    spectrum: Literal["numeric", "analytic"] = "numeric"

    def params(self, point: Mapping[str, float]) -> FamilyParams:
        mu_minus: float = point.get("mu_minus", self.mu_minus)
        mu_0: float = (point["nu"] * mu_minus if "nu" in point else
                       point.get("mu_0", self.mu_0))
        return FamilyParams(mu_plus=point.get("mu_plus", self.mu_plus),
                            mu_minus=mu_minus,
                            mu_0=mu_0,
                            g=self.g)


@dataclass(frozen=True)
class PolyBlock:
    """``mu- J- + p(J0)`` with ``p`` a sin/cos series or explicit."""

    kind: Literal["sin", "cos", "baseline", "coefficients"] = "sin"
    mu_minus: float = 1.0
    lam: float = 1.0
    coefficients: Tuple[float, ...] = ()
    constant: float = 0.0
    spectrum: Literal["numeric", "analytic"] = "numeric"

    def poly_spec(self, point: Mapping[str, float], dim: int,
                  tol: Tolerances) -> PolyHamiltonianSpec:
        mu_minus: float = point.get("mu_minus", self.mu_minus)
        lam: float = point.get("lam", self.lam)
        if self.kind == "sin":
            return sin_spec(mu_minus, lam, dim, tol)
        if self.kind == "cos":
            return cos_spec(mu_minus, lam, dim, tol)
        if self.kind == "baseline":
            return baseline_spec(mu_minus)
        return PolyHamiltonianSpec(mu_minus=mu_minus,
                                   coefficients=self.coefficients,
                                   constant=self.constant)


@dataclass(frozen=True)
class QdotBlock:
    deltaL: float = 3.0
    deltaR: float = 95.8
    t1: float = 1.8
    t2: float = 7.1
    t3: float = 11.5
    t4: float = 6.3
    effective: bool = False

    def params(self) -> QdotParams:
        return QdotParams(deltaL=self.deltaL,
                          deltaR=self.deltaR,
                          t1=self.t1,
                          t2=self.t2,
                          t3=self.t3,
                          t4=self.t4)


@dataclass(frozen=True)
class VerifyBlock:
    """Suite selection for ``verify``.

    Empty ``dims``/``zs`` fall back to ``rep.dim``/``rep.z``. The Hopf
    suite runs only up to ``hopf_max_dim``.
    """

    dims: Tuple[int, ...] = ()
    zs: Tuple[float, ...] = ()
    alpha: float = 0.5
    hopf: bool = True
    hopf_max_dim: int = 6
    adjoint: bool = True

    def __post_init__(self) -> None:
        for d in self.dims:
            if d < 1:
                raise ConfigError(f"dimensions must be >= 1, got {d}",
                                  path="dims")


@dataclass(frozen=True)
class OutputBlock:
    """Output path and format; the format defaults by task."""

    path: Optional[str] = None
    format: Optional[Literal["csv", "json"]] = None


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep document."""

    task: Task
    rep: RepBlock = field(default_factory=RepBlock)
    family: FamilyBlock = field(default_factory=FamilyBlock)
    poly: PolyBlock = field(default_factory=PolyBlock)
    qdot: QdotBlock = field(default_factory=QdotBlock)
    verify: VerifyBlock = field(default_factory=VerifyBlock)
    grids: Dict[str, GridSpec] = field(default_factory=dict)
    output: OutputBlock = field(default_factory=OutputBlock)
    workers: int = 1
    seed: int = 0
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ConfigError("must be >= 1", path="workers")
        allowed: Tuple[str, ...] = GRID_SYMBOLS[self.task]
        for symbol in self.grids:
            if symbol not in allowed:
                raise ConfigError(
                    f"not a grid symbol of {self.task} "
                    f"(allowed: {', '.join(allowed) or 'none'})",
                    path=f"grids.{symbol}")
        limit: int = MAX_GRIDS.get(self.task, 0)
        if limit and not self.grids:
            raise ConfigError(f"{self.task} needs at least one grid",
                              path="grids")
        if len(self.grids) > limit and limit:
            raise ConfigError(f"{self.task} sweeps at most {limit} symbols",
                              path="grids")
        if self.task == "repgen" and self.output.format == "csv":
            raise ConfigError("repgen writes json only",
                              path="output.format")
        if (self.task == "family-sweep" and self.family.spectrum == "analytic"
                and self.rep.beta is not None
                and self.rep.beta != 1 - self.rep.dim):
            raise ConfigError("analytic spectrum needs an irrep",
                              path="rep.beta")

    @property
    def output_format(self) -> str:
        if self.output.format:
            return self.output.format
        return "json" if self.task == "repgen" else "csv"

    @property
    def output_path(self) -> Optional[str]:
        if self.output.path:
            return self.output.path
        if self.task == "verify":
            return None
        return f"{self.task}.{self.output_format}"

    def grid_points(self) -> List[Point]:
        """Cartesian product of the grids, first grid outermost."""
        names: List[str] = list(self.grids)
        axes: List[Tuple[float, ...]] = [
            self.grids[n].values() for n in names
        ]
        return [tuple(zip(names, values)) for values in product(*axes)]


def set_leaf(doc: Dict[str, Any], dotted: str, value: Any) -> None:
    """Set ``doc[a][b][c] = value`` for ``dotted = "a.b.c"``."""
    keys: List[str] = dotted.split(".")
    node: Dict[str, Any] = doc
    for depth, key in enumerate(keys[:-1]):
        child: Any = node.setdefault(key, {})
        if not isinstance(child, dict):
            raise ConfigError("cannot descend into a leaf",
                              path=".".join(keys[:depth + 1]))
        node = child
    node[keys[-1]] = value


def apply_overrides(doc: Dict[str, Any],
                    overrides: Sequence[str]) -> Dict[str, Any]:
    """Apply ``a.b.c=value`` overrides to a copy of ``doc``.

    Values are parsed as JSON when possible (``3``, ``[0, 1, 5]``,
    ``true``), else kept as strings.
    """
    out: Dict[str, Any] = json.loads(json.dumps(doc))
    for item in overrides:
        key, sep, text = item.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"override {item!r} is not key=value")
        set_leaf(out, key.strip(), parse_leaf(text))
    return out


def load_document(path: Optional[str]) -> Dict[str, Any]:
    """Read a JSON config document; None gives an empty document."""
    if path is None:
        return {}
    try:
        doc: Any = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc.msg} "
                          f"(line {exc.lineno})") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    return doc


def build_config(doc: Mapping[str, Any]) -> SweepConfig:
    """Validate a document into a :class:`SweepConfig`.

    Raises:
        ConfigError: Naming the dotted path of the first bad field.
    """
    return HintCoerce.build(SweepConfig, doc)


def load_config(path: Optional[str],
                overrides: Sequence[str] = ()) -> SweepConfig:
    return build_config(apply_overrides(load_document(path), overrides))


@dataclass(frozen=True)
class OutputRecord:
    """One eigenvalue at one grid point."""

    params: Point
    index: int
    re: float
    im: float
    phase: str
    discriminant: Optional[float] = None

    def as_row(self) -> Dict[str, Any]:
        row: Dict[str, Any] = dict(self.params)
        row.update(index=self.index, re=self.re, im=self.im,
                   phase=self.phase)
        if self.discriminant is not None:
            row["discriminant"] = self.discriminant
        return row


def record_header(symbols: Sequence[str],
                  with_discriminant: bool) -> Tuple[str, ...]:
    """``param1[,param2],index,re,im,phase[,discriminant]``."""
    tail: Tuple[str, ...] = ("discriminant", ) if with_discriminant else ()
    return tuple(symbols) + ("index", "re", "im", "phase") + tail


def _snap(values: NDArray[np.complex128],
          tol: Tolerances) -> NDArray[np.complex128]:
    """Zero imaginary parts below ``tol.real`` times the spectrum scale."""
    scale: float = max(1.0, float(np.abs(values).max()))
    im: NDArray[np.float64] = np.where(
        np.abs(values.imag) <= tol.real * scale, 0.0, values.imag)
    return sort_spectrum(values.real + 1j * im)


def spectrum_records(point: Point, spectrum: SpectrumResult,
                     tol: Tolerances) -> List[OutputRecord]:
    values: NDArray[np.complex128] = _snap(spectrum.eigenvalues, tol)
    return [
        OutputRecord(params=point,
                     index=i,
                     re=float(v.real),
                     im=float(v.imag),
                     phase=spectrum.phase.value,
                     discriminant=spectrum.discriminant)
        for i, v in enumerate(values)
    ]


def _format_cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(header: Sequence[str],
               rows: Sequence[Mapping[str, Any]]) -> str:
    """CSV text with ``repr`` floats and ``\\n`` line endings."""
    buffer: io.StringIO = io.StringIO()
    writer: csv.DictWriter = csv.DictWriter(buffer,
                                            fieldnames=list(header),
                                            lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _format_cell(row[k]) for k in header})
    return buffer.getvalue()


def render_json(document: Any) -> str:
    return json.dumps(document, indent=2) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` via a temporary file renamed over ``path``."""
    target: Path = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent,
                               prefix=f".{target.name}.",
                               suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        with suppress(FileNotFoundError):
            os.unlink(tmp)
        raise


def write_table(path: str, fmt: str, header: Sequence[str],
                rows: Sequence[Mapping[str, Any]]) -> None:
    if fmt == "csv":
        write_atomic(path, render_csv(header, rows))
    else:
        write_atomic(path,
                     render_json([{k: r[k] for k in header} for r in rows]))


@dataclass(frozen=True)
class RunOutcome:
    """What a task produced.

    Attributes:
        task: Task name.
        points: Grid size (1 for repgen, suites run for verify).
        path: Output file, if one was written.
        reports: Verification reports (verify and repgen).
        notes: Extra summary items, e.g. located EPs.
    """

    task: str
    points: int
    path: Optional[str]
    reports: Tuple[Report, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def summary(self) -> str:
        where: str = self.path or "-"
        extra: str = "".join(f" {n}" for n in self.notes)
        return f"{self.task}: {self.points} grid points -> {where}{extra}"


def _evaluate(config: SweepConfig, points: Sequence[Point],
              fn: Callable[[Point], List[OutputRecord]]
              ) -> List[OutputRecord]:
    """Map ``fn`` over grid points, wrapping numerical failures."""

    def guarded(point: Point) -> List[OutputRecord]:
        try:
            return fn(point)
        except ConfigError:
            raise
        except (UzSpectraError, ArithmeticError) as exc:
            raise GridPointError(f"{type(exc).__name__}: {exc}",
                                 point=point) from exc

    if config.workers == 1:
        batches: List[List[OutputRecord]] = [guarded(p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            batches = list(pool.map(guarded, points))
    logger.debug("%s: evaluated %d grid points", config.task, len(points))
    return [record for batch in batches for record in batch]


def _family_point(config: SweepConfig, point: Point) -> List[OutputRecord]:
    values: Dict[str, float] = dict(point)
    tol: Tolerances = config.tolerances
    params: FamilyParams = config.family.params(values)
    z: float = values.get("z", config.rep.z)
    if config.family.spectrum == "analytic":
        spectrum: SpectrumResult = analytic_spectrum_family(
            params, config.rep.dim, z, tol)
    else:
        triple: GeneratorTriple = config.rep.triple(z)
        h: ComplexMatrix = (
            build_family_H(params, triple) if config.family.matrix == "full"
            else limit_hamiltonian_family(params, triple, tol=tol))
        phase: Optional[Phase] = (phase_from_discriminant(params, tol)
                                  if params.g is None else None)
        spectrum = numeric_spectrum(h, params.discriminant, phase, tol)
    return spectrum_records(point, spectrum, tol)


def run_family_sweep(config: SweepConfig) -> RunOutcome:
    points: List[Point] = config.grid_points()
    records: List[OutputRecord] = _evaluate(
        config, points, lambda p: _family_point(config, p))
    header: Tuple[str, ...] = record_header(list(config.grids), True)
    return _write_records(config, points, header, records)


def run_ep_scan(config: SweepConfig) -> RunOutcome:
    """Phase map along one grid with EPs located by bisection."""
    symbol, grid = next(iter(config.grids.items()))
    axis: Tuple[float, ...] = grid.values()
    points: List[Point] = config.grid_points()
    tol: Tolerances = config.tolerances
    params_grid: List[FamilyParams] = [
        config.family.params(dict(p)) for p in points
    ]
    try:
        scan = classify_phase_and_scan(params_grid,
                                       config.rep.dim,
                                       config.rep.z,
                                       triple=config.rep.triple(),
                                       matrix=config.family.matrix,
                                       tol=tol)
    except UzSpectraError as exc:
        raise GridPointError(f"{type(exc).__name__}: {exc}",
                             point=(("z", config.rep.z), )) from exc
    records: List[OutputRecord] = []
    for point, scanned in zip(points, scan.points):
        records.extend(spectrum_records(point, scanned.spectrum, tol))
    located: List[str] = []
    for ep in scan.ep_locus:
        i: int = ep.after_index
        nxt: float = axis[min(i + 1, len(axis) - 1)]
        at: float = axis[i] + ep.fraction * (nxt - axis[i])
        located.append(f"{at:.12g}")
        logger.info("EP at %s=%r", symbol, at)
    header: Tuple[str, ...] = record_header([symbol], True)
    outcome: RunOutcome = _write_records(config, points, header, records)
    return RunOutcome(task=outcome.task,
                      points=outcome.points,
                      path=outcome.path,
                      notes=(f"EPs at {symbol}=[{', '.join(located)}]", ))


def _poly_point(config: SweepConfig, point: Point) -> List[OutputRecord]:
    values: Dict[str, float] = dict(point)
    tol: Tolerances = config.tolerances
    dim: int = config.rep.dim
    z: float = values.get("z", config.rep.z)
    spec: PolyHamiltonianSpec = config.poly.poly_spec(values, dim, tol)
    if config.poly.spectrum == "analytic":
        spectrum: SpectrumResult = analytic_spectrum_polynomial(
            spec, dim, z, tol)
    else:
        spectrum = numeric_spectrum(
            build_polynomial_H(spec, config.rep.triple(z)), tol=tol)
    return spectrum_records(point, spectrum, tol)


def run_poly_sweep(config: SweepConfig) -> RunOutcome:
    points: List[Point] = config.grid_points()
    records: List[OutputRecord] = _evaluate(
        config, points, lambda p: _poly_point(config, p))
    header: Tuple[str, ...] = record_header(list(config.grids), False)
    return _write_records(config, points, header, records)


def _require_path(config: SweepConfig) -> str:
    path: Optional[str] = config.output_path
    if path is None:
        raise ConfigError("required", path="output.path")
    return path


def _write_records(config: SweepConfig, points: Sequence[Point],
                   header: Tuple[str, ...],
                   records: Sequence[OutputRecord]) -> RunOutcome:
    path: str = _require_path(config)
    write_table(path, config.output_format, header,
                [r.as_row() for r in records])
    return RunOutcome(task=config.task, points=len(points), path=path)


def qdot_grid(config: SweepConfig) -> List[float]:
    """Detuning grid; ``eps = 0`` is dropped when ``H_eff`` is requested."""
    grid: List[float] = [p[0][1] for p in config.grid_points()]
    if config.qdot.effective and 0.0 in grid:
        logger.warning("excluded eps=0 from the grid: H_eff is singular")
        grid = [e for e in grid if e != 0.0]
    return grid


def run_qdot_sweep(config: SweepConfig) -> RunOutcome:
    grid: List[float] = qdot_grid(config)
    if not grid:
        raise ConfigError("no detuning left after excluding eps=0",
                          path="grids.eps")
    try:
        spectra: Tuple[QdotSpectrum, ...] = sweep_compare(
            config.qdot.params(),
            grid,
            with_effective=config.qdot.effective,
            tol=config.tolerances)
    except UzSpectraError as exc:
        raise GridPointError(f"{type(exc).__name__}: {exc}",
                             point=(("eps_min", min(grid)),
                                    ("eps_max", max(grid)))) from exc
    rows: List[Dict[str, Any]] = [{
        "eps": r.eps,
        "level": r.level,
        "exact": r.exact,
        "approx": r.approx,
        "deviation": r.deviation,
    } for r in comparison_rows(spectra)]
    header: Tuple[str, ...] = QDOT_HEADER
    if config.qdot.effective:
        header = header + ("effective", )
        for row, spectrum_row in zip(rows, _effective_cells(spectra)):
            row["effective"] = spectrum_row
    path: str = _require_path(config)
    write_table(path, config.output_format, header, rows)
    return RunOutcome(task=config.task, points=len(grid), path=path)


def _effective_cells(spectra: Sequence[QdotSpectrum]) -> List[float]:
    cells: List[float] = []
    for s in spectra:
        if s.effective is not None:
            cells.extend(float(v) for v in s.effective)
    return cells


def _pt_report(triple: GeneratorTriple, tol: Tolerances) -> Report:
    bound: float = tol.commutation * triple.scale()
    checks: List[Check] = [
        check(f"PT {name} = {name}", pt_transform(x) - x, bound)
        for name, x in triple.by_name().items()
    ]
    return Report.of(f"pt d={triple.dim} z={triple.z}", checks)


def run_verify(config: SweepConfig) -> RunOutcome:
    """Algebra, Hopf, adjoint and PT suites over ``dims x zs``."""
    tol: Tolerances = config.tolerances
    block: VerifyBlock = config.verify
    dims: Tuple[int, ...] = block.dims or (config.rep.dim, )
    zs: Tuple[float, ...] = block.zs or (config.rep.z, )
    reports: List[Report] = []
    for dim, z in product(dims, zs):
        triple: GeneratorTriple = config.rep.triple(z, dim)
        reports.append(verify_commutation(triple, tol))
        reports.append(verify_casimir(triple, tol))
        reports.append(_pt_report(triple, tol))
        if block.adjoint:
            reports.append(verify_adjoint_identities(triple, block.alpha,
                                                     tol))
        if block.hopf and dim <= block.hopf_max_dim:
            reports.append(verify_hopf_axioms(triple, tol))
    failed: int = sum(not r.passed for r in reports)
    return RunOutcome(task=config.task,
                      points=len(dims) * len(zs),
                      path=None,
                      reports=tuple(reports),
                      notes=(f"{len(reports)} suites, {failed} failed", ))


def run_repgen(config: SweepConfig) -> RunOutcome:
    """Write the generator matrices with Casimir and relation residuals."""
    tol: Tolerances = config.tolerances
    triple: GeneratorTriple = config.rep.triple()
    commutation: Report = verify_commutation(triple, tol)
    casimir: Report = verify_casimir(triple, tol)
    doc: Dict[str, Any] = triple_document(triple)
    doc["realisation"] = config.rep.realisation
    doc["casimir"] = {
        "value": casimir_value(triple.spec.beta),
        "residuals": casimir.residuals(),
    }
    doc["commutation"] = commutation.residuals()
    doc["seed"] = config.seed
    path: str = _require_path(config)
    write_atomic(path, render_json(doc))
    return RunOutcome(task=config.task,
                      points=1,
                      path=path,
                      reports=(commutation, casimir))


RUNNERS: Final[Dict[str, Callable[[SweepConfig], RunOutcome]]] = {
    "repgen": run_repgen,
    "verify": run_verify,
    "family-sweep": run_family_sweep,
    "ep-scan": run_ep_scan,
    "poly-sweep": run_poly_sweep,
    "qdot-sweep": run_qdot_sweep,
}


def run(config: SweepConfig) -> RunOutcome:
    """Dispatch ``config`` to its task runner."""
    logger.info("running %s (seed=%d, workers=%d)", config.task,
                config.seed, config.workers)
    return RUNNERS[config.task](config)
