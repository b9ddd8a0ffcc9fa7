"""Parameter sweeps over q or acceleration grids, written as CSV or JSON.

Examples::

    unruh-ent --family helicity --q 0.1,0.5,0.9 --out helicity.csv
    unruh-ent --family number --energy 1 --accel 0.5,1,2 --format json
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Sequence

from .bogoliubov import (
    SeriesKind,
    SqueezeParams,
    min_cutoff_for_tolerance,
    omega_from_energy,
    squeeze_from_omega,
)
from .errors import ConfigError, DomainError, NumericalContractError, UnruhEntanglementError
from .measures import entanglement_report
from .states import StateFamily, build_rho

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class SweepConfig:
    family: StateFamily
    grid_kind: str  # "q_grid" or "acceleration_grid"
    q_values: tuple[float, ...] = ()
    energy: float | None = None
    a_values: tuple[float, ...] = ()
    tol: float = DEFAULT_TOL
    n_max_override: int | None = None
    output_path: str | None = None
    format: str = "csv"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.grid_kind == "q_grid":
            if not self.q_values:
                raise ConfigError("empty q grid")
            for q in self.q_values:
                if not 0.0 < q < 1.0:
                    raise ConfigError(f"q={q} is outside (0, 1)")
        elif self.grid_kind == "acceleration_grid":
            if self.energy is None or not self.energy > 0:
                raise ConfigError(f"acceleration grids need a positive --energy, got {self.energy}")
            if not self.a_values:
                raise ConfigError("empty acceleration grid")
            for a in self.a_values:
                if not a > 0:
                    raise ConfigError(f"acceleration a={a} must be positive")
        else:
            raise ConfigError(f"unknown grid kind {self.grid_kind!r}")
        if not 0.0 < self.tol < 1.0:
            raise ConfigError(f"tol={self.tol} is outside (0, 1)")
        if self.n_max_override is not None and self.n_max_override < 0:
            raise ConfigError(f"--n-max must be nonnegative, got {self.n_max_override}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")

    def grid(self) -> list[tuple[float | None, float | None]]:
        """Grid points as ``(q, a)``; exactly one of the two is set."""
        if self.grid_kind == "q_grid":
            return [(q, None) for q in self.q_values]
        return [(None, a) for a in self.a_values]


@dataclass(frozen=True)
class SweepRow:
    family: str
    q: float
    omega: float
    E: float | None
    a: float | None
    n_max: int
    trace_deficit: float
    log_negativity: float
    S_A: float
    S_B: float
    S_AB: float
    mutual_information: float
    min_pt_eigenvalue: float
    certified_error: float


FIELDS = [f.name for f in fields(SweepRow)]


def choose_cutoff(family: StateFamily, p: SqueezeParams, tol: float) -> int:
    one = min_cutoff_for_tolerance(p, SeriesKind.ONE_PARTICLE, tol)
    if family is StateFamily.HELICITY:
        return one
    # the number state's tail is the mean of both tails
    return max(one, min_cutoff_for_tolerance(p, SeriesKind.VACUUM, tol))


def evaluate_point(cfg: SweepConfig, q: float | None, a: float | None) -> SweepRow:
    if a is not None:
        omega = omega_from_energy(cfg.energy, a)
        p = squeeze_from_omega(omega)
    else:
        p = SqueezeParams.from_q(q)
        omega = p.omega
    n_max = cfg.n_max_override if cfg.n_max_override is not None else choose_cutoff(cfg.family, p, cfg.tol)
    report = entanglement_report(build_rho(cfg.family, p, n_max))
    log.debug("family=%s q=%.6g n_max=%d", cfg.family.value, p.q, n_max)
    return SweepRow(
        family=cfg.family.value,
        q=p.q,
        omega=omega,
        E=cfg.energy if a is not None else None,
        a=a,
        n_max=n_max,
        trace_deficit=report.trace_deficit,
        log_negativity=report.log_negativity,
        S_A=report.S_A,
        S_B=report.S_B,
        S_AB=report.S_AB,
        mutual_information=report.mutual_information,
        min_pt_eigenvalue=report.min_pt_eigenvalue,
        certified_error=report.tail_bound_measures,
    )


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    points = cfg.grid()
    if cfg.jobs == 1:
        return [evaluate_point(cfg, q, a) for q, a in points]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(lambda pt: evaluate_point(cfg, *pt), points))


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        writer.writerow([_fmt(getattr(row, name)) for name in FIELDS])
    return buf.getvalue()


def rows_to_json(rows: Sequence[SweepRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"


def write_rows(rows: Sequence[SweepRow], path: str | None, fmt: str) -> None:
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise ConfigError(f"could not parse number list {text!r}") from None


def read_config_file(path: str) -> dict[str, str]:
    """``key = value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unruh-ent",
        description="Entanglement between an inertial and a uniformly accelerated observer.",
    )
    ap.add_argument("--family", choices=["helicity", "number"])
    ap.add_argument("--q", help="comma-separated q = exp(-pi E/a) values in (0, 1)")
    ap.add_argument("--energy", type=float, help="detector energy E (needed with --accel)")
    ap.add_argument("--accel", help="comma-separated accelerations a > 0")
    ap.add_argument("--tol", type=float, help=f"truncation tail tolerance (default {DEFAULT_TOL:g})")
    ap.add_argument("--n-max", type=int, dest="n_max", help="fixed Fock cutoff, overrides --tol")
    ap.add_argument("--out", help="output path (default stdout)")
    ap.add_argument("--format", choices=["csv", "json"])
    ap.add_argument("--jobs", type=int, help="grid points evaluated concurrently")
    ap.add_argument("--config", help="file of key=value defaults")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def parse_args(argv: Sequence[str] | None = None) -> SweepConfig:
    ns = build_parser().parse_args(argv)
    values: dict[str, str | None] = {}
    if ns.config:
        try:
            values.update(read_config_file(ns.config))
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
    for key in ("family", "q", "energy", "accel", "tol", "n_max", "out", "format", "jobs"):
        flag = getattr(ns, key)
        if flag is not None:
            values[key] = flag

    if values.get("q") is not None and values.get("accel") is not None:
        raise ConfigError("--q and --accel are mutually exclusive")
    family_name = values.get("family") or "helicity"
    try:
        family = StateFamily.parse(str(family_name))
        tol = float(values.get("tol") or DEFAULT_TOL)
        energy = float(values["energy"]) if values.get("energy") is not None else None
        n_max = int(values["n_max"]) if values.get("n_max") is not None else None
        jobs = int(values.get("jobs") or 1)
    except (ValueError, UnruhEntanglementError) as exc:
        raise ConfigError(str(exc)) from None

    common = dict(
        family=family,
        tol=tol,
        n_max_override=n_max,
        output_path=values.get("out"),
        format=str(values.get("format") or "csv"),
        jobs=jobs,
    )
    if values.get("accel") is not None:
        return SweepConfig(
            grid_kind="acceleration_grid",
            energy=energy,
            a_values=_float_list(str(values["accel"])),
            **common,
        )
    if values.get("q") is None:
        raise ConfigError("give a grid with --q or with --energy and --accel")
    return SweepConfig(grid_kind="q_grid", q_values=_float_list(str(values["q"])), **common)


def main(argv: Sequence[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(
        level=logging.DEBUG if ("-v" in args or "--verbose" in args) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = parse_args(args)
        rows = run_sweep(cfg)
        write_rows(rows, cfg.output_path, cfg.format)
    except (ConfigError, DomainError) as exc:
        print(f"unruh-ent: config error: {exc}", file=sys.stderr)
        return 2
    except NumericalContractError as exc:
        print(f"unruh-ent: numerical contract violated: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"unruh-ent: I/O error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
