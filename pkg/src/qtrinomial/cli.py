"""Command-line verification harness: ``list``, ``verify`` and ``series``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .catalog import (
    CATALOG,
    SchemaViolation,
    UnknownIdentity,
    VerificationReport,
    bindings,
    catalog_table,
    get,
    verify_instance,
)
from .poly import ONE, TruncatedSeries
from .qfuncs import MonomialArg, divide_by_pochhammers, poch_infinite, poch_infinite_multi, qpow

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

_RANGE = re.compile(r"^([A-Za-z_]\w*)=(-?\d+)(?:\.\.(-?\d+))?$")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    identity: str
    ranges: dict[str, tuple[int, int]] = field(default_factory=dict)
    order: int | None = None
    format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        for name, (lo, hi) in self.ranges.items():
            if lo > hi:
                raise ConfigError(f"empty range {name}={lo}..{hi}")
        if self.order is not None and self.order < 0:
            raise ConfigError("--order must be nonnegative")
        if self.jobs < 0:
            raise ConfigError("--jobs must be nonnegative")
        if self.format not in ("text", "json"):
            raise ConfigError(f"unknown format {self.format!r}")


def parse_ranges(items: Sequence[str]) -> dict[str, tuple[int, int]]:
    """``["L=0..10", "nu=2"]`` -> ``{"L": (0, 10), "nu": (2, 2)}``."""
    out: dict[str, tuple[int, int]] = {}
    for item in items:
        m = _RANGE.match(item)
        if not m:
            raise ConfigError(f"cannot parse range {item!r}; expected name=lo..hi or name=value")
        name, lo, hi = m.group(1), int(m.group(2)), m.group(3)
        hi = lo if hi is None else int(hi)
        if name in out:
            raise ConfigError(f"range for {name} given twice")
        out[name] = (lo, hi)
    return out


def plan(config: RunConfig) -> list[tuple[str, dict[str, int]]]:
    """Every ``(identity, binding)`` the config asks for, in a fixed order."""
    if config.identity == "all":
        descriptors = catalog_table()
    else:
        descriptors = [get(config.identity)]
    ranges = dict(config.ranges)
    if "order" in ranges and config.order is not None:
        raise ConfigError("give the order either as --order or as order=..., not both")
    jobs = []
    for d in descriptors:
        local = {}
        for name, (lo, hi) in ranges.items():
            if name not in d.param_names:
                if config.identity == "all":
                    continue
                raise ConfigError(f"{d.id} has no parameter {name!r}; parameters: {', '.join(d.param_names)}")
            ps = next(p for p in d.params if p.name == name)
            if config.identity == "all":
                # a shared range applies only where the schema allows it
                lo = lo if ps.lo is None else max(lo, ps.lo)
                hi = hi if ps.hi is None else min(hi, ps.hi)
                if lo > hi:
                    continue
            local[name] = (lo, hi)
        if d.kind == "series" and "order" not in local:
            if config.order is None:
                raise ConfigError(f"{d.id} is a series identity; pass --order N")
            local["order"] = (config.order, config.order)
        jobs.extend((d.id, b) for b in bindings(d, local))
    return jobs


def _run_one(job: tuple[str, dict[str, int]]) -> VerificationReport:
    return verify_instance(*job)


def run(config: RunConfig) -> tuple[list[VerificationReport], float]:
    jobs = plan(config)
    t0 = time.perf_counter()
    workers = config.jobs or (os.cpu_count() or 1)
    if workers == 1 or len(jobs) <= 1:
        reports = [_run_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps submission order, so output does not depend on scheduling
            reports = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return reports, (time.perf_counter() - t0) * 1000.0


def summary(reports: Sequence[VerificationReport], wall_ms: float) -> dict:
    passed = sum(r.passed for r in reports)
    return {"total": len(reports), "passed": passed, "failed": len(reports) - passed, "wall_ms": round(wall_ms, 3)}


def _fmt_binding(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def format_text(reports: Sequence[VerificationReport], wall_ms: float) -> str:
    lines = []
    for r in reports:
        head = f"{r.status.upper():4} {r.identity} {_fmt_binding(r.params)}"
        if r.kind == "series":
            head += f" (verified to order {r.params['order']})" if r.passed else ""
        if r.mismatch is not None:
            m = r.mismatch
            head += f" first mismatch at q^({m.exponent_times_2}/2): lhs {m.lhs_coeff}, rhs {m.rhs_coeff}"
        lines.append(f"{head} [{r.ms:.1f} ms]")
    s = summary(reports, wall_ms)
    lines.append(f"total {s['total']} passed {s['passed']} failed {s['failed']} wall {s['wall_ms']:.1f} ms")
    return "\n".join(lines) + "\n"


def format_json(reports: Sequence[VerificationReport], wall_ms: float) -> str:
    doc = {"records": [r.as_dict() for r in reports], "summary": summary(reports, wall_ms)}
    return json.dumps(doc, indent=2) + "\n"


# --- series ---------------------------------------------------------------

def _inverse_euler(order: int) -> TruncatedSeries:
    return divide_by_pochhammers(ONE, [(qpow(k), 1, 1) for k in range(1, order + 1)], order)


NAMED_SERIES: dict[str, Callable[[int], TruncatedSeries]] = {
    "euler_product": lambda order: poch_infinite(qpow(1), 1, order),
    "partition_generating": _inverse_euler,
    "kr1_product": lambda order: poch_infinite_multi([MonomialArg(-1, 2), MonomialArg(-1, 4)], 6, order)
    * poch_infinite(MonomialArg(-1, 3), 3, order),
}


def series_names() -> list[str]:
    sides = [f"{d.id}.{s}" for d in catalog_table() if d.kind == "series" for s in ("lhs", "rhs")]
    return sorted(NAMED_SERIES) + sides


def series_by_name(name: str, order: int, params: dict[str, int] | None = None) -> TruncatedSeries:
    params = dict(params or {})
    if name in NAMED_SERIES:
        if params:
            raise ConfigError(f"{name} takes no parameters")
        return NAMED_SERIES[name](order)
    ident, _, side = name.rpartition(".")
    if side not in ("lhs", "rhs") or ident not in CATALOG or CATALOG[ident].kind != "series":
        raise ConfigError(f"unknown series {name!r}")
    d = CATALOG[ident]
    params["order"] = order
    b = d.validate(params)
    return (d.lhs if side == "lhs" else d.rhs)(**b)


# --- entry points ---------------------------------------------------------

def cmd_list(out) -> int:
    for d in catalog_table():
        out.write(f"{d.id}\t{d.kind}\t{d.schema_text()}\t{d.anchor}\n")
    return EXIT_OK


def cmd_verify(config: RunConfig, out) -> int:
    reports, wall = run(config)
    out.write(format_json(reports, wall) if config.format == "json" else format_text(reports, wall))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_series(name: str, order: int, params: dict[str, int], out) -> int:
    if order < 0:
        raise ConfigError("--order must be nonnegative")
    s = series_by_name(name, order, params)
    for n, c in enumerate(s.coefficients()):
        out.write(f"{n} {c}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtrinomial", description="Exact verification of q-series identities.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list catalog identities")
    v = sub.add_parser("verify", help="verify identities over parameter ranges")
    v.add_argument("identity", help="catalog id or 'all'")
    v.add_argument("ranges", nargs="*", help="name=lo..hi or name=value")
    v.add_argument("--order", type=int, default=None, help="truncation order for series identities")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=int, default=1, help="worker processes (0 = one per CPU)")
    s = sub.add_parser("series", help="print series coefficients 0..order")
    s.add_argument("name", help="named product or <series id>.lhs / .rhs")
    s.add_argument("params", nargs="*", help="name=value for catalog sides")
    s.add_argument("--order", type=int, required=True)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            return cmd_list(out)
        if args.command == "verify":
            config = RunConfig(args.identity, parse_ranges(args.ranges), args.order, args.format, args.jobs)
            return cmd_verify(config, out)
        ranges = parse_ranges(args.params)
        if any(lo != hi for lo, hi in ranges.values()):
            raise ConfigError("series parameters take single values")
        params = {k: lo for k, (lo, _) in ranges.items()}
        return cmd_series(args.name, args.order, params, out)
    except (ConfigError, SchemaViolation, UnknownIdentity) as exc:
        msg = f"unknown identity {exc.args[0]!r}" if isinstance(exc, UnknownIdentity) else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
