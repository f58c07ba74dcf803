"""Command-line front end.

    loopmod decompose --n 1 --m 2
    loopmod character --n 2 --m 3 --format csv
    loopmod crystal --n 1 --m 3 --s 0 --r-window 0:5 --format dot
    loopmod maj --n 1 --m 3 --composition 2,1
    loopmod verify --n 1 --m 4 --suite all

Errors are printed to stderr as {"error": {"code": ..., "message": ...}} with
exit status 2; a verify run with discrepancies exits with 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .characters import compare_all
from .checks import SUITES, run_suites
from .combinat import count_maj_by_residue
from .crystal import build_component_crystal
from .drinfeld import DrinfeldTuple, parse_tuple
from .emit import FORMATS, emit
from .errors import ConfigError, LoopmodError
from .loop import decompose

COMMANDS = ("decompose", "character", "crystal", "maj", "verify")
log = logging.getLogger("loopmod")


@dataclass
class RunConfig:
    command: str
    n: int
    m: int
    tuple_spec: str | None = None
    composition: tuple | None = None
    s: int = 0
    r_window: tuple | None = None
    d: int = 0
    fmt: str = "json"
    out: str | None = None
    jobs: int | None = None
    suite: str = "all"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.n < 1:
            raise ConfigError("--n must be >= 1")
        if self.m < 1:
            raise ConfigError("--m must be >= 1")
        if self.composition is not None:
            c = self.composition
            if len(c) != self.n + 1 or sum(c) != self.m or min(c) < 0:
                raise ConfigError(f"composition {c} must have {self.n + 1} non-negative "
                                  f"parts summing to {self.m}")
        if self.r_window is not None and self.r_window[0] > self.r_window[1]:
            raise ConfigError(f"empty grade window {self.r_window}")
        if self.jobs is not None and self.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.suite != "all" and any(x not in SUITES for x in self.suite.split(",")):
            raise ConfigError(f"unknown suite {self.suite!r}; choose from all, "
                              + ", ".join(SUITES))

    def drinfeld_tuple(self) -> DrinfeldTuple:
        if self.tuple_spec is None:
            return DrinfeldTuple.natural_power(self.n, self.m)
        text = self.tuple_spec
        if not text.lstrip().startswith(("roots", "coeffs")):
            try:
                text = Path(text).read_text()
            except OSError as exc:
                raise ConfigError(f"cannot read tuple file {text}: {exc.strerror}") from None
        return parse_tuple(text, self.n, self.m)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ConfigError(f"cannot parse integer list {text!r}") from None


def _window(text: str) -> tuple:
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise ConfigError(f"grade window must look like R0:R1, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="loopmod", description="Quantum loop module decompositions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=True, help="rank of sl_{n+1}")
        sp.add_argument("--m", type=int, required=True, help="order of zeta")
        sp.add_argument("--tuple", dest="tuple_spec",
                        help="Drinfeld tuple, inline ('roots: [[1, z, z^2]]') or a file")
        sp.add_argument("--composition", type=_ints)
        sp.add_argument("--s", type=int, default=0)
        sp.add_argument("--r-window", type=_window)
        sp.add_argument("--d", type=int, default=0, help="grade offset of L(V;d)")
        sp.add_argument("--format", dest="fmt", default=None, choices=FORMATS)
        sp.add_argument("--out")
        sp.add_argument("--jobs", type=int, default=None)
        if name == "verify":
            sp.add_argument("--suite", default="all")
    return p


def config_from_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fmt = ns.fmt or "json"
    return RunConfig(ns.command, ns.n, ns.m, ns.tuple_spec, ns.composition, ns.s,
                     ns.r_window, ns.d, fmt, ns.out, ns.jobs, getattr(ns, "suite", "all"))


def run(cfg: RunConfig):
    """Execute one command; returns (exit status, payload bytes)."""
    jobs = cfg.jobs if cfg.jobs is not None else os.cpu_count()
    status = 0
    if cfg.command == "decompose":
        pi = cfg.drinfeld_tuple()
        comps = [cfg.composition] if cfg.composition else None
        report = decompose(pi, cfg.d, cfg.r_window, comps=comps, jobs=jobs)
    elif cfg.command == "character":
        comps = [cfg.composition] if cfg.composition else None
        report = compare_all(cfg.n, cfg.m, comps=comps, jobs=jobs)
        status = 0 if report.ok else 1
    elif cfg.command == "crystal":
        report = build_component_crystal(cfg.s, cfg.m, cfg.n, cfg.r_window)
    elif cfg.command == "maj":
        if cfg.composition is None:
            raise ConfigError("maj needs --composition")
        report = {"n": cfg.n, "m": cfg.m, "composition": list(cfg.composition),
                  "counts": count_maj_by_residue(cfg.composition, cfg.m)}
    else:
        names = None if cfg.suite == "all" else cfg.suite.split(",")
        results = run_suites(cfg.n, cfg.m, names)
        report = {"n": cfg.n, "m": cfg.m, "suites": {k: {"ok": not v, "discrepancies": v}
                                                     for k, v in results.items()}}
        status = 0 if all(not v for v in results.values()) else 1
    return status, emit(report, cfg.fmt)


def _error_payload(exc: Exception) -> bytes:
    code = exc.code if isinstance(exc, LoopmodError) else "InternalError"
    return (json.dumps({"error": {"code": code, "message": str(exc)}}, sort_keys=True)
            + "\n").encode()


def main(argv=None) -> int:
    level = os.environ.get("LOOPMOD_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        status, payload = run(cfg)
        if cfg.out:
            Path(cfg.out).write_bytes(payload)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.flush()
        return status
    except LoopmodError as exc:
        sys.stderr.buffer.write(_error_payload(exc))
        return 2
    except (ValueError, ArithmeticError) as exc:
        log.debug("unexpected error", exc_info=True)
        sys.stderr.buffer.write(_error_payload(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
