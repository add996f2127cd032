"""Command line driver: every verification as a subcommand.

Exit status: 0 if all checks pass, 1 if a check fails, 2 on a usage error.
``--format structured`` prints a single JSON document (sorted keys, with a
``schema_version`` field) so identical runs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .report import CheckReport

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 2
    mu: str = "symbolic"
    depth: int = 6
    seed: int = 0
    format: str = "text"
    check: str = "all"
    samples: int = 20

    def validate(self):
        if self.n < 2:
            raise UsageError("--n must be >= 2")
        if self.depth < 0:
            raise UsageError("--depth must be >= 0")
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")


def _weight(cfg: RunConfig, allow_symbolic: bool = True):
    from .rootdata import parse_weight

    if cfg.mu.strip() == "symbolic" and not allow_symbolic:
        raise UsageError(f"{cfg.command} needs a numeric --mu")
    try:
        return parse_weight(cfg.mu, cfg.n)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --mu: {exc}") from None


def _info(title: str, **values) -> CheckReport:
    r = CheckReport(title)
    for k, v in values.items():
        r.add(k, True, str(v))
    return r


# -- subcommands -----------------------------------------------------------------

def cmd_roots(cfg: RunConfig) -> List[CheckReport]:
    from .rootdata import rho0, roots

    rs = roots(cfg.n)
    r = CheckReport(f"roots of p~({cfg.n})")
    r.add("even roots", len(rs.even) == cfg.n * (cfg.n - 1), ", ".join(map(str, rs.even)))
    r.add("g_-1 roots", len(rs.minus) == cfg.n * (cfg.n - 1) // 2, ", ".join(map(str, rs.minus)))
    r.add("g_1 roots", len(rs.plus) == cfg.n * (cfg.n + 1) // 2, ", ".join(map(str, rs.plus)))
    r.add("rho0", True, "(" + ", ".join(str(x) for x in rho0(cfg.n)) + ")")
    return [r]


def cmd_delta(cfg: RunConfig) -> List[CheckReport]:
    from .rootdata import delta_poly

    mu = _weight(cfg)
    p = delta_poly(cfg.n)
    if cfg.mu.strip() == "symbolic":
        return [_info(f"Delta, n = {cfg.n}", **{"Delta(mu)": p})]
    return [_info(f"Delta, n = {cfg.n}", **{"Delta(mu)": p(*mu)})]


def cmd_theta(cfg: RunConfig) -> List[CheckReport]:
    from .rootdata import is_typical, theta_poly

    mu = _weight(cfg)
    p = theta_poly(cfg.n)
    if cfg.mu.strip() == "symbolic":
        return [_info(f"Theta, n = {cfg.n}", **{"Theta(mu)": p})]
    return [_info(f"Theta, n = {cfg.n}", **{"Theta(mu)": p(*mu),
                                            "typicality": "typical" if is_typical(mu) else "atypical"})]


def cmd_verma_check(cfg: RunConfig) -> List[CheckReport]:
    from .center import yx_zero_part_check
    from .verma import singular_vector_check, xy_delta_check

    mu = _weight(cfg)
    symbolic = cfg.mu.strip() == "symbolic"
    out = [xy_delta_check(cfg.n, None if symbolic else mu)]
    if cfg.n <= 3:
        out.append(yx_zero_part_check(cfg.n, None if symbolic else mu))
    if symbolic:
        out.append(singular_vector_check(cfg.n))
    elif mu[-1] == mu[-2]:
        out.append(singular_vector_check(cfg.n, mu))
    return out


def cmd_central(cfg: RunConfig) -> List[CheckReport]:
    from .center import MAX_N, central_report, scalar_properties

    if cfg.n > MAX_N:
        raise UsageError(f"central supports n <= {MAX_N}")
    report, cand = central_report(cfg.n, samples=cfg.samples, seed=cfg.seed)
    return [report, scalar_properties(cand, seed=cfg.seed)]


def cmd_char(cfg: RunConfig) -> List[CheckReport]:
    from .chars import char_M, char_M_bruteforce, char_P

    mu = _weight(cfg, allow_symbolic=False)
    r = CheckReport(f"characters, n = {cfg.n}, depth {cfg.depth}")
    prod = char_M(cfg.n, mu, cfg.depth)
    brute = char_M_bruteforce(cfg.n, mu, cfg.depth)
    r.add("ch M product formula = basis count", prod == brute, f"{len(prod.mults)} weights")
    induced, filtered, count = char_P(cfg.n, mu, cfg.depth)
    r.add("ch P induction = sum over gamma", induced == filtered, f"{count} gamma terms")
    r.add("number of gamma terms = 2^(n(n+1)/2)", count == 2 ** (cfg.n * (cfg.n + 1) // 2), str(count))
    r.add("ch M", True, json.dumps(prod.to_list()))
    return [r]


GEOMETRY_CHECKS = ("stabilizers", "q-equations", "q-equations-corrected", "singular-locus",
                   "superdimension")


def cmd_geometry(cfg: RunConfig) -> List[CheckReport]:
    from . import geometry as geo

    checks = GEOMETRY_CHECKS if cfg.check == "all" else (cfg.check,)
    out = []
    n = cfg.n
    for check in checks:
        if check == "stabilizers":
            r = CheckReport(f"stabilizer dimensions, n = {n}")
            regs = geo.random_regular_matrices(n, 100, cfg.seed)
            dims = [geo.stabilizer_dims(q) for q in regs]
            r.add("regular q: (n, 0)", all(d == (n, 0) for d in dims), f"{len(dims)} samples")
            for q in geo.nonregular_matrices(n, cfg.seed):
                a, b = geo.stabilizer_dims(q)
                r.add(f"non-regular q = {[[str(x) for x in row] for row in q]}", a > n and b > 0, f"({a}, {b})")
            out.append(r)
        elif check in ("q-equations", "q-equations-corrected", "singular-locus"):
            if n != 2:
                raise UsageError(f"{check} is only available for n = 2")
            if check == "singular-locus":
                out.append(geo.singular_locus_scan())
            else:
                variant = "printed" if check == "q-equations" else "corrected"
                out.append(geo.check_Q_equations_n2(variant=variant))
        elif check == "superdimension":
            if n > 3:
                raise UsageError("superdimension supports n <= 3")
            r = CheckReport(f"superdimension of Q, n = {n}")
            dims = geo.superdimension_Q(n, seed=cfg.seed)
            r.add("rank of dr at a generic point = (n^2, n^2 - n)", dims == (n * n, n * n - n), str(dims))
            zero = [[0] * n for _ in range(n)]
            ev, od = geo.differential_rank(n, zero)
            r.add("odd rank drops at y = 0", od < n * n - n, f"({ev}, {od})")
            out.append(r)
        else:
            raise UsageError(f"unknown geometry check {check!r}")
    return out


COMMANDS = {
    "roots": cmd_roots,
    "delta": cmd_delta,
    "theta": cmd_theta,
    "verma-check": cmd_verma_check,
    "central": cmd_central,
    "char": cmd_char,
    "geometry": cmd_geometry,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="periplectic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--mu", default="symbolic", help='"p/q,..." or "symbolic"')
        p.add_argument("--depth", type=int, default=6)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--samples", type=int, default=20)
        if name == "geometry":
            p.add_argument("--check", choices=("all",) + GEOMETRY_CHECKS, default="all")
    return parser


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a config; returns (exit status, rendered output)."""
    cfg.validate()
    reports = COMMANDS[cfg.command](cfg)
    ok = all(r.passed for r in reports)
    if cfg.format == "structured":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": cfg.command,
            "config": {"n": cfg.n, "mu": cfg.mu, "depth": cfg.depth, "seed": cfg.seed,
                       "samples": cfg.samples, "check": cfg.check},
            "passed": ok,
            "reports": [r.as_dict() for r in reports],
        }
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        text = "\n".join(r.render() for r in reports) + f"\n{'PASS' if ok else 'FAIL'}"
    return (EXIT_OK if ok else EXIT_FAIL), text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(command=args.command, n=args.n, mu=args.mu, depth=args.depth, seed=args.seed,
                    format=args.format, check=getattr(args, "check", "all"), samples=args.samples)
    try:
        status, text = run(cfg)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
