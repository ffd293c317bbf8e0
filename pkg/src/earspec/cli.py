"""Command-line entry point: ``earspec <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed
input line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .ears import EarError, find_bipartite_ear_decomposition, find_odd_ear_decomposition
from .extremal import (
    CLASS_BIPARTITE,
    CLASS_FC,
    MAX_BIPARTITE_N,
    MAX_FC_N,
    enumerate_minimal_factor_critical,
    enumerate_minimal_mc_bipartite,
    gen_friendship,
    gen_p3star,
    verify_theorem_1,
    verify_theorem_2,
)
from .graph import Graph6Error, GraphError, cycle_graph, parse_graph6, to_graph6
from .matching import (
    is_factor_critical,
    is_matching_covered,
    is_minimal_factor_critical,
    is_minimal_matching_covered,
)
from .spectral import SpectralError, spectral_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
DEFAULT_TOL = 1e-12
FORMATS = ("human", "json", "tsv")


class UsageError(Exception):
    pass


class InputError(Exception):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str
    format: str
    tolerance: float
    max_n: int
    jobs: int

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format}")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")


def fmt_float(x: float) -> float:
    """Round to 12 significant digits for stable output."""
    return float(f"{x:.12g}")


def _round_floats(obj):
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def dump(obj) -> str:
    return json.dumps(_round_floats(obj), sort_keys=True)


def read_graphs(stream: TextIO) -> Iterator[tuple[int, str]]:
    """``(line_number, graph6)`` for each non-blank, non-comment line."""
    for k, raw in enumerate(stream, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield k, s


def _parse_all(lines: Iterable[tuple[int, str]]) -> list[tuple[int, str]]:
    out = []
    for k, s in lines:
        try:
            parse_graph6(s)
        except (Graph6Error, GraphError) as exc:
            raise InputError(k, str(exc)) from exc
        out.append((k, s))
    return out


# ---------------------------------------------------------- workers


def _check_one(code: str) -> list[dict]:
    g = parse_graph6(code)
    preds = (is_matching_covered, is_minimal_matching_covered, is_factor_critical, is_minimal_factor_critical)
    return [p(g).to_json() for p in preds]


def _rho_one(args: tuple[str, float]) -> dict:
    code, tol = args
    try:
        return spectral_radius(parse_graph6(code), tol=tol).to_json()
    except SpectralError as exc:
        return {"error": str(exc)}


def _pmap(fn, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# --------------------------------------------------------- commands


def cmd_check(cfg: RunConfig, graphs: list[tuple[int, str]], out: TextIO) -> int:
    results = _pmap(_check_one, [c for _, c in graphs], cfg.jobs)
    for (k, code), certs in zip(graphs, results):
        if cfg.format == "json":
            out.write(dump({"graph": code, "line": k, "certificates": certs}) + "\n")
        elif cfg.format == "tsv":
            for c in certs:
                out.write(f"{code}\t{c['property']}\t{str(c['verdict']).lower()}\t{c['note']}\n")
        else:
            parts = [f"{c['property']}={str(c['verdict']).lower()}" for c in certs]
            out.write(f"{code}: " + " ".join(parts) + "\n")
    return EXIT_OK


def cmd_rho(cfg: RunConfig, graphs: list[tuple[int, str]], out: TextIO) -> int:
    results = _pmap(_rho_one, [(c, cfg.tolerance) for _, c in graphs], cfg.jobs)
    status = EXIT_OK
    for (k, code), res in zip(graphs, results):
        if "error" in res:
            status = EXIT_FAIL
        if cfg.format == "json":
            out.write(dump({"graph": code, "line": k, **res}) + "\n")
        elif "error" in res:
            out.write(f"{code}\terror\t{res['error']}\n")
        elif cfg.format == "tsv":
            out.write(f"{code}\t{fmt_float(res['rho'])!r}\t{res['iterations']}\t{fmt_float(res['residual'])!r}\n")
        else:
            out.write(f"{code}: rho={fmt_float(res['rho'])!r} iterations={res['iterations']}\n")
    return status


def cmd_gen(cfg: RunConfig, family: str, n: int, out: TextIO) -> int:
    makers = {"p3star": gen_p3star, "friendship": gen_friendship, "cycle": cycle_graph}
    try:
        g = makers[family](n)
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from exc
    out.write(to_graph6(g) + "\n")
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, kind: str, graphs: list[tuple[int, str]], out: TextIO) -> int:
    for k, code in graphs:
        g = parse_graph6(code)
        rec: dict = {"graph": code, "line": k, "kind": kind}
        try:
            d = find_bipartite_ear_decomposition(g) if kind == "bipartite" else find_odd_ear_decomposition(g)
            rec["decomposition"] = d.to_json(g.n) if d is not None else None
        except EarError as exc:
            rec["decomposition"] = None
            rec["error"] = exc.reason
        if cfg.format == "json":
            out.write(dump(rec) + "\n")
        elif rec["decomposition"] is None:
            out.write(f"{code}: no {kind} ear decomposition" + (f" ({rec['error']})" if "error" in rec else "") + "\n")
        else:
            d = rec["decomposition"]
            ears = " ".join("-".join(map(str, p)) for p in d["ears"])
            out.write(f"{code}: base={d['base_vertices']} ears=[{ears}] grades={d['grades']}\n")
    return EXIT_OK


def _class_limits(name: str) -> int:
    return MAX_BIPARTITE_N if name == CLASS_BIPARTITE else MAX_FC_N


def cmd_enumerate(cfg: RunConfig, class_name: str, n: int, out: TextIO) -> int:
    fn = enumerate_minimal_mc_bipartite if class_name == CLASS_BIPARTITE else enumerate_minimal_factor_critical
    try:
        codes = sorted(fn(n, cfg.jobs))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.format == "json":
        out.write(dump({"n": n, "class": class_name, "count": len(codes), "graphs": codes}) + "\n")
    else:
        for c in codes:
            out.write(c + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, theorem: int, n: int, out: TextIO) -> int:
    fn = verify_theorem_1 if theorem == 1 else verify_theorem_2
    try:
        rep = fn(n, cfg.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = rep.to_json()
    if cfg.format == "json":
        out.write(dump(data) + "\n")
    elif cfg.format == "tsv":
        row = [data["n"], data["class"], data["count"], repr(fmt_float(data["max_rho"])), ",".join(data["argmax"]),
               repr(fmt_float(data["bound"])), str(data["bound_met"]).lower(), str(data["extremal_match"]).lower()]
        out.write("\t".join(map(str, row)) + "\n")
    else:
        out.write(
            f"{data['class']}, n={n}: {data['count']} graphs, max rho={fmt_float(data['max_rho'])!r}, "
            f"bound={fmt_float(data['bound'])!r}, argmax={data['argmax']}, "
            f"bound_met={data['bound_met']}, extremal_match={data['extremal_match']}\n"
        )
    return EXIT_OK if rep.ok else EXIT_FAIL


# ------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="human")
    common.add_argument("--tol", type=float, default=None, help="spectral tolerance (env EARSPEC_TOL)")
    common.add_argument("--jobs", type=int, default=1)

    p = _Parser(prog="earspec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("check", "rho"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("input", nargs="?", default="-")
    s = sub.add_parser("gen", parents=[common])
    s.add_argument("family", choices=("p3star", "friendship", "cycle"))
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("decompose", parents=[common])
    s.add_argument("--kind", choices=("bipartite", "odd"), default="bipartite")
    s.add_argument("input", nargs="?", default="-")
    s = sub.add_parser("enumerate", parents=[common])
    s.add_argument("--class", dest="class_name", choices=(CLASS_BIPARTITE, CLASS_FC), required=True)
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--theorem", type=int, choices=(1, 2), required=True,
                   help="1: minimal matching covered bipartite, 2: minimal factor-critical")
    s.add_argument("--n", type=int, required=True)
    return p


def _tolerance(arg: float | None) -> float:
    if arg is not None:
        return arg
    env = os.environ.get("EARSPEC_TOL")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise UsageError(f"EARSPEC_TOL is not a number: {env!r}") from exc
    return DEFAULT_TOL


def run(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        max_n = 62
        if args.command == "enumerate":
            max_n = _class_limits(args.class_name)
        elif args.command == "verify":
            max_n = MAX_BIPARTITE_N if args.theorem == 1 else MAX_FC_N
        cfg = RunConfig(
            command=args.command,
            input=getattr(args, "input", "-"),
            format=args.format,
            tolerance=_tolerance(args.tol),
            max_n=max_n,
            jobs=args.jobs,
        )
        if hasattr(args, "n") and args.command in ("enumerate", "verify") and args.n > cfg.max_n:
            raise UsageError(f"--n {args.n} exceeds the limit {cfg.max_n}")
        if args.command == "gen":
            return cmd_gen(cfg, args.family, args.n, stdout)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args.class_name, args.n, stdout)
        if args.command == "verify":
            return cmd_verify(cfg, args.theorem, args.n, stdout)
        if cfg.input == "-":
            graphs = _parse_all(read_graphs(stdin))
        else:
            try:
                with open(cfg.input, encoding="ascii", errors="replace") as fh:
                    graphs = _parse_all(read_graphs(fh))
            except OSError as exc:
                raise UsageError(str(exc)) from exc
        if args.command == "check":
            return cmd_check(cfg, graphs, stdout)
        if args.command == "rho":
            return cmd_rho(cfg, graphs, stdout)
        return cmd_decompose(cfg, args.kind, graphs, stdout)
    except UsageError as exc:
        stderr.write(f"earspec: usage error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        stderr.write(f"earspec: malformed input, {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
