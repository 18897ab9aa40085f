"""Command-line front end: read a graph, preprocess, optionally solve, write results."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .dimacs import DimacsError, parse_dimacs, write_dimacs, write_generators
from .graph import is_automorphism
from .lifting import LiftError
from .scheduler import ScheduleConfig, preprocess, reconstruct_group
from .solver import OracleLimitError, brute_force_aut, group_closure, ir_solve

EXIT_PARSE, EXIT_INVARIANT, EXIT_ORACLE = 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symred", description="Symmetry-preserving graph preprocessor.")
    p.add_argument("--in", dest="inp", default="-", help="input DIMACS file ('-' for stdin)")
    p.add_argument("--out-graph", help="write the reduced graph here ('-' for stdout)")
    p.add_argument("--out-gens", help="write generators here ('-' for stdout)")
    p.add_argument("--stats", help="write a JSON run report here ('-' for stdout)")
    p.add_argument("--solve", action="store_true", help="solve the reduced graph and emit a full generating set")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force (small inputs only)")
    p.add_argument("--oracle-limit", type=int, default=10)
    p.add_argument("--disable-deg01", action="store_true")
    p.add_argument("--disable-deg2", action="store_true")
    p.add_argument("--disable-probe", action="store_true")
    p.add_argument("--disable-flip", action="store_true")
    p.add_argument("--disable-components", action="store_true")
    p.add_argument("--probe-bound", type=int, default=8, metavar="B")
    p.add_argument("--shrink", type=float, default=0.25)
    p.add_argument("--t-cap", type=int, default=None, help="longest path contracted by the unique-endpoint rule")
    p.add_argument("--seed", type=int, default=0, help="accepted for corpus tooling; the pipeline is deterministic")
    p.add_argument("--timing", action="store_true", help="add elapsed seconds to the stats report")
    p.add_argument("--batch", metavar="DIR", help="process every file in DIR")
    p.add_argument("--out-dir", default=".", help="batch mode output directory")
    p.add_argument("--jobs", type=int, default=2, help="batch mode worker count")
    return p


def config_from_args(a) -> ScheduleConfig:
    on_deg01 = not a.disable_deg01
    on_deg2 = not a.disable_deg2
    on_probe = not a.disable_probe
    return ScheduleConfig(deg0=on_deg01, deg1=on_deg01,
                          deg2_unique=on_deg2, deg2_match=on_deg2, deg2_flip=on_deg2,
                          edge_flip=not a.disable_flip,
                          probe_1ir=on_probe, probe_size2=on_probe, probe_sizeB=on_probe,
                          components=not a.disable_components,
                          B=a.probe_bound, shrink_threshold=a.shrink, t_cap=a.t_cap)


def run_text(text: str, a) -> tuple[int, dict[str, str], str]:
    """Process one input; returns (exit code, outputs by kind, error message)."""
    t0 = time.perf_counter()
    try:
        G = parse_dimacs(text)
    except DimacsError as e:
        return EXIT_PARSE, {}, f"parse error: {e}"
    try:
        cfg = config_from_args(a)
        rep = preprocess(G, cfg)
        gens = list(rep.kernel)
        if a.solve:
            gens = reconstruct_group(rep, ir_solve(rep.graph))
        for g in gens:
            if not is_automorphism(G, g):
                raise LiftError(f"emitted generator {g!r} is not an automorphism")
        if a.oracle:
            auts = set(brute_force_aut(G, a.oracle_limit))
            closure = group_closure(gens, G.n)
            if not closure <= auts or (a.solve and closure != auts):
                raise LiftError("generators disagree with the brute-force group")
    except OracleLimitError as e:
        return EXIT_ORACLE, {}, f"oracle limit: {e}"
    except (LiftError, AssertionError, ValueError) as e:
        return EXIT_INVARIANT, {}, f"internal invariant violated: {e}"
    out = {"gens": write_generators(gens)}
    back = rep.renaming.backward
    out["graph"] = write_dimacs(rep.graph, [f"map {i + 1} {v + 1}" for i, v in enumerate(back)])
    stats = rep.summary()
    stats["generators"] = len(gens)
    if a.timing:
        stats["elapsed_s"] = round(time.perf_counter() - t0, 6)
    out["stats"] = json.dumps(stats, sort_keys=True) + "\n"
    return 0, out, ""


def _emit(target: str | None, text: str) -> None:
    if target is None:
        return
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _batch_one(args):
    path, a = args
    code, out, msg = run_text(Path(path).read_text(), a)
    return path, code, out, msg


def run_batch(a) -> int:
    files = sorted(p for p in Path(a.batch).iterdir() if p.is_file())
    dest = Path(a.out_dir)
    dest.mkdir(parents=True, exist_ok=True)
    worst = 0
    with ProcessPoolExecutor(max_workers=max(1, a.jobs)) as pool:
        for path, code, out, msg in pool.map(_batch_one, [(str(f), a) for f in files]):
            name = Path(path).name
            if code:
                print(f"{name}: {msg}", file=sys.stderr)
                worst = max(worst, code)
                continue
            (dest / f"{name}.reduced").write_text(out["graph"])
            (dest / f"{name}.gens").write_text(out["gens"])
            (dest / f"{name}.stats.json").write_text(out["stats"])
    return worst


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    if a.batch:
        return run_batch(a)
    try:
        text = sys.stdin.read() if a.inp == "-" else Path(a.inp).read_text()
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_PARSE
    code, out, msg = run_text(text, a)
    if code:
        print(msg, file=sys.stderr)
        return code
    _emit(a.out_graph, out["graph"])
    _emit(a.out_gens, out["gens"])
    _emit(a.stats, out["stats"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
