"""Command-line front end: sample, graph, dist, verify.

Thin orchestration only; all computation lives in the library
modules.  Exit codes: 0 success (including "no path found", which is
an answer, not an error), 1 a verification run found violations, 2
argument, file, or precondition-gate errors.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields

from .graph import build_graph, graph_stats, read_graph_csv, write_graph_csv
from .paths import (
    PathResult,
    constrained_shortest,
    dijkstra,
    extract_path,
    path_max_curvature,
    path_result_payload,
)
from .surfaces import (
    SurfaceSpec,
    read_points_csv,
    sample_surface,
    surface_from_json,
    write_points_csv,
)
from .validation import (
    GateError,
    HardFailure,
    verify_chord_bound,
    verify_constrained_lower,
    verify_constrained_upper,
    verify_curvature_consistency,
    verify_unconstrained_lower,
    verify_unconstrained_upper,
    write_report_csv,
    write_summary_json,
)

EXPERIMENTS = (
    "unconstrained-upper",
    "unconstrained-lower",
    "constrained-upper",
    "constrained-lower",
    "chord-bound",
    "curvature-consistency",
)


def resolve_threads(value: int | None) -> int:
    """--threads flag, GEOKNOT_THREADS env, then 1; 0 means auto."""
    if value is None:
        env = os.environ.get("GEOKNOT_THREADS", "").strip()
        value = int(env) if env else 1
    if value == 0:
        value = os.cpu_count() or 1
    if value < 0:
        raise ValueError("threads must be >= 0")
    return value


@dataclass
class ExperimentConfig:
    experiment: str
    surface: dict | None = None
    n: object = None  # int or increasing list for sequence experiments
    r: float | None = None
    alpha: float | None = None
    kappa: float | None = None
    kappa_prime: float | None = None
    pairs: int = 50
    seed: int = 0
    mode: str = "grid"
    threads: int | None = None
    perturb_weights: float = 0.0
    c_emp: float = 8.0
    curve: str = "circle"
    out_csv: str | None = None
    out_json: str | None = None


def _coerce_num(value):
    if isinstance(value, str):
        return float(value)  # accepts "inf"
    return value


def load_config(path: str | None, args) -> ExperimentConfig:
    """Config file merged with flags; a set flag wins over the file."""
    data = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    overrides = {
        "experiment": args.experiment,
        "n": args.n if args.n else None,
        "r": args.r,
        "alpha": args.alpha,
        "kappa": args.kappa,
        "kappa_prime": args.kappa_prime,
        "pairs": args.pairs,
        "seed": args.seed,
        "mode": args.mode,
        "threads": args.threads,
        "perturb_weights": args.perturb_weights,
        "c_emp": args.c_emp,
        "curve": args.curve,
        "out_csv": args.out_csv,
        "out_json": args.out_json,
    }
    if args.surface is not None:
        surf = {"kind": args.surface, "radius": args.radius}
        if args.height is not None:
            surf["height"] = args.height
        if args.ambient_dim is not None:
            surf["ambient_dim"] = args.ambient_dim
        overrides["surface"] = surf
    for key, value in overrides.items():
        if value is not None:
            data[key] = value
    if "experiment" not in data:
        raise ValueError("config needs an 'experiment' field or --experiment")
    for key in ("r", "alpha", "kappa", "kappa_prime", "perturb_weights"):
        if key in data and data[key] is not None:
            data[key] = _coerce_num(data[key])
    cfg = ExperimentConfig(**data)
    if cfg.experiment not in EXPERIMENTS:
        raise ValueError(
            f"unknown experiment {cfg.experiment!r}; choose from {EXPERIMENTS}"
        )
    if cfg.n is not None and isinstance(cfg.n, list):
        cfg.n = [int(v) for v in cfg.n]
        if len(cfg.n) == 1:
            cfg.n = cfg.n[0]
    return cfg


def _config_surface(cfg: ExperimentConfig) -> SurfaceSpec:
    if cfg.surface is None:
        raise GateError(f"experiment {cfg.experiment} needs a surface")
    return surface_from_json(cfg.surface)


def _check_writable(path: str | None):
    if path is None:
        return
    parent = os.path.dirname(os.path.abspath(path))
    if not os.access(parent, os.W_OK):
        raise OSError(f"output directory not writable: {parent}")


def run_experiment(cfg: ExperimentConfig) -> list:
    threads = resolve_threads(cfg.threads)
    common = dict(
        seed=cfg.seed,
        mode=cfg.mode,
        threads=threads,
        perturb_weights=cfg.perturb_weights,
    )
    name = cfg.experiment
    if name == "chord-bound":
        return [verify_chord_bound(kappa=cfg.kappa or 1.0, seed=cfg.seed)]
    if name == "curvature-consistency":
        return [verify_curvature_consistency(curve_spec=cfg.curve)]
    spec = _config_surface(cfg)
    if cfg.n is None:
        raise GateError(f"experiment {name} needs n")
    if name == "constrained-lower":
        seq = cfg.n if isinstance(cfg.n, list) else [cfg.n]
        return verify_constrained_lower(
            spec, seq, cfg.r, alpha=_or(cfg.alpha, 0.25),
            kappa=_or(cfg.kappa, 1.0), pairs=cfg.pairs, **common
        )
    if isinstance(cfg.n, list):
        raise GateError(f"experiment {name} takes a single n")
    if cfg.r is None and name != "unconstrained-upper":
        raise GateError(f"experiment {name} needs r")
    if name == "unconstrained-upper":
        return [
            verify_unconstrained_upper(
                spec, cfg.n, r=cfg.r, pairs=cfg.pairs, **common
            )
        ]
    if name == "unconstrained-lower":
        return [
            verify_unconstrained_lower(
                spec, cfg.n, cfg.r, pairs=cfg.pairs, **common
            )
        ]
    return [
        verify_constrained_upper(
            spec, cfg.n, cfg.r, alpha=_or(cfg.alpha, 0.25),
            kappa=_or(cfg.kappa, 1.0), kappa_prime=cfg.kappa_prime,
            pairs=cfg.pairs, c_emp=cfg.c_emp, **common
        )
    ]


def _or(value, default):
    return default if value is None else value


def cmd_sample(args) -> int:
    surf = {"kind": args.surface, "radius": args.radius}
    if args.height is not None:
        surf["height"] = args.height
    if args.ambient_dim is not None:
        surf["ambient_dim"] = args.ambient_dim
    spec = surface_from_json(surf)
    sample = sample_surface(spec, args.mode, args.n, args.seed)
    write_points_csv(args.out, sample)
    print(f"wrote {sample.n} points to {args.out}")
    return 0


def cmd_graph(args) -> int:
    pts = read_points_csv(args.points)
    g = build_graph(
        pts,
        kind=args.kind,
        r=args.r,
        alpha=args.alpha,
        threads=resolve_threads(args.threads),
    )
    write_graph_csv(args.out, g)
    stats = graph_stats(g)
    print(
        f"wrote {g.kind} graph to {args.out}: n={g.n} edges={g.edge_count} "
        f"components={stats.components}"
    )
    return 0


def cmd_dist(args) -> int:
    pts = read_points_csv(args.points)
    g = read_graph_csv(args.graph, points=pts)
    if not (0 <= args.src < g.n and 0 <= args.dst < g.n):
        raise ValueError(f"src/dst must lie in [0, {g.n})")
    kappa = args.kappa
    if kappa is None or math.isinf(kappa):
        # Vacuous constraint: answer with plain Dijkstra so that
        # --kappa inf and an omitted kappa print identical results.
        field = dijkstra(g, args.src)
        nodes = extract_path(field, args.dst)
        if nodes is None:
            result = PathResult([], math.inf, 0.0, False)
        else:
            result = PathResult(
                nodes,
                float(field.dist[args.dst]),
                path_max_curvature(pts[nodes]),
                True,
            )
        kappa = math.inf
    else:
        result = constrained_shortest(g, kappa, args.src, args.dst)
    print(json.dumps(path_result_payload(result, args.src, args.dst, kappa)))
    return 0


def cmd_verify(args) -> int:
    cfg = load_config(args.config, args)
    _check_writable(cfg.out_csv)
    _check_writable(cfg.out_json)
    reports = run_experiment(cfg)
    if cfg.out_csv:
        write_report_csv(cfg.out_csv, reports)
    if cfg.out_json:
        write_summary_json(cfg.out_json, reports)
    violations = 0
    for rep in reports:
        violations += rep.violations
        print(
            f"{rep.experiment} {rep.surface} N={rep.n}: "
            f"pairs={rep.summary['pairs']} violations={rep.violations} "
            f"skipped={rep.summary['skipped']}"
        )
    return 0 if violations == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geoknot",
        description="Geodesic distances from point samples, "
        "with optional curvature-constrained paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample points from a surface")
    p.add_argument("--surface", required=True,
                   choices=("sphere", "disk", "cylinder", "circle"))
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--height", type=float, default=None,
                   help="cylinder height")
    p.add_argument("--ambient-dim", type=int, default=None,
                   help="embedding dimension (disk: 2 or 3)")
    p.add_argument("--mode", default="grid",
                   choices=("grid", "uniform-random"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("graph", help="build a neighborhood graph")
    p.add_argument("--points", required=True)
    p.add_argument("--kind", default="ball", choices=("ball", "annulus"))
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dist", help="shortest path between two nodes")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--src", type=int, required=True)
    p.add_argument("--dst", type=int, required=True)
    p.add_argument("--kappa", type=float, default=None,
                   help="curvature cap; 'inf' or omitted = unconstrained")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="run a bound-verification experiment")
    p.add_argument("--config", default=None, help="JSON experiment config")
    p.add_argument("--experiment", default=None, choices=EXPERIMENTS)
    p.add_argument("--surface", default=None,
                   choices=("sphere", "disk", "cylinder", "circle"))
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--height", type=float, default=None)
    p.add_argument("--ambient-dim", type=int, default=None)
    p.add_argument("--n", type=int, nargs="+", default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--kappa-prime", type=float, default=None)
    p.add_argument("--pairs", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", default=None, choices=("grid", "uniform-random"))
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--perturb-weights", type=float, default=None,
                   help="self-test fault injection: divide weights by (1+p)")
    p.add_argument("--c-emp", type=float, default=None)
    p.add_argument("--curve", default=None,
                   choices=("circle", "line", "helix"))
    p.add_argument("--out-csv", default=None)
    p.add_argument("--out-json", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except GateError as exc:
        print(f"gate error: {exc}", file=sys.stderr)
        return 2
    except HardFailure as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
