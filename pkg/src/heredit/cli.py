"""Command-line interface: one binary with subcommands, CSV/JSON emission,
and a result cache for the long enumeration jobs.

All artifacts (files, cached payloads, piped stdout) carry rationals as
``num/den`` strings.  ``--float`` only changes how stdout renders values
for humans; it never changes stored artifacts.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cache import ResultCache, job_key
from .crg import CRG, crg_from_text, embeds, gray_crg
from .curves import (
    Curve,
    closed_form_curve,
    curve_scan,
    family_graph,
    gamma_curve,
    search_curve,
    valid_interval,
)
from .editing import DEFAULT_NODE_LIMIT, edit_distance, max_dist_estimate
from .errors import BudgetError, FormatError, HereditError, ValidationError
from .gfun import g_value, is_p_core
from .graphs import Graph, graph_to_graph6, parse_graph_spec
from .rationals import format_fraction, parse_grid, parse_probability
from .spectrum import CliqueSpectrum, clique_spectrum

COMMANDS = (
    "spectrum",
    "gamma",
    "gfun",
    "embed",
    "pcore",
    "edcurve",
    "search",
    "dist",
    "estimate",
)


@dataclass
class JobSpec:
    """A fully validated CLI job: command, parameters, and output options."""

    command: str
    params: dict = field(default_factory=dict)
    out: Path | None = None
    float_display: bool = False
    jobs: int = 1
    cache: ResultCache = field(default_factory=lambda: ResultCache(None))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heredit",
        description="Exact edit-distance functions of hereditary graph "
        "properties via colored regularity graphs.",
    )
    parser.add_argument("--version", action="version", version=f"heredit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the artifact to this file instead of stdout")
        p.add_argument("--float", action="store_true", dest="float_display",
                       help="render stdout values as decimals (files keep rationals)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for grid evaluation (default 1)")
        p.add_argument("--cache-dir", help="result cache directory "
                       "(default: $HEREDIT_CACHE_DIR)")
        p.add_argument("--no-cache", action="store_true", help="disable the result cache")

    def grid_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", help="single rational evaluation point, e.g. 1/3")
        p.add_argument("--grid", help="grid step, e.g. 1/64 for {k/64}")
        p.add_argument("--from", dest="grid_from", help="keep grid points >= this rational")
        p.add_argument("--to", dest="grid_to", help="keep grid points <= this rational")

    p = sub.add_parser("spectrum", help="clique spectrum membership and extreme points")
    p.add_argument("--graph", required=True, help="graph6 string or family spec like c2nstar:8")
    p.add_argument("--r-max", type=int, help="white-count bound (default: vertex count)")
    p.add_argument("--s-max", type=int, help="black-count bound (default: vertex count)")
    p.add_argument("--extremes-out", help="also write the extreme points to this file")
    common(p)

    p = sub.add_parser("gamma", help="clique-spectrum upper bound at points p")
    p.add_argument("--graph", required=True)
    grid_opts(p)
    common(p)

    p = sub.add_parser("gfun", help="solve the simplex program for one CRG")
    p.add_argument("--crg", help="path to a 'crg v1' file")
    p.add_argument("--gray", help="all-gray CRG K(r,s) as 'r,s'")
    p.add_argument("--p", required=True)
    common(p)

    p = sub.add_parser("embed", help="decide whether a graph embeds in a CRG")
    p.add_argument("--graph", required=True)
    p.add_argument("--crg", help="path to a 'crg v1' file")
    p.add_argument("--gray", help="all-gray CRG K(r,s) as 'r,s'")
    common(p)

    p = sub.add_parser("pcore", help="check whether a CRG is p-core")
    p.add_argument("--crg", help="path to a 'crg v1' file")
    p.add_argument("--gray", help="all-gray CRG K(r,s) as 'r,s'")
    p.add_argument("--p", required=True)
    common(p)

    p = sub.add_parser("edcurve", help="edit-distance curve for a built-in family")
    p.add_argument("--family", required=True, choices=("c8star", "ctilde", "path", "cycle"))
    p.add_argument("--n", type=int, help="family order (default 8 for c8star)")
    p.add_argument("--source", default="closed_form",
                   help="comma list from closed_form,gamma,search (default closed_form)")
    p.add_argument("--m", type=int, default=3, help="CRG size bound for the search source")
    p.add_argument("--allow-large", action="store_true",
                   help="permit the long-running m=5 search")
    p.add_argument("--restrict-grid", action="store_true",
                   help="drop grid points outside the closed form's stated interval")
    p.add_argument("--analyze", action="store_true",
                   help="print max/argmax/concavity analysis per source")
    grid_opts(p)
    common(p)

    p = sub.add_parser("search", help="min g over enumerated CRGs avoiding a graph")
    p.add_argument("--forbid", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    grid_opts(p)
    common(p)

    p = sub.add_parser("dist", help="exact edit distance of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    common(p)

    p = sub.add_parser("estimate", help="sampled max edit distance at a density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    common(p)

    return parser


def _load_crg(args) -> CRG:
    if bool(args.crg) == bool(args.gray):
        raise ValidationError("provide exactly one of --crg FILE or --gray r,s")
    if args.crg:
        try:
            text = Path(args.crg).read_text()
        except OSError as exc:
            raise ValidationError(f"cannot read CRG file {args.crg}: {exc}") from exc
        return crg_from_text(text)
    parts = args.gray.split(",")
    if len(parts) != 2 or not all(part.strip().isdigit() for part in parts):
        raise ValidationError(f"--gray expects 'r,s' with integers, got {args.gray!r}")
    return gray_crg(int(parts[0]), int(parts[1]))


def _points_from(args) -> tuple[Fraction, ...]:
    if bool(args.p) == bool(args.grid):
        raise ValidationError("provide exactly one of --p or --grid")
    if args.p:
        return (parse_probability(args.p),)
    points = parse_grid(args.grid)
    if args.grid_from:
        lo = parse_probability(args.grid_from)
        points = tuple(p for p in points if p >= lo)
    if args.grid_to:
        hi = parse_probability(args.grid_to)
        points = tuple(p for p in points if p <= hi)
    if not points:
        raise ValidationError("grid restriction left no evaluation points")
    return points


def parse_inputs(argv: list[str]) -> JobSpec:
    """Parse and validate argv into a JobSpec before any computation runs."""
    args = _build_parser().parse_args(argv)
    cache = ResultCache.from_options(
        getattr(args, "cache_dir", None), getattr(args, "no_cache", False)
    )
    job = JobSpec(
        command=args.command,
        out=Path(args.out) if args.out else None,
        float_display=args.float_display,
        jobs=max(1, args.jobs),
        cache=cache,
    )
    params = job.params

    if args.command == "spectrum":
        params["graph"] = parse_graph_spec(args.graph)
        params["graph_spec"] = args.graph
        params["r_max"] = args.r_max
        params["s_max"] = args.s_max
        params["extremes_out"] = Path(args.extremes_out) if args.extremes_out else None
    elif args.command == "gamma":
        params["graph"] = parse_graph_spec(args.graph)
        params["points"] = _points_from(args)
    elif args.command == "gfun":
        params["crg"] = _load_crg(args)
        params["p"] = parse_probability(args.p)
    elif args.command == "embed":
        params["graph"] = parse_graph_spec(args.graph)
        params["crg"] = _load_crg(args)
    elif args.command == "pcore":
        params["crg"] = _load_crg(args)
        params["p"] = parse_probability(args.p)
    elif args.command == "edcurve":
        n = args.n if args.n is not None else (8 if args.family == "c8star" else None)
        if n is None:
            raise ValidationError(f"--n is required for family {args.family}")
        sources = tuple(s.strip() for s in args.source.split(",") if s.strip())
        unknown = [s for s in sources if s not in ("closed_form", "gamma", "search")]
        if unknown or not sources:
            raise ValidationError(f"unknown curve source(s): {', '.join(unknown) or '(none)'}")
        if args.p is None and args.grid is None:
            args.grid = "1/128"
        points = _points_from(args)
        if args.restrict_grid:
            lo, hi = valid_interval(args.family, n)
            points = tuple(p for p in points if lo <= p <= hi)
            if not points:
                raise ValidationError("grid restriction left no evaluation points")
        params.update(
            family=args.family, n=n, sources=sources, m=args.m,
            allow_large=args.allow_large, points=points, analyze=args.analyze,
        )
    elif args.command == "search":
        params["forbid"] = parse_graph_spec(args.forbid)
        params["m"] = args.max_size
        params["allow_large"] = args.allow_large
        params["points"] = _points_from(args)
    elif args.command == "dist":
        params["graph"] = parse_graph_spec(args.graph)
        params["forbid"] = parse_graph_spec(args.forbid)
        params["node_limit"] = args.node_limit
    elif args.command == "estimate":
        params["n"] = args.n
        params["p"] = parse_probability(args.p)
        params["forbid"] = parse_graph_spec(args.forbid)
        params["samples"] = args.samples
        params["seed"] = args.seed
        params["node_limit"] = args.node_limit
    return job


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------


def _render(value, float_display: bool) -> str:
    if isinstance(value, Fraction):
        return repr(float(value)) if float_display else format_fraction(value)
    return str(value)


def _csv_cell(text: str) -> str:
    # RFC 4180 quoting so witness labels like K(2,0) stay one cell
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _csv_text(header: list[str], rows: list[list], float_display: bool = False) -> str:
    lines = [",".join(_csv_cell(cell) for cell in header)]
    for row in rows:
        lines.append(",".join(_csv_cell(_render(cell, float_display)) for cell in row))
    return "\n".join(lines) + "\n"


def _emit(job: JobSpec, header: list[str], rows: list[list], text: str | None = None) -> str:
    """Write the exact artifact; echo to stdout (possibly as floats) otherwise."""
    artifact = text if text is not None else _csv_text(header, rows)
    if job.out:
        job.out.write_text(artifact)
    elif text is not None or not job.float_display:
        sys.stdout.write(artifact)
    else:
        sys.stdout.write(_csv_text(header, rows, float_display=True))
    return artifact


# ---------------------------------------------------------------------------
# parallel grid evaluation (deterministic: chunks merge in order)
# ---------------------------------------------------------------------------


def _curve_points(kind: str, spec: dict, points: tuple[Fraction, ...]) -> Curve:
    if kind == "closed_form":
        return closed_form_curve(spec["family"], spec["n"], points)
    if kind == "gamma":
        return gamma_curve(spec["graph"], points, spectrum=spec.get("spectrum"))
    if kind == "search":
        return search_curve(spec["graph"], spec["m"], points, allow_large=spec["allow_large"])
    raise ValidationError(f"unknown curve source {kind!r}")


def _chunk_worker(payload):
    kind, spec, points = payload
    curve = _curve_points(kind, spec, points)
    return curve.samples, curve.witnesses


def _evaluate_curve(job: JobSpec, kind: str, spec: dict, points: tuple[Fraction, ...]) -> Curve:
    if job.jobs <= 1 or len(points) < 2 * job.jobs:
        return _curve_points(kind, spec, points)
    chunk = -(-len(points) // job.jobs)
    payloads = [
        (kind, spec, points[i : i + chunk]) for i in range(0, len(points), chunk)
    ]
    samples: list = []
    witnesses: list = []
    with ProcessPoolExecutor(max_workers=job.jobs) as pool:
        for part_samples, part_witnesses in pool.map(_chunk_worker, payloads):
            samples.extend(part_samples)
            witnesses.extend(part_witnesses)
    return Curve(tuple(samples), kind, tuple(witnesses))


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _run_spectrum(job: JobSpec) -> int:
    params = job.params
    h: Graph = params["graph"]
    key = job_key({
        "command": "spectrum", "version": __version__,
        "graph": graph_to_graph6(h),
        "r_max": params["r_max"], "s_max": params["s_max"],
    })
    cached = job.cache.get(key)
    if cached is not None:
        artifact = cached
        _emit(job, [], [], text=artifact)
    else:
        spect = clique_spectrum(h, params["r_max"], params["s_max"])
        rows = [
            [r, s, 1 if (r, s) in spect.members else 0]
            for r in range(spect.r_max + 1)
            for s in range(spect.s_max + 1)
            if r + s >= 1
        ]
        artifact = _emit(job, ["r", "s", "member"], rows)
        job.cache.put(key, artifact)
    # extreme points are recomputed from the membership artifact so a cache
    # hit and a fresh run print identical results
    members = set()
    for line in artifact.splitlines()[1:]:
        r_txt, s_txt, member = line.split(",")
        if member == "1":
            members.add((int(r_txt), int(s_txt)))
    spect = CliqueSpectrum(frozenset(members), 0, 0)
    extreme_rows = [[r, s] for r, s in spect.extreme_points()]
    extremes_text = _csv_text(["r", "s"], extreme_rows)
    extremes_out = params["extremes_out"]
    if extremes_out:
        extremes_out.write_text(extremes_text)
    if job.out or extremes_out:
        sys.stdout.write(extremes_text)
    return 0


def _run_gamma(job: JobSpec) -> int:
    h: Graph = job.params["graph"]
    spect = clique_spectrum(h)
    curve = _evaluate_curve(
        job, "gamma", {"graph": h, "spectrum": spect}, job.params["points"]
    )
    rows = [
        [p, value, "gamma", ";".join(wits)]
        for (p, value), wits in zip(curve.samples, curve.witnesses)
    ]
    _emit(job, ["p", "value", "source", "witness"], rows)
    return 0


def _run_gfun(job: JobSpec) -> int:
    result = g_value(job.params["crg"], job.params["p"])
    _emit(job, [], [], text=json.dumps(result.as_json_dict()) + "\n")
    return 0


def _run_embed(job: JobSpec) -> int:
    found, witness = embeds(job.params["graph"], job.params["crg"])
    payload = {
        "embeds": found,
        "witness": list(witness.mapping) if witness else None,
    }
    _emit(job, [], [], text=json.dumps(payload) + "\n")
    return 0


def _run_pcore(job: JobSpec) -> int:
    k = job.params["crg"]
    p = job.params["p"]
    payload = {
        "p_core": is_p_core(k, p),
        "g": format_fraction(g_value(k, p).value),
    }
    _emit(job, [], [], text=json.dumps(payload) + "\n")
    return 0


def _run_edcurve(job: JobSpec) -> int:
    params = job.params
    family, n = params["family"], params["n"]
    points = params["points"]
    h = family_graph(family, n)
    curves: dict[str, Curve] = {}
    for source in params["sources"]:
        spec: dict = {"family": family, "n": n, "graph": h,
                      "m": params["m"], "allow_large": params["allow_large"]}
        if source == "gamma":
            spec["spectrum"] = clique_spectrum(h)
        curves[source] = _evaluate_curve(job, source, spec, points)

    sources = list(params["sources"])
    if len(sources) == 1:
        curve = curves[sources[0]]
        rows = [
            [p, value, curve.source, ";".join(wits)]
            for (p, value), wits in zip(curve.samples, curve.witnesses)
        ]
        _emit(job, ["p", "value", "source", "witness"], rows)
    else:
        header = ["p"] + [f"value_{s}" for s in sources] + ["diff"]
        rows = []
        for idx, p in enumerate(points):
            values = [curves[s].samples[idx][1] for s in sources]
            rows.append([p, *values, max(values) - min(values)])
        _emit(job, header, rows)

    if params["analyze"]:
        for source in sources:
            analysis = curve_scan(curves[source])
            print(
                f"analysis {source}: d_star={format_fraction(analysis.d_star)}"
                f" ({float(analysis.d_star):.6f})"
                f" p_star={format_fraction(analysis.p_star)}"
                f" ({float(analysis.p_star):.6f})"
                f" concavity_violations={len(analysis.concavity_violations)}"
            )
    return 0


def _run_search(job: JobSpec) -> int:
    params = job.params
    h: Graph = params["forbid"]
    key = job_key({
        "command": "search", "version": __version__,
        "forbid": graph_to_graph6(h), "m": params["m"],
        "points": [format_fraction(p) for p in params["points"]],
    })
    cached = job.cache.get(key)
    if cached is not None:
        _emit(job, [], [], text=cached)
        return 0
    curve = _evaluate_curve(
        job, "search",
        {"graph": h, "m": params["m"], "allow_large": params["allow_large"]},
        params["points"],
    )
    rows = [
        [p, value, f"search-m{params['m']}", ";".join(wits)]
        for (p, value), wits in zip(curve.samples, curve.witnesses)
    ]
    artifact = _emit(job, ["p", "value", "source", "witness"], rows)
    job.cache.put(key, artifact)
    return 0


def _run_dist(job: JobSpec) -> int:
    result = edit_distance(
        job.params["graph"], job.params["forbid"], node_limit=job.params["node_limit"]
    )
    rows = [[result.edits, result.normalized, graph_to_graph6(result.witness)]]
    _emit(job, ["edits", "normalized", "witness_graph6"], rows)
    return 0


def _run_estimate(job: JobSpec) -> int:
    params = job.params
    result = max_dist_estimate(
        params["n"], params["p"], params["forbid"],
        params["samples"], params["seed"], node_limit=params["node_limit"],
    )
    witness6 = graph_to_graph6(result.witness) if result.witness else ""
    rows = [[result.max_normalized, witness6, result.skipped]]
    _emit(job, ["max_normalized", "witness_graph6", "skipped"], rows)
    return 0


_HANDLERS = {
    "spectrum": _run_spectrum,
    "gamma": _run_gamma,
    "gfun": _run_gfun,
    "embed": _run_embed,
    "pcore": _run_pcore,
    "edcurve": _run_edcurve,
    "search": _run_search,
    "dist": _run_dist,
    "estimate": _run_estimate,
}


def run(job: JobSpec) -> int:
    """Dispatch a validated JobSpec to its command handler."""
    return _HANDLERS[job.command](job)


def main(argv: list[str] | None = None) -> int:
    """Entry point.  Exit codes: 2 usage, 3 validation, 4 format, 5 budget."""
    try:
        job = parse_inputs(sys.argv[1:] if argv is None else argv)
        return run(job)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except HereditError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
