"""Command-line front end for reproducible curvature experiments.

Every command writes its outputs plus a JSON manifest (same path with a
.manifest.json suffix) recording the command, full parameter set, seeds,
input/output paths, tool version and wall time. Replaying a manifest's
parameters reproduces the outputs (bit for bit for the combinatorial
curvatures, to solver precision for Ollivier-Ricci).

Exit codes: 0 success, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .analysis import CorrelationReport, curvature_gap, histogram, pearson
from .detection import DetectionConfig, accuracy, detect_communities
from .forman import afrc_all, frc_all
from .generators import ModelParams
from .graphs import parse_edge_list, parse_labels, write_edge_list, write_labels
from .ollivier import orc_all
from .vectors import CurvatureVector

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3

_METHOD_CHOICES = ("frc", "afrc", "afrc3", "afrc4", "afrc5", "orc")


def _fmt(x: float) -> float:
    """Floats in reports carry 12 significant digits."""
    return float("%.12g" % x)


def _load_graph(path: str):
    return parse_edge_list(Path(path).read_text())


def _method_tag(method: str, max_cycle: int) -> tuple[str, int | None]:
    method = method.lower()
    if method == "frc":
        return "FRC", None
    if method == "orc":
        return "ORC", None
    if method == "afrc":
        return f"AFRC{max_cycle}", max_cycle
    return f"AFRC{method[-1]}", int(method[-1])


def _compute_vector(g, method: str, max_cycle: int) -> CurvatureVector:
    tag, n = _method_tag(method, max_cycle)
    if tag == "FRC":
        return frc_all(g)
    if tag == "ORC":
        return orc_all(g)
    return afrc_all(g, n)


def _write_manifest(anchor: str, command: str, params: dict,
                    inputs: list[str], outputs: list[str], t0: float) -> None:
    manifest = {
        "command": command,
        "params": params,
        "seed": params.get("seed"),
        "inputs": inputs,
        "outputs": outputs,
        "version": __version__,
        "threads": params.get("threads", 1),
        "wall_time_s": time.perf_counter() - t0,
    }
    Path(anchor + ".manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


# -- subcommand implementations ---------------------------------------------


def _cmd_generate(args) -> int:
    t0 = time.perf_counter()
    params = ModelParams(
        model=args.model,
        n=getattr(args, "n", None),
        l=getattr(args, "l", None),
        k=getattr(args, "k", None),
        p=args.p,
        q=getattr(args, "q", None),
        seed=args.seed,
    )
    g, part = params.sample()
    out = Path(args.out)
    out.write_text(write_edge_list(g))
    outputs = [str(out)]
    if part is not None:
        labels_path = Path(args.labels) if args.labels else out.with_suffix(".labels")
        labels_path.write_text(write_labels(part))
        outputs.append(str(labels_path))
    _write_manifest(
        str(out), "generate",
        {"model": params.model, "n": params.n, "l": params.l, "k": params.k,
         "p": params.p, "q": params.q, "seed": params.seed, "threads": args.threads},
        [], outputs, t0,
    )
    return EXIT_OK


def _cmd_curvature(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    cv = _compute_vector(g, args.method, args.max_cycle)
    out = Path(args.out)
    out.write_text(cv.to_csv() if args.format == "csv" else cv.to_json() + "\n")
    _write_manifest(
        str(out), "curvature",
        {"graph": args.graph, "method": cv.method, "format": args.format,
         "threads": args.threads},
        [args.graph], [str(out)], t0,
    )
    return EXIT_OK


def _cmd_gap(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    truth = parse_labels(Path(args.labels).read_text())
    cv = _compute_vector(g, args.method, args.max_cycle)
    report = curvature_gap(cv, truth)
    payload = {"method": cv.method}
    payload.update({k: (_fmt(v) if isinstance(v, float) else v)
                    for k, v in report.to_dict().items()})
    out = Path(args.out)
    out.write_text(json.dumps(payload, indent=2) + "\n")
    _write_manifest(
        str(out), "gap",
        {"graph": args.graph, "labels": args.labels, "method": cv.method,
         "threads": args.threads},
        [args.graph, args.labels], [str(out)], t0,
    )
    return EXIT_OK


def _cmd_correlate(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    cv_a = _compute_vector(g, args.method_a, args.max_cycle)
    cv_b = _compute_vector(g, args.method_b, args.max_cycle)
    r = pearson(cv_a, cv_b)
    report = CorrelationReport(cv_a.method, cv_b.method, _fmt(r), len(cv_a))
    out = Path(args.out)
    out.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    _write_manifest(
        str(out), "correlate",
        {"graph": args.graph, "method_a": cv_a.method, "method_b": cv_b.method,
         "threads": args.threads},
        [args.graph], [str(out)], t0,
    )
    return EXIT_OK


def _cmd_detect(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    tag, _ = _method_tag(args.method, args.max_cycle)
    cfg = DetectionConfig(
        method=tag,
        direction=f"delete-{args.direction}",
        threshold=args.threshold,
        seed=args.seed,
        max_deletions=args.max_deletions,
    )
    result = detect_communities(g, cfg)
    payload = {"method": tag, "direction": cfg.direction}
    payload.update(result.to_dict())
    payload["threshold_used"] = _fmt(payload["threshold_used"])
    payload["wall_time_s"] = _fmt(payload["wall_time_s"])
    inputs = [args.graph]
    if args.labels:
        truth = parse_labels(Path(args.labels).read_text())
        payload["accuracy"] = _fmt(accuracy(result.partition, truth))
        inputs.append(args.labels)
    out = Path(args.out)
    out.write_text(json.dumps(payload, indent=2) + "\n")
    outputs = [str(out)]
    if args.partition_out:
        Path(args.partition_out).write_text(write_labels(result.partition))
        outputs.append(args.partition_out)
    _write_manifest(
        str(out), "detect",
        {"graph": args.graph, "method": tag, "direction": cfg.direction,
         "threshold": args.threshold, "seed": args.seed,
         "max_deletions": args.max_deletions, "threads": args.threads},
        inputs, outputs, t0,
    )
    return EXIT_OK


def _cmd_hist(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    cv = _compute_vector(g, args.method, args.max_cycle)
    lines = []
    if args.labels:
        truth = parse_labels(Path(args.labels).read_text())
        # shared bin edges over all values, counts split by edge side
        full = histogram(cv.values.values(), args.bins)
        within = {e: v for e, v in cv.values.items() if truth.is_within(*e)}
        between = {e: v for e, v in cv.values.items() if not truth.is_within(*e)}
        lines.append("bin_lower,count_within,count_between")
        edges_lo = [lo for lo, _ in full]
        vals = sorted(cv.values.values())
        lo0, hi0 = vals[0], vals[-1]
        wcounts = _counts_in_bins(within.values(), edges_lo, lo0, hi0)
        bcounts = _counts_in_bins(between.values(), edges_lo, lo0, hi0)
        for lo, wc, bc in zip(edges_lo, wcounts, bcounts):
            lines.append("%.12g,%d,%d" % (lo, wc, bc))
    else:
        lines.append("bin_lower,count")
        for lo, count in histogram(cv.values.values(), args.bins):
            lines.append("%.12g,%d" % (lo, count))
    out = Path(args.out)
    out.write_text("\n".join(lines) + "\n")
    _write_manifest(
        str(out), "hist",
        {"graph": args.graph, "method": cv.method, "bins": args.bins,
         "labels": args.labels, "threads": args.threads},
        [p for p in (args.graph, args.labels) if p], [str(out)], t0,
    )
    return EXIT_OK


def _counts_in_bins(values, bin_lowers, lo, hi) -> list[int]:
    nbins = len(bin_lowers)
    counts = [0] * nbins
    if hi == lo:
        counts[0] = len(list(values))
        return counts
    width = (hi - lo) / nbins
    for x in values:
        idx = min(int((x - lo) / width), nbins - 1)
        counts[idx] += 1
    return counts


# -- argument parsing ---------------------------------------------------------


def _threshold_arg(s: str):
    if s == "auto":
        return "auto"
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError("must be a number or 'auto'") from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("NETCURV_THREADS", "1")),
                   help="worker cap, recorded in the manifest")
    p.add_argument("--json-errors", action="store_true",
                   help="report data errors as JSON on stderr")


def _add_method(p: argparse.ArgumentParser, name="--method") -> None:
    p.add_argument(name, required=True, choices=_METHOD_CHOICES)
    if name == "--method":
        p.add_argument("--max-cycle", type=int, default=3, choices=(3, 4, 5),
                       help="cycle length cap for the plain 'afrc' method")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netcurv",
        description="Graph curvature, curvature gaps and curvature-driven "
                    "community detection.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample a random graph model")
    gen_sub = gen.add_subparsers(dest="model", required=True)
    for model, sizes in (
        ("er", ("n",)), ("bg", ("n",)), ("sbm", ("l", "k")),
        ("tsbm", ("l", "k")), ("hbg", ("n",)),
    ):
        mp = gen_sub.add_parser(model)
        for s in sizes:
            mp.add_argument(f"-{s}", type=int, required=True)
        mp.add_argument("-p", type=float, required=True)
        if model in ("sbm", "tsbm", "hbg"):
            mp.add_argument("-q", type=float, required=True)
        mp.add_argument("--seed", type=int, default=0)
        mp.add_argument("-o", "--out", required=True)
        mp.add_argument("--labels", default=None,
                        help="ground-truth label file (models with communities)")
        _add_common(mp)
        mp.set_defaults(func=_cmd_generate)

    cur = sub.add_parser("curvature", help="per-edge curvature values")
    cur.add_argument("-g", "--graph", required=True)
    _add_method(cur)
    cur.add_argument("-o", "--out", required=True)
    cur.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(cur)
    cur.set_defaults(func=_cmd_curvature)

    gap = sub.add_parser("gap", help="within/between curvature gap")
    gap.add_argument("-g", "--graph", required=True)
    gap.add_argument("--labels", required=True)
    _add_method(gap)
    gap.add_argument("-o", "--out", required=True)
    _add_common(gap)
    gap.set_defaults(func=_cmd_gap)

    cor = sub.add_parser("correlate", help="Pearson correlation of two methods")
    cor.add_argument("-g", "--graph", required=True)
    cor.add_argument("--method-a", required=True, choices=_METHOD_CHOICES)
    cor.add_argument("--method-b", required=True, choices=_METHOD_CHOICES)
    cor.add_argument("--max-cycle", type=int, default=3, choices=(3, 4, 5))
    cor.add_argument("-o", "--out", required=True)
    _add_common(cor)
    cor.set_defaults(func=_cmd_correlate)

    det = sub.add_parser("detect", help="sequential edge-deletion communities")
    det.add_argument("-g", "--graph", required=True)
    _add_method(det)
    det.add_argument("--direction", choices=("max", "min"), required=True)
    det.add_argument("--threshold", type=_threshold_arg, default="auto",
                     help="numeric threshold or 'auto' (two-Gaussian boundary)")
    det.add_argument("--seed", type=int, default=0)
    det.add_argument("--max-deletions", type=int, default=None)
    det.add_argument("--labels", default=None,
                     help="ground-truth labels; adds an accuracy field")
    det.add_argument("--partition-out", default=None,
                     help="also write the detected partition as 'vertex label' lines")
    det.add_argument("-o", "--out", required=True)
    _add_common(det)
    det.set_defaults(func=_cmd_detect)

    his = sub.add_parser("hist", help="curvature histogram (CSV)")
    his.add_argument("-g", "--graph", required=True)
    _add_method(his)
    his.add_argument("--bins", type=int, default=20)
    his.add_argument("--labels", default=None,
                     help="split counts into within/between columns")
    his.add_argument("-o", "--out", required=True)
    _add_common(his)
    his.set_defaults(func=_cmd_hist)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        if getattr(args, "json_errors", False):
            payload = {"error": str(exc), "type": type(exc).__name__}
            print(json.dumps(payload), file=sys.stderr)
        else:
            print(f"netcurv: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
