"""Command-line front end: ``clusterseg {segment,stats,compare,phantom}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np
from threadpoolctl import threadpool_limits

from .fcm import FcmConfig, run_fcm
from .imagecore import GrayImage, load_image, save_image
from .kmeans import KMeansConfig, run_kmeans
from .phantom import PRNG, PhantomSpec, make_phantom
from .segment import (LabelMask, RegionStats, apply_mask, compare_report, load_labels,
                      mask_from_centroids, mask_from_membership, mask_visual,
                      region_stats, save_labels)

PROG = "clusterseg"
THREADS_ENV = "CLUSTERSEG_THREADS"


class CliError(Exception):
    pass


def _stats_or_none(img: GrayImage, mask: LabelMask, cluster: int) -> dict | None:
    if not np.any(mask.labels == cluster):
        return None
    return region_stats(img, mask, cluster).to_dict()


def run_algorithm(img: GrayImage, algo: str, k: int, *, max_iter: int | None = None,
                  fuzziness: float = 2.0, tol: float = 1e-5):
    """Cluster ``img`` and return (mask, stats payload, center trace)."""
    if algo == "kmeans":
        cfg = KMeansConfig(k, max_iter=max_iter or 100)
        res = run_kmeans(img, cfg)
        mask = mask_from_centroids(img, res.centroids)
        payload = {
            "algo": "kmeans",
            "clusters": k,
            "params": {"max_iter": cfg.max_iter},
            "centroids": res.centroids.tolist(),
            "iterations": res.iterations,
            "converged": res.converged,
        }
        trace = res.centroid_trace
    elif algo == "fcm":
        cfg = FcmConfig(k, expo=fuzziness, max_iter=max_iter or 3, tol=tol)
        res = run_fcm(img, cfg)
        mask = mask_from_membership(res.membership, img.width, img.height)
        payload = {
            "algo": "fcm",
            "clusters": k,
            "params": {"fuzziness": cfg.expo, "max_iter": cfg.max_iter, "tol": cfg.tol,
                       "dist_eps": cfg.dist_eps},
            "centers": res.centers.tolist(),
            "iterations": res.iterations,
            "converged": res.converged,
            "exit_reason": res.exit_reason,
            "objective_trace": res.objective_trace,
        }
        trace = res.center_trace
    else:
        raise CliError(f"unknown algorithm {algo!r}")
    payload["per_cluster"] = [_stats_or_none(img, mask, i) for i in range(k)]
    payload["overall"] = region_stats(img, mask).to_dict()
    return mask, payload, trace


def _write_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def _load_input(path: str) -> GrayImage:
    try:
        return load_image(path)
    except FileNotFoundError:
        raise CliError(f"cannot read input {path!r}: no such file") from None


def cmd_segment(args) -> int:
    img = _load_input(args.input)
    mask, payload, trace = run_algorithm(
        img, args.algo, args.clusters, max_iter=args.max_iter,
        fuzziness=args.fuzziness, tol=args.tol)
    prefix = args.out_prefix
    save_image(mask_visual(mask), f"{prefix}.mask.pgm")
    save_labels(mask, f"{prefix}.labels.txt")
    for i in range(args.clusters):
        save_image(apply_mask(img, mask, i), f"{prefix}.c{i}.pgm")
    if args.dump_iterations:
        # iteration r labels pixels by the centers it started from
        for r, centers in enumerate(trace[:-1], start=1):
            save_image(mask_visual(mask_from_centroids(img, centers)), f"{prefix}.iter{r}.pgm")
    _write_json(f"{prefix}.stats.json", payload)

    key = "centroids" if args.algo == "kmeans" else "centers"
    print(f"{key}: " + " ".join(f"{c:.4f}" for c in payload[key]))
    print(f"iterations: {payload['iterations']} converged: {payload['converged']}")
    return 0


def cmd_stats(args) -> int:
    img = _load_input(args.input)
    mask = load_labels(args.mask)
    stats = region_stats(img, mask, args.cluster)
    if args.format == "json":
        print(json.dumps(stats.to_dict()))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["mean", "std", "cv", "count"], lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: ("" if v is None else repr(v)) for k, v in stats.to_dict().items()})
        sys.stdout.write(buf.getvalue())
    return 0


def _pick_region(img: GrayImage, mask: LabelMask, centers, cluster: int | None,
                 scope: str) -> RegionStats:
    if cluster is None:
        # brightest non-empty cluster
        occupied = [i for i in range(mask.k) if np.any(mask.labels == i)]
        cluster = max(occupied, key=lambda i: centers[i])
    if scope == "image":
        seg = apply_mask(img, mask, cluster)
        return region_stats(seg, mask)
    return region_stats(img, mask, cluster)


def cmd_compare(args) -> int:
    img = _load_input(args.input)
    results = {}
    for algo, max_iter in (("kmeans", args.kmeans_max_iter), ("fcm", args.fcm_max_iter)):
        mask, payload, _ = run_algorithm(
            img, algo, args.clusters, max_iter=max_iter,
            fuzziness=args.fuzziness, tol=args.tol)
        centers = payload["centroids" if algo == "kmeans" else "centers"]
        results[algo] = _pick_region(img, mask, centers, args.cluster, args.scope)
        _write_json(f"{args.out_prefix}.{algo}.stats.json", payload)
    report = compare_report(results["kmeans"], results["fcm"], ("K-Means", "FCM"))
    with open(f"{args.out_prefix}.compare.txt", "w") as fh:
        fh.write(report)
    sys.stdout.write(report)
    return 0


def _parse_region(text: str) -> tuple[float, float]:
    try:
        value, frac = text.split(":")
        return float(value), float(frac)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"region must look like INTENSITY:FRACTION, got {text!r}") from None


def cmd_phantom(args) -> int:
    spec = PhantomSpec(args.width, args.height, tuple(args.region), args.sigma, args.seed)
    img = make_phantom(spec)
    save_image(img, args.out)
    meta = {
        "width": spec.width, "height": spec.height,
        "regions": [list(r) for r in spec.regions],
        "noise_sigma": spec.noise_sigma, "seed": spec.seed, "prng": PRNG,
    }
    _write_json(f"{args.out}.meta.json", meta)
    return 0


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog=PROG, description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="cluster an image and write masks and stats")
    p.add_argument("--algo", choices=["kmeans", "fcm"], required=True)
    p.add_argument("--input", required=True, help="P2/P5 PGM image")
    p.add_argument("--clusters", type=_positive_int, required=True)
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--fuzziness", type=float, default=2.0, help="FCM fuzziness factor (default 2)")
    p.add_argument("--max-iter", type=_positive_int, default=None,
                   help="iteration cap (default 100 for kmeans, 3 for fcm)")
    p.add_argument("--tol", type=float, default=1e-5, help="FCM objective-change exit (default 1e-5)")
    p.add_argument("--dump-iterations", action="store_true",
                   help="also write a mask for every iteration")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("stats", help="region statistics for an image and label file")
    p.add_argument("--input", required=True)
    p.add_argument("--mask", required=True, help="label file written by 'segment'")
    p.add_argument("--cluster", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("compare", help="run both algorithms and print a comparison table")
    p.add_argument("--input", required=True)
    p.add_argument("--clusters", type=_positive_int, required=True)
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--fuzziness", type=float, default=2.0)
    p.add_argument("--fcm-max-iter", type=_positive_int, default=3)
    p.add_argument("--kmeans-max-iter", type=_positive_int, default=100)
    p.add_argument("--tol", type=float, default=1e-5)
    p.add_argument("--cluster", type=int, default=None,
                   help="region to report (default: brightest cluster)")
    p.add_argument("--scope", choices=["region", "image"], default="region",
                   help="'region': pixels of the cluster; 'image': whole segmented image")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("phantom", help="write a banded synthetic test image")
    p.add_argument("--width", type=_positive_int, required=True)
    p.add_argument("--height", type=_positive_int, required=True)
    p.add_argument("--region", type=_parse_region, action="append", required=True,
                   help="INTENSITY:FRACTION, repeat in top-to-bottom order")
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_phantom)
    return ap


def _thread_cap() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise CliError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise CliError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        with threadpool_limits(limits=_thread_cap()):
            return args.func(args)
    except (CliError, ValueError, OSError, FloatingPointError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
