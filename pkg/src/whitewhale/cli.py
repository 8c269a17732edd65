"""Command-line surface.

Subcommands: generate, edges, degrees, verify, pad-layers, merge-shards.
Exit codes: 0 success, 1 failed verification, 2 configuration error,
3 I/O error, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import analytics, comb, core, engine, layerfile, lp, tables

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONFIG
    try:
        return args.func(args)
    except layerfile.LayerFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except AssertionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whitewhale",
        description="Layered orbitwise vertex generation for the White Whale zonotope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate canonical vertex layers")
    _common(p)
    p.add_argument("--max-layer", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--shard", type=_shard, default=None, metavar="I/N")
    p.add_argument("--resume-from", type=int, default=None, metavar="K")
    p.add_argument("--store-certificates", action="store_true")
    p.add_argument("--no-filters", action="store_true", help="run with the LP oracle only")
    p.add_argument("--lp-presolve", action="store_true")
    p.add_argument("--quiet", action="store_true", help="suppress progress lines")
    p.add_argument(
        "--i-know",
        action="store_true",
        help="allow d >= 8 (months of compute; not desk-scale)",
    )
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("edges", help="count edges from completed layers")
    _common(p)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("degrees", help="per-vertex degree table from completed layers")
    _common(p)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("verify", help="check outputs against embedded ground truth")
    _common(p)
    p.add_argument(
        "--mode",
        choices=["tables", "bruteforce", "families", "all"],
        default="all",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pad-layers", help="reinterpret a layer file in a higher dimension")
    p.add_argument("--from-d", type=int, required=True)
    p.add_argument("--to-d", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--layers-dir", default="layers")
    p.set_defaults(func=cmd_pad_layers)

    p = sub.add_parser("merge-shards", help="union sharded partial layer files")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--layers-dir", default="layers")
    p.set_defaults(func=cmd_merge_shards)

    return parser


def _common(p):
    p.add_argument("-d", type=int, required=True, help="dimension")
    p.add_argument("--layers-dir", default="layers")


def _shard(text: str):
    try:
        i, n = text.split("/")
        return int(i), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected I/N, got {text!r}") from None


def _summary_path(layers_dir: str) -> str:
    return os.path.join(layers_dir, "summary.json")


def _load_summary(layers_dir: str, d: int) -> dict:
    path = _summary_path(layers_dir)
    if os.path.exists(path):
        with open(path) as fh:
            summary = json.load(fh)
        if summary.get("d") == d:
            return summary
    return {"d": d, "a": None, "e": None, "o": None, "layers": [], "wall_seconds": None}


def _write_summary(layers_dir: str, summary: dict) -> None:
    with open(_summary_path(layers_dir), "w") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")


def _read_all_layers(layers_dir: str, d: int) -> list[engine.LayerRecord]:
    top = (1 << (d - 1)) - 1
    return [
        layerfile.read_layer(layerfile.layer_path(layers_dir, d, k), d, k)
        for k in range(top + 1)
    ]


def cmd_generate(args) -> int:
    d = args.d
    if d >= 8 and not args.i_know:
        print(
            f"error: d={d} is not desk-scale (the published run took months); "
            "pass --i-know to proceed",
            file=sys.stderr,
        )
        return EXIT_CONFIG
    cfg = engine.RunConfig(
        d=d,
        max_layer=args.max_layer,
        worker_count=args.threads,
        shard=args.shard,
        store_certificates=args.store_certificates,
        use_filters=not args.no_filters,
        lp_presolve=args.lp_presolve,
        progress=not args.quiet,
    )
    os.makedirs(args.layers_dir, exist_ok=True)
    t0 = time.monotonic()

    start = None
    if args.resume_from is not None:
        start = layerfile.read_layer(
            layerfile.layer_path(args.layers_dir, d, args.resume_from), d, args.resume_from
        )

    if cfg.shard is not None:
        if start is None:
            print("error: --shard requires --resume-from", file=sys.stderr)
            return EXIT_CONFIG
        nxt = engine.expand_layer(start, cfg)
        layerfile.write_layer(
            layerfile.layer_path(args.layers_dir, d, nxt.k, cfg.shard), nxt
        )
        return EXIT_OK

    written = []
    for layer in engine.generate(cfg, start):
        layerfile.write_layer(layerfile.layer_path(args.layers_dir, d, layer.k), layer)
        if cfg.store_certificates and layer.k > 0:
            _write_certificates(args.layers_dir, layer)
        written.append(layer)

    top = (1 << (d - 1)) - 1
    if cfg.max_layer == top:
        try:
            layers = _read_all_layers(args.layers_dir, d)
        except layerfile.LayerFileError:
            layers = None
        if layers is not None:
            summary = _load_summary(args.layers_dir, d)
            summary.update(
                a=sum(l.orbit_sum for l in layers),
                o=sum(len(l.entries) for l in layers),
                layers=[
                    {"k": l.k, "canonical": len(l.entries), "orbit_sum": l.orbit_sum}
                    for l in layers
                ],
                wall_seconds=round(time.monotonic() - t0, 3),
            )
            _write_summary(args.layers_dir, summary)
    return EXIT_OK


def _write_certificates(layers_dir: str, layer: engine.LayerRecord) -> None:
    path = os.path.join(layers_dir, f"layer_d{layer.d}_k{layer.k}.certs")
    with open(path, "w") as fh:
        for e in layer.entries:
            cert = e.certificate
            if cert is None:
                cert = lp.vertex_feasible(e.subset, layer.d).certificate
            point = " ".join(str(x) for x in e.point)
            fh.write(point + " | " + " ".join(str(c) for c in cert) + "\n")


def cmd_edges(args) -> int:
    layers = _read_all_layers(args.layers_dir, args.d)
    report = analytics.count_edges(layers)
    path = os.path.join(args.layers_dir, f"edges_d{args.d}.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "point", "orbit", "deg_below"])
        for layer in layers[1:]:
            for e in layer.entries:
                writer.writerow(
                    [
                        layer.k,
                        " ".join(str(x) for x in e.point),
                        e.orbit_size,
                        analytics.degree_below(e.subset, args.d),
                    ]
                )
    summary = _load_summary(args.layers_dir, args.d)
    summary["e"] = report.e_total
    _write_summary(args.layers_dir, summary)
    print(f"e({args.d}) = {report.e_total}")
    return EXIT_OK


def cmd_degrees(args) -> int:
    layers = _read_all_layers(args.layers_dir, args.d)
    path = os.path.join(args.layers_dir, f"degrees_d{args.d}.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "point", "orbit", "deg_below", "deg_above", "deg"])
        for layer, records in zip(layers, analytics.layer_degrees(layers)):
            for r in records:
                writer.writerow(
                    [
                        layer.k,
                        " ".join(str(x) for x in r.canonical.point),
                        r.canonical.orbit_size,
                        r.deg_below,
                        r.deg_above,
                        r.degree,
                    ]
                )
    print(f"wrote {path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    d = args.d
    checks: list[tuple[str, bool]] = []

    def check(name: str, ok: bool):
        checks.append((name, ok))
        print(f"{name}: {'PASS' if ok else 'FAIL'}")

    modes = {args.mode} if args.mode != "all" else {"tables", "bruteforce", "families"}
    if "bruteforce" in modes and args.mode == "all" and d > 4:
        modes.discard("bruteforce")
    if "bruteforce" in modes and d > 4:
        print(f"error: bruteforce mode needs d <= 4, got {d}", file=sys.stderr)
        return EXIT_CONFIG
    if "tables" in modes and d > 6:
        return _verify_counts_from_files(args, check, checks)

    layers = None
    if modes & {"tables", "bruteforce"}:
        layers = engine.run(engine.RunConfig(d=d))

    if "tables" in modes:
        a = sum(l.orbit_sum for l in layers)
        o = sum(len(l.entries) for l in layers)
        check(f"a({d}) == {tables.A_VALUES[d]}", a == tables.A_VALUES[d])
        check(f"o({d}) == {tables.O_VALUES[d]}", o == tables.O_VALUES[d])
        if d in (3, 4):
            rows = tables.D3_ROWS if d == 3 else tables.D4_ROWS
            got = [
                (l.k, tuple(core.generators_of(e.subset)), e.point, e.orbit_size)
                for l in layers
                for e in l.entries
            ]
            want = [(k, ids, p, orb) for k, ids, p, orb, _, _ in rows]
            check(f"layer table d={d} row-for-row", got == want)
            degs = [
                (r.deg_below, r.deg_above)
                for recs in analytics.layer_degrees(layers)
                for r in recs
            ]
            want_degs = [(db, da) for *_, db, da in rows]
            check(f"degree table d={d} row-for-row", degs == want_degs)
        if d <= 5:
            e_total = analytics.count_edges(layers).e_total
            check(f"e({d}) == {tables.E_VALUES[d]}", e_total == tables.E_VALUES[d])

    if "bruteforce" in modes:
        brute = analytics.white_whale_brute_force(d)
        expanded = analytics.all_vertices_from_layers(layers)
        check(f"brute force vs layered engine at d={d}", brute == expanded)

    if "families" in modes:
        ok = True
        for k in range(1, d):
            try:
                analytics.family_degree_check(d, k)
            except AssertionError:
                ok = False
        check(f"U-family degrees d={d}", ok)
        certs_ok = all(
            lp.verify_certificate(c, S, d)
            for k in range(1, d)
            for S, c in analytics.family_U_certificates(d, k)
        )
        check(f"U-family closed-form certificates d={d}", certs_ok)
        w_ok = all(
            lp.vertex_feasible(analytics.family_W(d, k), d).feasible
            and analytics.family_W(d, k).bit_count() == (1 << k) - 1
            for k in range(1, d + 1)
        )
        check(f"W-family vertices d={d}", w_ok)

    return EXIT_OK if all(ok for _, ok in checks) else EXIT_VERIFY


def _verify_counts_from_files(args, check, checks) -> int:
    d = args.d
    layers = _read_all_layers(args.layers_dir, d)
    a = sum(l.orbit_sum for l in layers)
    o = sum(len(l.entries) for l in layers)
    check(f"a({d}) == {tables.A_VALUES[d]} (count-only)", a == tables.A_VALUES[d])
    check(f"o({d}) == {tables.O_VALUES[d]} (count-only)", o == tables.O_VALUES[d])
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_VERIFY


def cmd_pad_layers(args) -> int:
    src = layerfile.read_layer(
        layerfile.layer_path(args.layers_dir, args.from_d, args.k), args.from_d, args.k
    )
    core.check_dimension(args.to_d)
    if args.to_d < args.from_d:
        raise ValueError("target dimension must not be smaller than the source")
    entries = tuple(
        comb.CanonicalVertex(
            e.subset,
            core.point_of(e.subset, args.to_d),
            comb.orbit_size(core.point_of(e.subset, args.to_d), args.to_d),
        )
        for e in src.entries
    )
    padded = engine.LayerRecord(args.to_d, args.k, entries)
    layerfile.write_layer(layerfile.layer_path(args.layers_dir, args.to_d, args.k), padded)
    return EXIT_OK


def cmd_merge_shards(args) -> int:
    partials = [
        layerfile.read_layer(
            layerfile.layer_path(args.layers_dir, args.d, args.k, (i, args.total)),
            args.d,
            args.k,
        )
        for i in range(args.total)
    ]
    merged = layerfile.merge_partials(partials)
    layerfile.write_layer(layerfile.layer_path(args.layers_dir, args.d, args.k), merged)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
