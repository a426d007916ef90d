"""Command-line entry points: serve the HTTP session service, batch-rank
views, emit surrogate datasets, and run the scalability bench."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as bench_mod
from .data import load_csv, to_csv
from .hypothesis import HypothesisSpec, Mode, SessionModel, ranked_views
from .sampling import sample_dataset
from .tiling import Tile, rebuild


def _load_data(args):
    with open(args.csv, "rb") as fh:
        return load_csv(fh, header=not args.no_header, class_column=args.class_column)


def _load_tiles(path, data):
    if path is None:
        return []
    with open(path) as fh:
        doc = json.load(fh)
    tiles = []
    for entry in doc:
        cols = [data.column_index(c) for c in entry["cols"]]
        tiles.append(Tile.of(entry["rows"], cols))
    return tiles


def _add_data_args(p):
    p.add_argument("csv", help="input CSV file")
    p.add_argument("--tiles", help="JSON file with background tiles "
                                   '[{"rows": [...], "cols": [...]}, ...]')
    p.add_argument("--class-column", help="column to treat as display-only class labels")
    p.add_argument("--no-header", action="store_true", help="CSV has no header row")
    p.add_argument("--seed", type=int, default=0)


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    ui_dir = args.ui
    if ui_dir is None:
        default = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = default if default.is_dir() else None
    uvicorn.run(create_app(ui_dir=ui_dir), host=args.host, port=args.port)


def cmd_rank(args):
    data = _load_data(args)
    model = SessionModel(data, seed=args.seed)
    for tile in _load_tiles(args.tiles, data):
        model.add_tile(tile)

    if args.hypothesis:
        with open(args.hypothesis) as fh:
            doc = json.load(fh)
        mode = Mode(doc.get("mode", "compare"))
        spec = None
        if mode is not Mode.EXPLORE:
            rows = doc.get("rows") or range(data.n)
            partition = [[data.column_index(c) for c in block] for block in doc["partition"]]
            spec = HypothesisSpec.of(rows, partition)
        model.set_hypothesis(mode, spec)

    model.draw_counter = 1
    ranking, _ = ranked_views(model, widen=args.widen, samples=args.samples)
    out = sys.stdout
    out.write("i\tj\tcol_i\tcol_j\tscore\n")
    for i, j, score in ranking[:args.limit] if args.limit else ranking:
        out.write(f"{i}\t{j}\t{data.names[i]}\t{data.names[j]}\t{score:.6f}\n")


def cmd_sample(args):
    data = _load_data(args)
    tiling = rebuild(data.n, data.m, _load_tiles(args.tiles, data))
    import numpy as np
    rng = np.random.default_rng(args.seed)
    outputs = []
    for k in range(args.count):
        outputs.append(to_csv(sample_dataset(data, tiling, rng)))
    if args.out:
        for k, text in enumerate(outputs):
            path = Path(f"{args.out}{k + 1}.csv")
            path.write_text(text)
            print(path, file=sys.stderr)
    else:
        sys.stdout.write("\n".join(outputs))


def cmd_bench(args):
    rows = bench_mod.run_grid(
        ns=args.n or bench_mod.GRID_N,
        ms=args.m or bench_mod.GRID_M,
        ks=args.k or bench_mod.GRID_K,
        seed=args.seed,
    )
    sys.stdout.write(bench_mod.format_tsv(rows))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tileshuffle",
        description="Tile-constrained permutation sampling and view ranking")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", help="directory with built web UI to serve at /")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("rank", help="batch-rank views, TSV to stdout")
    _add_data_args(p)
    p.add_argument("--hypothesis", help='JSON file {"mode": ..., "rows": [...], '
                                        '"partition": [[...], ...]}')
    p.add_argument("--limit", type=int, default=0, help="emit only the top N views")
    p.add_argument("--widen", action="store_true",
                   help="rank over all quantitative columns, not just the focus set")
    p.add_argument("--samples", type=int, default=1,
                   help="average scores over this many sample pairs")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("sample", help="emit surrogate datasets as CSV")
    _add_data_args(p)
    p.add_argument("-n", "--count", type=int, default=1, help="number of surrogates")
    p.add_argument("-o", "--out", help="path prefix; writes <out>1.csv, <out>2.csv, ...")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("bench", help="timing grid (init / permute / max tile-add), TSV")
    p.add_argument("--n", type=int, nargs="*", help="row counts (default 5000 10000)")
    p.add_argument("--m", type=int, nargs="*", help="column counts (default 50 100)")
    p.add_argument("--k", type=int, nargs="*", help="tile counts (default 25 50 100)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
