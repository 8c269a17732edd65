"""Layer files: the on-disk format for completed layers.

One ASCII line per canonical vertex, ascending generator ids, a "|"
separator, then the point coordinates; entries sorted by point so files
are stable and diffable.  A single header line carries the dimension,
layer index, entry count, and a checksum of the body that is validated
before any resume.
"""

from __future__ import annotations

import hashlib
import os
import re

from . import comb, core
from .engine import LayerRecord

MAGIC = "WWLAYER1"

_HEADER_RE = re.compile(
    rf"^{MAGIC} d=(\d+) k=(\d+) n=(\d+) sha256=([0-9a-f]{{64}})$"
)


class LayerFileError(Exception):
    """Raised for missing, malformed, or checksum-failing layer files."""


def layer_filename(d: int, k: int, shard=None) -> str:
    if shard is None:
        return f"layer_d{d}_k{k}.www"
    i, n = shard
    return f"layer_d{d}_k{k}.part{i}of{n}.www"


def layer_path(layers_dir: str, d: int, k: int, shard=None) -> str:
    return os.path.join(layers_dir, layer_filename(d, k, shard))


def render(layer: LayerRecord) -> str:
    lines = []
    for e in sorted(layer.entries, key=lambda e: e.point):
        ids = " ".join(str(g) for g in core.generators_of(e.subset))
        point = " ".join(str(x) for x in e.point)
        lines.append(f"{ids} | {point}" if ids else f"| {point}")
    body = "".join(line + "\n" for line in lines)
    digest = hashlib.sha256(body.encode()).hexdigest()
    header = f"{MAGIC} d={layer.d} k={layer.k} n={len(lines)} sha256={digest}\n"
    return header + body


def write_layer(path: str, layer: LayerRecord) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(render(layer))
    os.replace(tmp, path)


def read_layer(path: str, expect_d: int | None = None, expect_k: int | None = None) -> LayerRecord:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise LayerFileError(f"cannot read layer file {path}: {exc}") from exc
    header, _, body = text.partition("\n")
    m = _HEADER_RE.match(header)
    if not m:
        raise LayerFileError(f"bad header in layer file {path}")
    d, k, n, digest = int(m.group(1)), int(m.group(2)), int(m.group(3)), m.group(4)
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        raise LayerFileError(f"checksum mismatch in layer file {path}")
    if expect_d is not None and d != expect_d:
        raise LayerFileError(f"layer file {path} has d={d}, expected {expect_d}")
    if expect_k is not None and k != expect_k:
        raise LayerFileError(f"layer file {path} has k={k}, expected {expect_k}")
    entries = []
    lines = body.splitlines()
    if len(lines) != n:
        raise LayerFileError(f"layer file {path} announces {n} entries, holds {len(lines)}")
    for line in lines:
        left, _, right = line.partition("|")
        ids = [int(x) for x in left.split()]
        point = tuple(int(x) for x in right.split())
        if len(point) != d:
            raise LayerFileError(f"entry of wrong dimension in layer file {path}: {line!r}")
        subset = core.mask_of(ids)
        if len(ids) != k or core.point_of(subset, d) != point:
            raise LayerFileError(f"inconsistent entry in layer file {path}: {line!r}")
        entries.append(comb.CanonicalVertex(subset, point, comb.orbit_size(point, d)))
    return LayerRecord(d, k, tuple(entries))


def merge_partials(partials: list[LayerRecord]) -> LayerRecord:
    """Union of sharded partial layers, deduplicated and re-sorted."""
    if not partials:
        raise ValueError("nothing to merge")
    d, k = partials[0].d, partials[0].k
    merged: dict[tuple[int, ...], comb.CanonicalVertex] = {}
    for part in partials:
        if (part.d, part.k) != (d, k):
            raise ValueError("cannot merge partial layers of different (d, k)")
        for e in part.entries:
            prev = merged.get(e.point)
            if prev is None:
                merged[e.point] = e
            elif prev.subset != e.subset:
                raise LayerFileError(f"conflicting subsets for point {e.point}")
    return LayerRecord(d, k, tuple(merged[p] for p in sorted(merged)))
