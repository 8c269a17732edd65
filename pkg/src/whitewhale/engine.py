"""Layered, orbitwise vertex generation.

Three levels of machinery:

* ``generate_generic`` with ``use_symmetry=False`` is the plain layered
  scan over an arbitrary generator set: every vertex of layer k + 1 is
  adjacent to a vertex of layer k (each edge of a zonotope is a generator
  translate), so expanding layer by layer misses nothing.
* ``generate_generic`` with ``use_symmetry=True`` keeps one canonical
  representative per coordinate-permutation orbit and stops at the
  halfway layer; central symmetry supplies the other half.
* ``generate`` / ``expand_layer`` are the White Whale specialization:
  subsets are bitmasks over the integer-encoded generators and the full
  combinatorial filter chain runs before each feasibility call.

Only two consecutive layers are ever held in memory.  Workers take
contiguous slices of the current layer and build private candidate sets;
the merge is an associative union keyed by canonical point, so output is
identical for any worker count.
"""

from __future__ import annotations

import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import comb, core, lp


@dataclass(frozen=True)
class LayerRecord:
    """All canonical vertices at a fixed subset cardinality k."""

    d: int
    k: int
    entries: tuple[comb.CanonicalVertex, ...]

    @property
    def orbit_sum(self) -> int:
        return sum(e.orbit_size for e in self.entries)


@dataclass
class RunConfig:
    d: int
    max_layer: int | None = None          # default: the halfway layer 2^{d-1} - 1
    worker_count: int = 1
    shard: tuple[int, int] | None = None  # (index, total)
    resume_from: int | None = None
    store_certificates: bool = False
    use_filters: bool = True
    lp_presolve: bool = False
    progress: bool = False

    def __post_init__(self):
        core.check_dimension(self.d)
        top = (1 << (self.d - 1)) - 1
        if self.max_layer is None:
            self.max_layer = top
        if not 0 <= self.max_layer <= top:
            raise ValueError(f"max_layer must be in [0, {top}], got {self.max_layer}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        if self.shard is not None:
            i, n = self.shard
            if not 0 <= i < n:
                raise ValueError(f"shard index {i} out of range for total {n}")


def layer_zero(d: int) -> LayerRecord:
    """The bottom layer: the empty subset, whose point is the origin."""
    return LayerRecord(d, 0, (comb.CanonicalVertex(0, (0,) * d, 2),))


def expand_layer(layer: LayerRecord, cfg: RunConfig, executor=None) -> LayerRecord:
    """Compute layer k + 1 from a complete layer k.

    Applies the shard filter from cfg, dispatches contiguous entry slices
    to workers, merges the per-worker candidate sets, and returns the
    entries sorted by point.
    """
    masks = [e.subset for e in layer.entries]
    if cfg.shard is not None:
        i, n = cfg.shard
        masks = masks[i::n]
    t0 = time.monotonic()
    chunks = _slice(masks, cfg.worker_count)
    args = [
        (layer.d, layer.k, chunk, cfg.use_filters, cfg.lp_presolve, cfg.store_certificates)
        for chunk in chunks
    ]
    if executor is not None and len(args) > 1:
        results = list(executor.map(_expand_chunk, args))
    else:
        results = [_expand_chunk(a) for a in args]
    merged: dict[tuple[int, ...], comb.CanonicalVertex] = {}
    candidates = lp_calls = 0
    for found, n_cand, n_lp in results:
        candidates += n_cand
        lp_calls += n_lp
        for point, cv in found.items():
            prev = merged.get(point)
            if prev is None:
                merged[point] = cv
            elif prev.subset != cv.subset:
                raise AssertionError(f"two vertex subsets share the point {point}")
    entries = tuple(merged[p] for p in sorted(merged))
    if cfg.progress:
        print(
            f"layer {layer.k + 1}: {len(entries)} entries, {candidates} candidates, "
            f"{lp_calls} LP calls, {time.monotonic() - t0:.1f} seconds",
            file=sys.stderr,
        )
    return LayerRecord(layer.d, layer.k + 1, entries)


def generate(cfg: RunConfig, start: LayerRecord | None = None):
    """Yield layers from the start layer (default: layer 0) up to cfg.max_layer.

    With ``start`` given, yields layers start.k + 1 .. max_layer and is
    identical to the tail of a fresh run.
    """
    if start is None:
        layer = layer_zero(cfg.d)
        yield layer
    else:
        if start.d != cfg.d:
            raise ValueError(f"start layer is for d={start.d}, config wants d={cfg.d}")
        layer = start
    if cfg.shard is not None and cfg.max_layer - layer.k > 1:
        raise ValueError("sharded runs expand a single layer; merge before continuing")
    executor = None
    try:
        if cfg.worker_count > 1 and len(layer.entries) > 1:
            executor = ProcessPoolExecutor(max_workers=cfg.worker_count)
        while layer.k < cfg.max_layer:
            layer = expand_layer(layer, cfg, executor)
            yield layer
    finally:
        if executor is not None:
            executor.shutdown()


def run(cfg: RunConfig) -> list[LayerRecord]:
    """All layers of a fresh run, as a list."""
    return list(generate(cfg))


def _slice(masks, parts):
    if parts <= 1 or len(masks) <= 1:
        return [masks]
    size = math.ceil(len(masks) / parts)
    return [masks[i : i + size] for i in range(0, len(masks), size)]


def _expand_chunk(args):
    """Expand a slice of layer-k subsets; returns (point -> canonical, counters).

    Filter order, cheapest first: all-ones, complement, sorted-extension,
    support bound, submask-count oracle, then the dedup set, then the
    exact feasibility oracle.
    """
    d, k, masks, use_filters, presolve, want_certs = args
    table = comb.submask_table(d)
    ones = core.all_ones_id(d)
    below_half = k + 1 < (1 << (d - 1))
    found: dict[tuple[int, ...], comb.CanonicalVertex] = {}
    candidates = lp_calls = 0
    for S in masks:
        p = core.point_of(S, d)
        for g in range(1, ones + 1):
            gbit = 1 << (g - 1)
            if S & gbit:
                continue
            if use_filters:
                if below_half:
                    if g == ones:
                        continue
                    comp = ones - g
                    if (S >> (comp - 1)) & 1:
                        continue
                if not comb.filter_sorted_extension(p, g, d):
                    continue
                need = (1 << (g.bit_count() - 1)) - 1
                if need > k:
                    continue
                if (S & table[g]).bit_count() != need:
                    continue
            candidates += 1
            child_point = tuple(sorted(core.point_increment(p, g, d)))
            if child_point in found:
                continue
            result = lp.vertex_feasible(S | gbit, d, presolve=presolve)
            lp_calls += 1
            if result.feasible:
                cert = result.certificate if want_certs else None
                found[child_point] = comb.canonicalize(S | gbit, d, cert)
    return found, candidates, lp_calls


def white_whale_vectors(d: int) -> list[tuple[int, ...]]:
    """The full generator list of the d-dimensional White Whale, ordered by id."""
    return [core.vector_of(g, d) for g in range(1, (1 << d))]


def generate_generic(G, use_symmetry: bool, pre_oracle=None, cfg: RunConfig | None = None):
    """Layered vertex generation over an arbitrary integer generator list.

    With ``use_symmetry=False``: the plain layered scan over all layers
    0..m, entries carrying their actual (unsorted) points with orbit size 1.
    With ``use_symmetry=True``: orbitwise generation up to layer floor(m/2),
    assuming G is invariant under coordinate permutations.  ``pre_oracle``
    is an optional predicate(mask, j) consulted before each feasibility
    call; it must only return False for certified non-vertices.

    Returns the list of LayerRecords.
    """
    vectors = [tuple(int(x) for x in v) for v in G]
    if not vectors:
        raise ValueError("empty generator list")
    d = len(vectors[0])
    _check_no_collinear(vectors)
    m = len(vectors)
    presolve = cfg.lp_presolve if cfg is not None else False
    top = m // 2 if use_symmetry else m
    if cfg is not None and cfg.max_layer is not None and not use_symmetry:
        top = min(top, cfg.max_layer)
    index_of = {v: j for j, v in enumerate(vectors)}

    origin = (0,) * d
    first = comb.CanonicalVertex(0, origin, 2 if use_symmetry else 1)
    layers = [LayerRecord(d, 0, (first,))]
    current = {origin: 0}
    for k in range(top):
        nxt: dict[tuple[int, ...], int] = {}
        for point, S in current.items():
            for j in range(m):
                if (S >> j) & 1:
                    continue
                if pre_oracle is not None and not pre_oracle(S, j):
                    continue
                child_point = tuple(a + b for a, b in zip(point, vectors[j]))
                if use_symmetry:
                    key = tuple(sorted(child_point))
                else:
                    key = child_point
                if key in nxt:
                    continue
                if not lp.vertex_feasible_vectors(S | (1 << j), vectors, presolve).feasible:
                    continue
                child = S | (1 << j)
                if use_symmetry:
                    perm = comb.sorting_permutation(child_point)
                    child = _permute_generic(child, perm, vectors, index_of)
                nxt[key] = child
        entries = tuple(
            comb.CanonicalVertex(nxt[p], p, comb.orbit_size(p, d) if use_symmetry else 1)
            for p in sorted(nxt)
        )
        layers.append(LayerRecord(d, k + 1, entries))
        current = {p: nxt[p] for p in nxt}
    return layers


def _permute_generic(mask, perm, vectors, index_of):
    out = 0
    j = 0
    while mask:
        if mask & 1:
            v = vectors[j]
            pv = tuple(v[i] for i in perm)
            try:
                out |= 1 << index_of[pv]
            except KeyError:
                raise ValueError("generator set is not permutation-invariant") from None
        mask >>= 1
        j += 1
    return out


def _check_no_collinear(vectors):
    seen = {}
    for v in vectors:
        if not any(v):
            raise ValueError("zero vector is not a valid generator")
        g = 0
        for x in v:
            g = math.gcd(g, x)
        direction = tuple(x // g for x in v)
        lead = next(x for x in direction if x)
        if lead < 0:
            direction = tuple(-x for x in direction)
        if direction in seen:
            raise ValueError(f"collinear generators: {seen[direction]} and {v}")
        seen[direction] = v
