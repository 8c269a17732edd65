"""Degrees, edge counts, vertex families, and brute-force oracles.

Degrees are recomputed per canonical representative with the exact
feasibility oracle (permutation invariance makes that enough; orbit
expansion multiplies by the orbit size).  The total edge count follows
the halved summation: orbit-weighted degrees from below over the layers
up to the halfway layer, plus half an orbit per vertex of the top layer
for the central edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb as binom

from . import comb, core, engine, lp


@dataclass(frozen=True)
class DegreeRecord:
    canonical: comb.CanonicalVertex
    deg_below: int
    deg_above: int

    @property
    def degree(self) -> int:
        return self.deg_below + self.deg_above


@dataclass(frozen=True)
class EdgeCountReport:
    d: int
    per_layer: tuple[tuple[int, int], ...]  # (k, sum of orbit_size * deg_below)
    middle_term: int                        # sum of orbit_size / 2 over the top layer
    e_total: int


def degree_below(S: int, d: int, presolve: bool = False) -> int:
    """Number of members whose removal leaves a vertex.  Zero for the empty set.

    Pre-filter: if S \\ {g} is a vertex then re-adding g must satisfy the
    submask-count condition, i.e. |S<g>| = 2^{sigma(g)-1} (g included).
    """
    if S == 0:
        return 0
    table = comb.submask_table(d)
    count = 0
    for g in core.generators_of(S):
        if (S & table[g]).bit_count() != 1 << (g.bit_count() - 1):
            continue
        if lp.vertex_feasible(S & ~(1 << (g - 1)), d, presolve).feasible:
            count += 1
    return count


def degree_above(S: int, d: int, presolve: bool = False) -> int:
    """Number of non-members whose addition gives a vertex.  Zero for the full set.

    Prunes with the membership rule for the all-ones generator, the
    complementary-pair rule below the halfway layer, and the submask-count
    oracle; all are necessary conditions, so no edge is lost.
    """
    table = comb.submask_table(d)
    ones = core.all_ones_id(d)
    k_next = S.bit_count() + 1
    half = 1 << (d - 1)
    ones_in = (S >> (ones - 1)) & 1
    count = 0
    for g in range(1, ones + 1):
        gbit = 1 << (g - 1)
        if S & gbit:
            continue
        if k_next < half:
            if g == ones:
                continue
            if (S >> (ones - g - 1)) & 1:
                continue
        elif not ones_in and g != ones:
            continue
        need = (1 << (g.bit_count() - 1)) - 1
        if (S & table[g]).bit_count() != need:
            continue
        if lp.vertex_feasible(S | gbit, d, presolve).feasible:
            count += 1
    return count


def layer_degrees(layers, presolve: bool = False) -> list[list[DegreeRecord]]:
    """DegreeRecords for every canonical vertex of every layer."""
    out = []
    for layer in layers:
        out.append(
            [
                DegreeRecord(
                    e,
                    degree_below(e.subset, layer.d, presolve),
                    degree_above(e.subset, layer.d, presolve),
                )
                for e in layer.entries
            ]
        )
    return out


def count_edges(layers, presolve: bool = False) -> EdgeCountReport:
    """Total edge count from complete layers 0..2^{d-1}-1.

    e(d) = sum over k of the orbit-weighted degrees from below, plus half
    an orbit per top-layer vertex for the edges crossing the center.
    """
    d = layers[0].d
    top = (1 << (d - 1)) - 1
    ks = {layer.k for layer in layers}
    if ks != set(range(top + 1)):
        raise ValueError(f"need complete layers 0..{top}, got {sorted(ks)}")
    by_k = {layer.k: layer for layer in layers}
    per_layer = []
    for k in range(1, top + 1):
        total = sum(
            e.orbit_size * degree_below(e.subset, d, presolve) for e in by_k[k].entries
        )
        per_layer.append((k, total))
    middle = 0
    for e in by_k[top].entries:
        if e.orbit_size % 2:
            raise AssertionError(f"odd orbit size {e.orbit_size} in the top layer")
        middle += e.orbit_size // 2
    return EdgeCountReport(d, tuple(per_layer), middle, sum(t for _, t in per_layer) + middle)


def degrees_by_membership(layers) -> list[list[DegreeRecord]]:
    """Oracle-free degrees from layer membership, for cross-validation.

    A neighbour p(S +- {g}) is a vertex iff its sorted point appears in
    the adjacent layer's canonical point set.  Needs the layer above, so
    the top layer is skipped.
    """
    points = [{e.point for e in layer.entries} for layer in layers]
    out = []
    for layer in layers[:-1]:
        d, k = layer.d, layer.k
        records = []
        for e in layer.entries:
            below = above = 0
            for g in core.generators_of(e.subset):
                q = tuple(sorted(core.point_of(e.subset & ~(1 << (g - 1)), d)))
                below += k > 0 and q in points[k - 1]
            for g in range(1, core.all_ones_id(d) + 1):
                if (e.subset >> (g - 1)) & 1:
                    continue
                q = tuple(sorted(core.point_increment(e.point, g, d)))
                above += q in points[k + 1]
            records.append(DegreeRecord(e, below, above))
        out.append(records)
    return out


def family_U(d: int, k: int) -> int:
    """Mask of all generators with last coordinate 1 and support at most k."""
    core.check_dimension(d)
    if not 1 <= k <= d - 1:
        raise ValueError(f"need 1 <= k <= d-1, got k={k} for d={d}")
    return core.mask_of(g for g in range(1, 1 << d, 2) if g.bit_count() <= k)


def family_U_point(d: int, k: int) -> tuple[int, ...]:
    """Closed form for the point of the U family."""
    first = sum(binom(d - 2, i) for i in range(k - 1))
    last = sum(binom(d - 1, i) for i in range(k))
    return (first,) * (d - 1) + (last,)


def family_W(d: int, k: int) -> int:
    """Mask {1, ..., 2^k - 1}: the generators supported on the last k coordinates."""
    core.check_dimension(d)
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got k={k} for d={d}")
    return (1 << ((1 << k) - 1)) - 1


def family_W_point(d: int, k: int) -> tuple[int, ...]:
    return (0,) * (d - k) + (1 << (k - 1),) * k


def family_U_certificates(d: int, k: int) -> list[tuple[int, tuple[int, ...]]]:
    """The three closed-form certificates around the U-family vertex.

    Returns (subset, certificate) pairs for the vertex itself, its
    below-neighbour with the full-support-k generator removed, and its
    above-neighbour with the support-(k+1) generator added.
    """
    u = family_U(d, k)
    main = (u, (-2,) * (d - 1) + (2 * k - 1,))
    g_below = (1 << k) - 1
    below = (
        u & ~(1 << (g_below - 1)),
        (2 - 3 * k,) * (d - k) + (-3 * k,) * (k - 1) + (3 * k * k - 3 * k - 1,),
    )
    g_above = (1 << (k + 1)) - 1
    above = (
        u | (1 << (g_above - 1)),
        (-2 * k - 1,) * (d - k - 1) + (-2 * k + 1,) * k + (2 * k * k - k + 1,),
    )
    return [main, below, above]


def family_degree_check(d: int, k: int) -> tuple[int, int, int]:
    """Oracle-computed degrees of the U-family vertex, checked against
    the binomial closed forms (C(d-1,k-1), C(d-1,k), C(d,k))."""
    u = family_U(d, k)
    below = degree_below(u, d)
    above = degree_above(u, d)
    expect = (binom(d - 1, k - 1), binom(d - 1, k), binom(d, k))
    if (below, above, below + above) != expect:
        raise AssertionError(
            f"U-family degrees ({below}, {above}, {below + above}) != {expect} at d={d}, k={k}"
        )
    return below, above, below + above


def brute_force_vertices(G, presolve: bool = False) -> set[int]:
    """All vertex subsets of the zonotope of G, by testing every subset.

    Independent of the layered engine; uses only the feasibility oracle
    (one call per antipodal pair).  Refuses more than 20 generators.
    """
    vectors = [tuple(v) for v in G]
    m = len(vectors)
    if m > 20:
        raise ValueError(f"brute force over 2^{m} subsets refused (limit 2^20)")
    if m == 0:
        raise ValueError("empty generator list")
    full = (1 << m) - 1
    verdicts = bytearray(1 << m)
    out = set()
    for S in range(1 << m):
        anti = full ^ S
        if anti < S:
            v = verdicts[anti]
        else:
            v = lp.vertex_feasible_vectors(S, vectors, presolve).feasible
            verdicts[S] = v
        if v:
            out.add(S)
    return out


def expand_orbit(cv: comb.CanonicalVertex, d: int) -> set[int]:
    """All subset masks in the orbit of a canonical vertex: every coordinate
    permutation of the subset plus the antipodes of those."""
    from itertools import permutations

    masks = set()
    for perm in permutations(range(d)):
        masks.add(comb.permute_subset(cv.subset, perm, d))
    masks |= {core.antipode(S, d) for S in masks}
    return masks


def all_vertices_from_layers(layers) -> set[int]:
    """Orbit-expand canonical layers into the full vertex subset set."""
    d = layers[0].d
    out = set()
    for layer in layers:
        for e in layer.entries:
            out |= expand_orbit(e, d)
    return out


def white_whale_brute_force(d: int, presolve: bool = False) -> set[int]:
    return brute_force_vertices(engine.white_whale_vectors(d), presolve)
