"""Combinatorial pruning and canonicalization under coordinate permutations.

The filters here certify non-vertices cheaply so that the expensive exact
feasibility oracle is only called on surviving candidates.  All of them are
necessary conditions for vertexhood (given that the subset being extended
is itself a vertex), so pruning never loses a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import core


@dataclass(frozen=True)
class CanonicalVertex:
    """A canonical vertex: nondecreasing point, plus its orbit size."""

    subset: int
    point: tuple[int, ...]
    orbit_size: int
    certificate: tuple[Fraction, ...] | None = field(default=None, compare=False, repr=False)


def support(g: int) -> int:
    """Number of non-zero coordinates of generator g."""
    if g < 1:
        raise ValueError(f"generator id must be positive, got {g}")
    return g.bit_count()


@lru_cache(maxsize=None)
def submask_table(d: int) -> tuple[int, ...]:
    """table[g] = mask of all non-empty submasks of g (g itself included).

    Built once per dimension; read-only afterwards.
    """
    core.check_dimension(d)
    table = [0] * (1 << d)
    for g in range(1, 1 << d):
        bits = 0
        sub = g
        while sub:
            bits |= 1 << (sub - 1)
            sub = (sub - 1) & g
        table[g] = bits
    return tuple(table)


def restricted_count(S: int, g: int, table) -> int:
    """|S<g>|: the number of members of S coordinatewise dominated by g."""
    return (S & table[g]).bit_count()


def oracle_O(S: int, g: int, table) -> bool:
    """Necessary condition for p(S + {g}) to be a vertex when p(S) is one.

    Requires S<g> to hit exactly one member of each pair summing to g.
    False certifies the extension is not a vertex.
    """
    return (S & table[g]).bit_count() == (1 << (support(g) - 1)) - 1


def filter_ones(k_next: int, d: int, g: int) -> bool:
    """Reject the all-ones generator below the halfway layer.

    A vertex subset contains (1,...,1) iff it has at least 2^{d-1} members.
    """
    return not (g == core.all_ones_id(d) and k_next < (1 << (d - 1)))


def filter_complement(S: int, g: int, d: int) -> bool:
    """Reject g when its complementary generator (1,...,1) - g is in S.

    Sound when the extended subset stays below 2^{d-1} members.
    """
    comp = core.all_ones_id(d) - g
    return comp == 0 or not (S >> (comp - 1)) & 1


def filter_sorted_extension(p, g: int, d: int) -> bool:
    """Keep only extensions whose generator is sorted within tied point blocks.

    For a canonical p, a g decreasing inside a tied block has a sorted
    sibling producing the same canonical child, so rejecting it loses
    nothing.
    """
    for i in range(d - 1):
        if p[i] == p[i + 1]:
            gi = (g >> (d - 1 - i)) & 1
            gi1 = (g >> (d - 2 - i)) & 1
            if gi > gi1:
                return False
    return True


def support_bound_filter(k_next: int, g: int) -> bool:
    """Fast necessary condition for oracle_O: 2^{sigma(g)-1} - 1 <= |S|."""
    return (1 << (support(g) - 1)) - 1 <= k_next - 1


def orbit_size(p, d: int) -> int:
    """Orbit size of a canonical vertex under coordinate permutations and
    central symmetry: 2 * d! / prod(multiplicity!).

    The factor 2 is valid below the halfway layer, where a permutation
    orbit and its antipodal image are disjoint (they sit in different
    layers).
    """
    size = 2 * factorial(d)
    run = 1
    for i in range(1, d):
        if p[i] == p[i - 1]:
            run += 1
        else:
            size //= factorial(run)
            run = 1
    return size // factorial(run)


def sorting_permutation(p) -> tuple[int, ...]:
    """A permutation perm with p[perm[0]] <= p[perm[1]] <= ... (stable on ties)."""
    return tuple(sorted(range(len(p)), key=lambda i: (p[i], i)))


def permute_generator(g: int, perm, d: int) -> int:
    """Apply a coordinate permutation to a generator: new coord j = old coord perm[j]."""
    out = 0
    for j in range(d):
        if (g >> (d - 1 - perm[j])) & 1:
            out |= 1 << (d - 1 - j)
    return out


def permute_subset(S: int, perm, d: int) -> int:
    out = 0
    while S:
        low = S & -S
        out |= 1 << (permute_generator(low.bit_length(), perm, d) - 1)
        S ^= low
    return out


def canonicalize(S: int, d: int, certificate=None) -> CanonicalVertex:
    """Canonical representative of a vertex subset.

    Sorts the point nondecreasing and relabels the subset accordingly.
    For a vertex, every sorting permutation yields the same subset
    (decompositions into generators are unique), so tie handling is
    immaterial.  The caller guarantees S is a vertex.
    """
    p = core.point_of(S, d)
    perm = sorting_permutation(p)
    point = tuple(p[i] for i in perm)
    subset = permute_subset(S, perm, d)
    cert = None
    if certificate is not None:
        cert = tuple(certificate[i] for i in perm)
    return CanonicalVertex(subset, point, orbit_size(point, d), cert)
