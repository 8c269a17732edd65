"""Generator encoding and subset arithmetic for the White Whale.

The generators of the d-dimensional White Whale are the 2^d - 1 non-zero
0/1-valued d-vectors.  A generator is identified with the integer whose
binary digits are its coordinates: coordinate i (1-indexed, i = 1 first)
is bit d - i, so the last coordinate is the least significant bit.  Under
this mapping (0,...,0,1) <-> 1 and the all-ones vector <-> 2^d - 1.

A subset S of generators is a bitmask over the integers 1..2^d - 1:
bit j - 1 is set iff generator j belongs to S.
"""

from __future__ import annotations

MIN_DIMENSION = 2
MAX_DIMENSION = 16


def check_dimension(d: int) -> int:
    if not MIN_DIMENSION <= d <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in [{MIN_DIMENSION}, {MAX_DIMENSION}], got {d}")
    return d


def generator_count(d: int) -> int:
    """Number of generators of the d-dimensional White Whale."""
    return (1 << d) - 1


def all_ones_id(d: int) -> int:
    """The id of the all-ones generator (1,...,1)."""
    return (1 << d) - 1


def full_mask(d: int) -> int:
    """Mask of the whole generator set."""
    return (1 << generator_count(d)) - 1


def check_generator(g: int, d: int) -> int:
    if not 1 <= g <= generator_count(d):
        raise ValueError(f"generator id must be in [1, {generator_count(d)}], got {g}")
    return g


def vector_of(g: int, d: int) -> tuple[int, ...]:
    """Coordinate vector of generator g in dimension d."""
    check_dimension(d)
    check_generator(g, d)
    return tuple((g >> (d - 1 - i)) & 1 for i in range(d))


def id_of(vector) -> int:
    """Inverse of vector_of: the integer id of a 0/1 coordinate vector."""
    g = 0
    for v in vector:
        if v not in (0, 1):
            raise ValueError(f"not a 0/1 vector: {tuple(vector)}")
        g = (g << 1) | v
    if g == 0:
        raise ValueError("the zero vector is not a generator")
    return g


def generators_of(mask: int):
    """Iterate the generator ids in a subset mask, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def mask_of(ids) -> int:
    """Subset mask containing the given generator ids."""
    mask = 0
    for g in ids:
        mask |= 1 << (g - 1)
    return mask


def point_of(mask: int, d: int) -> tuple[int, ...]:
    """Coordinatewise sum of the generators in the mask; the origin for the empty mask."""
    coords = [0] * d
    while mask:
        low = mask & -mask
        g = low.bit_length()
        for i in range(d):
            coords[i] += (g >> (d - 1 - i)) & 1
        mask ^= low
    return tuple(coords)


def point_increment(p, g: int, d: int) -> tuple[int, ...]:
    """The point of S + {g} given the point of S, for g not in S."""
    return tuple(p[i] + ((g >> (d - 1 - i)) & 1) for i in range(d))


def antipode(mask: int, d: int) -> int:
    """The complementary subset G_d \\ S; its point mirrors through the center."""
    return full_mask(d) ^ mask


def center_corner(d: int) -> tuple[int, ...]:
    """p(G_d) = (2^{d-1}, ..., 2^{d-1}), the corner opposite the origin."""
    return (1 << (d - 1),) * d
