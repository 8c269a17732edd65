"""Embedded ground-truth values for verification.

Vertex counts a(d) follow OEIS A034997; edge counts e(d) and canonical
orbit counts o(d) are the published White Whale sizes.  The d=3 and d=4
layer tables carry full rows: layer, canonical subset (generator ids),
point, orbit size, and degrees from below/above.
"""

from __future__ import annotations

A_VALUES = {
    2: 6,
    3: 32,
    4: 370,
    5: 11_292,
    6: 1_066_044,
    7: 347_326_352,
    8: 419_172_756_930,
    9: 1_955_230_985_997_140,
}

E_VALUES = {
    2: 6,
    3: 48,
    4: 760,
    5: 30_540,
    6: 3_662_064,
    7: 1_463_047_264,
    8: 2_105_325_742_608,
    9: 11_463_171_860_268_180,
}

O_VALUES = {
    2: 2,
    3: 5,
    4: 18,
    5: 112,
    6: 1_512,
    7: 56_220,
    8: 6_942_047,
    9: 3_140_607_258,
}

# (layer, subset ids, point, orbit size, deg_below, deg_above)
D3_ROWS = [
    (0, (), (0, 0, 0), 2, 0, 3),
    (1, (1,), (0, 0, 1), 6, 1, 2),
    (2, (1, 3), (0, 1, 2), 12, 1, 2),
    (3, (1, 2, 3), (0, 2, 2), 6, 2, 1),
    (3, (1, 3, 5), (1, 1, 3), 6, 2, 1),
]

D4_ROWS = [
    (0, (), (0, 0, 0, 0), 2, 0, 4),
    (1, (1,), (0, 0, 0, 1), 8, 1, 3),
    (2, (1, 3), (0, 0, 1, 2), 24, 1, 3),
    (3, (1, 2, 3), (0, 0, 2, 2), 12, 2, 2),
    (3, (1, 3, 5), (0, 1, 1, 3), 24, 2, 2),
    (4, (1, 2, 3, 7), (0, 1, 3, 3), 24, 1, 3),
    (4, (1, 3, 5, 7), (0, 2, 2, 4), 24, 1, 3),
    (4, (1, 3, 5, 9), (1, 1, 1, 4), 8, 3, 3),
    (5, (1, 2, 3, 5, 7), (0, 2, 3, 4), 48, 2, 2),
    (5, (1, 2, 3, 7, 11), (1, 1, 4, 4), 12, 2, 4),
    (5, (1, 3, 5, 7, 9), (1, 2, 2, 5), 24, 2, 2),
    (6, (1, 2, 3, 5, 6, 7), (0, 3, 4, 4), 24, 2, 2),
    (6, (1, 2, 3, 5, 7, 11), (1, 2, 4, 5), 48, 2, 2),
    (6, (1, 3, 5, 7, 9, 11), (2, 2, 3, 6), 24, 2, 2),
    (7, (1, 2, 3, 4, 5, 6, 7), (0, 4, 4, 4), 8, 3, 1),
    (7, (1, 2, 3, 5, 6, 7, 11), (1, 3, 5, 5), 24, 3, 1),
    (7, (1, 2, 3, 5, 7, 9, 11), (2, 2, 4, 6), 24, 3, 1),
    (7, (1, 3, 5, 7, 9, 11, 13), (3, 3, 3, 7), 8, 3, 1),
]

# d=3 edge-count decomposition: per-layer orbit-weighted degrees from
# below, then the central term.
D3_EDGE_DECOMPOSITION = ([6, 12, 24], 6)
