import pytest

from whitewhale import analytics, core, engine, lp, tables


def test_degree_below_examples():
    assert analytics.degree_below(0, 3) == 0
    assert analytics.degree_below(core.mask_of([1, 2, 3]), 3) == 2
    assert analytics.degree_below(core.mask_of([1, 3, 5, 9]), 4) == 3


def test_degree_above_examples():
    assert analytics.degree_above(0, 3) == 3
    assert analytics.degree_above(core.mask_of([1, 3, 5, 9]), 4) == 3
    assert analytics.degree_above(core.full_mask(3), 3) == 0


def test_top_layer_degree_above_is_one(generated):
    for d in (3, 4):
        layers, _ = generated(d)
        for e in layers[-1].entries:
            assert analytics.degree_above(e.subset, d) == 1


def test_degree_of_extremes():
    for d in (3, 4):
        assert analytics.degree_above(0, d) == d
        assert analytics.degree_below(core.full_mask(d), d) == d


def test_degree_table_d3(generated):
    layers, _ = generated(3)
    for records in analytics.layer_degrees(layers):
        for r in records:
            assert r.degree == 3


def test_degree_table_d4(generated):
    layers, _ = generated(4)
    got = [
        (r.deg_below, r.deg_above)
        for recs in analytics.layer_degrees(layers)
        for r in recs
    ]
    assert got == [(db, da) for *_, db, da in tables.D4_ROWS]


def test_count_edges_d3_decomposition(generated):
    layers, _ = generated(3)
    report = analytics.count_edges(layers)
    per_layer, middle = tables.D3_EDGE_DECOMPOSITION
    assert [t for _, t in report.per_layer] == per_layer
    assert report.middle_term == middle
    assert report.e_total == 48


def test_count_edges_d4(generated):
    layers, _ = generated(4)
    assert analytics.count_edges(layers).e_total == 760


def test_count_edges_needs_complete_layers(generated):
    layers, _ = generated(3)
    with pytest.raises(ValueError):
        analytics.count_edges(layers[:-1])


def test_membership_degrees_match_oracle_degrees(generated):
    layers, _ = generated(4)
    by_oracle = analytics.layer_degrees(layers)
    by_membership = analytics.degrees_by_membership(layers)
    for oracle_recs, member_recs in zip(by_oracle, by_membership):
        assert [(r.deg_below, r.deg_above) for r in oracle_recs] == [
            (r.deg_below, r.deg_above) for r in member_recs
        ]


def test_family_U_examples():
    assert analytics.family_U(3, 2) == core.mask_of([1, 3, 5])
    assert analytics.family_U(4, 2) == core.mask_of([1, 3, 5, 9])
    assert analytics.family_U_point(3, 2) == (1, 1, 3)
    assert analytics.family_U_point(4, 2) == (1, 1, 1, 4)
    for d in (3, 4, 5, 6):
        for k in range(1, d):
            u = analytics.family_U(d, k)
            assert core.point_of(u, d) == analytics.family_U_point(d, k)
    with pytest.raises(ValueError):
        analytics.family_U(4, 4)
    with pytest.raises(ValueError):
        analytics.family_U(4, 0)


def test_family_W_examples():
    assert analytics.family_W(3, 2) == core.mask_of([1, 2, 3])
    assert analytics.family_W_point(3, 2) == (0, 2, 2)
    for d in (3, 4, 5):
        for k in range(1, d + 1):
            w = analytics.family_W(d, k)
            assert w.bit_count() == (1 << k) - 1
            assert core.point_of(w, d) == analytics.family_W_point(d, k)
    with pytest.raises(ValueError):
        analytics.family_W(4, 5)


def test_family_W_is_vertex_in_its_layer(generated):
    for d in (3, 4):
        layers, _ = generated(d)
        for k in range(1, d):
            layer_index = (1 << k) - 1
            assert lp.vertex_feasible(analytics.family_W(d, k), d).feasible
            assert analytics.family_W_point(d, k) in {
                e.point for e in layers[layer_index].entries
            }


def test_family_U_certificates_values():
    certs = analytics.family_U_certificates(5, 2)
    (_, main), (_, below), (_, above) = certs
    assert main == (-2, -2, -2, -2, 3)
    assert below == (-4, -4, -4, -6, 5)
    assert above == (-5, -5, -3, -3, 7)
    for d in (3, 4, 5):
        for k in range(1, d):
            for S, c in analytics.family_U_certificates(d, k):
                assert lp.verify_certificate(c, S, d)


def test_family_degree_check_examples():
    assert analytics.family_degree_check(4, 2) == (3, 3, 6)
    assert analytics.family_degree_check(3, 1) == (1, 2, 3)
    assert analytics.family_degree_check(6, 3) == (10, 10, 20)


def test_brute_force_vertices():
    square = analytics.brute_force_vertices([(1, 0), (0, 1)])
    assert len(square) == 4
    assert len(analytics.white_whale_brute_force(3)) == 32
    with pytest.raises(ValueError):
        analytics.brute_force_vertices([(1,)] * 21)
    with pytest.raises(ValueError):
        analytics.brute_force_vertices([])


def test_expand_orbit_sizes(generated):
    layers, _ = generated(3)
    for layer in layers:
        for e in layer.entries:
            assert len(analytics.expand_orbit(e, 3)) == e.orbit_size


def test_coordinate_bounds(generated):
    for d in (3, 4):
        layers, _ = generated(d)
        hi = 1 << (d - 1)
        for layer in layers:
            for e in layer.entries:
                assert all(0 <= x <= hi for x in e.point)


def test_divisibility_invariants(generated):
    for d in (3, 4):
        layers, _ = generated(d)
        a = sum(l.orbit_sum for l in layers)
        assert a % (2 * (d + 1)) == 0
        e = analytics.count_edges(layers).e_total
        assert e % (d * (d + 1)) == 0
