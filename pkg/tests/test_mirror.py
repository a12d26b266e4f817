import math
import random
from itertools import product

import pytest

from syzkit import (
    DiscClass,
    LaurentPolynomial,
    MinkowskiDecomposition,
    SECTOR_D0,
    SECTOR_DINF,
    SECTOR_NONE,
    ShapeMismatchError,
    chamber_uv,
    disc_potential,
    enumerate_gw_classes,
    gw_invariant,
    hull,
    lattice_points,
    minkowski_sum_all,
    newton_polytope,
    syz_mirror,
    wall_factor,
)
from conftest import ap_decomposition, random_unimodular_simplex, seg, tri


def rational_dict(poly):
    return {e: int(c) for e, c in poly.rational_terms().items()}


def brute_invariant(sector, rows, chamber):
    # admissibility restated from scratch: unit entries, at most one per wall,
    # and only walls on the class's side of the chamber
    for i, row in enumerate(rows):
        if any(x not in (0, 1) for x in row):
            return 0
        if sum(row) > 1:
            return 0
        if any(row):
            if sector == SECTOR_D0 and i > chamber:
                return 0
            if sector == SECTOR_DINF and i <= chamber:
                return 0
    return 1


class TestWallFactor:
    def test_segment_e1(self):
        assert rational_dict(wall_factor(seg((1, 0)))) == {(0, 0): 1, (1, 0): 1}

    def test_triangle(self):
        assert rational_dict(wall_factor(tri((1, 0), (1, 1)))) == {
            (0, 0): 1, (1, 0): 1, (1, 1): 1,
        }

    def test_segment_e2(self):
        assert rational_dict(wall_factor(seg((0, 1)))) == {(0, 0): 1, (0, 1): 1}


class TestSyzMirror:
    @pytest.mark.parametrize("p", range(1, 11))
    def test_ap_binomials(self, p):
        mirror = syz_mirror(ap_decomposition(p))
        assert rational_dict(mirror.expanded) == {
            (k,): math.comb(p + 1, k) for k in range(p + 2)
        }

    def test_conifold(self, conifold):
        mirror = syz_mirror(conifold)
        assert rational_dict(mirror.expanded) == {
            (0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1,
        }

    def test_hexagon_coefficients(self, hexagon_segments, hexagon_triangles):
        assert syz_mirror(hexagon_segments).table[(1, 1)] == 2
        assert syz_mirror(hexagon_triangles).table[(1, 1)] == 3

    def test_factored_matches_summands(self, hexagon_triangles):
        mirror = syz_mirror(hexagon_triangles)
        assert len(mirror.factored) == 2
        prod_poly = LaurentPolynomial.constant(2, 1)
        for f in mirror.factored:
            prod_poly = prod_poly * f
        assert prod_poly == mirror.expanded

    def test_newton_polytope_is_the_polytope(self, hexagon_segments):
        mirror = syz_mirror(hexagon_segments)
        assert newton_polytope(mirror.expanded) == hexagon_segments.polytope

    def test_table_properties_on_fixtures(
        self, hexagon_segments, hexagon_triangles, conifold
    ):
        for dec in (hexagon_segments, hexagon_triangles, conifold, ap_decomposition(3)):
            mirror = syz_mirror(dec)
            for v in dec.polytope.vertices:
                assert mirror.table[v] == 1
            expected = 1
            for k in dec.ks:
                expected *= 1 + k
            assert mirror.table.total() == expected
            # these fixtures cover every lattice point
            assert mirror.table.points() == lattice_points(dec.polytope)

    def test_expansion_independent_of_summand_order(self, hexagon):
        a = MinkowskiDecomposition(hexagon, (0, 0), (seg((1, 1)), seg((1, 0)), seg((0, 1))))
        b = MinkowskiDecomposition(hexagon, (0, 0), (seg((0, 1)), seg((1, 1)), seg((1, 0))))
        assert syz_mirror(a).expanded == syz_mirror(b).expanded

    def test_interior_coefficient_can_vanish(self):
        # the two antidiagonal segments cover only the vertex sums, so the
        # interior point (1, 0) of the rotated square carries coefficient 0;
        # the table simply omits it
        rotated = hull([(0, 0), (1, 1), (2, 0), (1, -1)])
        dec = MinkowskiDecomposition(
            rotated, (0, 0), (seg((1, 1)), seg((1, -1)))
        )
        mirror = syz_mirror(dec)
        assert (1, 0) in lattice_points(rotated)
        assert mirror.table.count((1, 0)) == 0
        assert mirror.table.total() == 4

    def test_random_decompositions_vertices_and_newton(self):
        rng = random.Random(43)
        for _ in range(30):
            parts = [random_unimodular_simplex(rng) for _ in range(rng.randint(1, 4))]
            p = minkowski_sum_all((hull(s.vertex_set()) for s in parts), 2)
            dec = MinkowskiDecomposition(p, (0, 0), tuple(parts))
            mirror = syz_mirror(dec)
            assert newton_polytope(mirror.expanded) == p
            for v in p.vertices:
                assert mirror.table[v] == 1
            assert all(n >= 1 for n in mirror.table.entries.values())


class TestDiscPotential:
    def test_conifold(self, conifold):
        got = rational_dict(disc_potential(conifold))
        assert got == {(1, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (1, 1, 1): 1}

    def test_a1(self, a1):
        assert rational_dict(disc_potential(a1)) == {(1, 0): 1, (1, 1): 2, (1, 2): 1}

    def test_vertex_terms_have_coefficient_one(self, hexagon_triangles):
        w = disc_potential(hexagon_triangles)
        for v in hexagon_triangles.polytope.vertices:
            assert w.coefficient((1,) + v).as_fraction() == 1


class TestDiscClass:
    def test_maslov_index_by_sector(self):
        assert DiscClass(SECTOR_D0, ((0,),)).maslov_index == 2
        assert DiscClass(SECTOR_DINF, ((1,),)).maslov_index == 2
        assert DiscClass(SECTOR_NONE, ((1,),)).maslov_index == 0

    def test_negative_multiplicities_rejected(self):
        with pytest.raises(ValueError):
            DiscClass(SECTOR_D0, ((-1,),))

    def test_unknown_sector_rejected(self):
        with pytest.raises(ValueError):
            DiscClass("D1", ((0,),))


class TestGwInvariant:
    def test_empty_table_counts_one(self, hexagon_segments):
        beta = DiscClass(SECTOR_D0, ((0,), (0,), (0,)))
        for chamber in range(-1, hexagon_segments.p + 1):
            assert gw_invariant(hexagon_segments, chamber, beta) == 1

    def test_double_multiplicity_killed(self, hexagon_segments):
        beta = DiscClass(SECTOR_D0, ((2,), (0,), (0,)))
        assert gw_invariant(hexagon_segments, hexagon_segments.p, beta) == 0

    def test_wall_above_fiber_killed(self, hexagon_segments):
        beta = DiscClass(SECTOR_D0, ((0,), (1,), (0,)))
        assert gw_invariant(hexagon_segments, 0, beta) == 0
        assert gw_invariant(hexagon_segments, 1, beta) == 1

    def test_dinf_supported_above_fiber(self, conifold):
        beta = DiscClass(SECTOR_DINF, ((0,), (1,)))
        assert gw_invariant(conifold, 0, beta) == 1
        assert gw_invariant(conifold, 1, beta) == 0

    def test_two_walls_touched_at_most_once_each(self, hexagon_triangles):
        beta = DiscClass(SECTOR_D0, ((1, 0), (0, 1)))
        assert gw_invariant(hexagon_triangles, 1, beta) == 1
        beta_bad = DiscClass(SECTOR_D0, ((1, 1), (0, 0)))
        assert gw_invariant(hexagon_triangles, 1, beta_bad) == 0

    def test_maslov_zero_warns_and_returns_zero(self, conifold):
        beta = DiscClass(SECTOR_NONE, ((1,), (0,)))
        with pytest.warns(UserWarning):
            assert gw_invariant(conifold, 0, beta) == 0

    def test_shape_mismatch(self, conifold):
        with pytest.raises(ShapeMismatchError):
            gw_invariant(conifold, 0, DiscClass(SECTOR_D0, ((0,),)))
        with pytest.raises(ShapeMismatchError):
            gw_invariant(conifold, 0, DiscClass(SECTOR_D0, ((0, 0), (0,))))

    def test_chamber_range(self, conifold):
        beta = DiscClass(SECTOR_D0, ((0,), (0,)))
        with pytest.raises(ValueError):
            gw_invariant(conifold, 2, beta)
        with pytest.raises(ValueError):
            gw_invariant(conifold, -2, beta)


class TestEnumerateClasses:
    def test_hexagon_segments_top_chamber(self, hexagon_segments):
        classes = enumerate_gw_classes(hexagon_segments, 2, SECTOR_D0)
        assert len(classes) == 8

    def test_bottom_chamber_only_the_basic_class(self, hexagon_segments):
        classes = enumerate_gw_classes(hexagon_segments, -1, SECTOR_D0)
        assert classes == [DiscClass(SECTOR_D0, ((0,), (0,), (0,)))]

    def test_conifold_middle_chamber(self, conifold):
        assert len(enumerate_gw_classes(conifold, 0, SECTOR_D0)) == 2
        assert len(enumerate_gw_classes(conifold, 0, SECTOR_DINF)) == 2

    def test_counts_match_product_formula(self, hexagon_triangles):
        dec = hexagon_triangles
        for chamber in range(-1, dec.p + 1):
            low = enumerate_gw_classes(dec, chamber, SECTOR_D0)
            high = enumerate_gw_classes(dec, chamber, SECTOR_DINF)
            expected_low = 1
            expected_high = 1
            for i, k in enumerate(dec.ks):
                if i <= chamber:
                    expected_low *= 1 + k
                else:
                    expected_high *= 1 + k
            assert len(low) == expected_low
            assert len(high) == expected_high

    def test_equals_exhaustive_invariant_scan(
        self, conifold, hexagon_segments, hexagon_triangles
    ):
        for dec in (conifold, hexagon_segments, hexagon_triangles):
            shapes = [range(3)] * sum(dec.ks)
            for chamber in range(-1, dec.p + 1):
                for sector in (SECTOR_D0, SECTOR_DINF):
                    keep = set(enumerate_gw_classes(dec, chamber, sector))
                    for flat in product(*shapes):
                        rows = []
                        pos = 0
                        for k in dec.ks:
                            rows.append(flat[pos:pos + k])
                            pos += k
                        beta = DiscClass(sector, tuple(rows))
                        got = gw_invariant(dec, chamber, beta)
                        assert got == brute_invariant(sector, beta.multiplicities, chamber)
                        assert got == (1 if beta in keep else 0)


class TestChamberUV:
    def test_bottom_chamber(self, conifold):
        u, v = chamber_uv(conifold, -1)
        assert rational_dict(u) == {(1, 0, 0): 1}
        g = syz_mirror(conifold).expanded
        assert v == g.prepend_variable(-1)

    def test_top_chamber(self, conifold):
        u, v = chamber_uv(conifold, conifold.p)
        g = syz_mirror(conifold).expanded
        assert u == g.prepend_variable(1)
        assert rational_dict(v) == {(-1, 0, 0): 1}

    def test_conifold_middle(self, conifold):
        u, v = chamber_uv(conifold, 0)
        assert rational_dict(u) == {(1, 0, 0): 1, (1, 1, 0): 1}
        assert rational_dict(v) == {(-1, 0, 0): 1, (-1, 0, 1): 1}
        assert u * v == syz_mirror(conifold).expanded.prepend_variable(0)

    def test_product_identity_everywhere(
        self, conifold, hexagon_segments, hexagon_triangles
    ):
        for dec in (conifold, hexagon_segments, hexagon_triangles, ap_decomposition(4)):
            g = syz_mirror(dec).expanded.prepend_variable(0)
            for chamber in range(-1, dec.p + 1):
                u, v = chamber_uv(dec, chamber)
                assert u * v == g


class TestGWTableJson:
    def test_sorted_entries(self, hexagon_triangles):
        data = syz_mirror(hexagon_triangles).table.to_json_dict()
        assert data["entries"][0] == {"point": [0, 0], "n": 1}
        points = [tuple(e["point"]) for e in data["entries"]]
        assert points == sorted(points)

    def test_disc_class_json_round_trip(self):
        beta = DiscClass(SECTOR_D0, ((0,), (1,), (0,)))
        assert DiscClass.from_json_dict(beta.to_json_dict()) == beta
