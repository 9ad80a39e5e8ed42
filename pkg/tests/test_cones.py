import random

import pytest
from hypothesis import given, settings, strategies as st

from contactres.errors import (
    DimensionMismatch,
    EmptyMarking,
    NoPolarization,
    SizeCapExceeded,
    ZeroOrbit,
)
from contactres.cones import (
    ample_cone,
    cone_from_generators,
    dual_cone,
    movable_chambers,
)
from contactres.lie_core import SimpleType, parabolic, parse_parabolic
from contactres.orbits import parse_orbit, partitions_of, validate_orbit


class TestCanonicalForm:
    def test_interior_generator_dropped(self):
        c = cone_from_generators(2, [(1, 0), (0, 1), (1, 1)])
        assert c.extreme_rays == ((0, 1), (1, 0))
        assert c.lineality_basis == ()

    def test_primitive_scaling(self):
        c = cone_from_generators(2, [(2, 0)])
        assert c.extreme_rays == ((1, 0),)
        c = cone_from_generators(3, [(4, 6, 2)])
        assert c.extreme_rays == ((2, 3, 1),)

    def test_simplicial_coordinate_cone(self):
        c = cone_from_generators(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert c.extreme_rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert c.is_simplicial

    def test_opposite_rays_become_lineality(self):
        c = cone_from_generators(2, [(1, 0), (-1, 0)])
        assert c.extreme_rays == ()
        assert c.lineality_basis == ((1, 0),)

    def test_zero_cone(self):
        c = cone_from_generators(3, [(0, 0, 0)])
        assert c.extreme_rays == () and c.lineality_basis == ()

    def test_rational_input(self):
        from fractions import Fraction
        c = cone_from_generators(2, [(Fraction(1, 2), Fraction(1, 3))])
        assert c.extreme_rays == ((3, 2),)

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            cone_from_generators(2, [(1, 0, 0)])
        with pytest.raises(SizeCapExceeded):
            cone_from_generators(9, [tuple([1] + [0] * 8)])


class TestDuality:
    def test_first_quadrant_self_dual(self):
        c = cone_from_generators(2, [(1, 0), (0, 1)])
        assert dual_cone(c) == c

    def test_ray_dualizes_to_halfplane(self):
        ray = cone_from_generators(2, [(1, 0)])
        half = dual_cone(ray)
        assert half.extreme_rays == ((1, 0),)
        assert half.lineality_basis == ((0, 1),)
        assert set(half.generators) == {(1, 0), (0, 1), (0, -1)}

    def test_curve_cone_dualizes_to_weight_cone(self):
        # identity pairing: the dual of the Schubert-curve coordinate cone
        # is the coordinate cone on the weight basis
        for k in (1, 2, 3, 4):
            ne = cone_from_generators(
                k, [tuple(int(i == j) for j in range(k)) for i in range(k)])
            assert dual_cone(ne) == ne

    def test_double_dual_is_identity(self):
        cones = [
            cone_from_generators(2, [(1, 0)]),
            cone_from_generators(2, [(1, 1), (1, -1)]),
            cone_from_generators(3, [(1, 0, 0), (1, 1, 0), (1, 1, 1)]),
            cone_from_generators(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0)]),
            cone_from_generators(1, [(1,)]),
        ]
        for c in cones:
            assert dual_cone(dual_cone(c)) == c

    def test_facets_support_generators(self):
        c = cone_from_generators(3, [(1, 2, 0), (0, 1, 1), (1, 0, 3)])
        from contactres.ratlinalg import dot
        for h in c.facet_normals:
            assert all(dot(h, g) >= 0 for g in c.generators)

    def test_contains(self):
        c = cone_from_generators(2, [(1, 0), (1, 2)])
        assert c.contains((1, 1)) and c.contains((0, 0))
        assert not c.contains((0, 1)) and not c.contains((-1, 0))


class TestRoundTripSeeded:
    def test_seeded_random_cones(self):
        rng = random.Random("test-dd")
        for _ in range(60):
            dim = rng.randint(1, 4)
            gens = [tuple(rng.randint(-4, 4) for _ in range(dim))
                    for _ in range(rng.randint(1, dim + 3))]
            c = cone_from_generators(dim, gens)
            assert dual_cone(cone_from_generators(dim, c.facet_normals)) == c
            assert dual_cone(dual_cone(c)) == c
            # canonicalization is idempotent
            assert cone_from_generators(dim, c.generators) == c

    def test_higher_dimensions(self):
        rng = random.Random("test-dd-hi")
        for dim in (5, 6):
            for _ in range(5):
                gens = [tuple(rng.randint(-2, 2) for _ in range(dim))
                        for _ in range(rng.randint(1, dim + 1))]
                c = cone_from_generators(dim, gens)
                assert dual_cone(
                    cone_from_generators(dim, c.facet_normals)) == c
                assert dual_cone(dual_cone(c)) == c

    @given(st.integers(min_value=1, max_value=3), st.data())
    @settings(max_examples=60, derandomize=True, deadline=None)
    def test_roundtrip_property(self, dim, data):
        gens = data.draw(st.lists(
            st.tuples(*([st.integers(min_value=-3, max_value=3)] * dim)),
            min_size=1, max_size=5))
        c = cone_from_generators(dim, gens)
        assert dual_cone(dual_cone(c)) == c
        assert cone_from_generators(dim, c.generators) == c
        for g in gens:
            assert c.contains(g)


class TestAmpleCone:
    def test_examples(self):
        c = ample_cone(parse_parabolic("A3:{1,3}"))
        assert c.extreme_rays == ((0, 1), (1, 0))
        c = ample_cone(parse_parabolic("A3:{2}"))
        assert c.extreme_rays == ((1,),)
        c = ample_cone(parse_parabolic("A4:{1,2,3,4}"))
        assert len(c.extreme_rays) == 4 and c.is_simplicial

    def test_simplicial_with_marked_count_rays(self):
        for t in [SimpleType("A", 4), SimpleType("B", 3),
                  SimpleType("D", 4), SimpleType("G", 2)]:
            for mask in range(1, 2 ** t.rank):
                marks = tuple(i + 1 for i in range(t.rank) if mask >> i & 1)
                c = ample_cone(parabolic(t, marks))
                assert c.is_simplicial
                assert len(c.extreme_rays) == len(marks)

    def test_empty_marking(self):
        with pytest.raises(EmptyMarking):
            ample_cone(parabolic(SimpleType("A", 2), ()))


class TestChamberComplex:
    def test_two_chamber_flop(self):
        cc = movable_chambers(parse_orbit("A3:2,1,1"))
        assert cc.chamber_count == 2
        assert [c.composition for c in cc.chambers] == [(1, 3), (3, 1)]
        assert len(cc.walls) == 1
        wall = cc.walls[0]
        assert wall.chamber_a == (1, 3) and wall.chamber_b == (3, 1)
        assert wall.position == 1 and wall.entries == (1, 3)
        assert cc.is_connected

    def test_unique_resolution(self):
        cc = movable_chambers(parse_orbit("A3:2,2"))
        assert cc.chamber_count == 1 and cc.walls == ()
        assert cc.is_connected

    def test_hexagon(self):
        cc = movable_chambers(parse_orbit("A5:3,2,1"))
        assert cc.chamber_count == 6
        assert len(cc.walls) == 6
        assert cc.is_connected
        # Cayley graph of S3 with adjacent transpositions: 2-regular hexagon
        for ch in cc.chambers:
            assert cc.degree(ch.composition) == 2

    def test_degree_rule(self):
        for n in range(2, 7):
            t = SimpleType("A", n - 1)
            for part in partitions_of(n):
                if part == (1,) * n:
                    continue
                cc = movable_chambers(validate_orbit(t, part))
                assert cc.is_connected
                for ch in cc.chambers:
                    comp = ch.composition
                    expected = sum(1 for i in range(len(comp) - 1)
                                   if comp[i] != comp[i + 1])
                    assert cc.degree(comp) == expected

    def test_chambers_carry_own_basis_cones(self):
        cc = movable_chambers(parse_orbit("A4:3,1,1"))
        for ch in cc.chambers:
            assert ch.ample.ambient_dim == len(ch.marked_roots)
            assert ch.ample.is_simplicial

    def test_single_chamber_for_non_a_regular(self):
        cc = movable_chambers(parse_orbit("G2:dim12"))
        assert cc.chamber_count == 1
        assert cc.chambers[0].marked_roots == (1, 2)
        assert cc.chambers[0].composition is None
        assert cc.walls == ()

    def test_no_polarization(self):
        with pytest.raises(NoPolarization):
            movable_chambers(parse_orbit("B3:2,2,1,1,1"))

    def test_zero_orbit(self):
        with pytest.raises(ZeroOrbit):
            movable_chambers(parse_orbit("A2:1,1,1"))


class TestChamberCounts:
    def test_counts_match_distinct_orderings(self):
        # independent oracle: count orderings of the dual partition directly
        from itertools import permutations
        from contactres.orbits import dual_partition
        for n in range(2, 8):
            t = SimpleType("A", n - 1)
            for part in partitions_of(n):
                if part == (1,) * n:
                    continue
                cc = movable_chambers(validate_orbit(t, part))
                expected = len(set(permutations(dual_partition(part))))
                assert cc.chamber_count == expected
