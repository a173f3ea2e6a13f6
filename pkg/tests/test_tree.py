import pytest
from hypothesis import given, settings

from src.cli.parser import parse_triple, parse_vertex
from src.dynamics import varphi_h
from src.group import act_triple
from src.oracle import bfs_ball, bfs_distance, enumerate_gamma_ball
from src.projective import ProjPoint, Triple
from src.tree import (
    ParamGeodesic,
    Vertex,
    apartment_vertex,
    distance,
    end_truncation,
    flow_shift,
    neighbors,
    separation,
    standard_vertex,
    theta,
    to_dot,
    tree_path,
    tripod_center,
    vertex_at,
    vertex_class,
)
from src.utils.errors import AnchorOffGeodesic, InfinityNotExpandable, InvalidVertex

from tests.strategies import F2, F3, triples


def x(spec, i):
    return apartment_vertex(spec, i)


def through(v):
    """A triple whose tripod center is v"""
    f = v.offset_point()
    return Triple(f, f + ProjPoint.t_power(v.spec, v.level), ProjPoint.infinity(v.spec))


class TestVertex:
    def test_validation(self):
        with pytest.raises(InvalidVertex):
            Vertex.make(F3, 0, {0: 1})
        with pytest.raises(InvalidVertex):
            Vertex.make(F3, 0, {2: 3})

    def test_zero_terms_dropped(self):
        assert Vertex.make(F3, 0, {2: 0}) == standard_vertex(F3)
        assert standard_vertex(F3).is_apartment

    def test_printing(self):
        assert str(standard_vertex(F3)) == "(0; 0)"
        assert str(Vertex.make(F3, -2, {-1: 1})) == "(-2; t^-1)"
        assert str(Vertex.make(F3, 0, {2: 2, 1: 1})) == "(0; 2t^2+t)"

    def test_parent_and_children(self):
        v = Vertex.make(F3, 0, {1: 2})
        assert v.parent() == x(F3, 1)
        children = v.children()
        assert len(children) == 3
        assert children[0] == Vertex.make(F3, -1, {1: 2})
        assert children[2] == Vertex.make(F3, -1, {1: 2, 0: 2})
        assert all(c.parent() == v for c in children)

    def test_neighbors_parent_first(self):
        ns = neighbors(x(F2, 0))
        assert ns[0] == x(F2, 1)
        assert ns[1:] == [x(F2, -1), Vertex.make(F2, -1, {0: 1})]

    def test_path_and_distance(self):
        w = Vertex.make(F3, -2, {-1: 1})
        path = tree_path(standard_vertex(F3), w)
        assert path == [x(F3, 0), x(F3, -1), w]
        assert distance(standard_vertex(F3), w) == 2
        assert distance(w, w) == 0
        assert tree_path(w, w) == [w]

    def test_distance_through_common_ancestor(self):
        v = Vertex.make(F2, 0, {1: 1})
        w = Vertex.make(F2, 0, {2: 1})
        # both climb to x_2
        assert distance(v, w) == 4


class TestEnds:
    def test_end_truncation(self):
        w = ProjPoint.from_laurent(F3, {2: 1, 1: 1, -1: 2})
        assert end_truncation(w, 0) == Vertex.make(F3, 0, {2: 1, 1: 1})
        assert end_truncation(w, -2) == Vertex.make(F3, -2, {2: 1, 1: 1, -1: 2})
        assert end_truncation(w, 5) == x(F3, 5)
        with pytest.raises(InfinityNotExpandable):
            end_truncation(ProjPoint.infinity(F3), 0)

    def test_separation(self):
        a = ProjPoint.t_power(F3, -1)
        assert separation(a, ProjPoint.t_power(F3, 1)) == 1
        assert separation(a, ProjPoint.infinity(F3)) == float("inf")

    @pytest.mark.parametrize("spec, text", [
        (F2, "(t^-3, t^-1, t^3)"),
        (F3, "(t^-3, t^-1, t^3)"),
        (F3, "(t^-1, 2t^-1, t)"),
    ])
    def test_tripod_center_fixtures(self, spec, text):
        assert tripod_center(parse_triple(spec, text)) == x(spec, -1)

    def test_tripod_center_of_standard_triple(self):
        assert tripod_center(Triple.standard(F3)) == standard_vertex(F3)

    @settings(max_examples=80, deadline=None)
    @given(triples())
    def test_ultrametric(self, T):
        seps = sorted(separation(T[i], T[j]) for i, j in ((0, 1), (0, 2), (1, 2)))
        assert seps[1] == seps[2]

    @settings(max_examples=60, deadline=None)
    @given(triples())
    def test_center_lies_on_all_three_geodesics(self, T):
        c = tripod_center(T)
        for i, j in ((0, 2), (2, 0), (0, 1), (1, 2)):
            assert ParamGeodesic(T[i], T[j], c).contains(c)


class TestGeodesic:
    def test_standard_apartment(self):
        geo = theta(Triple.standard(F3))
        assert geo.anchor == standard_vertex(F3)
        assert geo.segment(-2, 2) == [x(F3, i) for i in range(-2, 3)]
        assert geo.index_of(x(F3, 3)) == 3

    def test_both_ends_finite(self):
        geo = theta(parse_triple(F3, "(t^-1, 0, t)"))
        assert geo.anchor == x(F3, -1)
        assert [str(v) for v in geo.segment(-1, 3)] == [
            "(-2; t^-1)", "(-1; 0)", "(0; 0)", "(1; 0)", "(0; t)",
        ]
        assert geo.index_of(parse_vertex(F3, "(0; t)")) == 3

    def test_reversed_segment(self):
        geo = theta(Triple.standard(F2))
        assert geo.segment(1, -1) == [x(F2, 1), x(F2, 0), x(F2, -1)]

    def test_consecutive_vertices_are_adjacent(self):
        geo = theta(parse_triple(F3, "(t^-2+t^-3, 2t, t^2+t)"))
        seg = geo.segment(-4, 4)
        assert all(distance(a, b) == 1 for a, b in zip(seg, seg[1:]))

    def test_flow_shift_moves_the_anchor(self):
        geo = theta(Triple.standard(F3))
        shifted = flow_shift(geo)
        assert shifted.anchor == x(F3, 1)
        assert vertex_at(shifted, -1) == geo.anchor
        assert flow_shift(geo, -2).anchor == x(F3, -2)

    def test_anchor_off_geodesic(self):
        zero, inf = ProjPoint.zero(F3), ProjPoint.infinity(F3)
        with pytest.raises(AnchorOffGeodesic):
            ParamGeodesic(zero, inf, Vertex.make(F3, 0, {1: 1}))
        with pytest.raises(AnchorOffGeodesic):
            ParamGeodesic(zero, zero, standard_vertex(F3))
        with pytest.raises(AnchorOffGeodesic):
            theta(Triple.standard(F3)).index_of(Vertex.make(F3, 0, {1: 1}))

    @settings(max_examples=80, deadline=None)
    @given(triples())
    def test_flow_moves_the_center_one_step_along_the_geodesic(self, T):
        assert tripod_center(varphi_h(T)) == vertex_at(theta(T), 1)


class TestBalls:
    @pytest.mark.parametrize("spec, radius", [(F2, 4), (F3, 3)])
    def test_regular(self, spec, radius):
        ball = bfs_ball(standard_vertex(spec), radius)
        expected = 1 + sum((spec.q + 1) * spec.q ** (k - 1) for k in range(1, radius + 1))
        assert len(ball) == expected
        for v in ball.interior():
            assert len(ball.adjacency[v]) == spec.q + 1
            assert len(set(neighbors(v))) == spec.q + 1

    @pytest.mark.parametrize("spec", [F2, F3])
    def test_distance_matches_bfs(self, spec):
        ball = bfs_ball(Vertex.make(spec, -1, {0: 1}), 2)
        for v in ball.order:
            for w in ball.order:
                assert distance(v, w) == bfs_distance(ball, v, w)

    def test_dot_output(self):
        ball = bfs_ball(standard_vertex(F2), 1)
        dot = to_dot(ball.order, name="ball", highlight=[standard_vertex(F2)])
        assert dot.startswith("graph ball {")
        assert dot.count(" -- ") == len(ball) - 1
        assert 'label="(0; 0)", style=filled' in dot


class TestVertexClass:
    @pytest.mark.parametrize("spec", [F2, F3])
    def test_apartment(self, spec):
        for i in range(-4, 5):
            assert vertex_class(x(spec, i)) == abs(i)

    def test_through_builds_the_right_center(self):
        v = Vertex.make(F3, -2, {0: 1, -1: 2})
        assert tripod_center(through(v)) == v

    def test_constant_on_orbits(self):
        gamma_ball = enumerate_gamma_ball(F2, 1, use_cache=False)
        for v in bfs_ball(standard_vertex(F2), 2).order:
            i = vertex_class(v)
            T = through(v)
            for g in gamma_ball:
                assert vertex_class(tripod_center(act_triple(g, T))) == i
