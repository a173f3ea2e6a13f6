import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import Poly
from src.group import (
    GammaElem,
    Generator,
    Word,
    act_point,
    act_triple,
    compose,
    generator,
    h_matrix,
    inverse,
    phi,
    phi_inverse,
    standard_triple,
)
from src.projective import ProjPoint, Triple
from src.utils.errors import DivisionByZero, InvalidGenerator

from tests.strategies import F2, F3, F5, gamma_elems, points, triples


def P(spec, *coeffs):
    return Poly(spec, tuple(coeffs))


class TestGammaElem:
    def test_canonical_scaling(self):
        # 2 * [[1, t], [0, 1]] over F_3
        g = GammaElem(P(F3, 2), P(F3, 0, 2), P(F3), P(F3, 2))
        assert g == GammaElem(P(F3, 1), P(F3, 0, 1), P(F3), P(F3, 1))
        assert str(g) == "[[1,t],[0,1]]"

    def test_content_removed(self):
        t = P(F2, 0, 1)
        g = GammaElem(t, P(F2), P(F2), t)
        assert g == GammaElem.identity(F2)

    def test_first_nonzero_entry_is_monic(self):
        g = GammaElem(P(F5), P(F5, 3), P(F5, 2), P(F5))
        assert g.b == P(F5, 1)
        assert g.c == P(F5, 4)

    def test_singular(self):
        with pytest.raises(DivisionByZero):
            GammaElem(P(F3, 1), P(F3, 1), P(F3, 1), P(F3, 1))

    def test_in_gamma(self):
        assert GammaElem.identity(F3).in_gamma
        assert not h_matrix(F3).in_gamma
        assert h_matrix(F3, -2) == GammaElem(P(F3, 1), P(F3), P(F3), P(F3, 0, 0, 1))

    def test_from_fractions(self):
        half = ProjPoint(P(F3, 1), P(F3, 0, 1))  # 1/t
        one = ProjPoint.one(F3)
        zero = ProjPoint.zero(F3)
        g = GammaElem.from_fractions(half, zero, zero, one)
        assert g == GammaElem(P(F3, 1), P(F3), P(F3), P(F3, 0, 1))

    def test_inverse(self):
        g = GammaElem(P(F3, 1, 1), P(F3, 1), P(F3, 2, 1), P(F3, 1))
        assert compose(g, inverse(g)) == GammaElem.identity(F3)
        assert g @ inverse(g) == GammaElem.identity(F3)

    def test_max_entry_degree(self):
        assert GammaElem(P(F2, 1), P(F2, 0, 0, 1), P(F2), P(F2, 1)).max_entry_degree == 2


class TestGenerators:
    def test_matrices(self):
        assert str(Generator.iota(F3).matrix()) == "[[0,1],[1,0]]"
        assert str(Generator.sigma(F3.element(2)).matrix()) == "[[1,0],[0,2]]"
        assert str(Generator.u(P(F3, 0, 1)).matrix()) == "[[1,t],[0,1]]"
        assert str(generator(Generator.u(P(F3, 0, 1), negated=True))) == "[[1,2t],[0,1]]"

    def test_invalid(self):
        with pytest.raises(InvalidGenerator):
            Generator.sigma(F3.zero)
        with pytest.raises(InvalidGenerator):
            Generator(F3, "rho")
        with pytest.raises(InvalidGenerator):
            Generator(F3, "u", F3.one)

    def test_printing(self):
        assert str(Generator.iota(F3)) == "iota"
        assert str(Generator.sigma(F3.element(2))) == "sigma:2"
        assert str(Generator.u(P(F3, 0, 1), negated=True)) == "u:-t"

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_token_action_matches_matrix(self, data):
        spec = data.draw(st.sampled_from([F2, F3, F5]))
        token = data.draw(st.sampled_from([
            Generator.iota(spec),
            Generator.sigma(spec.element(spec.q - 1)),
            Generator.u(P(spec, 1, 1)),
            Generator.u(P(spec, 0, 1), negated=True),
        ]))
        w = data.draw(points(spec, 3))
        assert token.act_point(w) == act_point(token.matrix(), w)


class TestWord:
    def test_identity(self):
        w = Word.identity(F3)
        assert str(w) == "id"
        assert len(w) == 0
        assert w.matrix == GammaElem.identity(F3)

    def test_then_prepends(self):
        iota = Generator.iota(F3)
        u = Generator.u(P(F3, 1), negated=True)
        w = Word.identity(F3).then(u).then(iota)
        assert str(w) == "iota.u:-1"
        assert w.matrix == compose(iota.matrix(), u.matrix())
        assert w == Word(F3, (iota, u))

    def test_acts_last_token_first(self):
        iota = Generator.iota(F3)
        u = Generator.u(P(F3, 1))
        w = Word(F3, (iota, u))
        T = Triple.standard(F3)
        # u first: (1, 2, inf), then iota: (1, 2, 0)
        expected = Triple(ProjPoint.one(F3), ProjPoint.from_poly(P(F3, 2)), ProjPoint.zero(F3))
        assert w.act_triple(T) == expected
        assert act_triple(w.matrix, T) == expected


class TestPhi:
    def test_standard(self):
        assert phi(GammaElem.identity(F3)) == standard_triple(F3)
        assert phi_inverse(standard_triple(F3)) == GammaElem.identity(F3)

    def test_inverse_of_a_polynomial_triple(self):
        t = P(F3, 0, 1)
        T = Triple(ProjPoint.from_poly(t), ProjPoint.from_poly(P(F3, 1, 1)), ProjPoint.from_poly(P(F3, 2, 1)))
        g = phi_inverse(T)
        assert phi(g) == T

    @settings(max_examples=80, deadline=None)
    @given(triples())
    def test_phi_inverse_carries_the_standard_triple(self, T):
        assert phi(phi_inverse(T)) == T

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([F2, F3]).flatmap(lambda s: st.tuples(gamma_elems(s), triples(s, 3))))
    def test_action_is_a_homomorphism(self, pair):
        g, T = pair
        assert g.in_gamma
        h = inverse(g)
        assert act_triple(h, act_triple(g, T)) == T
        assert act_triple(compose(g, g), T) == act_triple(g, act_triple(g, T))
