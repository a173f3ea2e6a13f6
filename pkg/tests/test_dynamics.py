import pytest
from hypothesis import given, settings

from src.cli.parser import parse_triple
from src.domain import canonical_form, membership
from src.dynamics import flow_orbit, psi_h, varphi_h, varphi_h_formula
from src.group import act_triple, compose, h_matrix, phi_inverse
from src.projective import ProjPoint, Triple
from src.utils.errors import InvalidStepCount, NotInDomain

from tests.strategies import F2, F3, triples


def apartment_triple(spec, n):
    return Triple(ProjPoint.zero(spec), ProjPoint.t_power(spec, n), ProjPoint.infinity(spec))


class TestVarphi:
    def test_standard(self):
        assert varphi_h(Triple.standard(F3)) == apartment_triple(F3, 1)
        assert varphi_h(Triple.standard(F3), -1) == apartment_triple(F3, -1)

    def test_only_the_middle_point_moves(self):
        T = parse_triple(F3, "(t^-1, t^2+1, t)")
        image = varphi_h(T)
        assert image.w1 == T.w1
        assert image.w3 == T.w3
        assert image.w2 != T.w2

    def test_zero_power(self):
        with pytest.raises(InvalidStepCount):
            varphi_h(Triple.standard(F2), 0)

    def test_polynomial_branch(self):
        T = parse_triple(F3, "(1, t, inf)")
        # (w2 - w1) t + w1
        assert varphi_h_formula(T).w2 == parse_triple(F3, "(1, t^2+2t+1, inf)").w2

    @pytest.mark.parametrize("text", [
        "(inf, 0, 1)",
        "(0, inf, 1)",
        "(t, t+1, t+2)",
        "(t^-1, 0, t)",
        "(1/(t+1), t^2, inf)",
    ])
    def test_formula_matches_matrices(self, text):
        T = parse_triple(F3, text)
        assert varphi_h_formula(T) == varphi_h(T)

    @settings(max_examples=100, deadline=None)
    @given(triples())
    def test_formula_matches_matrices_randomly(self, T):
        assert varphi_h_formula(T) == varphi_h(T)

    @settings(max_examples=100, deadline=None)
    @given(triples())
    def test_right_translation_by_h(self, T):
        spec = T.spec
        for power in (1, -1, 2):
            via_h = act_triple(compose(phi_inverse(T), h_matrix(spec, power)), Triple.standard(spec))
            # h^k fixes 0 and inf and sends 1 to t^k
            assert via_h == act_triple(phi_inverse(T), apartment_triple(spec, power))
            assert via_h == varphi_h(T, power)
        assert varphi_h_formula(T) == varphi_h(T)


class TestPsi:
    @pytest.mark.parametrize("spec", [F2, F3])
    def test_apartment_orbit(self, spec):
        orbit = flow_orbit(Triple.standard(spec), 10)
        for n, step in enumerate(orbit, start=1):
            assert step.post_reduced == apartment_triple(spec, n)
            assert step.height == n

    def test_step_back_to_standard(self):
        step = psi_h(apartment_triple(F3, -1))
        assert step.post_reduced == Triple.standard(F3)
        assert step.height == 0

    def test_inverse_flow(self):
        orbit = flow_orbit(Triple.standard(F3), 3, power=-1)
        assert [step.post_reduced for step in orbit] == [apartment_triple(F3, -n) for n in (1, 2, 3)]

    def test_requires_a_reduced_triple(self):
        with pytest.raises(NotInDomain):
            psi_h(parse_triple(F3, "(t, t+1, t+2)"))

    def test_step_count(self):
        with pytest.raises(InvalidStepCount):
            flow_orbit(Triple.standard(F3), 0)

    def test_to_dict(self):
        data = psi_h(Triple.standard(F3)).to_dict()
        assert data["pre"] == "(0, 1, inf)"
        assert data["post_raw"] == "(0, t, inf)"
        assert data["post_reduced"] == "(0, t, inf)"
        assert data["gamma"] == "id"
        assert data["height"] == 1

    @settings(max_examples=100, deadline=None)
    @given(triples())
    def test_well_defined_on_orbits(self, T):
        assert psi_h(canonical_form(T)).post_reduced == canonical_form(varphi_h(T))

    @settings(max_examples=60, deadline=None)
    @given(triples(max_degree=3))
    def test_backward_step_undoes_forward_step(self, T):
        reduced = canonical_form(T)
        forward = psi_h(reduced)
        assert membership(forward.post_reduced).in_S
        assert psi_h(forward.post_reduced, -1).post_reduced == reduced
