import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import (
    NEG_INF,
    FieldElem,
    FieldSpec,
    Poly,
    all_polys,
    decompose,
    field_arith,
    laurent_expand,
    poly_divmod,
    poly_gcd,
)
from src.projective import ProjPoint
from src.utils.errors import (
    DivisionByZero,
    FieldMismatch,
    InfinityNotDecomposable,
    InfinityNotExpandable,
    InvalidFieldSpec,
    PrecisionExhausted,
)

from tests.strategies import F2, F3, F4, F5, all_fields, polys


def t_poly(spec, *coeffs):
    return Poly(spec, tuple(coeffs))


class TestFieldSpec:
    def test_prime_field_arithmetic(self):
        assert F5.add(3, 4) == 2
        assert F5.mul(3, 4) == 2
        assert F5.neg(2) == 3
        assert F5.inv(2) == 3

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            F3.inv(0)

    def test_rejects_composite_characteristic(self):
        with pytest.raises(InvalidFieldSpec):
            FieldSpec(4)

    def test_rejects_reducible_modulus(self):
        # a^2 + 1 = (a + 1)^2 over F_2
        with pytest.raises(InvalidFieldSpec):
            FieldSpec(2, 2, (1, 0, 1))

    def test_rejects_wrong_modulus_degree(self):
        with pytest.raises(InvalidFieldSpec):
            FieldSpec(2, 2, (1, 1))

    def test_modulus_is_made_monic(self):
        # 2a^2 + 2 = 2(a^2 + 1), irreducible over F_3
        spec = FieldSpec(3, 2, (2, 0, 2))
        assert spec.modulus == (1, 0, 1)
        assert spec.q == 9

    def test_gf4_multiplication(self):
        a = F4.encode((0, 1))
        a1 = F4.encode((1, 1))
        # a^2 = a + 1 and a(a + 1) = 1
        assert F4.mul(a, a) == a1
        assert F4.mul(a, a1) == 1
        assert F4.inv(a) == a1

    def test_gf4_every_nonzero_element_is_invertible(self):
        for x in F4.nonzero():
            assert F4.mul(x, F4.inv(x)) == 1

    def test_element_coercion(self):
        assert F3.element(5).value == 2
        assert F4.element((1, 1)).coordinates == (1, 1)
        with pytest.raises(FieldMismatch):
            F3.element(F2.one)

    def test_printing(self):
        assert str(F3) == "F_3"
        assert str(F4) == "F_4[a^2+a+1]"
        assert F4.format_element(F4.encode((1, 1))) == "a+1"
        assert F4.format_element(0) == "0"

    @given(all_fields, st.data())
    def test_field_axioms(self, spec, data):
        x = data.draw(st.integers(0, spec.q - 1))
        y = data.draw(st.integers(0, spec.q - 1))
        z = data.draw(st.integers(0, spec.q - 1))
        assert spec.add(x, y) == spec.add(y, x)
        assert spec.mul(x, spec.add(y, z)) == spec.add(spec.mul(x, y), spec.mul(x, z))
        assert spec.add(x, spec.neg(x)) == 0


class TestFieldElem:
    def test_operators(self):
        two, three = F5.element(2), F5.element(3)
        assert (two + three).value == 0
        assert (two * three).value == 1
        assert (two / three).value == 4
        assert (-two).value == 3
        assert not F5.zero
        assert str(two) == "2"

    def test_mixing_fields_fails(self):
        with pytest.raises(FieldMismatch):
            F3.one + F5.one

    def test_field_arith(self):
        x, y = F3.element(2), F3.element(2)
        assert field_arith(x, y, "add").value == 1
        assert field_arith(x, y, "mul").value == 1
        assert field_arith(x, op="neg").value == 1
        assert field_arith(x, op="inv").value == 2
        with pytest.raises(ValueError):
            field_arith(x, y, "pow")


class TestPoly:
    def test_trailing_zeros_stripped(self):
        f = t_poly(F3, 1, 2, 0, 0)
        assert f.coeffs == (1, 2)
        assert f.degree == 1
        assert Poly.zero(F3).degree == NEG_INF

    def test_printing(self):
        assert str(t_poly(F3, 1, 2, 1)) == "t^2+2t+1"
        assert str(Poly.zero(F3)) == "0"
        assert str(Poly.t(F2)) == "t"
        a1 = F4.encode((1, 1))
        a = F4.encode((0, 1))
        assert str(Poly.monomial(F4, 3, a1)) == "(a+1)t^3"
        assert str(Poly.monomial(F4, 1, a)) == "a*t"

    def test_division(self):
        f = t_poly(F3, 1, 0, 1)  # t^2 + 1
        g = t_poly(F3, 1, 1)  # t + 1
        q, r = poly_divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree
        assert str(q) == "t+2"
        assert str(r) == "2"

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            divmod(Poly.one(F2), Poly.zero(F2))

    def test_gcd_is_monic(self):
        f = t_poly(F3, 2, 2)  # 2(t + 1)
        g = t_poly(F3, 2, 0, 2)  # 2(t^2 + 1)
        assert poly_gcd(f, f * g) == t_poly(F3, 1, 1)
        assert poly_gcd(Poly.zero(F3), Poly.zero(F3)).is_zero

    def test_shift_and_monic(self):
        f = t_poly(F5, 3, 2)
        assert f.shift(2) == t_poly(F5, 0, 0, 3, 2)
        assert f.monic().is_monic
        assert f.monic().scale(2) == f

    def test_all_polys(self):
        polys_ = list(all_polys(F2, 1))
        assert len(polys_) == 4
        assert polys_[0].is_zero
        assert len(set(all_polys(F3, 2))) == 27

    @settings(max_examples=60, deadline=None)
    @given(all_fields.flatmap(lambda s: st.tuples(polys(s), polys(s, nonzero=True))))
    def test_euclidean_division(self, pair):
        f, g = pair
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    @pytest.mark.parametrize("spec", [F2, F3])
    def test_division_exhaustive(self, spec):
        everything = list(all_polys(spec, 4))
        for g in everything[1:]:
            for f in everything:
                q, r = poly_divmod(f, g)
                assert q * g + r == f
                assert r.degree < g.degree

    @settings(max_examples=60, deadline=None)
    @given(all_fields.flatmap(lambda s: st.tuples(polys(s, 3), polys(s, 3), polys(s, 3))))
    def test_ring_laws(self, fgh):
        f, g, h = fgh
        assert f * (g + h) == f * g + f * h
        assert (f - g) + g == f


class TestLaurent:
    def test_exact_polynomial(self):
        x = ProjPoint.from_poly(t_poly(F3, 1, 0, 1))
        e = laurent_expand(x, 5)
        assert e.exact
        assert e.top == 2
        assert e.terms() == {2: 1, 0: 1}

    def test_expansion_of_reciprocal(self):
        # 1/(t - 1) = t^-1 + t^-2 + t^-3 + ...
        x = ProjPoint(Poly.one(F3), t_poly(F3, 2, 1))
        e = laurent_expand(x, 4)
        assert not e.exact
        assert e.top == -1
        assert e.coeffs == (1, 1, 1, 1)
        assert e.bottom == -4
        assert str(e) == "t^-1+t^-2+t^-3+t^-4+O(t^-5)"

    def test_zero_and_infinity(self):
        assert laurent_expand(ProjPoint.zero(F2), 3).is_zero
        with pytest.raises(InfinityNotExpandable):
            laurent_expand(ProjPoint.infinity(F2), 3)

    def test_coefficient_lookup(self):
        x = ProjPoint.from_laurent(F5, {1: 2, -2: 3})
        e = laurent_expand(x, 6)
        assert e.exact
        assert e.coefficient(1) == 2
        assert e.coefficient(-2) == 3
        assert e.coefficient(0) == 0
        assert e.coefficient(7) == 0

    def test_decompose_rational(self):
        # (t^3 + 1)/t = t^2 + t^-1
        x = ProjPoint(t_poly(F3, 1, 0, 0, 1), Poly.t(F3))
        d = decompose(x)
        assert d.poly_part == t_poly(F3, 0, 0, 1)
        assert d.frac_degree == -1
        assert d.leading.value == 1
        assert d.degree == 2

    def test_decompose_polynomial_has_no_fraction(self):
        d = decompose(ProjPoint.from_poly(t_poly(F2, 1, 1)))
        assert d.frac_degree == NEG_INF

    def test_decompose_infinity(self):
        with pytest.raises(InfinityNotDecomposable):
            decompose(ProjPoint.infinity(F2))

    def test_decompose_expansion_needs_precision(self):
        # t^4 + 1/(t^5 + 1) seen through 3 digits shows no fractional digit yet
        x = ProjPoint(t_poly(F2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1), t_poly(F2, 1, 0, 0, 0, 0, 1))
        with pytest.raises(PrecisionExhausted):
            decompose(laurent_expand(x, 3))
        deep = decompose(laurent_expand(x, 12))
        assert deep.frac_degree == -5
        assert deep.poly_part == decompose(x).poly_part

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_expansion_agrees_with_exact_decomposition(self, data):
        spec = data.draw(st.sampled_from([F2, F3, F5]))
        num = data.draw(polys(spec, 4, nonzero=True))
        den = data.draw(polys(spec, 4, nonzero=True))
        x = ProjPoint(num, den)
        e = laurent_expand(x, 20)
        exact = decompose(x)
        assert e.top == exact.degree
        assert FieldElem(spec, e.coeffs[0]) == exact.leading
