"""Unit and property tests for the exact polynomial and series layer."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catwords.polyring import (
    C,
    Monomial,
    NonUnitConstantTerm,
    Polynomial,
    RecursiveAssignment,
    Series,
    V,
    Variable,
    Z,
    letter,
    poly_add,
    poly_mul,
    poly_specialize,
    series_div,
    series_from_poly,
    series_inverse,
    series_mul,
)

ONE = Polynomial.one()
ZERO = Polynomial.zero()
z = Polynomial.var(Z)
Vp = Polynomial.var(V)
Cp = Polynomial.var(C)


def vp(i):
    return Polynomial.var(letter(i))


def one_series(order):
    return Series([ONE] + [ZERO] * order)


# -- variables and monomials ------------------------------------------------


def test_variable_total_order():
    ordered = [Z, C, V, letter(1), letter(2), letter(10)]
    assert sorted([letter(10), V, letter(2), Z, letter(1), C]) == ordered


def test_variable_names():
    assert Variable("v7") == letter(7)
    assert letter(3).name == "v3"
    assert letter(3).index == 3
    assert V.index is None
    for bad in ("", "x", "v0", "v", "v01", "zz"):
        with pytest.raises(ValueError):
            Variable(bad)
    with pytest.raises(ValueError):
        letter(0)


def test_monomial_canonical_form():
    assert Monomial() == Monomial({})
    assert Monomial().is_unit()
    assert Monomial({Z: 2, V: 1}) == Monomial([(V, 1), (Z, 2)])
    assert Monomial({Z: 1}) != Monomial({Z: 2})
    with pytest.raises(ValueError):
        Monomial({Z: 0})
    with pytest.raises(ValueError):
        Monomial({Z: -1})


def test_monomial_times_merges_exponents():
    m = Monomial({Z: 1, V: 2}).times(Monomial({V: 1, C: 3}))
    assert m == Monomial({Z: 1, V: 3, C: 3})
    assert Monomial().times(m) == m


# -- polynomial arithmetic ---------------------------------------------------


def test_poly_add_cancellation():
    assert poly_add(ONE - z * vp(2), z * vp(2)) == ONE


def test_poly_add_zero_is_identity():
    h2 = ONE - z * vp(2)
    assert poly_add(h2, ZERO) == h2


def test_poly_add_merges_like_terms():
    assert poly_add(z * vp(1), z * vp(1)) == 2 * z * vp(1)


def test_poly_mul_monomials():
    assert poly_mul(z * vp(1), z * vp(3)) == z**2 * vp(1) * vp(3)


def test_poly_mul_unit():
    p = 3 - 2 * z * Vp + z**2
    assert poly_mul(p, ONE) == p


def test_poly_mul_difference_of_squares():
    assert poly_mul(ONE - z, ONE + z) == ONE - z**2


def test_specialize_to_constants():
    p = ONE - z * vp(1) - z * vp(2)
    assert poly_specialize(p, {letter(1): 1, letter(2): 1}) == ONE - 2 * z


def test_specialize_empty_assignment():
    p = ONE - z * Vp * Cp
    assert poly_specialize(p, {}) == p


def test_specialize_renaming():
    assert poly_specialize(vp(5), {letter(5): Vp}) == Vp


def test_specialize_rejects_recursive_assignment():
    with pytest.raises(RecursiveAssignment):
        poly_specialize(vp(1), {letter(1): vp(1) + 1})
    with pytest.raises(RecursiveAssignment):
        poly_specialize(vp(1) + vp(2), {letter(1): vp(2), letter(2): 1})


def test_constant_term_and_predicates():
    p = 5 - z
    assert p.constant_term == 5
    assert not p.is_constant()
    assert Polynomial.constant(7).is_constant()
    assert ZERO.is_zero() and ZERO.is_constant()
    assert ONE.is_one()
    assert (z * 0) == ZERO


def test_pow():
    assert (ONE + z) ** 0 == ONE
    assert (ONE + z) ** 2 == ONE + 2 * z + z**2
    with pytest.raises(ValueError):
        (ONE + z) ** -1


# -- canonical term order and rendering --------------------------------------


def test_format_plain_canonical_order():
    den3 = ONE - z * Vp * Cp - 2 * z + z**2 * Vp * Cp
    assert den3.format_plain() == "1-zVC-2z+z^2VC"
    k3 = ONE - z * vp(1) - z * vp(2) - z * vp(3) + z**2 * vp(1) * vp(3)
    assert k3.format_plain() == "1-zv1-zv2-zv3+z^2v1v3"


def test_format_plain_ascending():
    p = Polynomial.constant(41) + Vp
    assert p.format_plain(ascending=True) == "41+V"
    assert p.format_plain() == "V+41"


def test_format_plain_edge_cases():
    assert ZERO.format_plain() == "0"
    assert (-ONE).format_plain() == "-1"
    assert (-(z * Vp)).format_plain() == "-zV"
    assert Polynomial.constant(-3).format_plain() == "-3"


def test_series_format_plain():
    s = Series([ONE, Vp, Vp + Vp**2])
    assert s.format_plain() == "1 + V z + (V+V^2) z^2"
    assert Series([ONE, ONE, Polynomial.constant(2)]).format_plain() == "1 + z + 2 z^2"
    assert Series([ZERO, ZERO]).format_plain() == "0"


# -- series operations --------------------------------------------------------


def test_series_from_poly_simple():
    s = series_from_poly(ONE - 2 * z, 3)
    assert s.coefficients == (ONE, Polynomial.constant(-2), ZERO, ZERO)


def test_series_from_poly_collects_by_z_power():
    k2 = ONE - z * vp(1) - z * vp(2)
    s = series_from_poly(k2, 2)
    assert s.coefficients == (ONE, -vp(1) - vp(2), ZERO)


def test_series_from_poly_truncates():
    s = series_from_poly(z**5, 3)
    assert s == Series([0, 0, 0, 0])


def test_series_mul_by_one():
    s = Series([1, 1, 2, 5])
    assert series_mul(s, one_series(3)) == s


def test_series_mul_catalan_square():
    # Independent oracle: direct convolution of the Catalan numbers 1, 1, 2, 5.
    cat = [1, 1, 2, 5]
    expected = [sum(cat[j] * cat[n - j] for j in range(n + 1)) for n in range(4)]
    assert expected == [1, 2, 5, 14]
    s = Series(cat)
    assert series_mul(s, s) == Series(expected)


def test_series_mul_truncates_to_min_order():
    a = Series([0, 1])  # z at order 1
    assert series_mul(a, a) == Series([0, 0])
    long = Series([1, 1, 1, 1, 1])
    short = Series([1, 1])
    assert series_mul(long, short).order == 1


def test_series_inverse_geometric():
    s = series_from_poly(ONE - z, 4)
    assert series_inverse(s) == Series([1, 1, 1, 1, 1])


def test_series_inverse_single_letter():
    # Oracle: the only Catalan word over letter 1 of each length is 1^n,
    # so the expansion of 1/(1 - z v1) must be sum of v1^n z^n.
    s = series_from_poly(ONE - z * vp(1), 3)
    assert series_inverse(s) == Series([ONE, vp(1), vp(1) ** 2, vp(1) ** 3])


def test_series_inverse_of_one():
    assert series_inverse(one_series(5)) == one_series(5)


def test_series_inverse_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(Series([2, 1]))
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(Series([Vp, ONE]))


def test_series_div_matches_inverse_route():
    num = series_from_poly(ONE - z * vp(2), 6)
    den = series_from_poly(ONE - z * vp(1) - z * vp(2), 6)
    assert series_div(num, den) == series_mul(num, series_inverse(den))
    with pytest.raises(NonUnitConstantTerm):
        series_div(num, Series([2] + [0] * 6))


def test_series_validation():
    with pytest.raises(ValueError):
        Series([])
    with pytest.raises(ValueError):
        Series([z])  # coefficients must be z-free
    with pytest.raises(TypeError):
        Series(["1"])
    s = Series([1, 2, 3])
    assert s.order == 2
    with pytest.raises(IndexError):
        s.coefficient(3)


def test_series_add_and_shift():
    s = Series([1, 1, 2])
    assert s + 1 == Series([2, 1, 2])
    assert (1 - s) == Series([0, -1, -2])
    assert s.shift(1) == Series([0, 1, 1])
    assert s.shift(5) == Series([0, 0, 0])
    assert (s + Series([1, 1])).order == 1


# -- JSON ---------------------------------------------------------------------


def test_polynomial_json_roundtrip_and_order():
    p = ONE - z * Vp * Cp - 2 * z + z**2 * Vp * Cp
    obj = p.to_json_obj()
    assert obj[0] == {"coeff": "1", "monomial": {}}
    assert obj[1] == {"coeff": "-1", "monomial": {"z": 1, "C": 1, "V": 1}}
    assert obj[2] == {"coeff": "-2", "monomial": {"z": 1}}
    assert Polynomial.from_json_obj(obj) == p
    # coefficients serialize as decimal strings even when huge
    big = Polynomial.constant(16796**5)
    assert big.to_json_obj()[0]["coeff"] == str(16796**5)
    assert Polynomial.from_json_obj(big.to_json_obj()) == big


def test_series_json_roundtrip():
    s = series_from_poly(ONE - z * vp(1) - z * vp(2), 3)
    obj = s.to_json_obj()
    assert obj["order"] == 3
    assert Series.from_json_obj(obj) == s
    assert Series.from_json_obj(json.loads(json.dumps(obj))) == s
    with pytest.raises(ValueError):
        Series.from_json_obj({"order": 5, "coeffs": [[]]})


# -- properties ---------------------------------------------------------------

variables = st.sampled_from([Z, V, C, letter(1), letter(2), letter(3)])
monomials = st.dictionaries(variables, st.integers(1, 3), max_size=3).map(Monomial)
coefficients = st.integers(-9, 9).filter(lambda n: n != 0)
polynomials = st.dictionaries(monomials, coefficients, max_size=5).map(Polynomial)


def assert_canonical(p):
    for mono, coeff in p.sorted_terms():
        assert coeff != 0
        assert all(exp > 0 for _, exp in mono.powers)


@given(polynomials, polynomials, polynomials)
def test_add_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polynomials, polynomials)
def test_mul_commutative(a, b):
    assert a * b == b * a


@given(polynomials, polynomials, polynomials)
def test_mul_distributes_over_add(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polynomials, polynomials)
def test_operations_stay_canonical(a, b):
    for result in (a + b, a - b, a * b, -a):
        assert_canonical(result)


@given(polynomials, st.integers(-3, 3), st.integers(-3, 3))
def test_specialize_composes_on_disjoint_domains(p, a, b):
    first = {letter(1): Polynomial.constant(a)}
    second = {V: Polynomial.constant(b)}
    assert p.specialize(first).specialize(second) == p.specialize({**first, **second})


zfree_monomials = st.dictionaries(
    st.sampled_from([V, letter(1)]), st.integers(1, 2), max_size=2
).map(Monomial)
zfree_polynomials = st.dictionaries(zfree_monomials, coefficients, max_size=2).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(st.lists(zfree_polynomials, min_size=0, max_size=20))
def test_inverse_roundtrip(tail):
    s = Series([ONE, *tail])
    assert s.order <= 20
    assert series_mul(s, series_inverse(s)) == one_series(s.order)
