import pytest

from cellres.exceptions import EmptyIdealError, ParseError, RingMismatchError
from cellres.monomials import (
    CoefficientField,
    Monomial,
    RingDescriptor,
    divides,
    lcm,
    lcm_all,
    lcm_lattice,
    minimalize,
    parse_ideal,
    parse_monomial,
    sorted_lattice,
    subset_lcms,
)


def test_parse_monomial(ring):
    m = parse_monomial("x^2*y", ring)
    assert m.exponents == (2, 1, 0, 0)
    assert m.degree == 3
    assert parse_monomial("1", ring).is_one()
    assert parse_monomial(" z ^ 4 * w ", ring).exponents == (0, 0, 4, 1)


def test_parse_monomial_repeated_variable_accumulates(ring):
    assert parse_monomial("x*x^2", ring).exponents == (3, 0, 0, 0)


@pytest.mark.parametrize("text", ["q", "x^0", "x^-1", "x**2", "2*x", "", "x*", "x^+2", "x^02"])
def test_parse_monomial_errors(ring, text):
    with pytest.raises(ParseError):
        parse_monomial(text, ring)


def test_render(ring):
    m = ring.monomial("x^2*y")
    assert m.render() == "x^2*y"
    assert m.render_compact() == "x2y"
    assert ring.one().render() == "1"
    assert ring.monomial("z^4*w").render_compact() == "z4w"


def test_arithmetic(ring):
    a, b = ring.monomial("x*y"), ring.monomial("y^2*z")
    assert (a * b).exponents == (1, 3, 1, 0)
    assert lcm(a, b) == ring.monomial("x*y^2*z")
    assert divides(a, lcm(a, b))
    assert not divides(a, b)
    assert lcm(a, b).quotient(a) == ring.monomial("y*z")


def test_quotient_requires_divisibility(ring):
    with pytest.raises(RingMismatchError):
        ring.monomial("x").quotient(ring.monomial("y"))


def test_ring_mismatch(ring):
    other = RingDescriptor(("a", "b"))
    with pytest.raises(RingMismatchError):
        lcm(ring.monomial("x"), other.monomial("a"))


def test_exponent_length_checked(ring):
    with pytest.raises(RingMismatchError):
        Monomial(ring, (1, 2))


def test_canonical_order_of_ideal(ideal_i):
    assert [g.render() for g in ideal_i] == ["y*w", "x*y*z", "x^2*y", "z^4*w"]
    assert str(ideal_i) == "<y*w, x*y*z, x^2*y, z^4*w>"


def test_minimalize_drops_multiples(ring):
    ideal = minimalize([ring.monomial(t) for t in ["x*y", "x", "y^2", "x", "x^3*z"]])
    assert [g.render() for g in ideal] == ["x", "y^2"]


def test_minimalize_empty():
    with pytest.raises(EmptyIdealError):
        minimalize([])


def test_parse_ideal_warns_when_minimalizing(ring, caplog):
    ideal = parse_ideal(["x", "x*y"], ring)
    assert len(ideal) == 1
    assert "Minimalized" in caplog.text


def test_parse_ideal_names_bad_generator(ring):
    with pytest.raises(ParseError, match="generator 1"):
        parse_ideal(["x", "v"], ring)


def test_ideal_contains(ideal_i, ring):
    assert ideal_i.contains(ring.monomial("x^3*y"))
    assert not ideal_i.contains(ring.monomial("x^5"))


def test_lcm_lattice(ring):
    x, y, z = ring.monomial("x"), ring.monomial("y"), ring.monomial("z")
    assert lcm_lattice([x, y]) == {x, y, ring.monomial("x*y")}
    assert len(lcm_lattice([x, y, z])) == 7
    assert sorted_lattice([x, y])[-1] == ring.monomial("x*y")


def test_lcm_lattice_of_ideal(ideal_i):
    lattice = lcm_lattice(ideal_i.generators)
    # 15 subsets, 4 coincidences
    assert len(lattice) == 11


def test_subset_lcms(ideal_i):
    lcms = subset_lcms(ideal_i.generators)
    assert len(lcms) == 15
    assert lcms[(0, 1)].render() == "x*y*z*w"
    assert lcms[(1, 3)] == lcms[(0, 1, 3)]


def test_lcm_all_empty(ring):
    assert lcm_all([], ring).is_one()
    with pytest.raises(EmptyIdealError):
        lcm_all([])


def test_coefficient_field():
    assert CoefficientField.parse("Q").characteristic == 0
    assert CoefficientField.parse("Fp:7").characteristic == 7
    assert CoefficientField.parse("Fp:7").render() == "Fp:7"
    assert CoefficientField.parse("Fp:2").short_name() == "ZZ/2"
    for bad in ["Fp:4", "Fp:x", "R", ""]:
        with pytest.raises(ParseError):
            CoefficientField.parse(bad)


def test_ring_validation():
    with pytest.raises(ParseError):
        RingDescriptor(())
    with pytest.raises(ParseError):
        RingDescriptor(("x", "x"))
    with pytest.raises(ParseError):
        RingDescriptor(("1x",))


def test_negative_exponent_message(ring):
    with pytest.raises(ParseError, match="non-positive exponent"):
        parse_monomial("y^-3", ring)