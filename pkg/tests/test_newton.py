"""Laurent parsing, Newton polygons and the curve-invariant bounds."""

from fractions import Fraction

import pytest

from latsize import (
    NotTwoDimensionalError,
    ZeroPolynomialError,
    analyze,
    hull,
    measures,
    newton_polygon,
    parse_laurent,
    random_unimodular_map,
    transform_support,
    upsilon,
)


def test_parse_supports():
    assert parse_laurent("y^2 + x^5 + 1").support == {(0, 2), (5, 0), (0, 0)}
    assert parse_laurent("3*x^-2*y^5 - x*y + 7").support == {(-2, 5), (1, 1), (0, 0)}
    assert parse_laurent("x^3").support == {(3, 0)}


def test_parse_coefficients():
    f = parse_laurent("3*x - 1/2*y + 4")
    assert f.terms[(1, 0)] == 3
    assert f.terms[(0, 1)] == Fraction(-1, 2)
    assert f.terms[(0, 0)] == 4
    g = parse_laurent("x*y + x*y")
    assert g.terms[(1, 1)] == 2


def test_parse_juxtaposition_and_signs():
    assert parse_laurent("2x y^2").support == {(1, 2)}
    assert parse_laurent("-x + y").terms[(1, 0)] == -1
    assert parse_laurent("x - -2").terms[(0, 0)] == 2


def test_parse_errors_carry_positions():
    with pytest.raises(SyntaxError, match="position"):
        parse_laurent("x +* y")
    with pytest.raises(SyntaxError, match="position"):
        parse_laurent("z + 1")
    with pytest.raises(SyntaxError, match="position"):
        parse_laurent("")
    with pytest.raises(SyntaxError, match="denominator"):
        parse_laurent("1/0*x")
    with pytest.raises(ZeroPolynomialError):
        parse_laurent("x - x")
    with pytest.raises(ZeroPolynomialError):
        parse_laurent("x*y - y*x + 0")


def test_newton_polygon_reference_shapes():
    assert newton_polygon(parse_laurent("y^2 + x^5 + 1")) == hull([(0, 0), (5, 0), (0, 2)])
    assert newton_polygon(parse_laurent("x^-2*y^-2 + x^2 + y^2 + 1")) == upsilon(2)
    assert newton_polygon(parse_laurent("x^3")).vertices == ((3, 0),)


def test_analyze_reference_examples():
    res = analyze(parse_laurent("y^2 + x^7 + 1"))
    assert (res.genus_bound, res.gonality, res.s2_bound, res.s11_bound) == (3, 2, 5, (2, 4))
    res = analyze(parse_laurent("x^-2*y^-2 + x^2 + y^2 + 1"))
    assert (res.genus_bound, res.gonality, res.s2_bound, res.s11_bound) == (4, 3, 5, (3, 4))
    assert res.special.kind == "upsilon"
    res = analyze(parse_laurent("x^5 + y^5 + 1"))
    assert (res.genus_bound, res.gonality, res.s2_bound, res.s11_bound) == (6, 4, 5, (4, 4))


@pytest.mark.parametrize("g", range(2, 11))
def test_analyze_hyperelliptic_family(g):
    res = analyze(parse_laurent(f"y^2 + x^{2 * g + 1} + 1"))
    assert res.genus_bound == g
    assert res.gonality == 2
    assert res.s2_bound == g + 2
    assert res.s11_bound == (2, g + 1)


def test_analyze_rational_case_flags():
    res = analyze(parse_laurent("x + y + 1"))
    assert res.genus_bound == 0
    assert (res.gonality, res.s2_bound, res.s11_bound) == (1, 1, (1, 1))
    assert any("rational" in c for c in res.caveats)


def test_analyze_rejects_low_dimensional_support():
    with pytest.raises(NotTwoDimensionalError):
        analyze(parse_laurent("x^2 + x + 1"))
    with pytest.raises(NotTwoDimensionalError):
        analyze(parse_laurent("x*y"))


def test_analysis_invariant_under_support_substitution():
    for text in ("y^2 + x^7 + 1", "x^-2*y^-2 + x^2 + y^2 + 1", "x^3*y + y^3 + x + x*y^2"):
        f = parse_laurent(text)
        base = analyze(f)
        for seed in range(50):
            phi = random_unimodular_map(seed * 3 + 17)
            moved = analyze(transform_support(f, phi))
            assert moved.genus_bound == base.genus_bound
            assert moved.gonality == base.gonality
            assert moved.s2_bound == base.s2_bound
            assert moved.s11_bound == base.s11_bound


def test_genus_matches_pick_count():
    f = parse_laurent("x^4*y + y^3 + x + x^2*y^2")
    res = analyze(f)
    inner = res.interior
    m = measures(inner)
    # Pick identity rearranged: total = area2/2 + boundary/2 + 1
    assert res.genus_bound == m.total_count
    assert 2 * m.total_count == m.area2 + m.boundary_count + 2


def test_s11_bound_is_ordered():
    for text in ("y^2 + x^9 + 1", "x^5 + y^5 + 1", "x^-1 + y^-1 + x*y"):
        res = analyze(parse_laurent(text))
        assert res.s11_bound[0] <= res.s11_bound[1]
        assert res.s11_bound <= (res.s2_bound, res.s2_bound)
