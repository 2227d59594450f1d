"""Tests for Groebner bases, ideal operations, and the ideal file format."""

import random
from fractions import Fraction

import pytest

from algstat import (
    GREVLEX,
    LEX,
    GuardrailError,
    Ideal,
    InputError,
    IntMatrix,
    MonomialOrder,
    PolyMatrix,
    PolyRing,
    eliminate,
    format_ideal,
    ideal_contains,
    ideal_equal,
    intersect,
    is_zero_dimensional,
    krull_dimension,
    minors,
    mul_int_poly,
    normal_form,
    parse_ideal_text,
    parse_polynomial,
    print_polynomial,
    quotient_dimension,
    s_polynomial,
    saturate,
    saturate_by_product,
)


def _ring(names, order=GREVLEX):
    return PolyRing(tuple(names), order)


def _ideal(ring, *texts):
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


# ----------------------------------------------------------- normal form


def test_normal_form_single_step():
    r = _ring(("x", "y"))
    f = parse_polynomial("x^2*y + x", r)
    g = parse_polynomial("x^2 - y", r)
    assert normal_form(f, [g]) == parse_polynomial("y^2 + x", r)


def test_normal_form_leaves_irreducible_input():
    r = _ring(("p_0", "p_1", "p_2"))
    f = parse_polynomial("p_0*p_2", r)
    g = parse_polynomial("p_1^2 - 4*p_0*p_2", r)
    # leading monomial of g is p_1^2, which does not divide p_0*p_2
    assert normal_form(f, [g]) == f


def test_normal_form_zero_inputs():
    r = _ring(("x",))
    assert normal_form(r.zero(), [r.gen(0)]).is_zero()
    f = parse_polynomial("x + 1", r)
    assert normal_form(f, []) == f


def test_s_polynomial():
    r = _ring(("x", "y"))
    f = parse_polynomial("x^2 - y", r)
    g = parse_polynomial("x*y - 1", r)
    assert s_polynomial(f, g) == parse_polynomial("-y^2 + x", r)


def test_s_polynomial_rejects_zero():
    r = _ring(("x",))
    with pytest.raises(ValueError):
        s_polynomial(r.zero(), r.gen(0))


# -------------------------------------------------------------- buchberger


def test_groebner_lex_known_basis():
    r = _ring(("x", "y"), LEX)
    gb = _ideal(r, "x^2 + 2*x*y^2", "x*y + 2*y^3 - 1").groebner()
    assert sorted(print_polynomial(g) for g in gb.basis) == ["x", "y^3 - 1/2"]


def test_groebner_grevlex_known_basis():
    r = _ring(("x", "y", "z"))
    gb = _ideal(r, "-x^2 + y", "-x^3 + z").groebner()
    assert sorted(print_polynomial(g) for g in gb.basis) == [
        "x*y - z",
        "x^2 - y",
        "y^2 - x*z",
    ]
    assert ideal_contains(gb.ideal, parse_polynomial("y^3 - z^2", r))


def test_groebner_is_reduced_and_monic():
    r = _ring(("x", "y", "z"))
    gb = _ideal(r, "3*x^2 - 6*y", "2*x^3 - 4*z").groebner()
    for g in gb.basis:
        assert g.leading_coefficient() == 1
        others = [h for h in gb.basis if h is not g]
        assert normal_form(g, others) == g


def test_groebner_of_zero_and_unit_ideals():
    r = _ring(("x", "y"))
    assert _ideal(r).groebner().basis == ()
    gb = _ideal(r, "x", "x + 1").groebner()
    assert [print_polynomial(g) for g in gb.basis] == ["1"]


def test_groebner_is_cached():
    r = _ring(("x", "y"))
    i = _ideal(r, "x^2 - y")
    assert i.groebner() is i.groebner()


def test_groebner_spairs_reduce_to_zero():
    rng = random.Random(47)
    for _ in range(10):
        names = ("x", "y", "z")[: rng.randint(2, 3)]
        r = _ring(names)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = r.zero()
            for _ in range(rng.randint(1, 3)):
                m = r.one()
                for v in r.gens():
                    m = m * v ** rng.randint(0, 2)
                p = p + rng.randint(-3, 3) * m
            if not p.is_zero():
                gens.append(p)
        gb = Ideal(r, gens).groebner()
        basis = list(gb.basis)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                s = s_polynomial(basis[i], basis[j])
                assert normal_form(s, basis).is_zero()


def test_membership_via_normal_form():
    r = _ring(("x", "y", "z"))
    i = _ideal(r, "x^2 - y", "x^3 - z")
    assert ideal_contains(i, parse_polynomial("y^3 - z^2", r))
    assert not ideal_contains(i, parse_polynomial("x - 1", r))
    assert ideal_contains(i, r.zero())


def test_ideal_equal():
    r = _ring(("x", "y"))
    a = _ideal(r, "x + y", "x - y")
    b = _ideal(r, "x", "y")
    assert ideal_equal(a, b)
    assert not ideal_equal(a, _ideal(r, "x"))
    with pytest.raises(ValueError):
        ideal_equal(a, _ideal(_ring(("x", "z")), "x"))


# ------------------------------------------------------------- eliminate


def test_eliminate_parametrization():
    r = PolyRing(("t", "x", "y"), MonomialOrder.block(1))
    i = _ideal(r, "x - t^2", "y - t^3")
    out = eliminate(i, 1)
    assert out.ring.variables == ("x", "y")
    assert [print_polynomial(g) for g in out.generators] == ["x^3 - y^2"]


def test_eliminate_handles_any_input_order():
    # the block order is set up internally, so a grevlex ring works
    r = _ring(("t", "x", "y"))
    out = eliminate(_ideal(r, "x - t^2", "y - t^3"), 1)
    assert [print_polynomial(g) for g in out.generators] == ["x^3 - y^2"]


def test_eliminate_rejects_bad_counts():
    r = _ring(("t", "x"))
    i = _ideal(r, "x - t^2")
    with pytest.raises(ValueError):
        eliminate(i, 2)
    with pytest.raises(ValueError):
        eliminate(i, -1)
    assert eliminate(i, 0) is i


# -------------------------------------------------------------- saturation


def test_saturate_strips_component():
    r = _ring(("x", "y"))
    i = _ideal(r, "x^2*y")
    out = saturate(i, parse_polynomial("x", r))
    assert ideal_equal(out, _ideal(r, "y"))


def test_saturate_can_reach_unit_ideal():
    r = _ring(("x", "y"))
    i = _ideal(r, "x*y", "x^2")
    out = saturate(i, parse_polynomial("x", r))
    assert ideal_equal(out, _ideal(r, "1"))


def test_saturate_fixed_when_multiplier_is_nonzerodivisor():
    r = _ring(("x", "y"))
    i = _ideal(r, "x^2 - y")
    out = saturate(i, parse_polynomial("y", r))
    assert ideal_equal(out, i)


def test_saturate_by_product_examples():
    r = _ring(("p_0", "p_1"))
    i = _ideal(r, "p_0*p_1")
    out = saturate_by_product(i, [r.gen(0), r.gen(1)])
    assert ideal_equal(out, _ideal(r, "1"))


def test_saturate_by_product_single_factor_matches_saturate():
    r = _ring(("x", "y"))
    i = _ideal(r, "x^2*y - x*y")
    f = parse_polynomial("x", r)
    assert ideal_equal(saturate_by_product(i, [f]), saturate(i, f))


def test_saturate_by_product_empty_factor_list():
    r = _ring(("x",))
    i = _ideal(r, "x^2")
    assert ideal_equal(saturate_by_product(i, []), i)


def test_saturation_is_idempotent_on_random_ideals():
    rng = random.Random(53)
    for _ in range(20):
        n = rng.randint(2, 4)
        names = tuple(f"x_{k}" for k in range(n))
        r = _ring(names)
        gens = []
        for _ in range(rng.randint(1, 3)):
            a = r.one()
            b = r.one()
            for v in r.gens():
                a = a * v ** rng.randint(0, 2)
                b = b * v ** rng.randint(0, 2)
            gens.append(a if rng.random() < 0.5 else a - b)
        i = Ideal(r, [g for g in gens if not g.is_zero()])
        once = saturate_by_product(i, list(r.gens()))
        twice = saturate_by_product(once, list(r.gens()))
        assert ideal_equal(once, twice)


# -------------------------------------------------- intersect / dimension


def test_intersect_principal_ideals():
    r = _ring(("x", "y"))
    out = intersect(_ideal(r, "x"), _ideal(r, "y"))
    assert ideal_equal(out, _ideal(r, "x*y"))


def test_intersect_known_value():
    r = _ring(("x", "y"))
    out = intersect(_ideal(r, "x^2", "y"), _ideal(r, "x"))
    assert ideal_equal(out, _ideal(r, "x^2", "x*y"))


def test_intersect_with_zero_ideal():
    r = _ring(("x", "y"))
    out = intersect(_ideal(r, "x"), _ideal(r))
    assert ideal_equal(out, _ideal(r))


def test_intersect_contains_products():
    rng = random.Random(59)
    r = _ring(("x", "y"))
    for _ in range(10):

        def rand_poly():
            p = r.zero()
            for _ in range(2):
                m = r.one()
                for v in r.gens():
                    m = m * v ** rng.randint(0, 2)
                p = p + rng.randint(-2, 2) * m
            return p

        a = Ideal(r, [q for q in (rand_poly(),) if not q.is_zero()])
        b = Ideal(r, [q for q in (rand_poly(),) if not q.is_zero()])
        both = intersect(a, b)
        for f in both.generators:
            assert ideal_contains(a, f)
            assert ideal_contains(b, f)
        for f in a.generators:
            for g in b.generators:
                assert ideal_contains(both, f * g)


def test_krull_dimension():
    r = _ring(("x", "y", "z"))
    assert krull_dimension(_ideal(r).groebner()) == 3
    assert krull_dimension(_ideal(r, "1").groebner()) == -1
    assert krull_dimension(_ideal(r, "x").groebner()) == 2
    assert krull_dimension(_ideal(r, "x", "y").groebner()) == 1
    assert krull_dimension(_ideal(r, "x", "y", "z").groebner()) == 0
    assert krull_dimension(_ideal(r, "x*y").groebner()) == 2
    assert krull_dimension(_ideal(r, "x*y", "x*z", "y*z").groebner()) == 1


def test_krull_dimension_of_monomial_curve():
    r = _ring(("p_0", "p_1", "p_2", "p_3"))
    i = _ideal(r, "p_1^2 - p_0*p_2", "p_1*p_2 - p_0*p_3", "p_2^2 - p_1*p_3")
    assert krull_dimension(i.groebner()) == 2


def test_zero_dimensionality():
    r = _ring(("x", "y"))
    assert is_zero_dimensional(_ideal(r, "x^2", "y^3").groebner())
    assert not is_zero_dimensional(_ideal(r, "x^2").groebner())
    assert not is_zero_dimensional(_ideal(r).groebner())
    assert is_zero_dimensional(_ideal(r, "1").groebner())


def test_quotient_dimension():
    r = _ring(("x", "y"))
    assert quotient_dimension(_ideal(r, "x^2", "y^3").groebner()) == 6
    assert quotient_dimension(_ideal(r, "x^2 + y", "y^2").groebner()) == 4
    assert quotient_dimension(_ideal(r, "x", "y").groebner()) == 1
    assert quotient_dimension(_ideal(r, "1").groebner()) == 0


def test_quotient_dimension_rejects_positive_dimension():
    r = _ring(("x", "y"))
    with pytest.raises(ValueError):
        quotient_dimension(_ideal(r, "x^2").groebner())


def test_quotient_dimension_guardrail():
    r = _ring(("x", "y", "z"))
    gb = _ideal(r, "x^101", "y^101", "z^101").groebner()
    with pytest.raises(GuardrailError):
        quotient_dimension(gb)


def test_quotient_dimension_counts_points_with_multiplicity():
    # (x^2 - 1)(x - 2) has three simple roots
    r = _ring(("x",))
    gb = _ideal(r, "x^3 - 2*x^2 - x + 2").groebner()
    assert quotient_dimension(gb) == 3


# ------------------------------------------------------------ ideal files


def test_format_ideal_layout():
    r = _ring(("x", "y"))
    text = format_ideal(_ideal(r, "x^2 - y", "y^2 - 1"))
    assert text == "ring x y\norder grevlex\nx^2 - y\ny^2 - 1\n"


def test_parse_ideal_text_range_syntax():
    i = parse_ideal_text("ring p_0..p_2\np_1^2 - 4*p_0*p_2\n")
    assert i.ring.variables == ("p_0", "p_1", "p_2")
    assert i.ring.order == GREVLEX


def test_parse_ideal_text_order_line():
    i = parse_ideal_text("ring x y\norder lex\nx - y\n")
    assert i.ring.order == LEX


def test_parse_ideal_text_comments_and_blanks():
    i = parse_ideal_text("# header\nring x y\n\n# gen\nx*y - 1\n")
    assert len(i.generators) == 1


def test_parse_ideal_text_no_generators_is_zero_ideal():
    i = parse_ideal_text("ring x y\n")
    assert i.generators == ()


def test_parse_ideal_text_errors():
    with pytest.raises(InputError):
        parse_ideal_text("x + y\n")  # missing ring line
    with pytest.raises(InputError):
        parse_ideal_text("ring x y\norder weird\nx\n")
    with pytest.raises(InputError) as exc:
        parse_ideal_text("ring x y\nx +\n")
    assert "line" in str(exc.value)


def test_ideal_file_round_trip():
    rng = random.Random(61)
    r = _ring(("a", "b", "c"), LEX)
    for _ in range(10):
        gens = []
        for _ in range(rng.randint(0, 3)):
            p = r.zero()
            for _ in range(3):
                m = r.one()
                for v in r.gens():
                    m = m * v ** rng.randint(0, 2)
                p = p + Fraction(rng.randint(-4, 4), rng.randint(1, 3)) * m
            if not p.is_zero():
                gens.append(p)
        i = Ideal(r, gens)
        back = parse_ideal_text(format_ideal(i))
        assert back.ring == r
        assert back.generators == i.generators


# ------------------------------------------------------------ poly matrix


def test_poly_matrix_and_minors():
    r = _ring(("p_0", "p_1", "p_2", "p_3"))
    p = r.gens()
    m = PolyMatrix([[p[0], p[1], p[2]], [p[1], p[2], p[3]]])
    assert m.nrows == 2
    assert m.ncols == 3
    i = minors(2, m)
    expect = _ideal(
        r,
        "p_0*p_2 - p_1^2",
        "p_0*p_3 - p_1*p_2",
        "p_1*p_3 - p_2^2",
    )
    assert ideal_equal(i, expect)


def test_minors_size_one():
    r = _ring(("x", "y"))
    m = PolyMatrix([[r.gen(0), r.gen(1)]])
    assert ideal_equal(minors(1, m), _ideal(r, "x", "y"))


def test_minors_rejects_oversize():
    r = _ring(("x",))
    m = PolyMatrix([[r.gen(0)]])
    with pytest.raises(ValueError):
        minors(2, m)


def test_poly_matrix_rejects_mixed_rings():
    a = _ring(("x",))
    b = _ring(("y",))
    with pytest.raises(ValueError):
        PolyMatrix([[a.gen(0), b.gen(0)]])


def test_mul_int_poly():
    r = _ring(("p_0", "p_1", "u_0", "u_1"))
    m = PolyMatrix([
        [parse_polynomial("p_0", r), parse_polynomial("u_0", r)],
        [parse_polynomial("p_1", r), parse_polynomial("u_1", r)],
    ])
    a = IntMatrix([[1, 1], [0, 1]])
    out = mul_int_poly(a, m)
    assert print_polynomial(out.entries[0][0]) == "p_0 + p_1"
    assert print_polynomial(out.entries[0][1]) == "u_0 + u_1"
    assert print_polynomial(out.entries[1][0]) == "p_1"
    with pytest.raises(ValueError):
        mul_int_poly(IntMatrix([[1, 2, 3]]), m)
