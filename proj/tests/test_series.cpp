#include <catch2/catch_amalgamated.hpp>

#include "gtmt/series.hpp"
#include "test_support.hpp"

using namespace gtmt;
using gtmt::testing::ipoly;

namespace {
BiSeries geom(int o) { // 1/(1+x)
    MultiPoly one_plus_x = ipoly(1) + MultiPoly::variable("x");
    return BiSeries::one(o, o) / BiSeries::from_poly(one_plus_x, "x", "y", o, o);
}
} // namespace

TEST_CASE("series arithmetic", "[series]") {
    int o = 8;
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    BiSeries one_plus_x = BiSeries::from_poly(ipoly(1) + x, "x", "y", o, o);
    CHECK(one_plus_x * geom(o) == BiSeries::one(o, o));

    BiSeries w = BiSeries::from_poly(ipoly(1) + x + x * y, "x", "y", o, o);
    CHECK(w / w == BiSeries::one(o, o));
    CHECK(w * w.reciprocal() == BiSeries::one(o, o));

    CHECK_THROWS_AS(BiSeries::from_poly(x, "x", "y", o, o).reciprocal(), DomainError);
}

TEST_CASE("truncation commutes with arithmetic", "[series]") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly p = ipoly(1) + x + FieldElem(3) * (x * y) + y * y;
    MultiPoly q = ipoly(2) - y + x * x;
    for (int big : {6, 9}) {
        BiSeries a = BiSeries::from_poly(p, "x", "y", big, big);
        BiSeries b = BiSeries::from_poly(q, "x", "y", big, big);
        BiSeries prod_then_trunc = (a * b).truncated(4, 4);
        BiSeries trunc_then_prod = a.truncated(4, 4) * b.truncated(4, 4);
        CHECK(prod_then_trunc == trunc_then_prod);
    }
}

TEST_CASE("iota series", "[series]") {
    UniSeries i3 = iota_series(3);
    CHECK(i3.at(0) == FieldElem(0));
    CHECK(i3.at(1) == FieldElem(-1));
    CHECK(i3.at(2) == FieldElem(1));
    CHECK(i3.at(3) == FieldElem(-1));
    CHECK(i3.zero_constant_term());
    // involution
    UniSeries i8 = iota_series(8);
    CHECK(i8.compose(i8) == UniSeries::identity(8));
}

TEST_CASE("substitution with iota", "[series]") {
    int o = 8;
    MultiPoly x = MultiPoly::variable("x");
    BiSeries s = BiSeries::from_poly(ipoly(1) + x, "x", "y", o, o);
    // 1 + iota(x) = 1/(1+x)
    CHECK(s.substitute(BiSeries::Which::first, iota_series(o)) == geom(o));
    // involution on series
    BiSeries t = BiSeries::from_poly(ipoly(1) + x * x + x, "x", "y", o, o);
    BiSeries twice = t.substitute(BiSeries::Which::first, iota_series(o))
                         .substitute(BiSeries::Which::first, iota_series(o));
    CHECK(twice == t);
    // constants are unchanged
    BiSeries c = BiSeries::from_poly(ipoly(7), "x", "y", o, o);
    CHECK(c.substitute(BiSeries::Which::first, iota_series(o)) == c);
    CHECK_THROWS_AS(t.substitute(BiSeries::Which::first, UniSeries::one(o)), DomainError);
}

TEST_CASE("square roots", "[series]") {
    int o = 7;
    MultiPoly x = MultiPoly::variable("x");
    BiSeries s = BiSeries::from_poly(ipoly(1) + x, "x", "y", o, o);
    BiSeries r = s.sqrt();
    CHECK(r * r == s);
    CHECK(BiSeries::from_poly(ipoly(4), "x", "y", 2, 2).sqrt().constant_term() == FieldElem(2));
    CHECK_THROWS_AS(BiSeries::from_poly(ipoly(2) + x, "x", "y", 3, 3).sqrt(), DomainError);
}

TEST_CASE("swap", "[series]") {
    int o = 5;
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    BiSeries s = BiSeries::from_poly(x, "x", "y", o, o);
    CHECK(s.swapped() == BiSeries::from_poly(MultiPoly::variable("x"), "y", "x", o, o));
    BiSeries t = BiSeries::from_poly(ipoly(1) + x * y + x * x, "x", "y", o, o);
    CHECK(t.swapped().swapped() == t);
    BiSeries sym = BiSeries::from_poly(ipoly(1) + x + y + x * y, "x", "y", o, o);
    CHECK(sym.swapped() == sym);
    CHECK(sym.is_symmetric());
}

TEST_CASE("sqrt catalog radicands match the expanded conjugate products", "[series]") {
    // sqrt_a radicand: 4+6x+3x^2+2y+y^2+5xy+3x^2y+2xy^2+x^2y^2
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly rad_a = ipoly(4) + FieldElem(6) * x + FieldElem(3) * x.pow(2) + FieldElem(2) * y +
                      y.pow(2) + FieldElem(5) * (x * y) + FieldElem(3) * (x.pow(2) * y) +
                      FieldElem(2) * (x * y.pow(2)) + x.pow(2) * y.pow(2);
    using namespace gtmt::detail;
    CHECK(p0a_poly() * conj_coeffs(p0a_poly()) == rad_a);

    MultiPoly rad_b = ipoly(4) + FieldElem(10) * x + FieldElem(11) * x.pow(2) +
                      FieldElem(5) * x.pow(3) + x.pow(4) - FieldElem(2) * y + y.pow(2) -
                      FieldElem(3) * (x * y) - FieldElem(2) * (x.pow(2) * y) - x.pow(3) * y +
                      FieldElem(2) * (x * y.pow(2)) + x.pow(2) * y.pow(2);
    CHECK(p0b_poly() * conj_coeffs(p0b_poly()) == rad_b);

    // they have rational coefficients
    BiSeries root = p_series(PChoice::sqrt_a, 6, 6);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) CHECK(root.at(i, j).is_rational());
}

TEST_CASE("residue condition on P", "[series]") {
    int o = 8;
    for (PChoice c : {PChoice::p0a, PChoice::p0b, PChoice::sqrt_a, PChoice::sqrt_b,
                      PChoice::q_a, PChoice::q_b}) {
        CHECK(p_residue(p_series(c, o, o)) == p_residue_target(o));
    }
}

TEST_CASE("residue condition on Q", "[series]") {
    int o = 8;
    for (PChoice c : {PChoice::q_a, PChoice::q_b}) {
        BiSeries q = BiSeries::from_poly(q_poly(c), "x", "y", o, o);
        CHECK(p_residue(q) == q_residue_target(o));
    }
}

TEST_CASE("hidden series: constant term, symmetry, iota diagonal", "[series]") {
    int o = 8;
    for (PChoice c : {PChoice::p0a, PChoice::p0b, PChoice::sqrt_a, PChoice::sqrt_b,
                      PChoice::q_a, PChoice::q_b}) {
        for (AFactor f : {AFactor::one_plus_x_plus_y, AFactor::one_minus_xy}) {
            BiSeries a = hidden_series(c, f, o);
            INFO("choice " << to_string(c));
            CHECK(a.constant_term() == FieldElem(1));
            CHECK(a.is_symmetric());
            CHECK(a.collapse(iota_series(o)) == UniSeries::one(o));
            CHECK(check_equation(a).passed());
        }
    }
}

TEST_CASE("fourfold equation rejects non-solutions", "[series]") {
    int o = 8;
    CHECK_FALSE(check_equation(BiSeries::one(o, o)).fourfold_equation);
    // A = 1 - 3/4 x^2 y^2
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly p = ipoly(1) - FieldElem(make_rat(3, 4)) * (x.pow(2) * y.pow(2));
    EquationReport rep = check_equation(BiSeries::from_poly(p, "x", "y", o, o));
    CHECK(rep.symmetric);
    CHECK_FALSE(rep.fourfold_equation);
    // A = 1+x+y satisfies the fourfold equation but fails the iota diagonal:
    // its diagonal value is (1+x+x^2)/(1+x), not 1.
    EquationReport rep2 =
        check_equation(BiSeries::from_poly(ipoly(1) + x + y, "x", "y", o, o));
    CHECK_FALSE(rep2.unit_on_iota_diagonal);
    CHECK(rep2.fourfold_equation);
    UniSeries diag = BiSeries::from_poly(ipoly(1) + x + y, "x", "y", o, o)
                         .collapse(iota_series(o));
    MultiPoly num = ipoly(1) + x + x.pow(2), den = ipoly(1) + x;
    CHECK(diag == BiSeries::from_poly(num, "x", "y", o, 0).at_second_zero() /
                      BiSeries::from_poly(den, "x", "y", o, 0).at_second_zero());
}
