#include <catch2/catch_amalgamated.hpp>

#include "gtmt/field.hpp"

using namespace gtmt;

TEST_CASE("rho satisfies its minimal polynomial", "[field]") {
    FieldElem rho = FieldElem::rho();
    CHECK(rho * rho == FieldElem(Rat(-1), Rat(1))); // rho^2 = rho - 1
    CHECK(rho.pow(3) == FieldElem(-1));
    CHECK(rho.pow(6) == FieldElem(1));
}

TEST_CASE("field inverses", "[field]") {
    FieldElem rho = FieldElem::rho();
    CHECK((FieldElem(1) + rho).inverse() == FieldElem(make_rat(2, 3), make_rat(-1, 3)));
    CHECK(rho.inverse() == FieldElem(Rat(1), Rat(-1))); // rho^-1 = 1 - rho
    CHECK_THROWS_AS(FieldElem(0).inverse(), DomainError);

    std::vector<FieldElem> samples = {FieldElem(2), rho, FieldElem(1) + rho,
                                      FieldElem(make_rat(-3, 7), make_rat(5, 2))};
    for (const auto& x : samples) CHECK(x * x.inverse() == FieldElem(1));
}

TEST_CASE("conjugation and norm", "[field]") {
    FieldElem rho = FieldElem::rho();
    CHECK(rho.conj() == FieldElem(Rat(1), Rat(-1)));
    CHECK(rho.conj() == rho.pow(5));
    FieldElem x(make_rat(2, 3), make_rat(-1, 5));
    CHECK((x * x.conj()).is_rational());
    CHECK((x * x.conj()).rat_part() == x.norm());
}

TEST_CASE("square roots in Q(rho)", "[field]") {
    CHECK(FieldElem(4).sqrt() == FieldElem(2));
    CHECK(FieldElem(make_rat(9, 16)).sqrt() == FieldElem(make_rat(3, 4)));
    // (2 rho - 1)^2 = -3
    FieldElem m3 = FieldElem(-3);
    FieldElem r = m3.sqrt();
    CHECK(r * r == m3);
    // rho itself is a square: rho = (rho^2)^2 * rho^(-3)... check via sqrt of rho^2
    FieldElem rho = FieldElem::rho();
    FieldElem s = (rho * rho).sqrt();
    CHECK(s * s == rho * rho);
    CHECK_THROWS_AS(FieldElem(2).sqrt(), DomainError);
    CHECK_THROWS_AS(FieldElem(-5).sqrt(), DomainError);
}

TEST_CASE("canonical text form", "[field]") {
    CHECK(FieldElem(make_rat(1, 2)).to_string() == "1/2");
    CHECK(FieldElem(make_rat(1, 2), make_rat(-1, 3)).to_string() == "1/2-1/3*rho");
    CHECK(FieldElem(Rat(0), Rat(1)).to_string() == "1*rho");
    CHECK(FieldElem(Rat(0), Rat(-2)).to_string() == "-2*rho");
    CHECK(FieldElem(0).to_string() == "0");
}
