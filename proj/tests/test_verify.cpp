#include <catch2/catch_amalgamated.hpp>

#include "gtmt/verify.hpp"

using namespace gtmt;

namespace {
SeriesGen hidden(PChoice c, AFactor f = AFactor::one_plus_x_plus_y) {
    return catalog_gen(HiddenSpec{c, f});
}
} // namespace

TEST_CASE("annihilating: built-in series pass", "[verify]") {
    for (PChoice c : {PChoice::p0a, PChoice::q_b}) {
        CheckReport rep = check_annihilating(hidden(c), 2, 1, 6);
        INFO("choice " << to_string(c) << ": " << rep.witness.value_or(""));
        CHECK(rep.passed);
        CHECK(rep.params.at("route_agreement") == "pass");
    }
}

TEST_CASE("annihilating: negative controls", "[verify]") {
    // A = 1+x+y fails condition (1)
    SeriesGen a1 = [](int ox, int oy) {
        MultiPoly p = MultiPoly::constant(FieldElem(1)) + MultiPoly::variable("x") +
                      MultiPoly::variable("y");
        return BiSeries::from_poly(p, "x", "y", ox, oy);
    };
    CheckReport r1 = check_annihilating(a1, 2, 1, 6);
    CHECK_FALSE(r1.passed);
    CHECK(r1.params.at("condition1") == "fail");
    CHECK(r1.params.at("route_agreement") == "pass");

    // A = 1 satisfies condition (1) but fails condition (2)
    CheckReport r2 = check_annihilating(constant_one_gen(), 2, 1, 6);
    CHECK_FALSE(r2.passed);
    CHECK(r2.params.at("condition1") == "pass");
    CHECK(r2.params.at("condition2") == "fail");
    CHECK(r2.params.at("series_iota_diagonal") == "pass");
    CHECK(r2.params.at("series_fourfold") == "fail");
    CHECK(r2.params.at("route_agreement") == "pass");
}

TEST_CASE("W12 identities", "[verify]") {
    CHECK(check_w12(2, 1, 1, 4).passed);
    CHECK(check_w12(0, 0, 0, 3).passed);
    CheckReport rep = check_w12(1, 2, 1, 2);
    INFO(rep.witness.value_or(""));
    CHECK(rep.passed);
}

TEST_CASE("fund identities", "[verify]") {
    CHECK(check_fund(1, 3, {1}).passed);
    CHECK(check_fund(1, 3, {}).passed); // S = id
    CheckReport rep = check_fund(2, 4, {2, 1});
    INFO(rep.witness.value_or(""));
    CHECK(rep.passed);
}

TEST_CASE("lemma one", "[verify]") {
    CHECK(check_one(1, 3, hidden(PChoice::p0a)).passed);
    CHECK(check_one(0, 2, hidden(PChoice::p0a)).passed);
    CheckReport rep = check_one(2, 4, hidden(PChoice::sqrt_a));
    INFO(rep.witness.value_or(""));
    CHECK(rep.passed);
}

TEST_CASE("lemma eat", "[verify]") {
    CHECK(check_eat(0, 4, 3, 1).passed);   // identity case
    CHECK(check_eat(1, 3, 3, 2).passed);
    CHECK(check_eat(1, 4, 4, 3).passed);   // i=1, j=n
    CHECK(check_eat(2, 3, 4, 4).passed);
    for (unsigned seed = 10; seed < 20; ++seed) CHECK(check_eat(1, 4, 4, seed).passed);
    CHECK_THROWS_AS(check_eat(3, 2, 4, 0), DomainError);
}

TEST_CASE("urban renewal", "[verify]") {
    CHECK(check_urbanrenewal(0, 3, 5).passed);
    CheckReport rep = check_urbanrenewal(1, 3, 6, {0, 2, 4});
    INFO(rep.witness.value_or(""));
    CHECK(rep.passed);
    CHECK(check_urbanrenewal(2, 4, 7).passed);
}

TEST_CASE("additive decomposition", "[verify]") {
    CHECK(check_decomposition(0, 2, 3).passed);
    CheckReport rep = check_decomposition(1, 2, 3);
    INFO(rep.witness.value_or(""));
    CHECK(rep.passed);
    CheckReport rep2 = check_decomposition(2, 4, 5);
    INFO(rep2.witness.value_or(""));
    CHECK(rep2.passed);
    CHECK_THROWS_AS(check_decomposition(1, 3, 4), DomainError); // q not half-integer
    CHECK_THROWS_AS(check_decomposition(2, 3, 5), DomainError); // out of validity range
}

TEST_CASE("first3 proportionality", "[verify]") {
    CheckReport rep = check_first3(1, 3, 1);
    CHECK(rep.passed);
    REQUIRE(rep.constant.has_value());
    CheckReport h0 = check_first3(0, 3, 2);
    CHECK(h0.passed);
    CHECK(h0.constant.value() == FieldElem(1));
    CheckReport at_n = check_first3(1, 3, 3);
    CHECK(at_n.passed);
    CHECK(at_n.constant.value() == FieldElem(1));
}

TEST_CASE("ideal generators", "[verify]") {
    for (int n = 1; n <= 4; ++n)
        for (int h = 0; h <= std::min(2, n); ++h) {
            CheckReport rep = check_ideal_generators(h, n);
            INFO("h=" << h << " n=" << n << ": " << rep.witness.value_or(""));
            CHECK(rep.passed);
        }
}

TEST_CASE("shift-version telescoping identity for small q", "[verify]") {
    CHECK(check_eid_shift_identity(3, 1, 3, 11).passed);
    CHECK(check_eid_shift_identity(3, 2, 3, 12).passed);
    CHECK(check_eid_shift_identity(4, 2, 2, 13).passed);
}

TEST_CASE("fast suite passes", "[verify]") {
    for (const auto& rep : run_suite(false)) {
        INFO(rep.check_id << ": " << rep.witness.value_or(""));
        CHECK(rep.passed);
    }
}
