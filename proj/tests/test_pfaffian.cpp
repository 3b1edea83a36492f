#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gtmt/pfaffian.hpp"
#include "test_support.hpp"

using namespace gtmt;

namespace {
TriArray<long> random_array(std::mt19937& rng, int order) {
    std::uniform_int_distribution<long> d(-5, 5);
    TriArray<long> a(order);
    for (int i = 1; i < order; ++i)
        for (int j = i + 1; j <= order; ++j) a.entry(i, j) = d(rng);
    return a;
}
} // namespace

TEST_CASE("pfaffian of the all-ones array is 1", "[pfaffian]") {
    for (int order = 2; order <= 8; order += 2) {
        TriArray<long> a(order);
        for (int i = 1; i < order; ++i)
            for (int j = i + 1; j <= order; ++j) a.entry(i, j) = 1;
        CHECK(pf_matchings(a) == 1);
        CHECK(pf_laplace(a) == 1);
    }
}

TEST_CASE("small pfaffians from the definition", "[pfaffian]") {
    TriArray<MultiPoly> a2(2);
    a2.entry(1, 2) = MultiPoly::variable("a12");
    CHECK(pf_matchings(a2) == MultiPoly::variable("a12"));
    CHECK(pf_laplace(a2) == MultiPoly::variable("a12"));

    TriArray<MultiPoly> a4(4);
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            a4.entry(i, j) = MultiPoly::variable("a" + std::to_string(i) + std::to_string(j));
    auto v = [](const char* s) { return MultiPoly::variable(s); };
    MultiPoly expect = v("a12") * v("a34") - v("a13") * v("a24") + v("a14") * v("a23");
    CHECK(pf_matchings(a4) == expect);
    CHECK(pf_laplace(a4) == expect);
}

TEST_CASE("matching sum agrees with Laplace recursion", "[pfaffian]") {
    std::mt19937 rng(101);
    for (int t = 0; t < 30; ++t) {
        int order = 2 * (1 + t % 5); // 2..10
        TriArray<long> a = random_array(rng, order);
        CHECK(pf_matchings(a) == pf_laplace(a));
    }
}

TEST_CASE("expansion index does not matter", "[pfaffian]") {
    std::mt19937 rng(55);
    TriArray<long> a = random_array(rng, 8);
    long ref = pf_laplace(a, 8);
    for (int p = 1; p < 8; ++p) CHECK(pf_laplace(a, p) == ref);
}

TEST_CASE("pf squared equals the determinant", "[pfaffian]") {
    std::mt19937 rng(77);
    for (int order = 2; order <= 8; order += 2) {
        for (int t = 0; t < 4; ++t) {
            TriArray<long> a = random_array(rng, order);
            CHECK(pf_squared_is_det(a));
        }
    }
    // all-ones: pf = 1 forces det = 1
    TriArray<long> ones(6);
    for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j) ones.entry(i, j) = 1;
    CHECK(skew_determinant(ones) == 1);
}

TEST_CASE("linearity in a concatenated row/column vector", "[pfaffian]") {
    std::mt19937 rng(91);
    for (int t = 0; t < 10; ++t) {
        int order = 6, p = 1 + static_cast<int>(rng() % order);
        TriArray<long> base = random_array(rng, order);
        TriArray<long> av = base, aw = base, avw = base;
        std::uniform_int_distribution<long> d(-5, 5);
        for (int o = 1; o <= order; ++o) {
            if (o == p) continue;
            int i = std::min(o, p), j = std::max(o, p);
            long v = d(rng), w = d(rng);
            av.entry(i, j) = v;
            aw.entry(i, j) = w;
            avw.entry(i, j) = v + w;
        }
        CHECK(pf_laplace(avw) == pf_laplace(av) + pf_laplace(aw));
    }
}

TEST_CASE("error paths", "[pfaffian]") {
    CHECK_THROWS_AS(TriArray<long>(3), DomainError);
    CHECK_THROWS_AS(TriArray<long>(0), DomainError);
    TriArray<long> big(14);
    CHECK_THROWS_AS(pf_matchings(big, 12), ResourceError);
}
