#include "quivar/bordism.hpp"

#include "quivar/classify.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace quivar;

namespace {

std::vector<ADEType> parts(std::initializer_list<const char*> labels) {
    std::vector<ADEType> out;
    for (const char* s : labels) out.push_back(parse_ade(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ADEType> classified_types(ADEType base, const Parameter& lambda) {
    std::vector<ADEType> out;
    for (const auto& sp : classify_singularities(extended_diagram(base), lambda).points)
        out.push_back(sp.adtype);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("realizable") {
    auto threeA1 = realizable({ADEType(Family::D, 4), parts({"A1", "A1", "A1"})});
    REQUIRE(threeA1.has_value());
    CHECK(*threeA1 == std::vector<int>{1, 3, 4}); // the three leaves

    auto d4_in_e8 = realizable({ADEType(Family::E, 8), parts({"D4"})});
    REQUIRE(d4_in_e8.has_value());
    CHECK(*d4_in_e8 == std::vector<int>{2, 3, 4, 8}); // branch vertex and neighbors

    auto whole = realizable({ADEType(Family::A, 2), parts({"A2"})});
    REQUIRE(whole.has_value());
    CHECK(*whole == std::vector<int>{1, 2});

    CHECK_FALSE(realizable({ADEType(Family::A, 2), parts({"A1", "A1"})}).has_value());
}

TEST_CASE("witness_parameter") {
    // empty J: tau all ones, no singular points
    ADEType a3(Family::A, 3);
    Parameter all_ones = witness_parameter(a3, {});
    CHECK(all_ones == Parameter{GaussianRational(-3), GaussianRational(1), GaussianRational(1),
                                GaussianRational(1)});
    CHECK(classified_types(a3, all_ones).empty());

    Parameter two = witness_parameter(a3, {1, 3});
    CHECK(two == Parameter{GaussianRational(-1), GaussianRational(0), GaussianRational(1),
                           GaussianRational(0)});

    // J = all vertices: tau = 0, single singularity of the full type
    Parameter zero = witness_parameter(a3, {1, 2, 3});
    CHECK(zero == Parameter(4, GaussianRational(0)));
    CHECK(classified_types(a3, zero) == std::vector<ADEType>{a3});
}

TEST_CASE("enumerate_configurations") {
    auto a2 = enumerate_configurations(ADEType(Family::A, 2));
    std::set<std::vector<ADEType>> a2set(a2.begin(), a2.end());
    CHECK(a2set == std::set<std::vector<ADEType>>{
                       {}, {ADEType(Family::A, 1)}, {ADEType(Family::A, 2)}});

    auto a3 = enumerate_configurations(ADEType(Family::A, 3));
    std::set<std::vector<ADEType>> a3set(a3.begin(), a3.end());
    CHECK(a3set.count(parts({"A1", "A1"})) == 1);

    auto d4 = enumerate_configurations(ADEType(Family::D, 4));
    std::set<std::vector<ADEType>> d4set(d4.begin(), d4.end());
    CHECK(d4set.count(parts({"A1", "A1", "A1"})) == 1);

    // realizable iff the multiset appears in the enumeration
    for (ADEType base : {ADEType(Family::A, 4), ADEType(Family::D, 5)}) {
        auto configs = enumerate_configurations(base);
        std::set<std::vector<ADEType>> config_set(configs.begin(), configs.end());
        for (const auto& cfg : configs) CHECK(realizable({base, cfg}).has_value());
        CHECK_FALSE(realizable({base, parts({"E6"})}).has_value());
        CHECK(config_set.count(parts({"E6"})) == 0);
    }
}

TEST_CASE("witness parameters reproduce the requested multiset") {
    for (ADEType base : {ADEType(Family::A, 4), ADEType(Family::D, 4), ADEType(Family::E, 6)}) {
        for (const auto& cfg : enumerate_configurations(base)) {
            auto J = realizable({base, cfg});
            REQUIRE(J.has_value());
            CHECK(classified_types(base, witness_parameter(base, *J)) == cfg);
        }
    }
}

TEST_CASE("every admissible parameter lands inside the enumeration") {
    std::mt19937_64 rng(71);
    for (ADEType base : {ADEType(Family::A, 5), ADEType(Family::D, 5), ADEType(Family::E, 6)}) {
        const ExtendedDiagram& ed = extended_diagram(base);
        auto configs = enumerate_configurations(base);
        std::set<std::vector<ADEType>> config_set(configs.begin(), configs.end());
        for (int trial = 0; trial < 40; ++trial) {
            Parameter lambda = psi_star(ed, quivar::test::random_tau(rng, base.rank));
            CHECK(config_set.count(classified_types(base, lambda)) == 1);
        }
    }
}
