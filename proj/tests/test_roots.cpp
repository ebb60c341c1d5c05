#include "quivar/roots.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace quivar;

namespace {

IntVec unit(int n, int i) { // 1-based vertex
    IntVec e(n, 0);
    e[i - 1] = 1;
    return e;
}

} // namespace

TEST_CASE("root counts and enumeration routes agree") {
    struct Row {
        ADEType t;
        std::size_t count;
    };
    const Row table[]{
        {ADEType(Family::A, 1), 2},   {ADEType(Family::A, 2), 6},  {ADEType(Family::A, 3), 12},
        {ADEType(Family::D, 4), 24},  {ADEType(Family::D, 5), 40}, {ADEType(Family::E, 6), 72},
        {ADEType(Family::E, 7), 126}, {ADEType(Family::E, 8), 240}};
    for (const auto& row : table) {
        const RootSystem& rs = root_system(row.t);
        CHECK(rs.roots.size() == row.count);
        CHECK(rs.positives.size() == row.count / 2);
        CHECK(roots_by_quadric(rs.cartan) == rs.roots);
    }
}

TEST_CASE("closure matches brute box enumeration up to rank 6") {
    for (ADEType t : {ADEType(Family::A, 4), ADEType(Family::D, 5), ADEType(Family::E, 6)}) {
        const RootSystem& rs = root_system(t);
        CHECK(test::brute_box_roots(rs.cartan, 6) == rs.roots);
    }
}

TEST_CASE("A2 roots by hand") {
    const RootSystem& rs = root_system(ADEType(Family::A, 2));
    std::set<IntVec> expected{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
    CHECK(std::set<IntVec>(rs.roots.begin(), rs.roots.end()) == expected);
    CHECK(rs.maximal == IntVec{1, 1});
}

TEST_CASE("bilinear and p_defect") {
    const RootSystem& a2 = root_system(ADEType(Family::A, 2));
    CHECK(bilinear(a2, unit(2, 1), unit(2, 1)) == 2);
    CHECK(bilinear(a2, unit(2, 1), unit(2, 2)) == -1);

    for (ADEType t : all_types(6)) {
        const ExtendedDiagram& ed = extended_diagram(t);
        IntMat ext = cartan_matrix(ed);
        CHECK(bilinear(ext, ed.delta, ed.delta) == 0);
        CHECK(p_defect(ext, ed.delta) == 1);
        CHECK(p_defect(ext, IntVec(ed.delta.size(), 0)) == 1);
        for (const auto& s : sigma_set(ed)) CHECK(p_defect(ext, s) == 0);
    }
}

TEST_CASE("simple reflections") {
    const RootSystem& a2 = root_system(ADEType(Family::A, 2));
    CHECK(simple_reflection(a2, 1, unit(2, 1)) == IntVec{-1, 0});
    CHECK(simple_reflection(a2, 1, unit(2, 2)) == IntVec{1, 1});

    std::mt19937_64 rng(3);
    const RootSystem& e6 = root_system(ADEType(Family::E, 6));
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> vertex(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        IntVec v(6);
        for (auto& c : v) c = coord(rng);
        int i = vertex(rng);
        IntVec w = simple_reflection(e6, i, v);
        CHECK(simple_reflection(e6, i, w) == v); // involution
        IntVec u(6);
        for (auto& c : u) c = coord(rng);
        CHECK(bilinear(e6, v, u) ==
              bilinear(e6, w, simple_reflection(e6, i, u))); // isometry
    }
}

TEST_CASE("dual reflection adjunction") {
    const RootSystem& a1 = root_system(ADEType(Family::A, 1));
    Parameter one{GaussianRational(1)};
    CHECK(dual_reflection(a1, 1, one) == Parameter{GaussianRational(-1)});

    std::mt19937_64 rng(5);
    for (ADEType t : {ADEType(Family::A, 3), ADEType(Family::D, 4), ADEType(Family::E, 6)}) {
        const RootSystem& rs = root_system(t);
        std::uniform_int_distribution<std::size_t> pick(0, rs.roots.size() - 1);
        std::uniform_int_distribution<int> vertex(1, t.rank);
        for (int trial = 0; trial < 20; ++trial) {
            Parameter tau = test::random_tau(rng, t.rank);
            const IntVec& a = rs.roots[pick(rng)];
            int i = vertex(rng);
            CHECK(dot(simple_reflection(rs, i, a), tau) == dot(a, dual_reflection(rs, i, tau)));
            // tau_i = 0 fixes tau
            Parameter fixed = tau;
            fixed[i - 1] = GaussianRational(0);
            CHECK(dual_reflection(rs, i, fixed) == fixed);
        }
    }
}

TEST_CASE("make_dominant") {
    const RootSystem& a2 = root_system(ADEType(Family::A, 2));
    Parameter tau{GaussianRational(-1), GaussianRational(0)};
    DominantResult res = make_dominant(a2, tau);
    CHECK(res.word == std::vector<int>{1, 2});
    CHECK(res.tau == Parameter{GaussianRational(0), GaussianRational(1)});

    // dominant input: identity word
    Parameter dom{GaussianRational(1), GaussianRational(Rational(1, 2))};
    CHECK(make_dominant(a2, dom).word.empty());
    CHECK(make_dominant(a2, dom).tau == dom);

    std::mt19937_64 rng(9);
    for (ADEType t : {ADEType(Family::A, 4), ADEType(Family::D, 5), ADEType(Family::E, 7)}) {
        const RootSystem& rs = root_system(t);
        for (int trial = 0; trial < 25; ++trial) {
            Parameter tau = test::random_tau(rng, t.rank);
            DominantResult r = make_dominant(rs, tau);
            CHECK(is_dominant(r.tau));
            CHECK(apply_dual_word(rs, r.word, tau) == r.tau); // witnessed orbit
            CHECK(make_dominant(rs, r.tau).word.empty());     // idempotent
        }
    }
}

TEST_CASE("dominance reduction strictly raises the half-sum pairing") {
    std::mt19937_64 rng(19);
    for (ADEType t : {ADEType(Family::A, 3), ADEType(Family::D, 4), ADEType(Family::E, 6)}) {
        const RootSystem& rs = root_system(t);
        // 2 gamma = sum of positive roots; track 2 gamma . tau to stay integral
        IntVec two_gamma(t.rank, 0);
        for (const auto& a : rs.positives) two_gamma = add(two_gamma, a);

        for (int trial = 0; trial < 20; ++trial) {
            Parameter tau = test::random_tau(rng, t.rank);
            DominantResult r = make_dominant(rs, tau);
            Parameter current = tau;
            GaussianRational height = dot(two_gamma, current);
            for (int i : r.word) {
                current = dual_reflection(rs, i, current);
                GaussianRational next = dot(two_gamma, current);
                CHECK(height < next); // strict lexicographic ascent
                height = next;
            }
            CHECK(current == r.tau);
        }
    }
}

TEST_CASE("psi and psi_star") {
    const ExtendedDiagram& ea2 = extended_diagram(ADEType(Family::A, 2));
    CHECK(psi(ea2, ea2.delta) == IntVec{0, 0});
    CHECK(psi(ea2, IntVec{0, 1, 0}) == IntVec{1, 0});
    // psi((1, d - b)) = -b
    IntVec b{1, 0};
    IntVec arg{1, ea2.delta[1] - b[0], ea2.delta[2] - b[1]};
    CHECK(psi(ea2, arg) == IntVec{-1, 0});

    Parameter tau{GaussianRational(1), GaussianRational(1)};
    Parameter lambda = psi_star(ea2, tau);
    CHECK(lambda == Parameter{GaussianRational(-2), GaussianRational(1), GaussianRational(1)});

    std::mt19937_64 rng(13);
    for (ADEType t : {ADEType(Family::A, 3), ADEType(Family::D, 4), ADEType(Family::E, 6)}) {
        const ExtendedDiagram& ed = extended_diagram(t);
        IntVec delta = ed.delta;
        std::uniform_int_distribution<int> coord(-2, 2);
        for (int trial = 0; trial < 50; ++trial) {
            Parameter tau2 = test::random_tau(rng, t.rank);
            Parameter l = psi_star(ed, tau2);
            CHECK(dot(delta, l).is_zero());
            IntVec theta(t.rank + 1);
            for (auto& c : theta) c = coord(rng);
            CHECK(dot(theta, l) == dot(psi(ed, theta), tau2));
        }
    }
}

TEST_CASE("sigma_set") {
    const ExtendedDiagram& ea1 = extended_diagram(ADEType(Family::A, 1));
    CHECK(sigma_set(ea1) == std::vector<IntVec>{{0, 1}, {1, 0}});

    const ExtendedDiagram& ee8 = extended_diagram(ADEType(Family::E, 8));
    CHECK(sigma_set(ee8).size() == 240);

    for (ADEType t : all_types(6)) {
        const ExtendedDiagram& ed = extended_diagram(t);
        const RootSystem& rs = root_system(t);
        std::set<IntVec> image;
        for (const auto& s : sigma_set(ed)) {
            // strictly between 0 and delta
            CHECK(all_nonneg(s));
            CHECK(leq(s, ed.delta));
            CHECK_FALSE(is_zero(s));
            CHECK(s != ed.delta);
            image.insert(psi(ed, s));
        }
        CHECK(std::vector<IntVec>(image.begin(), image.end()) == rs.roots);
    }
}

TEST_CASE("pairing transport between extended and finite systems") {
    for (ADEType t : {ADEType(Family::A, 2), ADEType(Family::D, 4), ADEType(Family::E, 6)}) {
        const ExtendedDiagram& ed = extended_diagram(t);
        const RootSystem& rs = root_system(t);
        IntMat ext = cartan_matrix(ed);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> coord(-3, 3);
        for (int trial = 0; trial < 60; ++trial) {
            IntVec u(t.rank + 1), v(t.rank + 1);
            for (auto& c : u) c = coord(rng);
            for (auto& c : v) c = coord(rng);
            CHECK(bilinear(ext, u, v) == bilinear(rs, psi(ed, u), psi(ed, v)));
        }
    }
}
