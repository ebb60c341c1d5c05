#include "quivar/verify.hpp"

#include "quivar/bordism.hpp"
#include "quivar/classify.hpp"
#include "quivar/replab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace quivar {

namespace {

long long expected_root_count(ADEType t) {
    switch (t.family) {
    case Family::A: return static_cast<long long>(t.rank) * (t.rank + 1);
    case Family::D: return 2LL * t.rank * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 72 : t.rank == 7 ? 126 : 240;
    }
    return -1;
}

struct Suite {
    std::vector<CheckResult>& out;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, ok ? "" : detail});
    }

    void run(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        check(name, ok, detail);
    }
};

Parameter random_tau(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> zero(0, 2);
    Parameter tau(n);
    for (int i = 0; i < n; ++i) {
        if (zero(rng) == 0) continue; // keep some coordinates exactly zero
        tau[i] = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    }
    return tau;
}

std::vector<ADEType> decompose_types(const RootSystem& rs, const Parameter& tau) {
    std::vector<ADEType> types;
    for (const auto& c : decompose(rs, tau)) types.push_back(c.adtype);
    std::sort(types.begin(), types.end());
    return types;
}

} // namespace

std::vector<CheckResult> run_verification(std::optional<ADEType> only) {
    std::vector<CheckResult> results;
    Suite suite{results};

    std::vector<ADEType> types = only ? std::vector<ADEType>{*only} : all_types(8);

    for (ADEType t : types) {
        const std::string tag = t.str();
        const RootSystem& rs = root_system(t);
        const ExtendedDiagram& ed = extended_diagram(t);
        const int n = t.rank;

        suite.run("mckay-sum-squares-" + tag, [&](std::string& detail) {
            long long sq = 0;
            for (auto c : ed.delta) sq += c * c;
            detail = "sum " + std::to_string(sq);
            return sq == mckay_group(t).order;
        });

        suite.run("cartan-positive-definite-" + tag, [&](std::string&) {
            for (int k = 1; k <= n; ++k) {
                IntMat minor(k, IntVec(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) minor[i][j] = rs.cartan[i][j];
                if (det_int(minor) <= 0) return false;
            }
            return true;
        });

        suite.run("extended-cartan-radical-" + tag, [&](std::string&) {
            IntMat ext = cartan_matrix(ed);
            if (!is_zero(matvec(ext, ed.delta))) return false;
            Mat<Rational> m(n + 1, n + 1);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) m(i, j) = ext[i][j];
            return rank(m) == static_cast<std::size_t>(n);
        });

        suite.run("roots-closure-vs-quadric-" + tag, [&](std::string& detail) {
            auto quadric = roots_by_quadric(rs.cartan);
            detail = "closure " + std::to_string(rs.roots.size()) + ", quadric " +
                     std::to_string(quadric.size());
            return rs.roots == quadric &&
                   static_cast<long long>(rs.roots.size()) == expected_root_count(t);
        });

        suite.run("psi-sigma-bijection-" + tag, [&](std::string&) {
            auto sigma = sigma_set(ed);
            if (sigma.size() != rs.roots.size()) return false;
            std::set<IntVec> image;
            IntMat ext = cartan_matrix(ed);
            for (const auto& s : sigma) {
                if (p_defect(ext, s) != 0) return false;
                IntVec a = psi(ed, s);
                // roundtrip through the explicit inverse
                IntVec back(n + 1, 0);
                if (all_nonneg(a)) {
                    for (int i = 0; i < n; ++i) back[i + 1] = a[i];
                } else {
                    back[0] = 1;
                    for (int i = 0; i < n; ++i) back[i + 1] = rs.maximal[i] + a[i];
                }
                if (back != s) return false;
                image.insert(a);
            }
            return std::vector<IntVec>(image.begin(), image.end()) == rs.roots;
        });

        suite.run("pairing-transport-" + tag, [&](std::string&) {
            IntMat ext = cartan_matrix(ed);
            auto sigma = sigma_set(ed);
            std::size_t cap = std::min<std::size_t>(sigma.size(), 40);
            for (std::size_t i = 0; i < cap; ++i)
                for (std::size_t j = 0; j < cap; ++j)
                    if (bilinear(ext, sigma[i], sigma[j]) !=
                        bilinear(rs, psi(ed, sigma[i]), psi(ed, sigma[j])))
                        return false;
            return true;
        });

        suite.run("r-plus-delta-equals-sigma-" + tag, [&](std::string&) {
            return r_plus(ed, ed.delta) == sigma_set(ed);
        });

        suite.run("extension-delete-roundtrip-" + tag, [&](std::string&) {
            std::vector<std::pair<int, int>> bonds;
            for (auto [a, b] : ed.bonds)
                if (a != 0) bonds.emplace_back(a, b);
            return bonds == build_diagram(t).bonds;
        });

        suite.run("tau-zero-classification-" + tag, [&](std::string&) {
            Classification cls = classify_tau(ed, Parameter(n, GaussianRational(0)));
            if (cls.points.size() != 1) return false;
            const SingularPoint& sp = cls.points[0];
            return sp.adtype == t && sp.slice.delta_prime == ed.delta &&
                   sp.slice.diagram.bonds == ed.bonds &&
                   sp.mckay.order == mckay_group(t).order;
        });

        suite.run("subgraph-oracle-" + tag, [&](std::string&) {
            Diagram d = build_diagram(t);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                Parameter tau(n);
                std::vector<int> complement;
                for (int j = 1; j <= n; ++j) {
                    if (mask & (1u << (j - 1)))
                        tau[j - 1] = GaussianRational(1);
                    else
                        complement.push_back(j);
                }
                if (decompose_types(rs, tau) != subgraph_types(d, complement)) return false;
            }
            return true;
        });

        suite.run("dominance-" + tag, [&](std::string&) {
            std::mt19937_64 rng(0x715EED00 + n);
            for (int trial = 0; trial < 20; ++trial) {
                Parameter tau = random_tau(rng, n);
                DominantResult res = make_dominant(rs, tau);
                if (!is_dominant(res.tau)) return false;
                if (apply_dual_word(rs, res.word, tau) != res.tau) return false;
                if (!make_dominant(rs, res.tau).word.empty()) return false;
                if (decompose_types(rs, tau) != decompose_types(rs, res.tau)) return false;
                // adjunction of the dual action against a sample root
                const IntVec& a = rs.roots[trial % rs.roots.size()];
                int i = 1 + trial % n;
                if (dot(simple_reflection(rs, i, a), tau) != dot(a, dual_reflection(rs, i, tau)))
                    return false;
            }
            return true;
        });

        suite.run("classification-sum-rule-" + tag, [&](std::string&) {
            std::mt19937_64 rng(0xC0FFEE00 + n);
            for (int trial = 0; trial < 10; ++trial) {
                Classification cls = classify_tau(ed, random_tau(rng, n));
                for (const auto& sp : cls.points) {
                    IntVec sum = sp.gamma0;
                    for (std::size_t k = 0; k < sp.gammas.size(); ++k)
                        sum = add(sum, scaled(sp.gammas[k], sp.multiplicities[k]));
                    if (sum != ed.delta) return false;
                    if (sp.stabilizer_blocks.front() != 1) return false;
                }
                if (cls.points.size() > static_cast<std::size_t>(n)) return false;
            }
            return true;
        });

        if (t.rank <= 8) {
            suite.run("bordism-membership-" + tag, [&](std::string&) {
                auto configs = enumerate_configurations(t);
                std::set<std::vector<ADEType>> config_set(configs.begin(), configs.end());
                for (const auto& parts : configs)
                    if (!realizable({t, parts})) return false;
                // a multiset outside the enumeration must not be realizable
                std::vector<ADEType> too_big(static_cast<std::size_t>(n + 1),
                                             ADEType(Family::A, 1));
                return !realizable({t, too_big});
            });
        }
    }

    suite.run("replab-homological-identities", [&](std::string&) {
        std::vector<RepPoint> fixtures;
        const Quiver q = orient(extended_diagram(ADEType(Family::A, 1)));
        fixtures.push_back(vertex_simple(q, 0));
        fixtures.push_back(vertex_simple(q, 1));
        for (int v = 1; v <= 3; ++v) fixtures.push_back(tilde_a1_simple(GaussianRational(v)));

        IntMat ext = cartan_matrix(extended_diagram(ADEType(Family::A, 1)));
        for (const auto& x : fixtures)
            for (const auto& y : fixtures) {
                bool compatible = true;
                CohomologyDims dims{};
                try {
                    dims = cohomology_dims(x, y);
                } catch (const std::domain_error&) {
                    compatible = false;
                }
                if (!compatible) continue;
                long long euler = bilinear(ext, x.dims, y.dims);
                if (dims.h0 - dims.h1 + dims.h2 != euler) return false;
                if (dims.h2 != cohomology_dims(y, x).h0) return false;
            }
        CohomologyDims family = cohomology_dims(fixtures[2], fixtures[2]);
        return family.h0 == 1 && family.h1 == 2 && family.h2 == 1;
    });

    return results;
}

} // namespace quivar
