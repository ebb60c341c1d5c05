#include "quivar/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace quivar {

std::string Quiver::edge_name(std::size_t k) const {
    std::size_t base = is_reverse(k) ? k - edges.size() : k;
    std::string name = "h" + std::to_string(base + 1);
    if (is_reverse(k)) name += "bar";
    return name;
}

std::vector<std::pair<int, int>> Quiver::underlying_bonds() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [s, t] : edges) {
        int a = labels[s], b = labels[t];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram build_diagram(ADEType t) {
    t.validate();
    Diagram d{t, t.rank, {}};
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < t.rank; ++i) d.bonds.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 1; i <= t.rank - 3; ++i) d.bonds.emplace_back(i, i + 1);
        d.bonds.emplace_back(t.rank - 2, t.rank - 1);
        d.bonds.emplace_back(t.rank - 2, t.rank);
        break;
    case Family::E:
        for (int i = 1; i < t.rank - 1; ++i) d.bonds.emplace_back(i, i + 1);
        d.bonds.emplace_back(3, t.rank);
        break;
    }
    std::sort(d.bonds.begin(), d.bonds.end());
    return d;
}

namespace {

IntMat cartan_from_bonds(int n, const std::vector<std::pair<int, int>>& bonds, int label_base) {
    IntMat c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (auto [a, b] : bonds) {
        c[a - label_base][b - label_base] -= 1;
        c[b - label_base][a - label_base] -= 1;
    }
    return c;
}

} // namespace

IntMat cartan_matrix(const Diagram& d) { return cartan_from_bonds(d.rank, d.bonds, 1); }

IntMat cartan_matrix(const ExtendedDiagram& ed) { return cartan_from_bonds(ed.rank + 1, ed.bonds, 0); }

GroupDescriptor mckay_group(ADEType t) {
    t.validate();
    switch (t.family) {
    case Family::A:
        return {"cyclic", t.rank + 1LL};
    case Family::D:
        return {"binary dihedral", 4LL * (t.rank - 2)};
    case Family::E:
        switch (t.rank) {
        case 6: return {"binary tetrahedral", 24};
        case 7: return {"binary octahedral", 48};
        default: return {"binary icosahedral", 120};
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

Quiver orient_bonds(const std::vector<int>& labels, const std::vector<std::pair<int, int>>& bonds,
                    const std::vector<bool>* flip, int label_base) {
    Quiver q;
    q.labels = labels;
    q.edges.reserve(bonds.size());
    for (std::size_t k = 0; k < bonds.size(); ++k) {
        int s = bonds[k].first - label_base;
        int t = bonds[k].second - label_base;
        if (flip && (*flip)[k]) std::swap(s, t);
        q.edges.emplace_back(s, t);
    }
    return q;
}

std::vector<int> iota_labels(int first, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = first + i;
    return out;
}

} // namespace

Quiver orient(const Diagram& d) { return orient_bonds(iota_labels(1, d.rank), d.bonds, nullptr, 1); }

Quiver orient(const Diagram& d, const std::vector<bool>& flip) {
    if (flip.size() != d.bonds.size()) throw std::invalid_argument("orientation size mismatch");
    return orient_bonds(iota_labels(1, d.rank), d.bonds, &flip, 1);
}

Quiver orient(const ExtendedDiagram& ed) {
    return orient_bonds(iota_labels(0, ed.rank + 1), ed.bonds, nullptr, 0);
}

Quiver orient(const ExtendedDiagram& ed, const std::vector<bool>& flip) {
    if (flip.size() != ed.bonds.size()) throw std::invalid_argument("orientation size mismatch");
    return orient_bonds(iota_labels(0, ed.rank + 1), ed.bonds, &flip, 0);
}

namespace {

// Walk away from `from` starting at `start`, collecting the branch nodes in
// order of increasing distance. Valid because branch interiors are paths.
std::vector<int> walk_branch(const std::vector<std::vector<int>>& adj, int from, int start) {
    std::vector<int> nodes{start};
    int prev = from, cur = start;
    while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        nodes.push_back(cur);
    }
    if (adj[cur].size() > 2) throw std::invalid_argument("graph is not an ADE tree");
    return nodes;
}

} // namespace

TreeShape classify_tree(const std::vector<std::vector<int>>& adj) {
    const int k = static_cast<int>(adj.size());
    if (k == 0) throw std::invalid_argument("empty graph");
    if (k == 1) return {ADEType(Family::A, 1), {0}};

    std::size_t nedges = 0;
    std::vector<int> branch_nodes;
    for (int v = 0; v < k; ++v) {
        nedges += adj[v].size();
        if (adj[v].size() >= 4) throw std::invalid_argument("graph is not an ADE tree");
        if (adj[v].size() == 3) branch_nodes.push_back(v);
    }
    if (nedges != 2 * static_cast<std::size_t>(k - 1) || branch_nodes.size() > 1)
        throw std::invalid_argument("graph is not an ADE tree");

    if (branch_nodes.empty()) {
        // path: pick the endpoint ordering with the lexicographically smaller
        // node sequence
        std::vector<int> ends;
        for (int v = 0; v < k; ++v)
            if (adj[v].size() == 1) ends.push_back(v);
        if (ends.size() != 2) throw std::invalid_argument("graph is not an ADE tree");
        std::vector<int> fwd{ends[0]};
        fwd.reserve(k);
        std::vector<int> rest = walk_branch(adj, ends[0], adj[ends[0]][0]);
        fwd.insert(fwd.end(), rest.begin(), rest.end());
        if (static_cast<int>(fwd.size()) != k) throw std::invalid_argument("graph is not an ADE tree");
        std::vector<int> bwd(fwd.rbegin(), fwd.rend());
        return {ADEType(Family::A, k), std::min(fwd, bwd)};
    }

    int center = branch_nodes[0];
    std::vector<std::vector<int>> branches;
    for (int nb : adj[center]) branches.push_back(walk_branch(adj, center, nb));
    std::sort(branches.begin(), branches.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.back() < y.back(); // tie-break on the outermost node
    });
    const auto l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();

    std::vector<int> order(k, -1);
    if (l1 == 1 && l2 == 1) {
        // D_k: long branch far end -> 1, center -> k-2, leaves -> k-1, k
        for (std::size_t j = 0; j < l3; ++j) order[l3 - 1 - j] = branches[2][j];
        order[k - 3] = center;
        order[k - 2] = std::min(branches[0][0], branches[1][0]);
        order[k - 1] = std::max(branches[0][0], branches[1][0]);
        return {ADEType(Family::D, k), order};
    }
    if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
        // E_k: length-2 branch -> vertices 2,1; long branch -> 4..k-1; leaf -> k
        order[2] = center;
        order[1] = branches[1][0];
        order[0] = branches[1][1];
        for (std::size_t j = 0; j < l3; ++j) order[3 + j] = branches[2][j];
        order[k - 1] = branches[0][0];
        return {ADEType(Family::E, k), order};
    }
    throw std::invalid_argument("graph is not an ADE tree");
}

std::vector<Diagram> full_subgraph(const Diagram& d, const std::vector<int>& J) {
    std::set<int> jset(J.begin(), J.end());
    for (int v : jset)
        if (v < 1 || v > d.rank) throw std::invalid_argument("vertex outside diagram");

    // connected components of the induced subgraph
    std::map<int, std::vector<int>> adj;
    for (int v : jset) adj[v];
    for (auto [a, b] : d.bonds)
        if (jset.count(a) && jset.count(b)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }

    std::set<int> seen;
    std::vector<Diagram> out;
    for (int v : jset) {
        if (seen.count(v)) continue;
        std::vector<int> comp{v};
        seen.insert(v);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : adj[comp[i]])
                if (!seen.count(w)) {
                    seen.insert(w);
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());

        std::map<int, int> pos;
        for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> local(comp.size());
        for (int a : comp)
            for (int b : adj[a]) local[pos[a]].push_back(pos[b]);

        TreeShape shape = classify_tree(local);
        out.push_back(build_diagram(shape.type));
    }
    return out;
}

} // namespace quivar
