#pragma once

#include "quivar/linalg.hpp"
#include "quivar/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quivar {

/// A finite simply laced Dynkin diagram with the fixed labeling convention:
///   A_n : path 1-2-...-n
///   D_n : path 1-...-(n-2) with leaves n-1 and n attached to n-2
///   E_n : path 1-...-(n-1) with leaf n attached to vertex 3
/// Bonds are stored as sorted (a,b) pairs with a < b; a repeated pair means a
/// multiple bond (which only occurs in the extended A_1 diagram).
struct Diagram {
    ADEType type;
    int rank;
    std::vector<std::pair<int, int>> bonds;
};

/// Extension by the vertex 0, attached to i with multiplicity (d, eps_i)_C
/// where d is the maximal root. delta = (1, d) spans the radical of the
/// extended Cartan form.
struct ExtendedDiagram {
    ADEType base_type;
    int rank; // rank of the base; vertices are 0..rank
    std::vector<std::pair<int, int>> bonds;
    IntVec delta; // length rank+1
};

/// Finite subgroup of SU(2) attached to a type by the McKay correspondence.
struct GroupDescriptor {
    std::string name;
    long long order;
};

/// An orientation of a diagram. Edges are stored on 0-based vertex positions;
/// labels[p] is the diagram label of position p. The doubled quiver is implicit:
/// doubled edge k < edges.size() is the chosen orientation (eps = +1), and
/// k + edges.size() is its reverse (eps = -1).
struct Quiver {
    std::vector<int> labels;
    std::vector<std::pair<int, int>> edges; // positions (src, dst)

    int nverts() const { return static_cast<int>(labels.size()); }
    std::size_t doubled_size() const { return 2 * edges.size(); }
    bool is_reverse(std::size_t k) const { return k >= edges.size(); }
    std::size_t bar(std::size_t k) const { return is_reverse(k) ? k - edges.size() : k + edges.size(); }
    int eps(std::size_t k) const { return is_reverse(k) ? -1 : +1; }
    int src(std::size_t k) const { return is_reverse(k) ? edges[k - edges.size()].second : edges[k].first; }
    int dst(std::size_t k) const { return is_reverse(k) ? edges[k - edges.size()].first : edges[k].second; }
    std::string edge_name(std::size_t k) const;

    /// Bond multiset of the underlying unoriented diagram, in label coordinates.
    std::vector<std::pair<int, int>> underlying_bonds() const;
};

Diagram build_diagram(ADEType t);

/// c_ij = 2 delta_ij - a_ij. Position i corresponds to label i+1.
IntMat cartan_matrix(const Diagram& d);
/// Position i corresponds to label i (the extension vertex is position 0).
IntMat cartan_matrix(const ExtendedDiagram& ed);

GroupDescriptor mckay_group(ADEType t);

/// Default orientation: every bond points low label -> high label.
/// flip[k] reverses bond k (in the sorted bond order).
Quiver orient(const Diagram& d);
Quiver orient(const Diagram& d, const std::vector<bool>& flip);
Quiver orient(const ExtendedDiagram& ed);
Quiver orient(const ExtendedDiagram& ed, const std::vector<bool>& flip);

/// Shape classification of a connected simply laced tree given by adjacency
/// lists on 0-based nodes. order[c-1] is the node placed at canonical label c,
/// so relabeling along `order` reproduces build_diagram(type) exactly.
struct TreeShape {
    ADEType type;
    std::vector<int> order;
};
TreeShape classify_tree(const std::vector<std::vector<int>>& adj);

/// Induced subgraph on the label set J, split into connected components,
/// each re-labeled canonically. Components are ordered by their smallest
/// member label in the ambient diagram.
std::vector<Diagram> full_subgraph(const Diagram& d, const std::vector<int>& J);

} // namespace quivar
