#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <vector>

#include "asymcg/edge_address.hpp"

namespace asymcg {

/// Finite subtree of the trivalent tree containing the base vertex v0.
///
/// Stored as the prefix-closed set of edges whose far endpoint belongs to the
/// subtree ("internal" edges, one wrist each). The single-vertex subtree {v0}
/// has an empty edge set. Counting identities, checked exhaustively in tests:
///   internal edges = vertex count - 1,  frontier edges = vertex count + 2.
/// Immutable value type; operations return new subtrees.
class FiniteSubtree {
  public:
    FiniteSubtree() = default; // {v0}

    static FiniteSubtree base() { return FiniteSubtree(); }

    /// Build from explicit internal edges; rejects non-prefix-closed input.
    static FiniteSubtree from_edges(const std::vector<EdgeAddress>& edges);

    /// Smallest subtree whose internal edges include all of `edges`
    /// (prefix closure).
    static FiniteSubtree closure(const std::vector<EdgeAddress>& edges);

    std::size_t vertex_count() const { return edges_.size() + 1; }
    std::size_t internal_edge_count() const { return edges_.size(); }
    std::size_t frontier_count() const { return edges_.size() + 3; }

    bool contains_edge(const EdgeAddress& e) const { return edges_.count(e) != 0; }

    /// True iff `e` touches the subtree without being internal.
    bool is_frontier(const EdgeAddress& e) const {
        return !contains_edge(e) && (e.is_base() || contains_edge(e.parent()));
    }

    /// Internal edges in canonical (lexicographic) order; wrist index set.
    std::vector<EdgeAddress> wrists() const { return {edges_.begin(), edges_.end()}; }

    const std::set<EdgeAddress>& edge_set() const { return edges_; }

    /// Frontier edges in counterclockwise planar order starting from the
    /// lexicographically least address (which the planar traversal yields).
    std::vector<EdgeAddress> leaves_cyclic() const;

    /// Adjoin the vertex beyond a frontier edge. Rejects non-frontier input.
    FiniteSubtree expand_leaf(const EdgeAddress& leaf) const;

    /// Smallest subtree containing both arguments (union of edge sets).
    static FiniteSubtree common_refinement(const FiniteSubtree& a, const FiniteSubtree& b);

    bool contains_subtree(const FiniteSubtree& other) const;

    FiniteSubtree relabeled(int rot) const;

    bool operator==(const FiniteSubtree&) const = default;

  private:
    std::set<EdgeAddress> edges_;
};

/// All subtrees with at most `max_vertices` vertices (used by exhaustive
/// counting checks; sizes stay small).
std::vector<FiniteSubtree> enumerate_subtrees(std::size_t max_vertices);

} // namespace asymcg
