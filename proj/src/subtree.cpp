#include "asymcg/subtree.hpp"

#include <algorithm>

namespace asymcg {

FiniteSubtree FiniteSubtree::from_edges(const std::vector<EdgeAddress>& edges) {
    FiniteSubtree t;
    t.edges_.insert(edges.begin(), edges.end());
    for (const auto& e : t.edges_)
        if (!e.is_base() && !t.edges_.count(e.parent()))
            throw Error(ErrorKind::BadInput,
                        "edge set not prefix-closed: '" + e.str() + "' lacks its parent");
    return t;
}

FiniteSubtree FiniteSubtree::closure(const std::vector<EdgeAddress>& edges) {
    FiniteSubtree t;
    for (EdgeAddress e : edges) {
        while (true) {
            t.edges_.insert(e);
            if (e.is_base()) break;
            e = e.parent();
        }
    }
    return t;
}

std::vector<EdgeAddress> FiniteSubtree::leaves_cyclic() const {
    std::vector<EdgeAddress> out;
    out.reserve(frontier_count());
    // In-order walk; descends only into internal edges, so it terminates and
    // emits exactly the frontier in planar counterclockwise order.
    auto walk = [&](auto&& self, const EdgeAddress& e) -> void {
        if (!contains_edge(e)) {
            out.push_back(e);
            return;
        }
        self(self, e.left());
        self(self, e.right());
    };
    for (char d : {'0', '1', '2'}) walk(walk, EdgeAddress::parse(std::string(1, d)));
    return out;
}

FiniteSubtree FiniteSubtree::expand_leaf(const EdgeAddress& leaf) const {
    if (!is_frontier(leaf))
        throw Error(ErrorKind::Domain, "edge '" + leaf.str() + "' is not a frontier edge");
    FiniteSubtree t = *this;
    t.edges_.insert(leaf);
    return t;
}

FiniteSubtree FiniteSubtree::common_refinement(const FiniteSubtree& a, const FiniteSubtree& b) {
    FiniteSubtree t = a;
    t.edges_.insert(b.edges_.begin(), b.edges_.end());
    return t;
}

bool FiniteSubtree::contains_subtree(const FiniteSubtree& other) const {
    return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

FiniteSubtree FiniteSubtree::relabeled(int rot) const {
    FiniteSubtree t;
    for (const auto& e : edges_) t.edges_.insert(e.relabeled(rot));
    return t;
}

std::vector<FiniteSubtree> enumerate_subtrees(std::size_t max_vertices) {
    std::vector<FiniteSubtree> all{FiniteSubtree::base()};
    std::set<std::set<EdgeAddress>> seen{{}};
    std::size_t frontier_begin = 0;
    while (frontier_begin < all.size()) {
        std::size_t frontier_end = all.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            if (all[i].vertex_count() >= max_vertices) continue;
            for (const auto& leaf : all[i].leaves_cyclic()) {
                FiniteSubtree next = all[i].expand_leaf(leaf);
                if (seen.insert(next.edge_set()).second) all.push_back(next);
            }
        }
        frontier_begin = frontier_end;
    }
    return all;
}

} // namespace asymcg
