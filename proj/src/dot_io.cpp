#include "asymcg/dot_io.hpp"

#include <sstream>

namespace asymcg {

namespace {

std::string vertex_id(const std::string& prefix, const EdgeAddress& below) {
    return prefix + "_" + below.str();
}

void emit_tree(std::ostream& os, const FiniteSubtree& t, const std::string& prefix) {
    os << "  " << prefix << "_v0 [label=\"v0\" shape=circle];\n";
    for (const auto& e : t.edge_set()) {
        std::string from = e.is_base() ? prefix + "_v0" : vertex_id(prefix, e.parent());
        os << "  " << vertex_id(prefix, e) << " [label=\"\" shape=point];\n";
        os << "  " << from << " -- " << vertex_id(prefix, e) << " [label=\"" << e.str()
           << "\"];\n";
    }
    for (const auto& leaf : t.leaves_cyclic()) {
        std::string from = leaf.is_base() ? prefix + "_v0" : vertex_id(prefix, leaf.parent());
        os << "  " << prefix << "_leaf_" << leaf.str()
           << " [label=\"" << leaf.str() << "\" shape=none];\n";
        os << "  " << from << " -- " << prefix << "_leaf_" << leaf.str()
           << " [style=dashed];\n";
    }
}

} // namespace

std::string subtree_to_dot(const FiniteSubtree& t, const std::string& graph_name) {
    std::ostringstream os;
    os << "graph " << graph_name << " {\n";
    emit_tree(os, t, "n");
    os << "}\n";
    return os.str();
}

std::string tree_pair_to_dot(const TreePairElement& e) {
    std::ostringstream os;
    os << "graph tree_pair {\n";
    os << " subgraph cluster_domain {\n  label=\"domain\";\n";
    emit_tree(os, e.domain(), "d");
    os << " }\n subgraph cluster_range {\n  label=\"range\";\n";
    emit_tree(os, e.range(), "r");
    os << " }\n";
    for (const auto& [dl, rl] : e.leaf_map())
        os << "  d_leaf_" << dl.str() << " -- r_leaf_" << rl.str()
           << " [style=dotted constraint=false color=gray];\n";
    os << "}\n";
    return os.str();
}

} // namespace asymcg
