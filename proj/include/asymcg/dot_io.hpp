#pragma once

#include <string>

#include "asymcg/subtree.hpp"
#include "asymcg/tree_pair.hpp"

namespace asymcg {

/// Graphviz view of a subtree: one node per vertex, internal edges solid,
/// frontier edges dashed.
std::string subtree_to_dot(const FiniteSubtree& t, const std::string& graph_name = "subtree");

/// Domain and range trees side by side; leaves annotated with the bijection.
std::string tree_pair_to_dot(const TreePairElement& e);

} // namespace asymcg
