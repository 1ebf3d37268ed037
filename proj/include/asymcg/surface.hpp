#pragma once

#include <string>
#include <variant>

#include "asymcg/hom_class.hpp"
#include "asymcg/subtree.hpp"

namespace asymcg {

/// Admissible subsurface determined by a finite subtree: one vertex pants per
/// vertex, one edge pants plus wrist per internal edge. Always n = g + 3.
struct SubtreeSurface {
    FiniteSubtree subtree;
    std::size_t genus = 0;
    std::size_t boundary_count = 3;
};

SubtreeSurface admissible_from_subtree(const FiniteSubtree& t);

/// Specification of a generating loop. Textual syntax:
///   a[k]  b[k]  wc[j,k]  vc[k;v]  pl[c]
/// with j,k,c edge addresses and v a vertex address ("." for v0).
struct LoopMeridian { EdgeAddress k; bool operator==(const LoopMeridian&) const = default; };
struct LoopLongitude { EdgeAddress k; bool operator==(const LoopLongitude&) const = default; };
struct LoopWristConn { EdgeAddress j, k; bool operator==(const LoopWristConn&) const = default; };
struct LoopVertexConn { EdgeAddress k; VertexAddress v; bool operator==(const LoopVertexConn&) const = default; };
struct LoopPants { EdgeAddress c; bool operator==(const LoopPants&) const = default; };

using LoopSpec =
    std::variant<LoopMeridian, LoopLongitude, LoopWristConn, LoopVertexConn, LoopPants>;

LoopSpec parse_loop_spec(std::string_view text, std::size_t offset_base = 0);
std::string loop_spec_str(const LoopSpec& s);

/// Image in H1(S_inf)_ns. Meridians and longitudes hit their own basis
/// vector; connecting loops cross one meridian per involved wrist, with the
/// fixed sign table (+1, -1) for wrist-connecting and +1 for vertex-connecting
/// loops; every loop of the pants decomposition is separating and maps to 0.
///
/// Geometric fine print not carried by the data: the arcs of the connecting
/// loops follow geodesic paths in the tree, which pins their isotopy class
/// but not their homology class; and the separating summand H1(S_inf)_s is
/// not modeled at all, so separating loops simply map to the zero vector.
HomClass loop_class(const LoopSpec& s);

} // namespace asymcg
