#pragma once

#include <string_view>

#include "asymcg/hom_class.hpp"
#include "asymcg/matrix.hpp"
#include "asymcg/tree_pair.hpp"

namespace asymcg {

/// Finitary symplectic operator on H1(S_inf)_ns: an exact integer block on
/// the wrists of a support subtree plus a rigid end permutation of all other
/// wrists (a_k -> a_sigma(k), b_k -> b_sigma(k)).
///
/// The end map is carried as an *unreduced* tree pair whose domain tree is the
/// support; its range tree indexes the block rows. That makes every element of
/// the generated group representable (the image subsurface of a support need
/// not be the support itself) and keeps composition total: expansion adds
/// rigid permutation columns, so no basis index is ever claimed twice.
/// Immutable value; all operations return new operators.
class FinSymplectic {
  public:
    /// Identity on the wrists of `t` and rigid identity outside.
    static FinSymplectic identity_op(const FiniteSubtree& t = FiniteSubtree::base());

    /// Validated constructor: block must be 2w x 2w for the wrist count w of
    /// end_map's trees, and exactly symplectic.
    static FinSymplectic from_parts(TreePairElement end_map, IntMat block);

    const FiniteSubtree& support() const { return end_map_.domain(); }
    const FiniteSubtree& range_support() const { return end_map_.range(); }
    const TreePairElement& end_map() const { return end_map_; }
    const IntMat& block() const { return block_; }

    /// Reduced V-image (the projection M -> V of the exact sequence).
    TreePairElement v_image() const { return end_map_.reduce(); }

    std::vector<EdgeAddress> dom_wrists() const { return support().wrists(); }
    std::vector<EdgeAddress> ran_wrists() const { return range_support().wrists(); }

    /// Rigid image of a wrist outside the support.
    EdgeAddress sigma(const EdgeAddress& k) const { return end_map_.edge_action(k); }

    FinSymplectic expand_at(const EdgeAddress& domain_leaf) const;
    FinSymplectic expand_domain_to(const FiniteSubtree& target) const;
    FinSymplectic expand_range_to(const FiniteSubtree& target) const;

  private:
    FinSymplectic(TreePairElement end_map, IntMat block);

    TreePairElement end_map_;
    IntMat block_; // rows over range wrists, cols over support wrists, (a,b) interleaved
};

/// Picard-Lefschetz transvection x -> x + omega(x, gamma) * gamma, supported
/// on the smallest subtree enclosing gamma's wrists, rigid identity outside.
FinSymplectic dehn_twist(const HomClass& gamma);

/// Shadows of the named generators: alpha, beta, pi, t, t0, t_a1, t_b1,
/// t_wc, t_vc. Twists along separating curves (t, t0) are identity operators.
FinSymplectic generator_shadow(std::string_view name);

/// f*g = f∘g (g applied first). Supports refine to the common subtree and
/// never shrink.
FinSymplectic compose_ops(const FinSymplectic& f, const FinSymplectic& g);

FinSymplectic invert_op(const FinSymplectic& f);

FinSymplectic op_pow(const FinSymplectic& f, long long e);

HomClass apply_op(const FinSymplectic& f, const HomClass& x);

/// Exact check of blockT * J * block = J (plus structural end-map validity).
bool is_symplectic(const FinSymplectic& f);

/// Semantic equality: expand to the common support and compare.
bool op_equal(const FinSymplectic& f, const FinSymplectic& g);

bool is_identity_op(const FinSymplectic& f);

} // namespace asymcg
