#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymcg/subtree.hpp"

namespace asymcg {

/// Planar tree-pair diagram: two finite subtrees and a bijection between
/// their frontier edges. Equivalence classes of these are Thompson's group V;
/// the circular ones form T.
///
/// The class doubles as the rigid end-permutation carrier of a finitary
/// symplectic operator, where expanded (unreduced) representatives matter, so
/// instances are not auto-reduced: group-level operations (compose, invert,
/// ...) return reduced representatives, and equality of group elements is
/// structural equality of reduced forms.
class TreePairElement {
  public:
    /// Identity pair on a subtree (default: on {v0}, the reduced identity).
    explicit TreePairElement(const FiniteSubtree& t = FiniteSubtree::base());

    TreePairElement(FiniteSubtree domain, FiniteSubtree range,
                    std::map<EdgeAddress, EdgeAddress> leaf_map);

    static TreePairElement identity() { return TreePairElement(); }

    /// V-images of the named mapping class generators, as reduced pairs.
    static TreePairElement alpha_v();
    static TreePairElement beta_v();
    static TreePairElement pi_v();

    const FiniteSubtree& domain() const { return domain_; }
    const FiniteSubtree& range() const { return range_; }
    const std::map<EdgeAddress, EdgeAddress>& leaf_map() const { return map_; }

    EdgeAddress map_leaf(const EdgeAddress& domain_leaf) const;
    EdgeAddress unmap_leaf(const EdgeAddress& range_leaf) const;

    /// Permutation view: entry i is the index in leaves_cyclic(range) of the
    /// image of the i-th domain leaf.
    std::vector<std::size_t> permutation() const;

    /// Unique reduced representative (all collapsible carets removed).
    TreePairElement reduce() const;

    bool is_reduced() const;

    /// True iff the reduced form is the identity pair on {v0}.
    bool is_identity() const;

    /// g*h = g∘h (h applied first). Returns the reduced representative.
    static TreePairElement compose(const TreePairElement& g, const TreePairElement& h);

    TreePairElement invert() const;

    /// Order by iterated composition; nullopt when it exceeds `bound`.
    std::optional<unsigned> order(unsigned bound) const;

    /// True iff the leaf bijection is a rotation of the cyclic leaf orders.
    bool is_circular() const;

    /// Rigid action on edges at or beyond domain leaves: e = leaf·w maps to
    /// map_leaf(leaf)·w. Rejects edges internal to the domain tree.
    EdgeAddress edge_action(const EdgeAddress& e) const;

    /// Single expansion: caret added below `domain_leaf` and below its image.
    TreePairElement expand_at(const EdgeAddress& domain_leaf) const;

    /// Expand until the domain tree equals `target` (requires target ⊇ domain).
    TreePairElement expand_domain_to(const FiniteSubtree& target) const;
    /// Expand until the range tree equals `target` (requires target ⊇ range).
    TreePairElement expand_range_to(const FiniteSubtree& target) const;

    /// Compose without reducing; requires h.range() == g.domain().
    static TreePairElement compose_matched_unreduced(const TreePairElement& g,
                                                     const TreePairElement& h);

    /// Conjugate every address by the base-direction rotation.
    TreePairElement relabeled(int rot) const;

    /// `(domain-leaves | range-leaves | permutation)`, canonical leaf order.
    std::string serialize() const;
    static TreePairElement parse(std::string_view text);

    bool operator==(const TreePairElement&) const = default;

  private:
    FiniteSubtree domain_;
    FiniteSubtree range_;
    std::map<EdgeAddress, EdgeAddress> map_;
};

} // namespace asymcg
