#include "asymcg/tree_pair.hpp"

#include <algorithm>
#include <sstream>

namespace asymcg {

TreePairElement::TreePairElement(const FiniteSubtree& t) : domain_(t), range_(t) {
    for (const auto& leaf : t.leaves_cyclic()) map_.emplace(leaf, leaf);
}

TreePairElement::TreePairElement(FiniteSubtree domain, FiniteSubtree range,
                                 std::map<EdgeAddress, EdgeAddress> leaf_map)
    : domain_(std::move(domain)), range_(std::move(range)), map_(std::move(leaf_map)) {
    if (domain_.vertex_count() != range_.vertex_count())
        throw Error(ErrorKind::BadInput, "tree pair: domain and range sizes differ");
    if (map_.size() != domain_.frontier_count())
        throw Error(ErrorKind::BadInput, "tree pair: leaf map size mismatch");
    std::set<EdgeAddress> hit;
    for (const auto& [d, r] : map_) {
        if (!domain_.is_frontier(d))
            throw Error(ErrorKind::BadInput, "tree pair: '" + d.str() + "' is not a domain leaf");
        if (!range_.is_frontier(r))
            throw Error(ErrorKind::BadInput, "tree pair: '" + r.str() + "' is not a range leaf");
        if (!hit.insert(r).second)
            throw Error(ErrorKind::BadInput, "tree pair: leaf map is not injective");
    }
}

TreePairElement TreePairElement::alpha_v() {
    FiniteSubtree a = FiniteSubtree::base().expand_leaf(EdgeAddress::parse("0"));
    auto leaves = a.leaves_cyclic(); // (0L, 0R, 1, 2)
    std::map<EdgeAddress, EdgeAddress> m;
    for (std::size_t i = 0; i < leaves.size(); ++i) m.emplace(leaves[i], leaves[(i + 1) % 4]);
    return {a, a, std::move(m)};
}

TreePairElement TreePairElement::beta_v() {
    FiniteSubtree b = FiniteSubtree::base();
    auto leaves = b.leaves_cyclic(); // (0, 1, 2)
    std::map<EdgeAddress, EdgeAddress> m;
    for (std::size_t i = 0; i < 3; ++i) m.emplace(leaves[i], leaves[(i + 1) % 3]);
    return {b, b, std::move(m)};
}

TreePairElement TreePairElement::pi_v() {
    FiniteSubtree b = FiniteSubtree::base();
    std::map<EdgeAddress, EdgeAddress> m;
    m.emplace(EdgeAddress::parse("0"), EdgeAddress::parse("1"));
    m.emplace(EdgeAddress::parse("1"), EdgeAddress::parse("0"));
    m.emplace(EdgeAddress::parse("2"), EdgeAddress::parse("2"));
    return {b, b, std::move(m)};
}

EdgeAddress TreePairElement::map_leaf(const EdgeAddress& domain_leaf) const {
    auto it = map_.find(domain_leaf);
    if (it == map_.end())
        throw Error(ErrorKind::Domain, "'" + domain_leaf.str() + "' is not a domain leaf");
    return it->second;
}

EdgeAddress TreePairElement::unmap_leaf(const EdgeAddress& range_leaf) const {
    for (const auto& [d, r] : map_)
        if (r == range_leaf) return d;
    throw Error(ErrorKind::Domain, "'" + range_leaf.str() + "' is not a range leaf");
}

std::vector<std::size_t> TreePairElement::permutation() const {
    auto range_leaves = range_.leaves_cyclic();
    std::map<EdgeAddress, std::size_t> pos;
    for (std::size_t i = 0; i < range_leaves.size(); ++i) pos.emplace(range_leaves[i], i);
    std::vector<std::size_t> perm;
    perm.reserve(map_.size());
    for (const auto& leaf : domain_.leaves_cyclic()) perm.push_back(pos.at(map_leaf(leaf)));
    return perm;
}

namespace {

// A caret (wL, wR) -> (w'L, w'R) collapses to w -> w'. Returns the pair
// (w, w') of a collapsible caret, if any.
std::optional<std::pair<EdgeAddress, EdgeAddress>>
find_collapsible(const FiniteSubtree& domain, const FiniteSubtree& range,
                 const std::map<EdgeAddress, EdgeAddress>& m) {
    for (const auto& w : domain.edge_set()) {
        auto l = m.find(w.left());
        auto r = m.find(w.right());
        if (l == m.end() || r == m.end()) continue; // children not both leaves
        const EdgeAddress& il = l->second;
        const EdgeAddress& ir = r->second;
        if (il.depth() < 2 || ir.depth() < 2) continue; // base edges have no caret
        if (il.parent() != ir.parent()) continue;
        if (il != il.parent().left() || ir != ir.parent().right()) continue;
        if (!range.contains_edge(il.parent())) continue;
        return std::make_pair(w, il.parent());
    }
    return std::nullopt;
}

} // namespace

TreePairElement TreePairElement::reduce() const {
    FiniteSubtree domain = domain_;
    FiniteSubtree range = range_;
    std::map<EdgeAddress, EdgeAddress> m = map_;
    while (auto caret = find_collapsible(domain, range, m)) {
        const auto& [w, w_img] = *caret;
        m.erase(w.left());
        m.erase(w.right());
        m.emplace(w, w_img);
        std::vector<EdgeAddress> de, re;
        for (const auto& e : domain.edge_set())
            if (e != w) de.push_back(e);
        for (const auto& e : range.edge_set())
            if (e != w_img) re.push_back(e);
        domain = FiniteSubtree::from_edges(de);
        range = FiniteSubtree::from_edges(re);
    }
    return {std::move(domain), std::move(range), std::move(m)};
}

bool TreePairElement::is_reduced() const {
    return !find_collapsible(domain_, range_, map_).has_value();
}

bool TreePairElement::is_identity() const {
    TreePairElement r = reduce();
    if (r.domain_.vertex_count() != 1) return false;
    for (const auto& [d, im] : r.map_)
        if (d != im) return false;
    return true;
}

TreePairElement TreePairElement::expand_at(const EdgeAddress& domain_leaf) const {
    EdgeAddress image = map_leaf(domain_leaf);
    std::map<EdgeAddress, EdgeAddress> m = map_;
    m.erase(domain_leaf);
    m.emplace(domain_leaf.left(), image.left());
    m.emplace(domain_leaf.right(), image.right());
    return {domain_.expand_leaf(domain_leaf), range_.expand_leaf(image), std::move(m)};
}

TreePairElement TreePairElement::expand_domain_to(const FiniteSubtree& target) const {
    if (!target.contains_subtree(domain_))
        throw Error(ErrorKind::Internal, "expand_domain_to: target does not contain domain");
    TreePairElement cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.domain_.leaves_cyclic()) {
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(leaf);
                grew = true;
                break;
            }
        }
    }
    return cur;
}

TreePairElement TreePairElement::expand_range_to(const FiniteSubtree& target) const {
    if (!target.contains_subtree(range_))
        throw Error(ErrorKind::Internal, "expand_range_to: target does not contain range");
    TreePairElement cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.range_.leaves_cyclic()) {
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(cur.unmap_leaf(leaf));
                grew = true;
                break;
            }
        }
    }
    return cur;
}

TreePairElement TreePairElement::compose_matched_unreduced(const TreePairElement& g,
                                                           const TreePairElement& h) {
    if (!(h.range_ == g.domain_))
        throw Error(ErrorKind::Internal, "compose_matched_unreduced: trees not matched");
    std::map<EdgeAddress, EdgeAddress> m;
    for (const auto& [d, mid] : h.map_) m.emplace(d, g.map_leaf(mid));
    return {h.domain_, g.range_, std::move(m)};
}

TreePairElement TreePairElement::compose(const TreePairElement& g, const TreePairElement& h) {
    FiniteSubtree common = FiniteSubtree::common_refinement(h.range_, g.domain_);
    TreePairElement h2 = h.expand_range_to(common);
    TreePairElement g2 = g.expand_domain_to(common);
    return compose_matched_unreduced(g2, h2).reduce();
}

TreePairElement TreePairElement::invert() const {
    std::map<EdgeAddress, EdgeAddress> m;
    for (const auto& [d, r] : map_) m.emplace(r, d);
    return {range_, domain_, std::move(m)};
}

std::optional<unsigned> TreePairElement::order(unsigned bound) const {
    TreePairElement acc = reduce();
    for (unsigned k = 1; k <= bound; ++k) {
        if (acc.is_identity()) return k;
        acc = compose(acc, *this);
    }
    return std::nullopt;
}

bool TreePairElement::is_circular() const {
    auto perm = permutation();
    std::size_t n = perm.size();
    std::size_t shift = perm[0];
    for (std::size_t i = 0; i < n; ++i)
        if (perm[i] != (i + shift) % n) return false;
    return true;
}

EdgeAddress TreePairElement::edge_action(const EdgeAddress& e) const {
    if (domain_.contains_edge(e))
        throw Error(ErrorKind::Domain,
                    "edge '" + e.str() + "' lies inside the domain tree; no rigid image");
    // Shortest prefix outside the domain edge set is the carrying leaf.
    const std::string& s = e.str();
    for (std::size_t len = 1; len <= s.size(); ++len) {
        EdgeAddress p = EdgeAddress::parse(std::string_view(s).substr(0, len));
        if (!domain_.contains_edge(p))
            return map_leaf(p).with_suffix(std::string_view(s).substr(len));
    }
    throw Error(ErrorKind::Internal, "edge_action: unreachable");
}

TreePairElement TreePairElement::relabeled(int rot) const {
    std::map<EdgeAddress, EdgeAddress> m;
    for (const auto& [d, r] : map_) m.emplace(d.relabeled(rot), r.relabeled(rot));
    return {domain_.relabeled(rot), range_.relabeled(rot), std::move(m)};
}

std::string TreePairElement::serialize() const {
    std::ostringstream os;
    os << '(';
    auto emit_leaves = [&](const FiniteSubtree& t) {
        auto ls = t.leaves_cyclic();
        for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? " " : "") << ls[i].str();
    };
    emit_leaves(domain_);
    os << " | ";
    emit_leaves(range_);
    os << " | ";
    auto perm = permutation();
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i];
    os << ')';
    return os.str();
}

TreePairElement TreePairElement::parse(std::string_view text) {
    std::string s(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error(ErrorKind::BadInput, "tree pair: expected '(...)'", 0);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '|') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3)
        throw Error(ErrorKind::BadInput, "tree pair: expected three '|'-separated sections", 0);
    auto tokens = [](const std::string& sec) {
        std::istringstream is(sec);
        std::vector<std::string> toks;
        std::string tok;
        while (is >> tok) toks.push_back(tok);
        return toks;
    };
    auto dom_toks = tokens(parts[0]);
    auto ran_toks = tokens(parts[1]);
    auto perm_toks = tokens(parts[2]);
    std::vector<EdgeAddress> dom_leaves, ran_leaves;
    for (const auto& t : dom_toks) dom_leaves.push_back(EdgeAddress::parse(t));
    for (const auto& t : ran_toks) ran_leaves.push_back(EdgeAddress::parse(t));
    if (dom_leaves.size() != ran_leaves.size() || perm_toks.size() != dom_leaves.size())
        throw Error(ErrorKind::BadInput, "tree pair: section lengths disagree", 0);

    // Leaf lists determine the trees: internal edges are exactly the proper
    // prefixes of the listed leaves.
    auto tree_of_leaves = [](const std::vector<EdgeAddress>& leaves) {
        std::vector<EdgeAddress> internal;
        for (const auto& l : leaves) {
            EdgeAddress e = l;
            while (!e.is_base()) {
                e = e.parent();
                internal.push_back(e);
            }
        }
        FiniteSubtree t = FiniteSubtree::closure(internal);
        auto expect = t.leaves_cyclic();
        std::vector<EdgeAddress> sorted = leaves;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expect)
            throw Error(ErrorKind::BadInput, "tree pair: leaf list is not a full frontier", 0);
        return t;
    };
    FiniteSubtree dom = tree_of_leaves(dom_leaves);
    FiniteSubtree ran = tree_of_leaves(ran_leaves);
    auto dom_cyc = dom.leaves_cyclic();
    auto ran_cyc = ran.leaves_cyclic();
    if (dom_cyc != dom_leaves || ran_cyc != ran_leaves)
        throw Error(ErrorKind::BadInput, "tree pair: leaves not in canonical cyclic order", 0);
    std::map<EdgeAddress, EdgeAddress> m;
    for (std::size_t i = 0; i < perm_toks.size(); ++i) {
        std::size_t idx;
        try {
            idx = std::stoul(perm_toks[i]);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadInput, "tree pair: bad permutation entry '" + perm_toks[i] + "'", 0);
        }
        if (idx >= ran_cyc.size())
            throw Error(ErrorKind::BadInput, "tree pair: permutation index out of range", 0);
        m.emplace(dom_cyc[i], ran_cyc[idx]);
    }
    return {std::move(dom), std::move(ran), std::move(m)};
}

} // namespace asymcg
