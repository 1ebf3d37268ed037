#include "asymcg/fin_symplectic.hpp"

#include <algorithm>

#include "asymcg/limits.hpp"
#include "asymcg/surface.hpp"

namespace asymcg {

namespace {

std::size_t wrist_index(const std::vector<EdgeAddress>& wrists, const EdgeAddress& k) {
    auto it = std::lower_bound(wrists.begin(), wrists.end(), k);
    if (it == wrists.end() || *it != k)
        throw Error(ErrorKind::Internal, "wrist '" + k.str() + "' not in support");
    return static_cast<std::size_t>(it - wrists.begin());
}

// Write a HomClass supported inside `wrists` as interleaved coordinates.
std::vector<BigInt> coords_of(const HomClass& x, const std::vector<EdgeAddress>& wrists) {
    std::vector<BigInt> v(2 * wrists.size());
    for (const auto& [sym, c] : x.coeffs())
        v[2 * wrist_index(wrists, sym.wrist) + (sym.is_b ? 1 : 0)] = c;
    return v;
}

} // namespace

FinSymplectic::FinSymplectic(TreePairElement end_map, IntMat block)
    : end_map_(std::move(end_map)), block_(std::move(block)) {}

FinSymplectic FinSymplectic::identity_op(const FiniteSubtree& t) {
    return {TreePairElement(t), IntMat::identity(2 * t.internal_edge_count())};
}

FinSymplectic FinSymplectic::from_parts(TreePairElement end_map, IntMat block) {
    std::size_t w = end_map.domain().internal_edge_count();
    if (block.rows() != 2 * w || block.cols() != 2 * w)
        throw Error(ErrorKind::BadInput, "operator block has wrong dimensions");
    FinSymplectic f(std::move(end_map), std::move(block));
    if (!is_symplectic(f))
        throw Error(ErrorKind::BadInput, "operator block is not symplectic");
    return f;
}

FinSymplectic FinSymplectic::expand_at(const EdgeAddress& domain_leaf) const {
    TreePairElement pair = end_map_.expand_at(domain_leaf);
    check_support_limit(pair.domain().vertex_count());

    auto old_dom = dom_wrists();
    auto old_ran = ran_wrists();
    auto new_dom = pair.domain().wrists();
    auto new_ran = pair.range().wrists();
    EdgeAddress image = end_map_.map_leaf(domain_leaf);

    IntMat b(2 * new_ran.size(), 2 * new_dom.size());
    // Old block entries land at re-sorted positions; the fresh wrist pair is
    // carried rigidly (a -> a, b -> b).
    for (std::size_t l = 0; l < old_dom.size(); ++l) {
        std::size_t nl = wrist_index(new_dom, old_dom[l]);
        for (std::size_t k = 0; k < old_ran.size(); ++k) {
            std::size_t nk = wrist_index(new_ran, old_ran[k]);
            for (int da = 0; da < 2; ++da)
                for (int db = 0; db < 2; ++db)
                    b.at(2 * nk + da, 2 * nl + db) = block_.at(2 * k + da, 2 * l + db);
        }
    }
    std::size_t dl = wrist_index(new_dom, domain_leaf);
    std::size_t rk = wrist_index(new_ran, image);
    b.at(2 * rk, 2 * dl) = 1;
    b.at(2 * rk + 1, 2 * dl + 1) = 1;
    return {std::move(pair), std::move(b)};
}

FinSymplectic FinSymplectic::expand_domain_to(const FiniteSubtree& target) const {
    FinSymplectic cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.support().leaves_cyclic()) {
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(leaf);
                grew = true;
                break;
            }
        }
    }
    return cur;
}

FinSymplectic FinSymplectic::expand_range_to(const FiniteSubtree& target) const {
    FinSymplectic cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.range_support().leaves_cyclic()) {
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(cur.end_map_.unmap_leaf(leaf));
                grew = true;
                break;
            }
        }
    }
    return cur;
}

FinSymplectic dehn_twist(const HomClass& gamma) {
    FiniteSubtree support = FiniteSubtree::closure(gamma.support_edges());
    auto wrists = support.wrists();
    std::size_t m = wrists.size();
    IntMat b(2 * m, 2 * m);
    for (std::size_t l = 0; l < m; ++l) {
        for (int is_b = 0; is_b < 2; ++is_b) {
            HomClass u = is_b ? HomClass::b(wrists[l]) : HomClass::a(wrists[l]);
            HomClass img = u + gamma * omega(u, gamma);
            auto col = coords_of(img, wrists);
            for (std::size_t r = 0; r < 2 * m; ++r) b.at(r, 2 * l + is_b) = col[r];
        }
    }
    return FinSymplectic::from_parts(TreePairElement(support), std::move(b));
}

FinSymplectic generator_shadow(std::string_view name) {
    const EdgeAddress e0 = EdgeAddress::parse("0");
    const EdgeAddress e1 = EdgeAddress::parse("1");
    if (name == "alpha")
        return FinSymplectic::from_parts(TreePairElement::alpha_v(), IntMat::identity(2));
    if (name == "beta") return FinSymplectic::from_parts(TreePairElement::beta_v(), IntMat(0, 0));
    if (name == "pi") return FinSymplectic::from_parts(TreePairElement::pi_v(), IntMat(0, 0));
    if (name == "t") return FinSymplectic::identity_op(FiniteSubtree::base());
    if (name == "t0") return FinSymplectic::identity_op(FiniteSubtree::closure({e0}));
    if (name == "t_a1") return dehn_twist(loop_class(LoopMeridian{e0}));
    if (name == "t_b1") return dehn_twist(loop_class(LoopLongitude{e0}));
    if (name == "t_wc") return dehn_twist(loop_class(LoopWristConn{e0, e1}));
    if (name == "t_vc") return dehn_twist(loop_class(LoopVertexConn{e0, VertexAddress(e1)}));
    throw Error(ErrorKind::BadInput, "unknown generator '" + std::string(name) + "'");
}

FinSymplectic compose_ops(const FinSymplectic& f, const FinSymplectic& g) {
    FiniteSubtree common =
        FiniteSubtree::common_refinement(g.range_support(), f.support());
    check_support_limit(common.vertex_count());
    FinSymplectic g2 = g.expand_range_to(common);
    FinSymplectic f2 = f.expand_domain_to(common);
    TreePairElement end =
        TreePairElement::compose_matched_unreduced(f2.end_map(), g2.end_map());
    return FinSymplectic::from_parts(std::move(end), f2.block() * g2.block());
}

FinSymplectic invert_op(const FinSymplectic& f) {
    // For symplectic B (w.r.t. matched gram forms), B^{-1} = -J B^T J.
    std::size_t m = f.dom_wrists().size();
    IntMat j = j_gram(m);
    IntMat inv = j * f.block().transposed() * j;
    IntMat neg(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t k = 0; k < inv.cols(); ++k) neg.at(i, k) = -inv.at(i, k);
    return FinSymplectic::from_parts(f.end_map().invert(), std::move(neg));
}

FinSymplectic op_pow(const FinSymplectic& f, long long e) {
    if (e == 0) return FinSymplectic::identity_op();
    FinSymplectic base = e < 0 ? invert_op(f) : f;
    std::size_t n = static_cast<std::size_t>(e < 0 ? -e : e);
    FinSymplectic acc = base;
    for (std::size_t i = 1; i < n; ++i) acc = compose_ops(acc, base);
    return acc;
}

HomClass apply_op(const FinSymplectic& f, const HomClass& x) {
    auto dom = f.dom_wrists();
    auto ran = f.ran_wrists();
    HomClass out;
    for (const auto& [sym, c] : x.coeffs()) {
        if (f.support().contains_edge(sym.wrist)) {
            std::size_t col = 2 * wrist_index(dom, sym.wrist) + (sym.is_b ? 1 : 0);
            for (std::size_t k = 0; k < ran.size(); ++k) {
                const BigInt& ca = f.block().at(2 * k, col);
                const BigInt& cb = f.block().at(2 * k + 1, col);
                if (ca != 0) out.add_scaled(HomClass::a(ran[k]), c * ca);
                if (cb != 0) out.add_scaled(HomClass::b(ran[k]), c * cb);
            }
        } else {
            EdgeAddress img = f.sigma(sym.wrist);
            out.add_scaled(sym.is_b ? HomClass::b(img) : HomClass::a(img), c);
        }
    }
    return out;
}

bool is_symplectic(const FinSymplectic& f) {
    std::size_t m = f.dom_wrists().size();
    if (f.block().rows() != 2 * m || f.block().cols() != 2 * m) return false;
    IntMat j = j_gram(m);
    return f.block().transposed() * j * f.block() == j;
}

bool op_equal(const FinSymplectic& f, const FinSymplectic& g) {
    FiniteSubtree common = FiniteSubtree::common_refinement(f.support(), g.support());
    FinSymplectic f2 = f.expand_domain_to(common);
    FinSymplectic g2 = g.expand_domain_to(common);
    return f2.end_map() == g2.end_map() && f2.block() == g2.block();
}

bool is_identity_op(const FinSymplectic& f) {
    if (!f.end_map().reduce().is_identity()) return false;
    // A pair that reduces to the identity is an expanded identity, so domain
    // and range trees agree and the block is square over one wrist basis.
    return f.block().is_identity();
}

} // namespace asymcg
