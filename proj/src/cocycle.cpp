#include "asymcg/cocycle.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "asymcg/limits.hpp"

namespace asymcg {

namespace {

std::size_t wrist_pos(const std::vector<EdgeAddress>& wrists, const EdgeAddress& k) {
    auto it = std::lower_bound(wrists.begin(), wrists.end(), k);
    if (it == wrists.end() || *it != k)
        throw Error(ErrorKind::Internal, "wrist '" + k.str() + "' not in support");
    return static_cast<std::size_t>(it - wrists.begin());
}

} // namespace

PolarizedOp PolarizedOp::expand_at(const EdgeAddress& domain_leaf) const {
    PolarizedOp r;
    r.pair = pair.expand_at(domain_leaf);
    check_support_limit(r.pair.domain().vertex_count());
    auto old_dom = pair.domain().wrists();
    auto old_ran = pair.range().wrists();
    auto new_dom = r.pair.domain().wrists();
    auto new_ran = r.pair.range().wrists();
    r.mat = GrMat(new_ran.size(), new_dom.size());
    for (std::size_t l = 0; l < old_dom.size(); ++l) {
        std::size_t nl = wrist_pos(new_dom, old_dom[l]);
        for (std::size_t k = 0; k < old_ran.size(); ++k)
            r.mat.at(wrist_pos(new_ran, old_ran[k]), nl) = mat.at(k, l);
    }
    r.mat.at(wrist_pos(new_ran, pair.map_leaf(domain_leaf)),
             wrist_pos(new_dom, domain_leaf)) = GaussianRational(1);
    return r;
}

PolarizedOp PolarizedOp::expand_domain_to(const FiniteSubtree& target) const {
    PolarizedOp cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.pair.domain().leaves_cyclic())
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(leaf);
                grew = true;
                break;
            }
    }
    return cur;
}

PolarizedOp PolarizedOp::expand_range_to(const FiniteSubtree& target) const {
    PolarizedOp cur = *this;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& leaf : cur.pair.range().leaves_cyclic())
            if (target.contains_edge(leaf)) {
                cur = cur.expand_at(cur.pair.unmap_leaf(leaf));
                grew = true;
                break;
            }
    }
    return cur;
}

PolarizedOp phi_of(const FinSymplectic& f) {
    BlockPair bp = to_blocks(f);
    return {f.end_map(), bp.phi};
}

PolarizedOp pol_mul(const PolarizedOp& f, const PolarizedOp& g) {
    FiniteSubtree common = FiniteSubtree::common_refinement(g.pair.range(), f.pair.domain());
    PolarizedOp g2 = g.expand_range_to(common);
    PolarizedOp f2 = f.expand_domain_to(common);
    return {TreePairElement::compose_matched_unreduced(f2.pair, g2.pair), f2.mat * g2.mat};
}

PolarizedOp pol_inverse(const PolarizedOp& f) {
    // Symplectic inputs guarantee an invertible Phi block; a singular one
    // here means a broken invariant upstream.
    return {f.pair.invert(), inverse(f.mat)};
}

GaussianRational det_phi(const FinSymplectic& g) {
    if (!g.end_map().reduce().is_identity())
        throw Error(ErrorKind::Domain,
                    "det(Phi) is defined on the trivial-end-map subgroup only");
    return det(phi_of(g).mat);
}

namespace {

/// Phi(g)Phi(h)Phi(gh)^{-1} as a finite block; identity off its support.
PolarizedOp cocycle_operator(const FinSymplectic& g, const FinSymplectic& h) {
    FinSymplectic gh = compose_ops(g, h);
    PolarizedOp q = pol_mul(pol_mul(phi_of(g), phi_of(h)), pol_inverse(phi_of(gh)));
    if (!q.pair.reduce().is_identity())
        throw Error(ErrorKind::Internal, "cocycle operator has nontrivial end map");
    return q;
}

} // namespace

GaussianRational c1_cocycle(const FinSymplectic& g, const FinSymplectic& h) {
    GaussianRational value = det(cocycle_operator(g, h).mat);
    if (value.is_zero())
        throw Error(ErrorKind::Internal, "C1 vanished; Phi block singular upstream");
    return value;
}

std::complex<double> ell(const FinSymplectic& g) {
    GaussianRational d = det_phi(g);
    std::complex<double> z = d.to_complex();
    double mod = std::sqrt(d.norm_sq().convert_to<double>());
    if (mod == 0.0) throw Error(ErrorKind::Internal, "det(Phi) vanished");
    return z / mod;
}

std::complex<double> cn_cocycle(const FinSymplectic& g, const FinSymplectic& h,
                                const BigRational& n) {
    if (n == 0) throw Error(ErrorKind::BadInput, "Cn needs a nonzero exponent n");
    PolarizedOp q = cocycle_operator(g, h);
    std::size_t m = q.mat.rows();
    if (m == 0) return {1.0, 0.0};
    Eigen::MatrixXcd a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = q.mat.at(i, j).to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::Internal, "eigenvalue computation failed");
    std::complex<double> log_sum = 0.0;
    constexpr double kBranchTol = 1e-12;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<double> lambda = solver.eigenvalues()[i];
        if (std::abs(lambda) < kBranchTol ||
            (lambda.real() < 0.0 && std::abs(lambda.imag()) < kBranchTol))
            throw Error(ErrorKind::BranchAmbiguous,
                        "eigenvalue of 1+K within 1e-12 of the log branch cut");
        log_sum += std::log(lambda);
    }
    double inv_n = (BigRational(1) / n).convert_to<double>();
    return std::exp(log_sum * inv_n);
}

} // namespace asymcg
