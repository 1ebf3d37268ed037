#include "asymcg/blocks.hpp"

namespace asymcg {

BlockPair to_blocks(const FinSymplectic& f) {
    BlockPair bp;
    bp.dom_wrists = f.dom_wrists();
    bp.ran_wrists = f.ran_wrists();
    bp.end_map = f.end_map();
    std::size_t m = bp.dom_wrists.size();
    bp.phi = GrMat(m, m);
    bp.psi = GrMat(m, m);
    const IntMat& b = f.block();
    const BigRational half(1, 2);
    // Column l of the real block holds T(a_l) and T(b_l); in e/f coordinates
    //   T(e_l) = Σ_k Phi_kl e_k + conj(Psi)_kl f_k,
    //   T(f_l) = Σ_k Psi_kl e_k + conj(Phi)_kl f_k,
    // with Phi_kl = ((ua+vb) + i(ub-va))/2 and Psi_kl = ((ua-vb) + i(ub+va))/2
    // where (ua,ub) and (va,vb) are the a/b components of T(a_l), T(b_l).
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = 0; k < m; ++k) {
            BigRational ua(b.at(2 * k, 2 * l));
            BigRational ub(b.at(2 * k + 1, 2 * l));
            BigRational va(b.at(2 * k, 2 * l + 1));
            BigRational vb(b.at(2 * k + 1, 2 * l + 1));
            bp.phi.at(k, l) = GaussianRational((ua + vb) * half, (ub - va) * half);
            bp.psi.at(k, l) = GaussianRational((ua - vb) * half, (ub + va) * half);
        }
    return bp;
}

bool check_relations(const BlockPair& b) {
    std::size_t m = b.dom_wrists.size();
    GrMat lhs1 = adjoint(b.phi) * b.phi - b.psi.transposed() * conj(b.psi);
    if (!(lhs1 == GrMat::identity(m))) return false;
    return adjoint(b.phi) * b.psi == b.psi.transposed() * conj(b.phi);
}

BigRational hs_norm_sq(const BlockPair& b) {
    BigRational total = 0;
    for (std::size_t i = 0; i < b.psi.rows(); ++i)
        for (std::size_t j = 0; j < b.psi.cols(); ++j) total += b.psi.at(i, j).norm_sq();
    return total;
}

std::size_t psi_rank(const BlockPair& b) { return rank(b.psi); }

EfVector EfVector::unit(const Key& k) {
    EfVector v;
    v.c_.emplace(k, GaussianRational(1));
    return v;
}

EfVector& EfVector::add_scaled(const EfVector& o, const GaussianRational& c) {
    if (c.is_zero()) return *this;
    for (const auto& [k, x] : o.c_) {
        GaussianRational& slot = c_[k];
        slot += x * c;
        if (slot.is_zero()) c_.erase(k);
    }
    return *this;
}

EfVector EfVector::operator+(const EfVector& o) const {
    EfVector r = *this;
    return r.add_scaled(o, GaussianRational(1));
}

EfVector EfVector::conjugated() const {
    EfVector r;
    for (const auto& [k, x] : c_) r.c_.emplace(Key{k.wrist, !k.is_f}, x.conj());
    return r;
}

GaussianRational EfVector::coeff(const Key& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? GaussianRational(0) : it->second;
}

GaussianRational omega_c(const EfVector& x, const EfVector& y) {
    GaussianRational total(0);
    const GaussianRational i = GaussianRational::i_unit();
    for (const auto& [k, c] : x.coeffs()) {
        GaussianRational d = y.coeff({k.wrist, !k.is_f});
        if (d.is_zero()) continue;
        // omega_C(e_k, f_k) = i = -omega_C(f_k, e_k)
        total += k.is_f ? -(i * c * d) : i * c * d;
    }
    return total;
}

GaussianRational b_form(const EfVector& x, const EfVector& y) {
    return omega_c(x, y.conjugated()) / GaussianRational::i_unit();
}

} // namespace asymcg
