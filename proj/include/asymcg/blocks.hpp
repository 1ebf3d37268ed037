#pragma once

#include <map>

#include "asymcg/fin_symplectic.hpp"
#include "asymcg/gaussian_rational.hpp"
#include "asymcg/matrix.hpp"

namespace asymcg {

/// (Phi, Psi) blocks of a finitary symplectic operator in the polarization
/// H = H+ ⊕ H-, over the basis e_k = (a_k - i b_k)/√2, f_k = conj(e_k).
/// Entries are exact: the 1/√2 factors cancel in the change of basis, leaving
/// half-integer Gaussian values for integer blocks. Rows are indexed by the
/// range wrists, columns by the support wrists.
struct BlockPair {
    std::vector<EdgeAddress> dom_wrists;
    std::vector<EdgeAddress> ran_wrists;
    GrMat phi; // H+ -> H+ part
    GrMat psi; // H- -> H+ part (finite rank; Hilbert-Schmidt certificate)
    TreePairElement end_map;
};

BlockPair to_blocks(const FinSymplectic& f);

/// Exact restricted-symplectic criterion:
///   adj(Phi)·Phi - trans(Psi)·conj(Psi) = 1   and
///   adj(Phi)·Psi = trans(Psi)·conj(Phi).
bool check_relations(const BlockPair& b);

/// Squared Hilbert-Schmidt norm of Psi: sum of squared moduli of entries.
BigRational hs_norm_sq(const BlockPair& b);

/// Exact rank of Psi over Q(i).
std::size_t psi_rank(const BlockPair& b);

/// Finitely supported vector of the complexification in e/f coordinates.
class EfVector {
  public:
    struct Key {
        EdgeAddress wrist;
        bool is_f = false;
        auto operator<=>(const Key&) const = default;
    };

    static EfVector e(const EdgeAddress& k) { return unit({k, false}); }
    static EfVector f(const EdgeAddress& k) { return unit({k, true}); }
    static EfVector unit(const Key& k);

    EfVector& add_scaled(const EfVector& o, const GaussianRational& c);
    EfVector operator+(const EfVector& o) const;

    /// Complex conjugation: swaps e_k and f_k and conjugates coefficients.
    EfVector conjugated() const;

    const std::map<Key, GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(const Key& k) const;

  private:
    std::map<Key, GaussianRational> c_;
};

/// Complex-bilinear extension of omega: omega_C(e_k, f_l) = i·δ_kl and
/// omega_C(e,e) = omega_C(f,f) = 0.
GaussianRational omega_c(const EfVector& x, const EfVector& y);

/// Hermitian form B(v,w) = (1/i)·omega_C(v, conj(w)); table
/// B(e_k,e_l) = δ_kl = -B(f_k,f_l), B(e_k,f_l) = 0.
GaussianRational b_form(const EfVector& x, const EfVector& y);

} // namespace asymcg
