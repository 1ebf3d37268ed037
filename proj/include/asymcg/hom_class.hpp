#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asymcg/edge_address.hpp"

namespace asymcg {

using BigInt = boost::multiprecision::cpp_int;

/// One symbol of the symplectic basis of H1(S_inf)_ns: the meridian a_k or
/// the longitude b_k of the wrist at edge k.
struct BasisSym {
    EdgeAddress wrist;
    bool is_b = false;

    auto operator<=>(const BasisSym&) const = default;

    std::string str() const { return std::string(is_b ? "b[" : "a[") + wrist.str() + "]"; }
};

/// Finitely supported integer vector over {a_k, b_k}. Value type with exact
/// (big-integer) coefficients; zero coefficients are never stored.
class HomClass {
  public:
    HomClass() = default;

    static HomClass a(const EdgeAddress& k) { return unit({k, false}); }
    static HomClass b(const EdgeAddress& k) { return unit({k, true}); }
    static HomClass unit(const BasisSym& s);

    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(const BasisSym& s) const;
    const std::map<BasisSym, BigInt>& coeffs() const { return coeffs_; }

    /// Edges carrying a nonzero a- or b-coefficient, sorted.
    std::vector<EdgeAddress> support_edges() const;

    HomClass& add_scaled(const HomClass& other, const BigInt& factor);

    HomClass operator+(const HomClass& o) const;
    HomClass operator-(const HomClass& o) const;
    HomClass operator-() const;
    HomClass operator*(const BigInt& k) const;

    bool operator==(const HomClass&) const = default;

    std::string str() const;

  private:
    std::map<BasisSym, BigInt> coeffs_;
};

/// Intersection form: bilinear, alternating, omega(a_k, b_l) = delta_kl.
BigInt omega(const HomClass& x, const HomClass& y);

/// Complex structure: J b_k = a_k, J a_k = -b_k; J^2 = -1 and
/// omega(v, w) = <v, J w>.
HomClass j_apply(const HomClass& x);

} // namespace asymcg
