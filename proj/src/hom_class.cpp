#include "asymcg/hom_class.hpp"

#include <sstream>

namespace asymcg {

HomClass HomClass::unit(const BasisSym& s) {
    HomClass x;
    x.coeffs_.emplace(s, 1);
    return x;
}

BigInt HomClass::coeff(const BasisSym& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::vector<EdgeAddress> HomClass::support_edges() const {
    std::vector<EdgeAddress> out;
    for (const auto& [s, c] : coeffs_)
        if (out.empty() || out.back() != s.wrist) out.push_back(s.wrist);
    return out;
}

HomClass& HomClass::add_scaled(const HomClass& other, const BigInt& factor) {
    if (factor == 0) return *this;
    for (const auto& [s, c] : other.coeffs_) {
        BigInt& slot = coeffs_[s];
        slot += c * factor;
        if (slot == 0) coeffs_.erase(s);
    }
    return *this;
}

HomClass HomClass::operator+(const HomClass& o) const {
    HomClass r = *this;
    return r.add_scaled(o, 1);
}

HomClass HomClass::operator-(const HomClass& o) const {
    HomClass r = *this;
    return r.add_scaled(o, -1);
}

HomClass HomClass::operator-() const { return HomClass() - *this; }

HomClass HomClass::operator*(const BigInt& k) const {
    HomClass r;
    return r.add_scaled(*this, k);
}

std::string HomClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt m = abs(c);
        if (m != 1) os << m.str() << "*";
        os << s.str();
        first = false;
    }
    return os.str();
}

BigInt omega(const HomClass& x, const HomClass& y) {
    // omega(a_k, b_k) = 1; all other basis pairings vanish.
    BigInt total = 0;
    for (const auto& [s, c] : x.coeffs()) {
        BasisSym partner{s.wrist, !s.is_b};
        BigInt d = y.coeff(partner);
        if (d == 0) continue;
        BigInt term = c * d;
        total += s.is_b ? -term : term;
    }
    return total;
}

HomClass j_apply(const HomClass& x) {
    HomClass r;
    for (const auto& [s, c] : x.coeffs()) {
        if (s.is_b) r.add_scaled(HomClass::a(s.wrist), c);
        else r.add_scaled(HomClass::b(s.wrist), -c);
    }
    return r;
}

} // namespace asymcg
