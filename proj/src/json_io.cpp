#include "asymcg/json_io.hpp"

namespace asymcg {

namespace {

Json wrist_names(const std::vector<EdgeAddress>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(w.str());
    return arr;
}

Json basis_names(const std::vector<EdgeAddress>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) {
        arr.push_back("a[" + w.str() + "]");
        arr.push_back("b[" + w.str() + "]");
    }
    return arr;
}

Json gr_entry(const GaussianRational& v) {
    return Json{{"re", BigRational(v.re).str()}, {"im", BigRational(v.im).str()}};
}

Json gr_matrix(const GrMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gr_entry(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json fin_symplectic_json(const FinSymplectic& f) {
    Json block_rows = Json::array();
    for (std::size_t i = 0; i < f.block().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.block().cols(); ++j)
            row.push_back(f.block().at(i, j).str());
        block_rows.push_back(std::move(row));
    }
    return Json{{"support", wrist_names(f.support().wrists())},
                {"basis", basis_names(f.dom_wrists())},
                {"range_support", wrist_names(f.range_support().wrists())},
                {"range_basis", basis_names(f.ran_wrists())},
                {"block", std::move(block_rows)},
                {"endMap", f.end_map().serialize()},
                {"vImage", f.v_image().serialize()}};
}

Json block_pair_json(const BlockPair& b) {
    return Json{{"support", wrist_names(b.dom_wrists)},
                {"range_support", wrist_names(b.ran_wrists)},
                {"phi", gr_matrix(b.phi)},
                {"psi", gr_matrix(b.psi)},
                {"endMap", b.end_map.serialize()}};
}

Json gaussian_rational_json(const GaussianRational& v) {
    return Json{{"re_num", numerator(v.re).str()},
                {"re_den", denominator(v.re).str()},
                {"im_num", numerator(v.im).str()},
                {"im_den", denominator(v.im).str()}};
}

Json cocycle_json(const Word& g, const Word& h, const GaussianRational& c1,
                  const std::optional<BigRational>& n,
                  const std::optional<std::complex<double>>& cn) {
    Json j{{"g", print_word(g)}, {"h", print_word(h)}, {"C1", gaussian_rational_json(c1)}};
    if (n) {
        j["n"] = n->str();
        j["Cn"] = Json{{"re", cn->real()}, {"im", cn->imag()}};
    }
    return j;
}

Json error_json(const Error& e) {
    Json detail{{"kind", Error::kind_name(e.kind())}, {"message", e.what()}};
    if (e.offset()) detail["offset"] = *e.offset();
    return Json{{"error", std::move(detail)}};
}

} // namespace asymcg
