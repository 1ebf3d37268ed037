#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asymcg/cocycle.hpp"
#include "asymcg/dot_io.hpp"
#include "asymcg/json_io.hpp"
#include "asymcg/limits.hpp"
#include "asymcg/verify.hpp"
#include "asymcg/word.hpp"

namespace py = pybind11;
using namespace asymcg;

namespace {

FinSymplectic shadow(const std::string& word) { return word_shadow(parse_word(word)); }

} // namespace

PYBIND11_MODULE(_asymcg, m) {
    m.doc() = "Finite-support engine for the asymptotic infinite-genus mapping class "
              "group: Thompson-group arithmetic, symplectic shadows, determinant "
              "cocycles. Words compose right-to-left (rightmost factor acts first).";

    py::register_exception<Error>(m, "AsymcgError");

    m.def("parse_word", [](const std::string& text) { return print_word(parse_word(text)); },
          py::arg("text"), "Validate a word; returns its canonical printed form.");

    m.def("project_v",
          [](const std::string& word) { return v_image_of_word(parse_word(word)).serialize(); },
          py::arg("word"), "Reduced tree pair of the V-image, serialized.");

    m.def("in_kernel",
          [](const std::string& word) { return v_image_of_word(parse_word(word)).is_identity(); },
          py::arg("word"), "True iff the word lies in the PM shadow (trivial V-image).");

    m.def("v_order",
          [](const std::string& word, unsigned bound) {
              return v_image_of_word(parse_word(word)).order(bound);
          },
          py::arg("word"), py::arg("bound") = 64,
          "Order of the V-image, or None when it exceeds the bound.");

    m.def("is_circular",
          [](const std::string& word) { return v_image_of_word(parse_word(word)).is_circular(); },
          py::arg("word"));

    m.def("matrix_json", [](const std::string& word) { return fin_symplectic_json(shadow(word)).dump(); },
          py::arg("word"), "Finitary symplectic operator as a JSON string.");

    m.def("blocks_json",
          [](const std::string& word) {
              BlockPair bp = to_blocks(shadow(word));
              Json j = block_pair_json(bp);
              j["relations_ok"] = check_relations(bp);
              j["hs_norm_sq"] = hs_norm_sq(bp).str();
              j["psi_rank"] = psi_rank(bp);
              return j.dump();
          },
          py::arg("word"), "(Phi, Psi) data of the word's shadow as a JSON string.");

    m.def("is_shadow_identity",
          [](const std::string& word) { return is_identity_op(shadow(word)); }, py::arg("word"));

    m.def("is_shadow_symplectic",
          [](const std::string& word) { return is_symplectic(shadow(word)); }, py::arg("word"));

    m.def("c1",
          [](const std::string& g, const std::string& h) {
              return gaussian_rational_json(c1_cocycle(shadow(g), shadow(h))).dump();
          },
          py::arg("g"), py::arg("h"),
          "Exact C1(g,h) as a JSON string {re_num, re_den, im_num, im_den}.");

    m.def("c1_complex",
          [](const std::string& g, const std::string& h) {
              return c1_cocycle(shadow(g), shadow(h)).to_complex();
          },
          py::arg("g"), py::arg("h"), "C1(g,h) rounded to a machine complex.");

    m.def("cn",
          [](const std::string& g, const std::string& h, const std::string& n) {
              return cn_cocycle(shadow(g), shadow(h), BigRational(n));
          },
          py::arg("g"), py::arg("h"), py::arg("n") = "1",
          "Cn(g,h) for a rational exponent n, principal branch.");

    m.def("ell", [](const std::string& g) { return ell(shadow(g)); }, py::arg("g"),
          "det Phi / |det Phi| on the trivial-end-map subgroup.");

    m.def("subtree_dot",
          [](const std::vector<std::string>& edges) {
              std::vector<EdgeAddress> parsed;
              parsed.reserve(edges.size());
              for (const auto& e : edges) parsed.push_back(EdgeAddress::parse(e));
              return subtree_to_dot(FiniteSubtree::closure(parsed));
          },
          py::arg("edges"), "DOT rendering of the subtree spanned by the given edges.");

    m.def("tree_pair_dot",
          [](const std::string& word) { return tree_pair_to_dot(v_image_of_word(parse_word(word))); },
          py::arg("word"));

    m.def("run_suite",
          [](const std::string& name, std::uint64_t seed, unsigned count) {
              SuiteResult r = run_suite(name, seed, count);
              return py::make_tuple(r.passed, r.failed, r.failures);
          },
          py::arg("name"), py::arg("seed") = 0, py::arg("count") = 100,
          "Run a named property suite; returns (passed, failed, failure messages).");

    m.def("suite_names", [] { return suite_names(); });

    m.def("max_support", &max_support_vertices);
    m.def("set_max_support", &set_max_support_vertices, py::arg("vertices"));

    m.attr("__version__") = "0.1.0";
}
