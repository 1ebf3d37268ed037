#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "asymcg/cocycle.hpp"
#include "asymcg/dot_io.hpp"
#include "asymcg/json_io.hpp"
#include "asymcg/verify.hpp"
#include "asymcg/word.hpp"

namespace {

using namespace asymcg;

int cmd_project_v(const std::string& word_text, bool dot, bool json) {
    Word w = parse_word(word_text);
    TreePairElement image = v_image_of_word(w);
    if (json) {
        Json out{{"word", print_word(w)}, {"reduced", image.serialize()}};
        if (dot) out["dot"] = tree_pair_to_dot(image);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << image.serialize() << "\n";
        if (dot) std::cout << tree_pair_to_dot(image);
    }
    return 0;
}

int cmd_matrix(const std::string& word_text) {
    Word w = parse_word(word_text);
    FinSymplectic f = word_shadow(w);
    Json out = fin_symplectic_json(f);
    out["word"] = print_word(w);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_blocks(const std::string& word_text) {
    Word w = parse_word(word_text);
    FinSymplectic f = word_shadow(w);
    BlockPair bp = to_blocks(f);
    Json out = block_pair_json(bp);
    out["word"] = print_word(w);
    out["relations_ok"] = check_relations(bp);
    out["hs_norm_sq"] = hs_norm_sq(bp).str();
    out["psi_rank"] = psi_rank(bp);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_cocycle(const std::string& g_text, const std::string& h_text,
                const std::optional<std::string>& n_text) {
    Word gw = parse_word(g_text);
    Word hw = parse_word(h_text);
    FinSymplectic g = word_shadow(gw);
    FinSymplectic h = word_shadow(hw);
    GaussianRational c1 = c1_cocycle(g, h);
    std::optional<BigRational> n;
    std::optional<std::complex<double>> cn;
    if (n_text) {
        try {
            n = BigRational(*n_text);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadInput, "bad rational exponent '" + *n_text + "'");
        }
        if (*n == 0) throw Error(ErrorKind::BadInput, "exponent n must be nonzero");
        cn = cn_cocycle(g, h, *n);
    }
    std::cout << cocycle_json(gw, hw, c1, n, cn).dump(2) << "\n";
    return 0;
}

int cmd_kernel(const std::string& word_text, bool json) {
    Word w = parse_word(word_text);
    TreePairElement image = v_image_of_word(w);
    bool in_kernel = image.is_identity();
    if (json) {
        Json out{{"word", print_word(w)},
                 {"in_kernel", in_kernel},
                 {"v_image", image.serialize()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "in-kernel: " << (in_kernel ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, unsigned count, bool json) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names.push_back(suite);
    bool all_ok = true;
    Json results = Json::array();
    for (const auto& name : names) {
        SuiteResult r = run_suite(name, seed, count);
        all_ok = all_ok && r.ok();
        if (json) {
            results.push_back(Json{{"suite", r.name},
                                   {"seed", seed},
                                   {"count", count},
                                   {"passed", r.passed},
                                   {"failed", r.failed},
                                   {"failures", r.failures},
                                   {"ok", r.ok()}});
        } else {
            std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.name << " (" << r.passed
                      << "/" << (r.passed + r.failed) << " trials)\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
    }
    if (json) std::cout << results.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "asymcg: finite-support engine for the asymptotic infinite-genus mapping class\n"
        "group: Thompson-group arithmetic for V, pants/wrist combinatorics, exact\n"
        "finitary symplectic shadows and determinant cocycles.\n\n"
        "Words compose right-to-left: in `g h` the factor h acts first.\n"
        "Generators: alpha beta pi t t0 t_a1 t_b1 t_wc t_vc tw[j,k] tv[k;v]\n"
        "td[loop]; loops: a[k] b[k] wc[j,k] vc[k;v] pl[c]; optional ^int exponents.\n"
        "Env: ASYMCG_MAX_SUPPORT caps support subtree vertices (default 64)."};
    app.require_subcommand(1);

    std::string word_text, g_text, h_text;
    std::string suite;
    std::optional<std::string> n_text;
    std::uint64_t seed = 0;
    unsigned count = 100;
    bool dot = false, json = false;

    auto* project = app.add_subcommand("project-v", "Reduced tree pair of the V-image");
    project->add_option("word", word_text, "group word")->required();
    project->add_flag("--dot", dot, "also emit a Graphviz diagram");
    project->add_flag("--json", json, "JSON output");

    auto* matrix = app.add_subcommand("matrix", "Finitary symplectic operator (JSON)");
    matrix->add_option("word", word_text, "group word")->required();

    auto* blocks = app.add_subcommand(
        "blocks", "(Phi,Psi) block pair, relation check, HS norm, psi rank (JSON)");
    blocks->add_option("word", word_text, "group word")->required();

    auto* cocycle = app.add_subcommand("cocycle", "Exact C1(g,h), optionally float Cn");
    cocycle->add_option("g_word", g_text, "left word")->required();
    cocycle->add_option("h_word", h_text, "right word")->required();
    cocycle->add_option("--n", n_text, "rational exponent for Cn (e.g. -1/2)");

    auto* kernel = app.add_subcommand("kernel", "Does the word lie in the PM shadow?");
    kernel->add_option("word", word_text, "group word")->required();
    kernel->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "RNG seed (default 0)");
    verify->add_option("--count", count, "trials per suite (default 100)");
    verify->add_flag("--json", json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (project->parsed()) return cmd_project_v(word_text, dot, json);
        if (matrix->parsed()) return cmd_matrix(word_text);
        if (blocks->parsed()) return cmd_blocks(word_text);
        if (cocycle->parsed()) return cmd_cocycle(g_text, h_text, n_text);
        if (kernel->parsed()) return cmd_kernel(word_text, json);
        if (verify->parsed()) return cmd_verify(suite, seed, count, json);
    } catch (const Error& e) {
        std::cout << error_json(e).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_json(Error(ErrorKind::Internal, e.what())).dump(2) << "\n";
        return 1;
    }
    return 0;
}
