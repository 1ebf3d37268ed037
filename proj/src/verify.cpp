#include "asymcg/verify.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "asymcg/cocycle.hpp"
#include "asymcg/rng.hpp"
#include "asymcg/word.hpp"

namespace asymcg {

namespace {

using Trial = std::function<std::optional<std::string>(Rng&, unsigned)>;

SuiteResult run_trials(const std::string& name, std::uint64_t seed, unsigned count,
                       const Trial& trial) {
    SuiteResult res;
    res.name = name;
    Rng rng(seed);
    for (unsigned i = 0; i < count; ++i) {
        std::optional<std::string> failure;
        try {
            failure = trial(rng, i);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++res.failed;
            if (res.failures.size() < 5)
                res.failures.push_back("trial " + std::to_string(i) + ": " + *failure);
        } else {
            ++res.passed;
        }
    }
    return res;
}

std::optional<std::string> fail(const std::string& msg) { return msg; }

// Frontier edges by brute force: candidates incident to the subtree are the
// base edges plus both children of every internal edge.
std::vector<EdgeAddress> frontier_oracle(const FiniteSubtree& t) {
    std::vector<EdgeAddress> out;
    for (char d : {'0', '1', '2'}) {
        EdgeAddress e = EdgeAddress::parse(std::string(1, d));
        if (!t.contains_edge(e)) out.push_back(e);
    }
    for (const auto& e : t.edge_set())
        for (char lr : {'L', 'R'}) {
            EdgeAddress c = e.child(lr);
            if (!t.contains_edge(c)) out.push_back(c);
        }
    return out;
}

std::optional<std::string> tree_laws_trial(Rng& rng, unsigned) {
    FiniteSubtree t = random_subtree(rng, 1 + rng.below(14));
    auto oracle = frontier_oracle(t);
    if (oracle.size() != t.vertex_count() + 2)
        return fail("frontier count != V+2 (oracle)");
    if (t.frontier_count() != oracle.size()) return fail("frontier_count mismatch vs oracle");
    if (t.internal_edge_count() != t.vertex_count() - 1)
        return fail("internal count != V-1");
    auto leaves = t.leaves_cyclic();
    auto sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    if (leaves != sorted) return fail("canonical leaf list is not the sorted frontier");
    std::sort(oracle.begin(), oracle.end());
    if (sorted != oracle) return fail("leaf set differs from oracle frontier");

    FiniteSubtree a = random_subtree(rng, 1 + rng.below(8));
    FiniteSubtree b = random_subtree(rng, 1 + rng.below(8));
    FiniteSubtree c = random_subtree(rng, 1 + rng.below(8));
    auto ref = FiniteSubtree::common_refinement;
    if (!(ref(a, b) == ref(b, a))) return fail("refinement not commutative");
    if (!(ref(ref(a, b), c) == ref(a, ref(b, c)))) return fail("refinement not associative");
    if (!(ref(a, a) == a)) return fail("refinement not idempotent");
    if (!(ref(FiniteSubtree::base(), a) == a)) return fail("base not absorbed");

    // Expansion splits one leaf entry into two adjacent entries.
    EdgeAddress leaf = leaves[rng.below(leaves.size())];
    auto grown = t.expand_leaf(leaf).leaves_cyclic();
    std::vector<EdgeAddress> expect;
    for (const auto& l : leaves) {
        if (l == leaf) {
            expect.push_back(l.left());
            expect.push_back(l.right());
        } else {
            expect.push_back(l);
        }
    }
    if (grown != expect) return fail("leaf expansion does not split in place");
    return std::nullopt;
}

std::optional<std::string> group_axioms_trial(Rng& rng, unsigned) {
    TreePairElement g = random_tree_pair(rng, 12);
    TreePairElement h = random_tree_pair(rng, 12);
    TreePairElement k = random_tree_pair(rng, 12);
    auto comp = TreePairElement::compose;
    if (!(comp(comp(g, h), k) == comp(g, comp(h, k)))) return fail("associativity");
    if (!comp(g, g.invert()).is_identity()) return fail("right inverse");
    if (!comp(g.invert(), g).is_identity()) return fail("left inverse");
    if (!(comp(TreePairElement::identity(), g) == g)) return fail("left identity");
    if (!(g.invert().invert() == g)) return fail("inverse involution");
    TreePairElement r = g.reduce();
    if (!(r.reduce() == r)) return fail("reduce not idempotent");
    auto leaves = r.domain().leaves_cyclic();
    TreePairElement expanded = r.expand_at(leaves[rng.below(leaves.size())]);
    if (!(expanded.reduce() == r)) return fail("expansion does not reduce back");
    return std::nullopt;
}

std::optional<std::string> circular_trial(Rng& rng, unsigned) {
    TreePairElement g = random_circular(rng, 8);
    TreePairElement h = random_circular(rng, 8);
    if (!g.is_circular() || !h.is_circular()) return fail("random circular not circular");
    if (!TreePairElement::compose(g, h).is_circular())
        return fail("circular not closed under compose");
    if (!g.invert().is_circular()) return fail("circular not closed under invert");
    return std::nullopt;
}

std::optional<std::string> edge_action_trial(Rng& rng, unsigned) {
    TreePairElement g = random_tree_pair(rng, 8);
    TreePairElement h = random_tree_pair(rng, 8);
    TreePairElement gh = TreePairElement::compose(g, h);

    // Test edges must avoid the domains of h and of g∘h, and their h-image
    // must avoid the domain of g; everything at or beyond the frontier of the
    // expanded middle tree qualifies (the reduced composite's domain can be
    // smaller than that).
    TreePairElement h2 = h.expand_range_to(
        FiniteSubtree::common_refinement(h.range(), g.domain()));
    auto leaves = h2.domain().leaves_cyclic();
    EdgeAddress leaf = leaves[rng.below(leaves.size())];
    std::string suffix;
    for (std::size_t i = rng.below(4); i > 0; --i) suffix += rng.coin() ? 'L' : 'R';
    EdgeAddress e = leaf.with_suffix(suffix);

    EdgeAddress image = gh.edge_action(e);
    if (!(image == gh.edge_action(leaf).with_suffix(suffix))) return fail("suffix not carried");
    if (!(image == g.edge_action(h.edge_action(e)))) return fail("functoriality");
    if (!(gh.invert().edge_action(image) == e)) return fail("inverse action");
    return std::nullopt;
}

std::optional<std::string> relabel_trial(Rng& rng, unsigned) {
    int rot = 1 + static_cast<int>(rng.below(2));
    TreePairElement g = random_tree_pair(rng, 8);
    TreePairElement h = random_tree_pair(rng, 8);
    if (!(TreePairElement::compose(g, h).relabeled(rot) ==
          TreePairElement::compose(g.relabeled(rot), h.relabeled(rot))))
        return fail("relabeling does not conjugate composition");
    FiniteSubtree t = random_subtree(rng, 6);
    FiniteSubtree u = random_subtree(rng, 6);
    if (!(FiniteSubtree::common_refinement(t, u).relabeled(rot) ==
          FiniteSubtree::common_refinement(t.relabeled(rot), u.relabeled(rot))))
        return fail("relabeling does not commute with refinement");
    if (g.is_circular() != g.relabeled(rot).is_circular())
        return fail("relabeling changes circularity");
    return std::nullopt;
}

WordProfile shadow_profile() { return {.max_tokens = 10, .max_exponent = 3, .max_depth = 2}; }

std::optional<std::string> symplectic_trial(Rng& rng, unsigned) {
    Word w = random_word(rng, shadow_profile());
    FinSymplectic f = word_shadow(w);
    if (!is_symplectic(f)) return fail("shadow block not symplectic: " + print_word(w));

    HomClass x = random_hom_class(rng, 4, 5, 2);
    HomClass y = random_hom_class(rng, 4, 5, 2);
    if (omega(apply_op(f, x), apply_op(f, y)) != omega(x, y))
        return fail("omega not preserved: " + print_word(w));

    // Word action agrees with the chain of per-token actions (rightmost first).
    HomClass chained = x;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it)
        chained = apply_op(shadow_of_token(*it), chained);
    if (!(apply_op(f, x) == chained)) return fail("word action is not the token chain");

    // Transvection power law.
    HomClass gamma = random_hom_class(rng, 3, 3, 2);
    FinSymplectic tw = dehn_twist(gamma);
    unsigned long m = rng.below(6);
    HomClass acc = x;
    for (unsigned long i = 0; i < m; ++i) acc = apply_op(tw, acc);
    if (!(acc == x + gamma * (omega(x, gamma) * BigInt(m))))
        return fail("transvection power law");
    return std::nullopt;
}

std::optional<std::string> commuting_square_trial(Rng& rng, unsigned) {
    Word w = random_word(rng, shadow_profile());
    FinSymplectic f = word_shadow(w);
    TreePairElement via_v = v_image_of_word(w);
    if (!(f.v_image() == via_v)) return fail("projection square does not commute: " + print_word(w));
    bool kernel = via_v.is_identity();
    if (kernel != f.end_map().reduce().is_identity())
        return fail("kernel test disagrees: " + print_word(w));
    return std::nullopt;
}

std::optional<std::string> block_relations_trial(Rng& rng, unsigned) {
    Word w = random_word(rng, shadow_profile());
    FinSymplectic f = word_shadow(w);
    BlockPair bp = to_blocks(f);
    if (!check_relations(bp)) return fail("block relations fail: " + print_word(w));
    std::size_t genus = f.support().internal_edge_count();
    if (psi_rank(bp) > 2 * genus) return fail("psi rank exceeds 2*genus: " + print_word(w));
    return std::nullopt;
}

WordProfile cocycle_profile() { return {.max_tokens = 4, .max_exponent = 2, .max_depth = 1}; }

Word random_rigid_word(Rng& rng) {
    static const char* kRigid[] = {"alpha", "beta", "pi"};
    Word w;
    std::size_t len = 1 + rng.below(3);
    for (std::size_t i = 0; i < len; ++i) {
        WordToken tok;
        tok.name = kRigid[rng.below(3)];
        long long e = rng.int_in(-2, 1);
        tok.exponent = e >= 0 ? e + 1 : e;
        w.tokens.push_back(tok);
    }
    return w;
}

std::optional<std::string> cocycle_trial(Rng& rng, unsigned) {
    FinSymplectic g = word_shadow(random_word(rng, cocycle_profile()));
    FinSymplectic h = word_shadow(random_word(rng, cocycle_profile()));
    FinSymplectic k = word_shadow(random_word(rng, cocycle_profile()));
    GaussianRational lhs = c1_cocycle(g, h) * c1_cocycle(compose_ops(g, h), k);
    GaussianRational rhs = c1_cocycle(g, compose_ops(h, k)) * c1_cocycle(h, k);
    if (!(lhs == rhs)) return fail("cocycle identity fails (exact)");

    FinSymplectic rg = word_shadow(random_rigid_word(rng));
    FinSymplectic rh = word_shadow(random_rigid_word(rng));
    if (!(c1_cocycle(rg, rh) == GaussianRational(1)))
        return fail("C1 of rigid permutations is not 1");
    return std::nullopt;
}

WordProfile pm_profile() {
    return {.max_tokens = 5, .max_exponent = 2, .max_depth = 1, .twists_only = true};
}

std::optional<std::string> coboundary_trial(Rng& rng, unsigned) {
    FinSymplectic g = word_shadow(random_word(rng, pm_profile()));
    FinSymplectic h = word_shadow(random_word(rng, pm_profile()));
    GaussianRational c1 = c1_cocycle(g, h);
    std::complex<double> c1f = c1.to_complex();
    std::complex<double> unit_c1 = c1f / std::sqrt(c1.norm_sq().convert_to<double>());
    std::complex<double> lhs = ell(g) * ell(h) / ell(compose_ops(g, h));
    if (std::abs(lhs - unit_c1) >= 1e-9) return fail("ell coboundary mismatch");
    if (std::abs(cn_cocycle(g, h, BigRational(1)) - c1f) >= 1e-9)
        return fail("Cn at n=1 differs from exact C1");
    std::complex<double> c_half = cn_cocycle(g, h, BigRational(-1, 2));
    if (std::abs(c_half - 1.0 / (c1f * c1f)) >= 1e-9)
        return fail("C_{-1/2} is not C1^{-2}");
    std::complex<double> c3 = cn_cocycle(g, h, BigRational(3));
    if (std::abs(c3 * c3 * c3 - c1f) >= 1e-9) return fail("C3 cubed is not C1");
    return std::nullopt;
}

const std::vector<std::pair<std::string, Trial>>& suites() {
    static const std::vector<std::pair<std::string, Trial>> table = {
        {"tree-laws", tree_laws_trial},
        {"group-axioms", group_axioms_trial},
        {"circular", circular_trial},
        {"edge-action", edge_action_trial},
        {"relabel", relabel_trial},
        {"symplectic", symplectic_trial},
        {"commuting-square", commuting_square_trial},
        {"block-relations", block_relations_trial},
        {"cocycle", cocycle_trial},
        {"coboundary", coboundary_trial},
    };
    return table;
}

} // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned count) {
    for (const auto& [n, trial] : suites())
        if (n == name) return run_trials(name, seed, count, trial);
    throw Error(ErrorKind::BadInput, "unknown suite '" + name + "'");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, _] : suites()) out.push_back(n);
        return out;
    }();
    return names;
}

} // namespace asymcg
