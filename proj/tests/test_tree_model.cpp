#include <doctest.h>

#include <algorithm>

#include "asymcg/rng.hpp"
#include "asymcg/subtree.hpp"

using namespace asymcg;

namespace {

EdgeAddress edge(const char* s) { return EdgeAddress::parse(s); }

// Brute-force frontier: all edges incident to a subtree vertex that are not
// internal. Independent of FiniteSubtree's own counting.
std::vector<EdgeAddress> frontier_by_enumeration(const FiniteSubtree& t) {
    std::vector<EdgeAddress> out;
    for (char d : {'0', '1', '2'})
        if (!t.contains_edge(edge(std::string(1, d).c_str())))
            out.push_back(edge(std::string(1, d).c_str()));
    for (const auto& e : t.edge_set())
        for (char lr : {'L', 'R'})
            if (!t.contains_edge(e.child(lr))) out.push_back(e.child(lr));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("edge address grammar") {
    CHECK(EdgeAddress::valid_text("1LRL"));
    CHECK(EdgeAddress::valid_text("0"));
    CHECK_FALSE(EdgeAddress::valid_text(""));
    CHECK_FALSE(EdgeAddress::valid_text("3"));
    CHECK_FALSE(EdgeAddress::valid_text("1LX"));
    CHECK_FALSE(EdgeAddress::valid_text("L"));
    CHECK_THROWS_AS(EdgeAddress::parse("2R0"), Error);
    CHECK(edge("1LR").parent() == edge("1L"));
    CHECK(edge("1").relabeled(1) == edge("2"));
    CHECK(edge("2LL").relabeled(1) == edge("0LL"));
}

TEST_CASE("expand_leaf base case and leaf counting") {
    FiniteSubtree base;
    CHECK(base.vertex_count() == 1);
    CHECK(base.frontier_count() == 3);

    FiniteSubtree two = base.expand_leaf(edge("0"));
    CHECK(two.vertex_count() == 2);
    CHECK(two.leaves_cyclic().size() == 4);

    // Each expansion adds exactly one leaf: after k expansions, 3 + k leaves.
    Rng rng(7);
    FiniteSubtree t = base;
    for (int k = 1; k <= 20; ++k) {
        auto leaves = t.leaves_cyclic();
        t = t.expand_leaf(leaves[rng.below(leaves.size())]);
        CHECK(t.leaves_cyclic().size() == 3 + static_cast<std::size_t>(k));
    }

    CHECK_THROWS_AS(base.expand_leaf(edge("0L")), Error);
    CHECK_THROWS_AS(two.expand_leaf(edge("0")), Error);
}

TEST_CASE("frontier count of random 10-vertex subtrees is 12") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        FiniteSubtree t = random_subtree(rng, 10);
        auto oracle = frontier_by_enumeration(t);
        CHECK(oracle.size() == 12);
        auto leaves = t.leaves_cyclic();
        auto sorted = leaves;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == oracle);
        CHECK(leaves == sorted); // canonical representative starts at the least leaf
    }
}

TEST_CASE("common refinement") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        FiniteSubtree a = random_subtree(rng, 1 + rng.below(9));
        FiniteSubtree b = random_subtree(rng, 1 + rng.below(9));
        FiniteSubtree r = FiniteSubtree::common_refinement(a, b);
        CHECK(FiniteSubtree::common_refinement(a, a) == a);
        CHECK(FiniteSubtree::common_refinement(FiniteSubtree::base(), a) == a);
        // Union-then-closure oracle.
        std::vector<EdgeAddress> all(a.edge_set().begin(), a.edge_set().end());
        all.insert(all.end(), b.edge_set().begin(), b.edge_set().end());
        CHECK(r == FiniteSubtree::closure(all));
        CHECK(r.contains_subtree(a));
        CHECK(r.contains_subtree(b));
    }
}

TEST_CASE("cyclic leaf order") {
    FiniteSubtree base;
    auto base_leaves = base.leaves_cyclic();
    REQUIRE(base_leaves.size() == 3);
    CHECK(base_leaves[0] == edge("0"));
    CHECK(base_leaves[1] == edge("1"));
    CHECK(base_leaves[2] == edge("2"));

    auto grown = base.expand_leaf(edge("1")).leaves_cyclic();
    REQUIRE(grown.size() == 4);
    CHECK(grown[0] == edge("0"));
    CHECK(grown[1] == edge("1L"));
    CHECK(grown[2] == edge("1R"));
    CHECK(grown[3] == edge("2"));
}

TEST_CASE("counting identities, exhaustive up to 8 vertices") {
    auto all = enumerate_subtrees(8);
    // Ternary convolution of the Catalan numbers counts subtrees by size.
    std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    std::vector<long> expected(8, 0);
    for (int n0 = 0; n0 < 8; ++n0)
        for (int n1 = 0; n0 + n1 < 8; ++n1)
            for (int n2 = 0; n0 + n1 + n2 < 8; ++n2)
                expected[n0 + n1 + n2] += catalan[n0] * catalan[n1] * catalan[n2];
    std::vector<long> got(8, 0);
    for (const auto& t : all) {
        ++got[t.vertex_count() - 1];
        CHECK(t.frontier_count() == t.vertex_count() + 2);
        CHECK(t.internal_edge_count() == t.vertex_count() - 1);
        CHECK(t.leaves_cyclic().size() == t.vertex_count() + 2);
    }
    CHECK(got == expected);
}

TEST_CASE("from_edges validates prefix closure") {
    CHECK_THROWS_AS(FiniteSubtree::from_edges({edge("0L")}), Error);
    FiniteSubtree t = FiniteSubtree::from_edges({edge("0"), edge("0L")});
    CHECK(t.vertex_count() == 3);
    CHECK(FiniteSubtree::closure({edge("0L")}) == t);
}
