#include <doctest.h>

#include "asymcg/rng.hpp"
#include "asymcg/word.hpp"

using namespace asymcg;

namespace {
EdgeAddress edge(const char* s) { return EdgeAddress::parse(s); }
}

TEST_CASE("intersection form") {
    EdgeAddress k = edge("0"), l = edge("1");
    CHECK(omega(HomClass::a(k), HomClass::b(k)) == 1);
    CHECK(omega(HomClass::b(k), HomClass::a(k)) == -1);
    CHECK(omega(HomClass::a(k), HomClass::a(l)) == 0);
    CHECK(omega(HomClass::b(k), HomClass::b(l)) == 0);
    CHECK(omega(HomClass::a(k), HomClass::b(l)) == 0);

    // omega(2a_1 + 3b_2, b_1 - a_2) = 2 + 3 = 5
    HomClass x = HomClass::a(k) * 2 + HomClass::b(l) * 3;
    HomClass y = HomClass::b(k) - HomClass::a(l);
    CHECK(omega(x, y) == 5);

    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        HomClass u = random_hom_class(rng, 5, 6, 2);
        HomClass v = random_hom_class(rng, 5, 6, 2);
        CHECK(omega(u, u) == 0);
        CHECK(omega(u, v) == -omega(v, u));
    }
}

TEST_CASE("complex structure J") {
    EdgeAddress k = edge("2L");
    CHECK(j_apply(HomClass::b(k)) == HomClass::a(k));
    CHECK(j_apply(HomClass::a(k)) == -HomClass::b(k));
    CHECK(j_apply(HomClass()).is_zero());

    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        HomClass x = random_hom_class(rng, 5, 6, 2);
        HomClass y = random_hom_class(rng, 5, 6, 2);
        CHECK(j_apply(j_apply(x)) == -x);
        // omega(v, w) = <v, J w>: with the orthonormal basis this reads
        // omega(x, y) = sum of coordinatewise products of x and J y.
        BigInt dot = 0;
        HomClass jy = j_apply(y);
        for (const auto& [sym, c] : x.coeffs()) dot += c * jy.coeff(sym);
        CHECK(omega(x, y) == dot);
    }
}

TEST_CASE("dehn twist transvections") {
    EdgeAddress k = edge("0");
    FinSymplectic ta = dehn_twist(HomClass::a(k));
    CHECK(apply_op(ta, HomClass::b(k)) == HomClass::b(k) - HomClass::a(k));
    CHECK(apply_op(ta, HomClass::a(k)) == HomClass::a(k));

    Rng rng(37);
    for (int i = 0; i < 40; ++i) {
        HomClass gamma = random_hom_class(rng, 4, 4, 2);
        FinSymplectic tw = dehn_twist(gamma);
        CHECK(is_symplectic(tw));
        CHECK(apply_op(tw, gamma) == gamma);
        // Power law: m twists add m*omega(x, gamma)*gamma.
        HomClass x = random_hom_class(rng, 4, 4, 2);
        HomClass acc = x;
        unsigned long m = rng.below(7);
        for (unsigned long s = 0; s < m; ++s) acc = apply_op(tw, acc);
        CHECK(acc == x + gamma * (omega(x, gamma) * BigInt(m)));
    }

    // Separating classes vanish, so their twists act trivially.
    CHECK(is_identity_op(dehn_twist(loop_class(LoopPants{edge("1R")}))));
    CHECK(is_identity_op(generator_shadow("t")));
    CHECK(is_identity_op(generator_shadow("t0")));
}

TEST_CASE("generator shadows and relations") {
    FinSymplectic alpha = generator_shadow("alpha");
    FinSymplectic beta = generator_shadow("beta");
    FinSymplectic pi = generator_shadow("pi");

    CHECK(is_identity_op(op_pow(alpha, 4)));  // alpha^4 = t_0, trivial on H_ns
    CHECK_FALSE(is_identity_op(op_pow(alpha, 2)));
    CHECK(is_identity_op(op_pow(beta, 3)));
    CHECK(is_identity_op(op_pow(pi, 2)));
    CHECK(op_equal(op_pow(alpha, 4), generator_shadow("t0")));

    CHECK_THROWS_AS(generator_shadow("gamma"), Error);
}

TEST_CASE("operator algebra") {
    Rng rng(43);
    WordProfile profile{.max_tokens = 6, .max_exponent = 3, .max_depth = 2};
    for (int i = 0; i < 30; ++i) {
        FinSymplectic f = word_shadow(random_word(rng, profile));
        CHECK(is_symplectic(f));
        CHECK(is_identity_op(compose_ops(f, invert_op(f))));
        CHECK(is_identity_op(compose_ops(invert_op(f), f)));

        HomClass x = random_hom_class(rng, 4, 5, 2);
        HomClass y = random_hom_class(rng, 4, 5, 2);
        CHECK(apply_op(f, x + y) == apply_op(f, x) + apply_op(f, y));
        CHECK(omega(apply_op(f, x), apply_op(f, y)) == omega(x, y));
    }
}

TEST_CASE("composition refines supports and stays associative") {
    FinSymplectic a = generator_shadow("alpha");
    FinSymplectic b = generator_shadow("beta");
    FinSymplectic t = generator_shadow("t_a1");

    // The common refinement is the middle tree: the composite's domain support
    // grows from the right factor, its range support from the left factor.
    FinSymplectic ab = compose_ops(a, b);
    CHECK(ab.support().contains_subtree(b.support()));
    CHECK(ab.range_support().contains_subtree(a.range_support()));
    FinSymplectic at = compose_ops(a, t);
    CHECK(at.support().contains_subtree(t.support()));
    CHECK(at.range_support().contains_subtree(a.range_support()));

    CHECK(op_equal(compose_ops(compose_ops(a, b), t), compose_ops(a, compose_ops(b, t))));

    // beta moves the central wrist: the composite's block carries wrist "0"
    // homology onto wrist "1".
    FinSymplectic bt = compose_ops(b, t);
    CHECK(apply_op(bt, HomClass::a(edge("0"))) == HomClass::a(edge("1")));
    CHECK(apply_op(bt, HomClass::b(edge("0"))) ==
          HomClass::b(edge("1")) - HomClass::a(edge("1")));
}

TEST_CASE("non-symplectic blocks are rejected") {
    FinSymplectic t = generator_shadow("t_a1");
    IntMat bad = t.block();
    bad.at(0, 0) = 2; // single perturbed entry
    CHECK_THROWS_AS(FinSymplectic::from_parts(t.end_map(), bad), Error);
}

TEST_CASE("word shadows") {
    CHECK(is_identity_op(word_shadow(parse_word(""))));
    CHECK(is_identity_op(word_shadow(parse_word("alpha alpha alpha alpha"))));
    CHECK(is_identity_op(word_shadow(parse_word("alpha^4"))));
    CHECK(is_identity_op(word_shadow(parse_word("beta^3"))));

    // SL2(Z) pair on the central wrist: S-like product of the two twists has
    // order 6; hand-multiplied 2x2 oracle.
    FinSymplectic st = word_shadow(parse_word("t_a1 t_b1"));
    long oracle[2][2] = {{1, 0}, {0, 1}};
    long ma[2][2] = {{1, -1}, {0, 1}};
    long mb[2][2] = {{1, 0}, {1, 1}};
    long prod[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            prod[i][j] = ma[i][0] * mb[0][j] + ma[i][1] * mb[1][j];
    REQUIRE(st.block().rows() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(st.block().at(i, j) == prod[i][j]);
    long acc[2][2] = {{1, 0}, {0, 1}};
    for (int s = 0; s < 6; ++s) {
        long next[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                next[i][j] = prod[i][0] * acc[0][j] + prod[i][1] * acc[1][j];
        std::copy(&next[0][0], &next[0][0] + 4, &acc[0][0]);
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(acc[i][j] == oracle[i][j]);
    CHECK(is_identity_op(op_pow(st, 6)));

    // Exact sequence: the end map of a shadow is the V-image of the word,
    // and the kernel is exactly the trivial-V-image subgroup.
    Rng rng(47);
    WordProfile profile{.max_tokens = 6, .max_exponent = 3, .max_depth = 2};
    for (int i = 0; i < 30; ++i) {
        Word w = random_word(rng, profile);
        FinSymplectic f = word_shadow(w);
        CHECK(f.v_image() == v_image_of_word(w));
        CHECK(f.v_image().is_identity() == v_image_of_word(w).is_identity());
    }
    CHECK(word_shadow(parse_word("alpha^4")).v_image().is_identity());
    CHECK_FALSE(word_shadow(parse_word("alpha^2")).v_image().is_identity());
}
