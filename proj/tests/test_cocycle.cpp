#include <doctest.h>

#include <cmath>

#include "asymcg/cocycle.hpp"
#include "asymcg/rng.hpp"
#include "asymcg/word.hpp"

using namespace asymcg;

namespace {

GaussianRational gr(long re_num, long re_den, long im_num, long im_den) {
    return {BigRational(re_num, re_den), BigRational(im_num, im_den)};
}

WordProfile small_profile() { return {.max_tokens = 4, .max_exponent = 2, .max_depth = 1}; }

WordProfile pm_profile() {
    return {.max_tokens = 4, .max_exponent = 2, .max_depth = 1, .twists_only = true};
}

} // namespace

TEST_CASE("C1 normalization") {
    Rng rng(71);
    FinSymplectic id = FinSymplectic::identity_op();
    for (int i = 0; i < 15; ++i) {
        FinSymplectic g = word_shadow(random_word(rng, small_profile()));
        CHECK(c1_cocycle(id, g) == GaussianRational(1));
        CHECK(c1_cocycle(g, id) == GaussianRational(1));
    }
}

TEST_CASE("C1 of the twist pair, two exact routes") {
    FinSymplectic g = generator_shadow("t_a1");
    FinSymplectic h = generator_shadow("t_b1");
    GaussianRational c = c1_cocycle(g, h);
    CHECK(c == gr(11, 10, -1, 5));

    // ell-path: all three end maps are trivial, so C1 factors through exact
    // determinants.
    GaussianRational via_dets = det_phi(g) * det_phi(h) / det_phi(compose_ops(g, h));
    CHECK(c == via_dets);
}

TEST_CASE("C1 is an exact 2-cocycle") {
    Rng rng(73);
    for (int i = 0; i < 25; ++i) {
        FinSymplectic g = word_shadow(random_word(rng, small_profile()));
        FinSymplectic h = word_shadow(random_word(rng, small_profile()));
        FinSymplectic k = word_shadow(random_word(rng, small_profile()));
        CHECK(c1_cocycle(g, h) * c1_cocycle(compose_ops(g, h), k) ==
              c1_cocycle(g, compose_ops(h, k)) * c1_cocycle(h, k));
    }
}

TEST_CASE("C1 telescopes on rigid permutations") {
    FinSymplectic a = generator_shadow("alpha");
    FinSymplectic b = generator_shadow("beta");
    FinSymplectic p = generator_shadow("pi");
    CHECK(c1_cocycle(a, b) == GaussianRational(1));
    CHECK(c1_cocycle(b, a) == GaussianRational(1));
    CHECK(c1_cocycle(p, b) == GaussianRational(1));
    CHECK(c1_cocycle(compose_ops(a, b), p) == GaussianRational(1));
}

TEST_CASE("ell and the coboundary identity") {
    CHECK(ell(FinSymplectic::identity_op()) == std::complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(ell(generator_shadow("alpha")), Error);

    Rng rng(79);
    for (int i = 0; i < 20; ++i) {
        FinSymplectic g = word_shadow(random_word(rng, pm_profile()));
        FinSymplectic h = word_shadow(random_word(rng, pm_profile()));
        CHECK(std::abs(std::abs(ell(g)) - 1.0) < 1e-12);

        GaussianRational c1 = c1_cocycle(g, h);
        std::complex<double> unit_c1 =
            c1.to_complex() / std::sqrt(c1.norm_sq().convert_to<double>());
        std::complex<double> cob = ell(g) * ell(h) / ell(compose_ops(g, h));
        CHECK(std::abs(cob - unit_c1) < 1e-9);
    }
}

TEST_CASE("Cn against exact C1 and power chains") {
    Rng rng(83);
    FinSymplectic id = FinSymplectic::identity_op();
    for (int i = 0; i < 15; ++i) {
        FinSymplectic g = word_shadow(random_word(rng, small_profile()));
        FinSymplectic h = word_shadow(random_word(rng, small_profile()));
        CHECK(std::abs(cn_cocycle(id, g, BigRational(2)) - 1.0) < 1e-12);

        std::complex<double> c1f = c1_cocycle(g, h).to_complex();
        CHECK(std::abs(cn_cocycle(g, h, BigRational(1)) - c1f) < 1e-9);

        // n = -1/2 is an integer power of the underlying log, so the chain
        // closes without branch issues: C_{-1/2} = C1^{-2}; the Berezin
        // cocycle is its complex conjugate.
        std::complex<double> c_half = cn_cocycle(g, h, BigRational(-1, 2));
        CHECK(std::abs(c_half - 1.0 / (c1f * c1f)) < 1e-9);

        std::complex<double> c2 = cn_cocycle(g, h, BigRational(2));
        CHECK(std::abs(c2 * c2 - c1f) < 1e-9);
    }
    CHECK_THROWS_AS(cn_cocycle(id, id, BigRational(0)), Error);
}
