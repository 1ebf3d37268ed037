#include <doctest.h>

#include "asymcg/blocks.hpp"
#include "asymcg/rng.hpp"
#include "asymcg/word.hpp"

using namespace asymcg;

namespace {

EdgeAddress edge(const char* s) { return EdgeAddress::parse(s); }

GaussianRational gr(long re_num, long re_den, long im_num, long im_den) {
    return {BigRational(re_num, re_den), BigRational(im_num, im_den)};
}

// Independent route to (Phi, Psi): conjugate the real block by the explicit
// change of basis into (e_1..e_m, f_1..f_m) coordinates. The sqrt(2) scaling
// cancels in the conjugation, so C is taken with entries {1, ±i}.
struct EfBlocks {
    GrMat phi, psi, psi_bar, phi_bar;
};

GrMat ef_basis_matrix(std::size_t m) {
    GrMat c(2 * m, 2 * m);
    const GaussianRational i = GaussianRational::i_unit();
    for (std::size_t k = 0; k < m; ++k) {
        c.at(2 * k, k) = GaussianRational(1);      // e_k = a_k - i b_k (unnormalized)
        c.at(2 * k + 1, k) = -i;
        c.at(2 * k, m + k) = GaussianRational(1);  // f_k = a_k + i b_k
        c.at(2 * k + 1, m + k) = i;
    }
    return c;
}

EfBlocks blocks_by_conjugation(const FinSymplectic& f) {
    std::size_t m = f.dom_wrists().size();
    GrMat full = inverse(ef_basis_matrix(m)) * to_gr(f.block()) * ef_basis_matrix(m);
    EfBlocks out{GrMat(m, m), GrMat(m, m), GrMat(m, m), GrMat(m, m)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.phi.at(i, j) = full.at(i, j);
            out.psi.at(i, j) = full.at(i, m + j);
            out.psi_bar.at(i, j) = full.at(m + i, j);
            out.phi_bar.at(i, j) = full.at(m + i, m + j);
        }
    return out;
}

// J-linear / J-antilinear split (T -+ JTJ)/2 in the real basis; the J-linear
// part must be block-diagonal in e/f coordinates, the antilinear part purely
// off-diagonal.
GrMat half_sum(const GrMat& t, const GrMat& jtj, int sign) {
    GrMat r(t.rows(), t.cols());
    const GaussianRational half(BigRational(1, 2));
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            r.at(i, j) = (t.at(i, j) + (sign > 0 ? jtj.at(i, j) : -jtj.at(i, j))) * half;
    return r;
}

} // namespace

TEST_CASE("blocks of the identity and of rigid permutations") {
    BlockPair id = to_blocks(FinSymplectic::identity_op(
        FiniteSubtree::base().expand_leaf(edge("0")).expand_leaf(edge("1"))));
    CHECK(id.phi.is_identity());
    for (std::size_t i = 0; i < id.psi.rows(); ++i)
        for (std::size_t j = 0; j < id.psi.cols(); ++j) CHECK(id.psi.at(i, j).is_zero());
    CHECK(hs_norm_sq(id) == 0);
    CHECK(psi_rank(id) == 0);

    // alpha is a rigid permutation with identity block over the central wrist.
    BlockPair a = to_blocks(generator_shadow("alpha"));
    CHECK(a.phi.is_identity());
    CHECK(a.psi.at(0, 0).is_zero());
    CHECK(a.end_map == TreePairElement::alpha_v());

    // beta has an empty support and passes its end map through.
    BlockPair b = to_blocks(generator_shadow("beta"));
    CHECK(b.dom_wrists.empty());
    CHECK(b.end_map == TreePairElement::beta_v());
}

TEST_CASE("blocks of the meridian twist, frozen and cross-checked") {
    FinSymplectic ta = generator_shadow("t_a1");
    BlockPair bp = to_blocks(ta);
    REQUIRE(bp.phi.rows() == 1);

    // Hand values from the 2x2 case: Phi = 1 + i/2, Psi = -i/2.
    CHECK(bp.phi.at(0, 0) == gr(1, 1, 1, 2));
    CHECK(bp.psi.at(0, 0) == gr(0, 1, -1, 2));

    EfBlocks oracle = blocks_by_conjugation(ta);
    CHECK(bp.phi == oracle.phi);
    CHECK(bp.psi == oracle.psi);

    CHECK(check_relations(bp));
    CHECK(hs_norm_sq(bp) == BigRational(1, 4));
    CHECK(psi_rank(bp) == 1);

    // The longitude twist differs only in the sign of Psi.
    BlockPair bq = to_blocks(generator_shadow("t_b1"));
    CHECK(bq.phi.at(0, 0) == gr(1, 1, 1, 2));
    CHECK(bq.psi.at(0, 0) == gr(0, 1, 1, 2));
}

TEST_CASE("conjugation oracle and J-split structure on random words") {
    Rng rng(61);
    WordProfile profile{.max_tokens = 5, .max_exponent = 2, .max_depth = 1};
    for (int trial = 0; trial < 20; ++trial) {
        FinSymplectic f = word_shadow(random_word(rng, profile));
        BlockPair bp = to_blocks(f);
        EfBlocks oracle = blocks_by_conjugation(f);
        CHECK(bp.phi == oracle.phi);
        CHECK(bp.psi == oracle.psi);
        // Real operators: lower blocks are the conjugates of the upper ones.
        CHECK(oracle.phi_bar == conj(bp.phi));
        CHECK(oracle.psi_bar == conj(bp.psi));

        // T1 = (T - JTJ)/2 complexifies to the diagonal (e->e, f->f) part,
        // T2 = (T + JTJ)/2 to the antidiagonal part.
        std::size_t m = f.dom_wrists().size();
        GrMat t = to_gr(f.block());
        GrMat jtj = to_gr(j_gram(m)) * t * to_gr(j_gram(m));
        GrMat c = ef_basis_matrix(m);
        GrMat t1_ef = inverse(c) * half_sum(t, jtj, -1) * c;
        GrMat t2_ef = inverse(c) * half_sum(t, jtj, +1) * c;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                CHECK(t1_ef.at(i, j) == bp.phi.at(i, j));
                CHECK(t1_ef.at(i, m + j).is_zero());
                CHECK(t2_ef.at(i, m + j) == bp.psi.at(i, j));
                CHECK(t2_ef.at(i, j).is_zero());
            }

        CHECK(check_relations(bp));
        CHECK(psi_rank(bp) <= 2 * f.support().internal_edge_count());
    }
}

TEST_CASE("relation check rejects perturbed blocks") {
    BlockPair bp = to_blocks(generator_shadow("t_a1"));
    REQUIRE(check_relations(bp));
    BlockPair broken = bp;
    broken.psi.at(0, 0) += GaussianRational(1);
    CHECK_FALSE(check_relations(broken));
}

TEST_CASE("HS norm is additive over disjoint supports") {
    FinSymplectic f = compose_ops(dehn_twist(HomClass::a(edge("0"))),
                                  dehn_twist(HomClass::a(edge("1"))));
    CHECK(hs_norm_sq(to_blocks(f)) == BigRational(1, 2));
    CHECK(psi_rank(to_blocks(f)) == 2);
}

TEST_CASE("hermitian form table") {
    std::vector<EdgeAddress> wrists{edge("0"), edge("1"), edge("2"),
                                    edge("0L"), edge("1R"), edge("2LL")};
    const GaussianRational one(1), zero(0), i = GaussianRational::i_unit();
    for (const auto& k : wrists)
        for (const auto& l : wrists) {
            GaussianRational d = (k == l) ? one : zero;
            CHECK(b_form(EfVector::e(k), EfVector::e(l)) == d);
            CHECK(b_form(EfVector::f(k), EfVector::f(l)) == -d);
            CHECK(b_form(EfVector::e(k), EfVector::f(l)) == zero);
            CHECK(b_form(EfVector::f(k), EfVector::e(l)) == zero);
            CHECK(omega_c(EfVector::e(k), EfVector::f(l)) == i * d);
            CHECK(omega_c(EfVector::e(k), EfVector::e(l)) == zero);
            CHECK(omega_c(EfVector::f(k), EfVector::f(l)) == zero);
        }

    // Sesquilinearity and hermitian symmetry on random combinations.
    Rng rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        EfVector x, y;
        for (int t = 0; t < 3; ++t) {
            GaussianRational cx(BigRational(rng.int_in(-4, 4)), BigRational(rng.int_in(-4, 4)));
            GaussianRational cy(BigRational(rng.int_in(-4, 4)), BigRational(rng.int_in(-4, 4)));
            const EdgeAddress& k = wrists[rng.below(wrists.size())];
            x.add_scaled(rng.coin() ? EfVector::e(k) : EfVector::f(k), cx);
            const EdgeAddress& l = wrists[rng.below(wrists.size())];
            y.add_scaled(rng.coin() ? EfVector::e(l) : EfVector::f(l), cy);
        }
        CHECK(b_form(x, y) == b_form(y, x).conj());
        GaussianRational lambda(BigRational(3), BigRational(-2));
        EfVector lx;
        lx.add_scaled(x, lambda);
        CHECK(b_form(lx, y) == lambda * b_form(x, y));
        EfVector ly;
        ly.add_scaled(y, lambda);
        CHECK(b_form(x, ly) == lambda.conj() * b_form(x, y));
    }
}
