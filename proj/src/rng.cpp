#include "asymcg/rng.hpp"

namespace asymcg {

FiniteSubtree random_subtree(Rng& rng, std::size_t vertices) {
    FiniteSubtree t;
    while (t.vertex_count() < vertices) {
        auto leaves = t.leaves_cyclic();
        t = t.expand_leaf(leaves[rng.below(leaves.size())]);
    }
    return t;
}

EdgeAddress random_edge(Rng& rng, std::size_t max_depth) {
    std::string s(1, static_cast<char>('0' + rng.below(3)));
    std::size_t extra = rng.below(max_depth + 1);
    for (std::size_t i = 0; i < extra; ++i) s += rng.coin() ? 'L' : 'R';
    return EdgeAddress::parse(s);
}

TreePairElement random_tree_pair(Rng& rng, std::size_t max_vertices) {
    std::size_t n = 1 + rng.below(max_vertices);
    FiniteSubtree dom = random_subtree(rng, n);
    FiniteSubtree ran = random_subtree(rng, n);
    auto dl = dom.leaves_cyclic();
    auto rl = ran.leaves_cyclic();
    // Fisher-Yates on the image list.
    std::vector<EdgeAddress> images = rl;
    for (std::size_t i = images.size(); i > 1; --i)
        std::swap(images[i - 1], images[rng.below(i)]);
    std::map<EdgeAddress, EdgeAddress> m;
    for (std::size_t i = 0; i < dl.size(); ++i) m.emplace(dl[i], images[i]);
    return TreePairElement(dom, ran, std::move(m)).reduce();
}

TreePairElement random_circular(Rng& rng, std::size_t max_vertices) {
    std::size_t n = 1 + rng.below(max_vertices);
    FiniteSubtree dom = random_subtree(rng, n);
    FiniteSubtree ran = random_subtree(rng, n);
    auto dl = dom.leaves_cyclic();
    auto rl = ran.leaves_cyclic();
    std::size_t shift = rng.below(rl.size());
    std::map<EdgeAddress, EdgeAddress> m;
    for (std::size_t i = 0; i < dl.size(); ++i) m.emplace(dl[i], rl[(i + shift) % rl.size()]);
    return TreePairElement(dom, ran, std::move(m)).reduce();
}

HomClass random_hom_class(Rng& rng, std::size_t max_terms, long long coeff_bound,
                          std::size_t max_depth) {
    HomClass x;
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        EdgeAddress k = random_edge(rng, max_depth);
        HomClass basis = rng.coin() ? HomClass::a(k) : HomClass::b(k);
        long long c = rng.int_in(-coeff_bound, coeff_bound);
        x.add_scaled(basis, c);
    }
    return x;
}

Word random_word(Rng& rng, const WordProfile& profile) {
    static const char* kFull[] = {"alpha", "beta", "pi", "t", "t0", "t_a1", "t_b1",
                                  "t_wc", "t_vc", "tw", "tv", "td"};
    static const char* kTwists[] = {"t", "t0", "t_a1", "t_b1", "t_wc", "t_vc",
                                    "tw", "tv", "td"};
    Word w;
    std::size_t len = 1 + rng.below(profile.max_tokens);
    for (std::size_t i = 0; i < len; ++i) {
        WordToken tok;
        tok.name = profile.twists_only ? kTwists[rng.below(std::size(kTwists))]
                                       : kFull[rng.below(std::size(kFull))];
        long long e = rng.int_in(-profile.max_exponent, profile.max_exponent - 1);
        tok.exponent = e >= 0 ? e + 1 : e; // skip zero
        if (tok.name == "tw") {
            EdgeAddress j = random_edge(rng, profile.max_depth);
            EdgeAddress k = random_edge(rng, profile.max_depth);
            while (k == j) k = random_edge(rng, profile.max_depth);
            tok.loop = LoopWristConn{j, k};
        } else if (tok.name == "tv") {
            EdgeAddress k = random_edge(rng, profile.max_depth);
            VertexAddress v = rng.coin() ? VertexAddress::base()
                                         : VertexAddress(random_edge(rng, profile.max_depth));
            tok.loop = LoopVertexConn{k, v};
        } else if (tok.name == "td") {
            switch (rng.below(5)) {
                case 0: tok.loop = LoopMeridian{random_edge(rng, profile.max_depth)}; break;
                case 1: tok.loop = LoopLongitude{random_edge(rng, profile.max_depth)}; break;
                case 2: {
                    EdgeAddress j = random_edge(rng, profile.max_depth);
                    EdgeAddress k = random_edge(rng, profile.max_depth);
                    while (k == j) k = random_edge(rng, profile.max_depth);
                    tok.loop = LoopWristConn{j, k};
                    break;
                }
                case 3:
                    tok.loop = LoopVertexConn{random_edge(rng, profile.max_depth),
                                              VertexAddress::base()};
                    break;
                default: tok.loop = LoopPants{random_edge(rng, profile.max_depth)};
            }
        }
        w.tokens.push_back(std::move(tok));
    }
    return w;
}

} // namespace asymcg
